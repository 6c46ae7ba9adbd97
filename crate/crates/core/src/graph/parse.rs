use super::{Graph, GraphError};

fn parse_vertex(token: &str, line: usize) -> Result<usize, GraphError> {
    token.parse().map_err(|_| GraphError::Malformed {
        line,
        token: token.to_string(),
    })
}

/// Parses a whitespace-separated edge list with 0-based vertices.
///
/// `#` starts a comment that runs to the end of the line; blank lines are skipped.
/// The vertex count is one more than the largest index mentioned.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() != 2 {
            return Err(GraphError::WrongArity {
                line,
                found: tokens.len(),
            });
        }
        let u = parse_vertex(tokens[0], line)?;
        let v = parse_vertex(tokens[1], line)?;
        n = n.max(u + 1).max(v + 1);
        edges.push((line, u, v));
    }
    Graph::from_edges(n, edges)
}

/// Parses the DIMACS `p edge N M` format with 1-based vertices.
pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        let Some(&tag) = tokens.first() else { continue };
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(GraphError::DuplicateHeader { line });
                }
                if tokens.len() != 4 || !matches!(tokens[1], "edge" | "col") {
                    return Err(GraphError::MissingHeader { line });
                }
                header = Some((parse_vertex(tokens[2], line)?, parse_vertex(tokens[3], line)?));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(GraphError::MissingHeader { line });
                };
                if tokens.len() != 3 {
                    return Err(GraphError::WrongArity {
                        line,
                        found: tokens.len() - 1,
                    });
                }
                let mut ends = [0; 2];
                for (slot, token) in ends.iter_mut().zip(&tokens[1..]) {
                    let vertex = parse_vertex(token, line)?;
                    if vertex == 0 || vertex > n {
                        return Err(GraphError::VertexOutOfRange { line, vertex, n });
                    }
                    *slot = vertex - 1;
                }
                edges.push((line, ends[0], ends[1]));
            }
            other => {
                return Err(GraphError::UnknownRecord {
                    line,
                    tag: other.to_string(),
                })
            }
        }
    }
    let (n, declared) = header.ok_or(GraphError::MissingHeader { line: 0 })?;
    if declared != edges.len() {
        return Err(GraphError::EdgeCountMismatch {
            declared,
            found: edges.len(),
        });
    }
    Graph::from_edges(n, edges)
}
