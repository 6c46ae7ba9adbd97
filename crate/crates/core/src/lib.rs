//! Spectral certificates for conditional diameters and vertex separators.
//!
//! The pipeline runs graph → degree-adjacency matrix 𝒜 (entries 1/√(δ_i δ_j) on edges)
//! → eigenvalue mesh → k-alternating polynomials P_k → bounds of the form
//! "P_k(1) > threshold ⇒ conditional diameter ≤ k". The [`oracle`] module computes the
//! same quantities exactly by enumeration so every certificate can be checked on small
//! graphs.

pub mod altpoly;
pub mod bounds;
pub mod graph;
pub mod oracle;
pub mod spectral;

pub use altpoly::{alternating_polynomial, AlternatingPolynomial};
pub use bounds::{BoundCertificate, BoundQuery, PolynomialTable};
pub use graph::{DistanceMatrix, Graph, VertexSet};
pub use spectral::{MatrixKind, SpectralMesh, Spectrum};
