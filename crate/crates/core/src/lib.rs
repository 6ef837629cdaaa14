pub mod cli;
pub mod error;
pub mod graphs;
pub mod interior;
pub mod limits;
pub mod poly;
pub mod polytope;
pub mod posets;

pub use error::{Error, Result};
pub use graphs::{Bipartition, Graph, LoopGraph, MatchingProfile};
pub use interior::{Hypergraph, Hypertree};
pub use limits::Limits;
pub use poly::{GammaVector, IntPolynomial, RootCountCertificate};
pub use polytope::{EhrhartData, Halfspace, LatticePolytope};
pub use posets::Poset;
