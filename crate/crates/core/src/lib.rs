//! Forbidden `K_{2,t}` traces in 3-uniform hypergraphs: exact detection with
//! certificates, dominated-set algorithms on link graphs, exact small-`n`
//! extremal search, lower-bound constructions and numeric bound evaluation.

pub mod bounds;
pub mod constructions;
pub mod dominated;
pub mod error;
pub mod hypergraph;
pub mod link;
pub mod neighborhood;
pub mod partition;
pub mod search;
pub mod trace;

pub use error::{Error, Result};
pub use hypergraph::{Hypergraph3, Triple, Vertex, VertexSet};
pub use link::LoopGraph;
pub use trace::{TraceCertificate, TracePattern};
