//! Virtual link diagrams, signed ribbon graphs, and the identity between the
//! Kauffman bracket of a diagram and the Bollobás-Riordan polynomial of its
//! ribbon graph.
//!
//! ```
//! use vlink::{thistle, Limits, VirtualLinkDiagram};
//!
//! let d = VirtualLinkDiagram::parse("X 6 4 1 3\nX 1 5 2 6\nX 4 2 5 3\n").unwrap();
//! let report = thistle::verify_identity(&d, &Limits::default()).unwrap();
//! assert!(report.equal);
//! ```

pub mod cli;
pub mod diagram;
mod limits;
pub mod poly;
pub mod ribbon;
pub mod thistle;
mod union_find;

pub use diagram::{Crossing, DiagramError, Sign, Splitting, State, VirtualLinkDiagram};
pub use limits::{CapExceeded, Limits};
pub use poly::{LaurentPoly, Monomial, PolyError, Ring, Substitution};
pub use ribbon::{RibbonEdge, RibbonError, RibbonGraph, SpanningSubgraph, SubgraphStats};
