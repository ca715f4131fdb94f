//! Positive semidefinite zero forcing, propagation time, and product
//! throttling on small graphs, with an exact cops-and-robbers capture-time
//! solver and closed-form values for standard graph families.

pub mod cli;
pub mod cops;
pub mod error;
pub mod forms;
pub mod psd;
pub mod throttle;
pub mod graph;

pub use error::{Error, Result};
pub use graph::{Family, Graph, VertexSet};

// Compile the guide's code examples as doctests so the book stays in sync.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/forcing.md")]
    mod forcing {}
    #[doc = include_str!("../../../book/src/throttling.md")]
    mod throttling {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/cops.md")]
    mod cops {}
}
