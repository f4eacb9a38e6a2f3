//! Exact enumeration of labelled and unlabelled graphs, and of
//! self-complementary graphs, classified by the order of their automorphism
//! group.
//!
//! A labelled graph on `{1, ..., n}` is encoded as an integer index whose
//! binary digits record its edges ([`index_codec`]). Each vertex permutation
//! induces a permutation of vertex pairs ([`perm`]); from its cycles the
//! census engine builds a product of two-term polynomials in `x` and sums
//! them over all permutations ([`census`]). The coefficient of `x^L` in the
//! sum is the automorphism-group order of the graph with index `L`, so a
//! histogram of coefficients gives labelled counts per group order, and
//! dividing by `n! / xi` gives unlabelled counts.
//!
//! ```
//! use graph_census::{census, Order};
//!
//! let order = Order::new(4).unwrap();
//! let acc = census::run_census(order, census::Mode::Graphs, &census::CensusOptions::sequential()).unwrap();
//! let report = census::report(&acc).unwrap();
//! assert_eq!(report.labelled_total, 64);
//! assert_eq!(report.unlabelled_total, 11);
//! ```
//!
//! [`oracle`] recomputes the same quantities by brute force for small `n`.

pub mod census;
pub mod error;
pub mod index_codec;
pub mod oracle;
pub mod perm;
pub mod report;

pub use census::{run_census, CensusOptions, CensusReport, Mode};
pub use error::{Error, Result};
pub use index_codec::{decode, encode, EdgePair, GraphIndex, LabelledGraph, Order};
pub use perm::{pair_decomposition, Permutation};
