//! Exact enumerative combinatorics for the hyper-Catalan series `S` and the
//! Geode `G`, defined by
//!
//! ```text
//! S = 1 + Σ_{n>=1} t_n S^n,        S = 1 + (t_1 + t_2 + ...)·G.
//! ```
//!
//! Coefficients are computed exactly with big integers and checked against
//! exhaustive enumeration of ordered trees and subdigons (roofed polygon
//! dissections):
//!
//! * [`hypercatalan`]: the closed form for `C_m` and the functional equation;
//! * [`geode`]: the Geode recurrence and its checks;
//! * [`trees`], [`subdigons`]: the combinatorial objects and bijections;
//! * [`checks`]: exhaustive bijection verification;
//! * [`cli`]: the `geode` command.

pub mod checks;
pub mod cli;
pub mod geode;
pub mod hypercatalan;
pub mod report;
pub mod series;
pub mod subdigons;
pub mod trees;

pub use geode::{series_g, GeodeTable};
pub use hypercatalan::{hyper_catalan, series_s, HyperCatalanTable};
pub use report::Report;
pub use series::{enumerate_types, BigCount, TruncatedSeries, TypeVector};
pub use subdigons::{MarkedSubdigon, Subdigon};
pub use trees::{MarkedTree, OrderedTree};
