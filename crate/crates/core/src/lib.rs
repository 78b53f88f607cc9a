//! Motzkin paths with air pockets.
//!
//! Four path families are modelled: `M1` (no two consecutive down steps),
//! `M2` (every down or flat step is followed by an up step, except at the
//! end) and their right-to-left readings `M1R`, `M2R`. For each family the
//! crate counts paths by length, end height and last-step class, and builds
//! the counting triangle `t(n,k)` along several independent routes:
//!
//! - exhaustive enumeration ([`enumerate`]),
//! - order-by-order solution of the defining system and closed forms in the
//!   kernel roots ([`kernel`]),
//! - triangle recurrences and Riordan-array descriptions ([`triangles`],
//!   [`riordan`]),
//! - binomial-sum formulas ([`formulas`]).
//!
//! [`verify`] cross-checks all of them and compares against printed matrices
//! and reference sequences ([`oeis`]).

pub mod enumerate;
pub mod formulas;
pub mod kernel;
pub mod oeis;
pub mod path;
pub mod printed;
pub mod report;
pub mod riordan;
pub mod series;
pub mod triangles;
pub mod verify;

pub use path::{Family, LatticePath, Step, StepClass};
pub use report::{Check, Report, Status};
pub use series::{BSeries, USeries};
