//! Piercing sets for families of closed axis-parallel boxes.
//!
//! The crate pairs constructive divide-and-conquer piercing algorithms with
//! exact (exponential, size-capped) oracles for the packing number ν and the
//! piercing number τ, and with tables of the upper-bound recurrences on the
//! largest τ attainable for a given ν and dimension.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod generators;
pub mod io;
pub mod model;
pub mod oracles;
pub mod pierce;

pub use error::{Error, Result};
pub use model::{contains, intersects, BoxFamily, BoxNd, Coord, Interval, Point, TwoLines};
pub use oracles::{common_point, nu_exact, tau_exact, OracleConfig};
pub use pierce::{PierceReport, SplitPolicy};
