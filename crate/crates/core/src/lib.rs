//! Exact-arithmetic combinatorics of line arrangements over ordered fields.
//!
//! The crate computes, entirely over the rationals:
//!
//! - regions of a generic arrangement with boundedness and gonality,
//!   cross-checked by a Fourier–Motzkin feasibility oracle;
//! - the cycle at infinity, local cycles in permutation charts, consecutive
//!   standard decompositions and the family `T_n`;
//! - global cyclicity, opposite vertices, slope property, and the gonality
//!   censuses of globally cyclic arrangements;
//! - elementary collineation transformations (ECT), realization of
//!   prescribed cycles with prescribed slopes, and the finite graph of
//!   isomorphism classes;
//! - collineation isomorphism via order preservation and nook points of
//!   quadrilateral substructures;
//! - line-folds (parallels and concurrencies allowed) with the exact region
//!   count of completely split polynomials.

pub mod arrangement;
pub mod cycles;
pub mod error;
pub mod isomorphism;
pub mod kernel;
pub mod linefold;
pub mod regions;
pub mod sample;
pub mod transforms;

pub use arrangement::{Arrangement, InnerCoordinates, PointClass, VertexId};
pub use error::{Error, Result};
pub use kernel::{intersect, orient, side_of, LineEq, Point, Rational, Slope};
pub use regions::{enumerate_regions, oracle_feasible, region_counts, Region, SignVector};
