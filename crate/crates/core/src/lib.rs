//! Exact Weierstrass-point computations on Gorenstein curves.
//!
//! * [`series`]: truncated power series over `Q`, determinants of series
//!   matrices and a small polynomial reader.
//! * [`localring`]: numerical semigroups and branch models of singular points.
//! * [`wronskian`]: Widland-Lax Wronskians, point weights, vanishing sequences
//!   and the Brill-Segre count.
//! * [`enumerative`]: divisor classes on `M̄_g`, jet bundle Chern classes,
//!   pencil counts and the special Weierstrass point class.
//! * [`batch`]: data-parallel sweeps over independent inputs.
//! * [`cli`]: scenario files, reports and the bundled worked examples.

pub mod batch;
pub mod cli;
pub mod enumerative;
pub mod localring;
pub mod series;
pub mod wronskian;
