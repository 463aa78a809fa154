//! Command-line front end for the `stargeo` engine: an expression language
//! over a chosen session algebra, verification suites with JSON reports and
//! the Kepler orbit driver.

pub mod expr;
pub mod kepler;
pub mod session;
pub mod verify;
