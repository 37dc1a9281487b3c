//! Exact computations around modified Macdonald polynomials: symmetric
//! functions over ℚ(q,t), the derivative modules `D_μ` of bivariate
//! alternants, and polygraph coordinate rings.

pub mod cli;
pub mod exactcore;
pub mod ghmodule;
pub mod macdonald;
pub mod partcomb;
pub mod polygraph;
pub mod symfunc;
