//! Exact coefficient arithmetic: rationals, the cyclotomic field Q(ζ_r), and
//! polynomials and rational functions in `t` over it.

mod cyclotomic;
mod modular;
mod poly;
mod ratfunc;
mod rational;

pub use cyclotomic::{cyclotomic_polynomial, CycRational, CyclotomicField, MAX_ORDER};
pub use poly::Poly;
pub use ratfunc::{RatFunc, Substitution};
pub use rational::{format_rational, int, parse_rational, rat, Rational};

use crate::error::Result;

/// Binary operation selector for [`cyc_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycOp {
    Add,
    Mul,
    Div,
    /// Conjugates the first operand; the second is ignored.
    Conj,
}

pub fn cyc_arith(a: &CycRational, b: &CycRational, op: CycOp) -> Result<CycRational> {
    if a.order() != b.order() {
        return Err(crate::Error::OrderMismatch(a.order(), b.order()));
    }
    Ok(match op {
        CycOp::Add => a + b,
        CycOp::Mul => a * b,
        CycOp::Div => a.checked_div(b)?,
        CycOp::Conj => a.conj(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Mul,
    Div,
}

pub fn ratfunc_arith(a: &RatFunc, b: &RatFunc, op: RatOp) -> Result<RatFunc> {
    if a.order() != b.order() {
        return Err(crate::Error::OrderMismatch(a.order(), b.order()));
    }
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Mul => a * b,
        RatOp::Div => a.checked_div(b)?,
    })
}
