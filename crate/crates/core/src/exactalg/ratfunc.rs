use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::cyclotomic::CycRational;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Rational function in `t` over Q(ζ_r), kept in lowest terms with a monic
/// denominator. Equal functions therefore compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

/// Laurent substitution applied by [`RatFunc::substitute`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Substitution {
    /// `t ↦ t^k`
    Pow(usize),
    /// `t ↦ t^{-k}`
    InversePow(usize),
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        assert_eq!(num.order(), den.order(), "cyclotomic order mismatch");
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        let order = den.order();
        if num.is_zero() {
            return RatFunc { num, den: Poly::one(order) };
        }
        if den.degree() == Some(0) {
            let inv = den.coeffs()[0].inv().expect("nonzero");
            return RatFunc { num: num.scale(&inv), den: Poly::one(order) };
        }
        let (_, num, den) = num.gcd_cofactors(&den);
        let lead = den.leading().expect("nonzero").clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.inv().expect("nonzero");
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn zero(order: u32) -> Self {
        RatFunc { num: Poly::zero(order), den: Poly::one(order) }
    }

    pub fn one(order: u32) -> Self {
        Self::from_poly(Poly::one(order))
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        Self::from_poly(Poly::constant(CycRational::from_int(order, n)))
    }

    pub fn constant(c: CycRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        let order = p.order();
        RatFunc { num: p, den: Poly::one(order) }
    }

    /// `t^e` for any integer `e`.
    pub fn t_pow(order: u32, e: i64) -> Self {
        if e >= 0 {
            Self::from_poly(Poly::t_pow(order, e as usize))
        } else {
            RatFunc { num: Poly::one(order), den: Poly::t_pow(order, (-e) as usize) }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn order(&self) -> u32 {
        self.num.order()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The polynomial when the denominator is one, `None` otherwise.
    pub fn poly_extract(&self) -> Option<Poly> {
        self.is_polynomial().then(|| self.num.clone())
    }

    pub fn is_real(&self) -> bool {
        self.num.is_real() && self.den.is_real()
    }

    /// Conjugates coefficients (ζ ↦ ζ^{-1}); `t` is fixed.
    pub fn conj(&self) -> Self {
        RatFunc { num: self.num.conj(), den: self.den.conj() }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, c: &CycRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.order());
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Multiplies by `t^e`.
    pub fn mul_t_pow(&self, e: i64) -> Self {
        if e == 0 || self.is_zero() {
            return self.clone();
        }
        if e > 0 {
            let k = e as usize;
            // Cancel any power of t already in the denominator.
            let dv = self.den.valuation().unwrap_or(0).min(k);
            let den = self.den.unshift(dv).expect("valuation");
            RatFunc { num: self.num.shift(k - dv), den }
        } else {
            let k = (-e) as usize;
            let nv = self.num.valuation().unwrap_or(0).min(k);
            let num = self.num.unshift(nv).expect("valuation");
            RatFunc { num, den: self.den.shift(k - nv) }
        }
    }

    pub fn substitute(&self, rule: Substitution) -> Self {
        match rule {
            Substitution::Pow(k) => {
                assert!(k > 0, "substitution exponent must be positive");
                RatFunc { num: self.num.compose_pow(k), den: self.den.compose_pow(k) }
            }
            Substitution::InversePow(k) => {
                assert!(k > 0, "substitution exponent must be positive");
                // f(t^{-k}) = t^{k d} num(t^{-k}) / t^{k d} den(t^{-k}) with d the
                // larger of the two degrees.
                let d = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
                let num = self.num.reverse(d).compose_pow(k);
                let den = self.den.reverse(d).compose_pow(k);
                Self::normalized(num, den)
            }
        }
    }

    pub fn eval(&self, x: &CycRational) -> Result<CycRational> {
        let d = self.den.eval(x);
        self.num.eval(x).checked_div(&d)
    }

    /// Coefficients viewed in Q(ζ_s) for `s` a multiple of the current order.
    pub fn embed(&self, new_order: u32) -> Result<Self> {
        Ok(RatFunc { num: self.num.embed(new_order)?, den: self.den.embed(new_order)? })
    }

    /// The same function over Q (order 1) when all coefficients are rational.
    pub fn restrict_to_rational(&self) -> Option<Self> {
        Some(RatFunc { num: self.num.restrict_to_rational()?, den: self.den.restrict_to_rational()? })
    }

    pub fn fmt_with(&self, var: &str, latex: bool) -> String {
        let n = self.num.fmt_with(var, latex);
        if self.den.is_one() {
            return n;
        }
        let d = self.den.fmt_with(var, latex);
        if latex {
            format!("\\frac{{{n}}}{{{d}}}")
        } else {
            format!("({n})/({d})")
        }
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc::normalized(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return RatFunc::normalized(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        let (_, a, b) = self.den.gcd_cofactors(&rhs.den);
        let num = &(&self.num * &b) + &(&rhs.num * &a);
        RatFunc::normalized(num, &self.den * &b)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero(self.order());
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel before multiplying to keep degrees small.
        let (_, n1, d2) = self.num.gcd_cofactors(&rhs.den);
        let (_, n2, d1) = rhs.num.gcd_cofactors(&self.den);
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lead = den.leading().expect("nonzero").clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.inv().expect("nonzero");
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with("t", false))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc[{}]({})", self.order(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(1, c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn normalizes_common_factor() {
        let f = rf(&[1, 0, -1], &[1, -1]);
        assert_eq!(f, RatFunc::from_poly(p(&[1, 1])));
        assert_eq!(f.poly_extract(), Some(p(&[1, 1])));
    }

    #[test]
    fn self_quotient_is_one() {
        let a = rf(&[2, 3], &[1, 0, 5]);
        assert!(a.checked_div(&a).unwrap().is_one());
        assert_eq!(a.checked_div(&RatFunc::zero(1)), Err(Error::DivisionByZero));
    }

    #[test]
    fn sum_over_common_denominator() {
        let a = rf(&[1], &[1, -1]);
        let b = rf(&[0, -1], &[1, -1]);
        assert!((&a + &b).is_one());
    }

    #[test]
    fn poly_extract_failure_and_zero() {
        assert_eq!(rf(&[1], &[1, -1]).poly_extract(), None);
        assert_eq!(rf(&[], &[1, -1]).poly_extract(), Some(Poly::zero(1)));
    }

    #[test]
    fn denominator_is_monic() {
        let f = rf(&[3], &[4, 2]);
        assert!(f.den().leading().unwrap().is_one());
        assert_eq!(f, rf(&[3, 0], &[4, 2]));
        assert_eq!(f.num(), &Poly::from_coeffs(1, vec![CycRational::from_rational(1, crate::exactalg::rat(3, 2))]));
    }

    #[test]
    fn substitutions() {
        let f = RatFunc::from_poly(p(&[1, 1]));
        assert_eq!(f.substitute(Substitution::Pow(2)), RatFunc::from_poly(p(&[1, 0, 1])));
        let t = RatFunc::from_poly(p(&[0, 1]));
        assert_eq!(t.substitute(Substitution::InversePow(1)), rf(&[1], &[0, 1]));
        let g = RatFunc::from_poly(p(&[1, 0, 1]));
        assert_eq!(g.substitute(Substitution::InversePow(2)), rf(&[1, 0, 0, 0, 1], &[0, 0, 0, 0, 1]));
    }

    #[test]
    fn t_powers() {
        let f = rf(&[1], &[0, 0, 1, 1]);
        assert_eq!(f.mul_t_pow(3), rf(&[0, 1], &[1, 1]));
        assert_eq!(f.mul_t_pow(-1), rf(&[1], &[0, 0, 0, 1, 1]));
        assert_eq!(RatFunc::t_pow(1, -2).mul_t_pow(2), RatFunc::one(1));
    }
}
