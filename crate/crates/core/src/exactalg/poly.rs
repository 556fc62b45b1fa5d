use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::cyclotomic::CycRational;
use super::modular::{modular_gcd, ModGcd};
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Univariate polynomial in `t` over Q(ζ_r).
///
/// Stored densely, lowest degree first, with no trailing zero coefficient, so
/// the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    order: u32,
    coeffs: Vec<CycRational>,
}

impl Poly {
    pub fn zero(order: u32) -> Self {
        Poly { order, coeffs: Vec::new() }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(CycRational::one(order))
    }

    pub fn constant(c: CycRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: CycRational, exp: usize) -> Self {
        let order = c.order();
        if c.is_zero() {
            return Self::zero(order);
        }
        let mut coeffs = vec![CycRational::zero(order); exp + 1];
        coeffs[exp] = c;
        Poly { order, coeffs }
    }

    /// `t^exp` with coefficient one.
    pub fn t_pow(order: u32, exp: usize) -> Self {
        Self::monomial(CycRational::one(order), exp)
    }

    /// Builds from integer coefficients, lowest degree first.
    pub fn from_ints(order: u32, coeffs: &[i64]) -> Self {
        Self::from_coeffs(order, coeffs.iter().map(|c| CycRational::from_int(order, *c)).collect())
    }

    pub fn from_coeffs(order: u32, coeffs: Vec<CycRational>) -> Self {
        let mut p = Poly { order, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(CycRational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeff(&self, exp: usize) -> CycRational {
        self.coeffs.get(exp).cloned().unwrap_or_else(|| CycRational::zero(self.order))
    }

    pub fn coeffs(&self) -> &[CycRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&CycRational> {
        self.coeffs.last()
    }

    /// Nonzero terms as (exponent, coefficient), lowest degree first.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &CycRational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &CycRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        Poly { order: self.order, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero(self.order);
        }
        Poly { order: self.order, coeffs: self.coeffs.iter().map(|a| a.scale(q)).collect() }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![CycRational::zero(self.order); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { order: self.order, coeffs }
    }

    /// Divides by `t^k`; fails if `t^k` does not divide.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.valuation()? < k {
            return None;
        }
        Some(Poly { order: self.order, coeffs: self.coeffs[k..].to_vec() })
    }

    pub fn monic(&self) -> Result<Self> {
        let lead = self.leading().ok_or(Error::DivisionByZero)?;
        if lead.is_one() {
            return Ok(self.clone());
        }
        Ok(self.scale(&lead.inv()?))
    }

    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        assert_eq!(self.order, d.order, "cyclotomic order mismatch");
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let Some(da) = self.degree() else {
            return Ok((Self::zero(self.order), Self::zero(self.order)));
        };
        if da < dd {
            return Ok((Self::zero(self.order), self.clone()));
        }
        let lead_inv = d.coeffs[dd].inv()?;
        let monic_divisor = lead_inv.is_one();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![CycRational::zero(self.order); da - dd + 1];
        for k in (0..=da - dd).rev() {
            let c = &rem[k + dd];
            if c.is_zero() {
                continue;
            }
            let q = if monic_divisor { c.clone() } else { c * &lead_inv };
            for (j, dj) in d.coeffs.iter().enumerate() {
                if !dj.is_zero() {
                    rem[k + j] = &rem[k + j] - &(&q * dj);
                }
            }
            quot[k] = q;
        }
        Ok((Self::from_coeffs(self.order, quot), Self::from_coeffs(self.order, rem)))
    }

    /// Exact quotient; fails when the division leaves a remainder.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Precondition("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.gcd_cofactors(other).0
    }

    /// The monic gcd g together with `self / g` and `other / g`.
    pub fn gcd_cofactors(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let order = self.order;
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return (Poly::zero(order), Poly::zero(order), Poly::zero(order)),
            (true, false) => {
                let lead = other.leading().expect("nonzero").clone();
                return (other.monic().expect("nonzero"), Poly::zero(order), Poly::constant(lead));
            }
            (false, true) => {
                let lead = self.leading().expect("nonzero").clone();
                return (self.monic().expect("nonzero"), Poly::constant(lead), Poly::zero(order));
            }
            (false, false) => {}
        }
        if self.degree() == Some(0) || other.degree() == Some(0) {
            return (Poly::one(order), self.clone(), other.clone());
        }
        if self.is_real() && other.is_real() {
            let a: Vec<Rational> = self.coeffs.iter().map(|c| c.coords()[0].clone()).collect();
            let b: Vec<Rational> = other.coeffs.iter().map(|c| c.coords()[0].clone()).collect();
            let lift = |c: &[Rational]| {
                Poly::from_coeffs(order, c.iter().map(|q| CycRational::from_rational(order, q.clone())).collect())
            };
            let mut quotients = None;
            let mut verify = |c: &[Rational]| {
                let g = lift(c);
                let (qa, ra) = self.div_rem(&g).expect("nonzero");
                if !ra.is_zero() {
                    return false;
                }
                let (qb, rb) = other.div_rem(&g).expect("nonzero");
                if !rb.is_zero() {
                    return false;
                }
                quotients = Some((qa, qb));
                true
            };
            match modular_gcd(&a, &b, &mut verify) {
                ModGcd::One => return (Poly::one(order), self.clone(), other.clone()),
                ModGcd::Candidate(c) => {
                    let (qa, qb) = quotients.expect("verified");
                    return (lift(&c), qa, qb);
                }
                ModGcd::Unknown => {}
            }
        }
        let g = self.euclid_gcd(other);
        let qa = self.exact_div(&g).expect("gcd divides");
        let qb = other.exact_div(&g).expect("gcd divides");
        (g, qa, qb)
    }

    fn euclid_gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return Poly::one(self.order);
            }
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = match r.monic() {
                Ok(m) => m,
                Err(_) => r,
            };
        }
        a.monic().unwrap_or(a)
    }

    pub fn conj(&self) -> Self {
        Poly { order: self.order, coeffs: self.coeffs.iter().map(CycRational::conj).collect() }
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(CycRational::is_rational)
    }

    /// Substitutes `t ↦ t^k`.
    pub fn compose_pow(&self, k: usize) -> Self {
        assert!(k > 0);
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let mut coeffs = vec![CycRational::zero(self.order); self.coeffs.len() * k - k + 1];
        for (e, c) in self.terms() {
            coeffs[e * k] = c.clone();
        }
        Poly { order: self.order, coeffs }
    }

    /// Reverses the coefficient list inside a window of width `n`:
    /// returns `t^n p(1/t)`. Requires `n ≥ deg p`.
    pub fn reverse(&self, n: usize) -> Self {
        let mut coeffs = vec![CycRational::zero(self.order); n + 1];
        for (e, c) in self.terms() {
            assert!(e <= n, "reverse window too small");
            coeffs[n - e] = c.clone();
        }
        Self::from_coeffs(self.order, coeffs)
    }

    pub fn eval(&self, x: &CycRational) -> CycRational {
        let mut acc = CycRational::zero(self.order);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// When every exponent is a multiple of `k`, returns q with p(t) = q(t^k).
    pub fn decompose_pow(&self, k: usize) -> Option<Self> {
        assert!(k > 0);
        if self.terms().any(|(e, _)| e % k != 0) {
            return None;
        }
        let coeffs = self.coeffs.iter().step_by(k).cloned().collect();
        Some(Self::from_coeffs(self.order, coeffs))
    }

    /// Integer coefficients, when the polynomial lies in Z[t].
    pub fn integer_coeffs(&self) -> Option<Vec<num_bigint::BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.as_rational().filter(|q| q.is_integer()).map(|q| q.numer().clone()))
            .collect()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The same polynomial over Q (order 1) when every coefficient is rational.
    pub fn restrict_to_rational(&self) -> Option<Self> {
        let coeffs = self.coeffs.iter().map(CycRational::restrict_to_rational).collect::<Option<_>>()?;
        Some(Poly { order: 1, coeffs })
    }

    /// Same polynomial with coefficients viewed in Q(ζ_s) for `s` a multiple
    /// of the current order.
    pub fn embed(&self, new_order: u32) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|c| c.embed(new_order)).collect::<Result<_>>()?;
        Ok(Self::from_coeffs(new_order, coeffs))
    }

    /// Formats with a caller-chosen variable name.
    pub fn fmt_with(&self, var: &str, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let (neg, body) = match c.as_rational() {
                Some(q) => (q.is_negative(), format_coeff_rational(&q.abs(), latex)),
                None => (false, format!("({c})")),
            };
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ if latex => format!("{var}^{{{e}}}"),
                _ => format!("{var}^{e}"),
            };
            let term = match (body.as_str(), mono.is_empty()) {
                (b, true) => b.to_string(),
                ("1", false) => mono,
                (b, false) if latex => format!("{b}{mono}"),
                (b, false) => format!("{b}*{mono}"),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }
}

fn format_coeff_rational(q: &Rational, latex: bool) -> String {
    if latex && !q.is_integer() {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    } else {
        format_rational(q)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.order, rhs.order, "cyclotomic order mismatch");
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            if !s.is_zero() {
                *c = &*c + s;
            }
        }
        Poly::from_coeffs(self.order, coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.order, rhs.order, "cyclotomic order mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.order);
        }
        let mut coeffs = vec![CycRational::zero(self.order); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(self.order, coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with("t", false))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.order, self)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(1, c)
    }

    #[test]
    fn gcd_is_monic() {
        // (1 - t^2) and (2 - 2t) share (t - 1).
        let g = p(&[1, 0, -1]).gcd(&p(&[2, -2]));
        assert_eq!(g, p(&[-1, 1]));
        assert_eq!(Poly::zero(1).gcd(&Poly::zero(1)), Poly::zero(1));
        assert_eq!(p(&[0, 3]).gcd(&Poly::zero(1)), p(&[0, 1]));
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = p(&[3, 0, 2, 5, -1]);
        let b = p(&[1, 2, 0]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
        assert!(a.div_rem(&Poly::zero(1)).is_err());
    }

    #[test]
    fn compose_and_decompose() {
        let f = p(&[1, 1]);
        let g = f.compose_pow(3);
        assert_eq!(g, p(&[1, 0, 0, 1]));
        assert_eq!(g.decompose_pow(3).unwrap(), f);
        assert!(p(&[1, 1, 1]).decompose_pow(2).is_none());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -1, 0, 2]).to_string(), "2*t^3 - t + 1");
        assert_eq!(p(&[0, 1, 0, 1]).fmt_with("t", true), "t^{3} + t");
        assert_eq!(Poly::zero(1).to_string(), "0");
    }

    #[test]
    fn gcd_over_cyclotomic_field() {
        // (t - ζ)(t + 1) and (t - ζ)(t - 2) over Q(ζ_3).
        let z = CycRational::zeta_pow(3, 1);
        let lin = Poly::from_coeffs(3, vec![-&z, CycRational::one(3)]);
        let a = &lin * &Poly::from_ints(3, &[1, 1]);
        let b = &lin * &Poly::from_ints(3, &[-2, 1]);
        assert_eq!(a.gcd(&b), lin);
    }

    #[test]
    fn modular_gcd_agrees_with_euclid() {
        let pieces = [p(&[1, 1]), p(&[-1, 0, 1]), p(&[1, 1, 1]), p(&[3, -2]), p(&[1, 0, 0, 0, -1]), p(&[7, 0, 5])];
        for (i, a) in pieces.iter().enumerate() {
            for (j, b) in pieces.iter().enumerate() {
                for c in &pieces {
                    let x = &(a * c) * &p(&[2, 0, 1]);
                    let y = &(b * c).scale_rational(&crate::exactalg::rat(5, 3)) * a;
                    assert_eq!(x.gcd(&y), x.euclid_gcd(&y), "{i} {j}");
                }
            }
        }
    }
}
