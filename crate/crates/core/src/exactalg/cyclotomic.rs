use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, int, Rational};
use crate::error::{Error, Result};

/// Largest cyclotomic order accepted anywhere in the library.
pub const MAX_ORDER: u32 = 128;

/// The field Q(ζ_r) with its power basis 1, ζ, …, ζ^{φ(r)-1}.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    /// Coefficients of the r-th cyclotomic polynomial, lowest degree first.
    modulus: Vec<i64>,
    /// ζ^k in power-basis coordinates for 0 ≤ k < r.
    powers: Vec<Vec<Rational>>,
    /// The same table; the entries are integers because Φ_r is monic.
    int_powers: Vec<Vec<i64>>,
}

impl CyclotomicField {
    /// Shared instance for order `r`; built once and kept for the process
    /// lifetime.
    pub fn get(order: u32) -> Result<&'static CyclotomicField> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::UnsupportedOrder(order));
        }
        static CACHE: OnceLock<RwLock<HashMap<u32, &'static CyclotomicField>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(f) = cache.read().unwrap().get(&order) {
            return Ok(f);
        }
        let mut w = cache.write().unwrap();
        let f = *w
            .entry(order)
            .or_insert_with(|| Box::leak(Box::new(CyclotomicField::build(order))));
        Ok(f)
    }

    fn build(order: u32) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let phi = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        for k in 0..order as usize {
            let mut v = vec![Rational::zero(); k.max(phi) + 1];
            v[k] = Rational::one();
            reduce_in_place(&mut v, &modulus);
            v.truncate(phi);
            powers.push(v);
        }
        let int_powers = powers
            .iter()
            .map(|v| v.iter().map(|q| q.to_integer().try_into().expect("small power-basis entry")).collect())
            .collect();
        CyclotomicField { order, modulus, powers, int_powers }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// φ(r), the dimension over Q.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }
}

/// Integer coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = exact_div_monic(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

fn exact_div_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let dq = rem.len() - 1 - db;
    let mut q = vec![0i64; dq + 1];
    for k in (0..=dq).rev() {
        let c = rem[k + db];
        q[k] = c;
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= c * bj;
        }
    }
    debug_assert!(rem.iter().all(|c| *c == 0));
    q
}

fn reduce_in_place(v: &mut Vec<Rational>, modulus: &[i64]) {
    let phi = modulus.len() - 1;
    for k in (phi..v.len()).rev() {
        if v[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut v[k]);
        for (j, m) in modulus[..phi].iter().enumerate() {
            if *m != 0 {
                v[k - phi + j] -= &c * int(*m);
            }
        }
    }
    v.truncate(phi);
}

/// An element of Q(ζ_r) in power-basis coordinates. Equal field elements
/// have identical coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycRational {
    order: u32,
    coords: Vec<Rational>,
}

impl CycRational {
    fn field(&self) -> &'static CyclotomicField {
        CyclotomicField::get(self.order).expect("order validated at construction")
    }

    pub fn zero(order: u32) -> Self {
        let f = CyclotomicField::get(order).expect("unsupported cyclotomic order");
        CycRational { order, coords: vec![Rational::zero(); f.degree()] }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        Self::from_rational(order, int(n))
    }

    pub fn from_rational(order: u32, q: Rational) -> Self {
        let mut z = Self::zero(order);
        z.coords[0] = q;
        z
    }

    /// Builds an element from power-basis coordinates; the length must be φ(r).
    pub fn from_coords(order: u32, coords: Vec<Rational>) -> Result<Self> {
        let f = CyclotomicField::get(order)?;
        if coords.len() != f.degree() {
            return Err(Error::Parse(format!(
                "expected {} coordinates for order {order}, got {}",
                f.degree(),
                coords.len()
            )));
        }
        Ok(CycRational { order, coords })
    }

    /// Σ_k a_k ζ^k for integer a_k; `a` may be shorter or longer than r.
    pub fn from_group_ring(order: u32, a: &[i128]) -> Self {
        let f = CyclotomicField::get(order).expect("unsupported cyclotomic order");
        let r = order as usize;
        let mut acc = vec![0i128; f.degree()];
        for (k, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (o, &p) in acc.iter_mut().zip(&f.int_powers[k % r]) {
                *o += x * p as i128;
            }
        }
        CycRational { order, coords: acc.into_iter().map(|x| Rational::from_integer(x.into())).collect() }
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let f = CyclotomicField::get(order).expect("unsupported cyclotomic order");
        let k = k.rem_euclid(order as i64) as usize;
        CycRational { order, coords: f.powers[k].clone() }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// True when the element lies in Q.
    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then(|| &self.coords[0])
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order, other.order, "cyclotomic order mismatch");
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CycRational { order: self.order, coords: self.coords.iter().map(|c| c * q).collect() }
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        let f = self.field();
        let r = self.order as usize;
        let mut out = vec![Rational::zero(); f.degree()];
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&f.powers[(r - i) % r]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        CycRational { order: self.order, coords: out }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(self.order, q.recip()));
        }
        // Solve M x = e_0 where M is multiplication by self in the power basis.
        let d = self.coords.len();
        let mut m: Vec<Vec<Rational>> = Vec::with_capacity(d);
        let mut col = self.clone();
        let zeta = Self::zeta_pow(self.order, 1);
        let mut cols = Vec::with_capacity(d);
        for _ in 0..d {
            cols.push(col.coords.clone());
            col = &col * &zeta;
        }
        for i in 0..d {
            let mut row: Vec<Rational> = (0..d).map(|j| cols[j][i].clone()).collect();
            row.push(if i == 0 { Rational::one() } else { Rational::zero() });
            m.push(row);
        }
        for c in 0..d {
            let p = (c..d).find(|&i| !m[i][c].is_zero()).ok_or(Error::DivisionByZero)?;
            m.swap(c, p);
            let piv = m[c][c].clone();
            for x in m[c].iter_mut() {
                *x /= &piv;
            }
            for i in 0..d {
                if i != c && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..=d {
                        let v = &m[c][j] * &f;
                        m[i][j] -= v;
                    }
                }
            }
        }
        Ok(CycRational { order: self.order, coords: m.into_iter().map(|row| row[d].clone()).collect() })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check(other);
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Same element viewed in Q(ζ_s) for `s` a multiple of r.
    pub fn embed(&self, new_order: u32) -> Result<Self> {
        if !new_order.is_multiple_of(self.order) {
            return Err(Error::OrderMismatch(self.order, new_order));
        }
        let step = (new_order / self.order) as i64;
        let mut out = Self::zero(new_order);
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &Self::zeta_pow(new_order, step * i as i64).scale(c);
            }
        }
        Ok(out)
    }

    /// Restricts to a rational when the element lies in Q, as an element of
    /// the order-1 field.
    pub fn restrict_to_rational(&self) -> Option<Self> {
        self.as_rational().map(|q| Self::from_rational(1, q.clone()))
    }
}

impl<'a> Add<&'a CycRational> for &'a CycRational {
    type Output = CycRational;
    fn add(self, rhs: &CycRational) -> CycRational {
        self.check(rhs);
        CycRational {
            order: self.order,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a CycRational> for &'a CycRational {
    type Output = CycRational;
    fn sub(self, rhs: &CycRational) -> CycRational {
        self.check(rhs);
        CycRational {
            order: self.order,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CycRational {
    type Output = CycRational;
    fn neg(self) -> CycRational {
        CycRational { order: self.order, coords: self.coords.iter().map(|a| -a).collect() }
    }
}

impl<'a> Mul<&'a CycRational> for &'a CycRational {
    type Output = CycRational;
    fn mul(self, rhs: &CycRational) -> CycRational {
        self.check(rhs);
        if let Some(q) = rhs.as_rational() {
            return self.scale(q);
        }
        if let Some(q) = self.as_rational() {
            return rhs.scale(q);
        }
        let d = self.coords.len();
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        reduce_in_place(&mut prod, self.field().modulus());
        CycRational { order: self.order, coords: prod }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycRational> for CycRational {
            type Output = CycRational;
            fn $m(self, rhs: CycRational) -> CycRational {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for CycRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", format_rational(&self.coords[0]));
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = format_rational(&c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != "1" {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_{}", self, self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn conj_is_trivial_for_r2() {
        let z = CycRational::zeta_pow(2, 1);
        assert_eq!(z, CycRational::from_int(2, -1));
        assert_eq!(z.conj(), z);
    }

    #[test]
    fn zeta_times_zeta_cubed_r4() {
        let z = CycRational::zeta_pow(4, 1);
        let z3 = CycRational::zeta_pow(4, 3);
        assert!((&z * &z3).is_one());
    }

    #[test]
    fn zeta_squared_r3() {
        let z2 = CycRational::zeta_pow(3, 2);
        assert_eq!(z2.coords(), &[rat(-1, 1), rat(-1, 1)]);
        let z = CycRational::zeta_pow(3, 1);
        assert_eq!(&z * &z, z2);
        assert_eq!(z.conj(), z2);
    }

    #[test]
    fn inverse_and_division() {
        let a = CycRational::from_coords(5, vec![rat(1, 2), rat(-3, 1), rat(0, 1), rat(2, 7)]).unwrap();
        let one = &a * &a.inv().unwrap();
        assert!(one.is_one());
        assert_eq!(CycRational::zero(5).inv(), Err(Error::DivisionByZero));
        assert!(a.checked_div(&CycRational::zero(5)).is_err());
    }

    #[test]
    fn embed_preserves_zeta() {
        let z = CycRational::zeta_pow(3, 1);
        let e = z.embed(6).unwrap();
        assert_eq!(e, CycRational::zeta_pow(6, 2));
        assert!(z.embed(4).is_err());
    }

    #[test]
    fn display() {
        let a = CycRational::from_coords(3, vec![rat(1, 2), rat(-1, 1)]).unwrap();
        assert_eq!(a.to_string(), "1/2 - z");
        assert_eq!(CycRational::from_int(3, -4).to_string(), "-4");
    }
}
