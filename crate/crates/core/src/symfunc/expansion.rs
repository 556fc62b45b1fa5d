use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::RatFunc;
use crate::partitions::MultiPartition;

/// A finite linear combination Σ c_Bλ s_Bλ of (multi-)Schur functions of a
/// fixed degree and level. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymExpansion {
    level: usize,
    degree: u32,
    order: u32,
    terms: BTreeMap<MultiPartition, RatFunc>,
}

impl SymExpansion {
    /// The zero element. `order` is the cyclotomic order of the coefficients.
    pub fn zero(level: usize, degree: u32, order: u32) -> Self {
        assert!(level >= 1);
        SymExpansion { level, degree, order, terms: BTreeMap::new() }
    }

    /// The basis element s_label.
    pub fn schur(label: MultiPartition, order: u32) -> Self {
        let mut e = SymExpansion::zero(label.level(), label.size(), order);
        e.terms.insert(label, RatFunc::one(order));
        e
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiPartition, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, label: &MultiPartition) -> RatFunc {
        self.terms.get(label).cloned().unwrap_or_else(|| RatFunc::zero(self.order))
    }

    fn check_label(&self, label: &MultiPartition) -> Result<()> {
        if label.level() != self.level {
            return Err(Error::LevelMismatch(self.level, label.level()));
        }
        if label.size() != self.degree {
            return Err(Error::SizeMismatch(self.degree as u64, label.size() as u64));
        }
        Ok(())
    }

    /// Adds `coeff · s_label`.
    pub fn add_term(&mut self, label: MultiPartition, coeff: RatFunc) -> Result<()> {
        self.check_label(&label)?;
        if coeff.order() != self.order {
            return Err(Error::OrderMismatch(self.order, coeff.order()));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&label) {
            Some(c) => {
                let sum = &*c + &coeff;
                if sum.is_zero() {
                    self.terms.remove(&label);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.terms.insert(label, coeff);
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &SymExpansion) -> Result<SymExpansion> {
        if other.order != self.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        let mut out = self.clone();
        for (l, c) in other.terms() {
            out.add_term(l.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RatFunc) -> SymExpansion {
        let mut out = SymExpansion::zero(self.level, self.degree, self.order);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect();
        }
        out
    }

    /// Coefficientwise conjugation ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> SymExpansion {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.conj();
        }
        out
    }
}

impl fmt::Display for SymExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "s{l}")?;
            } else {
                write!(f, "({c})*s{l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
