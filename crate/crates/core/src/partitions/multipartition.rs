use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::{dominance_le, Composition, Partition};
use crate::error::{Error, Result};

/// An r-tuple of partitions (components may be empty). The level r is the
/// number of components and is at least one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Partition>", into = "Vec<Partition>")]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidPartition("a multipartition needs at least one component".into()));
        }
        if components.iter().try_fold(0u32, |acc, p| acc.checked_add(p.size())).is_none() {
            return Err(Error::InvalidPartition("size overflows".into()));
        }
        Ok(MultiPartition(components))
    }

    /// The tuple with every component empty.
    pub fn empty(level: usize) -> Self {
        assert!(level >= 1);
        MultiPartition(vec![Partition::empty(); level])
    }

    /// `(∅, …, ∅, ξ)` of level `level`.
    pub fn concentrated_last(level: usize, xi: Partition) -> Self {
        let mut c = vec![Partition::empty(); level];
        c[level - 1] = xi;
        MultiPartition(c)
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.0[i]
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(Partition::size).sum()
    }

    /// (|λ^(1)|, …, |λ^(r)|).
    pub fn size_vector(&self) -> Vec<u32> {
        self.0.iter().map(Partition::size).collect()
    }

    pub fn max_len(&self) -> usize {
        self.0.iter().map(Partition::len).max().unwrap_or(0)
    }

    pub fn transpose(&self) -> MultiPartition {
        MultiPartition(self.0.iter().map(Partition::transpose).collect())
    }

    /// n(Bλ) = Σ n(λ^(i)).
    pub fn n_stat(&self) -> u64 {
        self.0.iter().map(Partition::n_stat).sum()
    }

    /// b(Bλ) = Σ (i-1)|λ^(i)|.
    pub fn b_stat(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, p)| i as u64 * p.size() as u64).sum()
    }

    /// a(Bλ) = r·n(Bλ) + b(Bλ).
    pub fn a_stat(&self) -> u64 {
        self.level() as u64 * self.n_stat() + self.b_stat()
    }

    /// Interleaved composition (λ^(1)_1, …, λ^(r)_1, λ^(1)_2, …) of length r·m.
    pub fn composition_c(&self, m: usize) -> Result<Composition> {
        let needed = self.max_len();
        if m < needed {
            return Err(Error::PaddingTooShort { needed, given: m });
        }
        let mut v = Vec::with_capacity(m * self.level());
        for j in 0..m {
            for p in &self.0 {
                v.push(p.part(j));
            }
        }
        Ok(Composition(v))
    }

    /// Whether the tuple has the form (∅, …, ∅, ξ).
    pub fn is_concentrated_last(&self) -> bool {
        self.0[..self.level() - 1].iter().all(Partition::is_empty)
    }

    /// Whether all components except the last two are empty.
    pub fn is_two_tail(&self) -> bool {
        let r = self.level();
        r <= 2 || self.0[..r - 2].iter().all(Partition::is_empty)
    }
}

impl TryFrom<Vec<Partition>> for MultiPartition {
    type Error = Error;
    fn try_from(v: Vec<Partition>) -> Result<Self> {
        MultiPartition::new(v)
    }
}

impl From<MultiPartition> for Vec<Partition> {
    fn from(m: MultiPartition) -> Vec<Partition> {
        m.0
    }
}

impl From<Partition> for MultiPartition {
    fn from(p: Partition) -> Self {
        MultiPartition(vec![p])
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand for tests; panics on invalid input.
pub fn multi(components: &[&[u32]]) -> MultiPartition {
    MultiPartition::new(components.iter().map(|c| super::part(c)).collect()).expect("valid")
}

fn check_compatible(a: &MultiPartition, b: &MultiPartition) -> Result<()> {
    if a.level() != b.level() {
        return Err(Error::LevelMismatch(a.level(), b.level()));
    }
    if a.size() != b.size() {
        return Err(Error::SizeMismatch(a.size() as u64, b.size() as u64));
    }
    Ok(())
}

/// Partial order `Bμ ≤ Bλ` by dominance of the interleaved compositions.
pub fn multi_partial_le(mu: &MultiPartition, lambda: &MultiPartition) -> Result<bool> {
    check_compatible(mu, lambda)?;
    let m = mu.max_len().max(lambda.max_len());
    dominance_le(mu.composition_c(m)?.entries(), lambda.composition_c(m)?.entries())
}

/// Componentwise dominance `Bμ ⊴ Bλ`; false whenever the size vectors differ.
pub fn multi_comp_le(mu: &MultiPartition, lambda: &MultiPartition) -> Result<bool> {
    check_compatible(mu, lambda)?;
    for (m, l) in mu.components().iter().zip(lambda.components()) {
        if m.size() != l.size() || !dominance_le(m.parts(), l.parts())? {
            return Ok(false);
        }
    }
    Ok(true)
}
