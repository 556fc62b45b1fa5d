use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates and builds a partition. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        if parts.iter().try_fold(0u32, |acc, p| acc.checked_add(*p)).is_none() {
            return Err(Error::InvalidPartition("size overflows".into()));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Dual partition: column lengths of the Young diagram.
    pub fn transpose(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut out = vec![0u32; cols];
        for &p in &self.0 {
            for c in out.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(out)
    }

    /// n(λ) = Σ (i-1) λ_i.
    pub fn n_stat(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }

    /// Multiplicities m_i of each part size i (index 0 unused).
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.part(0) as usize + 1];
        for &p in &self.0 {
            m[p as usize] += 1;
        }
        m
    }

    /// Cellwise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// All partitions of `n` in descending lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }
}

fn fill(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for k in (1..=rem.min(max)).rev() {
        cur.push(k);
        fill(rem - k, k, cur, out);
        cur.pop();
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
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

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand used across tests and examples; panics on invalid input.
pub fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

/// A finite sequence of non-negative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.0.clone())
    }
}

/// Dominance `μ ≤ λ`: every prefix sum of `lambda` is at least the matching
/// prefix sum of `mu`. The shorter sequence is padded with zeros.
pub fn dominance_le(mu: &[u32], lambda: &[u32]) -> Result<bool> {
    let (sm, sl) = (sum(mu), sum(lambda));
    if sm != sl {
        return Err(Error::SizeMismatch(sm, sl));
    }
    let len = mu.len().max(lambda.len());
    let (mut pm, mut pl) = (0u64, 0u64);
    for i in 0..len {
        pm += mu.get(i).copied().unwrap_or(0) as u64;
        pl += lambda.get(i).copied().unwrap_or(0) as u64;
        if pl < pm {
            return Ok(false);
        }
    }
    Ok(true)
}

fn sum(v: &[u32]) -> u64 {
    v.iter().map(|&x| x as u64).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), part(&[2, 1]));
        assert!(Partition::new(vec![u32::MAX, u32::MAX]).is_err());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_le(&[1, 1, 1], &[2, 1]).unwrap());
        assert!(dominance_le(&[2, 2], &[3, 1]).unwrap());
        assert!(!dominance_le(&[3, 1], &[2, 2]).unwrap());
        assert!(dominance_le(&[2, 1], &[2, 1]).unwrap());
        assert!(dominance_le(&[1], &[2]).is_err());
        assert!(dominance_le(&[0, 2], &[1, 1]).unwrap());
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(part(&[3, 1]).transpose(), part(&[2, 1, 1]));
        assert_eq!(part(&[2, 2]).transpose(), part(&[2, 2]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
    }

    #[test]
    fn n_stat_examples() {
        assert_eq!(part(&[1, 1, 1]).n_stat(), 3);
        assert_eq!(part(&[3]).n_stat(), 0);
        assert_eq!(part(&[2, 1]).n_stat(), 1);
    }

    #[test]
    fn enumeration_counts_and_order() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        let four = Partition::all(4);
        assert_eq!(four[0], part(&[4]));
        assert_eq!(four[1], part(&[3, 1]));
        assert_eq!(four[4], part(&[1, 1, 1, 1]));
    }

    #[test]
    fn serde_validates() {
        let p: Partition = serde_json::from_str("[3,1]").unwrap();
        assert_eq!(p, part(&[3, 1]));
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
        assert_eq!(serde_json::to_string(&p).unwrap(), "[3,1]");
    }
}
