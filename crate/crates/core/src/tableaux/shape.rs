use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// outer / inner, with the inner diagram contained in the outer one.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawShape", into = "RawShape")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

#[derive(Serialize, Deserialize)]
struct RawShape {
    outer: Partition,
    inner: Partition,
}

impl TryFrom<RawShape> for SkewShape {
    type Error = Error;
    fn try_from(raw: RawShape) -> Result<Self> {
        SkewShape::new(raw.outer, raw.inner)
    }
}

impl From<SkewShape> for RawShape {
    fn from(s: SkewShape) -> Self {
        RawShape { outer: s.outer, inner: s.inner }
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidPartition(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of rows, counting rows of the outer diagram that are fully
    /// covered by the inner one.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Columns occupied by row `i`: `inner_i..outer_i`.
    pub fn row_range(&self, i: usize) -> std::ops::Range<usize> {
        self.inner.part(i) as usize..self.outer.part(i) as usize
    }

    pub fn row_len(&self, i: usize) -> usize {
        (self.outer.part(i) - self.inner.part(i)) as usize
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        self.row_range(i).contains(&j)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// ε' * ε'': ε' moved right by the first row of ε'' and stacked on top of it.
pub fn skew_star(first: &SkewShape, second: &SkewShape) -> SkewShape {
    let a = second.outer.part(0);
    let k = first.outer.len();
    let mut outer: Vec<u32> = first.outer.parts().iter().map(|&p| p + a).collect();
    let mut inner: Vec<u32> = (0..k).map(|i| first.inner.part(i) + a).collect();
    outer.extend_from_slice(second.outer.parts());
    inner.extend((0..second.outer.len()).map(|i| second.inner.part(i)));
    SkewShape {
        outer: Partition::new(outer).expect("stacked rows stay decreasing"),
        inner: Partition::new(inner).expect("stacked rows stay decreasing"),
    }
}

/// λ(1) * λ(2) * ⋯ * λ(r), associated from the left.
pub fn star_all(components: &[Partition]) -> SkewShape {
    components
        .iter()
        .fold(SkewShape::straight(Partition::empty()), |acc, p| skew_star(&acc, &SkewShape::straight(p.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;

    fn sk(o: &[u32], i: &[u32]) -> SkewShape {
        SkewShape::new(part(o), part(i)).unwrap()
    }

    #[test]
    fn star_examples() {
        let one = SkewShape::straight(part(&[1]));
        assert_eq!(skew_star(&one, &one), sk(&[2, 1], &[1]));
        let s = skew_star(&SkewShape::straight(part(&[2])), &SkewShape::straight(part(&[1, 1])));
        assert_eq!(s, sk(&[3, 1, 1], &[1]));
        let e = sk(&[3, 2], &[1]);
        assert_eq!(skew_star(&e, &SkewShape::straight(Partition::empty())), e);
        assert_eq!(star_all(&[part(&[1]), Partition::empty(), part(&[1])]), sk(&[2, 1], &[1]));
    }

    #[test]
    fn rejects_non_containment() {
        assert!(SkewShape::new(part(&[2]), part(&[1, 1])).is_err());
        assert!(serde_json::from_str::<SkewShape>(r#"{"outer":[1],"inner":[2]}"#).is_err());
    }
}
