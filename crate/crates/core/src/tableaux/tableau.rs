use std::fmt;

use serde::{Deserialize, Serialize};

use super::shape::{star_all, SkewShape};
use crate::error::{Error, Result};
use crate::partitions::{MultiPartition, Partition};

/// A semistandard filling of a skew shape. `rows[i]` lists the entries of
/// row `i` from left to right.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTableau {
    shape: Partition,
    #[serde(default)]
    inner: Partition,
    rows: Vec<Vec<u32>>,
}

impl TryFrom<RawTableau> for SkewTableau {
    type Error = Error;
    fn try_from(raw: RawTableau) -> Result<Self> {
        SkewTableau::new(SkewShape::new(raw.shape, raw.inner)?, raw.rows)
    }
}

impl From<SkewTableau> for RawTableau {
    fn from(t: SkewTableau) -> Self {
        RawTableau { shape: t.shape.outer().clone(), inner: t.shape.inner().clone(), rows: t.rows }
    }
}

impl SkewTableau {
    /// Checks row lengths, positivity and the semistandard conditions.
    pub fn new(shape: SkewShape, mut rows: Vec<Vec<u32>>) -> Result<Self> {
        // rows entirely covered by the inner shape may be given or omitted
        while rows.len() < shape.rows() && shape.row_len(rows.len()) == 0 {
            rows.push(Vec::new());
        }
        if rows.len() != shape.rows() {
            return Err(Error::Parse(format!("expected {} rows for shape {shape}, got {}", shape.rows(), rows.len())));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i) {
                return Err(Error::Parse(format!("row {i} has {} entries, shape {shape} needs {}", row.len(), shape.row_len(i))));
            }
            if row.contains(&0) {
                return Err(Error::Parse("entries must be positive".into()));
            }
        }
        let t = SkewTableau { shape, rows };
        if !t.is_semistandard() {
            return Err(Error::Parse(format!("{t:?} is not semistandard")));
        }
        Ok(t)
    }

    pub(crate) fn from_parts_unchecked(shape: SkewShape, rows: Vec<Vec<u32>>) -> Self {
        SkewTableau { shape, rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry in row `i`, absolute column `j`.
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        let range = self.shape.row_range(i);
        range.contains(&j).then(|| self.rows[i][j - range.start])
    }

    fn is_semistandard(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if i == 0 {
                continue;
            }
            for j in self.shape.row_range(i) {
                if let Some(above) = self.get(i - 1, j) {
                    if above >= self.get(i, j).expect("in row") {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Multiplicity of each letter 1..=max.
    pub fn content(&self) -> Vec<u32> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut c = vec![0u32; max];
        for &x in self.rows.iter().flatten() {
            c[x as usize - 1] += 1;
        }
        c
    }

    /// Entries row by row, left to right.
    pub fn row_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Aligned grid; inner cells print as dots.
    pub fn pretty(&self) -> String {
        let width = self.rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            let mut cells: Vec<String> = (0..self.shape.inner().part(i)).map(|_| format!("{:>width$}", ".")).collect();
            cells.extend(row.iter().map(|x| format!("{x:>width$}")));
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:?}", self.shape, self.rows)
    }
}

/// An r-tuple of straight tableaux.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiTableau {
    components: Vec<SkewTableau>,
}

impl MultiTableau {
    pub fn new(components: Vec<SkewTableau>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Parse("a tableau tuple needs at least one component".into()));
        }
        if let Some(t) = components.iter().find(|t| !t.shape.is_straight()) {
            return Err(Error::Parse(format!("component of shape {} is not straight", t.shape)));
        }
        Ok(MultiTableau { components })
    }

    pub fn components(&self) -> &[SkewTableau] {
        &self.components
    }

    pub fn shape(&self) -> MultiPartition {
        MultiPartition::new(self.components.iter().map(|t| t.shape.outer().clone()).collect()).expect("nonempty")
    }

    /// The same entries placed in λ(1) * ⋯ * λ(r).
    pub fn to_skew(&self) -> SkewTableau {
        let shape = star_all(self.shape().components());
        let rows = self.components.iter().flat_map(|t| t.rows.iter().cloned()).collect();
        SkewTableau::from_parts_unchecked(shape, rows)
    }

    /// Cuts a filling of λ(1) * ⋯ * λ(r) back into its components.
    pub fn from_skew(shape: &MultiPartition, t: &SkewTableau) -> Result<Self> {
        if t.shape != star_all(shape.components()) {
            return Err(Error::Precondition(format!("{} is not the star shape of {shape}", t.shape)));
        }
        let mut rows = t.rows.iter();
        let components = shape
            .components()
            .iter()
            .map(|p| SkewTableau::from_parts_unchecked(SkewShape::straight(p.clone()), rows.by_ref().take(p.len()).cloned().collect()))
            .collect();
        Ok(MultiTableau { components })
    }
}

pub fn multi_to_skew(t: &MultiTableau) -> SkewTableau {
    t.to_skew()
}

/// All semistandard fillings of `shape` with `weight[k]` copies of k+1,
/// sorted by row word.
pub fn enumerate_sst(shape: &SkewShape, weight: &[u32]) -> Vec<SkewTableau> {
    if weight.iter().map(|&w| w as u64).sum::<u64>() != shape.size() as u64 {
        return Vec::new();
    }
    let rows = shape.rows();
    let outer: Vec<u32> = (0..rows).map(|i| shape.outer().part(i)).collect();
    let start: Vec<u32> = (0..rows).map(|i| shape.inner().part(i)).collect();
    let mut out = Vec::new();
    let mut fill: Vec<Vec<u32>> = vec![Vec::new(); rows];
    strips(&outer, &start, weight, 0, &mut fill, &mut out, shape);
    out.sort_by_key(|a| a.row_word());
    out
}

/// Places letter `k+1` as a horizontal strip on top of the diagram `cur`.
fn strips(
    outer: &[u32],
    cur: &[u32],
    weight: &[u32],
    k: usize,
    fill: &mut Vec<Vec<u32>>,
    out: &mut Vec<SkewTableau>,
    shape: &SkewShape,
) {
    if k == weight.len() {
        out.push(SkewTableau::from_parts_unchecked(shape.clone(), fill.clone()));
        return;
    }
    let mut next = cur.to_vec();
    place(outer, cur, &mut next, 0, weight[k], k as u32 + 1, weight, k, fill, out, shape);
}

#[allow(clippy::too_many_arguments)]
fn place(
    outer: &[u32],
    cur: &[u32],
    next: &mut Vec<u32>,
    row: usize,
    left: u32,
    letter: u32,
    weight: &[u32],
    k: usize,
    fill: &mut Vec<Vec<u32>>,
    out: &mut Vec<SkewTableau>,
    shape: &SkewShape,
) {
    if row == outer.len() {
        if left == 0 {
            let snapshot = next.clone();
            strips(outer, &snapshot, weight, k + 1, fill, out, shape);
        }
        return;
    }
    // a horizontal strip adds at most up to the old end of the row above
    let cap = if row == 0 { outer[0] } else { outer[row].min(cur[row - 1]) };
    let room = cap.saturating_sub(cur[row]).min(left);
    for add in 0..=room {
        next[row] = cur[row] + add;
        fill[row].extend(std::iter::repeat_n(letter, add as usize));
        place(outer, cur, next, row + 1, left - add, letter, weight, k, fill, out, shape);
        let len = fill[row].len();
        fill[row].truncate(len - add as usize);
    }
    next[row] = cur[row];
}

/// Fillings of the r-tuple `shape` with the given weight.
pub fn enumerate_sst_multi(shape: &MultiPartition, weight: &[u32]) -> Vec<MultiTableau> {
    let skew = star_all(shape.components());
    enumerate_sst(&skew, weight)
        .iter()
        .map(|t| MultiTableau::from_skew(shape, t).expect("star shape"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{multi, part};

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_sst_multi(&multi(&[&[1], &[1]]), &[1, 1]).len(), 2);
        for lambda in Partition::all(5) {
            let v = enumerate_sst(&SkewShape::straight(lambda.clone()), lambda.parts());
            assert_eq!(v.len(), 1);
        }
        let v = enumerate_sst(&SkewShape::straight(part(&[2])), &[1, 1]);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].rows(), &[vec![1, 2]]);
        assert!(enumerate_sst(&SkewShape::straight(part(&[2])), &[3]).is_empty());
    }

    #[test]
    fn kostka_numbers() {
        // K_{(3,2),(2,2,1)} = 2, K_{(3,2),(1^5)} = f^{(3,2)} = 5
        assert_eq!(enumerate_sst(&SkewShape::straight(part(&[3, 2])), &[2, 2, 1]).len(), 2);
        assert_eq!(enumerate_sst(&SkewShape::straight(part(&[3, 2])), &[1; 5]).len(), 5);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let shape = SkewShape::new(part(&[3, 2, 1]), part(&[1])).unwrap();
        let weight = [2, 2, 1];
        let cells = shape.size() as usize;
        let mut brute = 0;
        let mut word = vec![1u32; cells];
        loop {
            let mut rows = Vec::new();
            let mut it = word.iter();
            for i in 0..shape.rows() {
                rows.push(it.by_ref().take(shape.row_len(i)).copied().collect());
            }
            let mut content = [0u32; 3];
            word.iter().for_each(|&x| content[x as usize - 1] += 1);
            if content == weight && SkewTableau::new(shape.clone(), rows).is_ok() {
                brute += 1;
            }
            let mut i = 0;
            while i < cells && word[i] == 3 {
                word[i] = 1;
                i += 1;
            }
            if i == cells {
                break;
            }
            word[i] += 1;
        }
        let listed = enumerate_sst(&shape, &weight);
        assert_eq!(listed.len(), brute);
        assert!(listed.windows(2).all(|w| w[0].row_word() < w[1].row_word()));
    }

    #[test]
    fn star_embedding() {
        let t = MultiTableau::new(vec![
            SkewTableau::new(SkewShape::straight(part(&[2])), vec![vec![1, 1]]).unwrap(),
            SkewTableau::new(SkewShape::straight(part(&[1])), vec![vec![1]]).unwrap(),
        ])
        .unwrap();
        let s = t.to_skew();
        assert_eq!(s.shape(), &SkewShape::new(part(&[3, 1]), part(&[1])).unwrap());
        assert_eq!(s.rows(), &[vec![1, 1], vec![1]]);
        assert_eq!(MultiTableau::from_skew(&t.shape(), &s).unwrap(), t);
    }

    #[test]
    fn json_round_trip() {
        let t = SkewTableau::new(SkewShape::new(part(&[2, 1]), part(&[1])).unwrap(), vec![vec![2], vec![1]]).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"shape":[2,1],"inner":[1],"rows":[[2],[1]]}"#);
        assert_eq!(serde_json::from_str::<SkewTableau>(&s).unwrap(), t);
        assert!(serde_json::from_str::<SkewTableau>(r#"{"shape":[2],"rows":[[2,1]]}"#).is_err());
        assert!(serde_json::from_str::<SkewTableau>(r#"{"shape":[1,1],"rows":[[1],[1]]}"#).is_err());
    }
}
