use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::multipartition::MultiPartition;
use super::partition::Partition;
use crate::error::{Error, Result};

/// Linear extensions of the dominance order on interleaved compositions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TotalOrder {
    /// Lexicographic on c(Bλ): larger at the first differing index wins.
    #[default]
    LexC,
    /// Co-lexicographic on c(Bλ): smaller at the last differing index wins.
    LexCReversed,
}

impl TotalOrder {
    pub const ALL: [TotalOrder; 2] = [TotalOrder::LexC, TotalOrder::LexCReversed];

    pub fn name(self) -> &'static str {
        match self {
            TotalOrder::LexC => "lex-c",
            TotalOrder::LexCReversed => "lex-c-reversed",
        }
    }

    /// Compares `lambda` against `mu`; `Greater` means `lambda` ranks higher.
    pub fn cmp(self, lambda: &MultiPartition, mu: &MultiPartition) -> Result<Ordering> {
        if lambda.level() != mu.level() {
            return Err(Error::LevelMismatch(lambda.level(), mu.level()));
        }
        if lambda.size() != mu.size() {
            return Err(Error::SizeMismatch(lambda.size() as u64, mu.size() as u64));
        }
        let m = lambda.max_len().max(mu.max_len());
        let a = lambda.composition_c(m)?;
        let b = mu.composition_c(m)?;
        Ok(match self {
            TotalOrder::LexC => a.entries().cmp(b.entries()),
            TotalOrder::LexCReversed => {
                let diff = a.entries().iter().zip(b.entries()).rev().find(|(x, y)| x != y);
                match diff {
                    None => Ordering::Equal,
                    Some((x, y)) => y.cmp(x),
                }
            }
        })
    }
}

impl fmt::Display for TotalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TotalOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex-c" => Ok(TotalOrder::LexC),
            "lex-c-reversed" => Ok(TotalOrder::LexCReversed),
            other => Err(Error::Parse(format!("unknown order {other:?}"))),
        }
    }
}

/// The default total order.
pub fn total_order_cmp(lambda: &MultiPartition, mu: &MultiPartition) -> Result<Ordering> {
    TotalOrder::LexC.cmp(lambda, mu)
}

/// All r-multipartitions of n, highest first under the default order.
pub fn enumerate_multipartitions(n: u32, r: usize) -> Vec<MultiPartition> {
    enumerate_multipartitions_in(n, r, TotalOrder::LexC)
}

/// All r-multipartitions of n, highest first under `order`.
pub fn enumerate_multipartitions_in(n: u32, r: usize, order: TotalOrder) -> Vec<MultiPartition> {
    assert!(r >= 1, "level must be at least one");
    let by_size: Vec<Vec<Partition>> = (0..=n).map(Partition::all).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    build(n, r, &by_size, &mut cur, &mut out);
    out.sort_by(|a, b| order.cmp(b, a).expect("same n and r"));
    out
}

fn build(
    rem: u32,
    slots: usize,
    by_size: &[Vec<Partition>],
    cur: &mut Vec<Partition>,
    out: &mut Vec<MultiPartition>,
) {
    if slots == 1 {
        for p in &by_size[rem as usize] {
            cur.push(p.clone());
            out.push(MultiPartition::new(cur.clone()).expect("nonempty"));
            cur.pop();
        }
        return;
    }
    for k in (0..=rem).rev() {
        for p in &by_size[k as usize] {
            cur.push(p.clone());
            build(rem - k, slots - 1, by_size, cur, out);
            cur.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{multi, multi_partial_le};

    #[test]
    fn examples() {
        assert_eq!(
            total_order_cmp(&multi(&[&[1], &[1]]), &multi(&[&[], &[2]])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            total_order_cmp(&multi(&[&[2], &[]]), &multi(&[&[1, 1], &[]])).unwrap(),
            Ordering::Greater
        );
        let x = multi(&[&[2, 1], &[1]]);
        assert_eq!(total_order_cmp(&x, &x).unwrap(), Ordering::Equal);
    }

    #[test]
    fn counts() {
        assert_eq!(
            enumerate_multipartitions(1, 2),
            vec![multi(&[&[1], &[]]), multi(&[&[], &[1]])]
        );
        assert_eq!(enumerate_multipartitions(2, 2).len(), 5);
        assert_eq!(enumerate_multipartitions(4, 1).len(), 5);
        assert_eq!(enumerate_multipartitions(0, 3), vec![MultiPartition::empty(3)]);
        assert_eq!(enumerate_multipartitions(3, 3).len(), 22);
        assert_eq!(enumerate_multipartitions(4, 3).len(), 51);
    }

    #[test]
    fn both_orders_extend_dominance() {
        for order in TotalOrder::ALL {
            for r in 1..=3 {
                for n in 0..=4 {
                    let all = enumerate_multipartitions_in(n, r, order);
                    for (i, a) in all.iter().enumerate() {
                        for b in &all[i + 1..] {
                            assert_eq!(order.cmp(a, b).unwrap(), Ordering::Greater);
                            assert!(!multi_partial_le(a, b).unwrap() || a == b, "{order} {a} {b}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!("lex-c".parse::<TotalOrder>().unwrap(), TotalOrder::LexC);
        assert_eq!("lex-c-reversed".parse::<TotalOrder>().unwrap(), TotalOrder::LexCReversed);
        assert!("lex".parse::<TotalOrder>().is_err());
    }
}
