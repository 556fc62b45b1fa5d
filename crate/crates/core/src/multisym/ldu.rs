use rayon::prelude::*;

use crate::error::Error;
use crate::exactalg::RatFunc;

/// M = L·diag(D)·U with L unit lower and U unit upper triangular.
#[derive(Clone, Debug)]
pub struct Ldu {
    pub lower: Vec<Vec<RatFunc>>,
    pub pivots: Vec<RatFunc>,
    pub upper: Vec<Vec<RatFunc>>,
}

/// Gaussian elimination without pivot search. A vanishing pivot is reported
/// with the offending row index.
pub fn ldu(m: &[Vec<RatFunc>]) -> std::result::Result<Ldu, usize> {
    let dim = m.len();
    let order = m.first().and_then(|r| r.first()).map_or(1, RatFunc::order);
    let mut work: Vec<Vec<RatFunc>> = m.to_vec();
    let mut lower = vec![vec![RatFunc::zero(order); dim]; dim];
    let mut upper = vec![vec![RatFunc::zero(order); dim]; dim];
    let mut pivots = Vec::with_capacity(dim);
    for k in 0..dim {
        let piv = work[k][k].clone();
        if piv.is_zero() {
            return Err(k);
        }
        let pinv = piv.inv().expect("nonzero pivot");
        lower[k][k] = RatFunc::one(order);
        upper[k][k] = RatFunc::one(order);
        for j in k + 1..dim {
            upper[k][j] = &work[k][j] * &pinv;
        }
        for i in k + 1..dim {
            lower[i][k] = &work[i][k] * &pinv;
        }
        let pivot_row: Vec<RatFunc> = work[k].clone();
        let (_, rest) = work.split_at_mut(k + 1);
        rest.par_iter_mut().enumerate().for_each(|(off, row)| {
            let i = k + 1 + off;
            let f = &lower[i][k];
            if f.is_zero() {
                return;
            }
            for j in k + 1..dim {
                if !pivot_row[j].is_zero() {
                    row[j] = &row[j] - &(f * &pivot_row[j]);
                }
            }
        });
        pivots.push(piv);
    }
    Ok(Ldu { lower, pivots, upper })
}

/// Inverse of a unit lower triangular matrix.
pub fn invert_unit_lower(l: &[Vec<RatFunc>]) -> Vec<Vec<RatFunc>> {
    let dim = l.len();
    let order = l.first().and_then(|r| r.first()).map_or(1, RatFunc::order);
    // column j of the inverse solves L x = e_j by forward substitution
    let cols: Vec<Vec<RatFunc>> = (0..dim)
        .into_par_iter()
        .map(|j| {
            let mut x = vec![RatFunc::zero(order); dim];
            x[j] = RatFunc::one(order);
            for i in j + 1..dim {
                let mut s = RatFunc::zero(order);
                for k in j..i {
                    if !l[i][k].is_zero() && !x[k].is_zero() {
                        s = &s + &(&l[i][k] * &x[k]);
                    }
                }
                x[i] = -&s;
            }
            x
        })
        .collect();
    (0..dim).map(|i| (0..dim).map(|j| cols[j][i].clone()).collect()).collect()
}

pub(crate) fn transpose(m: &[Vec<RatFunc>]) -> Vec<Vec<RatFunc>> {
    let dim = m.len();
    (0..dim).map(|i| (0..dim).map(|j| m[j][i].clone()).collect()).collect()
}

pub(crate) fn conj(m: &[Vec<RatFunc>]) -> Vec<Vec<RatFunc>> {
    m.iter().map(|row| row.iter().map(RatFunc::conj).collect()).collect()
}

pub(crate) fn reversed(m: &[Vec<RatFunc>]) -> Vec<Vec<RatFunc>> {
    m.iter().rev().map(|row| row.iter().rev().cloned().collect()).collect()
}

pub(crate) fn degenerate(label: &impl std::fmt::Display) -> Error {
    Error::DegenerateGram(label.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Poly;

    fn rf(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(Poly::from_ints(1, c))
    }

    #[test]
    fn identity_is_fixed() {
        let m = vec![vec![rf(&[1]), rf(&[])], vec![rf(&[]), rf(&[1])]];
        let f = ldu(&m).unwrap();
        assert_eq!(f.lower, m);
        assert_eq!(f.upper, m);
        assert!(f.pivots.iter().all(RatFunc::is_one));
    }

    #[test]
    fn reconstructs() {
        let m = vec![
            vec![rf(&[2]), rf(&[0, 1]), rf(&[1])],
            vec![rf(&[1, 1]), rf(&[3]), rf(&[0, 0, 1])],
            vec![rf(&[1]), rf(&[2, 1]), rf(&[5])],
        ];
        let f = ldu(&m).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut s = RatFunc::zero(1);
                for k in 0..3 {
                    s = &s + &(&(&f.lower[i][k] * &f.pivots[k]) * &f.upper[k][j]);
                }
                assert_eq!(s, m[i][j]);
            }
        }
        let inv = invert_unit_lower(&f.lower);
        for i in 0..3 {
            for j in 0..3 {
                let mut s = RatFunc::zero(1);
                for k in 0..3 {
                    s = &s + &(&f.lower[i][k] * &inv[k][j]);
                }
                assert_eq!(s.is_one(), i == j);
                assert_eq!(s.is_zero(), i != j);
            }
        }
    }

    #[test]
    fn zero_pivot() {
        let m = vec![vec![rf(&[]), rf(&[1])], vec![rf(&[1]), rf(&[])]];
        assert_eq!(ldu(&m).unwrap_err(), 0);
    }
}
