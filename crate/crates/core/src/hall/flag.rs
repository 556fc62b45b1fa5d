use crate::error::{Error, Result};
use crate::partitions::Partition;

/// One counting problem: flags 0 = W_0 ⊂ W_1 ⊂ ⋯ ⊂ W_r = F_q^n stable under a
/// unipotent x of Jordan type ξ, with x acting on W_i / W_{i-1} with Jordan
/// type `quotients[i-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagCountInstance {
    pub q: u32,
    pub xi: Partition,
    pub quotients: Vec<Partition>,
}

/// Largest dimension the brute-force count accepts.
pub const MAX_FLAG_DIM: u32 = 4;

type Vector = Vec<u32>;

struct Field {
    q: u32,
}

impl Field {
    fn inv(&self, a: u32) -> u32 {
        (1..self.q).find(|&b| a * b % self.q == 1).expect("prime field")
    }

    /// Row echelon basis of the span; the length is the rank.
    fn echelon(&self, vs: &[Vector]) -> Vec<Vector> {
        let mut rows: Vec<Vector> = vs.to_vec();
        let n = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
            rows.swap(rank, p);
            let inv = self.inv(rows[rank][col]);
            for x in rows[rank].iter_mut() {
                *x = *x * inv % self.q;
            }
            for i in 0..rows.len() {
                if i != rank && rows[i][col] != 0 {
                    let f = rows[i][col];
                    for j in 0..n {
                        rows[i][j] = (rows[i][j] + self.q * self.q - f * rows[rank][j]) % self.q;
                    }
                }
            }
            rank += 1;
        }
        rows.truncate(rank);
        rows
    }

    fn rank(&self, vs: &[Vector]) -> usize {
        self.echelon(vs).len()
    }
}

/// All k-dimensional subspaces of F_q^n in reduced echelon form.
fn subspaces(field: &Field, n: usize, k: usize) -> Vec<Vec<Vector>> {
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(k);
    choose_pivots(field, n, k, 0, &mut pivots, &mut out);
    out
}

fn choose_pivots(field: &Field, n: usize, k: usize, from: usize, pivots: &mut Vec<usize>, out: &mut Vec<Vec<Vector>>) {
    if pivots.len() == k {
        // free slots: row j, column c > pivots[j] with c not a pivot
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|j| (pivots[j] + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (j, c)))
            .collect();
        let total = (field.q as usize).pow(free.len() as u32);
        for code in 0..total {
            let mut rows = vec![vec![0u32; n]; k];
            for (j, &p) in pivots.iter().enumerate() {
                rows[j][p] = 1;
            }
            let mut c = code;
            for &(j, col) in &free {
                rows[j][col] = (c % field.q as usize) as u32;
                c /= field.q as usize;
            }
            out.push(rows);
        }
        return;
    }
    for p in from..n {
        pivots.push(p);
        choose_pivots(field, n, k, p + 1, pivots, out);
        pivots.pop();
    }
}

/// Nilpotent part x - 1 in Jordan form of type ξ.
fn nilpotent(xi: &Partition) -> impl Fn(&Vector) -> Vector + '_ {
    move |v: &Vector| {
        let mut out = vec![0u32; v.len()];
        let mut start = 0;
        for &b in xi.parts() {
            for k in 1..b as usize {
                out[start + k - 1] = v[start + k];
            }
            start += b as usize;
        }
        out
    }
}

fn quotient_type(field: &Field, n_map: &dyn Fn(&Vector) -> Vector, w: &[Vector], u: &[Vector]) -> Partition {
    let du = u.len();
    // ranks of N^k on W/U
    let mut ranks = vec![w.len() - du];
    let mut image: Vec<Vector> = w.to_vec();
    while *ranks.last().expect("nonempty") > 0 {
        image = image.iter().map(n_map).collect();
        let mut span = image.clone();
        span.extend_from_slice(u);
        ranks.push(field.rank(&span) - du);
    }
    let columns: Vec<u32> = ranks.windows(2).map(|p| (p[0] - p[1]) as u32).collect();
    Partition::new(columns).expect("rank drops decrease").transpose()
}

/// Exhaustive count over F_q.
pub fn flag_count(inst: &FlagCountInstance) -> Result<u64> {
    let n = inst.xi.size();
    let total: u32 = inst.quotients.iter().map(Partition::size).sum();
    if total != n {
        return Err(Error::SizeMismatch(total as u64, n as u64));
    }
    if !matches!(inst.q, 2 | 3) || n > MAX_FLAG_DIM {
        return Err(Error::OracleScale(format!("q={}, n={n} (supported: q in {{2,3}}, n <= {MAX_FLAG_DIM})", inst.q)));
    }
    let field = Field { q: inst.q };
    let n = n as usize;
    let n_map = nilpotent(&inst.xi);
    let stable: Vec<Vec<Vec<Vector>>> = (0..=n)
        .map(|k| {
            subspaces(&field, n, k)
                .into_iter()
                .filter(|w| {
                    w.iter().all(|v| {
                        let mut span = w.clone();
                        span.push(n_map(v));
                        field.rank(&span) == k
                    })
                })
                .collect()
        })
        .collect();
    let mut count = 0u64;
    extend(&field, &n_map, &stable, &inst.quotients, &[], &mut count);
    Ok(count)
}

fn extend(
    field: &Field,
    n_map: &dyn Fn(&Vector) -> Vector,
    stable: &[Vec<Vec<Vector>>],
    quotients: &[Partition],
    below: &[Vector],
    count: &mut u64,
) {
    let Some((nu, rest)) = quotients.split_first() else {
        *count += 1;
        return;
    };
    let dim = below.len() + nu.size() as usize;
    for w in &stable[dim] {
        let mut span = w.clone();
        span.extend_from_slice(below);
        if field.rank(&span) != dim {
            continue;
        }
        if quotient_type(field, n_map, w, below) == *nu {
            extend(field, n_map, stable, rest, w, count);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;

    fn inst(q: u32, xi: &[u32], quotients: &[&[u32]]) -> FlagCountInstance {
        FlagCountInstance { q, xi: part(xi), quotients: quotients.iter().map(|p| part(p)).collect() }
    }

    #[test]
    fn small_counts() {
        assert_eq!(flag_count(&inst(2, &[1, 1], &[&[1], &[1]])).unwrap(), 3);
        assert_eq!(flag_count(&inst(2, &[2], &[&[1], &[1]])).unwrap(), 1);
        assert_eq!(flag_count(&inst(3, &[2, 1], &[&[2, 1]])).unwrap(), 1);
        assert_eq!(flag_count(&inst(3, &[1, 1], &[&[1], &[1]])).unwrap(), 4);
    }

    #[test]
    fn subspace_counts_are_gaussian_binomials() {
        let f = Field { q: 2 };
        assert_eq!(subspaces(&f, 4, 2).len(), 35);
        let f = Field { q: 3 };
        assert_eq!(subspaces(&f, 3, 1).len(), 13);
    }

    #[test]
    fn oversize_rejected() {
        assert!(matches!(flag_count(&inst(5, &[1], &[&[1]])), Err(Error::OracleScale(_))));
        assert!(matches!(flag_count(&inst(2, &[5], &[&[5]])), Err(Error::OracleScale(_))));
    }
}
