use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactalg::{CycRational, Poly, RatFunc, Rational};
use crate::partitions::{enumerate_multipartitions, MultiPartition, Partition};
use crate::symfunc::{mn_character, z_classical, SymExpansion};

/// Element of the group ring Q[C_r], indexed by the exponent of ζ.
pub(crate) type Grp = Vec<Rational>;

pub(crate) fn grp_to_field(g: &Grp, order: u32) -> CycRational {
    let mut acc = CycRational::zero(order);
    for (k, q) in g.iter().enumerate() {
        if !q.is_zero() {
            acc = &acc + &CycRational::zeta_pow(order, k as i64).scale(q);
        }
    }
    acc
}

/// Transition matrices between p_Bν and s_Bλ for one (n, r), indexed by the
/// lex-c enumeration.
pub struct Transition {
    pub(crate) n: u32,
    pub(crate) r: usize,
    pub(crate) labels: Vec<MultiPartition>,
    pub(crate) index: HashMap<MultiPartition, usize>,
    /// Row ν: coefficients of p_Bν over s_Bλ.
    pub(crate) p_to_s: Vec<Vec<Grp>>,
    /// Row λ: coefficients of s_Bλ over p_Bν.
    pub(crate) s_to_p: Vec<Vec<Grp>>,
}

/// Calls `f` once for every assignment of a value in 0..r to each slot.
fn assignments(len: usize, r: usize, f: &mut dyn FnMut(&[usize])) {
    let mut a = vec![0usize; len];
    loop {
        f(&a);
        let mut i = 0;
        while i < len {
            a[i] += 1;
            if a[i] < r {
                break;
            }
            a[i] = 0;
            i += 1;
        }
        if i == len {
            return;
        }
    }
}

fn sorted_partition(mut v: Vec<u32>) -> Partition {
    v.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(v).expect("positive parts")
}

/// Cartesian product of per-component lists.
fn product<T: Clone>(lists: &[Vec<(T, Rational)>]) -> Vec<(Vec<T>, Rational)> {
    let mut acc: Vec<(Vec<T>, Rational)> = vec![(Vec::new(), Rational::one())];
    for list in lists {
        let mut next = Vec::with_capacity(acc.len() * list.len());
        for (prefix, q) in &acc {
            for (x, c) in list {
                let mut p = prefix.clone();
                p.push(x.clone());
                next.push((p, q * c));
            }
        }
        acc = next;
    }
    acc
}

impl Transition {
    pub fn new(n: u32, r: usize) -> Transition {
        let labels = enumerate_multipartitions(n, r);
        let index: HashMap<MultiPartition, usize> = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let dim = labels.len();
        let zero_row = || vec![vec![Rational::zero(); r]; dim];

        let mut p_to_s = Vec::with_capacity(dim);
        for nu in &labels {
            let parts: Vec<(u32, usize)> = nu
                .components()
                .iter()
                .enumerate()
                .flat_map(|(k, p)| p.parts().iter().map(move |&m| (m, k)))
                .collect();
            // distribute each twisted power sum over the colours
            let mut grouped: HashMap<Vec<Partition>, Grp> = HashMap::new();
            assignments(parts.len(), r, &mut |a| {
                let mut per = vec![Vec::new(); r];
                let mut e = 0;
                for (&(m, k), &c) in parts.iter().zip(a) {
                    per[c].push(m);
                    e += k * c;
                }
                let betas: Vec<Partition> = per.into_iter().map(sorted_partition).collect();
                grouped.entry(betas).or_insert_with(|| vec![Rational::zero(); r])[e % r] += Rational::one();
            });
            let mut row = zero_row();
            for (betas, g) in grouped {
                let lists: Vec<Vec<(Partition, Rational)>> = betas
                    .iter()
                    .map(|b| {
                        Partition::all(b.size())
                            .into_iter()
                            .filter_map(|rho| {
                                let x = mn_character(&rho, b).expect("same size");
                                (x != 0).then(|| (rho, Rational::from_integer(x.into())))
                            })
                            .collect()
                    })
                    .collect();
                for (rhos, q) in product(&lists) {
                    let j = index[&MultiPartition::new(rhos).expect("level r")];
                    for (slot, v) in row[j].iter_mut().zip(&g) {
                        *slot += v * &q;
                    }
                }
            }
            p_to_s.push(row);
        }

        let rinv = Rational::new(BigInt::one(), BigInt::from(r));
        let mut s_to_p = Vec::with_capacity(dim);
        for lambda in &labels {
            let lists: Vec<Vec<(Partition, Rational)>> = lambda
                .components()
                .iter()
                .map(|l| {
                    Partition::all(l.size())
                        .into_iter()
                        .filter_map(|beta| {
                            let x = mn_character(l, &beta).expect("same size");
                            (x != 0).then(|| {
                                let q = Rational::new(x.into(), z_classical(&beta));
                                (beta, q)
                            })
                        })
                        .collect()
                })
                .collect();
            let mut row = zero_row();
            for (betas, q) in product(&lists) {
                let parts: Vec<(u32, usize)> = betas
                    .iter()
                    .enumerate()
                    .flat_map(|(c, b)| b.parts().iter().map(move |&m| (m, c)))
                    .collect();
                let mut q = q;
                for _ in 0..parts.len() {
                    q *= &rinv;
                }
                // p_m(x^(c)) = (1/r) Σ_k ζ^{-kc} p^(k)_m
                assignments(parts.len(), r, &mut |a| {
                    let mut per = vec![Vec::new(); r];
                    let mut e = 0;
                    for (&(m, c), &k) in parts.iter().zip(a) {
                        per[k].push(m);
                        e += (r - c) * k;
                    }
                    let nu = MultiPartition::new(per.into_iter().map(sorted_partition).collect()).expect("level r");
                    row[index[&nu]][e % r] += &q;
                });
            }
            s_to_p.push(row);
        }

        Transition { n, r, labels, index, p_to_s, s_to_p }
    }

    pub fn labels(&self) -> &[MultiPartition] {
        &self.labels
    }

    pub fn order(&self) -> u32 {
        self.r as u32
    }

    /// p_Bν in the multi-Schur basis.
    pub fn p_in_schur(&self, nu: &MultiPartition) -> SymExpansion {
        expansion(&self.labels, &self.p_to_s[self.index[nu]], self.n, self.r)
    }

    /// s_Bλ in the p basis, labels read as p-labels.
    pub fn schur_in_p(&self, lambda: &MultiPartition) -> SymExpansion {
        expansion(&self.labels, &self.s_to_p[self.index[lambda]], self.n, self.r)
    }
}

fn expansion(labels: &[MultiPartition], row: &[Grp], n: u32, r: usize) -> SymExpansion {
    let mut e = SymExpansion::zero(r, n, r as u32);
    for (l, g) in labels.iter().zip(row) {
        let c = grp_to_field(g, r as u32);
        if !c.is_zero() {
            e.add_term(l.clone(), RatFunc::constant(c)).expect("matching label");
        }
    }
    e
}

/// z_Bλ(t) = Π_k r^{m_k} z_{λ(k)} Π_j (1 - ζ^{k-1} t^{λ(k)_j})^{-1}.
pub fn z_multi(lambda: &MultiPartition) -> RatFunc {
    let r = lambda.level();
    let order = r as u32;
    let mut z = BigInt::one();
    let mut den = Poly::one(order);
    for (k, p) in lambda.components().iter().enumerate() {
        z *= z_classical(p) * BigInt::from(r).pow(p.len() as u32);
        for &m in p.parts() {
            let f = &Poly::one(order) - &Poly::monomial(CycRational::zeta_pow(order, k as i64), m as usize);
            den = &den * &f;
        }
    }
    RatFunc::new(Poly::constant(CycRational::from_rational(order, z.into())), den).expect("nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::multi;

    #[test]
    fn z_examples() {
        let one = Poly::one(1);
        let expect = RatFunc::new(one.clone(), &one - &Poly::t_pow(1, 1)).unwrap();
        assert_eq!(z_multi(&multi(&[&[1]])), expect);
        let o2 = Poly::one(2);
        let expect = RatFunc::new(Poly::from_ints(2, &[2]), &o2 - &Poly::t_pow(2, 1)).unwrap();
        assert_eq!(z_multi(&multi(&[&[1], &[]])), expect);
        let expect = RatFunc::new(Poly::from_ints(2, &[2]), Poly::from_ints(2, &[1, 1])).unwrap();
        assert_eq!(z_multi(&multi(&[&[], &[1]])), expect);
    }

    #[test]
    fn p_expansions() {
        let t = Transition::new(1, 2);
        let a = t.p_in_schur(&multi(&[&[1], &[]]));
        assert!(a.coeff(&multi(&[&[1], &[]])).is_one());
        assert!(a.coeff(&multi(&[&[], &[1]])).is_one());
        let b = t.p_in_schur(&multi(&[&[], &[1]]));
        assert!(b.coeff(&multi(&[&[1], &[]])).is_one());
        assert_eq!(b.coeff(&multi(&[&[], &[1]])), RatFunc::from_int(2, -1));
        let t1 = Transition::new(1, 1);
        assert!(t1.p_in_schur(&multi(&[&[1]])).coeff(&multi(&[&[1]])).is_one());
    }

    #[test]
    fn transitions_are_inverse() {
        for r in 1..=3usize {
            for n in 0..=3u32 {
                let t = Transition::new(n, r);
                let dim = t.labels.len();
                for i in 0..dim {
                    for j in 0..dim {
                        let mut acc = CycRational::zero(r as u32);
                        for k in 0..dim {
                            let a = grp_to_field(&t.s_to_p[i][k], r as u32);
                            let b = grp_to_field(&t.p_to_s[k][j], r as u32);
                            acc = &acc + &(&a * &b);
                        }
                        let expect = if i == j { CycRational::one(r as u32) } else { CycRational::zero(r as u32) };
                        assert_eq!(acc, expect, "n={n} r={r} {i} {j}");
                    }
                }
            }
        }
    }
}
