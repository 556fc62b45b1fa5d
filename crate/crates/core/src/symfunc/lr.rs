use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactalg::{CycRational, RatFunc};
use crate::partitions::{MultiPartition, Partition};

use super::SymExpansion;

/// Littlewood-Richardson expansion s_μ · s_ν = Σ c^λ_{μν} s_λ.
pub fn lr_product(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    let base: Vec<Vec<u32>> = (0..mu.len()).map(|_| Vec::new()).collect();
    grow(mu.parts().to_vec(), base, nu.parts(), 1, &mut out);
    out
}

/// Adds a horizontal strip of `nu[0]` cells labelled `label`, recursing on
/// the remaining rows of `nu`. `fill[i]` holds the labels placed in row i.
fn grow(
    shape: Vec<u32>,
    fill: Vec<Vec<u32>>,
    nu: &[u32],
    label: u32,
    out: &mut BTreeMap<Partition, u64>,
) {
    let Some((&k, rest)) = nu.split_first() else {
        if is_lattice_reading(&fill) {
            *out.entry(Partition::new(shape).expect("shape")).or_insert(0) += 1;
        }
        return;
    };
    let rows = shape.len() + 1;
    let mut adds = vec![0u32; rows];
    strips(&shape, 0, k, &mut adds, &mut |adds| {
        let mut s = shape.clone();
        s.push(0);
        let mut f = fill.clone();
        f.push(Vec::new());
        for (i, &a) in adds.iter().enumerate() {
            s[i] += a;
            f[i].extend(std::iter::repeat_n(label, a as usize));
        }
        while s.last() == Some(&0) {
            s.pop();
            f.pop();
        }
        grow(s, f, rest, label + 1, out);
    });
}

fn strips(shape: &[u32], row: usize, rem: u32, adds: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if row == adds.len() {
        if rem == 0 {
            f(adds);
        }
        return;
    }
    let cur = shape.get(row).copied().unwrap_or(0);
    let cap = if row == 0 { rem } else { shape[row - 1] - cur };
    for a in 0..=cap.min(rem) {
        adds[row] = a;
        strips(shape, row + 1, rem - a, adds, f);
    }
    adds[row] = 0;
}

fn is_lattice_reading(fill: &[Vec<u32>]) -> bool {
    let mut counts: Vec<u32> = Vec::new();
    for row in fill {
        for &x in row.iter().rev() {
            let i = x as usize;
            if counts.len() < i {
                counts.resize(i, 0);
            }
            counts[i - 1] += 1;
            if i > 1 && counts[i - 1] > counts[i - 2] {
                return false;
            }
        }
    }
    true
}

/// Product of two level-one expansions in the Schur basis.
pub fn schur_product(f: &SymExpansion, g: &SymExpansion) -> Result<SymExpansion> {
    if f.level() != 1 || g.level() != 1 {
        return Err(Error::LevelMismatch(1, f.level().max(g.level())));
    }
    if f.order() != g.order() {
        return Err(Error::OrderMismatch(f.order(), g.order()));
    }
    let order = f.order();
    let mut out = SymExpansion::zero(1, f.degree() + g.degree(), order);
    for (a, ca) in f.terms() {
        for (b, cb) in g.terms() {
            let c = ca * cb;
            for (lambda, m) in lr_product(a.component(0), b.component(0)) {
                let k = RatFunc::constant(CycRational::from_int(order, m as i64));
                out.add_term(MultiPartition::from(lambda), &c * &k)?;
            }
        }
    }
    Ok(out)
}

/// Coefficient of s_η in s_{ν(1)} ⋯ s_{ν(k)}; zero when sizes disagree.
pub fn lr_coeff(eta: &Partition, factors: &[Partition]) -> u64 {
    if factors.iter().map(|p| p.size() as u64).sum::<u64>() != eta.size() as u64 {
        return 0;
    }
    let mut acc: BTreeMap<Partition, u64> = BTreeMap::from([(Partition::empty(), 1)]);
    for nu in factors {
        let mut next = BTreeMap::new();
        for (lambda, c) in &acc {
            for (kappa, m) in lr_product(lambda, nu) {
                if eta.contains(&kappa) {
                    *next.entry(kappa).or_insert(0) += c * m;
                }
            }
        }
        acc = next;
    }
    acc.get(eta).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;
    use crate::symfunc::mn_character;
    use crate::symfunc::z_classical;
    use num_rational::BigRational;

    fn s1(p: &[u32]) -> SymExpansion {
        SymExpansion::schur(MultiPartition::from(part(p)), 1)
    }

    #[test]
    fn pieri_examples() {
        let p = schur_product(&s1(&[1]), &s1(&[1])).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.coeff(&part(&[2]).into()).is_one());
        assert!(p.coeff(&part(&[1, 1]).into()).is_one());
        let p3 = schur_product(&p, &s1(&[1])).unwrap();
        assert_eq!(p3.coeff(&part(&[2, 1]).into()), RatFunc::from_int(1, 2));
        let id = schur_product(&s1(&[2, 1]), &s1(&[])).unwrap();
        assert_eq!(id, s1(&[2, 1]));
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(lr_coeff(&part(&[2, 1]), &[part(&[1, 1]), part(&[1])]), 1);
        assert_eq!(lr_coeff(&part(&[2]), &[part(&[1]), part(&[1])]), 1);
        assert_eq!(lr_coeff(&part(&[2, 1]), &[part(&[1]), part(&[1]), part(&[1])]), 2);
        assert_eq!(lr_coeff(&part(&[3, 2, 1]), &[part(&[2, 1]), part(&[2, 1])]), 2);
        assert_eq!(lr_coeff(&part(&[2]), &[part(&[1])]), 0);
    }

    // <s_μ s_ν, s_λ> = Σ_ρ χ^λ(ρ) [χ^μ χ^ν induced](ρ) / z_ρ, computed by
    // summing over pairs of cycle types whose union is ρ.
    fn character_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigRational {
        let mut s = BigRational::from_integer(0.into());
        for a in Partition::all(mu.size()) {
            for b in Partition::all(nu.size()) {
                let mut parts: Vec<u32> = a.parts().iter().chain(b.parts()).copied().collect();
                parts.sort_unstable_by(|x, y| y.cmp(x));
                let rho = Partition::new(parts).unwrap();
                let v = mn_character(mu, &a).unwrap() * mn_character(nu, &b).unwrap() * mn_character(lambda, &rho).unwrap();
                s += BigRational::new(v.into(), z_classical(&a) * z_classical(&b));
            }
        }
        s
    }

    #[test]
    fn agrees_with_character_formula() {
        for n in 0..=6u32 {
            for k in 0..=n {
                for mu in Partition::all(k) {
                    for nu in Partition::all(n - k) {
                        let prod = lr_product(&mu, &nu);
                        for lambda in Partition::all(n) {
                            let c = prod.get(&lambda).copied().unwrap_or(0);
                            let expect = character_lr(&lambda, &mu, &nu);
                            assert_eq!(BigRational::from_integer(c.into()), expect, "{lambda} {mu} {nu}");
                        }
                    }
                }
            }
        }
    }
}
