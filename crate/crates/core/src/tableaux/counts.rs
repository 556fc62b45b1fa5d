use num_bigint::BigInt;

use super::jdt::rectify;
use super::shape::{star_all, SkewShape};
use super::tableau::{enumerate_sst, enumerate_sst_multi, MultiTableau, SkewTableau};
use super::word::{is_lattice, tableau_charge, word};
use crate::error::{Error, Result};
use crate::exactalg::{CycRational, Poly, RatFunc};
use crate::partitions::{MultiPartition, Partition};

/// What a tableau tuple maps to: the rectified tableau S of shape ν and
/// whether the star-shaped filling has a lattice reading word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theta {
    pub nu: Partition,
    pub rectified: SkewTableau,
    pub lattice: bool,
    pub charge: u64,
}

pub fn theta(t: &MultiTableau) -> Result<Theta> {
    let skew = t.to_skew();
    let rectified = rectify(&skew);
    let charge = tableau_charge(&rectified)?;
    Ok(Theta { nu: rectified.shape().outer().clone(), lattice: is_lattice(&word(&skew)), rectified, charge })
}

/// Number of fillings of the star shape with weight ν and lattice word.
pub fn sst0_count(shape: &MultiPartition, nu: &Partition) -> u64 {
    enumerate_sst(&star_all(shape.components()), nu.parts())
        .iter()
        .filter(|t| is_lattice(&word(t)))
        .count() as u64
}

fn charge_poly(charges: impl Iterator<Item = u64>, step: usize) -> Poly {
    let mut coeffs: Vec<i64> = Vec::new();
    for c in charges {
        let e = c as usize * step;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, 0);
        }
        coeffs[e] += 1;
    }
    Poly::from_ints(1, &coeffs)
}

/// Σ_{S ∈ SST(λ, μ)} t^{c(S)}.
pub fn ls_kostka_via_charge(lambda: &Partition, mu: &Partition) -> Result<Poly> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size() as u64, mu.size() as u64));
    }
    let tabs = enumerate_sst(&SkewShape::straight(lambda.clone()), mu.parts());
    let charges = tabs.iter().map(tableau_charge).collect::<Result<Vec<_>>>()?;
    Ok(charge_poly(charges.into_iter(), 1))
}

/// t^{b(μ) - b(λ)} Σ_{T ∈ SST(λ, ξ)} t^{r c(T)} with μ = (∅, …, ∅, ξ).
pub fn thm314_rhs(lambda: &MultiPartition, xi: &Partition) -> Result<RatFunc> {
    if lambda.size() != xi.size() {
        return Err(Error::SizeMismatch(lambda.size() as u64, xi.size() as u64));
    }
    let r = lambda.level();
    let mu = MultiPartition::concentrated_last(r, xi.clone());
    let charges = enumerate_sst_multi(lambda, xi.parts())
        .iter()
        .map(|t| theta(t).map(|th| th.charge))
        .collect::<Result<Vec<_>>>()?;
    let sum = charge_poly(charges.into_iter(), r);
    let shift = mu.b_stat() as i64 - lambda.b_stat() as i64;
    Ok(RatFunc::from_poly(sum).mul_t_pow(shift))
}

/// |SST(λ, ξ)|.
pub fn sst_count(lambda: &MultiPartition, weight: &[u32]) -> BigInt {
    BigInt::from(enumerate_sst_multi(lambda, weight).len())
}

/// Value at t = 1 of a function of order one.
pub fn at_one(f: &RatFunc) -> Result<CycRational> {
    f.eval(&CycRational::one(f.order()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{multi, part};

    #[test]
    fn theta_on_two_cells() {
        let shape = multi(&[&[1], &[1]]);
        let mut seen: Vec<(Partition, u64, bool)> = enumerate_sst_multi(&shape, &[1, 1])
            .iter()
            .map(|t| {
                let th = theta(t).unwrap();
                (th.nu, th.charge, th.lattice)
            })
            .collect();
        seen.sort();
        assert_eq!(seen, vec![(part(&[1, 1]), 0, true), (part(&[2]), 1, false)]);
    }

    #[test]
    fn lattice_counts() {
        let shape = multi(&[&[1], &[1]]);
        assert_eq!(sst0_count(&shape, &part(&[2])), 1);
        assert_eq!(sst0_count(&shape, &part(&[1, 1])), 1);
        assert_eq!(sst0_count(&multi(&[&[2, 1], &[]]), &part(&[3])), 0);
        assert_eq!(sst0_count(&multi(&[&[2, 1], &[]]), &part(&[2, 1])), 1);
    }

    #[test]
    fn charge_kostka_examples() {
        assert_eq!(ls_kostka_via_charge(&part(&[2]), &part(&[1, 1])).unwrap(), Poly::from_ints(1, &[0, 1]));
        assert_eq!(ls_kostka_via_charge(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap(), Poly::from_ints(1, &[0, 1, 1]));
        for l in Partition::all(4) {
            assert!(ls_kostka_via_charge(&l, &l).unwrap().is_one());
        }
    }

    #[test]
    fn rhs_examples() {
        let lam = multi(&[&[1], &[1]]);
        let a = thm314_rhs(&lam, &part(&[1, 1])).unwrap();
        assert_eq!(a, RatFunc::from_poly(Poly::from_ints(1, &[0, 1, 0, 1])));
        let b = thm314_rhs(&lam, &part(&[2])).unwrap();
        assert_eq!(b, RatFunc::from_poly(Poly::from_ints(1, &[0, 1])));
        let mu = multi(&[&[], &[2, 1]]);
        assert!(thm314_rhs(&mu, &part(&[2, 1])).unwrap().is_one());
    }
}
