//! Products of Hall-Littlewood functions, Hall polynomials, and a
//! finite-field count of stable flags to check them against.

mod flag;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

pub use flag::{flag_count, FlagCountInstance, MAX_FLAG_DIM};

use crate::error::{Error, Result};
use crate::exactalg::{Poly, RatFunc, Substitution};
use crate::multisym::{ic_minus_candidate, kostka_table, EngineConfig, Sign};
use crate::partitions::{enumerate_multipartitions, MultiPartition, Partition};
use crate::symfunc::{classical_hl, classical_kostka, classical_kostka_modified, lr_coeff, schur_product, SymExpansion};

type Product = Arc<BTreeMap<Partition, Poly>>;

fn product_cache() -> &'static Mutex<HashMap<Vec<Partition>, Product>> {
    static CACHE: std::sync::OnceLock<Mutex<HashMap<Vec<Partition>, Product>>> = std::sync::OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// P_ν(1) ⋯ P_ν(r) in the P basis.
pub fn hl_product(factors: &[Partition]) -> Result<Product> {
    if let Some(p) = product_cache().lock().expect("cache").get(factors) {
        return Ok(p.clone());
    }
    let mut acc = SymExpansion::schur(MultiPartition::from(Partition::empty()), 1);
    for nu in factors {
        acc = schur_product(&acc, &classical_hl(nu)?)?;
    }
    // s_λ = Σ_ξ K_{λξ}(t) P_ξ
    let mut out: BTreeMap<Partition, RatFunc> = BTreeMap::new();
    for (label, c) in acc.terms() {
        let lambda = label.component(0);
        for xi in Partition::all(lambda.size()) {
            let k = classical_kostka(lambda, &xi)?;
            if !k.is_zero() {
                let slot = out.entry(xi).or_insert_with(|| RatFunc::zero(1));
                *slot = &*slot + &(c * &RatFunc::from_poly(k));
            }
        }
    }
    let out: BTreeMap<Partition, Poly> = out
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(xi, v)| {
            let p = v.poly_extract().ok_or_else(|| Error::NonPolynomialHall(format!("f^{xi}_{factors:?} = {v}")))?;
            Ok((xi, p))
        })
        .collect::<Result<_>>()?;
    let out = Arc::new(out);
    product_cache().lock().expect("cache").insert(factors.to_vec(), out.clone());
    Ok(out)
}

fn check_sizes(factors: &[Partition], xi: &Partition) -> Result<()> {
    let total: u64 = factors.iter().map(|p| p.size() as u64).sum();
    if total != xi.size() as u64 {
        return Err(Error::SizeMismatch(total, xi.size() as u64));
    }
    Ok(())
}

/// f^ξ_{ν(1),…,ν(r)}(t): the coefficient of P_ξ in P_ν(1) ⋯ P_ν(r).
pub fn f_coeff(factors: &[Partition], xi: &Partition) -> Result<Poly> {
    check_sizes(factors, xi)?;
    Ok(hl_product(factors)?.get(xi).cloned().unwrap_or_else(|| Poly::zero(1)))
}

/// g^ξ_ν(t) = t^{n(ξ) - Σ n(ν(i))} f^ξ_ν(1/t).
pub fn hall_g(factors: &[Partition], xi: &Partition) -> Result<Poly> {
    let f = f_coeff(factors, xi)?;
    let shift = xi.n_stat() as i64 - factors.iter().map(|p| p.n_stat() as i64).sum::<i64>();
    let g = RatFunc::from_poly(f).substitute(Substitution::InversePow(1)).mul_t_pow(shift);
    g.poly_extract().ok_or_else(|| Error::NonPolynomialHall(format!("g^{xi}_{factors:?} = {g}")))
}

/// Multipartitions with the given component sizes.
fn with_sizes(sizes: &[u32]) -> Vec<MultiPartition> {
    let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
    for &s in sizes {
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                Partition::all(s).into_iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p);
                    v
                })
            })
            .collect();
    }
    acc.into_iter().map(|v| MultiPartition::new(v).expect("nonempty")).collect()
}

fn poly_at_pow(p: &Poly, r: usize) -> RatFunc {
    RatFunc::from_poly(p.compose_pow(r))
}

fn concentrated(lambda: &MultiPartition, xi: &Partition) -> Result<MultiPartition> {
    if lambda.size() != xi.size() {
        return Err(Error::SizeMismatch(lambda.size() as u64, xi.size() as u64));
    }
    Ok(MultiPartition::concentrated_last(lambda.level(), xi.clone()))
}

/// t^{b(μ)-b(λ)} Σ_ν f^ξ_ν(t^r) Π_i K_{λ(i),ν(i)}(t^r), μ = (∅, …, ∅, ξ).
pub fn lemma39_f_form(lambda: &MultiPartition, xi: &Partition) -> Result<RatFunc> {
    let mu = concentrated(lambda, xi)?;
    let r = lambda.level();
    let mut acc = RatFunc::zero(1);
    for nu in with_sizes(&lambda.size_vector()) {
        let mut term = f_coeff(nu.components(), xi)?;
        if term.is_zero() {
            continue;
        }
        for (l, v) in lambda.components().iter().zip(nu.components()) {
            term = &term * &classical_kostka(l, v)?;
        }
        acc = &acc + &poly_at_pow(&term, r);
    }
    Ok(acc.mul_t_pow(mu.b_stat() as i64 - lambda.b_stat() as i64))
}

/// t^{b(μ)-b(λ)} Σ_η c^η_{λ(1),…,λ(r)} K_{η,ξ}(t^r), μ = (∅, …, ∅, ξ).
pub fn lemma39_lr_form(lambda: &MultiPartition, xi: &Partition) -> Result<RatFunc> {
    let mu = concentrated(lambda, xi)?;
    let r = lambda.level();
    let mut acc = Poly::zero(1);
    for eta in Partition::all(xi.size()) {
        let c = lr_coeff(&eta, lambda.components());
        if c != 0 {
            acc = &acc + &classical_kostka(&eta, xi)?.scale_rational(&crate::exactalg::int(c as i64));
        }
    }
    Ok(poly_at_pow(&acc, r).mul_t_pow(mu.b_stat() as i64 - lambda.b_stat() as i64))
}

/// Coefficient of s_Bλ in R_Bν = Π_i P_ν(i)(x^(i); t^r).
fn r_in_schur(nu: &MultiPartition) -> Result<BTreeMap<MultiPartition, RatFunc>> {
    let r = nu.level();
    let mut acc: Vec<(Vec<Partition>, RatFunc)> = vec![(Vec::new(), RatFunc::one(1))];
    for p in nu.components() {
        let hl = classical_hl(p)?;
        let mut next = Vec::new();
        for (prefix, c) in &acc {
            for (label, d) in hl.terms() {
                let mut v = prefix.clone();
                v.push(label.component(0).clone());
                next.push((v, c * &d.substitute(Substitution::Pow(r))));
            }
        }
        acc = next;
    }
    Ok(acc.into_iter().map(|(v, c)| (MultiPartition::new(v).expect("level r"), c)).collect())
}

/// h^Bμ_Bν(t): the coefficient of P^-_Bμ in R_Bν.
pub fn h_coeff(nu: &MultiPartition, mu: &MultiPartition, config: EngineConfig) -> Result<RatFunc> {
    if nu.level() != mu.level() {
        return Err(Error::LevelMismatch(nu.level(), mu.level()));
    }
    if nu.size() != mu.size() {
        return Err(Error::SizeMismatch(nu.size() as u64, mu.size() as u64));
    }
    let table = kostka_table(nu.size(), nu.level(), Sign::Minus, config)?;
    let mut acc = RatFunc::zero(1);
    for (lambda, c) in r_in_schur(nu)? {
        let k = table.get(&lambda, mu)?;
        if !k.is_zero() {
            acc = &acc + &(&c * &k);
        }
    }
    Ok(acc)
}

/// g^Bμ_Bν(t) solved from the unitriangular system
/// IC^-_{Bλ,Bμ}(t) = t^{-n(Bλ)} Σ_Bν g^Bμ_Bν(t) Π_i K̃_{λ(i),ν(i)}(t).
pub fn cor37_g(nu: &MultiPartition, mu: &MultiPartition, config: EngineConfig) -> Result<Poly> {
    if nu.level() != mu.level() {
        return Err(Error::LevelMismatch(nu.level(), mu.level()));
    }
    Ok(cor37_all(mu, config)?.remove(nu).unwrap_or_else(|| Poly::zero(1)))
}

/// Every g^Bμ_Bν for fixed Bμ.
pub fn cor37_all(mu: &MultiPartition, config: EngineConfig) -> Result<BTreeMap<MultiPartition, Poly>> {
    let mut labels = enumerate_multipartitions(mu.size(), mu.level());
    // strictly smaller in every component means strictly larger n
    labels.sort_by_key(|l| std::cmp::Reverse(l.n_stat()));
    let mut solved: Vec<(MultiPartition, RatFunc)> = Vec::new();
    for lambda in &labels {
        let ic = RatFunc::from_poly(ic_minus_candidate(lambda, mu, config)?);
        let mut rest = ic.mul_t_pow(lambda.n_stat() as i64);
        for (nu, g) in &solved {
            if nu.size_vector() != lambda.size_vector() || g.is_zero() {
                continue;
            }
            let m = modified_product(lambda, nu)?;
            if !m.is_zero() {
                rest = &rest - &(g * &RatFunc::from_poly(m));
            }
        }
        // the diagonal coefficient is t^{n(Bλ)}
        solved.push((lambda.clone(), rest.mul_t_pow(-(lambda.n_stat() as i64))));
    }
    solved
        .into_iter()
        .map(|(nu, g)| {
            let p = g.poly_extract().ok_or_else(|| Error::NonPolynomialHall(format!("g^{mu}_{nu} = {g}")))?;
            Ok((nu, p))
        })
        .collect()
}

fn modified_product(lambda: &MultiPartition, nu: &MultiPartition) -> Result<Poly> {
    let mut acc = Poly::one(1);
    for (l, v) in lambda.components().iter().zip(nu.components()) {
        acc = &acc * &classical_kostka_modified(l, v)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{multi, part};

    #[test]
    fn f_and_g_examples() {
        let one = part(&[1]);
        assert!(f_coeff(&[one.clone(), one.clone()], &part(&[2])).unwrap().is_one());
        assert_eq!(f_coeff(&[one.clone(), one.clone()], &part(&[1, 1])).unwrap(), Poly::from_ints(1, &[1, 1]));
        assert!(f_coeff(&[part(&[2, 1])], &part(&[2, 1])).unwrap().is_one());
        assert_eq!(hall_g(&[one.clone(), one.clone()], &part(&[1, 1])).unwrap(), Poly::from_ints(1, &[1, 1]));
        assert!(hall_g(&[one.clone(), one], &part(&[2])).unwrap().is_one());
    }

    #[test]
    fn h_examples() {
        let c = EngineConfig::default();
        let nu = multi(&[&[1], &[1]]);
        assert!(h_coeff(&nu, &nu, c).unwrap().is_one());
        let mu = multi(&[&[], &[1, 1]]);
        assert_eq!(h_coeff(&nu, &mu, c).unwrap(), RatFunc::from_poly(Poly::from_ints(1, &[0, 1, 0, 1])));
        for a in Partition::all(3) {
            for b in Partition::all(3) {
                let h = h_coeff(&a.clone().into(), &b.clone().into(), c).unwrap();
                assert_eq!(h.is_one(), a == b);
                assert_eq!(h.is_zero(), a != b);
            }
        }
    }

    #[test]
    fn cor37_examples() {
        let c = EngineConfig::default();
        let nu = multi(&[&[1], &[1]]);
        assert_eq!(cor37_g(&nu, &multi(&[&[], &[1, 1]]), c).unwrap(), Poly::from_ints(1, &[1, 1]));
        assert!(cor37_g(&nu, &multi(&[&[], &[2]]), c).unwrap().is_one());
    }
}
