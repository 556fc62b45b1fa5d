//! Exhaustive checks of the identities relating the tables, the tableau
//! combinatorics and the Hall polynomials. Each suite returns a report
//! instead of panicking so that the command line can print witnesses.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::{CycRational, Poly, RatFunc, Substitution};
use crate::hall::{flag_count, h_coeff, hall_g, lemma39_f_form, lemma39_lr_form, FlagCountInstance, MAX_FLAG_DIM};
use crate::multisym::{engine, ic_minus_candidate, kostka_table, EngineConfig, Sign};
use crate::partitions::{dominance_le, enumerate_multipartitions, MultiPartition, Partition, TotalOrder};
use crate::symfunc::{classical_kostka, lr_coeff};
use crate::tableaux::{enumerate_sst_multi, ls_kostka_via_charge, sst0_count, thm314_rhs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    ChargeLs,
    KostkaDegree,
    R2Polynomial,
    Prop13,
    Thm314,
    Cor312,
    Cor315,
    Lemma39,
    Prop317,
    HallFlag,
    IcPositivity,
    OrderSensitivity,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::ChargeLs,
        Suite::KostkaDegree,
        Suite::R2Polynomial,
        Suite::Prop13,
        Suite::Thm314,
        Suite::Cor312,
        Suite::Cor315,
        Suite::Lemma39,
        Suite::Prop317,
        Suite::HallFlag,
        Suite::IcPositivity,
        Suite::OrderSensitivity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ChargeLs => "charge-ls",
            Suite::KostkaDegree => "kostka-degree",
            Suite::R2Polynomial => "r2-polynomial",
            Suite::Prop13 => "prop13",
            Suite::Thm314 => "thm314",
            Suite::Cor312 => "cor312",
            Suite::Cor315 => "cor315",
            Suite::Lemma39 => "lemma39",
            Suite::Prop317 => "prop317",
            Suite::HallFlag => "hall-flag",
            Suite::IcPositivity => "ic-positivity",
            Suite::OrderSensitivity => "order-sensitivity",
        }
    }

    /// Informational suites never fail.
    pub fn is_informational(self) -> bool {
        self == Suite::OrderSensitivity
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Fail,
    Info,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub identity: String,
    pub n: u32,
    pub r: usize,
    pub order: String,
    pub conjugate: String,
    pub status: Status,
    pub checked: u64,
    pub failed: u64,
    /// The first failing instance, if any.
    pub witness: Option<Value>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

struct Tally {
    checked: u64,
    failed: u64,
    witness: Option<Value>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, failed: 0, witness: None, notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }
}

fn show(f: &RatFunc) -> String {
    f.to_string()
}

/// Runs one suite for every size up to `n` at level `r`.
pub fn run(suite: Suite, n: u32, r: usize, config: EngineConfig) -> Result<Report> {
    if r == 0 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    let mut t = Tally::new();
    match suite {
        Suite::ChargeLs => charge_ls(&mut t, n)?,
        Suite::KostkaDegree => kostka_degree(&mut t, n)?,
        Suite::R2Polynomial => r2_polynomial(&mut t, n, r, config)?,
        Suite::Prop13 => prop13(&mut t, n, r, config)?,
        Suite::Thm314 => thm314(&mut t, n, r, config)?,
        Suite::Cor312 => cor312(&mut t, n, r),
        Suite::Cor315 => cor315(&mut t, n, r, config)?,
        Suite::Lemma39 => lemma39(&mut t, n, r, config)?,
        Suite::Prop317 => prop317(&mut t, n, r, config)?,
        Suite::HallFlag => hall_flag(&mut t, n, r)?,
        Suite::IcPositivity => ic_positivity(&mut t, n, r, config)?,
        Suite::OrderSensitivity => order_sensitivity(&mut t, n, r, config)?,
    }
    let status = if suite.is_informational() {
        Status::Info
    } else if t.failed == 0 {
        Status::Ok
    } else {
        Status::Fail
    };
    Ok(Report {
        identity: suite.name().to_string(),
        n,
        r,
        order: config.order.name().to_string(),
        conjugate: config.conjugate.to_string(),
        status,
        checked: t.checked,
        failed: t.failed,
        witness: t.witness,
        notes: t.notes,
    })
}

fn charge_ls(t: &mut Tally, n: u32) -> Result<()> {
    for m in 0..=n {
        for lambda in Partition::all(m) {
            for mu in Partition::all(m) {
                let a = ls_kostka_via_charge(&lambda, &mu)?;
                let b = classical_kostka(&lambda, &mu)?;
                t.check(a == b, || json!({"lambda": lambda, "mu": mu, "charge": a.to_string(), "kostka": b.to_string()}));
            }
        }
    }
    Ok(())
}

fn is_monic_of_degree(p: &Poly, d: u64) -> bool {
    p.degree() == Some(d as usize) && p.leading().is_some_and(CycRational::is_one)
}

fn kostka_degree(t: &mut Tally, n: u32) -> Result<()> {
    for m in 0..=n {
        for lambda in Partition::all(m) {
            for mu in Partition::all(m) {
                let k = classical_kostka(&lambda, &mu)?;
                let ok = if dominance_le(mu.parts(), lambda.parts())? {
                    mu.n_stat() >= lambda.n_stat() && is_monic_of_degree(&k, mu.n_stat() - lambda.n_stat())
                } else {
                    k.is_zero()
                };
                t.check(ok, || json!({"lambda": lambda, "mu": mu, "value": k.to_string()}));
            }
        }
    }
    Ok(())
}

fn integer_poly(f: &RatFunc) -> Option<Poly> {
    f.poly_extract().filter(|p| p.integer_coeffs().is_some())
}

fn r2_polynomial(t: &mut Tally, n: u32, r: usize, config: EngineConfig) -> Result<()> {
    if r != 2 {
        t.notes.push(format!("suite is stated for r = 2; ran at r = 2 instead of {r}"));
    }
    for m in 0..=n {
        let e = engine(m, 2, config)?;
        let labels = e.labels();
        let (km, kp) = (e.kostka(Sign::Minus), e.kostka(Sign::Plus));
        for (i, l) in labels.iter().enumerate() {
            for (j, mu) in labels.iter().enumerate() {
                t.check(km[i][j] == kp[i][j], || {
                    json!({"lambda": l, "mu": mu, "minus": show(&km[i][j]), "plus": show(&kp[i][j])})
                });
                let v = &km[i][j];
                let ok = match integer_poly(v) {
                    Some(p) if p.is_zero() => true,
                    Some(p) => mu.a_stat() >= l.a_stat() && is_monic_of_degree(&p, mu.a_stat() - l.a_stat()),
                    None => false,
                };
                t.check(ok, || json!({"lambda": l, "mu": mu, "value": show(v)}));
            }
        }
        let (pm, pp) = (e.hl_rows(Sign::Minus), e.hl_rows(Sign::Plus));
        t.check(pm == pp, || json!({"n": m, "detail": "P^- and P^+ differ"}));
    }
    Ok(())
}

fn prop13(t: &mut Tally, n: u32, r: usize, config: EngineConfig) -> Result<()> {
    for m in 0..=n {
        let e = engine(m, r, config)?;
        let labels = e.labels();
        let pairing = e.pairing_via_power_sums()?;
        for (i, l) in labels.iter().enumerate() {
            for (j, mu) in labels.iter().enumerate() {
                let v = &pairing[i][j];
                let ok = if i == j {
                    let d = e.pivots()[i].embed(v.order())?;
                    !v.is_zero() && *v == d
                } else {
                    v.is_zero()
                };
                t.check(ok, || json!({"lambda": l, "mu": mu, "pairing": show(v)}));
            }
        }
        // the tables were restricted to Q when built; re-check from the conjugates
        for sign in [Sign::Minus, Sign::Plus] {
            for (i, row) in e.kostka(sign).iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    t.check(v.conj() == *v, || json!({"lambda": labels[i], "mu": labels[j], "sign": sign.symbol()}));
                }
            }
        }
    }
    Ok(())
}

fn concentrated_pairs(n: u32, r: usize, mut f: impl FnMut(u32, &MultiPartition, &Partition) -> Result<()>) -> Result<()> {
    for m in 0..=n {
        for lambda in enumerate_multipartitions(m, r) {
            for xi in Partition::all(m) {
                f(m, &lambda, &xi)?;
            }
        }
    }
    Ok(())
}

fn thm314(t: &mut Tally, n: u32, r: usize, config: EngineConfig) -> Result<()> {
    concentrated_pairs(n, r, |m, lambda, xi| {
        let mu = MultiPartition::concentrated_last(r, xi.clone());
        let k = kostka_table(m, r, Sign::Minus, config)?.get(lambda, &mu)?;
        let rhs = thm314_rhs(lambda, xi)?;
        t.check(k == rhs, || json!({"lambda": lambda, "mu": mu, "kostka": show(&k), "charge": show(&rhs)}));
        Ok(())
    })
}

fn cor312(t: &mut Tally, n: u32, r: usize) {
    for m in 0..=n {
        for lambda in enumerate_multipartitions(m, r) {
            for nu in Partition::all(m) {
                let a = sst0_count(&lambda, &nu);
                let b = lr_coeff(&nu, lambda.components());
                t.check(a == b, || json!({"lambda": lambda, "nu": nu, "lattice": a, "lr": b}));
            }
        }
    }
}

fn cor315(t: &mut Tally, n: u32, r: usize, config: EngineConfig) -> Result<()> {
    concentrated_pairs(n, r, |m, lambda, xi| {
        let mu = MultiPartition::concentrated_last(r, xi.clone());
        let k = kostka_table(m, r, Sign::Minus, config)?.get(lambda, &mu)?;
        let count = enumerate_sst_multi(lambda, xi.parts()).len();
        let at_one = k.eval(&CycRational::one(k.order()));
        let ok = at_one.as_ref().is_ok_and(|v| *v == CycRational::from_int(k.order(), count as i64));
        t.check(ok, || json!({"lambda": lambda, "mu": mu, "kostka": show(&k), "tableaux": count}));
        Ok(())
    })
}

fn lemma39(t: &mut Tally, n: u32, r: usize, config: EngineConfig) -> Result<()> {
    concentrated_pairs(n, r, |m, lambda, xi| {
        let mu = MultiPartition::concentrated_last(r, xi.clone());
        let k = kostka_table(m, r, Sign::Minus, config)?.get(lambda, &mu)?;
        let a = lemma39_f_form(lambda, xi)?;
        let b = lemma39_lr_form(lambda, xi)?;
        t.check(a == b && b == k, || {
            json!({"lambda": lambda, "mu": mu, "f_form": show(&a), "lr_form": show(&b), "kostka": show(&k)})
        });
        Ok(())
    })
}

fn prop317(t: &mut Tally, n: u32, r: usize, config: EngineConfig) -> Result<()> {
    concentrated_pairs(n, r, |_, nu, xi| {
        let mu = MultiPartition::concentrated_last(r, xi.clone());
        let h = h_coeff(nu, &mu, config)?;
        let g = hall_g(nu.components(), xi)?;
        let twisted = RatFunc::from_poly(g.clone())
            .substitute(Substitution::InversePow(r))
            .mul_t_pow(mu.a_stat() as i64 - nu.a_stat() as i64);
        t.check(h == twisted, || json!({"nu": nu, "mu": mu, "h": show(&h), "g": g.to_string()}));
        Ok(())
    })
}

fn hall_flag(t: &mut Tally, n: u32, r: usize) -> Result<()> {
    if n > MAX_FLAG_DIM {
        return Err(Error::OracleScale(format!("flag counting is limited to n <= {MAX_FLAG_DIM}")));
    }
    for q in [2u32, 3] {
        concentrated_pairs(n, r, |_, nu, xi| {
            let g = hall_g(nu.components(), xi)?;
            let count = flag_count(&FlagCountInstance { q, xi: xi.clone(), quotients: nu.components().to_vec() })?;
            let value = g.eval(&CycRational::from_int(1, q as i64));
            t.check(value == CycRational::from_int(1, count as i64), || {
                json!({"q": q, "nu": nu, "xi": xi, "g": g.to_string(), "flags": count})
            });
            Ok(())
        })?;
    }
    Ok(())
}

fn ic_positivity(t: &mut Tally, n: u32, r: usize, config: EngineConfig) -> Result<()> {
    let mut negative = 0u64;
    for m in 0..=n {
        let labels = enumerate_multipartitions(m, r);
        for mu in labels.iter().filter(|mu| mu.is_two_tail()) {
            for lambda in &labels {
                match ic_minus_candidate(lambda, mu, config) {
                    Ok(p) => {
                        let ints = p.integer_coeffs();
                        let nonneg = ints.as_ref().is_some_and(|c| c.iter().all(|x| x.sign() != num_bigint::Sign::Minus));
                        if r == 1 {
                            t.check(nonneg, || json!({"lambda": lambda, "mu": mu, "ic": p.to_string()}));
                        } else {
                            t.check(ints.is_some(), || json!({"lambda": lambda, "mu": mu, "ic": p.to_string()}));
                            if !nonneg {
                                negative += 1;
                            }
                        }
                    }
                    Err(Error::IcExtraction(msg)) => {
                        t.check(false, || json!({"lambda": lambda, "mu": mu, "error": msg}));
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
    if r > 1 {
        t.notes.push(format!("{negative} candidates with a negative coefficient (non-negativity not asserted for r > 1)"));
    }
    Ok(())
}

fn order_sensitivity(t: &mut Tally, n: u32, r: usize, config: EngineConfig) -> Result<()> {
    let other = EngineConfig { order: TotalOrder::ALL.into_iter().find(|o| *o != config.order).expect("two orders"), ..config };
    let mut differing = 0u64;
    for m in 0..=n {
        for sign in [Sign::Minus, Sign::Plus] {
            let a = kostka_table(m, r, sign, config)?;
            let b = kostka_table(m, r, sign, other)?;
            for l in a.labels() {
                for mu in a.labels() {
                    let (x, y) = (a.get(l, mu)?, b.get(l, mu)?);
                    t.checked += 1;
                    if x != y {
                        differing += 1;
                        if t.witness.is_none() {
                            t.witness = Some(json!({"lambda": l, "mu": mu, "sign": sign.symbol(),
                                config.order.name(): show(&x), other.order.name(): show(&y)}));
                        }
                    }
                }
            }
        }
    }
    t.notes.push(format!("{differing} of {} entries differ between {} and {}", t.checked, config.order, other.order));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let c = EngineConfig::default();
        for s in Suite::ALL {
            let rep = run(s, 2, 2, c).unwrap();
            assert!(rep.passed(), "{s}: {rep:?}");
            assert!(rep.checked > 0, "{s}");
        }
    }
}
