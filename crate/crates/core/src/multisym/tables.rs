use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::gram::{gram_from, GramMatrix};
use super::ldu::{conj, degenerate, invert_unit_lower, ldu, reversed, transpose};
use super::gram::{cyc_conj, gmul, grp_poly_to_field, scaled_transition, GPoly};
use super::transition::Transition;
use rayon::prelude::*;
use super::{ConjugateSlot, EngineConfig, Sign};
use crate::error::{Error, Result};
use crate::exactalg::{Poly, RatFunc, Substitution, MAX_ORDER};
use num_traits::ToPrimitive;
use crate::partitions::MultiPartition;
use crate::symfunc::SymExpansion;

/// Everything derived from one Gram matrix: both Kostka tables, the pivots
/// ⟨P^-_Bλ, P^+_Bλ⟩ and, on demand, the Schur coefficients of P^±.
pub struct Engine {
    pub gram: GramMatrix,
    pub(crate) transition: Arc<Transition>,
    index: HashMap<MultiPartition, usize>,
    pivots: Vec<RatFunc>,
    k_minus: Vec<Vec<RatFunc>>,
    k_plus: Vec<Vec<RatFunc>>,
    p_minus: OnceLock<Vec<Vec<RatFunc>>>,
    p_plus: OnceLock<Vec<Vec<RatFunc>>>,
}

/// Result of factoring a Gram matrix, in its label order (highest first).
/// Row λ of `a` (resp. `b`) holds the Schur coefficients of P^-_Bλ (resp. P^+).
#[derive(Clone, Debug)]
pub struct Biorthogonal {
    pub a: Vec<Vec<RatFunc>>,
    pub b: Vec<Vec<RatFunc>>,
    pub d: Vec<RatFunc>,
    pub k_minus: Vec<Vec<RatFunc>>,
    pub k_plus: Vec<Vec<RatFunc>>,
}

fn restrict_real(m: Vec<Vec<RatFunc>>, labels: &[MultiPartition], what: &str) -> Result<Vec<Vec<RatFunc>>> {
    m.into_iter()
        .enumerate()
        .map(|(i, row)| {
            row.into_iter()
                .enumerate()
                .map(|(j, v)| {
                    v.restrict_to_rational()
                        .ok_or_else(|| Error::NotReal(format!("{what}[{},{}] = {v}", labels[i], labels[j])))
                })
                .collect()
        })
        .collect()
}

fn invert_unit_upper(m: &[Vec<RatFunc>]) -> Vec<Vec<RatFunc>> {
    reversed(&invert_unit_lower(&reversed(m)))
}

/// Kostka tables (real, over Q) and pivots from a Gram matrix.
fn factor(g: &GramMatrix) -> Result<(Vec<Vec<RatFunc>>, Vec<Vec<RatFunc>>, Vec<RatFunc>)> {
    let dim = g.labels.len();
    let f = ldu(&reversed(&g.entries)).map_err(|k| degenerate(&g.labels[dim - 1 - k]))?;
    let lower = reversed(&f.lower);
    let upper = reversed(&f.upper);
    let mut d = f.pivots;
    d.reverse();
    let (km, kp) = match g.config.conjugate {
        ConjugateSlot::First => (conj(&lower), transpose(&upper)),
        ConjugateSlot::Second => (lower, conj(&transpose(&upper))),
    };
    let km = restrict_real(km, &g.labels, "K-")?;
    let kp = restrict_real(kp, &g.labels, "K+")?;
    let d = d.into_iter().map(|v| v.restrict_to_rational().unwrap_or(v)).collect();
    Ok((km, kp, d))
}

/// Two-sided elimination of a Gram matrix.
pub fn biorthogonalize(g: &GramMatrix) -> Result<Biorthogonal> {
    let (k_minus, k_plus, d) = factor(g)?;
    Ok(Biorthogonal { a: invert_unit_upper(&k_minus), b: invert_unit_upper(&k_plus), d, k_minus, k_plus })
}

impl Engine {
    fn build(tr: Arc<Transition>, config: EngineConfig) -> Result<Engine> {
        let gram = gram_from(&tr, config)?;
        let (k_minus, k_plus, pivots) = factor(&gram)?;
        let index = gram.labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        Ok(Engine {
            gram,
            transition: tr,
            index,
            pivots,
            k_minus,
            k_plus,
            p_minus: OnceLock::new(),
            p_plus: OnceLock::new(),
        })
    }

    pub fn labels(&self) -> &[MultiPartition] {
        &self.gram.labels
    }

    pub fn config(&self) -> EngineConfig {
        self.gram.config
    }

    pub fn index_of(&self, label: &MultiPartition) -> Result<usize> {
        self.index.get(label).copied().ok_or_else(|| {
            Error::Precondition(format!("{label} is not an {}-multipartition of {}", self.gram.r, self.gram.n))
        })
    }

    /// Dense Kostka matrix: entry [λ][μ] is the coefficient of P_Bμ in s_Bλ.
    pub fn kostka(&self, sign: Sign) -> &[Vec<RatFunc>] {
        match sign {
            Sign::Minus => &self.k_minus,
            Sign::Plus => &self.k_plus,
        }
    }

    /// Dense matrix whose row λ is P_Bλ in the Schur basis.
    pub fn hl_rows(&self, sign: Sign) -> &[Vec<RatFunc>] {
        let cell = match sign {
            Sign::Minus => &self.p_minus,
            Sign::Plus => &self.p_plus,
        };
        cell.get_or_init(|| invert_unit_upper(self.kostka(sign)))
    }

    pub fn pivots(&self) -> &[RatFunc] {
        &self.pivots
    }

    /// P^±_Bλ as an expansion.
    pub fn hl(&self, sign: Sign, lambda: &MultiPartition) -> Result<SymExpansion> {
        let row = &self.hl_rows(sign)[self.index_of(lambda)?];
        let mut e = SymExpansion::zero(self.gram.r, self.gram.n, 1);
        for (l, c) in self.labels().iter().zip(row) {
            e.add_term(l.clone(), c.clone())?;
        }
        Ok(e)
    }

    /// ⟨f, g⟩ under this engine's convention.
    pub fn form(&self, f: &SymExpansion, g: &SymExpansion) -> Result<RatFunc> {
        super::gram::form_with(&self.transition, f, g, self.gram.config.conjugate)
    }
}

impl Engine {
    /// ⟨P^-_Bλ, P^+_Bμ⟩ for all pairs, computed in the power-sum basis
    /// without reference to the Gram matrix.
    pub fn pairing_via_power_sums(&self) -> Result<Vec<Vec<RatFunc>>> {
        let int_rows = |rows: &[Vec<RatFunc>]| -> Option<Vec<Vec<Vec<i128>>>> {
            rows.iter()
                .map(|row| {
                    row.iter()
                        .map(|c| c.poly_extract()?.integer_coeffs()?.iter().map(|x| x.to_i128()).collect())
                        .collect()
                })
                .collect()
        };
        match (int_rows(self.hl_rows(Sign::Minus)), int_rows(self.hl_rows(Sign::Plus))) {
            (Some(a), Some(b)) => self.pairing_integral(&a, &b),
            _ => Ok(self.pairing_generic()),
        }
    }

    fn pairing_integral(&self, a: &[Vec<Vec<i128>>], b: &[Vec<Vec<i128>>]) -> Result<Vec<Vec<RatFunc>>> {
        let tr = &self.transition;
        let (r, order) = (tr.r, tr.order());
        let st = scaled_transition(tr)?;
        let dim = tr.labels.len();
        // row λ of P in the p basis, times n!·r^n
        let to_p = |rows: &[Vec<Vec<i128>>]| -> Vec<Vec<GPoly>> {
            rows.par_iter()
                .map(|row| {
                    let mut out: Vec<GPoly> = vec![Vec::new(); dim];
                    for (label, c) in self.labels().iter().zip(row) {
                        if c.is_empty() {
                            continue;
                        }
                        let src = &st.ds[tr.index[label]];
                        for (slot, g) in out.iter_mut().zip(src) {
                            if g.iter().all(|&x| x == 0) {
                                continue;
                            }
                            if slot.len() < c.len() {
                                slot.resize(c.len(), vec![0i128; r]);
                            }
                            for (d, &k) in c.iter().enumerate() {
                                for (e, &x) in g.iter().enumerate() {
                                    slot[d][e] += k * x;
                                }
                            }
                        }
                    }
                    out
                })
                .collect()
        };
        let conj_poly = |p: &GPoly| -> GPoly { p.iter().map(|c| cyc_conj(c, r)).collect() };
        let (mut pa, mut pb) = (to_p(a), to_p(b));
        match self.gram.config.conjugate {
            ConjugateSlot::First => pa.iter_mut().for_each(|row| row.iter_mut().for_each(|p| *p = conj_poly(p))),
            ConjugateSlot::Second => pb.iter_mut().for_each(|row| row.iter_mut().for_each(|p| *p = conj_poly(p))),
        }
        let weighted: Vec<Vec<GPoly>> =
            pa.par_iter().map(|row| row.iter().zip(&st.weights).map(|(x, w)| gmul(x, w, r)).collect()).collect();
        let den = grp_poly_to_field(&st.common, order)
            .scale_rational(&crate::exactalg::Rational::from_integer(&st.scale * &st.scale));
        weighted
            .par_iter()
            .map(|wa| {
                pb.iter()
                    .map(|rb| {
                        let mut acc: GPoly = Vec::new();
                        for (x, y) in wa.iter().zip(rb) {
                            let prod = gmul(x, y, r);
                            if acc.len() < prod.len() {
                                acc.resize(prod.len(), vec![0i128; r]);
                            }
                            for (slot, c) in acc.iter_mut().zip(&prod) {
                                for (u, v) in slot.iter_mut().zip(c) {
                                    *u += v;
                                }
                            }
                        }
                        RatFunc::new(grp_poly_to_field(&acc, order), den.clone())
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect()
    }

    fn pairing_generic(&self) -> Vec<Vec<RatFunc>> {
        let labels = self.labels();
        let minus: Vec<SymExpansion> = labels.iter().map(|l| self.hl(Sign::Minus, l).expect("label")).collect();
        let plus: Vec<SymExpansion> = labels.iter().map(|l| self.hl(Sign::Plus, l).expect("label")).collect();
        minus
            .par_iter()
            .map(|f| plus.iter().map(|g| self.form(f, g).expect("same degree")).collect())
            .collect()
    }
}

type Slot<T> = Arc<OnceLock<Result<Arc<T>>>>;

fn check_level(r: usize) -> Result<()> {
    if r == 0 || r as u32 > MAX_ORDER {
        return Err(Error::UnsupportedOrder(r as u32));
    }
    Ok(())
}

/// Cached p↔s transition for (n, r).
pub fn transition(n: u32, r: usize) -> Result<Arc<Transition>> {
    check_level(r)?;
    static CACHE: OnceLock<Mutex<HashMap<(u32, usize), Slot<Transition>>>> = OnceLock::new();
    let slot = {
        let mut map = CACHE.get_or_init(Default::default).lock().expect("cache lock");
        map.entry((n, r)).or_default().clone()
    };
    slot.get_or_init(|| Ok(Arc::new(Transition::new(n, r)))).clone()
}

/// Cached tables for (n, r) under `config`. Each key is computed once; later
/// callers block until the first computation publishes its result.
pub fn engine(n: u32, r: usize, config: EngineConfig) -> Result<Arc<Engine>> {
    check_level(r)?;
    static CACHE: OnceLock<Mutex<HashMap<(u32, usize, EngineConfig), Slot<Engine>>>> = OnceLock::new();
    let slot = {
        let mut map = CACHE.get_or_init(Default::default).lock().expect("cache lock");
        map.entry((n, r, config)).or_default().clone()
    };
    slot.get_or_init(|| Engine::build(transition(n, r)?, config).map(Arc::new)).clone()
}

/// A Kostka table K^± for one (n, r); entries are over Q(t).
#[derive(Clone)]
pub struct KostkaTable {
    pub n: u32,
    pub r: usize,
    pub sign: Sign,
    engine: Arc<Engine>,
}

impl KostkaTable {
    pub fn config(&self) -> EngineConfig {
        self.engine.config()
    }

    pub fn labels(&self) -> &[MultiPartition] {
        self.engine.labels()
    }

    pub fn engine(&self) -> &Arc<Engine> {
        &self.engine
    }

    pub fn get(&self, lambda: &MultiPartition, mu: &MultiPartition) -> Result<RatFunc> {
        let i = self.engine.index_of(lambda)?;
        let j = self.engine.index_of(mu)?;
        Ok(self.engine.kostka(self.sign)[i][j].clone())
    }

    pub fn matrix(&self) -> &[Vec<RatFunc>] {
        self.engine.kostka(self.sign)
    }

    /// Nonzero entries, rows then columns in label order.
    pub fn nonzero(&self) -> impl Iterator<Item = (&MultiPartition, &MultiPartition, &RatFunc)> {
        let labels = self.labels();
        self.matrix().iter().enumerate().flat_map(move |(i, row)| {
            row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(j, v)| (&labels[i], &labels[j], v))
        })
    }
}

pub fn kostka_table(n: u32, r: usize, sign: Sign, config: EngineConfig) -> Result<KostkaTable> {
    Ok(KostkaTable { n, r, sign, engine: engine(n, r, config)? })
}

fn check_pair(lambda: &MultiPartition, mu: &MultiPartition) -> Result<()> {
    if lambda.level() != mu.level() {
        return Err(Error::LevelMismatch(lambda.level(), mu.level()));
    }
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size() as u64, mu.size() as u64));
    }
    Ok(())
}

/// K^±_{Bλ,Bμ}(t).
pub fn kostka_multi(lambda: &MultiPartition, mu: &MultiPartition, sign: Sign, config: EngineConfig) -> Result<RatFunc> {
    check_pair(lambda, mu)?;
    kostka_table(lambda.size(), lambda.level(), sign, config)?.get(lambda, mu)
}

/// The family P^±_Bλ for all Bλ of size n and level r.
#[derive(Clone)]
pub struct HlFamily {
    pub sign: Sign,
    pub n: u32,
    pub r: usize,
    pub labels: Vec<MultiPartition>,
    pub expansions: Vec<SymExpansion>,
}

impl HlFamily {
    pub fn get(&self, label: &MultiPartition) -> Result<&SymExpansion> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| &self.expansions[i])
            .ok_or_else(|| Error::Precondition(format!("{label} is not in the family")))
    }
}

pub fn hl_multi(n: u32, r: usize, sign: Sign, config: EngineConfig) -> Result<HlFamily> {
    let e = engine(n, r, config)?;
    let expansions = e.labels().iter().map(|l| e.hl(sign, l)).collect::<Result<_>>()?;
    Ok(HlFamily { sign, n, r, labels: e.labels().to_vec(), expansions })
}

/// K̃^±_{Bλ,Bμ}(t) = t^{a(Bμ)} K^±_{Bλ,Bμ}(t^{-1}).
pub fn kostka_modified(lambda: &MultiPartition, mu: &MultiPartition, sign: Sign, config: EngineConfig) -> Result<RatFunc> {
    let k = kostka_multi(lambda, mu, sign, config)?;
    Ok(k.substitute(Substitution::InversePow(1)).mul_t_pow(mu.a_stat() as i64))
}

/// IC^-_{Bλ,Bμ}(t), defined by K̃^-_{Bλ,Bμ}(t) = t^{a(Bλ)} IC(t^r). Requires
/// every component of Bμ except the last two to be empty.
pub fn ic_minus_candidate(lambda: &MultiPartition, mu: &MultiPartition, config: EngineConfig) -> Result<Poly> {
    check_pair(lambda, mu)?;
    if !mu.is_two_tail() {
        return Err(Error::Precondition(format!("{mu} has a nonempty component before the last two")));
    }
    let r = mu.level();
    let km = kostka_modified(lambda, mu, Sign::Minus, config)?;
    let q = km.mul_t_pow(-(lambda.a_stat() as i64));
    let p = q
        .poly_extract()
        .ok_or_else(|| Error::IcExtraction(format!("K~/t^a = {q} is not a polynomial for {lambda}, {mu}")))?;
    p.decompose_pow(r)
        .ok_or_else(|| Error::IcExtraction(format!("{p} is not a polynomial in t^{r} for {lambda}, {mu}")))
}

#[cfg(test)]
mod pairing_tests {
    use super::*;

    #[test]
    fn integral_pairing_matches_form() {
        for conjugate in [ConjugateSlot::First, ConjugateSlot::Second] {
            let e = engine(2, 3, EngineConfig { conjugate, ..Default::default() }).unwrap();
            assert_eq!(e.pairing_via_power_sums().unwrap(), e.pairing_generic());
        }
    }
}
