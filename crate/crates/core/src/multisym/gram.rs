use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::transition::{grp_to_field, Transition};
use super::{ConjugateSlot, EngineConfig};
use crate::error::{Error, Result};
use crate::exactalg::{CycRational, Poly, RatFunc, Rational};
use crate::partitions::{enumerate_multipartitions_in, MultiPartition};
use crate::symfunc::{z_classical, SymExpansion};

use super::transition::z_multi;

/// ⟨s_Bλ, s_Bμ⟩ for all pairs, rows and columns in the configured order
/// (highest label first). Entries are stored over Q when every one of them
/// is real, and over Q(ζ_r) otherwise.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub n: u32,
    pub r: usize,
    pub config: EngineConfig,
    pub labels: Vec<MultiPartition>,
    pub entries: Vec<Vec<RatFunc>>,
}

/// Integer group-ring polynomial: `[degree][exponent of ζ]`.
pub(crate) type GPoly = Vec<Vec<i128>>;

pub(crate) fn gmul(a: &GPoly, b: &GPoly, r: usize) -> GPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![vec![0i128; r]; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            for (p, &u) in x.iter().enumerate() {
                if u == 0 {
                    continue;
                }
                for (q, &v) in y.iter().enumerate() {
                    out[i + j][(p + q) % r] += u * v;
                }
            }
        }
    }
    out
}

fn gconst(c: i128, r: usize) -> GPoly {
    let mut v = vec![vec![0i128; r]];
    v[0][0] = c;
    v
}

/// 1 - t^k.
fn one_minus_t(k: usize, r: usize) -> GPoly {
    let mut v = vec![vec![0i128; r]; k + 1];
    v[0][0] = 1;
    v[k][0] -= 1;
    v
}

fn cyc_mul(a: &[i128], b: &[i128], r: usize) -> Vec<i128> {
    let mut out = vec![0i128; r];
    for (p, &u) in a.iter().enumerate() {
        if u == 0 {
            continue;
        }
        for (q, &v) in b.iter().enumerate() {
            out[(p + q) % r] += u * v;
        }
    }
    out
}

pub(crate) fn cyc_conj(a: &[i128], r: usize) -> Vec<i128> {
    (0..r).map(|k| a[(r - k) % r]).collect()
}

fn to_i128(q: &Rational) -> Option<i128> {
    q.is_integer().then(|| q.numer().to_i128()).flatten()
}

/// Tabulates the form on the Schur basis.
pub fn gram(n: u32, r: usize, config: EngineConfig) -> Result<GramMatrix> {
    let tr = Transition::new(n, r);
    gram_from(&tr, config)
}

/// s→p scaled to integers, with the scale n!·r^n.
pub(crate) struct ScaledTransition {
    pub scale: BigInt,
    /// `[λ][ν]` group-ring element.
    pub ds: Vec<Vec<Vec<i128>>>,
    /// Π_m (1 - t^{rm})^{⌊n/m⌋}.
    pub common: GPoly,
    /// z_Bν(t) · common.
    pub weights: Vec<GPoly>,
}

pub(crate) fn scaled_transition(tr: &Transition) -> Result<ScaledTransition> {
    let (n, r) = (tr.n, tr.r);
    // Clear denominators: every entry of s→p has denominator dividing n!·r^n.
    let mut scale = BigInt::from(r).pow(n);
    for k in 2..=n {
        scale *= k;
    }
    let overflow = || Error::OracleScale(format!("n={n}, r={r} exceeds the integer fast path"));
    let scale_r = Rational::from_integer(scale.clone());
    let ds: Vec<Vec<Vec<i128>>> = tr
        .s_to_p
        .iter()
        .map(|row| {
            row.iter()
                .map(|g| g.iter().map(|q| to_i128(&(q * &scale_r)).ok_or_else(overflow)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    // Common denominator R = Π_m (1 - t^{rm})^{⌊n/m⌋}; z_Bν(t) = W_ν / R.
    let mut common = gconst(1, r);
    for m in 1..=n as usize {
        for _ in 0..(n as usize / m) {
            common = gmul(&common, &one_minus_t(r * m, r), r);
        }
    }
    let weights: Vec<GPoly> = tr
        .labels
        .iter()
        .map(|nu| {
            let mut z = BigInt::from(1);
            let mut w = gconst(1, r);
            let mut count = vec![0usize; n as usize + 1];
            for (k, p) in nu.components().iter().enumerate() {
                z *= z_classical(p) * BigInt::from(r).pow(p.len() as u32);
                for &m in p.parts() {
                    let m = m as usize;
                    count[m] += 1;
                    // (1 - t^{rm}) / (1 - ζ^k t^m) = Σ_{i<r} ζ^{ki} t^{mi}
                    let mut f = vec![vec![0i128; r]; m * (r - 1) + 1];
                    for i in 0..r {
                        f[m * i][(k * i) % r] = 1;
                    }
                    w = gmul(&w, &f, r);
                }
            }
            for m in 1..=n as usize {
                for _ in count[m]..(n as usize / m) {
                    w = gmul(&w, &one_minus_t(r * m, r), r);
                }
            }
            let z = z.to_i128().ok_or_else(overflow)?;
            Ok(gmul(&w, &gconst(z, r), r))
        })
        .collect::<Result<_>>()?;
    Ok(ScaledTransition { scale, ds, common, weights })
}

pub(crate) fn gram_from(tr: &Transition, config: EngineConfig) -> Result<GramMatrix> {
    let (n, r) = (tr.n, tr.r);
    let order = r as u32;
    let dim = tr.labels.len();
    let ScaledTransition { scale, ds, common, weights } = scaled_transition(tr)?;

    let zero_elem = vec![0i128; r];
    let support: Vec<Vec<usize>> =
        ds.iter().map(|row| (0..dim).filter(|&j| row[j] != zero_elem).collect()).collect();

    let den_poly = grp_poly_to_field(&common, order).scale_rational(&Rational::from_integer(&scale * &scale));
    let conj_first = config.conjugate == ConjugateSlot::First;

    // Rows and columns of the numerator in lex-c indexing.
    let numerators: Vec<Vec<Poly>> = (0..dim)
        .into_par_iter()
        .map(|i| {
            (0..dim)
                .map(|j| {
                    let mut acc: GPoly = Vec::new();
                    for &v in &support[i] {
                        if ds[j][v] == zero_elem {
                            continue;
                        }
                        let c = if conj_first {
                            cyc_mul(&cyc_conj(&ds[i][v], r), &ds[j][v], r)
                        } else {
                            cyc_mul(&ds[i][v], &cyc_conj(&ds[j][v], r), r)
                        };
                        let w = &weights[v];
                        if acc.len() < w.len() {
                            acc.resize(w.len(), vec![0i128; r]);
                        }
                        for (d, coeff) in w.iter().enumerate() {
                            for (p, &u) in c.iter().enumerate() {
                                if u == 0 {
                                    continue;
                                }
                                for (q, &x) in coeff.iter().enumerate() {
                                    acc[d][(p + q) % r] += u * x;
                                }
                            }
                        }
                    }
                    grp_poly_to_field(&acc, order)
                })
                .collect()
        })
        .collect();

    // The matrix is real in practice; normalizing over Q is much cheaper.
    let real: Option<Vec<Vec<Poly>>> = numerators
        .iter()
        .map(|row| row.iter().map(Poly::restrict_to_rational).collect())
        .collect();
    let (numerators, den_poly) = match real {
        Some(rows) => (rows, den_poly.restrict_to_rational().expect("rational denominator")),
        None => (numerators, den_poly),
    };

    let labels = enumerate_multipartitions_in(n, r, config.order);
    let perm: Vec<usize> = labels.iter().map(|l| tr.index[l]).collect();
    let entries = perm
        .par_iter()
        .map(|&i| {
            perm.iter()
                .map(|&j| RatFunc::new(numerators[i][j].clone(), den_poly.clone()))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GramMatrix { n, r, config, labels, entries })
}

pub(crate) fn grp_poly_to_field(p: &GPoly, order: u32) -> Poly {
    Poly::from_coeffs(order, p.iter().map(|g| CycRational::from_group_ring(order, g)).collect())
}

/// ⟨f, g⟩ evaluated through the power-sum basis. The `conjugate` slot is
/// conjugate-linear; coefficients over a subfield are embedded first.
pub fn form(f: &SymExpansion, g: &SymExpansion, conjugate: ConjugateSlot) -> Result<RatFunc> {
    if f.level() != g.level() {
        return Err(Error::LevelMismatch(f.level(), g.level()));
    }
    if f.degree() != g.degree() {
        return Err(Error::SizeMismatch(f.degree() as u64, g.degree() as u64));
    }
    let tr = super::transition(f.degree(), f.level())?;
    form_with(&tr, f, g, conjugate)
}

pub(crate) fn form_with(tr: &Transition, f: &SymExpansion, g: &SymExpansion, conjugate: ConjugateSlot) -> Result<RatFunc> {
    let order = tr.order();
    let a = to_p_basis(tr, f)?;
    let b = to_p_basis(tr, g)?;
    let mut acc = RatFunc::zero(order);
    for (v, nu) in tr.labels.iter().enumerate() {
        if a[v].is_zero() || b[v].is_zero() {
            continue;
        }
        let c = match conjugate {
            ConjugateSlot::First => &a[v].conj() * &b[v],
            ConjugateSlot::Second => &a[v] * &b[v].conj(),
        };
        acc = &acc + &(&c * &z_multi(nu));
    }
    Ok(acc)
}

fn to_p_basis(tr: &Transition, f: &SymExpansion) -> Result<Vec<RatFunc>> {
    let order = tr.order();
    let mut out = vec![RatFunc::zero(order); tr.labels.len()];
    for (label, c) in f.terms() {
        let c = if c.order() == order { c.clone() } else { c.embed(order)? };
        let row = &tr.s_to_p[tr.index[label]];
        for (slot, g) in out.iter_mut().zip(row) {
            let x = grp_to_field(g, order);
            if !x.is_zero() {
                *slot = &*slot + &c.scale(&x);
            }
        }
    }
    Ok(out)
}
