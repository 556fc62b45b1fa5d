use kostka_core::exactalg::{Poly, RatFunc};
use kostka_core::multisym::{
    biorthogonalize, form, gram, ic_minus_candidate, kostka_modified, kostka_multi, pmulti_to_schur, ConjugateSlot, EngineConfig,
    Sign,
};
use kostka_core::partitions::multi;
use kostka_core::symfunc::SymExpansion;

fn cfg() -> EngineConfig {
    EngineConfig::default()
}

fn poly(order: u32, c: &[i64]) -> RatFunc {
    RatFunc::from_poly(Poly::from_ints(order, c))
}

#[test]
fn power_sum_expansion() {
    let p = pmulti_to_schur(&multi(&[&[], &[1]])).unwrap();
    assert!(p.coeff(&multi(&[&[1], &[]])).is_one());
    assert_eq!(p.coeff(&multi(&[&[], &[1]])), RatFunc::from_int(2, -1));
}

#[test]
fn form_on_schur_functions() {
    let s = |l| SymExpansion::schur(l, 1);
    let v = form(&s(multi(&[&[1]])), &s(multi(&[&[1]])), ConjugateSlot::First).unwrap();
    assert_eq!(v, RatFunc::new(Poly::one(1), Poly::from_ints(1, &[1, -1])).unwrap());
    let a = multi(&[&[1], &[]]);
    let b = multi(&[&[], &[1]]);
    let s2 = |l| SymExpansion::schur(l, 2);
    let den = Poly::from_ints(2, &[1, 0, -1]);
    assert_eq!(form(&s2(a.clone()), &s2(a.clone()), ConjugateSlot::First).unwrap(), RatFunc::new(Poly::one(2), den.clone()).unwrap());
    assert_eq!(form(&s2(a.clone()), &s2(b.clone()), ConjugateSlot::First).unwrap(), RatFunc::new(Poly::from_ints(2, &[0, 1]), den).unwrap());
}

#[test]
fn gram_matches_form() {
    for r in 1..=3usize {
        for n in 0..=2u32 {
            for conj in [ConjugateSlot::First, ConjugateSlot::Second] {
                let g = gram(n, r, EngineConfig { conjugate: conj, ..cfg() }).unwrap();
                for (i, a) in g.labels.iter().enumerate() {
                    for (j, b) in g.labels.iter().enumerate() {
                        let f = form(&SymExpansion::schur(a.clone(), r as u32), &SymExpansion::schur(b.clone(), r as u32), conj).unwrap();
                        let f = if g.entries[i][j].order() == 1 { f.restrict_to_rational().unwrap() } else { f };
                        assert_eq!(g.entries[i][j], f, "r={r} {a} {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn kostka_examples() {
    let l = multi(&[&[1], &[1]]);
    let m = multi(&[&[], &[1, 1]]);
    assert_eq!(kostka_multi(&l, &m, Sign::Minus, cfg()).unwrap(), poly(1, &[0, 1, 0, 1]));
    assert_eq!(kostka_modified(&l, &m, Sign::Minus, cfg()).unwrap(), poly(1, &[0, 1, 0, 1]));
    assert_eq!(ic_minus_candidate(&l, &m, cfg()).unwrap(), Poly::from_ints(1, &[1, 1]));
    assert!(ic_minus_candidate(&m, &m, cfg()).unwrap().is_one());
}

#[test]
fn second_slot_transposes_gram() {
    let first = gram(3, 3, cfg()).unwrap();
    let second = gram(3, 3, EngineConfig { conjugate: ConjugateSlot::Second, ..cfg() }).unwrap();
    let dim = first.labels.len();
    for i in 0..dim {
        for j in 0..dim {
            assert_eq!(first.entries[i][j], second.entries[j][i]);
        }
    }
}

#[test]
fn factors_are_inverse() {
    let g = gram(3, 3, cfg()).unwrap();
    let b = biorthogonalize(&g).unwrap();
    let dim = g.labels.len();
    for (p, k) in [(&b.a, &b.k_minus), (&b.b, &b.k_plus)] {
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = RatFunc::zero(1);
                for m in 0..dim {
                    acc = &acc + &(&p[i][m] * &k[m][j]);
                }
                assert_eq!(acc.is_one(), i == j);
                assert_eq!(acc.is_zero(), i != j);
            }
        }
    }
}
