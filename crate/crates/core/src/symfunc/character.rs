use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactalg::{CycRational, Poly, RatFunc};
use crate::partitions::Partition;

type Memo = RwLock<HashMap<(Partition, Partition), i64>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Irreducible character χ^λ evaluated on the class of cycle type μ.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size() as u64, mu.size() as u64));
    }
    Ok(character(lambda, mu.parts()))
}

fn character(lambda: &Partition, mu: &[u32]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), Partition::new(mu.to_vec()).expect("sorted tail"));
    if let Some(&v) = memo().read().expect("memo lock").get(&key) {
        return v;
    }
    let k = mu[0];
    let mut total = 0i64;
    for (sign, rest) in remove_ribbons(lambda, k) {
        total += sign * character(&rest, &mu[1..]);
    }
    memo().write().expect("memo lock").insert(key, total);
    total
}

/// All ways to remove a border strip of size `k`, with the strip's sign
/// (-1)^(height - 1). Works on the beta-set λ_i + (ℓ - i).
fn remove_ribbons(lambda: &Partition, k: u32) -> Vec<(i64, Partition)> {
    let len = lambda.len();
    let beta: Vec<i64> = (0..len).map(|i| lambda.part(i) as i64 + (len - 1 - i) as i64).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        let target = b - k as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nb.iter().enumerate().map(|(j, &x)| (x - (len - 1 - j) as i64) as u32).collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        out.push((sign, Partition::new(parts).expect("ribbon removal keeps a partition")));
    }
    out
}

/// z_λ = Π i^{m_i} m_i!.
pub fn z_classical(lambda: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (i, &m) in lambda.multiplicities().iter().enumerate().skip(1) {
        for j in 1..=m {
            z *= BigInt::from(i) * BigInt::from(j);
        }
    }
    z
}

/// z_λ(t) = z_λ Π (1 - t^{λ_i})^{-1}, over Q.
pub fn z_classical_t(lambda: &Partition) -> RatFunc {
    let z = CycRational::from_rational(1, z_classical(lambda).into());
    let mut den = Poly::one(1);
    for &p in lambda.parts() {
        den = &den * &(&Poly::one(1) - &Poly::t_pow(1, p as usize));
    }
    RatFunc::new(Poly::constant(z), den).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;

    #[test]
    fn small_values() {
        for mu in Partition::all(4) {
            assert_eq!(mn_character(&part(&[4]), &mu).unwrap(), 1);
        }
        assert_eq!(mn_character(&part(&[1, 1]), &part(&[2])).unwrap(), -1);
        assert_eq!(mn_character(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&part(&[2, 1]), &part(&[3])).unwrap(), -1);
        assert_eq!(mn_character(&part(&[2, 2]), &part(&[2, 2])).unwrap(), 2);
        assert!(mn_character(&part(&[2]), &part(&[1])).is_err());
    }

    #[test]
    fn column_orthogonality() {
        for n in 0..=6 {
            let all = Partition::all(n);
            for a in &all {
                for b in &all {
                    let mut s = num_rational::BigRational::from_integer(0.into());
                    for mu in &all {
                        let v = mn_character(a, mu).unwrap() * mn_character(b, mu).unwrap();
                        s += num_rational::BigRational::new(v.into(), z_classical(mu));
                    }
                    let expect = if a == b { 1 } else { 0 };
                    assert_eq!(s, num_rational::BigRational::from_integer(expect.into()), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(z_classical(&part(&[1, 1])), BigInt::from(2));
        assert_eq!(z_classical(&part(&[2, 2, 1])), BigInt::from(8));
        let one = Poly::one(1);
        let d = &one - &Poly::t_pow(1, 1);
        let expect = RatFunc::new(Poly::from_ints(1, &[2]), &d * &d).unwrap();
        assert_eq!(z_classical_t(&part(&[1, 1])), expect);
        let expect = RatFunc::new(Poly::from_ints(1, &[2]), Poly::from_ints(1, &[1, 0, -1])).unwrap();
        assert_eq!(z_classical_t(&part(&[2])), expect);
    }
}
