//! Multi-modular gcd for polynomials over Q.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;

const PRIMES: [u64; 32] = [
    4611686018427387847,
    4611686018427387817,
    4611686018427387787,
    4611686018427387761,
    4611686018427387751,
    4611686018427387737,
    4611686018427387733,
    4611686018427387709,
    4611686018427387701,
    4611686018427387631,
    4611686018427387617,
    4611686018427387587,
    4611686018427387461,
    4611686018427387421,
    4611686018427387409,
    4611686018427387329,
    4611686018427387323,
    4611686018427387301,
    4611686018427387271,
    4611686018427387241,
    4611686018427387139,
    4611686018427387131,
    4611686018427387127,
    4611686018427387113,
    4611686018427387091,
    4611686018427387073,
    4611686018427386981,
    4611686018427386923,
    4611686018427386911,
    4611686018427386903,
    4611686018427386897,
    4611686018427386887
];

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn reduce_int(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

/// Image of q in F_p, or `None` when p divides the denominator.
#[cfg(test)]
fn reduce(q: &Rational, p: u64) -> Option<u64> {
    let d = reduce_int(q.denom(), p);
    if d == 0 {
        return None;
    }
    Some(mul_mod(reduce_int(q.numer(), p), inv_mod(d, p), p))
}

/// Scales by the lcm of the denominators to an integer coefficient vector.
fn clear_denominators(a: &[Rational]) -> Vec<BigInt> {
    let l = a.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    a.iter().map(|q| q.numer() * (&l / q.denom())).collect()
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Monic gcd in F_p[t].
fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let lb = inv_mod(*b.last().expect("nonempty"), p);
        let db = b.len() - 1;
        while a.len() > db {
            let k = a.len() - 1 - db;
            let c = mul_mod(*a.last().expect("nonempty"), lb, p);
            for (j, &bj) in b.iter().enumerate() {
                let s = mul_mod(c, bj, p);
                a[k + j] = (a[k + j] + p - s) % p;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&l) = a.last() {
        let li = inv_mod(l, p);
        for x in a.iter_mut() {
            *x = mul_mod(*x, li, p);
        }
    }
    a
}

/// n/d with |n|, d ≤ sqrt(m/2) and n ≡ u·d (mod m), if one exists.
fn rational_reconstruct(u: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m >> 1u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > bound {
        return None;
    }
    let (n, d) = if s1.sign() == Sign::Minus { (-r1, -s1) } else { (r1, s1) };
    if n.gcd(&d) != BigInt::one() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Outcome of the modular search.
pub(crate) enum ModGcd {
    /// The polynomials are coprime.
    One,
    /// Candidate monic gcd (coefficients low to high); the caller verifies
    /// divisibility, and falls back when it fails.
    Candidate(Vec<Rational>),
    /// No usable primes or reconstruction did not settle.
    Unknown,
}

/// Tries to find gcd(a, b) over Q from images modulo word-sized primes.
/// `verify` checks a candidate; the first accepted candidate is returned.
pub(crate) fn modular_gcd(a: &[Rational], b: &[Rational], verify: &mut dyn FnMut(&[Rational]) -> bool) -> ModGcd {
    let mut best_deg = usize::MAX;
    let mut modulus = BigInt::one();
    let mut residues: Vec<BigInt> = Vec::new();
    let mut last: Option<Vec<Rational>> = None;
    let (ia, ib) = (clear_denominators(a), clear_denominators(b));
    for &p in PRIMES.iter() {
        let ra: Vec<u64> = ia.iter().map(|x| reduce_int(x, p)).collect();
        let rb: Vec<u64> = ib.iter().map(|x| reduce_int(x, p)).collect();
        if ra.last() == Some(&0) || rb.last() == Some(&0) {
            continue;
        }
        let g = gcd_mod(ra, rb, p);
        let deg = g.len() - 1;
        if deg == 0 {
            return ModGcd::One;
        }
        if deg > best_deg {
            continue;
        }
        let pb = BigInt::from(p);
        if deg < best_deg {
            best_deg = deg;
            modulus = pb;
            residues = g.iter().map(|&x| BigInt::from(x)).collect();
            last = None;
        } else {
            // Chinese remaindering: x ≡ r (mod M), x ≡ g (mod p).
            let minv = BigInt::from(inv_mod(reduce_int(&modulus, p), p));
            for (r, &gi) in residues.iter_mut().zip(&g) {
                let diff = (BigInt::from(gi) - &*r).mod_floor(&pb);
                let k = (diff * &minv).mod_floor(&pb);
                *r += &modulus * k;
            }
            modulus *= pb;
        }
        let cand: Option<Vec<Rational>> = residues.iter().map(|r| rational_reconstruct(r, &modulus)).collect();
        if let Some(c) = cand {
            if last.as_ref() == Some(&c) && verify(&c) {
                return ModGcd::Candidate(c);
            }
            last = Some(c);
        }
    }
    ModGcd::Unknown
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn v(c: &[i64]) -> Vec<Rational> {
        c.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn coprime_and_common() {
        assert!(matches!(modular_gcd(&v(&[1, 1]), &v(&[-1, 1]), &mut |_| true), ModGcd::One));
        // (t+1)(t-2) and (t+1)(3t+5)
        match modular_gcd(&v(&[-2, -1, 1]), &v(&[5, 8, 3]), &mut |_| true) {
            ModGcd::Candidate(c) => assert_eq!(c, v(&[1, 1])),
            _ => panic!("expected a candidate"),
        }
        // (2t - 1)/3 twice
        let a = vec![rat(-1, 3), rat(2, 3)];
        match modular_gcd(&a, &a, &mut |_| true) {
            ModGcd::Candidate(c) => assert_eq!(c, vec![rat(-1, 2), rat(1, 1)]),
            _ => panic!("expected a candidate"),
        }
    }

    #[test]
    fn reconstruction() {
        let m = BigInt::from(PRIMES[0]);
        let u = BigInt::from(reduce(&rat(-7, 3), PRIMES[0]).unwrap());
        assert_eq!(rational_reconstruct(&u, &m), Some(rat(-7, 3)));
    }
}
