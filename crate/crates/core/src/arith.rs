//! Small integer number theory used throughout the crate.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

pub use num_integer::{gcd, lcm};

/// gcd of a slice; 0 for the empty slice.
pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

/// Prime factorization as ascending (prime, exponent) pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n`, ascending. Empty for `n == 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

pub fn mobius(n: u64) -> i64 {
    if n == 0 {
        return 0;
    }
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn totient(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Smallest `d` such that every index `d' >= d` has `totient(d') > degree`.
///
/// Uses the Rosser–Schoenfeld lower bound
/// `phi(n) > n / (e^gamma ln ln n + 3 / ln ln n)` for `n >= 3`, whose right side
/// is increasing in `n`.
pub fn cyclotomic_index_bound(degree: usize) -> u64 {
    const EXP_GAMMA: f64 = 1.781_072_417_990_198;
    let lower = |n: u64| -> f64 {
        let ll = (n as f64).ln().ln();
        n as f64 / (EXP_GAMMA * ll + 3.0 / ll)
    };
    let target = degree as f64;
    let mut n = 3u64;
    while lower(n) <= target {
        n = n.saturating_add(n / 8 + 1);
    }
    // bisect back down so the bound stays tight
    let (mut lo, mut hi) = (3u64, n);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if lower(mid) > target {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo.max(3)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// A prime `p ≡ 1 (mod d)` together with an element of multiplicative order exactly `d`.
pub fn root_of_unity_field(d: u64) -> (u64, u64) {
    static CACHE: OnceLock<Mutex<HashMap<u64, (u64, u64)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&hit) = cache.lock().unwrap().get(&d) {
        return hit;
    }
    let found = search_root_of_unity_field(d);
    cache.lock().unwrap().insert(d, found);
    found
}

fn search_root_of_unity_field(d: u64) -> (u64, u64) {
    const FLOOR: u64 = 1 << 40;
    let mut k = FLOOR / d + 1;
    let d_primes: Vec<u64> = factorize(d).into_iter().map(|(p, _)| p).collect();
    loop {
        let p = k * d + 1;
        k += 1;
        if !is_prime(p) {
            continue;
        }
        if d == 1 {
            return (p, 1);
        }
        let cofactor = (p - 1) / d;
        for g in 2..p {
            let r = pow_mod(g, cofactor, p);
            if r == 1 {
                continue;
            }
            if d_primes.iter().all(|&q| pow_mod(r, d / q, p) != 1) {
                return (p, r);
            }
        }
    }
}
