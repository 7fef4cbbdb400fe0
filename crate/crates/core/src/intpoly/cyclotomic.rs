use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::IntPolynomial;
use crate::arith::{divisors, lcm, mobius, totient};
use crate::error::{Error, Result};

/// The `n`-th cyclotomic polynomial, from the Möbius product over `x^d - 1`.
///
/// Numerator factors are multiplied first, then the denominator factors are
/// divided out exactly. Results are memoized.
pub fn cyclotomic(n: u64) -> IntPolynomial {
    (*cyclotomic_shared(n)).clone()
}

pub(crate) fn cyclotomic_shared(n: u64) -> Arc<IntPolynomial> {
    assert!(n >= 1, "cyclotomic index must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<IntPolynomial>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let poly = Arc::new(mobius_product(n));
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

fn mobius_product(n: u64) -> IntPolynomial {
    let mut numerator = IntPolynomial::one();
    let mut denominator = Vec::new();
    for d in divisors(n) {
        match mobius(n / d) {
            1 => numerator = &numerator * &IntPolynomial::x_pow_minus_one(d as usize),
            -1 => denominator.push(d),
            _ => {}
        }
    }
    for d in denominator {
        numerator = numerator
            .div_exact(&IntPolynomial::x_pow_minus_one(d as usize))
            .expect("Möbius product divides exactly");
    }
    numerator
}

/// A product `∏ Φ_d^{e_d}` recorded as the map `d -> e_d` (all exponents positive).
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CyclotomicFactorization {
    pub factors: BTreeMap<u64, u32>,
}

impl CyclotomicFactorization {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, index: u64, exponent: u32) {
        if exponent > 0 {
            *self.factors.entry(index).or_insert(0) += exponent;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `Σ e_d φ(d)`
    pub fn degree(&self) -> u64 {
        self.factors
            .iter()
            .map(|(&d, &e)| totient(d) * e as u64)
            .sum()
    }

    /// lcm of the indices; 1 for the empty product.
    pub fn depth(&self) -> u64 {
        self.factors.keys().fold(1, |acc, &d| lcm(acc, d))
    }

    /// Largest exponent; 1 for the empty product.
    pub fn height(&self) -> u32 {
        self.factors.values().copied().max().unwrap_or(1)
    }

    /// Multiplies the factors back out.
    pub fn expand(&self) -> IntPolynomial {
        self.factors
            .iter()
            .fold(IntPolynomial::one(), |acc, (&d, &e)| {
                &acc * &cyclotomic_shared(d).pow(e)
            })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let parsed: Self = serde_json::from_str(text)?;
        if let Some((&d, &e)) = parsed.factors.iter().find(|(&d, &e)| d == 0 || e == 0) {
            return Err(Error::Parse(format!("invalid factor {d}:{e}")));
        }
        Ok(parsed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("factorization serializes")
    }
}
