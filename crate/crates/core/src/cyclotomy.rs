//! Semigroup polynomials, Hilbert series and cyclotomicity.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{divisors, mobius};
use crate::error::{Error, Result};
use crate::intpoly::{
    is_kronecker_graeffe, kronecker_factor, CyclotomicFactorization, IntPolynomial,
};
use crate::semigroup::NumericalSemigroup;

/// Above this degree `is_cyclotomic` skips the Graeffe cross-check; its
/// iterates carry coefficients of up to `deg` bits and cost `O(deg^2)` each.
pub const GRAEFFE_CROSSCHECK_MAX_DEGREE: usize = 128;

/// `P_S(x) = (1 - x) H_S(x)`, read off the membership table: the coefficient
/// of `x^s` is `1` if `s ∈ S, s-1 ∉ S`, `-1` if `s ∉ S, s-1 ∈ S`, else `0`.
pub fn semigroup_polynomial(s: &NumericalSemigroup) -> IntPolynomial {
    let top = s.conductor() as i64;
    let coeffs = (0..=top)
        .map(|k| match (s.contains(k), s.contains(k - 1)) {
            (true, false) => BigInt::from(1),
            (false, true) => BigInt::from(-1),
            _ => BigInt::zero(),
        })
        .collect();
    IntPolynomial::new(coeffs)
}

/// `Σ_{s ∈ S, s <= n} x^s`
pub fn hilbert_truncated(s: &NumericalSemigroup, n: u64) -> IntPolynomial {
    IntPolynomial::from_exponents(
        (0..=n)
            .filter(|&k| s.contains(k as i64))
            .map(|k| k as usize),
    )
}

/// The cyclotomic factorization of `P_S`, or `None` when `S` is not cyclotomic.
pub fn is_cyclotomic(s: &NumericalSemigroup) -> Option<CyclotomicFactorization> {
    let p = semigroup_polynomial(s);
    let factored = kronecker_factor(&p).expect("semigroup polynomials are monic");
    if p.degree().unwrap_or(0) <= GRAEFFE_CROSSCHECK_MAX_DEGREE {
        let graeffe = is_kronecker_graeffe(&p).expect("P_S(0) = 1");
        assert_eq!(
            graeffe,
            factored.is_some(),
            "Kronecker tests disagree on {s}: graeffe={graeffe}"
        );
    }
    if let Some(f) = &factored {
        debug_assert_eq!(f.expand(), p);
    }
    factored
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DepthHeight {
    pub depth: u64,
    pub height: u32,
}

/// Depth is the lcm of the factor indices, height the largest exponent.
/// `<1>` has `P = 1` and gets `(1, 1)`.
pub fn depth_height(s: &NumericalSemigroup) -> Result<DepthHeight> {
    let fac = is_cyclotomic(s).ok_or(Error::NotCyclotomic)?;
    Ok(DepthHeight {
        depth: fac.depth(),
        height: fac.height(),
    })
}

/// Prefix of the exponents `e_j` with `P_S = ∏ (1 - x^j)^{e_j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentSequence {
    pub prefix: Vec<BigInt>,
    pub finite: Option<bool>,
    pub full_support: Option<BTreeMap<u64, i64>>,
}

impl ExponentSequence {
    /// Checks `∏_{j <= J} (1 - x^j)^{e_j} ≡ target (mod x^{J+1})`.
    pub fn matches_modulo(&self, target: &IntPolynomial) -> bool {
        let order = self.prefix.len() + 1;
        let mut acc = IntPolynomial::one();
        for (j, e) in self.prefix.iter().enumerate() {
            acc = truncated_binomial_power(&acc, j + 1, e, order);
        }
        acc == target.truncate(order)
    }

    pub fn to_json_value(&self) -> Value {
        let prefix: Vec<Value> = self.prefix.iter().map(big_to_json).collect();
        let mut obj = json!({ "prefix": prefix, "finite": self.finite });
        if let Some(support) = &self.full_support {
            obj["support"] = json!(support);
        }
        obj
    }
}

fn big_to_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

/// `acc · (1 - x^j)^e mod x^order` for any integer `e`, through the binomial
/// series `Σ_k C(e, k) (-x^j)^k`.
fn truncated_binomial_power(
    acc: &IntPolynomial,
    j: usize,
    e: &BigInt,
    order: usize,
) -> IntPolynomial {
    let mut series = vec![BigInt::one()];
    let mut term = BigInt::one();
    for k in 1..=(order - 1) / j {
        // C(e, k) = C(e, k - 1) (e - k + 1) / k, with the sign of (-1)^k folded in
        term = -(term * (e - BigInt::from(k - 1))) / BigInt::from(k);
        series.push(term.clone());
    }
    let mut out = vec![BigInt::zero(); order];
    for (i, a) in acc.coeffs().iter().take(order).enumerate() {
        if a.is_zero() {
            continue;
        }
        for (k, b) in series.iter().enumerate() {
            let idx = i + k * j;
            if idx >= order {
                break;
            }
            out[idx] += a * b;
        }
    }
    IntPolynomial::new(out)
}

/// Exponents `b(1..=count)` with `f = ∏ (1 - x^j)^{b(j)}` as formal power series.
///
/// Power sums of reciprocal roots come from Newton's recursion
/// `s(k) + a_1 s(k-1) + ... + a_{k-1} s(1) + k a_k = 0`, then
/// `b(k) = (1/k) Σ_{d | k} μ(k/d) s(d)`.
pub fn cyclotomic_exponents(f: &IntPolynomial, count: usize) -> Vec<BigInt> {
    assert_eq!(f.constant_term(), BigInt::from(1), "needs f(0) = 1");
    let a = |i: usize| f.coeff(i);
    let mut power_sums: Vec<BigInt> = vec![BigInt::zero(); count + 1];
    for k in 1..=count {
        let mut acc = a(k) * BigInt::from(k);
        for i in 1..k {
            let ai = a(i);
            if !ai.is_zero() {
                acc += ai * &power_sums[k - i];
            }
        }
        power_sums[k] = -acc;
    }
    (1..=count as u64)
        .map(|k| {
            let total: BigInt = divisors(k)
                .into_iter()
                .map(|d| &power_sums[d as usize] * mobius(k / d))
                .sum();
            let kb = BigInt::from(k);
            assert!((&total % &kb).is_zero(), "exponent b({k}) not integral");
            total / kb
        })
        .collect()
}

pub fn exponent_sequence(s: &NumericalSemigroup, count: usize) -> ExponentSequence {
    ExponentSequence {
        prefix: cyclotomic_exponents(&semigroup_polynomial(s), count),
        finite: None,
        full_support: None,
    }
}

/// Whether the exponent sequence has finite support; when it does, the support
/// comes from expanding each `Φ_n = ∏_{d | n} (1 - x^d)^{μ(n/d)}`.
pub fn exponent_sequence_is_finite(s: &NumericalSemigroup) -> (bool, Option<BTreeMap<u64, i64>>) {
    match is_cyclotomic(s) {
        Some(fac) => (true, Some(exponent_support(&fac))),
        None => (false, None),
    }
}

/// Finite exponent support of a product of cyclotomic polynomials with indices > 1.
pub fn exponent_support(fac: &CyclotomicFactorization) -> BTreeMap<u64, i64> {
    let mut support = BTreeMap::new();
    for (&n, &e) in &fac.factors {
        for d in divisors(n) {
            *support.entry(d).or_insert(0i64) += e as i64 * mobius(n / d);
        }
    }
    support.retain(|_, v| *v != 0);
    support
}

/// Exponent prefix together with the finiteness flag and support.
pub fn exponent_sequence_full(s: &NumericalSemigroup, count: usize) -> ExponentSequence {
    let (finite, support) = exponent_sequence_is_finite(s);
    ExponentSequence {
        finite: Some(finite),
        full_support: support,
        ..exponent_sequence(s, count)
    }
}

/// `Q = H_S ∏ (1 - x^{n_i}) = Σ_n χ_S(n) x^n`, computed as
/// `P_S · ((1 - x^{n_1}) / (1 - x)) · ∏_{i >= 2} (1 - x^{n_i})`.
pub fn hilbert_numerator(s: &NumericalSemigroup) -> IntPolynomial {
    let gens = s.generators();
    let first = IntPolynomial::geometric(gens[0] as usize);
    gens[1..]
        .iter()
        .fold(&semigroup_polynomial(s) * &first, |acc, &g| {
            &acc * &IntPolynomial::one_minus_x_pow(g as usize)
        })
}

/// Greedy attempt to write the Hilbert numerator as `∏_{b ∈ Betti(S)} (1 - x^b)^{m_b}`.
pub fn betti_factor_attempt(s: &NumericalSemigroup) -> Option<BTreeMap<u64, u32>> {
    let mut residual = hilbert_numerator(s);
    let mut out = BTreeMap::new();
    for b in s.betti_elements() {
        let (count, rest) = residual.divide_out(&IntPolynomial::one_minus_x_pow(b as usize));
        if count > 0 {
            out.insert(b, count);
            residual = rest;
        }
    }
    (residual == IntPolynomial::one()).then_some(out)
}
