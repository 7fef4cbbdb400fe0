use serde::Serialize;

use crate::arith::{gcd, is_prime, lcm};
use crate::cyclotomy::{is_cyclotomic, semigroup_polynomial};
use crate::error::{Error, Result};
use crate::intpoly::{CyclotomicFactorization, IntPolynomial};
use crate::semigroup::NumericalSemigroup;

use super::free::SmoothSequence;

/// A family member together with its closed-form polynomial and Apéry set
/// with respect to the multiplicity, both checked against direct computation.
#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub semigroup: NumericalSemigroup,
    pub closed_form: IntPolynomial,
    pub apery: Vec<u64>,
}

/// `(1 - x) / (1 - x^m) · Σ_{w ∈ Ap} x^w`
fn apery_polynomial(m: u64, apery: &[u64]) -> IntPolynomial {
    let sum = IntPolynomial::from_exponents(apery.iter().map(|&w| w as usize));
    (&IntPolynomial::one_minus_x_pow(1) * &sum)
        .div_exact(&IntPolynomial::one_minus_x_pow(m as usize))
        .expect("Apéry sums are divisible")
}

fn finish(
    gens: Vec<u64>,
    closed_form: IntPolynomial,
    mut apery: Vec<u64>,
    label: &str,
) -> Result<FamilyMember> {
    let semigroup = NumericalSemigroup::from_generators(&gens)?;
    apery.sort_unstable();
    let mut direct = semigroup.apery(semigroup.multiplicity());
    direct.sort_unstable();
    if direct != apery {
        return Err(Error::FormulaMismatch(format!(
            "{label}: Apéry set of {semigroup}"
        )));
    }
    let p = semigroup_polynomial(&semigroup);
    if p != closed_form || p != apery_polynomial(semigroup.multiplicity(), &apery) {
        return Err(Error::FormulaMismatch(format!(
            "{label}: polynomial of {semigroup}"
        )));
    }
    Ok(FamilyMember {
        semigroup,
        closed_form,
        apery,
    })
}

/// `<m, m+1, qm+2q+2, ..., qm+m-1>` for `m >= 2q+3`, `q >= 1`.
pub fn family_sym1(m: u64, q: u64) -> Result<FamilyMember> {
    if q < 1 || m < 2 * q + 3 {
        return Err(Error::ParameterOutOfRange(format!(
            "sym1 needs q >= 1 and m >= 2q+3, got m={m}, q={q}"
        )));
    }
    let mut gens = vec![m, m + 1];
    gens.extend(q * m + 2 * q + 2..=q * m + m - 1);

    let mut apery: Vec<u64> = (0..=q).map(|k| k * (m + 1)).collect();
    apery.extend(q * m + 2 * q + 2..=q * m + m - 1);
    apery.extend((q + 1..=2 * q + 1).map(|k| k * (m + 1)));

    let first = IntPolynomial::one_minus_x_pow((2 * (m + 1) * (q + 1)) as usize)
        .div_exact(&IntPolynomial::one_minus_x_pow((m + 1) as usize))
        .expect("m+1 divides 2(m+1)(q+1)");
    let second = &IntPolynomial::monomial(1, (q * m + 2 * q + 2) as usize)
        * &IntPolynomial::geometric((m - 2 * q - 2) as usize);
    let closed_form = (&IntPolynomial::one_minus_x_pow(1) * &(&first + &second))
        .div_exact(&IntPolynomial::one_minus_x_pow(m as usize))
        .map_err(|_| Error::FormulaMismatch("sym1 closed form is not a polynomial".into()))?;
    finish(gens, closed_form, apery, "sym1")
}

/// `<m, m+1, (q+1)m+q+2, ..., (q+1)m+m-q-2>` for `m >= 2q+4`, `q >= 0`.
pub fn family_sym2(m: u64, q: u64) -> Result<FamilyMember> {
    if m < 2 * q + 4 {
        return Err(Error::ParameterOutOfRange(format!(
            "sym2 needs m >= 2q+4, got m={m}, q={q}"
        )));
    }
    let base = (q + 1) * m;
    let mut gens = vec![m, m + 1];
    gens.extend(base + q + 2..=base + m - q - 2);

    let tail_start = (q + 3) * m - q - 1;
    let mut apery: Vec<u64> = (0..=q + 1).map(|k| k * (m + 1)).collect();
    apery.extend((q + 2..=m - q - 2).map(|h| base + h));
    apery.extend((0..=q).map(|l| tail_start + l * (m + 1)));

    let sum = IntPolynomial::from_exponents(apery.iter().map(|&w| w as usize));
    let closed_form = (&IntPolynomial::one_minus_x_pow(1) * &sum)
        .div_exact(&IntPolynomial::one_minus_x_pow(m as usize))
        .map_err(|_| Error::FormulaMismatch("sym2 closed form is not a polynomial".into()))?;
    finish(gens, closed_form, apery, "sym2")
}

/// `B_m(a, b) = <a^m, a^{m-1} b, ..., b^m>` with its smooth witness.
#[derive(Debug, Clone)]
pub struct BinomialMember {
    pub semigroup: NumericalSemigroup,
    pub smooth: SmoothSequence,
    /// `Σ_{k=1}^m a^{m+1-k} b^k - Σ_{k=0}^m a^{m-k} b^k`
    pub frobenius_formula: i64,
}

pub fn binomial_semigroup(a: u64, b: u64, m: u32) -> Result<BinomialMember> {
    if a < 2 || b < 2 || m < 1 {
        return Err(Error::ParameterOutOfRange(format!(
            "binomial needs a, b >= 2 and m >= 1, got ({a}, {b}, {m})"
        )));
    }
    let g = gcd(a, b);
    if g != 1 {
        return Err(Error::NotCoprime(g));
    }
    let too_large = || Error::TooLarge(format!("B_{m}({a}, {b})"));
    let term = |k: u32| -> Result<u64> {
        a.checked_pow(m - k)
            .and_then(|x| b.checked_pow(k).and_then(|y| x.checked_mul(y)))
            .ok_or_else(too_large)
    };
    let terms: Vec<u64> = (0..=m).map(term).collect::<Result<_>>()?;
    let weighted = (1..=m)
        .map(|k| term(k).and_then(|t| t.checked_mul(a).ok_or_else(too_large)))
        .sum::<Result<u64>>()?;
    let frobenius_formula = weighted as i64 - terms.iter().sum::<u64>() as i64;

    let smooth = SmoothSequence::new(&terms)?;
    if smooth.ratios().iter().any(|&c| c != a) {
        return Err(Error::FormulaMismatch(
            "binomial ratios differ from a".into(),
        ));
    }
    let semigroup = NumericalSemigroup::from_generators(&terms)?;
    if semigroup.frobenius() != frobenius_formula || smooth.frobenius_smooth() != frobenius_formula
    {
        return Err(Error::FormulaMismatch(format!(
            "Frobenius number of {semigroup}"
        )));
    }
    Ok(BinomialMember {
        semigroup,
        smooth,
        frobenius_formula,
    })
}

/// `{Φ_{p^i q^j} : i, j >= 1, i + j <= n + 1}` for distinct primes `p`, `q`.
pub fn binomial_predicted_factorization(p: u64, q: u64, n: u32) -> Result<CyclotomicFactorization> {
    for x in [p, q] {
        if !is_prime(x) {
            return Err(Error::NotPrime(x));
        }
    }
    if p == q {
        return Err(Error::NotDistinct);
    }
    let mut fac = CyclotomicFactorization::new();
    for i in 1..=n {
        for j in 1..=n + 1 - i {
            fac.push(p.pow(i) * q.pow(j), 1);
        }
    }
    Ok(fac)
}

/// Computed depth of `B_n(p, q)` against `p^n q^n` and `p^{n+1} q^{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinomialDepthAudit {
    pub p: u64,
    pub q: u64,
    pub n: u32,
    pub factorization: CyclotomicFactorization,
    pub factorization_matches_prediction: bool,
    /// lcm of the factor indices.
    pub computed_depth: u64,
    pub computed_height: u32,
    /// `p^n q^n`
    pub lcm_prediction: u64,
    /// `p^{n+1} q^{n+1}`
    pub next_power_depth: u64,
    /// `next_power_depth / computed_depth`
    pub ratio_next_power_to_computed: u64,
}

pub fn binomial_depth_audit(p: u64, q: u64, n: u32) -> Result<BinomialDepthAudit> {
    let predicted = binomial_predicted_factorization(p, q, n)?;
    let member = binomial_semigroup(p, q, n)?;
    let factorization = is_cyclotomic(&member.semigroup).ok_or(Error::NotCyclotomic)?;
    let computed_depth = factorization.depth();
    let lcm_prediction = (p * q).pow(n);
    let next_power_depth = (p * q).pow(n + 1);
    debug_assert_eq!(
        predicted.depth(),
        predicted.factors.keys().fold(1, |acc, &d| lcm(acc, d))
    );
    Ok(BinomialDepthAudit {
        p,
        q,
        n,
        factorization_matches_prediction: factorization == predicted,
        computed_height: factorization.height(),
        factorization,
        computed_depth,
        lcm_prediction,
        next_power_depth,
        ratio_next_power_to_computed: next_power_depth / computed_depth,
    })
}
