//! Polynomial relations `H_S(x^w) f(x) = H_T(x)` between numerical semigroups.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{gcd, gcd_all, is_prime};
use crate::cyclotomy::semigroup_polynomial;
use crate::error::{Error, Result};
use crate::intpoly::IntPolynomial;
use crate::semigroup::NumericalSemigroup;
use crate::structure::{verify_gluing, GluingTree};

/// `H_S(x^w) f(x) = H_T(x)`, stored in the polynomial form
/// `P_S(x^w) f(x) = P_T(x) (1 + x + ... + x^{w-1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialRelation {
    pub source: NumericalSemigroup,
    pub target: NumericalSemigroup,
    pub w: u64,
    pub f: IntPolynomial,
}

#[derive(Serialize, Deserialize)]
struct RelationJson {
    source: Vec<u64>,
    target: Vec<u64>,
    w: u64,
    f: IntPolynomial,
}

fn relation_holds(
    source: &NumericalSemigroup,
    target: &NumericalSemigroup,
    w: u64,
    f: &IntPolynomial,
) -> bool {
    // degrees first: w (F(S) + 1) + deg f = F(T) + w
    let Some(deg_f) = f.degree() else {
        return false;
    };
    let lhs_degree = (w as u128) * ((source.frobenius() + 1) as u128) + deg_f as u128;
    if lhs_degree != (target.frobenius() + 1) as u128 + w as u128 - 1 {
        return false;
    }
    let lhs = &semigroup_polynomial(source).compose_power(w as usize) * f;
    let rhs = &semigroup_polynomial(target) * &IntPolynomial::geometric(w as usize);
    lhs == rhs
}

impl PolynomialRelation {
    /// Checks the defining identity exactly.
    pub fn new(
        source: NumericalSemigroup,
        target: NumericalSemigroup,
        w: u64,
        f: IntPolynomial,
    ) -> Result<Self> {
        if w == 0 {
            return Err(Error::InvalidRelation("w must be positive".into()));
        }
        if !relation_holds(&source, &target, w, &f) {
            return Err(Error::InvalidRelation(format!(
                "{source} -> {target} with w = {w}"
            )));
        }
        Ok(Self {
            source,
            target,
            w,
            f,
        })
    }

    /// Composes `S -> T` (this) with `T -> V`: `(S -> V, w1 w2, f1(x^{w2}) f2(x))`.
    pub fn compose(&self, next: &PolynomialRelation) -> Result<PolynomialRelation> {
        if self.target != next.source {
            return Err(Error::InvalidRelation("relations do not chain".into()));
        }
        let w = self
            .w
            .checked_mul(next.w)
            .ok_or_else(|| Error::TooLarge("composed scale".into()))?;
        let f = &self.f.compose_power(next.w as usize) * &next.f;
        PolynomialRelation::new(self.source.clone(), next.target.clone(), w, f)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&RelationJson {
            source: self.source.generators().to_vec(),
            target: self.target.generators().to_vec(),
            w: self.w,
            f: self.f.clone(),
        })
        .expect("relation serializes")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::from_str(&self.to_json()).expect("valid JSON")
    }

    /// Decodes and re-verifies the identity.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RelationJson = serde_json::from_str(text)?;
        let source = NumericalSemigroup::from_generators(&raw.source)?;
        let target = NumericalSemigroup::from_generators(&raw.target)?;
        Self::new(source, target, raw.w, raw.f)
    }
}

/// `f = P_T (1 + ... + x^{w-1}) / P_S(x^w)` when the division is exact.
pub fn relation_quotient(
    s: &NumericalSemigroup,
    t: &NumericalSemigroup,
    w: u64,
) -> Option<PolynomialRelation> {
    if w == 0 || t.frobenius() < w as i64 * s.frobenius() {
        return None;
    }
    let numerator = &semigroup_polynomial(t) * &IntPolynomial::geometric(w as usize);
    let f = numerator
        .div_exact(&semigroup_polynomial(s).compose_power(w as usize))
        .ok()?;
    Some(PolynomialRelation {
        source: s.clone(),
        target: t.clone(),
        w,
        f,
    })
}

/// The four identities every relation satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FeenReport {
    /// `f(0) = 1`
    pub constant_term: bool,
    /// `f(1) = w`
    pub value_at_one: bool,
    /// `2 f'(1) = w (2 g(T) - 2 w g(S) + w - 1)`
    pub derivative_at_one: bool,
    /// `F(T) = w F(S) + deg f`
    pub frobenius_degree: bool,
}

impl FeenReport {
    pub fn all_pass(&self) -> bool {
        self.constant_term && self.value_at_one && self.derivative_at_one && self.frobenius_degree
    }
}

pub fn feen_check(rel: &PolynomialRelation) -> FeenReport {
    let w = BigInt::from(rel.w);
    let gs = BigInt::from(rel.source.genus());
    let gt = BigInt::from(rel.target.genus());
    let expected_derivative = &w * (BigInt::from(2) * gt - BigInt::from(2) * &w * gs + &w - 1);
    let degree = rel.f.degree().map(|d| d as i64);
    FeenReport {
        constant_term: rel.f.constant_term().is_one(),
        value_at_one: rel.f.eval_at_one() == w,
        derivative_at_one: BigInt::from(2) * rel.f.derivative_at_one() == expected_derivative,
        frobenius_degree: degree
            .is_some_and(|d| rel.target.frobenius() == rel.w as i64 * rel.source.frobenius() + d),
    }
}

/// Offsets `0 = e_1 < ... < e_w` with `f = Σ x^{e_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OffsetDecomposition {
    pub offsets: Vec<u64>,
}

impl OffsetDecomposition {
    /// `gcd` of the nonzero offsets, `None` when `0` is the only offset.
    pub fn nonzero_gcd(&self) -> Option<u64> {
        let nonzero: Vec<u64> = self.offsets.iter().copied().filter(|&e| e > 0).collect();
        (!nonzero.is_empty()).then(|| gcd_all(&nonzero))
    }
}

/// Offsets of a 0/1 relation, after checking that the residues mod `w` are
/// complete and that every `t` is written as `e_i + w s` (`s ∈ S`) exactly
/// once if `t ∈ T` and never otherwise.
pub fn offsets_decomposition(rel: &PolynomialRelation) -> Option<OffsetDecomposition> {
    if rel.f.coeffs().iter().any(|c| !c.is_zero() && !c.is_one()) {
        return None;
    }
    let offsets: Vec<u64> = rel.f.support().into_iter().map(|e| e as u64).collect();
    let w = rel.w;
    if offsets.len() as u64 != w || offsets.first() != Some(&0) {
        return None;
    }
    let mut residues: Vec<u64> = offsets.iter().map(|e| e % w).collect();
    residues.sort_unstable();
    residues.dedup();
    if residues.len() as u64 != w {
        return None;
    }
    let max_offset = *offsets.last().unwrap();
    let bound = (rel.target.conductor() + max_offset + w) as usize;
    let mut hits = vec![0u32; bound + 1];
    for &e in &offsets {
        let mut s = 0u64;
        while (e + w * s) as usize <= bound {
            if rel.source.contains(s as i64) {
                hits[(e + w * s) as usize] += 1;
            }
            s += 1;
        }
    }
    let exact = hits
        .iter()
        .enumerate()
        .all(|(t, &h)| h == u32::from(rel.target.contains(t as i64)));
    exact.then_some(OffsetDecomposition { offsets })
}

/// `Q = P_T / P_S(x^w)` for a relation with `f ∈ ℕ[x]`; checks that `Q(0) = 1`,
/// `Q` is monic and its nonzero coefficients alternate between `1` and `-1`.
pub fn alternating_quotient(rel: &PolynomialRelation) -> Result<IntPolynomial> {
    if rel.f.coeffs().iter().any(|c| c.is_negative()) {
        return Err(Error::NonNonnegativeRelation);
    }
    let q = semigroup_polynomial(&rel.target)
        .div_exact(&semigroup_polynomial(&rel.source).compose_power(rel.w as usize))
        .map_err(|_| Error::FormulaMismatch("P_S(x^w) does not divide P_T".into()))?;
    if !q.constant_term().is_one() || !q.is_monic() || !q.alternation_check() {
        return Err(Error::FormulaMismatch(format!(
            "quotient {q} is not alternating"
        )));
    }
    Ok(q)
}

/// `<p, q> -> <p^m, q^n>` with `w = p^{m-1} q^{n-1}` and
/// `f = Σ_{j < q^{n-1}} Σ_{k < p^{m-1}} x^{j p^m + k q^n}`.
pub fn prime_power_relation(p: u64, q: u64, m: u32, n: u32) -> Result<PolynomialRelation> {
    for x in [p, q] {
        if !is_prime(x) {
            return Err(Error::NotPrime(x));
        }
    }
    if p == q {
        return Err(Error::NotDistinct);
    }
    if m < 1 || n < 1 {
        return Err(Error::ParameterOutOfRange("m, n must be at least 1".into()));
    }
    let too_large = || Error::TooLarge(format!("<{p}^{m}, {q}^{n}>"));
    let pm = p.checked_pow(m).ok_or_else(too_large)?;
    let qn = q.checked_pow(n).ok_or_else(too_large)?;
    let (pm1, qn1) = (pm / p, qn / q);
    let w = pm1.checked_mul(qn1).ok_or_else(too_large)?;
    let exps = (0..qn1).flat_map(|j| (0..pm1).map(move |k| (j * pm + k * qn) as usize));
    let f = IntPolynomial::from_exponents(exps);
    let source = NumericalSemigroup::from_generators(&[p, q])?;
    let target = NumericalSemigroup::from_generators(&[pm, qn])?;
    let rel = PolynomialRelation::new(source, target, w, f)?;
    if offsets_decomposition(&rel).is_none() {
        return Err(Error::FormulaMismatch(
            "offsets do not write T uniquely".into(),
        ));
    }
    Ok(rel)
}

/// `S = a1·S1 +_{a1 a2} a2·S2` with its parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gluing {
    pub a1: u64,
    pub s1: NumericalSemigroup,
    pub a2: u64,
    pub s2: NumericalSemigroup,
}

impl Gluing {
    pub fn glue(&self) -> Result<NumericalSemigroup> {
        verify_gluing(&self.s1, self.a1, &self.s2, self.a2)
    }

    /// The top gluing of a tree, or `None` for a leaf.
    pub fn from_tree(tree: &GluingTree) -> Result<Option<Gluing>> {
        match tree {
            GluingTree::Leaf => Ok(None),
            GluingTree::Node {
                a1,
                left,
                a2,
                right,
            } => Ok(Some(Gluing {
                a1: *a1,
                s1: left.semigroup()?,
                a2: *a2,
                s2: right.semigroup()?,
            })),
        }
    }
}

fn apery_relation(
    from: &NumericalSemigroup,
    scale_from: u64,
    other: &NumericalSemigroup,
    scale_other: u64,
    glued: &NumericalSemigroup,
) -> Result<PolynomialRelation> {
    let f = IntPolynomial::from_exponents(
        other
            .apery(scale_from)
            .into_iter()
            .map(|v| (v * scale_other) as usize),
    );
    PolynomialRelation::new(from.clone(), glued.clone(), scale_from, f)
}

/// `(S2 -> S, w = a2, f = Σ_{v ∈ Ap(S1; a2)} x^{a1 v})` and the symmetric `S1 -> S`.
pub fn relation_from_gluing(
    a1: u64,
    s1: &NumericalSemigroup,
    a2: u64,
    s2: &NumericalSemigroup,
) -> Result<(PolynomialRelation, PolynomialRelation)> {
    let glued = verify_gluing(s1, a1, s2, a2)?;
    let from_s2 = apery_relation(s2, a2, s1, a1, &glued)?;
    let from_s1 = apery_relation(s1, a1, s2, a2, &glued)?;
    Ok((from_s2, from_s1))
}

/// Reads a gluing `T = u·U +_{uw} w·S` off a 0/1 relation, where `u` is the gcd
/// of the nonzero offsets and `U = <w, e_2/u, ..., e_w/u>`. Requires `u ∈ S`.
pub fn relation_to_gluing(rel: &PolynomialRelation) -> Option<Gluing> {
    let offsets = offsets_decomposition(rel)?;
    let u = offsets.nonzero_gcd()?;
    if !rel.source.contains(u as i64) || gcd(u, rel.w) != 1 {
        return None;
    }
    let mut gens = vec![rel.w];
    gens.extend(offsets.offsets.iter().filter(|&&e| e > 0).map(|e| e / u));
    let big_u = NumericalSemigroup::from_generators(&gens).ok()?;
    let gluing = Gluing {
        a1: u,
        s1: big_u,
        a2: rel.w,
        s2: rel.source.clone(),
    };
    (gluing.glue().ok()? == rel.target).then_some(gluing)
}

/// With `d = gcd(n_1, ..., n_{k-1})` and `U = <n_1/d, ..., n_{k-1}/d, n_k>`:
/// `H_U(x^d) (1 - x^{n_k d}) / (1 - x^{n_k}) = H_V(x)` for `V = <n_1, ..., n_k>`.
pub fn gcd_reduction_relation(gens: &[u64]) -> Result<PolynomialRelation> {
    let v = NumericalSemigroup::from_generators(gens)?;
    let (last, rest) = gens.split_last().ok_or(Error::EmptyGenerators)?;
    if rest.is_empty() {
        return Err(Error::DegenerateReduction);
    }
    let d = gcd_all(rest);
    if d == 1 {
        return Err(Error::DegenerateReduction);
    }
    let mut reduced: Vec<u64> = rest.iter().map(|g| g / d).collect();
    reduced.push(*last);
    let u = NumericalSemigroup::from_generators(&reduced)?;
    let f = IntPolynomial::from_exponents((0..d).map(|i| (i * last) as usize));
    PolynomialRelation::new(u, v, d, f)
}

/// Default search bound `F(T) + 2` for [`is_polynomially_related`].
pub fn default_w_max(t: &NumericalSemigroup) -> u64 {
    (t.frobenius() + 2).max(1) as u64
}

/// All relations `S -> T` with `w <= w_max`, ascending in `w`.
///
/// When `S != T` and relations exist, the reverse direction is searched as
/// well; relations both ways would contradict antisymmetry and are reported
/// as [`Error::OrderViolation`].
pub fn is_polynomially_related(
    s: &NumericalSemigroup,
    t: &NumericalSemigroup,
    w_max: u64,
) -> Result<Vec<PolynomialRelation>> {
    let found = related_one_way(s, t, w_max);
    if s != t && !found.is_empty() && !related_one_way(t, s, default_w_max(s)).is_empty() {
        return Err(Error::OrderViolation(format!(
            "{s} and {t} are related both ways"
        )));
    }
    Ok(found)
}

fn related_one_way(
    s: &NumericalSemigroup,
    t: &NumericalSemigroup,
    w_max: u64,
) -> Vec<PolynomialRelation> {
    (1..=w_max)
        .into_par_iter()
        .filter_map(|w| relation_quotient(s, t, w))
        .collect()
}
