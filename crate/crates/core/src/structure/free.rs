use serde::Serialize;

use crate::arith::{gcd, gcd_all};
use crate::error::{Error, Result};
use crate::intpoly::IntPolynomial;

use super::gluing::representable;

/// An arrangement `a_1, ..., a_n` with `c_k a_k ∈ <a_1, ..., a_{k-1}>` for `k >= 2`,
/// where `d_k = gcd(a_1, ..., a_k)` and `c_k = d_{k-1} / d_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmoothSequence {
    terms: Vec<u64>,
    partial_gcds: Vec<u64>,
}

impl SmoothSequence {
    pub fn new(terms: &[u64]) -> Result<Self> {
        is_free_arrangement(terms)?.ok_or(Error::NotSmooth)
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    /// `d_1, ..., d_n`
    pub fn partial_gcds(&self) -> &[u64] {
        &self.partial_gcds
    }

    /// `c_k` for `k = 2..=n` (1-based `k`).
    pub fn ratio(&self, k: usize) -> u64 {
        self.partial_gcds[k - 2] / self.partial_gcds[k - 1]
    }

    /// `c_2, ..., c_n`
    pub fn ratios(&self) -> Vec<u64> {
        (2..=self.terms.len()).map(|k| self.ratio(k)).collect()
    }

    /// `(1 - x) ∏_{k >= 2} (1 - x^{c_k a_k}) / ∏_k (1 - x^{a_k})`
    pub fn leher_polynomial(&self) -> IntPolynomial {
        let numerator = self
            .terms
            .iter()
            .zip(std::iter::once(0).chain(self.ratios()))
            .skip(1)
            .fold(IntPolynomial::one_minus_x_pow(1), |acc, (&a, c)| {
                &acc * &IntPolynomial::one_minus_x_pow((c * a) as usize)
            });
        let denominator = self.terms.iter().fold(IntPolynomial::one(), |acc, &a| {
            &acc * &IntPolynomial::one_minus_x_pow(a as usize)
        });
        numerator
            .div_exact(&denominator)
            .expect("smooth sequences give exact quotients")
    }

    /// `Σ_{k >= 2} c_k a_k - Σ_k a_k`
    pub fn frobenius_smooth(&self) -> i64 {
        let weighted: u64 = (2..=self.terms.len())
            .map(|k| self.ratio(k) * self.terms[k - 1])
            .sum();
        weighted as i64 - self.terms.iter().sum::<u64>() as i64
    }
}

/// The smooth-sequence witness for this arrangement, or `None` if it is not smooth.
pub fn is_free_arrangement(seq: &[u64]) -> Result<Option<SmoothSequence>> {
    if seq.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if seq.contains(&0) {
        return Err(Error::NonPositiveGenerator);
    }
    let g = gcd_all(seq);
    if g != 1 {
        return Err(Error::NotCoprime(g));
    }
    let mut partial_gcds = vec![seq[0]];
    for k in 1..seq.len() {
        let prev = partial_gcds[k - 1];
        let d = gcd(prev, seq[k]);
        let c = prev / d;
        if !representable(&seq[..k], c * seq[k]) {
            return Ok(None);
        }
        partial_gcds.push(d);
    }
    Ok(Some(SmoothSequence {
        terms: seq.to_vec(),
        partial_gcds,
    }))
}

/// Every smooth sequence of distinct terms in `2..=max_term` whose partial gcds
/// strictly decrease (all `c_k >= 2`), so no term is redundant.
pub fn free_arrangements(max_term: u64) -> Vec<SmoothSequence> {
    let mut out = Vec::new();
    let mut seq = Vec::new();
    for first in 2..=max_term {
        seq.push(first);
        extend_arrangement(&mut seq, first, max_term, &mut out);
        seq.pop();
    }
    out
}

fn extend_arrangement(seq: &mut Vec<u64>, d: u64, max_term: u64, out: &mut Vec<SmoothSequence>) {
    if d == 1 {
        out.push(is_free_arrangement(seq).unwrap().expect("built smooth"));
        return;
    }
    for next in 2..=max_term {
        let nd = gcd(d, next);
        if nd == d || seq.contains(&next) {
            continue;
        }
        if representable(seq, (d / nd) * next) {
            seq.push(next);
            extend_arrangement(seq, nd, max_term, out);
            seq.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomy::semigroup_polynomial;
    use crate::semigroup::NumericalSemigroup;

    #[test]
    fn arrangement_examples() {
        let s = is_free_arrangement(&[4, 6, 9]).unwrap().unwrap();
        assert_eq!(s.ratios(), vec![2, 2]);
        assert_eq!(s.partial_gcds(), &[4, 2, 1]);
        assert_eq!(is_free_arrangement(&[4, 9, 6]).unwrap(), None);
        assert!(is_free_arrangement(&[1]).unwrap().is_some());
        assert_eq!(is_free_arrangement(&[4, 6]), Err(Error::NotCoprime(2)));
        assert_eq!(SmoothSequence::new(&[4, 9, 6]), Err(Error::NotSmooth));
    }

    #[test]
    fn leher_examples() {
        let s = SmoothSequence::new(&[4, 6, 9]).unwrap();
        assert_eq!(s.frobenius_smooth(), 11);
        assert_eq!(
            s.leher_polynomial(),
            semigroup_polynomial(&NumericalSemigroup::from_generators(&[4, 6, 9]).unwrap())
        );
        let t = SmoothSequence::new(&[2, 3]).unwrap();
        assert_eq!(t.frobenius_smooth(), 1);
        assert_eq!(
            SmoothSequence::new(&[1]).unwrap().leher_polynomial(),
            IntPolynomial::one()
        );
        assert_eq!(SmoothSequence::new(&[1]).unwrap().frobenius_smooth(), -1);
    }

    #[test]
    fn small_arrangements_are_consistent() {
        let all = free_arrangements(12);
        assert!(all.iter().any(|s| s.terms() == [4, 6, 9]));
        assert!(!all.iter().any(|s| s.terms() == [4, 9, 6]));
        for seq in all {
            let s = NumericalSemigroup::from_generators(seq.terms()).unwrap();
            assert_eq!(
                seq.leher_polynomial(),
                semigroup_polynomial(&s),
                "{:?}",
                seq.terms()
            );
            assert_eq!(seq.frobenius_smooth(), s.frobenius());
            assert!(s.is_symmetric());
        }
    }
}
