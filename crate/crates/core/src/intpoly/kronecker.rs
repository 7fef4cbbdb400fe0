//! Two independent tests for "all roots are roots of unity".
//!
//! [`is_kronecker_graeffe`] iterates the root-squaring transform and watches for
//! a repeat or a coefficient blow-up. [`kronecker_factor`] performs trial
//! division by cyclotomic polynomials and returns the exact factorization.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::cyclotomic::cyclotomic_shared;
use super::{CyclotomicFactorization, IntPolynomial};
use crate::arith::{cyclotomic_index_bound, root_of_unity_field, totient};
use crate::error::{Error, Result};

/// Root-squaring transform: the monic `g` with `g(x^2) = (-1)^n f(x) f(-x)`, `n = deg f`.
pub fn graeffe(f: &IntPolynomial) -> Result<IntPolynomial> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let (even, odd) = split_parity(f);
    let shifted_odd_sq = {
        let sq = &odd * &odd;
        let mut c = vec![BigInt::default()];
        c.extend_from_slice(sq.coeffs());
        IntPolynomial::new(c)
    };
    let g = &(&even * &even) - &shifted_odd_sq;
    Ok(if f.degree().unwrap_or(0) % 2 == 1 {
        -g
    } else {
        g
    })
}

/// `f(x) = E(x^2) + x O(x^2)`
fn split_parity(f: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
    let even = f.coeffs().iter().step_by(2).cloned().collect();
    let odd = f.coeffs().iter().skip(1).step_by(2).cloned().collect();
    (IntPolynomial::new(even), IntPolynomial::new(odd))
}

/// Graeffe-iteration Kronecker test.
///
/// Stops with `true` as soon as an iterate repeats an earlier one (the root
/// multiset is closed under squaring, so every root is a root of unity) and
/// with `false` once a coefficient exceeds `2^deg`, which no monic polynomial
/// with all roots on the unit circle can reach.
pub fn is_kronecker_graeffe(f: &IntPolynomial) -> Result<bool> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if f.constant_term() == BigInt::default() {
        return Err(Error::ZeroConstantTerm);
    }
    let bound = BigInt::one() << f.degree().unwrap_or(0);
    let mut seen = HashSet::new();
    let mut current = f.clone();
    loop {
        if current.max_abs_coeff() > bound {
            return Ok(false);
        }
        if !seen.insert(current.clone()) {
            return Ok(true);
        }
        current = graeffe(&current)?;
    }
}

/// Exact factorization into cyclotomic polynomials, or `None` if there is none.
///
/// Indices are tried in ascending order and each `Φ_d` is divided out as many
/// times as it goes. Only indices with `φ(d)` at most the remaining degree can
/// occur. A cheap necessary condition is checked before dividing: `f` must
/// vanish at a primitive `d`-th root of unity in a prime field `F_p` with
/// `d | p - 1`.
pub fn kronecker_factor(f: &IntPolynomial) -> Result<Option<CyclotomicFactorization>> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    if !f.constant_term().abs().is_one() {
        return Ok(None);
    }
    let mut factors = CyclotomicFactorization::new();
    let mut remaining = f.clone();
    let mut rem_deg = remaining.degree().unwrap_or(0);
    let mut index_bound = cyclotomic_index_bound(rem_deg);
    let mut d = 1u64;
    while rem_deg > 0 && d < index_bound {
        if totient(d) as usize <= rem_deg {
            let (p, root) = root_of_unity_field(d);
            if remaining.eval_mod(root, p) == 0 {
                let (count, cofactor) = remaining.divide_out(&cyclotomic_shared(d));
                if count > 0 {
                    factors.push(d, count);
                    remaining = cofactor;
                    rem_deg = remaining.degree().unwrap_or(0);
                    index_bound = cyclotomic_index_bound(rem_deg);
                }
            }
        }
        d += 1;
    }
    Ok(remaining.is_one_poly().then_some(factors))
}

impl IntPolynomial {
    fn is_one_poly(&self) -> bool {
        self.coeffs().len() == 1 && self.coeffs()[0].is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intpoly::cyclotomic;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn semigroup_5678() -> IntPolynomial {
        p(&[1, -1, 0, 0, 0, 1, 0, 0, 0, -1, 1])
    }

    #[test]
    fn graeffe_examples() {
        assert_eq!(graeffe(&p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(graeffe(&p(&[-2, 1])).unwrap(), p(&[-4, 1]));
        assert_eq!(graeffe(&p(&[1, -1, 1])).unwrap(), p(&[1, 1, 1]));
        assert_eq!(graeffe(&p(&[1, 2])), Err(Error::NotMonic));
    }

    #[test]
    fn graeffe_maps_cyclotomics_by_squaring_orders() {
        // odd d: fixed; d = 2k, k odd: Φ_k; 4 | d: Φ_{d/2}^2
        assert_eq!(graeffe(&cyclotomic(15)).unwrap(), cyclotomic(15));
        assert_eq!(graeffe(&cyclotomic(30)).unwrap(), cyclotomic(15));
        assert_eq!(graeffe(&cyclotomic(12)).unwrap(), cyclotomic(6).pow(2));
    }

    #[test]
    fn graeffe_test_examples() {
        assert_eq!(is_kronecker_graeffe(&p(&[1, -1, 1])), Ok(true));
        assert_eq!(is_kronecker_graeffe(&semigroup_5678()), Ok(false));
        assert_eq!(is_kronecker_graeffe(&p(&[-2, 1])), Ok(false));
        assert_eq!(
            is_kronecker_graeffe(&p(&[0, 1])),
            Err(Error::ZeroConstantTerm)
        );
        assert_eq!(is_kronecker_graeffe(&p(&[1, 3])), Err(Error::NotMonic));
        assert_eq!(is_kronecker_graeffe(&p(&[1])), Ok(true));
    }

    #[test]
    fn factor_examples() {
        let f = kronecker_factor(&p(&[1, -1, 1])).unwrap().unwrap();
        assert_eq!(f.factors.into_iter().collect::<Vec<_>>(), vec![(6, 1)]);
        assert_eq!(kronecker_factor(&semigroup_5678()).unwrap(), None);
        let sq = kronecker_factor(&p(&[1, -2, 1])).unwrap().unwrap();
        assert_eq!(sq.factors.into_iter().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(kronecker_factor(&p(&[2, 1])).unwrap(), None);
        assert_eq!(kronecker_factor(&p(&[1, 1, 2])), Err(Error::NotMonic));
        assert!(kronecker_factor(&p(&[1])).unwrap().unwrap().is_empty());
    }

    #[test]
    fn factors_large_index() {
        let f = &cyclotomic(210) * &cyclotomic(1155);
        let fac = kronecker_factor(&f).unwrap().unwrap();
        assert_eq!(
            fac.factors.into_iter().collect::<Vec<_>>(),
            vec![(210, 1), (1155, 1)]
        );
    }

    fn cyclotomic_product() -> impl Strategy<Value = Vec<(u64, u32)>> {
        prop::collection::vec((1u64..60, 1u32..3), 0..4)
    }

    proptest! {
        #[test]
        fn products_of_cyclotomics_are_recovered(parts in cyclotomic_product()) {
            let mut fac = CyclotomicFactorization::new();
            for (d, e) in parts {
                fac.push(d, e);
            }
            let f = fac.expand();
            prop_assert_eq!(kronecker_factor(&f).unwrap(), Some(fac));
            prop_assert_eq!(is_kronecker_graeffe(&f).unwrap(), true);
        }

        #[test]
        fn graeffe_is_multiplicative(a in prop::collection::vec(-3i64..4, 0..6),
                                     b in prop::collection::vec(-3i64..4, 0..6)) {
            let mut a = a; a.push(1);
            let mut b = b; b.push(1);
            let (f, g) = (p(&a), p(&b));
            let lhs = graeffe(&(&f * &g)).unwrap();
            let rhs = &graeffe(&f).unwrap() * &graeffe(&g).unwrap();
            prop_assert_eq!(lhs.clone(), rhs);
            prop_assert_eq!(lhs.degree(), (&f * &g).degree());
            prop_assert!(lhs.is_monic());
        }
    }
}
