//! Dense polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are kept in ascending degree order with no trailing zeros, so
//! structural equality is polynomial equality. Hot paths (multiplication and
//! exact division) first try a checked `i128` kernel and fall back to `BigInt`
//! only when a value leaves that range.

mod cyclotomic;
mod kronecker;
mod text;

pub use cyclotomic::{cyclotomic, CyclotomicFactorization};
pub use kronecker::{graeffe, is_kronecker_graeffe, kronecker_factor};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn from_i128(coeffs: Vec<i128>) -> Self {
        Self::new(coeffs.into_iter().map(BigInt::from).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `c * x^k`
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::from(c);
        Self::new(coeffs)
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] += 1;
        Self::new(coeffs)
    }

    /// `1 - x^n`
    pub fn one_minus_x_pow(n: usize) -> Self {
        -Self::x_pow_minus_one(n)
    }

    /// `1 + x + ... + x^(w-1)`
    pub fn geometric(w: usize) -> Self {
        Self::new(vec![BigInt::one(); w])
    }

    /// Sum of `x^e` over the given exponents (repeats accumulate).
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for e in exps {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += 1;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub(crate) fn to_i128(&self) -> Option<Vec<i128>> {
        self.coeffs.iter().map(ToPrimitive::to_i128).collect()
    }

    /// `f(x^k)`
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1, "compose_power needs k >= 1");
        if k == 1 || self.coeffs.len() <= 1 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// `f(-x)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Residue modulo `x^n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `f'(1)`
    pub fn derivative_at_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * BigInt::from(i))
            .sum()
    }

    /// Value at `x` modulo the prime `p`.
    pub(crate) fn eval_mod(&self, x: u64, p: u64) -> u64 {
        let pb = BigInt::from(p);
        let mut acc = 0u64;
        for c in self.coeffs.iter().rev() {
            let r = match c.to_i64() {
                Some(v) => v.rem_euclid(p as i64) as u64,
                None => {
                    let m = c % &pb;
                    let m = if m.is_negative() { m + &pb } else { m };
                    m.to_u64().expect("residue fits")
                }
            };
            acc = (crate::arith::mul_mod(acc, x, p) + r) % p;
        }
        acc
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    /// Palindromic coefficient list.
    pub fn is_selfreciprocal(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.coeffs.iter().eq(self.coeffs.iter().rev()))
    }

    /// True iff the nonzero coefficients read `+1, -1, +1, ...` from the lowest degree up.
    pub fn alternation_check(&self) -> bool {
        let mut expect = BigInt::one();
        for c in self.coeffs.iter().filter(|c| !c.is_zero()) {
            if *c != expect {
                return false;
            }
            expect = -expect;
        }
        true
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient `q` with `self = q * divisor`, or an error when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if let (Some(a), Some(b)) = (self.to_i128(), divisor.to_i128()) {
            if let Some(res) = div_exact_i128(&a, &b) {
                return res.map(Self::from_i128).ok_or(Error::NotDivisible);
            }
        }
        div_exact_big(&self.coeffs, &divisor.coeffs)
            .map(Self::new)
            .ok_or(Error::NotDivisible)
    }

    /// Divides by `divisor` as many times as it goes exactly; returns the count and cofactor.
    pub fn divide_out(&self, divisor: &Self) -> (u32, Self) {
        let mut count = 0;
        let mut current = self.clone();
        if divisor.degree().unwrap_or(0) == 0 {
            return (0, current);
        }
        while let Ok(q) = current.div_exact(divisor) {
            count += 1;
            current = q;
        }
        (count, current)
    }
}

/// `Some(None)` when not divisible, `None` when the kernel overflowed.
fn div_exact_i128(num: &[i128], den: &[i128]) -> Option<Option<Vec<i128>>> {
    let dl = den.len();
    if num.len() < dl {
        return Some(None);
    }
    let lead = *den.last().unwrap();
    let nz: Vec<(usize, i128)> = den[..dl - 1]
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, &c)| (i, c))
        .collect();
    let mut rem = num.to_vec();
    let qlen = num.len() - dl + 1;
    let mut q = vec![0i128; qlen];
    for i in (0..qlen).rev() {
        let top = rem[i + dl - 1];
        if top == 0 {
            continue;
        }
        if top % lead != 0 {
            return Some(None);
        }
        let c = top / lead;
        q[i] = c;
        rem[i + dl - 1] = 0;
        for &(j, d) in &nz {
            let prod = c.checked_mul(d)?;
            rem[i + j] = rem[i + j].checked_sub(prod)?;
        }
    }
    if rem.iter().any(|&r| r != 0) {
        return Some(None);
    }
    Some(Some(q))
}

fn div_exact_big(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    let dl = den.len();
    if num.len() < dl {
        return None;
    }
    let lead = den.last().unwrap();
    let nz: Vec<(usize, &BigInt)> = den[..dl - 1]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let mut rem = num.to_vec();
    let qlen = num.len() - dl + 1;
    let mut q = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let top = std::mem::take(&mut rem[i + dl - 1]);
        if top.is_zero() {
            continue;
        }
        if !(&top % lead).is_zero() {
            return None;
        }
        let c = top / lead;
        for &(j, d) in &nz {
            rem[i + j] -= &c * d;
        }
        q[i] = c;
    }
    if rem.iter().any(|r| !r.is_zero()) {
        return None;
    }
    Some(q)
}

fn mul_i128(a: &[i128], b: &[i128]) -> Option<Vec<i128>> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    let bnz: Vec<(usize, i128)> = b
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, &c)| (i, c))
        .collect();
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for &(j, y) in &bnz {
            out[i + j] = out[i + j].checked_add(x.checked_mul(y)?)?;
        }
    }
    Some(out)
}

fn mul_big(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    let bnz: Vec<(usize, &BigInt)> = b.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for &(j, y) in &bnz {
            out[i + j] += x * y;
        }
    }
    out
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        if let (Some(a), Some(b)) = (self.to_i128(), rhs.to_i128()) {
            if let Some(prod) = mul_i128(&a, &b) {
                return IntPolynomial::from_i128(prod);
            }
        }
        IntPolynomial::new(mul_big(&self.coeffs, &rhs.coeffs))
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Text(String),
    Int(i64),
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<CoeffRepr>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(raw.len());
        for c in raw {
            coeffs.push(match c {
                CoeffRepr::Int(v) => BigInt::from(v),
                CoeffRepr::Text(s) => parse_decimal(&s).map_err(serde::de::Error::custom)?,
            });
        }
        Ok(IntPolynomial::new(coeffs))
    }
}

fn parse_decimal(s: &str) -> std::result::Result<BigInt, String> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("invalid decimal coefficient {s:?}"));
    }
    s.parse::<BigInt>().map_err(|e| e.to_string())
}

impl IntPolynomial {
    /// Decodes the JSON form: an ascending array of decimal strings.
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serializes")
    }
}
