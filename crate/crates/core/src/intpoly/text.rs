//! Sparse descending text form, e.g. `x^10-x^9+x^5-x+1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntPolynomial;
use crate::error::Error;

/// Largest exponent accepted by the parser.
pub const MAX_PARSED_DEGREE: usize = 1 << 20;

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str("x")?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let text: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut pos = 0;
        let mut first = true;
        while pos < text.len() {
            let negative = match text[pos] {
                b'+' => {
                    pos += 1;
                    false
                }
                b'-' => {
                    pos += 1;
                    true
                }
                _ if first => false,
                other => {
                    return Err(Error::Parse(format!(
                        "expected sign at offset {pos}, found {:?}",
                        other as char
                    )))
                }
            };
            first = false;
            let digits_start = pos;
            while pos < text.len() && text[pos].is_ascii_digit() {
                pos += 1;
            }
            let magnitude = if pos > digits_start {
                let digits = std::str::from_utf8(&text[digits_start..pos]).expect("ascii");
                Some(
                    digits
                        .parse::<BigInt>()
                        .map_err(|e| Error::Parse(e.to_string()))?,
                )
            } else {
                None
            };
            if magnitude.is_some() && pos < text.len() && text[pos] == b'*' {
                pos += 1;
                if pos >= text.len() || text[pos] != b'x' {
                    return Err(Error::Parse("dangling '*'".into()));
                }
            }
            let mut exponent = 0usize;
            if pos < text.len() && text[pos] == b'x' {
                pos += 1;
                exponent = 1;
                if pos < text.len() && text[pos] == b'^' {
                    pos += 1;
                    let start = pos;
                    while pos < text.len() && text[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if pos == start {
                        return Err(Error::Parse("missing exponent after '^'".into()));
                    }
                    let digits = std::str::from_utf8(&text[start..pos]).expect("ascii");
                    exponent = digits
                        .parse::<usize>()
                        .ok()
                        .filter(|&e| e <= MAX_PARSED_DEGREE)
                        .ok_or_else(|| Error::TooLarge(format!("exponent {digits}")))?;
                }
            } else if magnitude.is_none() {
                return Err(Error::Parse(format!("empty term at offset {pos}")));
            }
            let mut value = magnitude.unwrap_or_else(BigInt::one);
            if negative {
                value = -value;
            }
            if coeffs.len() <= exponent {
                coeffs.resize(exponent + 1, BigInt::zero());
            }
            coeffs[exponent] += value;
        }
        Ok(IntPolynomial::new(coeffs))
    }
}
