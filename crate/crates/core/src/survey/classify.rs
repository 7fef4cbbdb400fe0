//! Height-one classification and scans over the named symmetric families.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::factorize;
use crate::cyclotomy::is_cyclotomic;
use crate::error::{Error, Result};
use crate::structure::{family_sym1, family_sym2, FamilyMember};

use super::tree::tree_levels;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Height1Report {
    pub depth: u64,
    pub genus_bound: u64,
    /// Generators of every cyclotomic semigroup of this depth and height 1 found.
    pub found: Vec<Vec<u64>>,
    /// The classification's list when `depth` is `pqr` or `p^n q`.
    pub predicted: Option<Vec<Vec<u64>>>,
}

impl Height1Report {
    pub fn matches_prediction(&self) -> Option<bool> {
        self.predicted.as_ref().map(|p| *p == self.found)
    }
}

fn sorted_pair(a: u64, b: u64) -> Vec<u64> {
    vec![a.min(b), a.max(b)]
}

/// `pqr`: `<d/x, x>` for each prime `x`; `p^n q`: `<p^n, q>`.
pub fn predicted_height1(d: u64) -> Option<Vec<Vec<u64>>> {
    let f = factorize(d);
    let mut out = match f.as_slice() {
        [(_, 1), (_, 1), (_, 1)] => f.iter().map(|&(x, _)| sorted_pair(d / x, x)).collect(),
        [(p, a), (q, b)] if *a == 1 || *b == 1 => {
            let (single, power) = if *b == 1 {
                (*q, p.pow(*a))
            } else {
                (*p, q.pow(*b))
            };
            vec![sorted_pair(power, single)]
        }
        _ => return None,
    };
    out.sort();
    Some(out)
}

/// Every cyclotomic semigroup of genus at most `genus_bound` with depth `d`
/// and height 1. Since `P_S` then divides `(x^d - 1) / (x - 1)`, only
/// `F <= d - 2` needs searching.
pub fn height1_classify(d: u64, genus_bound: u64) -> Result<Height1Report> {
    if d < 4 || factorize(d).iter().map(|&(_, e)| e).sum::<u32>() < 2 {
        return Err(Error::ParameterOutOfRange(format!(
            "depth {d} must be composite"
        )));
    }
    let max_f = d as i64 - 2;
    let mut found: Vec<Vec<u64>> = tree_levels(genus_bound, |n| n.frobenius() <= max_f)
        .flat_map(|(_, level)| level)
        .filter(|n| n.is_symmetric())
        .par_bridge()
        .filter_map(|n| {
            let s = n.to_semigroup();
            let fac = is_cyclotomic(&s)?;
            (fac.depth() == d && fac.height() == 1).then(|| s.generators().to_vec())
        })
        .collect();
    found.sort();
    Ok(Height1Report {
        depth: d,
        genus_bound,
        found,
        predicted: predicted_height1(d),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Sym1,
    Sym2,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sym1" => Ok(Family::Sym1),
            "sym2" => Ok(Family::Sym2),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

impl Family {
    pub fn member(self, m: u64, q: u64) -> Result<FamilyMember> {
        match self {
            Family::Sym1 => family_sym1(m, q),
            Family::Sym2 => family_sym2(m, q),
        }
    }

    /// All valid `(m, q)` with `m <= max_m`.
    pub fn parameters(self, max_m: u64) -> Vec<(u64, u64)> {
        let (q_min, slack) = match self {
            Family::Sym1 => (1, 3),
            Family::Sym2 => (0, 4),
        };
        let mut out = Vec::new();
        for m in 0..=max_m {
            let mut q = q_min;
            while 2 * q + slack <= m {
                out.push((m, q));
                q += 1;
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyScanRow {
    pub m: u64,
    pub q: u64,
    pub generators: Vec<u64>,
    pub embedding_dimension: usize,
    pub symmetric: bool,
    pub cyclotomic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyScanReport {
    pub family: Family,
    pub max_multiplicity: u64,
    pub rows: Vec<FamilyScanRow>,
    /// Every cyclotomic member has embedding dimension three.
    pub cyclotomic_only_at_dimension_three: bool,
    pub cyclotomic_count: usize,
}

/// Builds every member (closed forms are checked on construction) and records
/// whether it is cyclotomic.
pub fn family_scan(family: Family, max_multiplicity: u64) -> Result<FamilyScanReport> {
    let rows = family
        .parameters(max_multiplicity)
        .into_par_iter()
        .map(|(m, q)| {
            let member = family.member(m, q)?;
            let s = &member.semigroup;
            Ok(FamilyScanRow {
                m,
                q,
                generators: s.generators().to_vec(),
                embedding_dimension: s.embedding_dimension(),
                symmetric: s.is_symmetric(),
                cyclotomic: is_cyclotomic(s).is_some(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let cyclotomic: Vec<_> = rows.iter().filter(|r| r.cyclotomic).collect();
    Ok(FamilyScanReport {
        family,
        max_multiplicity,
        cyclotomic_only_at_dimension_three: cyclotomic.iter().all(|r| r.embedding_dimension == 3),
        cyclotomic_count: cyclotomic.len(),
        rows,
    })
}
