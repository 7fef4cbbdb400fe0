//! Numerical semigroups and their combinatorial invariants.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{gcd, gcd_all};
use crate::error::{Error, Result};

/// Largest accepted multiplicity (size of the residue table).
pub const MAX_MULTIPLICITY: u64 = 1 << 22;
/// Largest accepted Frobenius number (size of the membership table).
pub const MAX_FROBENIUS: i64 = 1 << 26;
/// Largest accepted generator value.
pub const MAX_GENERATOR: u64 = 1 << 40;

/// A numerical semigroup, fixed by its minimal generators.
///
/// The membership table covers `0..=F+1`; everything above the Frobenius
/// number is a member. The Apéry set with respect to the multiplicity is
/// computed eagerly, so values are immutable and freely shareable.
#[derive(Clone)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    frobenius: i64,
    genus: u64,
    members: Vec<bool>,
    /// `apery_by_residue[r]` is the least member congruent to `r` mod the multiplicity.
    apery_by_residue: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymmetryType {
    Symmetric,
    PseudoSymmetric,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupDescriptors {
    pub generators: Vec<u64>,
    pub frobenius: i64,
    pub genus: u64,
    pub multiplicity: u64,
    pub embedding_dimension: usize,
    pub gaps: Vec<u64>,
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`; the generators must be coprime.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::NonPositiveGenerator);
        }
        let g = gcd_all(gens);
        if g != 1 {
            return Err(Error::NotCoprime(g));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&big) = sorted.iter().find(|&&a| a > MAX_GENERATOR) {
            return Err(Error::TooLarge(format!("generator {big}")));
        }
        let m = sorted[0];
        if m > MAX_MULTIPLICITY {
            return Err(Error::TooLarge(format!("multiplicity {m}")));
        }
        if m == 1 {
            return Ok(Self::naturals());
        }
        let apery = round_robin_apery(m, &sorted[1..]);
        let max_apery = *apery.iter().max().expect("nonempty");
        let frobenius = max_apery as i64 - m as i64;
        if frobenius > MAX_FROBENIUS {
            return Err(Error::TooLarge(format!("Frobenius number {frobenius}")));
        }
        // Selmer: g = (1/m) Σ w - (m - 1)/2
        let total: u128 = apery.iter().map(|&w| w as u128).sum();
        let genus = ((total - (m as u128 * (m as u128 - 1)) / 2) / m as u128) as u64;
        let member = |s: u64| s >= apery[(s % m) as usize];
        let members = (0..=(frobenius + 1) as u64).map(member).collect();
        let generators = sorted
            .iter()
            .enumerate()
            .filter(|&(i, &a)| i == 0 || sorted[..i].iter().all(|&b| !member(a - b)))
            .map(|(_, &a)| a)
            .collect();
        Ok(NumericalSemigroup {
            generators,
            frobenius,
            genus,
            members,
            apery_by_residue: apery,
        })
    }

    /// The semigroup `N = <1>`.
    pub fn naturals() -> Self {
        NumericalSemigroup {
            generators: vec![1],
            frobenius: -1,
            genus: 0,
            members: vec![true],
            apery_by_residue: vec![0],
        }
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// `F(S) + 1`
    pub fn conductor(&self) -> u64 {
        (self.frobenius + 1) as u64
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn is_naturals(&self) -> bool {
        self.generators == [1]
    }

    /// Membership table over `0..=F+1`.
    pub fn member_table(&self) -> &[bool] {
        &self.members
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            false
        } else if n > self.frobenius {
            true
        } else {
            self.members[n as usize]
        }
    }

    #[inline]
    pub(crate) fn has(&self, n: u64) -> bool {
        n > self.frobenius.max(0) as u64 || self.members[n as usize]
    }

    pub fn gaps(&self) -> Vec<u64> {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &m)| !m)
            .map(|(i, _)| i as u64)
            .collect()
    }

    pub fn descriptors(&self) -> SemigroupDescriptors {
        SemigroupDescriptors {
            generators: self.generators.clone(),
            frobenius: self.frobenius,
            genus: self.genus,
            multiplicity: self.multiplicity(),
            embedding_dimension: self.embedding_dimension(),
            gaps: self.gaps(),
        }
    }

    /// `Ap(S; m) = {s in S : s - m not in S}`, ascending. Defined for every `m >= 1`.
    pub fn apery(&self, m: u64) -> Vec<u64> {
        assert!(m >= 1, "Apéry set needs m >= 1");
        if m == self.multiplicity() {
            let mut out = self.apery_by_residue.clone();
            out.sort_unstable();
            return out;
        }
        let top = (self.frobenius + m as i64).max(0) as u64;
        (0..=top)
            .filter(|&s| self.has(s) && !self.contains(s as i64 - m as i64))
            .collect()
    }

    pub fn symmetry_type(&self) -> SymmetryType {
        let f = self.frobenius;
        if f < 0 {
            return SymmetryType::Symmetric;
        }
        let gaps = self.gaps();
        if gaps.iter().all(|&x| self.contains(f - x as i64)) {
            SymmetryType::Symmetric
        } else if f % 2 == 0
            && gaps
                .iter()
                .all(|&x| 2 * x as i64 == f || self.contains(f - x as i64))
        {
            SymmetryType::PseudoSymmetric
        } else {
            SymmetryType::Neither
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_type() == SymmetryType::Symmetric
    }

    /// Gaps `x` with `x + (S \ {0}) ⊆ S`, ascending.
    pub fn pseudo_frobenius(&self) -> Result<Vec<u64>> {
        if self.is_naturals() {
            return Err(Error::TrivialSemigroup);
        }
        Ok(self
            .gaps()
            .into_iter()
            .filter(|&x| self.generators.iter().all(|&g| self.has(x + g)))
            .collect())
    }

    /// Number of ways to write `n` as a nonnegative combination of the minimal generators.
    pub fn denumerant(&self, n: u64) -> Result<BigUint> {
        if n > 1 << 24 {
            return Err(Error::TooLarge(format!("denumerant argument {n}")));
        }
        let n = n as usize;
        let mut ways = vec![BigUint::zero(); n + 1];
        ways[0] = BigUint::one();
        for &g in &self.generators {
            let g = g as usize;
            for s in g..=n {
                let (lo, hi) = ways.split_at_mut(s);
                hi[0] += &lo[s - g];
            }
        }
        Ok(ways.swap_remove(n))
    }

    /// `χ_S(n) = Σ_{L ∈ Δ_n} (-1)^{#L}` with `Δ_n = {L ⊆ gens : n - ΣL ∈ S}`.
    pub fn shaded_chi(&self, n: u64) -> i64 {
        fn walk(s: &NumericalSemigroup, idx: usize, rest: u64, sign: i64) -> i64 {
            if idx == s.generators.len() {
                return if s.has(rest) { sign } else { 0 };
            }
            let g = s.generators[idx];
            let mut total = walk(s, idx + 1, rest, sign);
            if g <= rest {
                total += walk(s, idx + 1, rest - g, -sign);
            }
            total
        }
        walk(self, 0, n, 1)
    }

    /// Elements whose generator graph (vertices `n_i` with `n - n_i ∈ S`, edges
    /// `n_i n_j` with `n - n_i - n_j ∈ S`) is disconnected.
    ///
    /// Searched up to `F(S) + Σ n_i`, the support bound of `χ_S`.
    pub fn betti_elements(&self) -> Vec<u64> {
        let bound = self.frobenius.max(0) as u64 + self.generators.iter().sum::<u64>();
        (1..=bound)
            .filter(|&n| self.has(n) && self.generator_graph_disconnected(n))
            .collect()
    }

    fn generator_graph_disconnected(&self, n: u64) -> bool {
        let verts: Vec<u64> = self
            .generators
            .iter()
            .copied()
            .filter(|&g| g <= n && self.has(n - g))
            .collect();
        if verts.len() < 2 {
            return false;
        }
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                let sum = verts[i] + verts[j];
                if sum <= n && self.has(n - sum) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, 0);
        (1..verts.len()).any(|i| find(&mut parent, i) != root)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Encoded {
            generators: Vec<u64>,
            frobenius: Option<i64>,
            genus: Option<u64>,
        }
        let enc: Encoded = serde_json::from_str(text)?;
        let s = Self::from_generators(&enc.generators)?;
        if enc.frobenius.is_some_and(|f| f != s.frobenius)
            || enc.genus.is_some_and(|g| g != s.genus)
        {
            return Err(Error::Parse(
                "stored invariants disagree with generators".into(),
            ));
        }
        Ok(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.descriptors()).expect("descriptors serialize")
    }
}

/// Least member of every residue class mod `m`, by round-robin relaxation along
/// the cycles `r, r + a, r + 2a, ...` of each generator `a`.
fn round_robin_apery(m: u64, others: &[u64]) -> Vec<u64> {
    let mu = m as usize;
    let mut best = vec![u64::MAX; mu];
    best[0] = 0;
    for &a in others {
        let step = (a % m) as usize;
        let d = gcd(step, mu).max(1);
        let cycle_len = mu / d;
        for r in 0..d {
            let mut start = r;
            let mut pos = r;
            for _ in 0..cycle_len {
                if best[pos] < best[start] {
                    start = pos;
                }
                pos = (pos + step) % mu;
            }
            if best[start] == u64::MAX {
                continue;
            }
            let mut pos = start;
            for _ in 1..cycle_len {
                let next = (pos + step) % mu;
                let cand = best[pos].saturating_add(a);
                if cand < best[next] {
                    best[next] = cand;
                }
                pos = next;
            }
        }
    }
    best
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.generators.hash(state);
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}

/// Divides out the gcd: returns `(d, <gens / d>)`.
pub fn normalize_submonoid(gens: &[u64]) -> Result<(u64, NumericalSemigroup)> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if gens.contains(&0) {
        return Err(Error::NonPositiveGenerator);
    }
    let d = gcd_all(gens);
    let scaled: Vec<u64> = gens.iter().map(|&g| g / d).collect();
    Ok((d, NumericalSemigroup::from_generators(&scaled)?))
}

/// Membership in the submonoid `<gens>` of `N` (gcd need not be 1).
pub fn submonoid_contains(gens: &[u64], n: u64) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    let (d, s) = normalize_submonoid(gens)?;
    Ok(n.is_multiple_of(d) && s.has(n / d))
}

/// `(u, v)` with `1 = u a + v b` and `0 <= u < b`.
pub fn bezout_unit(a: u64, b: u64) -> Result<(i64, i64)> {
    let g = gcd(a, b);
    if g != 1 {
        return Err(Error::NotCoprime(g));
    }
    let (a, b) = (a as i128, b as i128);
    let (mut r0, mut r1, mut s0, mut s1) = (a, b, 1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    let u = s0.rem_euclid(b);
    let v = (1 - u * a) / b;
    Ok((u as i64, v as i64))
}

/// Checks `#Ap(<a, b>; 1) = u (a + v)` where `1 = u a + v b`, `0 <= u < b`.
pub fn apery_count_formula_check(a: u64, b: u64) -> Result<bool> {
    if a < 2 || b < 2 {
        return Err(Error::ParameterOutOfRange("a, b must be at least 2".into()));
    }
    let (u, v) = bezout_unit(a, b)?;
    let s = NumericalSemigroup::from_generators(&[a, b])?;
    Ok(s.apery(1).len() as i64 == u * (a as i64 + v))
}

/// Parses comma- or whitespace-separated positive integers.
pub fn parse_generators(text: &str) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for token in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        if !token.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("invalid generator {token:?}")));
        }
        let value: u64 = token
            .parse()
            .map_err(|_| Error::TooLarge(format!("generator {token}")))?;
        if value == 0 {
            return Err(Error::NonPositiveGenerator);
        }
        out.push(value);
    }
    if out.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    Ok(out)
}
