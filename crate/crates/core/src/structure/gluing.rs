use std::collections::HashMap;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::arith::gcd;
use crate::cyclotomy::semigroup_polynomial;
use crate::error::{Error, Result};
use crate::intpoly::IntPolynomial;
use crate::semigroup::NumericalSemigroup;

/// `S = a1·S1 +_{a1 a2} a2·S2`, recursively, with `ℕ` at the leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GluingTree {
    Leaf,
    Node {
        a1: u64,
        left: Box<GluingTree>,
        a2: u64,
        right: Box<GluingTree>,
    },
}

impl GluingTree {
    pub fn node(a1: u64, left: GluingTree, a2: u64, right: GluingTree) -> Self {
        GluingTree::Node {
            a1,
            left: Box::new(left),
            a2,
            right: Box::new(right),
        }
    }

    /// Rebuilds the semigroup, checking every gluing on the way up.
    pub fn semigroup(&self) -> Result<NumericalSemigroup> {
        match self {
            GluingTree::Leaf => Ok(NumericalSemigroup::naturals()),
            GluingTree::Node {
                a1,
                left,
                a2,
                right,
            } => verify_gluing(&left.semigroup()?, *a1, &right.semigroup()?, *a2),
        }
    }

    /// Leaf scales, left to right: the generators `a_i` of the recursive gluing.
    pub fn leaves(&self) -> Vec<u64> {
        let mut out = Vec::new();
        self.walk(1, &mut out, &mut Vec::new());
        out
    }

    /// The gluing degrees `g_i`: `scale · a1 · a2` at every inner node.
    pub fn gluing_degrees(&self) -> Vec<u64> {
        let mut out = Vec::new();
        self.walk(1, &mut Vec::new(), &mut out);
        out
    }

    fn walk(&self, scale: u64, leaves: &mut Vec<u64>, degrees: &mut Vec<u64>) {
        match self {
            GluingTree::Leaf => leaves.push(scale),
            GluingTree::Node {
                a1,
                left,
                a2,
                right,
            } => {
                degrees.push(scale * a1 * a2);
                left.walk(scale * a1, leaves, degrees);
                right.walk(scale * a2, leaves, degrees);
            }
        }
    }

    /// `(1 - x) ∏ (1 - x^{g_i}) / ∏ (1 - x^{a_i})` with `g_i`, `a_i` read off the tree.
    pub fn ci_polynomial(&self) -> IntPolynomial {
        let numerator = self
            .gluing_degrees()
            .into_iter()
            .fold(IntPolynomial::one_minus_x_pow(1), |acc, g| {
                &acc * &IntPolynomial::one_minus_x_pow(g as usize)
            });
        let denominator = self
            .leaves()
            .into_iter()
            .fold(IntPolynomial::one(), |acc, a| {
                &acc * &IntPolynomial::one_minus_x_pow(a as usize)
            });
        numerator
            .div_exact(&denominator)
            .expect("complete intersection numerator is divisible")
    }

    pub fn to_json_value(&self) -> Value {
        match self {
            GluingTree::Leaf => json!("N"),
            GluingTree::Node {
                a1,
                left,
                a2,
                right,
            } => json!({
                "a1": a1,
                "left": left.to_json_value(),
                "a2": a2,
                "right": right.to_json_value(),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    /// Decodes the tree shape. Gluing conditions are checked by [`GluingTree::semigroup`].
    pub fn from_json_value(value: &Value) -> Result<Self> {
        match value {
            Value::String(s) if s == "N" => Ok(GluingTree::Leaf),
            Value::Object(map) => {
                if map.len() != 4 {
                    return Err(Error::Parse(
                        "gluing node needs exactly a1, left, a2, right".into(),
                    ));
                }
                let scale = |key: &str| -> Result<u64> {
                    match map.get(key).and_then(Value::as_u64) {
                        Some(v) if v >= 1 => Ok(v),
                        _ => Err(Error::Parse(format!("gluing node: bad {key}"))),
                    }
                };
                let child = |key: &str, map: &Map<String, Value>| -> Result<GluingTree> {
                    let v = map
                        .get(key)
                        .ok_or_else(|| Error::Parse(format!("gluing node: missing {key}")))?;
                    GluingTree::from_json_value(v)
                };
                Ok(GluingTree::node(
                    scale("a1")?,
                    child("left", map)?,
                    scale("a2")?,
                    child("right", map)?,
                ))
            }
            _ => Err(Error::Parse(
                "gluing tree must be \"N\" or a node object".into(),
            )),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_json_value(&serde_json::from_str(text)?)
    }
}

/// `n ∈ <gens>` for a submonoid of `ℕ` (gcd arbitrary), by a reachability sieve.
pub fn representable(gens: &[u64], n: u64) -> bool {
    let n = n as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for i in 1..=n {
        reach[i] = gens
            .iter()
            .any(|&g| (g as usize) <= i && reach[i - g as usize]);
    }
    reach[n]
}

fn scaled(gens: &[u64], by: u64) -> Result<Vec<u64>> {
    gens.iter()
        .map(|&g| {
            g.checked_mul(by)
                .ok_or_else(|| Error::TooLarge(format!("{g} * {by}")))
        })
        .collect()
}

/// `P_<a1,a2> = (1 - x)(1 - x^{a1 a2}) / ((1 - x^{a1})(1 - x^{a2}))`
fn two_generator_polynomial(a1: u64, a2: u64) -> IntPolynomial {
    let num =
        &IntPolynomial::one_minus_x_pow(1) * &IntPolynomial::one_minus_x_pow((a1 * a2) as usize);
    let den =
        &IntPolynomial::one_minus_x_pow(a1 as usize) * &IntPolynomial::one_minus_x_pow(a2 as usize);
    num.div_exact(&den).expect("binomial quotient is exact")
}

/// Checks the gluing conditions and returns `a1·S1 + a2·S2`.
///
/// The result is also checked against
/// `P_S = P_<a1,a2>(x) · P_S1(x^{a1}) · P_S2(x^{a2})` up to degree `F(S) + 1`.
pub fn verify_gluing(
    s1: &NumericalSemigroup,
    a1: u64,
    s2: &NumericalSemigroup,
    a2: u64,
) -> Result<NumericalSemigroup> {
    if a1 == 0 || a2 == 0 {
        return Err(Error::InvalidGluing("scales must be positive".into()));
    }
    let g = gcd(a1, a2);
    if g != 1 {
        return Err(Error::InvalidGluing(format!("gcd({a1}, {a2}) = {g}")));
    }
    if !s2.contains(a1 as i64) {
        return Err(Error::InvalidGluing(format!("{a1} is not in {s2}")));
    }
    if !s1.contains(a2 as i64) {
        return Err(Error::InvalidGluing(format!("{a2} is not in {s1}")));
    }
    let mut gens = scaled(s1.generators(), a1)?;
    gens.extend(scaled(s2.generators(), a2)?);
    let glued = NumericalSemigroup::from_generators(&gens)?;

    let order = glued.conductor() as usize + 1;
    let product = &(&two_generator_polynomial(a1, a2)
        * &semigroup_polynomial(s1).compose_power(a1 as usize))
        * &semigroup_polynomial(s2).compose_power(a2 as usize);
    if product.truncate(order) != semigroup_polynomial(&glued).truncate(order) {
        return Err(Error::InvalidGluing("polynomial identity fails".into()));
    }
    Ok(glued)
}

/// A split of the minimal generators into `A1 ∪ A2`, with `d_i = gcd(A_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GluingSplit {
    pub a1_part: Vec<u64>,
    pub a2_part: Vec<u64>,
    pub d1: u64,
    pub d2: u64,
}

impl GluingSplit {
    /// `<A1 / d1>`
    pub fn left(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::from_generators(
            &self.a1_part.iter().map(|g| g / self.d1).collect::<Vec<_>>(),
        )
    }

    /// `<A2 / d2>`
    pub fn right(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::from_generators(
            &self.a2_part.iter().map(|g| g / self.d2).collect::<Vec<_>>(),
        )
    }
}

/// All gluing splits of `S`, sorted by `A1`; `A1` holds the multiplicity.
///
/// For `S != ℕ` both parts of a split have gcd greater than one (a part with
/// gcd 1 would force a minimal generator into the span of the others), so the
/// search abandons a branch as soon as either running gcd drops to 1.
pub fn gluing_decompositions(s: &NumericalSemigroup) -> Vec<GluingSplit> {
    let gens = s.generators();
    if gens.len() < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut assign = vec![false; gens.len()];
    assign[0] = true;
    split_search(gens, 1, gens[0], 0, &mut assign, &mut out);
    out.sort_by(|a, b| a.a1_part.cmp(&b.a1_part));
    out
}

fn split_search(
    gens: &[u64],
    i: usize,
    g1: u64,
    g2: u64,
    assign: &mut Vec<bool>,
    out: &mut Vec<GluingSplit>,
) {
    if i == gens.len() {
        if g2 == 0 || gcd(g1, g2) != 1 {
            return;
        }
        let (a1_part, a2_part): (Vec<u64>, Vec<u64>) = {
            let mut l = Vec::new();
            let mut r = Vec::new();
            for (k, &g) in gens.iter().enumerate() {
                if assign[k] {
                    l.push(g);
                } else {
                    r.push(g);
                }
            }
            (l, r)
        };
        let reduced = |part: &[u64], d: u64| part.iter().map(|g| g / d).collect::<Vec<_>>();
        if representable(&reduced(&a2_part, g2), g1) && representable(&reduced(&a1_part, g1), g2) {
            out.push(GluingSplit {
                a1_part,
                a2_part,
                d1: g1,
                d2: g2,
            });
        }
        return;
    }
    let with_left = gcd(g1, gens[i]);
    if with_left > 1 {
        assign[i] = true;
        split_search(gens, i + 1, with_left, g2, assign, out);
        assign[i] = false;
    }
    let with_right = gcd(g2, gens[i]);
    if with_right > 1 {
        split_search(gens, i + 1, g1, with_right, assign, out);
    }
}

/// A gluing-tree witness that `S` is a complete intersection, or `None`.
///
/// Splits are tried in canonical order and the first one whose two parts are
/// both complete intersections wins.
pub fn is_complete_intersection(s: &NumericalSemigroup) -> Option<GluingTree> {
    ci_search(s, &mut HashMap::new())
}

fn ci_search(
    s: &NumericalSemigroup,
    memo: &mut HashMap<Vec<u64>, Option<GluingTree>>,
) -> Option<GluingTree> {
    if s.is_naturals() {
        return Some(GluingTree::Leaf);
    }
    if let Some(hit) = memo.get(s.generators()) {
        return hit.clone();
    }
    let mut found = None;
    for split in gluing_decompositions(s) {
        let (Ok(left), Ok(right)) = (split.left(), split.right()) else {
            continue;
        };
        let Some(lt) = ci_search(&left, memo) else {
            continue;
        };
        let Some(rt) = ci_search(&right, memo) else {
            continue;
        };
        found = Some(GluingTree::node(split.d1, lt, split.d2, rt));
        break;
    }
    memo.insert(s.generators().to_vec(), found.clone());
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn verify_gluing_examples() {
        let n = NumericalSemigroup::naturals();
        assert_eq!(
            verify_gluing(&sg(&[2, 3]), 2, &n, 9).unwrap().generators(),
            &[4, 6, 9]
        );
        assert_eq!(verify_gluing(&n, 5, &n, 7).unwrap().generators(), &[5, 7]);
        assert_eq!(
            verify_gluing(&sg(&[2, 3]), 2, &n, 5).unwrap().generators(),
            &[4, 5, 6]
        );
        assert!(matches!(
            verify_gluing(&sg(&[2, 3]), 2, &n, 1),
            Err(Error::InvalidGluing(_))
        ));
        assert!(matches!(
            verify_gluing(&n, 4, &n, 6),
            Err(Error::InvalidGluing(_))
        ));
        assert!(matches!(
            verify_gluing(&n, 3, &sg(&[2, 5]), 2),
            Err(Error::InvalidGluing(_))
        ));
    }

    #[test]
    fn two_generator_polynomial_matches() {
        for (a, b) in [(2u64, 3u64), (3, 5), (4, 9), (7, 10)] {
            assert_eq!(
                two_generator_polynomial(a, b),
                semigroup_polynomial(&sg(&[a, b]))
            );
        }
    }

    #[test]
    fn decomposition_examples() {
        // 4·ℕ + 3·<2,3> and 2·<2,3> + 9·ℕ
        let d = gluing_decompositions(&sg(&[4, 6, 9]));
        let parts: Vec<_> = d
            .iter()
            .map(|s| (s.a1_part.clone(), s.a2_part.clone(), s.d1, s.d2))
            .collect();
        assert_eq!(
            parts,
            vec![(vec![4], vec![6, 9], 4, 3), (vec![4, 6], vec![9], 2, 9)]
        );
        let d = gluing_decompositions(&sg(&[2, 3]));
        assert_eq!(
            (d[0].a1_part.clone(), d[0].a2_part.clone()),
            (vec![2], vec![3])
        );
        assert!(gluing_decompositions(&sg(&[5, 6, 7, 8])).is_empty());
        assert!(gluing_decompositions(&NumericalSemigroup::naturals()).is_empty());
    }

    #[test]
    fn ci_examples() {
        let p = semigroup_polynomial(&sg(&[4, 6, 9]));
        let t = is_complete_intersection(&sg(&[4, 6, 9])).unwrap();
        let first = GluingTree::node(
            4,
            GluingTree::Leaf,
            3,
            GluingTree::node(2, GluingTree::Leaf, 3, GluingTree::Leaf),
        );
        assert_eq!(t, first);
        assert_eq!(t.leaves(), vec![4, 6, 9]);
        assert_eq!(t.gluing_degrees(), vec![12, 18]);
        assert_eq!(t.ci_polynomial(), p);
        let other = GluingTree::node(
            2,
            GluingTree::node(2, GluingTree::Leaf, 3, GluingTree::Leaf),
            9,
            GluingTree::Leaf,
        );
        assert_eq!(other.semigroup().unwrap(), sg(&[4, 6, 9]));
        assert_eq!(other.gluing_degrees(), vec![18, 12]);
        assert_eq!(other.ci_polynomial(), p);
        assert_eq!(is_complete_intersection(&sg(&[5, 6, 7, 8])), None);
        assert_eq!(
            is_complete_intersection(&NumericalSemigroup::naturals()),
            Some(GluingTree::Leaf)
        );
        assert_eq!(is_complete_intersection(&sg(&[3, 4, 5])), None);
    }

    #[test]
    fn tree_json() {
        let t = is_complete_intersection(&sg(&[4, 6, 9])).unwrap();
        let text = t.to_json();
        assert_eq!(
            text,
            r#"{"a1":4,"a2":3,"left":"N","right":{"a1":2,"a2":3,"left":"N","right":"N"}}"#
        );
        assert_eq!(GluingTree::from_json(&text).unwrap(), t);
        assert_eq!(t.semigroup().unwrap(), sg(&[4, 6, 9]));
        assert_eq!(GluingTree::from_json(r#""N""#).unwrap(), GluingTree::Leaf);
        for bad in [
            r#""M""#,
            r#"{"a1":0,"left":"N","a2":1,"right":"N"}"#,
            r#"{"a1":2}"#,
            "3",
            "[]",
        ] {
            assert!(GluingTree::from_json(bad).is_err(), "{bad}");
        }
        let invalid = GluingTree::from_json(r#"{"a1":2,"left":"N","a2":4,"right":"N"}"#).unwrap();
        assert!(matches!(invalid.semigroup(), Err(Error::InvalidGluing(_))));
    }

    #[test]
    fn representable_examples() {
        assert!(representable(&[4, 6], 10));
        assert!(!representable(&[4, 6], 9));
        assert!(representable(&[2, 3], 0));
    }

    #[test]
    fn glued_frobenius_formula() {
        for tree_gens in [&[4u64, 6, 9][..], &[6, 10, 15], &[8, 10, 12, 15], &[2, 3]] {
            let s = sg(tree_gens);
            for split in gluing_decompositions(&s) {
                let (l, r) = (split.left().unwrap(), split.right().unwrap());
                let f = split.d1 as i64 * l.frobenius()
                    + split.d2 as i64 * r.frobenius()
                    + (split.d1 * split.d2) as i64;
                assert_eq!(f, s.frobenius(), "{s}");
            }
        }
    }
}
