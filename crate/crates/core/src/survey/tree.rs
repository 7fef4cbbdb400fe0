//! The semigroup tree: the children of `S` are `S \ {x}` for each minimal
//! generator `x > F(S)`, so every semigroup of genus `g + 1` has exactly one
//! parent `S ∪ {F(S)}` of genus `g`.

use rayon::prelude::*;

use crate::semigroup::NumericalSemigroup;

/// A node of the tree, stored as its sorted gap list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    gaps: Vec<u64>,
    multiplicity: u64,
}

impl TreeNode {
    pub fn root() -> Self {
        TreeNode {
            gaps: Vec::new(),
            multiplicity: 1,
        }
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    pub fn frobenius(&self) -> i64 {
        self.gaps.last().map_or(-1, |&f| f as i64)
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// `genus = (F + 1) / 2`
    pub fn is_symmetric(&self) -> bool {
        2 * self.genus() as i64 == self.frobenius() + 1
    }

    fn has(&self, n: u64) -> bool {
        n as i64 > self.frobenius() || self.gaps.binary_search(&n).is_err()
    }

    fn is_minimal_generator(&self, y: u64) -> bool {
        y > 0 && self.has(y) && (1..=y / 2).all(|a| !(self.has(a) && self.has(y - a)))
    }

    /// Minimal generators, all of which lie in `1..=F + m + 1`.
    pub fn generators(&self) -> Vec<u64> {
        let top = (self.frobenius() + self.multiplicity as i64 + 1) as u64;
        (1..=top)
            .filter(|&y| self.is_minimal_generator(y))
            .collect()
    }

    pub fn to_semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(&self.generators())
            .expect("tree nodes are numerical semigroups")
    }

    /// Children in ascending order of the removed generator.
    pub fn children(&self) -> Vec<TreeNode> {
        let f = self.frobenius();
        let top = (f + self.multiplicity as i64 + 1) as u64;
        let lo = (f + 1) as u64;
        (lo.max(1)..=top)
            .filter(|&x| self.is_minimal_generator(x))
            .map(|x| {
                let mut gaps = self.gaps.clone();
                gaps.push(x);
                let multiplicity = if x == self.multiplicity {
                    (x + 1..).find(|&y| !gaps.contains(&y)).unwrap()
                } else {
                    self.multiplicity
                };
                TreeNode { gaps, multiplicity }
            })
            .collect()
    }
}

/// Levels of the tree by genus, each sorted by gap list. Nodes rejected by
/// `keep` are dropped together with their subtrees, so `keep` must be
/// inherited by parents (for instance a bound on the Frobenius number, which
/// only grows going down).
pub fn tree_levels<P>(max_genus: u64, keep: P) -> TreeLevels<P>
where
    P: Fn(&TreeNode) -> bool + Sync,
{
    TreeLevels {
        next: keep(&TreeNode::root()).then(|| vec![TreeNode::root()]),
        genus: 0,
        max_genus,
        keep,
    }
}

pub struct TreeLevels<P> {
    next: Option<Vec<TreeNode>>,
    genus: u64,
    max_genus: u64,
    keep: P,
}

impl<P> Iterator for TreeLevels<P>
where
    P: Fn(&TreeNode) -> bool + Sync,
{
    /// `(genus, nodes)`
    type Item = (u64, Vec<TreeNode>);

    fn next(&mut self) -> Option<Self::Item> {
        let level = self.next.take()?;
        let genus = self.genus;
        if genus < self.max_genus && !level.is_empty() {
            let keep = &self.keep;
            let mut children: Vec<TreeNode> = level
                .par_iter()
                .flat_map_iter(|n| n.children().into_iter().filter(|c| keep(c)))
                .collect();
            children.par_sort_unstable_by(|a, b| a.gaps.cmp(&b.gaps));
            self.next = Some(children);
            self.genus += 1;
        }
        Some((genus, level))
    }
}

/// Every numerical semigroup of genus at most `max_genus`, once each, ordered
/// by genus and then by gap list.
pub fn enumerate_semigroups(max_genus: u64) -> impl Iterator<Item = NumericalSemigroup> {
    tree_levels(max_genus, |_| true)
        .flat_map(|(_, level)| level.into_iter().map(|n| n.to_semigroup()))
}

/// Number of semigroups of each genus `0..=max_genus`.
pub fn count_by_genus(max_genus: u64) -> Vec<usize> {
    tree_levels(max_genus, |_| true)
        .map(|(_, level)| level.len())
        .collect()
}
