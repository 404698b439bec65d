//! Exhaustive generation of basic parsing trees and brute-force counts.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::nodal::swap_root;
use super::ops::OpSymbol;
use super::reduce::is_reduced;
use super::tree::WordTree;
use super::EnumerationLimits;
use crate::enumeration::word_count_bound;
use crate::error::{Error, Result};

/// All basic parsing trees with `n` leaves over `s` generators.
///
/// Trees of every smaller size are materialized; trees of size `n` are
/// streamed. The order is split size (left leaf count ascending), then root
/// operation in `·, \, /` order, then left subtree, then right subtree,
/// recursively the same way for subtrees. Each (split, operation) pair is one
/// shard.
#[derive(Debug)]
pub struct TreeSpace {
    s: u32,
    n: usize,
    /// `levels[m]` holds every tree with `m` leaves, `1 <= m < n` (plus `n == 1`).
    levels: Vec<Vec<Arc<WordTree>>>,
}

impl TreeSpace {
    pub fn new(s: u32, n: usize, limits: &EnumerationLimits) -> Result<Self> {
        if s == 0 || n == 0 {
            return Err(Error::domain(format!(
                "tree enumeration requires s >= 1 and n >= 1, got s={s}, n={n}"
            )));
        }
        limits.check(s, n)?;
        let top = n.saturating_sub(1).max(1);
        let mut levels: Vec<Vec<Arc<WordTree>>> = vec![Vec::new()];
        levels.push((1..=s).map(|g| Arc::new(WordTree::Leaf(g))).collect());
        for m in 2..=top {
            let mut level = Vec::new();
            for a in 1..m {
                for op in OpSymbol::BASIC {
                    for l in &levels[a] {
                        for r in &levels[m - a] {
                            level.push(Arc::new(WordTree::Node(op, l.clone(), r.clone())));
                        }
                    }
                }
            }
            levels.push(level);
        }
        Ok(TreeSpace { s, n, levels })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Every tree with `m` leaves, for `m < n` (or `m == 1`).
    pub fn level(&self, m: usize) -> &[Arc<WordTree>] {
        &self.levels[m]
    }

    pub fn shard_count(&self) -> usize {
        if self.n == 1 {
            1
        } else {
            3 * (self.n - 1)
        }
    }

    /// Trees of one shard, in stream order.
    pub fn shard(&self, index: usize) -> Box<dyn Iterator<Item = WordTree> + Send + '_> {
        if self.n == 1 {
            return Box::new(self.levels[1].iter().map(|t| (**t).clone()));
        }
        let a = index / 3 + 1;
        let op = OpSymbol::BASIC[index % 3];
        let rights = &self.levels[self.n - a];
        Box::new(self.levels[a].iter().flat_map(move |l| {
            rights
                .iter()
                .map(move |r| WordTree::Node(op, l.clone(), r.clone()))
        }))
    }

    pub fn iter(&self) -> impl Iterator<Item = WordTree> + '_ {
        (0..self.shard_count()).flat_map(move |i| self.shard(i))
    }

    /// Number of trees satisfying `pred`, counted shard-parallel.
    pub fn count_where<F>(&self, pred: F) -> u64
    where
        F: Fn(&WordTree) -> bool + Sync,
    {
        (0..self.shard_count())
            .into_par_iter()
            .map(|i| self.shard(i).filter(|t| pred(t)).count() as u64)
            .sum()
    }
}

/// Stream of every basic parsing tree with `n` leaves; see [`TreeSpace`].
pub fn enumerate_basic_trees(s: u32, n: usize, limits: &EnumerationLimits) -> Result<TreeSpace> {
    TreeSpace::new(s, n, limits)
}

/// Brute-force `P^s_n`: the number of reduced basic trees.
pub fn count_reduced(s: u32, n: usize, limits: &EnumerationLimits) -> Result<u64> {
    Ok(TreeSpace::new(s, n, limits)?.count_where(is_reduced))
}

/// Reduced `(a+b)`-leaf words whose root carries `root` with an `a`-leaf left
/// child and a `b`-leaf right child. Children range over basic trees; an
/// opposite root is swapped to its basic form before testing.
pub fn count_reduced_rooted(
    s: u32,
    a: usize,
    b: usize,
    root: OpSymbol,
    limits: &EnumerationLimits,
) -> Result<u64> {
    if a == 0 || b == 0 {
        return Err(Error::domain("rooted counts need a >= 1 and b >= 1"));
    }
    if s == 0 {
        return Err(Error::domain("generator count must be >= 1"));
    }
    limits.check(s, a + b)?;
    let space = TreeSpace::new(s, a.max(b) + 1, limits)?;
    let (lefts, rights) = (space.level(a), space.level(b));
    let count = lefts
        .par_iter()
        .map(|l| {
            rights
                .iter()
                .filter(|r| {
                    let tree = WordTree::Node(root, (*l).clone(), (*r).clone());
                    let basic = if root.is_basic() { tree } else { swap_root(&tree) };
                    is_reduced(&basic)
                })
                .count() as u64
        })
        .sum();
    Ok(count)
}

impl EnumerationLimits {
    /// Refuses `(s, n)` beyond the length limit or the tree budget.
    pub fn check(&self, s: u32, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::ResourceGuard(format!(
                "n = {n} exceeds the enumeration limit {}",
                self.max_n
            )));
        }
        let cost = word_count_bound(s as u64, n as u64)?;
        if cost > BigUint::from(self.budget) {
            return Err(Error::ResourceGuard(format!(
                "enumerating {} trees exceeds the budget of {}",
                cost.to_u128().map_or_else(|| cost.to_string(), |c| c.to_string()),
                self.budget
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freewords::tree::format_word;

    #[test]
    fn counts_match_bound() {
        let limits = EnumerationLimits::default();
        let total = |s, n| TreeSpace::new(s, n, &limits).unwrap().iter().count();
        assert_eq!(total(1, 1), 1);
        assert_eq!(total(1, 3), 18);
        assert_eq!(total(2, 2), 12);
        assert_eq!(total(2, 4), 2160);
        assert_eq!(total(3, 4), 27 * 81 * 5);
    }

    #[test]
    fn trees_are_distinct_and_sized() {
        let space = TreeSpace::new(2, 4, &EnumerationLimits::default()).unwrap();
        let mut seen: Vec<String> = space.iter().map(|t| format_word(&t)).collect();
        assert!(space.iter().all(|t| t.leaf_count() == 4 && t.is_basic()));
        let len = seen.len();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), len);
    }

    #[test]
    fn stream_order_is_fixed() {
        let space = TreeSpace::new(1, 3, &EnumerationLimits::default()).unwrap();
        let first: Vec<String> = space.iter().take(4).map(|t| format_word(&t)).collect();
        assert_eq!(first, ["(a*(a*a))", "(a*(a\\a))", "(a*(a/a))", "(a\\(a*a))"]);
    }

    #[test]
    fn small_oracle_values() {
        let limits = EnumerationLimits::default();
        assert_eq!(count_reduced(1, 3, &limits).unwrap(), 12);
        assert_eq!(count_reduced(1, 4, &limits).unwrap(), 87);
        assert_eq!(count_reduced(2, 4, &limits).unwrap(), 1752);
        assert_eq!(count_reduced_rooted(2, 1, 1, OpSymbol::Mul, &limits).unwrap(), 4);
        for g in OpSymbol::ALL {
            assert_eq!(count_reduced_rooted(1, 2, 1, g, &limits).unwrap(), 2);
        }
        assert_eq!(count_reduced_rooted(1, 1, 2, OpSymbol::Mul, &limits).unwrap(), 2);
    }

    #[test]
    fn guard_refuses() {
        let limits = EnumerationLimits::default();
        assert!(matches!(count_reduced(3, 9, &limits), Err(Error::ResourceGuard(_))));
        let tight = EnumerationLimits {
            max_n: 8,
            budget: 100,
        };
        assert!(matches!(count_reduced(1, 4, &tight), Err(Error::ResourceGuard(_))));
        assert!(matches!(count_reduced(0, 4, &limits), Err(Error::Domain(_))));
    }
}
