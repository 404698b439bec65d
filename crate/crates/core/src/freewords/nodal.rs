//! Nodal equivalence: swapping the children of a node while replacing its
//! operation by the opposite one.

use std::sync::Arc;

use super::tree::{FullWordTree, WordTree};
use super::EnumerationLimits;
use crate::error::{Error, Result};

/// Swap at the root of `w`. Leaves are returned unchanged.
pub fn swap_root(w: &FullWordTree) -> FullWordTree {
    match w {
        WordTree::Leaf(_) => w.clone(),
        WordTree::Node(op, l, r) => WordTree::Node(op.opposite(), r.clone(), l.clone()),
    }
}

/// The orbit of `w` under the nodal group, in a fixed order.
///
/// The orbit has `2^{n-1}` members for a word with `n` leaves.
pub fn nodal_class(w: &FullWordTree, limits: &EnumerationLimits) -> Result<Vec<FullWordTree>> {
    let n = w.leaf_count();
    if n > limits.max_n {
        return Err(Error::ResourceGuard(format!(
            "nodal class of a length-{n} word exceeds the limit n <= {}",
            limits.max_n
        )));
    }
    Ok(class_of(w))
}

fn class_of(w: &FullWordTree) -> Vec<FullWordTree> {
    match w {
        WordTree::Leaf(_) => vec![w.clone()],
        WordTree::Node(op, l, r) => {
            let lefts: Vec<Arc<WordTree>> = class_of(l).into_iter().map(Arc::new).collect();
            let rights: Vec<Arc<WordTree>> = class_of(r).into_iter().map(Arc::new).collect();
            let mut out = Vec::with_capacity(2 * lefts.len() * rights.len());
            for swapped in [false, true] {
                for lw in &lefts {
                    for rw in &rights {
                        out.push(if swapped {
                            WordTree::Node(op.opposite(), rw.clone(), lw.clone())
                        } else {
                            WordTree::Node(*op, lw.clone(), rw.clone())
                        });
                    }
                }
            }
            out
        }
    }
}

/// The unique basic word nodally equivalent to `f`.
pub fn normalize_full(f: &FullWordTree) -> WordTree {
    match f {
        WordTree::Leaf(_) => f.clone(),
        WordTree::Node(op, l, r) => {
            let (l, r) = (normalize_full(l), normalize_full(r));
            if op.is_basic() {
                WordTree::node(*op, l, r)
            } else {
                WordTree::node(op.opposite(), r, l)
            }
        }
    }
}
