//! Reducedness predicates.
//!
//! A basic word is reduced when no subterm matches the left-hand side of one
//! of the six cancelation identities. Matching is structural: the repeated
//! subterm `A` must occur as two equal subtrees.

use super::ops::OpSymbol;
use super::tree::WordTree;
use OpSymbol::{LeftDiv, Mul, RightDiv};

/// Scans every subtree of a basic word against the six patterns
/// `A·(A\B)`, `A\(A·B)`, `(B/A)·A`, `(B·A)/A`, `A/(B\A)`, `(A/B)\A`.
pub fn is_reduced(w: &WordTree) -> bool {
    match w {
        WordTree::Leaf(_) => true,
        WordTree::Node(op, l, r) => {
            !matches_identity(*op, l, r) && is_reduced(l) && is_reduced(r)
        }
    }
}

fn matches_identity(op: OpSymbol, l: &WordTree, r: &WordTree) -> bool {
    let right_is = |want: OpSymbol| match r {
        WordTree::Node(o, a, _) if *o == want => **a == *l,
        _ => false,
    };
    let right_ends = |want: OpSymbol| match r {
        WordTree::Node(o, _, a) if *o == want => **a == *l,
        _ => false,
    };
    let left_starts = |want: OpSymbol| match l {
        WordTree::Node(o, a, _) if *o == want => **a == *r,
        _ => false,
    };
    let left_ends = |want: OpSymbol| match l {
        WordTree::Node(o, _, a) if *o == want => **a == *r,
        _ => false,
    };
    match op {
        // (SL) A·(A\B)   (SR) (B/A)·A
        Mul => right_is(LeftDiv) || left_ends(RightDiv),
        // (IL) A\(A·B)   (DR) (A/B)\A
        LeftDiv => right_is(Mul) || left_starts(RightDiv),
        // (IR) (B·A)/A   (DL) A/(B\A)
        RightDiv => left_ends(Mul) || right_ends(LeftDiv),
        _ => false,
    }
}

/// The same predicate, computed through triality.
///
/// A node `x y mu^g` is cancelable iff, in some orientation of the node and
/// of its right child reached by nodal swaps, it reads `u (u v mu^{tau g}) mu^g`,
/// the two copies of `u` being equal up to nodal swaps.
/// Accepts full words as well as basic ones.
pub fn is_reduced_triality(w: &WordTree) -> bool {
    match w {
        WordTree::Leaf(_) => true,
        WordTree::Node(op, l, r) => {
            !cancelable(*op, l, r) && is_reduced_triality(l) && is_reduced_triality(r)
        }
    }
}

fn orientations<'a>(
    op: OpSymbol,
    l: &'a WordTree,
    r: &'a WordTree,
) -> [(OpSymbol, &'a WordTree, &'a WordTree); 2] {
    [(op, l, r), (op.opposite(), r, l)]
}

fn cancelable(op: OpSymbol, l: &WordTree, r: &WordTree) -> bool {
    orientations(op, l, r).into_iter().any(|(g, u, v)| match v {
        WordTree::Node(vop, vl, vr) => orientations(*vop, vl, vr)
            .into_iter()
            .any(|(h, vu, _)| h == g.cancel_partner() && nodally_equal(vu, u)),
        WordTree::Leaf(_) => false,
    })
}

/// Equality up to nodal swaps; plain structural equality on basic words.
pub fn nodally_equal(x: &WordTree, y: &WordTree) -> bool {
    match (x, y) {
        (WordTree::Leaf(a), WordTree::Leaf(b)) => a == b,
        (WordTree::Node(o1, l1, r1), WordTree::Node(o2, l2, r2)) => {
            if o1 == o2 {
                nodally_equal(l1, l2) && nodally_equal(r1, r2)
            } else if *o1 == o2.opposite() {
                nodally_equal(l1, r2) && nodally_equal(r1, l2)
            } else {
                false
            }
        }
        _ => false,
    }
}
