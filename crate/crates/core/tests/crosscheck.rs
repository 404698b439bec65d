//! Brute-force word counts against the exact formulas, and predicate
//! invariants on random words larger than the exhaustive ranges.

use num_bigint::BigUint;
use pcat::enumeration::{aux_bivariate, catalan, peri_catalan, word_count_bound};
use pcat::freewords::{
    count_reduced, count_reduced_rooted, enumerate_basic_trees, is_reduced, is_reduced_triality,
    nodal_class, normalize_full, EnumerationLimits, OpSymbol, WordTree,
};
use proptest::prelude::*;

#[test]
fn identity_recovery_from_rooted_oracle() {
    // P^s_n = 3 * sum_k m^s(n-k, k), with m counted by brute force
    let limits = EnumerationLimits::default();
    for s in 1..=2u32 {
        for n in 2..=6usize {
            let sum: u64 = (1..n)
                .map(|k| count_reduced_rooted(s, n - k, k, OpSymbol::Mul, &limits).unwrap())
                .sum();
            assert_eq!(
                BigUint::from(3 * sum),
                peri_catalan(s as u64, n as u64).unwrap(),
                "s={s} n={n}"
            );
        }
    }
}

#[test]
fn totality_of_reduced_and_nonreduced() {
    let limits = EnumerationLimits::default();
    for (s, n) in [(1u32, 5usize), (2, 4), (3, 3)] {
        let space = enumerate_basic_trees(s, n, &limits).unwrap();
        let reduced = space.count_where(is_reduced);
        let not_reduced = space.count_where(|t| !is_reduced(t));
        assert_eq!(
            BigUint::from(reduced + not_reduced),
            word_count_bound(s as u64, n as u64).unwrap()
        );
    }
}

#[test]
fn sharded_stream_equals_sequential_stream() {
    let space = enumerate_basic_trees(2, 5, &EnumerationLimits::default()).unwrap();
    let sequential: Vec<WordTree> = space.iter().collect();
    let sharded: Vec<WordTree> = (0..space.shard_count()).flat_map(|i| space.shard(i)).collect();
    assert_eq!(sequential, sharded);
    let shapes = sequential
        .iter()
        .map(strip)
        .collect::<std::collections::BTreeSet<_>>();
    assert_eq!(BigUint::from(shapes.len()), catalan(5).unwrap());
}

fn strip(t: &WordTree) -> String {
    match t {
        WordTree::Leaf(_) => "x".into(),
        WordTree::Node(_, l, r) => format!("({}{})", strip(l), strip(r)),
    }
}

#[test]
fn rooted_counts_symmetric_in_split() {
    let limits = EnumerationLimits::default();
    for (a, b) in [(1usize, 3usize), (2, 3), (1, 5)] {
        let ab = count_reduced_rooted(2, a, b, OpSymbol::RightDiv, &limits).unwrap();
        let ba = count_reduced_rooted(2, b, a, OpSymbol::RightDiv, &limits).unwrap();
        assert_eq!(ab, ba);
        assert_eq!(BigUint::from(ab), aux_bivariate(2, a as i64, b as i64).unwrap());
    }
}

fn arb_word(s: u32, depth: u32) -> impl Strategy<Value = WordTree> {
    let leaf = (1..=s).prop_map(WordTree::Leaf);
    leaf.prop_recursive(depth, 64, 2, |inner| {
        (prop::sample::select(OpSymbol::BASIC.to_vec()), inner.clone(), inner)
            .prop_map(|(op, l, r)| WordTree::node(op, l, r))
    })
}

/// Words built to contain a cancelation somewhere, so both outcomes are sampled.
fn arb_cancelable(s: u32) -> impl Strategy<Value = WordTree> {
    (arb_word(s, 3), arb_word(s, 3), 0usize..6).prop_map(|(u, v, which)| {
        use OpSymbol::*;
        let node = WordTree::node;
        match which {
            0 => node(Mul, u.clone(), node(LeftDiv, u, v)),
            1 => node(LeftDiv, u.clone(), node(Mul, u, v)),
            2 => node(Mul, node(RightDiv, v, u.clone()), u),
            3 => node(RightDiv, node(Mul, v, u.clone()), u),
            4 => node(RightDiv, u.clone(), node(LeftDiv, v, u)),
            _ => node(LeftDiv, node(RightDiv, u.clone(), v), u),
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn predicates_agree_on_random_words(w in arb_word(3, 6)) {
        prop_assert_eq!(is_reduced(&w), is_reduced_triality(&w));
    }

    #[test]
    fn planted_cancelations_are_found(w in arb_cancelable(2)) {
        prop_assert!(!is_reduced(&w));
        prop_assert!(!is_reduced_triality(&w));
    }

    #[test]
    fn nodal_orbit_invariants(w in arb_word(2, 4)) {
        let n = w.leaf_count();
        prop_assume!(n <= 10);
        let limits = EnumerationLimits { max_n: 10, ..EnumerationLimits::default() };
        let class = nodal_class(&w, &limits).unwrap();
        prop_assert_eq!(class.len(), 1usize << (n - 1));
        let reduced = is_reduced(&w);
        for f in &class {
            prop_assert_eq!(&normalize_full(f), &w);
            prop_assert_eq!(is_reduced_triality(f), reduced);
        }
        prop_assert_eq!(normalize_full(&w), w.clone());
    }
}

#[test]
fn oracle_matches_formula_small() {
    let limits = EnumerationLimits::default();
    for s in 1..=2u32 {
        for n in 1..=5usize {
            assert_eq!(
                BigUint::from(count_reduced(s, n, &limits).unwrap()),
                peri_catalan(s as u64, n as u64).unwrap()
            );
        }
    }
}
