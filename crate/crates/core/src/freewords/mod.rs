//! Quasigroup words as parsing trees, and the brute-force ground truth.
//!
//! Counting is over basic words. The auxiliary rooted count admits an
//! opposite operation only at the root, matching how reduced words are
//! assembled from two basic subwords.

mod enumerate;
mod nodal;
mod ops;
mod reduce;
mod tree;

pub use enumerate::{count_reduced, count_reduced_rooted, enumerate_basic_trees, TreeSpace};
pub use nodal::{nodal_class, normalize_full, swap_root};
pub use ops::{op_algebra, OpRelations, OpSymbol};
pub use reduce::{is_reduced, is_reduced_triality, nodally_equal};
pub use tree::{format_word, parse_full_word, parse_word, FullWordTree, WordTree};

/// Guards against exponential blow-up in exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    /// Largest word length accepted.
    pub max_n: usize,
    /// Largest number of candidate trees `3^{n-1} s^n C_n` accepted.
    pub budget: u128,
}

impl EnumerationLimits {
    pub const DEFAULT_MAX_N: usize = 8;
    pub const DEFAULT_BUDGET: u128 = 10_000_000;
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_n: Self::DEFAULT_MAX_N,
            budget: Self::DEFAULT_BUDGET,
        }
    }
}
