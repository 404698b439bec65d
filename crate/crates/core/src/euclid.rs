//! Division-algorithm traces of the Euclidean algorithm.
//!
//! For a pair `(n, k)` with `1 <= k < n` the trace records every quotient and
//! remainder produced while computing `gcd(n, k)`, together with the running
//! parity offsets `eps_0 = 1`, `eps_{l+1} = eps_l + q_{l+1}`. These index the
//! alternating summands of the exact peri-Catalan recursion.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EuclidTrace {
    n: u64,
    k: u64,
    /// `r_{-1}, r_0, ..., r_{L+1}` stored from offset 0.
    remainders: Vec<u64>,
    /// `q_1, ..., q_{L+1}` stored from offset 0.
    quotients: Vec<u64>,
    /// `eps_0, ..., eps_L`.
    epsilons: Vec<u64>,
}

/// Runs the Euclidean algorithm on `(n, k)` and records the full trace.
pub fn euclid_trace(n: u64, k: u64) -> Result<EuclidTrace> {
    if n < 2 || k < 1 || k >= n {
        return Err(Error::domain(format!(
            "euclid_trace requires 1 <= k <= n-1 and n >= 2, got n={n}, k={k}"
        )));
    }
    let mut remainders = vec![n, k];
    let mut quotients = Vec::new();
    let (mut prev, mut cur) = (n, k);
    while cur != 0 {
        quotients.push(prev / cur);
        let next = prev % cur;
        remainders.push(next);
        prev = cur;
        cur = next;
    }
    let steps = quotients.len() - 1;
    let mut epsilons = Vec::with_capacity(steps + 1);
    epsilons.push(1);
    for l in 0..steps {
        epsilons.push(epsilons[l] + quotients[l]);
    }
    Ok(EuclidTrace {
        n,
        k,
        remainders,
        quotients,
        epsilons,
    })
}

impl EuclidTrace {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Number of division steps after the first, `L`.
    pub fn steps(&self) -> usize {
        self.quotients.len() - 1
    }

    /// `r_l` for `-1 <= l <= L+1`.
    pub fn remainder(&self, l: isize) -> u64 {
        self.remainders[(l + 1) as usize]
    }

    /// `q_l` for `1 <= l <= L+1`.
    pub fn quotient(&self, l: usize) -> u64 {
        self.quotients[l - 1]
    }

    /// `eps_l` for `0 <= l <= L`.
    pub fn epsilon(&self, l: usize) -> u64 {
        self.epsilons[l]
    }

    pub fn remainders(&self) -> &[u64] {
        &self.remainders
    }

    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    pub fn epsilons(&self) -> &[u64] {
        &self.epsilons
    }

    pub fn gcd(&self) -> u64 {
        self.remainder(self.steps() as isize)
    }
}
