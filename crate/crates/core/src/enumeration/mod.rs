//! Exact arbitrary-precision peri-Catalan numbers.
//!
//! `P^s_n` counts reduced basic quasigroup words of length `n` over `s`
//! generators. Two independent evaluators are provided:
//!
//! * [`PeriTable`] extends itself with the Euclid-structured alternating sum,
//!   which only needs the previously computed `P` values;
//! * [`AuxRecursion`] evaluates `P^s_n = 3 * sum_k m^s(n-k, k)` through the
//!   auxiliary bivariate `m^s(a, b) = P_a P_b - m^s(a-b, b)`.
//!
//! The first is the production path; the second exists to cross-check it.

mod aux;
mod cache;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::euclid::euclid_trace;

pub use aux::{aux_bivariate, peri_catalan_recursive, AuxRecursion};
pub use cache::{build_table, cache_file_name, load_cache, save_cache, CACHE_ENV_VAR};

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

/// Leaf-indexed Catalan number: the number of binary trees with `n` leaves.
pub fn catalan(n: u64) -> Result<BigCount> {
    if n == 0 {
        return Err(Error::domain("catalan is defined for n >= 1"));
    }
    // binomial(2n-2, n-1) / n, built incrementally so every step is exact
    let m = n - 1;
    let mut c = BigUint::one();
    for i in 0..m {
        // C(m+i+1, i+1) = C(m+i, i) * (m+i+1) / (i+1)
        c = c * (m + i + 1) / (i + 1);
    }
    Ok(c / n)
}

/// Upper bound `3^{n-1} s^n C_n`: the number of basic parsing trees of length `n`.
pub fn word_count_bound(s: u64, n: u64) -> Result<BigCount> {
    if s == 0 || n == 0 {
        return Err(Error::domain(format!(
            "word_count_bound requires s >= 1 and n >= 1, got s={s}, n={n}"
        )));
    }
    let n32 = u32::try_from(n).map_err(|_| Error::domain("n too large"))?;
    Ok(BigUint::from(3u32).pow(n32 - 1) * BigUint::from(s).pow(n32) * catalan(n)?)
}

/// `P^s_n` via the Euclid-structured formula.
pub fn peri_catalan(s: u64, n: u64) -> Result<BigCount> {
    if s == 0 || n == 0 {
        return Err(Error::domain(format!(
            "peri_catalan requires s >= 1 and n >= 1, got s={s}, n={n}"
        )));
    }
    let mut table = PeriTable::new(s)?;
    table.extend_to(n as usize)?;
    Ok(table.get(n as usize).expect("extended").clone())
}

/// Natural logarithm of a big count, accurate to double precision.
pub fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 960 {
        return x.to_f64().unwrap_or(f64::NAN).ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap_or(f64::NAN);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Contiguous `P^s_0 ..= P^s_{n_max}` for one generator count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriTable {
    s: u64,
    values: Vec<BigCount>,
}

impl PeriTable {
    /// A table holding only `P^s_0 = 0`.
    pub fn new(s: u64) -> Result<Self> {
        if s == 0 {
            return Err(Error::domain("generator count must be >= 1"));
        }
        Ok(PeriTable {
            s,
            values: vec![BigUint::zero()],
        })
    }

    /// Wraps values already known to be `P^s_0 ..`; no validation is done.
    pub(crate) fn from_values(s: u64, values: Vec<BigCount>) -> Self {
        PeriTable { s, values }
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    /// Largest `n` held.
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&BigCount> {
        self.values.get(n)
    }

    /// `P^s_0 ..= P^s_{n_max}`.
    pub fn values(&self) -> &[BigCount] {
        &self.values
    }

    pub fn extend_to(&mut self, n_max: usize) -> Result<()> {
        while self.values.len() <= n_max {
            let n = self.values.len();
            let next = self.next_value(n)?;
            self.values.push(next);
        }
        Ok(())
    }

    fn next_value(&self, n: usize) -> Result<BigCount> {
        if n == 1 {
            return Ok(BigUint::from(self.s));
        }
        let blocks = (1..n)
            .into_par_iter()
            .map(|k| self.cancelation_block(n, k))
            .collect::<Result<Vec<_>>>()?;
        // ascending k
        let mut total = BigInt::zero();
        for block in blocks {
            total += block;
        }
        let total = to_unsigned(total, || format!("P^{}_{n} summed negative", self.s))?;
        Ok(total * 3u32)
    }

    /// The braced summand for one `k`; equals `m^s(n-k, k)`.
    fn cancelation_block(&self, n: usize, k: usize) -> Result<BigInt> {
        let trace = euclid_trace(n as u64, k as u64)?;
        let p = |i: u64| BigInt::from_biguint(Sign::Plus, self.values[i as usize].clone());
        let mut block = BigInt::zero();
        let steps = trace.steps();
        for i in 0..=steps {
            let r_prev = trace.remainder(i as isize - 1);
            let r_i = trace.remainder(i as isize);
            let eps = trace.epsilon(i);
            let j_start = if i == 0 { 1 } else { 0 };
            let mut inner = BigInt::zero();
            for j in j_start..trace.quotient(i + 1) {
                let term = p(r_prev - j * r_i);
                if (eps + j) % 2 == 0 {
                    inner += term;
                } else {
                    inner -= term;
                }
            }
            block += inner * p(r_i);
        }
        if block.sign() == Sign::Minus {
            return Err(Error::domain(format!(
                "negative cancelation block at s={}, n={n}, k={k}",
                self.s
            )));
        }
        Ok(block)
    }
}

fn to_unsigned(v: BigInt, msg: impl FnOnce() -> String) -> Result<BigUint> {
    v.to_biguint().ok_or_else(|| Error::domain(msg()))
}
