use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

use super::BigCount;
use crate::error::{Error, Result};

/// Memoized evaluation of the auxiliary bivariate `m^s(a, b)` and of
/// `P^s_n = 3 * sum_{k=1}^{n-1} m^s(n-k, k)`.
///
/// The `P` values here are produced by this recursion alone, never by the
/// Euclid-structured formula, so the two paths stay independent.
#[derive(Debug, Clone)]
pub struct AuxRecursion {
    s: u64,
    p: Vec<BigCount>,
    /// Keyed by `(max(a, b), min(a, b))`.
    m: HashMap<(u64, u64), BigCount>,
}

impl AuxRecursion {
    pub fn new(s: u64) -> Result<Self> {
        if s == 0 {
            return Err(Error::domain("generator count must be >= 1"));
        }
        Ok(AuxRecursion {
            s,
            p: vec![BigUint::zero(), BigUint::from(s)],
            m: HashMap::new(),
        })
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    /// `P^s_n`; zero for `n <= 0`.
    pub fn peri(&mut self, n: i64) -> BigCount {
        if n <= 0 {
            return BigUint::zero();
        }
        let n = n as usize;
        while self.p.len() <= n {
            let target = self.p.len() as i64;
            let mut sum = BigUint::zero();
            for k in 1..target {
                sum += self.m(target - k, k);
            }
            self.p.push(sum * 3u32);
        }
        self.p[n].clone()
    }

    /// `m^s(a, b)`; zero when either argument is nonpositive.
    pub fn m(&mut self, a: i64, b: i64) -> BigCount {
        if a <= 0 || b <= 0 {
            return BigUint::zero();
        }
        let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
        let key = (hi as u64, lo as u64);
        if let Some(v) = self.m.get(&key) {
            return v.clone();
        }
        // Walk down the chain m(hi, lo) -> m(hi - lo, lo) -> ... until a
        // memoized or vanishing entry, then fill the chain back up.
        let mut chain = vec![key];
        let (mut x, mut y) = key;
        let mut base = loop {
            let d = x as i64 - y as i64;
            if d <= 0 {
                break BigUint::zero();
            }
            let next = if d as u64 >= y { (d as u64, y) } else { (y, d as u64) };
            if let Some(v) = self.m.get(&next) {
                break v.clone();
            }
            chain.push(next);
            (x, y) = next;
        };
        for &(x, y) in chain.iter().rev() {
            let prod = self.peri(x as i64) * self.peri(y as i64);
            // m(x - y, y) <= P_{x-y} P_y <= P_x P_y
            base = prod - base;
            self.m.insert((x, y), base.clone());
        }
        base
    }
}

/// `m^s(a, b)` for any integers `a, b`.
pub fn aux_bivariate(s: u64, a: i64, b: i64) -> Result<BigCount> {
    Ok(AuxRecursion::new(s)?.m(a, b))
}

/// `P^s_n` via the auxiliary bivariate recursion.
pub fn peri_catalan_recursive(s: u64, n: u64) -> Result<BigCount> {
    if s == 0 || n == 0 {
        return Err(Error::domain(format!(
            "peri_catalan_recursive requires s >= 1 and n >= 1, got s={s}, n={n}"
        )));
    }
    Ok(AuxRecursion::new(s)?.peri(n as i64))
}
