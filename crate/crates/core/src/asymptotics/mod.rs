//! Log-space peri-Catalan values and growth diagnostics.
//!
//! Exact values grow like `(36)^n`, so at `n` in the thousands the exact
//! recursion is wasteful. Here `ln P^s_n` is carried in double precision and
//! the auxiliary bivariate is carried as the ratio
//!
//! ```text
//! rho(a, b) = m^s(a, b) / (P_a P_b) = 1 - rho(a - b, b) * P_{a-b} / P_a
//! ```
//!
//! whose correction term is exponentially small in `b`, so the subtraction
//! never loses significant digits. Then
//!
//! ```text
//! ln P_n = ln 3 + logsumexp_k [ ln rho(n-k, k) + ln P_{n-k} + ln P_k ].
//! ```
//!
//! The recursion is carried on `d_n = ln P_n - ln(3^{n-1} s^n C_n)`, where the
//! powers of `3s` cancel and only the Catalan weights remain:
//!
//! ```text
//! d_n = logsumexp_k [ ln rho(n-k, k) + d_{n-k} + d_k + ln C_{n-k} + ln C_k ] - ln C_n.
//! ```
//!
//! `d_1 = d_2 = 0` exactly, `d_n <= 0`, and the cancelation defect is
//! `-d_n / ln(bound)` without subtracting nearly equal numbers.

mod fit;
mod report;

use std::f64::consts::LN_2;

use crate::error::{Error, Result};

pub use fit::{linear_regression, rational_fit, rational_fit_linearized, RationalFitResult, RegressionResult};
pub use report::{
    fmt_f64,
    defect_series, quotient_series, write_defect_csv, write_defect_json, write_quotient_csv,
    write_quotient_json, DefectRow, QuotientRow,
};

/// `ln((1 + sqrt 5) / 2)`.
pub const LN_GOLDEN_RATIO: f64 = 0.481_211_825_059_603_4;

/// Defaults for the `n = 2000` proxy of the limiting quotient.
pub const DEFAULT_PROXY_N: usize = 2000;

/// Scaled auxiliary bivariate `rho(a, b)` for `a >= b >= 1`, in a packed
/// lower triangle.
#[derive(Clone, Debug)]
pub struct RhoMemo {
    values: Vec<f64>,
    rows: usize,
}

impl RhoMemo {
    fn with_rows(rows: usize) -> Self {
        RhoMemo {
            values: Vec::with_capacity(rows * (rows + 1) / 2),
            rows: 0,
        }
    }

    fn index(a: usize, b: usize) -> usize {
        a * (a - 1) / 2 + (b - 1)
    }

    /// `rho(a, b)` for `a, b >= 1` in either order, if computed.
    pub fn get(&self, a: usize, b: usize) -> Option<f64> {
        let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
        if lo == 0 || hi > self.rows {
            return None;
        }
        Some(self.values[Self::index(hi, lo)]).filter(|v| !v.is_nan())
    }

    /// Largest `a` with a complete row.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Appends row `a = rows + 1` given `ln P_1 ..= ln P_a`. Entries with
    /// `a + b > limit` are never read by the recursion and are left as NaN.
    fn push_row(&mut self, s: u64, log_p: &[f64], limit: usize) -> Result<()> {
        let a = self.rows + 1;
        let filled = a.min(limit.saturating_sub(a));
        for b in 1..=filled {
            let d = a - b;
            let rho = if d == 0 {
                1.0
            } else {
                let prev = self.get(d, b).expect("earlier row");
                1.0 - prev * (log_p[d] - log_p[a]).exp()
            };
            if !(rho > 0.0) {
                return Err(Error::Stability { s, n: a + b, k: b });
            }
            self.values.push(rho);
        }
        self.values.resize(Self::index(a, a) + 1, f64::NAN);
        self.rows = a;
        Ok(())
    }
}

/// `ln P^s_n`, `ln C_n` and the log-ratio to the word bound for
/// `1 <= n <= n_max`; index 0 is unused.
#[derive(Clone, Debug)]
pub struct LogTable {
    s: u64,
    log_p: Vec<f64>,
    /// `ln P_n - ln(3^{n-1} s^n C_n)`, never positive.
    log_ratio: Vec<f64>,
    log_catalan: Vec<f64>,
}

/// Running-maximum log-sum-exp accumulator; terms are added in call order.
#[derive(Clone, Copy, Debug)]
struct LogSumExp {
    max: f64,
    scaled: f64,
}

impl LogSumExp {
    fn new() -> Self {
        LogSumExp {
            max: f64::NEG_INFINITY,
            scaled: 0.0,
        }
    }

    fn add(&mut self, t: f64) {
        if t > self.max {
            self.scaled = self.scaled * (self.max - t).exp() + 1.0;
            self.max = t;
        } else {
            self.scaled += (t - self.max).exp();
        }
    }

    fn value(self) -> f64 {
        self.max + self.scaled.ln()
    }
}

/// `ln C_1 ..= ln C_{n_max}` via `C_{n+1} = C_n * 2(2n - 1) / (n + 1)`.
pub fn log_catalan_table(n_max: usize) -> Vec<f64> {
    let mut out = vec![f64::NAN; n_max + 1];
    if n_max >= 1 {
        out[1] = 0.0;
    }
    for n in 1..n_max {
        let nf = n as f64;
        out[n + 1] = out[n] + LN_2 + (2.0 * nf - 1.0).ln() - (nf + 1.0).ln();
    }
    out
}

/// Builds the log table together with the `rho` memo used to produce it.
pub fn log_peri_table_with_rho(s: u64, n_max: usize) -> Result<(LogTable, RhoMemo)> {
    if s == 0 {
        return Err(Error::domain("generator count must be >= 1"));
    }
    if n_max < 2 {
        return Err(Error::domain("log_peri_table requires n_max >= 2"));
    }
    let log_catalan = log_catalan_table(n_max);
    let log_3s = (3.0 * s as f64).ln();
    let ln3 = 3f64.ln();
    let log_bound = |n: usize| log_catalan[n] + n as f64 * log_3s - ln3;
    let mut log_p = vec![f64::NEG_INFINITY; n_max + 1];
    let mut log_ratio = vec![f64::NAN; n_max + 1];
    log_p[1] = (s as f64).ln();
    log_ratio[1] = 0.0;
    let mut rho = RhoMemo::with_rows(n_max - 1);
    rho.push_row(s, &log_p, n_max)?;
    for n in 2..=n_max {
        let mut acc = LogSumExp::new();
        for k in 1..n {
            let r = rho.get(n - k, k).expect("rows below n are filled");
            acc.add(
                r.ln() + log_ratio[n - k] + log_ratio[k] + log_catalan[n - k] + log_catalan[k],
            );
        }
        log_ratio[n] = acc.value() - log_catalan[n];
        log_p[n] = log_bound(n) + log_ratio[n];
        if n < n_max {
            rho.push_row(s, &log_p, n_max)?;
        }
    }
    let table = LogTable {
        s,
        log_p,
        log_ratio,
        log_catalan,
    };
    Ok((table, rho))
}

/// `ln P^s_n` for `1 <= n <= n_max` in double precision.
pub fn log_peri_table(s: u64, n_max: usize) -> Result<LogTable> {
    Ok(log_peri_table_with_rho(s, n_max)?.0)
}

impl LogTable {
    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn n_max(&self) -> usize {
        self.log_p.len() - 1
    }

    /// `ln P^s_n`.
    pub fn log_p(&self, n: usize) -> Option<f64> {
        (1..=self.n_max()).contains(&n).then(|| self.log_p[n])
    }

    /// `ln P_n - ln(3^{n-1} s^n C_n)`.
    pub fn log_ratio(&self, n: usize) -> Option<f64> {
        (1..=self.n_max()).contains(&n).then(|| self.log_ratio[n])
    }

    /// `ln C_n`.
    pub fn log_catalan(&self, n: usize) -> Option<f64> {
        (1..=self.n_max()).contains(&n).then(|| self.log_catalan[n])
    }

    /// `ln(3^{n-1} s^n C_n) = ln C_n + n ln(3s) - ln 3`.
    pub fn log_bound(&self, n: usize) -> Option<f64> {
        let lc = self.log_catalan(n)?;
        Some(lc + n as f64 * (3.0 * self.s as f64).ln() - 3f64.ln())
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if n < 2 {
            return Err(Error::domain(format!("quotient requires n >= 2, got {n}")));
        }
        if n > self.n_max() {
            return Err(Error::domain(format!(
                "n = {n} beyond the table (n_max = {})",
                self.n_max()
            )));
        }
        Ok(())
    }

    /// `ln P_n / ln(3^{n-1} s^n C_n)`.
    pub fn quotient(&self, n: usize) -> Result<f64> {
        Ok(1.0 - self.cancelation_defect(n)?)
    }

    /// `1 - quotient(n)`, evaluated as `-d_n / ln(bound)`.
    pub fn cancelation_defect(&self, n: usize) -> Result<f64> {
        self.check_n(n)?;
        Ok(-self.log_ratio[n] / self.log_bound(n).expect("checked"))
    }
}

/// `ln P^s_n / (ln C_n + n ln 3s - ln 3)` read from `table`.
pub fn quotient(s: u64, n: usize, table: &LogTable) -> Result<f64> {
    if s != table.s() {
        return Err(Error::domain(format!(
            "table is for s={}, asked for s={s}",
            table.s()
        )));
    }
    table.quotient(n)
}

/// `1 - quotient(s, n, table)`.
pub fn cancelation_defect(s: u64, n: usize, table: &LogTable) -> Result<f64> {
    quotient(s, n, table)?;
    table.cancelation_defect(n)
}

/// Outcome of a monotonicity scan: the index of the first element that breaks
/// the order, counted in the scanned sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonotonicityReport {
    pub checked: usize,
    pub first_violation: Option<usize>,
}

impl MonotonicityReport {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Scans `values` for a place where `ok(prev, next)` fails.
pub fn check_monotone(values: &[f64], ok: impl Fn(f64, f64) -> bool) -> MonotonicityReport {
    let first_violation = values
        .windows(2)
        .position(|w| !ok(w[0], w[1]))
        .map(|i| i + 1);
    MonotonicityReport {
        checked: values.len(),
        first_violation,
    }
}

/// Is the quotient nondecreasing over `n_from ..= table.n_max()`? Violation
/// indices are reported as `n`.
pub fn quotient_monotonicity(table: &LogTable, n_from: usize) -> Result<MonotonicityReport> {
    let qs = (n_from..=table.n_max())
        .map(|n| table.quotient(n))
        .collect::<Result<Vec<_>>>()?;
    let mut report = check_monotone(&qs, |a, b| b >= a);
    report.first_violation = report.first_violation.map(|i| i + n_from);
    Ok(report)
}

/// Cancelation defect at `proxy_n` for each `s` in `s_values`, computed per-s in
/// parallel and returned in input order.
pub fn defects_at(s_values: &[u64], proxy_n: usize) -> Result<Vec<(u64, f64)>> {
    use rayon::prelude::*;
    s_values
        .par_iter()
        .map(|&s| {
            let table = log_peri_table(s, proxy_n)?;
            Ok((s, table.cancelation_defect(proxy_n)?))
        })
        .collect()
}
