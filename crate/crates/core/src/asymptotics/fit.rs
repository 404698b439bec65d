//! Ordinary least squares on a line, and the rational model `f = a / (s - b)`
//! fitted through its linearization `1/f = s/a - b/a`.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RegressionResult {
    pub slope: f64,
    pub intercept: f64,
    /// `sqrt(SSR / (N - 2))`; zero when only two points are given.
    pub residual_std_error: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RationalFitResult {
    /// Numerator.
    pub a: f64,
    /// Pole location.
    pub b: f64,
    /// Residual standard error of the linearized fit.
    pub residual: f64,
}

pub fn linear_regression(points: &[(f64, f64)]) -> Result<RegressionResult> {
    if points.len() < 2 {
        return Err(Error::domain("linear regression needs at least two points"));
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let (mut sxx, mut sxy) = (0.0, 0.0);
    for &(x, y) in points {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
    }
    if sxx == 0.0 || !sxx.is_finite() {
        return Err(Error::domain("degenerate x values: all points share one abscissa"));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ssr: f64 = points
        .iter()
        .map(|&(x, y)| {
            let e = y - (slope * x + intercept);
            e * e
        })
        .sum();
    let residual_std_error = if points.len() > 2 {
        (ssr / (n - 2.0)).sqrt()
    } else {
        0.0
    };
    Ok(RegressionResult {
        slope,
        intercept,
        residual_std_error,
    })
}

fn validate_rational_points(points: &[(f64, f64)]) -> Result<()> {
    if points.len() < 2 {
        return Err(Error::domain("rational fit needs at least two points"));
    }
    if let Some(&(s, f)) = points.iter().find(|p| !(p.1 > 0.0)) {
        return Err(Error::domain(format!("nonpositive value f={f} at s={s}")));
    }
    let mut xs: Vec<f64> = points.iter().map(|p| p.0).collect();
    xs.sort_by(f64::total_cmp);
    if xs.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::domain("rational fit needs distinct s values"));
    }
    Ok(())
}

/// Solves the linearized problem `1/f = s/a - b/a` by ordinary least squares.
///
/// The transform weights each point by `1/f^2`, so points with small `f`
/// dominate; use [`rational_fit`] for the least-squares fit in `f` itself.
pub fn rational_fit_linearized(points: &[(f64, f64)]) -> Result<RationalFitResult> {
    validate_rational_points(points)?;
    let linear: Vec<(f64, f64)> = points.iter().map(|&(s, f)| (s, 1.0 / f)).collect();
    let reg = linear_regression(&linear)?;
    if reg.slope == 0.0 || !reg.slope.is_finite() {
        return Err(Error::domain("singular normal equations: zero slope in 1/f"));
    }
    let a = 1.0 / reg.slope;
    Ok(RationalFitResult {
        a,
        b: -reg.intercept * a,
        residual: reg.residual_std_error,
    })
}

/// Least-squares fit of `f = a / (s - b)` with the pole below every sample
/// (`a > 0`, `b < min s`).
///
/// For fixed `b` the optimal `a` is linear, so the sum of squares is profiled
/// over `b` alone: a log-spaced scan of the pole distance `min s - b`, a
/// golden-section refinement, then Gauss-Newton steps on `(a, b)`.
/// `residual` is `sqrt(SSR / (N - 2))` in the units of `f`.
pub fn rational_fit(points: &[(f64, f64)]) -> Result<RationalFitResult> {
    validate_rational_points(points)?;
    let s_min = points.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let s_max = points.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let scale = (s_max - s_min).max(s_min.abs()).max(1.0);

    let best_a = |b: f64| {
        let (mut fg, mut gg) = (0.0, 0.0);
        for &(s, f) in points {
            let g = 1.0 / (s - b);
            fg += f * g;
            gg += g * g;
        }
        fg / gg
    };
    let ssr = |a: f64, b: f64| -> f64 {
        points
            .iter()
            .map(|&(s, f)| {
                let e = f - a / (s - b);
                e * e
            })
            .sum()
    };
    let profile = |log_delta: f64| {
        let b = s_min - log_delta.exp();
        ssr(best_a(b), b)
    };

    // scan delta = s_min - b over [1e-9, 1e6] * scale
    let (lo, hi) = ((1e-9 * scale).ln(), (1e6 * scale).ln());
    let steps = 600;
    let grid: Vec<f64> = (0..=steps)
        .map(|i| lo + (hi - lo) * i as f64 / steps as f64)
        .collect();
    let values: Vec<f64> = grid.iter().map(|&x| profile(x)).collect();
    let i_best = values
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.total_cmp(y.1))
        .map(|(i, _)| i)
        .expect("non-empty grid");
    let (mut left, mut right) = (grid[i_best.saturating_sub(1)], grid[(i_best + 1).min(steps)]);
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..200 {
        let x1 = right - inv_phi * (right - left);
        let x2 = left + inv_phi * (right - left);
        if profile(x1) <= profile(x2) {
            right = x2;
        } else {
            left = x1;
        }
    }
    let mut b = s_min - ((left + right) / 2.0).exp();
    let mut a = best_a(b);

    // Gauss-Newton on (a, b); model a g with g = 1/(s - b), d/da = g, d/db = a g^2
    for _ in 0..50 {
        let (mut jaa, mut jab, mut jbb, mut ra, mut rb) = (0.0, 0.0, 0.0, 0.0, 0.0);
        for &(s, f) in points {
            let g = 1.0 / (s - b);
            let (da, db) = (g, a * g * g);
            let e = f - a * g;
            jaa += da * da;
            jab += da * db;
            jbb += db * db;
            ra += da * e;
            rb += db * e;
        }
        let det = jaa * jbb - jab * jab;
        if det == 0.0 || !det.is_finite() {
            break;
        }
        let step_a = (jbb * ra - jab * rb) / det;
        let step_b = (jaa * rb - jab * ra) / det;
        let (na, nb) = (a + step_a, b + step_b);
        if !(nb < s_min) || ssr(na, nb) > ssr(a, b) {
            break;
        }
        let done = step_a.abs() <= 1e-15 * a.abs() && step_b.abs() <= 1e-15 * scale;
        a = na;
        b = nb;
        if done {
            break;
        }
    }
    if !(a > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain("rational fit did not converge to a positive numerator"));
    }
    let n = points.len() as f64;
    let residual = if points.len() > 2 {
        (ssr(a, b) / (n - 2.0)).sqrt()
    } else {
        0.0
    };
    Ok(RationalFitResult { a, b, residual })
}
