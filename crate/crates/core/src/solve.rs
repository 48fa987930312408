//! Bisection solvers for the closed-form extremal bounds: the conditional
//! clique-density maximum, the weighted min-max over threshold profiles, and
//! the max-min density root.

use alloc::vec::Vec;
use core::fmt;

use crate::math::{pow, powu};
use crate::model::{p_eval, q_eval};

const BISECT_ITERS: usize = 200;
/// Branches closer than this are reported as a tie.
const TIE_TOL: f64 = 1e-12;
/// Normalized residual allowed for every solved root.
const RESIDUAL_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub enum SolveError {
    POutOfRange { p: f64 },
    AlphaOutOfRange { alpha: f64 },
    NonpositiveCoefficient { name: &'static str, value: f64 },
    SizeTooSmall { name: &'static str, value: usize, min: usize },
    SizeOrder { r: usize, s: usize },
    StepsTooFew { steps: usize },
    NoBracket,
    ResidualTooLarge { residual: f64 },
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::POutOfRange { p } => write!(f, "p = {p} outside [0, 1]"),
            SolveError::AlphaOutOfRange { alpha } => write!(f, "alpha = {alpha} outside [0, 1]"),
            SolveError::NonpositiveCoefficient { name, value } => {
                write!(f, "{name} = {value} must be positive")
            }
            SolveError::SizeTooSmall { name, value, min } => {
                write!(f, "{name} = {value} must be at least {min}")
            }
            SolveError::SizeOrder { r, s } => write!(f, "need r < s, got r = {r}, s = {s}"),
            SolveError::StepsTooFew { steps } => write!(f, "need at least 2 steps, got {steps}"),
            SolveError::NoBracket => write!(f, "root bracketing failed: no sign change"),
            SolveError::ResidualTooLarge { residual } => {
                write!(f, "solved root misses its equation by {residual}")
            }
        }
    }
}

impl core::error::Error for SolveError {}

/// Which of the two reference families attains a solved bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Q,
    QBar,
    Tie,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Q => write!(f, "Q"),
            Family::QBar => write!(f, "Qbar"),
            Family::Tie => write!(f, "tie"),
        }
    }
}

/// A solved extremal bound: winning family, its clique fraction `t`, the
/// bound value, and the named roots behind it.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtremalPoint {
    pub family: Family,
    pub t: f64,
    pub value: f64,
    pub roots: Vec<(&'static str, f64)>,
}

impl ExtremalPoint {
    pub fn root(&self, name: &str) -> Option<f64> {
        self.roots.iter().find(|(n, _)| *n == name).map(|(_, v)| *v)
    }
}

/// One emitted point of the density trade-off curve.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveRow {
    pub theta: f64,
    pub family: Family,
    pub q_density: f64,
    pub p_density: f64,
}

/// Root of a nondecreasing function on `[lo, hi]` by 200 bisection steps.
/// The endpoints must bracket zero.
fn bisect_increasing(lo: f64, hi: f64, f: impl Fn(f64) -> f64) -> Result<f64, SolveError> {
    let flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo > 0.0 || fhi < 0.0 {
        return Err(SolveError::NoBracket);
    }
    let (mut lo, mut hi) = (lo, hi);
    for _ in 0..BISECT_ITERS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

fn check_residual(residual: f64, scale: f64) -> Result<(), SolveError> {
    let normalized = residual.abs() / scale.max(1.0);
    if normalized > RESIDUAL_TOL {
        return Err(SolveError::ResidualTooLarge { residual });
    }
    Ok(())
}

/// The unique root of `q^r + r q^(r-1) (1 - q) = p` in [0, 1]. The left side
/// is nondecreasing (derivative `r(r-1) q^(r-2) (1-q) >= 0`), so bisection
/// applies.
pub fn solve_q(r: usize, p: f64) -> Result<f64, SolveError> {
    if r < 2 {
        return Err(SolveError::SizeTooSmall { name: "r", value: r, min: 2 });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(SolveError::POutOfRange { p });
    }
    let lhs = |q: f64| powu(q, r as u32) + r as f64 * powu(q, (r - 1) as u32) * (1.0 - q);
    let q = bisect_increasing(0.0, 1.0, |x| lhs(x) - p)?;
    check_residual(lhs(q) - p, 1.0)?;
    Ok(q)
}

/// Largest possible `d(K_s)` given `d(K̄_r) >= p`, in the large-graph limit:
/// the better of the two reference families, with the family, its fraction
/// `t`, and the root `q` reported.
pub fn m_bound(r: usize, s: usize, p: f64) -> Result<ExtremalPoint, SolveError> {
    for (name, value) in [("r", r), ("s", s)] {
        if value < 2 {
            return Err(SolveError::SizeTooSmall { name, value, min: 2 });
        }
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(SolveError::POutOfRange { p });
    }
    let t_qbar = pow(p, 1.0 / r as f64);
    let branch_qbar =
        powu(1.0 - t_qbar, s as u32) + s as f64 * t_qbar * powu(1.0 - t_qbar, (s - 1) as u32);
    let q = solve_q(r, p)?;
    let t_q = 1.0 - q;
    let branch_q = powu(t_q, s as u32);
    let roots = alloc::vec![("q", q), ("t_q", t_q), ("t_qbar", t_qbar)];
    let point = if (branch_q - branch_qbar).abs() < TIE_TOL {
        ExtremalPoint { family: Family::Tie, t: t_q, value: branch_q.max(branch_qbar), roots }
    } else if branch_q > branch_qbar {
        ExtremalPoint { family: Family::Q, t: t_q, value: branch_q, roots }
    } else {
        ExtremalPoint { family: Family::QBar, t: t_qbar, value: branch_qbar, roots }
    };
    Ok(point)
}

/// Maximum of `min{a d(K_s), b d(K̄_r)}` over all large graphs: the better of
/// `a·α^s` (a clique on an `α` fraction) and `b·β^r` (the complement family),
/// where `α` and `β` solve the stated balance equations.
pub fn phi_max(a: f64, b: f64, r: usize, s: usize) -> Result<ExtremalPoint, SolveError> {
    for (name, value) in [("a", a), ("b", b)] {
        if !(value > 0.0) {
            return Err(SolveError::NonpositiveCoefficient { name, value });
        }
    }
    for (name, value) in [("r", r), ("s", s)] {
        if value < 3 {
            return Err(SolveError::SizeTooSmall { name, value, min: 3 });
        }
    }
    // a·α^s grows from 0 to a while the right side falls from b to 0, so the
    // difference is increasing and crosses zero once.
    let co_density = |t: f64, m: usize| {
        powu(1.0 - t, m as u32) + m as f64 * t * powu(1.0 - t, (m - 1) as u32)
    };
    let alpha = bisect_increasing(0.0, 1.0, |t| {
        a * powu(t, s as u32) - b * co_density(t, r)
    })?;
    check_residual(a * powu(alpha, s as u32) - b * co_density(alpha, r), a.max(b))?;
    let beta = bisect_increasing(0.0, 1.0, |t| {
        b * powu(t, r as u32) - a * co_density(t, s)
    })?;
    check_residual(b * powu(beta, r as u32) - a * co_density(beta, s), a.max(b))?;
    let value_q = a * powu(alpha, s as u32);
    let value_qbar = b * powu(beta, r as u32);
    let roots = alloc::vec![("alpha", alpha), ("beta", beta)];
    let point = if (value_q - value_qbar).abs() < TIE_TOL {
        ExtremalPoint {
            family: Family::Tie,
            t: alpha,
            value: value_q.max(value_qbar),
            roots,
        }
    } else if value_q > value_qbar {
        ExtremalPoint { family: Family::Q, t: alpha, value: value_q, roots }
    } else {
        ExtremalPoint { family: Family::QBar, t: beta, value: value_qbar, roots }
    };
    Ok(point)
}

/// Solves `ρ^r = (1-ρ)^r + rρ(1-ρ)^(r-1)`; the max-min density value is
/// `ρ^r`, attained by a clique on a `ρ` fraction and by its complement.
pub fn rho_maxmin(r: usize) -> Result<ExtremalPoint, SolveError> {
    if r < 3 {
        return Err(SolveError::SizeTooSmall { name: "r", value: r, min: 3 });
    }
    let gap = |t: f64| {
        powu(t, r as u32)
            - powu(1.0 - t, r as u32)
            - r as f64 * t * powu(1.0 - t, (r - 1) as u32)
    };
    let rho = bisect_increasing(0.0, 1.0, gap)?;
    check_residual(gap(rho), 1.0)?;
    Ok(ExtremalPoint {
        family: Family::Tie,
        t: rho,
        value: powu(rho, r as u32),
        roots: alloc::vec![("rho", rho)],
    })
}

/// The Kruskal-Katona bound `alpha^(s/r)` on `d(K_s)` given `d(K_r) = alpha`.
pub fn kk_bound(r: usize, s: usize, alpha: f64) -> Result<f64, SolveError> {
    if r >= s {
        return Err(SolveError::SizeOrder { r, s });
    }
    if !(0.0..=1.0).contains(&alpha) {
        return Err(SolveError::AlphaOutOfRange { alpha });
    }
    Ok(pow(alpha, s as f64 / r as f64))
}

/// Solves `(α+1)^(r-1) - 1 = (r-1)(s-1)α` for the unique positive `α` and
/// returns `(1 + 1/α) - (1 + 1/((r-1)(s-1)α))^(s-1)`, which is positive for
/// all `r, s >= 3`.
pub fn lemma_ineq_margin(r: usize, s: usize) -> Result<f64, SolveError> {
    for (name, value) in [("r", r), ("s", s)] {
        if value < 3 {
            return Err(SolveError::SizeTooSmall { name, value, min: 3 });
        }
    }
    let coeff = ((r - 1) * (s - 1)) as f64;
    let gap = |a: f64| powu(a + 1.0, (r - 1) as u32) - 1.0 - coeff * a;
    // The gap is convex, zero at the origin with negative slope, so it is
    // negative up to the positive root and positive afterwards.
    let mut hi = 1.0;
    while gap(hi) <= 0.0 {
        hi *= 2.0;
        if hi > 1e9 {
            return Err(SolveError::NoBracket);
        }
    }
    let alpha = bisect_increasing(1e-12, hi, gap)?;
    check_residual(gap(alpha), coeff * alpha)?;
    Ok((1.0 + 1.0 / alpha) - powu(1.0 + 1.0 / (coeff * alpha), (s - 1) as u32))
}

/// The two family curves `theta -> (d(K̄_r), d(K_s))` on a uniform grid of
/// `steps + 1` points, two rows per grid point.
pub fn curve(r: usize, s: usize, steps: usize) -> Result<Vec<CurveRow>, SolveError> {
    for (name, value) in [("r", r), ("s", s)] {
        if value < 2 {
            return Err(SolveError::SizeTooSmall { name, value, min: 2 });
        }
    }
    if steps < 2 {
        return Err(SolveError::StepsTooFew { steps });
    }
    let mut rows = Vec::with_capacity(2 * (steps + 1));
    for i in 0..=steps {
        let theta = i as f64 / steps as f64;
        // a clique on a theta fraction
        let q_profile = ([theta], [1.0 - theta]);
        rows.push(CurveRow {
            theta,
            family: Family::Q,
            q_density: q_eval(&q_profile.0, &q_profile.1, r),
            p_density: p_eval(&q_profile.0, &q_profile.1, s),
        });
        // the complement of a clique on a theta fraction
        let qbar_profile = ([0.0, 1.0 - theta], [theta, 0.0]);
        rows.push(CurveRow {
            theta,
            family: Family::QBar,
            q_density: q_eval(&qbar_profile.0, &qbar_profile.1, r),
            p_density: p_eval(&qbar_profile.0, &qbar_profile.1, s),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_q_examples() {
        for r in 2..=6 {
            assert_eq!(solve_q(r, 0.0).unwrap(), 0.0);
            assert_eq!(solve_q(r, 1.0).unwrap(), 1.0);
        }
        // q = 1/2 solves q^3 + 3q^2(1-q) = 1/2
        assert!((solve_q(3, 0.5).unwrap() - 0.5).abs() < 1e-12);
        assert!(solve_q(3, 1.5).is_err());
        assert!(solve_q(1, 0.5).is_err());
    }

    #[test]
    fn solve_q_residuals_on_grid() {
        for r in 2..=6usize {
            for i in 0..=100 {
                let p = i as f64 / 100.0;
                let q = solve_q(r, p).unwrap();
                let lhs = q.powi(r as i32) + r as f64 * q.powi(r as i32 - 1) * (1.0 - q);
                assert!((lhs - p).abs() <= 1e-12, "r={r} p={p}");
            }
        }
    }

    #[test]
    fn m_bound_examples() {
        let at_zero = m_bound(4, 3, 0.0).unwrap();
        assert_eq!(at_zero.value, 1.0);
        assert_eq!(at_zero.family, Family::Tie);

        let at_one = m_bound(3, 4, 1.0).unwrap();
        assert!(at_one.value.abs() < 1e-12);

        // frozen against a 40-digit evaluation: branches 0.11011842515769025 and 0.125
        let mid = m_bound(3, 3, 0.5).unwrap();
        assert_eq!(mid.family, Family::Q);
        assert!((mid.value - 0.125).abs() < 1e-12);
        assert!((mid.t - 0.5).abs() < 1e-12);
        assert!((mid.root("q").unwrap() - 0.5).abs() < 1e-12);
        assert!((mid.root("t_qbar").unwrap() - 0.5f64.powf(1.0 / 3.0)).abs() < 1e-12);
    }

    #[test]
    fn m_bound_is_nonincreasing_in_p() {
        for (r, s) in [(3, 3), (3, 4), (4, 3), (2, 4)] {
            let mut prev = f64::INFINITY;
            for i in 0..=100 {
                let p = i as f64 / 100.0;
                let v = m_bound(r, s, p).unwrap().value;
                assert!(v <= prev + 1e-12, "r={r} s={s} p={p}");
                prev = v;
            }
        }
    }

    #[test]
    fn m_bound_r2_matches_kruskal_katona_reasoning() {
        // For r = 2 the co-clique branch lives on t = sqrt(p), the fraction a
        // clique must have so that d(K_2) = p; compare with kk_bound's clique
        // extremal value on the complement side.
        for i in 0..=20 {
            let p = i as f64 / 20.0;
            for s in 3..=5usize {
                let point = m_bound(2, s, p).unwrap();
                let t = point.root("t_qbar").unwrap();
                assert!((t - p.sqrt()).abs() < 1e-12);
                // kk_bound(2, s, alpha) is attained by a clique on a
                // sqrt(alpha) fraction: its K_s density is alpha^(s/2).
                let clique_value = kk_bound(2, s, p).unwrap();
                assert!((t.powi(s as i32) - clique_value).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn phi_max_matches_reference_values() {
        // frozen against a 40-digit evaluation
        let point = phi_max(1.0, 1.0, 3, 4).unwrap();
        assert!((point.root("alpha").unwrap() - 0.69078759392498801).abs() < 1e-12);
        assert!((point.root("beta").unwrap() - 0.58352743481829092).abs() < 1e-12);
        assert!((point.value - 0.22770791008054338).abs() < 1e-12);
        assert_eq!(point.family, Family::Q);
    }

    #[test]
    fn phi_max_symmetric_case_equals_rho() {
        for r in 3..=6usize {
            let sym = phi_max(1.0, 1.0, r, r).unwrap();
            let rho = rho_maxmin(r).unwrap();
            assert!((sym.value - rho.value).abs() < 1e-10, "r={r}");
            assert!((sym.root("alpha").unwrap() - rho.root("rho").unwrap()).abs() < 1e-10);
            assert_eq!(sym.family, Family::Tie);
        }
    }

    #[test]
    fn phi_max_large_b_releases_the_constraint() {
        let point = phi_max(1.0, 1e6, 3, 3).unwrap();
        assert!((point.value - 1.0).abs() < 1e-3);
        assert!(point.root("alpha").unwrap() > 0.99);
    }

    #[test]
    fn phi_max_rejects_bad_input() {
        assert!(matches!(
            phi_max(0.0, 1.0, 3, 3),
            Err(SolveError::NonpositiveCoefficient { .. })
        ));
        assert!(matches!(phi_max(1.0, 1.0, 2, 3), Err(SolveError::SizeTooSmall { .. })));
    }

    #[test]
    fn rho_examples() {
        // frozen against a 40-digit evaluation
        let point = rho_maxmin(3).unwrap();
        let rho = point.root("rho").unwrap();
        assert!((rho - 0.65270364466613930).abs() < 1e-12);
        assert!((point.value - 0.27806614328138551).abs() < 1e-12);
        let residual = rho.powi(3) - (1.0 - rho).powi(3) - 3.0 * rho * (1.0 - rho).powi(2);
        assert!(residual.abs() <= 1e-12);

        let r4 = rho_maxmin(4).unwrap();
        assert!((r4.root("rho").unwrap() - 0.62451918819918717).abs() < 1e-12);
        assert!((r4.value - 0.15211888940103340).abs() < 1e-12);

        for r in 3..=8 {
            assert!(rho_maxmin(r).unwrap().root("rho").unwrap() > 0.5, "r={r}");
        }
        assert!(rho_maxmin(2).is_err());
    }

    #[test]
    fn kk_bound_examples() {
        assert_eq!(kk_bound(2, 3, 1.0).unwrap(), 1.0);
        assert_eq!(kk_bound(2, 3, 0.0).unwrap(), 0.0);
        assert!((kk_bound(2, 4, 0.25).unwrap() - 0.0625).abs() < 1e-15);
        assert!(matches!(kk_bound(3, 3, 0.5), Err(SolveError::SizeOrder { .. })));
        assert!(matches!(kk_bound(4, 2, 0.5), Err(SolveError::SizeOrder { .. })));
    }

    #[test]
    fn lemma_margin_examples() {
        // (3,3): alpha = 2 exactly, margin = 1.5 - 1.125^2
        assert!((lemma_ineq_margin(3, 3).unwrap() - 0.234375).abs() < 1e-12);
        // (3,4): alpha = 4 exactly
        assert!((lemma_ineq_margin(3, 4).unwrap() - 0.11971932870370370).abs() < 1e-12);
        for r in 3..=8 {
            for s in 3..=8 {
                assert!(lemma_ineq_margin(r, s).unwrap() > 0.0, "r={r} s={s}");
            }
        }
    }

    #[test]
    fn curve_endpoints_and_midpoint() {
        let rows = curve(3, 3, 10).unwrap();
        assert_eq!(rows.len(), 22);
        let q0 = rows.iter().find(|r| r.family == Family::Q && r.theta == 0.0).unwrap();
        assert_eq!((q0.q_density, q0.p_density), (1.0, 0.0));
        let q1 = rows.iter().find(|r| r.family == Family::Q && r.theta == 1.0).unwrap();
        assert_eq!((q1.q_density, q1.p_density), (0.0, 1.0));
        let mid = rows.iter().find(|r| r.family == Family::Q && r.theta == 0.5).unwrap();
        assert!((mid.q_density - 0.5).abs() < 1e-15);
        assert!((mid.p_density - 0.125).abs() < 1e-15);
    }

    #[test]
    fn curve_intersection_matches_rho() {
        // Parameterize both curves by their q-density and locate the crossing
        // of the p-densities; for r = s this is the max-min point.
        let r = 3;
        let s = 3;
        let p_on_q_curve = |q: f64| {
            let theta = bisect_increasing(0.0, 1.0, |t| {
                // q-density of the clique family falls in theta
                q - q_eval(&[t], &[1.0 - t], r)
            })
            .unwrap();
            p_eval(&[theta], &[1.0 - theta], s)
        };
        let p_on_qbar_curve = |q: f64| {
            let t = q.powf(1.0 / r as f64);
            p_eval(&[0.0, 1.0 - t], &[t, 0.0], s)
        };
        // The clique curve's p-density climbs past the co-clique curve's as
        // the shared q-density grows, crossing once at the max-min point.
        let crossing = bisect_increasing(0.01, 0.99, |q| p_on_q_curve(q) - p_on_qbar_curve(q));
        let q_star = crossing.unwrap();
        let rho_cubed = rho_maxmin(3).unwrap().value;
        assert!((q_star - rho_cubed).abs() < 1e-6, "{q_star} vs {rho_cubed}");
        assert!((p_on_q_curve(q_star) - rho_cubed).abs() < 1e-6);
    }
}
