//! Step functions on [0,1], the (x, f) representation of shifted graphs, and
//! the two integral inequalities that drive the equal-size case.
//!
//! All integrals here are polynomial in each piece and are evaluated by exact
//! antiderivatives, so the inequality margins carry no quadrature error.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::math::{pow, powu};

#[derive(Clone, Debug, PartialEq)]
pub enum StepFnError {
    BadBreakpoints,
    PieceCountMismatch { breaks: usize, vals: usize },
    ValueOutOfRange { value: f64 },
    NotNonIncreasing,
    NotNonDecreasing,
    ZeroNorm,
    ValueAboveCap { value: f64, cap: f64 },
    RelativeSizeOutOfRange { x: f64 },
}

impl fmt::Display for StepFnError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepFnError::BadBreakpoints => {
                write!(f, "breakpoints must be strictly increasing inside (0, 1)")
            }
            StepFnError::PieceCountMismatch { breaks, vals } => {
                write!(f, "{breaks} breakpoints need {} values, got {vals}", breaks + 1)
            }
            StepFnError::ValueOutOfRange { value } => {
                write!(f, "step value {value} outside [0, 1]")
            }
            StepFnError::NotNonIncreasing => write!(f, "step function must be non-increasing"),
            StepFnError::NotNonDecreasing => write!(f, "step function must be non-decreasing"),
            StepFnError::ZeroNorm => write!(f, "step function has zero norm"),
            StepFnError::ValueAboveCap { value, cap } => {
                write!(f, "step value {value} exceeds the cap {cap}")
            }
            StepFnError::RelativeSizeOutOfRange { x } => {
                write!(f, "relative clique size {x} outside [0, 1]")
            }
        }
    }
}

impl core::error::Error for StepFnError {}

/// A piecewise-constant function on [0, 1]: the value on
/// `[breaks[i-1], breaks[i])` is `vals[i]`, with implicit endpoints 0 and 1.
#[derive(Clone, Debug, PartialEq)]
pub struct StepFn {
    breaks: Vec<f64>,
    vals: Vec<f64>,
}

impl StepFn {
    /// `breaks` are the interior breakpoints, strictly increasing in (0, 1);
    /// `vals` has one entry per piece. Values must be finite and nonnegative.
    pub fn new(breaks: Vec<f64>, vals: Vec<f64>) -> Result<StepFn, StepFnError> {
        if vals.len() != breaks.len() + 1 {
            return Err(StepFnError::PieceCountMismatch { breaks: breaks.len(), vals: vals.len() });
        }
        let mut prev = 0.0;
        for &b in &breaks {
            if !(b > prev && b < 1.0) {
                return Err(StepFnError::BadBreakpoints);
            }
            prev = b;
        }
        for &v in &vals {
            if !v.is_finite() || v < 0.0 {
                return Err(StepFnError::ValueOutOfRange { value: v });
            }
        }
        Ok(StepFn { breaks, vals })
    }

    pub fn constant(value: f64) -> StepFn {
        StepFn::new(Vec::new(), vec![value]).expect("constant step function")
    }

    pub fn breaks(&self) -> &[f64] {
        &self.breaks
    }

    pub fn vals(&self) -> &[f64] {
        &self.vals
    }

    pub fn pieces(&self) -> usize {
        self.vals.len()
    }

    pub fn is_non_increasing(&self) -> bool {
        self.vals.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_non_decreasing(&self) -> bool {
        self.vals.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn max_value(&self) -> f64 {
        self.vals.iter().cloned().fold(0.0, f64::max)
    }

    fn bounds(&self, piece: usize) -> (f64, f64) {
        let lo = if piece == 0 { 0.0 } else { self.breaks[piece - 1] };
        let hi = if piece == self.breaks.len() { 1.0 } else { self.breaks[piece] };
        (lo, hi)
    }

    /// Exact `∫ g(f(t)) dt` for a per-piece value transform `g`.
    fn integral_of(&self, g: impl Fn(f64) -> f64) -> f64 {
        let mut total = 0.0;
        for piece in 0..self.pieces() {
            let (lo, hi) = self.bounds(piece);
            total += (hi - lo) * g(self.vals[piece]);
        }
        total
    }

    /// `∫ f(t)^e dt`.
    pub fn integral_pow(&self, e: u32) -> f64 {
        self.integral_of(|v| powu(v, e))
    }

    /// `∫ (1 - f(t))^e dt`.
    pub fn integral_one_minus_pow(&self, e: u32) -> f64 {
        self.integral_of(|v| powu(1.0 - v, e))
    }

    /// `∫ (k-1) t^(k-2) f(t) dt`, the inner product with the monomial weight.
    pub fn monomial_inner(&self, k: usize) -> f64 {
        assert!(k >= 2);
        let e = (k - 1) as u32;
        let mut total = 0.0;
        for piece in 0..self.pieces() {
            let (lo, hi) = self.bounds(piece);
            total += self.vals[piece] * (powu(hi, e) - powu(lo, e));
        }
        total
    }

    fn scaled(&self, factor: f64) -> StepFn {
        StepFn {
            breaks: self.breaks.clone(),
            vals: self.vals.iter().map(|v| v * factor).collect(),
        }
    }
}

/// The (x, f) model of a large shifted graph: a clique on the first `x`
/// fraction of vertices, an independent set on the rest, and a non-increasing
/// attachment function `f`.
#[derive(Clone, Debug, PartialEq)]
pub struct StepModel {
    x: f64,
    f: StepFn,
}

impl StepModel {
    pub fn new(x: f64, f: StepFn) -> Result<StepModel, StepFnError> {
        if !(0.0..=1.0).contains(&x) {
            return Err(StepFnError::RelativeSizeOutOfRange { x });
        }
        if !f.is_non_increasing() {
            return Err(StepFnError::NotNonIncreasing);
        }
        if let Some(&v) = f.vals.iter().find(|v| **v > 1.0) {
            return Err(StepFnError::ValueOutOfRange { value: v });
        }
        Ok(StepModel { x, f })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn f(&self) -> &StepFn {
        &self.f
    }

    /// Limit densities `(d(K̄_k), d(K_k))` of the modeled graphs.
    pub fn densities(&self, k: usize) -> (f64, f64) {
        assert!(k >= 2);
        let x = self.x;
        let e = (k - 1) as u32;
        let pa = powu(1.0 - x, k as u32)
            + k as f64 * x * powu(1.0 - x, e) * self.f.integral_one_minus_pow(e);
        let pc = powu(x, k as u32) + k as f64 * powu(x, e) * (1.0 - x) * self.f.monomial_inner(k);
        (pa, pc)
    }
}

/// Slack of the non-increasing-function integral inequality:
/// `max{1 - I^(1/(k-1)), (1 - I)^(k-1)} - ∫(1-f)^(k-1)` where
/// `I = ∫(k-1) t^(k-2) f`. Nonnegative for every valid `f`.
pub fn integral_margin(f: &StepFn, k: usize) -> Result<f64, StepFnError> {
    assert!(k >= 3, "the inequality is stated for k >= 3");
    if !f.is_non_increasing() {
        return Err(StepFnError::NotNonIncreasing);
    }
    if let Some(&v) = f.vals.iter().find(|v| **v > 1.0) {
        return Err(StepFnError::ValueOutOfRange { value: v });
    }
    let e = (k - 1) as u32;
    let lhs = f.integral_one_minus_pow(e);
    let inner = f.monomial_inner(k);
    let first = 1.0 - pow(inner, 1.0 / (k as f64 - 1.0));
    let second = powu(1.0 - inner, e);
    Ok(first.max(second) - lhs)
}

/// The two branch values of the inequality above, for inspecting which one
/// is active.
pub fn integral_margin_branches(f: &StepFn, k: usize) -> Result<(f64, f64, f64), StepFnError> {
    assert!(k >= 3);
    if !f.is_non_increasing() {
        return Err(StepFnError::NotNonIncreasing);
    }
    let e = (k - 1) as u32;
    let lhs = f.integral_one_minus_pow(e);
    let inner = f.monomial_inner(k);
    Ok((1.0 - pow(inner, 1.0 / (k as f64 - 1.0)), powu(1.0 - inner, e), lhs))
}

/// Slack of the monomial inner-product bound for non-decreasing `g` with
/// `0 <= g <= cap` and `‖g‖_{k-1} = 1`:
/// `⟨(k-1)t^(k-2), g⟩ - min{cap(1 - (1 - cap^{-(k-1)})^(k-1)), 1}`.
///
/// `g` and `cap` are jointly rescaled to unit norm before checking; the
/// hypothesis `cap >= 1` must hold after that rescaling.
pub fn monomial_margin(g: &StepFn, cap: f64, k: usize) -> Result<f64, StepFnError> {
    assert!(k >= 3, "the inequality is stated for k >= 3");
    if !g.is_non_decreasing() {
        return Err(StepFnError::NotNonDecreasing);
    }
    if let Some(&v) = g.vals.iter().find(|v| **v > cap) {
        return Err(StepFnError::ValueAboveCap { value: v, cap });
    }
    let e = (k - 1) as u32;
    let norm_pow = g.integral_pow(e);
    if norm_pow <= 0.0 {
        return Err(StepFnError::ZeroNorm);
    }
    let norm = pow(norm_pow, 1.0 / (k as f64 - 1.0));
    let g = g.scaled(1.0 / norm);
    // g <= cap forces norm <= cap, so the rescaled cap is always >= 1 (up
    // to rounding when g is the constant cap).
    let cap = (cap / norm).max(1.0);
    let bound = (cap * (1.0 - powu(1.0 - pow(cap, -(k as f64 - 1.0)), e))).min(1.0);
    Ok(g.monomial_inner(k) - bound)
}
