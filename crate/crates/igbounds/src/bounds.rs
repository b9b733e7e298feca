//! Closed-form lower/upper bound families for `Γ(a,x)`, shift combinators,
//! and the region dispatcher producing a certified bracket.
//!
//! The two principal families are
//!
//! * `G_a(x)` ([`big_g`]): `(x+b_a)^a − x^a` over `a·b_a`, times `e^{-x}`,
//!   with the continuity values `x^{-2}e^{-x}` at `a = -1` and
//!   `e^{-x}·ln((x+1)/x)` at `a = 0`;
//! * `g_a(x)` ([`small_g`]): `((x+2)^a − x^a − 2^a)/(2a) + Γ(a)`, times
//!   `e^{-x}`, for `a > 0`.
//!
//! Their relation to `Γ(a,x)` flips with the region of `a`: `G` is an upper
//! bound on `[-1,1)` and `(2,∞)`, a lower bound on `(1,2)`, and exact at
//! `a ∈ {1,2}`; `g` is a lower bound on `(1,2)` and `(3,∞)`, an upper bound
//! on `(2,3)`, and exact at `a ∈ {1,2,3}`. For `a < -1` the pair
//! [`g_lo`]/[`g_hi`] brackets `Γ(a,x)` instead, and the shifted families
//! ([`g_shift2_lo`], [`big_g_back1`], [`big_g_fwd1`], [`g_shift1_lo`],
//! [`h_lower`]) fill the remaining gaps. The direction of every family per
//! region is recorded as data in [`family_spec`].
//!
//! Every family has a `*_scaled` twin returning `e^x·B_a(x)` (the closed
//! forms without their `e^{-x}` factor); these are exact rearrangements and
//! stay representable for large `x` where the plain values underflow.

use crate::special::{b_const, falling_factorial, gamma_pos, pow_diff};
use crate::{domain_err, Result};
use std::fmt;

/// Half-width of the snapping window around the special orders
/// {-1, 0, 1, 2, 3}: inputs within `BOUNDARY_SNAP` of a boundary are routed
/// to the boundary's dedicated formula (the generic quotients are 0/0 there,
/// while continuity in `a` holds mathematically).
pub const BOUNDARY_SNAP: f64 = 1e-6;

/// Whether a bound sits below, above, or on `Γ(a,x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Lower,
    Upper,
    Exact,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Lower => "Lower",
            Direction::Upper => "Upper",
            Direction::Exact => "Exact",
        })
    }
}

/// Identifier of a bound family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    /// `G_a(x)`.
    BigG,
    /// `g_a(x)`.
    SmallG,
    /// `g_a^lo(x)` for `a < -1`.
    GLo,
    /// `g_a^hi(x)` for `a < 0`.
    GHi,
    /// Forward 2-shift of `g_{a-2}^lo`; lower bound for `a < 1`.
    GShift2Lo,
    /// Backward 1-shift of `G_{a+1}`; lower bound on `(-2,1)`.
    BigGBack1,
    /// Forward 1-shift of `G_{a-1}` on `(1,3)`.
    BigGFwd1,
    /// Forward 1-shift of `g_{a-1}^lo`; an *upper* bound for `a < 0`.
    GShift1Lo,
    /// `max(G_{a;-1}, g_{a;2}^lo)`; lower bound on `(-2,1)`.
    HLower,
    /// `x^{a-1}e^{-x}` for `a ≥ 1`.
    SimpleLo,
    /// `x^{a-1}e^{-x}/(1-(a-1)/x)` for `a ≥ 1`, `x > a-1`.
    SimpleHi,
    /// Forward shift of `G` down to `(1,2]`; lower bound for `a > 2`.
    TamedLower,
    /// Forward shift of `g` down to `(2,3]`; upper bound for `a > 3`.
    TamedUpper,
    /// The exact closed forms at `a ∈ {1,2,3}`.
    ExactClosed,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::BigG => "G",
            Family::SmallG => "g",
            Family::GLo => "g_lo",
            Family::GHi => "g_hi",
            Family::GShift2Lo => "g_shift2_lo",
            Family::BigGBack1 => "G_back1",
            Family::BigGFwd1 => "G_fwd1",
            Family::GShift1Lo => "g_shift1_lo",
            Family::HLower => "h",
            Family::SimpleLo => "simple_lo",
            Family::SimpleHi => "simple_hi",
            Family::TamedLower => "tamed_lower",
            Family::TamedUpper => "tamed_upper",
            Family::ExactClosed => "exact",
        }
    }

    /// All families, in the fixed order used for record emission.
    pub const ALL: [Family; 14] = [
        Family::BigG,
        Family::SmallG,
        Family::GLo,
        Family::GHi,
        Family::GShift2Lo,
        Family::BigGBack1,
        Family::BigGFwd1,
        Family::GShift1Lo,
        Family::HLower,
        Family::SimpleLo,
        Family::SimpleHi,
        Family::TamedLower,
        Family::TamedUpper,
        Family::ExactClosed,
    ];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Resolved metadata of a bound family at a given order `a`: direction,
/// validity interval, and endpoint-exactness flags.
///
/// This is a transcription of the theorem statements into data; directions
/// are never inferred numerically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundSpec {
    pub family: Family,
    pub direction: Direction,
    /// Interval of `a` on which the family is defined (ends may be ±∞; the
    /// precise open/closed status follows the family's defining statement).
    pub valid_a: (f64, f64),
    /// `B_a(x)/Γ(a,x) → 1` as `x → 0⁺` at this `a`.
    pub exact_at_zero: bool,
    /// `B_a(x)/Γ(a,x) → 1` as `x → ∞` at this `a`.
    pub exact_at_infinity: bool,
}

fn near(a: f64, m: f64) -> bool {
    (a - m).abs() <= BOUNDARY_SNAP
}

/// Static direction/exactness table. Returns `None` when the family is not
/// defined (or has no proven direction) at `a`.
pub fn family_spec(family: Family, a: f64) -> Option<BoundSpec> {
    if !a.is_finite() {
        return None;
    }
    let spec = |direction, valid_a, exact_at_zero, exact_at_infinity| {
        Some(BoundSpec {
            family,
            direction,
            valid_a,
            exact_at_zero,
            exact_at_infinity,
        })
    };
    match family {
        Family::BigG => {
            let v = (-1.0, f64::INFINITY);
            if a < -1.0 {
                None
            } else if near(a, 1.0) || near(a, 2.0) {
                spec(Direction::Exact, v, true, true)
            } else if a < 1.0 {
                // upper on [-1,1); exact at 0 only from a >= 0
                spec(Direction::Upper, v, a >= 0.0, true)
            } else if a < 2.0 {
                spec(Direction::Lower, v, true, true)
            } else {
                spec(Direction::Upper, v, true, true)
            }
        }
        Family::SmallG => {
            // evaluable for a > 0, but the proven direction starts at a = 1
            let v = (1.0, f64::INFINITY);
            if a < 1.0 - BOUNDARY_SNAP {
                None
            } else if near(a, 1.0) || near(a, 2.0) || near(a, 3.0) {
                spec(Direction::Exact, v, true, true)
            } else if a < 2.0 {
                spec(Direction::Lower, v, true, true)
            } else if a < 3.0 {
                spec(Direction::Upper, v, true, true)
            } else {
                spec(Direction::Lower, v, true, true)
            }
        }
        Family::GLo => (a < -1.0)
            .then(|| BoundSpec {
                family,
                direction: Direction::Lower,
                valid_a: (f64::NEG_INFINITY, -1.0),
                exact_at_zero: true,
                exact_at_infinity: true,
            }),
        Family::GHi => (a < 0.0).then(|| BoundSpec {
            family,
            direction: Direction::Upper,
            valid_a: (f64::NEG_INFINITY, 0.0),
            exact_at_zero: true,
            exact_at_infinity: true,
        }),
        Family::GShift2Lo => (a < 1.0).then(|| BoundSpec {
            family,
            direction: Direction::Lower,
            valid_a: (f64::NEG_INFINITY, 1.0),
            exact_at_zero: false,
            exact_at_infinity: true,
        }),
        Family::BigGBack1 => (-2.0 < a && a < 1.0).then(|| BoundSpec {
            family,
            direction: Direction::Lower,
            valid_a: (-2.0, 1.0),
            exact_at_zero: true,
            exact_at_infinity: false,
        }),
        Family::BigGFwd1 => {
            let v = (1.0, 3.0);
            if a <= 1.0 || a >= 3.0 {
                None
            } else if near(a, 2.0) {
                spec(Direction::Exact, v, true, true)
            } else if a < 2.0 {
                spec(Direction::Upper, v, true, true)
            } else {
                spec(Direction::Lower, v, true, true)
            }
        }
        Family::GShift1Lo => (a < 0.0).then(|| BoundSpec {
            family,
            direction: Direction::Upper,
            valid_a: (f64::NEG_INFINITY, 0.0),
            exact_at_zero: true,
            exact_at_infinity: true,
        }),
        Family::HLower => (-2.0 < a && a < 1.0).then(|| BoundSpec {
            family,
            direction: Direction::Lower,
            valid_a: (-2.0, 1.0),
            exact_at_zero: true,
            exact_at_infinity: true,
        }),
        Family::SimpleLo => (a >= 1.0).then(|| BoundSpec {
            family,
            direction: Direction::Lower,
            valid_a: (1.0, f64::INFINITY),
            exact_at_zero: false,
            exact_at_infinity: false,
        }),
        Family::SimpleHi => (a >= 1.0).then(|| BoundSpec {
            family,
            direction: Direction::Upper,
            valid_a: (1.0, f64::INFINITY),
            exact_at_zero: false,
            exact_at_infinity: false,
        }),
        Family::TamedLower => (a > 2.0).then(|| BoundSpec {
            family,
            direction: Direction::Lower,
            valid_a: (2.0, f64::INFINITY),
            exact_at_zero: true,
            exact_at_infinity: true,
        }),
        Family::TamedUpper => (a > 3.0).then(|| BoundSpec {
            family,
            direction: Direction::Upper,
            valid_a: (3.0, f64::INFINITY),
            exact_at_zero: true,
            exact_at_infinity: true,
        }),
        Family::ExactClosed => (near(a, 1.0) || near(a, 2.0) || near(a, 3.0)).then(|| BoundSpec {
            family,
            direction: Direction::Exact,
            valid_a: (1.0, 3.0),
            exact_at_zero: true,
            exact_at_infinity: true,
        }),
    }
}

fn check_x(op: &'static str, x: f64) -> Result<()> {
    if !x.is_finite() || x <= 0.0 {
        return Err(domain_err(op, format!("requires x > 0, got {x}")));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// scaled family evaluators (e^x · B_a(x))
// ---------------------------------------------------------------------------

/// `e^x · G_a(x)` for `a ≥ -1`.
pub fn big_g_scaled(a: f64, x: f64) -> Result<f64> {
    check_x("big_g", x)?;
    if !a.is_finite() || a < -1.0 - BOUNDARY_SNAP {
        return Err(domain_err("big_g", format!("requires a >= -1, got {a}")));
    }
    if near(a, -1.0) {
        return Ok(1.0 / (x * x));
    }
    if near(a, 0.0) {
        return Ok((1.0 / x).ln_1p());
    }
    let b = b_const(a)?;
    Ok(pow_diff(x, b, a)? / (a * b))
}

/// `e^x · g_a(x)` for `a > 0`.
pub fn small_g_scaled(a: f64, x: f64) -> Result<f64> {
    check_x("small_g", x)?;
    if !a.is_finite() || a <= 0.0 {
        return Err(domain_err("small_g", format!("requires a > 0, got {a}")));
    }
    Ok((pow_diff(x, 2.0, a)? - 2f64.powf(a)) / (2.0 * a) + gamma_pos(a)?)
}

/// `e^x · g_a^lo(x)` for `a < -1`.
pub fn g_lo_scaled(a: f64, x: f64) -> Result<f64> {
    check_x("g_lo", x)?;
    if !a.is_finite() || a >= -1.0 {
        return Err(domain_err("g_lo", format!("requires a < -1, got {a}")));
    }
    let u = x - a;
    Ok(x.powf(a) * (x - a - 1.0) / (u * u + a))
}

/// `e^x · g_a^hi(x)` for `a < 0`.
pub fn g_hi_scaled(a: f64, x: f64) -> Result<f64> {
    check_x("g_hi", x)?;
    if !a.is_finite() || a >= 0.0 {
        return Err(domain_err("g_hi", format!("requires a < 0, got {a}")));
    }
    Ok(x.powf(a) / (x - a))
}

/// `e^x · g_{a;2}^lo(x)` for `a < 1`: the closed form
/// `x^a (x+3-a) / (x² + (4-2a)x + (a-1)(a-2))`.
pub fn g_shift2_lo_scaled(a: f64, x: f64) -> Result<f64> {
    check_x("g_shift2_lo", x)?;
    if !a.is_finite() || a >= 1.0 {
        return Err(domain_err("g_shift2_lo", format!("requires a < 1, got {a}")));
    }
    let denom = x * x + (4.0 - 2.0 * a) * x + (a - 1.0) * (a - 2.0);
    Ok(x.powf(a) * (x + 3.0 - a) / denom)
}

/// `e^x · G_{a;-1}(x)` on `(-2,1)`: `(G_{a+1}(x) − x^a e^{-x})/a`, with the
/// continuity value `e^{-x}[(1 + x/b_1) ln(1 + b_1/x) − 1]` at `a = 0`.
pub fn big_g_back1_scaled(a: f64, x: f64) -> Result<f64> {
    check_x("G_back1", x)?;
    if !a.is_finite() || a <= -2.0 || a >= 1.0 {
        return Err(domain_err(
            "G_back1",
            format!("requires -2 < a < 1, got {a}"),
        ));
    }
    if near(a, 0.0) {
        let b1 = b_const(1.0)?;
        return Ok((1.0 + x / b1) * (b1 / x).ln_1p() - 1.0);
    }
    Ok((big_g_scaled(a + 1.0, x)? - x.powf(a)) / a)
}

/// `e^x · G_{a;1}(x)` on `(1,3)`: `x^{a-1} e^{-x} + (a-1) G_{a-1}(x)`.
pub fn big_g_fwd1_scaled(a: f64, x: f64) -> Result<f64> {
    check_x("G_fwd1", x)?;
    if !a.is_finite() || a <= 1.0 || a >= 3.0 {
        return Err(domain_err("G_fwd1", format!("requires 1 < a < 3, got {a}")));
    }
    Ok(x.powf(a - 1.0) + (a - 1.0) * big_g_scaled(a - 1.0, x)?)
}

/// `e^x · g_{a;1}^lo(x)` for `a < 0`: the closed form
/// `x^a (1-a+x) / ((x-a)² − a + 2x)`. Despite the name inherited from its
/// construction (a forward shift of the lower bound `g_{a-1}^lo`), this is
/// an **upper** bound on `Γ(a,x)`, strictly below `g_a^hi(x)`.
pub fn g_shift1_lo_scaled(a: f64, x: f64) -> Result<f64> {
    check_x("g_shift1_lo", x)?;
    if !a.is_finite() || a >= 0.0 {
        return Err(domain_err("g_shift1_lo", format!("requires a < 0, got {a}")));
    }
    let u = x - a;
    Ok(x.powf(a) * (1.0 - a + x) / (u * u - a + 2.0 * x))
}

/// `e^x · h_a(x)` on `(-2,1)`: the pointwise maximum of `G_{a;-1}` and
/// `g_{a;2}^lo`, exact at both endpoints.
pub fn h_lower_scaled(a: f64, x: f64) -> Result<f64> {
    Ok(big_g_back1_scaled(a, x)?.max(g_shift2_lo_scaled(a, x)?))
}

/// `e^x · x^{a-1} e^{-x} = x^{a-1}` for `a ≥ 1`.
pub fn simple_lo_scaled(a: f64, x: f64) -> Result<f64> {
    check_x("simple_lo", x)?;
    if !a.is_finite() || a < 1.0 {
        return Err(domain_err("simple_lo", format!("requires a >= 1, got {a}")));
    }
    Ok(x.powf(a - 1.0))
}

/// `e^x` times the simple upper bound `x^{a-1}e^{-x}/(1-(a-1)/x)` for
/// `a ≥ 1`, `x > a-1`.
pub fn simple_hi_scaled(a: f64, x: f64) -> Result<f64> {
    check_x("simple_hi", x)?;
    if !a.is_finite() || a < 1.0 {
        return Err(domain_err("simple_hi", format!("requires a >= 1, got {a}")));
    }
    if x <= a - 1.0 {
        return Err(domain_err(
            "simple_hi",
            format!("requires x > a-1, got a={a}, x={x}"),
        ));
    }
    Ok(x.powf(a - 1.0) / (1.0 - (a - 1.0) / x))
}

/// Shift count for [`tamed_lower`]: `k = ⌈a⌉ − 2`, so `a − k ∈ (1,2]`.
pub fn tamed_lower_shift(a: f64) -> u32 {
    (a.ceil() - 2.0).max(0.0) as u32
}

/// Shift count for [`tamed_upper`]: `k = ⌈a⌉ − 3`, so `a − k ∈ (2,3]`.
pub fn tamed_upper_shift(a: f64) -> u32 {
    (a.ceil() - 3.0).max(0.0) as u32
}

/// `e^x` times the tamed lower bound for `a > 2`: the forward
/// `(⌈a⌉-2)`-shift of `G` evaluated on `(1,2]`, where `G` is a lower bound.
/// The shift can only shrink the relative error.
pub fn tamed_lower_scaled(a: f64, x: f64) -> Result<f64> {
    check_x("tamed_lower", x)?;
    if !a.is_finite() || a <= 2.0 {
        return Err(domain_err("tamed_lower", format!("requires a > 2, got {a}")));
    }
    forward_shift_scaled(big_g_scaled, a, tamed_lower_shift(a), x)
}

/// `e^x` times the tamed upper bound for `a > 3`: the forward
/// `(⌈a⌉-3)`-shift of `g` evaluated on `(2,3]`, where `g` is an upper bound.
pub fn tamed_upper_scaled(a: f64, x: f64) -> Result<f64> {
    check_x("tamed_upper", x)?;
    if !a.is_finite() || a <= 3.0 {
        return Err(domain_err("tamed_upper", format!("requires a > 3, got {a}")));
    }
    forward_shift_scaled(small_g_scaled, a, tamed_upper_shift(a), x)
}

/// `e^x` times the exact closed forms at `a ∈ {1,2,3}`:
/// `1`, `1+x`, `2+2x+x²`.
pub fn exact_closed_scaled(a: f64, x: f64) -> Result<f64> {
    check_x("exact_closed", x)?;
    if near(a, 1.0) {
        Ok(1.0)
    } else if near(a, 2.0) {
        Ok(1.0 + x)
    } else if near(a, 3.0) {
        Ok(2.0 + 2.0 * x + x * x)
    } else {
        Err(domain_err(
            "exact_closed",
            format!("requires a in {{1,2,3}}, got {a}"),
        ))
    }
}

/// Scaled evaluation of any family.
pub fn eval_scaled(family: Family, a: f64, x: f64) -> Result<f64> {
    match family {
        Family::BigG => big_g_scaled(a, x),
        Family::SmallG => small_g_scaled(a, x),
        Family::GLo => g_lo_scaled(a, x),
        Family::GHi => g_hi_scaled(a, x),
        Family::GShift2Lo => g_shift2_lo_scaled(a, x),
        Family::BigGBack1 => big_g_back1_scaled(a, x),
        Family::BigGFwd1 => big_g_fwd1_scaled(a, x),
        Family::GShift1Lo => g_shift1_lo_scaled(a, x),
        Family::HLower => h_lower_scaled(a, x),
        Family::SimpleLo => simple_lo_scaled(a, x),
        Family::SimpleHi => simple_hi_scaled(a, x),
        Family::TamedLower => tamed_lower_scaled(a, x),
        Family::TamedUpper => tamed_upper_scaled(a, x),
        Family::ExactClosed => exact_closed_scaled(a, x),
    }
}

/// Plain-value evaluation of any family (may underflow for `x ≳ 745`).
pub fn eval(family: Family, a: f64, x: f64) -> Result<f64> {
    Ok(eval_scaled(family, a, x)? * (-x).exp())
}

macro_rules! unscaled {
    ($(#[$doc:meta])* $name:ident, $scaled:ident) => {
        $(#[$doc])*
        pub fn $name(a: f64, x: f64) -> Result<f64> {
            Ok($scaled(a, x)? * (-x).exp())
        }
    };
}

unscaled!(
    /// `G_a(x)` for `a ≥ -1`, `x > 0`.
    big_g, big_g_scaled
);
unscaled!(
    /// `g_a(x)` for `a > 0`, `x > 0`.
    small_g, small_g_scaled
);
unscaled!(
    /// `g_a^lo(x) = x^a e^{-x}(x-a-1)/((x-a)²+a)` for `a < -1`.
    g_lo, g_lo_scaled
);
unscaled!(
    /// `g_a^hi(x) = x^a e^{-x}/(x-a)` for `a < 0`.
    g_hi, g_hi_scaled
);
unscaled!(
    /// Lower bound `g_{a;2}^lo(x)` for `a < 1` (exact at `x = ∞`).
    g_shift2_lo, g_shift2_lo_scaled
);
unscaled!(
    /// Lower bound `G_{a;-1}(x)` on `(-2,1)` (exact at `x = 0`).
    big_g_back1, big_g_back1_scaled
);
unscaled!(
    /// `G_{a;1}(x)` on `(1,3)`: upper for `1<a<2`, exact at 2, lower for
    /// `2<a<3`; exact at both endpoints.
    big_g_fwd1, big_g_fwd1_scaled
);
unscaled!(
    /// Upper bound `g_{a;1}^lo(x)` for `a < 0`, strictly below `g_a^hi(x)`.
    g_shift1_lo, g_shift1_lo_scaled
);
unscaled!(
    /// Lower bound `h_a(x) = max(G_{a;-1}, g_{a;2}^lo)` on `(-2,1)`.
    h_lower, h_lower_scaled
);
unscaled!(
    /// `x^{a-1}e^{-x} ≤ Γ(a,x)` for `a ≥ 1`.
    simple_lo, simple_lo_scaled
);
unscaled!(
    /// `Γ(a,x) ≤ x^{a-1}e^{-x}/(1-(a-1)/x)` for `a ≥ 1`, `x > a-1`.
    simple_hi, simple_hi_scaled
);
unscaled!(
    /// Tamed lower bound for `a > 2` (shift of `G` into `(1,2]`).
    tamed_lower, tamed_lower_scaled
);
unscaled!(
    /// Tamed upper bound for `a > 3` (shift of `g` into `(2,3]`).
    tamed_upper, tamed_upper_scaled
);

// ---------------------------------------------------------------------------
// shift combinators
// ---------------------------------------------------------------------------

/// Forward `k`-shift of a bound: transports `base` at order `a-k` to order
/// `a` through the recurrence partial sum,
///
/// `B_{a;k}(x) = x^{a-1} e^{-x} Σ_{j=0}^{k-1} (a-1)_j x^{-j} + (a-1)_k · base(a-k, x)`.
///
/// If `(a-1)_k ≥ 0` the shift preserves the bound's direction; if
/// `(a-1)_k ≤ 0` it flips lower to upper and vice versa. `base` receives and
/// returns plain (unscaled) values.
pub fn forward_shift<F>(base: F, a: f64, k: u32, x: f64) -> Result<f64>
where
    F: Fn(f64, f64) -> Result<f64>,
{
    check_x("forward_shift", x)?;
    if k == 0 {
        return Err(domain_err("forward_shift", "requires k >= 1"));
    }
    let (partial, ffk) = shift_partial(a, k, x);
    Ok(x.powf(a - 1.0) * (-x).exp() * partial + ffk * base(a - k as f64, x)?)
}

/// Scaled twin of [`forward_shift`]: `base` receives and returns
/// `e^x`-scaled values.
pub fn forward_shift_scaled<F>(base: F, a: f64, k: u32, x: f64) -> Result<f64>
where
    F: Fn(f64, f64) -> Result<f64>,
{
    check_x("forward_shift", x)?;
    if k == 0 {
        return Err(domain_err("forward_shift", "requires k >= 1"));
    }
    let (partial, ffk) = shift_partial(a, k, x);
    Ok(x.powf(a - 1.0) * partial + ffk * base(a - k as f64, x)?)
}

/// `(Σ_{j<k} (a-1)_j x^{-j}, (a-1)_k)`.
fn shift_partial(a: f64, k: u32, x: f64) -> (f64, f64) {
    let mut sum = 0.0;
    let mut ffj = 1.0;
    for j in 0..k {
        sum += ffj * x.powi(-(j as i32));
        ffj *= a - 1.0 - j as f64;
    }
    (sum, ffj)
}

/// Backward `k`-shift: transports `base` at order `a+k` down to order `a`,
///
/// `B_{a;-k}(x) = (base(a+k,x) − x^{a-1+k} e^{-x} Σ_{j=0}^{k-1} (a-1+k)_j x^{-j}) / (a-1+k)_k`.
///
/// Requires `(a-1+k)_k ≠ 0`. A positive divisor preserves the direction, a
/// negative one flips it. Algebraically inverse to [`forward_shift`].
pub fn backward_shift<F>(base: F, a: f64, k: u32, x: f64) -> Result<f64>
where
    F: Fn(f64, f64) -> Result<f64>,
{
    check_x("backward_shift", x)?;
    if k == 0 {
        return Err(domain_err("backward_shift", "requires k >= 1"));
    }
    let ffk = falling_factorial(a - 1.0 + k as f64, k);
    if ffk == 0.0 {
        return Err(domain_err(
            "backward_shift",
            format!("degenerate divisor (a-1+k)_k = 0 at a={a}, k={k}"),
        ));
    }
    let (partial, _) = shift_partial(a + k as f64, k, x);
    Ok((base(a + k as f64, x)? - x.powf(a - 1.0 + k as f64) * (-x).exp() * partial) / ffk)
}

/// Scaled twin of [`backward_shift`].
pub fn backward_shift_scaled<F>(base: F, a: f64, k: u32, x: f64) -> Result<f64>
where
    F: Fn(f64, f64) -> Result<f64>,
{
    check_x("backward_shift", x)?;
    if k == 0 {
        return Err(domain_err("backward_shift", "requires k >= 1"));
    }
    let ffk = falling_factorial(a - 1.0 + k as f64, k);
    if ffk == 0.0 {
        return Err(domain_err(
            "backward_shift",
            format!("degenerate divisor (a-1+k)_k = 0 at a={a}, k={k}"),
        ));
    }
    let (partial, _) = shift_partial(a + k as f64, k, x);
    Ok((base(a + k as f64, x)? - x.powf(a - 1.0 + k as f64) * partial) / ffk)
}

// ---------------------------------------------------------------------------
// region classification and the bracket dispatcher
// ---------------------------------------------------------------------------

/// The case regions of the order `a`; boundary orders within
/// [`BOUNDARY_SNAP`] classify to their `Exact*` tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaRegion {
    /// `a < -1`.
    BelowMinusOne,
    ExactMinusOne,
    /// `-1 < a < 0`.
    MinusOneToZero,
    ExactZero,
    /// `0 < a < 1`.
    ZeroToOne,
    ExactOne,
    /// `1 < a < 2`.
    OneToTwo,
    ExactTwo,
    /// `2 < a < 3`.
    TwoToThree,
    ExactThree,
    /// `a > 3`.
    ThreeUp,
}

/// Classify an order into its case region. The regions partition the reals;
/// orders within [`BOUNDARY_SNAP`] of {-1, 0, 1, 2, 3} snap to the boundary.
pub fn classify(a: f64) -> Result<AlphaRegion> {
    if !a.is_finite() {
        return Err(domain_err("classify", format!("requires finite a, got {a}")));
    }
    Ok(if near(a, -1.0) {
        AlphaRegion::ExactMinusOne
    } else if near(a, 0.0) {
        AlphaRegion::ExactZero
    } else if near(a, 1.0) {
        AlphaRegion::ExactOne
    } else if near(a, 2.0) {
        AlphaRegion::ExactTwo
    } else if near(a, 3.0) {
        AlphaRegion::ExactThree
    } else if a < -1.0 {
        AlphaRegion::BelowMinusOne
    } else if a < 0.0 {
        AlphaRegion::MinusOneToZero
    } else if a < 1.0 {
        AlphaRegion::ZeroToOne
    } else if a < 2.0 {
        AlphaRegion::OneToTwo
    } else if a < 3.0 {
        AlphaRegion::TwoToThree
    } else {
        AlphaRegion::ThreeUp
    })
}

/// Bracket assembly mode. `Tamed` replaces the plain `(g, G)` pair for
/// `a > 3` with the shift-tamed pair, whose relative errors stay bounded as
/// `a` grows; elsewhere the modes coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Plain,
    Tamed,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Plain => "plain",
            Mode::Tamed => "tamed",
        })
    }
}

/// A certified enclosure `lower ≤ Γ(a,x) ≤ upper` with provenance.
#[derive(Debug, Clone)]
pub struct Bracket {
    pub a: f64,
    pub x: f64,
    /// Plain values; may underflow to 0 for `x ≳ 745`.
    pub lower: f64,
    pub upper: f64,
    /// `e^x`-scaled sides; always well-scaled on the supported ranges.
    pub lower_scaled: f64,
    pub upper_scaled: f64,
    pub lower_spec: BoundSpec,
    pub upper_spec: BoundSpec,
}

fn pick_spec(family: Family, a: f64) -> BoundSpec {
    family_spec(family, a).expect("dispatch table selected a family outside its validity")
}

/// One row of the dispatch table: which families the bracket combines at a
/// given order, as data for `--explain` output.
#[derive(Debug, Clone)]
pub struct DispatchRow {
    pub region: AlphaRegion,
    pub lower_rule: &'static str,
    pub upper_rule: &'static str,
}

/// The dispatch rule used at order `a` in the given mode.
pub fn dispatch_row(a: f64, mode: Mode) -> Result<DispatchRow> {
    let region = classify(a)?;
    let (lower_rule, upper_rule) = match region {
        AlphaRegion::BelowMinusOne => {
            if a > -2.0 {
                ("max(g_lo, h)", "g_shift1_lo")
            } else {
                ("g_lo", "g_shift1_lo")
            }
        }
        AlphaRegion::ExactMinusOne | AlphaRegion::MinusOneToZero => ("h", "min(G, g_shift1_lo)"),
        AlphaRegion::ExactZero | AlphaRegion::ZeroToOne => ("h", "G"),
        AlphaRegion::ExactOne => ("exact e^-x", "exact e^-x"),
        AlphaRegion::ExactTwo => ("exact e^-x(1+x)", "exact e^-x(1+x)"),
        AlphaRegion::ExactThree => ("exact e^-x(2+2x+x^2)", "exact e^-x(2+2x+x^2)"),
        AlphaRegion::OneToTwo => ("G", "G_fwd1"),
        AlphaRegion::TwoToThree => ("G_fwd1", "g"),
        AlphaRegion::ThreeUp => match mode {
            Mode::Plain => ("g", "G"),
            Mode::Tamed => ("tamed_lower", "tamed_upper"),
        },
    };
    Ok(DispatchRow {
        region,
        lower_rule,
        upper_rule,
    })
}

/// Certified bracket `lower ≤ Γ(a,x) ≤ upper` for any finite real `a` and
/// `x > 0`.
///
/// The selection table follows the case regions of `a`; on overlaps the
/// dispatcher takes the pointwise best proven side (`max` of lower bounds on
/// `(-2,-1)`, `min` of upper bounds on `[-1,0)`). Boundary orders use their
/// dedicated closed forms.
pub fn bracket(a: f64, x: f64, mode: Mode) -> Result<Bracket> {
    check_x("bracket", x)?;
    let region = classify(a)?;
    let (lo, lo_spec, hi, hi_spec) = match region {
        AlphaRegion::BelowMinusOne => {
            let g_lo_v = g_lo_scaled(a, x)?;
            let (lo, lo_spec) = if a > -2.0 {
                let h = h_lower_scaled(a, x)?;
                if h > g_lo_v {
                    (h, pick_spec(Family::HLower, a))
                } else {
                    (g_lo_v, pick_spec(Family::GLo, a))
                }
            } else {
                (g_lo_v, pick_spec(Family::GLo, a))
            };
            (
                lo,
                lo_spec,
                g_shift1_lo_scaled(a, x)?,
                pick_spec(Family::GShift1Lo, a),
            )
        }
        AlphaRegion::ExactMinusOne | AlphaRegion::MinusOneToZero => {
            let g = big_g_scaled(a, x)?;
            let g1 = g_shift1_lo_scaled(a, x)?;
            let (hi, hi_spec) = if g1 < g {
                (g1, pick_spec(Family::GShift1Lo, a))
            } else {
                (g, pick_spec(Family::BigG, a))
            };
            (
                h_lower_scaled(a, x)?,
                pick_spec(Family::HLower, a),
                hi,
                hi_spec,
            )
        }
        AlphaRegion::ExactZero | AlphaRegion::ZeroToOne => (
            h_lower_scaled(a, x)?,
            pick_spec(Family::HLower, a),
            big_g_scaled(a, x)?,
            pick_spec(Family::BigG, a),
        ),
        AlphaRegion::ExactOne | AlphaRegion::ExactTwo | AlphaRegion::ExactThree => {
            let v = exact_closed_scaled(a, x)?;
            let spec = pick_spec(Family::ExactClosed, a);
            (v, spec, v, spec)
        }
        AlphaRegion::OneToTwo => (
            big_g_scaled(a, x)?,
            pick_spec(Family::BigG, a),
            big_g_fwd1_scaled(a, x)?,
            pick_spec(Family::BigGFwd1, a),
        ),
        AlphaRegion::TwoToThree => (
            big_g_fwd1_scaled(a, x)?,
            pick_spec(Family::BigGFwd1, a),
            small_g_scaled(a, x)?,
            pick_spec(Family::SmallG, a),
        ),
        AlphaRegion::ThreeUp => match mode {
            Mode::Plain => (
                small_g_scaled(a, x)?,
                pick_spec(Family::SmallG, a),
                big_g_scaled(a, x)?,
                pick_spec(Family::BigG, a),
            ),
            Mode::Tamed => (
                tamed_lower_scaled(a, x)?,
                pick_spec(Family::TamedLower, a),
                tamed_upper_scaled(a, x)?,
                pick_spec(Family::TamedUpper, a),
            ),
        },
    };
    debug_assert!(
        lo <= hi * (1.0 + 1e-12),
        "bracket sides out of order at a={a}, x={x}: {lo} > {hi}"
    );
    let damp = (-x).exp();
    Ok(Bracket {
        a,
        x,
        lower: lo * damp,
        upper: hi * damp,
        lower_scaled: lo,
        upper_scaled: hi,
        lower_spec: lo_spec,
        upper_spec: hi_spec,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::igamma_ref;
    use proptest::prelude::*;

    fn rel(v: f64, reference: f64) -> f64 {
        ((v - reference) / reference).abs()
    }

    const E_INV: f64 = 0.367_879_441_171_442_33;

    #[test]
    fn big_g_closed_cases() {
        // a=1: G = e^{-x}
        assert!(rel(big_g(1.0, 0.7).unwrap(), (-0.7f64).exp()) < 1e-13);
        // a=2: G = e^{-x}(1+x)
        assert!(rel(big_g(2.0, 1.0).unwrap(), 2.0 * E_INV) < 1e-13);
        // a=0: G = e^{-x} ln 2 at x=1
        assert!(rel(big_g(0.0, 1.0).unwrap(), E_INV * 2f64.ln()) < 1e-13);
        // a=-1: G = x^{-2} e^{-x}
        assert!(rel(big_g(-1.0, 2.0).unwrap(), 0.25 * (-2.0f64).exp()) < 1e-15);
        // upper bound vs oracle at a=0
        assert!(big_g(0.0, 1.0).unwrap() > igamma_ref(0.0, 1.0).unwrap().value());
    }

    #[test]
    fn big_g_continuity_at_boundaries() {
        // at a = 0 the modulus of continuity is O(|a|·polylog); at a = -1
        // it is O(√(a+1)) because b_a ~ √(a+1) there
        for (a0, eps, tol) in [
            (0.0, 2e-6, 1e-4),
            (0.0, -2e-6, 1e-4),
            (-1.0, 2e-6, 5e-3),
        ] {
            let base = big_g_scaled(a0, 2.0).unwrap();
            let nearby = big_g_scaled(a0 + eps, 2.0).unwrap();
            assert!(
                rel(nearby, base) < tol,
                "G discontinuous near a={a0}: {base} vs {nearby}"
            );
        }
    }

    #[test]
    fn small_g_closed_cases() {
        // a=2, x=1: g = 2e^{-1}
        assert!(rel(small_g(2.0, 1.0).unwrap(), 2.0 * E_INV) < 1e-13);
        // a=3, x=2: g = e^{-2}(2+4+4)
        assert!(rel(small_g(3.0, 2.0).unwrap(), 10.0 * (-2.0f64).exp()) < 1e-13);
        // a=1: g = e^{-x}
        assert!(rel(small_g(1.0, 5.0).unwrap(), (-5.0f64).exp()) < 1e-13);
    }

    #[test]
    fn g_lo_hi_examples() {
        // g_lo(-2,1) = e^{-1}·2/7
        assert!(rel(g_lo(-2.0, 1.0).unwrap(), 2.0 * E_INV / 7.0) < 1e-13);
        assert!(g_lo(-2.0, 1.0).unwrap() < igamma_ref(-2.0, 1.0).unwrap().value());
        // g_hi(-1,1) = e^{-1}/2, above the oracle
        assert!(rel(g_hi(-1.0, 1.0).unwrap(), E_INV / 2.0) < 1e-13);
        assert!(g_hi(-1.0, 1.0).unwrap() > igamma_ref(-1.0, 1.0).unwrap().value());
        // exactness at infinity: ratio to x^{a-1}e^{-x} near 1
        let x = 1e6;
        assert!((g_lo_scaled(-1.5, x).unwrap() / x.powf(-2.5) - 1.0).abs() < 1e-5);
        assert!((g_hi_scaled(-0.5, x).unwrap() / x.powf(-1.5) - 1.0).abs() < 1e-5);
        // exactness at zero: ratio to -x^a/a near 1
        let x = 1e-8;
        assert!((g_lo_scaled(-3.0, x).unwrap() / (x.powf(-3.0) / 3.0) - 1.0).abs() < 1e-6);
        assert!((g_hi_scaled(-2.0, x).unwrap() / (x.powf(-2.0) / 2.0) - 1.0).abs() < 1e-6);
    }

    #[test]
    fn g_shift2_lo_examples() {
        // a=0, x=1: 4e^{-1}/7
        assert!(rel(g_shift2_lo(0.0, 1.0).unwrap(), 4.0 * E_INV / 7.0) < 1e-13);
        assert!(g_shift2_lo(0.0, 1.0).unwrap() < igamma_ref(0.0, 1.0).unwrap().value());
        // exact at infinity
        let x = 1e6;
        assert!((g_shift2_lo_scaled(0.5, x).unwrap() / x.powf(-0.5) - 1.0).abs() < 1e-5);
        // matches its combinator construction (forward 2-shift of g_lo)
        let via_shift = forward_shift_scaled(g_lo_scaled, -1.9, 2, 2.0).unwrap();
        assert!(rel(g_shift2_lo_scaled(-1.9, 2.0).unwrap(), via_shift) < 1e-12);
    }

    #[test]
    fn big_g_back1_examples() {
        // a=0, x=1: e^{-1}[(1+1/b1) ln(1+b1) - 1]
        let b1 = b_const(1.0).unwrap();
        let expected = E_INV * ((1.0 + 1.0 / b1) * (1.0 + b1).ln() - 1.0);
        assert!(rel(big_g_back1(0.0, 1.0).unwrap(), expected) < 1e-13);
        // exact at zero for a > 0: ratio to Γ(a) at x=1e-8
        let v = big_g_back1(0.5, 1e-8).unwrap();
        assert!(rel(v, gamma_pos(0.5).unwrap()) < 1e-3);
        // strictly below the oracle
        let o = igamma_ref(-0.5, 1.0).unwrap().value();
        assert!(big_g_back1(-0.5, 1.0).unwrap() < o);
        // matches the backward combinator for a != 0
        let via_shift = backward_shift_scaled(big_g_scaled, 0.5, 1, 1.0).unwrap();
        assert!(rel(big_g_back1_scaled(0.5, 1.0).unwrap(), via_shift) < 1e-12);
    }

    #[test]
    fn big_g_fwd1_examples() {
        // exact at a=2
        assert!(rel(big_g_fwd1(2.0, 1.0).unwrap(), 2.0 * E_INV) < 1e-13);
        // upper bound on (1,2): Γ(1.5,1) = 0.50728223381177331
        let o = 0.507_282_233_811_773_3;
        assert!(big_g_fwd1(1.5, 1.0).unwrap() > o);
        assert!(rel(igamma_ref(1.5, 1.0).unwrap().value(), o) < 1e-12);
        // exact at zero: ratio to Γ(2.5) at x=1e-8
        assert!(rel(big_g_fwd1(2.5, 1e-8).unwrap(), gamma_pos(2.5).unwrap()) < 1e-6);
    }

    #[test]
    fn g_shift1_lo_examples() {
        // a=-1, x=1: 3e^{-1}/7, between the oracle and g_hi
        let v = g_shift1_lo(-1.0, 1.0).unwrap();
        assert!(rel(v, 3.0 * E_INV / 7.0) < 1e-13);
        let o = igamma_ref(-1.0, 1.0).unwrap().value();
        assert!(o < v && v < g_hi(-1.0, 1.0).unwrap());
        // exactness at zero: ratio to -x^a/a
        let x = 1e-8;
        assert!((g_shift1_lo_scaled(-0.5, x).unwrap() / (2.0 * x.powf(-0.5)) - 1.0).abs() < 1e-6);
        // the explicit gap identity to g_hi:
        // g_hi - g_shift1_lo = x^{1+a} e^{-x} / ((x-a)((x-a)^2 - a + 2x))
        let (a, x) = (-2.0, 3.0);
        let gap = g_hi_scaled(a, x).unwrap() - g_shift1_lo_scaled(a, x).unwrap();
        let u = x - a;
        let expected = x.powf(1.0 + a) / (u * (u * u - a + 2.0 * x));
        assert!(rel(gap, expected) < 1e-12);
    }

    #[test]
    fn h_lower_picks_the_better_branch() {
        // at a=0, x=1 the shifted-g branch wins: h = 4e^{-1}/7
        let h = h_lower(0.0, 1.0).unwrap();
        assert!(rel(h, 4.0 * E_INV / 7.0) < 1e-13);
        // endpoint exactness inherited from each branch
        assert!(rel(h_lower(0.5, 1e-8).unwrap(), gamma_pos(0.5).unwrap()) < 1e-3);
        let x = 1e6;
        assert!((h_lower_scaled(0.5, x).unwrap() / x.powf(-0.5) - 1.0).abs() < 1e-5);
    }

    #[test]
    fn simple_bounds_examples() {
        // simple_lo(1,x) = e^{-x} exactly
        assert!(rel(simple_lo(1.0, 2.0).unwrap(), (-2.0f64).exp()) < 1e-15);
        // Γ(3,5) = 37e^{-5}
        let o = 37.0 * (-5.0f64).exp();
        assert!(simple_lo(3.0, 5.0).unwrap() <= o);
        assert!(simple_hi(3.0, 5.0).unwrap() >= o);
        assert!(rel(simple_hi(3.0, 5.0).unwrap(), 25.0 * (-5.0f64).exp() / 0.6) < 1e-13);
        assert!(simple_hi(3.0, 1.5).is_err()); // x <= a-1
    }

    #[test]
    fn tamed_bounds() {
        // integer a: the shift lands on an exact base, so the bound is exact
        let o = igamma_ref(4.0, 2.0).unwrap();
        assert!(rel(tamed_lower(4.0, 2.0).unwrap(), o.value()) < 1e-12);
        // a=2.5: k=1, must match G_fwd1
        assert!(
            rel(
                tamed_lower_scaled(2.5, 1.0).unwrap(),
                big_g_fwd1_scaled(2.5, 1.0).unwrap()
            ) < 1e-14
        );
        // sandwich plus taming at a=7.5, x=3
        let o = igamma_ref(7.5, 3.0).unwrap().value();
        let tl = tamed_lower(7.5, 3.0).unwrap();
        let tu = tamed_upper(7.5, 3.0).unwrap();
        assert!(tl <= o && o <= tu);
        let delta_tamed = (tu - o) / o;
        let delta_plain = (small_g(7.5, 3.0).unwrap() - o).abs() / o;
        assert!(delta_tamed.abs() <= delta_plain);
    }

    #[test]
    fn forward_shift_partial_sum_only() {
        // zero base, a=3, k=2, x=1: e^{-1}(1 + 2)
        let v = forward_shift(|_, _| Ok(0.0), 3.0, 2, 1.0).unwrap();
        assert!(rel(v, 3.0 * E_INV) < 1e-14);
    }

    #[test]
    fn shift_identity_and_inverse() {
        // forward shift of the oracle reproduces the oracle
        for (a, k, x) in [(2.5, 1u32, 2.0), (0.5, 2, 1.0), (-1.5, 3, 4.0), (7.0, 3, 9.0)] {
            let direct = igamma_ref(a, x).unwrap().value();
            let shifted = forward_shift(|aa, xx| Ok(igamma_ref(aa, xx).unwrap().value()), a, k, x)
                .unwrap();
            assert!(
                rel(shifted, direct) < 1e-11,
                "shift identity at a={a}, k={k}, x={x}"
            );
        }
        // backward ∘ forward = identity on an arbitrary smooth base
        let base = |c: f64, x: f64| Ok((2.0 + 0.25 * c + 0.01 * c * c) * (1.0 + x).powf(-0.3));
        for (a, k, x) in [(1.7, 1u32, 2.0), (-0.3, 2, 5.0), (4.2, 3, 1.5)] {
            let fwd = |aa: f64, xx: f64| forward_shift(base, aa + k as f64, k, xx);
            // fwd produces the shifted bound at order a+k from base at order a
            let roundtrip = backward_shift(|aa, xx| fwd(aa - k as f64, xx), a, k, x).unwrap();
            assert!(
                rel(roundtrip, base(a, x).unwrap()) < 1e-12,
                "roundtrip at a={a}, k={k}, x={x}"
            );
        }
    }

    #[test]
    fn backward_shift_rejects_degenerate_divisor() {
        // (a-1+k)_k = 0 when a = 0 and k = 1
        assert!(backward_shift(|_, _| Ok(1.0), 0.0, 1, 1.0).is_err());
    }

    #[test]
    fn classify_partition_and_snap() {
        assert_eq!(classify(-5.0).unwrap(), AlphaRegion::BelowMinusOne);
        assert_eq!(classify(-1.0 + 1e-9).unwrap(), AlphaRegion::ExactMinusOne);
        assert_eq!(classify(-0.5).unwrap(), AlphaRegion::MinusOneToZero);
        assert_eq!(classify(1e-9).unwrap(), AlphaRegion::ExactZero);
        assert_eq!(classify(0.5).unwrap(), AlphaRegion::ZeroToOne);
        assert_eq!(classify(1.0).unwrap(), AlphaRegion::ExactOne);
        assert_eq!(classify(1.5).unwrap(), AlphaRegion::OneToTwo);
        assert_eq!(classify(2.0).unwrap(), AlphaRegion::ExactTwo);
        assert_eq!(classify(2.5).unwrap(), AlphaRegion::TwoToThree);
        assert_eq!(classify(3.0).unwrap(), AlphaRegion::ExactThree);
        assert_eq!(classify(3.5).unwrap(), AlphaRegion::ThreeUp);
        assert!(classify(f64::NAN).is_err());
    }

    #[test]
    fn bracket_examples() {
        // exact at a=1
        let b = bracket(1.0, 2.0, Mode::Plain).unwrap();
        assert!(rel(b.lower, (-2.0f64).exp()) < 1e-13);
        assert_eq!(b.lower, b.upper);
        // a=7.5, x=3: g <= oracle <= G
        let o = igamma_ref(7.5, 3.0).unwrap().value();
        let b = bracket(7.5, 3.0, Mode::Plain).unwrap();
        assert!(b.lower <= o && o <= b.upper);
        assert_eq!(b.lower_spec.family, Family::SmallG);
        assert_eq!(b.upper_spec.family, Family::BigG);
        // a=-7.5: g_lo <= oracle <= g_shift1_lo
        let o = igamma_ref(-7.5, 1.0).unwrap().value();
        let b = bracket(-7.5, 1.0, Mode::Plain).unwrap();
        assert!(b.lower <= o && o <= b.upper);
        assert_eq!(b.lower_spec.family, Family::GLo);
        assert_eq!(b.upper_spec.family, Family::GShift1Lo);
        // a=0: (h, G)
        let b = bracket(0.0, 1.0, Mode::Plain).unwrap();
        assert_eq!(b.lower_spec.family, Family::HLower);
        assert_eq!(b.upper_spec.family, Family::BigG);
        assert!(rel(b.upper, E_INV * 2f64.ln()) < 1e-13);
        // invalid input
        assert!(bracket(f64::INFINITY, 1.0, Mode::Plain).is_err());
        assert!(bracket(1.0, 0.0, Mode::Plain).is_err());
    }

    #[test]
    fn family_spec_direction_table() {
        assert_eq!(
            family_spec(Family::BigG, 0.5).unwrap().direction,
            Direction::Upper
        );
        assert_eq!(
            family_spec(Family::BigG, 1.5).unwrap().direction,
            Direction::Lower
        );
        assert_eq!(
            family_spec(Family::BigG, 1.0).unwrap().direction,
            Direction::Exact
        );
        assert!(family_spec(Family::BigG, -1.5).is_none());
        assert_eq!(
            family_spec(Family::SmallG, 2.5).unwrap().direction,
            Direction::Upper
        );
        assert!(family_spec(Family::SmallG, 0.5).is_none());
        assert_eq!(
            family_spec(Family::BigGFwd1, 1.5).unwrap().direction,
            Direction::Upper
        );
        assert_eq!(
            family_spec(Family::BigGFwd1, 2.5).unwrap().direction,
            Direction::Lower
        );
        // G is exact at 0 only from a >= 0
        assert!(!family_spec(Family::BigG, -0.5).unwrap().exact_at_zero);
        assert!(family_spec(Family::BigG, 0.5).unwrap().exact_at_zero);
        assert!(family_spec(Family::BigG, -0.5).unwrap().exact_at_infinity);
    }

    proptest! {
        #[test]
        fn bracket_encloses_oracle(ai in -40i32..40, xi in 0usize..12) {
            // quarter-integer orders away from boundaries, log-spaced x
            let a = ai as f64 * 0.25;
            prop_assume!(![-1.0, 0.0, 1.0, 2.0, 3.0].contains(&a));
            let x = 10f64.powf(-3.0 + 5.0 * xi as f64 / 11.0);
            let o = igamma_ref(a, x).unwrap();
            let b = bracket(a, x, Mode::Plain).unwrap();
            let slack = 1e-9 * o.scaled;
            prop_assert!(b.lower_scaled <= o.scaled + slack);
            prop_assert!(b.upper_scaled >= o.scaled - slack);
        }

        #[test]
        fn scaled_and_plain_agree(ai in -40i32..40, xi in 0usize..8) {
            let a = ai as f64 * 0.25;
            prop_assume!(![-1.0, 0.0, 1.0, 2.0, 3.0].contains(&a));
            let x = 10f64.powf(-2.0 + 4.0 * xi as f64 / 7.0);
            let b = bracket(a, x, Mode::Plain).unwrap();
            let damp = (-x).exp();
            prop_assert!((b.lower - b.lower_scaled * damp).abs() <= 1e-12 * b.lower.abs().max(1e-300));
            prop_assert!((b.upper - b.upper_scaled * damp).abs() <= 1e-12 * b.upper.abs().max(1e-300));
        }
    }
}
