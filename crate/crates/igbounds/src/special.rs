//! Scalar primitives shared by the bound families and the reference
//! evaluator: the complete gamma function on the positive axis, the constant
//! `b_a = Γ(a+1)^{1/(a-1)}`, falling factorials, and a cancellation-safe
//! power difference `(x+b)^a - x^a`.

use crate::{domain_err, Result};

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// ψ(2) = 1 − γ, the digamma function at 2.
pub const DIGAMMA_2: f64 = 1.0 - EULER_GAMMA;

/// ψ′(2) = π²/6 − 1, the trigamma function at 2.
pub const TRIGAMMA_2: f64 = 0.644_934_066_848_226_4;

/// Width of the window around `a = 1` in which [`b_const`] switches to a
/// series expansion of `ln Γ(a+1) / (a-1)`; the direct quotient is 0/0 there.
pub const B_CONST_TAYLOR_WINDOW: f64 = 1e-4;

/// Relative size of `b/x` below which [`pow_diff`] switches from direct
/// evaluation to the `expm1(a·log1p(b/x))` form.
pub const POW_DIFF_SWITCH: f64 = 1e-3;

// Lanczos-type rational approximation (Godfrey's g = 10.900511 coefficient
// set). Relative accuracy is a few ulps across (0, 171).
const LANCZOS_R: f64 = 10.900511;
const LANCZOS_DK: [f64; 11] = [
    2.485_740_891_387_535_7e-5,
    1.051_423_785_817_219_7,
    -3.456_870_972_220_162_4,
    4.512_277_094_668_948,
    -2.982_852_253_235_766_4,
    1.056_397_115_771_267_1,
    -1.954_287_731_916_458_7e-1,
    1.709_705_434_044_412_2e-2,
    -5.719_261_174_043_057_7e-4,
    4.633_994_733_599_057e-6,
    -2.719_949_084_886_077_2e-9,
];
const TWO_SQRT_E_OVER_PI: f64 = 1.860_382_734_205_265_7;

fn lanczos_sum(shifted: impl Fn(usize) -> f64) -> f64 {
    let mut s = LANCZOS_DK[0];
    for (i, dk) in LANCZOS_DK.iter().enumerate().skip(1) {
        s += dk / shifted(i);
    }
    s
}

fn lanczos_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // reflection: Γ(x) = π / (sin(πx) Γ(1-x))
        let s = lanczos_sum(|i| i as f64 - x);
        std::f64::consts::PI
            / ((std::f64::consts::PI * x).sin()
                * s
                * TWO_SQRT_E_OVER_PI
                * ((0.5 - x + LANCZOS_R) / std::f64::consts::E).powf(0.5 - x))
    } else {
        let s = lanczos_sum(|i| x + i as f64 - 1.0);
        s * TWO_SQRT_E_OVER_PI * ((x - 0.5 + LANCZOS_R) / std::f64::consts::E).powf(x - 0.5)
    }
}

/// Γ(x) for any finite `x`, with poles returning ±∞. Internal total version;
/// the public entry point is [`gamma_pos`].
///
/// Arguments above 2.5 are reduced by the recurrence into `[1.5, 2.5)`,
/// where the rational approximation sits in its sweet spot; the large
/// exponent in the direct form would otherwise cost ~`x·ε` relative error.
pub(crate) fn gamma_impl(x: f64) -> f64 {
    if x >= 2.5 {
        let k = (x - 1.5).floor();
        let base = x - k;
        let mut p = lanczos_gamma(base);
        let mut i = 0.0;
        while i < k {
            p *= base + i;
            i += 1.0;
        }
        p
    } else {
        lanczos_gamma(x)
    }
}

/// Complete gamma function Γ(a) for `a > 0`.
///
/// Relative accuracy is a few ulps (well below 1e-13). Overflows to +∞ for
/// `a ≳ 171.6`.
pub fn gamma_pos(a: f64) -> Result<f64> {
    if !a.is_finite() || a <= 0.0 {
        return Err(domain_err("gamma_pos", format!("requires a > 0, got {a}")));
    }
    Ok(gamma_impl(a))
}

/// Falling factorial `(u)_j = u (u-1) ⋯ (u-j+1)`; the empty product for
/// `j = 0` is 1. May overflow to ±∞ for very large `j`.
pub fn falling_factorial(u: f64, j: u32) -> f64 {
    let mut p = 1.0;
    for i in 0..j {
        p *= u - i as f64;
    }
    p
}

/// The constant `b_a = Γ(a+1)^{1/(a-1)}` for `a > -1`, continuously extended
/// through `a = 1` where its value is `e^{1-γ}`.
///
/// Near `a = 1` the exponent `ln Γ(a+1) / (a-1)` is evaluated from the
/// expansion `ln Γ(a+1) = ψ(2)(a-1) + ψ′(2)(a-1)²/2 + O((a-1)³)`, so the
/// 0/0 quotient never forms. `b_a` is strictly increasing, with `b_0 = 1`
/// and `b_2 = 2`.
pub fn b_const(a: f64) -> Result<f64> {
    if !a.is_finite() || a <= -1.0 {
        return Err(domain_err("b_const", format!("requires a > -1, got {a}")));
    }
    let e = a - 1.0;
    if e.abs() < B_CONST_TAYLOR_WINDOW {
        return Ok((DIGAMMA_2 + 0.5 * TRIGAMMA_2 * e).exp());
    }
    Ok(gamma_impl(a + 1.0).powf(1.0 / e))
}

/// `(x+b)^a - x^a` for `x > 0`, `b > 0`, evaluated without cancellation.
///
/// For `b/x ≤ 1e-3` the difference is formed as
/// `x^a · expm1(a · log1p(b/x))`, which stays fully accurate when `b ≪ x`;
/// above the switch point direct evaluation is used. May overflow to ±∞ for
/// extreme exponents.
pub fn pow_diff(x: f64, b: f64, a: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(domain_err("pow_diff", format!("requires x > 0, got {x}")));
    }
    if !b.is_finite() || b <= 0.0 {
        return Err(domain_err("pow_diff", format!("requires b > 0, got {b}")));
    }
    if !a.is_finite() {
        return Err(domain_err("pow_diff", format!("requires finite a, got {a}")));
    }
    if b <= x * POW_DIFF_SWITCH {
        Ok(x.powf(a) * (a * (b / x).ln_1p()).exp_m1())
    } else {
        Ok((x + b).powf(a) - x.powf(a))
    }
}
