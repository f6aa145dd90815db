//! The explicit bound functions: `f` built on an inverse Gamma function,
//! the inverse `F` of `x ↦ x(2x)^x`, and the composed threshold `φ⁻¹`.

use crate::error::{Error, Result};
use crate::Rational;

/// Lanczos coefficients for g = 607/128, 15 terms; relative accuracy of
/// `ln_gamma` is a few ulps over the range used here.
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_COEFFS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    0.000_033_994_649_984_811_89,
    0.000_046_523_628_927_048_58,
    -0.000_098_374_475_304_879_56,
    0.000_158_088_703_224_912_5,
    -0.000_210_264_441_724_104_88,
    0.000_217_439_618_115_212_64,
    -0.000_164_318_106_536_763_9,
    0.000_084_418_223_983_852_74,
    -0.000_026_190_838_401_581_408,
    0.000_003_689_918_265_953_162,
];

/// Natural log of the Gamma function for positive arguments.
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma needs a positive argument");
    let mut series = LANCZOS_COEFFS[0];
    for (k, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (x - 1.0 + k as f64);
    }
    let t = x + LANCZOS_G - 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x - 0.5) * t.ln() - t + series.ln()
}

/// Factorials exact in both u128 and f64 range used for integer snapping.
fn exact_factorial(k: u32) -> Option<u128> {
    if k > 25 {
        return None;
    }
    Some((1..=k as u128).product())
}

/// Inverse of the Gamma function restricted to `[2, ∞)`, where it increases
/// from `Γ(2) = 1`. Bisection on `ln Γ`; results at factorial inputs are
/// snapped to the exact integer.
pub fn gamma_inverse(y: f64) -> Result<f64> {
    if y.is_nan() || y < 1.0 {
        return Err(Error::Domain(format!(
            "gamma_inverse needs y >= 1, got {y}"
        )));
    }
    let target = y.ln();
    let mut lo = 2.0_f64;
    let mut hi = 3.0_f64;
    while ln_gamma(hi) < target {
        lo = hi;
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if ln_gamma(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x = 0.5 * (lo + hi);
    // Γ(k) = (k-1)! — snap when y is exactly a factorial.
    let k = x.round();
    if (2.0..=26.0).contains(&k) {
        if let Some(fact) = exact_factorial(k as u32 - 1) {
            if fact as f64 == y {
                return Ok(k);
            }
        }
    }
    Ok(x)
}

/// The strictly decreasing bound `f(x) = 1 / Γ⁻¹(x - 1)`, defined on
/// `[1, ∞)`. For `x` in `[1, 2)` the inverse-Gamma argument falls below its
/// domain and is clamped to the edge value `f(2) = 1/2`, which preserves the
/// inequality direction.
pub fn f_bound(x: f64) -> Result<f64> {
    if x.is_nan() || x < 1.0 {
        return Err(Error::Domain(format!("f needs x >= 1, got {x}")));
    }
    if x < 2.0 {
        return Ok(0.5);
    }
    Ok(1.0 / gamma_inverse(x - 1.0)?)
}

/// The growth function `x ↦ x (2x)^x` on the positive reals.
pub fn order_growth(x: f64) -> f64 {
    assert!(x > 0.0);
    (x.ln() + x * (2.0 * x).ln()).exp()
}

fn ln_order_growth(x: f64) -> f64 {
    x.ln() + x * (2.0 * x).ln()
}

/// The strictly increasing inverse `F` of `x ↦ x(2x)^x`, solved by bisection
/// in log space; the round trip `g(F(y)) = y` is accurate to about `1e-13`
/// relative over `[1e-3, 1e30]`.
pub fn big_f_bound(y: f64) -> Result<f64> {
    if y.is_nan() || y <= 0.0 {
        return Err(Error::Domain(format!("F needs y > 0, got {y}")));
    }
    let target = y.ln();
    let mut lo = 1.0_f64;
    while ln_order_growth(lo) > target {
        lo *= 0.5;
    }
    let mut hi = lo.max(1.0);
    while ln_order_growth(hi) < target {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if ln_order_growth(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// A threshold far beyond floating-point range: `log10` of the value, plus
/// `log10(log10)` for when even the logarithm overflows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HugeLog {
    pub log10: f64,
    pub log10_log10: f64,
}

impl HugeLog {
    /// Whether `count` exceeds the represented value. Desk-scale counts
    /// never do once `log10` leaves `f64` range.
    pub fn exceeded_by(&self, count: u128) -> bool {
        if self.log10.is_finite() {
            (count as f64).log10() > self.log10
        } else {
            false
        }
    }
}

impl PartialOrd for HugeLog {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        // log10(log10 ·) is monotone, and stays finite where log10 does not.
        self.log10_log10.partial_cmp(&other.log10_log10)
    }
}

/// `N = φ⁻¹(α/c²)` with `φ = f ∘ F`, i.e. `N = g(Γ(c²/α) + 1)` where
/// `g(x) = x(2x)^x`. Returned in logarithmic form: the value is
/// astronomically large for the graph-restrictive constants of interest.
/// Arguments `α/c² > 1/2` are clamped to `1/2`, mirroring the domain clamp
/// of `f` (the threshold is conservative there).
pub fn n_threshold(c: u64, alpha: Rational) -> Result<HugeLog> {
    if c < 1 {
        return Err(Error::Domain("c must be at least 1".into()));
    }
    if alpha <= Rational::new(0, 1) || alpha > Rational::new(1, 1) {
        return Err(Error::Domain(format!(
            "alpha must be in (0, 1], got {alpha}"
        )));
    }
    // 1/y = c² / α, exactly as a ratio before conversion.
    let c2 = (c as f64) * (c as f64);
    let inv_y = (c2 * *alpha.denom() as f64 / *alpha.numer() as f64).max(2.0);
    let lg = ln_gamma(inv_y);
    const LN_10: f64 = std::f64::consts::LN_10;
    const LN_2: f64 = std::f64::consts::LN_2;
    if lg < 700.0 {
        let x = lg.exp() + 1.0;
        let ln_x = x.ln();
        let ln_n = ln_x + x * (LN_2 + ln_x);
        let log10 = ln_n / LN_10;
        Ok(HugeLog {
            log10,
            log10_log10: log10.log10(),
        })
    } else {
        // x ≈ Γ(1/y) itself overflows; ln x = ln Γ(1/y) and the +1 is
        // negligible at this magnitude.
        let ln_x = lg;
        let ln_ln_n = ln_x + (LN_2 + ln_x).ln();
        Ok(HugeLog {
            log10: f64::INFINITY,
            log10_log10: (ln_ln_n - LN_10.ln()) / LN_10,
        })
    }
}

/// One `f64` step up/down, repeated; used to direct rounding so a reported
/// verdict never depends on the last few ulps.
pub fn nudge_up(x: f64, steps: u32) -> f64 {
    let mut y = x;
    for _ in 0..steps {
        y = y.next_up();
    }
    y
}

pub fn nudge_down(x: f64, steps: u32) -> f64 {
    let mut y = x;
    for _ in 0..steps {
        y = y.next_down();
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_gamma_matches_factorials() {
        for k in 2..15u32 {
            let exact = ((1..k as u64).product::<u64>()) as f64;
            let rel = (ln_gamma(k as f64).exp() - exact).abs() / exact;
            assert!(rel < 1e-12, "k={k} rel={rel}");
        }
        // Γ(1/2) = sqrt(pi)
        let rel =
            (ln_gamma(0.5).exp() - std::f64::consts::PI.sqrt()).abs() / std::f64::consts::PI.sqrt();
        assert!(rel < 1e-12);
    }

    #[test]
    fn f_values_at_factorial_points_are_exact() {
        assert_eq!(f_bound(2.0).unwrap(), 0.5);
        assert_eq!(f_bound(3.0).unwrap(), 1.0 / 3.0);
        assert_eq!(f_bound(7.0).unwrap(), 0.25);
        assert_eq!(f_bound(25.0).unwrap(), 0.2); // Γ(5) = 4! = 24
    }

    #[test]
    fn f_clamps_below_two_and_rejects_below_one() {
        assert_eq!(f_bound(1.0).unwrap(), 0.5);
        assert_eq!(f_bound(1.5).unwrap(), 0.5);
        assert!(f_bound(0.5).is_err());
    }

    #[test]
    fn f_is_strictly_decreasing() {
        let mut prev = f_bound(2.0).unwrap();
        for i in 1..200 {
            let x = 2.0 + (i as f64) * (1_000_000.0 - 2.0) / 200.0;
            let fx = f_bound(x).unwrap();
            assert!(fx < prev, "f not decreasing at {x}");
            prev = fx;
        }
    }

    #[test]
    fn big_f_fixed_points() {
        assert!((big_f_bound(2.0).unwrap() - 1.0).abs() < 1e-12);
        assert!((big_f_bound(32.0).unwrap() - 2.0).abs() < 1e-12);
        assert!(big_f_bound(0.0).is_err());
    }

    #[test]
    fn big_f_round_trip() {
        for i in 0..1000 {
            let y = 10f64.powf(-3.0 + 33.0 * (i as f64) / 999.0);
            let x = big_f_bound(y).unwrap();
            let back = order_growth(x);
            assert!(
                ((back - y) / y).abs() < 1e-12,
                "round trip failed at y={y}: got {back}"
            );
        }
    }

    #[test]
    fn big_f_is_strictly_increasing() {
        let mut prev = big_f_bound(1e-3).unwrap();
        for i in 1..200 {
            let y = 10f64.powf(-3.0 + 20.0 * (i as f64) / 200.0);
            let fy = big_f_bound(y).unwrap();
            assert!(fy > prev);
            prev = fy;
        }
    }

    #[test]
    fn threshold_small_case_by_hand() {
        // y = 1/2, c = 1: f⁻¹(1/2) = Γ(2) + 1 = 2, g(2) = 32.
        let t = n_threshold(1, Rational::new(1, 2)).unwrap();
        assert!((t.log10 - 32f64.log10()).abs() < 1e-9);
        // Cross-check through the two closed forms.
        assert!((f_bound(big_f_bound(32.0).unwrap() + 0.0).unwrap() - 0.5).abs() < 1e-9);
    }

    #[test]
    fn composed_round_trip_at_integer_points() {
        // φ(g(x)) = f(F(g(x))) = f(x) for x in the domain of f.
        for x in 2..20 {
            let x = x as f64;
            let via_phi = f_bound(big_f_bound(order_growth(x)).unwrap()).unwrap();
            let direct = f_bound(x).unwrap();
            assert!(
                ((via_phi - direct) / direct).abs() < 1e-9,
                "x={x}: {via_phi} vs {direct}"
            );
        }
    }

    #[test]
    fn threshold_monotone_in_alpha_and_c() {
        let a = n_threshold(48, Rational::new(1, 2)).unwrap();
        let b = n_threshold(48, Rational::new(1, 4)).unwrap();
        assert!(a < b);
        let c = n_threshold(36, Rational::new(1, 2)).unwrap();
        assert!(c < a);
        for (cc, alpha) in [(1, (1, 2)), (36, (1, 4)), (48, (1, 10)), (11664, (1, 2))] {
            let t = n_threshold(cc, Rational::new(alpha.0, alpha.1)).unwrap();
            assert!(t.log10_log10.is_finite());
            assert!(t.log10 > 0.0);
        }
    }

    #[test]
    fn threshold_never_exceeded_at_desk_scale() {
        let t = n_threshold(48, Rational::new(1, 10)).unwrap();
        assert!(!t.exceeded_by(10));
        assert!(!t.exceeded_by(1_000_000));
        // N = 32 exactly at c = 1, α = 1/2; stay off the float knife edge.
        let small = n_threshold(1, Rational::new(1, 2)).unwrap();
        assert!(small.exceeded_by(33));
        assert!(!small.exceeded_by(31));
    }
}
