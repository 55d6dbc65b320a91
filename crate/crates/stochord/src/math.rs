//! Small numerical helpers shared across the crate.

/// ln(1 - e^z) for z <= 0, avoiding cancellation on both ends.
///
/// Returns -inf at z = 0 and ~ -e^z for very negative z.
pub(crate) fn log1mexp(z: f64) -> f64 {
    debug_assert!(z <= 0.0, "log1mexp needs z <= 0, got {z}");
    if z > -std::f64::consts::LN_2 {
        (-z.exp_m1()).ln()
    } else {
        (-z.exp()).ln_1p()
    }
}

/// ln Γ(s) for s > 0 (Lanczos, g = 7, n = 9).
pub(crate) fn ln_gamma(s: f64) -> f64 {
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_571_6e-6,
        1.505_632_735_149_311_6e-7,
    ];
    debug_assert!(s > 0.0);
    let x = s - 1.0;
    let mut acc = COEF[0];
    for (i, c) in COEF.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + 7.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// Upper incomplete gamma Γ(s, x) = ∫_x^∞ t^{s-1} e^{-t} dt for s > 0, x >= 0.
pub(crate) fn upper_gamma(s: f64, x: f64) -> f64 {
    debug_assert!(s > 0.0 && x >= 0.0);
    if x == 0.0 {
        return ln_gamma(s).exp();
    }
    if x > s + 1.0 {
        // Continued fraction (Lentz): Γ(s,x) = e^{-x} x^s / (x+1-s- 1(1-s)/(x+3-s- ...))
        let ln_pref = -x + s * x.ln();
        let tiny = 1e-300;
        let mut b = x + 1.0 - s;
        let mut c = 1.0 / tiny;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..200 {
            let an = -(i as f64) * (i as f64 - s);
            b += 2.0;
            d = an * d + b;
            if d.abs() < tiny {
                d = tiny;
            }
            c = b + an / c;
            if c.abs() < tiny {
                c = tiny;
            }
            d = 1.0 / d;
            let delta = d * c;
            h *= delta;
            if (delta - 1.0).abs() < 1e-16 {
                break;
            }
        }
        ln_pref.exp() * h
    } else {
        // Γ(s,x) = Γ(s) - γ(s,x), lower series.
        let ln_pref = -x + s * x.ln();
        let mut term = 1.0 / s;
        let mut sum = term;
        let mut a = s;
        for _ in 0..300 {
            a += 1.0;
            term *= x / a;
            sum += term;
            if term.abs() < sum.abs() * 1e-17 {
                break;
            }
        }
        let lower = ln_pref.exp() * sum;
        (ln_gamma(s).exp() - lower).max(0.0)
    }
}

/// Generalized binomial coefficient C(b, k) for real b and small integer k.
pub(crate) fn binom_real(b: f64, k: u32) -> f64 {
    let mut num = 1.0;
    for j in 0..k {
        num *= b - j as f64;
    }
    let mut den = 1.0;
    for j in 1..=k {
        den *= j as f64;
    }
    num / den
}

/// Root of a continuous increasing function on [lo, hi] with f(lo) <= 0 <= f(hi).
///
/// Interpolated bisection; converges to ~1e-15 relative for smooth f.
pub(crate) fn find_root_increasing<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    let mut fhi = f(hi);
    if flo >= 0.0 {
        return lo;
    }
    if fhi <= 0.0 {
        return hi;
    }
    for _ in 0..200 {
        // Secant guess, clamped away from the bracket ends; fall back to midpoint.
        let mut mid = if fhi > flo {
            lo + (hi - lo) * (-flo) / (fhi - flo)
        } else {
            0.5 * (lo + hi)
        };
        let w = hi - lo;
        if !(mid > lo + 1e-3 * w && mid < hi - 1e-3 * w) {
            mid = 0.5 * (lo + hi);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm < 0.0 {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
        if hi - lo <= 1e-15 * hi.abs().max(1.0) {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// SplitMix64 step; used to derive independent per-trial seeds.
pub(crate) fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
