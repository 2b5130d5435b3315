//! Closed-form growth exponents, empirical log-log fitting and envelope
//! checks for γ(n).

use serde::Serialize;

use crate::enumeration::StatsRecord;
use crate::error::{Error, Result};
use crate::general::AlphabetParams;

/// The reference exponent q = log 3 / log(3/2) ≈ 2.70951.
pub fn reference_q() -> f64 {
    3f64.ln() / 1.5f64.ln()
}

/// A pair of growth-exponent bounds around γ.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ExponentReport {
    /// θ (or ξ) the bounds were evaluated at
    pub parameter: f64,
    pub lower_exponent: f64,
    pub upper_exponent: f64,
    pub reference_q: f64,
}

/// Lower log 3 / log(2-θ) and upper log 3 / log(1+θ), for 0 < θ <= 1/2.
/// Both collapse to q at θ = 1/2.
pub fn theorem6_exponents(theta: f64) -> Result<ExponentReport> {
    if !(theta > 0.0 && theta <= 0.5) {
        return Err(Error::Domain(format!("theta must lie in (0, 1/2], got {theta}")));
    }
    Ok(ExponentReport {
        parameter: theta,
        lower_exponent: 3f64.ln() / (2.0 - theta).ln(),
        upper_exponent: 3f64.ln() / (1.0 + theta).ln(),
        reference_q: reference_q(),
    })
}

/// The generalized bounds: log(2b-1) / log(1 + (a+b-2)(1-ξ)) and
/// log(2b-1) / log(1 + (a+b-2)ξ), for 0 < ξ < 1.
pub fn theorem5_exponents(p: &AlphabetParams, xi: f64) -> Result<ExponentReport> {
    if !(xi > 0.0 && xi < 1.0) {
        return Err(Error::Domain(format!("xi must lie in (0, 1), got {xi}")));
    }
    let top = (2.0 * p.b() as f64 - 1.0).ln();
    let s = (p.a() + p.b()) as f64 - 2.0;
    Ok(ExponentReport {
        parameter: xi,
        lower_exponent: top / (1.0 + s * (1.0 - xi)).ln(),
        upper_exponent: top / (1.0 + s * xi).ln(),
        reference_q: reference_q(),
    })
}

/// Sing's conjectured exponent δ = log(a+b)/log((a+b)/2) next to the revised
/// θ = log(2b-1)/log((a+b)/2).
pub fn sing_exponents(p: &AlphabetParams) -> Result<(f64, f64)> {
    let half_sum = (p.a() + p.b()) as f64 / 2.0;
    if half_sum <= 1.0 {
        return Err(Error::Domain("(a+b)/2 must exceed 1".into()));
    }
    let delta = ((p.a() + p.b()) as f64).ln() / half_sum.ln();
    let theta_rev = (2.0 * p.b() as f64 - 1.0).ln() / half_sum.ln();
    Ok((delta, theta_rev))
}

/// Least-squares slope of log γ(n) against log n over records with
/// n_min <= n <= n_max. Needs at least 8 records in range.
pub fn fit_growth_exponent(records: &[StatsRecord], n_min: usize, n_max: usize) -> Result<f64> {
    let points: Vec<(f64, f64)> = records
        .iter()
        .filter(|r| r.n >= n_min && r.n <= n_max)
        .map(|r| {
            if r.gamma == 0 {
                Err(Error::InsufficientData(format!("gamma({}) = 0", r.n)))
            } else {
                Ok(((r.n as f64).ln(), (r.gamma as f64).ln()))
            }
        })
        .collect::<Result<_>>()?;
    if points.len() < 8 {
        return Err(Error::InsufficientData(format!(
            "need at least 8 records in [{n_min}, {n_max}], have {}",
            points.len()
        )));
    }
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    let denom = n * sxx - sx * sx;
    if denom.abs() < 1e-300 {
        return Err(Error::InsufficientData("degenerate abscissae".into()));
    }
    Ok((n * sxy - sx * sy) / denom)
}

/// Outcome of the Dekking envelope c·n^2.15 <= γ(n) <= n^7.2.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DekkingReport {
    /// γ(n) <= n^7.2 for every record with n >= 2
    pub upper_ok: bool,
    /// lengths violating the upper envelope, if any
    pub upper_violations: Vec<usize>,
    /// the largest c with c·n^2.15 <= γ(n) across the records (n >= 2)
    pub lower_constant: f64,
}

pub fn dekking_envelope_check(records: &[StatsRecord]) -> DekkingReport {
    let mut upper_violations = Vec::new();
    let mut lower_constant = f64::INFINITY;
    for r in records.iter().filter(|r| r.n >= 2) {
        let n = r.n as f64;
        if r.gamma as f64 > n.powf(7.2) {
            upper_violations.push(r.n);
        }
        lower_constant = lower_constant.min(r.gamma as f64 / n.powf(2.15));
    }
    if !lower_constant.is_finite() {
        lower_constant = 0.0;
    }
    DekkingReport {
        upper_ok: upper_violations.is_empty(),
        upper_violations,
        lower_constant,
    }
}

/// The empirical θ for the Theorem-6 bracket: the smallest freq_min among
/// records with n >= n0.
pub fn empirical_theta(records: &[StatsRecord], n0: usize) -> Option<f64> {
    records
        .iter()
        .filter(|r| r.n >= n0)
        .map(|r| r.freq_min.0 as f64 / r.freq_min.1 as f64)
        .min_by(|a, b| a.total_cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(n: usize, gamma: u64) -> StatsRecord {
        StatsRecord {
            n,
            gamma,
            gamma_prime: None,
            h1: 1,
            h2: 1,
            freq_min: (1, 2),
            freq_max: (1, 2),
        }
    }

    #[test]
    fn theorem6_collapse_at_half() {
        let r = theorem6_exponents(0.5).unwrap();
        assert!((r.lower_exponent - r.reference_q).abs() < 1e-12);
        assert!((r.upper_exponent - r.reference_q).abs() < 1e-12);
        assert!((r.reference_q - 2.70951).abs() < 1e-5);
    }

    #[test]
    fn theorem6_band_and_limits() {
        let r = theorem6_exponents(0.499162).unwrap();
        assert!(r.lower_exponent < reference_q() && reference_q() < r.upper_exponent);
        let near_zero = theorem6_exponents(1e-9).unwrap();
        assert!((near_zero.lower_exponent - 3f64.ln() / 2f64.ln()).abs() < 1e-6);
        assert!(theorem6_exponents(0.0).is_err());
        assert!(theorem6_exponents(0.6).is_err());
    }

    #[test]
    fn theorem6_monotone_toward_half() {
        let mut prev = theorem6_exponents(0.1).unwrap();
        for theta in [0.2, 0.3, 0.4, 0.5] {
            let cur = theorem6_exponents(theta).unwrap();
            assert!(cur.lower_exponent > prev.lower_exponent);
            assert!(cur.upper_exponent < prev.upper_exponent);
            prev = cur;
        }
    }

    #[test]
    fn theorem5_reduction_at_base() {
        let base = AlphabetParams::base();
        for xi in [0.1, 0.25, 0.5, 0.75, 0.49] {
            let five = theorem5_exponents(&base, xi).unwrap();
            // a + b - 2 = 1, so the bounds are log3/log(2-ξ) and log3/log(1+ξ)
            assert!((five.lower_exponent - 3f64.ln() / (2.0 - xi).ln()).abs() < 1e-12);
            assert!((five.upper_exponent - 3f64.ln() / (1.0 + xi).ln()).abs() < 1e-12);
        }
        let p13 = AlphabetParams::new(1, 3).unwrap();
        let r = theorem5_exponents(&p13, 0.5).unwrap();
        assert!((r.lower_exponent - 5f64.ln() / 2f64.ln()).abs() < 1e-12);
        assert!((r.upper_exponent - 5f64.ln() / 2f64.ln()).abs() < 1e-12);
        assert!(theorem5_exponents(&p13, 0.0).is_err());
        assert!(theorem5_exponents(&p13, 1.0).is_err());
    }

    #[test]
    fn sing_examples_and_grid() {
        let (d, t) = sing_exponents(&AlphabetParams::base()).unwrap();
        assert!((d - reference_q()).abs() < 1e-12);
        assert!((t - reference_q()).abs() < 1e-12);
        let (d14, t14) = sing_exponents(&AlphabetParams::new(1, 4).unwrap()).unwrap();
        assert!((d14 - 5f64.ln() / 2.5f64.ln()).abs() < 1e-12);
        assert!((t14 - 7f64.ln() / 2.5f64.ln()).abs() < 1e-12);
        assert!(d14 != t14);
        // δ = θ_rev exactly when a = b - 1
        for b in 2..=8u8 {
            for a in 1..b {
                let (delta, theta) =
                    sing_exponents(&AlphabetParams::new(a, b).unwrap()).unwrap();
                if a == b - 1 {
                    assert!((delta - theta).abs() < 1e-12, "a={a}, b={b}");
                } else {
                    assert!((delta - theta).abs() > 1e-9, "a={a}, b={b}");
                }
            }
        }
    }

    #[test]
    fn fit_recovers_synthetic_power_law() {
        let records: Vec<StatsRecord> =
            (1..=32).map(|n| record(n, (n as u64).pow(3))).collect();
        let slope = fit_growth_exponent(&records, 1, 32).unwrap();
        assert!((slope - 3.0).abs() < 1e-9);
        let constant: Vec<StatsRecord> = (1..=32).map(|n| record(n, 7)).collect();
        assert!(fit_growth_exponent(&constant, 1, 32).unwrap().abs() < 1e-12);
        assert!(matches!(
            fit_growth_exponent(&records, 1, 5),
            Err(Error::InsufficientData(_))
        ));
    }

    #[test]
    fn dekking_check_small() {
        let records = vec![record(2, 4), record(3, 6), record(4, 10)];
        let report = dekking_envelope_check(&records);
        assert!(report.upper_ok);
        assert!(report.lower_constant > 0.0);
        assert!(10.0 <= 4f64.powf(7.2));
    }

    #[test]
    fn empirical_theta_picks_minimum() {
        let mut records = vec![record(10, 4), record(20, 4), record(30, 4)];
        records[1].freq_min = (9, 20);
        records[2].freq_min = (14, 30);
        assert_eq!(empirical_theta(&records, 15), Some(0.45));
        assert_eq!(empirical_theta(&records, 100), None);
    }
}
