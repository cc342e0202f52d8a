//! `H(p)` from a log-periodic quadrature: `H^2 = |p|^2 exp(mean of log h)`
//! with the smooth positive factor `h(t) = sum_k sin^2(p_k t/2) / sin^2(t/2)`.
//!
//! Writing each term through half-angle sines removes the endpoint
//! singularity exactly; at `t = 0` the removable value is `|p|^2`. The
//! periodic trapezoid rule then converges spectrally, and node doubling
//! stops once successive means agree.

use super::{HEstimate, Method};
use crate::error::HamError;
use crate::lattice::Slope;
use crate::Real;

const NODE_CAP: usize = 1 << 21;

pub fn h_integral<R: Real>(p: &Slope, nodes: usize) -> Result<HEstimate<R>, HamError> {
    assert!(nodes >= 16, "need at least 16 nodes");
    let mut n = nodes;
    let mut prev = mean_log_h::<R>(p, n);
    loop {
        n *= 2;
        if n > NODE_CAP {
            return Err(HamError::NoConvergence { nodes: n });
        }
        let cur = mean_log_h::<R>(p, n);
        let diff = (cur - prev).abs();
        if diff < R::of(1e-12) {
            let h = (R::of_i64(p.norm_sq()) * cur.exp()).sqrt();
            return Ok(HEstimate::new(p.clone(), h, Method::Integral, diff));
        }
        prev = cur;
    }
}

/// Periodic trapezoid mean of `log h` over one period: the plain average
/// of the integrand at equispaced nodes.
fn mean_log_h<R: Real>(p: &Slope, n: usize) -> R {
    let norm_sq = R::of_i64(p.norm_sq());
    let mut acc = R::zero();
    for j in 0..n {
        let t = R::of(2.0 * std::f64::consts::PI) * R::of_usize(j) / R::of_usize(n);
        let s = (t / R::of(2.0)).sin();
        let hv = if s == R::zero() {
            norm_sq
        } else {
            let mut sum = R::zero();
            for &pk in p.coords() {
                let q = (R::of_i64(pk) * t / R::of(2.0)).sin() / s;
                sum += q * q;
            }
            sum
        };
        acc += hv.ln();
    }
    acc / R::of_usize(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn slope(c: &[i64]) -> Slope {
        Slope::new(c.to_vec()).unwrap()
    }

    #[test]
    fn axis_factor_is_identically_one() {
        // p = (1,0): h(t) = 1, so the mean of log h vanishes and H = 1
        let est = h_integral::<f64>(&slope(&[1, 0]), 16).unwrap();
        assert_relative_eq!(est.value, 1.0, epsilon = 1e-13);
    }

    #[test]
    fn diagonal_factor_is_two() {
        let est = h_integral::<f64>(&slope(&[1, 1]), 16).unwrap();
        assert_relative_eq!(est.value, 2.0, epsilon = 1e-13);
    }

    #[test]
    fn slope_21_closed_form_mean() {
        // h(t) = 3 + 2 cos t, whose mean log is log((3 + sqrt(5))/2)
        let est = h_integral::<f64>(&slope(&[2, 1]), 16).unwrap();
        let expect = (5.0 * (3.0 + 5.0f64.sqrt()) / 2.0).sqrt();
        assert_relative_eq!(est.value, expect, epsilon = 1e-12);
    }

    #[test]
    fn matches_roots_on_battery() {
        for coords in [vec![3, 1], vec![3, 2], vec![4, 3], vec![2, 1, 1], vec![3, 3, 1]] {
            let p = slope(&coords);
            let hi = h_integral::<f64>(&p, 16).unwrap().value;
            let hr = super::super::h_roots::<f64>(&p, 1e-10).unwrap().value;
            assert_relative_eq!(hi, hr, epsilon = 1e-10);
        }
    }
}
