//! The pinning threshold `H(p)`: the discrete Laplacian at the origin of
//! the linear-growth harmonic profile in the lattice half-space
//! `{p.x > 0}`, computed by four independent methods, plus the dual
//! threshold, the generic (almost-every-direction) constant, and sampled
//! level-set boundaries.

mod charpoly;
mod fourier;
mod hitting;
mod integral;
mod lattice_sum;
mod roots;

pub use charpoly::CharPoly;
pub use fourier::{fourier_coeff, FourierTable};
pub use hitting::h_hitting;
pub use integral::h_integral;
pub use lattice_sum::{h_lattice_sum, h_lattice_sum_with};
pub use roots::h_roots;

use crate::error::HamError;
use crate::lattice::Slope;
use crate::Real;

/// Default tolerance for the root and quadrature methods.
pub const TOL_ROOTS: f64 = 1e-10;
/// Default per-coefficient tolerance of the walk series.
pub const TOL_FOURIER: f64 = 1e-6;
/// Default summation radius of the lattice sum, per dimension.
pub fn default_radius(d: usize) -> f64 {
    if d <= 2 {
        60.0
    } else {
        30.0
    }
}

/// Which route produced an estimate of `H(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Roots,
    Integral,
    LatticeSum,
    Hitting,
    HalfspaceNumeric,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Roots => "roots",
            Method::Integral => "integral",
            Method::LatticeSum => "lattice_sum",
            Method::Hitting => "hitting",
            Method::HalfspaceNumeric => "halfspace_numeric",
        };
        f.write_str(s)
    }
}

/// A value of `H(p)` with its method tag and error bound. `err` is zero for
/// methods with closed-form control and a heuristic bound otherwise.
#[derive(Debug, Clone)]
pub struct HEstimate<R: Real> {
    pub p: Slope,
    pub value: R,
    pub method: Method,
    pub err: R,
}

impl<R: Real> HEstimate<R> {
    pub(crate) fn new(p: Slope, value: R, method: Method, err: R) -> HEstimate<R> {
        let est = HEstimate { p, value, method, err };
        debug_assert!(est.within_linear_bounds(), "H out of linear bounds: {:?}", est);
        est
    }

    /// `C^-1 |p| <= H(p) <= C |p|` with `C = sqrt(2d)`; the duality
    /// `H(p) H-bar(p) = 2d |p|^2` with both factors between `|p|` and
    /// `2d |p|` forces this window.
    pub fn within_linear_bounds(&self) -> bool {
        let norm: R = self.p.norm();
        let c = R::of_usize(2 * self.p.dim()).sqrt();
        let slack = R::of(1.0 + 1e-9) + self.err / norm;
        self.value > R::zero()
            && self.value <= c * norm * slack
            && self.value >= norm / (c * slack)
    }
}

/// Upper threshold `H-bar(p) = 2d |p|^2 / H(p)` governing the maximal
/// subsolution; the gap between the two thresholds is the pinning interval.
pub fn h_dual<R: Real>(p: &Slope, base: &HEstimate<R>) -> R {
    assert_eq!(p, &base.p, "estimate is for a different slope");
    R::of_usize(2 * p.dim()) * R::of_i64(p.norm_sq()) / base.value
}

/// The value of `H` on almost every unit direction: `sqrt(2d exp(S^(0)))`.
///
/// In two dimensions this equals `exp(2K/pi)` with `K` Catalan's constant;
/// no closed form is known for `d >= 3`.
pub fn generic_constant<R: Real>(d: usize, tol: R) -> Result<R, HamError> {
    assert!(d >= 2, "generic constant needs d >= 2");
    let (s0, _err) = fourier_coeff::<R>(&vec![0; d], tol)?;
    Ok((R::of_usize(2 * d) * s0.exp()).sqrt())
}

/// Boundary samples of `{H <= 1}` (spiked) and of `{H-bar >= 1}` (dimpled)
/// in the plane, one point per reduced slope, plus the radii of the generic
/// circles between which the spikes and dimples live.
#[derive(Debug, Clone)]
pub struct LevelSetSamples<R: Real> {
    /// Points `p / H(p)` on the lower boundary, keyed by slope.
    pub lower: Vec<(Slope, [R; 2])>,
    /// Points `p H(p) / (2d |p|^2)` on the upper boundary, keyed by slope.
    pub upper: Vec<(Slope, [R; 2])>,
    /// Radius `1 / generic_constant(2)` of the generic circle of `{H <= 1}`.
    pub lower_generic_radius: R,
    /// Radius `generic_constant(2) / (2d)` of the generic circle of `{H-bar >= 1}`.
    pub upper_generic_radius: R,
}

/// Samples both level-set boundaries over every reduced plane slope with
/// `max |p_k| <= max_coord` (all sign and swap variants).
pub fn level_set_boundary<R: Real>(
    max_coord: i64,
    tol: R,
) -> Result<LevelSetSamples<R>, HamError> {
    assert!(max_coord >= 1);
    let gc = generic_constant::<R>(2, R::of(TOL_FOURIER).min(tol))?;
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for a in -max_coord..=max_coord {
        for b in -max_coord..=max_coord {
            let Ok(p) = Slope::reduce(&[a, b]) else { continue };
            if p.coords() != [a, b] || !seen.insert(p.clone()) {
                continue;
            }
            let est = h_roots::<R>(&p, tol)?;
            let h = est.value;
            let norm2 = R::of_i64(p.norm_sq());
            let px = R::of_i64(p.coords()[0]);
            let py = R::of_i64(p.coords()[1]);
            lower.push((p.clone(), [px / h, py / h]));
            let scale = h / (R::of_usize(4) * norm2);
            upper.push((p, [px * scale, py * scale]));
        }
    }
    Ok(LevelSetSamples {
        lower,
        upper,
        lower_generic_radius: gc.recip(),
        upper_generic_radius: gc / R::of_usize(4),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn dual_examples() {
        let p = Slope::new(vec![1, 0]).unwrap();
        let est = HEstimate::new(p.clone(), 1.0f64, Method::Roots, 0.0);
        assert_relative_eq!(h_dual(&p, &est), 4.0);

        let p = Slope::new(vec![1, 1]).unwrap();
        let est = HEstimate::new(p.clone(), 2.0f64, Method::Roots, 0.0);
        assert_relative_eq!(h_dual(&p, &est), 4.0);

        let p = Slope::new(vec![2, 1]).unwrap();
        let est = HEstimate::new(p.clone(), 3.6180339887498949f64, Method::Roots, 0.0);
        assert_relative_eq!(h_dual(&p, &est), 4.0 * 5.0 / 3.6180339887498949, epsilon = 1e-12);
    }

    #[test]
    fn generic_constant_2d_is_catalan_exponential() {
        let k_cat = 0.915_965_594_177_219_0_f64;
        let gc = generic_constant::<f64>(2, 1e-7).unwrap();
        assert_relative_eq!(gc, (2.0 * k_cat / std::f64::consts::PI).exp(), epsilon = 1e-5);
    }

    #[test]
    fn level_set_contains_axis_and_diagonal_points() {
        let samples = level_set_boundary::<f64>(1, 1e-10).unwrap();
        let e1 = Slope::new(vec![1, 0]).unwrap();
        let (_, pt) = samples.lower.iter().find(|(p, _)| p == &e1).unwrap();
        assert_relative_eq!(pt[0], 1.0, epsilon = 1e-10);
        assert_relative_eq!(pt[1], 0.0);
        let (_, gray) = samples.upper.iter().find(|(p, _)| p == &e1).unwrap();
        assert_relative_eq!(gray[0], 0.25, epsilon = 1e-10);

        // diagonal: coordinates (1/2, 1/2), radius 1/sqrt(2) on the
        // spiked boundary
        let diag = Slope::new(vec![1, 1]).unwrap();
        let (_, pt) = samples.lower.iter().find(|(p, _)| p == &diag).unwrap();
        assert_relative_eq!(pt[0], 0.5, epsilon = 1e-10);
        assert_relative_eq!(pt[1], 0.5, epsilon = 1e-10);

        assert_relative_eq!(samples.lower_generic_radius, 0.558_131_0, epsilon = 1e-4);
    }

    #[test]
    fn spikes_point_outward() {
        // every sampled lower-boundary radius is at least the generic radius
        let samples = level_set_boundary::<f64>(4, 1e-10).unwrap();
        for (p, pt) in &samples.lower {
            let r = (pt[0] * pt[0] + pt[1] * pt[1]).sqrt();
            assert!(
                r >= samples.lower_generic_radius,
                "spike for {} at radius {} inside generic circle",
                p,
                r
            );
        }
        // and dually, the dimpled boundary stays inside its generic circle
        for (_, pt) in &samples.upper {
            let r = (pt[0] * pt[0] + pt[1] * pt[1]).sqrt();
            assert!(r <= samples.upper_generic_radius + 1e-12);
        }
    }
}
