//! `H(p)` from the Diophantine lattice sum
//! `H^2 = 2d exp( sum_{q in L_p, |q| <= R} S^(q) ) |p|^2`,
//! with an error budget combining the per-coefficient series errors and the
//! lattice truncation tail.

use super::fourier::FourierTable;
use super::{HEstimate, Method};
use crate::error::HamError;
use crate::lattice::{diophantine_basis, enumerate_lattice, DiophantineLattice, Slope};
use crate::Real;

/// Safety factor on the fitted decay constant used in the tail bound.
const FIT_MARGIN: f64 = 1.25;

/// The pieces of a truncated lattice sum, for callers that need the raw
/// exponent and its error budget rather than the finished estimate.
#[derive(Debug, Clone)]
pub struct LatticeSumBreakdown<R: Real> {
    /// `sum_{q in L_p, |q| <= R} S^(q)`, accumulated in sorted site order.
    pub partial_sum: R,
    /// Sum of per-coefficient truncation errors.
    pub coeff_err: R,
    /// Bound on `sum_{q in L_p, |q| > R} |S^(q)|` from the fitted decay
    /// envelope `C (1+|q|)^{-d} log(2+|q|)`.
    pub lattice_tail: R,
    /// Fitted decay constant (with safety margin).
    pub fitted_c: R,
    /// Number of lattice sites inside the radius.
    pub points: usize,
}

impl<R: Real> LatticeSumBreakdown<R> {
    /// Total error bound on the exponent.
    pub fn exponent_err(&self) -> R {
        self.coeff_err + self.lattice_tail
    }
}

pub fn lattice_sum_breakdown<R: Real>(
    p: &Slope,
    radius: f64,
    table: &FourierTable<R>,
) -> Result<LatticeSumBreakdown<R>, HamError> {
    assert_eq!(table.dim(), p.dim());
    let lat = diophantine_basis(p);
    let pts = enumerate_lattice(&lat, radius, crate::lattice::dioph_enumeration_limit())?;
    let mut partial_sum = R::zero();
    let mut coeff_err = R::zero();
    let mut fitted_c = R::zero();
    for q in &pts {
        let (v, e) = table.coeff(q)?;
        partial_sum += v;
        coeff_err += e;
        let qn = R::of_i64(q.iter().map(|x| x * x).sum::<i64>()).sqrt();
        let envelope = (R::one() + qn).powi(p.dim() as i32) / (R::of(2.0) + qn).ln();
        let ratio = v.abs() * envelope;
        if ratio > fitted_c {
            fitted_c = ratio;
        }
    }
    fitted_c *= R::of(FIT_MARGIN);
    let lattice_tail = tail_over_lattice(&lat, radius, fitted_c);
    Ok(LatticeSumBreakdown { partial_sum, coeff_err, lattice_tail, fitted_c, points: pts.len() })
}

/// Lattice-sum estimate with a shared coefficient table (slope sweeps reuse
/// the memoized coefficients).
pub fn h_lattice_sum_with<R: Real>(
    p: &Slope,
    radius: f64,
    table: &FourierTable<R>,
) -> Result<HEstimate<R>, HamError> {
    let bd = lattice_sum_breakdown(p, radius, table)?;
    let norm: R = p.norm();
    let h = (R::of_usize(2 * p.dim()) * bd.partial_sum.exp()).sqrt() * norm;
    // the exponent is known to within exponent_err, including the omitted
    // (negative) lattice tail; half of it moves log H
    let err = h * ((bd.exponent_err() / R::of(2.0)).exp() - R::one());
    Ok(HEstimate::new(p.clone(), h, Method::LatticeSum, err))
}

pub fn h_lattice_sum<R: Real>(
    p: &Slope,
    radius: f64,
    tol: R,
) -> Result<HEstimate<R>, HamError> {
    let table = FourierTable::new(p.dim(), tol);
    h_lattice_sum_with(p, radius, &table)
}

/// Bounds `sum_{q in L, |q| > radius} C (1+|q|)^{-d} log(2+|q|)` by exact
/// enumeration of the shell up to `8 radius` plus a continuum estimate of
/// the rest (the summand integrates like `t^{-2} log t` along a
/// rank-(d-1) lattice).
fn tail_over_lattice<R: Real>(lat: &DiophantineLattice, radius: f64, c: R) -> R {
    let rank = lat.rank();
    if rank == 0 {
        return R::zero();
    }
    let d = lat.slope().dim() as i32;
    let shell_radius = (8.0 * radius).max(radius + 64.0);
    let mut tail = R::zero();
    let pts = enumerate_lattice(lat, shell_radius, crate::lattice::dioph_enumeration_limit())
        .unwrap_or_default();
    let r2 = radius * radius;
    for q in &pts {
        let n2: i64 = q.iter().map(|x| x * x).sum();
        if (n2 as f64) <= r2 {
            continue;
        }
        let qn = R::of_i64(n2).sqrt();
        tail += c * (R::of(2.0) + qn).ln() / (R::one() + qn).powi(d);
    }
    // continuum remainder beyond the enumerated shell
    let covol = covolume(lat);
    let surface = match rank {
        1 => 2.0,
        2 => 2.0 * std::f64::consts::PI,
        _ => 4.0 * std::f64::consts::PI,
    };
    let t = shell_radius;
    tail += c * R::of(surface / covol * ((2.0 + t).ln() + 1.0) / t);
    tail
}

/// `sqrt(det(B^T B))`, the covolume of the sublattice.
fn covolume(lat: &DiophantineLattice) -> f64 {
    let b = lat.basis();
    let rank = b.len();
    let mut g = vec![vec![0f64; rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            g[i][j] = b[i].iter().zip(&b[j]).map(|(x, y)| (x * y) as f64).sum();
        }
    }
    let det = match rank {
        1 => g[0][0],
        2 => g[0][0] * g[1][1] - g[0][1] * g[1][0],
        3 => {
            g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
                - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
                + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
        }
        _ => 1.0,
    };
    det.max(1.0).sqrt()
}
