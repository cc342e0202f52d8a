//! `H(p)` from the root product: deflate the exact double root at 1, find
//! the remaining roots, select the modulus-greater-than-one half of each
//! reciprocal pair, and take `H = |p| sqrt(m prod(-roots))`.

use num_complex::Complex;

use super::charpoly::char_poly;
use super::{HEstimate, Method};
use crate::error::HamError;
use crate::lattice::Slope;
use crate::Real;

pub fn h_roots<R: Real>(p: &Slope, tol: R) -> Result<HEstimate<R>, HamError> {
    let cp = char_poly(p);
    let b = cp.deflate_unit_root();
    let m = R::of_usize(cp.m());
    let norm: R = p.norm();
    if b.len() == 1 {
        // no roots besides the deflated pair at 1: H = |p| sqrt(m)
        return Ok(HEstimate::new(p.clone(), norm * m.sqrt(), Method::Roots, R::zero()));
    }
    let coeffs: Vec<Complex<R>> = b.iter().map(|&c| Complex::new(R::of_i64(c), R::zero())).collect();
    let roots = aberth_ehrlich(&coeffs)?;
    let outside = pair_reciprocals(&roots, tol)?;

    let mut product = Complex::new(R::one(), R::zero());
    for lam in &outside {
        product = product * (-lam);
    }
    let rel_imag = product.im.abs() / product.re.abs().max(R::of(1e-300));
    if product.re <= R::zero() || rel_imag > tol.max(R::of(1e-12)) {
        return Err(HamError::NonRealProduct { imag_over_real: rel_imag.to_f64_lossy() });
    }
    let h = norm * (m * product.re).sqrt();
    Ok(HEstimate::new(p.clone(), h, Method::Roots, R::zero()))
}

/// Splits roots into reciprocal pairs `(lambda, 1/lambda)` by nearest
/// match and returns the representative of modulus greater than one from
/// each pair.
fn pair_reciprocals<R: Real>(
    roots: &[Complex<R>],
    tol: R,
) -> Result<Vec<Complex<R>>, HamError> {
    let k = roots.len();
    if k % 2 != 0 {
        return Err(HamError::RootPairingFailed { detail: format!("odd root count {}", k) });
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&i, &j| {
        roots[j].norm().partial_cmp(&roots[i].norm()).expect("finite roots")
    });
    let (big, small) = order.split_at(k / 2);
    let pair_tol = tol.max(R::of(1e-8));
    // a tie at the unit circle contradicts the spectral gap of the symbol
    for &i in big {
        if roots[i].norm() <= R::one() {
            return Err(HamError::RootPairingFailed {
                detail: format!("root of modulus {:e} not outside the unit circle", roots[i].norm()),
            });
        }
    }
    let mut used = vec![false; small.len()];
    let mut out = Vec::with_capacity(big.len());
    for &i in big {
        let want = roots[i].inv();
        let mut best: Option<(usize, R)> = None;
        for (slot, &j) in small.iter().enumerate() {
            if used[slot] {
                continue;
            }
            let dist = (roots[j] - want).norm();
            if best.map_or(true, |(_, d)| dist < d) {
                best = Some((slot, dist));
            }
        }
        let (slot, dist) = best.expect("halves have equal size");
        if dist > pair_tol {
            return Err(HamError::RootPairingFailed {
                detail: format!("nearest reciprocal at distance {:e}", dist),
            });
        }
        used[slot] = true;
        out.push(roots[i]);
    }
    Ok(out)
}

/// Simultaneous root iteration with Newton corrections coupled through
/// pairwise repulsion. Coefficients ascending; leading entry nonzero.
pub fn aberth_ehrlich<R: Real>(coeffs: &[Complex<R>]) -> Result<Vec<Complex<R>>, HamError> {
    let deg = coeffs.len() - 1;
    assert!(deg >= 1);
    assert!(coeffs[deg].norm() > R::zero());
    // initial guesses on a circle, rotated off the real axis
    let radius = initial_radius(coeffs);
    let mut z: Vec<Complex<R>> = (0..deg)
        .map(|j| {
            let angle = R::of(2.0 * std::f64::consts::PI) * R::of_usize(j) / R::of_usize(deg)
                + R::of(0.39);
            Complex::from_polar(radius, angle)
        })
        .collect();
    let tol = R::of(1e-14);
    let max_iter = 400;
    for _ in 0..max_iter {
        let mut shift = R::zero();
        for j in 0..deg {
            let (pv, dv) = horner(coeffs, z[j]);
            if pv.norm() == R::zero() {
                continue;
            }
            let newton = if dv.norm() > R::zero() { pv / dv } else { pv };
            let mut repulse = Complex::new(R::zero(), R::zero());
            for k in 0..deg {
                if k != j {
                    let diff = z[j] - z[k];
                    if diff.norm() > R::zero() {
                        repulse = repulse + diff.inv();
                    }
                }
            }
            let denom = Complex::new(R::one(), R::zero()) - newton * repulse;
            let step = if denom.norm() > R::of(1e-30) { newton / denom } else { newton };
            z[j] = z[j] - step;
            let rel = step.norm() / z[j].norm().max(R::one());
            if rel > shift {
                shift = rel;
            }
        }
        if shift < tol {
            // polish with two uncoupled Newton steps
            for zj in z.iter_mut() {
                for _ in 0..2 {
                    let (pv, dv) = horner(coeffs, *zj);
                    if dv.norm() > R::zero() {
                        *zj = *zj - pv / dv;
                    }
                }
            }
            return Ok(z);
        }
    }
    Err(HamError::RootSolveFailed { degree: deg })
}

fn initial_radius<R: Real>(coeffs: &[Complex<R>]) -> R {
    // Cauchy-style: 1 + max |a_j / a_deg|, tempered toward 1 since the
    // palindromic inputs have all roots near the unit circle
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg].norm();
    let mut m = R::zero();
    for c in &coeffs[..deg] {
        let r = c.norm() / lead;
        if r > m {
            m = r;
        }
    }
    (R::one() + m).powf(R::of(1.0 / 4.0)).max(R::of(1.05))
}

fn horner<R: Real>(coeffs: &[Complex<R>], z: Complex<R>) -> (Complex<R>, Complex<R>) {
    let mut p = Complex::new(R::zero(), R::zero());
    let mut dp = Complex::new(R::zero(), R::zero());
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}
