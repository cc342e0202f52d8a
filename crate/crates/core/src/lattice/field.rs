//! Dense scalar fields on lattice boxes and the discrete Laplacian.

use super::{LatticeBox, Site};
use crate::error::LatticeError;
use crate::Real;

/// A dense real-valued function on a lattice box. Sites outside the box
/// read a configurable exterior value (0 by default).
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField<R: Real> {
    bbox: LatticeBox,
    values: Vec<R>,
    exterior: R,
}

impl<R: Real> ScalarField<R> {
    pub fn zeros(bbox: LatticeBox) -> ScalarField<R> {
        let n = bbox.len();
        ScalarField { bbox, values: vec![R::zero(); n], exterior: R::zero() }
    }

    pub fn constant(bbox: LatticeBox, c: R) -> ScalarField<R> {
        let n = bbox.len();
        ScalarField { bbox, values: vec![c; n], exterior: R::zero() }
    }

    pub fn from_values(
        bbox: LatticeBox,
        values: Vec<R>,
        exterior: R,
    ) -> Result<ScalarField<R>, LatticeError> {
        if values.len() != bbox.len() || values.iter().any(|v| !v.is_finite()) {
            return Err(LatticeError::BadBox);
        }
        Ok(ScalarField { bbox, values, exterior })
    }

    pub fn bbox(&self) -> &LatticeBox {
        &self.bbox
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [R] {
        &mut self.values
    }

    pub fn exterior(&self) -> R {
        self.exterior
    }

    pub fn set_exterior(&mut self, v: R) {
        self.exterior = v;
    }

    /// Value at a site, falling back to the exterior value outside the box.
    pub fn get(&self, x: &[i64]) -> R {
        match self.bbox.index_of(x) {
            Some(i) => self.values[i],
            None => self.exterior,
        }
    }

    pub fn set(&mut self, x: &[i64], v: R) {
        let i = self.bbox.index_of(x).expect("site inside box");
        self.values[i] = v;
    }

    /// Sites with strictly positive value.
    pub fn support(&self) -> super::SiteSet {
        self.bbox
            .sites()
            .filter(|x| self.get(x) > R::zero())
            .collect()
    }

    /// Max over neighbor pairs of |u(x) - u(y)|, the discrete Lipschitz
    /// constant. Pairs crossing the box frame read the exterior value.
    pub fn lipschitz(&self) -> R {
        let d = self.bbox.dim();
        let mut best = R::zero();
        for x in self.bbox.sites() {
            let ux = self.get(&x);
            let mut y = x.clone();
            for k in 0..d {
                y[k] = x[k] + 1;
                let diff = (ux - self.get(&y)).abs();
                if diff > best {
                    best = diff;
                }
                y[k] = x[k];
            }
        }
        best
    }
}

/// Unnormalized graph Laplacian `sum_i (u(x+e_i) + u(x-e_i) - 2 u(x))`.
///
/// Neighbor pairs are summed per axis, and the per-axis pair sums are
/// combined in value order; this makes the result exactly invariant under
/// coordinate permutations and sign flips of the stencil.
pub fn discrete_laplacian<R: Real>(u: &ScalarField<R>, x: &[i64]) -> Result<R, LatticeError> {
    if !u.bbox().contains(x) {
        return Err(LatticeError::OutOfBox { site: x.to_vec() });
    }
    let d = u.bbox().dim();
    let mut pair_sums = [R::zero(); 4];
    let mut site = x.to_vec();
    for k in 0..d {
        site[k] = x[k] + 1;
        let a = u.get(&site);
        site[k] = x[k] - 1;
        let b = u.get(&site);
        site[k] = x[k];
        pair_sums[k] = a + b;
    }
    Ok(symmetric_sum(&mut pair_sums[..d]) - R::of_usize(2 * d) * u.get(x))
}

/// Sums values in sorted order so the result is a symmetric function of its
/// arguments down to the last bit.
pub(crate) fn symmetric_sum<R: Real>(vals: &mut [R]) -> R {
    vals.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite field values"));
    let mut acc = R::zero();
    for v in vals.iter() {
        acc += *v;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeBox;

    #[test]
    fn laplacian_of_constant_is_zero() {
        let f: ScalarField<f64> = ScalarField::constant(LatticeBox::cube(2, 3), 5.0);
        // interior site: exterior (0) not visible
        assert_eq!(discrete_laplacian(&f, &[1, -1]).unwrap(), 0.0);
    }

    #[test]
    fn laplacian_of_linear_is_zero() {
        let b = LatticeBox::cube(3, 3);
        let mut f: ScalarField<f64> = ScalarField::zeros(b.clone());
        for x in b.sites() {
            f.set(&x, x[0] as f64);
        }
        assert_eq!(discrete_laplacian(&f, &[0, 1, -2]).unwrap(), 0.0);
    }

    #[test]
    fn laplacian_of_indicator() {
        let b = LatticeBox::cube(2, 2);
        let mut f: ScalarField<f64> = ScalarField::zeros(b);
        f.set(&[0, 0], 1.0);
        assert_eq!(discrete_laplacian(&f, &[0, 0]).unwrap(), -4.0);
        assert_eq!(discrete_laplacian(&f, &[1, 0]).unwrap(), 1.0);
        assert!(discrete_laplacian(&f, &[3, 0]).is_err());
    }

    #[test]
    fn laplacian_reads_exterior_value() {
        let b = LatticeBox::cube(1, 1);
        let mut f: ScalarField<f64> = ScalarField::zeros(b);
        f.set_exterior(7.0);
        // at the frame site 1, neighbor 2 reads exterior 7
        f.set(&[0], 1.0);
        f.set(&[1], 2.0);
        assert_eq!(discrete_laplacian(&f, &[1]).unwrap(), 7.0 + 1.0 - 4.0);
    }

    #[test]
    fn laplacian_linear_in_u() {
        let b = LatticeBox::cube(2, 2);
        let mut f: ScalarField<f64> = ScalarField::zeros(b.clone());
        let mut g: ScalarField<f64> = ScalarField::zeros(b.clone());
        let mut h: ScalarField<f64> = ScalarField::zeros(b.clone());
        for (i, x) in b.sites().enumerate() {
            let fv = (i as f64 * 0.37).sin();
            let gv = (i as f64 * 1.11).cos();
            f.set(&x, fv);
            g.set(&x, gv);
            h.set(&x, 2.0 * fv - 3.0 * gv);
        }
        let x = [0, 1];
        let lf = discrete_laplacian(&f, &x).unwrap();
        let lg = discrete_laplacian(&g, &x).unwrap();
        let lh = discrete_laplacian(&h, &x).unwrap();
        assert!((lh - (2.0 * lf - 3.0 * lg)).abs() < 1e-12);
    }

    #[test]
    fn laplacian_symmetry_under_octahedral_maps() {
        // permute and flip coordinates of a random-ish field; the laplacian
        // at mapped sites must match bit for bit
        let b = LatticeBox::cube(3, 2);
        let mut f: ScalarField<f64> = ScalarField::zeros(b.clone());
        for x in b.sites() {
            let v = ((x[0] * 3 + x[1] * 7 + x[2] * 11) as f64 * 0.173).sin();
            f.set(&x, v);
        }
        // map (x,y,z) -> (z,-x,y)
        let mut g: ScalarField<f64> = ScalarField::zeros(b.clone());
        for x in b.sites() {
            let pre = vec![-x[1], x[2], x[0]];
            g.set(&x, f.get(&pre));
        }
        let x = [0, 0, 1];
        let pre = [0, 1, 0];
        assert_eq!(
            discrete_laplacian(&g, &x).unwrap(),
            discrete_laplacian(&f, &pre).unwrap()
        );
    }
}
