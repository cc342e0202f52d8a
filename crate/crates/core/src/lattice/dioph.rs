//! The lattice of Diophantine conditions `{q in Z^d : p.q = 0}` and its
//! bounded enumeration.

use super::{dot, Site, Slope};
use crate::error::LatticeError;

/// Default cap on enumerated sites.
pub const ENUMERATION_LIMIT: usize = 10_000_000;

/// An integer basis of the kernel lattice of a slope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiophantineLattice {
    p: Slope,
    basis: Vec<Site>,
}

impl DiophantineLattice {
    pub fn slope(&self) -> &Slope {
        &self.p
    }

    pub fn basis(&self) -> &[Site] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

/// Integer basis of `{q : p.q = 0}` by exact column elimination on the
/// 1 x d matrix `p` (Hermite-normal-form style; no floating point).
pub fn diophantine_basis(p: &Slope) -> DiophantineLattice {
    let d = p.dim();
    // v = p * U with U unimodular; columns of U with v[j] = 0 span the kernel
    let mut v: Vec<i64> = p.coords().to_vec();
    let mut cols: Vec<Vec<i64>> = (0..d)
        .map(|j| (0..d).map(|i| i64::from(i == j)).collect())
        .collect();
    // reduce all entries mod the current minimum; the minimum strictly
    // decreases while two or more entries are nonzero, so this terminates
    loop {
        let nonzero: Vec<usize> = (0..d).filter(|&j| v[j] != 0).collect();
        if nonzero.len() <= 1 {
            break;
        }
        let &pivot = nonzero.iter().min_by_key(|&&j| v[j].abs()).unwrap();
        for &j in &nonzero {
            if j == pivot {
                continue;
            }
            let q = v[j] / v[pivot];
            if q != 0 {
                v[j] -= q * v[pivot];
                let pc = cols[pivot].clone();
                for (c, pcv) in cols[j].iter_mut().zip(pc) {
                    *c -= q * pcv;
                }
            }
        }
    }
    let mut basis: Vec<Site> = (0..d).filter(|&j| v[j] == 0).map(|j| cols[j].clone()).collect();
    for b in &mut basis {
        debug_assert_eq!(dot(p.coords(), b), 0);
        // canonical sign: first nonzero coordinate positive
        if let Some(first) = b.iter().find(|&&x| x != 0) {
            if *first < 0 {
                for x in b.iter_mut() {
                    *x = -*x;
                }
            }
        }
    }
    basis.sort_unstable();
    DiophantineLattice { p: p.clone(), basis }
}

/// All `q` in the lattice with Euclidean `|q| <= r`, zero included, each
/// exactly once. Enumerates bounded integer combinations of the basis with
/// coefficient bounds from the basis Gram matrix, then filters by `|q| <= r`.
pub fn enumerate_lattice(
    lat: &DiophantineLattice,
    r: f64,
    limit: usize,
) -> Result<Vec<Site>, LatticeError> {
    assert!(r >= 0.0, "radius must be nonnegative");
    let d = lat.p.dim();
    let rank = lat.rank();
    if rank == 0 || r == 0.0 {
        return Ok(vec![vec![0; d]]);
    }
    let bounds = coefficient_bounds(&lat.basis, r);
    let mut count: usize = 1;
    for &b in &bounds {
        count = count
            .checked_mul(2 * b as usize + 1)
            .ok_or(LatticeError::CapacityExceeded { requested: usize::MAX, limit })?;
    }
    if count > limit {
        return Err(LatticeError::CapacityExceeded { requested: count, limit });
    }

    let r2 = r * r;
    let mut out = Vec::new();
    let mut coeff = vec![0i64; rank];
    enumerate_rec(lat, &bounds, r2, 0, &mut coeff, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn enumerate_rec(
    lat: &DiophantineLattice,
    bounds: &[i64],
    r2: f64,
    k: usize,
    coeff: &mut Vec<i64>,
    out: &mut Vec<Site>,
) {
    if k == bounds.len() {
        let d = lat.p.dim();
        let mut q = vec![0i64; d];
        for (c, b) in coeff.iter().zip(&lat.basis) {
            for i in 0..d {
                q[i] += c * b[i];
            }
        }
        let n2: i64 = q.iter().map(|x| x * x).sum();
        if (n2 as f64) <= r2 {
            out.push(q);
        }
        return;
    }
    for c in -bounds[k]..=bounds[k] {
        coeff[k] = c;
        enumerate_rec(lat, bounds, r2, k + 1, coeff, out);
    }
}

/// For q = sum c_i b_i with |q| <= r, Cauchy-Schwarz against the inverse
/// Gram matrix gives |c_i| <= sqrt((G^-1)_ii) * r.
fn coefficient_bounds(basis: &[Site], r: f64) -> Vec<i64> {
    let rank = basis.len();
    let mut g = vec![vec![0f64; rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            g[i][j] = dot(&basis[i], &basis[j]) as f64;
        }
    }
    let ginv_diag = match rank {
        1 => vec![1.0 / g[0][0]],
        2 => {
            let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
            vec![g[1][1] / det, g[0][0] / det]
        }
        3 => {
            let det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
                - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
                + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
            vec![
                (g[1][1] * g[2][2] - g[1][2] * g[2][1]) / det,
                (g[0][0] * g[2][2] - g[0][2] * g[2][0]) / det,
                (g[0][0] * g[1][1] - g[0][1] * g[1][0]) / det,
            ]
        }
        _ => unreachable!("rank <= 3 for d <= 4"),
    };
    ginv_diag
        .iter()
        .map(|&gii| (gii.max(0.0).sqrt() * r).floor() as i64 + 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeBox;

    fn brute_force(p: &Slope, r: f64, inf_bound: i64) -> Vec<Site> {
        let mut out: Vec<Site> = LatticeBox::cube(p.dim(), inf_bound)
            .sites()
            .filter(|q| dot(p.coords(), q) == 0)
            .filter(|q| {
                let n2: i64 = q.iter().map(|x| x * x).sum();
                (n2 as f64) <= r * r
            })
            .collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn basis_axis_2d() {
        let p = Slope::new(vec![1, 0]).unwrap();
        let lat = diophantine_basis(&p);
        assert_eq!(lat.basis(), &[vec![0, 1]]);
        assert_eq!(lat.rank(), 1);
    }

    #[test]
    fn basis_21() {
        let p = Slope::new(vec![2, 1]).unwrap();
        let lat = diophantine_basis(&p);
        assert_eq!(lat.basis(), &[vec![1, -2]]);
    }

    #[test]
    fn basis_111_spans_kernel() {
        let p = Slope::new(vec![1, 1, 1]).unwrap();
        let lat = diophantine_basis(&p);
        assert_eq!(lat.rank(), 2);
        // exhaustive filter over |q|_inf <= 5: every kernel vector must be an
        // integer combination of the basis
        let b0 = &lat.basis()[0];
        let b1 = &lat.basis()[1];
        for q in LatticeBox::cube(3, 5).sites() {
            if dot(p.coords(), &q) != 0 {
                continue;
            }
            // solve c0 b0 + c1 b1 = q over the integers by brute force
            let found = (-20..=20).any(|c0| {
                (-20..=20).any(|c1| {
                    (0..3).all(|i| c0 * b0[i] + c1 * b1[i] == q[i])
                })
            });
            assert!(found, "{:?} not in integer span", q);
        }
    }

    #[test]
    fn enumerate_axis() {
        let p = Slope::new(vec![1, 0]).unwrap();
        let lat = diophantine_basis(&p);
        let pts = enumerate_lattice(&lat, 2.5, ENUMERATION_LIMIT).unwrap();
        assert_eq!(
            pts,
            vec![vec![0, -2], vec![0, -1], vec![0, 0], vec![0, 1], vec![0, 2]]
        );
    }

    #[test]
    fn enumerate_21() {
        let p = Slope::new(vec![2, 1]).unwrap();
        let lat = diophantine_basis(&p);
        let pts = enumerate_lattice(&lat, 3.0, ENUMERATION_LIMIT).unwrap();
        assert_eq!(pts, vec![vec![-1, 2], vec![0, 0], vec![1, -2]]);
    }

    #[test]
    fn enumerate_radius_zero() {
        for coords in [vec![3, -2], vec![1, 1]] {
            let p = Slope::new(coords).unwrap();
            let lat = diophantine_basis(&p);
            assert_eq!(enumerate_lattice(&lat, 0.0, 100).unwrap(), vec![vec![0, 0]]);
        }
    }

    #[test]
    fn enumerate_capacity() {
        let p = Slope::new(vec![1, 0, 0]).unwrap();
        let lat = diophantine_basis(&p);
        assert!(matches!(
            enumerate_lattice(&lat, 100.0, 10),
            Err(LatticeError::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn enumerate_matches_brute_force() {
        // all slopes with max |p_k| <= 5, d <= 3, r <= 10
        for d in [2usize, 3] {
            let coords_iter: Vec<Vec<i64>> = LatticeBox::cube(d, 5).sites().collect();
            for coords in coords_iter {
                let Ok(p) = Slope::reduce(&coords) else { continue };
                if p.coords() != coords.as_slice() {
                    continue; // only reduced representatives
                }
                let lat = diophantine_basis(&p);
                for r in [1.0, 3.7, 10.0] {
                    let pts = enumerate_lattice(&lat, r, ENUMERATION_LIMIT).unwrap();
                    let brute = brute_force(&p, r, 11);
                    assert_eq!(pts, brute, "p = {:?}, r = {}", p.coords(), r);
                    for q in &pts {
                        assert_eq!(dot(p.coords(), q), 0);
                    }
                }
            }
        }
    }
}
