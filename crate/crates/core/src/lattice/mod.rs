//! Integer-lattice primitives: slopes, boxes, site sets, and boundary
//! operators on `Z^d` with nearest-neighbor edges.
//!
//! All lattice coordinates and lattice algebra are exact `i64`; only field
//! values are floating point.

mod dioph;
mod field;

pub use dioph::{diophantine_basis, enumerate_lattice, DiophantineLattice};
pub use field::{discrete_laplacian, ScalarField};

use crate::error::LatticeError;

/// A lattice site. The length of the vector is the dimension.
pub type Site = Vec<i64>;

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A gcd-reduced nonzero integer direction, the argument of every
/// Hamiltonian computation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    coords: Vec<i64>,
}

impl Slope {
    /// Divides out the gcd of the absolute values, preserving signs.
    pub fn reduce(v: &[i64]) -> Result<Slope, LatticeError> {
        let g = v.iter().fold(0, |acc, &x| gcd(acc, x));
        if g == 0 {
            return Err(LatticeError::ZeroVector);
        }
        Ok(Slope { coords: v.iter().map(|&x| x / g).collect() })
    }

    /// Accepts an already-reduced vector; rejects anything else.
    pub fn new(v: Vec<i64>) -> Result<Slope, LatticeError> {
        let g = v.iter().fold(0, |acc, &x| gcd(acc, x));
        if g == 0 {
            return Err(LatticeError::ZeroVector);
        }
        assert_eq!(g, 1, "slope {:?} is not gcd-reduced", v);
        Ok(Slope { coords: v })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// `n = max_k |p_k|`, the largest step of the projected walk.
    pub fn max_abs(&self) -> i64 {
        self.coords.iter().map(|x| x.abs()).max().unwrap()
    }

    /// `m = #{k : |p_k| = n}`, the multiplicity of the largest step.
    pub fn max_abs_count(&self) -> usize {
        let n = self.max_abs();
        self.coords.iter().filter(|x| x.abs() == n).count()
    }

    pub fn norm_sq(&self) -> i64 {
        self.coords.iter().map(|x| x * x).sum()
    }

    pub fn norm<R: crate::Real>(&self) -> R {
        R::of_i64(self.norm_sq()).sqrt()
    }

    /// Orbit representative under coordinate permutations and sign flips:
    /// absolute values sorted descending. H is exactly invariant on orbits.
    pub fn orbit_rep(&self) -> Slope {
        let mut c: Vec<i64> = self.coords.iter().map(|x| x.abs()).collect();
        c.sort_unstable_by(|a, b| b.cmp(a));
        Slope { coords: c }
    }
}

impl std::fmt::Display for Slope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An axis-aligned box of lattice sites with inclusive corners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBox {
    lo: Vec<i64>,
    hi: Vec<i64>,
}

impl LatticeBox {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<LatticeBox, LatticeError> {
        if lo.len() != hi.len() || lo.is_empty() || lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(LatticeError::BadBox);
        }
        let b = LatticeBox { lo, hi };
        // site count must fit in machine addressing
        let mut count: usize = 1;
        for k in 0..b.dim() {
            let side = (b.hi[k] - b.lo[k] + 1) as u64;
            count = count
                .checked_mul(usize::try_from(side).map_err(|_| LatticeError::BadBox)?)
                .ok_or(LatticeError::BadBox)?;
        }
        Ok(b)
    }

    /// Cube `{|x|_inf <= r}`.
    pub fn cube(d: usize, r: i64) -> LatticeBox {
        LatticeBox::new(vec![-r; d], vec![r; d]).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[i64] {
        &self.lo
    }

    pub fn hi(&self) -> &[i64] {
        &self.hi
    }

    pub fn side(&self, k: usize) -> usize {
        (self.hi[k] - self.lo[k] + 1) as usize
    }

    pub fn len(&self) -> usize {
        (0..self.dim()).map(|k| self.side(k)).product()
    }

    pub fn is_empty(&self) -> bool {
        false // corners are inclusive
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        x.len() == self.dim()
            && x.iter().zip(self.lo.iter().zip(&self.hi)).all(|(v, (a, b))| a <= v && v <= b)
    }

    /// Row-major strides, last axis fastest.
    pub fn strides(&self) -> Vec<usize> {
        let d = self.dim();
        let mut s = vec![1usize; d];
        for k in (0..d.saturating_sub(1)).rev() {
            s[k] = s[k + 1] * self.side(k + 1);
        }
        s
    }

    pub fn index_of(&self, x: &[i64]) -> Option<usize> {
        if !self.contains(x) {
            return None;
        }
        let s = self.strides();
        let mut idx = 0usize;
        for k in 0..self.dim() {
            idx += ((x[k] - self.lo[k]) as usize) * s[k];
        }
        Some(idx)
    }

    pub fn site_at(&self, mut idx: usize) -> Site {
        let s = self.strides();
        let mut x = vec![0i64; self.dim()];
        for k in 0..self.dim() {
            x[k] = self.lo[k] + (idx / s[k]) as i64;
            idx %= s[k];
        }
        x
    }

    /// True when `x` lies on the outermost layer of the box.
    pub fn on_frame(&self, x: &[i64]) -> bool {
        self.contains(x)
            && x.iter().zip(self.lo.iter().zip(&self.hi)).any(|(v, (a, b))| v == a || v == b)
    }

    pub fn inflate(&self, margin: i64) -> LatticeBox {
        LatticeBox::new(
            self.lo.iter().map(|a| a - margin).collect(),
            self.hi.iter().map(|b| b + margin).collect(),
        )
        .unwrap()
    }

    pub fn sites(&self) -> impl Iterator<Item = Site> + '_ {
        (0..self.len()).map(move |i| self.site_at(i))
    }
}

/// A sorted, deduplicated set of lattice sites.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SiteSet {
    sites: Vec<Site>,
}

impl SiteSet {
    pub fn new(mut sites: Vec<Site>) -> SiteSet {
        sites.sort_unstable();
        sites.dedup();
        SiteSet { sites }
    }

    pub fn empty() -> SiteSet {
        SiteSet { sites: Vec::new() }
    }

    pub fn singleton(x: Site) -> SiteSet {
        SiteSet { sites: vec![x] }
    }

    /// Euclidean lattice ball `{|x| <= r}`.
    pub fn ball(d: usize, r: f64) -> SiteSet {
        let rr = r.max(0.0);
        let ri = rr.floor() as i64;
        let mut sites = Vec::new();
        for x in LatticeBox::cube(d, ri).sites() {
            let n2: i64 = x.iter().map(|v| v * v).sum();
            if (n2 as f64) <= rr * rr {
                sites.push(x);
            }
        }
        SiteSet { sites }
    }

    /// Lattice points of the polytope `{a_i . x <= b_i}` clipped to `bound`.
    pub fn polytope(halfspaces: &[(Vec<i64>, i64)], bound: &LatticeBox) -> SiteSet {
        let sites = bound
            .sites()
            .filter(|x| halfspaces.iter().all(|(a, b)| dot(a, x) <= *b))
            .collect();
        SiteSet { sites }
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.sites.binary_search_by(|s| s.as_slice().cmp(x)).is_ok()
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Site> {
        self.sites.iter()
    }

    pub fn sites(&self) -> &[Site] {
        &self.sites
    }

    /// Smallest box containing the set.
    pub fn bounding_box(&self) -> Option<LatticeBox> {
        let first = self.sites.first()?;
        let d = first.len();
        let mut lo = first.clone();
        let mut hi = first.clone();
        for s in &self.sites {
            for k in 0..d {
                lo[k] = lo[k].min(s[k]);
                hi[k] = hi[k].max(s[k]);
            }
        }
        LatticeBox::new(lo, hi).ok()
    }
}

impl FromIterator<Site> for SiteSet {
    fn from_iter<T: IntoIterator<Item = Site>>(iter: T) -> Self {
        SiteSet::new(iter.into_iter().collect())
    }
}

/// Outer boundary `{y not in X : dist(y, X) = 1}` and inner boundary
/// `{x in X : dist(x, complement) = 1}`.
pub fn boundary_sets(x: &SiteSet) -> (SiteSet, SiteSet) {
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    for s in x.iter() {
        let d = s.len();
        let mut is_inner = false;
        for k in 0..d {
            for dir in [-1i64, 1] {
                let mut y = s.clone();
                y[k] += dir;
                if !x.contains(&y) {
                    is_inner = true;
                    outer.push(y);
                }
            }
        }
        if is_inner {
            inner.push(s.clone());
        }
    }
    (SiteSet::new(outer), SiteSet::new(inner))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_slope_examples() {
        assert_eq!(Slope::reduce(&[2, 4]).unwrap().coords(), &[1, 2]);
        assert_eq!(Slope::reduce(&[1, 0, 0]).unwrap().coords(), &[1, 0, 0]);
        assert_eq!(Slope::reduce(&[-6, 9]).unwrap().coords(), &[-2, 3]);
        assert_eq!(Slope::reduce(&[0, 0]), Err(LatticeError::ZeroVector));
    }

    #[test]
    fn slope_accessors() {
        let p = Slope::new(vec![3, -3, 1]).unwrap();
        assert_eq!(p.max_abs(), 3);
        assert_eq!(p.max_abs_count(), 2);
        assert_eq!(p.norm_sq(), 19);
        assert_eq!(p.orbit_rep().coords(), &[3, 3, 1]);
    }

    #[test]
    fn box_indexing_roundtrip() {
        let b = LatticeBox::new(vec![-2, 0, 1], vec![1, 3, 2]).unwrap();
        assert_eq!(b.len(), 4 * 4 * 2);
        for i in 0..b.len() {
            let x = b.site_at(i);
            assert_eq!(b.index_of(&x), Some(i));
        }
        assert_eq!(b.index_of(&[2, 0, 1]), None);
    }

    #[test]
    fn boundary_singleton_2d() {
        let x = SiteSet::singleton(vec![0, 0]);
        let (outer, inner) = boundary_sets(&x);
        assert_eq!(
            outer,
            SiteSet::new(vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]])
        );
        assert_eq!(inner, x);
    }

    #[test]
    fn boundary_interval_1d() {
        let x = SiteSet::new((0..=3).map(|k| vec![k]).collect());
        let (outer, inner) = boundary_sets(&x);
        assert_eq!(outer, SiteSet::new(vec![vec![-1], vec![4]]));
        assert_eq!(inner, SiteSet::new(vec![vec![0], vec![3]]));
    }

    #[test]
    fn boundary_block_2d() {
        // 3x3 block: 8 perimeter sites inside, 12 outside
        let x = SiteSet::new(
            (-1..=1).flat_map(|a| (-1..=1).map(move |b| vec![a, b])).collect(),
        );
        let (outer, inner) = boundary_sets(&x);
        assert_eq!(inner.len(), 8);
        assert_eq!(outer.len(), 12);
        for s in inner.iter() {
            assert!(x.contains(s));
        }
        for s in outer.iter() {
            assert!(!x.contains(s));
        }
    }

    #[test]
    fn boundary_complement_consistency() {
        // outer of the complement (within a big box) reproduces inner of X
        // away from the box frame
        let x = SiteSet::new(vec![vec![0, 0], vec![1, 0], vec![1, 1]]);
        let frame = LatticeBox::cube(2, 4);
        let complement: SiteSet = frame.sites().filter(|s| !x.contains(s)).collect();
        let (outer_c, _) = boundary_sets(&complement);
        let (_, inner_x) = boundary_sets(&x);
        let inner_from_complement: SiteSet =
            outer_c.iter().filter(|s| frame.contains(s)).cloned().collect();
        assert_eq!(inner_from_complement, inner_x);
    }

    #[test]
    fn ball_is_symmetric() {
        let b = SiteSet::ball(2, 2.5);
        for s in b.iter() {
            assert!(b.contains(&vec![-s[0], s[1]]));
            assert!(b.contains(&vec![s[1], s[0]]));
        }
        assert!(b.contains(&[2, 1])); // |x|^2 = 5 <= 6.25
        assert!(!b.contains(&[2, 2])); // 8 > 6.25
    }
}
