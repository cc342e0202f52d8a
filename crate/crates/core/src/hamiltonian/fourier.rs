//! Fourier coefficients of `S(theta) = log(1 - (1/d) sum_j cos theta_j)`
//! by the exact combinatorial walk series
//!
//! ```text
//!   S^(q) = - sum_{k >= 1} N_k(q) / (k (2d)^k),
//! ```
//!
//! where `N_k(q)` counts k-step nearest-neighbor walks from 0 to q. Every
//! coefficient is real and non-positive, and the truncation tail is
//! controlled analytically by the local limit bound
//! `N_k(q) / (2d)^k <= 2 (d / (2 pi k))^{d/2}`.
//!
//! The step probabilities `N_k(q) / (2d)^k` are evaluated exactly:
//! one-dimensional walk weights by a stable ratio recurrence; two
//! dimensions as a product of two independent one-dimensional walks in the
//! rotated coordinates `(q_1 + q_2, q_1 - q_2)`; three and four dimensions
//! by binomially mixing a two-dimensional block with the remaining axes.
//! All of these are algebraic identities for the same multinomial
//! splitting, not approximations.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::error::HamError;
use crate::Real;

/// Depth cap for the series.
const DEPTH_CAP: usize = 1 << 27;
/// Probability mass below this is outside the active mixing window.
const WINDOW_TINY: f64 = 1e-28;

/// Returns `(value, err)` with `value = S^(q)` and `err` a bound on the
/// truncation and accumulation error.
pub fn fourier_coeff<R: Real>(q: &[i64], tol: R) -> Result<(R, R), HamError> {
    let d = q.len();
    assert!((1..=4).contains(&d), "dimension {} out of range", d);
    assert!(tol > R::zero());
    let k_max = depth_for(d, tol)?;
    let mut acc = R::zero();
    for_each_step_prob(q, k_max, &mut |k, pk| {
        if k >= 1 {
            acc += pk / R::of_usize(k);
        }
    });
    let err = tail_bound::<R>(d, k_max) + R::epsilon() * R::of_usize(k_max.max(1000));
    Ok((-acc, err))
}

/// Smallest depth whose analytic tail is below `tol`.
fn depth_for<R: Real>(d: usize, tol: R) -> Result<usize, HamError> {
    let df = d as f64;
    let lead = (4.0 / df) * (df / (2.0 * std::f64::consts::PI)).powf(df / 2.0);
    let k = (lead / tol.to_f64_lossy()).powf(2.0 / df).ceil();
    if !(k.is_finite() && k < DEPTH_CAP as f64) {
        return Err(HamError::ToleranceUnreachable { depth_cap: DEPTH_CAP });
    }
    Ok((k as usize).max(4))
}

/// `sum_{k > K} (1/k) 2 (d/(2 pi k))^{d/2} <= 2 (d/(2 pi))^{d/2} (2/d) K^{-d/2}`.
fn tail_bound<R: Real>(d: usize, k: usize) -> R {
    let df = d as f64;
    let lead = 2.0 * (df / (2.0 * std::f64::consts::PI)).powf(df / 2.0) * (2.0 / df);
    R::of(lead * (k as f64).powf(-df / 2.0))
}

/// Calls `f(k, P_k(q))` for every depth `k = 0..=k_max` with a nonzero
/// step probability `P_k = N_k(q) / (2d)^k`.
pub(crate) fn for_each_step_prob<R: Real>(
    q: &[i64],
    k_max: usize,
    f: &mut impl FnMut(usize, R),
) {
    match q.len() {
        1 => {
            let mut w = Walk1::<R>::new(q[0]);
            while w.k <= k_max {
                f(w.k, w.value);
                w.advance();
            }
        }
        2 => {
            let mut w = Walk2::<R>::new(q[0], q[1]);
            while w.k <= k_max {
                f(w.k, w.value());
                w.advance();
            }
        }
        3 => {
            let wa = walk2_table::<R>(q[0], q[1], k_max);
            let wb = walk1_table::<R>(q[2], k_max);
            mix(&wa, &wb, R::of(2.0 / 3.0), k_max, f);
        }
        4 => {
            let wa = walk2_table::<R>(q[0], q[1], k_max);
            let wb = walk2_table::<R>(q[2], q[3], k_max);
            mix(&wa, &wb, R::of(0.5), k_max, f);
        }
        _ => unreachable!(),
    }
}

/// One-dimensional walk weight `w_k(t) = C(k, (k+t)/2) / 2^k` advanced in
/// steps of two by an exact ratio recurrence.
struct Walk1<R: Real> {
    k: usize,
    t: i64,
    value: R,
}

impl<R: Real> Walk1<R> {
    fn new(t: i64) -> Walk1<R> {
        let t = t.abs();
        Walk1 { k: t as usize, t, value: R::of(0.5).powi(t as i32) }
    }

    fn advance(&mut self) {
        let k = self.k as f64;
        let t = self.t as f64;
        self.value *= R::of((k + 1.0) * (k + 2.0) / ((k + 2.0) * (k + 2.0) - t * t));
        self.k += 2;
    }
}

/// Two-dimensional step probability as a product of independent diagonal
/// walks, advanced in lockstep from the first depth where both are nonzero.
struct Walk2<R: Real> {
    k: usize,
    a: Walk1<R>,
    b: Walk1<R>,
}

impl<R: Real> Walk2<R> {
    fn new(q1: i64, q2: i64) -> Walk2<R> {
        let mut a = Walk1::new(q1 + q2);
        let mut b = Walk1::new(q1 - q2);
        // |q1+q2| and |q1-q2| share parity; bring both to the later start
        while a.k < b.k {
            a.advance();
        }
        while b.k < a.k {
            b.advance();
        }
        Walk2 { k: a.k, a, b }
    }

    fn value(&self) -> R {
        self.a.value * self.b.value
    }

    fn advance(&mut self) {
        self.a.advance();
        self.b.advance();
        self.k += 2;
    }
}

fn walk1_table<R: Real>(t: i64, k_max: usize) -> Vec<R> {
    let mut out = vec![R::zero(); k_max + 1];
    let mut w = Walk1::<R>::new(t);
    while w.k <= k_max {
        out[w.k] = w.value;
        w.advance();
    }
    out
}

fn walk2_table<R: Real>(q1: i64, q2: i64, k_max: usize) -> Vec<R> {
    let mut out = vec![R::zero(); k_max + 1];
    let mut w = Walk2::<R>::new(q1, q2);
    while w.k <= k_max {
        out[w.k] = w.value();
        w.advance();
    }
    out
}

/// Splits `k` steps between two independent walk blocks with a binomial
/// weight (first block drawn with probability `p` per step) and emits the
/// mixed step probability at each depth. The binomial row is advanced by
/// the Pascal recurrence over an active window; discarded mass is below
/// `WINDOW_TINY` per cell.
fn mix<R: Real>(wa: &[R], wb: &[R], p: R, k_max: usize, f: &mut impl FnMut(usize, R)) {
    let tiny = R::of(WINDOW_TINY);
    let pc = R::one() - p;
    let mut pmf = vec![R::zero(); k_max + 2];
    pmf[0] = R::one();
    let (mut lo, mut hi) = (0usize, 0usize);
    f(0, wa[0] * wb[0]);
    for k in 1..=k_max {
        // in-place binomial update, descending so each cell reads its
        // previous-row value
        let new_hi = (hi + 1).min(k);
        let mut m = new_hi;
        loop {
            let below = if m > 0 { pmf[m - 1] } else { R::zero() };
            pmf[m] = p * below + pc * pmf[m];
            if m == lo {
                break;
            }
            m -= 1;
        }
        hi = new_hi;
        while hi > lo && pmf[hi] < tiny {
            pmf[hi] = R::zero();
            hi -= 1;
        }
        while lo < hi && pmf[lo] < tiny {
            pmf[lo] = R::zero();
            lo += 1;
        }
        let mut t = R::zero();
        for m in lo..=hi {
            if m <= k {
                t += pmf[m] * wa[m] * wb[k - m];
            }
        }
        f(k, t);
    }
}

/// Memoized table of Fourier coefficients for one dimension and tolerance,
/// keyed by the symmetry-canonical form of `q` (absolute coordinates,
/// sorted descending). Values depend only on the key and the tolerance, so
/// concurrent insertion order cannot change any result.
#[derive(Debug)]
pub struct FourierTable<R: Real> {
    d: usize,
    tol: R,
    entries: RwLock<HashMap<Vec<i64>, (R, R)>>,
}

impl<R: Real> FourierTable<R> {
    pub fn new(d: usize, tol: R) -> FourierTable<R> {
        FourierTable { d, tol, entries: RwLock::new(HashMap::new()) }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn tol(&self) -> R {
        self.tol
    }

    pub fn canonical(q: &[i64]) -> Vec<i64> {
        let mut c: Vec<i64> = q.iter().map(|x| x.abs()).collect();
        c.sort_unstable_by(|a, b| b.cmp(a));
        c
    }

    pub fn coeff(&self, q: &[i64]) -> Result<(R, R), HamError> {
        assert_eq!(q.len(), self.d);
        let key = Self::canonical(q);
        if let Some(&hit) = self.entries.read().expect("table poisoned").get(&key) {
            return Ok(hit);
        }
        let computed = fourier_coeff::<R>(&key, self.tol)?;
        let mut w = self.entries.write().expect("table poisoned");
        Ok(*w.entry(key).or_insert(computed))
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("table poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
