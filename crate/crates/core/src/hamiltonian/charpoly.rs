//! The characteristic polynomial of the projected one-dimensional operator.
//!
//! For a reduced slope `p`, the operator `D_p g(k) = sum_j (g(k+p_j) +
//! g(k-p_j) - 2 g(k))` has symbol `Q(z) = sum_j (z^{p_j} + z^{-p_j} - 2)`.
//! We store the exact integer coefficients of `A(z) = z^n Q(z) = m P(z)`,
//! where `n = max |p_j|`, `m` counts the entries hitting the max, and `P`
//! is the monic palindromic polynomial whose roots determine `H(p)`.
//! (`P` itself need not have integer coefficients when `m > 1`, e.g. for
//! `p = (3,3,1)`; the scaled form keeps everything exact.)

use crate::lattice::Slope;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    p: Slope,
    n: i64,
    m: usize,
    /// Coefficients of `A(z) = m P(z)`, ascending, length `2n + 1`.
    coeffs: Vec<i64>,
}

/// Expands `z^n Q(z)` exactly and verifies the structural invariants.
pub fn char_poly(p: &Slope) -> CharPoly {
    let n = p.max_abs();
    let m = p.max_abs_count();
    let deg = (2 * n) as usize;
    let mut coeffs = vec![0i64; deg + 1];
    for &pk in p.coords() {
        let a = pk.abs() as usize;
        coeffs[n as usize + a] += 1;
        coeffs[n as usize - a] += 1;
        coeffs[n as usize] -= 2;
    }
    let cp = CharPoly { p: p.clone(), n, m, coeffs };
    debug_assert!(cp.check_invariants().is_ok(), "{:?}", cp.check_invariants());
    cp
}

impl CharPoly {
    pub fn slope(&self) -> &Slope {
        &self.p
    }

    /// `n = max_k |p_k|`.
    pub fn n(&self) -> i64 {
        self.n
    }

    /// `m = #{k : |p_k| = n}`, the leading coefficient of `A`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Coefficients of `A = m P`, ascending. Palindromic, leading entry `m`.
    pub fn scaled_coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Integer coefficients of the monic `P` when `m` divides `A` exactly
    /// (always true for `m = 1`, and for slopes whose entries all share the
    /// maximal absolute value).
    pub fn monic_coeffs(&self) -> Option<Vec<i64>> {
        let m = self.m as i64;
        if self.coeffs.iter().all(|c| c % m == 0) {
            Some(self.coeffs.iter().map(|c| c / m).collect())
        } else {
            None
        }
    }

    /// Divides out the exact double root at `z = 1`, returning the integer
    /// coefficients of `B` with `A = (z - 1)^2 B`. Panics if the division
    /// leaves a remainder, which would contradict the factorization.
    pub fn deflate_unit_root(&self) -> Vec<i64> {
        let b1 = synthetic_div_at_one(&self.coeffs);
        let b2 = synthetic_div_at_one(&b1);
        // B must be palindromic with leading coefficient m
        debug_assert_eq!(b2.last().copied(), Some(self.m as i64));
        debug_assert!((0..b2.len()).all(|j| b2[j] == b2[b2.len() - 1 - j]));
        b2
    }

    /// Structural checks: palindrome, double root at 1, and the curvature
    /// identity `A''(1) / 2 = |p|^2` in exact integers.
    pub fn check_invariants(&self) -> Result<(), String> {
        let c = &self.coeffs;
        let deg = c.len() - 1;
        if c[deg] != self.m as i64 {
            return Err(format!("leading coefficient {} != m = {}", c[deg], self.m));
        }
        for j in 0..=deg {
            if c[j] != c[deg - j] {
                return Err(format!("not palindromic at {}", j));
            }
        }
        let a1: i64 = c.iter().sum();
        if a1 != 0 {
            return Err(format!("A(1) = {} != 0", a1));
        }
        let da1: i64 = c.iter().enumerate().map(|(j, &cj)| j as i64 * cj).sum();
        if da1 != 0 {
            return Err(format!("A'(1) = {} != 0", da1));
        }
        let dda1: i64 = c
            .iter()
            .enumerate()
            .map(|(j, &cj)| (j as i64) * (j as i64 - 1) * cj)
            .sum();
        if dda1 != 2 * self.p.norm_sq() {
            return Err(format!("A''(1)/2 = {} != |p|^2 = {}", dda1 / 2, self.p.norm_sq()));
        }
        // multiplicity exactly 2: B(1) != 0
        let b = synthetic_div_at_one(&synthetic_div_at_one(c));
        let b1: i64 = b.iter().sum();
        if b1 == 0 {
            return Err("root at 1 has multiplicity > 2".into());
        }
        Ok(())
    }
}

/// Exact synthetic division by `(z - 1)`; panics on a nonzero remainder.
fn synthetic_div_at_one(coeffs: &[i64]) -> Vec<i64> {
    let deg = coeffs.len() - 1;
    let mut out = vec![0i64; deg];
    let mut carry = 0i64;
    for j in (0..deg).rev() {
        carry += coeffs[j + 1];
        out[j] = carry;
    }
    assert_eq!(carry + coeffs[0], 0, "remainder after division by (z-1)");
    out
}
