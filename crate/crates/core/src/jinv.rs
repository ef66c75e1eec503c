// SPDX-License-Identifier: Apache-2.0

//! Numerical `j`-invariant from its `q`-expansion, used only as a floating
//! cross-check on class equality of grids.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::Int;

pub const DEFAULT_TERMS: usize = 40;
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

/// Exact coefficients `c(-1), c(0), c(1), …` of `j = Σ c(n) qⁿ`, computed as
/// `E₄³ / Δ` with `Δ = q ∏ (1 - qⁿ)²⁴` until `i128` runs out.
pub fn coefficients() -> &'static [Int] {
    static TABLE: OnceLock<Vec<Int>> = OnceLock::new();
    TABLE.get_or_init(|| compute_coefficients(64))
}

fn compute_coefficients(len: usize) -> Vec<Int> {
    // E₄ = 1 + 240 Σ σ₃(n) qⁿ
    let mut e4 = vec![0 as Int; len];
    e4[0] = 1;
    for (n, e) in e4.iter_mut().enumerate().skip(1) {
        let sigma3: Int = (1..=n as Int).filter(|k| n as Int % k == 0).map(|k| k * k * k).sum();
        *e = 240 * sigma3;
    }
    let mul_trunc = |a: &[Int], b: &[Int]| -> Option<Vec<Int>> {
        let mut out = vec![0 as Int; len];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate().take(len - i) {
                out[i + j] = out[i + j].checked_add(x.checked_mul(y)?)?;
            }
        }
        Some(out)
    };
    // ∏ (1 - qⁿ)²⁴ and its inverse series.
    let mut eta24 = vec![0 as Int; len];
    eta24[0] = 1;
    for n in 1..len {
        for _ in 0..24 {
            for k in (n..len).rev() {
                eta24[k] -= eta24[k - n];
            }
        }
    }
    let mut out = vec![0 as Int; len + 1];
    let e4_sq = mul_trunc(&e4, &e4).expect("E4² fits");
    let e4_cube = mul_trunc(&e4_sq, &e4).expect("E4³ fits");
    // inv[k] with Σ eta24[i]·inv[k-i] = δ_k0
    let mut inv = vec![0 as Int; len];
    let mut valid = len;
    'outer: for k in 0..len {
        let mut s: Int = if k == 0 { 1 } else { 0 };
        for i in 1..=k {
            match eta24[i].checked_mul(inv[k - i]).and_then(|t| s.checked_sub(t)) {
                Some(v) => s = v,
                None => {
                    valid = k;
                    break 'outer;
                }
            }
        }
        inv[k] = s;
    }
    // j·q = E₄³ · inv, so c(n-1) is the coefficient of qⁿ.
    let mut count = 0;
    for n in 0..valid {
        let mut s: Int = 0;
        let mut ok = true;
        for i in 0..=n {
            match e4_cube[i].checked_mul(inv[n - i]).and_then(|t| s.checked_add(t)) {
                Some(v) => s = v,
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            break;
        }
        out[n] = s;
        count += 1;
    }
    out.truncate(count);
    out
}

/// Rough size of `c(n)`, used to bound the truncation error.
fn coefficient_growth(n: usize) -> f64 {
    let n = n as f64;
    (4.0 * PI * n.sqrt()).exp() / (2f64.sqrt() * n.powf(0.75))
}

/// The `SL₂(ℤ)` image of `τ` in the standard fundamental domain.
pub fn reduce_tau(mut tau: Complex64) -> Complex64 {
    for _ in 0..10_000 {
        tau.re -= tau.re.round();
        if tau.norm_sqr() < 1.0 - 1e-15 {
            tau = -tau.inv();
        } else {
            break;
        }
    }
    tau
}

/// `j(τ)` from the first `terms` coefficients `c(-1) … c(terms-2)`.
pub fn j_of_tau(tau: Complex64, terms: usize) -> Result<Complex64> {
    let tau = reduce_tau(tau);
    if tau.im <= 0.0 {
        return Err(Error::DegenerateGrid);
    }
    let table = coefficients();
    let q = (Complex64::new(0.0, 2.0 * PI) * tau).exp();
    let q_abs = q.norm();
    let terms = terms.min(table.len());
    let next = terms - 1;
    if terms < 3 || coefficient_growth(next) * q_abs.powi(next as i32) > DEFAULT_TOLERANCE {
        return Err(Error::TooFewTerms { terms, q_abs });
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for &c in table[1..terms].iter().rev() {
        sum = sum * q + c as f64;
    }
    Ok(sum + q.inv())
}

/// `j(ℂ/L)`, evaluated at the normalized `τ` of `L`.
pub fn j_invariant_numeric(grid: &Grid, terms: usize) -> Result<Complex64> {
    let (_, tau) = grid.normalize()?;
    j_of_tau(tau.to_complex(), terms)
}
