// SPDX-License-Identifier: Apache-2.0

//! Checked `i128` helpers and small number-theoretic routines.

use crate::error::{Error, Result};
use crate::Int;

#[inline]
pub fn add(a: Int, b: Int) -> Result<Int> {
    a.checked_add(b).ok_or(Error::Overflow("addition"))
}

#[inline]
pub fn sub(a: Int, b: Int) -> Result<Int> {
    a.checked_sub(b).ok_or(Error::Overflow("subtraction"))
}

#[inline]
pub fn mul(a: Int, b: Int) -> Result<Int> {
    a.checked_mul(b).ok_or(Error::Overflow("multiplication"))
}

#[inline]
pub fn neg(a: Int) -> Result<Int> {
    a.checked_neg().ok_or(Error::Overflow("negation"))
}

/// `a*b + c*d`
#[inline]
pub fn dot(a: Int, b: Int, c: Int, d: Int) -> Result<Int> {
    add(mul(a, b)?, mul(c, d)?)
}

pub fn gcd(a: Int, b: Int) -> Int {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    // gcd(i128::MIN, 0) does not fit; callers never feed that.
    a as Int
}

pub fn gcd3(a: Int, b: Int, c: Int) -> Int {
    gcd(gcd(a, b), c)
}

pub fn lcm(a: Int, b: Int) -> Result<Int> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    mul((a / gcd(a, b)).abs(), b.abs())
}

/// Returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: Int, b: Int) -> (Int, Int, Int) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1, 0);
    let (mut old_t, mut t) = (0, 1);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Floor of the square root of a non-negative integer.
pub fn isqrt(n: Int) -> Int {
    assert!(n >= 0, "isqrt of negative number");
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as Int;
    while x > 0 && x.checked_mul(x).is_none_or(|sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x
}

pub fn is_square(n: Int) -> bool {
    n >= 0 && {
        let r = isqrt(n);
        r * r == n
    }
}

/// Prime factorisation of `|n|` by trial division, as `(p, exponent)` pairs.
pub fn factorize(n: Int) -> Vec<(Int, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p: Int = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_squarefree(n: Int) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
pub fn jacobi(a: Int, n: Int) -> i32 {
    assert!(n > 0 && n % 2 == 1, "jacobi symbol needs odd positive modulus");
    let mut a = a.rem_euclid(n);
    let mut n = n;
    let mut result = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Floor division.
pub fn div_floor(a: Int, b: Int) -> Int {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}
