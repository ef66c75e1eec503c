// SPDX-License-Identifier: Apache-2.0

//! Independent reference implementations used as test oracles. Nothing here
//! calls into the library's arithmetic.

#![allow(dead_code)]

use rand::Rng;

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_disc(d: i64) -> bool {
    d < 0 && (d.rem_euclid(4) == 0 || d.rem_euclid(4) == 1)
}

/// Brute-force count of reduced primitive forms: |b| ≤ a ≤ c, b ≥ 0 when
/// |b| = a or a = c.
pub fn h_naive(d: i64) -> usize {
    let mut h = 0;
    let mut a = 1;
    while 3 * a * a <= -d {
        for b in -a + 1..=a {
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a || (c == a && b < 0) {
                continue;
            }
            if gcd(gcd(a, b), c) == 1 {
                h += 1;
            }
        }
        a += 1;
    }
    h
}

/// Kronecker symbol (d/n) for n > 0, by factoring n.
pub fn kronecker(d: i64, mut n: i64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while n > 1 {
        if p * p > n {
            p = n;
        }
        while n % p == 0 {
            n /= p;
            result *= if p == 2 {
                match d.rem_euclid(8) {
                    1 | 7 => 1,
                    3 | 5 => -1,
                    _ => 0,
                }
            } else {
                legendre(d, p)
            };
        }
        p += 1;
    }
    result
}

/// Euler's criterion.
fn legendre(a: i64, p: i64) -> i64 {
    let a = a.rem_euclid(p);
    if a == 0 {
        return 0;
    }
    let (mut base, mut e, mut r) = (a as i128, (p - 1) / 2, 1i128);
    let m = p as i128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    if r == 1 {
        1
    } else {
        -1
    }
}

/// `d = D f²` with `D` fundamental.
pub fn split(d: i64) -> (i64, i64) {
    let mut best = (d, 1);
    let mut f = 2;
    while f * f <= -d {
        if d % (f * f) == 0 {
            let dk = d / (f * f);
            if is_disc(dk) {
                best = (dk, f);
            }
        }
        f += 1;
    }
    best
}

/// Analytic class number formula, extended to orders of conductor `f`.
pub fn h_analytic(d: i64) -> usize {
    let (dk, f) = split(d);
    let n = -dk;
    let s: i64 = (1..n).map(|k| kronecker(dk, k) * k).sum();
    let w = match dk {
        -3 => 6,
        -4 => 4,
        _ => 2,
    };
    let hk = -(w * s) / (2 * n);
    if f == 1 {
        return hk as usize;
    }
    // h(Df²) = h(D) f Π_{p|f} (1 − (D/p)/p) / [𝒪_K* : 𝒪*]
    let mut num = hk * f;
    let mut den = w / 2;
    let mut m = f;
    let mut p = 2;
    while m > 1 {
        if m % p == 0 {
            num *= p - kronecker(dk, p);
            den *= p;
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    assert_eq!(num % den, 0);
    (num / den) as usize
}

/// Textbook reduction by the steps `b ↦ b mod 2a` and `(a,b,c) ↦ (c,−b,a)`.
pub fn reduce(mut f: (i64, i64, i64)) -> (i64, i64, i64) {
    loop {
        let (a, b, c) = f;
        if -a < b && b <= a && a <= c {
            if a == c && b < 0 {
                return (a, -b, c);
            }
            return f;
        }
        if b <= -a || b > a {
            let k = (a - b).div_euclid(2 * a);
            let b2 = b + 2 * k * a;
            let c2 = (b2 * b2 - (b * b - 4 * a * c)) / (4 * a);
            f = (a, b2, c2);
        } else {
            f = (c, -b, a);
        }
    }
}

/// An equivalent form `f·[[x,u],[y,v]]` whose first coefficient is prime to `m`.
fn coprime_first(f: (i64, i64, i64), m: i64) -> (i64, i64, i64) {
    let (a, b, c) = f;
    let ev = |x: i64, y: i64| a * x * x + b * x * y + c * y * y;
    for r in 1..50i64 {
        for x in -r..=r {
            for y in -r..=r {
                if gcd(x, y) != 1 || gcd(ev(x, y), m) != 1 {
                    continue;
                }
                for u in -r..=r {
                    for v in -r..=r {
                        if x * v - u * y == 1 {
                            return (ev(x, y), 2 * a * x * u + b * (x * v + y * u) + 2 * c * y * v, ev(u, v));
                        }
                    }
                }
            }
        }
    }
    panic!("no coprime value found for {f:?}");
}

/// Dirichlet composition of united forms, `B` found by direct search.
pub fn dirichlet(f1: (i64, i64, i64), f2: (i64, i64, i64)) -> (i64, i64, i64) {
    let d = f1.1 * f1.1 - 4 * f1.0 * f1.2;
    let f2 = coprime_first(f2, f1.0);
    let a = f1.0 * f2.0;
    let b = (0..2 * a)
        .find(|&b| (b - f1.1).rem_euclid(2 * f1.0) == 0 && (b - f2.1).rem_euclid(2 * f2.0) == 0 && (b * b - d).rem_euclid(4 * a) == 0)
        .expect("a united coefficient exists");
    reduce((a, b, (b * b - d) / (4 * a)))
}

/// All reduced primitive forms of discriminant d.
pub fn reduced_forms(d: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    let mut a = 1;
    while 3 * a * a <= -d {
        for b in -a + 1..=a {
            let num = b * b - d;
            if num % (4 * a) == 0 {
                let c = num / (4 * a);
                if c >= a && !(c == a && b < 0) && gcd(gcd(a, b), c) == 1 {
                    out.push((a, b, c));
                }
            }
        }
        a += 1;
    }
    out
}

/// A random element of `SL₂(ℤ)` as a word in `T^{±k}` and `S`.
pub fn random_sl2(rng: &mut impl Rng, len: usize) -> [[i64; 2]; 2] {
    let mut m = [[1i64, 0], [0, 1]];
    for _ in 0..len {
        let step = if rng.gen_bool(0.5) {
            [[1, rng.gen_range(-3..=3)], [0, 1]]
        } else {
            [[0, -1], [1, 0]]
        };
        m = [
            [m[0][0] * step[0][0] + m[0][1] * step[1][0], m[0][0] * step[0][1] + m[0][1] * step[1][1]],
            [m[1][0] * step[0][0] + m[1][1] * step[1][0], m[1][0] * step[0][1] + m[1][1] * step[1][1]],
        ];
    }
    m
}

pub fn fundamental_discriminants(limit: i64) -> Vec<i64> {
    (3..=limit).map(|n| -n).filter(|&d| is_disc(d) && split(d).1 == 1).collect()
}
