// SPDX-License-Identifier: Apache-2.0

//! Full-rank sublattices of `ℚ²` in Hermite normal form.
//!
//! A lattice is stored as the rows `(a, b)` and `(0, c)` divided by a common
//! denominator `den`, with `a, c > 0`, `0 ≤ b < c`, `den > 0` and
//! `gcd(den, a, b, c) = 1`. Two lattices are equal iff their stored data is.

use crate::arith::{dot, ext_gcd, gcd, gcd3, lcm, mul, neg, sub};
use crate::error::{Error, Result};
use crate::Int;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct Lattice {
    pub den: Int,
    pub a: Int,
    pub b: Int,
    pub c: Int,
}

impl Lattice {
    pub fn from_rows(rows: &[[Int; 2]], den: Int) -> Result<Self> {
        if den == 0 {
            return Err(Error::DegenerateGrid);
        }
        let mut pivot = [0, 0];
        let mut c: Int = 0;
        for r in rows {
            let (g, s, t) = ext_gcd(pivot[0], r[0]);
            if g == 0 {
                c = gcd(c, r[1]);
                continue;
            }
            let new_pivot = [dot(s, pivot[0], t, r[0])?, dot(s, pivot[1], t, r[1])?];
            let other = sub(mul(r[0] / g, pivot[1])?, mul(pivot[0] / g, r[1])?)?;
            c = gcd(c, other);
            pivot = new_pivot;
            // (0, c) lies in the lattice, so the pivot's tail can be taken mod c.
            if c != 0 {
                pivot[1] = pivot[1].rem_euclid(c);
            }
        }
        if pivot[0] < 0 {
            pivot = [-pivot[0], -pivot[1]];
        }
        let (a, b) = (pivot[0], pivot[1]);
        if a == 0 || c == 0 {
            return Err(Error::DegenerateGrid);
        }
        Ok(Self::normalized(den, a, b.rem_euclid(c), c))
    }

    fn normalized(den: Int, a: Int, b: Int, c: Int) -> Self {
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(gcd3(a, b, c), den);
        Lattice { den: sign * den / g, a: a / g, b: b / g, c: c / g }
    }

    pub fn rows(&self) -> [[Int; 2]; 2] {
        [[self.a, self.b], [0, self.c]]
    }

    /// Rows rescaled to the denominator `den`, which must be a multiple of `self.den`.
    fn rows_over(&self, den: Int) -> Result<[[Int; 2]; 2]> {
        let k = den / self.den;
        Ok([[mul(k, self.a)?, mul(k, self.b)?], [0, mul(k, self.c)?]])
    }

    pub fn sum(&self, other: &Lattice) -> Result<Lattice> {
        let den = lcm(self.den, other.den)?;
        let [r1, r2] = self.rows_over(den)?;
        let [r3, r4] = other.rows_over(den)?;
        Lattice::from_rows(&[r1, r2, r3, r4], den)
    }

    /// `{x : x·y ∈ ℤ for all y in self}`
    pub fn dual(&self) -> Result<Lattice> {
        // Rows of den·(B⁻¹)ᵀ over det B, where B = [[a, b], [0, c]].
        let rows = [[mul(self.den, self.c)?, 0], [neg(mul(self.den, self.b)?)?, mul(self.den, self.a)?]];
        Lattice::from_rows(&rows, mul(self.a, self.c)?)
    }

    pub fn intersect(&self, other: &Lattice) -> Result<Lattice> {
        self.dual()?.sum(&other.dual()?)?.dual()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> Result<bool> {
        Ok(self.sum(other)? == *self)
    }

    /// Covolume as the exact fraction `(ac, den²)`.
    pub fn covolume(&self) -> Result<(Int, Int)> {
        Ok((mul(self.a, self.c)?, mul(self.den, self.den)?))
    }

    /// `[self : sub]` when `sub ⊆ self`.
    pub fn index_of(&self, sub: &Lattice) -> Result<Int> {
        let (n1, d1) = self.covolume()?;
        let (n2, d2) = sub.covolume()?;
        // covol(sub)/covol(self) = n2·d1 / (d2·n1)
        let num = mul(n2, d1)?;
        let den = mul(d2, n1)?;
        if num % den != 0 {
            return Err(Error::DegenerateGrid);
        }
        Ok(num / den)
    }

    pub fn scale_int(&self, k: Int) -> Result<Lattice> {
        Lattice::from_rows(&[[mul(k, self.a)?, mul(k, self.b)?], [0, mul(k, self.c)?]], self.den)
    }
}
