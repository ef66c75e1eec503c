// SPDX-License-Identifier: Apache-2.0

//! Binary quadratic forms `Q[a,b,c]` and their unimodular equivalence.
//!
//! The form `a x² + b xy + c y²` is identified with the even lattice of Gram
//! matrix `[[2a, b], [b, 2c]]`. `GL₂(ℤ)` acts on the right by `Q ↦ ᵗg Q g`,
//! i.e. `(F·g)(v) = F(g v)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{self, add, dot, gcd, gcd3, mul, sub};
use crate::error::{Error, Result};
use crate::Int;

/// Ring bound used by [`BQForm::represent_coprime`].
pub const DEFAULT_SEARCH_BOUND: u64 = 1000;

/// Environment variable overriding the search budgets.
pub const SEARCH_BOUND_VAR: &str = "GENUS_SEARCH_BOUND";

/// [`DEFAULT_SEARCH_BOUND`], or the value of `GENUS_SEARCH_BOUND` when set.
/// Read once per process.
pub fn search_bound() -> u64 {
    static BOUND: std::sync::OnceLock<u64> = std::sync::OnceLock::new();
    *BOUND.get_or_init(|| {
        std::env::var(SEARCH_BOUND_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_SEARCH_BOUND)
    })
}

/// The form `a x² + b xy + c y²`, i.e. the matrix `Q[a,b,c]`.
///
/// Ordering is lexicographic on `(a, b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[Int; 3]", into = "[Int; 3]")]
pub struct BQForm {
    pub a: Int,
    pub b: Int,
    pub c: Int,
}

impl From<[Int; 3]> for BQForm {
    fn from([a, b, c]: [Int; 3]) -> Self {
        BQForm { a, b, c }
    }
}

impl From<BQForm> for [Int; 3] {
    fn from(f: BQForm) -> Self {
        [f.a, f.b, f.c]
    }
}

/// A 2×2 integer matrix of determinant ±1, stored row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[[Int; 2]; 2]", into = "[[Int; 2]; 2]")]
pub struct UnimodularTransform {
    m: [[Int; 2]; 2],
}

/// A negative integer congruent to 0 or 1 mod 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Int", into = "Int")]
pub struct Discriminant(Int);

impl Discriminant {
    pub fn new(d: Int) -> Result<Self> {
        if d < 0 && matches!(d.rem_euclid(4), 0 | 1) {
            Ok(Discriminant(d))
        } else {
            Err(Error::InvalidDiscriminant(d))
        }
    }

    pub fn get(self) -> Int {
        self.0
    }
}

impl TryFrom<Int> for Discriminant {
    type Error = Error;
    fn try_from(d: Int) -> Result<Self> {
        Discriminant::new(d)
    }
}

impl From<Discriminant> for Int {
    fn from(d: Discriminant) -> Int {
        d.0
    }
}

impl fmt::Display for Discriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl UnimodularTransform {
    pub const IDENTITY: UnimodularTransform = UnimodularTransform { m: [[1, 0], [0, 1]] };
    /// `(x, y) ↦ (-y, x)`; sends `(a,b,c)` to `(c,-b,a)`.
    pub const S: UnimodularTransform = UnimodularTransform { m: [[0, -1], [1, 0]] };
    /// `diag(1, -1)`; sends `(a,b,c)` to the opposite form `(a,-b,c)`.
    pub const FLIP: UnimodularTransform = UnimodularTransform { m: [[1, 0], [0, -1]] };

    pub fn new(m: [[Int; 2]; 2]) -> Result<Self> {
        let det = sub(mul(m[0][0], m[1][1])?, mul(m[0][1], m[1][0])?)?;
        if det == 1 || det == -1 {
            Ok(UnimodularTransform { m })
        } else {
            Err(Error::NotUnimodular(det))
        }
    }

    /// `[[1, k], [0, 1]]`
    pub fn translation(k: Int) -> Self {
        UnimodularTransform { m: [[1, k], [0, 1]] }
    }

    pub fn entries(&self) -> [[Int; 2]; 2] {
        self.m
    }

    pub fn det(&self) -> Int {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn is_proper(&self) -> bool {
        self.det() == 1
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = (self.m, other.m);
        let mut m = [[0; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = dot(a[i][0], b[0][j], a[i][1], b[1][j])?;
            }
        }
        Ok(UnimodularTransform { m })
    }

    pub fn inverse(&self) -> Self {
        let [[p, q], [r, s]] = self.m;
        let det = self.det();
        // det = ±1, so the adjugate divided by det never overflows beyond negation.
        UnimodularTransform { m: [[s * det, -q * det], [-r * det, p * det]] }
    }
}

impl TryFrom<[[Int; 2]; 2]> for UnimodularTransform {
    type Error = Error;
    fn try_from(m: [[Int; 2]; 2]) -> Result<Self> {
        UnimodularTransform::new(m)
    }
}

impl From<UnimodularTransform> for [[Int; 2]; 2] {
    fn from(g: UnimodularTransform) -> Self {
        g.m
    }
}

impl fmt::Display for UnimodularTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[p, q], [r, s]] = self.m;
        write!(f, "[[{p},{q}],[{r},{s}]]")
    }
}

impl BQForm {
    pub const fn new(a: Int, b: Int, c: Int) -> Self {
        BQForm { a, b, c }
    }

    /// Builds the form whose lattice is `L[two_a, b, two_c]`.
    pub fn from_lattice(two_a: Int, b: Int, two_c: Int) -> Result<Self> {
        if two_a % 2 != 0 || two_c % 2 != 0 {
            return Err(Error::Parse {
                input: format!("L[{two_a},{b},{two_c}]"),
                reason: "diagonal entries of an even lattice must be even".into(),
            });
        }
        Ok(BQForm::new(two_a / 2, b, two_c / 2))
    }

    /// `b² - 4ac`
    pub fn discriminant(&self) -> Result<Int> {
        sub(mul(self.b, self.b)?, mul(4, mul(self.a, self.c)?)?)
    }

    pub fn is_positive_definite(&self) -> bool {
        self.a > 0 && self.discriminant().is_ok_and(|d| d < 0)
    }

    pub fn ensure_positive_definite(&self) -> Result<Int> {
        let d = self.discriminant()?;
        if self.a > 0 && d < 0 {
            Ok(d)
        } else {
            Err(Error::NotPositiveDefinite(*self))
        }
    }

    /// `gcd(|a|, |b|, |c|)`
    pub fn content(&self) -> Result<Int> {
        let m = gcd3(self.a, self.b, self.c);
        if m == 0 {
            Err(Error::ZeroForm)
        } else {
            Ok(m)
        }
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == Ok(1)
    }

    /// `(m, F/m)` with `m` the content.
    pub fn primitive_part(&self) -> Result<(Int, BQForm)> {
        let m = self.content()?;
        Ok((m, BQForm::new(self.a / m, self.b / m, self.c / m)))
    }

    /// `Q[ma, mb, mc]`
    pub fn scale(&self, m: Int) -> Result<BQForm> {
        if m <= 0 {
            return Err(Error::NonPositiveScale(m));
        }
        Ok(BQForm::new(mul(m, self.a)?, mul(m, self.b)?, mul(m, self.c)?))
    }

    /// The opposite form `(a, -b, c)`.
    pub fn opposite(&self) -> BQForm {
        BQForm::new(self.a, -self.b, self.c)
    }

    pub fn evaluate(&self, x: Int, y: Int) -> Result<Int> {
        add(add(mul(self.a, mul(x, x)?)?, mul(self.b, mul(x, y)?)?)?, mul(self.c, mul(y, y)?)?)
    }

    /// Lattice norm `(v, v)` of the vector `(x, y)`: twice the form value.
    pub fn lattice_norm(&self, x: Int, y: Int) -> Result<Int> {
        mul(2, self.evaluate(x, y)?)
    }

    /// The form with matrix `ᵗg Q g`.
    pub fn act(&self, g: &UnimodularTransform) -> Result<BQForm> {
        let [[p, q], [r, s]] = g.m;
        let a = self.evaluate(p, r)?;
        let c = self.evaluate(q, s)?;
        // 2a·pq + b(ps + qr) + 2c·rs
        let b = add(
            add(mul(mul(2, self.a)?, mul(p, q)?)?, mul(self.b, dot(p, s, q, r)?)?)?,
            mul(mul(2, self.c)?, mul(r, s)?)?,
        )?;
        Ok(BQForm::new(a, b, c))
    }

    /// `|b| ≤ a ≤ c`, with `b ≥ 0` when `|b| = a` or `a = c`.
    pub fn is_reduced(&self) -> bool {
        let (a, b, c) = (self.a, self.b, self.c);
        a > 0 && b.abs() <= a && a <= c && (b >= 0 || (b.abs() != a && a != c))
    }

    /// Gauss reduction. Returns the reduced form `R` and a proper witness `g`
    /// with `R = F·g`.
    pub fn reduce(&self) -> Result<(BQForm, UnimodularTransform)> {
        self.ensure_positive_definite()?;
        let mut f = *self;
        let mut g = UnimodularTransform::IDENTITY;
        loop {
            // Bring b into (-a, a].
            if f.b <= -f.a || f.b > f.a {
                let k = arith::div_floor(sub(f.a, f.b)?, mul(2, f.a)?);
                let t = UnimodularTransform::translation(k);
                f = f.act(&t)?;
                g = g.mul(&t)?;
            }
            if f.a > f.c || (f.a == f.c && f.b < 0) {
                f = BQForm::new(f.c, -f.b, f.a);
                g = g.mul(&UnimodularTransform::S)?;
                continue;
            }
            debug_assert!(f.is_reduced());
            return Ok((f, g));
        }
    }

    pub fn reduced(&self) -> Result<BQForm> {
        Ok(self.reduce()?.0)
    }

    /// A proper witness `g` with `self·g = other`, if one exists.
    pub fn equivalent_properly(&self, other: &BQForm) -> Result<Option<UnimodularTransform>> {
        let (r1, g1) = self.reduce()?;
        let (r2, g2) = other.reduce()?;
        if r1 != r2 {
            return Ok(None);
        }
        Ok(Some(g1.mul(&g2.inverse())?))
    }

    /// A witness of determinant ±1 with `self·g = other`, if one exists.
    /// Proper witnesses are preferred.
    pub fn equivalent(&self, other: &BQForm) -> Result<Option<UnimodularTransform>> {
        if let Some(g) = self.equivalent_properly(other)? {
            return Ok(Some(g));
        }
        match self.equivalent_properly(&other.opposite())? {
            Some(h) => Ok(Some(h.mul(&UnimodularTransform::FLIP)?)),
            None => Ok(None),
        }
    }

    /// A value `v = F(x, y)` with `gcd(v, n) = 1`, searching rings of
    /// increasing `max(|x|, |y|)` up to [`DEFAULT_SEARCH_BOUND`].
    pub fn represent_coprime(&self, n: Int) -> Result<(Int, Int, Int)> {
        self.represent_coprime_within(n, search_bound())
    }

    /// Ring order: vectors are taken up to sign, sorted by `|x| + |y|`, then
    /// by decreasing `x`, then by decreasing `y`. Ring 1 is therefore
    /// `(1,0), (0,1), (1,1), (1,-1)`.
    pub fn represent_coprime_within(&self, n: Int, bound: u64) -> Result<(Int, Int, Int)> {
        self.ensure_positive_definite()?;
        let m = self.content()?;
        if m != 1 {
            return Err(Error::Imprimitive { form: *self, content: m });
        }
        if n == 0 {
            return Err(Error::Parse { input: "0".into(), reason: "modulus must be nonzero".into() });
        }
        for r in 1..=bound as Int {
            for (x, y) in ring(r) {
                let v = self.evaluate(x, y)?;
                if gcd(v, n) == 1 {
                    return Ok((x, y, v));
                }
            }
        }
        Err(Error::SearchExhausted { bound })
    }

    /// Text form `L[2a,b,2c]`.
    pub fn lattice_notation(&self) -> String {
        format!("L[{},{},{}]", 2 * self.a, self.b, 2 * self.c)
    }
}

/// Sign representatives of the vectors with `max(|x|,|y|) = r`, in search order.
pub(crate) fn ring(r: Int) -> Vec<(Int, Int)> {
    let mut v: Vec<(Int, Int)> = Vec::with_capacity(4 * r as usize);
    for y in -r..=r {
        v.push((r, y));
    }
    for x in 0..r {
        v.push((x, r));
        if x > 0 {
            v.push((x, -r));
        }
    }
    v.sort_by_key(|&(x, y)| (x.abs() + y.abs(), -x, -y));
    v
}

/// All reduced forms of discriminant `d`, sorted lexicographically.
pub fn enumerate_reduced(d: Discriminant, primitive_only: bool) -> Vec<BQForm> {
    let d = d.get();
    let bmax = arith::isqrt(-d / 3);
    let mut out = Vec::new();
    let mut a: Int = 1;
    while 3 * a * a <= -d {
        for b in (-a + 1)..=a {
            if (b - d).rem_euclid(2) != 0 {
                continue;
            }
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            let f = BQForm::new(a, b, c);
            if b.abs() <= bmax && f.is_reduced() && (!primitive_only || gcd3(a, b, c) == 1) {
                out.push(f);
            }
        }
        a += 1;
    }
    out.sort();
    out
}

impl fmt::Display for BQForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{},{},{}]", self.a, self.b, self.c)
    }
}

impl FromStr for BQForm {
    type Err = Error;

    /// Accepts `Q[a,b,c]` or `L[2a,b,2c]`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (kind, rest) = t.split_at(t.chars().next().map_or(0, char::len_utf8));
        let inner = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| err("expected Q[a,b,c] or L[2a,b,2c]"))?;
        let nums: Vec<Int> = inner
            .split(',')
            .map(|x| x.parse::<Int>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err("coefficients must be integers"))?;
        let [x, y, z] = nums[..] else {
            return Err(err("expected exactly three coefficients"));
        };
        match kind {
            "Q" | "q" => Ok(BQForm::new(x, y, z)),
            "L" | "l" => BQForm::from_lattice(x, y, z).map_err(|_| err("L-notation needs even diagonal entries")),
            _ => Err(err("expected Q[a,b,c] or L[2a,b,2c]")),
        }
    }
}
