// SPDX-License-Identifier: Apache-2.0

//! Exact elements `u + v√D_K` of an imaginary quadratic field.

use std::fmt;

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::Int;

pub type Rational = Ratio<Int>;

/// `u + v·√D_K` with `D_K < 0` fundamental. `√D_K` is the root with positive
/// imaginary part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QFieldElement {
    disc: Int,
    pub u: Rational,
    pub v: Rational,
}

/// `D` is a fundamental discriminant: squarefree `≡ 1 (mod 4)`, or `4m` with
/// `m` squarefree `≡ 2, 3 (mod 4)`.
pub fn is_fundamental(d: Int) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => arith::is_squarefree(d),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && arith::is_squarefree(m)
        }
        _ => false,
    }
}

fn ck<T>(x: Option<T>) -> Result<T> {
    x.ok_or(Error::Overflow("rational arithmetic"))
}

impl QFieldElement {
    pub fn new(disc: Int, u: Rational, v: Rational) -> Result<Self> {
        if disc >= 0 || !is_fundamental(disc) {
            return Err(Error::NotFundamental(disc));
        }
        Ok(QFieldElement { disc, u, v })
    }

    pub fn from_int(disc: Int, n: Int) -> Result<Self> {
        Self::new(disc, Rational::from_integer(n), Rational::zero())
    }

    /// `(p + q·ω)/den` with `ω = (D_K + √D_K)/2`.
    pub fn from_omega(disc: Int, p: Int, q: Int, den: Int) -> Result<Self> {
        // p + q(D + √D)/2 = (2p + qD)/2 + (q/2)√D
        let u = Rational::new(arith::add(arith::mul(2, p)?, arith::mul(q, disc)?)?, arith::mul(2, den)?);
        let v = Rational::new(q, arith::mul(2, den)?);
        Self::new(disc, u, v)
    }

    pub fn field_discriminant(&self) -> Int {
        self.disc
    }

    /// Coordinates `(p, q)` over `{1, ω}`.
    pub fn omega_coords(&self) -> Result<(Rational, Rational)> {
        let q = ck(self.v.checked_mul(&Rational::from_integer(2)))?;
        let qd = ck(q.checked_mul(&Rational::from_integer(self.disc)))?;
        let p = ck(self.u.checked_sub(&ck(qd.checked_div(&Rational::from_integer(2)))?))?;
        Ok((p, q))
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.disc == other.disc {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.disc, other.disc))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(QFieldElement { disc: self.disc, u: ck(self.u.checked_add(&other.u))?, v: ck(self.v.checked_add(&other.v))? })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(QFieldElement { disc: self.disc, u: ck(self.u.checked_sub(&other.u))?, v: ck(self.v.checked_sub(&other.v))? })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let d = Rational::from_integer(self.disc);
        let uu = ck(self.u.checked_mul(&other.u))?;
        let vv = ck(ck(self.v.checked_mul(&other.v))?.checked_mul(&d))?;
        let uv = ck(self.u.checked_mul(&other.v))?;
        let vu = ck(self.v.checked_mul(&other.u))?;
        Ok(QFieldElement { disc: self.disc, u: ck(uu.checked_add(&vv))?, v: ck(uv.checked_add(&vu))? })
    }

    pub fn conj(&self) -> Self {
        QFieldElement { disc: self.disc, u: self.u, v: -self.v }
    }

    /// `Tr_{K/ℚ}(x) = 2u`
    pub fn trace(&self) -> Result<Rational> {
        ck(self.u.checked_add(&self.u))
    }

    /// `N_{K/ℚ}(x) = u² - D v²`
    pub fn norm(&self) -> Result<Rational> {
        let uu = ck(self.u.checked_mul(&self.u))?;
        let vv = ck(self.v.checked_mul(&self.v))?;
        ck(uu.checked_sub(&ck(vv.checked_mul(&Rational::from_integer(self.disc)))?))
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if other.is_zero() {
            return Err(Error::DegenerateGrid);
        }
        let n = other.norm()?;
        let num = self.mul(&other.conj())?;
        Ok(QFieldElement { disc: self.disc, u: ck(num.u.checked_div(&n))?, v: ck(num.v.checked_div(&n))? })
    }

    pub fn to_complex(&self) -> Complex64 {
        let u = self.u.to_f64().unwrap_or(f64::NAN);
        let v = self.v.to_f64().unwrap_or(f64::NAN);
        Complex64::new(u, v * (-(self.disc as f64)).sqrt())
    }
}

impl fmt::Display for QFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·√{}", self.u, self.v, self.disc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_discriminants() {
        let fund: Vec<Int> = (-50..0).filter(|&d| is_fundamental(d)).collect();
        assert_eq!(fund, vec![-47, -43, -40, -39, -35, -31, -24, -23, -20, -19, -15, -11, -8, -7, -4, -3]);
    }

    #[test]
    fn field_arithmetic() {
        let d = -11;
        let r = |n, m| Rational::new(n, m);
        let x = QFieldElement::new(d, r(1, 2), r(3, 1)).unwrap();
        let y = QFieldElement::new(d, r(-2, 1), r(1, 3)).unwrap();
        let xy = x.mul(&y).unwrap();
        assert_eq!(xy.div(&y).unwrap(), x);
        assert_eq!(x.mul(&x.conj()).unwrap().v, Rational::zero());
        assert_eq!(x.mul(&x.conj()).unwrap().u, x.norm().unwrap());
        let z = xy.to_complex() - x.to_complex() * y.to_complex();
        assert!(z.norm() < 1e-12);
    }

    #[test]
    fn omega_round_trip() {
        let x = QFieldElement::from_omega(-4, 3, 5, 7).unwrap();
        let (p, q) = x.omega_coords().unwrap();
        assert_eq!((p, q), (Rational::new(3, 7), Rational::new(5, 7)));
        assert!(QFieldElement::from_int(-12, 1).is_err());
        assert!(QFieldElement::from_int(5, 1).is_err());
    }
}
