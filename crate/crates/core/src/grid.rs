// SPDX-License-Identifier: Apache-2.0

//! Grids: rank-2 `ℤ`-submodules of an imaginary quadratic field `K`.
//!
//! Elements of `K` are written over the basis `{1, ω}` of `ℤ_K`, where
//! `ω = (D_K + √D_K)/2` satisfies `ω² = D_K·ω - (D_K² - D_K)/4`. A grid is
//! stored as a Hermite basis over a common denominator, listed so that the
//! ordered basis `[α, β]` is positive (`Im(α/β) > 0`). Equal grids have equal
//! storage.

use serde::{Deserialize, Serialize};

use crate::arith::{self, add, dot, gcd, mul, sub};
use crate::class_group::{compose, inverse_class, split_discriminant, FormClass};
use crate::error::{Error, Result};
use crate::field::{is_fundamental, QFieldElement, Rational};
use crate::form::{search_bound, BQForm, UnimodularTransform};
use crate::lattice::Lattice;
use crate::Int;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GridRepr", into = "GridRepr")]
pub struct Grid {
    disc: Int,
    lat: Lattice,
}

/// Serialized shape: rows `(p + q·ω)/den` listed as a positive basis.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct GridRepr {
    #[serde(rename = "D_K")]
    disc: Int,
    den: Int,
    basis: [[Int; 2]; 2],
}

impl From<Grid> for GridRepr {
    fn from(g: Grid) -> Self {
        GridRepr { disc: g.disc, den: g.lat.den, basis: g.basis() }
    }
}

impl TryFrom<GridRepr> for Grid {
    type Error = Error;
    fn try_from(r: GridRepr) -> Result<Self> {
        Grid::from_generators(r.disc, &r.basis, r.den)
    }
}

/// The order `𝒪_f = ℤ + fℤ_K` of conductor `f`, with `d = D_K·f²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderData {
    #[serde(rename = "D_K")]
    pub field_disc: Int,
    pub f: Int,
    pub d: Int,
}

impl OrderData {
    pub fn new(field_disc: Int, f: Int) -> Result<Self> {
        if field_disc >= 0 || !is_fundamental(field_disc) {
            return Err(Error::NotFundamental(field_disc));
        }
        if f <= 0 {
            return Err(Error::NonPositiveScale(f));
        }
        Ok(OrderData { field_disc, f, d: mul(field_disc, mul(f, f)?)? })
    }

    pub fn grid(&self) -> Result<Grid> {
        Grid::order(self.field_disc, self.f)
    }
}

/// `N(ω)`
fn omega_norm(disc: Int) -> Int {
    (disc * disc - disc) / 4
}

/// `N(p + qω)` for integers `p, q`.
fn int_norm(disc: Int, x: [Int; 2]) -> Result<Int> {
    let [p, q] = x;
    add(add(mul(p, p)?, mul(disc, mul(p, q)?)?)?, mul(omega_norm(disc), mul(q, q)?)?)
}

/// `Tr(x·ȳ)` for integral `x, y`.
fn int_trace_pairing(disc: Int, x: [Int; 2], y: [Int; 2]) -> Result<Int> {
    let ([p1, q1], [p2, q2]) = (x, y);
    add(
        add(mul(2, mul(p1, p2)?)?, mul(disc, dot(p1, q2, q1, p2)?)?)?,
        mul(mul(2, omega_norm(disc))?, mul(q1, q2)?)?,
    )
}

/// `x·y` for integral `x, y`.
fn int_mul(disc: Int, x: [Int; 2], y: [Int; 2]) -> Result<[Int; 2]> {
    let ([p1, q1], [p2, q2]) = (x, y);
    let qq = mul(q1, q2)?;
    Ok([sub(mul(p1, p2)?, mul(omega_norm(disc), qq)?)?, add(dot(p1, q2, q1, p2)?, mul(disc, qq)?)?])
}

impl Grid {
    /// The grid generated by `(p + qω)/den` for each row `[p, q]`.
    pub fn from_generators(disc: Int, rows: &[[Int; 2]], den: Int) -> Result<Self> {
        if disc >= 0 || !is_fundamental(disc) {
            return Err(Error::NotFundamental(disc));
        }
        Ok(Grid { disc, lat: Lattice::from_rows(rows, den)? })
    }

    /// `𝒪_f = ℤ + ℤ·fω`
    pub fn order(disc: Int, f: Int) -> Result<Self> {
        if f <= 0 {
            return Err(Error::NonPositiveScale(f));
        }
        Grid::from_generators(disc, &[[1, 0], [0, f]], 1)
    }

    pub fn maximal_order(disc: Int) -> Result<Self> {
        Grid::order(disc, 1)
    }

    pub fn field_discriminant(&self) -> Int {
        self.disc
    }

    pub fn den(&self) -> Int {
        self.lat.den
    }

    /// Positive basis as integer rows over [`Grid::den`].
    pub fn basis(&self) -> [[Int; 2]; 2] {
        let [r1, r2] = self.lat.rows();
        [r2, r1]
    }

    pub fn basis_elements(&self) -> Result<(QFieldElement, QFieldElement)> {
        let [[p1, q1], [p2, q2]] = self.basis();
        Ok((
            QFieldElement::from_omega(self.disc, p1, q1, self.den())?,
            QFieldElement::from_omega(self.disc, p2, q2, self.den())?,
        ))
    }

    /// A Lagrange-reduced basis over [`Grid::den`]. Its entries stay small
    /// even when the Hermite basis is very skewed; the reduction only ever
    /// evaluates single norms, never their products.
    fn reduced_basis(&self) -> Result<[[Int; 2]; 2]> {
        let [mut u, mut v] = self.basis();
        let disc = self.disc;
        let (mut nu, mut nv) = (int_norm(disc, u)?, int_norm(disc, v)?);
        if nv < nu {
            (u, v, nu, nv) = (v, u, nv, nu);
        }
        loop {
            // nearest integer to Tr(uv̄) / 2N(u)
            let t = int_trace_pairing(disc, u, v)?;
            let k = arith::div_floor(add(t, nu)?, mul(2, nu)?);
            if k != 0 {
                v = [sub(v[0], mul(k, u[0])?)?, sub(v[1], mul(k, u[1])?)?];
                nv = int_norm(disc, v)?;
            }
            if nv >= nu {
                return Ok([u, v]);
            }
            (u, v, nu, nv) = (v, u, nv, nu);
        }
    }

    fn same_field(&self, other: &Grid) -> Result<()> {
        if self.disc == other.disc {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.disc, other.disc))
        }
    }

    /// `L_Q = ℤ + ℤ·(-b + √d)/(2a)` for a primitive positive-definite form.
    pub fn from_form(form: &BQForm) -> Result<Self> {
        let (disc, f) = checked_primitive(form)?;
        // (-b + f√D)/2 = (-b - fD)/2 + fω
        let p = sub(-form.b, mul(f, disc)?)? / 2;
        Grid::from_generators(disc, &[[form.a, 0], [p, f]], form.a)
    }

    /// `ℤa + ℤ(-b + √d)/2 ⊆ 𝒪_f`, an ideal of index `a` in the class of `form`.
    pub fn standard_ideal(form: &BQForm) -> Result<Self> {
        let (disc, f) = checked_primitive(form)?;
        let p = sub(-form.b, mul(f, disc)?)? / 2;
        Grid::from_generators(disc, &[[form.a, 0], [p, f]], 1)
    }

    /// The grid generated by all products `xy`, `x ∈ self`, `y ∈ other`.
    pub fn product(&self, other: &Grid) -> Result<Grid> {
        self.same_field(other)?;
        let rows1 = self.reduced_basis()?;
        let rows2 = other.reduced_basis()?;
        let mut gens = Vec::with_capacity(4);
        for x in rows1 {
            for y in rows2 {
                gens.push(int_mul(self.disc, x, y)?);
            }
        }
        Grid::from_generators(self.disc, &gens, mul(self.lat.den, other.lat.den)?)
    }

    /// `λL`
    pub fn scale(&self, lambda: &QFieldElement) -> Result<Grid> {
        if lambda.field_discriminant() != self.disc {
            return Err(Error::FieldMismatch(lambda.field_discriminant(), self.disc));
        }
        if lambda.is_zero() {
            return Err(Error::DegenerateGrid);
        }
        let (a, b) = self.basis_elements()?;
        Grid::from_elements(self.disc, &[a.mul(lambda)?, b.mul(lambda)?])
    }

    /// The grid spanned by arbitrary field elements.
    pub fn from_elements(disc: Int, elems: &[QFieldElement]) -> Result<Grid> {
        let mut coords = Vec::with_capacity(elems.len());
        let mut den: Int = 1;
        for e in elems {
            let (p, q) = e.omega_coords()?;
            den = arith::lcm(den, arith::lcm(*p.denom(), *q.denom())?)?;
            coords.push((p, q));
        }
        let to_int = |r: Rational| -> Result<Int> { mul(*r.numer(), den / r.denom()) };
        let rows = coords
            .into_iter()
            .map(|(p, q)| Ok([to_int(p)?, to_int(q)?]))
            .collect::<Result<Vec<_>>>()?;
        Grid::from_generators(disc, &rows, den)
    }

    /// Primitive integer polynomial `(a, b, c)` with `aτ² + bτ + c = 0`, `τ = α/β`.
    fn tau_min_poly(&self) -> Result<BQForm> {
        let [alpha, beta] = self.reduced_basis()?;
        // τ + τ̄ = Tr(αβ̄)/N(β), ττ̄ = N(α)/N(β)
        let poly = BQForm::new(
            int_norm(self.disc, beta)?,
            -int_trace_pairing(self.disc, alpha, beta)?,
            int_norm(self.disc, alpha)?,
        );
        Ok(poly.primitive_part()?.1)
    }

    /// The multiplier ring `𝒪(L) = {λ : λL ⊆ L}`, its conductor and `d(L)`.
    pub fn multiplier_ring(&self) -> Result<OrderData> {
        let d = self.tau_min_poly()?.discriminant()?;
        let f2 = d / self.disc;
        if f2 * self.disc != d || !arith::is_square(f2) {
            return Err(Error::DegenerateGrid);
        }
        OrderData::new(self.disc, arith::isqrt(f2))
    }

    pub fn conductor(&self) -> Result<Int> {
        Ok(self.multiplier_ring()?.f)
    }

    /// Gram matrix of `(x, y)_L = n²/[𝒪_f : nL] · Tr(x ȳ)` on the positive
    /// basis, as `Q[a,b,c]` (halved diagonal).
    pub fn norm_form(&self) -> Result<BQForm> {
        let f = self.conductor()?;
        let [e1, e2] = self.basis();
        // n²/[𝒪_f : nL] = f·den²/det; the den² cancels against Tr on den-scaled rows.
        let det = mul(self.lat.a, self.lat.c)?;
        let entry = |x: [Int; 2], y: [Int; 2]| -> Result<Int> {
            let t = mul(f, int_trace_pairing(self.disc, x, y)?)?;
            if t % det != 0 {
                return Err(Error::NonIntegralForm);
            }
            Ok(t / det)
        };
        let (g11, g12, g22) = (entry(e1, e1)?, entry(e1, e2)?, entry(e2, e2)?);
        if g11 % 2 != 0 || g22 % 2 != 0 {
            return Err(Error::NonIntegralForm);
        }
        Ok(BQForm::new(g11 / 2, g12, g22 / 2))
    }

    /// The reduced representative of the oriented norm-form class.
    pub fn class_form(&self) -> Result<BQForm> {
        self.norm_form()?.reduced()
    }

    pub fn class(&self) -> Result<FormClass> {
        FormClass::new(&self.norm_form()?)
    }

    /// Writes `L = λ(ℤ + ℤτ)` with `τ` in the standard fundamental domain.
    pub fn normalize(&self) -> Result<(QFieldElement, QFieldElement)> {
        let form = self.norm_form()?;
        let (_, g) = form.reduce()?;
        let g = g.mul(&UnimodularTransform::S)?;
        let [[p, q], [r, s]] = g.entries();
        let [e1, e2] = self.basis();
        let comb = |x: Int, y: Int| -> Result<[Int; 2]> {
            Ok([dot(x, e1[0], y, e2[0])?, dot(x, e1[1], y, e2[1])?])
        };
        // New basis vectors are the columns of g applied to (e1, e2).
        let n1 = comb(p, r)?;
        let n2 = comb(q, s)?;
        let den = self.den();
        let a = QFieldElement::from_omega(self.disc, n1[0], n1[1], den)?;
        let b = QFieldElement::from_omega(self.disc, n2[0], n2[1], den)?;
        Ok((b, a.div(&b)?))
    }

    pub fn contains(&self, other: &Grid) -> Result<bool> {
        self.same_field(other)?;
        self.lat.contains_lattice(&other.lat)
    }

    /// Whether `self` is an ideal of `𝒪_conductor` (contained in it and stable
    /// under multiplication by it).
    pub fn is_ideal_of(&self, conductor: Int) -> Result<bool> {
        let order = Grid::order(self.disc, conductor)?;
        Ok(order.contains(self)? && order.product(self)? == *self)
    }

    fn ensure_ideal_of(&self, conductor: Int) -> Result<()> {
        if self.is_ideal_of(conductor)? {
            Ok(())
        } else {
            Err(Error::NotAnIdeal { conductor })
        }
    }

    /// `[𝒪_f : self]` for an ideal of `𝒪_f`.
    pub fn index_in_order(&self, conductor: Int) -> Result<Int> {
        self.ensure_ideal_of(conductor)?;
        Grid::order(self.disc, conductor)?.lat.index_of(&self.lat)
    }

    /// Whether this proper-or-not ideal `I` of `𝒪_conductor` satisfies
    /// `I + μ𝒪 = 𝒪`.
    pub fn is_prime_to(&self, conductor: Int, mu: Int) -> Result<bool> {
        if mu == 0 {
            return Err(Error::NonPositiveScale(0));
        }
        self.ensure_ideal_of(conductor)?;
        let order = Grid::order(self.disc, conductor)?;
        let sum = self.lat.sum(&order.lat.scale_int(mu)?)?;
        Ok(sum == order.lat)
    }

    /// Whether this ideal of `𝒪_conductor` is proper (its multiplier ring is `𝒪_conductor`).
    pub fn is_proper_ideal_of(&self, conductor: Int) -> Result<bool> {
        Ok(self.is_ideal_of(conductor)? && self.conductor()? == conductor)
    }

    /// `I·ℤ_K` for an ideal `I` of `𝒪_conductor`.
    pub fn extend(&self, conductor: Int) -> Result<Grid> {
        self.ensure_ideal_of(conductor)?;
        self.product(&Grid::maximal_order(self.disc)?)
    }

    /// `J ∩ 𝒪_f` for an ideal `J` of `ℤ_K`.
    pub fn contract(&self, conductor: Int) -> Result<Grid> {
        self.ensure_ideal_of(1)?;
        let order = Grid::order(self.disc, conductor)?;
        Ok(Grid { disc: self.disc, lat: self.lat.intersect(&order.lat)? })
    }
}

/// `(D_K, f)` for a primitive positive-definite form of discriminant `D_K f²`.
fn checked_primitive(form: &BQForm) -> Result<(Int, Int)> {
    let d = form.ensure_positive_definite()?;
    let m = form.content()?;
    if m != 1 {
        return Err(Error::Imprimitive { form: *form, content: m });
    }
    split_discriminant(d)
}

/// An ideal `I ⊆ 𝒪_f` with `[I] = x`, proper and prime to `mu`.
///
/// Searches primitive vectors `(p, r)` in ring order for a value
/// `F(p, r)` coprime to `mu`, completes `(p, r)` to a proper transform and
/// takes the standard ideal of the translated form.
pub fn find_proper_ideal_prime_to(x: &FormClass, mu: Int) -> Result<Grid> {
    find_proper_ideal_prime_to_within(x, mu, search_bound())
}

pub fn find_proper_ideal_prime_to_within(x: &FormClass, mu: Int, bound: u64) -> Result<Grid> {
    if mu == 0 {
        return Err(Error::NonPositiveScale(0));
    }
    let rep = x.rep();
    let (p, r, _) = rep.represent_coprime_within(mu, bound)?;
    let g = gcd(p, r);
    let (p, r) = (p / g, r / g);
    let (_, s, t) = arith::ext_gcd(p, r);
    // p·s + r·t = 1, so [[p, -t], [r, s]] has determinant 1.
    let h = UnimodularTransform::new([[p, -t], [r, s]])?;
    let translated = rep.act(&h)?;
    Grid::standard_ideal(&translated)
}

/// `[L] ↦ [M⁻¹][L]`, the class-group model of the Galois action on `j(L)`.
pub fn galois_act(m: &FormClass, l: &FormClass) -> Result<FormClass> {
    compose(&inverse_class(m), l)
}
