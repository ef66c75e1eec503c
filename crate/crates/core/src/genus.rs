// SPDX-License-Identifier: Apache-2.0

//! Genera of even positive-definite binary lattices.
//!
//! Two primitive forms of discriminant `d` share a genus iff the quotient of
//! their classes is a square in `Cl_d`. Forms of content `m` share a genus
//! iff their contents and discriminants agree and their primitive parts do.
//! The classical assigned characters give an independent invariant used to
//! cross-check the squares criterion.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::{self, jacobi};
use crate::class_group::{class_group, compose, inverse_class, squares_subgroup, ClassGroup, FormClass};
use crate::error::{Error, Result};
use crate::form::{BQForm, Discriminant};
use crate::Int;

/// Discriminant, content and assigned-character values of a form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GenusInvariant {
    pub d: Int,
    pub m: Int,
    pub chars: Vec<i8>,
}

/// Outcome of [`same_genus`]. When the forms share a genus, `square_root` is
/// a class `s` with `s² = [F₁'][F₂']⁻¹` for the primitive parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SameGenus {
    pub same_genus: bool,
    pub reason: Option<String>,
    pub square_root: Option<FormClass>,
}

/// The `SL₂`-classes of one genus: primitive classes of discriminant
/// `d/m²`, each standing for the form scaled by `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Genus {
    pub d: Int,
    pub m: Int,
    pub classes: Vec<FormClass>,
}

impl Genus {
    /// Representatives at the original discriminant (`⟨m⟩` applied).
    pub fn forms(&self) -> Vec<BQForm> {
        self.classes.iter().map(|x| x.rep().scale(self.m).expect("content fits")).collect()
    }

    pub fn contains(&self, form: &BQForm) -> Result<bool> {
        let (m, f0) = form.primitive_part()?;
        Ok(m == self.m && self.classes.contains(&FormClass::new(&f0)?))
    }

    /// `(g_sl2, g_gl2)`: oriented classes, and classes up to `(a,b,c) ~ (a,-b,c)`.
    pub fn size(&self) -> (usize, usize) {
        let unoriented: BTreeSet<FormClass> =
            self.classes.iter().map(|x| std::cmp::min(*x, inverse_class(x))).collect();
        (self.classes.len(), unoriented.len())
    }
}

/// JSON report `{d, m, genus, g_sl2, g_gl2, certificate}`.
#[derive(Debug, Clone, Serialize)]
pub struct GenusReport {
    pub d: Int,
    pub m: Int,
    pub genus: Vec<BQForm>,
    pub g_sl2: usize,
    pub g_gl2: usize,
    pub certificate: Option<SameGenus>,
}

impl GenusReport {
    pub fn new(genus: &Genus, certificate: Option<SameGenus>) -> Self {
        let (g_sl2, g_gl2) = genus.size();
        GenusReport { d: genus.d, m: genus.m, genus: genus.forms(), g_sl2, g_gl2, certificate }
    }
}

/// `(d, m, d₀, primitive class)` of a positive-definite form.
fn decompose(form: &BQForm) -> Result<(Int, Int, FormClass)> {
    let d = form.ensure_positive_definite()?;
    let (m, f0) = form.primitive_part()?;
    Ok((d, m, FormClass::new(&f0)?))
}

/// A class `s` of `group` with `s² = target`, if any.
pub fn square_root(group: &ClassGroup, target: &FormClass) -> Result<Option<FormClass>> {
    for s in group.classes() {
        if compose(s, s)? == *target {
            return Ok(Some(*s));
        }
    }
    Ok(None)
}

pub fn same_genus(f1: &BQForm, f2: &BQForm) -> Result<SameGenus> {
    let (d1, m1, x1) = decompose(f1)?;
    let (d2, m2, x2) = decompose(f2)?;
    let differ = |reason: String| SameGenus { same_genus: false, reason: Some(reason), square_root: None };
    if d1 != d2 {
        return Ok(differ(format!("discriminants differ: {d1} vs {d2}")));
    }
    if m1 != m2 {
        return Ok(differ(format!("contents differ: {m1} vs {m2}")));
    }
    let group = class_group(x1.discriminant());
    let quotient = compose(&x1, &inverse_class(&x2))?;
    Ok(match square_root(&group, &quotient)? {
        Some(s) => SameGenus { same_genus: true, reason: None, square_root: Some(s) },
        None => differ("quotient of classes is not a square".into()),
    })
}

/// The classes in the genus of `form`: the coset `[F']·(Cl_{d₀})²` scaled by `m`.
pub fn genus_classes(form: &BQForm) -> Result<Genus> {
    let (d, m, x) = decompose(form)?;
    let group = class_group(x.discriminant());
    let squares = squares_subgroup(&group)?;
    let classes: BTreeSet<FormClass> = squares.iter().map(|s| compose(&x, s)).collect::<Result<_>>()?;
    Ok(Genus { d, m, classes: classes.into_iter().collect() })
}

/// `(g_sl2, g_gl2)`; the second count is the number of isomorphism classes
/// of unoriented lattices in the genus.
pub fn genus_size(form: &BQForm) -> Result<(usize, usize)> {
    Ok(genus_classes(form)?.size())
}

/// Cosets of `(Cl_d)²` in `group`, each sorted, listed in order of their
/// smallest member.
pub fn genus_partition(group: &ClassGroup) -> Result<Vec<Vec<FormClass>>> {
    let squares = squares_subgroup(group)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in group.classes() {
        if seen.contains(x) {
            continue;
        }
        let coset: BTreeSet<FormClass> = squares.iter().map(|s| compose(x, s)).collect::<Result<_>>()?;
        seen.extend(coset.iter().copied());
        out.push(coset.into_iter().collect());
    }
    Ok(out)
}

/// Which 2-adic characters apply to discriminant `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TwoAdic {
    Delta,
    Epsilon,
    DeltaEpsilon,
}

fn two_adic_characters(d: Int) -> Vec<TwoAdic> {
    if d.rem_euclid(4) == 1 {
        return Vec::new();
    }
    let n = -d / 4;
    match n.rem_euclid(8) {
        3 | 7 => vec![],
        1 | 5 | 4 => vec![TwoAdic::Delta],
        2 => vec![TwoAdic::DeltaEpsilon],
        6 => vec![TwoAdic::Epsilon],
        0 => vec![TwoAdic::Delta, TwoAdic::Epsilon],
        _ => unreachable!(),
    }
}

/// Genus characters of a primitive form: `(v/p)` for each odd prime `p | d`,
/// followed by the 2-adic characters `δ(v) = (-1)^((v-1)/2)` and
/// `ε(v) = (-1)^((v²-1)/8)` that the 2-part of `d` calls for, all evaluated
/// at one represented value `v` coprime to `2d`.
pub fn assigned_characters(form: &BQForm) -> Result<GenusInvariant> {
    let d = form.ensure_positive_definite()?;
    let m = form.content()?;
    if m != 1 {
        return Err(Error::Imprimitive { form: *form, content: m });
    }
    let (_, _, v) = form.represent_coprime(2 * d)?;
    let mut chars = Vec::new();
    for (p, _) in arith::factorize(d) {
        if p != 2 {
            chars.push(jacobi(v, p) as i8);
        }
    }
    let delta: i8 = if v.rem_euclid(4) == 1 { 1 } else { -1 };
    let epsilon: i8 = if matches!(v.rem_euclid(8), 1 | 7) { 1 } else { -1 };
    for c in two_adic_characters(d) {
        chars.push(match c {
            TwoAdic::Delta => delta,
            TwoAdic::Epsilon => epsilon,
            TwoAdic::DeltaEpsilon => delta * epsilon,
        });
    }
    Ok(GenusInvariant { d, m: 1, chars })
}

/// Characters of the primitive part, tagged with the content.
pub fn genus_invariant(form: &BQForm) -> Result<GenusInvariant> {
    let (m, f0) = form.primitive_part()?;
    let mut inv = assigned_characters(&f0)?;
    inv.d = form.discriminant()?;
    inv.m = m;
    Ok(inv)
}

/// Number of genera of primitive forms, `2^(μ-1)` with `μ` the number of
/// assigned characters.
pub fn genus_count(d: Discriminant) -> usize {
    let odd = arith::factorize(d.get()).iter().filter(|(p, _)| *p != 2).count();
    let mu = odd + two_adic_characters(d.get()).len();
    1 << mu.saturating_sub(1)
}
