// SPDX-License-Identifier: Apache-2.0

//! The form class group `Cl_d` of primitive positive-definite forms.
//!
//! Composition is grid multiplication: both classes are mapped to grids
//! `L_Q`, multiplied, and the product is read back through its norm form.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::arith::{self, mul};
use crate::error::{Error, Result};
use crate::form::{enumerate_reduced, BQForm, Discriminant};
use crate::grid::Grid;
use crate::Int;

/// `d = D_K·f²` with `D_K` fundamental.
pub fn split_discriminant(d: Int) -> Result<(Int, Int)> {
    let d = Discriminant::new(d)?.get();
    let mut kernel: Int = -1;
    let mut f: Int = 1;
    for (p, e) in arith::factorize(d) {
        if e % 2 == 1 {
            kernel = mul(kernel, p)?;
        }
        f = mul(f, p.pow(e / 2))?;
    }
    if kernel.rem_euclid(4) == 1 {
        Ok((kernel, f))
    } else {
        Ok((mul(4, kernel)?, f / 2))
    }
}

/// An `SL₂(ℤ)`-class of primitive positive-definite forms, held by its
/// reduced representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(into = "[Int; 3]")]
pub struct FormClass {
    rep: BQForm,
    d: Discriminant,
}

impl From<FormClass> for [Int; 3] {
    fn from(x: FormClass) -> Self {
        x.rep.into()
    }
}

impl FormClass {
    pub fn new(form: &BQForm) -> Result<Self> {
        let d = form.ensure_positive_definite()?;
        let m = form.content()?;
        if m != 1 {
            return Err(Error::Imprimitive { form: *form, content: m });
        }
        Ok(FormClass { rep: form.reduced()?, d: Discriminant::new(d)? })
    }

    pub fn rep(&self) -> BQForm {
        self.rep
    }

    pub fn discriminant(&self) -> Discriminant {
        self.d
    }

    pub fn grid(&self) -> Result<Grid> {
        Grid::from_form(&self.rep)
    }

    pub fn is_principal(&self) -> bool {
        self.rep.a == 1
    }
}

impl fmt::Display for FormClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}

/// The class of `𝒪_f`: `Q[1,0,-d/4]` or `Q[1,1,(1-d)/4]`.
pub fn principal_class(d: Discriminant) -> FormClass {
    let n = d.get();
    let rep = if n.rem_euclid(4) == 0 { BQForm::new(1, 0, -n / 4) } else { BQForm::new(1, 1, (1 - n) / 4) };
    FormClass { rep, d }
}

/// `[L][M] = [LM]`
pub fn compose(x: &FormClass, y: &FormClass) -> Result<FormClass> {
    if x.d != y.d {
        return Err(Error::DiscriminantMismatch(x.d.get(), y.d.get()));
    }
    let product = x.grid()?.product(&y.grid()?)?;
    let rep = product.class_form()?;
    debug_assert_eq!(rep.discriminant(), Ok(x.d.get()));
    Ok(FormClass { rep, d: x.d })
}

/// The class of the opposite form `(a, -b, c)`.
pub fn inverse_class(x: &FormClass) -> FormClass {
    FormClass { rep: x.rep.opposite().reduced().expect("opposite of a reduced form is positive-definite"), d: x.d }
}

pub fn pow(x: &FormClass, mut n: u64) -> Result<FormClass> {
    let mut base = *x;
    let mut acc = principal_class(x.d);
    while n > 0 {
        if n & 1 == 1 {
            acc = compose(&acc, &base)?;
        }
        n >>= 1;
        if n > 0 {
            base = compose(&base, &base)?;
        }
    }
    Ok(acc)
}

/// All primitive classes of discriminant `d` in lexicographic order.
#[derive(Debug, Clone)]
pub struct ClassGroup {
    d: Discriminant,
    classes: Vec<FormClass>,
    index: HashMap<BQForm, usize>,
    structure: OnceLock<Vec<Int>>,
}

pub fn class_group(d: Discriminant) -> ClassGroup {
    ClassGroup::new(d)
}

impl ClassGroup {
    pub fn new(d: Discriminant) -> Self {
        let classes: Vec<FormClass> =
            enumerate_reduced(d, true).into_iter().map(|rep| FormClass { rep, d }).collect();
        let index = classes.iter().enumerate().map(|(i, x)| (x.rep, i)).collect();
        ClassGroup { d, classes, index, structure: OnceLock::new() }
    }

    pub fn discriminant(&self) -> Discriminant {
        self.d
    }

    /// `h(d)`
    pub fn order(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[FormClass] {
        &self.classes
    }

    pub fn identity(&self) -> FormClass {
        principal_class(self.d)
    }

    pub fn index_of(&self, x: &FormClass) -> Option<usize> {
        self.index.get(&x.rep).copied()
    }

    pub fn contains(&self, x: &FormClass) -> bool {
        self.index_of(x).is_some()
    }

    /// Elementary divisors `n₁ | n₂ | …` with `Cl_d ≅ ⊕ ℤ/nᵢ`; empty when trivial.
    pub fn structure(&self) -> Result<&[Int]> {
        if let Some(s) = self.structure.get() {
            return Ok(s);
        }
        let s = self.compute_structure()?;
        Ok(self.structure.get_or_init(|| s))
    }

    fn compute_structure(&self) -> Result<Vec<Int>> {
        let h = self.order() as Int;
        let identity = self.index_of(&self.identity()).expect("principal class is enumerated");
        // Per prime: exponents of the cyclic p-power factors, largest first.
        let mut prime_parts: Vec<(Int, Vec<u32>)> = Vec::new();
        for (p, _) in arith::factorize(h) {
            let pmap = self
                .classes
                .iter()
                .map(|x| Ok(self.index_of(&pow(x, p as u64)?).expect("powers stay in the group")))
                .collect::<Result<Vec<usize>>>()?;
            // log_p |G[p^k]| for k = 0, 1, 2, ...
            let mut logs = vec![0u32];
            let mut current: Vec<usize> = (0..self.classes.len()).collect();
            loop {
                current = current.iter().map(|&i| pmap[i]).collect();
                let killed = current.iter().filter(|&&i| i == identity).count() as Int;
                let mut log = 0;
                let mut n = killed;
                while n % p == 0 && n > 1 {
                    n /= p;
                    log += 1;
                }
                let prev = *logs.last().unwrap();
                logs.push(log);
                if log == prev {
                    break;
                }
            }
            // r_k = number of cyclic factors of exponent ≥ k
            let ranks: Vec<u32> = logs.windows(2).map(|w| w[1] - w[0]).collect();
            let mut exps = Vec::new();
            let rank1 = ranks.first().copied().unwrap_or(0);
            for j in 0..rank1 {
                exps.push(ranks.iter().filter(|&&r| r > j).count() as u32);
            }
            prime_parts.push((p, exps));
        }
        let n = prime_parts.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
        let mut divisors = vec![1 as Int; n];
        for (p, exps) in &prime_parts {
            // exps is non-increasing; the largest goes with the last divisor.
            for (j, &e) in exps.iter().enumerate() {
                divisors[n - 1 - j] *= p.pow(e);
            }
        }
        Ok(divisors)
    }

    pub fn compose_in(&self, x: &FormClass, y: &FormClass) -> Result<FormClass> {
        compose(x, y)
    }
}

impl Serialize for ClassGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let structure = self.structure().map_err(serde::ser::Error::custom)?;
        let mut st = s.serialize_struct("ClassGroup", 4)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("h", &self.order())?;
        st.serialize_field("structure", structure)?;
        st.serialize_field("classes", &self.classes)?;
        st.end()
    }
}

/// `{x² : x ∈ G}`, sorted.
pub fn squares_subgroup(group: &ClassGroup) -> Result<BTreeSet<FormClass>> {
    group.classes().iter().map(|x| compose(x, x)).collect()
}
