// SPDX-License-Identifier: Apache-2.0

//! Transcendental-lattice pairs of conjugate maximizing sextics.
//!
//! Each [`ZariskiRow`] lists a Dynkin type and two lattices `T[C]`, `T[C']`.
//! A row is witnessed at the lattice level when the two lattices share a
//! genus but are not isomorphic. [`conjugation_certificate`] makes the
//! class-group side explicit: it finds an ideal `I_f` whose square carries
//! one primitive class to the other and checks the ideal identities that
//! lift this to the order of conductor `mf`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::class_group::{class_group, compose, inverse_class, split_discriminant, FormClass};
use crate::error::{Error, Result};
use crate::form::{search_bound, BQForm, Discriminant};
use crate::genus::{genus_classes, genus_partition, same_genus, square_root};
use crate::grid::{find_proper_ideal_prime_to, Grid};
use crate::Int;

/// One line of the table: index, Dynkin type and the two lattices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZariskiRow {
    pub index: usize,
    pub dynkin: &'static str,
    pub t1: BQForm,
    pub t2: BQForm,
}

/// `(index, dynkin, L[2a,b,2c], L[2a',b',2c'])` as printed.
const TABLE: [(usize, &str, [Int; 3], [Int; 3]); 34] = [
    (1, "E8+A10+A1", [6, 2, 8], [2, 0, 22]),
    (2, "E8+A6+A4+A1", [8, 2, 18], [2, 0, 70]),
    (3, "E6+D5+A6+A2", [12, 0, 42], [6, 0, 84]),
    (4, "E6+A10+A3", [12, 0, 22], [4, 0, 66]),
    (5, "E6+A10+A2+A1", [18, 6, 24], [6, 0, 66]),
    (6, "E6+A7+A4+A2", [24, 0, 30], [6, 0, 120]),
    (7, "E6+A6+A4+A2+A1", [30, 0, 42], [18, 6, 72]),
    (8, "D8+A10+A1", [6, 2, 8], [2, 0, 22]),
    (9, "D8+A6+A4+A1", [8, 2, 18], [2, 0, 70]),
    (10, "D7+A12", [6, 2, 18], [2, 0, 52]),
    (11, "D7+A8+A4", [18, 0, 20], [2, 0, 180]),
    (12, "D5+A10+A4", [20, 0, 22], [12, 4, 38]),
    (13, "D5+A6+A5+A2+A1", [12, 0, 42], [6, 0, 84]),
    (14, "D5+A6+2A4", [20, 0, 70], [10, 0, 140]),
    (15, "A18+A1", [8, 2, 10], [2, 0, 38]),
    (16, "A16+A3", [4, 0, 34], [2, 0, 68]),
    (17, "A16+A2+A1", [10, 4, 22], [6, 0, 34]),
    (18, "A13+A4+2A1", [8, 2, 18], [2, 0, 70]),
    (19, "A12+A6+A1", [8, 2, 46], [2, 0, 182]),
    (20, "A12+A5+2A1", [12, 6, 16], [4, 2, 40]),
    (21, "A12+A4+A2+A1", [24, 6, 34], [6, 0, 130]),
    (22, "A10+A9", [10, 0, 22], [2, 0, 110]),
    (23, "A10+A9", [8, 3, 8], [2, 1, 28]),
    (24, "A10+A8+A1", [18, 0, 22], [10, 2, 40]),
    (25, "A10+A7+A2", [22, 0, 24], [6, 0, 88]),
    (26, "A10+A7+2A1", [10, 2, 18], [2, 0, 88]),
    (27, "A10+A6+A2+A1", [22, 0, 42], [16, 2, 58]),
    (28, "A10+A5+A3+A1", [12, 0, 22], [4, 0, 66]),
    (29, "A10+2A4+A1", [30, 10, 40], [10, 0, 110]),
    (30, "A10+A4+2A2+A1", [30, 0, 66], [6, 0, 330]),
    (31, "A8+A6+A4+A1", [22, 4, 58], [18, 0, 70]),
    (32, "A7+A6+A4+A2", [24, 0, 70], [6, 0, 280]),
    (33, "A7+A6+A4+2A1", [18, 4, 32], [2, 0, 280]),
    (34, "A7+A5+A4+A2+A1", [24, 0, 30], [6, 0, 120]),
];

/// The 34 rows, parsed from `L[2a,b,2c]`.
pub fn table1() -> Vec<ZariskiRow> {
    TABLE
        .iter()
        .map(|&(index, dynkin, l1, l2)| ZariskiRow {
            index,
            dynkin,
            t1: BQForm::from_lattice(l1[0], l1[1], l1[2]).expect("table entries are even"),
            t2: BQForm::from_lattice(l2[0], l2[1], l2[2]).expect("table entries are even"),
        })
        .collect()
}

pub fn row(index: usize) -> Result<ZariskiRow> {
    table1().into_iter().find(|r| r.index == index).ok_or(Error::UnknownRow(index))
}

/// CSV with columns `index,dynkin,t1_2a,t1_b,t1_2c,t2_2a,t2_b,t2_2c`.
pub fn table1_csv() -> String {
    let mut out = String::from("index,dynkin,t1_2a,t1_b,t1_2c,t2_2a,t2_b,t2_2c\n");
    for (index, dynkin, l1, l2) in TABLE {
        let _ = writeln!(out, "{index},{dynkin},{},{},{},{},{},{}", l1[0], l1[1], l1[2], l2[0], l2[1], l2[2]);
    }
    out
}

/// Outcome of [`verify_row`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowReport {
    pub index: usize,
    pub dynkin: &'static str,
    pub t1: String,
    pub t2: String,
    pub d: Int,
    pub m: Int,
    pub d0: Int,
    pub equal_discriminants: bool,
    pub equal_contents: bool,
    pub same_genus: bool,
    pub non_isomorphic: bool,
    /// Number of isomorphism classes of lattices in the genus of `t1`.
    pub g_gl2: usize,
    pub passed: bool,
}

/// Checks equal discriminants and contents, a shared genus, and that the
/// two lattices are not isomorphic (so the genus holds at least two
/// isomorphism classes).
pub fn verify_row(r: &ZariskiRow) -> Result<RowReport> {
    let report = check_row(r)?;
    let failed = [
        (report.equal_discriminants, "equal discriminants"),
        (report.equal_contents, "equal contents"),
        (report.same_genus, "same genus"),
        (report.non_isomorphic, "GL2-non-isomorphic"),
        (report.g_gl2 >= 2, "g(T) >= 2"),
    ]
    .into_iter()
    .find(|(ok, _)| !ok);
    match failed {
        Some((_, check)) => Err(Error::RowCheckFailed { row: r.index, check: check.into() }),
        None => Ok(report),
    }
}

/// The same checks as [`verify_row`], reported without failing.
pub fn check_row(r: &ZariskiRow) -> Result<RowReport> {
    let d = r.t1.ensure_positive_definite()?;
    let d2 = r.t2.ensure_positive_definite()?;
    let (m, f0) = r.t1.primitive_part()?;
    let (m2, _) = r.t2.primitive_part()?;
    let sg = same_genus(&r.t1, &r.t2)?.same_genus;
    let non_isomorphic = r.t1.equivalent(&r.t2)?.is_none();
    let g_gl2 = genus_classes(&r.t1)?.size().1;
    let mut report = RowReport {
        index: r.index,
        dynkin: r.dynkin,
        t1: r.t1.lattice_notation(),
        t2: r.t2.lattice_notation(),
        d,
        m,
        d0: f0.discriminant()?,
        equal_discriminants: d == d2,
        equal_contents: m == m2,
        same_genus: sg,
        non_isomorphic,
        g_gl2,
        passed: false,
    };
    report.passed = report.equal_discriminants
        && report.equal_contents
        && report.same_genus
        && report.non_isomorphic
        && report.g_gl2 >= 2;
    Ok(report)
}

/// The five exact checks recorded by a [`ConjugationCertificate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CertificateFlags {
    /// `[I_f]²[L₀] = [L₀']` in `Cl_{d₀}`.
    pub square_relation: bool,
    /// `I_f + mf·𝒪_f = 𝒪_f`.
    pub i_f_prime_to_mf: bool,
    /// `I_{mf}` is a proper `𝒪_{mf}`-ideal prime to `mf`.
    pub i_mf_proper_prime_to_mf: bool,
    /// `I_{mf}·𝒪_f = I_f` as modules.
    pub i_mf_extends_to_i_f: bool,
    /// `[I_{mf} I_f L₀]` is the oriented class of the target's primitive part.
    pub replay_reaches_target: bool,
}

impl CertificateFlags {
    pub fn all(&self) -> bool {
        self.square_relation
            && self.i_f_prime_to_mf
            && self.i_mf_proper_prime_to_mf
            && self.i_mf_extends_to_i_f
            && self.replay_reaches_target
    }
}

/// Class-group data carrying the oriented lattice `t1` to `t2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugationCertificate {
    pub source: BQForm,
    pub target: BQForm,
    pub m: Int,
    pub d: Int,
    pub d0: Int,
    #[serde(rename = "D_K")]
    pub field_disc: Int,
    pub f: Int,
    pub class_l0: FormClass,
    pub class_l0_prime: FormClass,
    /// `s` with `s²·[L₀] = [L₀']`; the class of `I_f`.
    pub square_root: FormClass,
    pub l0: Grid,
    pub l0_prime: Grid,
    pub i_f: Grid,
    /// `J = I_f ℤ_K`
    pub j: Grid,
    pub i_mf: Grid,
    pub flags: CertificateFlags,
    /// Whether the target's opposite orientation is the same oriented class.
    pub target_is_ambiguous: bool,
}

impl ConjugationCertificate {
    pub fn verified(&self) -> bool {
        self.flags.all()
    }
}

pub fn conjugation_certificate(t1: &BQForm, t2: &BQForm) -> Result<ConjugationCertificate> {
    let sg = same_genus(t1, t2)?;
    if !sg.same_genus {
        return Err(Error::NotSameGenus);
    }
    let d = t1.discriminant()?;
    let (m, f0) = t1.primitive_part()?;
    let (_, f0_prime) = t2.primitive_part()?;
    let d0 = f0.discriminant()?;
    let (field_disc, f) = split_discriminant(d0)?;
    let mf = m * f;

    let l0 = Grid::from_form(&f0)?;
    let l0_prime = Grid::from_form(&f0_prime)?;
    let class_l0 = FormClass::new(&f0)?;
    let class_l0_prime = FormClass::new(&f0_prime)?;

    // s² = [L₀'][L₀]⁻¹, found by exhaustive search.
    let group = class_group(Discriminant::new(d0)?);
    let quotient = compose(&class_l0_prime, &inverse_class(&class_l0))?;
    let s = square_root(&group, &quotient)?.ok_or(Error::NotSameGenus)?;

    let i_f = find_proper_ideal_prime_to(&s, mf)?;
    let j = i_f.extend(f)?;
    let i_mf = j.contract(mf)?;

    let square_relation = i_f.product(&i_f)?.product(&l0)?.class_form()? == l0_prime.class_form()?;
    let i_f_prime_to_mf = i_f.is_proper_ideal_of(f)? && i_f.is_prime_to(f, mf)?;
    let i_mf_proper_prime_to_mf = i_mf.is_proper_ideal_of(mf)? && i_mf.is_prime_to(mf, mf)?;
    let i_mf_extends_to_i_f = i_mf.product(&Grid::order(field_disc, f)?)? == i_f;
    let replay = i_mf.product(&i_f)?.product(&l0)?;
    let replay_reaches_target = replay.conductor()? == f && replay.norm_form()?.equivalent_properly(&f0_prime)?.is_some();

    Ok(ConjugationCertificate {
        source: *t1,
        target: *t2,
        m,
        d,
        d0,
        field_disc,
        f,
        class_l0,
        class_l0_prime,
        square_root: s,
        l0,
        l0_prime,
        i_f,
        j,
        i_mf,
        flags: CertificateFlags {
            square_relation,
            i_f_prime_to_mf,
            i_mf_proper_prime_to_mf,
            i_mf_extends_to_i_f,
            replay_reaches_target,
        },
        target_is_ambiguous: inverse_class(&class_l0_prime) == class_l0_prime,
    })
}

/// Default cap on the number of discriminants scanned by [`find_candidate_pairs`].
pub const DEFAULT_SWEEP_BUDGET: u64 = 100_000;

/// A genus holding at least two isomorphism classes of lattices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateGenus {
    pub classes: Vec<FormClass>,
    pub g_sl2: usize,
    pub g_gl2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub d: Int,
    pub genera: Vec<CandidateGenus>,
}

/// Every discriminant in `[d_min, d_max]` with a genus of primitive forms
/// containing at least two unoriented classes.
pub fn find_candidate_pairs(d_min: Int, d_max: Int) -> Result<Vec<Candidate>> {
    let budget = std::env::var(crate::form::SEARCH_BOUND_VAR).map_or(DEFAULT_SWEEP_BUDGET, |_| search_bound());
    find_candidate_pairs_within(d_min, d_max, budget)
}

pub fn find_candidate_pairs_within(d_min: Int, d_max: Int, budget: u64) -> Result<Vec<Candidate>> {
    if d_min > d_max || d_max >= 0 {
        return Err(Error::InvalidRange(d_min, d_max));
    }
    let requested = (d_max - d_min + 1) as u64;
    if requested > budget {
        return Err(Error::RangeTooLarge { requested, budget });
    }
    let mut out = Vec::new();
    for d in d_min..=d_max {
        let Ok(disc) = Discriminant::new(d) else { continue };
        let group = class_group(disc);
        let genera: Vec<CandidateGenus> = genus_partition(&group)?
            .into_iter()
            .filter_map(|classes| {
                let g_sl2 = classes.len();
                let g_gl2 = classes
                    .iter()
                    .map(|x| std::cmp::min(*x, inverse_class(x)))
                    .collect::<std::collections::BTreeSet<_>>()
                    .len();
                (g_gl2 >= 2).then_some(CandidateGenus { classes, g_sl2, g_gl2 })
            })
            .collect();
        if !genera.is_empty() {
            out.push(Candidate { d, genera });
        }
    }
    Ok(out)
}
