// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero when any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use quadgenus::field::QFieldElement;
use quadgenus::genus::{genus_count, genus_partition};
use quadgenus::jinv::{j_invariant_numeric, j_of_tau, DEFAULT_TERMS};
use quadgenus::zariski::{conjugation_certificate, verify_row};
use quadgenus::{
    assigned_characters, class_group, compose, genus_classes, inverse_class, principal_class, same_genus, table1,
    BQForm, Discriminant, FormClass, Grid, UnimodularTransform,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)*));
        }
    };
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        Err(format!("took {:.2} s, limit {} s", t.as_secs_f64(), limit.as_secs()))
    } else {
        Ok(())
    }
}

fn disc(d: i64) -> Discriminant {
    Discriminant::new(d as i128).unwrap()
}

fn table_verification() -> Outcome {
    let start = Instant::now();
    let mut passed = 0;
    for r in table1() {
        verify_row(&r).map_err(|e| e.to_string())?;
        passed += 1;
    }
    within(start, Duration::from_secs(5))?;
    ensure!(passed == 34, "{passed}/34 rows");
    Ok(format!("34/34 rows in {:.2} s", start.elapsed().as_secs_f64()))
}

fn row_one() -> Outcome {
    let (t1, t2) = (BQForm::new(3, 2, 4), BQForm::new(1, 0, 11));
    let g = class_group(disc(-44));
    ensure!(g.order() == 3, "h(-44) = {}", g.order());
    ensure!(g.structure().unwrap() == [3], "structure {:?}", g.structure().unwrap());
    ensure!(genus_count(disc(-44)) == 1, "genus count {}", genus_count(disc(-44)));
    ensure!(genus_partition(&g).unwrap().len() == 1, "more than one coset");
    ensure!(same_genus(&t1, &t2).unwrap().same_genus, "not the same genus");
    ensure!(t1.equivalent(&t2).unwrap().is_none(), "isomorphic");
    let (g_sl2, g_gl2) = genus_classes(&t1).unwrap().size();
    ensure!((g_sl2, g_gl2) == (3, 2), "g = ({g_sl2}, {g_gl2})");
    Ok("h = 3, Z/3, one genus, g_gl2 = 2".into())
}

fn class_numbers() -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for d in (-2000..=-3).filter(|&d| common::is_disc(d)) {
        let h = class_group(disc(d)).order();
        let naive = common::h_naive(d);
        ensure!(h == naive, "d = {d}: pipeline {h}, enumeration {naive}");
        n += 1;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("{n} discriminants in {:.2} s", start.elapsed().as_secs_f64()))
}

fn genus_oracles() -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for d in (-10_000..=-3).filter(|&d| common::is_disc(d)) {
        let g = class_group(disc(d));
        let cosets: BTreeSet<Vec<FormClass>> = genus_partition(&g).unwrap().into_iter().collect();
        let mut by_chars: BTreeMap<Vec<i8>, Vec<FormClass>> = BTreeMap::new();
        for x in g.classes() {
            by_chars.entry(assigned_characters(&x.rep()).unwrap().chars).or_default().push(*x);
        }
        let by_chars: BTreeSet<Vec<FormClass>> = by_chars
            .into_values()
            .map(|mut v| {
                v.sort();
                v
            })
            .collect();
        ensure!(cosets == by_chars, "d = {d}: partitions differ");
        ensure!(cosets.len() == genus_count(disc(d)), "d = {d}: {} genera", cosets.len());
        n += 1;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{n} discriminants in {:.2} s", start.elapsed().as_secs_f64()))
}

fn bijection_round_trip() -> Outcome {
    let mut n = 0;
    for d in (-500..=-3).filter(|&d| common::is_disc(d)) {
        for x in class_group(disc(d)).classes() {
            let f = x.rep();
            let nf = Grid::from_form(&f).unwrap().norm_form().unwrap();
            ensure!(nf.equivalent_properly(&f).unwrap().is_some(), "{f}: norm form {nf}");
            n += 1;
        }
    }
    Ok(format!("{n} reduced primitive forms"))
}

fn random_grid(rng: &mut StdRng, dk: i64, f: i64) -> Grid {
    let g = class_group(disc(dk * f * f));
    let x = g.classes()[rng.gen_range(0..g.order())];
    let w = common::random_sl2(rng, 4);
    let w = UnimodularTransform::new(w.map(|r| r.map(i128::from))).unwrap();
    let grid = Grid::from_form(&x.rep().act(&w).unwrap()).unwrap();
    let lambda = loop {
        let l = QFieldElement::from_omega(dk as i128, rng.gen_range(-5..=5), rng.gen_range(-5..=5), rng.gen_range(1..=4))
            .unwrap();
        if !l.is_zero() {
            break l;
        }
    };
    grid.scale(&lambda).unwrap()
}

fn conductor_law() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xC0DE);
    let fields = common::fundamental_discriminants(100);
    let pairs = 1000;
    for _ in 0..pairs {
        let dk = fields[rng.gen_range(0..fields.len())];
        let (f1, f2) = (rng.gen_range(1..=12), rng.gen_range(1..=12));
        let (l, m) = (random_grid(&mut rng, dk, f1), random_grid(&mut rng, dk, f2));
        ensure!(l.conductor().unwrap() == f1 as i128, "conductor of L");
        let f = l.product(&m).unwrap().conductor().unwrap();
        ensure!(f == common::gcd(f1, f2) as i128, "D_K = {dk}, f = ({f1}, {f2}): f(LM) = {f}");
    }
    Ok(format!("{pairs} random pairs, {} fields", fields.len()))
}

fn certificates() -> Outcome {
    let start = Instant::now();
    for r in table1() {
        let c = conjugation_certificate(&r.t1, &r.t2).map_err(|e| format!("row {}: {e}", r.index))?;
        ensure!(c.verified(), "row {}: {:?}", r.index, c.flags);
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("34/34 certificates, five flags each, in {:.2} s", start.elapsed().as_secs_f64()))
}

fn group_law() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x6A7);
    let ds: Vec<i64> = (-5000..=-3).filter(|&d| common::is_disc(d)).collect();
    let (mut singles, mut triples) = (0, 0);
    for &d in &ds {
        let g = class_group(disc(d));
        let e = principal_class(disc(d));
        let cl = g.classes();
        for x in cl {
            ensure!(compose(x, &e).unwrap() == *x, "d = {d}: identity fails at {x}");
            ensure!(compose(x, &inverse_class(x)).unwrap() == e, "d = {d}: inverse fails at {x}");
            singles += 1;
        }
        for _ in 0..4 {
            let [x, y, z] = [0; 3].map(|_| cl[rng.gen_range(0..cl.len())]);
            ensure!(compose(&x, &y).unwrap() == compose(&y, &x).unwrap(), "d = {d}: {x}, {y} do not commute");
            let left = compose(&compose(&x, &y).unwrap(), &z).unwrap();
            let right = compose(&x, &compose(&y, &z).unwrap()).unwrap();
            ensure!(left == right, "d = {d}: associativity fails at {x}, {y}, {z}");
            triples += 1;
        }
    }
    ensure!(triples >= 10_000, "only {triples} triples");
    Ok(format!("{singles} identity/inverse checks, {triples} associative triples"))
}

fn j_cross_check() -> Outcome {
    let j_i = j_of_tau(Complex64::new(0.0, 1.0), DEFAULT_TERMS).unwrap();
    ensure!((j_i - 1728.0).norm() < 1e-8, "j(i) = {j_i}");
    let j_grid = j_invariant_numeric(&Grid::from_form(&BQForm::new(1, 0, 1)).unwrap(), DEFAULT_TERMS).unwrap();
    ensure!((j_grid - 1728.0).norm() < 1e-8, "j(Z[i]) = {j_grid}");

    let mut rng = StdRng::seed_from_u64(0x5EED);
    let mut compared = 0;
    let mut pairs = 0;
    for d in (-500..=-3).filter(|&d| common::is_disc(d)) {
        let g = class_group(disc(d));
        let (dk, _) = common::split(d);
        let mut js = Vec::new();
        for x in g.classes() {
            let j = j_invariant_numeric(&x.grid().unwrap(), DEFAULT_TERMS).unwrap();
            let w = common::random_sl2(&mut rng, 6);
            let w = UnimodularTransform::new(w.map(|r| r.map(i128::from))).unwrap();
            let lambda = QFieldElement::from_omega(dk as i128, rng.gen_range(1..=5), rng.gen_range(-5..=5), 3).unwrap();
            let other = Grid::from_form(&x.rep().act(&w).unwrap()).unwrap().scale(&lambda).unwrap();
            let j2 = j_invariant_numeric(&other, DEFAULT_TERMS).unwrap();
            ensure!((j - j2).norm() < 1e-8, "d = {d}, {x}: {j} vs {j2}");
            compared += 1;
            js.push(j);
        }
        for a in 0..js.len() {
            for b in a + 1..js.len() {
                ensure!((js[a] - js[b]).norm() > 1e-4, "d = {d}: classes {a}, {b} collide");
                pairs += 1;
            }
        }
    }
    Ok(format!("j(i) = 1728, {compared} equivalent grids, {pairs} distinct pairs"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("table verification", table_verification),
        ("row-1 worked example", row_one),
        ("class-number oracle", class_numbers),
        ("genus-oracle agreement", genus_oracles),
        ("bijection round-trip", bijection_round_trip),
        ("conductor law", conductor_law),
        ("conjugation certificates", certificates),
        ("group-law properties", group_law),
        ("numeric j cross-check", j_cross_check),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
