// SPDX-License-Identifier: Apache-2.0

mod common;

use quadgenus::{class_group, compose, BQForm, Discriminant, FormClass};

fn form(f: (i64, i64, i64)) -> BQForm {
    BQForm::new(f.0 as i128, f.1 as i128, f.2 as i128)
}

#[test]
fn oracles_agree_with_each_other() {
    for d in -3000..=-3 {
        if common::is_disc(d) {
            assert_eq!(common::h_naive(d), common::h_analytic(d), "d = {d}");
        }
    }
}

#[test]
fn class_numbers_match_oracles() {
    for d in -2000..=-3i64 {
        if !common::is_disc(d) {
            assert!(Discriminant::new(d as i128).is_err());
            continue;
        }
        let g = class_group(Discriminant::new(d as i128).unwrap());
        assert_eq!(g.order(), common::h_analytic(d), "d = {d}");
        let expected: Vec<BQForm> = common::reduced_forms(d).into_iter().map(form).collect();
        let mut got: Vec<BQForm> = g.classes().iter().map(FormClass::rep).collect();
        got.sort();
        let mut expected = expected;
        expected.sort();
        assert_eq!(got, expected, "d = {d}");
    }
}

#[test]
fn known_class_numbers() {
    for (d, h) in [(-3, 1), (-4, 1), (-23, 3), (-47, 5), (-163, 1), (-199, 9), (-420, 8), (-1000, 10), (-5000, 30)] {
        assert_eq!(common::h_analytic(d), h);
        assert_eq!(class_group(Discriminant::new(d as i128).unwrap()).order(), h);
    }
}

#[test]
fn composition_matches_dirichlet() {
    for d in (-400..=-3i64).filter(|&d| common::is_disc(d)) {
        let forms = common::reduced_forms(d);
        for &f1 in &forms {
            for &f2 in &forms {
                let x = compose(&FormClass::new(&form(f1)).unwrap(), &FormClass::new(&form(f2)).unwrap()).unwrap();
                assert_eq!(x.rep(), form(common::dirichlet(f1, f2)), "d = {d}, {f1:?} * {f2:?}");
            }
        }
    }
}

#[test]
fn reduction_matches_textbook() {
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..5000 {
        let a = rng.gen_range(1..200i64);
        let c = rng.gen_range(1..200i64);
        let lim = ((4 * a * c) as f64).sqrt() as i64;
        let b = rng.gen_range(-lim..=lim);
        if b * b - 4 * a * c >= 0 {
            continue;
        }
        let (r, g) = form((a, b, c)).reduce().unwrap();
        assert_eq!(r, form(common::reduce((a, b, c))));
        assert_eq!(form((a, b, c)).act(&g).unwrap(), r);
    }
}
