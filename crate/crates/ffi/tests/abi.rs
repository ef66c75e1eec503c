// SPDX-License-Identifier: Apache-2.0

use std::ffi::CStr;
use std::ptr;

use quadgenus_ffi::*;

fn q(a: i64, b: i64, c: i64) -> QgForm {
    QgForm { a, b, c }
}

#[test]
fn reduce_and_discriminant() {
    let mut r = q(0, 0, 0);
    let mut w = [0i64; 4];
    unsafe {
        assert_eq!(qg_form_reduce(q(4, -3, 4), &mut r, w.as_mut_ptr()), QgStatus::Ok);
    }
    assert_eq!(r, q(4, 3, 4));
    assert_eq!(w, [0, -1, 1, 0]);

    let mut d = 0;
    unsafe {
        assert_eq!(qg_form_discriminant(q(3, 2, 4), &mut d), QgStatus::Ok);
        assert_eq!(qg_form_reduce(q(1, 0, -1), &mut r, ptr::null_mut()), QgStatus::InvalidForm);
        assert_eq!(qg_form_reduce(q(1, 0, 1), ptr::null_mut(), ptr::null_mut()), QgStatus::NullPointer);
    }
    assert_eq!(d, -44);
}

#[test]
fn class_group_handle() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(qg_class_group_new(-260, &mut g), QgStatus::Ok);
        let mut h = 0;
        assert_eq!(qg_class_group_order(g, &mut h), QgStatus::Ok);
        assert_eq!(h, 8);
        let mut first = q(0, 0, 0);
        assert_eq!(qg_class_group_class(g, 0, &mut first), QgStatus::Ok);
        assert_eq!(first, q(1, 0, 65));
        assert_eq!(qg_class_group_class(g, 8, &mut first), QgStatus::OutOfRange);

        let mut len = 0;
        assert_eq!(qg_class_group_structure(g, ptr::null_mut(), 0, &mut len), QgStatus::BufferTooSmall);
        assert_eq!(len, 2);
        let mut buf = [0i64; 4];
        assert_eq!(qg_class_group_structure(g, buf.as_mut_ptr(), 4, &mut len), QgStatus::Ok);
        assert_eq!(&buf[..len], &[2, 4]);
        qg_class_group_free(g);
        qg_class_group_free(ptr::null_mut());

        let mut bad = ptr::null_mut();
        assert_eq!(qg_class_group_new(-5, &mut bad), QgStatus::InvalidDiscriminant);
        assert!(bad.is_null());
    }
}

#[test]
fn genus_and_composition() {
    let mut same = false;
    let (mut s, mut g) = (0, 0);
    let mut x = q(0, 0, 0);
    unsafe {
        assert_eq!(qg_same_genus(q(3, 2, 4), q(1, 0, 11), &mut same), QgStatus::Ok);
        assert!(same);
        assert_eq!(qg_same_genus(q(1, 0, 5), q(2, 2, 3), &mut same), QgStatus::Ok);
        assert!(!same);
        assert_eq!(qg_genus_size(q(3, 2, 4), &mut s, &mut g), QgStatus::Ok);
        assert_eq!(qg_compose(-44, q(3, 2, 4), q(3, 2, 4), &mut x), QgStatus::Ok);
        assert_eq!(qg_compose(-43, q(3, 2, 4), q(3, 2, 4), &mut x), QgStatus::InvalidForm);
    }
    assert_eq!((s, g), (3, 2));
    assert_eq!(x, q(3, -2, 4));
}

#[test]
fn table_verifies() {
    let (mut passed, mut total) = (0, 0);
    unsafe {
        assert_eq!(qg_table_verify(&mut passed, &mut total), QgStatus::Ok);
    }
    assert_eq!((passed, total), (34, 34));
}

#[test]
fn status_messages_are_static_strings() {
    for s in [QgStatus::Ok, QgStatus::Overflow, QgStatus::Other] {
        let msg = unsafe { CStr::from_ptr(qg_status_message(s)) };
        assert!(!msg.to_str().unwrap().is_empty());
    }
}

#[test]
fn header_declares_every_symbol() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/quadgenus.h")).unwrap();
    for name in [
        "qg_status_message",
        "qg_form_discriminant",
        "qg_form_reduce",
        "qg_same_genus",
        "qg_genus_size",
        "qg_compose",
        "qg_class_group_new",
        "qg_class_group_free",
        "qg_class_group_order",
        "qg_class_group_class",
        "qg_class_group_structure",
        "qg_table_verify",
        "typedef struct QgClassGroup QgClassGroup",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

#[test]
fn header_compiles_as_c() {
    let Some(cc) = ["cc", "gcc", "clang"].into_iter().find(|c| std::process::Command::new(c).arg("--version").output().is_ok())
    else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include/quadgenus.h");
    let status = std::process::Command::new(cc)
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", include])
        .status()
        .unwrap();
    assert!(status.success());
}
