// SPDX-License-Identifier: Apache-2.0

//! C ABI for `quadgenus`.
//!
//! Every function returns a [`QgStatus`]; results go through out-pointers,
//! which are left untouched on failure. Forms cross the boundary as
//! [`QgForm`] (coefficients of `a x² + b xy + c y²`). Class groups are
//! opaque handles created by [`qg_class_group_new`] and released by
//! [`qg_class_group_free`].

use std::ffi::c_char;
use std::ptr;

use quadgenus::{class_group, compose, same_genus, BQForm, ClassGroup, Discriminant, Error, FormClass, Int};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QgStatus {
    Ok = 0,
    NullPointer = 1,
    /// The form is zero, indefinite or of the wrong discriminant.
    InvalidForm = 2,
    InvalidDiscriminant = 3,
    Overflow = 4,
    OutOfRange = 5,
    BufferTooSmall = 6,
    /// A table row did not verify.
    VerificationFailed = 7,
    Other = 8,
}

/// `a x² + b xy + c y²`
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QgForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

/// Opaque class group handle.
pub struct QgClassGroup(ClassGroup);

impl From<QgForm> for BQForm {
    fn from(f: QgForm) -> Self {
        BQForm::new(f.a as Int, f.b as Int, f.c as Int)
    }
}

impl TryFrom<BQForm> for QgForm {
    type Error = QgStatus;
    fn try_from(f: BQForm) -> Result<Self, QgStatus> {
        let n = |x: Int| i64::try_from(x).map_err(|_| QgStatus::Overflow);
        Ok(QgForm { a: n(f.a)?, b: n(f.b)?, c: n(f.c)? })
    }
}

fn status(e: &Error) -> QgStatus {
    match e {
        Error::Overflow(_) => QgStatus::Overflow,
        Error::ZeroForm | Error::NotPositiveDefinite(_) | Error::Imprimitive { .. } | Error::DiscriminantMismatch(..) => {
            QgStatus::InvalidForm
        }
        Error::InvalidDiscriminant(_) => QgStatus::InvalidDiscriminant,
        Error::UnknownRow(_) => QgStatus::OutOfRange,
        Error::RowCheckFailed { .. } => QgStatus::VerificationFailed,
        _ => QgStatus::Other,
    }
}

macro_rules! try_qg {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return status(&e),
        }
    };
}

/// Writes `value` through `out`, or reports a null pointer.
///
/// # Safety
/// `out` must be null or valid for a write of `T`.
unsafe fn put<T>(out: *mut T, value: T) -> QgStatus {
    if out.is_null() {
        return QgStatus::NullPointer;
    }
    ptr::write(out, value);
    QgStatus::Ok
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn qg_status_message(status: QgStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        QgStatus::Ok => b"ok\0",
        QgStatus::NullPointer => b"null pointer argument\0",
        QgStatus::InvalidForm => b"form is not an admissible positive-definite form\0",
        QgStatus::InvalidDiscriminant => b"not a negative discriminant\0",
        QgStatus::Overflow => b"integer overflow\0",
        QgStatus::OutOfRange => b"index out of range\0",
        QgStatus::BufferTooSmall => b"buffer too small\0",
        QgStatus::VerificationFailed => b"verification failed\0",
        QgStatus::Other => b"operation failed\0",
    };
    s.as_ptr().cast()
}

/// `b² − 4ac`.
///
/// # Safety
/// `out` must be null or point to writable memory.
#[no_mangle]
pub unsafe extern "C" fn qg_form_discriminant(form: QgForm, out: *mut i64) -> QgStatus {
    let d = try_qg!(BQForm::from(form).discriminant());
    match i64::try_from(d) {
        Ok(d) => put(out, d),
        Err(_) => QgStatus::Overflow,
    }
}

/// Reduced form `R` and witness `g = [[p,q],[r,s]]` (row-major in
/// `witness`) with `F·g = R`. `witness` may be null.
///
/// # Safety
/// `out` must be writable; `witness` must be null or point to 4 writable `int64_t`.
#[no_mangle]
pub unsafe extern "C" fn qg_form_reduce(form: QgForm, out: *mut QgForm, witness: *mut i64) -> QgStatus {
    if out.is_null() {
        return QgStatus::NullPointer;
    }
    let (r, g) = try_qg!(BQForm::from(form).reduce());
    let r = match QgForm::try_from(r) {
        Ok(r) => r,
        Err(s) => return s,
    };
    let [[p, q], [u, v]] = g.entries();
    let mut m = [0i64; 4];
    for (slot, x) in m.iter_mut().zip([p, q, u, v]) {
        *slot = match i64::try_from(x) {
            Ok(x) => x,
            Err(_) => return QgStatus::Overflow,
        };
    }
    if !witness.is_null() {
        ptr::copy_nonoverlapping(m.as_ptr(), witness, 4);
    }
    put(out, r)
}

/// Whether the two forms lie in one genus.
///
/// # Safety
/// `out` must be null or point to writable memory.
#[no_mangle]
pub unsafe extern "C" fn qg_same_genus(f1: QgForm, f2: QgForm, out: *mut bool) -> QgStatus {
    let sg = try_qg!(same_genus(&f1.into(), &f2.into()));
    put(out, sg.same_genus)
}

/// Oriented (`SL₂`) and unoriented (`GL₂`) class counts of the genus of `form`.
///
/// # Safety
/// `g_sl2` and `g_gl2` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_genus_size(form: QgForm, g_sl2: *mut usize, g_gl2: *mut usize) -> QgStatus {
    if g_sl2.is_null() || g_gl2.is_null() {
        return QgStatus::NullPointer;
    }
    let (s, g) = try_qg!(quadgenus::genus_size(&form.into()));
    put(g_sl2, s);
    put(g_gl2, g)
}

/// Reduced representative of `[f1][f2]`. Both forms must be primitive of
/// discriminant `d`.
///
/// # Safety
/// `out` must be null or point to writable memory.
#[no_mangle]
pub unsafe extern "C" fn qg_compose(d: i64, f1: QgForm, f2: QgForm, out: *mut QgForm) -> QgStatus {
    let (f1, f2) = (BQForm::from(f1), BQForm::from(f2));
    for f in [f1, f2] {
        if try_qg!(f.discriminant()) != d as Int {
            return QgStatus::InvalidForm;
        }
    }
    let x = try_qg!(compose(&try_qg!(FormClass::new(&f1)), &try_qg!(FormClass::new(&f2))));
    match QgForm::try_from(x.rep()) {
        Ok(r) => put(out, r),
        Err(s) => s,
    }
}

/// Builds the class group of discriminant `d`. Release with [`qg_class_group_free`].
///
/// # Safety
/// `out` must be null or point to writable memory.
#[no_mangle]
pub unsafe extern "C" fn qg_class_group_new(d: i64, out: *mut *mut QgClassGroup) -> QgStatus {
    if out.is_null() {
        return QgStatus::NullPointer;
    }
    let disc = try_qg!(Discriminant::new(d as Int));
    put(out, Box::into_raw(Box::new(QgClassGroup(class_group(disc)))))
}

/// # Safety
/// `group` must be null or a handle from [`qg_class_group_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qg_class_group_free(group: *mut QgClassGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Class number `h`.
///
/// # Safety
/// `group` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_class_group_order(group: *const QgClassGroup, out: *mut usize) -> QgStatus {
    match group.as_ref() {
        Some(g) => put(out, g.0.order()),
        None => QgStatus::NullPointer,
    }
}

/// Reduced representative of the `index`-th class (sorted order).
///
/// # Safety
/// `group` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_class_group_class(group: *const QgClassGroup, index: usize, out: *mut QgForm) -> QgStatus {
    let Some(g) = group.as_ref() else { return QgStatus::NullPointer };
    let Some(x) = g.0.classes().get(index) else { return QgStatus::OutOfRange };
    match QgForm::try_from(x.rep()) {
        Ok(r) => put(out, r),
        Err(s) => s,
    }
}

/// Elementary divisors `n₁ | n₂ | …` of the group. `len` receives the
/// count; `BUFFER_TOO_SMALL` is returned when it exceeds `cap`.
///
/// # Safety
/// `group` must be a live handle; `buf` must hold `cap` writable `int64_t`
/// (it may be null when `cap` is 0); `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_class_group_structure(
    group: *const QgClassGroup,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> QgStatus {
    let Some(g) = group.as_ref() else { return QgStatus::NullPointer };
    if len.is_null() || (buf.is_null() && cap > 0) {
        return QgStatus::NullPointer;
    }
    let structure = try_qg!(g.0.structure());
    put(len, structure.len());
    if structure.len() > cap {
        return QgStatus::BufferTooSmall;
    }
    for (i, &n) in structure.iter().enumerate() {
        *buf.add(i) = n as i64;
    }
    QgStatus::Ok
}

/// Checks every row of the built-in table; `VERIFICATION_FAILED` when any row fails.
///
/// # Safety
/// `passed` and `total` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qg_table_verify(passed: *mut usize, total: *mut usize) -> QgStatus {
    if passed.is_null() || total.is_null() {
        return QgStatus::NullPointer;
    }
    let rows = quadgenus::table1();
    let mut ok = 0;
    for r in &rows {
        if try_qg!(quadgenus::zariski::check_row(r)).passed {
            ok += 1;
        }
    }
    put(passed, ok);
    put(total, rows.len());
    if ok == rows.len() {
        QgStatus::Ok
    } else {
        QgStatus::VerificationFailed
    }
}
