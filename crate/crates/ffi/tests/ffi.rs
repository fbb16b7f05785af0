use std::ffi::{CStr, CString};
use std::ptr;

use cocyred_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(cocyred_last_error()) }.to_string_lossy().into_owned()
}

fn basis(spec: &str, degree: usize, mode: CocyredMode) -> *mut CocyredBasis {
    let spec = CString::new(spec).unwrap();
    let mut b = ptr::null_mut();
    let status = unsafe { cocyred_basis_new(spec.as_ptr(), degree, mode, &mut b) };
    assert_eq!(status, CocyredStatus::Ok, "{}", last_error());
    b
}

#[test]
fn group_handle() {
    let spec = CString::new("d4t:2").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(cocyred_group_new(spec.as_ptr(), &mut g), CocyredStatus::Ok);
        let mut order = 0;
        assert_eq!(cocyred_group_order(g, &mut order), CocyredStatus::Ok);
        assert_eq!(order, 8);
        let mut p = 0;
        assert_eq!(cocyred_group_multiply(g, 1, 5, &mut p), CocyredStatus::Ok);
        assert_eq!(p, 5);
        assert_eq!(cocyred_group_multiply(g, 9, 1, &mut p), CocyredStatus::InvalidArgument);
        assert!(last_error().contains("out of range"));
        cocyred_group_free(g);
    }
}

#[test]
fn basis_accessors() {
    let b = basis("g1:1", 2, CocyredMode::Default);
    unsafe {
        let (mut hdim, mut len, mut tlen) = (0, 0, 0);
        assert_eq!(cocyred_basis_hdim(b, &mut hdim), CocyredStatus::Ok);
        assert_eq!(cocyred_basis_len(b, &mut len), CocyredStatus::Ok);
        assert_eq!(cocyred_basis_tensor_len(b, &mut tlen), CocyredStatus::Ok);
        assert_eq!((hdim, len, tlen), (3, 4, 16));

        let mut label = [0 as std::ffi::c_char; 16];
        assert_eq!(cocyred_basis_label(b, 0, label.as_mut_ptr(), label.len()), CocyredStatus::Ok);
        assert_eq!(CStr::from_ptr(label.as_ptr()).to_str().unwrap(), "rep:1");
        assert_eq!(cocyred_basis_label(b, 0, label.as_mut_ptr(), 3), CocyredStatus::BufferTooSmall);

        let mut signs = vec![0i8; tlen];
        assert_eq!(cocyred_basis_element(b, 1, signs.as_mut_ptr(), tlen), CocyredStatus::Ok);
        assert!(signs.iter().all(|&s| s == 1 || s == -1));
        assert_eq!(cocyred_basis_element(b, 1, signs.as_mut_ptr(), tlen - 1), CocyredStatus::BufferTooSmall);
        assert_eq!(cocyred_basis_element(b, 4, signs.as_mut_ptr(), tlen), CocyredStatus::InvalidArgument);

        let none = [0u8; 4];
        assert_eq!(cocyred_basis_combination(b, none.as_ptr(), 4, signs.as_mut_ptr(), tlen), CocyredStatus::Ok);
        assert!(signs.iter().all(|&s| s == 1));
        assert_eq!(
            cocyred_basis_combination(b, none.as_ptr(), 3, signs.as_mut_ptr(), tlen),
            CocyredStatus::InvalidArgument
        );
        cocyred_basis_free(b);
    }
}

#[test]
fn search_counts_match_cli() {
    let b = basis("cyclic:2", 3, CocyredMode::All);
    let mut r = CocyredSearchResult::default();
    unsafe {
        assert_eq!(cocyred_basis_search(b, CocyredPredicate::Improper, 2, 1 << 32, &mut r), CocyredStatus::Ok);
        assert_eq!(r, CocyredSearchResult { examined: 1 << 13, hits: 32 });
        assert_eq!(cocyred_basis_search(b, CocyredPredicate::Improper, 1, 100, &mut r), CocyredStatus::SpanTooLarge);
        cocyred_basis_free(b);
    }
}

#[test]
fn tensor_predicates() {
    let h: [i8; 4] = [1, 1, 1, -1];
    let mut ok = false;
    unsafe {
        assert_eq!(cocyred_tensor_test(h.as_ptr(), 2, 2, CocyredPredicate::Hadamard2d, &mut ok), CocyredStatus::Ok);
        assert!(ok);
        assert_eq!(cocyred_tensor_test(h.as_ptr(), 2, 2, CocyredPredicate::Proper, &mut ok), CocyredStatus::Ok);
        assert!(ok);
        let cube = [1i8; 8];
        assert_eq!(cocyred_tensor_test(cube.as_ptr(), 2, 3, CocyredPredicate::Improper, &mut ok), CocyredStatus::Ok);
        assert!(!ok);
        assert_eq!(
            cocyred_tensor_test(cube.as_ptr(), 2, 3, CocyredPredicate::Hadamard2d, &mut ok),
            CocyredStatus::InvalidArgument
        );
        let bad = [0i8; 4];
        assert_eq!(
            cocyred_tensor_test(bad.as_ptr(), 2, 2, CocyredPredicate::Proper, &mut ok),
            CocyredStatus::InvalidArgument
        );
    }
}

#[test]
fn errors_and_null_pointers() {
    let spec = CString::new("d4t:2").unwrap();
    let mut b = ptr::null_mut();
    unsafe {
        assert_eq!(cocyred_basis_new(spec.as_ptr(), 3, CocyredMode::Default, &mut b), CocyredStatus::ModelNotProvided);
        assert!(last_error().contains("model not provided by paper"));
        assert!(b.is_null());
        assert_eq!(cocyred_basis_new(ptr::null(), 2, CocyredMode::Default, &mut b), CocyredStatus::NullPointer);
        let bogus = CString::new("g7:1").unwrap();
        assert_eq!(cocyred_basis_new(bogus.as_ptr(), 2, CocyredMode::Default, &mut b), CocyredStatus::InvalidArgument);
        let mut n = 0;
        assert_eq!(cocyred_basis_hdim(ptr::null(), &mut n), CocyredStatus::NullPointer);
        cocyred_basis_free(ptr::null_mut());
        cocyred_group_free(ptr::null_mut());
    }
    let ok = basis("g1:1", 3, CocyredMode::Default);
    assert_eq!(last_error(), "");
    unsafe { cocyred_basis_free(ok) };
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/cocyred.h")).unwrap();
    for name in [
        "cocyred_last_error",
        "cocyred_group_new",
        "cocyred_group_free",
        "cocyred_group_order",
        "cocyred_group_multiply",
        "cocyred_basis_new",
        "cocyred_basis_free",
        "cocyred_basis_hdim",
        "cocyred_basis_len",
        "cocyred_basis_tensor_len",
        "cocyred_basis_label",
        "cocyred_basis_element",
        "cocyred_basis_combination",
        "cocyred_basis_search",
        "cocyred_tensor_test",
        "COCYRED_STATUS_SPAN_TOO_LARGE",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
