//! Known closed forms of the lifted cocyclic matrices `(−1)^{F*(e*)}`.
//!
//! Degree-2 forms are matrices of side `|G|`; degree-3 forms are given as the
//! list of their horizontal sections.

use crate::error::{Error, Result};
use crate::group::{Family, GroupSpec};
use crate::tensor::{
    a_matrix, all_ones, b_block, back_negacyclic, forward_negacyclic, k1, k2, k3, kron_all, SignTensor,
};

/// Expected tensor of the lift of a single dual basis element.
#[derive(Clone, Debug)]
pub struct ClosedForm {
    /// 0-based index of the dual basis element in the model.
    pub element: usize,
    pub name: String,
    pub tensor: SignTensor,
}

fn kron(parts: &[SignTensor]) -> SignTensor {
    kron_all(parts).expect("matrices")
}

/// `v` sections cycling through `pattern`.
fn periodic(v: usize, pattern: &[SignTensor]) -> SignTensor {
    let sections: Vec<_> = (0..v).map(|k| pattern[k % pattern.len()].clone()).collect();
    SignTensor::from_sections(&sections).expect("uniform sections")
}

/// Square block matrix `[[tl, tr], [bl, br]]`.
fn blocks(tl: &SignTensor, tr: &SignTensor, bl: &SignTensor, br: &SignTensor) -> SignTensor {
    let h = tl.side();
    SignTensor::from_fn(2 * h, 2, |c| {
        let (r, s) = (c[0] % h, c[1] % h);
        let b = match (c[0] / h, c[1] / h) {
            (0, 0) => tl,
            (0, _) => tr,
            (_, 0) => bl,
            _ => br,
        };
        b.sign0(r * h + s)
    })
}

fn signs_matrix(side: usize, f: impl Fn(usize, usize) -> i8) -> SignTensor {
    SignTensor::from_fn(side, 2, |c| f(c[0], c[1]))
}

fn d4t_e3(t: usize) -> SignTensor {
    let n = 2 * t;
    let bn = back_negacyclic(n - 1);
    let fnm = forward_negacyclic(n - 1);
    let first_col = |r: usize| if r == 0 || r % 2 == 1 { 1 } else { -1 };
    let odd_neg = |r: usize| if r % 2 == 1 { -1 } else { 1 };
    let top_right = signs_matrix(n, |r, c| match (r, c) {
        (0, _) => 1,
        (_, 0) => first_col(r),
        _ => odd_neg(r) * bn.sign0((r - 1) * (n - 1) + c - 1),
    });
    let bottom_right = signs_matrix(n, |r, c| match (r, c) {
        (_, 0) => first_col(r),
        _ if r == n - 1 => -1,
        _ => odd_neg(r) * fnm.sign0(r * (n - 1) + c - 1),
    });
    blocks(&back_negacyclic(n), &top_right, &forward_negacyclic(n), &bottom_right)
}

fn form(element: usize, name: &str, tensor: SignTensor) -> ClosedForm {
    ClosedForm { element, name: name.to_string(), tensor }
}

/// Closed forms available for the built-in model of `spec` in `degree`.
///
/// Elements without a known closed form for the given `t` are omitted.
pub fn closed_forms(spec: GroupSpec, degree: usize) -> Result<Vec<ClosedForm>> {
    let t = spec.t;
    let v = spec.order();
    let j = |k: usize| all_ones(k);
    let bn2 = back_negacyclic(2);
    let even = t.is_multiple_of(2);
    let mut out = Vec::new();
    match (spec.family, degree) {
        (Family::G1, 2) => {
            out.push(form(0, "e1", kron(&[back_negacyclic(2 * t), j(2)])));
            out.push(form(1, "e2", kron(&[j(t), a_matrix()])));
            out.push(form(2, "e3", kron(&[j(2 * t), bn2])));
        }
        (Family::G2, 2) => {
            out.push(form(0, "e1", kron(&[back_negacyclic(t), j(4)])));
            if even {
                out.push(form(1, "e2", kron(&[j(t / 2), k2()])));
                out.push(form(2, "e3", kron(&[j(t / 2), k3()])));
            }
            out.push(form(3, "e4", kron(&[j(t), bn2.clone(), j(2)])));
            out.push(form(4, "e5", kron(&[j(t), k1()])));
            out.push(form(5, "e6", kron(&[j(2 * t), bn2])));
        }
        (Family::D4t, 2) => {
            out.push(form(0, "e1", kron(&[bn2, j(2 * t)])));
            let right = kron(&[j(t), signs_matrix(2, |r, _| if r == 0 { 1 } else { -1 })]);
            out.push(form(1, "e2", blocks(&j(2 * t), &right, &j(2 * t), &right)));
            out.push(form(2, "e3", d4t_e3(t)));
        }
        (Family::G1, 3) => {
            let jv = j(v);
            let x1 = kron(&[back_negacyclic(2 * t), j(2)]);
            out.push(form(0, "v1", periodic(v, &[jv.clone(), jv.clone(), x1.clone(), x1.clone()])));
            out.push(form(1, "v2", periodic(v, &[jv.clone(), x1])));
            out.push(form(2, "v3", periodic(v, &[jv.clone(), kron(&[j(t), a_matrix()])])));
            out.push(form(3, "v4", periodic(v, &[jv, kron(&[j(2 * t), bn2])])));
        }
        (Family::G2, 3) => {
            let jv = j(v);
            let x = kron(&[back_negacyclic(t), j(4)]);
            if even {
                let mut p = vec![jv.clone(); 4];
                p.extend(vec![x.clone(); 4]);
                out.push(form(0, "v1", periodic(v, &p)));
            }
            out.push(form(1, "v2", periodic(v, &[jv.clone(), jv.clone(), x.clone(), x.clone()])));
            out.push(form(2, "v3", periodic(v, &[jv.clone(), x])));
            if even {
                let y = kron(&[j(t / 2), a_matrix(), j(2)]);
                out.push(form(3, "v4", periodic(v, &[jv.clone(), jv.clone(), y.clone(), y.clone()])));
                out.push(form(4, "v5", periodic(v, &[jv.clone(), y])));
                let w = blocks(&j(4), &j(4), &b_block(), &b_block());
                out.push(form(5, "v6", periodic(v, &[jv.clone(), kron(&[j(t / 2), w])])));
            }
            let z = kron(&[j(t), bn2.clone(), j(2)]);
            out.push(form(6, "v7", periodic(v, &[jv.clone(), jv.clone(), z.clone(), z.clone()])));
            out.push(form(7, "v8", periodic(v, &[jv.clone(), z])));
            out.push(form(8, "v9", periodic(v, &[jv.clone(), kron(&[j(t), a_matrix()])])));
            out.push(form(9, "v10", periodic(v, &[jv, kron(&[j(2 * t), bn2])])));
        }
        (Family::Cyclic, 3) => {
            out.push(form(0, "v1", periodic(v, &[j(v), back_negacyclic(v)])));
        }
        (family, degree) => return Err(Error::ModelNotProvided { family: family.name().to_string(), degree }),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohmodel::CohModel;
    use crate::gf2::BitRow;

    fn check_all(spec: &str, degree: usize) {
        let spec: GroupSpec = spec.parse().unwrap();
        let model = CohModel::builtin(spec, degree).unwrap();
        let dim = model.dims()[1];
        for cf in closed_forms(spec, degree).unwrap() {
            let lifted = model.lift_cochain(&BitRow::unit(dim, cf.element)).unwrap();
            assert_eq!(SignTensor::from_cochain(&lifted), cf.tensor, "{spec} {}", cf.name);
        }
    }

    #[test]
    fn lifts_match_closed_forms() {
        for t in 1..=4 {
            for fam in ["g1", "g2", "d4t"] {
                check_all(&format!("{fam}:{t}"), 2);
            }
            check_all(&format!("g1:{t}"), 3);
            check_all(&format!("g2:{t}"), 3);
            check_all(&format!("cyclic:{t}"), 3);
        }
    }

    #[test]
    fn unsupported_pairs_are_reported() {
        let e = closed_forms("d4t:2".parse().unwrap(), 3).unwrap_err();
        assert!(e.to_string().contains("model not provided by paper"));
    }
}
