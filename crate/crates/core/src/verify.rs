//! Self-verification suite run by `cocyred verify`.

use std::fmt;

use crate::closed_form::closed_forms;
use crate::cochain::Cochain;
use crate::cohmodel::CohModel;
use crate::error::{Error, Result};
use crate::gf2::{self, BitMatrix, BitRow, Echelon, SnfResult};
use crate::group::{Family, FiniteGroup, GroupSpec};
use crate::reduction::{
    brute_force_cohomology, coboundary_basis, full_cocycle_basis, is_cocycle, CoboundaryMode, SparseBar, ORACLE_LIMIT,
};
use crate::tensor::{is_hadamard_2d, is_improper_hadamard, is_proper_hadamard, SignTensor};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Warn,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Warn => "WARN",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub status: Status,
    pub name: String,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    fn push(&mut self, status: Status, name: &str, detail: impl Into<String>) {
        self.checks.push(Check { status, name: name.to_string(), detail: detail.into() });
    }

    fn check(&mut self, ok: bool, name: &str, detail: impl Into<String>) {
        self.push(if ok { Status::Pass } else { Status::Fail }, name, detail);
    }

    fn outcome(&mut self, name: &str, r: Result<(bool, String)>) {
        match r {
            Ok((ok, detail)) => self.check(ok, name, detail),
            Err(e) => self.push(Status::Fail, name, e.to_string()),
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        write!(
            f,
            "summary: {} passed, {} failed, {} warnings, {} skipped",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Warn),
            self.count(Status::Skip)
        )
    }
}

/// Published `dim H^n` for the built-in models.
pub fn published_hdim(spec: GroupSpec, degree: usize) -> Option<usize> {
    let even = spec.t.is_multiple_of(2);
    match (spec.family, degree) {
        (Family::G1 | Family::D4t, 2) => Some(3),
        (Family::G2, 2) => Some(if even { 6 } else { 3 }),
        (Family::G1, 3) => Some(4),
        (Family::G2, 3) => Some(if even { 10 } else { 3 }),
        (Family::Cyclic, 3) => Some(1),
        _ => None,
    }
}

/// Ranks `(l, k)` of `d^{n−1}` and `d^n` in the published rank normal forms.
pub fn published_ranks(spec: GroupSpec, degree: usize) -> Option<(usize, usize)> {
    let odd = spec.t % 2 == 1;
    match (spec.family, degree) {
        (Family::G2, 2) if odd => Some((1, 2)),
        (Family::G2, 3) if odd => Some((2, 4)),
        (Family::G1 | Family::G2 | Family::D4t, 2) | (Family::G1 | Family::G2 | Family::Cyclic, 3) => Some((0, 0)),
        _ => None,
    }
}

/// Runs every check for the built-in model of `spec` in `degree`.
pub fn verify_builtin(spec: GroupSpec, degree: usize, mode: Option<CoboundaryMode>) -> Result<VerifyReport> {
    let model = CohModel::builtin(spec, degree)?;
    Ok(verify_model(&model, mode, true))
}

/// Runs the checks for an arbitrary model; the published tables are only
/// consulted when `builtin` is set.
pub fn verify_model(model: &CohModel, mode: Option<CoboundaryMode>, builtin: bool) -> VerifyReport {
    let mut rep = VerifyReport::default();
    let group = model.group();
    let n = model.degree();
    let mode = mode.unwrap_or_else(|| CoboundaryMode::default_for(n));
    let spec = group.spec().filter(|_| builtin);

    group_checks(&mut rep, group);
    model_checks(&mut rep, model);

    let out = match full_cocycle_basis(model, n, mode) {
        Ok(out) => {
            rep.push(Status::Pass, "basis-independent", format!("{} reps, {} cobs ({mode})", out.hdim, out.cobs.len()));
            out
        }
        Err(e) => {
            rep.push(Status::Fail, "basis-independent", e.to_string());
            return rep;
        }
    };

    let [prev, cur] = &out.snf;
    rep.outcome("snf-transform-degree-lower", snf_check(model.codifferential_matrix(n - 1), prev));
    rep.outcome("snf-transform-degree-upper", snf_check(model.codifferential_matrix(n), cur));
    let [q, r, s] = model.dims();
    rep.check(
        out.hdim == r - prev.rank - cur.rank,
        "hdim-formula",
        format!("q={q} r={r} s={s} l={} k={} dim H^{n} = {}", prev.rank, cur.rank, out.hdim),
    );

    let bar = SparseBar::new(group, n).ok();
    let cocycle = |c: &Cochain| match &bar {
        Some(b) => b.annihilates(c).unwrap_or(false),
        None => is_cocycle(group, c).unwrap_or(false),
    };
    let bad: Vec<String> = out.basis().filter(|(_, c)| !cocycle(c)).map(|(l, _)| l.to_string()).collect();
    rep.check(
        bad.is_empty(),
        "basis-cocycle-condition",
        if bad.is_empty() { format!("{} elements", out.reps.len() + out.cobs.len()) } else { bad.join(",") },
    );

    tensor_checks(&mut rep, &out.basis().map(|(_, c)| c.clone()).collect::<Vec<_>>(), n);

    if let Some(spec) = spec {
        published_checks(&mut rep, spec, n, &out.snf, out.hdim);
        closed_form_checks(&mut rep, model, spec, &out.rep_coords);
    }
    oracle_checks(&mut rep, model, &out.reps.cochains().cloned().collect::<Vec<_>>(), out.hdim);
    rep
}

fn group_checks(rep: &mut VerifyReport, group: &FiniteGroup) {
    match group.check_axioms() {
        Ok(()) => rep.push(Status::Pass, "group-axioms", format!("order {}", group.order())),
        Err(e) => rep.push(Status::Fail, "group-axioms", e),
    }
    if let Some(spec) = group.spec() {
        let ok = (1..=group.order()).all(|i| spec.coords_of(i).and_then(|c| spec.index_of(&c)).ok() == Some(i));
        rep.check(ok, "group-index-roundtrip", "index_of(coords_of(i)) = i");
        if spec.family == Family::D4t && spec.t == 1 {
            let orders: Result<Vec<_>> = (1..=4).map(|i| group.element_order(i)).collect();
            let ok = group.is_abelian() && orders.map(|o| o.iter().all(|&x| x <= 2)).unwrap_or(false);
            rep.check(ok, "d4t1-klein", "abelian with all element orders at most 2");
        }
    }
}

fn model_checks(rep: &mut VerifyReport, model: &CohModel) {
    match model.check_complex() {
        Ok(()) => rep.push(Status::Pass, "model-d-squared", "d^(n-1) followed by d^n vanishes"),
        Err(e) => rep.push(Status::Fail, "model-d-squared", e.to_string()),
    }
    let n = model.degree();
    let r = model.dims()[1];
    let res: Result<(bool, String)> = (|| {
        let dn = model.codifferential_matrix(n)?;
        let mut bad = Vec::new();
        let mut checked = 0;
        for e in 0..r {
            if !dn.row(e).is_zero() {
                continue;
            }
            checked += 1;
            if !is_cocycle(model.group(), &model.lift_cochain(&BitRow::unit(r, e))?)? {
                bad.push(format!("e{}", e + 1));
            }
        }
        Ok(if bad.is_empty() {
            (true, format!("{checked} kernel elements"))
        } else {
            (false, format!("not cocycles: {}", bad.join(",")))
        })
    })();
    rep.outcome("lift-cocycles", res);
}

fn snf_check(m: Result<&BitMatrix>, snf: &SnfResult) -> Result<(bool, String)> {
    let m = m?;
    let pmq = snf.p.mul(m)?.mul(&snf.q)?;
    let inv = snf.p.mul(&snf.p_inv)? == BitMatrix::identity(m.rows())
        && snf.q.mul(&snf.q_inv)? == BitMatrix::identity(m.cols());
    let greedy = gf2::greedy_independent_rows(m).1;
    Ok((pmq == snf.d && inv && greedy == snf.rank, format!("{}x{} rank {}", m.rows(), m.cols(), snf.rank)))
}

fn is_rank_diagonal(d: &BitMatrix, rank: usize) -> bool {
    (0..d.rows()).all(|i| (0..d.cols()).all(|j| d.get(i, j) == (i == j && i < rank)))
}

fn published_checks(rep: &mut VerifyReport, spec: GroupSpec, n: usize, snf: &[SnfResult; 2], hdim: usize) {
    if let Some((l, k)) = published_ranks(spec, n) {
        let ok =
            snf[0].rank == l && snf[1].rank == k && is_rank_diagonal(&snf[0].d, l) && is_rank_diagonal(&snf[1].d, k);
        rep.check(ok, "d-tables", format!("expected ranks l={l} k={k}, got l={} k={}", snf[0].rank, snf[1].rank));
    }
    match published_hdim(spec, n) {
        Some(p) if p == hdim => rep.push(Status::Pass, "published-hdim", format!("dim H^{n} = {hdim}")),
        Some(p) if spec.family == Family::G2 && n == 3 => rep.push(
            Status::Warn,
            "published-hdim",
            format!("computed dim H^3 = {hdim} (basis v7..v10), printed value Z_2^{p}"),
        ),
        Some(p) => rep.push(Status::Fail, "published-hdim", format!("computed {hdim}, expected {p}")),
        None => {}
    }
}

fn closed_form_checks(rep: &mut VerifyReport, model: &CohModel, spec: GroupSpec, coords: &[BitRow]) {
    let forms = match closed_forms(spec, model.degree()) {
        Ok(f) => f,
        Err(e) => {
            rep.push(Status::Skip, "closed-forms", e.to_string());
            return;
        }
    };
    let r = model.dims()[1];
    let mut bad = Vec::new();
    let mut reps_matched = 0;
    for cf in &forms {
        let unit = BitRow::unit(r, cf.element);
        match model.lift_cochain(&unit) {
            Ok(c) if SignTensor::from_cochain(&c) == cf.tensor => {}
            _ => bad.push(cf.name.clone()),
        }
        if coords.contains(&unit) {
            reps_matched += 1;
        }
    }
    rep.check(
        bad.is_empty(),
        "closed-forms",
        if bad.is_empty() {
            format!("{} lifted matrices, {reps_matched} of them representatives", forms.len())
        } else {
            format!("mismatch: {}", bad.join(","))
        },
    );
}

fn tensor_checks(rep: &mut VerifyReport, basis: &[Cochain], n: usize) {
    let mut ok = true;
    for w in basis.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let sum = a.add(b).map(|c| SignTensor::from_cochain(&c));
        let prod = SignTensor::from_cochain(a).mul(&SignTensor::from_cochain(b));
        ok &= matches!((sum, prod), (Ok(x), Ok(y)) if x == y);
    }
    rep.check(ok, "tensor-homomorphism", format!("{} adjacent pairs", basis.len().saturating_sub(1)));

    let mut ok = true;
    let mut tensors: Vec<SignTensor> = basis.iter().map(SignTensor::from_cochain).collect();
    let mut acc = None::<SignTensor>;
    for t in basis.iter().map(SignTensor::from_cochain) {
        acc = Some(match acc {
            Some(a) => a.mul(&t).expect("same shape"),
            None => t,
        });
        tensors.push(acc.clone().expect("just set"));
    }
    for t in &tensors {
        let (imp, pro) = (is_improper_hadamard(t), is_proper_hadamard(t));
        ok &= !pro || imp;
        if n == 2 {
            ok &= is_hadamard_2d(t).map(|h| h == imp && h == pro).unwrap_or(false);
        }
    }
    rep.check(ok, "predicate-consistency", format!("{} tensors", tensors.len()));
}

fn oracle_checks(rep: &mut VerifyReport, model: &CohModel, reps: &[Cochain], hdim: usize) {
    let group = model.group();
    let n = model.degree();
    let size = (group.order() as u128).pow(n as u32 + 1);
    if size > ORACLE_LIMIT {
        rep.push(Status::Skip, "oracle", Error::OracleTooLarge { size }.to_string());
        return;
    }
    // reps and cobs are cocycles, cobs are coboundaries by construction, and
    // the union is independent; equal dimensions then give equal spans
    let res: Result<(bool, String)> = (|| {
        let bf = brute_force_cohomology(group, n)?;
        let cobs = coboundary_basis(group, n, CoboundaryMode::All)?;
        let bar = SparseBar::new(group, n)?;
        let mut cocycles = true;
        for c in cobs.cochains().chain(reps) {
            cocycles &= bar.annihilates(c)?;
        }
        let mut span = Echelon::new(group.order().pow(n as u32));
        let independent = cobs.cochains().chain(reps).all(|c| span.insert(c.bits().clone()));
        let image_ok = cobs.len() == bf.image.len();
        let kernel_ok = cocycles && independent && span.rank() == bf.kernel.len();
        Ok((
            image_ok && kernel_ok && bf.hdim == hdim,
            format!(
                "ker {} im {} brute-force dim H^{n} = {}; span(reps, cobs ALL) {}",
                bf.kernel.len(),
                bf.image.len(),
                bf.hdim,
                if kernel_ok { "= Ker" } else { "!= Ker" }
            ),
        ))
    })();
    rep.outcome("oracle", res);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_pass() {
        for (s, n) in [("g1:1", 2), ("g2:2", 2), ("g2:3", 2), ("d4t:2", 2), ("g1:1", 3), ("cyclic:2", 3)] {
            let r = verify_builtin(s.parse().unwrap(), n, None).unwrap();
            assert!(r.passed(), "{s} n={n}\n{r}");
            assert_eq!(r.count(Status::Warn), 0, "{r}");
        }
    }

    #[test]
    fn g2_odd_degree_three_warns() {
        let r = verify_builtin("g2:1".parse().unwrap(), 3, None).unwrap();
        assert!(r.passed(), "{r}");
        let w: Vec<_> = r.checks.iter().filter(|c| c.status == Status::Warn).collect();
        assert_eq!(w.len(), 1);
        assert!(w[0].detail.contains("= 4"));
    }

    #[test]
    fn corrupted_model_fails() {
        let good = CohModel::builtin("g1:1".parse().unwrap(), 2).unwrap();
        let mut table = good.lift_table();
        table[5].flip(0);
        let bad = CohModel::from_parts(
            good.group().clone(),
            2,
            good.dims(),
            [good.codifferential_matrix(1).unwrap().clone(), good.codifferential_matrix(2).unwrap().clone()],
            table,
        )
        .unwrap();
        let r = verify_model(&bad, None, false);
        assert!(!r.passed(), "{r}");
        assert!(r.to_string().lines().any(|l| l.starts_with("FAIL lift-cocycles")));
    }
}
