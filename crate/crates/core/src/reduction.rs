//! Bases for n-cocycles over a finite group.
//!
//! Representative cocycles come from the model: the rank normal forms of
//! `d^{n−1}` and `d^n` give an image basis (first `l` rows of `Q_{n−1}^{-1}`)
//! and a kernel basis (last `r−k` rows of `P_n`); kernel rows outside the span
//! of the image are kept and pushed through the lift. Coboundaries come from
//! row-reducing the characteristic coboundaries `∂_T` directly on the group.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cochain::{advance, Cochain};
use crate::cohmodel::CohModel;
use crate::error::{Error, Result};
use crate::gf2::{self, BitRow, Echelon, SnfResult};
use crate::group::FiniteGroup;

/// Which characteristic coboundaries are scanned.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoboundaryMode {
    /// Every tuple of `G^{n−1}`.
    All,
    /// Only tuples with no identity coordinate.
    Normalized,
}

impl CoboundaryMode {
    /// NORMALIZED in degree 2, ALL above.
    pub fn default_for(degree: usize) -> CoboundaryMode {
        if degree <= 2 {
            CoboundaryMode::Normalized
        } else {
            CoboundaryMode::All
        }
    }
}

impl FromStr for CoboundaryMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(CoboundaryMode::All),
            "normalized" => Ok(CoboundaryMode::Normalized),
            _ => Err(format!("unknown mode `{s}` (expected all or normalized)")),
        }
    }
}

impl fmt::Display for CoboundaryMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoboundaryMode::All => "all",
            CoboundaryMode::Normalized => "normalized",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// m-th representative cocycle (1-based).
    Rep(usize),
    /// Coboundary of the characteristic cochain of tuple `T` (1-based).
    Cob(usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Rep(m) => write!(f, "rep:{m}"),
            Label::Cob(t) => write!(f, "cob:{t}"),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    /// Accepts `rep:3`, `r3`, `cob:4` and `c4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnknownLabel(s.to_string());
        let (kind, num) = if let Some((k, n)) = s.split_once(':') {
            (k, n)
        } else {
            let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
            s.split_at(split)
        };
        let num: usize = num.parse().map_err(|_| bad())?;
        if num == 0 {
            return Err(bad());
        }
        match kind {
            "rep" | "r" => Ok(Label::Rep(num)),
            "cob" | "c" => Ok(Label::Cob(num)),
            _ => Err(bad()),
        }
    }
}

/// Labelled, GF(2)-independent cochains of a common degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CochainBasis {
    pub entries: Vec<(Label, Cochain)>,
}

impl CochainBasis {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        self.entries.iter().map(|(l, _)| *l)
    }

    pub fn cochains(&self) -> impl Iterator<Item = &Cochain> + '_ {
        self.entries.iter().map(|(_, c)| c)
    }

    pub fn get(&self, label: Label) -> Option<&Cochain> {
        self.entries.iter().find(|(l, _)| *l == label).map(|(_, c)| c)
    }
}

#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub reps: CochainBasis,
    pub cobs: CochainBasis,
    pub hdim: usize,
    /// Model coordinates of each representative, in the order of `reps`.
    pub rep_coords: Vec<BitRow>,
    /// Rank normal forms of `d^{n−1}` and `d^n`.
    pub snf: [SnfResult; 2],
    pub mode: CoboundaryMode,
}

impl ReductionOutput {
    pub fn degree(&self) -> usize {
        self.reps.cochains().chain(self.cobs.cochains()).next().map_or(0, Cochain::degree)
    }

    /// Representatives followed by coboundaries.
    pub fn basis(&self) -> impl Iterator<Item = &(Label, Cochain)> + '_ {
        self.reps.entries.iter().chain(&self.cobs.entries)
    }
}

/// `(df)(h_1,…,h_{n+1}) = f(h_2,…,h_{n+1}) + f(h_1,…,h_n) + Σ_j f(…, h_j h_{j+1}, …)`.
pub fn bar_codifferential(group: &FiniteGroup, f: &Cochain) -> Result<Cochain> {
    let v = group.order();
    if f.order() != v {
        return Err(Error::LengthMismatch { expected: v, actual: f.order() });
    }
    let n = f.degree();
    if n == 0 {
        return Err(Error::DegreeMismatch { expected: 1, actual: 0 });
    }
    let mut faces = Vec::with_capacity(n + 2);
    Ok(Cochain::from_fn0(v, n + 1, |h| {
        faces.clear();
        face_indices(group, h, &mut faces);
        faces.iter().fold(false, |acc, &i| acc ^ f.value0(i))
    }))
}

/// 0-based flat indices in `G^{len−1}` of the faces of `h`: the tail, the
/// head, and one merge `h_j h_{j+1}` for each adjacent pair.
fn face_indices(group: &FiniteGroup, h: &[usize], out: &mut Vec<usize>) {
    let v = group.order();
    let flat = |it: &mut dyn Iterator<Item = usize>| it.fold(0, |acc, x| acc * v + x);
    out.push(flat(&mut h[1..].iter().copied()));
    out.push(flat(&mut h[..h.len() - 1].iter().copied()));
    for j in 0..h.len() - 1 {
        let merged = group.mul0(h[j], h[j + 1]);
        out.push(flat(&mut h[..j].iter().copied().chain([merged]).chain(h[j + 2..].iter().copied())));
    }
}

/// The degree-`n` coboundary `∂_T` of the characteristic cochain of the
/// tuple with 1-based index `T` in `G^{n−1}`.
pub fn coboundary_generator(group: &FiniteGroup, n: usize, tuple_index: usize) -> Result<Cochain> {
    if n < 2 {
        return Err(Error::DegreeOutOfRange { degree: n, min: 2, max: usize::MAX });
    }
    let v = group.order();
    let max = v.pow(n as u32 - 1);
    if tuple_index == 0 || tuple_index > max {
        return Err(Error::TupleOutOfRange { index: tuple_index, max });
    }
    let mut g = vec![0; n - 1];
    let mut rest = tuple_index - 1;
    for slot in g.iter_mut().rev() {
        *slot = rest % v;
        rest /= v;
    }
    let mut bits = BitRow::zeros(v.pow(n as u32));
    let flat = |h: &[usize]| h.iter().fold(0, |acc, &x| acc * v + x);
    let mut h = vec![0; n];
    for x in 0..v {
        // tail (h_2..h_n) = g
        h[0] = x;
        h[1..].copy_from_slice(&g);
        bits.flip(flat(&h));
        // head (h_1..h_{n-1}) = g
        h[..n - 1].copy_from_slice(&g);
        h[n - 1] = x;
        bits.flip(flat(&h));
        // h_j h_{j+1} = g_j
        for j in 0..n - 1 {
            h[..j].copy_from_slice(&g[..j]);
            h[j] = x;
            h[j + 1] = group.mul0(group.inv0(x), g[j]);
            h[j + 2..].copy_from_slice(&g[j + 1..]);
            bits.flip(flat(&h));
        }
    }
    Cochain::from_bits(v, n, bits)
}

fn has_identity_coordinate(group: &FiniteGroup, n: usize, index0: usize) -> bool {
    let v = group.order();
    let mut rest = index0;
    for _ in 0..n {
        if rest % v == group.identity0() {
            return true;
        }
        rest /= v;
    }
    false
}

/// Basis of n-coboundaries: the first independent `∂_T` in index order.
pub fn coboundary_basis(group: &FiniteGroup, n: usize, mode: CoboundaryMode) -> Result<CochainBasis> {
    if n < 2 {
        return Err(Error::DegreeOutOfRange { degree: n, min: 2, max: usize::MAX });
    }
    let v = group.order();
    let mut ech = Echelon::new(v.pow(n as u32));
    let mut entries = Vec::new();
    for t0 in 0..v.pow(n as u32 - 1) {
        if mode == CoboundaryMode::Normalized && has_identity_coordinate(group, n - 1, t0) {
            continue;
        }
        let c = coboundary_generator(group, n, t0 + 1)?;
        if ech.insert(c.bits().clone()) {
            entries.push((Label::Cob(t0 + 1), c));
        }
    }
    Ok(CochainBasis { entries })
}

struct Representatives {
    basis: CochainBasis,
    coords: Vec<BitRow>,
    snf: [SnfResult; 2],
}

fn representatives(model: &CohModel, n: usize) -> Result<Representatives> {
    if model.degree() != n {
        return Err(Error::DegreeMismatch { expected: model.degree(), actual: n });
    }
    let prev = gf2::smith_normal_form(model.codifferential_matrix(n - 1)?);
    let cur = gf2::smith_normal_form(model.codifferential_matrix(n)?);
    let r = model.dims()[1];
    let wanted = r - cur.rank - prev.rank;
    let mut ech = Echelon::new(r);
    for row in prev.image_basis() {
        ech.insert(row.clone());
    }
    let mut coords = Vec::with_capacity(wanted);
    for row in cur.kernel_basis() {
        if coords.len() == wanted {
            break;
        }
        if ech.insert(row.clone()) {
            coords.push(row.clone());
        }
    }
    if coords.len() != wanted {
        return Err(Error::Dependent(format!("found {} representatives, expected r-k-l = {wanted}", coords.len())));
    }
    let entries = coords
        .iter()
        .enumerate()
        .map(|(m, c)| Ok((Label::Rep(m + 1), model.lift_cochain(c)?)))
        .collect::<Result<_>>()?;
    Ok(Representatives { basis: CochainBasis { entries }, coords, snf: [prev, cur] })
}

/// Representative n-cocycles lifted from the model, labelled `rep:1..`.
pub fn representative_cocycles(model: &CohModel, n: usize) -> Result<CochainBasis> {
    Ok(representatives(model, n)?.basis)
}

/// Representatives juxtaposed with a coboundary basis; checks that the
/// union is independent.
pub fn full_cocycle_basis(model: &CohModel, n: usize, mode: CoboundaryMode) -> Result<ReductionOutput> {
    let reps = representatives(model, n)?;
    let cobs = coboundary_basis(model.group(), n, mode)?;
    let len = model.group().order().pow(n as u32);
    let mut ech = Echelon::new(len);
    for (label, c) in reps.basis.entries.iter().chain(&cobs.entries) {
        if !ech.insert(c.bits().clone()) {
            return Err(Error::Dependent(format!("{label} lies in the span of the preceding elements")));
        }
    }
    Ok(ReductionOutput {
        hdim: reps.coords.len(),
        reps: reps.basis,
        cobs,
        rep_coords: reps.coords,
        snf: reps.snf,
        mode,
    })
}

/// Cohomology of the bar complex computed directly on the group.
#[derive(Clone, Debug)]
pub struct BruteForceCohomology {
    pub hdim: usize,
    /// Basis of `Ker(d^n)`.
    pub kernel: Vec<Cochain>,
    /// Basis of `Im(d^{n−1})`.
    pub image: Vec<Cochain>,
}

pub const ORACLE_LIMIT: u128 = 1 << 20;

/// The degree-`n` bar codifferential as a sparse matrix: row `T` lists, in
/// ascending order, the 0-based tuples `h ∈ G^{n+1}` having `T` an odd
/// number of times among their faces.
#[derive(Clone, Debug)]
pub struct SparseBar {
    order: usize,
    degree: usize,
    rows: Vec<Vec<u32>>,
}

impl SparseBar {
    pub fn new(group: &FiniteGroup, n: usize) -> Result<SparseBar> {
        let v = group.order();
        let size = (v as u128).pow(n as u32 + 1);
        if n == 0 || size > u32::MAX as u128 {
            return Err(Error::OracleTooLarge { size });
        }
        let mut rows = vec![Vec::new(); v.pow(n as u32)];
        for_each_face_set(group, n, |col, faces| {
            for &f in faces {
                let row: &mut Vec<u32> = &mut rows[f];
                if row.last() == Some(&(col as u32)) {
                    row.pop();
                } else {
                    row.push(col as u32);
                }
            }
        });
        Ok(SparseBar { order: v, degree: n, rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `df` as an ascending list of the tuples where it is nonzero.
    pub fn apply(&self, f: &Cochain) -> Result<Vec<u32>> {
        if f.order() != self.order || f.degree() != self.degree {
            return Err(Error::ShapeMismatch(format!(
                "cochain of order/degree {}/{} for a codifferential of {}/{}",
                f.order(),
                f.degree(),
                self.order,
                self.degree
            )));
        }
        let mut hits: Vec<u32> = f.bits().ones().flat_map(|t| self.rows[t].iter().copied()).collect();
        hits.sort_unstable();
        let mut out = Vec::new();
        for run in hits.chunk_by(|a, b| a == b) {
            if run.len() % 2 == 1 {
                out.push(run[0]);
            }
        }
        Ok(out)
    }

    pub fn annihilates(&self, f: &Cochain) -> Result<bool> {
        Ok(self.apply(f)?.is_empty())
    }
}

/// Calls `visit(h, faces)` for every 0-based flat `h ∈ G^{n+1}` in order.
fn for_each_face_set(group: &FiniteGroup, n: usize, mut visit: impl FnMut(usize, &[usize])) {
    let v = group.order();
    let mut h = vec![0; n + 1];
    let mut faces = Vec::with_capacity(n + 2);
    for col in 0..v.pow(n as u32 + 1) {
        faces.clear();
        face_indices(group, &h, &mut faces);
        visit(col, &faces);
        advance(&mut h, v);
    }
}

/// A generating set chosen greedily in index order, together with a
/// spanning tree of the Cayley graph: every element outside `{e} ∪ S` is
/// listed after its parent `a` as `(a·s, a, s)`.
fn cayley_tree(group: &FiniteGroup) -> (Vec<usize>, Vec<(usize, usize, usize)>) {
    let v = group.order();
    let e = group.identity0();
    let mut gens = Vec::new();
    let mut reached = vec![false; v];
    reached[e] = true;
    for g in 0..v {
        if reached[g] {
            continue;
        }
        gens.push(g);
        // close the reached set, which stays a subgroup
        let mut frontier: Vec<usize> = (0..v).filter(|&x| reached[x]).collect();
        while let Some(x) = frontier.pop() {
            for &s in &gens {
                let y = group.mul0(x, s);
                if !reached[y] {
                    reached[y] = true;
                    frontier.push(y);
                }
            }
        }
    }
    let mut seen = vec![false; v];
    seen[e] = true;
    for &s in &gens {
        seen[s] = true;
    }
    let mut tree = Vec::new();
    let mut queue: std::collections::VecDeque<usize> = gens.iter().copied().collect();
    while let Some(a) = queue.pop_front() {
        for &s in &gens {
            let g = group.mul0(a, s);
            if !seen[g] {
                seen[g] = true;
                tree.push((g, a, s));
                queue.push_back(g);
            }
        }
    }
    (gens, tree)
}

/// Solves the cocycle equations `Σ_faces f(face of h) = 0`, one per
/// `h ∈ G^{n+1}`, over the unknowns `f(T)`, `T ∈ G^n`.
///
/// The equation at `h = (a, s, y)` gives `f(as, y)` in terms of values whose
/// first argument is `a` or `s`, so walking the Cayley tree expresses every
/// unknown through those with first argument in `{e} ∪ S`. The remaining
/// equations are then eliminated in that smaller space.
fn cocycle_space(group: &FiniteGroup, n: usize) -> Vec<BitRow> {
    let v = group.order();
    let len = v.pow(n as u32);
    let block = len / v;
    let (gens, tree) = cayley_tree(group);
    let mut base_slot = vec![usize::MAX; v];
    for (i, &g) in std::iter::once(&group.identity0()).chain(&gens).enumerate() {
        base_slot[g] = i;
    }
    let width = (gens.len() + 1) * block;
    let mut expr = vec![BitRow::zeros(width); len];
    for t in 0..len {
        let slot = base_slot[t / block];
        if slot != usize::MAX {
            expr[t].set(slot * block + t % block, true);
        }
    }
    let mut h = vec![0; n + 1];
    let mut faces = Vec::with_capacity(n + 2);
    for &(g, a, s) in &tree {
        for y in 0..block {
            h[0] = a;
            h[1] = s;
            let mut rest = y;
            for slot in h[2..].iter_mut().rev() {
                *slot = rest % v;
                rest /= v;
            }
            faces.clear();
            face_indices(group, &h, &mut faces);
            let target = g * block + y;
            let mut acc = BitRow::zeros(width);
            for &f in faces.iter().filter(|&&f| f != target) {
                acc.xor_assign(&expr[f]);
            }
            expr[target] = acc;
        }
    }
    let mut ech = Echelon::new(width);
    for_each_face_set(group, n, |_, faces| {
        let mut eq = BitRow::zeros(width);
        for &f in faces {
            eq.xor_assign(&expr[f]);
        }
        if !eq.is_zero() {
            ech.insert(eq);
        }
    });
    gf2::null_space(&ech).into_iter().map(|z| BitRow::from_bools(expr.iter().map(|e| e.dot(&z)))).collect()
}

pub fn brute_force_cohomology(group: &FiniteGroup, n: usize) -> Result<BruteForceCohomology> {
    if n == 0 {
        return Err(Error::DegreeOutOfRange { degree: n, min: 1, max: usize::MAX });
    }
    let v = group.order();
    let size = (v as u128).pow(n as u32 + 1);
    if size > ORACLE_LIMIT {
        return Err(Error::OracleTooLarge { size });
    }
    let kernel =
        cocycle_space(group, n).into_iter().map(|k| Cochain::from_bits(v, n, k)).collect::<Result<Vec<_>>>()?;
    // d^0 vanishes on constants
    let image = if n == 1 {
        Vec::new()
    } else {
        let len = v.pow(n as u32);
        let mut rows = vec![BitRow::zeros(len); v.pow(n as u32 - 1)];
        for_each_face_set(group, n - 1, |col, faces| {
            for &f in faces {
                rows[f].flip(col);
            }
        });
        let (sel, _) = gf2::greedy_independent(&rows, len);
        sel.into_iter().map(|i| Cochain::from_bits(v, n, rows[i].clone())).collect::<Result<Vec<_>>>()?
    };
    Ok(BruteForceCohomology { hdim: kernel.len() - image.len(), kernel, image })
}

/// Whether `f` satisfies the cocycle condition.
pub fn is_cocycle(group: &FiniteGroup, f: &Cochain) -> Result<bool> {
    Ok(bar_codifferential(group, f)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn grp(s: &str) -> FiniteGroup {
        FiniteGroup::build(s.parse::<GroupSpec>().unwrap())
    }

    fn z2() -> FiniteGroup {
        FiniteGroup::from_table(&[vec![1, 2], vec![2, 1]]).unwrap()
    }

    #[test]
    fn homomorphisms_are_cocycles() {
        // projection Z_{2t} × Z_2 -> Z_2 on the second factor
        let g = grp("g1:2");
        let spec = g.spec().unwrap();
        let f = Cochain::from_fn0(g.order(), 1, |t| spec.coords_of(t[0] + 1).unwrap()[1] == 1);
        assert!(bar_codifferential(&g, &f).unwrap().is_zero());
    }

    #[test]
    fn characteristic_coboundaries_coincide_on_klein_group() {
        let g = grp("g1:1");
        let d: Vec<Cochain> =
            (2..=4).map(|i| bar_codifferential(&g, &Cochain::delta(4, 1, i).unwrap()).unwrap()).collect();
        assert!(!d[0].is_zero());
        assert_eq!(d[0], d[1]);
        assert_eq!(d[1], d[2]);
        assert_eq!(coboundary_generator(&g, 2, 2).unwrap(), d[0]);
    }

    #[test]
    fn d_squared_vanishes() {
        for s in ["g1:1", "g1:2", "d4t:2", "cyclic:3", "cyclic:4"] {
            let g = grp(s);
            let v = g.order();
            for n in 1..=2 {
                for i in 1..=v.pow(n as u32) {
                    let f = Cochain::delta(v, n, i).unwrap();
                    let dd = bar_codifferential(&g, &bar_codifferential(&g, &f).unwrap()).unwrap();
                    assert!(dd.is_zero(), "{s} n={n} delta {i}");
                }
            }
        }
    }

    #[test]
    fn generator_matches_codifferential_of_delta() {
        for s in ["g1:1", "g2:2", "d4t:2", "cyclic:3"] {
            let g = grp(s);
            let v = g.order();
            for n in 2..=3 {
                for t in 1..=v.pow(n as u32 - 1) {
                    let via_formula = bar_codifferential(&g, &Cochain::delta(v, n - 1, t).unwrap()).unwrap();
                    assert_eq!(coboundary_generator(&g, n, t).unwrap(), via_formula, "{s} n={n} T={t}");
                }
            }
        }
    }

    #[test]
    fn generator_examples() {
        assert!(coboundary_generator(&z2(), 2, 2).unwrap().is_zero());
        // Z_4, T = 1: odd number of {h2 = 1, h1 = 1, h1 h2 = 1}
        let z4 = grp("cyclic:2");
        let c = coboundary_generator(&z4, 2, 1).unwrap();
        for h1 in 1..=4 {
            for h2 in 1..=4 {
                let hits = (h2 == 1) as u8 + (h1 == 1) as u8 + (z4.multiply(h1, h2).unwrap() == 1) as u8;
                assert_eq!(c.value(&[h1, h2]).unwrap(), hits % 2 == 1);
            }
        }
        assert!(coboundary_generator(&z4, 2, 5).is_err());
        assert!(coboundary_generator(&z4, 1, 1).is_err());
    }

    #[test]
    fn coboundary_basis_cardinalities() {
        let klein = grp("g1:1");
        let b = coboundary_basis(&klein, 2, CoboundaryMode::Normalized).unwrap();
        assert_eq!(b.labels().collect::<Vec<_>>(), vec![Label::Cob(2)]);
        assert_eq!(coboundary_basis(&grp("cyclic:2"), 3, CoboundaryMode::All).unwrap().len(), 12);
        assert_eq!(coboundary_basis(&klein, 3, CoboundaryMode::All).unwrap().len(), 11);
    }

    #[test]
    fn coboundary_span_equals_image() {
        for s in ["g1:1", "d4t:2", "cyclic:3"] {
            let g = grp(s);
            for n in 2..=3 {
                let basis = coboundary_basis(&g, n, CoboundaryMode::All).unwrap();
                let oracle = brute_force_cohomology(&g, n).unwrap();
                assert_eq!(basis.len(), oracle.image.len());
                let img: Vec<BitRow> = oracle.image.iter().map(|c| c.bits().clone()).collect();
                for c in basis.cochains() {
                    assert!(gf2::in_row_space(&img, c.bits()).unwrap());
                }
            }
        }
    }

    // plain elimination on the dense bar matrix, without the change of variables
    fn dense_kernel(g: &FiniteGroup, n: usize) -> Vec<BitRow> {
        let bar = SparseBar::new(g, n).unwrap();
        let cols = g.order().pow(n as u32 + 1);
        let rows: Vec<BitRow> = bar
            .rows()
            .iter()
            .map(|r| {
                let mut b = BitRow::zeros(cols);
                r.iter().for_each(|&c| b.set(c as usize, true));
                b
            })
            .collect();
        gf2::left_kernel(&rows, cols).0
    }

    #[test]
    fn cocycle_space_matches_dense_elimination() {
        for s in ["g1:1", "g1:2", "g2:1", "g2:3", "d4t:2", "d4t:3", "cyclic:1", "cyclic:3"] {
            let g = grp(s);
            for n in 1..=3 {
                let fast = cocycle_space(&g, n);
                let dense = dense_kernel(&g, n);
                assert_eq!(fast.len(), dense.len(), "{s} n={n}");
                let bar = SparseBar::new(&g, n).unwrap();
                let mut ech = Echelon::new(g.order().pow(n as u32));
                for k in &dense {
                    ech.insert(k.clone());
                }
                for k in &fast {
                    let c = Cochain::from_bits(g.order(), n, k.clone()).unwrap();
                    assert!(bar.annihilates(&c).unwrap());
                    assert!(is_cocycle(&g, &c).unwrap());
                    assert!(ech.contains(k), "{s} n={n}");
                }
            }
        }
    }

    #[test]
    fn oracle_dimensions() {
        assert_eq!(brute_force_cohomology(&grp("g1:1"), 2).unwrap().hdim, 3);
        assert_eq!(brute_force_cohomology(&grp("cyclic:2"), 3).unwrap().hdim, 1);
        assert_eq!(brute_force_cohomology(&grp("g1:1"), 3).unwrap().hdim, 4);
        assert_eq!(brute_force_cohomology(&z2(), 1).unwrap().hdim, 1);
        assert!(matches!(brute_force_cohomology(&grp("cyclic:20"), 4), Err(Error::OracleTooLarge { .. })));
    }

    #[test]
    fn representatives_for_g2_odd_are_e4_e5_e6() {
        let m = CohModel::builtin("g2:3".parse().unwrap(), 2).unwrap();
        let out = full_cocycle_basis(&m, 2, CoboundaryMode::Normalized).unwrap();
        let units: Vec<BitRow> = [3, 4, 5].iter().map(|&e| BitRow::unit(6, e)).collect();
        assert_eq!(out.rep_coords, units);
        assert_eq!(out.hdim, 3);
    }

    #[test]
    fn full_basis_counts() {
        let m = CohModel::builtin("g1:1".parse().unwrap(), 3).unwrap();
        let out = full_cocycle_basis(&m, 3, CoboundaryMode::All).unwrap();
        assert_eq!((out.reps.len(), out.cobs.len()), (4, 11));
        let m = CohModel::builtin("cyclic:2".parse().unwrap(), 3).unwrap();
        let out = full_cocycle_basis(&m, 3, CoboundaryMode::All).unwrap();
        assert_eq!((out.reps.len(), out.cobs.len()), (1, 12));
        assert!(full_cocycle_basis(&m, 2, CoboundaryMode::All).is_err());
    }

    #[test]
    fn labels_parse() {
        assert_eq!("r1".parse::<Label>().unwrap(), Label::Rep(1));
        assert_eq!("c13".parse::<Label>().unwrap(), Label::Cob(13));
        assert_eq!("cob:4".parse::<Label>().unwrap(), Label::Cob(4));
        assert_eq!(Label::Rep(2).to_string(), "rep:2");
        for bad in ["x4", "c", "c0", "rep:", ""] {
            assert!(bad.parse::<Label>().is_err(), "{bad}");
        }
    }
}
