//! Enumeration of the span of a cocycle basis.
//!
//! Exhaustive mode walks all `2^m` combinations in reflected Gray-code order,
//! so each step multiplies the running tensor by a single basis tensor. The
//! index space is split on its top `⌈log2 workers⌉` bits; every block runs its
//! own Gray walk from its first index, and the results are merged in
//! combination order, so reports do not depend on the worker count.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::BitRow;
use crate::reduction::{Label, ReductionOutput};
use crate::tensor::{self, SignTensor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Predicate {
    Improper,
    Proper,
    Hadamard2d,
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::Improper => "improper",
            Predicate::Proper => "proper",
            Predicate::Hadamard2d => "hadamard2d",
        }
    }

    pub fn holds(self, t: &SignTensor) -> bool {
        match self {
            Predicate::Improper => tensor::is_improper_hadamard(t),
            Predicate::Proper => tensor::is_proper_hadamard(t),
            Predicate::Hadamard2d => tensor::is_hadamard_2d(t).unwrap_or(false),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "improper" => Ok(Predicate::Improper),
            "proper" => Ok(Predicate::Proper),
            "hadamard2d" => Ok(Predicate::Hadamard2d),
            _ => Err(format!("unknown test `{s}` (expected improper, proper or hadamard2d)")),
        }
    }
}

/// Labelled basis tensors sharing one shape.
#[derive(Clone, Debug)]
pub struct SearchSpace {
    labels: Vec<Label>,
    tensors: Vec<SignTensor>,
    side: usize,
    arity: usize,
}

impl SearchSpace {
    pub fn new(side: usize, arity: usize, basis: Vec<(Label, SignTensor)>) -> Result<SearchSpace> {
        for (i, (label, t)) in basis.iter().enumerate() {
            if (t.side(), t.arity()) != (side, arity) {
                return Err(Error::ShapeMismatch(format!("{label} has side/arity {}/{}", t.side(), t.arity())));
            }
            if basis[..i].iter().any(|(_, u)| u == t) {
                return Err(Error::Dependent(format!("{label} repeats an earlier basis tensor")));
            }
        }
        let (labels, tensors) = basis.into_iter().unzip();
        Ok(SearchSpace { labels, tensors, side, arity })
    }

    /// Representatives followed by coboundaries.
    pub fn from_reduction(out: &ReductionOutput) -> Result<SearchSpace> {
        let first = out.basis().next().map(|(_, c)| c);
        let (side, arity) = first.map_or((0, 0), |c| (c.order(), c.degree()));
        Self::new(side, arity, out.basis().map(|(l, c)| (*l, SignTensor::from_cochain(c))).collect())
    }

    pub fn dim(&self) -> usize {
        self.tensors.len()
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn tensors(&self) -> &[SignTensor] {
        &self.tensors
    }

    pub fn identity(&self) -> SignTensor {
        tensor::all_ones_nd(self.side, self.arity)
    }

    /// Pointwise product of the basis tensors at the set bits of `combo`.
    pub fn tensor_of_mask(&self, combo: &BitRow) -> SignTensor {
        let mut t = self.identity();
        for i in combo.ones() {
            t.mul_assign(&self.tensors[i]);
        }
        t
    }

    fn tensor_of_u64(&self, combo: u64) -> SignTensor {
        let mut t = self.identity();
        let mut rest = combo;
        while rest != 0 {
            t.mul_assign(&self.tensors[rest.trailing_zeros() as usize]);
            rest &= rest - 1;
        }
        t
    }

    pub fn mask_of(&self, combo: &[Label]) -> Result<BitRow> {
        let mut mask = BitRow::zeros(self.dim());
        for label in combo {
            let i =
                self.labels.iter().position(|l| l == label).ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            mask.set(i, true);
        }
        Ok(mask)
    }

    pub fn labels_of(&self, combo: &BitRow) -> Vec<Label> {
        combo.ones().map(|i| self.labels[i]).collect()
    }

    /// Product of the basis tensors named by `combo`; repeated labels count once.
    pub fn tensor_of_combination(&self, combo: &[Label]) -> Result<SignTensor> {
        Ok(self.tensor_of_mask(&self.mask_of(combo)?))
    }

    /// Visits Gray-code ranks `start..start + len`, passing the combination
    /// mask and the running product to `visit`.
    pub fn walk_gray(&self, start: u64, len: u64, mut visit: impl FnMut(u64, &SignTensor)) {
        if len == 0 {
            return;
        }
        let mut combo = start ^ (start >> 1);
        let mut state = self.tensor_of_u64(combo);
        let end = start + len;
        let mut i = start;
        loop {
            visit(combo, &state);
            i += 1;
            if i == end {
                break;
            }
            let bit = i.trailing_zeros() as usize;
            state.mul_assign(&self.tensors[bit]);
            combo ^= 1 << bit;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest number of combinations exhaustive mode accepts.
    pub limit: u64,
    /// Draw this many random combinations instead of enumerating.
    pub sample: Option<u64>,
    pub seed: u64,
    pub workers: usize,
    pub max_witnesses: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { limit: 1 << 32, sample: None, seed: 0, workers: 1, max_witnesses: 1024 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Bit `i` selects basis element `i`.
    pub combo: BitRow,
    /// Predicates this combination satisfies.
    pub passed: Vec<Predicate>,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub mode: SearchMode,
    pub dim: usize,
    pub examined: u64,
    /// Hit count per requested predicate, in request order.
    pub hits: Vec<(Predicate, u64)>,
    /// Combinations satisfying every requested predicate.
    pub joint: u64,
    /// Combinations passing at least one predicate, ascending by combination
    /// integer, capped at `max_witnesses`.
    pub witnesses: Vec<Witness>,
    pub elapsed: Duration,
}

impl SearchReport {
    pub fn hits_for(&self, p: Predicate) -> Option<u64> {
        self.hits.iter().find(|(q, _)| *q == p).map(|(_, n)| *n)
    }
}

struct Acc {
    examined: u64,
    hits: Vec<u64>,
    joint: u64,
    witnesses: Vec<(BitRow, u32)>,
    cap: usize,
}

impl Acc {
    fn new(preds: usize, cap: usize) -> Acc {
        Acc { examined: 0, hits: vec![0; preds], joint: 0, witnesses: Vec::new(), cap }
    }

    fn record(&mut self, preds: &[Predicate], t: &SignTensor, combo: impl FnOnce() -> BitRow) {
        self.examined += 1;
        let flags = evaluate(preds, t);
        for (i, h) in self.hits.iter_mut().enumerate() {
            *h += (flags >> i & 1) as u64;
        }
        if !preds.is_empty() && flags == (1 << preds.len()) - 1 {
            self.joint += 1;
        }
        if flags != 0 && self.cap > 0 {
            self.witnesses.push((combo(), flags));
            if self.witnesses.len() >= 2 * self.cap {
                self.trim();
            }
        }
    }

    fn trim(&mut self) {
        self.witnesses.sort_by(|a, b| a.0.cmp_as_integer(&b.0));
        self.witnesses.truncate(self.cap);
    }

    fn merge(mut self, other: Acc) -> Acc {
        self.examined += other.examined;
        for (a, b) in self.hits.iter_mut().zip(other.hits) {
            *a += b;
        }
        self.joint += other.joint;
        self.witnesses.extend(other.witnesses);
        self.trim();
        self
    }
}

/// Bit `i` set iff `preds[i]` holds. Proper implies improper, so a failed
/// improper test settles proper too.
fn evaluate(preds: &[Predicate], t: &SignTensor) -> u32 {
    let mut improper = None;
    let mut flags = 0;
    for (i, &p) in preds.iter().enumerate() {
        let ok = match p {
            Predicate::Improper => *improper.get_or_insert_with(|| p.holds(t)),
            Predicate::Proper => {
                let known_improper = preds
                    .contains(&Predicate::Improper)
                    .then(|| *improper.get_or_insert_with(|| Predicate::Improper.holds(t)));
                known_improper != Some(false) && p.holds(t)
            }
            Predicate::Hadamard2d => p.holds(t),
        };
        flags |= (ok as u32) << i;
    }
    flags
}

fn u64_combo(m: usize, combo: u64) -> BitRow {
    BitRow::from_bools((0..m).map(|i| combo >> i & 1 == 1))
}

/// Counts combinations of the basis satisfying each predicate.
pub fn enumerate_span(space: &SearchSpace, predicates: &[Predicate], options: &SearchOptions) -> Result<SearchReport> {
    let started = Instant::now();
    if predicates.contains(&Predicate::Hadamard2d) && space.arity() != 2 {
        return Err(Error::PredicateArity { predicate: "hadamard2d", required: 2, actual: space.arity() });
    }
    let m = space.dim();
    let workers = options.workers.max(1);
    let cap = options.max_witnesses;
    let (mode, acc) = match options.sample {
        Some(count) => (SearchMode::Sampled, sampled(space, predicates, count, options.seed, workers, cap)),
        None => {
            if m > 62 || (1u64 << m) > options.limit {
                return Err(Error::SpanTooLarge { dim: m, limit: options.limit });
            }
            (SearchMode::Exhaustive, exhaustive(space, predicates, workers, cap))
        }
    };
    let mut acc = acc;
    acc.trim();
    Ok(SearchReport {
        mode,
        dim: m,
        examined: acc.examined,
        hits: predicates.iter().copied().zip(acc.hits).collect(),
        joint: acc.joint,
        witnesses: acc
            .witnesses
            .into_iter()
            .map(|(combo, flags)| Witness {
                combo,
                passed: predicates.iter().enumerate().filter(|(i, _)| flags >> i & 1 == 1).map(|(_, p)| *p).collect(),
            })
            .collect(),
        elapsed: started.elapsed(),
    })
}

fn exhaustive(space: &SearchSpace, preds: &[Predicate], workers: usize, cap: usize) -> Acc {
    let m = space.dim();
    let bits = (usize::BITS - (workers - 1).leading_zeros()) as usize;
    let bits = bits.min(m);
    let block = 1u64 << (m - bits);
    let run = |b: u64| {
        let mut acc = Acc::new(preds.len(), cap);
        space.walk_gray(b * block, block, |combo, t| acc.record(preds, t, || u64_combo(m, combo)));
        acc
    };
    if bits == 0 {
        return run(0);
    }
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..1u64 << bits).map(|b| s.spawn(move || run(b))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .fold(Acc::new(preds.len(), cap), Acc::merge)
    })
}

fn sampled(space: &SearchSpace, preds: &[Predicate], count: u64, seed: u64, workers: usize, cap: usize) -> Acc {
    let m = space.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let combos: Vec<BitRow> = (0..count).map(|_| BitRow::from_bools((0..m).map(|_| rng.random::<bool>()))).collect();
    let chunk = combos.len().div_ceil(workers).max(1);
    let run = |part: &[BitRow]| {
        let mut acc = Acc::new(preds.len(), cap);
        for c in part {
            acc.record(preds, &space.tensor_of_mask(c), || c.clone());
        }
        acc
    };
    std::thread::scope(|s| {
        let handles: Vec<_> = combos.chunks(chunk).map(|part| s.spawn(move || run(part))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .fold(Acc::new(preds.len(), cap), Acc::merge)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohmodel::CohModel;
    use crate::reduction::{full_cocycle_basis, CoboundaryMode};

    fn space(s: &str, n: usize, mode: CoboundaryMode) -> SearchSpace {
        let model = CohModel::builtin(s.parse().unwrap(), n).unwrap();
        SearchSpace::from_reduction(&full_cocycle_basis(&model, n, mode).unwrap()).unwrap()
    }

    #[test]
    fn empty_basis_examines_identity_only() {
        let sp = SearchSpace::new(4, 3, vec![]).unwrap();
        let r = enumerate_span(&sp, &[Predicate::Improper], &SearchOptions::default()).unwrap();
        assert_eq!((r.examined, r.hits_for(Predicate::Improper)), (1, Some(0)));
    }

    #[test]
    fn gray_state_matches_recomputation() {
        let sp = space("g1:1", 3, CoboundaryMode::All);
        let mut step = 0u64;
        sp.walk_gray(0, 1 << sp.dim(), |combo, t| {
            if step.is_multiple_of(997) {
                assert_eq!(t, &sp.tensor_of_u64(combo));
            }
            step += 1;
        });
        assert_eq!(step, 1 << 15);
    }

    #[test]
    fn planar_search_matches_naive_enumeration() {
        let sp = space("g1:1", 2, CoboundaryMode::Normalized);
        assert_eq!(sp.dim(), 4);
        let naive = (0u64..16).filter(|&c| tensor::is_hadamard_2d(&sp.tensor_of_u64(c)).unwrap()).count() as u64;
        let r = enumerate_span(&sp, &[Predicate::Hadamard2d], &SearchOptions::default()).unwrap();
        assert_eq!(r.hits_for(Predicate::Hadamard2d), Some(naive));
        assert_eq!(r.examined, 16);
    }

    #[test]
    fn hadamard2d_needs_matrices() {
        let sp = space("cyclic:2", 3, CoboundaryMode::All);
        assert!(matches!(
            enumerate_span(&sp, &[Predicate::Hadamard2d], &SearchOptions::default()),
            Err(Error::PredicateArity { .. })
        ));
    }

    #[test]
    fn worker_count_and_basis_order_do_not_change_counts() {
        let sp = space("cyclic:2", 3, CoboundaryMode::All);
        let preds = [Predicate::Improper, Predicate::Proper];
        let base = enumerate_span(&sp, &preds, &SearchOptions::default()).unwrap();
        for workers in [2, 3, 4, 8] {
            let r = enumerate_span(&sp, &preds, &SearchOptions { workers, ..Default::default() }).unwrap();
            assert_eq!(r.hits, base.hits);
            assert_eq!(r.witnesses, base.witnesses);
        }
        let mut rev: Vec<(Label, SignTensor)> = sp.labels().iter().copied().zip(sp.tensors().iter().cloned()).collect();
        rev.reverse();
        let rsp = SearchSpace::new(sp.side(), sp.arity(), rev).unwrap();
        let r = enumerate_span(&rsp, &preds, &SearchOptions::default()).unwrap();
        assert_eq!(r.hits, base.hits);
    }

    #[test]
    fn witnesses_reproduce_and_are_capped() {
        let sp = space("cyclic:2", 3, CoboundaryMode::All);
        let full = enumerate_span(&sp, &[Predicate::Improper], &SearchOptions::default()).unwrap();
        for w in &full.witnesses {
            assert!(Predicate::Improper.holds(&sp.tensor_of_mask(&w.combo)));
        }
        let capped =
            enumerate_span(&sp, &[Predicate::Improper], &SearchOptions { max_witnesses: 5, ..Default::default() })
                .unwrap();
        assert_eq!(capped.witnesses.len(), 5);
        assert_eq!(capped.witnesses[..], full.witnesses[..5]);
        assert_eq!(capped.hits, full.hits);
    }

    #[test]
    fn exhaustive_refused_over_limit() {
        let sp = space("cyclic:2", 3, CoboundaryMode::All);
        let err = enumerate_span(&sp, &[Predicate::Improper], &SearchOptions { limit: 1000, ..Default::default() });
        assert!(matches!(err, Err(Error::SpanTooLarge { dim: 13, .. })));
    }

    #[test]
    fn sampling_is_deterministic() {
        let sp = space("cyclic:2", 3, CoboundaryMode::All);
        let opts = |workers| SearchOptions { sample: Some(500), seed: 7, workers, ..Default::default() };
        let a = enumerate_span(&sp, &[Predicate::Improper], &opts(1)).unwrap();
        let b = enumerate_span(&sp, &[Predicate::Improper], &opts(3)).unwrap();
        assert_eq!(a.mode, SearchMode::Sampled);
        assert_eq!(a.examined, 500);
        assert_eq!((a.hits.clone(), a.witnesses.clone()), (b.hits, b.witnesses));
    }

    #[test]
    fn unknown_label_is_rejected() {
        let sp = space("g1:1", 2, CoboundaryMode::Normalized);
        assert!(sp.tensor_of_combination(&[Label::Cob(3)]).is_err());
        assert_eq!(sp.tensor_of_combination(&[]).unwrap(), sp.identity());
    }
}
