//! Dense linear algebra over GF(2) on bit-packed rows.
//!
//! Matrices act on row vectors: row `m` of a codifferential matrix holds the
//! coordinates of the image of basis element `m`. Row and column indices in
//! this module are 0-based.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> BitRow {
        BitRow { len, words: vec![0; words_for(len)] }
    }

    pub fn unit(len: usize, i: usize) -> BitRow {
        let mut r = BitRow::zeros(len);
        r.set(i, true);
        r
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> BitRow {
        let mut r = BitRow::zeros(0);
        for b in bits {
            if r.len.is_multiple_of(WORD) {
                r.words.push(0);
            }
            if b {
                r.words[r.len / WORD] |= 1 << (r.len % WORD);
            }
            r.len += 1;
        }
        r
    }

    /// From a slice of 0/1 values; any other value is rejected.
    pub fn from_bits(bits: &[u8]) -> Result<BitRow> {
        if let Some(&bad) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::ShapeMismatch(format!("entry {bad} is not 0 or 1")));
        }
        Ok(BitRow::from_bools(bits.iter().map(|&b| b == 1)))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] ^= 1 << (i % WORD);
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// XOR restricted to words at or after the one holding bit `from`.
    #[inline]
    fn xor_from(&mut self, other: &BitRow, from: usize) {
        let w = from / WORD;
        for (a, b) in self.words[w..].iter_mut().zip(&other.words[w..]) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitRow) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum::<u32>() % 2 == 1
    }

    /// Index of the first set bit at or after `start`.
    pub fn first_one_from(&self, start: usize) -> Option<usize> {
        if start >= self.len {
            return None;
        }
        let mut w = start / WORD;
        let mut word = self.words[w] & (!0u64 << (start % WORD));
        loop {
            if word != 0 {
                let i = w * WORD + word.trailing_zeros() as usize;
                return (i < self.len).then_some(i);
            }
            w += 1;
            if w == self.words.len() {
                return None;
            }
            word = self.words[w];
        }
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * WORD + b)
            })
        })
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i) as u8).collect()
    }

    /// Compares as unsigned integers with bit `i` weighted `2^i`.
    pub fn cmp_as_integer(&self, other: &BitRow) -> std::cmp::Ordering {
        let n = self.words.len().max(other.words.len());
        for w in (0..n).rev() {
            let a = self.words.get(w).copied().unwrap_or(0);
            let b = other.words.get(w).copied().unwrap_or(0);
            if a != b {
                return a.cmp(&b);
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "BitRow({s})")
    }
}

/// Dense matrix over GF(2), stored as bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitRow>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> BitMatrix {
        BitMatrix { rows, cols, data: vec![BitRow::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> BitMatrix {
        BitMatrix { rows: n, cols: n, data: (0..n).map(|i| BitRow::unit(n, i)).collect() }
    }

    pub fn from_rows(rows: Vec<BitRow>, cols: usize) -> Result<BitMatrix> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch { expected: cols, actual: r.len() });
        }
        Ok(BitMatrix { rows: rows.len(), cols, data: rows })
    }

    /// From nested 0/1 arrays. `cols` is needed to give empty matrices a shape.
    pub fn from_bits(rows: &[Vec<u8>], cols: usize) -> Result<BitMatrix> {
        let data = rows.iter().map(|r| BitRow::from_bits(r)).collect::<Result<Vec<_>>>()?;
        Self::from_rows(data, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitRow {
        &self.data[i]
    }

    pub fn row_slice(&self) -> &[BitRow] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<BitRow> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitRow::is_zero)
    }

    pub fn to_bits(&self) -> Vec<Vec<u8>> {
        self.data.iter().map(BitRow::to_bits).collect()
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for j in row.ones() {
                t.data[j].set(i, true);
            }
        }
        t
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = BitRow::zeros(rhs.cols);
                for k in row.ones() {
                    acc.xor_assign(&rhs.data[k]);
                }
                acc
            })
            .collect();
        Ok(BitMatrix { rows: self.rows, cols: rhs.cols, data })
    }

    /// Row vector times matrix.
    pub fn apply(&self, x: &BitRow) -> Result<BitRow> {
        if x.len() != self.rows {
            return Err(Error::LengthMismatch { expected: self.rows, actual: x.len() });
        }
        let mut acc = BitRow::zeros(self.cols);
        for k in x.ones() {
            acc.xor_assign(&self.data[k]);
        }
        Ok(acc)
    }

    pub fn rank(&self) -> usize {
        greedy_independent_rows(self).1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    /// row[dst] += row[src]
    fn add_row(&mut self, src: usize, dst: usize) {
        let (s, d) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst);
            (&lo[src], &mut hi[0])
        } else {
            let (lo, hi) = self.data.split_at_mut(src);
            (&hi[0], &mut lo[dst])
        };
        d.xor_assign(s);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for row in &mut self.data {
            let (x, y) = (row.get(a), row.get(b));
            row.set(a, y);
            row.set(b, x);
        }
    }

    /// col[dst] += col[src]
    fn add_col(&mut self, src: usize, dst: usize) {
        for row in &mut self.data {
            if row.get(src) {
                row.flip(dst);
            }
        }
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in &self.data {
            let s: String = (0..self.cols).map(|j| if r.get(j) { '1' } else { '0' }).collect();
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

/// Incrementally maintained row-echelon basis.
///
/// Each stored row's lowest set bit is its pivot; reduction clears every
/// pivot column of the input.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<BitRow>,
    pivot_row: Vec<u32>,
}

impl Echelon {
    const NONE: u32 = u32::MAX;

    pub fn new(cols: usize) -> Echelon {
        Echelon { cols, rows: Vec::new(), pivot_row: vec![Self::NONE; cols] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reduces `x` in place; returns the lowest remaining set bit, if any.
    pub fn reduce(&self, x: &mut BitRow) -> Option<usize> {
        let mut pos = 0;
        let mut lowest = None;
        while let Some(c) = x.first_one_from(pos) {
            match self.pivot_row[c] {
                Self::NONE => {
                    lowest.get_or_insert(c);
                }
                r => x.xor_from(&self.rows[r as usize], c),
            }
            pos = c + 1;
        }
        lowest
    }

    /// Adds `x` to the basis if it is independent; returns whether it was.
    pub fn insert(&mut self, mut x: BitRow) -> bool {
        debug_assert_eq!(x.len(), self.cols);
        match self.reduce(&mut x) {
            Some(p) => {
                self.pivot_row[p] = self.rows.len() as u32;
                self.rows.push(x);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, x: &BitRow) -> bool {
        let mut x = x.clone();
        self.reduce(&mut x).is_none()
    }
}

/// Lexicographically first maximal independent set of rows (0-based
/// indices, in scan order) together with the rank.
pub fn greedy_independent_rows(m: &BitMatrix) -> (Vec<usize>, usize) {
    greedy_independent(m.row_slice(), m.cols())
}

pub fn greedy_independent(rows: &[BitRow], cols: usize) -> (Vec<usize>, usize) {
    let mut ech = Echelon::new(cols);
    let selected: Vec<usize> =
        rows.iter().enumerate().filter(|(_, r)| ech.insert((*r).clone())).map(|(i, _)| i).collect();
    let rank = selected.len();
    (selected, rank)
}

/// Whether `x` lies in the GF(2) span of `basis`.
pub fn in_row_space(basis: &[BitRow], x: &BitRow) -> Result<bool> {
    if let Some(b) = basis.iter().find(|b| b.len() != x.len()) {
        return Err(Error::LengthMismatch { expected: x.len(), actual: b.len() });
    }
    let mut ech = Echelon::new(x.len());
    for b in basis {
        ech.insert(b.clone());
    }
    Ok(ech.contains(x))
}

/// Left null space and rank of the matrix whose rows are `rows`:
/// returns a basis of `{ c : Σ c_i rows_i = 0 }`.
pub fn left_kernel(rows: &[BitRow], cols: usize) -> (Vec<BitRow>, usize) {
    let n = rows.len();
    let mut basis: Vec<(BitRow, BitRow)> = Vec::new();
    let mut pivot_row = vec![u32::MAX; cols];
    let mut kernel = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut x = r.clone();
        let mut tag = BitRow::unit(n, i);
        let mut pos = 0;
        let mut lowest = None;
        while let Some(c) = x.first_one_from(pos) {
            match pivot_row[c] {
                u32::MAX => {
                    lowest.get_or_insert(c);
                }
                b => {
                    let (br, bt) = &basis[b as usize];
                    x.xor_from(br, c);
                    tag.xor_assign(bt);
                }
            }
            pos = c + 1;
        }
        match lowest {
            Some(p) => {
                pivot_row[p] = basis.len() as u32;
                basis.push((x, tag));
            }
            None => kernel.push(tag),
        }
    }
    let rank = basis.len();
    (kernel, rank)
}

/// Basis of `{ x : r·x = 0 for every equation r }` given an echelon form of
/// the equations, obtained by back substitution from the free columns.
pub fn null_space(equations: &Echelon) -> Vec<BitRow> {
    let cols = equations.cols;
    let free: Vec<usize> = (0..cols).filter(|&c| equations.pivot_row[c] == Echelon::NONE).collect();
    let k = free.len();
    // values[c] holds x_c across all k basis vectors at once
    let mut values = vec![BitRow::zeros(k); cols];
    for (i, &c) in free.iter().enumerate() {
        values[c].set(i, true);
    }
    for p in (0..cols).rev() {
        let r = equations.pivot_row[p];
        if r == Echelon::NONE {
            continue;
        }
        let mut acc = BitRow::zeros(k);
        for c in equations.rows[r as usize].ones().skip(1) {
            acc.xor_assign(&values[c]);
        }
        values[p] = acc;
    }
    (0..k).map(|i| BitRow::from_bools(values.iter().map(|v| v.get(i)))).collect()
}

/// Rank normal form `D = P·M·Q` over GF(2) with the transforms and their
/// inverses accumulated alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub d: BitMatrix,
    pub p: BitMatrix,
    pub q: BitMatrix,
    pub p_inv: BitMatrix,
    pub q_inv: BitMatrix,
    pub rank: usize,
}

impl SnfResult {
    /// Rows of `Qinv` spanning the row space of the input.
    pub fn image_basis(&self) -> &[BitRow] {
        &self.q_inv.row_slice()[..self.rank]
    }

    /// Rows of `P` spanning the left kernel of the input.
    pub fn kernel_basis(&self) -> &[BitRow] {
        &self.p.row_slice()[self.rank..]
    }
}

/// Pivots are found by scanning the remaining rows top to bottom and taking
/// the first nonzero column of the first nonzero row.
pub fn smith_normal_form(m: &BitMatrix) -> SnfResult {
    let (q, r) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut p = BitMatrix::identity(q);
    let mut p_inv = BitMatrix::identity(q);
    let mut qm = BitMatrix::identity(r);
    let mut q_inv = BitMatrix::identity(r);
    let mut rank = 0;
    for piv in 0..q.min(r) {
        let found = (piv..q).find_map(|i| d.row(i).first_one_from(piv).map(|j| (i, j)));
        let Some((i, j)) = found else { break };
        if i != piv {
            d.swap_rows(i, piv);
            p.swap_rows(i, piv);
            p_inv.swap_cols(i, piv);
        }
        if j != piv {
            d.swap_cols(j, piv);
            qm.swap_cols(j, piv);
            q_inv.swap_rows(j, piv);
        }
        for other in 0..q {
            if other != piv && d.get(other, piv) {
                d.add_row(piv, other);
                p.add_row(piv, other);
                p_inv.add_col(other, piv);
            }
        }
        let cols: Vec<usize> = d.row(piv).ones().filter(|&c| c != piv).collect();
        for c in cols {
            d.add_col(piv, c);
            qm.add_col(piv, c);
            q_inv.add_row(c, piv);
        }
        rank += 1;
    }
    SnfResult { d, p, q: qm, p_inv, q_inv, rank }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[&str]) -> BitMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let bits: Vec<Vec<u8>> = rows.iter().map(|r| r.bytes().map(|b| b - b'0').collect()).collect();
        BitMatrix::from_bits(&bits, cols).unwrap()
    }

    // Brute-force rank: size of the set of all row combinations.
    fn rank_by_enumeration(m: &BitMatrix) -> usize {
        let n = m.rows();
        let mut seen = std::collections::HashSet::new();
        for mask in 0u32..(1 << n) {
            let mut acc = BitRow::zeros(m.cols());
            for i in 0..n {
                if mask >> i & 1 == 1 {
                    acc.xor_assign(m.row(i));
                }
            }
            seen.insert(acc);
        }
        seen.len().trailing_zeros() as usize
    }

    fn image_by_enumeration(m: &BitMatrix) -> std::collections::HashSet<BitRow> {
        let n = m.rows();
        (0u32..(1 << n))
            .map(|mask| {
                let mut acc = BitRow::zeros(m.cols());
                for i in (0..n).filter(|i| mask >> i & 1 == 1) {
                    acc.xor_assign(m.row(i));
                }
                acc
            })
            .collect()
    }

    fn is_rank_normal_form(d: &BitMatrix, rank: usize) -> bool {
        (0..d.rows()).all(|i| (0..d.cols()).all(|j| d.get(i, j) == (i == j && i < rank)))
    }

    fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BitMatrix> {
        (0..=max_rows, 0..=max_cols).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(0u8..=1, c), r)
                .prop_map(move |bits| BitMatrix::from_bits(&bits, c).unwrap())
        })
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_independent_rows(&BitMatrix::zeros(3, 5)), (vec![], 0));
        assert_eq!(greedy_independent_rows(&BitMatrix::identity(3)), (vec![0, 1, 2], 3));
        assert_eq!(greedy_independent_rows(&mat(&["11", "11", "01"])), (vec![0, 2], 2));
    }

    #[test]
    fn snf_of_zero_and_identity() {
        let z = smith_normal_form(&BitMatrix::zeros(3, 4));
        assert_eq!(z.rank, 0);
        assert!(z.d.is_zero());
        assert_eq!(z.p, BitMatrix::identity(3));
        assert_eq!(z.q, BitMatrix::identity(4));
        let i = smith_normal_form(&BitMatrix::identity(3));
        assert_eq!(i.rank, 3);
        assert_eq!(i.d, BitMatrix::identity(3));
    }

    #[test]
    fn snf_single_entry() {
        let m = mat(&["100000", "000000", "000000"]);
        let s = smith_normal_form(&m);
        assert_eq!(s.rank, 1);
        assert_eq!(s.d, m);
    }

    #[test]
    fn snf_reproduces_published_permutation_transform() {
        // d^2 of Z_t × Z_2^2 for odd t: e2 -> v2, e3 -> v3.
        let mut m = BitMatrix::zeros(6, 10);
        m.set(1, 1, true);
        m.set(2, 2, true);
        let s = smith_normal_form(&m);
        let expected_p = [1, 2, 0, 3, 4, 5];
        for (row, &unit) in expected_p.iter().enumerate() {
            assert_eq!(s.p.row(row), &BitRow::unit(6, unit));
        }
    }

    #[test]
    fn in_row_space_examples() {
        assert!(in_row_space(&[], &BitRow::zeros(3)).unwrap());
        let b = [BitRow::from_bits(&[1, 1, 0]).unwrap()];
        assert!(in_row_space(&b, &BitRow::from_bits(&[1, 1, 0]).unwrap()).unwrap());
        assert!(!in_row_space(&b, &BitRow::from_bits(&[1, 0, 0]).unwrap()).unwrap());
        assert!(in_row_space(&b, &BitRow::zeros(4)).is_err());
    }

    #[test]
    fn bitrow_basics() {
        let mut r = BitRow::zeros(130);
        r.set(0, true);
        r.set(64, true);
        r.set(129, true);
        assert_eq!(r.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(r.first_one_from(1), Some(64));
        assert_eq!(r.first_one_from(65), Some(129));
        assert_eq!(r.first_one_from(130), None);
        assert_eq!(r.count_ones(), 3);
        assert!(BitRow::from_bits(&[0, 2]).is_err());
    }

    #[test]
    fn left_kernel_matches_dimension() {
        let m = mat(&["110", "011", "101", "111"]);
        let (ker, rank) = left_kernel(m.row_slice(), 3);
        assert_eq!(rank, 3);
        assert_eq!(ker.len(), 1);
        assert!(m.apply(&ker[0]).unwrap().is_zero());
    }

    proptest! {
        #[test]
        fn null_space_is_the_right_kernel(m in arb_matrix(9, 12)) {
            let mut ech = Echelon::new(m.cols());
            for r in m.row_slice() {
                ech.insert(r.clone());
            }
            let ns = null_space(&ech);
            prop_assert_eq!(ns.len(), m.cols() - rank_by_enumeration(&m));
            let mut span = Echelon::new(m.cols());
            for x in &ns {
                prop_assert!(m.row_slice().iter().all(|r| !r.dot(x)));
                prop_assert!(span.insert(x.clone()));
            }
        }

        #[test]
        fn snf_decomposition_holds(m in arb_matrix(6, 10)) {
            let s = smith_normal_form(&m);
            prop_assert_eq!(&s.p.mul(&m).unwrap().mul(&s.q).unwrap(), &s.d);
            prop_assert!(is_rank_normal_form(&s.d, s.rank));
            prop_assert_eq!(s.p.mul(&s.p_inv).unwrap(), BitMatrix::identity(m.rows()));
            prop_assert_eq!(s.q.mul(&s.q_inv).unwrap(), BitMatrix::identity(m.cols()));
            prop_assert_eq!(s.rank, rank_by_enumeration(&m));
            prop_assert_eq!(greedy_independent_rows(&m).1, s.rank);
        }

        #[test]
        fn snf_image_rows_span_row_space(m in arb_matrix(6, 10)) {
            let s = smith_normal_form(&m);
            let img = BitMatrix::from_rows(s.image_basis().to_vec(), m.cols()).unwrap();
            prop_assert_eq!(image_by_enumeration(&img), image_by_enumeration(&m));
            for k in s.kernel_basis() {
                prop_assert!(m.apply(k).unwrap().is_zero());
            }
        }

        #[test]
        fn combination_is_in_span(m in arb_matrix(6, 10), mask in 0u32..64) {
            let mut x = BitRow::zeros(m.cols());
            for i in (0..m.rows()).filter(|i| mask >> i & 1 == 1) {
                x.xor_assign(m.row(i));
            }
            prop_assert!(in_row_space(m.row_slice(), &x).unwrap());
        }

        #[test]
        fn greedy_is_lexicographically_first(m in arb_matrix(6, 6)) {
            let (sel, rank) = greedy_independent_rows(&m);
            prop_assert_eq!(sel.len(), rank);
            // every skipped row depends on the selected rows before it
            for i in 0..m.rows() {
                let earlier: Vec<BitRow> = sel.iter().filter(|&&s| s < i).map(|&s| m.row(s).clone()).collect();
                prop_assert_eq!(sel.contains(&i), !in_row_space(&earlier, m.row(i)).unwrap());
            }
        }
    }
}
