//! ±1 n-dimensional arrays of side `v`.
//!
//! Entries use the same lexicographic 1-based index map as [`Cochain`]; a set
//! bit stores `−1`. "Horizontal sections" are the sections along the last
//! axis.

use serde::{Deserialize, Serialize};

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::gf2::BitRow;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignTensor {
    side: usize,
    arity: usize,
    bits: BitRow,
}

impl std::fmt::Debug for SignTensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SignTensor(v={}, n={})\n{}", self.side, self.arity, self.to_text())
    }
}

impl SignTensor {
    pub fn from_bits(side: usize, arity: usize, bits: BitRow) -> Result<SignTensor> {
        let expected = side.pow(arity as u32);
        if bits.len() != expected {
            return Err(Error::LengthMismatch { expected, actual: bits.len() });
        }
        Ok(SignTensor { side, arity, bits })
    }

    /// Entry-wise `(−1)^f`.
    pub fn from_cochain(f: &Cochain) -> SignTensor {
        SignTensor { side: f.order(), arity: f.degree(), bits: f.bits().clone() }
    }

    pub fn from_signs(side: usize, arity: usize, signs: &[i8]) -> Result<SignTensor> {
        if let Some(bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::TensorFormat(format!("entry {bad} is not ±1")));
        }
        Self::from_bits(side, arity, BitRow::from_bools(signs.iter().map(|&s| s == -1)))
    }

    /// Builds from a function of 0-based coordinates returning ±1.
    pub fn from_fn(side: usize, arity: usize, mut f: impl FnMut(&[usize]) -> i8) -> SignTensor {
        let len = side.pow(arity as u32);
        let mut bits = BitRow::zeros(len);
        let mut idx = vec![0; arity];
        for flat in 0..len {
            if f(&idx) < 0 {
                bits.set(flat, true);
            }
            crate::cochain::advance(&mut idx, side);
        }
        SignTensor { side, arity, bits }
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &BitRow {
        &self.bits
    }

    pub fn to_cochain(&self) -> Cochain {
        Cochain::from_bits(self.side, self.arity, self.bits.clone()).expect("consistent length")
    }

    #[inline]
    pub fn sign0(&self, flat: usize) -> i8 {
        1 - 2 * self.bits.get(flat) as i8
    }

    /// Entry at 1-based coordinates.
    pub fn get(&self, coords: &[usize]) -> Result<i8> {
        Ok(self.sign0(crate::cochain::tuple_index(self.side, coords)? - 1))
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.len()).map(|i| self.sign0(i)).collect()
    }

    fn stride(&self, axis: usize) -> usize {
        self.side.pow((self.arity - 1 - axis) as u32)
    }

    /// Pointwise product.
    pub fn mul(&self, other: &SignTensor) -> Result<SignTensor> {
        if (self.side, self.arity) != (other.side, other.arity) {
            return Err(Error::ShapeMismatch(format!(
                "pointwise product of side/arity {}/{} and {}/{}",
                self.side, self.arity, other.side, other.arity
            )));
        }
        let mut bits = self.bits.clone();
        bits.xor_assign(&other.bits);
        Ok(SignTensor { bits, ..*self })
    }

    pub(crate) fn mul_assign(&mut self, other: &SignTensor) {
        self.bits.xor_assign(&other.bits);
    }

    pub fn negate(&self) -> SignTensor {
        let mut bits = BitRow::from_bools(std::iter::repeat_n(true, self.len()));
        bits.xor_assign(&self.bits);
        SignTensor { bits, ..*self }
    }

    /// The (n−1)-dimensional section at 1-based index `idx` of 0-based `axis`.
    pub fn section(&self, axis: usize, idx: usize) -> Result<SignTensor> {
        if axis >= self.arity || self.arity < 2 {
            return Err(Error::ShapeMismatch(format!("no axis {axis} in an arity-{} tensor", self.arity)));
        }
        if idx == 0 || idx > self.side {
            return Err(Error::IndexOutOfRange { index: idx, order: self.side });
        }
        let s = self.stride(axis);
        let block = s * self.side;
        let outer = self.len() / block;
        let bits = BitRow::from_bools(
            (0..outer).flat_map(|hi| (0..s).map(move |lo| hi * block + (idx - 1) * s + lo)).map(|f| self.bits.get(f)),
        );
        Ok(SignTensor { side: self.side, arity: self.arity - 1, bits })
    }

    /// Stacks equally-shaped tensors as the sections along a new last axis.
    pub fn from_sections(sections: &[SignTensor]) -> Result<SignTensor> {
        let side = sections.len();
        let first = sections.first().ok_or_else(|| Error::ShapeMismatch("no sections".into()))?;
        if sections.iter().any(|s| s.side != side || s.arity != first.arity) {
            return Err(Error::ShapeMismatch(format!("{side} sections must all have side {side}")));
        }
        let arity = first.arity + 1;
        Ok(SignTensor::from_fn(side, arity, |c| {
            sections[c[arity - 1]].sign0(c[..arity - 1].iter().fold(0, |acc, &x| acc * side + x))
        }))
    }

    // -- text and JSON formats --

    /// Coordinate order used by the text format: the last axis slowest, then
    /// recursively; the final two printed axes are rows (axis 0) and columns
    /// (axis 1).
    fn text_axes(&self) -> Vec<usize> {
        match self.arity {
            0 => vec![],
            1 => vec![0],
            n => (2..n).rev().chain([0, 1]).collect(),
        }
    }

    fn text_order(&self) -> Vec<usize> {
        let axes = self.text_axes();
        let mut coords = vec![0; self.arity];
        let mut out = Vec::with_capacity(self.len());
        for _ in 0..self.len() {
            out.push(coords.iter().fold(0, |acc, &x| acc * self.side + x));
            for &a in axes.iter().rev() {
                coords[a] += 1;
                if coords[a] < self.side {
                    break;
                }
                coords[a] = 0;
            }
        }
        out
    }

    /// One `v`-line block per section, entries `1`/`-1` separated by spaces,
    /// blocks separated by a blank line.
    pub fn to_text(&self) -> String {
        let order = self.text_order();
        let v = self.side.max(1);
        let mut out = String::new();
        for (line_no, line) in order.chunks(v).enumerate() {
            if line_no > 0 && line_no % v == 0 {
                out.push('\n');
            }
            let cells: Vec<&str> = line.iter().map(|&f| if self.bits.get(f) { "-1" } else { "1" }).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<SignTensor> {
        let rows: Vec<Vec<i8>> = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|tok| match tok {
                        "1" | "+1" | "+" => Ok(1),
                        "-1" | "-" => Ok(-1),
                        other => Err(Error::TensorFormat(format!("bad entry `{other}`"))),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let v = rows.first().map_or(0, Vec::len);
        if v < 2 || rows.iter().any(|r| r.len() != v) {
            return Err(Error::TensorFormat("rows must be nonempty and of equal length".into()));
        }
        let total = rows.len() * v;
        let mut arity = 1;
        while v.pow(arity as u32) < total {
            arity += 1;
        }
        if v.pow(arity as u32) != total || arity < 2 {
            return Err(Error::TensorFormat(format!("{total} entries is not a power of the side {v}")));
        }
        let mut t = SignTensor { side: v, arity, bits: BitRow::zeros(total) };
        for (flat, s) in t.text_order().into_iter().zip(rows.into_iter().flatten()) {
            t.bits.set(flat, s < 0);
        }
        Ok(t)
    }

    pub fn to_json(&self) -> TensorJson {
        TensorJson { v: self.side, n: self.arity, entries: self.signs() }
    }

    pub fn from_json(j: &TensorJson) -> Result<SignTensor> {
        Self::from_signs(j.v, j.n, &j.entries)
    }
}

/// `{"v": …, "n": …, "entries": [1, -1, …]}` in storage order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorJson {
    pub v: usize,
    pub n: usize,
    pub entries: Vec<i8>,
}

// -- structured matrices --

fn matrix(size: usize, f: impl Fn(usize, usize) -> bool) -> SignTensor {
    SignTensor::from_fn(size, 2, |c| if f(c[0], c[1]) { -1 } else { 1 })
}

/// `1_v`, the all-ones matrix (also written `J_v`).
pub fn all_ones(v: usize) -> SignTensor {
    all_ones_nd(v, 2)
}

pub fn all_ones_nd(v: usize, arity: usize) -> SignTensor {
    SignTensor { side: v, arity, bits: BitRow::zeros(v.pow(arity as u32)) }
}

/// Back negacyclic `BN_j`: `−1` exactly where `row + col ≥ j` (0-based).
pub fn back_negacyclic(j: usize) -> SignTensor {
    matrix(j, |r, c| r + c >= j)
}

/// Forward negacyclic `FN_k`: first row all ones, row `r ≥ 1` negative from
/// column `r` onwards.
pub fn forward_negacyclic(k: usize) -> SignTensor {
    matrix(k, |r, c| r >= 1 && c >= r)
}

/// Kronecker product of equal-arity tensors; `a` indexes the outer blocks.
pub fn kronecker(a: &SignTensor, b: &SignTensor) -> Result<SignTensor> {
    if a.arity != b.arity {
        return Err(Error::ShapeMismatch(format!("kronecker of arity {} and {}", a.arity, b.arity)));
    }
    let (va, vb) = (a.side, b.side);
    let fa = |c: &[usize]| c.iter().fold(0, |acc, &x| acc * va + x / vb);
    let fb = |c: &[usize]| c.iter().fold(0, |acc, &x| acc * vb + x % vb);
    Ok(SignTensor::from_fn(va * vb, a.arity, |c| a.sign0(fa(c)) * b.sign0(fb(c))))
}

/// Kronecker product of a chain of matrices, left to right.
pub fn kron_all(parts: &[SignTensor]) -> Result<SignTensor> {
    let mut it = parts.iter();
    let first = it.next().ok_or_else(|| Error::ShapeMismatch("empty product".into()))?.clone();
    it.try_fold(first, |acc, p| kronecker(&acc, p))
}

pub fn pointwise_product(a: &SignTensor, b: &SignTensor) -> Result<SignTensor> {
    a.mul(b)
}

pub fn section(a: &SignTensor, axis: usize, idx: usize) -> Result<SignTensor> {
    a.section(axis, idx)
}

fn from_rows(rows: &[&str]) -> SignTensor {
    let n = rows.len();
    matrix(n, |r, c| rows[r].as_bytes()[c] == b'-')
}

/// The 4×4 matrix `A` (equal to `K_1`).
pub fn a_matrix() -> SignTensor {
    from_rows(&["++++", "++++", "+-+-", "+-+-"])
}

pub fn k1() -> SignTensor {
    a_matrix()
}

pub fn k2() -> SignTensor {
    from_rows(&["++++++++", "++++++++", "++++++++", "++++++++", "++--++--", "++--++--", "++--++--", "++--++--"])
}

pub fn k3() -> SignTensor {
    from_rows(&["++++++++", "++++++++", "++++++++", "++++++++", "+-+-+-+-", "+-+-+-+-", "+-+-+-+-", "+-+-+-+-"])
}

/// The 4×4 block `B` with every row `1 −1 1 −1`.
pub fn b_block() -> SignTensor {
    from_rows(&["+-+-", "+-+-", "+-+-", "+-+-"])
}

// -- Hadamard predicates --

fn sign_at(bits: &BitRow, flat: usize) -> i32 {
    1 - 2 * bits.get(flat) as i32
}

/// Rows pairwise orthogonal.
pub fn is_hadamard_2d(m: &SignTensor) -> Result<bool> {
    if m.arity != 2 {
        return Err(Error::PredicateArity { predicate: "hadamard2d", required: 2, actual: m.arity });
    }
    let v = m.side;
    Ok((0..v).all(|x| {
        (x + 1..v).all(|y| (0..v).map(|j| sign_at(&m.bits, x * v + j) * sign_at(&m.bits, y * v + j)).sum::<i32>() == 0)
    }))
}

/// Parallel (n−1)-dimensional sections mutually orthogonal along every axis.
pub fn is_improper_hadamard(a: &SignTensor) -> bool {
    let v = a.side;
    if a.arity == 0 || v == 0 {
        return false;
    }
    for axis in 0..a.arity {
        let s = a.stride(axis);
        let block = s * v;
        let outer = a.len() / block;
        for x in 0..v {
            for y in x + 1..v {
                let mut dot = 0i32;
                for hi in 0..outer {
                    let base = hi * block;
                    for lo in 0..s {
                        dot += sign_at(&a.bits, base + x * s + lo) * sign_at(&a.bits, base + y * s + lo);
                    }
                }
                if dot != 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Every pair of parallel axis-aligned rows orthogonal.
pub fn is_proper_hadamard(a: &SignTensor) -> bool {
    let v = a.side;
    let n = a.arity;
    if n < 2 || v == 0 {
        return false;
    }
    for l in 0..n {
        let sl = a.stride(l);
        for x in 0..v {
            for y in x + 1..v {
                for j in (0..n).filter(|&j| j != l) {
                    let sj = a.stride(j);
                    // walk every line along axis j inside the x-section of axis l
                    for base in 0..a.len() {
                        if (base / sl) % v != x || !(base / sj).is_multiple_of(v) {
                            continue;
                        }
                        let dot: i32 = (0..v)
                            .map(|c| {
                                let p = base + c * sj;
                                sign_at(&a.bits, p) * sign_at(&a.bits, p + (y - x) * sl)
                            })
                            .sum();
                        if dot != 0 {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}
