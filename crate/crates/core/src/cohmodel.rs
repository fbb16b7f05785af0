//! Cohomological models: basis sizes, codifferentials over Z_2 and the lift
//! map `F` that sends a tuple of group elements to coordinates in the model.
//!
//! A model for degree `n` carries the three consecutive basis sizes
//! `(q, r, s)` of degrees `n−1, n, n+1`, the matrices of `d^{n−1}` (q×r) and
//! `d^n` (r×s), and the lift on `G^n`.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::cochain::{advance, tuple_index, Cochain};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitRow};
use crate::group::{Family, FiniteGroup, GroupSpec};

#[derive(Clone, Debug)]
enum Lift {
    /// Closed-form evaluation on group coordinates.
    Formula { spec: GroupSpec, coords: Vec<Vec<usize>> },
    /// Explicit table indexed by 0-based flat tuple index.
    Table(Vec<BitRow>),
}

#[derive(Clone, Debug)]
pub struct CohModel {
    group: FiniteGroup,
    degree: usize,
    dims: [usize; 3],
    diffs: [BitMatrix; 2],
    lift: Lift,
}

fn diag(rows: usize, cols: usize, entries: &[usize], on: bool) -> BitMatrix {
    let mut m = BitMatrix::zeros(rows, cols);
    if on {
        for &i in entries {
            m.set(i, i, true);
        }
    }
    m
}

impl CohModel {
    /// The built-in model for `spec` in cohomological degree `degree`.
    pub fn builtin(spec: GroupSpec, degree: usize) -> Result<CohModel> {
        let odd = spec.t % 2 == 1;
        let (dims, diffs) = match (spec.family, degree) {
            (Family::G1 | Family::D4t, 2) => ([2, 3, 4], [BitMatrix::zeros(2, 3), BitMatrix::zeros(3, 4)]),
            // d^1(u1) = t·e1, d^2(e2) = t·v2, d^2(e3) = t·v3
            (Family::G2, 2) => ([3, 6, 10], [diag(3, 6, &[0], odd), diag(6, 10, &[1, 2], odd)]),
            (Family::G1, 3) => ([3, 4, 5], [BitMatrix::zeros(3, 4), BitMatrix::zeros(4, 5)]),
            // d^2(e2) = t·v2, d^2(e3) = t·v3, d^3(v_m) = t·w_m for m in {1, 4, 5, 6}
            (Family::G2, 3) => ([6, 10, 15], [diag(6, 10, &[1, 2], odd), diag(10, 15, &[0, 3, 4, 5], odd)]),
            (Family::Cyclic, 3) => ([1, 1, 1], [BitMatrix::zeros(1, 1), BitMatrix::zeros(1, 1)]),
            _ => {
                return Err(Error::ModelNotProvided { family: spec.family.name().to_string(), degree });
            }
        };
        let group = FiniteGroup::build(spec);
        let coords = (1..=spec.order()).map(|i| spec.coords_of(i)).collect::<Result<_>>()?;
        Ok(CohModel { group, degree, dims, diffs, lift: Lift::Formula { spec, coords } })
    }

    /// A model from explicit data; the lift table is indexed by 0-based flat
    /// tuple index over `G^degree`.
    pub fn from_parts(
        group: FiniteGroup,
        degree: usize,
        dims: [usize; 3],
        diffs: [BitMatrix; 2],
        lift_table: Vec<BitRow>,
    ) -> Result<CohModel> {
        if degree == 0 {
            return Err(Error::DegreeOutOfRange { degree, min: 1, max: usize::MAX });
        }
        for (i, m) in diffs.iter().enumerate() {
            if m.rows() != dims[i] || m.cols() != dims[i + 1] {
                return Err(Error::ShapeMismatch(format!(
                    "d^{} is {}x{}, expected {}x{}",
                    degree - 1 + i,
                    m.rows(),
                    m.cols(),
                    dims[i],
                    dims[i + 1]
                )));
            }
        }
        let tuples = group.order().pow(degree as u32);
        if lift_table.len() != tuples {
            return Err(Error::LengthMismatch { expected: tuples, actual: lift_table.len() });
        }
        if let Some(row) = lift_table.iter().find(|r| r.len() != dims[1]) {
            return Err(Error::LengthMismatch { expected: dims[1], actual: row.len() });
        }
        let model = CohModel { group, degree, dims, diffs, lift: Lift::Table(lift_table) };
        model.check_complex()?;
        Ok(model)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Basis sizes `(q, r, s)` in degrees `n−1, n, n+1`.
    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    /// Basis size in degree `i`.
    pub fn dim(&self, i: usize) -> Result<usize> {
        let lo = self.degree - 1;
        if i < lo || i > self.degree + 1 {
            return Err(Error::DegreeOutOfRange { degree: i, min: lo, max: self.degree + 1 });
        }
        Ok(self.dims[i - lo])
    }

    /// Matrix of `d^i`; row `m` holds the coordinates of `d(basis_m)`.
    pub fn codifferential_matrix(&self, i: usize) -> Result<&BitMatrix> {
        let lo = self.degree - 1;
        if i < lo || i > self.degree {
            return Err(Error::DegreeOutOfRange { degree: i, min: lo, max: self.degree });
        }
        Ok(&self.diffs[i - lo])
    }

    pub fn check_complex(&self) -> Result<()> {
        if self.diffs[0].mul(&self.diffs[1])?.is_zero() {
            Ok(())
        } else {
            Err(Error::NotAComplex { lower: self.degree - 1, upper: self.degree })
        }
    }

    /// `F` applied to a tuple of 1-based element indices.
    pub fn lift(&self, tuple: &[usize]) -> Result<BitRow> {
        if tuple.len() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, actual: tuple.len() });
        }
        let flat = tuple_index(self.group.order(), tuple)? - 1;
        let zero_based: Vec<usize> = tuple.iter().map(|i| i - 1).collect();
        Ok(self.lift_at(flat, &zero_based))
    }

    fn lift_at(&self, flat: usize, tuple0: &[usize]) -> BitRow {
        match &self.lift {
            Lift::Table(rows) => rows[flat].clone(),
            Lift::Formula { spec, coords } => {
                let c: Vec<&[usize]> = tuple0.iter().map(|&g| coords[g].as_slice()).collect();
                BitRow::from_bools(formula(*spec, &c).into_iter().map(|x| x % 2 == 1))
            }
        }
    }

    /// The full lift table in flat tuple order.
    pub fn lift_table(&self) -> Vec<BitRow> {
        let v = self.group.order();
        let n = v.pow(self.degree as u32);
        let mut tuple = vec![0; self.degree];
        let mut out = Vec::with_capacity(n);
        for flat in 0..n {
            out.push(self.lift_at(flat, &tuple));
            advance(&mut tuple, v);
        }
        out
    }

    /// The cochain `tuple ↦ ⟨coeffs, F(tuple)⟩` on `G^n`.
    pub fn lift_cochain(&self, coeffs: &BitRow) -> Result<Cochain> {
        if coeffs.len() != self.dims[1] {
            return Err(Error::LengthMismatch { expected: self.dims[1], actual: coeffs.len() });
        }
        let v = self.group.order();
        let mut flat = 0;
        Ok(Cochain::from_fn0(v, self.degree, |t| {
            let bit = self.lift_at(flat, t).dot(coeffs);
            flat += 1;
            bit
        }))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<CohModel> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text).map_err(|e| match e {
            Error::Json(j) => Error::ModelFormat { path: path.to_path_buf(), message: j.to_string() },
            Error::ModelFormat { message, .. } => Error::ModelFormat { path: path.to_path_buf(), message },
            other => Error::ModelFormat { path: path.to_path_buf(), message: other.to_string() },
        })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json()?)?;
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        let v = self.group.order();
        let mut lift = Map::new();
        let mut tuple = vec![0; self.degree];
        for row in self.lift_table() {
            let key = tuple.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",");
            lift.insert(key, Value::from(row.to_bits()));
            advance(&mut tuple, v);
        }
        let file = ModelFile {
            group: match self.group.spec() {
                Some(spec) => GroupField::Spec(spec.to_string()),
                None => GroupField::Table(self.group.table()),
            },
            degree: self.degree,
            dims: self.dims.to_vec(),
            diff: self.diffs.iter().map(BitMatrix::to_bits).collect(),
            lift,
        };
        Ok(serde_json::to_string_pretty(&file)?)
    }

    pub fn from_json(text: &str) -> Result<CohModel> {
        let file: ModelFile = serde_json::from_str(text)?;
        let field = |message: String| Error::ModelFormat { path: Default::default(), message };
        let group = match &file.group {
            GroupField::Spec(s) => FiniteGroup::build(s.parse()?),
            GroupField::Table(rows) => {
                FiniteGroup::from_table(rows).map_err(|e| field(format!("field `group`: {e}")))?
            }
        };
        if file.degree == 0 {
            return Err(field("field `degree`: must be at least 1".into()));
        }
        let dims: [usize; 3] = file
            .dims
            .as_slice()
            .try_into()
            .map_err(|_| field(format!("field `dims`: expected 3 entries, got {}", file.dims.len())))?;
        if file.diff.len() != 2 {
            return Err(field(format!("field `diff`: expected 2 matrices, got {}", file.diff.len())));
        }
        let mut diffs = Vec::with_capacity(2);
        for (i, rows) in file.diff.iter().enumerate() {
            let (r, c) = (dims[i], dims[i + 1]);
            if rows.len() != r {
                return Err(field(format!("field `diff[{i}]`: expected {r} rows, got {}", rows.len())));
            }
            for (j, row) in rows.iter().enumerate() {
                if row.len() != c {
                    return Err(field(format!(
                        "field `diff[{i}]` row {}: expected {c} entries, got {}",
                        j + 1,
                        row.len()
                    )));
                }
            }
            diffs.push(BitMatrix::from_bits(rows, c).map_err(|e| field(format!("field `diff[{i}]`: {e}")))?);
        }
        let v = group.order();
        let tuples = v.pow(file.degree as u32);
        let mut table: Vec<Option<BitRow>> = vec![None; tuples];
        for (key, value) in &file.lift {
            let tuple: Vec<usize> = key
                .split(',')
                .map(|p| p.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| field(format!("field `lift`: bad key `{key}`")))?;
            if tuple.len() != file.degree {
                return Err(field(format!(
                    "field `lift`: key `{key}` has {} entries, expected {}",
                    tuple.len(),
                    file.degree
                )));
            }
            let flat = tuple_index(v, &tuple).map_err(|e| field(format!("field `lift`: key `{key}`: {e}")))? - 1;
            let bits: Vec<u8> = serde_json::from_value(value.clone())
                .map_err(|_| field(format!("field `lift[{key}]`: expected an array of 0/1")))?;
            if bits.len() != dims[1] {
                return Err(field(format!("field `lift[{key}]`: expected {} entries, got {}", dims[1], bits.len())));
            }
            table[flat] = Some(BitRow::from_bits(&bits).map_err(|e| field(format!("field `lift[{key}]`: {e}")))?);
        }
        let table: Vec<BitRow> = table
            .into_iter()
            .enumerate()
            .map(|(i, r)| r.ok_or_else(|| field(format!("field `lift`: missing tuple #{}", i + 1))))
            .collect::<Result<_>>()?;
        let [d0, d1]: [BitMatrix; 2] = diffs.try_into().expect("two matrices");
        Self::from_parts(group, file.degree, dims, [d0, d1], table)
    }
}

impl PartialEq for CohModel {
    fn eq(&self, other: &Self) -> bool {
        self.group.table() == other.group.table()
            && self.degree == other.degree
            && self.dims == other.dims
            && self.diffs == other.diffs
            && self.lift_table() == other.lift_table()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum GroupField {
    Spec(String),
    Table(Vec<Vec<usize>>),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    group: GroupField,
    degree: usize,
    dims: Vec<usize>,
    diff: Vec<Vec<Vec<u8>>>,
    lift: Map<String, Value>,
}

#[inline]
fn ge(a: usize, b: usize) -> u32 {
    (a >= b) as u32
}

/// Unreduced coefficients of `F` on a tuple of element coordinates.
fn formula(spec: GroupSpec, c: &[&[usize]]) -> Vec<u32> {
    let t = spec.t;
    let u = |x: usize| x as u32;
    match (spec.family, c.len()) {
        (Family::G1, 2) => {
            let (i, j) = (c[0], c[1]);
            vec![ge(i[0] + j[0], 2 * t), u(i[0] * j[1]), ge(i[1] + j[1], 2)]
        }
        (Family::G2, 2) => {
            let (i, j) = (c[0], c[1]);
            vec![
                ge(i[0] + j[0], t),
                u(i[0] * j[1]),
                u(i[0] * j[2]),
                ge(i[1] + j[1], 2),
                u(i[1] * j[2]),
                ge(i[2] + j[2], 2),
            ]
        }
        (Family::D4t, 2) => {
            let n = 2 * t as i64;
            let (i1, i2) = (c[0][0] as i64, c[0][1] as i64);
            let (j1, j2) = (c[1][0] as i64, c[1][1] as i64);
            let sign = |e: i64| if e % 2 == 0 { 1 } else { -1 };
            let e2 = (-j1 * sign(i1) * i2).rem_euclid(n);
            let twisted = (sign(i1 + j1) * i2).rem_euclid(n);
            let e3 = ((sign(j1) * j2).rem_euclid(n) + twisted >= n) as i64 + j1 * (i2 >= 1) as i64 * (twisted - 1);
            vec![(i1 * j1) as u32, e2.rem_euclid(2) as u32, e3.rem_euclid(2) as u32]
        }
        (Family::G1, 3) => {
            let (i, j, k) = (c[0], c[1], c[2]);
            let wrap = ge(i[0] + j[0], 2 * t);
            vec![u(k[0]) * wrap, u(k[1]) * wrap, u(i[0]) * ge(j[1] + k[1], 2), u(k[1]) * ge(i[1] + j[1], 2)]
        }
        (Family::G2, 3) => {
            let (i, j, k) = (c[0], c[1], c[2]);
            let wrap = ge(i[0] + j[0], t);
            vec![
                u(k[0]) * wrap,
                u(k[1]) * wrap,
                u(k[2]) * wrap,
                u(i[0]) * ge(j[1] + k[1], 2),
                u(i[0] * j[1] * k[2]),
                u(i[0]) * ge(j[2] + k[2], 2),
                u(k[1]) * ge(i[1] + j[1], 2),
                u(k[2]) * ge(i[1] + j[1], 2),
                u(i[1]) * ge(j[2] + k[2], 2),
                u(k[2]) * ge(i[2] + j[2], 2),
            ]
        }
        (Family::Cyclic, 3) => vec![u(c[2][0]) * ge(c[0][0] + c[1][0], 2 * t)],
        _ => unreachable!("builtin models are checked at construction"),
    }
}
