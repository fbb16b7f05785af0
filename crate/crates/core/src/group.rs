//! The built-in group families as explicit multiplication tables.
//!
//! Elements are labelled `1..=|G|` following the row ordering of the direct
//! product of the coordinate groups, e.g. for `Z_{2t} × Z_2` the element
//! `(i1, i2)` has index `2*i1 + i2 + 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `Z_{2t} × Z_2`
    G1,
    /// `Z_t × Z_2 × Z_2`
    G2,
    /// Dihedral group `D_{4t} = Z_2 ⋉ Z_{2t}`
    D4t,
    /// Cyclic group `Z_{2t}`
    Cyclic,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::G1 => "g1",
            Family::G2 => "g2",
            Family::D4t => "d4t",
            Family::Cyclic => "cyclic",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: Family,
    pub t: usize,
}

impl GroupSpec {
    pub fn new(family: Family, t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidGroupSpec {
                spec: format!("{}:{t}", family.name()),
                reason: "t must be at least 1".into(),
            });
        }
        Ok(GroupSpec { family, t })
    }

    pub fn order(&self) -> usize {
        match self.family {
            Family::Cyclic => 2 * self.t,
            _ => 4 * self.t,
        }
    }

    /// Moduli of the coordinate groups, slowest coordinate first.
    pub fn moduli(&self) -> Vec<usize> {
        let t = self.t;
        match self.family {
            Family::G1 => vec![2 * t, 2],
            Family::G2 => vec![t, 2, 2],
            Family::D4t => vec![2, 2 * t],
            Family::Cyclic => vec![2 * t],
        }
    }

    /// Coordinates of the element with 1-based index `index`.
    pub fn coords_of(&self, index: usize) -> Result<Vec<usize>> {
        let order = self.order();
        if index == 0 || index > order {
            return Err(Error::IndexOutOfRange { index, order });
        }
        let mut rest = index - 1;
        let moduli = self.moduli();
        let mut coords = vec![0; moduli.len()];
        for (c, m) in coords.iter_mut().zip(&moduli).rev() {
            *c = rest % m;
            rest /= m;
        }
        Ok(coords)
    }

    pub fn index_of(&self, coords: &[usize]) -> Result<usize> {
        let moduli = self.moduli();
        if coords.len() != moduli.len() {
            return Err(Error::LengthMismatch { expected: moduli.len(), actual: coords.len() });
        }
        let mut index = 0;
        for (&c, &m) in coords.iter().zip(&moduli) {
            if c >= m {
                return Err(Error::IndexOutOfRange { index: c, order: m - 1 });
            }
            index = index * m + c;
        }
        Ok(index + 1)
    }

    fn multiply_coords(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let t = self.t;
        match self.family {
            Family::G1 | Family::G2 | Family::Cyclic => {
                a.iter().zip(b).zip(self.moduli()).map(|((x, y), m)| (x + y) % m).collect()
            }
            // (i1, i2)·(j1, j2) = (i1 + j1, i2 + (-1)^{i1} j2)
            Family::D4t => {
                let n = 2 * t;
                let twisted = if a[0] == 0 { b[1] } else { (n - b[1]) % n };
                vec![(a[0] + b[0]) % 2, (a[1] + twisted) % n]
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family.name(), self.t)
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidGroupSpec { spec: s.to_string(), reason: reason.to_string() };
        let (family, t) = s.trim().split_once(':').ok_or_else(|| bad("expected <family>:<t>"))?;
        let family = match family.to_ascii_lowercase().as_str() {
            "g1" => Family::G1,
            "g2" => Family::G2,
            "d4t" => Family::D4t,
            "cyclic" => Family::Cyclic,
            _ => return Err(bad("family must be one of g1, g2, d4t, cyclic")),
        };
        let t: usize = t.parse().map_err(|_| bad("t must be a positive integer"))?;
        GroupSpec::new(family, t).map_err(|_| bad("t must be at least 1"))
    }
}

/// A finite group given by its multiplication table.
///
/// Immutable after construction. Public accessors take and return 1-based
/// element indices; the `*0` variants work with 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    spec: Option<GroupSpec>,
    order: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
}

impl FiniteGroup {
    pub fn build(spec: GroupSpec) -> FiniteGroup {
        let order = spec.order();
        let coords: Vec<Vec<usize>> = (1..=order).map(|i| spec.coords_of(i).expect("index in range")).collect();
        let mut table = Vec::with_capacity(order * order);
        for a in &coords {
            for b in &coords {
                let c = spec.multiply_coords(a, b);
                table.push((spec.index_of(&c).expect("closed law") - 1) as u32);
            }
        }
        let mut group = Self::from_table0(order, table).expect("built-in families are groups");
        group.spec = Some(spec);
        group
    }

    /// Builds a group from a 1-based table, checking the group axioms.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<FiniteGroup> {
        let order = rows.len();
        let mut table = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidTable(format!("row {} has {} entries, expected {order}", i + 1, row.len())));
            }
            for &x in row {
                if x == 0 || x > order {
                    return Err(Error::IndexOutOfRange { index: x, order });
                }
                table.push((x - 1) as u32);
            }
        }
        let group = Self::from_table0(order, table)?;
        group.check_axioms().map_err(Error::InvalidTable)?;
        Ok(group)
    }

    fn from_table0(order: usize, table: Vec<u32>) -> Result<FiniteGroup> {
        if order == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] as usize == x && table[x * order + e] as usize == x))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        let mut inv = vec![u32::MAX; order];
        for (x, slot) in inv.iter_mut().enumerate() {
            let y = (0..order)
                .find(|&y| table[x * order + y] as usize == identity)
                .ok_or_else(|| Error::InvalidTable(format!("element {} has no inverse", x + 1)))?;
            *slot = y as u32;
        }
        Ok(FiniteGroup { spec: None, order, table, inv, identity })
    }

    pub fn spec(&self) -> Option<GroupSpec> {
        self.spec
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// 1-based index of the identity element.
    pub fn identity(&self) -> usize {
        self.identity + 1
    }

    pub fn multiply(&self, i: usize, j: usize) -> Result<usize> {
        self.check(i)?;
        self.check(j)?;
        Ok(self.mul0(i - 1, j - 1) + 1)
    }

    pub fn inverse(&self, i: usize) -> Result<usize> {
        self.check(i)?;
        Ok(self.inv0(i - 1) + 1)
    }

    #[inline]
    pub fn mul0(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv0(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn identity0(&self) -> usize {
        self.identity
    }

    /// The table as 1-based rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.iter().map(|&x| x as usize + 1).collect()).collect()
    }

    fn check(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.order {
            Err(Error::IndexOutOfRange { index: i, order: self.order })
        } else {
            Ok(())
        }
    }

    pub fn is_abelian(&self) -> bool {
        let v = self.order;
        (0..v).all(|a| (0..v).all(|b| self.mul0(a, b) == self.mul0(b, a)))
    }

    /// Order of the element `i` (1-based).
    pub fn element_order(&self, i: usize) -> Result<usize> {
        self.check(i)?;
        let mut x = i - 1;
        let mut k = 1;
        while x != self.identity {
            x = self.mul0(x, i - 1);
            k += 1;
        }
        Ok(k)
    }

    /// Exhaustive check of the Latin-square, identity, inverse and
    /// associativity properties. Cubic in the order.
    pub fn check_axioms(&self) -> Result<(), String> {
        let v = self.order;
        for a in 0..v {
            let mut row = vec![false; v];
            let mut col = vec![false; v];
            for b in 0..v {
                row[self.mul0(a, b)] = true;
                col[self.mul0(b, a)] = true;
            }
            if row.iter().chain(&col).any(|seen| !seen) {
                return Err(format!("row or column {} is not a permutation", a + 1));
            }
            if self.mul0(a, self.inv0(a)) != self.identity || self.mul0(self.inv0(a), a) != self.identity {
                return Err(format!("inverse of {} is not two-sided", a + 1));
            }
        }
        for a in 0..v {
            for b in 0..v {
                let ab = self.mul0(a, b);
                for c in 0..v {
                    if self.mul0(ab, c) != self.mul0(a, self.mul0(b, c)) {
                        return Err(format!("({}·{})·{} != {}·({}·{})", a + 1, b + 1, c + 1, a + 1, b + 1, c + 1));
                    }
                }
            }
        }
        Ok(())
    }
}
