use crate::error::{Error, Result};
use crate::gf2::BitRow;

/// A function `G^n → Z_2`, stored as `v^n` bits.
///
/// The tuple `(i_1, …, i_n)` of 1-based element indices sits at flat index
/// `Σ_j (i_j − 1)·v^(n−j) + 1`, so the last coordinate varies fastest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    order: usize,
    degree: usize,
    bits: BitRow,
}

impl Cochain {
    pub fn zero(order: usize, degree: usize) -> Cochain {
        Cochain { order, degree, bits: BitRow::zeros(order.pow(degree as u32)) }
    }

    pub fn from_bits(order: usize, degree: usize, bits: BitRow) -> Result<Cochain> {
        let expected = order.pow(degree as u32);
        if bits.len() != expected {
            return Err(Error::LengthMismatch { expected, actual: bits.len() });
        }
        Ok(Cochain { order, degree, bits })
    }

    /// Evaluates `f` on every tuple of 0-based element indices.
    pub fn from_fn0(order: usize, degree: usize, mut f: impl FnMut(&[usize]) -> bool) -> Cochain {
        let mut c = Cochain::zero(order, degree);
        let mut tuple = vec![0; degree];
        for idx in 0..c.bits.len() {
            if f(&tuple) {
                c.bits.set(idx, true);
            }
            advance(&mut tuple, order);
        }
        c
    }

    /// Characteristic function of the tuple with 1-based flat index `index`.
    pub fn delta(order: usize, degree: usize, index: usize) -> Result<Cochain> {
        let mut c = Cochain::zero(order, degree);
        let max = c.bits.len();
        if index == 0 || index > max {
            return Err(Error::TupleOutOfRange { index, max });
        }
        c.bits.set(index - 1, true);
        Ok(c)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn bits(&self) -> &BitRow {
        &self.bits
    }

    pub fn into_bits(self) -> BitRow {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    /// Value at a tuple of 1-based element indices.
    pub fn value(&self, tuple: &[usize]) -> Result<bool> {
        Ok(self.bits.get(tuple_index(self.order, tuple)? - 1))
    }

    #[inline]
    pub fn value0(&self, flat: usize) -> bool {
        self.bits.get(flat)
    }

    /// Pointwise sum over Z_2.
    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        if self.order != other.order || self.degree != other.degree {
            return Err(Error::ShapeMismatch(format!(
                "cochains of order/degree {}/{} and {}/{}",
                self.order, self.degree, other.order, other.degree
            )));
        }
        let mut bits = self.bits.clone();
        bits.xor_assign(&other.bits);
        Ok(Cochain { bits, ..*self })
    }
}

/// 1-based flat index of a tuple of 1-based element indices.
pub fn tuple_index(order: usize, tuple: &[usize]) -> Result<usize> {
    let mut idx = 0;
    for &i in tuple {
        if i == 0 || i > order {
            return Err(Error::IndexOutOfRange { index: i, order });
        }
        idx = idx * order + (i - 1);
    }
    Ok(idx + 1)
}

/// Tuple of 1-based element indices at 1-based flat index `index`.
pub fn tuple_of(order: usize, degree: usize, index: usize) -> Result<Vec<usize>> {
    let max = order.pow(degree as u32);
    if index == 0 || index > max {
        return Err(Error::TupleOutOfRange { index, max });
    }
    let mut rest = index - 1;
    let mut tuple = vec![0; degree];
    for slot in tuple.iter_mut().rev() {
        *slot = rest % order + 1;
        rest /= order;
    }
    Ok(tuple)
}

/// Lexicographic successor of a 0-based tuple (last coordinate fastest).
#[inline]
pub(crate) fn advance(tuple: &mut [usize], order: usize) {
    for slot in tuple.iter_mut().rev() {
        *slot += 1;
        if *slot < order {
            return;
        }
        *slot = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_indexing_is_lexicographic() {
        assert_eq!(tuple_index(4, &[1, 1, 1]).unwrap(), 1);
        assert_eq!(tuple_index(4, &[1, 1, 4]).unwrap(), 4);
        assert_eq!(tuple_index(4, &[2, 1, 1]).unwrap(), 17);
        for idx in 1..=64 {
            assert_eq!(tuple_index(4, &tuple_of(4, 3, idx).unwrap()).unwrap(), idx);
        }
        assert!(tuple_of(4, 2, 17).is_err());
        assert!(tuple_index(4, &[5]).is_err());
    }

    #[test]
    fn from_fn_visits_in_index_order() {
        let c = Cochain::from_fn0(3, 2, |t| t == [1, 2]);
        assert_eq!(c.bits().ones().collect::<Vec<_>>(), vec![5]);
        assert!(c.value(&[2, 3]).unwrap());
        let d = Cochain::delta(3, 2, 6).unwrap();
        assert_eq!(c, d);
        assert!(c.add(&d).unwrap().is_zero());
        assert!(c.add(&Cochain::zero(3, 1)).is_err());
    }
}
