//! Arithmetic over the field with three elements.
//!
//! Three representations are provided:
//!
//! * [`Gf3Vector`] / [`Gf3Matrix`]: plain element-per-entry storage used by the
//!   public API and the text formats.
//! * [`Packed`]: a bit-sliced vector of length at most [`MAX_PACKED_LEN`],
//!   stored as two disjoint masks (positions holding 1, positions holding 2).
//!   Codeword enumeration and weight computation run on this form.
//! * [`short`]: base-3 indices for vectors of length 5 together with
//!   precomputed addition and weight tables; the exhaustive row search works
//!   entirely in this form.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Longest vector that fits the packed representation.
pub const MAX_PACKED_LEN: usize = 16;

/// An element of the field with three elements, ordered `0 < 1 < 2`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf3(u8);

impl Gf3 {
    pub const ZERO: Gf3 = Gf3(0);
    pub const ONE: Gf3 = Gf3(1);
    pub const TWO: Gf3 = Gf3(2);
    pub const ALL: [Gf3; 3] = [Gf3::ZERO, Gf3::ONE, Gf3::TWO];

    /// Reduces an arbitrary integer modulo 3.
    pub const fn new(value: u8) -> Self {
        Gf3(value % 3)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse; every nonzero element is its own inverse.
    pub fn inv(self) -> Option<Gf3> {
        (self.0 != 0).then_some(self)
    }

    pub fn from_char(c: char) -> Result<Gf3> {
        match c {
            '0' => Ok(Gf3(0)),
            '1' => Ok(Gf3(1)),
            '2' => Ok(Gf3(2)),
            other => Err(Error::InvalidSymbol(other)),
        }
    }

    pub fn to_char(self) -> char {
        (b'0' + self.0) as char
    }
}

impl Add for Gf3 {
    type Output = Gf3;
    fn add(self, rhs: Gf3) -> Gf3 {
        Gf3((self.0 + rhs.0) % 3)
    }
}

impl Sub for Gf3 {
    type Output = Gf3;
    fn sub(self, rhs: Gf3) -> Gf3 {
        Gf3((self.0 + 3 - rhs.0) % 3)
    }
}

impl Mul for Gf3 {
    type Output = Gf3;
    fn mul(self, rhs: Gf3) -> Gf3 {
        Gf3((self.0 * rhs.0) % 3)
    }
}

impl Neg for Gf3 {
    type Output = Gf3;
    fn neg(self) -> Gf3 {
        Gf3((3 - self.0) % 3)
    }
}

/// A fixed-length vector over the three-element field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf3Vector {
    entries: Vec<Gf3>,
}

impl Gf3Vector {
    pub fn new(entries: Vec<Gf3>) -> Self {
        Gf3Vector { entries }
    }

    pub fn zeros(len: usize) -> Self {
        Gf3Vector {
            entries: vec![Gf3::ZERO; len],
        }
    }

    /// Builds a vector from small integers, reducing each modulo 3.
    pub fn from_values(values: &[u8]) -> Self {
        Gf3Vector {
            entries: values.iter().map(|&v| Gf3::new(v)).collect(),
        }
    }

    /// The `i`th standard basis vector of the given length.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.entries[i] = Gf3::ONE;
        v
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Gf3] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Gf3 {
        self.entries[i]
    }

    pub fn set(&mut self, i: usize, value: Gf3) {
        self.entries[i] = value;
    }

    pub fn iter(&self) -> impl Iterator<Item = Gf3> + '_ {
        self.entries.iter().copied()
    }

    /// Number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    fn check_len(&self, other: &Gf3Vector) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Gf3Vector) -> Result<Gf3Vector> {
        self.check_len(other)?;
        Ok(Gf3Vector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Gf3Vector {
        self.scale(Gf3::TWO)
    }

    pub fn scale(&self, s: Gf3) -> Gf3Vector {
        Gf3Vector {
            entries: self.entries.iter().map(|&a| a * s).collect(),
        }
    }

    pub fn dot(&self, other: &Gf3Vector) -> Result<Gf3> {
        self.check_len(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(Gf3::ZERO, |acc, (&a, &b)| acc + a * b))
    }

    /// Lexicographic comparison induced by `0 < 1 < 2`.
    pub fn lex_cmp(&self, other: &Gf3Vector) -> Result<Ordering> {
        self.check_len(other)?;
        Ok(self.entries.cmp(&other.entries))
    }

    /// Concatenates `self` and `other`.
    pub fn concat(&self, other: &Gf3Vector) -> Gf3Vector {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Gf3Vector { entries }
    }

    /// Index of the first nonzero entry.
    pub fn leading_index(&self) -> Option<usize> {
        self.entries.iter().position(|e| !e.is_zero())
    }

    pub fn pack(&self) -> Result<Packed> {
        Packed::from_entries(&self.entries)
    }
}

impl fmt::Display for Gf3Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            write!(f, "{}", e.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for Gf3Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s.chars().map(Gf3::from_char).collect::<Result<Vec<_>>>()?;
        Ok(Gf3Vector { entries })
    }
}

/// Bit-sliced vector: bit `j` of `ones` (resp. `twos`) is set when entry `j`
/// equals 1 (resp. 2). The two masks are always disjoint.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Packed {
    pub ones: u32,
    pub twos: u32,
}

impl Packed {
    pub const ZERO: Packed = Packed { ones: 0, twos: 0 };

    pub fn from_entries(entries: &[Gf3]) -> Result<Packed> {
        if entries.len() > MAX_PACKED_LEN {
            return Err(Error::UnsupportedLength(entries.len()));
        }
        let mut p = Packed::ZERO;
        for (j, e) in entries.iter().enumerate() {
            match e.value() {
                1 => p.ones |= 1 << j,
                2 => p.twos |= 1 << j,
                _ => {}
            }
        }
        Ok(p)
    }

    pub fn unpack(self, len: usize) -> Gf3Vector {
        Gf3Vector::new((0..len).map(|j| self.get(j)).collect())
    }

    #[inline]
    pub fn get(self, j: usize) -> Gf3 {
        if self.ones >> j & 1 == 1 {
            Gf3::ONE
        } else if self.twos >> j & 1 == 1 {
            Gf3::TWO
        } else {
            Gf3::ZERO
        }
    }

    #[inline]
    pub fn support(self) -> u32 {
        self.ones | self.twos
    }

    #[inline]
    pub fn weight(self) -> u32 {
        self.support().count_ones()
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.support() == 0
    }

    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, o: Packed) -> Packed {
        let zx = !(self.ones | self.twos);
        let zy = !(o.ones | o.twos);
        Packed {
            ones: (self.ones & zy) | (o.ones & zx) | (self.twos & o.twos),
            twos: (self.twos & zy) | (o.twos & zx) | (self.ones & o.ones),
        }
    }

    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Packed {
        Packed {
            ones: self.twos,
            twos: self.ones,
        }
    }

    #[inline]
    pub fn scale(self, s: Gf3) -> Packed {
        match s.value() {
            0 => Packed::ZERO,
            1 => self,
            _ => self.neg(),
        }
    }

    /// Restriction to the coordinates selected by `mask`.
    #[inline]
    pub fn mask(self, mask: u32) -> Packed {
        Packed {
            ones: self.ones & mask,
            twos: self.twos & mask,
        }
    }
}

/// A rectangular matrix over the three-element field, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf3Matrix {
    rows: Vec<Gf3Vector>,
    cols: usize,
}

impl Gf3Matrix {
    /// Builds a matrix from rows of equal length. An empty row list yields a
    /// `0 x cols` matrix.
    pub fn from_rows(rows: Vec<Gf3Vector>, cols: usize) -> Result<Self> {
        for r in &rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    left: r.len(),
                    right: cols,
                });
            }
        }
        Ok(Gf3Matrix { rows, cols })
    }

    pub fn identity(k: usize) -> Self {
        Gf3Matrix {
            rows: (0..k).map(|i| Gf3Vector::unit(k, i)).collect(),
            cols: k,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf3Matrix {
            rows: vec![Gf3Vector::zeros(cols); rows],
            cols,
        }
    }

    /// Horizontal concatenation `(self | other)`.
    pub fn hconcat(&self, other: &Gf3Matrix) -> Result<Gf3Matrix> {
        if self.row_count() != other.row_count() {
            return Err(Error::LengthMismatch {
                left: self.row_count(),
                right: other.row_count(),
            });
        }
        Ok(Gf3Matrix {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.concat(b))
                .collect(),
            cols: self.cols + other.cols,
        })
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Gf3Vector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Gf3Vector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Gf3 {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Gf3) {
        self.rows[i].set(j, v);
    }

    pub fn into_rows(self) -> Vec<Gf3Vector> {
        self.rows
    }

    pub fn transpose(&self) -> Gf3Matrix {
        let rows = (0..self.cols)
            .map(|j| Gf3Vector::new(self.rows.iter().map(|r| r.get(j)).collect()))
            .collect();
        Gf3Matrix {
            rows,
            cols: self.rows.len(),
        }
    }

    /// Keeps only the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Gf3Matrix {
        Gf3Matrix {
            rows: self
                .rows
                .iter()
                .map(|r| Gf3Vector::new(cols.iter().map(|&j| r.get(j)).collect()))
                .collect(),
            cols: cols.len(),
        }
    }

    /// Reduced row-echelon form and rank. Zero rows are kept at the bottom so
    /// the shape is unchanged.
    pub fn rref(&self) -> (Gf3Matrix, usize) {
        let mut m = self.clone();
        let (rank, _) = m.rref_in_place();
        (m, rank)
    }

    /// Pivot columns of the reduced row-echelon form.
    pub fn pivots(&self) -> Vec<usize> {
        self.clone().rref_in_place().1
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    fn rref_in_place(&mut self) -> (usize, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows.len() {
                break;
            }
            let Some(p) = (r..self.rows.len()).find(|&i| !self.rows[i].get(c).is_zero()) else {
                continue;
            };
            self.rows.swap(r, p);
            let inv = self.rows[r].get(c).inv().expect("pivot is nonzero");
            self.rows[r] = self.rows[r].scale(inv);
            for i in 0..self.rows.len() {
                let f = self.rows[i].get(c);
                if i != r && !f.is_zero() {
                    let sub = self.rows[r].scale(-f);
                    self.rows[i] = self.rows[i].add(&sub).expect("equal lengths");
                }
            }
            pivots.push(c);
            r += 1;
        }
        (r, pivots)
    }
}

impl fmt::Display for Gf3Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Length-5 vectors encoded as base-3 indices `x1*81 + x2*27 + x3*9 + x4*3 + x5`.
///
/// Numeric order on indices coincides with the lexicographic order on vectors.
pub mod short {
    use std::sync::OnceLock;

    use super::{Gf3, Gf3Vector, Packed};

    pub const LEN: usize = 5;
    pub const COUNT: usize = 243;

    /// Index of a vector of length 5 over the field.
    pub type Tri5 = u8;

    pub struct Tables {
        add: Vec<Tri5>,
        weight: [u8; COUNT],
        neg: [Tri5; COUNT],
        packed: [Packed; COUNT],
    }

    impl Tables {
        #[inline]
        pub fn add(&self, a: Tri5, b: Tri5) -> Tri5 {
            self.add[a as usize * COUNT + b as usize]
        }

        #[inline]
        pub fn weight(&self, a: Tri5) -> u8 {
            self.weight[a as usize]
        }

        #[inline]
        pub fn neg(&self, a: Tri5) -> Tri5 {
            self.neg[a as usize]
        }

        /// Packed form occupying bits `0..5`.
        #[inline]
        pub fn packed(&self, a: Tri5) -> Packed {
            self.packed[a as usize]
        }
    }

    pub fn tables() -> &'static Tables {
        static TABLES: OnceLock<Tables> = OnceLock::new();
        TABLES.get_or_init(|| {
            let digits: Vec<[u8; LEN]> = (0..COUNT).map(|i| to_digits(i as Tri5)).collect();
            let mut add = vec![0; COUNT * COUNT];
            for a in 0..COUNT {
                for b in 0..COUNT {
                    let mut s = [0u8; LEN];
                    for j in 0..LEN {
                        s[j] = (digits[a][j] + digits[b][j]) % 3;
                    }
                    add[a * COUNT + b] = from_digits(&s);
                }
            }
            let mut weight = [0; COUNT];
            let mut neg = [0; COUNT];
            let mut packed = [Packed::ZERO; COUNT];
            for i in 0..COUNT {
                weight[i] = digits[i].iter().filter(|&&d| d != 0).count() as u8;
                let mut n = digits[i];
                n.iter_mut().for_each(|d| *d = (3 - *d) % 3);
                neg[i] = from_digits(&n);
                packed[i] = Packed::from_entries(&to_vector(i as Tri5).entries).unwrap();
            }
            Tables {
                add,
                weight,
                neg,
                packed,
            }
        })
    }

    pub fn to_digits(i: Tri5) -> [u8; LEN] {
        let mut d = [0u8; LEN];
        let mut x = i;
        for j in (0..LEN).rev() {
            d[j] = x % 3;
            x /= 3;
        }
        d
    }

    pub fn from_digits(d: &[u8; LEN]) -> Tri5 {
        d.iter().fold(0u8, |acc, &x| acc * 3 + x)
    }

    pub fn to_vector(i: Tri5) -> Gf3Vector {
        Gf3Vector::from_values(&to_digits(i))
    }

    /// Index of a length-5 vector; `None` for any other length.
    pub fn from_vector(v: &Gf3Vector) -> Option<Tri5> {
        (v.len() == LEN).then(|| v.iter().fold(0u8, |acc, x: Gf3| acc * 3 + x.value()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(s: &str) -> Gf3Vector {
        s.parse().unwrap()
    }

    #[test]
    fn field_axioms_exhaustive() {
        for a in Gf3::ALL {
            assert_eq!(a + Gf3::ZERO, a);
            assert_eq!(a * Gf3::ONE, a);
            assert_eq!(a + (-a), Gf3::ZERO);
            assert_eq!(a - a, Gf3::ZERO);
            if let Some(i) = a.inv() {
                assert_eq!(a * i, Gf3::ONE);
            }
            for b in Gf3::ALL {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                assert_eq!((a + b).value(), (a.value() + b.value()) % 3);
                assert_eq!((a * b).value(), (a.value() * b.value()) % 3);
                for c in Gf3::ALL {
                    assert_eq!(a * (b + c), a * b + a * c);
                    assert_eq!((a + b) + c, a + (b + c));
                }
            }
        }
        assert_eq!(Gf3::ONE + Gf3::TWO, Gf3::ZERO);
        assert_eq!(Gf3::TWO * Gf3::TWO, Gf3::ONE);
        assert!(Gf3::ZERO < Gf3::ONE && Gf3::ONE < Gf3::TWO);
    }

    #[test]
    fn vec_add_examples() {
        assert_eq!(v("12").add(&v("21")).unwrap(), v("00"));
        assert_eq!(v("00011").add(&v("01100")).unwrap(), v("01111"));
        assert_eq!(v("11").add(&v("11")).unwrap(), v("22"));
        assert!(matches!(
            v("11").add(&v("111")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(v("00011").weight(), 2);
        assert_eq!(Gf3Vector::zeros(10).weight(), 0);
        assert_eq!(v("12210").weight(), 4);
    }

    #[test]
    fn lex_examples() {
        assert_eq!(v("00011").lex_cmp(&v("01100")).unwrap(), Ordering::Less);
        assert_eq!(v("01201").lex_cmp(&v("01201")).unwrap(), Ordering::Equal);
        assert_eq!(v("00111").lex_cmp(&v("00112")).unwrap(), Ordering::Less);
        assert!(v("0").lex_cmp(&v("00")).is_err());
    }

    #[test]
    fn rref_examples() {
        let (r, rank) = Gf3Matrix::identity(5).rref();
        assert_eq!(rank, 5);
        assert_eq!(r, Gf3Matrix::identity(5));

        let m = Gf3Matrix::from_rows(vec![v("00100"), v("00100")], 5).unwrap();
        assert_eq!(m.rank(), 1);

        let a = Gf3Matrix::from_rows(
            ["12210", "01221", "10122", "21012", "22101"].map(v).to_vec(),
            5,
        )
        .unwrap();
        let g = Gf3Matrix::identity(5).hconcat(&a).unwrap();
        assert_eq!(g.rank(), 5);
    }

    #[test]
    fn short_tables_agree_with_vectors() {
        let t = short::tables();
        for a in 0..243u16 {
            let va = short::to_vector(a as u8);
            assert_eq!(short::from_vector(&va), Some(a as u8));
            assert_eq!(t.weight(a as u8) as usize, va.weight());
            assert_eq!(short::to_vector(t.neg(a as u8)), va.neg());
            assert_eq!(t.packed(a as u8), va.pack().unwrap());
            for b in (0..243u16).step_by(7) {
                let vb = short::to_vector(b as u8);
                assert_eq!(short::to_vector(t.add(a as u8, b as u8)), va.add(&vb).unwrap());
                assert_eq!(
                    (a as u8).cmp(&(b as u8)),
                    va.lex_cmp(&vb).unwrap(),
                    "index order must be lex order"
                );
            }
        }
    }

    fn arb_vec(len: usize) -> impl Strategy<Value = Gf3Vector> {
        proptest::collection::vec(0u8..3, len).prop_map(|d| Gf3Vector::from_values(&d))
    }

    fn arb_matrix() -> impl Strategy<Value = Gf3Matrix> {
        (1usize..6, 1usize..9).prop_flat_map(|(r, c)| {
            proptest::collection::vec(arb_vec(c), r)
                .prop_map(move |rows| Gf3Matrix::from_rows(rows, c).unwrap())
        })
    }

    proptest! {
        #[test]
        fn packed_matches_plain(a in arb_vec(12), b in arb_vec(12)) {
            let (pa, pb) = (a.pack().unwrap(), b.pack().unwrap());
            prop_assert_eq!(pa.add(pb).unpack(12), a.add(&b).unwrap());
            prop_assert_eq!(pa.neg().unpack(12), a.neg());
            prop_assert_eq!(pa.weight() as usize, a.weight());
        }

        #[test]
        fn weight_laws(a in arb_vec(10), b in arb_vec(10)) {
            prop_assert_eq!(a.neg().weight(), a.weight());
            prop_assert!(a.add(&b).unwrap().weight() <= a.weight() + b.weight());
        }

        #[test]
        fn lex_is_total_order(a in arb_vec(5), b in arb_vec(5), c in arb_vec(5)) {
            let ab = a.lex_cmp(&b).unwrap();
            prop_assert_eq!(ab, b.lex_cmp(&a).unwrap().reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if ab == Ordering::Less && b.lex_cmp(&c).unwrap() == Ordering::Less {
                prop_assert_eq!(a.lex_cmp(&c).unwrap(), Ordering::Less);
            }
        }

        #[test]
        fn rref_idempotent_and_row_space(m in arb_matrix()) {
            let (r, rank) = m.rref();
            let (rr, rank2) = r.rref();
            prop_assert_eq!(&rr, &r);
            prop_assert_eq!(rank, rank2);
            // stacking the original rows onto the reduced form adds nothing
            let mut rows = r.rows()[..rank].to_vec();
            rows.extend(m.rows().iter().cloned());
            let stacked = Gf3Matrix::from_rows(rows, m.col_count()).unwrap();
            prop_assert_eq!(stacked.rank(), rank);
        }
    }
}
