//! Ternary linear codes given by generator matrices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf3::{Gf3, Gf3Matrix, Gf3Vector, Packed, MAX_PACKED_LEN};

/// A ternary `[n, k]` code. The generator matrix always has exactly `k`
/// linearly independent rows.
#[derive(Clone, Debug)]
pub struct LinearCode {
    n: usize,
    gen: Gf3Matrix,
}

/// Hamming weight enumerator: `coeffs[w]` counts the codewords of weight `w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightEnumerator {
    pub coeffs: Vec<u64>,
}

impl WeightEnumerator {
    pub fn from_weights(n: usize, weights: impl IntoIterator<Item = u32>) -> Self {
        let mut coeffs = vec![0u64; n + 1];
        for w in weights {
            coeffs[w as usize] += 1;
        }
        WeightEnumerator { coeffs }
    }

    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// Smallest nonzero weight that occurs, if any.
    pub fn min_weight(&self) -> Option<usize> {
        self.coeffs.iter().skip(1).position(|&c| c > 0).map(|w| w + 1)
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, c)| format!("{w}:{c}"))
            .collect();
        write!(f, "{{{}}}", terms.join(", "))
    }
}

impl LinearCode {
    /// The code spanned by `rows`. Independent rows are kept verbatim as the
    /// generator matrix; otherwise the nonzero rows of the reduced form are
    /// used.
    pub fn from_generators(rows: Vec<Gf3Vector>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::EmptyGenerators);
        };
        let n = first.len();
        if n == 0 || n > MAX_PACKED_LEN {
            return Err(Error::UnsupportedLength(n));
        }
        let count = rows.len();
        let m = Gf3Matrix::from_rows(rows, n)?;
        let (reduced, rank) = m.rref();
        let gen = if rank == count {
            m
        } else {
            Gf3Matrix::from_rows(reduced.into_rows().into_iter().take(rank).collect(), n)?
        };
        Ok(LinearCode { n, gen })
    }

    pub fn from_matrix(m: &Gf3Matrix) -> Result<Self> {
        Self::from_generators(m.rows().to_vec())
    }

    /// The code with generator matrix `(I_k | a)`.
    pub fn systematic(a: &Gf3Matrix) -> Result<Self> {
        Self::from_matrix(&Gf3Matrix::identity(a.row_count()).hconcat(a)?)
    }

    /// Parses one generator row per string.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        Self::from_generators(rows.iter().map(|r| r.parse()).collect::<Result<_>>()?)
    }

    pub fn zero(n: usize) -> Self {
        LinearCode {
            n,
            gen: Gf3Matrix::zeros(0, n),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.gen.row_count()
    }

    pub fn generator(&self) -> &Gf3Matrix {
        &self.gen
    }

    pub fn packed_generators(&self) -> Vec<Packed> {
        self.gen
            .rows()
            .iter()
            .map(|r| r.pack().expect("length checked at construction"))
            .collect()
    }

    /// All `3^k` codewords, zero first.
    ///
    /// Order: lexicographic over the message `(m_1, ..., m_k)` with `m_1`
    /// most significant, the codeword being `sum m_i g_i`.
    pub fn packed_codewords(&self) -> Vec<Packed> {
        codewords_from_rows(&self.packed_generators())
    }

    pub fn codewords(&self) -> impl Iterator<Item = Gf3Vector> + '_ {
        self.packed_codewords().into_iter().map(move |p| p.unpack(self.n))
    }

    /// Minimum nonzero weight, or 0 for the zero code.
    pub fn min_weight(&self) -> usize {
        self.packed_codewords()
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.weight() as usize)
            .min()
            .unwrap_or(0)
    }

    pub fn hamming_we(&self) -> WeightEnumerator {
        WeightEnumerator::from_weights(self.n, self.packed_codewords().iter().map(|c| c.weight()))
    }

    /// Deletes the (0-based) coordinates in `coords`. The result may have
    /// smaller dimension than `self`, down to the zero code.
    pub fn puncture(&self, coords: &[usize]) -> Result<LinearCode> {
        if let Some(&bad) = coords.iter().find(|&&c| c >= self.n) {
            return Err(Error::CoordinateOutOfRange {
                coord: bad,
                len: self.n,
            });
        }
        let keep: Vec<usize> = (0..self.n).filter(|j| !coords.contains(j)).collect();
        if keep.is_empty() {
            return Err(Error::UnsupportedLength(0));
        }
        let m = self.gen.select_columns(&keep);
        if m.row_count() == 0 || m.rank() == 0 {
            return Ok(LinearCode::zero(keep.len()));
        }
        Self::from_matrix(&m)
    }

    /// Orthogonal complement under the standard dot product.
    pub fn dual(&self) -> LinearCode {
        let (r, rank) = self.gen.rref();
        let pivots = r.pivots();
        let free: Vec<usize> = (0..self.n).filter(|j| !pivots.contains(j)).collect();
        if free.is_empty() {
            return LinearCode::zero(self.n);
        }
        // For each free column f: x_f = 1, x_p(i) = -r[i][f], others 0.
        let rows = free
            .iter()
            .map(|&f| {
                let mut v = Gf3Vector::zeros(self.n);
                v.set(f, Gf3::ONE);
                for (i, &p) in pivots.iter().enumerate().take(rank) {
                    v.set(p, -r.get(i, f));
                }
                v
            })
            .collect();
        LinearCode::from_generators(rows).expect("dual basis is well formed")
    }

    pub fn is_formally_self_dual(&self) -> bool {
        self.hamming_we() == self.dual().hamming_we()
    }

    /// Reduced row-echelon generator; equal for two codes iff they have the
    /// same row space.
    pub fn canonical_generator(&self) -> Gf3Matrix {
        self.gen.rref().0
    }

    /// Row-space equality.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.n == other.n
            && self.dimension() == other.dimension()
            && self.canonical_generator() == other.canonical_generator()
    }

    pub fn contains(&self, v: &Gf3Vector) -> bool {
        if v.len() != self.n {
            return false;
        }
        let mut rows = self.gen.rows().to_vec();
        rows.push(v.clone());
        Gf3Matrix::from_rows(rows, self.n).is_ok_and(|m| m.rank() == self.dimension())
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.gen)
    }
}

/// Spans `rows` in the documented message order.
pub fn codewords_from_rows(rows: &[Packed]) -> Vec<Packed> {
    let mut out = Vec::with_capacity(3usize.pow(rows.len() as u32));
    out.push(Packed::ZERO);
    for g in rows.iter().rev() {
        let len = out.len();
        let g2 = g.neg();
        for i in 0..len {
            out.push(out[i].add(*g));
        }
        for i in 0..len {
            out.push(out[i].add(g2));
        }
    }
    out
}
