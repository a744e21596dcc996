//! Signed coordinate permutations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf3::{Gf3Vector, Packed};

/// The map `x -> ((-1)^{a_1} x_{s(1)}, ..., (-1)^{a_n} x_{s(n)})`, with `perm[i] = s(i)`
/// and `flip[i] = a_i` (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonomialMap {
    perm: Vec<u8>,
    flip: Vec<bool>,
}

impl MonomialMap {
    pub fn new(perm: Vec<u8>, flip: Vec<bool>) -> Result<Self> {
        let n = perm.len();
        if flip.len() != n {
            return Err(Error::LengthMismatch {
                left: n,
                right: flip.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            let p = p as usize;
            if p >= n || seen[p] {
                return Err(Error::Usage(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        Ok(MonomialMap { perm, flip })
    }

    pub fn identity(n: usize) -> Self {
        MonomialMap {
            perm: (0..n as u8).collect(),
            flip: vec![false; n],
        }
    }

    /// Multiplication of every coordinate by `-1`.
    pub fn negation(n: usize) -> Self {
        MonomialMap {
            perm: (0..n as u8).collect(),
            flip: vec![true; n],
        }
    }

    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    pub fn flips(&self) -> &[bool] {
        &self.flip
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.degree())
    }

    pub fn apply_vec(&self, x: &Gf3Vector) -> Result<Gf3Vector> {
        self.check_degree(x.len())?;
        Ok(Gf3Vector::new(
            (0..self.degree())
                .map(|i| {
                    let v = x.get(self.perm[i] as usize);
                    if self.flip[i] {
                        -v
                    } else {
                        v
                    }
                })
                .collect(),
        ))
    }

    pub fn apply_packed(&self, x: Packed) -> Packed {
        let mut out = Packed::ZERO;
        for i in 0..self.degree() {
            let src = self.perm[i] as u32;
            let (mut one, mut two) = ((x.ones >> src) & 1, (x.twos >> src) & 1);
            if self.flip[i] {
                std::mem::swap(&mut one, &mut two);
            }
            out.ones |= one << i;
            out.twos |= two << i;
        }
        out
    }

    pub fn apply_code(&self, c: &LinearCode) -> Result<LinearCode> {
        self.check_degree(c.len())?;
        if c.dimension() == 0 {
            return Ok(c.clone());
        }
        let rows = c
            .generator()
            .rows()
            .iter()
            .map(|r| self.apply_vec(r))
            .collect::<Result<Vec<_>>>()?;
        LinearCode::from_generators(rows)
    }

    /// The map "apply `self`, then `next`".
    pub fn then(&self, next: &MonomialMap) -> MonomialMap {
        assert_eq!(self.degree(), next.degree());
        let n = self.degree();
        let mut perm = Vec::with_capacity(n);
        let mut flip = Vec::with_capacity(n);
        for i in 0..n {
            let j = next.perm[i] as usize;
            perm.push(self.perm[j]);
            flip.push(next.flip[i] ^ self.flip[j]);
        }
        MonomialMap { perm, flip }
    }

    pub fn inverse(&self) -> MonomialMap {
        let n = self.degree();
        let mut perm = vec![0u8; n];
        let mut flip = vec![false; n];
        for i in 0..n {
            let s = self.perm[i] as usize;
            perm[s] = i as u8;
            flip[s] = self.flip[i];
        }
        MonomialMap { perm, flip }
    }

    /// Converts a permutation of the `2n` signed coordinate symbols
    /// `(j, s) -> 2j + (s - 1)` into a monomial map. Returns `None` unless the
    /// permutation keeps the pairs `{2j, 2j+1}` together.
    ///
    /// If `images` carries the symbols of a code `C` onto those of a code `D`
    /// (as an isomorphism of their digraphs), the result maps `C` onto `D`.
    pub fn from_symbol_map(images: &[u8]) -> Option<MonomialMap> {
        if images.len() % 2 != 0 {
            return None;
        }
        let n = images.len() / 2;
        let mut perm = vec![u8::MAX; n];
        let mut flip = vec![false; n];
        for j in 0..n {
            let a = images[2 * j] as usize;
            let b = images[2 * j + 1] as usize;
            if a / 2 != b / 2 || a == b || a / 2 >= n {
                return None;
            }
            let target = a / 2;
            if perm[target] != u8::MAX {
                return None;
            }
            perm[target] = j as u8;
            flip[target] = a % 2 == 1;
        }
        Some(MonomialMap { perm, flip })
    }

    /// Inverse of [`MonomialMap::from_symbol_map`].
    pub fn to_symbol_map(&self) -> Vec<u8> {
        let n = self.degree();
        let mut images = vec![0u8; 2 * n];
        for i in 0..n {
            let j = self.perm[i] as usize;
            let f = self.flip[i] as u8;
            images[2 * j] = (2 * i) as u8 + f;
            images[2 * j + 1] = (2 * i) as u8 + (1 - f);
        }
        images
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if self.degree() != n {
            return Err(Error::LengthMismatch {
                left: self.degree(),
                right: n,
            });
        }
        Ok(())
    }
}

impl fmt::Display for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.degree())
            .map(|i| format!("{}{}", if self.flip[i] { "-" } else { "" }, self.perm[i] + 1))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Every monomial map of degree `n`; only sensible for small `n`.
pub fn all_monomial_maps(n: usize) -> Vec<MonomialMap> {
    let mut perms: Vec<Vec<u8>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &perms {
            for x in 0..n as u8 {
                if !p.contains(&x) {
                    let mut q = p.clone();
                    q.push(x);
                    next.push(q);
                }
            }
        }
        perms = next;
    }
    let mut out = Vec::new();
    for p in perms {
        for mask in 0..(1u32 << n) {
            out.push(MonomialMap {
                perm: p.clone(),
                flip: (0..n).map(|i| mask >> i & 1 == 1).collect(),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    pub(crate) fn arb_map(n: usize) -> impl Strategy<Value = MonomialMap> {
        (Just((0..n as u8).collect::<Vec<u8>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), n))
            .prop_map(|(perm, flip)| MonomialMap::new(perm, flip).unwrap())
    }

    #[test]
    fn apply_matches_definition() {
        let m = MonomialMap::new(vec![2, 0, 1], vec![true, false, false]).unwrap();
        let x: Gf3Vector = "120".parse().unwrap();
        // y_1 = -x_3, y_2 = x_1, y_3 = x_2
        assert_eq!(m.apply_vec(&x).unwrap().to_string(), "012");
        assert_eq!(m.apply_packed(x.pack().unwrap()).unpack(3).to_string(), "012");
        assert!(m.apply_vec(&"12".parse().unwrap()).is_err());
    }

    #[test]
    fn identity_and_negation_fix_codes() {
        let c = fixtures::code_10_5_5();
        assert!(MonomialMap::identity(10).apply_code(&c).unwrap().same_code(&c));
        assert!(MonomialMap::negation(10).apply_code(&c).unwrap().same_code(&c));
    }

    #[test]
    fn all_maps_count() {
        assert_eq!(all_monomial_maps(3).len(), 48);
        assert_eq!(all_monomial_maps(4).len(), 384);
    }

    proptest! {
        #[test]
        fn composition_and_inverse(a in arb_map(10), b in arb_map(10), x in proptest::collection::vec(0u8..3, 10)) {
            let x = Gf3Vector::from_values(&x);
            let ab = a.then(&b);
            prop_assert_eq!(ab.apply_vec(&x).unwrap(), b.apply_vec(&a.apply_vec(&x).unwrap()).unwrap());
            prop_assert_eq!(a.then(&a.inverse()), MonomialMap::identity(10));
            prop_assert_eq!(a.inverse().then(&a), MonomialMap::identity(10));
            prop_assert_eq!(MonomialMap::from_symbol_map(&a.to_symbol_map()), Some(a.clone()));
        }

        #[test]
        fn maps_preserve_weight_enumerator(m in arb_map(10)) {
            let c = fixtures::code_10_5_5();
            let d = m.apply_code(&c).unwrap();
            prop_assert_eq!(d.hamming_we(), c.hamming_we());
            prop_assert!(m.inverse().apply_code(&d).unwrap().same_code(&c));
        }
    }
}
