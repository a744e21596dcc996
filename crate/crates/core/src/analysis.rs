//! Refined weight enumerators, formal self-duality tallies and t-design tests
//! on minimum-weight supports.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};

/// Enumerator of a `[12,5]` code by `(w, n1, n2)`, where `w` is the weight of
/// the first ten coordinates and `n1`, `n2` count the 1s and 2s among the
/// last two.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RefinedWeightEnumerator {
    pub coeffs: BTreeMap<(u8, u8, u8), u64>,
}

impl RefinedWeightEnumerator {
    pub fn from_terms(terms: impl IntoIterator<Item = ((u8, u8, u8), u64)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (k, c) in terms {
            if c > 0 {
                *coeffs.entry(k).or_insert(0) += c;
            }
        }
        RefinedWeightEnumerator { coeffs }
    }

    pub fn get(&self, w: u8, n1: u8, n2: u8) -> u64 {
        self.coeffs.get(&(w, n1, n2)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.coeffs.values().sum()
    }

    /// Hamming weight distribution of the full length-12 code (`y = z = x`).
    pub fn full_weights(&self) -> Vec<u64> {
        let mut out = vec![0; 13];
        for (&(w, n1, n2), &c) in &self.coeffs {
            out[(w + n1 + n2) as usize] += c;
        }
        out
    }

    /// Hamming weight distribution of the first ten coordinates (`y = z = 1`).
    pub fn punctured_weights(&self) -> Vec<u64> {
        let mut out = vec![0; 11];
        for (&(w, _, _), &c) in &self.coeffs {
            out[w as usize] += c;
        }
        out
    }

    /// Whether every term satisfies `w = y1 y2 (mod 3)`.
    pub fn satisfies_c1_congruence(&self) -> bool {
        self.coeffs.keys().all(|&(w, n1, n2)| {
            let product = match (n1, n2) {
                (2, 0) | (0, 2) => 1,
                (1, 1) => 2,
                _ => 0,
            };
            w % 3 == product
        })
    }
}

impl fmt::Display for RefinedWeightEnumerator {
    /// Polynomial form, e.g. `1 + 72x^5yz + 60x^6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(w, n1, n2), &c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut mono = String::new();
            for (var, e) in [('x', w), ('y', n1), ('z', n2)] {
                match e {
                    0 => {}
                    1 => mono.push(var),
                    _ => mono.push_str(&format!("{var}^{e}")),
                }
            }
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c == 1 {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{c}{mono}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for RefinedWeightEnumerator {
    type Err = Error;

    /// Accepts sums of terms like `18x5yz`, `9x^4z^2` or `1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Usage(format!("bad enumerator term in {s:?}: {msg}"));
        let mut terms = Vec::new();
        for term in s.split('+').map(str::trim) {
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let chars: Vec<char> = term.chars().filter(|c| !c.is_whitespace()).collect();
            let mut i = 0;
            let number = |i: &mut usize| -> Option<u64> {
                let start = *i;
                while *i < chars.len() && chars[*i].is_ascii_digit() {
                    *i += 1;
                }
                (start < *i).then(|| chars[start..*i].iter().collect::<String>().parse().unwrap())
            };
            let coeff = number(&mut i).unwrap_or(1);
            let mut exps = [0u8; 3];
            while i < chars.len() {
                let slot = match chars[i] {
                    'x' => 0,
                    'y' => 1,
                    'z' => 2,
                    c => return Err(bad(&format!("unexpected {c:?}"))),
                };
                i += 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                }
                let e = number(&mut i).unwrap_or(1);
                exps[slot] += u8::try_from(e).map_err(|_| bad("exponent too large"))?;
            }
            terms.push(((exps[0], exps[1], exps[2]), coeff));
        }
        Ok(Self::from_terms(terms))
    }
}

fn check_12_5(c: &LinearCode) -> Result<()> {
    if (c.len(), c.dimension()) != (12, 5) {
        return Err(Error::WrongParameters {
            expected_n: 12,
            expected_k: 5,
            n: c.len(),
            k: c.dimension(),
        });
    }
    Ok(())
}

pub fn refined_we(c: &LinearCode) -> Result<RefinedWeightEnumerator> {
    check_12_5(c)?;
    let mut coeffs = BTreeMap::new();
    for w in c.packed_codewords() {
        let x = w.mask(0x3ff).weight() as u8;
        let n1 = (w.ones >> 10 & 3).count_ones() as u8;
        let n2 = (w.twos >> 10 & 3).count_ones() as u8;
        *coeffs.entry((x, n1, n2)).or_insert(0) += 1;
    }
    Ok(RefinedWeightEnumerator { coeffs })
}

/// Supports of the minimum-weight codewords viewed as a block design.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignReport {
    pub point_count: usize,
    pub block_size: usize,
    /// Supports as bitmasks over the points, ascending.
    pub blocks: Vec<u32>,
    /// Largest `t` such that every `t`-subset lies in the same number of blocks.
    pub max_t: usize,
    /// `lambdas[t]` for `t = 0..=max_t`.
    pub lambdas: Vec<u64>,
}

/// Coverage count of every `t`-subset of `0..n`, keyed by bitmask.
pub fn coverage(n: usize, blocks: &[u32], t: usize) -> BTreeMap<u32, u64> {
    let mut out: BTreeMap<u32, u64> = subsets(n, t).into_iter().map(|s| (s, 0)).collect();
    for &b in blocks {
        for (s, count) in out.iter_mut() {
            if s & b == *s {
                *count += 1;
            }
        }
    }
    out
}

fn subsets(n: usize, t: usize) -> Vec<u32> {
    (0u32..1 << n).filter(|s| s.count_ones() as usize == t).collect()
}

pub fn design_strength(c: &LinearCode) -> DesignReport {
    let n = c.len();
    let d = c.min_weight();
    let mut min_words = 0usize;
    let mut blocks = BTreeSet::new();
    for w in c.packed_codewords() {
        if !w.is_zero() && w.weight() as usize == d {
            min_words += 1;
            blocks.insert(w.support());
        }
    }
    // two independent words on one support of minimum weight would combine
    // into a lighter nonzero word
    assert_eq!(blocks.len() * 2, min_words, "supports must come from +/- pairs");
    let blocks: Vec<u32> = blocks.into_iter().collect();
    let mut lambdas = vec![blocks.len() as u64];
    for t in 1..=d {
        let cov = coverage(n, &blocks, t);
        let mut values = cov.values();
        let first = *values.next().expect("t <= n");
        if values.all(|&v| v == first) {
            lambdas.push(first);
        } else {
            break;
        }
    }
    DesignReport {
        point_count: n,
        block_size: d,
        max_t: lambdas.len() - 1,
        lambdas,
        blocks,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyTally {
    pub codes: usize,
    pub formally_self_dual: usize,
    /// `designs_at_least[t]` counts codes whose minimum-weight supports form a `t`-design.
    pub designs_at_least: Vec<usize>,
}

impl PropertyTally {
    pub fn designs_with_t_at_least(&self, t: usize) -> usize {
        self.designs_at_least.get(t).copied().unwrap_or(0)
    }
}

pub fn tally_properties(reps: &[LinearCode]) -> PropertyTally {
    use rayon::prelude::*;
    let props: Vec<(bool, usize)> = reps
        .par_iter()
        .map(|c| (c.is_formally_self_dual(), design_strength(c).max_t))
        .collect();
    tally_from(props)
}

/// Tally from precomputed `(formally self-dual, max_t)` pairs.
pub fn tally_from(props: impl IntoIterator<Item = (bool, usize)>) -> PropertyTally {
    let mut tally = PropertyTally::default();
    for (fsd, t) in props {
        tally.codes += 1;
        tally.formally_self_dual += fsd as usize;
        if tally.designs_at_least.len() <= t {
            tally.designs_at_least.resize(t + 1, 0);
        }
        for slot in &mut tally.designs_at_least[..=t] {
            *slot += 1;
        }
    }
    tally
}
