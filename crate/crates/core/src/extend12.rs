//! Extensions `G(a, b) = (G | a | b)` of `[10,5]` codes to `[12,5]` codes,
//! the conditions (C1)-(C3) on them, and classification up to
//! SZ-equivalence.
//!
//! Coordinates `0..10` of a `[12,5]` codeword are its x-part and `10, 11`
//! its y-part. The conditions are
//!
//! * (C1) `wt(x) = y1 * y2 (mod 3)` for every codeword;
//! * (C2) `wt(x) >= 3` for every nonzero codeword;
//! * (C3) `wt(x) = 3` implies `(y1, y2) != (0, 0)`.
//!
//! Two such codes are SZ-equivalent when a monomial map on the x-part,
//! combined with a swap of `y1, y2` and one common sign on both, carries one
//! onto the other.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::analysis::{refined_we, RefinedWeightEnumerator};
use crate::code::{codewords_from_rows, LinearCode};
use crate::equivalence::{self, code_cert, CanonicalCert, ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::gf3::{Gf3, Gf3Vector, Packed};
use crate::monomial::MonomialMap;

const X_MASK: u32 = 0x3ff;

/// The two appended columns of `G(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtensionColumns {
    pub a: Gf3Vector,
    pub b: Gf3Vector,
}

impl ExtensionColumns {
    pub fn from_pairs(pairs: &[(Gf3, Gf3)]) -> Self {
        ExtensionColumns {
            a: Gf3Vector::new(pairs.iter().map(|p| p.0).collect()),
            b: Gf3Vector::new(pairs.iter().map(|p| p.1).collect()),
        }
    }

    /// Parses row pairs such as `["11", "22", "12"]`.
    pub fn from_strs(pairs: &[&str]) -> Result<Self> {
        let mut out = Vec::with_capacity(pairs.len());
        for p in pairs {
            let v: Gf3Vector = p.parse()?;
            if v.len() != 2 {
                return Err(Error::Usage(format!("pair {p:?} must have two symbols")));
            }
            out.push((v.get(0), v.get(1)));
        }
        Ok(Self::from_pairs(&out))
    }

    pub fn pairs(&self) -> Vec<(Gf3, Gf3)> {
        self.a.iter().zip(self.b.iter()).collect()
    }
}

impl fmt::Display for ExtensionColumns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs()
            .iter()
            .map(|(a, b)| format!("{}{}", a.to_char(), b.to_char()))
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A map `(x, y1, y2) -> (m(x), (-1)^beta y_tau(1), (-1)^beta y_tau(2))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SZMap {
    pub base: MonomialMap,
    pub beta: bool,
    /// Whether `tau` swaps the two y coordinates.
    pub swap: bool,
}

impl SZMap {
    pub fn to_monomial(&self) -> MonomialMap {
        let n = self.base.degree();
        let mut perm = self.base.perm().to_vec();
        let (y1, y2) = if self.swap { (n + 1, n) } else { (n, n + 1) };
        perm.extend([y1 as u8, y2 as u8]);
        let mut flip = self.base.flips().to_vec();
        flip.extend([self.beta, self.beta]);
        MonomialMap::new(perm, flip).expect("valid extension of a monomial map")
    }

    pub fn apply_code(&self, c: &LinearCode) -> Result<LinearCode> {
        self.to_monomial().apply_code(c)
    }
}

/// Pairs `(a_i, b_i)` with `a_i b_i = w (mod 3)`.
pub fn column_pairs(w_mod_3: u8) -> Vec<(Gf3, Gf3)> {
    let g = Gf3::new;
    match w_mod_3 % 3 {
        0 => vec![(g(0), g(0)), (g(0), g(1)), (g(0), g(2)), (g(1), g(0)), (g(2), g(0))],
        1 => vec![(g(1), g(1)), (g(2), g(2))],
        _ => vec![(g(1), g(2)), (g(2), g(1))],
    }
}

/// The pinned `(a_1, b_1)` for a first row of weight `w`.
pub fn default_normalization(w_mod_3: u8) -> (Gf3, Gf3) {
    match w_mod_3 % 3 {
        0 => (Gf3::new(0), Gf3::new(1)),
        1 => (Gf3::new(1), Gf3::new(1)),
        _ => (Gf3::new(1), Gf3::new(2)),
    }
}

fn check_10_5(g10: &LinearCode) -> Result<()> {
    if (g10.len(), g10.dimension()) != (10, 5) {
        return Err(Error::WrongParameters {
            expected_n: 10,
            expected_k: 5,
            n: g10.len(),
            k: g10.dimension(),
        });
    }
    Ok(())
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

/// The code generated by `(G | a | b)`, keeping the rows of `g10` as given.
pub fn extension_code(g10: &LinearCode, cols: &ExtensionColumns) -> Result<LinearCode> {
    check_10_5(g10)?;
    if cols.a.len() != 5 || cols.b.len() != 5 {
        return Err(Error::LengthMismatch {
            left: 5,
            right: cols.a.len().min(cols.b.len()),
        });
    }
    let rows = g10
        .generator()
        .rows()
        .iter()
        .enumerate()
        .map(|(i, r)| r.concat(&Gf3Vector::new(vec![cols.a.get(i), cols.b.get(i)])))
        .collect();
    LinearCode::from_generators(rows)
}

/// All column choices allowed by the pair table, with `(a_1, b_1)` pinned to
/// `first` when given.
pub fn extension_columns(g10: &LinearCode, first: Option<(Gf3, Gf3)>) -> Result<Vec<ExtensionColumns>> {
    check_10_5(g10)?;
    let weights: Vec<u8> = g10.generator().rows().iter().map(|r| (r.weight() % 3) as u8).collect();
    let mut choices: Vec<Vec<(Gf3, Gf3)>> = weights.iter().map(|&w| column_pairs(w)).collect();
    if let Some(p) = first {
        if !choices[0].contains(&p) {
            return Err(Error::Usage(format!(
                "pair ({},{}) is not admissible for a first row of weight {} mod 3",
                p.0.to_char(),
                p.1.to_char(),
                weights[0]
            )));
        }
        choices[0] = vec![p];
    }
    let mut out = vec![Vec::new()];
    for opts in &choices {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<(Gf3, Gf3)>| {
                opts.iter().map(move |&p| {
                    let mut v = prefix.clone();
                    v.push(p);
                    v
                })
            })
            .collect();
    }
    Ok(out.iter().map(|p| ExtensionColumns::from_pairs(p)).collect())
}

/// Extensions of `g10` with `(a_1, b_1)` pinned by the weight of its first row.
pub fn extensions(g10: &LinearCode, first: (Gf3, Gf3)) -> Result<Vec<LinearCode>> {
    extension_columns(g10, Some(first))?
        .iter()
        .map(|cols| extension_code(g10, cols))
        .collect()
}

/// Extensions pinned by [`default_normalization`].
pub fn normalized_extensions(g10: &LinearCode) -> Result<Vec<(ExtensionColumns, LinearCode)>> {
    check_10_5(g10)?;
    let w1 = (g10.generator().row(0).weight() % 3) as u8;
    extension_columns(g10, Some(default_normalization(w1)))?
        .into_iter()
        .map(|cols| {
            let c = extension_code(g10, &cols)?;
            Ok((cols, c))
        })
        .collect()
}

fn y_product(w: Packed) -> u32 {
    let y1 = w.get(10).value() as u32;
    let y2 = w.get(11).value() as u32;
    y1 * y2 % 3
}

fn x_weight(w: Packed) -> u32 {
    w.mask(X_MASK).weight()
}

fn c1_words(words: &[Packed]) -> bool {
    words.iter().all(|&w| x_weight(w) % 3 == y_product(w))
}

fn c2_words(words: &[Packed]) -> bool {
    words.iter().all(|&w| w.is_zero() || x_weight(w) >= 3)
}

fn c3_words(words: &[Packed]) -> bool {
    words
        .iter()
        .all(|&w| x_weight(w) != 3 || (w.ones | w.twos) >> 10 & 3 != 0)
}

pub fn check_c1(c: &LinearCode) -> Result<bool> {
    check_12_5(c)?;
    Ok(c1_words(&c.packed_codewords()))
}

pub fn check_c2(c: &LinearCode) -> Result<bool> {
    check_12_5(c)?;
    Ok(c2_words(&c.packed_codewords()))
}

pub fn check_c3(c: &LinearCode) -> Result<bool> {
    check_12_5(c)?;
    Ok(c3_words(&c.packed_codewords()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conditions {
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
}

impl Conditions {
    pub fn all(&self) -> bool {
        self.c1 && self.c2 && self.c3
    }
}

pub fn check_conditions(c: &LinearCode) -> Result<Conditions> {
    check_12_5(c)?;
    let words = c.packed_codewords();
    Ok(Conditions {
        c1: c1_words(&words),
        c2: c2_words(&words),
        c3: c3_words(&words),
    })
}

fn puncture_y(c: &LinearCode) -> LinearCode {
    c.puncture(&[10, 11]).expect("coordinates 10 and 11 exist")
}

fn require_conditions(c: &LinearCode) -> Result<()> {
    if !check_conditions(c)?.all() {
        return Err(Error::Usage(format!("code does not satisfy (C1)-(C3):\n{c}")));
    }
    Ok(())
}

/// An SZ-map carrying `c` onto `d`, if one exists.
pub fn sz_witness(c: &LinearCode, d: &LinearCode) -> Result<Option<SZMap>> {
    require_conditions(c)?;
    require_conditions(d)?;
    let (pc, pd) = (puncture_y(c), puncture_y(d));
    let Some(align) = equivalence::equivalence_witness(&pc, &pd)? else {
        return Ok(None);
    };
    let target = d.canonical_generator();
    let group = equivalence::automorphisms(&pc)?;
    for g in group.elements(ENUMERATION_CAP)? {
        let base = g.then(&align);
        for swap in [false, true] {
            for beta in [false, true] {
                let m = SZMap {
                    base: base.clone(),
                    beta,
                    swap,
                };
                if m.apply_code(c)?.canonical_generator() == target {
                    return Ok(Some(m));
                }
            }
        }
    }
    Ok(None)
}

pub fn sz_equivalent(c: &LinearCode, d: &LinearCode) -> Result<bool> {
    Ok(sz_witness(c, d)?.is_some())
}

/// Where the `[10,5]` inputs of an extension run come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Source {
    /// Minimum weight of the punctured code.
    pub d: u8,
    /// 0-based position in the representative list.
    pub index: usize,
}

/// One SZ-class of `[12,5]` codes satisfying (C1)-(C3).
#[derive(Clone, Debug)]
pub struct Survivor {
    pub code: LinearCode,
    pub columns: ExtensionColumns,
    pub source: Source,
    pub min_weight: usize,
    pub punctured_cert: CanonicalCert,
    pub refined_we: RefinedWeightEnumerator,
    /// Number of generated candidates that fell into this class.
    pub class_size: usize,
}

/// Per-input statistics of an extension run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceStats {
    pub d: u8,
    pub inputs: usize,
    pub candidates: usize,
    /// Inputs with at least one extension satisfying (C1) under the pinned
    /// first pair.
    pub c1_inputs: usize,
    /// Inputs with at least one extension satisfying (C1) for any admissible
    /// first pair.
    pub c1_inputs_unpinned: usize,
    /// Inputs with at least one extension satisfying (C1)-(C3).
    pub passing_inputs: usize,
    pub passing_candidates: usize,
    pub survivors: usize,
}

#[derive(Clone, Debug)]
pub struct ExtensionResult {
    pub stats: Vec<SourceStats>,
    pub survivors: Vec<Survivor>,
}

/// A candidate that passed (C1)-(C3).
#[derive(Clone, Debug)]
pub struct Candidate {
    pub code: LinearCode,
    pub columns: ExtensionColumns,
    pub source: Source,
}

/// Extends every code in `reps` (all of minimum weight `d`) and keeps the
/// candidates satisfying (C1)-(C3).
pub fn passing_candidates(d: u8, reps: &[LinearCode]) -> Result<(SourceStats, Vec<Candidate>)> {
    use rayon::prelude::*;
    let per_rep: Vec<(usize, bool, bool, Vec<Candidate>)> = reps
        .par_iter()
        .enumerate()
        .map(|(index, g10)| {
            check_10_5(g10)?;
            if g10.min_weight() != d as usize {
                return Err(Error::Usage(format!(
                    "input {} has minimum weight {}, expected {d}",
                    index + 1,
                    g10.min_weight()
                )));
            }
            let exts = normalized_extensions(g10)?;
            let mut any_c1 = false;
            let mut passing = Vec::new();
            for (columns, code) in exts.iter().cloned() {
                let cond = check_conditions(&code)?;
                any_c1 |= cond.c1;
                if cond.all() {
                    passing.push(Candidate {
                        code,
                        columns,
                        source: Source { d, index },
                    });
                }
            }
            let any_c1_unpinned = any_c1 || admits_c1(g10)?;
            Ok((exts.len(), any_c1, any_c1_unpinned, passing))
        })
        .collect::<Result<_>>()?;
    let mut stats = SourceStats {
        d,
        inputs: reps.len(),
        ..Default::default()
    };
    let mut out = Vec::new();
    for (count, any_c1, any_c1_unpinned, passing) in per_rep {
        stats.candidates += count;
        stats.c1_inputs += any_c1 as usize;
        stats.c1_inputs_unpinned += any_c1_unpinned as usize;
        stats.passing_inputs += !passing.is_empty() as usize;
        stats.passing_candidates += passing.len();
        out.extend(passing);
    }
    Ok((stats, out))
}

/// Whether some `G(a, b)` satisfies (C1), with no pair pinned.
pub fn admits_c1(g10: &LinearCode) -> Result<bool> {
    let rows = g10.packed_generators();
    for cols in extension_columns(g10, None)? {
        let ext: Vec<Packed> = rows
            .iter()
            .zip(cols.pairs())
            .map(|(r, (a, b))| {
                let y = Gf3Vector::new(vec![a, b]).pack().expect("two symbols");
                Packed {
                    ones: r.ones | y.ones << 10,
                    twos: r.twos | y.twos << 10,
                }
            })
            .collect();
        if c1_words(&codewords_from_rows(&ext)) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn generator_key(c: &LinearCode) -> Vec<u8> {
    c.generator().rows().iter().flat_map(|r| r.iter().map(|x| x.value())).collect()
}

/// Groups candidates into SZ-classes. Each class is represented by the
/// candidate with the lexicographically smallest generator matrix.
pub fn sz_classes(candidates: Vec<Candidate>) -> Result<Vec<(Candidate, usize)>> {
    let mut classes: Vec<(Candidate, CanonicalCert, usize)> = Vec::new();
    for cand in candidates {
        let cert = code_cert(&puncture_y(&cand.code));
        let mut found = None;
        for (i, (rep, rep_cert, _)) in classes.iter().enumerate() {
            if *rep_cert == cert && sz_equivalent(&rep.code, &cand.code)? {
                found = Some(i);
                break;
            }
        }
        match found {
            Some(i) => {
                let entry = &mut classes[i];
                entry.2 += 1;
                if generator_key(&cand.code) < generator_key(&entry.0.code) {
                    entry.0 = cand;
                }
            }
            None => classes.push((cand, cert, 1)),
        }
    }
    Ok(classes.into_iter().map(|(c, _, n)| (c, n)).collect())
}

fn survivor(cand: Candidate, class_size: usize) -> Result<Survivor> {
    let refined = refined_we(&cand.code)?;
    Ok(Survivor {
        min_weight: cand.code.min_weight(),
        punctured_cert: code_cert(&puncture_y(&cand.code)),
        refined_we: refined,
        class_size,
        code: cand.code,
        columns: cand.columns,
        source: cand.source,
    })
}

/// Classifies the `[12,5]` codes satisfying (C1)-(C3) that extend the given
/// `[10,5]` representatives. `inputs` pairs each minimum weight with its
/// representatives; every list must be in `(I_5 | A)` form.
pub fn classify_12_5(inputs: &[(u8, Vec<LinearCode>)]) -> Result<ExtensionResult> {
    if inputs.is_empty() {
        return Err(Error::Usage("no [10,5] representatives given".into()));
    }
    let mut stats = Vec::new();
    let mut survivors = Vec::new();
    for (d, reps) in inputs {
        let identity = crate::gf3::Gf3Matrix::identity(5);
        for (i, g) in reps.iter().enumerate() {
            if g.dimension() == 5 && g.generator().select_columns(&[0, 1, 2, 3, 4]) != identity {
                return Err(Error::Usage(format!(
                    "representative {} of minimum weight {d} is not in (I_5 | A) form",
                    i + 1
                )));
            }
        }
        let (mut s, cands) = passing_candidates(*d, reps)?;
        let classes = sz_classes(cands)?;
        s.survivors = classes.len();
        stats.push(s);
        for (cand, n) in classes {
            survivors.push(survivor(cand, n)?);
        }
    }
    survivors.sort_by(|x, y| {
        y.min_weight
            .cmp(&x.min_weight)
            .then(y.source.d.cmp(&x.source.d))
            .then_with(|| generator_key(&x.code).cmp(&generator_key(&y.code)))
    });
    Ok(ExtensionResult { stats, survivors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn fixture_ext(pairs: &[&str]) -> LinearCode {
        extension_code(&fixtures::code_10_5_5(), &ExtensionColumns::from_strs(pairs).unwrap()).unwrap()
    }

    #[test]
    fn pair_table() {
        for w in 0..3u8 {
            for (a, b) in column_pairs(w) {
                assert_eq!((a * b).value(), w);
            }
        }
        assert_eq!(column_pairs(0).len(), 5);
        assert_eq!(column_pairs(1), vec![(Gf3::new(1), Gf3::new(1)), (Gf3::new(2), Gf3::new(2))]);
        assert_eq!(column_pairs(2), vec![(Gf3::new(1), Gf3::new(2)), (Gf3::new(2), Gf3::new(1))]);
    }

    #[test]
    fn fixture_extensions() {
        let g = fixtures::code_10_5_5();
        let exts = extensions(&g, (Gf3::new(1), Gf3::new(2))).unwrap();
        assert_eq!(exts.len(), 16);
        for c in &exts {
            assert!(c.puncture(&[10, 11]).unwrap().same_code(&g));
        }
        assert!(matches!(extensions(&g, (Gf3::new(0), Gf3::new(1))), Err(Error::Usage(_))));
        let passing: Vec<_> = exts.iter().filter(|c| check_c1(c).unwrap()).collect();
        assert_eq!(passing.len(), 1);
    }

    #[test]
    fn fixture_conditions() {
        let good = fixture_ext(&["12", "12", "12", "12", "12"]);
        assert!(check_conditions(&good).unwrap().all());
        let bad = fixture_ext(&["12", "21", "12", "12", "12"]);
        assert!(!check_c1(&bad).unwrap());
        assert!(check_c1(&fixtures::code_10_5_5()).is_err());
    }

    #[test]
    fn c2_and_c3_counterexamples() {
        let c = LinearCode::from_strs(&[
            "000000000011",
            "100000001100",
            "010000001010",
            "001000000110",
            "000100010100",
        ])
        .unwrap();
        assert!(!check_c2(&c).unwrap());
        let c = LinearCode::from_strs(&[
            "100000001101",
            "010000011100",
            "001000101000",
            "000101100000",
            "000011010000",
        ])
        .unwrap();
        assert!(!check_c3(&c).unwrap());
    }

    #[test]
    fn sz_map_shares_sign_on_y() {
        let m = SZMap {
            base: MonomialMap::identity(10),
            beta: true,
            swap: true,
        };
        let x: Gf3Vector = "000000000012".parse().unwrap();
        assert_eq!(m.to_monomial().apply_vec(&x).unwrap().to_string(), "000000000012");
        let x: Gf3Vector = "000000000010".parse().unwrap();
        assert_eq!(m.to_monomial().apply_vec(&x).unwrap().to_string(), "000000000002");
    }

    #[test]
    fn self_sz_equivalence_and_preconditions() {
        let good = fixture_ext(&["12", "12", "12", "12", "12"]);
        let w = sz_witness(&good, &good).unwrap().unwrap();
        assert!(w.apply_code(&good).unwrap().same_code(&good));
        let bad = fixture_ext(&["12", "21", "12", "12", "12"]);
        assert!(matches!(sz_equivalent(&good, &bad), Err(Error::Usage(_))));
    }

    #[test]
    fn fixture_classification() {
        let r = classify_12_5(&[(5, vec![fixtures::code_10_5_5()])]).unwrap();
        assert_eq!(r.survivors.len(), 1);
        assert_eq!(r.survivors[0].min_weight, 6);
        assert_eq!(r.stats[0].c1_inputs, 1);
        assert_eq!(r.stats[0].c1_inputs_unpinned, 1);
        assert!(classify_12_5(&[]).is_err());
    }
}
