//! Exhaustive classification of ternary `[10,5,3]` and `[10,5,4]` codes.
//!
//! Every such code has a generator matrix `(I_5 | A)`. The search builds `A`
//! row by row over length-5 vectors in base-3 index form:
//!
//! * `r1` is fixed (`00011` for d = 3, `00111` for d = 4);
//! * `r2` ranges over `X2`, and `r3 < r4 < r5` over `X1`;
//! * after each row the partial code `<(e_s, r_s)>` must keep minimum
//!   weight `d`. Since `(e1, r1)` already has weight `d`, this amounts to
//!   every new codeword having weight at least `d`.
//!
//! Each emitted code is bucketed by weight enumerator and keyed by its
//! canonical certificate; a class is represented by its lexicographically
//! smallest `A`.

use std::collections::{HashMap, HashSet};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::analysis::{self, DesignReport};
use crate::code::{codewords_from_rows, LinearCode, WeightEnumerator};
use crate::equivalence::{self, CanonicalCert, Canonicalizer};
use crate::error::{Error, Result};
use crate::gf3::short::{self, Tri5};
use crate::gf3::{Gf3Matrix, Gf3Vector, Packed};
use crate::persist;

/// Rows of `A`, as base-3 indices.
pub type RowsA = [Tri5; 5];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    target_d: u8,
}

impl SearchConfig {
    pub fn new(target_d: u8) -> Result<Self> {
        match target_d {
            3 | 4 => Ok(SearchConfig { target_d }),
            5 => Err(Error::Usage(
                "the [10,5,5] code is unique and ships as a built-in fixture".into(),
            )),
            d => Err(Error::Usage(format!("minimum weight must be 3 or 4, got {d}"))),
        }
    }

    pub fn target_d(&self) -> u8 {
        self.target_d
    }

    /// The fixed first row of `A`.
    pub fn r1(&self) -> Tri5 {
        match self.target_d {
            3 => short::from_digits(&[0, 0, 0, 1, 1]),
            _ => short::from_digits(&[0, 0, 1, 1, 1]),
        }
    }

    fn in_x2(&self, x: Tri5) -> bool {
        let d = short::to_digits(x);
        match self.target_d {
            3 => d[0] <= d[1] && d[1] <= d[2] && d[2] <= 1 && d[3] <= d[4],
            _ => d[0] <= d[1] && d[1] <= 1 && d[2] <= d[3] && d[3] <= d[4],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSets {
    /// Candidate rows, ascending.
    pub x1: Vec<Tri5>,
    /// Candidates for the second row; a subset of `x1`, ascending.
    pub x2: Vec<Tri5>,
}

/// Rows `x` with leading entry 1, weight at least `d - 1`, and
/// `<(e1, r1), (e2, x)>` of minimum weight `d`.
pub fn build_x_sets(cfg: &SearchConfig) -> XSets {
    let d = cfg.target_d as usize;
    let r1 = short::to_vector(cfg.r1());
    let e1 = Gf3Vector::unit(5, 0);
    let e2 = Gf3Vector::unit(5, 1);
    let x1: Vec<Tri5> = (0..short::COUNT as u16)
        .map(|i| i as Tri5)
        .filter(|&i| {
            let x = short::to_vector(i);
            if x.leading_index().map(|p| x.get(p).value()) != Some(1) || x.weight() < d - 1 {
                return false;
            }
            let code = LinearCode::from_generators(vec![e1.concat(&r1), e2.concat(&x)])
                .expect("two rows of length 10");
            code.min_weight() == d
        })
        .collect();
    let x2 = x1.iter().copied().filter(|&x| cfg.in_x2(x)).collect();
    XSets { x1, x2 }
}

/// Products `m A` for all messages over a prefix of rows, with message weights.
#[derive(Clone)]
struct Prefix {
    products: Vec<Tri5>,
    msg_weight: Vec<u8>,
}

impl Prefix {
    fn new(r1: Tri5) -> Prefix {
        Prefix { products: vec![0], msg_weight: vec![0] }.push(r1)
    }

    fn push(&self, r: Tri5) -> Prefix {
        let t = short::tables();
        let r2 = t.neg(r);
        let len = self.products.len();
        let mut products = Vec::with_capacity(3 * len);
        let mut msg_weight = Vec::with_capacity(3 * len);
        for (lambda, add) in [(0u8, 0), (1, r), (2, r2)] {
            for i in 0..len {
                products.push(t.add(self.products[i], add));
                msg_weight.push(self.msg_weight[i] + (lambda != 0) as u8);
            }
        }
        Prefix { products, msg_weight }
    }

    /// `forbidden[x]` is set when appending `x` as the next row creates a
    /// codeword of weight below `d`, i.e. `wt(m) + 1 + wt(mA + x) < d` for
    /// some message `m` (the coefficient of the new row can be taken as 1).
    fn forbidden(&self, d: u8, balls: &[Vec<Tri5>]) -> [bool; short::COUNT] {
        let t = short::tables();
        let mut out = [false; short::COUNT];
        for (&p, &w) in self.products.iter().zip(&self.msg_weight) {
            if w + 2 > d {
                continue;
            }
            let radius = (d - 2 - w) as usize;
            let centre = t.neg(p);
            for &e in &balls[radius] {
                out[t.add(centre, e) as usize] = true;
            }
        }
        out
    }
}

/// `balls[r]` lists the length-5 vectors of weight at most `r`.
fn balls() -> Vec<Vec<Tri5>> {
    let t = short::tables();
    (0..=5u8)
        .map(|r| (0..short::COUNT as u16).map(|i| i as Tri5).filter(|&i| t.weight(i) <= r).collect())
        .collect()
}

/// The search tree below one choice of `r2`.
pub struct Branch {
    cfg: SearchConfig,
    r2: Tri5,
    x1: Vec<Tri5>,
}

impl Branch {
    pub fn r2(&self) -> Tri5 {
        self.r2
    }

    /// Visits every admissible `A` in this branch in lexicographic order.
    pub fn for_each(&self, mut f: impl FnMut(&RowsA)) {
        let d = self.cfg.target_d;
        let balls = balls();
        let p2 = Prefix::new(self.cfg.r1()).push(self.r2);
        let bad2 = p2.forbidden(d, &balls);
        let cand3: Vec<Tri5> = self.x1.iter().copied().filter(|&x| !bad2[x as usize]).collect();
        for (i3, &r3) in cand3.iter().enumerate() {
            let p3 = p2.push(r3);
            let bad3 = p3.forbidden(d, &balls);
            let cand4: Vec<Tri5> =
                cand3[i3 + 1..].iter().copied().filter(|&x| !bad3[x as usize]).collect();
            for (i4, &r4) in cand4.iter().enumerate() {
                let p4 = p3.push(r4);
                let bad4 = p4.forbidden(d, &balls);
                for &r5 in &cand4[i4 + 1..] {
                    if !bad4[r5 as usize] {
                        f(&[self.cfg.r1(), self.r2, r3, r4, r5]);
                    }
                }
            }
        }
    }

    pub fn count(&self) -> u64 {
        let mut n = 0;
        self.for_each(|_| n += 1);
        n
    }
}

/// One branch per element of `X2`, in ascending order.
pub fn branches(cfg: &SearchConfig) -> Vec<Branch> {
    let x = build_x_sets(cfg);
    x.x2.iter()
        .map(|&r2| Branch {
            cfg: *cfg,
            r2,
            x1: x.x1.clone(),
        })
        .collect()
}

pub fn rows_to_matrix(a: &RowsA) -> Gf3Matrix {
    Gf3Matrix::from_rows(a.iter().map(|&r| short::to_vector(r)).collect(), 5).expect("5x5")
}

pub fn matrix_to_rows(m: &Gf3Matrix) -> Option<RowsA> {
    if m.row_count() != 5 {
        return None;
    }
    let mut a = [0; 5];
    for (i, r) in m.rows().iter().enumerate() {
        a[i] = short::from_vector(r)?;
    }
    Some(a)
}

/// The code with generator matrix `(I_5 | A)`.
pub fn code_of(a: &RowsA) -> LinearCode {
    LinearCode::systematic(&rows_to_matrix(a)).expect("systematic form has full rank")
}

/// Generator rows of `(I_5 | A)` in packed form.
pub fn packed_generator(a: &RowsA) -> [Packed; 5] {
    let t = short::tables();
    let mut rows = [Packed::ZERO; 5];
    for (i, &r) in a.iter().enumerate() {
        let p = t.packed(r);
        rows[i] = Packed {
            ones: 1 << i | p.ones << 5,
            twos: p.twos << 5,
        };
    }
    rows
}

/// Streams every admissible `A`, branch by branch.
pub fn enumerate_matrices(cfg: &SearchConfig) -> impl Iterator<Item = Gf3Matrix> {
    branches(cfg).into_iter().flat_map(|b| {
        let mut all = Vec::new();
        b.for_each(|a| all.push(rows_to_matrix(a)));
        all
    })
}

/// One equivalence class found by the search.
#[derive(Clone, Debug)]
pub struct ClassEntry {
    /// Lexicographically smallest `A` seen in the class.
    pub a: RowsA,
    pub count: u64,
    pub we: WeightEnumerator,
}

/// Classes keyed by canonical certificate.
#[derive(Clone, Debug, Default)]
pub struct ClassStore {
    pub matrix_count: u64,
    pub classes: HashMap<CanonicalCert, ClassEntry>,
}

impl ClassStore {
    pub fn insert(&mut self, cert: CanonicalCert, a: RowsA, we: WeightEnumerator, count: u64) {
        self.matrix_count += count;
        self.classes
            .entry(cert)
            .and_modify(|e| {
                e.count += count;
                if a < e.a {
                    e.a = a;
                }
            })
            .or_insert(ClassEntry { a, count, we });
    }

    pub fn merge(&mut self, other: ClassStore) {
        for (cert, e) in other.classes {
            self.insert(cert, e.a, e.we, e.count);
        }
    }

    pub fn we_class_count(&self) -> usize {
        self.classes.values().map(|e| &e.we).collect::<HashSet<_>>().len()
    }
}

/// Classifies every code of one branch.
pub fn classify_branch(branch: &Branch) -> ClassStore {
    let mut canon = Canonicalizer::new();
    let mut store = ClassStore::default();
    branch.for_each(|a| {
        let words = codewords_from_rows(&packed_generator(a));
        let we = WeightEnumerator::from_weights(10, words.iter().map(|w| w.weight()));
        let cert = canon.canonical_form_of_words(10, &words).cert;
        store.insert(cert, *a, we, 1);
    });
    store
}

/// A class representative with its invariants.
#[derive(Clone, Debug)]
pub struct ClassRecord {
    pub code: LinearCode,
    pub a: Option<RowsA>,
    pub cert: CanonicalCert,
    pub matrix_count: u64,
    pub hamming_we: WeightEnumerator,
    pub min_weight: usize,
    pub aut_order: u64,
    pub formally_self_dual: bool,
    pub design: DesignReport,
}

impl ClassRecord {
    pub fn new(code: LinearCode, cert: CanonicalCert, matrix_count: u64) -> Result<Self> {
        let aut_order = equivalence::automorphisms(&code)?.order();
        Ok(ClassRecord {
            a: (code.len() == 10 && code.dimension() == 5)
                .then(|| matrix_to_rows(&code.generator().select_columns(&[5, 6, 7, 8, 9])))
                .flatten(),
            hamming_we: code.hamming_we(),
            min_weight: code.min_weight(),
            formally_self_dual: code.is_formally_self_dual(),
            design: analysis::design_strength(&code),
            aut_order,
            code,
            cert,
            matrix_count,
        })
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub target_d: Option<u8>,
    pub matrix_count: u64,
    pub we_class_count: usize,
    pub class_count: usize,
    /// Ordered by representative generator matrix.
    pub representatives: Vec<ClassRecord>,
}

impl ClassificationResult {
    fn from_records(target_d: Option<u8>, matrix_count: u64, mut reps: Vec<ClassRecord>) -> Self {
        reps.sort_by(|x, y| generator_key(&x.code).cmp(&generator_key(&y.code)));
        let we_class_count = reps.iter().map(|r| &r.hamming_we).collect::<HashSet<_>>().len();
        ClassificationResult {
            target_d,
            matrix_count,
            we_class_count,
            class_count: reps.len(),
            representatives: reps,
        }
    }

    pub fn codes(&self) -> Vec<LinearCode> {
        self.representatives.iter().map(|r| r.code.clone()).collect()
    }
}

fn generator_key(c: &LinearCode) -> Vec<u8> {
    c.generator().rows().iter().flat_map(|r| r.iter().map(|x| x.value())).collect()
}

/// Classifies arbitrary codes of equal parameters; the representative of a
/// class is the member with the lexicographically smallest generator matrix.
pub fn classify(codes: impl IntoIterator<Item = LinearCode>) -> Result<ClassificationResult> {
    let mut canon = Canonicalizer::new();
    let mut classes: HashMap<CanonicalCert, (LinearCode, u64)> = HashMap::new();
    let mut params = None;
    let mut total = 0;
    for c in codes {
        let p = (c.len(), c.dimension());
        if *params.get_or_insert(p) != p {
            return Err(Error::Usage(format!(
                "mixed code parameters {:?} and {:?}",
                params.unwrap(),
                p
            )));
        }
        total += 1;
        let cert = canon.canonical_form_of_words(c.len(), &c.packed_codewords()).cert;
        match classes.get_mut(&cert) {
            Some((rep, count)) => {
                *count += 1;
                if generator_key(&c) < generator_key(rep) {
                    *rep = c;
                }
            }
            None => {
                classes.insert(cert, (c, 1));
            }
        }
    }
    let reps = classes
        .into_iter()
        .map(|(cert, (code, count))| ClassRecord::new(code, cert, count))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassificationResult::from_records(None, total, reps))
}

#[derive(Clone, Debug, Default)]
pub struct PipelineOptions {
    /// Worker threads; `None` uses the available parallelism.
    pub threads: Option<usize>,
    /// Directory for per-branch checkpoints; completed branches found there
    /// are loaded instead of recomputed.
    pub checkpoint_dir: Option<PathBuf>,
    pub progress: bool,
}

/// Search, classify and annotate all codes for `cfg`.
pub fn run_pipeline(cfg: &SearchConfig, opts: &PipelineOptions) -> Result<ClassificationResult> {
    let branches = branches(cfg);
    if let Some(dir) = &opts.checkpoint_dir {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::Usage(format!("thread pool: {e}")))?;
    let total = branches.len();
    let stores: Vec<ClassStore> = pool.install(|| {
        branches
            .par_iter()
            .enumerate()
            .map(|(idx, branch)| run_branch(cfg, idx, total, branch, opts))
            .collect::<Result<Vec<_>>>()
    })?;
    let mut merged = ClassStore::default();
    for s in stores {
        merged.merge(s);
    }
    let matrix_count = merged.matrix_count;
    let mut entries: Vec<(CanonicalCert, ClassEntry)> = merged.classes.into_iter().collect();
    entries.sort_by(|x, y| x.1.a.cmp(&y.1.a));
    let reps = pool.install(|| {
        entries
            .into_par_iter()
            .map(|(cert, e)| ClassRecord::new(code_of(&e.a), cert, e.count))
            .collect::<Result<Vec<_>>>()
    })?;
    let mut result = ClassificationResult::from_records(Some(cfg.target_d), matrix_count, reps);
    result.we_class_count = result
        .representatives
        .iter()
        .map(|r| &r.hamming_we)
        .collect::<HashSet<_>>()
        .len();
    Ok(result)
}

fn run_branch(
    cfg: &SearchConfig,
    idx: usize,
    total: usize,
    branch: &Branch,
    opts: &PipelineOptions,
) -> Result<ClassStore> {
    let path = opts
        .checkpoint_dir
        .as_deref()
        .map(|d| checkpoint_path(d, cfg, idx));
    if let Some(p) = &path {
        if p.exists() {
            let store = persist::read_checkpoint(p, cfg.target_d, branch.r2())?;
            if opts.progress {
                eprintln!("branch {}/{total}: resumed from {}", idx + 1, p.display());
            }
            return Ok(store);
        }
    }
    let started = std::time::Instant::now();
    let store = classify_branch(branch);
    if opts.progress {
        eprintln!(
            "branch {}/{total} (r2 = {}): {} matrices, {} classes, {:.1?}",
            idx + 1,
            short::to_vector(branch.r2()),
            store.matrix_count,
            store.classes.len(),
            started.elapsed()
        );
    }
    if let Some(p) = &path {
        persist::write_checkpoint(p, cfg.target_d, branch.r2(), &store)?;
    }
    Ok(store)
}

pub fn checkpoint_path(dir: &Path, cfg: &SearchConfig, idx: usize) -> PathBuf {
    dir.join(format!("branch-10-5-{}-{:02}.json", cfg.target_d, idx))
}
