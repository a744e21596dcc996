//! On-disk artifacts: branch checkpoints, representative archives and JSON
//! summaries.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::analysis::PropertyTally;
use crate::classify10::{ClassEntry, ClassStore, ClassificationResult};
use crate::extend12::{ExtensionResult, SourceStats};
use crate::code::WeightEnumerator;
use crate::equivalence::CanonicalCert;
use crate::error::{Error, Result};
use crate::format::{format_codes, write_atomic};
use crate::gf3::short;

#[derive(Serialize, Deserialize)]
struct Checkpoint {
    target_d: u8,
    r2: String,
    matrix_count: u64,
    classes: Vec<CheckpointClass>,
}

#[derive(Serialize, Deserialize)]
struct CheckpointClass {
    cert: String,
    a: Vec<String>,
    count: u64,
    we: WeightEnumerator,
}

fn row_string(r: short::Tri5) -> String {
    short::to_vector(r).to_string()
}

fn parse_row(s: &str, path: &Path) -> Result<short::Tri5> {
    s.parse()
        .ok()
        .and_then(|v| short::from_vector(&v))
        .ok_or_else(|| corrupt(path, format!("bad row {s:?}")))
}

fn corrupt(path: &Path, msg: String) -> Error {
    Error::Parse {
        file: path.to_path_buf(),
        line: 0,
        msg,
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    write_atomic(path, to_json(value).as_bytes())
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    serde_json::from_str(&text).map_err(|source| Error::Json {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_checkpoint(path: &Path, target_d: u8, r2: short::Tri5, store: &ClassStore) -> Result<()> {
    let mut classes: Vec<CheckpointClass> = store
        .classes
        .iter()
        .map(|(cert, e)| CheckpointClass {
            cert: cert.to_hex(),
            a: e.a.iter().map(|&r| row_string(r)).collect(),
            count: e.count,
            we: e.we.clone(),
        })
        .collect();
    classes.sort_by(|x, y| x.cert.cmp(&y.cert));
    write_json(
        path,
        &Checkpoint {
            target_d,
            r2: row_string(r2),
            matrix_count: store.matrix_count,
            classes,
        },
    )
}

/// Loads a branch checkpoint, refusing one written for another branch.
pub fn read_checkpoint(path: &Path, target_d: u8, r2: short::Tri5) -> Result<ClassStore> {
    let cp: Checkpoint = read_json(path)?;
    if cp.target_d != target_d || cp.r2 != row_string(r2) {
        return Err(corrupt(
            path,
            format!(
                "checkpoint is for d={} r2={}, expected d={target_d} r2={}",
                cp.target_d,
                cp.r2,
                row_string(r2)
            ),
        ));
    }
    let mut store = ClassStore::default();
    for c in cp.classes {
        if c.a.len() != 5 {
            return Err(corrupt(path, "matrix must have 5 rows".into()));
        }
        let mut a = [0; 5];
        for (slot, s) in a.iter_mut().zip(&c.a) {
            *slot = parse_row(s, path)?;
        }
        store.classes.insert(
            CanonicalCert::from_hex(&c.cert)?,
            ClassEntry {
                a,
                count: c.count,
                we: c.we,
            },
        );
    }
    store.matrix_count = cp.matrix_count;
    if store.classes.values().map(|e| e.count).sum::<u64>() != store.matrix_count {
        return Err(corrupt(path, "class counts do not add up".into()));
    }
    Ok(store)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ClassSummary {
    pub index: usize,
    pub a: Vec<String>,
    pub certificate: String,
    pub matrix_count: u64,
    pub hamming_we: WeightEnumerator,
    pub min_weight: usize,
    pub aut_order: u64,
    pub formally_self_dual: bool,
    pub design_max_t: usize,
    pub design_lambdas: Vec<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Summary10 {
    pub target_d: Option<u8>,
    pub matrix_count: u64,
    pub we_class_count: usize,
    pub class_count: usize,
    pub formally_self_dual: usize,
    /// `designs_at_least[t]`: classes whose minimum-weight supports form a `t`-design.
    pub designs_at_least: Vec<usize>,
    pub classes: Vec<ClassSummary>,
}

impl Summary10 {
    pub fn from_result(r: &ClassificationResult) -> Self {
        let tally = crate::analysis::tally_from(
            r.representatives
                .iter()
                .map(|c| (c.formally_self_dual, c.design.max_t)),
        );
        let classes = r
            .representatives
            .iter()
            .enumerate()
            .map(|(i, c)| ClassSummary {
                index: i + 1,
                a: c
                    .a
                    .map(|a| a.iter().map(|&x| row_string(x)).collect())
                    .unwrap_or_default(),
                certificate: c.cert.to_hex(),
                matrix_count: c.matrix_count,
                hamming_we: c.hamming_we.clone(),
                min_weight: c.min_weight,
                aut_order: c.aut_order,
                formally_self_dual: c.formally_self_dual,
                design_max_t: c.design.max_t,
                design_lambdas: c.design.lambdas.clone(),
            })
            .collect();
        Summary10 {
            target_d: r.target_d,
            matrix_count: r.matrix_count,
            we_class_count: r.we_class_count,
            class_count: r.class_count,
            formally_self_dual: tally.formally_self_dual,
            designs_at_least: tally.designs_at_least,
            classes,
        }
    }

    pub fn tally(&self) -> PropertyTally {
        PropertyTally {
            codes: self.class_count,
            formally_self_dual: self.formally_self_dual,
            designs_at_least: self.designs_at_least.clone(),
        }
    }
}

pub fn reps_path(dir: &Path, d: u8) -> PathBuf {
    dir.join(format!("reps-10-5-{d}.codes"))
}

pub fn summary_path(dir: &Path, d: u8) -> PathBuf {
    dir.join(format!("summary-10-5-{d}.json"))
}

/// Writes `reps-10-5-{d}.codes` and `summary-10-5-{d}.json`; returns their paths.
pub fn write_classification(dir: &Path, r: &ClassificationResult) -> Result<Vec<PathBuf>> {
    let d = r
        .target_d
        .ok_or_else(|| Error::Usage("classification has no target minimum weight".into()))?;
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let reps = reps_path(dir, d);
    let header = vec![
        format!("ternary [10,5,{d}] codes up to monomial equivalence"),
        format!("{} classes from {} matrices", r.class_count, r.matrix_count),
    ];
    write_atomic(&reps, format_codes(&r.codes(), &header).as_bytes())?;
    let summary = summary_path(dir, d);
    write_json(&summary, &Summary10::from_result(r))?;
    Ok(vec![reps, summary])
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SurvivorSummary {
    pub index: usize,
    pub generator: Vec<String>,
    pub columns: String,
    pub min_weight: usize,
    pub punctured_min_weight: u8,
    pub punctured_index: usize,
    pub punctured_certificate: String,
    pub refined_we: String,
    pub sz_class_size: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Summary12 {
    pub survivor_count: usize,
    pub sources: Vec<SourceStats>,
    pub survivors: Vec<SurvivorSummary>,
}

impl Summary12 {
    pub fn from_result(r: &ExtensionResult) -> Self {
        let survivors = r
            .survivors
            .iter()
            .enumerate()
            .map(|(i, s)| SurvivorSummary {
                index: i + 1,
                generator: s.code.generator().rows().iter().map(|r| r.to_string()).collect(),
                columns: s.columns.to_string(),
                min_weight: s.min_weight,
                punctured_min_weight: s.source.d,
                punctured_index: s.source.index + 1,
                punctured_certificate: s.punctured_cert.to_hex(),
                refined_we: s.refined_we.to_string(),
                sz_class_size: s.class_size,
            })
            .collect();
        Summary12 {
            survivor_count: r.survivors.len(),
            sources: r.stats.clone(),
            survivors,
        }
    }
}

pub fn survivors_path(dir: &Path) -> PathBuf {
    dir.join("survivors-12-5.codes")
}

pub fn summary12_path(dir: &Path) -> PathBuf {
    dir.join("summary-12-5.json")
}

/// Writes `survivors-12-5.codes` and `summary-12-5.json`; returns their paths.
pub fn write_extension(dir: &Path, r: &ExtensionResult) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let codes = survivors_path(dir);
    let header = vec![
        "ternary [12,5] codes satisfying (C1)-(C3), one per SZ-class".to_string(),
        format!("{} codes", r.survivors.len()),
    ];
    let list: Vec<_> = r.survivors.iter().map(|s| s.code.clone()).collect();
    write_atomic(&codes, format_codes(&list, &header).as_bytes())?;
    let summary = summary12_path(dir);
    write_json(&summary, &Summary12::from_result(r))?;
    Ok(vec![codes, summary])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify10::{branches, classify_branch, SearchConfig};

    #[test]
    fn checkpoint_round_trip() {
        let cfg = SearchConfig::new(4).unwrap();
        let b = branches(&cfg).pop().unwrap();
        let store = classify_branch(&b);
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("cp.json");
        write_checkpoint(&p, 4, b.r2(), &store).unwrap();
        let back = read_checkpoint(&p, 4, b.r2()).unwrap();
        assert_eq!(back.matrix_count, store.matrix_count);
        assert_eq!(back.classes.len(), store.classes.len());
        for (cert, e) in &store.classes {
            let f = &back.classes[cert];
            assert_eq!((f.a, f.count, &f.we), (e.a, e.count, &e.we));
        }
        assert!(read_checkpoint(&p, 3, b.r2()).is_err());
        assert!(read_checkpoint(&p, 4, b.r2().wrapping_add(1)).is_err());
    }
}
