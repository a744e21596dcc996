use std::path::Path;
use std::process::ExitCode;

use serde::Serialize;
use tcc_core::classify10::{run_pipeline, PipelineOptions, SearchConfig};
use tcc_core::extend12::{self, classify_12_5};
use tcc_core::persist::{self, Summary10};
use tcc_core::{analysis, equivalence, fixtures, format, Error, LinearCode, Result};

use crate::manifest::RunManifest;

pub fn thread_pool(threads: Option<usize>) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::Usage(format!("cannot start worker threads: {e}")))
}

fn create_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|source| Error::Io {
        path: dir.to_path_buf(),
        source,
    })
}

pub fn classify10(
    argv: &[String],
    d: u8,
    out: &Path,
    threads: Option<usize>,
    resume: bool,
    quiet: bool,
) -> Result<ExitCode> {
    let cfg = SearchConfig::new(d)?;
    let mut manifest = RunManifest::start(argv);
    manifest.config("min_weight", d);
    manifest.config("threads", threads);
    manifest.config("resume", resume);
    create_dir(out)?;
    let checkpoints = out.join(format!("checkpoints-10-5-{d}"));
    if !resume && checkpoints.exists() {
        std::fs::remove_dir_all(&checkpoints).map_err(|source| Error::Io {
            path: checkpoints.clone(),
            source,
        })?;
    }
    let result = run_pipeline(
        &cfg,
        &PipelineOptions {
            threads,
            checkpoint_dir: Some(checkpoints),
            progress: !quiet,
        },
    )?;
    let outputs = persist::write_classification(out, &result)?;
    let summary = Summary10::from_result(&result);
    manifest.count("matrices", result.matrix_count);
    manifest.count("weight_enumerator_classes", result.we_class_count as u64);
    manifest.count("equivalence_classes", result.class_count as u64);
    manifest.count("formally_self_dual", summary.formally_self_dual as u64);
    manifest.finish(&out.join(format!("manifest-classify10-{d}.json")), &outputs)?;
    println!("[10,5,{d}] codes");
    println!("  matrices A:                 {}", result.matrix_count);
    println!("  weight enumerator classes:  {}", result.we_class_count);
    println!("  equivalence classes:        {}", result.class_count);
    println!("  formally self-dual:         {}", summary.formally_self_dual);
    for (t, n) in summary.designs_at_least.iter().enumerate().skip(1) {
        println!("  {t}-designs:                  {n}");
    }
    for p in &outputs {
        println!("wrote {}", p.display());
    }
    Ok(ExitCode::SUCCESS)
}

/// Loads `reps-10-5-{d}.codes`, cross-checked against its summary.
pub fn load_reps(dir: &Path, d: u8) -> Result<Vec<LinearCode>> {
    let codes_path = persist::reps_path(dir, d);
    let summary_path = persist::summary_path(dir, d);
    for p in [&codes_path, &summary_path] {
        if !p.exists() {
            return Err(Error::Usage(format!("missing input {}", p.display())));
        }
    }
    let codes = format::read_codes(&codes_path)?;
    let summary: Summary10 = persist::read_json(&summary_path)?;
    if summary.class_count != codes.len() {
        return Err(Error::Usage(format!(
            "{} lists {} codes but {} reports {}",
            codes_path.display(),
            codes.len(),
            summary_path.display(),
            summary.class_count
        )));
    }
    Ok(codes)
}

pub fn extend(argv: &[String], reps: Option<&Path>, out: &Path, threads: Option<usize>) -> Result<ExitCode> {
    let mut manifest = RunManifest::start(argv);
    manifest.config("reps", reps.map(|p| p.display().to_string()));
    manifest.config("threads", threads);
    let mut inputs = vec![(5u8, vec![fixtures::code_10_5_5()])];
    if let Some(dir) = reps {
        for d in [4u8, 3] {
            inputs.push((d, load_reps(dir, d)?));
        }
    }
    let result = thread_pool(threads)?.install(|| classify_12_5(&inputs))?;
    create_dir(out)?;
    let outputs = persist::write_extension(out, &result)?;
    manifest.count("survivors", result.survivors.len() as u64);
    for s in &result.stats {
        manifest.count(&format!("d{}_inputs", s.d), s.inputs as u64);
        manifest.count(&format!("d{}_c1_inputs", s.d), s.c1_inputs as u64);
        manifest.count(&format!("d{}_passing_inputs", s.d), s.passing_inputs as u64);
        manifest.count(&format!("d{}_survivors", s.d), s.survivors as u64);
    }
    manifest.finish(&out.join("manifest-extend.json"), &outputs)?;
    println!("source  inputs  candidates  C1(pinned)  C1(any)  C1-C3  SZ-classes");
    for s in &result.stats {
        println!(
            "d={:<4}  {:>6}  {:>10}  {:>10}  {:>7}  {:>5}  {:>10}",
            s.d, s.inputs, s.candidates, s.c1_inputs, s.c1_inputs_unpinned, s.passing_inputs, s.survivors
        );
    }
    for (i, s) in result.survivors.iter().enumerate() {
        println!("code {} (d = {}, punctured d = {}): {}", i + 1, s.min_weight, s.source.d, s.refined_we);
    }
    for p in &outputs {
        println!("wrote {}", p.display());
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct CodeReport {
    index: usize,
    n: usize,
    k: usize,
    d: usize,
    hamming_we: String,
    formally_self_dual: bool,
    aut_order: u64,
    design_max_t: usize,
    design_lambdas: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    refined_we: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    conditions: Option<extend12::Conditions>,
}

pub fn analyze(path: &Path, json: bool) -> Result<ExitCode> {
    let codes = format::read_codes(path)?;
    let mut reports = Vec::new();
    for (i, c) in codes.iter().enumerate() {
        let design = analysis::design_strength(c);
        let twelve = c.len() == 12 && c.dimension() == 5;
        reports.push(CodeReport {
            index: i + 1,
            n: c.len(),
            k: c.dimension(),
            d: c.min_weight(),
            hamming_we: c.hamming_we().to_string(),
            formally_self_dual: c.is_formally_self_dual(),
            aut_order: equivalence::automorphisms(c)?.order(),
            design_max_t: design.max_t,
            design_lambdas: design.lambdas,
            refined_we: twelve.then(|| analysis::refined_we(c).map(|w| w.to_string())).transpose()?,
            conditions: twelve.then(|| extend12::check_conditions(c)).transpose()?,
        });
    }
    if json {
        print!("{}", persist::to_json(&reports));
        return Ok(ExitCode::SUCCESS);
    }
    for r in &reports {
        println!("code {}: [{},{},{}]", r.index, r.n, r.k, r.d);
        println!("  weight enumerator: {}", r.hamming_we);
        println!("  formally self-dual: {}", r.formally_self_dual);
        println!("  automorphism group order: {}", r.aut_order);
        println!("  minimum-weight supports: {}-design, lambdas {:?}", r.design_max_t, r.design_lambdas);
        if let (Some(w), Some(c)) = (&r.refined_we, &r.conditions) {
            println!("  refined enumerator: {w}");
            println!("  (C1) {}  (C2) {}  (C3) {}", c.c1, c.c2, c.c3);
        }
    }
    Ok(ExitCode::SUCCESS)
}
