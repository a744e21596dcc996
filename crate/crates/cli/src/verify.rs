use std::collections::HashSet;
use std::path::Path;
use std::process::ExitCode;

use tcc_core::analysis::{self, PropertyTally};
use tcc_core::classify10::{branches, build_x_sets, run_pipeline, PipelineOptions, SearchConfig};
use tcc_core::extend12::classify_12_5;
use tcc_core::{equivalence, fixtures, format, persist, Error, LinearCode, Result};

use crate::commands::thread_pool;

struct Table {
    rows: Vec<(String, String, String)>,
    failed: Vec<String>,
}

impl Table {
    fn check(&mut self, name: &str, expected: impl ToString, computed: impl ToString) {
        let (e, c) = (expected.to_string(), computed.to_string());
        if e != c {
            self.failed.push(name.to_string());
        }
        self.rows.push((name.to_string(), e, c));
    }

    fn print(&self) {
        let w = self.rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
        println!("{:w$}  {:>12}  {:>12}  status", "check", "expected", "computed");
        for (name, e, c) in &self.rows {
            let status = if e == c { "ok" } else { "MISMATCH" };
            println!("{name:w$}  {e:>12}  {c:>12}  {status}");
        }
    }
}

/// Classes of one minimum weight, either recomputed or read from an archive.
struct Classes {
    matrices: u64,
    we_classes: usize,
    classes: usize,
    codes: Vec<LinearCode>,
    tally: PropertyTally,
}

fn compute(d: u8, threads: Option<usize>) -> Result<Classes> {
    let cfg = SearchConfig::new(d)?;
    let r = run_pipeline(
        &cfg,
        &PipelineOptions {
            threads,
            checkpoint_dir: None,
            progress: false,
        },
    )?;
    let tally = persist::Summary10::from_result(&r).tally();
    Ok(Classes {
        matrices: r.matrix_count,
        we_classes: r.we_class_count,
        classes: r.class_count,
        codes: r.codes(),
        tally,
    })
}

/// Recounts everything an archive claims: classes are the distinct
/// certificates among its codes, and the matrix count is re-enumerated.
fn from_archive(dir: &Path, d: u8, threads: Option<usize>) -> Result<Classes> {
    let cfg = SearchConfig::new(d)?;
    let codes = format::read_codes(&persist::reps_path(dir, d))?;
    for (i, c) in codes.iter().enumerate() {
        if (c.len(), c.dimension(), c.min_weight()) != (10, 5, d as usize) {
            return Err(Error::Usage(format!("code {} in the d = {d} archive is not a [10,5,{d}] code", i + 1)));
        }
    }
    let pool = thread_pool(threads)?;
    let (certs, tally) = pool.install(|| {
        use rayon::prelude::*;
        let certs: HashSet<_> = codes.par_iter().map(equivalence::code_cert).collect();
        (certs, analysis::tally_properties(&codes))
    });
    Ok(Classes {
        matrices: branches(&cfg).iter().map(|b| b.count()).sum(),
        we_classes: codes.iter().map(|c| c.hamming_we()).collect::<HashSet<_>>().len(),
        classes: certs.len(),
        codes,
        tally,
    })
}

fn load(dir: Option<&Path>, d: u8, threads: Option<usize>) -> Result<Classes> {
    match dir {
        Some(dir) => from_archive(dir, d, threads),
        None => compute(d, threads),
    }
}

fn check_classes(t: &mut Table, d: u8, c: &Classes, expected: (u64, usize, usize, usize)) {
    t.check(&format!("[10,5,{d}] matrices A"), expected.0, c.matrices);
    t.check(&format!("[10,5,{d}] weight enumerator classes"), expected.1, c.we_classes);
    t.check(&format!("[10,5,{d}] equivalence classes"), expected.2, c.classes);
    t.check(&format!("[10,5,{d}] archive size"), expected.2, c.codes.len());
    t.check(&format!("[10,5,{d}] formally self-dual"), expected.3, c.tally.formally_self_dual);
}

fn x_sizes(d: u8) -> Result<String> {
    let x = build_x_sets(&SearchConfig::new(d)?);
    Ok(format!("({},{})", x.x1.len(), x.x2.len()))
}

fn checks(t: &mut Table, full: bool, reps: Option<&Path>, threads: Option<usize>) -> Result<()> {
    t.check("X-sets d=4", "(88,14)", x_sizes(4)?);
    let d4 = load(reps, 4, threads)?;
    check_classes(t, 4, &d4, (650_051, 64, 135, 38));
    t.check("[10,5,4] classes with t>=1 designs", 5, d4.tally.designs_with_t_at_least(1));
    t.check("[10,5,4] classes with t>=2 designs", 1, d4.tally.designs_with_t_at_least(2));
    let fixture = analysis::design_strength(&fixtures::code_10_5_5());
    t.check("[10,5,5] supports form a 3-design", true, fixture.max_t >= 3);

    let expected = fixtures::refined_enumerators();
    let mut inputs = vec![(5u8, vec![fixtures::code_10_5_5()]), (4, d4.codes.clone())];
    let d3 = if full {
        t.check("X-sets d=3", "(115,18)", x_sizes(3)?);
        let d3 = load(reps, 3, threads)?;
        check_classes(t, 3, &d3, (4_328_352, 527, 1303, 242));
        inputs.push((3, d3.codes.clone()));
        Some(d3)
    } else {
        None
    };
    let ext = thread_pool(threads)?.install(|| classify_12_5(&inputs))?;
    let stat = |d: u8| ext.stats.iter().find(|s| s.d == d).cloned().unwrap_or_default();
    let from = |d: u8| ext.survivors.iter().filter(|s| s.source.d == d).collect::<Vec<_>>();
    t.check("[10,5,5] extensions satisfying (C1)", 1, stat(5).passing_candidates);
    t.check(
        "[10,5,5] extension enumerator is W1",
        true,
        from(5).len() == 1 && from(5)[0].refined_we == expected[0],
    );
    t.check("[10,5,4] classes admitting (C1)", 2, stat(4).c1_inputs);
    t.check("[12,5] SZ-classes from [10,5,4]", 2, stat(4).survivors);
    if d3.is_some() {
        t.check("[10,5,3] classes admitting (C1), (a1,b1)=(0,1)", 19, stat(3).c1_inputs);
        t.check("[10,5,3] classes admitting (C1), any (a1,b1)", 19, stat(3).c1_inputs_unpinned);
        t.check("[10,5,3] classes admitting (C1) and (C3)", 4, stat(3).passing_inputs);
        t.check("[12,5] SZ-classes from [10,5,3]", 4, stat(3).survivors);
        t.check("[12,5] SZ-classes in total", 7, ext.survivors.len());
        let d6 = ext.survivors.iter().filter(|s| s.min_weight == 6).count();
        let d4 = ext.survivors.iter().filter(|s| s.min_weight == 4).count();
        t.check("[12,5] minimum weights 6/4", "3/4", format!("{d6}/{d4}"));
        let mut got: Vec<_> = ext.survivors.iter().map(|s| s.refined_we.clone()).collect();
        let mut want = expected.clone();
        got.sort();
        want.sort();
        t.check("[12,5] refined enumerators are W1..W7", true, got == want);
    }
    Ok(())
}

pub fn run(full: bool, reps: Option<&Path>, threads: Option<usize>) -> Result<ExitCode> {
    let mut table = Table {
        rows: Vec::new(),
        failed: Vec::new(),
    };
    let outcome = checks(&mut table, full, reps, threads);
    table.print();
    if let Err(e) = outcome {
        // an unreadable or malformed archive is a verification failure
        if reps.is_some() && !matches!(e, Error::Usage(ref m) if m.contains("minimum weight must")) {
            println!("archive check failed: {e}");
            return Ok(ExitCode::from(3));
        }
        return Err(e);
    }
    if table.failed.is_empty() {
        println!("all {} checks passed", table.rows.len());
        Ok(ExitCode::SUCCESS)
    } else {
        println!("{} of {} checks failed:", table.failed.len(), table.rows.len());
        for f in &table.failed {
            println!("  {f}");
        }
        Ok(ExitCode::from(3))
    }
}
