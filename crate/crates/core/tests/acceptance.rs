//! End-to-end acceptance run: every published constant is recomputed from
//! scratch and reported as one PASS/FAIL line per criterion.

mod common;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use tcc_core::analysis::{design_strength, refined_we, tally_properties};
use tcc_core::classify10::{
    branches, build_x_sets, code_of, packed_generator, run_pipeline, ClassificationResult, PipelineOptions,
    SearchConfig,
};
use tcc_core::code::codewords_from_rows;
use tcc_core::equivalence::{self, code_cert, Canonicalizer};
use tcc_core::extend12::{
    check_conditions, classify_12_5, extension_code, normalized_extensions, sz_equivalent, ExtensionColumns,
    ExtensionResult,
};
use tcc_core::fixtures::{self, refined_enumerators};
use tcc_core::{persist, Gf3Matrix, Gf3Vector, LinearCode};

struct Report {
    lines: Vec<(usize, bool, String)>,
}

impl Report {
    fn record(&mut self, id: usize, ok: bool, detail: String) {
        let line = format!("criterion {id:>2} {} {detail}", if ok { "PASS" } else { "FAIL" });
        println!("{line}");
        self.lines.push((id, ok, detail));
    }
}

fn within(elapsed: Duration, limit: Duration) -> bool {
    elapsed < limit
}

fn pipeline(d: u8, threads: Option<usize>) -> (ClassificationResult, Duration) {
    let started = Instant::now();
    let r = run_pipeline(
        &SearchConfig::new(d).unwrap(),
        &PipelineOptions {
            threads,
            checkpoint_dir: None,
            progress: false,
        },
    )
    .unwrap();
    (r, started.elapsed())
}

fn systematic(a: &[&str]) -> LinearCode {
    let rows = a.iter().map(|r| r.parse::<Gf3Vector>().unwrap()).collect();
    LinearCode::systematic(&Gf3Matrix::from_rows(rows, 5).unwrap()).unwrap()
}

fn criterion_1(rep: &mut Report) {
    let started = Instant::now();
    let x3 = build_x_sets(&SearchConfig::new(3).unwrap());
    let x4 = build_x_sets(&SearchConfig::new(4).unwrap());
    let t = started.elapsed();
    let sizes = ((x3.x1.len(), x3.x2.len()), (x4.x1.len(), x4.x2.len()));
    rep.record(
        1,
        sizes == ((115, 18), (88, 14)) && within(t, Duration::from_secs(1)),
        format!("X-sets d=3 {:?}, d=4 {:?} in {t:.2?} (expected (115, 18), (88, 14) under 1 s)", sizes.0, sizes.1),
    );
}

fn criterion_2(rep: &mut Report) {
    let mut ok = true;
    let mut parts = Vec::new();
    for (d, expected, limit) in [(3u8, 4_328_352u64, 7200u64), (4, 650_051, 600)] {
        let started = Instant::now();
        let n: u64 = branches(&SearchConfig::new(d).unwrap()).iter().map(|b| b.count()).sum();
        let t = started.elapsed();
        ok &= n == expected && within(t, Duration::from_secs(limit));
        parts.push(format!("d={d}: {n} in {t:.2?} (expected {expected})"));
    }
    rep.record(2, ok, format!("matrix enumeration {}", parts.join(", ")));
}

fn criteria_3_to_6(rep: &mut Report, d3: &ClassificationResult, t3: Duration, d4: &ClassificationResult) {
    rep.record(
        3,
        d3.we_class_count == 527 && d4.we_class_count == 64,
        format!(
            "weight enumerator classes d=3 {}, d=4 {} (expected 527, 64)",
            d3.we_class_count, d4.we_class_count
        ),
    );
    rep.record(
        4,
        d3.class_count == 1303 && d4.class_count == 135 && within(t3, Duration::from_secs(12 * 3600)),
        format!(
            "equivalence classes d=3 {}, d=4 {} (expected 1303, 135); d=3 pipeline {t3:.1?}",
            d3.class_count, d4.class_count
        ),
    );
    let fsd = |r: &ClassificationResult| r.representatives.iter().filter(|c| c.formally_self_dual).count();
    rep.record(
        5,
        fsd(d3) == 242 && fsd(d4) == 38,
        format!("formally self-dual d=3 {}, d=4 {} (expected 242, 38)", fsd(d3), fsd(d4)),
    );
    let fixture = design_strength(&fixtures::code_10_5_5());
    let t_at_least = |t: usize| d4.representatives.iter().filter(|c| c.design.max_t >= t).count();
    rep.record(
        6,
        fixture.max_t >= 3 && t_at_least(2) == 1 && t_at_least(1) == 5,
        format!(
            "designs: [10,5,5] max t {} with lambdas {:?}; d=4 classes with t>=2: {}, t>=1: {} (expected >=3, 1, 5)",
            fixture.max_t,
            fixture.lambdas,
            t_at_least(2),
            t_at_least(1)
        ),
    );
}

fn criteria_7_to_10(rep: &mut Report, ext: &ExtensionResult) {
    let w = refined_enumerators();
    let stat = |d: u8| ext.stats.iter().find(|s| s.d == d).unwrap();
    let from = |d: u8| ext.survivors.iter().filter(|s| s.source.d == d).collect::<Vec<_>>();

    let s5 = stat(5);
    rep.record(
        7,
        s5.passing_candidates == 1 && from(5).len() == 1 && from(5)[0].refined_we == w[0],
        format!(
            "[10,5,5] extensions satisfying (C1): {}, enumerator {}",
            s5.passing_candidates,
            from(5).first().map_or("-".into(), |s| s.refined_we.to_string())
        ),
    );

    let first = ["00111", "01011", "10101", "11001", "12210"];
    let pair = |cols: &[&str]| extension_code(&systematic(&first), &ExtensionColumns::from_strs(cols).unwrap()).unwrap();
    let merges = sz_equivalent(
        &pair(&["11", "22", "22", "11", "12"]),
        &pair(&["11", "22", "22", "11", "21"]),
    )
    .unwrap();
    let s4 = stat(4);
    rep.record(
        8,
        s4.c1_inputs == 2 && s4.survivors == 2 && merges,
        format!(
            "d=4: {} classes admit (C1), {} SZ-classes, two-column pair merges: {merges} (expected 2, 2, true)",
            s4.c1_inputs, s4.survivors
        ),
    );

    let s3 = stat(3);
    rep.record(
        9,
        s3.c1_inputs == 19 && s3.passing_inputs == 4 && s3.survivors == 4,
        format!(
            "d=3: {} classes admit (C1) with (a1,b1)=(0,1) pinned (expected 19; {} with any first pair), \
             {} admit (C1) and (C3) (expected 4), {} SZ-classes (expected 4)",
            s3.c1_inputs, s3.c1_inputs_unpinned, s3.passing_inputs, s3.survivors
        ),
    );

    let d6 = ext.survivors.iter().filter(|s| s.min_weight == 6).count();
    let d4 = ext.survivors.iter().filter(|s| s.min_weight == 4).count();
    let mut got: Vec<_> = ext.survivors.iter().map(|s| s.refined_we.clone()).collect();
    let mut want = w.clone();
    got.sort();
    want.sort();
    rep.record(
        10,
        ext.survivors.len() == 7 && (d6, d4) == (3, 4) && got == want,
        format!(
            "{} SZ-classes, {d6} of minimum weight 6 and {d4} of minimum weight 4, enumerators equal W1..W7: {}",
            ext.survivors.len(),
            got == want
        ),
    );
}

/// Brute-force oracle on all [4,2] and [5,2] codes.
fn oracle_agrees(n: usize, k: usize) -> bool {
    let codes = common::all_codes(n, k);
    let bf = common::brute_force(&codes);
    let certs: Vec<_> = codes.iter().map(code_cert).collect();
    let mut by_cert: HashMap<_, usize> = HashMap::new();
    for (i, c) in certs.iter().enumerate() {
        if *by_cert.entry(c.clone()).or_insert(bf.class_of[i]) != bf.class_of[i] {
            return false;
        }
    }
    let classes: BTreeSet<_> = bf.class_of.iter().collect();
    by_cert.len() == classes.len()
        && codes
            .iter()
            .zip(&bf.aut_order)
            .all(|(c, &o)| equivalence::automorphisms(c).unwrap().order() == o)
}

fn scrambles_detected() -> usize {
    let mut rng = rand::rngs::StdRng::seed_from_u64(1000);
    let mut base = vec![fixtures::code_10_5_5()];
    base.extend((0..4).map(|_| common::random_code(10, 5, &mut rng)));
    base.push(common::random_code(12, 5, &mut rng));
    (0..1000)
        .filter(|i| {
            let c = &base[i % base.len()];
            let m = common::random_map(c.len(), &mut rng);
            equivalence::equivalent(c, &m.apply_code(c).unwrap()).unwrap()
        })
        .count()
}

/// Lemma checks on every normalized candidate: a candidate passing (C2)
/// punctures to a [10,5] code of minimum weight 3..=5, and a candidate
/// passing (C1)-(C3) has minimum weight 6 exactly when its puncture has
/// minimum weight 4 or 5.
fn lemma_violations(inputs: &[(u8, Vec<LinearCode>)]) -> (usize, usize) {
    let mut checked = 0;
    let mut bad = 0;
    for (_, reps) in inputs {
        for g in reps {
            for (_, c) in normalized_extensions(g).unwrap() {
                checked += 1;
                let cond = check_conditions(&c).unwrap();
                let p = c.puncture(&[10, 11]).unwrap();
                if cond.c2 && (p.dimension() != 5 || !(3..=5).contains(&p.min_weight())) {
                    bad += 1;
                }
                if cond.all() {
                    let d = c.min_weight();
                    let pd = p.min_weight();
                    if (pd >= 4) != (d == 6) || (pd == 3) != (d == 4) {
                        bad += 1;
                    }
                }
            }
        }
    }
    (checked, bad)
}

fn archives_identical(d4: &ClassificationResult) -> bool {
    let (other, _) = pipeline(4, Some(2));
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    persist::write_classification(a.path(), d4).unwrap();
    persist::write_classification(b.path(), &other).unwrap();
    ["reps-10-5-4.codes", "summary-10-5-4.json"]
        .iter()
        .all(|f| std::fs::read(a.path().join(f)).unwrap() == std::fs::read(b.path().join(f)).unwrap())
}

/// A 1% sample of the d=4 stream, each matched to a representative certificate.
fn sample_completeness(d4: &ClassificationResult) -> (usize, usize) {
    let certs: HashSet<_> = d4.representatives.iter().map(|r| r.cert.clone()).collect();
    let mut rng = rand::rngs::StdRng::seed_from_u64(77);
    let mut canon = Canonicalizer::new();
    let (mut sampled, mut matched) = (0, 0);
    for b in branches(&SearchConfig::new(4).unwrap()) {
        b.for_each(|a| {
            if rng.gen_bool(0.01) {
                sampled += 1;
                let words = codewords_from_rows(&packed_generator(a));
                matched += certs.contains(&canon.canonical_form_of_words(10, &words).cert) as usize;
            }
        });
    }
    (sampled, matched)
}

fn criterion_11(rep: &mut Report, d4: &ClassificationResult, inputs: &[(u8, Vec<LinearCode>)], ext: &ExtensionResult) {
    let oracle = oracle_agrees(4, 2) && oracle_agrees(5, 2);
    let scrambles = scrambles_detected();
    let (checked, violations) = lemma_violations(inputs);
    let marginal = ext.survivors.iter().all(|s| {
        let w = refined_we(&s.code).unwrap();
        w.full_weights() == s.code.hamming_we().coeffs
            && w.punctured_weights() == s.code.puncture(&[10, 11]).unwrap().hamming_we().coeffs
    });
    let deterministic = archives_identical(d4);
    let (sampled, matched) = sample_completeness(d4);
    let distinct: HashSet<_> = d4.representatives.iter().map(|r| &r.cert).collect();
    let sound = distinct.len() == d4.class_count && d4.representatives.iter().all(|r| r.code.min_weight() == 4);
    let tally = tally_properties(&d4.codes());
    rep.record(
        11,
        oracle
            && scrambles == 1000
            && checked > 0
            && violations == 0
            && marginal
            && deterministic
            && sampled > 0
            && matched == sampled
            && sound
            && tally.formally_self_dual == 38,
        format!(
            "oracle on [4,2]/[5,2]: {oracle}; scrambles detected {scrambles}/1000; lemma checks on {checked} \
             candidates, {violations} violations; refined marginalization: {marginal}; archives identical \
             across thread counts: {deterministic}; sample {matched}/{sampled} matched; representatives distinct: {sound}"
        ),
    );
}

fn main() {
    // `cargo test` passes harness flags such as --list; only run for a plain
    // invocation or a matching filter.
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.iter().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    if let Some(filter) = args.iter().find(|a| !a.starts_with('-')) {
        if !"acceptance".contains(filter.as_str()) {
            return;
        }
    }

    let mut rep = Report { lines: Vec::new() };
    let started = Instant::now();
    criterion_1(&mut rep);
    criterion_2(&mut rep);
    let (d4, _) = pipeline(4, None);
    let (d3, t3) = pipeline(3, None);
    criteria_3_to_6(&mut rep, &d3, t3, &d4);
    let inputs = vec![
        (5u8, vec![fixtures::code_10_5_5()]),
        (4, d4.codes()),
        (3, d3.codes()),
    ];
    let ext = classify_12_5(&inputs).unwrap();
    criteria_7_to_10(&mut rep, &ext);
    criterion_11(&mut rep, &d4, &inputs, &ext);
    assert!(d3.representatives.iter().all(|r| r.a.map(|a| a[0]) == Some(SearchConfig::new(3).unwrap().r1())));
    assert!(code_of(&d4.representatives[0].a.unwrap()).same_code(&d4.representatives[0].code));

    let failed: Vec<usize> = rep.lines.iter().filter(|l| !l.1).map(|l| l.0).collect();
    println!(
        "acceptance: {} of {} criteria passed in {:.1?}",
        rep.lines.len() - failed.len(),
        rep.lines.len(),
        started.elapsed()
    );
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
