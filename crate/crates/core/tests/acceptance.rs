//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use salamander_core::axioms::{exhaustive_table_suite, random_vec_suite, AxiomReport, LAWS};
use salamander_core::fixtures::{alternating_grid, broken_c2_c4_grid, c2_c4_grid, s3_grid};
use salamander_core::fuzz::{fuzz_any, BackendChoice, FuzzParams, TABLE_ORDER_CAP, VEC_DIM_CAP};
use salamander_core::salamander::{sweep, SweepReport};
use salamander_core::sampling::{criterion_trials, table_chase_coherence, MapMode, TablePairs, VecPairs};
use salamander_core::translate::cross_backend_trials;
use salamander_core::{corner_iso, three_by_three, with_complex, AnyComplex, Backend, DoubleComplex, Error, Shape};

const SEED: u64 = 42;

const AXIOM_BUDGET: Duration = Duration::from_secs(120);
const VEC_AXIOM_CONFIGS: usize = 500;
const MIN_VEC_INSTANCES: usize = 500;

const CRITERION_SAMPLES: usize = 1000;
const MIN_EACH_OUTCOME: usize = 100;

const CHASE_MAX_ORDER: usize = 16;

const FUZZ_COMPLEXES: u64 = 200;
const FUZZ_BUDGET: Duration = Duration::from_secs(300);
const MAX_GRID: i32 = 4;

const MIN_QUALIFYING_EDGES: usize = 50;

const DEFINEDNESS_CHECKS: usize = 15;

const CROSS_CASES: usize = 500;

struct Verdict {
    passed: bool,
    summary: String,
    details: Vec<String>,
}

impl Verdict {
    fn new(passed: bool, summary: String) -> Self {
        Verdict {
            passed,
            summary,
            details: Vec::new(),
        }
    }
}

fn report_failures(report: &AxiomReport) -> Vec<String> {
    report
        .outcomes
        .iter()
        .filter(|o| !o.passed())
        .map(|o| o.to_string())
        .collect()
}

fn covers_all_laws(report: &AxiomReport, min: usize) -> bool {
    LAWS.iter().all(|law| {
        [false, true]
            .iter()
            .all(|&dual| report.get(law, dual).is_some_and(|o| o.instances >= min))
    })
}

fn axiom_suite() -> Verdict {
    let start = Instant::now();
    let table = exhaustive_table_suite();
    let vector = random_vec_suite(SEED, VEC_AXIOM_CONFIGS);
    let elapsed = start.elapsed();
    let passed = table.all_pass()
        && vector.all_pass()
        && covers_all_laws(&table, 1)
        && covers_all_laws(&vector, MIN_VEC_INSTANCES)
        && elapsed < AXIOM_BUDGET;
    let mut v = Verdict::new(
        passed,
        format!(
            "axiom suite: table {} instances / {} failures, vector {} instances (min {} per law) / {} failures, {:.1}s",
            table.instances(),
            table.failures(),
            vector.instances(),
            vector.min_instances(),
            vector.failures(),
            elapsed.as_secs_f64()
        ),
    );
    v.details.extend(report_failures(&table));
    v.details.extend(report_failures(&vector));
    v
}

fn exactness_criterion() -> Verdict {
    let table = TablePairs::new();
    let vector = VecPairs::new();
    let mut passed = true;
    let mut parts = Vec::new();
    let mut details = Vec::new();
    for mode in MapMode::ALL {
        for (name, tally) in [
            ("table", criterion_trials(&table, mode, SEED, CRITERION_SAMPLES)),
            ("vector", criterion_trials(&vector, mode, SEED, CRITERION_SAMPLES)),
        ] {
            passed &= tally.samples >= CRITERION_SAMPLES
                && tally.errors == 0
                && tally.disagreements() == 0
                && tally.exact >= MIN_EACH_OUTCOME
                && tally.inexact >= MIN_EACH_OUTCOME;
            parts.push(format!(
                "{name}/{mode:?} {} samples {} exact {} inexact {} disagreements",
                tally.samples,
                tally.exact,
                tally.inexact,
                tally.disagreements()
            ));
            details.extend(tally.witnesses);
        }
    }
    Verdict {
        passed,
        summary: format!("exactness criterion: {}", parts.join("; ")),
        details,
    }
}

fn chase_coherence() -> Verdict {
    let r = table_chase_coherence(CHASE_MAX_ORDER);
    Verdict {
        passed: r.mismatches == 0 && r.pairs > 0,
        summary: format!(
            "chase coherence: {} morphisms, {} subquotient pairs, {} subgroups chased, {} mismatches",
            r.morphisms, r.pairs, r.subgroups, r.mismatches
        ),
        details: r.witnesses,
    }
}

fn within_limits<B: Backend>(dc: &DoubleComplex<B>, cap: impl Fn(&B::Object) -> bool) -> bool {
    let fits = dc
        .bounds()
        .is_none_or(|(lo, hi)| hi.0 - lo.0 < MAX_GRID && hi.1 - lo.1 < MAX_GRID);
    fits && dc.support().into_iter().all(|pos| cap(&dc.object(pos)))
}

fn fuzz_corpus(range: std::ops::Range<u64>) -> (SweepReport, usize) {
    let params = FuzzParams::default();
    let sweeps: Vec<(SweepReport, bool)> = range
        .into_par_iter()
        .map(|i| {
            let any = fuzz_any(BackendChoice::Mixed, SEED, i, params);
            let limits = match &any {
                AnyComplex::Table(dc) => within_limits(dc, |g| g.order() <= TABLE_ORDER_CAP),
                AnyComplex::Vector(dc) => within_limits(dc, |v| v.dim() <= VEC_DIM_CAP),
            };
            let report = with_complex!(&any, dc => sweep(dc)).unwrap_or_else(|e| SweepReport {
                failures: vec![format!("complex {i}: {e}")],
                inexact: 1,
                ..SweepReport::default()
            });
            (report, limits)
        })
        .collect();
    let out_of_limits = sweeps.iter().filter(|(_, ok)| !ok).count();
    let merged = sweeps
        .into_iter()
        .map(|(r, _)| r)
        .fold(SweepReport::default(), SweepReport::merge);
    (merged, out_of_limits)
}

fn salamander_corpus() -> (Verdict, SweepReport) {
    let start = Instant::now();
    let (report, out_of_limits) = fuzz_corpus(0..FUZZ_COMPLEXES);
    let elapsed = start.elapsed();
    let passed = report.passed() && report.verified > 0 && out_of_limits == 0 && elapsed < FUZZ_BUDGET;
    let verdict = Verdict {
        passed,
        summary: format!(
            "salamander: {FUZZ_COMPLEXES} complexes, {} positions, {} sequences verified, {} inexact, {} disagreements, {} incoherent, {} outside limits, {:.1}s",
            report.positions,
            report.verified,
            report.inexact,
            report.disagreements,
            report.incoherent,
            out_of_limits,
            elapsed.as_secs_f64()
        ),
        details: report.failures.clone(),
    };
    (verdict, report)
}

fn corollaries(corpus: &SweepReport) -> Verdict {
    let mut edges = corpus.qualifying_edges;
    let mut failed = corpus.failed_isos;
    let mut size = FUZZ_COMPLEXES;
    while edges < MIN_QUALIFYING_EDGES && size < 8 * FUZZ_COMPLEXES {
        let (more, _) = fuzz_corpus(size..size + FUZZ_COMPLEXES);
        edges += more.qualifying_edges;
        failed += more.failed_isos;
        size += FUZZ_COMPLEXES;
    }

    let mut details = Vec::new();
    let mut shapes_seen = [0usize; 4];
    let mut corner_failures = 0;
    for (name, dc) in [("C2/C4", c2_c4_grid()), ("S3", s3_grid()), ("A3/S3", alternating_grid())] {
        for r in -1..=3 {
            for c in -1..=3 {
                for (k, shape) in Shape::ALL.into_iter().enumerate() {
                    match corner_iso(&dc, (r, c), shape) {
                        Ok(isos) => {
                            shapes_seen[k] += 1;
                            if !isos.iter().all(|iso| iso.is_isomorphism()) {
                                corner_failures += 1;
                                details.push(format!("{name} corner {shape} at ({r}, {c}) is not an isomorphism"));
                            }
                        }
                        Err(Error::Hypothesis(_)) => {}
                        Err(e) => {
                            corner_failures += 1;
                            details.push(format!("{name} corner {shape} at ({r}, {c}): {e}"));
                        }
                    }
                }
            }
        }
    }
    let passed = edges >= MIN_QUALIFYING_EDGES && failed == 0 && corner_failures == 0 && shapes_seen.iter().all(|&n| n > 0);
    Verdict {
        passed,
        summary: format!(
            "corollaries: {edges} qualifying edges in {size} complexes, {failed} failed isomorphisms; corner isomorphisms per shape {shapes_seen:?}, {corner_failures} failures"
        ),
        details,
    }
}

fn three_by_three_lemma() -> Verdict {
    let mut passed = true;
    let mut parts = Vec::new();
    let mut details = Vec::new();
    for (name, dc) in [("C2/C4/C2", c2_c4_grid()), ("C3/S3/C2", s3_grid()), ("A3/S3", alternating_grid())] {
        match three_by_three(&dc) {
            Ok(r) => {
                let defined = r.definedness.iter().filter(|(_, ok)| *ok).count();
                let ok = r.first_row_exact() && r.routes_agree() && r.definedness.len() == DEFINEDNESS_CHECKS && defined == DEFINEDNESS_CHECKS;
                passed &= ok;
                parts.push(format!("{name} first row exact by both routes, {defined}/{} defined", r.definedness.len()));
                if !ok {
                    details.extend(r.trace);
                }
            }
            Err(e) => {
                passed = false;
                details.push(format!("{name}: {e}"));
            }
        }
    }
    match three_by_three(&broken_c2_c4_grid()) {
        Err(Error::Hypothesis(msg)) => parts.push(format!("mutated fixture rejected ({msg})")),
        other => {
            passed = false;
            details.push(format!("mutated fixture was not rejected at hypothesis checking: {other:?}"));
        }
    }
    Verdict {
        passed,
        summary: format!("3x3 lemma: {}", parts.join("; ")),
        details,
    }
}

fn cross_backend() -> Verdict {
    let r = cross_backend_trials(SEED, CROSS_CASES);
    Verdict {
        passed: r.cases >= CROSS_CASES && r.disagreements == 0,
        summary: format!(
            "cross-backend oracle: {} cases, {} comparisons, {} disagreements",
            r.cases, r.comparisons, r.disagreements
        ),
        details: r.witnesses,
    }
}

fn main() -> ExitCode {
    let (salamander, corpus) = salamander_corpus();
    let verdicts = [
        axiom_suite(),
        exactness_criterion(),
        chase_coherence(),
        salamander,
        corollaries(&corpus),
        three_by_three_lemma(),
        cross_backend(),
    ];
    let mut failed = 0;
    for (i, v) in verdicts.iter().enumerate() {
        println!("{} criterion {}: {}", if v.passed { "PASS" } else { "FAIL" }, i + 1, v.summary);
        for d in v.details.iter().take(5) {
            println!("    {d}");
        }
        failed += usize::from(!v.passed);
    }
    println!("acceptance: {}/{} criteria passed", verdicts.len() - failed, verdicts.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
