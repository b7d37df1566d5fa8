use std::path::Path;

use rayon::prelude::*;

use salamander_core::axioms::{exhaustive_table_suite, random_vec_suite, AxiomReport};
use salamander_core::diagram::parse_unchecked;
use salamander_core::fuzz::{fuzz_any, BackendChoice, FuzzParams};
use salamander_core::salamander::{
    composite_coherence, salamander_hypotheses, sweep, vertical_salamander_sequence, SweepReport, SEQUENCE_LABELS,
};
use salamander_core::{
    salamander_sequence, three_by_three, verify_salamander, with_complex, AnyComplex, Backend, DoubleComplex, Error,
    HomologyKind, Pos,
};

use crate::report::Report;

pub fn show(pos: Pos) -> String {
    format!("({}, {})", pos.0, pos.1)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Reads and parses a diagram; problems become failure lines.
fn load(report: &mut Report, path: &Path) -> Option<AnyComplex> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            report.fail(format!("cannot read {}: {e}", path.display()));
            return None;
        }
    };
    match parse_unchecked(&text) {
        Ok(dc) => {
            report.stat("backend", dc.tag().to_string());
            Some(dc)
        }
        Err(e) => {
            report.fail(format!("{}: {e}", path.display()));
            None
        }
    }
}

/// Checks the complex laws, reporting each violation; false if any.
fn require_valid<B: Backend>(report: &mut Report, dc: &DoubleComplex<B>) -> bool {
    match dc.validate() {
        Ok(r) if r.is_valid() => true,
        Ok(r) => {
            for v in r.violations {
                report.fail(format!("not a double complex: {} at {}", v.kind, show(v.pos)));
            }
            false
        }
        Err(e) => {
            report.fail(e);
            false
        }
    }
}

pub fn validate(path: &Path) -> Report {
    let mut report = Report::new("validate");
    let Some(any) = load(&mut report, path) else { return report };
    with_complex!(&any, dc => match dc.validate() {
        Ok(r) => {
            report.line(format!("{} objects, {} law instances checked", dc.support().len(), r.checked));
            for v in &r.violations {
                report.fail(format!("{} at {}", v.kind, show(v.pos)));
            }
            if r.is_valid() {
                report.line("valid double complex");
            }
            report.stat("objects", dc.support().len());
            report.stat("checked", r.checked);
            report.stat("violations", r.violations.len());
        }
        Err(e) => report.fail(e),
    });
    report
}

fn homology_at<B: Backend>(report: &mut Report, dc: &DoubleComplex<B>, pos: Pos, tally: &mut [usize; 2]) {
    let b = dc.backend();
    report.line(format!("{} object of order {}", show(pos), b.order(&dc.object(pos))));
    for kind in HomologyKind::ALL {
        let text = match dc.homology(kind, pos) {
            Ok(h) => match &h.value {
                Ok(sq) => {
                    tally[0] += 1;
                    let whole = if h.is_whole_object(b) { ", the whole object" } else { "" };
                    format!("defined, order {}{whole}", sq.order(b))
                }
                Err(reason) => {
                    tally[1] += 1;
                    format!("undefined: {reason}")
                }
            },
            Err(e) => {
                report.fail(format!("{kind} homology at {}: {e}", show(pos)));
                continue;
            }
        };
        report.line(format!("  {:<12}{text}", kind.to_string()));
    }
}

pub fn homology(path: &Path, at: Option<Pos>) -> Report {
    let mut report = Report::new("homology");
    let Some(any) = load(&mut report, path) else { return report };
    with_complex!(&any, dc => {
        if require_valid(&mut report, dc) {
            let positions = at.map_or_else(|| dc.support(), |p| vec![p]);
            let mut tally = [0, 0];
            for &pos in &positions {
                homology_at(&mut report, dc, pos, &mut tally);
            }
            report.stat("positions", positions.len());
            report.stat("defined", tally[0]);
            report.stat("undefined", tally[1]);
        }
    });
    report
}

#[derive(Default)]
struct SalamanderTally {
    verified: usize,
    skipped: usize,
    exact: usize,
}

fn salamander_at<B: Backend>(report: &mut Report, dc: &DoubleComplex<B>, pos: Pos, vertical: bool, explicit: bool, tally: &mut SalamanderTally) {
    let b = dc.backend();
    let hyp = if vertical {
        salamander_hypotheses(&dc.transpose(), (pos.1, pos.0))
    } else {
        salamander_hypotheses(dc, pos)
    };
    let hyp = match hyp {
        Ok(h) => h,
        Err(e) => return report.fail(e),
    };
    let label = if vertical { "vertical sequence" } else { "sequence" };
    if explicit {
        for c in &hyp.checks {
            let detail = if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) };
            if c.passed {
                report.line(format!("ok   {}{detail}", c.label));
            } else {
                report.fail(format!("hypothesis {}{detail}", c.label));
            }
        }
    }
    if let Some(failed) = hyp.first_failure() {
        tally.skipped += 1;
        if !explicit {
            report.line(format!("skip {label} at {}: {} ({})", show(pos), failed.label, failed.detail));
        }
        return;
    }
    let seq = if vertical { vertical_salamander_sequence(dc, pos) } else { salamander_sequence(dc, pos) };
    let verdict = match seq.and_then(|s| verify_salamander(b, &s).map(|v| (s, v))) {
        Ok(pair) => pair,
        Err(e) => return report.fail(format!("{label} at {}: {e}", show(pos))),
    };
    let (seq, verdict) = verdict;
    tally.verified += 1;
    let orders: Vec<String> = SEQUENCE_LABELS
        .iter()
        .zip(&seq.objects)
        .map(|(l, sq)| format!("{l} {}", sq.order(b)))
        .collect();
    report.line(format!("{label} at {}: {}", show(pos), orders.join(" -> ")));
    for v in &verdict.positions {
        let line = format!("  at {}: direct {}, criterion {}", v.at, yes(v.direct), yes(v.criterion));
        if v.direct != v.criterion {
            report.fail(format!("{line}: the two checks disagree"));
        } else {
            report.line(line);
        }
    }
    let n = verdict.exact_count();
    let summary = format!("exact at {n}/{} interior positions", verdict.positions.len());
    if verdict.all_exact() {
        tally.exact += 1;
        report.line(format!("  {summary}"));
    } else {
        report.fail(format!("{label} at {}: {summary}", show(pos)));
    }
    if !vertical {
        match composite_coherence(dc, pos) {
            Ok(c) => {
                for (name, agrees) in [("receptor", c.through_receptor), ("donor", c.through_donor)] {
                    match agrees {
                        Some(true) => report.line(format!("  outer map agrees with the composite through the {name}")),
                        Some(false) => report.fail(format!("outer map differs from the composite through the {name} at {}", show(pos))),
                        None => {}
                    }
                }
            }
            Err(e) => report.fail(e),
        }
    }
}

pub fn salamander(path: &Path, at: Option<Pos>, vertical: bool) -> Report {
    let mut report = Report::new("salamander");
    let Some(any) = load(&mut report, path) else { return report };
    with_complex!(&any, dc => {
        if require_valid(&mut report, dc) {
            let positions = at.map_or_else(|| dc.support(), |p| vec![p]);
            let mut tally = SalamanderTally::default();
            for &pos in &positions {
                salamander_at(&mut report, dc, pos, vertical, at.is_some(), &mut tally);
            }
            report.stat("positions", positions.len());
            report.stat("verified", tally.verified);
            report.stat("skipped", tally.skipped);
            report.stat("exact", tally.exact);
        }
    });
    report
}

pub fn three_by_three_cmd(path: &Path) -> Report {
    let mut report = Report::new("3x3");
    let Some(any) = load(&mut report, path) else { return report };
    let result = with_complex!(&any, dc => three_by_three(dc));
    match result {
        Ok(r) => {
            for (name, ok) in &r.definedness {
                if *ok {
                    report.line(format!("ok   {name} defined"));
                } else {
                    report.fail(format!("{name} undefined"));
                }
            }
            for t in &r.trace {
                report.line(format!("  {t}"));
            }
            for (c, (chain, direct)) in r.chain_exact.iter().zip(&r.direct_exact).enumerate() {
                report.line(format!("column {c}: isomorphism chain {}, direct {}", yes(*chain), yes(*direct)));
            }
            if r.first_row_exact() && r.routes_agree() {
                report.line("first row exact (isomorphism chains and direct check agree)");
            } else if !r.routes_agree() {
                report.fail("isomorphism chains and direct check disagree");
            } else {
                report.fail("first row is not exact");
            }
            report.stat("defined", r.definedness.iter().filter(|(_, ok)| *ok).count());
            report.stat("first_row_exact", r.first_row_exact());
        }
        Err(Error::Hypothesis(msg)) => report.fail(format!("hypothesis: {msg}")),
        Err(e) => report.fail(e),
    }
    report
}

fn axiom_lines(report: &mut Report, name: &str, r: &AxiomReport) {
    for o in &r.outcomes {
        let law = if o.dual { format!("{} (dual)", o.law) } else { o.law.to_string() };
        let text = format!("{name} {law}: {} instances, {} failures", o.instances, o.failures);
        if o.passed() {
            report.line(format!("ok   {text}"));
        } else {
            report.fail(text);
            for w in &o.witnesses {
                report.line(format!("    {w}"));
            }
        }
    }
    report.stat(&format!("{name}_instances"), r.instances());
    report.stat(&format!("{name}_min_instances"), r.min_instances());
}

pub fn axioms(choice: Option<BackendChoice>, seed: u64, count: usize) -> Report {
    let mut report = Report::new("axioms");
    if matches!(choice, None | Some(BackendChoice::Table | BackendChoice::Mixed)) {
        axiom_lines(&mut report, "table", &exhaustive_table_suite());
    }
    if matches!(choice, None | Some(BackendChoice::Vector | BackendChoice::Mixed)) {
        axiom_lines(&mut report, "vector", &random_vec_suite(seed, count));
        report.stat("seed", seed);
        report.stat("configurations", count);
    }
    report
}

pub fn fuzz(choice: BackendChoice, seed: u64, count: u64) -> Report {
    let mut report = Report::new("fuzz");
    let params = FuzzParams::default();
    let results: Vec<Result<SweepReport, String>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let any = fuzz_any(choice, seed, i, params);
            with_complex!(&any, dc => {
                let laws = dc.validate().map_err(|e| e.to_string())?;
                if let Some(v) = laws.violations.first() {
                    return Err(format!("not a double complex: {} at {}", v.kind, show(v.pos)));
                }
                sweep(dc).map_err(|e| e.to_string())
            })
        })
        .collect();
    let mut total = SweepReport::default();
    let mut passed = 0;
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(s) => {
                if s.passed() {
                    passed += 1;
                }
                for f in &s.failures {
                    report.fail(format!("complex {i}: {f}"));
                }
                total = total.merge(s);
            }
            Err(e) => report.fail(format!("complex {i}: {e}")),
        }
    }
    report.line(format!("{} positions, {} sequences verified, {} skipped", total.positions, total.verified, total.skipped));
    report.line(format!("{} qualifying edges, {} failed isomorphisms", total.qualifying_edges, total.failed_isos));
    report.line(format!("{} undefined homology objects", total.undefined_homology));
    let verdict = format!("{passed}/{count} complexes: salamander exact");
    if passed as u64 == count {
        report.line(verdict);
    } else {
        report.fail(verdict);
    }
    report.stat("seed", seed);
    report.stat("complexes", count);
    report.stat("passed", passed);
    report.stat("positions", total.positions);
    report.stat("verified", total.verified);
    report.stat("skipped", total.skipped);
    report.stat("qualifying_edges", total.qualifying_edges);
    report.stat("undefined_homology", total.undefined_homology);
    report
}
