use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use acg_core::limits;
use acg_core::par::{self, Exec};
use acg_core::perm::GroupFile;
use acg_core::report::{EngineParameters, Witness, SCHEMA_VERSION};
use acg_core::suites::{parse_suites, run_suite, Suite, SuiteConfig, DEFAULT_CHARTAB_MAX_ORDER, DEFAULT_MAX_ORDER};
use acg_core::zoo::{builtin_corpus, manifest_report, GroupManifest};
use acg_core::{CheckStatus, PermGroup, ReportBuilder, VerificationReport};
use anyhow::Context;
use serde::Serialize;

use crate::construct::manifest_path;
use crate::outcome::Outcome;

pub struct Options {
    pub dir: Option<PathBuf>,
    pub builtin: bool,
    pub suites: Option<String>,
    pub jobs: usize,
    pub max_order: Option<u64>,
    pub chartab_max_order: Option<u64>,
    pub out: Option<PathBuf>,
}

/// One group to verify, with its manifest when one was supplied.
struct Subject {
    name: String,
    source: String,
    group: PermGroup,
    manifest: Option<GroupManifest>,
}

#[derive(Serialize)]
struct InputError {
    source: String,
    message: String,
}

#[derive(Serialize)]
struct Excluded {
    group: String,
    suite: String,
    order: u64,
    limit: u64,
}

#[derive(Serialize, Default)]
struct Summary {
    groups: usize,
    reports: usize,
    checks_passed: usize,
    checks_failed: usize,
    checks_skipped_capacity: usize,
    excluded: usize,
    input_errors: usize,
}

#[derive(Serialize)]
struct Aggregate {
    schema_version: u32,
    suites: Vec<String>,
    max_order: u64,
    chartab_max_order: u64,
    engine: EngineParameters,
    summary: Summary,
    reports: Vec<VerificationReport>,
    excluded: Vec<Excluded>,
    input_errors: Vec<InputError>,
    timing_ms: u64,
}

fn is_group_file(path: &Path) -> bool {
    path.is_file()
        && !path
            .file_name()
            .and_then(|n| n.to_str())
            .is_some_and(|n| n.ends_with(".json") || n.starts_with('.'))
}

fn load_dir(dir: &Path, errors: &mut Vec<InputError>) -> anyhow::Result<Vec<Subject>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("reading directory {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| is_group_file(p))
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for path in paths {
        match load_file(&path) {
            Ok(s) => out.push(s),
            Err(e) => {
                eprintln!("skipping {}: {e:#}", path.display());
                errors.push(InputError {
                    source: path.display().to_string(),
                    message: format!("{e:#}"),
                });
            }
        }
    }
    Ok(out)
}

fn load_file(path: &Path) -> anyhow::Result<Subject> {
    let text = fs::read_to_string(path)?;
    let file = GroupFile::parse(&text)?;
    let sidecar = manifest_path(path);
    let manifest = if sidecar.exists() {
        let text = fs::read_to_string(&sidecar)?;
        Some(GroupManifest::from_json(&text).with_context(|| format!("manifest {}", sidecar.display()))?)
    } else {
        None
    };
    Ok(Subject {
        name: file.name.clone(),
        source: path.display().to_string(),
        group: file.group,
        manifest,
    })
}

fn verify_subject(subject: &Subject, suites: &[Suite], config: &SuiteConfig) -> (Vec<VerificationReport>, Vec<Excluded>) {
    let g = &subject.group;
    let mut reports = Vec::new();
    let mut excluded = Vec::new();
    if let Some(m) = &subject.manifest {
        let start = Instant::now();
        let mut b = ReportBuilder::new(g, "manifest");
        let r = manifest_report(g, m, None);
        if let Err(e) = b.absorb("manifest", "manifest expectations", r) {
            b.fail("manifest", "manifest expectations", e.to_string(), Witness::subgroup(g));
        }
        reports.push(timed(b.into_report(), start));
    }
    for &suite in suites {
        let limit = config.limit(suite);
        if g.order() > limit {
            excluded.push(Excluded {
                group: subject.name.clone(),
                suite: suite.to_string(),
                order: g.order(),
                limit,
            });
            continue;
        }
        let start = Instant::now();
        let report = run_suite(suite, g, config).unwrap_or_else(|e| {
            let mut b = ReportBuilder::new(g, suite.id());
            b.fail("suite-error", "the suite ran to completion", e.to_string(), Witness::subgroup(g));
            b.into_report()
        });
        reports.push(timed(report, start));
    }
    (reports, excluded)
}

fn timed(mut r: VerificationReport, start: Instant) -> VerificationReport {
    r.timing_ms = Some(start.elapsed().as_millis() as u64);
    r
}

fn print_report(source: &str, r: &VerificationReport) {
    let status = match Outcome::of_report(r) {
        Outcome::Violation => "FAIL",
        Outcome::CapacitySkips => "SKIP",
        _ => "PASS",
    };
    println!(
        "{status} {} [{}] {}: {} checks",
        r.group,
        source,
        r.suite,
        r.checks.len()
    );
    for c in &r.checks {
        match c.status {
            CheckStatus::Fail => {
                eprintln!("  fail {}: {} ({})", c.id, c.anchor, c.detail);
                if let Some(w) = &c.witness {
                    eprintln!("    witness: {}", serde_json::to_string(w).unwrap_or_default());
                }
            }
            CheckStatus::SkippedCapacity => println!("  skipped {}: {}", c.id, c.detail),
            CheckStatus::Pass => {}
        }
    }
}

pub fn run(opts: Options) -> anyhow::Result<Outcome> {
    let start = Instant::now();
    if opts.dir.is_none() && !opts.builtin {
        anyhow::bail!("nothing to verify: give a directory and/or --builtin");
    }
    let suites = match &opts.suites {
        Some(s) => parse_suites(s)?,
        None => Suite::ALL.to_vec(),
    };
    if suites.is_empty() {
        anyhow::bail!("empty suite selection");
    }
    let max_order = opts.max_order.unwrap_or(DEFAULT_MAX_ORDER);
    let config = SuiteConfig {
        max_order,
        chartab_max_order: opts
            .chartab_max_order
            .unwrap_or(DEFAULT_CHARTAB_MAX_ORDER.min(max_order)),
        exec: Exec::Sequential,
    };

    let mut input_errors = Vec::new();
    let mut subjects = Vec::new();
    if let Some(dir) = &opts.dir {
        subjects.extend(load_dir(dir, &mut input_errors)?);
    }
    if opts.builtin {
        for z in builtin_corpus()? {
            subjects.push(Subject {
                name: z.name().to_string(),
                source: "builtin".into(),
                group: z.group,
                manifest: Some(z.manifest),
            });
        }
    }

    let results = par::with_threads(opts.jobs.max(1), || {
        par::map(&subjects, Exec::Parallel, |s| verify_subject(s, &suites, &config))
    });

    let mut outcome = if input_errors.is_empty() { Outcome::Pass } else { Outcome::InputError };
    let mut summary = Summary {
        groups: subjects.len(),
        input_errors: input_errors.len(),
        ..Summary::default()
    };
    let mut reports = Vec::new();
    let mut excluded = Vec::new();
    for (subject, (rs, ex)) in subjects.iter().zip(results) {
        for r in rs {
            print_report(&subject.source, &r);
            outcome = outcome.merge(Outcome::of_report(&r));
            summary.checks_passed += r.count(CheckStatus::Pass);
            summary.checks_failed += r.count(CheckStatus::Fail);
            summary.checks_skipped_capacity += r.count(CheckStatus::SkippedCapacity);
            reports.push(r);
        }
        excluded.extend(ex);
    }
    summary.reports = reports.len();
    summary.excluded = excluded.len();

    println!(
        "{} groups, {} reports: {} checks passed, {} failed, {} skipped for capacity, {} suite runs above the order limit, {} input errors",
        summary.groups,
        summary.reports,
        summary.checks_passed,
        summary.checks_failed,
        summary.checks_skipped_capacity,
        summary.excluded,
        summary.input_errors
    );

    if let Some(path) = &opts.out {
        let aggregate = Aggregate {
            schema_version: SCHEMA_VERSION,
            suites: suites.iter().map(|s| s.to_string()).collect(),
            max_order: config.max_order,
            chartab_max_order: config.chartab_max_order,
            engine: EngineParameters {
                enumeration_bound: limits::enumeration_bound(),
                dixon_prime: None,
                regime: None,
            },
            summary,
            reports,
            excluded,
            input_errors,
            timing_ms: start.elapsed().as_millis() as u64,
        };
        let text = serde_json::to_string_pretty(&aggregate)?;
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(outcome)
}
