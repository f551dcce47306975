use std::fs;
use std::path::Path;

use acg_core::anticentral::{c_chain, find_anticentral_classes, hall_system, EquivalenceChecker};
use acg_core::chartab::character_table;
use acg_core::perm::GroupFile;
use acg_core::report::Witness;
use acg_core::structure::{centralizer, derived_subgroup, is_solvable, nilpotency_class};
use acg_core::{Error, PermGroup, Permutation, ReportBuilder, VerificationReport};
use anyhow::Context;

use crate::outcome::Outcome;

pub fn run(file: &Path, element: Option<&str>, emit_chartab: bool, out: Option<&Path>) -> anyhow::Result<Outcome> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let parsed = GroupFile::parse(&text).with_context(|| format!("parsing {}", file.display()))?;
    let g = parsed.group;
    let element = element
        .map(|s| Permutation::parse(s, g.degree()).with_context(|| format!("parsing element `{s}`")))
        .transpose()?;
    if let Some(a) = &element {
        g.check_member(a).context("--element")?;
    }

    let report = analyze(&g, element.as_ref(), emit_chartab)?;
    if let Some(path) = out {
        fs::write(path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(Outcome::of_report(&report))
}

fn analyze(g: &PermGroup, element: Option<&Permutation>, emit_chartab: bool) -> anyhow::Result<VerificationReport> {
    let mut b = ReportBuilder::new(g, "analyze");
    let derived = derived_subgroup(g);
    let solvable = is_solvable(g);
    println!("group: {}", g.name().unwrap_or("unnamed"));
    println!("degree: {}", g.degree());
    println!("|G| = {}", g.order());
    println!("|G'| = {}", derived.order());
    println!("|G:G'| = {}", g.order() / derived.order());
    println!("solvable: {solvable}");

    let outcome = match element {
        Some(a) => analyze_element(g, a, solvable),
        None => analyze_classes(g, solvable),
    };
    b.absorb("analyze", "anticentral analysis", outcome)?;

    if emit_chartab {
        match character_table(g) {
            Ok(t) => {
                b.dixon_prime(t.prime());
                println!("character table:");
                print!("{}", t.export());
            }
            Err(e @ Error::Capacity { .. }) => {
                println!("character table: skipped ({e})");
                b.skip_capacity("character-table", "character table export", e.to_string());
            }
            Err(e) => return Err(e.into()),
        }
    }
    let report = b.into_report();
    for r in report.checks.iter().filter(|c| c.status != acg_core::CheckStatus::Pass) {
        println!("{}: {} ({})", r.status, r.id, r.detail);
    }
    Ok(report)
}

fn analyze_classes(g: &PermGroup, solvable: bool) -> acg_core::Result<VerificationReport> {
    let classes = find_anticentral_classes(g)?;
    let mut sub = ReportBuilder::new(g, "analyze");
    if classes.is_empty() {
        println!("no anticentral elements");
    } else {
        println!("anticentral classes: {}", classes.len());
    }
    let checker = EquivalenceChecker::new(g, false)?;
    for c in &classes {
        println!("class of {} (size {})", c.representative, c.size);
        describe(g, &c.representative, solvable, &checker, &mut sub)?;
    }
    sub.pass(
        "anticentral-classes",
        "anticentral classes found",
        format!("{} classes", classes.len()),
    );
    sub.finish()
}

fn analyze_element(g: &PermGroup, a: &Permutation, solvable: bool) -> acg_core::Result<VerificationReport> {
    let checker = EquivalenceChecker::new(g, false)?;
    let mut sub = ReportBuilder::new(g, "analyze");
    let cert = checker.certificate(a)?;
    println!("element {a}: anticentral: {}", cert.is_anticentral());
    if cert.is_anticentral() {
        describe(g, a, solvable, &checker, &mut sub)?;
    } else {
        println!("  centralizer order: {}", cert.centralizer_order);
        sub.check(
            "conditions-agree",
            "the equivalent conditions agree",
            cert.conditions_agree(),
            format!("{cert:?}"),
            || Witness::element(a),
        );
    }
    sub.finish()
}

fn describe(
    g: &PermGroup,
    a: &Permutation,
    solvable: bool,
    checker: &EquivalenceChecker,
    b: &mut ReportBuilder,
) -> acg_core::Result<()> {
    let cert = checker.certificate(a)?;
    b.check(
        "conditions-agree",
        "the equivalent conditions agree",
        cert.conditions_agree(),
        format!("at {a}"),
        || Witness::element(a),
    );
    println!("  centralizer order: {}", centralizer(g, a)?.order());
    let chain = c_chain(g, a)?;
    let class = nilpotency_class(&chain.limit);
    println!(
        "  D = C^inf(a): order {}, nilpotency class {}",
        chain.limit.order(),
        class.map_or_else(|| "none".to_string(), |c| c.to_string())
    );
    b.check(
        "limit-nilpotent",
        "the C-chain limit is nilpotent",
        class.is_some(),
        format!("at {a}"),
        || Witness::element(a).with_subgroup(&chain.limit),
    );
    if solvable && g.order() > 1 {
        let hall = hall_system(g, g, a)?;
        let parts: Vec<String> = hall
            .subgroups
            .iter()
            .filter(|(pi, _)| !pi.is_empty())
            .map(|(pi, h)| format!("{pi:?}: {}", h.order()))
            .collect();
        println!("  a-invariant Hall system: {}", parts.join(", "));
    }
    Ok(())
}
