//! Acceptance run: one line per criterion, nonzero exit on any failure.

mod common;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use acg_core::anticentral::{find_anticentral_classes, is_anticentral, REGIME_EXHAUSTIVE, REGIME_SAMPLED};
use acg_core::par::Exec;
use acg_core::report::CheckStatus;
use acg_core::structure::{centralizer, conjugacy_classes, derived_subgroup, is_solvable, sylow_subgroup};
use acg_core::suites::{run_suite, Suite, SuiteConfig};
use acg_core::zoo::{
    builtin_corpus, extraspecial_group, maximal_class_2group, sl23_central_product, unitriangular_group,
    ExponentType, OrderEightKind, TwoGroupKind, ZooGroup,
};
use acg_core::{PermGroup, VerificationReport};
use common::{img, Img, Oracle};

const CORPUS_MIN_GROUPS: usize = 25;
const CORPUS_MAX_ORDER: u64 = 2000;
const CHARACTER_MAX_ORDER: u64 = 300;
const EXHAUSTIVE_MAX_ORDER: u64 = 500;
const CHIEF_MAX_ORDER: u64 = 1000;

const BUDGET_EQUIVALENCES: Duration = Duration::from_secs(120);
const BUDGET_ORDER_96: Duration = Duration::from_secs(10);
const BUDGET_UNITRIANGULAR: Duration = Duration::from_secs(30);
const BUDGET_ORACLE: Duration = Duration::from_secs(300);

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t <= budget, || format!("took {t:?}, budget {budget:?}"))?;
    Ok(t)
}

fn passed(r: &VerificationReport) -> Result<usize, String> {
    ensure(!r.has_failures(), || r.failure_summary())?;
    ensure(!r.has_capacity_skips(), || format!("{} / {}: capacity skips", r.group, r.suite))?;
    Ok(r.count(CheckStatus::Pass))
}

fn suite(s: Suite, g: &PermGroup) -> Result<VerificationReport, String> {
    let config = SuiteConfig {
        exec: Exec::Parallel,
        ..SuiteConfig::default()
    };
    run_suite(s, g, &config).map_err(|e| format!("{}: {e}", g.name().unwrap_or("?")))
}

fn has_anticentral(g: &PermGroup) -> bool {
    !find_anticentral_classes(g).unwrap().is_empty()
}

fn equivalences(corpus: &[ZooGroup]) -> Outcome {
    let start = Instant::now();
    ensure(corpus.len() >= CORPUS_MIN_GROUPS, || format!("only {} groups", corpus.len()))?;
    ensure(
        corpus.iter().all(|z| (1..=CORPUS_MAX_ORDER).contains(&z.group.order())),
        || "corpus order out of range".into(),
    )?;
    let mut elements = 0u64;
    let mut with_chars = 0;
    for z in corpus {
        let r = suite(Suite::Equivalences, &z.group)?;
        passed(&r)?;
        elements += z.group.order();
        with_chars += usize::from(z.group.order() <= CHARACTER_MAX_ORDER);
    }
    let t = within(start, BUDGET_EQUIVALENCES)?;
    Ok(format!(
        "{} groups, {elements} elements, {with_chars} with character condition, {t:.1?}",
        corpus.len()
    ))
}

fn order_96() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for kind in [OrderEightKind::D8, OrderEightKind::Q8] {
        let z = sl23_central_product(kind).map_err(|e| e.to_string())?;
        let g = &z.group;
        let d = derived_subgroup(g);
        let involutions = d.elements().unwrap().iter().filter(|x| x.order() == 2).count();
        let a = z.designated.as_ref().ok_or("no designated element")?;
        let c = centralizer(g, a).unwrap().order();
        let oracle = Oracle::new(g);
        let brute = oracle.centralizer(&img(a)).len() as u64;
        ensure(g.order() == 96, || format!("|G| = {}", g.order()))?;
        ensure(g.order() / d.order() == 12, || format!("|G:G'| = {}", g.order() / d.order()))?;
        ensure(d.order() == 8 && involutions == 1, || {
            format!("|G'| = {}, {involutions} involutions", d.order())
        })?;
        ensure(c == 12 && brute == 12, || format!("|C(a)| = {c}, oracle {brute}"))?;
        notes.push(format!("{}: |C(a)| = {c}", z.name()));
    }
    let t = within(start, BUDGET_ORDER_96)?;
    Ok(format!("{}, {t:.1?}", notes.join(", ")))
}

fn extraspecial_law() -> Outcome {
    use ExponentType::{Large, Small};
    let cubes = [
        maximal_class_2group(TwoGroupKind::Dihedral, 8),
        maximal_class_2group(TwoGroupKind::Quaternion, 8),
        extraspecial_group(3, 27, Small),
    ];
    for z in cubes {
        let z = z.map_err(|e| e.to_string())?;
        let g = &z.group;
        let d = derived_subgroup(g);
        let oracle = Oracle::new(g);
        let index = oracle.commutator_index();
        for x in g.elements().unwrap().iter() {
            let expected = !d.contains(x);
            ensure(
                is_anticentral(g, x).unwrap() == expected && oracle.is_anticentral(&img(x), index) == expected,
                || format!("{}: {x} breaks the anticentral = G \\ G' law", z.name()),
            )?;
        }
    }
    let mut counts = Vec::new();
    for kind in [Small, Large] {
        let z = extraspecial_group(2, 32, kind).map_err(|e| e.to_string())?;
        let g = &z.group;
        let reps = find_anticentral_classes(g).unwrap();
        ensure(!reps.is_empty(), || format!("{}: no anticentral element", z.name()))?;
        for c in &reps {
            let a = &c.representative;
            let ca = centralizer(g, a).unwrap();
            ensure(!is_anticentral(&ca, a).unwrap(), || {
                format!("{}: {a} is anticentral in its centralizer", z.name())
            })?;
        }
        counts.push(format!("{}: {} anticentral classes", z.name(), reps.len()));
    }
    Ok(format!("D8, Q8, 27 law exact; {}", counts.join(", ")))
}

fn unitriangular_formula() -> Outcome {
    let start = Instant::now();
    for (n, q) in [(3usize, 2u64), (3, 3), (4, 2), (4, 3), (5, 2)] {
        let z = unitriangular_group(n, q).map_err(|e| e.to_string())?;
        let a = z.designated.as_ref().ok_or("no designated element")?;
        let order = q.pow((n * (n - 1) / 2) as u32);
        let c = q.pow(n as u32 - 1);
        let got = centralizer(&z.group, a).unwrap().order();
        let brute = Oracle::new(&z.group).centralizer(&img(a)).len() as u64;
        ensure(z.group.order() == order, || format!("UT({n},{q}): |G| = {}", z.group.order()))?;
        ensure(got == c && brute == c, || format!("UT({n},{q}): |C(a)| = {got}, oracle {brute}, want {c}"))?;
    }
    let t = within(start, BUDGET_UNITRIANGULAR)?;
    Ok(format!("5 cases, {t:.1?}"))
}

fn carter(corpus: &[ZooGroup]) -> Outcome {
    let (mut exhaustive, mut sampled, mut checks) = (0, 0, 0);
    for z in corpus.iter().filter(|z| has_anticentral(&z.group)) {
        let r = suite(Suite::Carter, &z.group)?;
        checks += passed(&r)?;
        let regime = r.engine.regime.as_deref().unwrap_or("");
        let want = if z.group.order() <= EXHAUSTIVE_MAX_ORDER {
            exhaustive += 1;
            REGIME_EXHAUSTIVE
        } else {
            sampled += 1;
            REGIME_SAMPLED
        };
        ensure(regime == want, || format!("{}: regime {regime}, want {want}", z.name()))?;
        checks += passed(&suite(Suite::Supplements, &z.group)?)?;
    }
    ensure(exhaustive > 0 && sampled > 0, || "a regime was not exercised".into())?;
    Ok(format!("{exhaustive} exhaustive, {sampled} sampled groups, {checks} checks"))
}

fn sylow_hall(corpus: &[ZooGroup]) -> Outcome {
    let (mut groups, mut checks) = (0, 0);
    for z in corpus
        .iter()
        .filter(|z| z.group.order() > 1 && is_solvable(&z.group) && has_anticentral(&z.group))
    {
        let r = suite(Suite::SylowHall, &z.group)?;
        checks += passed(&r)?;
        for id in ["unique-invariant-sylow", "limit-is-normalizer-meet", "hall-permutable"] {
            ensure(r.checks.iter().any(|c| c.id == id), || format!("{}: no `{id}` check", z.name()))?;
        }
        groups += 1;
    }
    Ok(format!("{groups} groups, {checks} checks"))
}

fn chief_and_solvability(corpus: &[ZooGroup]) -> Outcome {
    let (mut chief, mut checks) = (0, 0);
    for z in corpus {
        let g = &z.group;
        if is_solvable(g) && g.order() <= CHIEF_MAX_ORDER {
            let r = suite(Suite::ChiefFactors, g)?;
            ensure(r.checks.iter().any(|c| c.id == "chief-factor-criterion"), || {
                format!("{}: criterion not run", z.name())
            })?;
            checks += passed(&r)?;
            chief += 1;
        }
        checks += passed(&suite(Suite::InvariantClasses, g)?)?;
        checks += passed(&suite(Suite::Solvability, g)?)?;
    }
    for name in ["A5", "S5", "PSL(2,7)"] {
        let z = corpus.iter().find(|z| z.name() == name).ok_or_else(|| format!("{name} missing"))?;
        ensure(!has_anticentral(&z.group), || format!("{name} has anticentral elements"))?;
    }
    Ok(format!("{chief} solvable groups element by element, {checks} checks, A5 S5 PSL(2,7) empty"))
}

fn character_remark(corpus: &[ZooGroup]) -> Outcome {
    let mut groups = 0;
    for z in corpus
        .iter()
        .filter(|z| z.group.order() <= CHARACTER_MAX_ORDER && has_anticentral(&z.group))
    {
        let r = suite(Suite::Chartab, &z.group)?;
        passed(&r)?;
        let nonabelian = !z.group.is_abelian();
        ensure(
            !nonabelian || r.checks.iter().any(|c| c.id == "nonlinear-restrictions-reducible"),
            || format!("{}: remark not checked", z.name()),
        )?;
        groups += 1;
    }
    Ok(format!("{groups} groups"))
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn oracle_agreement(corpus: &[ZooGroup]) -> Outcome {
    let start = Instant::now();
    let mut classes_total = 0;
    for z in corpus {
        let g = &z.group;
        let name = z.name();
        let oracle = Oracle::new(g);
        ensure(g.order() == oracle.order(), || format!("{name}: order {} vs {}", g.order(), oracle.order()))?;
        ensure(common::set_of(g) == oracle.element_set(), || format!("{name}: element sets differ"))?;

        let brute_classes = oracle.classes();
        let classes = conjugacy_classes(g).unwrap();
        ensure(classes.len() == brute_classes.len(), || {
            format!("{name}: {} classes vs {}", classes.len(), brute_classes.len())
        })?;
        for cls in &brute_classes {
            let ids: HashSet<usize> = cls
                .iter()
                .map(|x| classes.class_index(&common::to_perm(x)).unwrap())
                .collect();
            ensure(ids.len() == 1, || format!("{name}: a class is split"))?;
            let id = *ids.iter().next().unwrap();
            ensure(classes.get(id).unwrap().size == cls.len() as u64, || format!("{name}: class size"))?;
            let a = common::to_perm(&cls[0]);
            let c = centralizer(g, &a).unwrap();
            let brute: HashSet<Img> = oracle.centralizer(&cls[0]).into_iter().collect();
            ensure(common::set_of(&c) == brute, || format!("{name}: centralizer of {a}"))?;
        }
        classes_total += brute_classes.len();

        let d = derived_subgroup(g);
        ensure(common::set_of(&d) == oracle.derived().element_set(), || format!("{name}: derived subgroup"))?;

        for p in prime_divisors(g.order()) {
            let s = sylow_subgroup(g, p).unwrap();
            let els: Vec<Img> = s.elements().unwrap().iter().map(img).collect();
            ensure(oracle.is_sylow(&els, p), || format!("{name}: Sylow {p}-subgroup"))?;
        }
    }
    let t = within(start, BUDGET_ORACLE)?;
    Ok(format!("{} groups, {classes_total} classes, {t:.1?}", corpus.len()))
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() {
    let corpus = builtin_corpus().expect("builtin corpus builds");
    let criteria: Vec<Criterion> = vec![
        ("anticentral conditions agree on every element", Box::new(|| equivalences(&corpus))),
        ("order-96 central product", Box::new(order_96)),
        ("extraspecial anticentral law", Box::new(extraspecial_law)),
        ("unitriangular centralizer formula", Box::new(unitriangular_formula)),
        ("C-chain limit is the Carter subgroup", Box::new(|| carter(&corpus))),
        ("invariant Sylows and Hall systems", Box::new(|| sylow_hall(&corpus))),
        ("chief factors and solvability", Box::new(|| chief_and_solvability(&corpus))),
        ("nonlinear restrictions to G'", Box::new(|| character_remark(&corpus))),
        ("brute-force oracle agreement", Box::new(|| oracle_agreement(&corpus))),
    ];
    let mut failures = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match &outcome {
            Ok(note) => println!("criterion {}: PASS  {title} ({note})", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL  {title}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
