//! Deterministic constructors for standard test groups, each paired with a
//! manifest of expected properties that is re-checked on construction.

mod families;
mod field;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use families::{
    abelian_group, affine_cyclic, alternating, central_product_sl23_e, direct_product,
    extraspecial, fpf_semidirect, frobenius, metacyclic, psl27, sl23, symmetric,
    two_generated_2group, unitriangular, wreath_pp, ExponentType, OrderEightKind, TwoGroupKind,
    DEGREE_BUDGET,
};
pub use field::GaloisField;

use crate::anticentral::{class_size, find_anticentral_classes, is_anticentral};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};
use crate::report::{ReportBuilder, VerificationReport, Witness};
use crate::structure::{center, derived_subgroup, is_solvable, nilpotency_class};

/// Properties a constructed group is expected to have. Absent entries are
/// not checked.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedProperties {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derived_order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub commutator_index: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center_order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nilpotency_class: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solvable: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub has_anticentral: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub designated_anticentral: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub designated_centralizer_order: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupManifest {
    pub schema_version: u32,
    pub name: String,
    pub family: String,
    pub params: BTreeMap<String, String>,
    /// A distinguished element in cycle notation, when the family has one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub designated: Option<String>,
    pub expected: ExpectedProperties,
}

impl GroupManifest {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format {
            line: e.line(),
            message: e.to_string(),
        })
    }
}

/// A constructed group with its manifest.
#[derive(Debug, Clone)]
pub struct ZooGroup {
    pub group: PermGroup,
    pub designated: Option<Permutation>,
    pub manifest: GroupManifest,
}

impl ZooGroup {
    /// Fails with a theorem violation when an expected property does not hold.
    pub fn new(
        name: &str,
        family: &str,
        params: &[(&str, String)],
        group: PermGroup,
        designated: Option<Permutation>,
        expected: ExpectedProperties,
    ) -> Result<Self> {
        let z = ZooGroup {
            group: group.with_name(name),
            manifest: GroupManifest {
                schema_version: crate::report::SCHEMA_VERSION,
                name: name.to_string(),
                family: family.to_string(),
                params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
                designated: designated.as_ref().map(|a| a.to_string()),
                expected,
            },
            designated,
        };
        z.check_manifest()?;
        Ok(z)
    }

    pub fn name(&self) -> &str {
        &self.manifest.name
    }

    /// Re-check every expected entry.
    pub fn check_manifest(&self) -> Result<VerificationReport> {
        manifest_report(&self.group, &self.manifest, self.designated.as_ref())
    }
}

/// Check a manifest against a group; the designated element is parsed from
/// the manifest when not supplied.
pub fn manifest_report(
    g: &PermGroup,
    manifest: &GroupManifest,
    designated: Option<&Permutation>,
) -> Result<VerificationReport> {
    let e = &manifest.expected;
    let mut b = ReportBuilder::new(g, "manifest");
    let mut cmp = |id: &str, what: &str, expected: Option<String>, actual: &dyn Fn() -> Result<String>| -> Result<()> {
        if let Some(want) = expected {
            let got = actual()?;
            b.check(id, what, got == want, format!("expected {want}, found {got}"), || Witness::subgroup(g));
        }
        Ok(())
    };
    let s = |x: Option<u64>| x.map(|v| v.to_string());
    cmp("order", "group order", s(e.order), &|| Ok(g.order().to_string()))?;
    cmp("derived-order", "order of G'", s(e.derived_order), &|| Ok(derived_subgroup(g).order().to_string()))?;
    cmp("commutator-index", "|G:G'|", s(e.commutator_index), &|| {
        Ok((g.order() / derived_subgroup(g).order()).to_string())
    })?;
    cmp("center-order", "order of Z(G)", s(e.center_order), &|| Ok(center(g)?.order().to_string()))?;
    cmp(
        "nilpotency-class",
        "nilpotency class",
        e.nilpotency_class.map(|c| c.to_string()),
        &|| Ok(format!("{}", nilpotency_class(g).map_or(-1, |c| c as i64))),
    )?;
    cmp("solvable", "solvability", e.solvable.map(|v| v.to_string()), &|| Ok(is_solvable(g).to_string()))?;
    cmp(
        "has-anticentral",
        "existence of anticentral elements",
        e.has_anticentral.map(|v| v.to_string()),
        &|| Ok((!find_anticentral_classes(g)?.is_empty()).to_string()),
    )?;
    let parsed;
    let a = match designated {
        Some(a) => Some(a),
        None => match &manifest.designated {
            Some(text) => {
                parsed = Permutation::parse(text, g.degree())?;
                Some(&parsed)
            }
            None => None,
        },
    };
    if let Some(a) = a {
        cmp(
            "designated-anticentral",
            "designated element is anticentral",
            e.designated_anticentral.map(|v| v.to_string()),
            &|| Ok(is_anticentral(g, a)?.to_string()),
        )?;
        cmp(
            "designated-centralizer-order",
            "centralizer order of the designated element",
            s(e.designated_centralizer_order),
            &|| {
                g.check_member(a)?;
                Ok((g.order() / class_size(g, a)).to_string())
            },
        )?;
    }
    b.finish()
}

/// String parameters keyed by name.
pub type Params = BTreeMap<String, String>;

fn param<T: std::str::FromStr>(params: &Params, key: &str) -> Result<T> {
    let raw = params
        .get(key)
        .ok_or_else(|| Error::InvalidParameters(format!("missing parameter `{key}`")))?;
    raw.parse()
        .map_err(|_| Error::InvalidParameters(format!("bad value `{raw}` for `{key}`")))
}

fn list(params: &Params, key: &str) -> Result<Vec<u64>> {
    let raw = params
        .get(key)
        .ok_or_else(|| Error::InvalidParameters(format!("missing parameter `{key}`")))?;
    if raw.trim().is_empty() {
        return Ok(Vec::new());
    }
    raw.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::InvalidParameters(format!("bad list entry `{t}` for `{key}`")))
        })
        .collect()
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Family names accepted by [`construct`].
pub const FAMILIES: &[&str] = &[
    "abelian",
    "two-generated-2group",
    "extraspecial",
    "unitriangular",
    "central-product",
    "fpf-semidirect",
    "metacyclic",
    "classical",
];

pub fn abelian(factors: &[u64]) -> Result<ZooGroup> {
    let g = abelian_group(factors)?;
    let order: u64 = factors.iter().product();
    let name = if factors.is_empty() {
        "trivial".to_string()
    } else {
        factors.iter().map(|f| format!("C{f}")).collect::<Vec<_>>().join("x")
    };
    ZooGroup::new(
        &name,
        "abelian",
        &[("factors", join(factors))],
        g,
        None,
        ExpectedProperties {
            order: Some(order),
            derived_order: Some(1),
            has_anticentral: Some(true),
            ..Default::default()
        },
    )
}

pub fn maximal_class_2group(kind: TwoGroupKind, order: u64) -> Result<ZooGroup> {
    let g = two_generated_2group(kind, order)?;
    let prefix = match kind {
        TwoGroupKind::Dihedral => "D",
        TwoGroupKind::Quaternion => "Q",
        TwoGroupKind::Semidihedral => "SD",
    };
    let kind_name = format!("{kind:?}").to_lowercase();
    ZooGroup::new(
        &format!("{prefix}{order}"),
        "two-generated-2group",
        &[("kind", kind_name), ("order", order.to_string())],
        g,
        None,
        ExpectedProperties {
            order: Some(order),
            commutator_index: Some(4),
            nilpotency_class: Some(order.trailing_zeros() as usize - 1),
            has_anticentral: Some(true),
            ..Default::default()
        },
    )
}

pub fn extraspecial_group(p: u64, order: u64, kind: ExponentType) -> Result<ZooGroup> {
    let g = extraspecial(p, order, kind)?;
    let tag = match (p, kind) {
        (2, ExponentType::Small) => "plus",
        (2, ExponentType::Large) => "minus",
        (_, ExponentType::Small) => "p",
        (_, ExponentType::Large) => "p2",
    };
    ZooGroup::new(
        &format!("extraspecial-{order}-{tag}"),
        "extraspecial",
        &[("p", p.to_string()), ("order", order.to_string()), ("exponent", tag.to_string())],
        g,
        None,
        ExpectedProperties {
            order: Some(order),
            derived_order: Some(p),
            center_order: Some(p),
            nilpotency_class: Some(2),
            has_anticentral: Some(true),
            ..Default::default()
        },
    )
}

pub fn unitriangular_group(n: usize, q: u64) -> Result<ZooGroup> {
    let (g, a) = unitriangular(n, q)?;
    let e = (n * (n - 1) / 2) as u32;
    ZooGroup::new(
        &format!("UT({n},{q})"),
        "unitriangular",
        &[("n", n.to_string()), ("q", q.to_string())],
        g,
        Some(a),
        ExpectedProperties {
            order: Some(q.pow(e)),
            commutator_index: Some(q.pow(n as u32 - 1)),
            designated_anticentral: Some(true),
            designated_centralizer_order: Some(q.pow(n as u32 - 1)),
            ..Default::default()
        },
    )
}

pub fn sl23_central_product(kind: OrderEightKind) -> Result<ZooGroup> {
    let (g, a) = central_product_sl23_e(kind)?;
    ZooGroup::new(
        &format!("SL(2,3)o{kind:?}"),
        "central-product",
        &[("kind", format!("{kind:?}"))],
        g,
        Some(a),
        ExpectedProperties {
            order: Some(96),
            derived_order: Some(8),
            commutator_index: Some(12),
            designated_anticentral: Some(true),
            designated_centralizer_order: Some(12),
            ..Default::default()
        },
    )
}

pub fn inversion_semidirect(factors: &[u64]) -> Result<ZooGroup> {
    let (g, alpha) = fpf_semidirect(factors)?;
    let n: u64 = factors.iter().product();
    let name = match factors {
        [3] => "S3".to_string(),
        [f] => format!("D{}", 2 * f),
        _ => format!("Dih({})", factors.iter().map(|f| format!("C{f}")).collect::<Vec<_>>().join("x")),
    };
    ZooGroup::new(
        &name,
        "fpf-semidirect",
        &[("factors", join(factors))],
        g,
        Some(alpha),
        ExpectedProperties {
            order: Some(2 * n),
            derived_order: Some(n),
            designated_anticentral: Some(true),
            designated_centralizer_order: Some(2),
            ..Default::default()
        },
    )
}

pub fn metacyclic_group(m: u64, s: u64, t: u64, r: u64) -> Result<ZooGroup> {
    let (g, _, y) = metacyclic(m, s, t, r)?;
    ZooGroup::new(
        &format!("Meta({m},{s},{t},{r})"),
        "metacyclic",
        &[("m", m.to_string()), ("s", s.to_string()), ("t", t.to_string()), ("r", r.to_string())],
        g,
        Some(y),
        ExpectedProperties {
            order: Some(m * s),
            ..Default::default()
        },
    )
}

pub fn classical_group(kind: &str, params: &Params) -> Result<ZooGroup> {
    let nonsolvable = ExpectedProperties {
        solvable: Some(false),
        has_anticentral: Some(false),
        ..Default::default()
    };
    match kind {
        "symmetric" | "alternating" => {
            let n: usize = param(params, "n")?;
            let (g, name, order) = if kind == "symmetric" {
                (symmetric(n)?, format!("S{n}"), (1..=n as u64).product::<u64>())
            } else {
                (alternating(n)?, format!("A{n}"), ((1..=n as u64).product::<u64>() / 2).max(1))
            };
            let expected = if n >= 5 {
                ExpectedProperties { order: Some(order), ..nonsolvable }
            } else {
                ExpectedProperties { order: Some(order), ..Default::default() }
            };
            ZooGroup::new(&name, "classical", &[("kind", kind.into()), ("n", n.to_string())], g, None, expected)
        }
        "frobenius" => {
            let p: u64 = param(params, "p")?;
            let d: u64 = param(params, "d")?;
            let (g, y) = frobenius(p, d)?;
            ZooGroup::new(
                &format!("F{}", p * d),
                "classical",
                &[("kind", kind.into()), ("p", p.to_string()), ("d", d.to_string())],
                g,
                Some(y),
                ExpectedProperties {
                    order: Some(p * d),
                    designated_anticentral: Some(d > 1),
                    ..Default::default()
                },
            )
        }
        "wreath" | "wreath_pp" | "wreath-pp" => {
            let p: u64 = param(params, "p")?;
            ZooGroup::new(
                &format!("C{p}wrC{p}"),
                "classical",
                &[("kind", "wreath".into()), ("p", p.to_string())],
                wreath_pp(p)?,
                None,
                ExpectedProperties {
                    order: Some(p.pow(p as u32 + 1)),
                    nilpotency_class: Some(p as usize),
                    has_anticentral: Some(true),
                    ..Default::default()
                },
            )
        }
        "psl27" | "psl(2,7)" => ZooGroup::new(
            "PSL(2,7)",
            "classical",
            &[("kind", "psl27".into())],
            psl27(),
            None,
            ExpectedProperties { order: Some(168), ..nonsolvable },
        ),
        "sl23" | "sl(2,3)" => ZooGroup::new(
            "SL(2,3)",
            "classical",
            &[("kind", "sl23".into())],
            sl23().0,
            None,
            ExpectedProperties { order: Some(24), derived_order: Some(8), ..Default::default() },
        ),
        _ => Err(Error::InvalidParameters(format!(
            "unknown classical kind `{kind}` (symmetric, alternating, frobenius, wreath, psl27, sl23)"
        ))),
    }
}

/// Build a family member from string parameters.
pub fn construct(family: &str, params: &Params) -> Result<ZooGroup> {
    match family {
        "abelian" => abelian(&list(params, "factors")?),
        "two-generated-2group" => maximal_class_2group(param(params, "kind")?, param(params, "order")?),
        "extraspecial" => {
            let exponent = params.get("exponent").map(String::as_str).unwrap_or("p");
            extraspecial_group(param(params, "p")?, param(params, "order")?, exponent.parse()?)
        }
        "unitriangular" => unitriangular_group(param(params, "n")?, param(params, "q")?),
        "central-product" => sl23_central_product(param(params, "kind")?),
        "fpf-semidirect" => inversion_semidirect(&list(params, "factors")?),
        "metacyclic" => metacyclic_group(
            param(params, "m")?,
            param(params, "s")?,
            param(params, "t")?,
            param(params, "r")?,
        ),
        "classical" => {
            let kind: String = param(params, "kind")?;
            classical_group(&kind.to_ascii_lowercase(), params)
        }
        _ => Err(Error::InvalidParameters(format!(
            "unknown family `{family}`; expected one of {}",
            FAMILIES.join(", ")
        ))),
    }
}

fn product(a: ZooGroup, b: ZooGroup, expected: ExpectedProperties) -> Result<ZooGroup> {
    let g = direct_product(&a.group, &b.group);
    let designated = match (&a.designated, &b.designated) {
        (Some(x), Some(y)) => Some(x.direct_sum(y)),
        _ => None,
    };
    let name = format!("{}x{}", a.name(), b.name());
    ZooGroup::new(
        &name,
        "direct-product",
        &[("left", a.name().to_string()), ("right", b.name().to_string())],
        g,
        designated,
        expected,
    )
}

fn kv(pairs: &[(&str, &str)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

/// The builtin corpus, in a fixed order.
pub fn builtin_corpus() -> Result<Vec<ZooGroup>> {
    use ExponentType::{Large, Small};
    use TwoGroupKind::{Dihedral, Quaternion, Semidihedral};
    let s3 = || inversion_semidirect(&[3]);
    let a4 = || classical_group("alternating", &kv(&[("n", "4")]));
    let mut corpus = vec![
        abelian(&[])?,
        abelian(&[6])?,
        abelian(&[2, 2])?,
        abelian(&[4, 2])?,
        s3()?,
        inversion_semidirect(&[5])?,
        inversion_semidirect(&[3, 3])?,
        maximal_class_2group(Dihedral, 8)?,
        maximal_class_2group(Quaternion, 8)?,
        maximal_class_2group(Dihedral, 16)?,
        maximal_class_2group(Quaternion, 16)?,
        maximal_class_2group(Semidihedral, 16)?,
        extraspecial_group(3, 27, Small)?,
        extraspecial_group(3, 27, Large)?,
        extraspecial_group(2, 32, Small)?,
        extraspecial_group(2, 32, Large)?,
        extraspecial_group(3, 243, Small)?,
    ];
    for (n, q) in [(3, 2), (3, 3), (4, 2), (4, 3), (5, 2)] {
        corpus.push(unitriangular_group(n, q)?);
    }
    corpus.push(sl23_central_product(OrderEightKind::D8)?);
    corpus.push(sl23_central_product(OrderEightKind::Q8)?);
    corpus.push(product(
        s3()?,
        s3()?,
        ExpectedProperties {
            order: Some(36),
            designated_anticentral: Some(true),
            ..Default::default()
        },
    )?);
    // S3 x A4 with the designated element (transposition, 3-cycle)
    let mut a4z = a4()?;
    a4z.designated = Some(Permutation::parse("(1 2 3)", 4)?);
    corpus.push(product(
        s3()?,
        a4z,
        ExpectedProperties {
            order: Some(72),
            designated_anticentral: Some(true),
            ..Default::default()
        },
    )?);
    corpus.push(a4()?);
    corpus.push(classical_group("symmetric", &kv(&[("n", "4")]))?);
    corpus.push(classical_group("alternating", &kv(&[("n", "5")]))?);
    corpus.push(classical_group("symmetric", &kv(&[("n", "5")]))?);
    corpus.push(classical_group("psl27", &Params::new())?);
    corpus.push(classical_group("frobenius", &kv(&[("p", "7"), ("d", "3")]))?);
    corpus.push(classical_group("frobenius", &kv(&[("p", "5"), ("d", "4")]))?);
    corpus.push(classical_group("wreath", &kv(&[("p", "3")]))?);
    corpus.push(classical_group("sl23", &Params::new())?);
    Ok(corpus)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construct_dispatch() {
        let g = construct("unitriangular", &kv(&[("n", "4"), ("q", "2")])).unwrap();
        assert_eq!(g.group.order(), 64);
        assert_eq!(g.manifest.expected.designated_centralizer_order, Some(8));
        let h = construct("extraspecial", &kv(&[("p", "3"), ("order", "27"), ("exponent", "p")])).unwrap();
        assert_eq!(h.group.order(), 27);
        let a5 = construct("classical", &kv(&[("kind", "alternating"), ("n", "5")])).unwrap();
        assert_eq!(a5.name(), "A5");
        assert!(construct("nonsense", &Params::new()).is_err());
        assert!(construct("classical", &kv(&[("kind", "frobenius"), ("p", "7"), ("d", "4")])).is_err());
    }

    #[test]
    fn corpus_builds() {
        let corpus = builtin_corpus().unwrap();
        assert!(corpus.len() >= 25);
        let mut names: Vec<&str> = corpus.iter().map(|z| z.name()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), corpus.len());
        assert!(corpus.iter().all(|z| z.group.order() <= 2000));
    }

    #[test]
    fn manifest_round_trip() {
        let g = construct("central-product", &kv(&[("kind", "Q8")])).unwrap();
        let back = GroupManifest::from_json(&g.manifest.to_json()).unwrap();
        assert_eq!(back, g.manifest);
        assert!(manifest_report(&g.group, &back, None).unwrap().all_passed());
        let mut wrong = back.clone();
        wrong.expected.order = Some(97);
        assert!(manifest_report(&g.group, &wrong, None).unwrap_err().is_theorem_violation());
    }
}
