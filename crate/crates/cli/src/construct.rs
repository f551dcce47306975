use std::fs;
use std::path::{Path, PathBuf};

use acg_core::perm::GroupFile;
use acg_core::zoo::{construct, Params, FAMILIES};
use anyhow::{anyhow, bail, Context};

use crate::outcome::Outcome;

const USAGE: &str = "usage: acg construct <family> [--key value | key=value]... -o <file>
families and parameters:
  abelian               factors=4,2
  two-generated-2group  kind=dihedral|quaternion|semidihedral order=2^k
  extraspecial          p=<prime> order=p^3|p^5 exponent=p|p2 (plus|minus for p=2)
  unitriangular         n=<int> q=<prime power>
  central-product       kind=D8|Q8
  fpf-semidirect        factors=<odd orders, comma separated>
  metacyclic            m s t r
  classical             kind=symmetric|alternating (n), frobenius (p d), wreath (p), psl27, sl23";

/// Split `--key value`, `--key=value`, `key=value` and `-o <file>` tokens.
fn parse_params(tokens: &[String]) -> anyhow::Result<(Params, Option<PathBuf>)> {
    let mut params = Params::new();
    let mut out = None;
    let mut it = tokens.iter();
    while let Some(tok) = it.next() {
        if tok == "-o" || tok == "--out" {
            let path = it.next().ok_or_else(|| anyhow!("`{tok}` needs a file name"))?;
            out = Some(PathBuf::from(path));
            continue;
        }
        let (key, value) = if let Some(rest) = tok.strip_prefix("--") {
            match rest.split_once('=') {
                Some((k, v)) => (k.to_string(), v.to_string()),
                None => {
                    let v = it.next().ok_or_else(|| anyhow!("parameter `--{rest}` needs a value"))?;
                    (rest.to_string(), v.clone())
                }
            }
        } else if let Some((k, v)) = tok.split_once('=') {
            (k.to_string(), v.to_string())
        } else {
            bail!("unexpected argument `{tok}`");
        };
        if params.insert(key.clone(), value).is_some() {
            bail!("parameter `{key}` given twice");
        }
    }
    Ok((params, out))
}

fn sidecar(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}

pub fn run(family: &str, tokens: &[String]) -> anyhow::Result<Outcome> {
    let result = build(family, tokens);
    if result.is_err() {
        eprintln!("{USAGE}");
    }
    result
}

fn build(family: &str, tokens: &[String]) -> anyhow::Result<Outcome> {
    if !FAMILIES.contains(&family) {
        bail!("unknown family `{family}` (known: {})", FAMILIES.join(", "));
    }
    let (params, out) = parse_params(tokens)?;
    let out = out.ok_or_else(|| anyhow!("missing `-o <file>`"))?;
    let z = construct(family, &params)?;
    let text = GroupFile::new(z.name(), z.group.clone()).to_text();
    fs::write(&out, text).with_context(|| format!("writing {}", out.display()))?;
    let manifest_path = sidecar(&out);
    fs::write(&manifest_path, z.manifest.to_json())
        .with_context(|| format!("writing {}", manifest_path.display()))?;

    println!("wrote {} ({}, order {}, degree {})", out.display(), z.name(), z.group.order(), z.group.degree());
    println!("wrote {}", manifest_path.display());
    if let Some(a) = &z.designated {
        println!("designated element: {a}");
    }
    let expected = serde_json::to_value(&z.manifest.expected)?;
    if let Some(map) = expected.as_object() {
        for (k, v) in map {
            println!("expected {k}: {v}");
        }
    }
    Ok(Outcome::Pass)
}

pub fn manifest_path(group_file: &Path) -> PathBuf {
    sidecar(group_file)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn parameter_forms() {
        let (p, out) = parse_params(&toks("--n 4 q=2 -o g.grp")).unwrap();
        assert_eq!(p["n"], "4");
        assert_eq!(p["q"], "2");
        assert_eq!(out, Some(PathBuf::from("g.grp")));
        let (p, out) = parse_params(&toks("--kind=alternating --n 5")).unwrap();
        assert_eq!((p["kind"].as_str(), p["n"].as_str(), out), ("alternating", "5", None));
        assert!(parse_params(&toks("--n")).is_err());
        assert!(parse_params(&toks("n=1 n=2")).is_err());
        assert!(parse_params(&toks("stray")).is_err());
    }

    #[test]
    fn sidecar_name() {
        assert_eq!(sidecar(Path::new("dir/a.grp")), PathBuf::from("dir/a.grp.manifest.json"));
    }
}
