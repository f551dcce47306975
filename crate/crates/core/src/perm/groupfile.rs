//! Plain-text group files.
//!
//! ```text
//! name: S3
//! degree: 3
//! # generators, one per line, in cycle notation
//! (1 2 3)
//! (1 2)
//! ```

use std::fmt::Write as _;

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct GroupFile {
    pub name: String,
    pub group: PermGroup,
}

impl GroupFile {
    pub fn new(name: impl Into<String>, group: PermGroup) -> Self {
        let name = name.into();
        let group = group.with_name(name.clone());
        GroupFile { name, group }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut name: Option<String> = None;
        let mut degree: Option<usize> = None;
        let mut gens = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Format {
                line: line_no,
                message,
            };
            if let Some(rest) = line.strip_prefix("name:") {
                if name.is_some() {
                    return Err(err("duplicate `name:` line".into()));
                }
                if degree.is_some() || !gens.is_empty() {
                    return Err(err("`name:` must come first".into()));
                }
                name = Some(rest.trim().to_string());
            } else if let Some(rest) = line.strip_prefix("degree:") {
                if degree.is_some() {
                    return Err(err("duplicate `degree:` line".into()));
                }
                if name.is_none() {
                    return Err(err("`degree:` before `name:`".into()));
                }
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("invalid degree {:?}", rest.trim())))?;
                if n == 0 {
                    return Err(err("degree must be positive".into()));
                }
                degree = Some(n);
            } else {
                let Some(n) = degree else {
                    return Err(err("generator before `name:` and `degree:` header".into()));
                };
                let p = Permutation::parse(line, n).map_err(|e| match e {
                    Error::Parse { offset, message } => {
                        err(format!("column {}: {message}", offset + 1))
                    }
                    other => other,
                })?;
                gens.push(p);
            }
        }
        let name = name.ok_or(Error::Format {
            line: 1,
            message: "missing `name:` line".into(),
        })?;
        let degree = degree.ok_or(Error::Format {
            line: 2,
            message: "missing `degree:` line".into(),
        })?;
        let group = PermGroup::new(degree, gens)?;
        Ok(GroupFile::new(name, group))
    }

    /// Canonical text: header, then one generator per line with cycles sorted
    /// by least point. Identity generators are dropped.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "name: {}", self.name);
        let _ = writeln!(s, "degree: {}", self.group.degree());
        for g in self.group.generators() {
            let _ = writeln!(s, "{g}");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_s3() {
        let f = GroupFile::parse("name: S3\ndegree: 3\n(1 2 3)\n(1 2)\n").unwrap();
        assert_eq!(f.name, "S3");
        assert_eq!(f.group.order(), 6);
        assert_eq!(f.group.name(), Some("S3"));
    }

    #[test]
    fn empty_generator_section_is_trivial() {
        let f = GroupFile::parse("name: T\ndegree: 4\n").unwrap();
        assert_eq!(f.group.order(), 1);
        assert_eq!(f.group.degree(), 4);
    }

    #[test]
    fn duplicate_degree_reports_its_line() {
        let e = GroupFile::parse("name: X\ndegree: 3\n(1 2)\ndegree: 4\n").unwrap_err();
        assert!(matches!(e, Error::Format { line: 4, .. }), "{e:?}");
    }

    #[test]
    fn comments_and_canonical_form() {
        let text = "# a comment\nname: G\ndegree: 5 # trailing\n\n(3 1 2)(5 4)\n()\n(2 1)\n";
        let f = GroupFile::parse(text).unwrap();
        assert_eq!(f.to_text(), "name: G\ndegree: 5\n(1 2 3)(4 5)\n(1 2)\n");
        let again = GroupFile::parse(&f.to_text()).unwrap();
        assert_eq!(again.to_text(), f.to_text());
    }

    #[test]
    fn bad_generator_reports_line() {
        let e = GroupFile::parse("name: X\ndegree: 3\n(1 2)\n(1 4)\n").unwrap_err();
        assert!(matches!(e, Error::Format { line: 4, .. }), "{e:?}");
    }
}
