//! Line-oriented text formats.
//!
//! ```text
//! # comment
//! order: 0 1 2
//! simplex: 0 1 2
//! ```
//!
//! Without an `order:` header the vertices are ordered numerically when every
//! label is an integer, and by first appearance otherwise.

use std::collections::BTreeSet;

use super::{SimplicialComplex, Subcomplex};
use crate::{Error, Result};

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn keyed<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    line.strip_prefix(key)
        .and_then(|rest| rest.trim_start().strip_prefix(':'))
        .map(str::trim)
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut order: Option<(usize, Vec<String>)> = None;
    let mut maximal: Vec<Vec<String>> = Vec::new();
    let mut seen: Vec<String> = Vec::new();
    for (n, line) in lines(text) {
        if let Some(rest) = keyed(line, "order") {
            if order.is_some() || !maximal.is_empty() {
                return Err(parse_err(n, "`order:` must be the first entry"));
            }
            order = Some((n, rest.split_whitespace().map(String::from).collect()));
        } else if let Some(rest) = keyed(line, "simplex") {
            let verts: Vec<String> = rest.split_whitespace().map(String::from).collect();
            if verts.is_empty() {
                return Err(parse_err(n, "empty simplex"));
            }
            let distinct: BTreeSet<&String> = verts.iter().collect();
            if distinct.len() != verts.len() {
                return Err(parse_err(n, "duplicate vertex in simplex"));
            }
            if let Some((_, o)) = &order {
                if let Some(bad) = verts.iter().find(|v| !o.contains(v)) {
                    return Err(parse_err(n, format!("vertex `{bad}` missing from the order header")));
                }
            }
            for v in &verts {
                if !seen.contains(v) {
                    seen.push(v.clone());
                }
            }
            maximal.push(verts);
        } else {
            return Err(parse_err(n, format!("unrecognised line `{line}`")));
        }
    }
    let order = match order {
        Some((n, o)) => {
            let distinct: BTreeSet<&String> = o.iter().collect();
            if distinct.len() != o.len() {
                return Err(parse_err(n, "duplicate vertex in the order header"));
            }
            if let Some(unknown) = o.iter().find(|v| !seen.contains(v)) {
                return Err(parse_err(n, format!("unknown vertex `{unknown}` in the order header")));
            }
            o
        }
        None => {
            if seen.iter().all(|v| v.parse::<i64>().is_ok()) {
                seen.sort_by_key(|v| v.parse::<i64>().expect("checked"));
            }
            seen
        }
    };
    SimplicialComplex::from_maximal(&order, &maximal)
}

pub fn serialize_complex(x: &SimplicialComplex) -> String {
    let mut out = format!("order: {}\n", x.order_labels().join(" "));
    for s in x.maximal_simplices() {
        let l: Vec<&str> = s.vertices().iter().map(|&v| x.label(v)).collect();
        out.push_str(&format!("simplex: {}\n", l.join(" ")));
    }
    out
}

/// `vertices: ...` lines (all unioned). `simplex: ...` lines are accepted only
/// when they describe a full subcomplex.
pub fn parse_subcomplex(text: &str, x: &SimplicialComplex) -> Result<Subcomplex> {
    let mut verts: BTreeSet<u32> = BTreeSet::new();
    let mut listed: BTreeSet<super::Simplex> = BTreeSet::new();
    let id = |n: usize, l: &str| x.vertex_id(l).ok_or_else(|| parse_err(n, format!("unknown vertex `{l}`")));
    for (n, line) in lines(text) {
        if let Some(rest) = keyed(line, "vertices") {
            for l in rest.split_whitespace() {
                verts.insert(id(n, l)?);
            }
        } else if let Some(rest) = keyed(line, "simplex") {
            let ids = rest.split_whitespace().map(|l| id(n, l)).collect::<Result<Vec<_>>>()?;
            let s = x
                .simplex(&ids)
                .ok_or_else(|| parse_err(n, "simplex not in the complex"))?;
            for f in s.faces() {
                listed.insert(f);
            }
            verts.extend(ids);
        } else {
            return Err(parse_err(n, format!("unrecognised line `{line}`")));
        }
    }
    let sub = Subcomplex::spanned_by(verts);
    if !listed.is_empty() {
        let spanned: BTreeSet<super::Simplex> = x.all_simplices().filter(|s| sub.contains(s)).cloned().collect();
        if let Some(extra) = spanned.iter().find(|s| !listed.contains(s)) {
            return Err(parse_err(
                0,
                format!("subcomplex is not full: {} is spanned but not listed", x.display(extra)),
            ));
        }
    }
    Ok(sub)
}

/// `map: v -> w` lines.
pub fn parse_map(text: &str) -> Result<Vec<(String, String)>> {
    lines(text)
        .map(|(n, line)| {
            let rest = keyed(line, "map").ok_or_else(|| parse_err(n, format!("unrecognised line `{line}`")))?;
            let (a, b) = rest
                .split_once("->")
                .ok_or_else(|| parse_err(n, "expected `v -> w`"))?;
            Ok((a.trim().to_string(), b.trim().to_string()))
        })
        .collect()
}

/// `stage: v ...` lines, each a full subcomplex.
pub fn parse_filtration(text: &str, x: &SimplicialComplex) -> Result<Vec<Subcomplex>> {
    lines(text)
        .map(|(n, line)| {
            let rest = keyed(line, "stage").ok_or_else(|| parse_err(n, format!("unrecognised line `{line}`")))?;
            let labels: Vec<&str> = rest.split_whitespace().collect();
            Subcomplex::from_labels(x, &labels).map_err(|_| parse_err(n, "unknown vertex in stage"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_c3_and_round_trips() {
        let x = parse_complex("simplex: 0 1\nsimplex: 1 2\nsimplex: 0 2").unwrap();
        assert_eq!(x.f_vector(), vec![3, 3]);
        assert_eq!(parse_complex(&serialize_complex(&x)).unwrap(), x);
    }

    #[test]
    fn order_header() {
        let x = parse_complex("order: 1 2 0\nsimplex: 0 1 2").unwrap();
        assert_eq!(x.order_labels(), ["1", "2", "0"]);
        let t = &x.simplices(2)[0];
        assert_eq!(x.display(t), "[1,2,0]");
    }

    #[test]
    fn empty_and_errors() {
        let x = parse_complex("").unwrap();
        assert_eq!(x.dim(), -1);
        assert!(parse_complex("simplex: 0 0").is_err());
        assert!(parse_complex("order: 0 1 9\nsimplex: 0 1").is_err());
        assert!(parse_complex("order: 0\nsimplex: 0 1").is_err());
    }

    #[test]
    fn subcomplex_files() {
        let x = parse_complex("simplex: 0 1 2").unwrap();
        let l = parse_subcomplex("vertices: 0 1", &x).unwrap();
        assert_eq!(l.labels(&x), ["0", "1"]);
        assert!(parse_subcomplex("simplex: 0 1\nsimplex: 1 2\nsimplex: 0 2", &x).is_err());
        assert!(parse_subcomplex("simplex: 0 1 2", &x).is_ok());
    }

    #[test]
    fn map_and_filtration_files() {
        let m = parse_map("# covering\nmap: 3 -> 0\nmap: 4->1").unwrap();
        assert_eq!(m, vec![("3".into(), "0".into()), ("4".into(), "1".into())]);
        let x = parse_complex("simplex: 0 1\nsimplex: 1 2").unwrap();
        let f = parse_filtration("stage: 0\nstage: 0 1 2", &x).unwrap();
        assert_eq!(f.len(), 2);
    }
}
