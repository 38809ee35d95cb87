//! Text format for user-supplied (co)sheaves.
//!
//! ```text
//! stalk: 0 1 rank 2
//! map: 0 < 0 1 matrix [[1],[0]]
//! ```
//!
//! Cosheaf maps are written `map: 0 1 > 0 matrix ...`. Matrix rows index the
//! target stalk. Unlisted stalks have rank zero, unlisted codimension-one maps
//! are zero, and longer maps are composed.

use std::collections::{BTreeMap, BTreeSet};

use super::{CombinatorialCosheaf, CombinatorialSheaf};
use crate::algebra::{int, Matrix, Ring};
use crate::complex::{Simplex, SimplicialComplex};
use crate::{Error, Result};

type Key = BTreeSet<u32>;

struct Parsed {
    ranks: BTreeMap<Key, usize>,
    maps: BTreeMap<(Key, Key), Vec<Vec<i64>>>,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_simplex(x: &SimplicialComplex, n: usize, text: &str) -> Result<Key> {
    let ids = text
        .split(|c: char| c.is_whitespace() || c == ',' || c == '[' || c == ']')
        .filter(|t| !t.is_empty())
        .map(|l| x.vertex_id(l).ok_or_else(|| err(n, format!("unknown vertex `{l}`"))))
        .collect::<Result<Vec<_>>>()?;
    x.simplex(&ids).ok_or_else(|| err(n, format!("`{text}` is not a simplex")))?;
    Ok(ids.into_iter().collect())
}

fn parse(text: &str, x: &SimplicialComplex, arrow: char) -> Result<Parsed> {
    let mut parsed = Parsed {
        ranks: BTreeMap::new(),
        maps: BTreeMap::new(),
    };
    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (head, rest) = line.split_once(':').ok_or_else(|| err(n, "expected `key: ...`"))?;
        match head.trim() {
            "stalk" => {
                let (s, r) = rest.rsplit_once("rank").ok_or_else(|| err(n, "expected `rank r`"))?;
                let r: usize = r.trim().parse().map_err(|_| err(n, "bad rank"))?;
                parsed.ranks.insert(parse_simplex(x, n, s)?, r);
            }
            "map" => {
                let (rel, m) = rest.split_once("matrix").ok_or_else(|| err(n, "expected `matrix [[..]]`"))?;
                let (a, b) = rel.split_once(arrow).ok_or_else(|| err(n, format!("expected `{arrow}`")))?;
                let (a, b) = (parse_simplex(x, n, a)?, parse_simplex(x, n, b)?);
                let (small, big) = if arrow == '<' { (a, b) } else { (b, a) };
                if !(small.is_subset(&big) && small.len() < big.len()) {
                    return Err(err(n, "not a proper face relation"));
                }
                let m: Vec<Vec<i64>> = serde_json::from_str(m.trim()).map_err(|e| err(n, format!("bad matrix: {e}")))?;
                parsed.maps.insert((small, big), m);
            }
            other => return Err(err(n, format!("unknown key `{other}`"))),
        }
    }
    Ok(parsed)
}

impl Parsed {
    fn rank(&self, s: &Simplex) -> usize {
        self.ranks.get(&s.vertices().iter().copied().collect()).copied().unwrap_or(0)
    }

    fn matrix(&self, s: &Simplex, t: &Simplex, rows: usize, cols: usize) -> Option<Matrix> {
        let k = (s.vertices().iter().copied().collect(), t.vertices().iter().copied().collect());
        self.maps.get(&k).map(|m| {
            let dense: Vec<Vec<_>> = m.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
            if dense.len() == rows && dense.iter().all(|r| r.len() == cols) {
                Matrix::from_dense(rows, cols, &dense)
            } else {
                // wrong shape; let the constructor report it
                Matrix::zeros(rows + 1, cols)
            }
        })
    }
}

pub fn parse_sheaf(text: &str, x: &SimplicialComplex, ring: Ring) -> Result<CombinatorialSheaf> {
    let parsed = parse(text, x, '<')?;
    CombinatorialSheaf::new(x, ring, |s| parsed.rank(s), |s, t| parsed.matrix(s, t, parsed.rank(t), parsed.rank(s)))
}

pub fn parse_cosheaf(text: &str, x: &SimplicialComplex, ring: Ring) -> Result<CombinatorialCosheaf> {
    let parsed = parse(text, x, '>')?;
    CombinatorialCosheaf::new(x, ring, |s| parsed.rank(s), |s, t| parsed.matrix(s, t, parsed.rank(s), parsed.rank(t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parses_a_sheaf_on_an_edge() {
        let x = fixtures::edge();
        let text = "stalk: 0 rank 1\nstalk: 1 rank 1\nstalk: [0,1] rank 2\nmap: 0 < 0 1 matrix [[1],[0]]\nmap: 1 < 0 1 matrix [[0],[1]]";
        let f = parse_sheaf(text, &x, Ring::Integers).unwrap();
        let e = x.simplex(&[0, 1]).unwrap();
        assert_eq!(f.rank(&e), 2);
        assert_eq!(f.map(&x.simplex(&[1]).unwrap(), &e).get(1, 0), int(1));
    }

    #[test]
    fn parses_a_cosheaf_and_rejects_bad_input() {
        let x = fixtures::edge();
        let g = parse_cosheaf("stalk: 0 1 rank 1\nstalk: 0 rank 1\nmap: 0 1 > 0 matrix [[3]]", &x, Ring::Integers).unwrap();
        let e = x.simplex(&[0, 1]).unwrap();
        assert_eq!(g.map(&x.simplex(&[0]).unwrap(), &e).get(0, 0), int(3));
        assert!(parse_sheaf("stalk: 0 rank 1\nstalk: 0 1 rank 1\nmap: 0 < 0 1 matrix [[1,2]]", &x, Ring::Integers).is_err());
        assert!(parse_sheaf("map: 0 1 < 0 matrix [[1]]", &x, Ring::Integers).is_err());
        assert!(parse_sheaf("stalk: 7 rank 1", &x, Ring::Integers).is_err());
    }
}
