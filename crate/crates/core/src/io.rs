//! Text formats shared by the command-line tool. Vertex ids in files are
//! 1-based; in memory they are 0-based.
//!
//! * Edge list: `p <n> <m>` then `m` lines `e <u> <v>`.
//! * Red-blue instance: `p <n_red> <n_blue> <m> <kappa>` then `e <r> <b>`.
//! * Hypergraph: `h <N> <M>` then one line of vertex ids per hyperedge.
//!
//! Blank lines and lines starting with `c` are skipped in all three.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certify::{Bipartition, ContractionSolution};
use crate::graph::{Edge, Graph, VertexSet};
use crate::reductions::{Hypergraph, RbdsInstance};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header line")]
    MissingHeader,
    #[error("header announces {expected} {what}, found {found}")]
    CountMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("invalid certificate: {0}")]
    Certificate(String),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-comment lines with their 1-based line numbers, split on whitespace.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        (!l.is_empty() && !l.starts_with('c')).then(|| (i + 1, l.split_whitespace().collect()))
    })
}

fn numbers(line: usize, fields: &[&str]) -> Result<Vec<usize>, ParseError> {
    fields
        .iter()
        .map(|f| {
            f.parse()
                .map_err(|_| syntax(line, format!("expected a number, found {f:?}")))
        })
        .collect()
}

/// 1-based id to 0-based, checked against `n`.
fn vertex(line: usize, id: usize, n: usize) -> Result<usize, ParseError> {
    if id == 0 || id > n {
        return Err(syntax(line, format!("vertex {id} outside 1..={n}")));
    }
    Ok(id - 1)
}

fn header<'a>(
    recs: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    tag: &str,
    arity: usize,
) -> Result<(usize, Vec<usize>), ParseError> {
    let (line, fields) = recs.next().ok_or(ParseError::MissingHeader)?;
    if fields[0] != tag || fields.len() != arity + 1 {
        return Err(syntax(
            line,
            format!("expected header `{tag}` with {arity} numbers"),
        ));
    }
    Ok((line, numbers(line, &fields[1..])?))
}

fn pairs<'a>(
    recs: impl Iterator<Item = (usize, Vec<&'a str>)>,
    bounds: (usize, usize),
) -> Result<Vec<(usize, usize, usize)>, ParseError> {
    recs.map(|(line, fields)| {
        if fields[0] != "e" || fields.len() != 3 {
            return Err(syntax(line, "expected `e <u> <v>`"));
        }
        let nums = numbers(line, &fields[1..])?;
        Ok((
            line,
            vertex(line, nums[0], bounds.0)?,
            vertex(line, nums[1], bounds.1)?,
        ))
    })
    .collect()
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut recs = records(text);
    let (_, h) = header(&mut recs, "p", 2)?;
    let (n, m) = (h[0], h[1]);
    let edges = pairs(recs, (n, n))?;
    if edges.len() != m {
        return Err(ParseError::CountMismatch {
            what: "edges",
            expected: m,
            found: edges.len(),
        });
    }
    let mut g = Graph::new(n);
    for (line, u, v) in edges {
        match g.add_edge(u, v) {
            Ok(true) => {}
            Ok(false) => return Err(syntax(line, format!("repeated edge {} {}", u + 1, v + 1))),
            Err(e) => return Err(syntax(line, e.to_string())),
        }
    }
    Ok(g)
}

/// Writes `g` with its vertices renumbered in id order.
pub fn write_edge_list(g: &Graph) -> String {
    let (g, _) = g.compacted();
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn parse_rbds(text: &str) -> Result<RbdsInstance, ParseError> {
    let mut recs = records(text);
    let (line, h) = header(&mut recs, "p", 4)?;
    let (n_red, n_blue, m, kappa) = (h[0], h[1], h[2], h[3]);
    let edges = pairs(recs, (n_red, n_blue))?;
    if edges.len() != m {
        return Err(ParseError::CountMismatch {
            what: "edges",
            expected: m,
            found: edges.len(),
        });
    }
    let edges: Vec<_> = edges.into_iter().map(|(_, r, b)| (r, b)).collect();
    RbdsInstance::new(n_red, n_blue, &edges, kappa).map_err(|e| syntax(line, e.to_string()))
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut recs = records(text);
    let (line, h) = header(&mut recs, "h", 2)?;
    let (n, m) = (h[0], h[1]);
    let edges = recs
        .map(|(line, fields)| {
            numbers(line, &fields)?
                .into_iter()
                .map(|id| vertex(line, id, n))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    if edges.len() != m {
        return Err(ParseError::CountMismatch {
            what: "hyperedges",
            expected: m,
            found: edges.len(),
        });
    }
    Hypergraph::new(n, edges).map_err(|e| syntax(line, e.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    Partition,
    Edges,
}

/// On-disk certificate. Without `kind`, the present fields decide.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<CertificateKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub balanced: Option<bool>,
    #[serde(rename = "L", default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Vec<usize>>,
    #[serde(rename = "R", default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[usize; 2]>>,
}

/// A certificate read back into 0-based ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedCertificate {
    Partition(Bipartition),
    Edges(Vec<Edge>),
}

fn one_based(set: &VertexSet) -> Vec<usize> {
    set.iter().map(|v| v + 1).collect()
}

impl CertificateFile {
    pub fn from_partition(p: &Bipartition, budget: usize, balanced: bool) -> Self {
        CertificateFile {
            kind: Some(CertificateKind::Partition),
            budget: Some(budget),
            balanced: Some(balanced),
            left: Some(one_based(&p.left)),
            right: Some(one_based(&p.right)),
            edges: None,
        }
    }

    pub fn from_solution(s: &ContractionSolution, budget: usize) -> Self {
        CertificateFile {
            kind: Some(CertificateKind::Edges),
            budget: Some(budget),
            balanced: Some(s.balanced),
            left: None,
            right: None,
            edges: Some(s.edges.iter().map(|&(u, v)| [u + 1, v + 1]).collect()),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        serde_json::from_str(text).map_err(|e| ParseError::Certificate(e.to_string()))
    }

    /// Converts to 0-based ids. Ids of zero are rejected; range checks
    /// against a graph are left to the caller.
    pub fn parse(&self) -> Result<ParsedCertificate, ParseError> {
        let bad = |m: &str| ParseError::Certificate(m.to_string());
        let kind = match (self.kind, &self.edges) {
            (Some(k), _) => k,
            (None, Some(_)) => CertificateKind::Edges,
            (None, None) => CertificateKind::Partition,
        };
        let zero_based = |ids: &[usize]| -> Result<VertexSet, ParseError> {
            ids.iter()
                .map(|&v| v.checked_sub(1).ok_or_else(|| bad("vertex ids start at 1")))
                .collect()
        };
        match kind {
            CertificateKind::Partition => {
                let (Some(l), Some(r)) = (&self.left, &self.right) else {
                    return Err(bad("partition certificate needs both L and R"));
                };
                Ok(ParsedCertificate::Partition(Bipartition::new(
                    zero_based(l)?,
                    zero_based(r)?,
                )))
            }
            CertificateKind::Edges => {
                let edges = self
                    .edges
                    .as_ref()
                    .ok_or_else(|| bad("edge certificate needs edges"))?;
                edges
                    .iter()
                    .map(|&[u, v]| match (u.checked_sub(1), v.checked_sub(1)) {
                        (Some(u), Some(v)) => Ok((u, v)),
                        _ => Err(bad("vertex ids start at 1")),
                    })
                    .collect::<Result<_, _>>()
                    .map(ParsedCertificate::Edges)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::cycle;

    #[test]
    fn edge_list_round_trip() {
        let text = "c a comment\n\np 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, cycle(5));
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        assert_eq!(
            write_edge_list(&g),
            "p 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n"
        );
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(parse_edge_list("c only\n"), Err(ParseError::MissingHeader));
        assert!(matches!(
            parse_edge_list("q 2 1\ne 1 2"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("p 2 1\ne 1 3"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("p 2 1\ne 1 1"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_edge_list("p 2 2\ne 1 2\ne 2 1"),
            Err(ParseError::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("p 3 2\ne 1 2"),
            Err(ParseError::CountMismatch { .. })
        ));
        assert!(matches!(
            parse_edge_list("p 2 x"),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn source_formats() {
        let inst = parse_rbds("p 2 1 2 1\ne 1 1\ne 2 1\n").unwrap();
        assert_eq!((inst.n_red, inst.n_blue, inst.kappa), (2, 1, 1));
        assert_eq!(inst.edges, vec![(0, 0), (1, 0)]);
        assert!(parse_rbds("p 2 1 1 1\ne 1 2\n").is_err());

        let h = parse_hypergraph("h 3 2\n1 2\n1 2 3\n").unwrap();
        assert_eq!(h.edges, vec![vec![0, 1], vec![0, 1, 2]]);
        assert!(parse_hypergraph("h 3 1\n1 4\n").is_err());
        assert!(matches!(
            parse_hypergraph("h 3 2\n1 2\n"),
            Err(ParseError::CountMismatch { .. })
        ));
    }

    #[test]
    fn certificate_json() {
        let p = Bipartition::new([0, 2].into_iter().collect(), [1, 3].into_iter().collect());
        let file = CertificateFile::from_partition(&p, 0, false);
        let json = file.to_json();
        assert_eq!(
            serde_json::from_str::<serde_json::Value>(&json).unwrap(),
            serde_json::json!({"kind": "partition", "budget": 0, "balanced": false, "L": [1, 3], "R": [2, 4]})
        );
        assert_eq!(
            CertificateFile::from_json(&json).unwrap().parse().unwrap(),
            ParsedCertificate::Partition(p)
        );

        let bare = CertificateFile::from_json(r#"{"edges": [[1, 2]]}"#).unwrap();
        assert_eq!(
            bare.parse().unwrap(),
            ParsedCertificate::Edges(vec![(0, 1)])
        );
        assert!(
            CertificateFile::from_json(r#"{"kind": "partition", "L": [1]}"#)
                .unwrap()
                .parse()
                .is_err()
        );
        assert!(CertificateFile::from_json(r#"{"edges": [[0, 1]]}"#)
            .unwrap()
            .parse()
            .is_err());
        assert!(CertificateFile::from_json("not json").is_err());
    }
}
