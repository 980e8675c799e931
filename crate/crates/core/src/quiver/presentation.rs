//! Quivers, relations and the text format for bound quiver presentations.
//!
//! Paths are read left to right: the word `a.b` means "a, then b", so its
//! source is the source of `a` and its target the target of `b`.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
    pub degree: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> usize {
        self.vertices.push(label.into());
        self.vertices.len() - 1
    }

    pub fn add_arrow(&mut self, label: impl Into<String>, source: usize, target: usize, degree: i64) -> usize {
        self.arrows.push(Arrow { label: label.into(), source, target, degree });
        self.arrows.len() - 1
    }

    /// Source and target of a nonempty word, or `None` if it does not compose.
    pub fn word_endpoints(&self, word: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*word.first()?)?;
        let mut at = first.target;
        for &a in &word[1..] {
            let arrow = self.arrows.get(a)?;
            if arrow.source != at {
                return None;
            }
            at = arrow.target;
        }
        Some((first.source, at))
    }

    pub fn word_degree(&self, word: &[usize]) -> i64 {
        word.iter().map(|&a| self.arrows[a].degree).sum()
    }

    pub fn format_word(&self, word: &[usize]) -> String {
        word.iter().map(|&a| self.arrows[a].label.as_str()).collect::<Vec<_>>().join(".")
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.num_vertices();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        seen == n
    }
}

/// A linear combination of parallel paths with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Relation {
    pub terms: Vec<(i64, Vec<usize>)>,
}

impl Relation {
    pub fn monomial(word: Vec<usize>) -> Self {
        Relation { terms: vec![(1, word)] }
    }

    pub fn binomial(lhs: Vec<usize>, rhs: Vec<usize>) -> Self {
        Relation { terms: vec![(1, lhs), (-1, rhs)] }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraPresentation {
    pub field: FieldSpec,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

impl AlgebraPresentation {
    pub fn new(field: FieldSpec, quiver: Quiver, relations: Vec<Relation>) -> Result<Self> {
        let p = AlgebraPresentation { field, quiver, relations };
        p.validate()?;
        Ok(p)
    }

    /// Path algebra of a quiver without relations.
    pub fn path_algebra(field: FieldSpec, quiver: Quiver) -> Result<Self> {
        Self::new(field, quiver, Vec::new())
    }

    pub fn validate(&self) -> Result<()> {
        let q = &self.quiver;
        let mut seen = HashMap::new();
        for (i, v) in q.vertices.iter().enumerate() {
            if seen.insert(v.as_str(), i).is_some() {
                return Err(Error::Presentation(format!("duplicate vertex label {v}")));
            }
        }
        let mut seen = HashMap::new();
        for a in &q.arrows {
            if seen.insert(a.label.as_str(), ()).is_some() {
                return Err(Error::Presentation(format!("duplicate arrow label {}", a.label)));
            }
            if a.source >= q.num_vertices() || a.target >= q.num_vertices() {
                return Err(Error::Presentation(format!("arrow {} has an endpoint outside the vertex list", a.label)));
            }
            if a.degree < 0 {
                return Err(Error::Presentation(format!("arrow {} has negative degree {}", a.label, a.degree)));
            }
        }
        for rel in &self.relations {
            let mut ends = None;
            if rel.terms.is_empty() {
                return Err(Error::Presentation("empty relation".into()));
            }
            for (_, word) in &rel.terms {
                if word.len() < 2 {
                    return Err(Error::Presentation(format!(
                        "relation term {} has length {} (admissible relations need length at least 2)",
                        q.format_word(word),
                        word.len()
                    )));
                }
                let e = q
                    .word_endpoints(word)
                    .ok_or_else(|| Error::Presentation(format!("path {} does not compose", q.format_word(word))))?;
                match ends {
                    None => ends = Some(e),
                    Some(prev) if prev != e => {
                        return Err(Error::Presentation(format!(
                            "relation paths are not parallel: {}",
                            q.format_word(word)
                        )))
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    pub fn to_spec_text(&self) -> String {
        let q = &self.quiver;
        let mut out = String::new();
        writeln!(out, "field {}", self.field).unwrap();
        writeln!(out, "vertices: {}", q.vertices.join(" ")).unwrap();
        for a in &q.arrows {
            write!(out, "arrow {}: {} -> {}", a.label, q.vertices[a.source], q.vertices[a.target]).unwrap();
            if a.degree != 0 {
                write!(out, " deg={}", a.degree).unwrap();
            }
            out.push('\n');
        }
        for rel in &self.relations {
            let terms: Vec<String> =
                rel.terms.iter().map(|(c, w)| format!("{:+}*{}", c, q.format_word(w))).collect();
            writeln!(out, "relation {}", terms.join(" ")).unwrap();
        }
        out
    }
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn valid_label(s: &str) -> bool {
    !s.is_empty() && !s.contains(|c: char| c.is_whitespace() || matches!(c, ':' | '.' | '*' | '#'))
}

/// Parse the line-oriented presentation format:
///
/// ```text
/// field p=101
/// vertices: 1 2
/// arrow a: 1 -> 2
/// arrow x: 1 -> 1 deg=1
/// relation +1*x.x
/// ```
///
/// `#` starts a comment. The field line is optional and defaults to GF(101).
pub fn parse_quiver_spec(text: &str) -> Result<AlgebraPresentation> {
    let mut field = FieldSpec::default();
    let mut quiver = Quiver::default();
    let mut have_vertices = false;
    let mut pending: Vec<(usize, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "field" => {
                field = rest.parse().map_err(|e: String| perr(line_no, e))?;
            }
            "vertices:" | "vertices" => {
                if have_vertices {
                    return Err(perr(line_no, "vertices declared twice"));
                }
                let rest = rest.strip_prefix(':').unwrap_or(rest);
                for v in rest.split_whitespace() {
                    if !valid_label(v) {
                        return Err(perr(line_no, format!("bad vertex label {v:?}")));
                    }
                    if quiver.vertex_index(v).is_some() {
                        return Err(perr(line_no, format!("duplicate vertex {v}")));
                    }
                    quiver.add_vertex(v);
                }
                have_vertices = true;
            }
            "arrow" => {
                if !have_vertices {
                    return Err(perr(line_no, "arrow declared before vertices"));
                }
                let (label, body) =
                    rest.split_once(':').ok_or_else(|| perr(line_no, "expected `arrow <label>: <src> -> <tgt>`"))?;
                let label = label.trim();
                if !valid_label(label) {
                    return Err(perr(line_no, format!("bad arrow label {label:?}")));
                }
                if quiver.arrow_index(label).is_some() {
                    return Err(perr(line_no, format!("duplicate arrow {label}")));
                }
                let (src, after) = body.split_once("->").ok_or_else(|| perr(line_no, "expected `->`"))?;
                let mut toks = after.split_whitespace();
                let tgt = toks.next().ok_or_else(|| perr(line_no, "missing arrow target"))?;
                let src = src.trim();
                let s = quiver.vertex_index(src).ok_or_else(|| perr(line_no, format!("unknown vertex {src}")))?;
                let t = quiver.vertex_index(tgt).ok_or_else(|| perr(line_no, format!("unknown vertex {tgt}")))?;
                let mut degree = 0;
                for tok in toks {
                    let tok = tok.trim_start_matches('[').trim_end_matches(']');
                    let value = tok
                        .strip_prefix("deg=")
                        .ok_or_else(|| perr(line_no, format!("unexpected token {tok:?}")))?;
                    if value.is_empty() {
                        return Err(perr(line_no, format!("degree missing for arrow {label}")));
                    }
                    degree = value.parse().map_err(|_| perr(line_no, format!("bad degree {value:?}")))?;
                }
                if degree < 0 {
                    return Err(perr(line_no, "arrow degrees must be nonnegative"));
                }
                quiver.add_arrow(label, s, t, degree);
            }
            "relation" => pending.push((line_no, rest.to_string())),
            other => return Err(perr(line_no, format!("unknown keyword {other:?}"))),
        }
    }
    if !have_vertices {
        return Err(perr(text.lines().count().max(1), "no vertices declared"));
    }

    let mut relations = Vec::new();
    for (line_no, body) in pending {
        let mut terms = Vec::new();
        for tok in body.split_whitespace() {
            let (coef, word) = match tok.split_once('*') {
                Some((c, w)) => {
                    let c: i64 = c.parse().map_err(|_| perr(line_no, format!("bad coefficient {c:?}")))?;
                    (c, w)
                }
                None => match tok.strip_prefix('-') {
                    Some(w) => (-1, w),
                    None => (1, tok.strip_prefix('+').unwrap_or(tok)),
                },
            };
            let mut path = Vec::new();
            for label in word.split('.') {
                let a = quiver.arrow_index(label).ok_or_else(|| perr(line_no, format!("unknown arrow {label:?}")))?;
                path.push(a);
            }
            if quiver.word_endpoints(&path).is_none() {
                return Err(perr(line_no, format!("path {word} does not compose")));
            }
            if coef != 0 {
                terms.push((coef, path));
            }
        }
        if terms.is_empty() {
            return Err(perr(line_no, "empty relation"));
        }
        let rel = Relation { terms };
        let check = AlgebraPresentation { field, quiver: quiver.clone(), relations: vec![rel.clone()] };
        check.validate().map_err(|e| perr(line_no, e.to_string()))?;
        relations.push(rel);
    }
    AlgebraPresentation::new(field, quiver, relations)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_text() {
        let text = "field p=7\nvertices: 1 2\narrow a: 1 -> 2\narrow x: 1 -> 1 deg=1\nrelation +1*x.x\n";
        let p = parse_quiver_spec(text).unwrap();
        assert_eq!(p.quiver.num_arrows(), 2);
        assert_eq!(parse_quiver_spec(&p.to_spec_text()).unwrap(), p);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_quiver_spec("vertices: 1 2\narrow a: 1 -> 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        let err = parse_quiver_spec("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 1 -> 3\nrelation a.b\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err:?}");
        let err = parse_quiver_spec("vertices: 1 2\narrow a: 1 -> 2 deg=\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn single_vertex() {
        let p = parse_quiver_spec("vertices: v\n").unwrap();
        assert_eq!(p.quiver.num_vertices(), 1);
        assert!(p.quiver.arrows.is_empty());
    }
}
