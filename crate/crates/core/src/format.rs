//! The line-oriented instance format and exact-fraction serialization.
//!
//! ```text
//! faircut-instance v1
//! label diamond
//! model edge
//! vertices 4
//! edge 0 1
//! edge 0 2
//! edge 1 3
//! edge 2 3
//! edge 0 3
//! partition edge
//! group 0 1 2 3
//! group 4
//! expected DF-MP 2/3 optional free-text note
//! ```
//!
//! `#` starts a comment. Edges are numbered in file order; edge groups list
//! edge numbers and node groups list vertex ids.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::families::{Expected, NamedInstance};
use crate::graph::{Graph, GroupPartition, PartitionKind};
use crate::objectives::Objective;
use crate::rational::{self, Rational};
use crate::utility::UtilityModel;

pub const HEADER: &str = "faircut-instance v1";

/// A rational that serializes as the string "p/q" (or "p" when integral).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Frac(pub Rational);

impl From<Rational> for Frac {
    fn from(value: Rational) -> Self {
        Frac(value)
    }
}

impl From<&Rational> for Frac {
    fn from(value: &Rational) -> Self {
        Frac(value.clone())
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rational::format(&self.0))
    }
}

impl Serialize for Frac {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&rational::format(&self.0))
    }
}

impl<'de> Deserialize<'de> for Frac {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        rational::parse(&text).map(Frac).ok_or_else(|| serde::de::Error::custom(format!("`{text}` is not a fraction")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token { text: &line[s..i], column: line[..s].chars().count() + 1 });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

fn number(line: usize, t: &Token<'_>, what: &str) -> Result<usize, ParseError> {
    t.text.parse().map_err(|_| err(line, t.column, format!("expected {what}, found `{}`", t.text)))
}

/// Text after the first `skip` tokens, trimmed.
fn rest_of<'a>(line: &'a str, toks: &[Token<'_>], skip: usize) -> &'a str {
    match toks.get(skip) {
        Some(t) => {
            let byte = line.char_indices().nth(t.column - 1).map(|(b, _)| b).unwrap_or(line.len());
            line[byte..].trim()
        }
        None => "",
    }
}

pub fn parse_instance(text: &str) -> Result<NamedInstance, ParseError> {
    let mut seen_header = false;
    let mut label: Option<String> = None;
    let mut model: Option<UtilityModel> = None;
    let mut vertices: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut partition: Option<(PartitionKind, usize)> = None;
    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut expected: Vec<Expected> = Vec::new();
    let mut last_line = 0;

    for (index, raw) in text.lines().enumerate() {
        let ln = index + 1;
        last_line = ln;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line);
        let Some(key) = toks.first() else {
            continue;
        };
        if !seen_header {
            if line.trim() != HEADER {
                return Err(err(ln, key.column, format!("expected header `{HEADER}`")));
            }
            seen_header = true;
            continue;
        }
        let arity = |n: usize| -> Result<(), ParseError> {
            if toks.len() != n + 1 {
                let col = toks.get(n + 1).map_or(line.chars().count() + 1, |t| t.column);
                return Err(err(ln, col, format!("`{}` takes {n} argument(s)", key.text)));
            }
            Ok(())
        };
        match key.text {
            "label" => {
                if label.is_some() {
                    return Err(err(ln, key.column, "duplicate `label`"));
                }
                label = Some(rest_of(line, &toks, 1).to_string());
            }
            "model" => {
                arity(1)?;
                if model.is_some() {
                    return Err(err(ln, key.column, "duplicate `model`"));
                }
                model = Some(toks[1].text.parse().map_err(|e: String| err(ln, toks[1].column, e))?);
            }
            "vertices" => {
                arity(1)?;
                if vertices.is_some() {
                    return Err(err(ln, key.column, "duplicate `vertices`"));
                }
                vertices = Some(number(ln, &toks[1], "a vertex count")?);
            }
            "edge" => {
                arity(2)?;
                let n = vertices.ok_or_else(|| err(ln, key.column, "`edge` before `vertices`"))?;
                if partition.is_some() {
                    return Err(err(ln, key.column, "`edge` after `partition`"));
                }
                let u = number(ln, &toks[1], "a vertex id")?;
                let v = number(ln, &toks[2], "a vertex id")?;
                for (x, t) in [(u, &toks[1]), (v, &toks[2])] {
                    if x >= n {
                        return Err(err(ln, t.column, format!("vertex {x} out of range for {n} vertices")));
                    }
                }
                if u == v {
                    return Err(err(ln, toks[2].column, format!("self-loop at vertex {u}")));
                }
                if let Some(i) = edges.iter().position(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
                    return Err(err(ln, key.column, format!("duplicate of edge {i}")));
                }
                edges.push((u, v));
            }
            "partition" => {
                arity(1)?;
                if partition.is_some() {
                    return Err(err(ln, key.column, "duplicate `partition`"));
                }
                let kind = match toks[1].text {
                    "edge" => PartitionKind::Edge,
                    "node" => PartitionKind::Node,
                    other => {
                        return Err(err(
                            ln,
                            toks[1].column,
                            format!("partition kind must be `edge` or `node`, found `{other}`"),
                        ))
                    }
                };
                partition = Some((kind, ln));
            }
            "group" => {
                let (kind, _) = partition.ok_or_else(|| err(ln, key.column, "`group` before `partition`"))?;
                let size = match kind {
                    PartitionKind::Edge => edges.len(),
                    PartitionKind::Node => vertices.unwrap_or(0),
                };
                let id = groups.len();
                if toks.len() == 1 {
                    return Err(err(ln, key.column, format!("group {id} is empty")));
                }
                let mut members = Vec::with_capacity(toks.len() - 1);
                for t in &toks[1..] {
                    let x = number(ln, t, &format!("a {} id", kind.name()))?;
                    if x >= size {
                        return Err(err(ln, t.column, format!("group {id}: {} {x} out of range", kind.name())));
                    }
                    if let Some((other, _)) = groups.iter().find(|(_, g)| g.contains(&x)) {
                        return Err(err(
                            ln,
                            t.column,
                            format!("group {id}: {} {x} already in group {other}", kind.name()),
                        ));
                    }
                    if members.contains(&x) {
                        return Err(err(ln, t.column, format!("group {id}: {} {x} listed twice", kind.name())));
                    }
                    members.push(x);
                }
                groups.push((id, members));
            }
            "expected" => {
                if toks.len() < 3 {
                    return Err(err(ln, key.column, "`expected` takes an objective and a fraction"));
                }
                let objective: Objective = toks[1].text.parse().map_err(|e: String| err(ln, toks[1].column, e))?;
                let value = rational::parse(toks[2].text)
                    .ok_or_else(|| err(ln, toks[2].column, format!("`{}` is not a fraction", toks[2].text)))?;
                expected.push(Expected { objective, value, note: rest_of(line, &toks, 3).to_string() });
            }
            other => return Err(err(ln, key.column, format!("unknown directive `{other}`"))),
        }
    }

    let end = last_line.max(1);
    if !seen_header {
        return Err(err(end, 1, format!("missing header `{HEADER}`")));
    }
    let model = model.ok_or_else(|| err(end, 1, "missing `model`"))?;
    let n = vertices.ok_or_else(|| err(end, 1, "missing `vertices`"))?;
    let (kind, partition_line) = partition.ok_or_else(|| err(end, 1, "missing `partition`"))?;
    let graph = Graph::new(n, edges).map_err(|e| err(end, 1, e.to_string()))?;
    let groups: Vec<Vec<usize>> = groups.into_iter().map(|(_, g)| g).collect();
    let partition =
        GroupPartition::for_graph(&graph, kind, groups).map_err(|e| err(partition_line, 1, e.to_string()))?;
    Ok(NamedInstance { label: label.unwrap_or_else(|| "unnamed".to_string()), graph, partition, model, expected })
}

pub fn write_instance(instance: &NamedInstance) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    out.push_str(&format!("label {}\n", instance.label));
    out.push_str(&format!("model {}\n", instance.model));
    out.push_str(&format!("vertices {}\n", instance.graph.vertex_count()));
    for &(u, v) in instance.graph.edges() {
        out.push_str(&format!("edge {u} {v}\n"));
    }
    out.push_str(&format!("partition {}\n", instance.partition.kind().name()));
    for group in instance.partition.groups() {
        let ids: Vec<String> = group.iter().map(ToString::to_string).collect();
        out.push_str(&format!("group {}\n", ids.join(" ")));
    }
    for e in &instance.expected {
        let line = format!("expected {} {} {}", e.objective, rational::format(&e.value), e.note);
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::rational::rat;

    #[test]
    fn round_trips_named_instances() {
        let mut all = vec![families::diamond(), families::paw()];
        all.push(families::clique_with_tail(2, 10).unwrap());
        all.push(families::cycle_plus_biclique(2, 3).unwrap());
        all.push(families::random_instance(8, 0.5, 3, PartitionKind::Edge, 42).unwrap());
        for inst in all {
            let text = write_instance(&inst);
            assert_eq!(parse_instance(&text).unwrap(), inst, "{text}");
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# leading comment\n\nfaircut-instance v1\nmodel node-maxdeg # trailing\nvertices 3\nedge 0 1\nedge 1 2\npartition node\ngroup 0 2\ngroup 1\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.label, "unnamed");
        assert_eq!(inst.partition.len(), 2);
        assert_eq!(inst.model, UtilityModel::NodeMaxDeg);
    }

    fn error_of(text: &str) -> ParseError {
        parse_instance(text).unwrap_err()
    }

    #[test]
    fn diagnostics_point_at_the_problem() {
        let base = "faircut-instance v1\nmodel edge\nvertices 3\nedge 0 1\n";
        let e = error_of(&format!("{base}edge 1 7\n"));
        assert_eq!((e.line, e.column), (5, 8));
        let e = error_of(&format!("{base}partition edge\ngroup\n"));
        assert_eq!(e.line, 6);
        assert!(e.message.contains("group 0 is empty"), "{e}");
        let e = error_of(&format!("{base}edge 1 0\n"));
        assert!(e.message.contains("duplicate"));
        let e = error_of("faircut-instance v2\n");
        assert_eq!((e.line, e.column), (1, 1));
        let e = error_of(&format!("{base}partition edge\ngroup 0\nexpected DF-MP 2/0\n"));
        assert_eq!((e.line, e.column), (7, 16));
        let e = error_of(&format!("{base}edge 1 2\npartition edge\ngroup 0\n"));
        assert_eq!(e.line, 6);
        assert!(e.message.contains("no group") || e.message.contains("cover"), "{e}");
        let e = error_of(&format!("{base}bogus 1\n"));
        assert!(e.message.contains("unknown directive"));
        assert!(error_of("faircut-instance v1\nvertices 2\n").message.contains("model"));
    }

    #[test]
    fn model_mismatch_is_not_a_parse_error() {
        let text = "faircut-instance v1\nmodel edge\nvertices 2\nedge 0 1\npartition node\ngroup 0 1\n";
        let inst = parse_instance(text).unwrap();
        assert!(inst.model.check_partition(&inst.partition).is_err());
    }

    #[test]
    fn frac_json() {
        let v = Frac(rat(-6, 9));
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, "\"-2/3\"");
        assert_eq!(serde_json::from_str::<Frac>(&json).unwrap(), v);
        assert_eq!(serde_json::to_string(&Frac(rat(4, 2))).unwrap(), "\"2\"");
        assert!(serde_json::from_str::<Frac>("\"1/0\"").is_err());
    }
}
