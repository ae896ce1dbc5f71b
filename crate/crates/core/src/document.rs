//! Textual instance documents.
//!
//! Two syntaxes per object kind:
//!
//! ```text
//! {"n": 3, "arcs": [[0, 1], [1, 2]]}      n=3
//!                                         0 1
//!                                         1 2
//! {"father": [0, 0, 2]}                   father=0 0 2
//! {"values": [1, 1, 2]}                   values=1 1 2
//! ```
//!
//! In the plain-text syntax `#` starts a comment running to end of line.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::enumerate::ObjectKind;
use crate::ordered::{PartitionInstance, RootedTree};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphDocument {
    Digraph(Digraph),
    RootedTree(RootedTree),
    Partition(PartitionInstance),
}

/// Failure to read a document. Positions are 1-based; they are absent when
/// the error concerns the document as a whole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line: Some(line),
            column: Some(column),
            message: message.into(),
        }
    }

    fn whole(message: impl Into<String>) -> Self {
        Self {
            line: None,
            column: None,
            message: message.into(),
        }
    }

    fn from_json(err: serde_json::Error) -> Self {
        Self::at(err.line(), err.column(), err.to_string())
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, "line {l}, column {c}: {}", self.message),
            (Some(l), None) => write!(f, "line {l}: {}", self.message),
            _ => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DigraphDoc {
    n: usize,
    arcs: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TreeDoc {
    father: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionDoc {
    values: Vec<i64>,
}

impl GraphDocument {
    pub fn kind(&self) -> ObjectKind {
        match self {
            GraphDocument::Digraph(_) => ObjectKind::Digraph,
            GraphDocument::RootedTree(_) => ObjectKind::RootedTree,
            GraphDocument::Partition(_) => ObjectKind::Partition,
        }
    }

    /// Compact JSON form.
    pub fn to_json(&self) -> String {
        let out = match self {
            GraphDocument::Digraph(g) => serde_json::to_string(&DigraphDoc {
                n: g.vertex_count(),
                arcs: g.arcs().iter().map(|&(t, h)| [t, h]).collect(),
            }),
            GraphDocument::RootedTree(t) => serde_json::to_string(&TreeDoc {
                father: t.fathers().to_vec(),
            }),
            GraphDocument::Partition(p) => serde_json::to_string(&PartitionDoc {
                values: p.values().to_vec(),
            }),
        };
        out.expect("document types always serialize")
    }

    pub fn to_text(&self) -> String {
        fn join<T: ToString>(xs: impl Iterator<Item = T>) -> String {
            xs.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        }
        match self {
            GraphDocument::Digraph(g) => {
                let mut out = format!("n={}\n", g.vertex_count());
                for &(t, h) in g.arcs() {
                    out.push_str(&format!("{t} {h}\n"));
                }
                out
            }
            GraphDocument::RootedTree(t) => format!("father={}\n", join(t.fathers().iter())),
            GraphDocument::Partition(p) => format!("values={}\n", join(p.values().iter())),
        }
    }

    /// Parses either syntax. `kind`, when given, must agree with the document.
    pub fn parse(input: &str, kind: Option<ObjectKind>) -> Result<Self, ParseError> {
        let doc = if input.trim_start().starts_with('{') {
            Self::parse_json(input)?
        } else {
            Self::parse_text(input)?
        };
        match kind {
            Some(k) if k != doc.kind() => Err(ParseError::whole(format!(
                "expected a {k} document, found {}",
                doc.kind()
            ))),
            _ => Ok(doc),
        }
    }

    pub fn parse_json(input: &str) -> Result<Self, ParseError> {
        let value: serde_json::Value = serde_json::from_str(input).map_err(ParseError::from_json)?;
        let obj = value
            .as_object()
            .ok_or_else(|| ParseError::whole("document must be a JSON object"))?;
        if obj.contains_key("arcs") || obj.contains_key("n") {
            let doc: DigraphDoc = serde_json::from_str(input).map_err(ParseError::from_json)?;
            Digraph::new(doc.n, doc.arcs.into_iter().map(|[t, h]| (t, h)))
                .map(GraphDocument::Digraph)
                .map_err(|e| ParseError::whole(e.to_string()))
        } else if obj.contains_key("father") {
            let doc: TreeDoc = serde_json::from_str(input).map_err(ParseError::from_json)?;
            RootedTree::new(doc.father)
                .map(GraphDocument::RootedTree)
                .map_err(|e| ParseError::whole(e.to_string()))
        } else if obj.contains_key("values") {
            let doc: PartitionDoc = serde_json::from_str(input).map_err(ParseError::from_json)?;
            PartitionInstance::new(doc.values)
                .map(GraphDocument::Partition)
                .map_err(|e| ParseError::whole(e.to_string()))
        } else {
            Err(ParseError::whole(
                "unrecognized document: expected keys n/arcs, father, or values",
            ))
        }
    }

    pub fn parse_text(input: &str) -> Result<Self, ParseError> {
        // (line, column, token) with comments stripped
        let mut tokens = Vec::new();
        for (ln, raw) in input.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            let mut col = 0;
            for piece in line.split_whitespace() {
                let start = line[col..].find(piece).expect("token comes from this line") + col;
                tokens.push((ln + 1, start + 1, piece));
                col = start + piece.len();
            }
        }
        let Some(&(hl, hc, head)) = tokens.first() else {
            return Err(ParseError::whole("empty document"));
        };
        let (key, first_value) = head
            .split_once('=')
            .ok_or_else(|| ParseError::at(hl, hc, "expected a header n=<k>, father=..., or values=..."))?;
        let mut values: Vec<(usize, usize, &str)> = Vec::new();
        if !first_value.is_empty() {
            values.push((hl, hc + key.len() + 1, first_value));
        }
        values.extend(tokens[1..].iter().copied());

        fn number<T: std::str::FromStr>((l, c, tok): (usize, usize, &str)) -> Result<T, ParseError> {
            tok.parse().map_err(|_| ParseError::at(l, c, format!("expected an integer, found {tok:?}")))
        }

        match key {
            "n" => {
                let (&n_tok, arc_toks) = values
                    .split_first()
                    .ok_or_else(|| ParseError::at(hl, hc, "missing vertex count after n="))?;
                if n_tok.0 != hl {
                    return Err(ParseError::at(n_tok.0, n_tok.1, "vertex count must follow n= on the header line"));
                }
                let n: usize = number(n_tok)?;
                let mut arcs = Vec::new();
                let mut i = 0;
                while i < arc_toks.len() {
                    let tail_tok = arc_toks[i];
                    let head_tok = arc_toks
                        .get(i + 1)
                        .filter(|t| t.0 == tail_tok.0)
                        .ok_or_else(|| ParseError::at(tail_tok.0, tail_tok.1, "arc needs two endpoints"))?;
                    if arc_toks.get(i + 2).is_some_and(|t| t.0 == tail_tok.0) {
                        let extra = arc_toks[i + 2];
                        return Err(ParseError::at(extra.0, extra.1, "one arc per line"));
                    }
                    let (t, h): (usize, usize) = (number(tail_tok)?, number(*head_tok)?);
                    if t >= n || h >= n {
                        return Err(ParseError::at(
                            tail_tok.0,
                            tail_tok.1,
                            format!("arc ({t}, {h}) has an endpoint outside [0, {n})"),
                        ));
                    }
                    arcs.push((t, h));
                    i += 2;
                }
                Ok(GraphDocument::Digraph(Digraph::new(n, arcs).expect("arcs checked")))
            }
            "father" => {
                let father = values.into_iter().map(number).collect::<Result<Vec<usize>, _>>()?;
                RootedTree::new(father)
                    .map(GraphDocument::RootedTree)
                    .map_err(|e| ParseError::whole(e.to_string()))
            }
            "values" => {
                let vals = values.into_iter().map(number).collect::<Result<Vec<i64>, _>>()?;
                PartitionInstance::new(vals)
                    .map(GraphDocument::Partition)
                    .map_err(|e| ParseError::whole(e.to_string()))
            }
            other => Err(ParseError::at(hl, hc, format!("unknown header {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_digraph_syntaxes() {
        let a = GraphDocument::parse(r#"{"n": 2, "arcs": [[0, 1]]}"#, None).unwrap();
        let b = GraphDocument::parse("# one arc\nn=2\n0 1  # tail head\n", None).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_json(), r#"{"n":2,"arcs":[[0,1]]}"#);
        assert_eq!(a.to_text(), "n=2\n0 1\n");
    }

    #[test]
    fn parses_tree_and_partition() {
        let t = GraphDocument::parse(r#"{"father": [0,0,2,0,3,3]}"#, Some(ObjectKind::RootedTree)).unwrap();
        assert_eq!(GraphDocument::parse("father=0 0 2\n0 3 3", None).unwrap(), t);
        let single = GraphDocument::parse("father=", None).unwrap();
        assert_eq!(single, GraphDocument::RootedTree(RootedTree::single_vertex()));
        let p = GraphDocument::parse("values=1 1 2", None).unwrap();
        assert_eq!(p.to_json(), r#"{"values":[1,1,2]}"#);
    }

    #[test]
    fn json_errors_carry_position() {
        let err = GraphDocument::parse("{\"n\": 2,\n \"arcs\": [[0, x]]}", None).unwrap_err();
        assert_eq!(err.line, Some(2));
        assert!(err.column.is_some());
        let err = GraphDocument::parse(r#"{"n": 2, "arcs": [[0, 1, 2]]}"#, None).unwrap_err();
        assert_eq!(err.line, Some(1));
    }

    #[test]
    fn text_errors_carry_position() {
        let err = GraphDocument::parse("n=2\n0 1\n1 z\n", None).unwrap_err();
        assert_eq!((err.line, err.column), (Some(3), Some(3)));
        let err = GraphDocument::parse("n=2\n0 5\n", None).unwrap_err();
        assert_eq!((err.line, err.column), (Some(2), Some(1)));
        let err = GraphDocument::parse("n=2\n0\n", None).unwrap_err();
        assert_eq!(err.line, Some(2));
        let err = GraphDocument::parse("bogus=1", None).unwrap_err();
        assert_eq!((err.line, err.column), (Some(1), Some(1)));
        let err = GraphDocument::parse("values=1 x", None).unwrap_err();
        assert_eq!((err.line, err.column), (Some(1), Some(10)));
    }

    #[test]
    fn semantic_errors() {
        assert!(GraphDocument::parse(r#"{"father": [1]}"#, None).is_err());
        assert!(GraphDocument::parse(r#"{"values": []}"#, None).is_err());
        assert!(GraphDocument::parse(r#"{"n": 1, "arcs": [[0, 1]]}"#, None).is_err());
        assert!(GraphDocument::parse(r#"{"colour": 1}"#, None).is_err());
        assert!(GraphDocument::parse("", None).is_err());
        assert!(GraphDocument::parse("values=1", Some(ObjectKind::Digraph)).is_err());
    }
}
