//! The line-oriented text format for posets, lattices, families, and maps.
//!
//! One file describes one object. `#` starts a comment, tokens are separated
//! by whitespace, and the first directive must be `type`. Map documents name
//! their space (and, for value maps, their scale) by file path; a map without
//! a `scale` line is a self-map on its space, which is how closure operators
//! are written down.
//!
//! Grammar:
//!
//! ```text
//! type poset|lattice|family|map
//! elements n1 n2 ...        # poset/lattice carrier; optional family base
//! cover a b                 # a immediately below b
//! set n1 n2 ...             # family member; bare `set` is the empty set
//! pair x p                  # map entry x -> p
//! space PATH                # map documents: the space file
//! scale PATH                # map documents: the scale file (optional)
//! ```

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DocumentError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{msg}")]
    Semantic { msg: String },
}

fn syntax(line: usize, msg: impl Into<String>) -> DocumentError {
    DocumentError::Syntax {
        line,
        msg: msg.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocKind {
    Poset,
    Lattice,
    Family,
    Map,
}

impl fmt::Display for DocKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DocKind::Poset => "poset",
            DocKind::Lattice => "lattice",
            DocKind::Family => "family",
            DocKind::Map => "map",
        };
        f.write_str(s)
    }
}

/// A parsed document. Directive order within each list is preserved, so
/// parse → emit → parse is the identity on values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub kind: DocKind,
    pub elements: Option<Vec<String>>,
    pub covers: Vec<(String, String)>,
    pub sets: Vec<Vec<String>>,
    pub pairs: Vec<(String, String)>,
    pub space: Option<String>,
    pub scale: Option<String>,
}

pub fn parse_document(text: &str) -> Result<Document, DocumentError> {
    let mut kind: Option<DocKind> = None;
    let mut elements: Option<Vec<String>> = None;
    let mut covers = Vec::new();
    let mut sets = Vec::new();
    let mut pairs = Vec::new();
    let mut space: Option<String> = None;
    let mut scale: Option<String> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut tokens = line.split_whitespace();
        let Some(directive) = tokens.next() else {
            continue;
        };
        let rest: Vec<String> = tokens.map(str::to_owned).collect();
        match directive {
            "type" => {
                if kind.is_some() {
                    return Err(syntax(line_no, "duplicate `type` directive"));
                }
                if rest.len() != 1 {
                    return Err(syntax(line_no, "`type` takes exactly one value"));
                }
                kind = Some(match rest[0].as_str() {
                    "poset" => DocKind::Poset,
                    "lattice" => DocKind::Lattice,
                    "family" => DocKind::Family,
                    "map" => DocKind::Map,
                    other => return Err(syntax(line_no, format!("unknown type `{other}`"))),
                });
            }
            "elements" => {
                if kind.is_none() {
                    return Err(syntax(line_no, "`type` must come first"));
                }
                if elements.is_some() {
                    return Err(syntax(line_no, "duplicate `elements` directive"));
                }
                elements = Some(rest);
            }
            "cover" => {
                if rest.len() != 2 {
                    return Err(syntax(line_no, "`cover` takes exactly two names"));
                }
                covers.push((rest[0].clone(), rest[1].clone()));
            }
            "set" => sets.push(rest),
            "pair" => {
                if rest.len() != 2 {
                    return Err(syntax(line_no, "`pair` takes exactly two names"));
                }
                pairs.push((rest[0].clone(), rest[1].clone()));
            }
            "space" => {
                if rest.len() != 1 {
                    return Err(syntax(line_no, "`space` takes exactly one path"));
                }
                if space.is_some() {
                    return Err(syntax(line_no, "duplicate `space` directive"));
                }
                space = Some(rest[0].clone());
            }
            "scale" => {
                if rest.len() != 1 {
                    return Err(syntax(line_no, "`scale` takes exactly one path"));
                }
                if scale.is_some() {
                    return Err(syntax(line_no, "duplicate `scale` directive"));
                }
                scale = Some(rest[0].clone());
            }
            other => return Err(syntax(line_no, format!("unknown directive `{other}`"))),
        }
    }

    let Some(kind) = kind else {
        return Err(DocumentError::Semantic {
            msg: "document has no `type` directive".into(),
        });
    };
    let reject = |cond: bool, what: &str| -> Result<(), DocumentError> {
        if cond {
            Err(DocumentError::Semantic {
                msg: format!("`{what}` is not allowed in a {kind} document"),
            })
        } else {
            Ok(())
        }
    };
    match kind {
        DocKind::Poset | DocKind::Lattice => {
            if elements.is_none() {
                return Err(DocumentError::Semantic {
                    msg: format!("a {kind} document needs an `elements` directive"),
                });
            }
            reject(!sets.is_empty(), "set")?;
            reject(!pairs.is_empty(), "pair")?;
            reject(space.is_some(), "space")?;
            reject(scale.is_some(), "scale")?;
        }
        DocKind::Family => {
            reject(!covers.is_empty(), "cover")?;
            reject(!pairs.is_empty(), "pair")?;
            reject(space.is_some(), "space")?;
            reject(scale.is_some(), "scale")?;
        }
        DocKind::Map => {
            reject(elements.is_some(), "elements")?;
            reject(!covers.is_empty(), "cover")?;
            reject(!sets.is_empty(), "set")?;
            if space.is_none() {
                return Err(DocumentError::Semantic {
                    msg: "a map document needs a `space` directive".into(),
                });
            }
        }
    }
    Ok(Document {
        kind,
        elements,
        covers,
        sets,
        pairs,
        space,
        scale,
    })
}

/// Canonical text for a document. Comments are not part of the value;
/// directive order is `type`, `space`, `scale`, `elements`, covers, sets,
/// pairs, preserving list order.
pub fn emit_document(doc: &Document) -> String {
    let mut out = String::new();
    out.push_str(&format!("type {}\n", doc.kind));
    if let Some(space) = &doc.space {
        out.push_str(&format!("space {space}\n"));
    }
    if let Some(scale) = &doc.scale {
        out.push_str(&format!("scale {scale}\n"));
    }
    if let Some(elements) = &doc.elements {
        out.push_str("elements");
        for e in elements {
            out.push(' ');
            out.push_str(e);
        }
        out.push('\n');
    }
    for (lo, hi) in &doc.covers {
        out.push_str(&format!("cover {lo} {hi}\n"));
    }
    for set in &doc.sets {
        out.push_str("set");
        for e in set {
            out.push(' ');
            out.push_str(e);
        }
        out.push('\n');
    }
    for (x, v) in &doc.pairs {
        out.push_str(&format!("pair {x} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_two_chain() {
        let doc = parse_document("type poset\nelements a b\ncover a b\n").unwrap();
        assert_eq!(doc.kind, DocKind::Poset);
        assert_eq!(doc.elements.as_deref().unwrap(), &["a", "b"]);
        assert_eq!(doc.covers, vec![("a".to_owned(), "b".to_owned())]);
    }

    #[test]
    fn bare_set_is_the_empty_member() {
        let doc = parse_document("type family\nset\nset a b\n").unwrap();
        assert_eq!(doc.sets, vec![Vec::<String>::new(), vec!["a".to_owned(), "b".to_owned()]]);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let doc =
            parse_document("# heading\n\ntype poset # trailing\nelements a b # names\n").unwrap();
        assert_eq!(doc.elements.as_deref().unwrap(), &["a", "b"]);
    }

    #[test]
    fn unknown_directives_are_rejected_with_location() {
        let err = parse_document("type poset\nelements a\nfrobnicate x\n").unwrap_err();
        match err {
            DocumentError::Syntax { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn kind_constraints_are_enforced() {
        assert!(parse_document("type poset\nelements a\nset a\n").is_err());
        assert!(parse_document("type map\npair a b\n").is_err()); // no space
        assert!(parse_document("type family\nset a\ncover a b\n").is_err());
        assert!(parse_document("elements a\n").is_err()); // type must come first
    }

    #[test]
    fn round_trip_is_identity_on_values() {
        let texts = [
            "type poset\nelements a b c\ncover a b\ncover b c\n",
            "type family\nelements x y\nset\nset x\nset x y\n",
            "type map\nspace s.pos\nscale l.lat\npair a {x}\npair b {y}\n",
            "type lattice\nelements 0 1\ncover 0 1\n",
        ];
        for text in texts {
            let doc = parse_document(text).unwrap();
            let emitted = emit_document(&doc);
            assert_eq!(parse_document(&emitted).unwrap(), doc);
        }
    }
}
