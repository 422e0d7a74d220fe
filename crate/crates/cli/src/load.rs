//! Resolution of documents into library values.
//!
//! Paths inside map documents resolve relative to the referring file's
//! directory; the bundled fixtures resolve against an in-memory registry
//! instead. Command-line `--space`/`--scale` flags override embedded
//! references.

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use thiserror::Error;

use orderlab::{FamilyLattice, FiniteLattice, FuzzyMap, Poset, SetFamily};

use crate::document::{parse_document, DocKind, Document, DocumentError};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        source: DocumentError,
    },
    #[error("{path}: {msg}")]
    Semantic { path: String, msg: String },
}

fn semantic(path: &str, msg: impl Into<String>) -> LoadError {
    LoadError::Semantic {
        path: path.to_owned(),
        msg: msg.into(),
    }
}

/// Where document text comes from.
pub enum Source<'a> {
    /// The filesystem; references resolve relative to the referring file.
    Disk,
    /// A name-to-text registry (the bundled fixtures).
    Registry(&'a HashMap<&'static str, &'static str>),
}

impl Source<'_> {
    /// Reads `path` as referenced from `from` (a file path or registry key).
    fn read(&self, from: Option<&str>, path: &str) -> Result<(String, String), LoadError> {
        match self {
            Source::Disk => {
                let resolved: PathBuf = match from {
                    Some(origin) => Path::new(origin)
                        .parent()
                        .map(|dir| dir.join(path))
                        .unwrap_or_else(|| PathBuf::from(path)),
                    None => PathBuf::from(path),
                };
                let text = std::fs::read_to_string(&resolved).map_err(|source| LoadError::Io {
                    path: resolved.display().to_string(),
                    source,
                })?;
                Ok((text, resolved.display().to_string()))
            }
            Source::Registry(map) => {
                let text = map.get(path).ok_or_else(|| LoadError::Io {
                    path: path.to_owned(),
                    source: std::io::Error::new(std::io::ErrorKind::NotFound, "not bundled"),
                })?;
                Ok(((*text).to_owned(), path.to_owned()))
            }
        }
    }
}

pub fn load_document(
    source: &Source,
    from: Option<&str>,
    path: &str,
) -> Result<(Document, String), LoadError> {
    let (text, resolved) = source.read(from, path)?;
    let doc = parse_document(&text).map_err(|e| LoadError::Parse {
        path: resolved.clone(),
        source: e,
    })?;
    Ok((doc, resolved))
}

pub fn poset_from_document(doc: &Document, path: &str) -> Result<Poset, LoadError> {
    if !matches!(doc.kind, DocKind::Poset | DocKind::Lattice) {
        return Err(semantic(path, format!("expected a poset, found {}", doc.kind)));
    }
    let elements = doc.elements.as_deref().expect("validated by the grammar");
    Poset::from_covers(elements, &doc.covers).map_err(|e| semantic(path, e.to_string()))
}

pub fn load_poset(source: &Source, from: Option<&str>, path: &str) -> Result<Poset, LoadError> {
    let (doc, resolved) = load_document(source, from, path)?;
    poset_from_document(&doc, &resolved)
}

/// Loads a scale: a lattice document, or a family document taken as its
/// reverse-inclusion lattice.
pub fn load_scale(
    source: &Source,
    from: Option<&str>,
    path: &str,
) -> Result<FiniteLattice, LoadError> {
    let (doc, resolved) = load_document(source, from, path)?;
    match doc.kind {
        DocKind::Lattice => {
            let poset = poset_from_document(&doc, &resolved)?;
            FiniteLattice::from_poset(poset).map_err(|e| semantic(&resolved, e.to_string()))
        }
        DocKind::Family => {
            let family = family_from_document(&doc, &resolved, None)?;
            Ok(FamilyLattice::new(family)
                .map_err(|e| semantic(&resolved, e.to_string()))?
                .lattice()
                .clone())
        }
        other => Err(semantic(
            &resolved,
            format!("expected a lattice or family, found {other}"),
        )),
    }
}

/// Resolves a family document against an optional base poset.
///
/// An `elements` directive fixes the base; without one the base comes from
/// the given poset, or failing that from the union of the members in first
/// appearance order. With both, the declared elements must be exactly the
/// poset's carrier.
pub fn family_from_document(
    doc: &Document,
    path: &str,
    base: Option<&Poset>,
) -> Result<SetFamily, LoadError> {
    if doc.kind != DocKind::Family {
        return Err(semantic(path, format!("expected a family, found {}", doc.kind)));
    }
    let base_names: Vec<String> = match (&doc.elements, base) {
        (Some(declared), Some(poset)) => {
            let mut a = declared.clone();
            let mut b = poset.elements().to_vec();
            a.sort();
            b.sort();
            if a != b {
                return Err(semantic(
                    path,
                    "declared family base differs from the space carrier",
                ));
            }
            poset.elements().to_vec()
        }
        (Some(declared), None) => declared.clone(),
        (None, Some(poset)) => poset.elements().to_vec(),
        (None, None) => {
            let mut names: Vec<String> = Vec::new();
            for set in &doc.sets {
                for e in set {
                    if !names.contains(e) {
                        names.push(e.clone());
                    }
                }
            }
            names
        }
    };
    SetFamily::new(&base_names, &doc.sets).map_err(|e| semantic(path, e.to_string()))
}

pub fn load_family(
    source: &Source,
    from: Option<&str>,
    path: &str,
    base: Option<&Poset>,
) -> Result<SetFamily, LoadError> {
    let (doc, resolved) = load_document(source, from, path)?;
    family_from_document(&doc, &resolved, base)
}

/// A loaded map document with its resolved space, scale, and entries.
pub struct LoadedMap {
    pub space: Poset,
    /// Present for value maps; absent for self-maps (closure documents).
    pub scale: Option<FiniteLattice>,
    pub entries: Vec<(String, String)>,
    pub space_ref: String,
    pub scale_ref: Option<String>,
}

impl LoadedMap {
    pub fn into_fuzzy_map(self, path: &str) -> Result<FuzzyMap, LoadError> {
        let scale = self
            .scale
            .ok_or_else(|| semantic(path, "map document has no `scale` reference"))?;
        FuzzyMap::new(self.space, scale, &self.entries).map_err(|e| semantic(path, e.to_string()))
    }
}

/// Loads a map document; `space_override`/`scale_override` replace the
/// embedded references when given.
pub fn load_map(
    source: &Source,
    path: &str,
    space_override: Option<&str>,
    scale_override: Option<&str>,
) -> Result<LoadedMap, LoadError> {
    let (doc, resolved) = load_document(source, None, path)?;
    if doc.kind != DocKind::Map {
        return Err(semantic(&resolved, format!("expected a map, found {}", doc.kind)));
    }
    let embedded_space = doc.space.clone().expect("validated by the grammar");
    let (space, space_ref) = match space_override {
        Some(p) => (load_poset(source, None, p)?, p.to_owned()),
        None => (
            load_poset(source, Some(&resolved), &embedded_space)?,
            embedded_space,
        ),
    };
    let scale_ref = scale_override
        .map(str::to_owned)
        .or_else(|| doc.scale.clone());
    let scale = match (&scale_ref, scale_override) {
        (Some(p), Some(_)) => Some(load_scale(source, None, p)?),
        (Some(p), None) => Some(load_scale(source, Some(&resolved), p)?),
        (None, _) => None,
    };
    Ok(LoadedMap {
        space,
        scale,
        entries: doc.pairs,
        space_ref,
        scale_ref,
    })
}

/// Writes a witness map as a document, carrying the references it was
/// built from.
pub fn witness_document(map: &FuzzyMap, space_ref: &str, scale_ref: &str) -> String {
    let doc = Document {
        kind: DocKind::Map,
        elements: None,
        covers: Vec::new(),
        sets: Vec::new(),
        pairs: map.entries(),
        space: Some(space_ref.to_owned()),
        scale: Some(scale_ref.to_owned()),
    };
    crate::document::emit_document(&doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn registry() -> HashMap<&'static str, &'static str> {
        let mut m = HashMap::new();
        m.insert("two.pos", "type poset\nelements x y\ncover x y\n");
        m.insert("scale.lat", "type lattice\nelements 0 1\ncover 0 1\n");
        m.insert(
            "m.map",
            "type map\nspace two.pos\nscale scale.lat\npair x 0\npair y 1\n",
        );
        m.insert("c.map", "type map\nspace two.pos\npair x y\npair y y\n");
        m.insert("fam.fam", "type family\nset\nset x y\n");
        m
    }

    #[test]
    fn loads_a_map_with_references() {
        let reg = registry();
        let source = Source::Registry(&reg);
        let loaded = load_map(&source, "m.map", None, None).unwrap();
        let m = loaded.into_fuzzy_map("m.map").unwrap();
        assert_eq!(m.value("y").unwrap(), "1");
    }

    #[test]
    fn self_map_documents_have_no_scale() {
        let reg = registry();
        let source = Source::Registry(&reg);
        let loaded = load_map(&source, "c.map", None, None).unwrap();
        assert!(loaded.scale.is_none());
        assert_eq!(loaded.entries.len(), 2);
    }

    #[test]
    fn family_base_comes_from_the_space_when_missing() {
        let reg = registry();
        let source = Source::Registry(&reg);
        let space = load_poset(&source, None, "two.pos").unwrap();
        let family = load_family(&source, None, "fam.fam", Some(&space)).unwrap();
        assert_eq!(family.base(), space.elements());
        assert_eq!(family.len(), 2);
    }

    #[test]
    fn non_lattice_scale_is_rejected() {
        let mut reg = registry();
        reg.insert("bad.lat", "type lattice\nelements a b\n");
        let source = Source::Registry(&reg);
        let err = load_scale(&source, None, "bad.lat").unwrap_err();
        assert!(matches!(err, LoadError::Semantic { .. }));
    }
}
