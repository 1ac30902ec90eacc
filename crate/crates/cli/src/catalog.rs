//! Knot/pattern catalog: a single canonical JSON document (UTF-8, sorted
//! keys, row-major matrices) with validation on load, plus the shipped
//! default entries.

use crate::error::{CliError, EXIT_IO, EXIT_LOOKUP, EXIT_PARSE};
use crate::laurent_text;
use concord_core::blanchfield::ModuleElement;
use concord_core::freegroup::Word;
use concord_core::infection::{Curve, CurveClass, LeafKnot, Pattern, PatternKind, Sliceness};
use concord_core::seifert::SeifertMatrix;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub const CATALOG_ENV: &str = "CONCORD_CATALOG";
pub const DEFAULT_CATALOG_FILE: &str = "concord-catalog.json";

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CatalogFile {
    pub knots: BTreeMap<String, CatalogEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CatalogEntry {
    pub flags: Flags,
    pub kind: EntryKind,
    /// Row-major integer entries of the Seifert matrix (knots only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pattern: Option<PatternBlock>,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Default)]
pub struct Flags {
    pub amphichiral: bool,
    pub ribbon: bool,
    pub slice: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum EntryKind {
    Knot,
    Link { components: usize },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PatternBlock {
    pub curves: Vec<CurveSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ribbon_kernels: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CurveSpec {
    pub class: ClassSpec,
    pub depth: u32,
    pub id: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum ClassSpec {
    /// Coordinates over Q[t, t^-1], one Laurent polynomial per basis slot.
    Module(Vec<String>),
    Word(String),
}

impl CatalogFile {
    /// The shipped default catalog.
    pub fn default_catalog() -> Self {
        let mut knots = BTreeMap::new();
        knots.insert(
            "unknot".to_string(),
            CatalogEntry {
                flags: Flags {
                    amphichiral: true,
                    ribbon: true,
                    slice: true,
                },
                kind: EntryKind::Knot,
                matrix: Some(Vec::new()),
                pattern: None,
            },
        );
        knots.insert(
            "trefoil".to_string(),
            CatalogEntry {
                flags: Flags::default(),
                kind: EntryKind::Knot,
                matrix: Some(vec![-1, 1, 0, -1]),
                pattern: None,
            },
        );
        knots.insert(
            "figure-eight".to_string(),
            CatalogEntry {
                flags: Flags {
                    amphichiral: true,
                    ribbon: false,
                    slice: false,
                },
                kind: EntryKind::Knot,
                matrix: Some(vec![1, 1, 0, -1]),
                pattern: Some(PatternBlock {
                    curves: vec![
                        CurveSpec {
                            class: ClassSpec::Module(vec!["1".into(), "0".into()]),
                            depth: 1,
                            id: "eta+".into(),
                        },
                        CurveSpec {
                            class: ClassSpec::Module(vec!["0".into(), "1".into()]),
                            depth: 1,
                            id: "eta-".into(),
                        },
                    ],
                    ribbon_kernels: Vec::new(),
                }),
            },
        );
        knots.insert(
            "R1".to_string(),
            CatalogEntry {
                flags: Flags {
                    amphichiral: false,
                    ribbon: true,
                    slice: true,
                },
                kind: EntryKind::Knot,
                matrix: Some(vec![0, 2, 1, 0]),
                pattern: Some(PatternBlock {
                    curves: vec![
                        CurveSpec {
                            class: ClassSpec::Module(vec!["1".into(), "0".into()]),
                            depth: 1,
                            id: "eta+".into(),
                        },
                        CurveSpec {
                            class: ClassSpec::Module(vec!["0".into(), "1".into()]),
                            depth: 1,
                            id: "eta-".into(),
                        },
                    ],
                    ribbon_kernels: vec![
                        vec!["1".into(), "0".into()],
                        vec!["0".into(), "1".into()],
                    ],
                }),
            },
        );
        for m in [2usize, 4, 8] {
            knots.insert(
                format!("T{}", m),
                CatalogEntry {
                    flags: Flags {
                        amphichiral: false,
                        ribbon: true,
                        slice: true,
                    },
                    kind: EntryKind::Link { components: m },
                    matrix: None,
                    pattern: None,
                },
            );
        }
        CatalogFile { knots }
    }

    /// Canonical serialization: pretty JSON with sorted keys and a trailing
    /// newline. Byte-stable across load/save round trips.
    pub fn to_canonical_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("catalog serializes");
        s.push('\n');
        s
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::new(EXIT_IO, format!("cannot read catalog {}: {}", path.display(), e))
        })?;
        let file: CatalogFile = serde_json::from_str(&text).map_err(|e| {
            CliError::new(EXIT_PARSE, format!("catalog {}: {}", path.display(), e))
        })?;
        for (name, entry) in &file.knots {
            entry.validate(name)?;
        }
        Ok(file)
    }

    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        std::fs::write(path, self.to_canonical_json()).map_err(|e| {
            CliError::new(EXIT_IO, format!("cannot write catalog {}: {}", path.display(), e))
        })
    }

    pub fn lookup(&self, name: &str) -> Result<(&str, &CatalogEntry), CliError> {
        let resolved = match name {
            "9_46" | "946" => "R1",
            "fig8" => "figure-eight",
            other => other,
        };
        self.knots
            .get_key_value(resolved)
            .map(|(k, v)| (k.as_str(), v))
            .ok_or_else(|| CliError::new(EXIT_LOOKUP, format!("unknown catalog name '{}'", name)))
    }

    /// Leaf knot data for a catalog name.
    pub fn leaf(&self, name: &str) -> Result<LeafKnot, CliError> {
        let (canonical, entry) = self.lookup(name)?;
        if !matches!(entry.kind, EntryKind::Knot) {
            return Err(CliError::new(
                EXIT_PARSE,
                format!("'{}' is a link, not a knot", name),
            ));
        }
        let v = entry.seifert(canonical)?;
        let mut leaf = LeafKnot::from_seifert(v);
        leaf.label = canonical.to_string();
        leaf.sliceness = entry.flags.sliceness();
        leaf.amphichiral = entry.flags.amphichiral;
        Ok(leaf)
    }

    /// Infection pattern for a catalog name (requires a pattern block for
    /// knot entries; trivial links yield curve-less link patterns).
    pub fn pattern(&self, name: &str) -> Result<Pattern, CliError> {
        let (canonical, entry) = self.lookup(name)?;
        entry.to_pattern(canonical)
    }
}

impl Flags {
    pub fn sliceness(&self) -> Sliceness {
        if self.ribbon {
            Sliceness::Ribbon
        } else if self.slice {
            Sliceness::Slice
        } else {
            Sliceness::NotKnownSlice
        }
    }
}

impl CatalogEntry {
    pub fn seifert(&self, name: &str) -> Result<SeifertMatrix, CliError> {
        let Some(flat) = &self.matrix else {
            return Err(CliError::new(
                EXIT_PARSE,
                format!("entry '{}' has no Seifert matrix", name),
            ));
        };
        let n = (flat.len() as f64).sqrt() as usize;
        if n * n != flat.len() {
            return Err(CliError::new(
                EXIT_PARSE,
                format!("entry '{}': matrix list of length {} is not square", name, flat.len()),
            ));
        }
        let rows: Vec<Vec<i64>> = (0..n).map(|i| flat[i * n..(i + 1) * n].to_vec()).collect();
        let v = SeifertMatrix::new(rows)
            .map_err(|e| CliError::new(EXIT_PARSE, format!("entry '{}': {}", name, e)))?;
        Ok(v.with_label(name))
    }

    pub fn validate(&self, name: &str) -> Result<(), CliError> {
        if self.flags.ribbon && !self.flags.slice {
            return Err(CliError::new(
                EXIT_PARSE,
                format!("entry '{}': ribbon implies slice", name),
            ));
        }
        match self.kind {
            EntryKind::Knot => {
                self.seifert(name)?;
            }
            EntryKind::Link { .. } => {
                if self.matrix.is_some() {
                    return Err(CliError::new(
                        EXIT_PARSE,
                        format!("entry '{}': links carry no Seifert matrix", name),
                    ));
                }
            }
        }
        if self.pattern.is_some() {
            // full curve validation happens through the core pattern
            self.to_pattern(name)?;
        }
        Ok(())
    }

    pub fn to_pattern(&self, name: &str) -> Result<Pattern, CliError> {
        let kind = match self.kind {
            EntryKind::Knot => PatternKind::Knot,
            EntryKind::Link { components } => PatternKind::Link(components),
        };
        let seifert = match kind {
            PatternKind::Knot => Some(self.seifert(name)?),
            PatternKind::Link(_) => None,
        };
        let block = self.pattern.clone().unwrap_or(PatternBlock {
            curves: Vec::new(),
            ribbon_kernels: Vec::new(),
        });
        if matches!(kind, PatternKind::Knot) && block.curves.is_empty() && self.pattern.is_none() {
            return Err(CliError::new(
                EXIT_PARSE,
                format!("entry '{}' has no pattern block with infection curves", name),
            ));
        }
        let mut curves = Vec::new();
        for spec in &block.curves {
            let class = match &spec.class {
                ClassSpec::Module(coords) => {
                    CurveClass::Module(parse_module_element(coords).map_err(|e| {
                        CliError::new(EXIT_PARSE, format!("entry '{}': {}", name, e))
                    })?)
                }
                ClassSpec::Word(w) => CurveClass::Word(Word::parse(w).map_err(|e| {
                    CliError::new(EXIT_PARSE, format!("entry '{}': {}", name, e))
                })?),
            };
            curves.push(Curve {
                id: spec.id.clone(),
                depth: spec.depth,
                class,
            });
        }
        let ribbon_kernels = block
            .ribbon_kernels
            .iter()
            .map(|coords| parse_module_element(coords))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::new(EXIT_PARSE, format!("entry '{}': {}", name, e)))?;
        let pattern = Pattern {
            id: name.to_string(),
            kind,
            seifert,
            sliceness: self.flags.sliceness(),
            curves,
            amphichiral: self.flags.amphichiral,
            ribbon_kernels,
        };
        pattern
            .validate()
            .map_err(|e| CliError::new(EXIT_PARSE, format!("entry '{}': {}", name, e)))?;
        Ok(pattern)
    }
}

pub fn parse_module_element(coords: &[String]) -> Result<ModuleElement, String> {
    coords.iter().map(|s| laurent_text::parse(s)).collect()
}

/// Catalog path resolution: the CONCORD_CATALOG environment variable, then
/// ./concord-catalog.json when present.
pub fn resolve_path() -> Option<PathBuf> {
    if let Ok(p) = std::env::var(CATALOG_ENV) {
        return Some(PathBuf::from(p));
    }
    let local = PathBuf::from(DEFAULT_CATALOG_FILE);
    if local.exists() {
        return Some(local);
    }
    None
}

/// Loads the active catalog: the resolved file, or the builtin defaults.
pub fn active_catalog() -> Result<CatalogFile, CliError> {
    match resolve_path() {
        Some(p) => CatalogFile::load(&p),
        None => Ok(CatalogFile::default_catalog()),
    }
}
