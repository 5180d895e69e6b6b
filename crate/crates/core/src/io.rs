//! Instance and report files.
//!
//! Instances are JSON objects with fields written in a fixed order (`dim`,
//! `lines`, `meta`, `boxes`), one box per line, so that writing a parsed file
//! reproduces it byte for byte:
//!
//! ```text
//! {
//!   "dim": 2,
//!   "lines": {"axis":1,"c1":0,"c2":2},
//!   "boxes": [
//!     [[0,7],[0,1]],
//!     [[0,1],[0,5]]
//!   ]
//! }
//! ```

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{BoxFamily, BoxNd, Coord, Interval, Point, TwoLines};
use crate::pierce::{PierceReport, SplitPolicy, TraceEntry};

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub generator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub stream: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub description: Option<String>,
}

/// On-disk shape of an instance, before validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lines: Option<TwoLines>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub meta: Option<Meta>,
    pub boxes: Vec<Vec<[Coord; 2]>>,
}

/// A validated family plus the metadata it was stored with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub family: BoxFamily,
    pub meta: Option<Meta>,
}

impl Instance {
    pub fn new(family: BoxFamily) -> Self {
        Self { family, meta: None }
    }

    pub fn with_meta(family: BoxFamily, meta: Meta) -> Self {
        Self { family, meta: Some(meta) }
    }

    pub fn to_file(&self) -> InstanceFile {
        InstanceFile {
            dim: self.family.dim(),
            lines: self.family.lines(),
            meta: self.meta.clone(),
            boxes: self
                .family
                .boxes()
                .iter()
                .map(|b| b.sides().iter().map(|&iv| iv.into()).collect())
                .collect(),
        }
    }

    pub fn from_file(file: InstanceFile) -> Result<Self> {
        if file.dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut boxes = Vec::with_capacity(file.boxes.len());
        for (index, raw) in file.boxes.iter().enumerate() {
            if raw.len() != file.dim {
                return Err(Error::InvalidBox {
                    index,
                    reason: format!("has {} sides, expected {}", raw.len(), file.dim),
                });
            }
            let sides = raw
                .iter()
                .map(|&[lo, hi]| Interval::new(lo, hi))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::InvalidBox { index, reason: e.to_string() })?;
            boxes.push(BoxNd::new(sides)?);
        }
        let mut family = BoxFamily::new(file.dim, boxes)?;
        if let Some(lines) = file.lines {
            family = family.with_lines(lines)?;
        }
        Ok(Self { family, meta: file.meta })
    }
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse { line: e.line(), column: e.column(), message: e.to_string() }
}

fn compact<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

/// Canonical text of an instance.
pub fn format_instance(instance: &Instance) -> String {
    let file = instance.to_file();
    let mut out = String::from("{\n");
    writeln!(out, "  \"dim\": {},", file.dim).unwrap();
    if let Some(lines) = &file.lines {
        writeln!(out, "  \"lines\": {},", compact(lines)).unwrap();
    }
    if let Some(meta) = &file.meta {
        writeln!(out, "  \"meta\": {},", compact(meta)).unwrap();
    }
    if file.boxes.is_empty() {
        out.push_str("  \"boxes\": []\n");
    } else {
        out.push_str("  \"boxes\": [\n");
        let rows: Vec<String> = file.boxes.iter().map(|b| format!("    {}", compact(b))).collect();
        out.push_str(&rows.join(",\n"));
        out.push_str("\n  ]\n");
    }
    out.push_str("}\n");
    out
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let file: InstanceFile = serde_json::from_str(text).map_err(parse_error)?;
    Instance::from_file(file)
}

pub fn read_instance(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    parse_instance(&text)
}

pub fn write_instance(instance: &Instance, path: &Path) -> Result<()> {
    fs::write(path, format_instance(instance)).map_err(|e| io_error(path, e))
}

pub(crate) fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io { path: path.display().to_string(), message: e.to_string() }
}

/// Output of `pierce`: the report together with the instance it pierces, so
/// that `verify` can check it from a single document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub algo: String,
    pub policy: SplitPolicy,
    pub size: usize,
    pub guarantee: f64,
    pub nu_used: usize,
    pub points: Vec<Point>,
    pub trace: Vec<TraceEntry>,
    pub instance: InstanceFile,
}

impl ReportFile {
    pub fn new(algo: &str, policy: SplitPolicy, report: &PierceReport, instance: &Instance) -> Self {
        Self {
            algo: algo.to_string(),
            policy,
            size: report.size(),
            guarantee: report.guarantee,
            nu_used: report.nu_used,
            points: report.points.clone(),
            trace: report.trace.clone(),
            instance: instance.to_file(),
        }
    }
}

/// Points and, when present, the instance and claimed guarantee carried by a
/// points document. Accepts a `pierce` report, `{"points": [...]}`, or a bare
/// array of points.
#[derive(Debug, Clone, PartialEq)]
pub struct PointsDoc {
    pub points: Vec<Point>,
    pub guarantee: Option<f64>,
    pub instance: Option<Instance>,
}

pub fn parse_points(text: &str) -> Result<PointsDoc> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Doc {
        Bare(Vec<Point>),
        Object {
            points: Vec<Point>,
            #[serde(default)]
            guarantee: Option<f64>,
            #[serde(default)]
            instance: Option<InstanceFile>,
        },
    }
    // Untagged enums lose positions; parse once as a plain value to keep them.
    let value: serde_json::Value = serde_json::from_str(text).map_err(parse_error)?;
    let doc: Doc = serde_json::from_value(value).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("not a points document: {e}"),
    })?;
    Ok(match doc {
        Doc::Bare(points) => PointsDoc { points, guarantee: None, instance: None },
        Doc::Object { points, guarantee, instance } => PointsDoc {
            points,
            guarantee,
            instance: instance.map(Instance::from_file).transpose()?,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub hits_all: bool,
    pub size: usize,
    pub guarantee: Option<f64>,
    pub nu: Option<usize>,
    pub tau: Option<usize>,
    /// Indices of boxes containing no point.
    pub violations: Vec<usize>,
}

impl VerifyReport {
    pub fn check(family: &BoxFamily, points: &[Point], guarantee: Option<f64>) -> Result<Self> {
        let violations = family.unhit(points)?;
        Ok(Self { hits_all: violations.is_empty(), size: points.len(), guarantee, nu: None, tau: None, violations })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_gadget;

    #[test]
    fn gadget_round_trip() {
        let inst = Instance::with_meta(
            gen_gadget(),
            Meta { generator: Some("gadget".into()), description: Some("five-cycle".into()), ..Meta::default() },
        );
        let text = format_instance(&inst);
        let back = parse_instance(&text).unwrap();
        assert_eq!(back, inst);
        assert_eq!(format_instance(&back), text);
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.json");
        let inst = Instance::new(gen_gadget());
        write_instance(&inst, &path).unwrap();
        assert_eq!(read_instance(&path).unwrap(), inst);
        assert!(matches!(read_instance(&dir.path().join("missing.json")), Err(Error::Io { .. })));
    }

    #[test]
    fn reversed_interval_names_box() {
        let text = r#"{"dim": 1, "boxes": [[[0, 1]], [[5, 2]]]}"#;
        match parse_instance(text) {
            Err(Error::InvalidBox { index, .. }) => assert_eq!(index, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lines_are_optional() {
        let inst = parse_instance(r#"{"dim": 2, "boxes": [[[0, 1], [0, 1]]]}"#).unwrap();
        assert_eq!(inst.family.lines(), None);
        assert_eq!(inst.meta, None);
    }

    #[test]
    fn rejects_non_integers_with_location() {
        let text = "{\n  \"dim\": 1,\n  \"boxes\": [[[0, 1.5]]]\n}";
        match parse_instance(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_lines() {
        let text = r#"{"dim": 2, "lines": {"axis": 1, "c1": 0, "c2": 2}, "boxes": [[[0, 1], [5, 6]]]}"#;
        assert!(matches!(parse_instance(text), Err(Error::TwoLineViolation { index: 0, .. })));
    }

    #[test]
    fn points_documents() {
        assert_eq!(parse_points("[[1,2],[3,4]]").unwrap().points.len(), 2);
        let doc = parse_points(r#"{"points": [[1]], "guarantee": 2.0}"#).unwrap();
        assert_eq!(doc.guarantee, Some(2.0));
        assert!(doc.instance.is_none());
        assert!(parse_points(r#"{"pts": []}"#).is_err());
    }

    #[test]
    fn empty_family_formats() {
        let inst = Instance::new(BoxFamily::empty(3).unwrap());
        let text = format_instance(&inst);
        assert_eq!(parse_instance(&text).unwrap(), inst);
    }
}
