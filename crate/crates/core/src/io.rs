//! JSON formats for matroids, complexes, graphs and corpora.
//!
//! A matroid document is either explicit, `{"labels": [..], "bases": [[..], ..]}`, a graph
//! `{"edges": [[u, v, label], ..]}`, or a construction tagged by `"construct"`:
//!
//! ```json
//! {"construct": "direct_sum", "parts": [{"construct": "uniform", "r": 1, "n": 3}, ...]}
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::arith::{int, Int};
use crate::complex::SimplicialComplex;
use crate::corpus::{CorpusSpec, Instance, Tags};
use crate::error::{MatxError, Result};
use crate::graph::{Edge, Graph};
use crate::matroid::{parallel_connection, series_connection, Matroid, PointedMatroid};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplicitMatroid {
    pub labels: Vec<String>,
    pub bases: Vec<Vec<String>>,
}

impl From<&Matroid> for ExplicitMatroid {
    fn from(m: &Matroid) -> Self {
        ExplicitMatroid { labels: m.labels().to_vec(), bases: m.basis_masks().iter().map(|&b| m.names(b)).collect() }
    }
}

#[derive(Debug, Clone, Deserialize)]
struct GraphDoc {
    edges: Vec<Edge>,
}

#[derive(Debug, Clone, Deserialize)]
struct PointedDoc {
    matroid: Value,
    basepoint: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "construct", rename_all = "snake_case", deny_unknown_fields)]
enum Construct {
    Uniform { r: usize, n: usize },
    Graph { edges: Vec<Edge> },
    Dual { of: Value },
    DirectSum { parts: Vec<Value> },
    ParallelConnection { a: PointedDoc, b: PointedDoc },
    SeriesConnection { a: PointedDoc, b: PointedDoc },
    Delete { of: Value, elements: Vec<String> },
    Contract { of: Value, elements: Vec<String> },
    FreeCoextension { of: Value },
}

fn bad(e: serde_json::Error) -> MatxError {
    MatxError::Input(e.to_string())
}

fn pointed(d: PointedDoc) -> Result<PointedMatroid> {
    PointedMatroid::by_label(matroid_from_value(&d.matroid)?, &d.basepoint)
}

/// Builds a matroid from any of the accepted document shapes, validating the basis axioms.
pub fn matroid_from_value(v: &Value) -> Result<Matroid> {
    let obj = v.as_object().ok_or_else(|| MatxError::Input("matroid document must be a JSON object".into()))?;
    if obj.contains_key("construct") {
        let c: Construct = serde_json::from_value(v.clone()).map_err(bad)?;
        return match c {
            Construct::Uniform { r, n } => Matroid::uniform(r, n),
            Construct::Graph { edges } => Ok(Graph::new(&edges)?.cycle_matroid()),
            Construct::Dual { of } => Ok(matroid_from_value(&of)?.dual()),
            Construct::DirectSum { parts } => {
                let mut acc = Matroid::empty();
                for p in &parts {
                    acc = acc.direct_sum(&matroid_from_value(p)?)?;
                }
                Ok(acc)
            }
            Construct::ParallelConnection { a, b } => Ok(parallel_connection(&pointed(a)?, &pointed(b)?)?.into_matroid()),
            Construct::SeriesConnection { a, b } => Ok(series_connection(&pointed(a)?, &pointed(b)?)?.into_matroid()),
            Construct::Delete { of, elements } => {
                let m = matroid_from_value(&of)?;
                m.delete(m.set_of(&elements)?)
            }
            Construct::Contract { of, elements } => {
                let m = matroid_from_value(&of)?;
                m.contract(m.set_of(&elements)?)
            }
            Construct::FreeCoextension { of } => matroid_from_value(&of)?.free_coextension(),
        };
    }
    if obj.contains_key("bases") {
        let e: ExplicitMatroid = serde_json::from_value(v.clone()).map_err(bad)?;
        return Matroid::from_bases(&e.labels, &e.bases);
    }
    if obj.contains_key("edges") {
        return Ok(graph_from_value(v)?.cycle_matroid());
    }
    Err(MatxError::Input("expected `bases`, `edges` or `construct`".into()))
}

pub fn graph_from_value(v: &Value) -> Result<Graph> {
    let g: GraphDoc = serde_json::from_value(v.clone()).map_err(bad)?;
    Graph::new(&g.edges)
}

pub fn matroid_to_value(m: &Matroid) -> Value {
    serde_json::to_value(ExplicitMatroid::from(m)).expect("plain data serializes")
}

/// A bare h-vector with the vertex count and connectivity level it is claimed for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawHVector {
    pub h: Vec<Int>,
    pub n: usize,
    pub k: usize,
}

/// Anything the command line accepts as input.
#[derive(Debug, Clone)]
pub enum Document {
    Matroid(Matroid),
    Complex { complex: SimplicialComplex, k: Option<usize> },
    HVector(RawHVector),
}

// `f` and `h` from our own output are accepted and ignored.
#[derive(Deserialize)]
struct ComplexDoc {
    vertices: Vec<String>,
    facets: Vec<Vec<String>>,
    #[serde(default)]
    k: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HVectorDoc {
    h: Vec<i64>,
    n: usize,
    k: usize,
}

pub fn document_from_value(v: &Value) -> Result<Document> {
    let obj = v.as_object().ok_or_else(|| MatxError::Input("document must be a JSON object".into()))?;
    if obj.contains_key("facets") {
        let d: ComplexDoc = serde_json::from_value(v.clone()).map_err(bad)?;
        let complex = SimplicialComplex::from_named_facets(&d.vertices, &d.facets)?;
        return Ok(Document::Complex { complex, k: d.k });
    }
    if obj.contains_key("h") && !obj.contains_key("bases") {
        let d: HVectorDoc = serde_json::from_value(v.clone()).map_err(bad)?;
        if d.h.first() != Some(&1) || d.h.iter().any(|&x| x < 0) {
            return Err(MatxError::Input("h-vector must start with 1 and be nonnegative".into()));
        }
        return Ok(Document::HVector(RawHVector { h: d.h.into_iter().map(int).collect(), n: d.n, k: d.k }));
    }
    matroid_from_value(v).map(Document::Matroid)
}

pub fn read_json(path: &Path) -> Result<(Value, String)> {
    let bytes = fs::read(path).map_err(|e| MatxError::Input(format!("{}: {e}", path.display())))?;
    let v = serde_json::from_slice(&bytes).map_err(|e| MatxError::Input(format!("{}: {e}", path.display())))?;
    Ok((v, digest(&bytes)))
}

pub fn digest(bytes: &[u8]) -> String {
    let d = Sha256::digest(bytes);
    let hex: String = d.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

pub fn complex_to_value(c: &SimplicialComplex) -> Value {
    serde_json::json!({
        "vertices": c.labels(),
        "facets": c.facets().iter().map(|&f| c.names(f)).collect::<Vec<_>>(),
        "f": c.f_vector().iter().map(crate::arith::json_int::value).collect::<Vec<_>>(),
        "h": c.h_vector().iter().map(crate::arith::json_int::value).collect::<Vec<_>>(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ManifestEntry {
    pub id: String,
    pub file: String,
    pub provenance: String,
    pub tags: Tags,
}

#[derive(Debug, Clone, Serialize)]
pub struct Manifest {
    pub prng: &'static str,
    pub spec: CorpusSpec,
    pub count: usize,
    pub instances: Vec<ManifestEntry>,
}

pub const MANIFEST_FILE: &str = "manifest.json";

fn file_name(index: usize, id: &str) -> String {
    let safe: String = id
        .chars()
        .take(80)
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
        .collect();
    format!("{index:05}-{safe}.json")
}

#[derive(Serialize)]
struct InstanceDoc<'a> {
    id: &'a str,
    provenance: &'a str,
    labels: &'a [String],
    bases: Vec<Vec<String>>,
}

/// Writes one matroid document per instance plus `manifest.json` into `dir`.
pub fn write_corpus(dir: &Path, spec: &CorpusSpec, instances: &[Instance]) -> Result<Manifest> {
    let io = |e: std::io::Error| MatxError::Input(format!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let mut entries = Vec::with_capacity(instances.len());
    for (index, inst) in instances.iter().enumerate() {
        let file = file_name(index, &inst.id);
        let m = &inst.matroid;
        let doc = InstanceDoc {
            id: &inst.id,
            provenance: &inst.provenance,
            labels: m.labels(),
            bases: m.basis_masks().iter().map(|&b| m.names(b)).collect(),
        };
        let text = serde_json::to_string(&doc).expect("plain data serializes");
        fs::write(dir.join(&file), text + "\n").map_err(io)?;
        entries.push(ManifestEntry { id: inst.id.clone(), file, provenance: inst.provenance.clone(), tags: inst.tags.clone() });
    }
    let manifest = Manifest { prng: "ChaCha8", spec: spec.clone(), count: entries.len(), instances: entries };
    let text = serde_json::to_string_pretty(&manifest).expect("plain data serializes");
    fs::write(dir.join(MANIFEST_FILE), text + "\n").map_err(io)?;
    Ok(manifest)
}

/// Lists the instance files of a corpus directory in manifest order, or sorted by name
/// when there is no manifest.
pub fn corpus_files(dir: &Path) -> Result<Vec<(String, PathBuf)>> {
    let io = |e: std::io::Error| MatxError::Input(format!("{}: {e}", dir.display()));
    let manifest = dir.join(MANIFEST_FILE);
    if manifest.exists() {
        let (v, _) = read_json(&manifest)?;
        let list = v["instances"].as_array().ok_or_else(|| MatxError::Input("manifest has no instances".into()))?;
        return list
            .iter()
            .map(|e| match (e["id"].as_str(), e["file"].as_str()) {
                (Some(id), Some(f)) => Ok((id.to_string(), dir.join(f))),
                _ => Err(MatxError::Input("manifest entry lacks id or file".into())),
            })
            .collect();
    }
    let mut out = Vec::new();
    for entry in fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.extension().is_some_and(|e| e == "json") {
            let id = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            out.push((id, path));
        }
    }
    out.sort();
    Ok(out)
}
