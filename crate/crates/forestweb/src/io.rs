//! JSON import/export for every core object.
//!
//! All payloads share one envelope: a `schemaVersion` field plus a `kind`
//! discriminator, so a stream of mixed objects is self-describing. Parsing
//! is strict — structural problems surface as [`Error::Parse`], while
//! payloads that parse but violate a domain invariant surface as the same
//! validation error the constructor would raise.

use serde::{Deserialize, Serialize};

use crate::catalan::{DyckPath, NoncrossingMatching, Tableau2Col};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::verify::VerificationReport;
use crate::webs::{
    CyclicInterval, ForestWeb, VertexColor, VertexLocation, WebEdge, WebGraph, WebKind, WebVertex,
};

pub const SCHEMA_VERSION: &str = "1.0";

/// Any value the library can exchange as JSON.
#[derive(Debug, Clone, PartialEq)]
pub enum CoreObject {
    Permutation(Permutation),
    Tableau(Tableau2Col),
    Path(DyckPath),
    Matching(NoncrossingMatching),
    Web(ForestWeb),
    Graph(WebGraph),
    Report(VerificationReport),
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct Envelope {
    schema_version: String,
    #[serde(flatten)]
    body: Body,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
enum Body {
    Permutation {
        word: Vec<usize>,
    },
    Tableau {
        col1: Vec<usize>,
        col2: Vec<usize>,
    },
    #[serde(rename = "path")]
    DyckPath {
        steps: String,
    },
    /// 1-based involution table: entry `i-1` is the partner of point `i`.
    Matching {
        partner: Vec<usize>,
    },
    #[serde(rename_all = "camelCase")]
    ForestWeb {
        r: usize,
        #[serde(rename = "type")]
        web_type: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        blocks: Option<[Vec<usize>; 2]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        sectors: Option<[Vec<usize>; 3]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        hourglass: Option<[usize; 3]>,
    },
    #[serde(rename_all = "camelCase")]
    WebGraph {
        r: usize,
        vertices: Vec<JsonVertex>,
        edges: Vec<JsonEdge>,
        boundary_order: Vec<String>,
    },
    Report(VerificationReport),
}

#[derive(Serialize, Deserialize)]
struct JsonVertex {
    name: String,
    color: String,
    location: String,
}

#[derive(Serialize, Deserialize)]
struct JsonEdge {
    a: String,
    b: String,
    multiplicity: usize,
}

fn body_of(obj: &CoreObject) -> Body {
    match obj {
        CoreObject::Permutation(p) => Body::Permutation { word: p.word().to_vec() },
        CoreObject::Tableau(t) => Body::Tableau {
            col1: t.col1().to_vec(),
            col2: t.col2().to_vec(),
        },
        CoreObject::Path(p) => Body::DyckPath { steps: p.word() },
        CoreObject::Matching(m) => Body::Matching { partner: m.partner_table().to_vec() },
        CoreObject::Web(w) => {
            let n = 2 * w.r();
            let (blocks, sectors, hourglass) = match w.kind() {
                WebKind::TwoWhite { blocks } => {
                    (Some([blocks[0].labels(n), blocks[1].labels(n)]), None, None)
                }
                WebKind::ThreeWhite { sectors, hourglass } => (
                    None,
                    Some([sectors[0].labels(n), sectors[1].labels(n), sectors[2].labels(n)]),
                    Some(*hourglass),
                ),
            };
            Body::ForestWeb {
                r: w.r(),
                web_type: match w.kind() {
                    WebKind::TwoWhite { .. } => "twoWhite".into(),
                    WebKind::ThreeWhite { .. } => "threeWhite".into(),
                },
                blocks,
                sectors,
                hourglass,
            }
        }
        CoreObject::Graph(g) => Body::WebGraph {
            r: g.r,
            vertices: g
                .vertices
                .iter()
                .map(|v| JsonVertex {
                    name: v.name.clone(),
                    color: match v.color {
                        VertexColor::Black => "black".into(),
                        VertexColor::White => "white".into(),
                    },
                    location: match v.location {
                        VertexLocation::Boundary => "boundary".into(),
                        VertexLocation::Interior => "interior".into(),
                    },
                })
                .collect(),
            edges: g
                .edges
                .iter()
                .map(|e| JsonEdge {
                    a: e.a.clone(),
                    b: e.b.clone(),
                    multiplicity: e.multiplicity,
                })
                .collect(),
            boundary_order: g.boundary_order.clone(),
        },
        CoreObject::Report(r) => Body::Report(r.clone()),
    }
}

pub fn to_json(obj: &CoreObject) -> String {
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION.to_string(),
        body: body_of(obj),
    };
    serde_json::to_string_pretty(&envelope).expect("envelope serialization cannot fail")
}

/// Single-line form of [`to_json`], for JSON-lines streams.
pub fn to_json_compact(obj: &CoreObject) -> String {
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION.to_string(),
        body: body_of(obj),
    };
    serde_json::to_string(&envelope).expect("envelope serialization cannot fail")
}

/// A run of consecutive labels mod `n`, or a parse error naming the field.
fn interval_from_labels(labels: &[usize], n: usize, field: &str) -> Result<CyclicInterval> {
    if labels.is_empty() {
        return Err(Error::Parse(format!("{field} must be non-empty")));
    }
    let iv = CyclicInterval { start: labels[0], len: labels.len() };
    if labels[0] < 1 || labels[0] > n || iv.labels(n) != labels {
        return Err(Error::Parse(format!(
            "{field} {labels:?} is not a cyclic run of labels in 1..={n}"
        )));
    }
    Ok(iv)
}

pub fn from_json(text: &str) -> Result<CoreObject> {
    let envelope: Envelope =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if envelope.schema_version != SCHEMA_VERSION {
        return Err(Error::Parse(format!(
            "unsupported schema version {:?}; expected {SCHEMA_VERSION:?}",
            envelope.schema_version
        )));
    }
    match envelope.body {
        Body::Permutation { word } => Ok(CoreObject::Permutation(Permutation::new(word)?)),
        Body::Tableau { col1, col2 } => Ok(CoreObject::Tableau(Tableau2Col::new(col1, col2)?)),
        Body::DyckPath { steps } => Ok(CoreObject::Path(DyckPath::from_word(&steps)?)),
        Body::Matching { partner } => Ok(CoreObject::Matching(NoncrossingMatching::new(partner)?)),
        Body::ForestWeb { r, web_type, blocks, sectors, hourglass } => {
            let n = 2 * r;
            let web = match (web_type.as_str(), blocks, sectors, hourglass) {
                ("twoWhite", Some(blocks), None, None) => {
                    let a = interval_from_labels(&blocks[0], n, "blocks[0]")?;
                    let b = interval_from_labels(&blocks[1], n, "blocks[1]")?;
                    let web = ForestWeb::two_white(r, a.start)?;
                    let WebKind::TwoWhite { blocks: canon } = web.kind() else {
                        unreachable!()
                    };
                    let given = if canon[0] == a { [a, b] } else { [b, a] };
                    if *canon != given {
                        return Err(Error::InvalidWeb(
                            "blocks are not complementary cyclic intervals of size r".into(),
                        ));
                    }
                    web
                }
                ("threeWhite", None, Some(sectors), Some(hourglass)) => {
                    let s0 = interval_from_labels(&sectors[0], n, "sectors[0]")?;
                    let s1 = interval_from_labels(&sectors[1], n, "sectors[1]")?;
                    let s2 = interval_from_labels(&sectors[2], n, "sectors[2]")?;
                    ForestWeb::three_white(r, [s0, s1, s2], hourglass)?
                }
                _ => {
                    return Err(Error::Parse(format!(
                        "forestWeb of type {web_type:?} must carry exactly the matching \
                         fields (blocks for twoWhite; sectors and hourglass for threeWhite)"
                    )))
                }
            };
            Ok(CoreObject::Web(web))
        }
        Body::WebGraph { r, vertices, edges, boundary_order } => {
            let vertices = vertices
                .into_iter()
                .map(|v| {
                    let color = match v.color.as_str() {
                        "black" => VertexColor::Black,
                        "white" => VertexColor::White,
                        other => return Err(Error::Parse(format!("unknown color {other:?}"))),
                    };
                    let location = match v.location.as_str() {
                        "boundary" => VertexLocation::Boundary,
                        "interior" => VertexLocation::Interior,
                        other => return Err(Error::Parse(format!("unknown location {other:?}"))),
                    };
                    Ok(WebVertex { name: v.name, color, location })
                })
                .collect::<Result<Vec<_>>>()?;
            let edges = edges
                .into_iter()
                .map(|e| WebEdge { a: e.a, b: e.b, multiplicity: e.multiplicity })
                .collect();
            Ok(CoreObject::Graph(WebGraph { r, vertices, edges, boundary_order }))
        }
        Body::Report(report) => Ok(CoreObject::Report(report)),
    }
}
