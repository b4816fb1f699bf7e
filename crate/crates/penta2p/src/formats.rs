//! File formats: JSON records for graphs, plane maps, stellations,
//! op-drawings, witnesses and certificates, plus edge-list text and DOT.
//!
//! Serialization is deterministic: serializing, parsing and serializing
//! again is byte-identical.

use anyhow::{anyhow, bail, Context, Result};
use penta2p_core::ham::{Certificate, HamWitness, Verdict, WitnessKind};
use penta2p_core::op2planar::{insert_pentagrams, OpDrawing};
use penta2p_core::stellation::StellatedMap;
use penta2p_core::{Graph, PlaneMap, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> GraphJson {
        GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::build(self.n, &edges).map_err(|e| anyhow!("bad graph: {e:?}"))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaneMapJson {
    pub n: usize,
    pub rotations: Vec<Vec<usize>>,
    /// Outer face as its boundary cycle, when one is designated.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub outer_face: Option<Vec<usize>>,
}

/// True iff `b` is a cyclic rotation of `a` (same orientation).
fn same_cycle(a: &[usize], b: &[usize]) -> bool {
    let k = a.len();
    if b.len() != k || k == 0 {
        return false;
    }
    (0..k).any(|s| (0..k).all(|i| a[(s + i) % k] == b[i]))
}

impl PlaneMapJson {
    pub fn from_map(m: &PlaneMap) -> Result<PlaneMapJson> {
        let outer_face = match m.outer_face() {
            Some(idx) => {
                let faces = m.faces().map_err(|e| anyhow!("invalid map: {e}"))?;
                Some(
                    faces
                        .get(idx)
                        .context("outer face index out of range")?
                        .boundary
                        .clone(),
                )
            }
            None => None,
        };
        Ok(PlaneMapJson {
            n: m.n(),
            rotations: m.rotations().to_vec(),
            outer_face,
        })
    }

    pub fn to_map(&self) -> Result<PlaneMap> {
        if self.rotations.len() != self.n {
            bail!(
                "rotation count {} does not match n = {}",
                self.rotations.len(),
                self.n
            );
        }
        let m = PlaneMap::new(self.rotations.clone());
        let report = m.validate();
        if !report.is_valid() {
            bail!("invalid map: {}", report.violations.join("; "));
        }
        match &self.outer_face {
            None => Ok(m),
            Some(boundary) => {
                let faces = m.faces().map_err(|e| anyhow!("{e}"))?;
                let idx = faces
                    .iter()
                    .position(|f| same_cycle(&f.boundary, boundary))
                    .context("outer_face does not bound any face of the map")?;
                Ok(m.with_outer_face(idx))
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StellatedJson {
    pub n: usize,
    pub rotations: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub outer_face: Option<Vec<usize>>,
    pub initial: Vec<usize>,
    pub stellating: Vec<usize>,
}

impl StellatedJson {
    pub fn from_stellated(s: &StellatedMap) -> Result<StellatedJson> {
        let base = PlaneMapJson::from_map(&s.map)?;
        Ok(StellatedJson {
            n: base.n,
            rotations: base.rotations,
            outer_face: base.outer_face,
            initial: s.initial_vertices().collect(),
            stellating: s.stellating_vertices().collect(),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PentagramJson {
    pub face: usize,
    pub boundary: [usize; 5],
    pub chords: [[usize; 2]; 5],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpDrawingJson {
    pub skeleton: PlaneMapJson,
    pub pentagrams: Vec<PentagramJson>,
}

impl OpDrawingJson {
    pub fn from_drawing(d: &OpDrawing) -> Result<OpDrawingJson> {
        Ok(OpDrawingJson {
            skeleton: PlaneMapJson::from_map(d.planar_skeleton())?,
            pentagrams: d
                .pentagrams()
                .iter()
                .map(|p| PentagramJson {
                    face: p.face,
                    boundary: p.boundary,
                    chords: p.chords().map(|(u, v)| [u, v]),
                })
                .collect(),
        })
    }

    /// Rebuilds the drawing from the skeleton and checks the recorded
    /// pentagrams against the rederived ones.
    pub fn to_drawing(&self) -> Result<OpDrawing> {
        let skeleton = self.skeleton.to_map()?;
        let d = insert_pentagrams(&skeleton).map_err(|e| anyhow!("{e}"))?;
        if d.pentagrams().len() != self.pentagrams.len() {
            bail!("pentagram count does not match the skeleton's face count");
        }
        for (got, want) in d.pentagrams().iter().zip(&self.pentagrams) {
            if got.face != want.face || got.boundary != want.boundary {
                bail!(
                    "pentagram record for face {} does not match the skeleton",
                    want.face
                );
            }
            if got.chords().map(|(u, v)| [u, v]) != want.chords {
                bail!("chord record for face {} does not match", want.face);
            }
        }
        Ok(d)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessJson {
    pub kind: String,
    pub vertices: Vec<usize>,
}

impl WitnessJson {
    pub fn from_witness(w: &HamWitness) -> WitnessJson {
        WitnessJson {
            kind: match w.kind {
                WitnessKind::Path => "path".into(),
                WitnessKind::Cycle => "cycle".into(),
            },
            vertices: w.vertices.clone(),
        }
    }

    pub fn to_witness(&self) -> Result<HamWitness> {
        let kind = match self.kind.as_str() {
            "path" => WitnessKind::Path,
            "cycle" => WitnessKind::Cycle,
            other => bail!("unknown witness kind {other:?}"),
        };
        Ok(HamWitness {
            vertices: self.vertices.clone(),
            kind,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    pub cut: Vec<usize>,
    pub component_count: usize,
    pub odd_component_count: usize,
    pub verdict: String,
}

impl CertificateJson {
    pub fn from_certificate(c: &Certificate) -> CertificateJson {
        CertificateJson {
            cut: c.cut.iter().copied().collect(),
            component_count: c.component_count,
            odd_component_count: c.odd_component_count,
            verdict: c.verdict.to_string(),
        }
    }

    pub fn to_certificate(&self) -> Result<Certificate> {
        let verdict = match self.verdict.as_str() {
            "NonHamiltonian" => Verdict::NonHamiltonian,
            "NoPerfectMatchingBound" => Verdict::NoPerfectMatchingBound,
            "Inconclusive" => Verdict::Inconclusive,
            other => bail!("unknown verdict {other:?}"),
        };
        Ok(Certificate {
            cut: self.cut.iter().copied().collect::<VertexSet>(),
            component_count: self.component_count,
            odd_component_count: self.odd_component_count,
            verdict,
        })
    }
}

pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

// ---------------------------------------------------------------------------
// edge-list text
// ---------------------------------------------------------------------------

/// `"n m"` header then one `"u v"` line per edge, in sorted order.
pub fn to_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().context("empty edge list")?;
    let mut head = header.split_whitespace();
    let n: usize = head.next().context("missing n")?.parse()?;
    let m: usize = head.next().context("missing m")?.parse()?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = it.next().context("missing endpoint")?.parse()?;
        let v: usize = it.next().context("missing endpoint")?.parse()?;
        edges.push((u, v));
    }
    if edges.len() != m {
        bail!("edge list header promises {m} edges, found {}", edges.len());
    }
    Graph::build(n, &edges).map_err(|e| anyhow!("bad graph: {e:?}"))
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

/// Plain undirected DOT.
pub fn dot_graph(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// DOT of a plane map's underlying graph; stellating vertices (ids in
/// `stellating`) are drawn as boxes.
pub fn dot_map(m: &PlaneMap, stellating: &[usize]) -> String {
    let g = m.graph();
    let stell: VertexSet = stellating.iter().copied().collect();
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        if stell.contains(&v) {
            out.push_str(&format!("  {v} [shape=box, style=filled];\n"));
        } else {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// DOT of an op-drawing's abstract graph: skeleton edges solid, pentagram
/// chords dashed.
pub fn dot_op(d: &OpDrawing) -> Result<String> {
    let g = d.abstract_graph().map_err(|e| anyhow!("{e}"))?;
    let skeleton: std::collections::BTreeSet<(usize, usize)> =
        d.planar_skeleton().graph().edges().into_iter().collect();
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        if skeleton.contains(&(u, v)) {
            out.push_str(&format!("  {u} -- {v};\n"));
        } else {
            out.push_str(&format!("  {u} -- {v} [style=dashed, color=red];\n"));
        }
    }
    out.push_str("}\n");
    Ok(out)
}
