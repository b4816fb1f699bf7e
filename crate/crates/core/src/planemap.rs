//! Combinatorial plane embeddings as rotation systems.
//!
//! A map stores, for every vertex, the cyclic order of its neighbors. Faces
//! are the orbits of darts under the traversal rule: from dart `(u, v)` the
//! next dart is `(v, w)` where `w` follows `u` in the rotation of `v`. All
//! "plane" claims are purely combinatorial; no coordinates are kept.

use crate::graph::{Graph, VertexSet};
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapError {
    /// The map violates a [`PlaneMap`] invariant; the report lists why.
    InvalidMap(ValidationReport),
    /// An operation required vertex connectivity at least 3.
    NotThreeConnected,
}

impl fmt::Display for MapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapError::InvalidMap(report) => {
                write!(f, "invalid plane map: ")?;
                for (i, v) in report.violations.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
            MapError::NotThreeConnected => write!(f, "map is not 3-connected"),
        }
    }
}

/// Violations are data, not exceptions: an empty report means valid.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A face boundary as traversed, e.g. `[0, 3, 5]` for a triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub boundary: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// True iff the boundary is a cycle of `k` distinct vertices.
    pub fn is_simple_cycle(&self) -> bool {
        let set: BTreeSet<usize> = self.boundary.iter().copied().collect();
        set.len() == self.boundary.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.boundary.iter().copied().collect()
    }
}

/// A plane (sphere) embedding given by per-vertex cyclic neighbor lists.
///
/// `outer_face` optionally designates one face orbit as the outer face;
/// sphere embeddings have no intrinsic outer face, so the designation is
/// plain data used by the gadget-embedding operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneMap {
    rotations: Vec<Vec<usize>>,
    outer_face: Option<usize>,
}

impl PlaneMap {
    pub fn new(rotations: Vec<Vec<usize>>) -> PlaneMap {
        PlaneMap {
            rotations,
            outer_face: None,
        }
    }

    pub fn with_outer_face(mut self, face: usize) -> PlaneMap {
        self.outer_face = Some(face);
        self
    }

    pub fn n(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotations.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn outer_face(&self) -> Option<usize> {
        self.outer_face
    }

    /// The underlying abstract graph.
    pub fn graph(&self) -> Graph {
        let mut edges = Vec::new();
        for (u, nb) in self.rotations.iter().enumerate() {
            for &v in nb {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        Graph::build(self.n(), &edges).expect("rotation entries within range")
    }

    /// Checks all map invariants and reports every violation found.
    pub fn validate(&self) -> ValidationReport {
        let n = self.n();
        let mut report = ValidationReport::default();
        let mut structural = true;
        for (v, nb) in self.rotations.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &w in nb {
                if w >= n {
                    report
                        .violations
                        .push(format!("neighbor {w} of vertex {v} out of range"));
                    structural = false;
                    continue;
                }
                if w == v {
                    report.violations.push(format!("self-loop at vertex {v}"));
                    structural = false;
                }
                if !seen.insert(w) {
                    report
                        .violations
                        .push(format!("duplicate neighbor {w} at vertex {v}"));
                    structural = false;
                }
                if w < n && !self.rotations[w].contains(&v) {
                    report
                        .violations
                        .push(format!("asymmetric adjacency between {v} and {w}"));
                    structural = false;
                }
            }
        }
        if !structural {
            return report;
        }
        let graph = self.graph();
        if n == 0 || graph.components().len() != 1 {
            report
                .violations
                .push(String::from("graph is not connected"));
            return report;
        }
        let faces = self.face_orbits();
        let m = self.edge_count();
        let f = faces.len();
        if n + f != m + 2 {
            report.violations.push(format!(
                "Euler formula violated: n={n} m={m} f={f} gives n-m+f={}",
                n as isize - m as isize + f as isize
            ));
        }
        if let Some(of) = self.outer_face {
            if of >= f {
                report
                    .violations
                    .push(format!("outer face handle {of} out of range (f={f})"));
            }
        }
        if graph.vertex_connectivity() >= 2 {
            for (i, face) in faces.iter().enumerate() {
                if !face.is_simple_cycle() {
                    report.violations.push(format!(
                        "face {i} boundary is not a cycle despite 2-connectivity"
                    ));
                }
            }
        }
        report
    }

    fn ensure_valid(&self) -> Result<(), MapError> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(MapError::InvalidMap(report))
        }
    }

    /// Orbit decomposition of all darts, without validity checking.
    /// Deterministic: orbits are discovered in dart order (vertex id, then
    /// position in the rotation), and each boundary starts at its first
    /// discovered dart.
    pub(crate) fn face_orbits(&self) -> Vec<Face> {
        let n = self.n();
        // position of u within the rotation of v, keyed by dart (v, u)
        let mut pos = vec![Vec::new(); n];
        for (v, nb) in self.rotations.iter().enumerate() {
            pos[v] = nb.clone();
        }
        let find = |v: usize, u: usize| -> usize {
            pos[v].iter().position(|&x| x == u).expect("symmetric map")
        };
        let mut seen = vec![Vec::new(); n];
        for (v, nb) in self.rotations.iter().enumerate() {
            seen[v] = vec![false; nb.len()];
        }
        let mut out = Vec::new();
        for v0 in 0..n {
            for k0 in 0..self.rotations[v0].len() {
                if seen[v0][k0] {
                    continue;
                }
                let mut boundary = Vec::new();
                let (mut v, mut k) = (v0, k0);
                loop {
                    seen[v][k] = true;
                    boundary.push(v);
                    let w = self.rotations[v][k];
                    // next dart: (w, successor of v in rotation of w)
                    let j = find(w, v);
                    let nk = (j + 1) % self.rotations[w].len();
                    v = w;
                    k = nk;
                    if v == v0 && k == k0 {
                        break;
                    }
                }
                out.push(Face { boundary });
            }
        }
        out
    }

    /// Complete face decomposition of a valid map.
    pub fn faces(&self) -> Result<Vec<Face>, MapError> {
        self.ensure_valid()?;
        Ok(self.face_orbits())
    }

    /// True iff every face boundary is a cycle of length 5.
    pub fn is_pentagulation(&self) -> Result<bool, MapError> {
        Ok(self
            .faces()?
            .iter()
            .all(|f| f.len() == 5 && f.is_simple_cycle()))
    }

    /// True iff every face boundary is a cycle of length 3.
    pub fn is_triangulation(&self) -> Result<bool, MapError> {
        Ok(self
            .faces()?
            .iter()
            .all(|f| f.len() == 3 && f.is_simple_cycle()))
    }

    /// All 3-cycles that are not face boundaries. In a plane graph these
    /// are exactly the separating 3-cycles.
    pub fn separating_triangles(&self) -> Result<Vec<[usize; 3]>, MapError> {
        let faces = self.faces()?;
        let face_sets: BTreeSet<VertexSet> = faces
            .iter()
            .filter(|f| f.len() == 3)
            .map(Face::vertex_set)
            .collect();
        let graph = self.graph();
        let mut out = Vec::new();
        for (u, v) in graph.edges() {
            for &w in graph.neighbors(u) {
                if w > v && graph.has_edge(v, w) {
                    let set: VertexSet = [u, v, w].into_iter().collect();
                    if !face_sets.contains(&set) {
                        out.push([u, v, w]);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Checks Tutte's chord-free-face property: in a 3-connected plane
    /// graph, no face boundary cycle has a chord.
    pub fn face_chords_absent(&self) -> Result<bool, MapError> {
        let faces = self.faces()?;
        let graph = self.graph();
        if graph.vertex_connectivity() < 3 {
            return Err(MapError::NotThreeConnected);
        }
        for face in &faces {
            let b = &face.boundary;
            let k = b.len();
            for i in 0..k {
                for j in i + 1..k {
                    let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                    if !consecutive && graph.has_edge(b[i], b[j]) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn triangle() -> PlaneMap {
        PlaneMap::new(vec![vec![1, 2], vec![2, 0], vec![0, 1]])
    }

    fn k4() -> PlaneMap {
        PlaneMap::new(vec![
            vec![1, 3, 2],
            vec![2, 3, 0],
            vec![0, 3, 1],
            vec![1, 2, 0],
        ])
    }

    #[test]
    fn triangle_is_valid_with_two_faces() {
        let m = triangle();
        assert!(m.validate().is_valid());
        let faces = m.faces().unwrap();
        assert_eq!(faces.len(), 2);
        assert!(faces.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn asymmetric_rotation_reported() {
        let m = PlaneMap::new(vec![vec![1], vec![]]);
        let report = m.validate();
        assert!(!report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| v.contains("asymmetric adjacency")));
    }

    #[test]
    fn euler_violation_reported() {
        // K5 is non-planar, so no rotation system of it satisfies Euler
        let m = PlaneMap::new(vec![
            vec![1, 2, 3, 4],
            vec![0, 2, 3, 4],
            vec![0, 1, 3, 4],
            vec![0, 1, 2, 4],
            vec![0, 1, 2, 3],
        ]);
        let report = m.validate();
        assert!(!report.is_valid());
        assert!(report.violations.iter().any(|v| v.contains("Euler")));
    }

    #[test]
    fn k4_faces_and_predicates() {
        let m = k4();
        assert!(m.validate().is_valid());
        assert_eq!(m.faces().unwrap().len(), 4);
        assert!(m.is_triangulation().unwrap());
        assert!(!m.is_pentagulation().unwrap());
        assert!(m.separating_triangles().unwrap().is_empty());
        assert!(m.face_chords_absent().unwrap());
    }

    #[test]
    fn c5_is_pentagulation() {
        let m = PlaneMap::new(vec![
            vec![1, 4],
            vec![2, 0],
            vec![3, 1],
            vec![4, 2],
            vec![0, 3],
        ]);
        assert!(m.validate().is_valid());
        assert!(m.is_pentagulation().unwrap());
    }

    #[test]
    fn face_chords_requires_three_connected() {
        let m = triangle();
        assert_eq!(m.face_chords_absent(), Err(MapError::NotThreeConnected));
    }

    #[test]
    fn face_lengths_sum_to_double_edges() {
        let m = k4();
        let total: usize = m.faces().unwrap().iter().map(Face::len).sum();
        assert_eq!(total, 2 * m.edge_count());
    }
}
