//! Op-drawings: a 3-connected pentagulation plus a pentagram (five
//! mutually crossed chords) inside every face.
//!
//! The crossing structure is fixed combinatorially: with face boundary
//! `v0..v4` and chords `c_i = (v_i, v_{i+2})`, chord `c_i` crosses exactly
//! `c_{i-1}` and `c_{i+1}` (indices mod 5). This is the unique good-drawing
//! pattern of a pentagram in a pentagonal face, so no geometry is needed.

use crate::generators::insert_after;
use crate::graph::Graph;
use crate::planemap::{MapError, PlaneMap};
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpError {
    /// Input map has a non-pentagonal face.
    NotPentagulation,
    /// Input map has vertex connectivity below 3.
    NotThreeConnected,
    /// A pentagram chord duplicates a skeleton edge or another chord;
    /// signals a skeleton violating the 3-connectivity face properties.
    DuplicateEdge(usize, usize),
    Map(MapError),
}

impl fmt::Display for OpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpError::NotPentagulation => write!(f, "map is not a pentagulation"),
            OpError::NotThreeConnected => write!(f, "map is not 3-connected"),
            OpError::DuplicateEdge(u, v) => write!(f, "duplicate edge ({u}, {v})"),
            OpError::Map(e) => write!(f, "{e}"),
        }
    }
}

impl From<MapError> for OpError {
    fn from(e: MapError) -> Self {
        OpError::Map(e)
    }
}

/// One pentagram: the host face id, its boundary in cyclic order, and the
/// five chords with their crossing pairs derived from the fixed pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pentagram {
    pub face: usize,
    pub boundary: [usize; 5],
}

impl Pentagram {
    /// Chord `c_i` joins boundary positions `i` and `i + 2 (mod 5)`.
    pub fn chords(&self) -> [(usize, usize); 5] {
        core::array::from_fn(|i| (self.boundary[i], self.boundary[(i + 2) % 5]))
    }

    /// The five crossing pairs as chord indices `{i, i + 1 (mod 5)}`.
    pub fn crossings(&self) -> [(usize, usize); 5] {
        core::array::from_fn(|i| (i, (i + 1) % 5))
    }
}

/// An op-drawing: skeleton pentagulation plus one pentagram per face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpDrawing {
    skeleton: PlaneMap,
    pentagrams: Vec<Pentagram>,
}

impl OpDrawing {
    pub fn pentagrams(&self) -> &[Pentagram] {
        &self.pentagrams
    }

    /// The planar skeleton: the plane subgraph left after deleting all
    /// crossed edges.
    pub fn planar_skeleton(&self) -> &PlaneMap {
        &self.skeleton
    }

    /// Union of skeleton edges and all pentagram chords. For every face of
    /// the skeleton, the five boundary vertices form a clique here.
    pub fn abstract_graph(&self) -> Result<Graph, OpError> {
        let mut edges: BTreeSet<(usize, usize)> =
            self.skeleton.graph().edges().into_iter().collect();
        for p in &self.pentagrams {
            for (u, v) in p.chords() {
                let key = (u.min(v), u.max(v));
                if !edges.insert(key) {
                    return Err(OpError::DuplicateEdge(key.0, key.1));
                }
            }
        }
        let list: Vec<(usize, usize)> = edges.into_iter().collect();
        Ok(Graph::build(self.skeleton.n(), &list).expect("edge ids in range"))
    }

    /// Crossing count per edge of the abstract graph: 0 for skeleton
    /// edges, 2 for every chord.
    pub fn crossings_per_edge(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out: BTreeMap<(usize, usize), usize> = self
            .skeleton
            .graph()
            .edges()
            .into_iter()
            .map(|e| (e, 0))
            .collect();
        for p in &self.pentagrams {
            let chords = p.chords();
            for (i, j) in p.crossings() {
                for c in [chords[i], chords[j]] {
                    let key = (c.0.min(c.1), c.0.max(c.1));
                    *out.entry(key).or_insert(0) += 1;
                }
            }
        }
        out
    }

    /// Replaces each crossing with a degree-4 vertex, turning every chord
    /// into a 3-edge path. Per face the five new vertices `w_0..w_4` sit at
    /// the crossings of chords `{c_i, c_{i+1}}`; along chord `c_i` from
    /// endpoint `v_i`, the crossing with `c_{i-1}` comes first.
    pub fn planarize(&self) -> PlaneMap {
        let n = self.skeleton.n();
        let mut rotations = self.skeleton.rotations().to_vec();
        for (fi, p) in self.pentagrams.iter().enumerate() {
            let b = &p.boundary;
            let w: [usize; 5] = core::array::from_fn(|j| n + fi * 5 + j);
            for j in 0..5 {
                rotations.push(alloc::vec![
                    b[(j + 1) % 5],
                    w[(j + 4) % 5],
                    w[(j + 1) % 5],
                    b[(j + 2) % 5],
                ]);
            }
            for i in 0..5 {
                let prev = b[(i + 4) % 5];
                let next = b[(i + 1) % 5];
                insert_after(
                    &mut rotations[b[i]],
                    prev,
                    next,
                    &[w[(i + 3) % 5], w[(i + 4) % 5]],
                );
            }
        }
        PlaneMap::new(rotations)
    }
}

/// Draws a pentagram inside every face of a 3-connected pentagulation.
pub fn insert_pentagrams(p: &PlaneMap) -> Result<OpDrawing, OpError> {
    if !p.is_pentagulation()? {
        return Err(OpError::NotPentagulation);
    }
    if p.graph().vertex_connectivity() < 3 {
        return Err(OpError::NotThreeConnected);
    }
    let pentagrams = p
        .faces()?
        .iter()
        .enumerate()
        .map(|(i, f)| Pentagram {
            face: i,
            boundary: core::array::from_fn(|k| f.boundary[k]),
        })
        .collect();
    Ok(OpDrawing {
        skeleton: p.clone(),
        pentagrams,
    })
}

/// True iff the graph attains the 2-planar maximum of `5n - 10` edges.
pub fn check_optimal_edge_count(g: &Graph) -> bool {
    g.n() >= 2 && g.edge_count() == 5 * g.n() - 10
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{dodecahedron, gadget_h, theorem2_pentagulation};
    use alloc::vec;

    fn fig1() -> OpDrawing {
        insert_pentagrams(&dodecahedron()).unwrap()
    }

    #[test]
    fn pentagrams_on_dodecahedron() {
        let d = fig1();
        assert_eq!(d.pentagrams().len(), 12);
        let g = d.abstract_graph().unwrap();
        assert_eq!(g.n(), 20);
        assert_eq!(g.edge_count(), 90);
        assert!(check_optimal_edge_count(&g));
    }

    #[test]
    fn rejects_non_three_connected() {
        let c5 = PlaneMap::new(vec![
            vec![1, 4],
            vec![2, 0],
            vec![3, 1],
            vec![4, 2],
            vec![0, 3],
        ]);
        assert_eq!(insert_pentagrams(&c5), Err(OpError::NotThreeConnected));
    }

    #[test]
    fn rejects_non_pentagulation() {
        let k4 = PlaneMap::new(vec![
            vec![1, 3, 2],
            vec![2, 3, 0],
            vec![0, 3, 1],
            vec![1, 2, 0],
        ]);
        assert_eq!(insert_pentagrams(&k4), Err(OpError::NotPentagulation));
    }

    #[test]
    fn skeleton_round_trip() {
        let d = fig1();
        assert_eq!(d.planar_skeleton(), &dodecahedron());
        let again = insert_pentagrams(d.planar_skeleton()).unwrap();
        assert_eq!(again, d);
    }

    #[test]
    fn boundary_cliques() {
        let d = fig1();
        let g = d.abstract_graph().unwrap();
        for p in d.pentagrams() {
            for i in 0..5 {
                for j in i + 1..5 {
                    assert!(g.has_edge(p.boundary[i], p.boundary[j]));
                }
            }
        }
    }

    #[test]
    fn crossing_discipline() {
        let d = fig1();
        let counts = d.crossings_per_edge();
        assert_eq!(counts.len(), 90);
        let skeleton_edges: alloc::collections::BTreeSet<(usize, usize)> =
            d.planar_skeleton().graph().edges().into_iter().collect();
        for (&edge, &c) in &counts {
            if skeleton_edges.contains(&edge) {
                assert_eq!(c, 0);
            } else {
                assert_eq!(c, 2);
            }
        }
    }

    #[test]
    fn optimal_edge_count_examples() {
        let mut edges = vec![];
        for u in 0..5usize {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        let k5 = Graph::build(5, &edges).unwrap();
        assert!(!check_optimal_edge_count(&k5));
    }

    #[test]
    fn thm2_abstract_edge_count() {
        let m = theorem2_pentagulation(5, &gadget_h()).unwrap();
        let d = insert_pentagrams(&m).unwrap();
        let g = d.abstract_graph().unwrap();
        assert_eq!(g.n(), 137);
        assert_eq!(g.edge_count(), 675);
        assert!(check_optimal_edge_count(&g));
    }

    #[test]
    fn planarize_dodecahedron() {
        let d = fig1();
        let p = d.planarize();
        assert_eq!(p.n(), 80);
        assert_eq!(p.edge_count(), 210);
        assert!(p.validate().is_valid());
        for v in 20..80 {
            assert_eq!(p.rotation(v).len(), 4);
        }
    }
}
