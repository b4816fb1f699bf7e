//! Face-stellation: insert one new vertex into every face of a
//! 2-connected plane map and join it to the face boundary. The result is
//! always a triangulation; when the input is 3-connected with girth at
//! least 4, the result is even 4-connected.

use crate::generators::insert_after;
use crate::planemap::{Face, MapError, PlaneMap};
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StellationError {
    /// Face-stellation is defined for 2-connected plane graphs only.
    NotTwoConnected,
    /// The 4-connectivity guarantee failed despite satisfied hypotheses;
    /// this indicates an implementation bug, not bad input.
    TheoremViolation,
    Map(MapError),
}

impl fmt::Display for StellationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StellationError::NotTwoConnected => write!(f, "map is not 2-connected"),
            StellationError::TheoremViolation => {
                write!(
                    f,
                    "stellation of a 3-connected girth >= 4 map was not 4-connected"
                )
            }
            StellationError::Map(e) => write!(f, "{e}"),
        }
    }
}

impl From<MapError> for StellationError {
    fn from(e: MapError) -> Self {
        StellationError::Map(e)
    }
}

/// A stellated map: the triangulation plus the initial/stellating vertex
/// partition. Initial vertices keep their ids `0..initial`; stellating
/// vertex `initial + i` sits inside face `i` of the input map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StellatedMap {
    pub map: PlaneMap,
    initial: usize,
    /// Host face boundary for each stellating vertex, in insertion order.
    hosts: Vec<Face>,
}

impl StellatedMap {
    pub fn initial_count(&self) -> usize {
        self.initial
    }

    pub fn stellating_count(&self) -> usize {
        self.hosts.len()
    }

    pub fn is_stellating(&self, v: usize) -> bool {
        v >= self.initial
    }

    /// The boundary of the input face hosting stellating vertex `v`.
    pub fn host_face(&self, v: usize) -> Option<&Face> {
        v.checked_sub(self.initial).and_then(|i| self.hosts.get(i))
    }

    pub fn initial_vertices(&self) -> impl Iterator<Item = usize> {
        0..self.initial
    }

    pub fn stellating_vertices(&self) -> impl Iterator<Item = usize> {
        self.initial..self.initial + self.hosts.len()
    }
}

/// Stellates every face of a valid 2-connected map.
pub fn stellate(m: &PlaneMap) -> Result<StellatedMap, StellationError> {
    let faces = m.faces()?;
    if m.graph().vertex_connectivity() < 2 {
        return Err(StellationError::NotTwoConnected);
    }
    let n = m.n();
    let mut rotations = m.rotations().to_vec();
    for (fi, face) in faces.iter().enumerate() {
        let v = n + fi;
        let b = &face.boundary;
        let k = b.len();
        // the new vertex sees the boundary in reverse traversal order
        rotations.push(b.iter().rev().copied().collect());
        for i in 0..k {
            let prev = b[(i + k - 1) % k];
            let next = b[(i + 1) % k];
            insert_after(&mut rotations[b[i]], prev, next, &[v]);
        }
    }
    Ok(StellatedMap {
        map: PlaneMap::new(rotations),
        initial: n,
        hosts: faces,
    })
}

/// Lemma check: for every stellating vertex `x`, the subgraph induced by
/// `x` and its neighbors is a wheel (hub `x`, rim = host face cycle, no
/// rim chords). Expects the input map of `s` to have been 3-connected.
pub fn check_wheel_property(s: &StellatedMap) -> bool {
    let g = s.map.graph();
    for x in s.stellating_vertices() {
        let host = s.host_face(x).expect("stellating vertex has a host");
        let rim = &host.boundary;
        let k = rim.len();
        if g.degree(x) != k || rim.iter().any(|&y| !g.has_edge(x, y)) {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if g.has_edge(rim[i], rim[j]) != consecutive {
                    return false;
                }
            }
        }
    }
    true
}

/// Lemma check: for a stellating vertex `x` with host cycle `C`, every
/// consecutive pair `y, z` on `C` bounds a triangular face with `x`, and
/// every non-consecutive pair induces a path on `{x, y, z}`.
pub fn check_consecutive_property(s: &StellatedMap) -> bool {
    let g = s.map.graph();
    let faces = match s.map.faces() {
        Ok(f) => f,
        Err(_) => return false,
    };
    let triangle_sets: alloc::collections::BTreeSet<crate::graph::VertexSet> = faces
        .iter()
        .filter(|f| f.len() == 3)
        .map(Face::vertex_set)
        .collect();
    for x in s.stellating_vertices() {
        let rim = &s.host_face(x).expect("host").boundary;
        let k = rim.len();
        for i in 0..k {
            for j in i + 1..k {
                let (y, z) = (rim[i], rim[j]);
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if consecutive {
                    let set = [x, y, z].into_iter().collect();
                    if !triangle_sets.contains(&set) {
                        return false;
                    }
                } else if g.has_edge(y, z) {
                    // x-y and x-z always exist, so a y-z edge would make a
                    // triangle instead of a path
                    return false;
                }
            }
        }
    }
    true
}

/// Why the 4-connectivity criterion did not apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HypothesisFailure {
    NotThreeConnected,
    GirthTooSmall,
}

/// Outcome of the stellation 4-connectivity criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourConnectedVerdict {
    /// Hypotheses hold and the stellation was verified 4-connected.
    Holds,
    /// A hypothesis failed, so nothing is claimed.
    HypothesisFailed(HypothesisFailure),
}

/// Checks the hypotheses (3-connected, girth >= 4); when they hold,
/// stellates and asserts 4-connectivity of the result. An assertion
/// failure on satisfied hypotheses is a hard error.
pub fn stellation_four_connected(m: &PlaneMap) -> Result<FourConnectedVerdict, StellationError> {
    m.faces()?; // validity gate
    let g = m.graph();
    if g.vertex_connectivity() < 3 {
        return Ok(FourConnectedVerdict::HypothesisFailed(
            HypothesisFailure::NotThreeConnected,
        ));
    }
    if g.girth().is_some_and(|girth| girth < 4) {
        return Ok(FourConnectedVerdict::HypothesisFailed(
            HypothesisFailure::GirthTooSmall,
        ));
    }
    let stellated = stellate(m)?;
    if stellated.map.graph().vertex_connectivity() >= 4 {
        Ok(FourConnectedVerdict::Holds)
    } else {
        Err(StellationError::TheoremViolation)
    }
}
