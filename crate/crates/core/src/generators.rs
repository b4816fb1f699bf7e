//! Built-in instances and constructions.
//!
//! The dodecahedron and the two pentagon gadgets are hardcoded rotation
//! systems transcribed from explicit straight-line drawings; the vertex
//! numbering is documented next to each table and pinned by checksum tests.

use crate::graph::VertexSet;
use crate::planemap::{MapError, PlaneMap};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    /// The requested size is below the construction's minimum.
    TooSmall {
        got: usize,
        min: usize,
    },
    /// The supplied gadget violates the gadget invariants.
    BadGadget(&'static str),
    Map(MapError),
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::TooSmall { got, min } => {
                write!(f, "size {got} too small, need at least {min}")
            }
            GenError::BadGadget(why) => write!(f, "bad gadget: {why}"),
            GenError::Map(e) => write!(f, "{e}"),
        }
    }
}

impl From<MapError> for GenError {
    fn from(e: MapError) -> Self {
        GenError::Map(e)
    }
}

/// The dodecahedron: vertex ids follow the source drawing minus one.
/// 3-connected pentagulation with n=20, m=30, 12 pentagonal faces.
const DODECAHEDRON: [&[usize]; 20] = [
    &[13, 15, 14],
    &[4, 12, 5],
    &[6, 13, 18],
    &[19, 14, 7],
    &[10, 18, 1],
    &[1, 19, 11],
    &[15, 2, 10],
    &[11, 3, 15],
    &[16, 13, 9],
    &[8, 14, 17],
    &[6, 4, 11],
    &[10, 5, 7],
    &[16, 17, 1],
    &[2, 0, 8],
    &[9, 0, 3],
    &[6, 7, 0],
    &[18, 8, 12],
    &[12, 9, 19],
    &[2, 16, 4],
    &[17, 3, 5],
];

/// Gadget on 25 vertices and 39 edges whose faces are 15 pentagons plus
/// the outer triangle 0-1-2. Numbering: corners (x, y, z) = 0, 1, 2; then
/// the three corner-adjacent vertices 3..5, the 9-cycle 6..14, the six
/// spokes 15..20, the inner triple 21..23 and the center 24.
const GADGET_H: [&[usize]; 25] = [
    &[2, 4, 1],
    &[0, 5, 2],
    &[1, 3, 0],
    &[2, 7, 10],
    &[10, 13, 0],
    &[13, 7, 1],
    &[15, 7, 14],
    &[8, 3, 5, 6],
    &[9, 7, 16],
    &[8, 17, 10],
    &[3, 9, 11, 4],
    &[10, 18, 12],
    &[11, 19, 13],
    &[12, 14, 5, 4],
    &[20, 6, 13],
    &[16, 6, 23],
    &[8, 15, 21],
    &[9, 21, 18],
    &[17, 22, 11],
    &[22, 20, 12],
    &[19, 23, 14],
    &[17, 16, 24],
    &[18, 24, 19],
    &[24, 15, 20],
    &[21, 23, 22],
];

/// Gadget on 28 vertices and 44 edges whose faces are 17 pentagons plus
/// the outer triangle 0-1-2; its interior holds 25 vertices (an odd
/// number). Numbering: corners (x, y, z) = 0, 1, 2, interior 3..27.
const GADGET_F: [&[usize]; 28] = [
    &[2, 27, 1],
    &[0, 17, 2],
    &[1, 19, 0],
    &[7, 4, 10],
    &[3, 5, 12],
    &[4, 6, 14],
    &[7, 16, 5],
    &[8, 18, 6, 3],
    &[7, 9, 20],
    &[8, 10, 22],
    &[9, 3, 11],
    &[10, 12, 23],
    &[11, 4, 13],
    &[12, 14, 24],
    &[5, 15, 13],
    &[14, 16, 25],
    &[6, 17, 15],
    &[16, 18, 1, 26],
    &[19, 17, 7],
    &[2, 18, 20],
    &[19, 8, 21, 27],
    &[20, 22, 25],
    &[9, 23, 21],
    &[22, 11, 24],
    &[23, 13, 25],
    &[21, 24, 15, 26],
    &[27, 25, 17],
    &[20, 26, 0],
];

fn from_table(table: &[&[usize]]) -> PlaneMap {
    PlaneMap::new(table.iter().map(|nb| nb.to_vec()).collect())
}

/// The dodecahedron as a plane map.
pub fn dodecahedron() -> PlaneMap {
    from_table(&DODECAHEDRON)
}

/// The s-prism: inner cycle `0..s`, outer cycle `s..2s`, matched radially.
pub fn prism(s: usize) -> Result<PlaneMap, GenError> {
    if s < 3 {
        return Err(GenError::TooSmall { got: s, min: 3 });
    }
    let mut rotations = Vec::with_capacity(2 * s);
    for i in 0..s {
        rotations.push(vec![(i + 1) % s, (i + s - 1) % s, s + i]);
    }
    for i in 0..s {
        rotations.push(vec![s + (i + 1) % s, i, s + (i + s - 1) % s]);
    }
    Ok(PlaneMap::new(rotations))
}

/// Stacked triangulation on `l` vertices: starts from K4 and repeatedly
/// inserts a vertex into the face with the smallest face id, joined to the
/// three face vertices.
pub fn stacked_triangulation(l: usize) -> Result<PlaneMap, GenError> {
    if l < 4 {
        return Err(GenError::TooSmall { got: l, min: 4 });
    }
    let mut rotations: Vec<Vec<usize>> =
        vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![1, 2, 0]];
    while rotations.len() < l {
        let map = PlaneMap::new(rotations.clone());
        let face = map.face_orbits().into_iter().next().expect("nonempty map");
        let (a, b, c) = (face.boundary[0], face.boundary[1], face.boundary[2]);
        let v = rotations.len();
        rotations.push(vec![c, b, a]);
        for (p, prev, next) in [(a, c, b), (b, a, c), (c, b, a)] {
            insert_after(&mut rotations[p], prev, next, &[v]);
        }
    }
    Ok(PlaneMap::new(rotations))
}

/// Inserts `arc` into the rotation of a vertex between the consecutive
/// neighbors `prev` and `next` (with `next` directly following `prev`).
pub(crate) fn insert_after(rotation: &mut Vec<usize>, prev: usize, next: usize, arc: &[usize]) {
    let i = rotation
        .iter()
        .position(|&x| x == prev)
        .expect("prev neighbor present");
    debug_assert_eq!(rotation[(i + 1) % rotation.len()], next);
    let mut tail = rotation.split_off(i + 1);
    rotation.extend_from_slice(arc);
    rotation.append(&mut tail);
}

/// A plane graph whose faces are all pentagons except one designated
/// outer triangular face with corners `(x, y, z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub map: PlaneMap,
    pub outer_triangle: [usize; 3],
}

impl Gadget {
    /// Checks the gadget invariants: exactly one non-pentagonal face, it is
    /// a triangle, it is the designated outer face, and its corners match.
    pub fn check(&self) -> Result<(), GenError> {
        let faces = self.map.faces()?;
        let outer = self
            .map
            .outer_face()
            .ok_or(GenError::BadGadget("no designated outer face"))?;
        let non_pentagons: Vec<usize> = (0..faces.len()).filter(|&i| faces[i].len() != 5).collect();
        if non_pentagons != [outer] {
            return Err(GenError::BadGadget(
                "faces other than the designated outer triangle are not all pentagons",
            ));
        }
        let outer_face = &faces[outer];
        if outer_face.len() != 3 || !outer_face.is_simple_cycle() {
            return Err(GenError::BadGadget("outer face is not a triangle"));
        }
        let corners: VertexSet = self.outer_triangle.iter().copied().collect();
        if corners != outer_face.vertex_set() {
            return Err(GenError::BadGadget(
                "outer triangle corners do not bound the outer face",
            ));
        }
        let g = self.map.graph();
        let [x, y, z] = self.outer_triangle;
        if !(g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(z, x)) {
            return Err(GenError::BadGadget("corners are not pairwise adjacent"));
        }
        Ok(())
    }

    /// Vertices strictly inside the outer triangle.
    pub fn interior_count(&self) -> usize {
        self.map.n() - 3
    }
}

fn gadget_from_table(table: &[&[usize]]) -> Gadget {
    let map = from_table(table);
    let outer = map
        .face_orbits()
        .iter()
        .position(|f| f.len() == 3)
        .expect("gadget table has a triangular face");
    Gadget {
        map: map.with_outer_face(outer),
        outer_triangle: [0, 1, 2],
    }
}

/// The 25-vertex gadget with an even interior (22 vertices).
pub fn gadget_h() -> Gadget {
    gadget_from_table(&GADGET_H)
}

/// The 28-vertex gadget with an odd interior (25 vertices).
pub fn gadget_f() -> Gadget {
    gadget_from_table(&GADGET_F)
}

/// Plants a copy of `gadget` inside every face of the stacked
/// triangulation on `l` vertices, identifying the gadget corners (x, y, z)
/// with the face corners in boundary-traversal order. The result is a
/// pentagulation with `l + (2l - 4) * interior` vertices.
pub fn theorem2_pentagulation(l: usize, gadget: &Gadget) -> Result<PlaneMap, GenError> {
    if l < 5 {
        return Err(GenError::TooSmall { got: l, min: 5 });
    }
    gadget.check()?;
    let host = stacked_triangulation(l)?;
    let faces = host.face_orbits();
    let interior = gadget.interior_count();
    let grot = gadget.map.rotations();
    let [gx, gy, gz] = gadget.outer_triangle;

    let mut rotations: Vec<Vec<usize>> = host.rotations().to_vec();
    for (fi, face) in faces.iter().enumerate() {
        let (a, b, c) = (face.boundary[0], face.boundary[1], face.boundary[2]);
        let base = l + fi * interior;
        // map gadget ids into the host: corners onto the face, interior fresh
        let mut fresh = 0;
        let mut id_map = vec![0usize; gadget.map.n()];
        for (v, slot) in id_map.iter_mut().enumerate() {
            *slot = if v == gx {
                a
            } else if v == gy {
                b
            } else if v == gz {
                c
            } else {
                let id = base + fresh;
                fresh += 1;
                id
            };
        }
        for (v, nb) in grot.iter().enumerate() {
            if v != gx && v != gy && v != gz {
                rotations.push(nb.iter().map(|&w| id_map[w]).collect());
            }
        }
        // splice each corner's interior arc into the host rotation between
        // the face-corner's neighboring boundary vertices
        for (corner, gprev, gnext, hprev, hnext) in
            [(gx, gz, gy, c, b), (gy, gx, gz, a, c), (gz, gy, gx, b, a)]
        {
            let nb = &grot[corner];
            let start = nb
                .iter()
                .position(|&w| w == gprev)
                .expect("corner adjacent to corner");
            let mut arc = Vec::new();
            let mut k = (start + 1) % nb.len();
            while nb[k] != gnext {
                arc.push(id_map[nb[k]]);
                k = (k + 1) % nb.len();
            }
            let host_v = id_map[corner];
            insert_after(&mut rotations[host_v], hprev, hnext, &arc);
        }
    }
    Ok(PlaneMap::new(rotations))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dodecahedron_structure() {
        let m = dodecahedron();
        assert!(m.validate().is_valid());
        assert_eq!(m.n(), 20);
        assert_eq!(m.edge_count(), 30);
        assert_eq!(m.faces().unwrap().len(), 12);
        assert!(m.is_pentagulation().unwrap());
        let g = m.graph();
        assert_eq!(g.vertex_connectivity(), 3);
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn prism_structure() {
        assert!(matches!(prism(2), Err(GenError::TooSmall { .. })));
        let cube = prism(4).unwrap();
        assert!(cube.validate().is_valid());
        assert_eq!(cube.n(), 8);
        assert_eq!(cube.edge_count(), 12);
        let faces = cube.faces().unwrap();
        assert_eq!(faces.len(), 6);
        assert!(faces.iter().all(|f| f.len() == 4));

        assert_eq!(prism(3).unwrap().graph().girth(), Some(3));
        let p5 = prism(5).unwrap();
        assert_eq!(p5.graph().girth(), Some(4));
        assert_eq!(p5.graph().vertex_connectivity(), 3);
    }

    #[test]
    fn stacked_triangulation_structure() {
        let k4 = stacked_triangulation(4).unwrap();
        assert_eq!(k4.faces().unwrap().len(), 4);
        let t5 = stacked_triangulation(5).unwrap();
        assert_eq!(t5.faces().unwrap().len(), 6);
        let t7 = stacked_triangulation(7).unwrap();
        assert_eq!(t7.faces().unwrap().len(), 10);
        assert!(t7.is_triangulation().unwrap());
    }

    #[test]
    fn gadget_h_structure() {
        let h = gadget_h();
        h.check().unwrap();
        assert_eq!(h.map.n(), 25);
        assert_eq!(h.map.edge_count(), 39);
        let faces = h.map.faces().unwrap();
        assert_eq!(faces.len(), 16);
        assert_eq!(faces.iter().filter(|f| f.len() == 5).count(), 15);
        assert_eq!(faces.iter().filter(|f| f.len() == 3).count(), 1);
        assert_eq!(h.interior_count(), 22);
    }

    #[test]
    fn gadget_f_structure() {
        let f = gadget_f();
        f.check().unwrap();
        assert_eq!(f.map.n(), 28);
        assert_eq!(f.map.edge_count(), 44);
        let faces = f.map.faces().unwrap();
        assert_eq!(faces.len(), 18);
        assert_eq!(faces.iter().filter(|x| x.len() == 5).count(), 17);
        assert_eq!(f.interior_count(), 25);
    }

    #[test]
    fn theorem2_with_h() {
        let m = theorem2_pentagulation(5, &gadget_h()).unwrap();
        assert!(m.validate().is_valid());
        assert_eq!(m.n(), 137);
        assert!(m.is_pentagulation().unwrap());
        assert_eq!(m.graph().vertex_connectivity(), 3);
    }

    #[test]
    fn theorem2_with_f() {
        let m = theorem2_pentagulation(6, &gadget_f()).unwrap();
        assert!(m.validate().is_valid());
        assert_eq!(m.n(), 206);
        assert!(m.is_pentagulation().unwrap());
    }

    #[test]
    fn theorem2_rejects_small_l() {
        assert!(matches!(
            theorem2_pentagulation(4, &gadget_h()),
            Err(GenError::TooSmall { .. })
        ));
    }

    #[test]
    fn pentagulation_euler_relation() {
        // m = 5(n-2)/3 and n ≡ 2 (mod 3) for every pentagulation output
        for (l, gadget) in [(5, gadget_h()), (6, gadget_h()), (5, gadget_f())] {
            let m = theorem2_pentagulation(l, &gadget).unwrap();
            let n = m.n();
            assert_eq!(n % 3, 2);
            assert_eq!(m.edge_count(), 5 * (n - 2) / 3);
        }
    }
}
