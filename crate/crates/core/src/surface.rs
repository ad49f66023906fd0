//! Square complexes inside the 2-skeleton of the n-cube.
//!
//! A [`Surface`] is a set of squares together with incidence data derived
//! from it once at construction. The central construction is
//! [`build_surface`]: for a cyclic order `Z = i_1 i_2 ... i_n` of the colors it
//! keeps every square whose bicolor is a pair of cyclically consecutive
//! colors of `Z`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cube_complex::{cells_with_active, Bicolor, CubeCell, Dimension};
use crate::error::{Error, Result};

/// A cyclic sequence of distinct colors, stored in canonical form: rotated so
/// the smallest color comes first, then reflected so the second entry is
/// smaller than the last. A cycle and its reversal are the same value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct ColorCycle {
    seq: Vec<u8>,
}

impl ColorCycle {
    pub fn new(colors: &[u8]) -> Result<Self> {
        if colors.len() < 3 {
            return Err(Error::InvalidCycle(format!(
                "a cycle needs at least 3 colors, got {}",
                colors.len()
            )));
        }
        if colors.contains(&0) {
            return Err(Error::InvalidCycle("colors are 1-based".to_string()));
        }
        let distinct: BTreeSet<u8> = colors.iter().copied().collect();
        if distinct.len() != colors.len() {
            return Err(Error::InvalidCycle(format!("repeated color in {colors:?}")));
        }
        let m = colors.len();
        let start = colors
            .iter()
            .enumerate()
            .min_by_key(|(_, c)| **c)
            .map(|(i, _)| i)
            .unwrap();
        let mut seq: Vec<u8> = (0..m).map(|k| colors[(start + k) % m]).collect();
        if seq[1] > seq[m - 1] {
            seq[1..].reverse();
        }
        Ok(ColorCycle { seq })
    }

    /// The cycle `1 2 ... n`.
    pub fn identity(n: Dimension) -> Result<Self> {
        Self::new(&(1..=n.get()).collect::<Vec<_>>())
    }

    pub fn colors(&self) -> &[u8] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn max_color(&self) -> u8 {
        *self.seq.iter().max().unwrap()
    }

    /// Whether the cycle visits every color `1..=n`.
    pub fn is_hamiltonian(&self, n: Dimension) -> bool {
        self.seq.len() == n.get() as usize && self.max_color() == n.get()
    }

    /// The edges `{i_k, i_(k+1)}` of the cycle as a subgraph of `K_n`.
    pub fn edges(&self) -> Vec<Bicolor> {
        let m = self.seq.len();
        (0..m)
            .map(|k| Bicolor::new(self.seq[k], self.seq[(k + 1) % m]).unwrap())
            .collect()
    }

    /// Whether `b` follows `a` in the stored traversal direction.
    pub fn follows(&self, a: u8, b: u8) -> bool {
        let m = self.seq.len();
        self.seq
            .iter()
            .position(|&c| c == a)
            .is_some_and(|k| self.seq[(k + 1) % m] == b)
    }

    fn check_against(&self, n: Dimension) -> Result<()> {
        if self.max_color() > n.get() {
            return Err(Error::InvalidCycle(format!(
                "cycle {self} uses color {} but n = {n}",
                self.max_color()
            )));
        }
        Ok(())
    }
}

impl TryFrom<Vec<u8>> for ColorCycle {
    type Error = Error;
    fn try_from(v: Vec<u8>) -> Result<Self> {
        ColorCycle::new(&v)
    }
}

impl From<ColorCycle> for Vec<u8> {
    fn from(c: ColorCycle) -> Vec<u8> {
        c.seq
    }
}

impl fmt::Display for ColorCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.seq.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses `1,3,5,2,4` (commas or whitespace between colors).
impl FromStr for ColorCycle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let colors = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u8>()
                    .map_err(|_| Error::InvalidCycle(format!("bad color {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ColorCycle::new(&colors)
    }
}

/// A finite set of squares of one n-cube with cached incidence.
///
/// Faces, edges and vertices are held in canonical order; the incidence
/// tables index into those vectors.
#[derive(Debug, Clone)]
pub struct Surface {
    n: Dimension,
    cycle: Option<ColorCycle>,
    faces: Vec<CubeCell>,
    edges: Vec<CubeCell>,
    vertices: Vec<CubeCell>,
    face_edges: Vec<[u32; 4]>,
    edge_faces: Vec<Vec<u32>>,
    vertex_faces: Vec<Vec<u32>>,
    vertex_edges: Vec<Vec<u32>>,
    dual: Vec<Vec<u32>>,
}

impl PartialEq for Surface {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.cycle == other.cycle && self.faces == other.faces
    }
}

impl Eq for Surface {}

impl Surface {
    /// Builds a surface from squares of `H_n`. The squares must be distinct.
    pub fn from_faces(n: Dimension, faces: Vec<CubeCell>, cycle: Option<ColorCycle>) -> Result<Self> {
        let mut faces = faces;
        for f in &faces {
            if f.n() != n {
                return Err(Error::DimensionMismatch {
                    left: n.get(),
                    right: f.n().get(),
                });
            }
            if f.dim() != 2 {
                return Err(Error::InvalidSurface(format!("{f} is not a square")));
            }
        }
        faces.sort_unstable();
        if let Some(w) = faces.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidSurface(format!("face {} listed twice", w[0])));
        }
        if let Some(c) = &cycle {
            c.check_against(n)?;
        }

        let mut edges: Vec<CubeCell> = faces.iter().flat_map(|f| f.square_edges()).collect();
        edges.sort_unstable();
        edges.dedup();
        let mut vertices: Vec<CubeCell> = edges
            .iter()
            .flat_map(|e| {
                let [a, b] = e.edge_endpoints().unwrap();
                [a, b]
            })
            .map(|w| CubeCell::vertex(n, w).unwrap())
            .collect();
        vertices.sort_unstable();
        vertices.dedup();

        let index_of = |list: &[CubeCell], c: &CubeCell| list.binary_search(c).unwrap() as u32;

        let mut face_edges = Vec::with_capacity(faces.len());
        let mut edge_faces = vec![Vec::new(); edges.len()];
        let mut vertex_faces = vec![Vec::new(); vertices.len()];
        for (fi, f) in faces.iter().enumerate() {
            let bd = f.square_edges();
            let idx = bd.map(|e| index_of(&edges, &e));
            for &ei in &idx {
                edge_faces[ei as usize].push(fi as u32);
            }
            for w in f.square_corner_words() {
                let vi = index_of(&vertices, &CubeCell::vertex(n, w).unwrap());
                vertex_faces[vi as usize].push(fi as u32);
            }
            face_edges.push(idx);
        }
        let mut vertex_edges = vec![Vec::new(); vertices.len()];
        for (ei, e) in edges.iter().enumerate() {
            for w in e.edge_endpoints().unwrap() {
                let vi = index_of(&vertices, &CubeCell::vertex(n, w).unwrap());
                vertex_edges[vi as usize].push(ei as u32);
            }
        }
        let dual = face_edges
            .iter()
            .enumerate()
            .map(|(fi, fe)| {
                let mut nbrs: Vec<u32> = fe
                    .iter()
                    .flat_map(|&ei| edge_faces[ei as usize].iter().copied())
                    .filter(|&g| g as usize != fi)
                    .collect();
                nbrs.sort_unstable();
                nbrs.dedup();
                nbrs
            })
            .collect();

        Ok(Surface {
            n,
            cycle,
            faces,
            edges,
            vertices,
            face_edges,
            edge_faces,
            vertex_faces,
            vertex_edges,
            dual,
        })
    }

    /// All `C(n,2) 2^(n-2)` squares of `H_n`.
    pub fn full_skeleton(n: Dimension) -> Self {
        let faces = crate::cube_complex::enumerate_cells(n, 2).unwrap();
        Surface::from_faces(n, faces, None).unwrap()
    }

    pub fn n(&self) -> Dimension {
        self.n
    }

    /// The color cycle this surface was built from, if any.
    pub fn cycle(&self) -> Option<&ColorCycle> {
        self.cycle.as_ref()
    }

    pub fn faces(&self) -> &[CubeCell] {
        &self.faces
    }

    pub fn edges(&self) -> &[CubeCell] {
        &self.edges
    }

    pub fn vertices(&self) -> &[CubeCell] {
        &self.vertices
    }

    pub fn face_index(&self, face: &CubeCell) -> Option<usize> {
        self.faces.binary_search(face).ok()
    }

    pub fn edge_index(&self, edge: &CubeCell) -> Option<usize> {
        self.edges.binary_search(edge).ok()
    }

    pub fn vertex_index(&self, vertex: &CubeCell) -> Option<usize> {
        self.vertices.binary_search(vertex).ok()
    }

    pub fn contains_face(&self, face: &CubeCell) -> bool {
        self.face_index(face).is_some()
    }

    /// Boundary edge indices of a face, in canonical cyclic order.
    pub fn face_edges(&self, face: usize) -> [usize; 4] {
        self.face_edges[face].map(|e| e as usize)
    }

    pub fn edge_faces(&self, edge: usize) -> impl Iterator<Item = usize> + '_ {
        self.edge_faces[edge].iter().map(|&f| f as usize)
    }

    pub fn vertex_faces(&self, vertex: usize) -> impl Iterator<Item = usize> + '_ {
        self.vertex_faces[vertex].iter().map(|&f| f as usize)
    }

    pub fn vertex_edges(&self, vertex: usize) -> impl Iterator<Item = usize> + '_ {
        self.vertex_edges[vertex].iter().map(|&e| e as usize)
    }

    /// Faces sharing at least one edge with `face`, ascending.
    pub fn dual_neighbors(&self, face: usize) -> impl Iterator<Item = usize> + '_ {
        self.dual[face].iter().map(|&f| f as usize)
    }

    /// Connected components of the face-adjacency graph, each as a sorted
    /// list of face indices; components are ordered by their smallest face.
    pub fn component_faces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.faces.len()];
        let mut out = Vec::new();
        for root in 0..self.faces.len() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(f) = queue.pop_front() {
                for g in self.dual_neighbors(f) {
                    if !seen[g] {
                        seen[g] = true;
                        comp.push(g);
                        queue.push_back(g);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected components as standalone surfaces.
    pub fn components(&self) -> Vec<Surface> {
        self.component_faces()
            .into_iter()
            .map(|comp| {
                let faces = comp.into_iter().map(|f| self.faces[f]).collect();
                Surface::from_faces(self.n, faces, None).unwrap()
            })
            .collect()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[derive(Serialize, Deserialize)]
struct SurfaceDoc {
    n: Dimension,
    cycle: Option<ColorCycle>,
    faces: Vec<CubeCell>,
}

impl Serialize for Surface {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SurfaceDoc {
            n: self.n,
            cycle: self.cycle.clone(),
            faces: self.faces.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Surface {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = SurfaceDoc::deserialize(deserializer)?;
        Surface::from_faces(doc.n, doc.faces, doc.cycle).map_err(serde::de::Error::custom)
    }
}

fn faces_for_cycle(n: Dimension, cycle: &ColorCycle) -> Vec<CubeCell> {
    let mut faces: Vec<CubeCell> = cycle
        .edges()
        .into_iter()
        .flat_map(|b| cells_with_active(n, n.coordinate_bit(b.low()) | n.coordinate_bit(b.high())))
        .collect();
    faces.sort_unstable();
    faces
}

/// The surface `T(Z)` of a Hamiltonian color cycle: all `n 2^(n-2)` squares
/// bicolored by consecutive colors of `Z`.
pub fn build_surface(n: Dimension, z: &ColorCycle) -> Result<Surface> {
    z.check_against(n)?;
    if !z.is_hamiltonian(n) {
        return Err(Error::NotHamiltonian {
            len: z.len(),
            n: n.get(),
        });
    }
    Surface::from_faces(n, faces_for_cycle(n, z), Some(z.clone()))
}

/// The complex of all squares bicolored by consecutive colors of a cycle on
/// `m <= n` colors. For `m < n` it splits into `2^(n-m)` components, one per
/// assignment of the coordinates the cycle does not use.
pub fn build_cycle_surface(n: Dimension, c: &ColorCycle) -> Result<Surface> {
    c.check_against(n)?;
    Surface::from_faces(n, faces_for_cycle(n, c), Some(c.clone()))
}

/// Result of intersecting two square complexes of the same cube.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceIntersection {
    pub shared_faces: Vec<CubeCell>,
    /// Every vertex and edge of `Q_n` lies in both complexes.
    pub contains_all_of_qn: bool,
}

pub fn surface_intersection(a: &Surface, b: &Surface) -> Result<SurfaceIntersection> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch {
            left: a.n.get(),
            right: b.n.get(),
        });
    }
    let shared_faces = sorted_intersection(&a.faces, &b.faces);
    let all = a.n.edge_count() as usize;
    let contains_all_of_qn = a.edges.len() == all && b.edges.len() == all;
    Ok(SurfaceIntersection {
        shared_faces,
        contains_all_of_qn,
    })
}

fn sorted_intersection(a: &[CubeCell], b: &[CubeCell]) -> Vec<CubeCell> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
