//! OFF export of certified surfaces.
//!
//! Vertices of `Q_n` become their 0/1 coordinate vectors in `R^n` and are
//! projected to `R^3`. Quads list their corners in the traversal order of a
//! coherent orientation. Projections of `n > 3` surfaces generally
//! self-intersect; the file records the combinatorics, not an embedding.

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::cube_complex::Dimension;
use crate::error::{Error, Result};
use crate::surface::Surface;
use crate::topology::{check_closed_surface, orient, oriented_corners};

/// Linear map `R^n -> R^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Projection {
    /// The identity on `R^3`; only for `n = 3`.
    Axis,
    /// Orthonormal 3-frame drawn from a seeded generator.
    Random { seed: u64 },
}

impl Projection {
    pub fn name(&self) -> &'static str {
        match self {
            Projection::Axis => "axis",
            Projection::Random { .. } => "random",
        }
    }

    /// Rows of the 3 x n projection matrix.
    pub fn matrix(&self, n: Dimension) -> Result<[Vec<f64>; 3]> {
        let n = n.get() as usize;
        match *self {
            Projection::Axis => {
                if n != 3 {
                    return Err(Error::Domain(format!("axis projection needs n = 3, got {n}")));
                }
                Ok([vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]])
            }
            Projection::Random { seed } => {
                if n < 3 {
                    return Err(Error::Domain(format!("projection to R^3 needs n >= 3, got {n}")));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut rows: Vec<Vec<f64>> = Vec::with_capacity(3);
                while rows.len() < 3 {
                    let mut v: Vec<f64> = (0..n).map(|_| StandardNormal.sample(&mut rng)).collect();
                    for r in &rows {
                        let d = dot(&v, r);
                        v.iter_mut().zip(r).for_each(|(x, y)| *x -= d * y);
                    }
                    let norm = dot(&v, &v).sqrt();
                    if norm > 1e-9 {
                        v.iter_mut().for_each(|x| *x /= norm);
                        rows.push(v);
                    }
                }
                let [a, b, c]: [Vec<f64>; 3] = rows.try_into().unwrap();
                Ok([a, b, c])
            }
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Polygon mesh with quad faces.
#[derive(Debug, Clone, PartialEq)]
pub struct MeshFile {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<[usize; 4]>,
}

impl MeshFile {
    /// `OFF`, then `V F 0`, then one `x y z` line per vertex and one
    /// `4 a b c d` line per face. Coordinates carry six decimals.
    pub fn to_off(&self) -> String {
        let mut out = String::new();
        out.push_str("OFF\n");
        let _ = writeln!(out, "{} {} 0", self.vertices.len(), self.faces.len());
        for v in &self.vertices {
            // + 0.0 turns -0.0 into 0.0
            let _ = writeln!(out, "{:.6} {:.6} {:.6}", v[0] + 0.0, v[1] + 0.0, v[2] + 0.0);
        }
        for f in &self.faces {
            let _ = writeln!(out, "4 {} {} {} {}", f[0], f[1], f[2], f[3]);
        }
        out
    }

    /// Parses the quad-only OFF files written by [`MeshFile::to_off`].
    pub fn from_off(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::Domain(format!("malformed OFF: {m}"));
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        if lines.next() != Some("OFF") {
            return Err(bad("missing OFF header"));
        }
        let counts: Vec<usize> = lines
            .next()
            .ok_or_else(|| bad("missing counts"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad("bad count")))
            .collect::<Result<_>>()?;
        let [nv, nf, _] = counts[..] else {
            return Err(bad("counts line needs 3 integers"));
        };
        let mut vertices = Vec::with_capacity(nv);
        for _ in 0..nv {
            let xs: Vec<f64> = lines
                .next()
                .ok_or_else(|| bad("missing vertex"))?
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| bad("bad coordinate")))
                .collect::<Result<_>>()?;
            let [x, y, z] = xs[..] else {
                return Err(bad("vertex needs 3 coordinates"));
            };
            vertices.push([x, y, z]);
        }
        let mut faces = Vec::with_capacity(nf);
        for _ in 0..nf {
            let idx: Vec<usize> = lines
                .next()
                .ok_or_else(|| bad("missing face"))?
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| bad("bad index")))
                .collect::<Result<_>>()?;
            let [4, a, b, c, d] = idx[..] else {
                return Err(bad("face must be a quad"));
            };
            if [a, b, c, d].iter().any(|&i| i >= nv) {
                return Err(bad("face index out of range"));
            }
            faces.push([a, b, c, d]);
        }
        Ok(MeshFile { vertices, faces })
    }
}

/// Projects a certified orientable closed surface to an OFF mesh.
pub fn export_mesh(s: &Surface, projection: Projection) -> Result<MeshFile> {
    let report = check_closed_surface(s);
    if !report.is_closed_surface() {
        return Err(Error::NotASurface("uncertified surface refused for export".to_string()));
    }
    let orientation = orient(s)?;
    let assignment = orientation
        .assignment()
        .ok_or_else(|| Error::Domain("non-orientable surface refused for export".to_string()))?;
    let n = s.n();
    let m = projection.matrix(n)?;
    let vertices = s
        .vertices()
        .iter()
        .map(|v| {
            let x: Vec<f64> = (1..=n.get())
                .map(|c| if v.coordinate(c) == Some(true) { 1.0 } else { 0.0 })
                .collect();
            [dot(&m[0], &x), dot(&m[1], &x), dot(&m[2], &x)]
        })
        .collect();
    let index = |word: u32| {
        s.vertices()
            .binary_search_by(|v| v.fixed_word().cmp(&word))
            .expect("corner is a surface vertex")
    };
    let faces = assignment
        .faces
        .iter()
        .map(|of| oriented_corners(&of.face, of.positive).map(index))
        .collect();
    Ok(MeshFile { vertices, faces })
}
