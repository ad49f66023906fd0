//! Cycle decompositions of `K_n` and the parallel families of surfaces they
//! induce in the 2-skeleton of `H_n`.
//!
//! Each edge `{i, j}` of `K_n` names the `2^(n-2)` squares of bicolor
//! `{i, j}`, so a partition of the edges of `K_n` into cycles partitions the
//! squares of `H_n` into the cycle surfaces of its members.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cube_complex::{binomial, Bicolor, CubeCell, Dimension};
use crate::error::{Error, Result};
use crate::surface::{build_cycle_surface, build_surface, surface_intersection, ColorCycle, Surface};
use crate::topology::{analyze_components, ComponentReport};

/// Cycles of `K_n`, canonicalized and sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    n: Dimension,
    cycles: Vec<ColorCycle>,
}

impl CycleDecomposition {
    pub fn new(n: Dimension, cycles: Vec<ColorCycle>) -> Result<Self> {
        let mut cycles = cycles;
        if let Some(c) = cycles.iter().find(|c| c.max_color() > n.get()) {
            return Err(Error::InvalidCycle(format!("cycle {c} uses a color above n = {n}")));
        }
        cycles.sort();
        Ok(CycleDecomposition { n, cycles })
    }

    pub fn n(&self) -> Dimension {
        self.n
    }

    pub fn cycles(&self) -> &[ColorCycle] {
        &self.cycles
    }

    pub fn is_hamiltonian(&self) -> bool {
        self.cycles.iter().all(|c| c.is_hamiltonian(self.n))
    }

    /// JSON list of color sequences.
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.cycles)?)
    }

    pub fn from_json(n: Dimension, text: &str) -> Result<Self> {
        let cycles: Vec<ColorCycle> = serde_json::from_str(text)?;
        Self::new(n, cycles)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionCertificate {
    /// No edge of `K_n` lies in two cycles.
    pub edge_disjoint: bool,
    /// Every edge of `K_n` lies in some cycle.
    pub complete: bool,
}

impl DecompositionCertificate {
    pub fn passes(&self) -> bool {
        self.edge_disjoint && self.complete
    }
}

pub fn verify_decomposition(d: &CycleDecomposition) -> DecompositionCertificate {
    let mut seen: BTreeSet<Bicolor> = BTreeSet::new();
    let mut edge_disjoint = true;
    for c in &d.cycles {
        for e in c.edges() {
            edge_disjoint &= seen.insert(e);
        }
    }
    let total = binomial(d.n.get() as u64, 2);
    DecompositionCertificate {
        edge_disjoint,
        complete: seen.len() as u64 == total,
    }
}

/// Walecki's round-table decomposition of `K_n`, `n` odd, into `(n-1)/2`
/// Hamiltonian cycles.
///
/// Colors `1..n-1` sit on a circle and color `n` at the center. The zigzag
/// `0, 1, -1, 2, -2, ...` around the circle, closed through the center, is a
/// Hamiltonian cycle; its `(n-1)/2` rotations share no edge.
pub fn hamiltonian_decomposition(n: Dimension) -> Result<CycleDecomposition> {
    if n.get().is_multiple_of(2) {
        return Err(Error::EvenOrder { n: n.get() });
    }
    let ring = n.get() as i32 - 1;
    let zigzag: Vec<i32> = (0..ring)
        .map(|t| if t % 2 == 1 { (t + 1) / 2 } else { -(t / 2) })
        .collect();
    let cycles = (0..ring / 2)
        .map(|shift| {
            let mut seq: Vec<u8> = zigzag
                .iter()
                .map(|&p| ((p + shift).rem_euclid(ring) + 1) as u8)
                .collect();
            seq.push(n.get());
            ColorCycle::new(&seq)
        })
        .collect::<Result<Vec<_>>>()?;
    let d = CycleDecomposition::new(n, cycles)?;
    let cert = verify_decomposition(&d);
    if !cert.passes() {
        return Err(Error::DecompositionRejected(format!(
            "internal construction failed: {cert:?}"
        )));
    }
    Ok(d)
}

/// A bijection of the coordinates `1..=n`, sending `k` to `images[k-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoordinatePermutation {
    images: Vec<u8>,
}

impl CoordinatePermutation {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let set: BTreeSet<u8> = images.iter().copied().collect();
        if set.len() != n || images.iter().any(|&c| c == 0 || c as usize > n) {
            return Err(Error::InvalidPermutation(format!(
                "{images:?} is not a bijection of 1..={n}"
            )));
        }
        Ok(CoordinatePermutation { images })
    }

    pub fn identity(n: Dimension) -> Self {
        CoordinatePermutation {
            images: (1..=n.get()).collect(),
        }
    }

    /// `k -> i_k` for a Hamiltonian cycle `Z = i_1 ... i_n`, read in its
    /// canonical form. It carries `T(1 2 ... n)` onto `T(Z)`.
    pub fn from_cycle(z: &ColorCycle) -> Result<Self> {
        Self::new(z.colors().to_vec())
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, coord: u8) -> u8 {
        self.images[coord as usize - 1]
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn apply_to_cell(&self, cell: &CubeCell) -> Result<CubeCell> {
        if cell.n().get() as usize != self.images.len() {
            return Err(Error::DimensionMismatch {
                left: self.images.len() as u8,
                right: cell.n().get(),
            });
        }
        Ok(cell.map_coordinates(&self.images))
    }
}

/// Image of a surface under a coordinate permutation. A color cycle attached
/// to the surface is relabeled the same way.
pub fn apply_isometry(sigma: &CoordinatePermutation, s: &Surface) -> Result<Surface> {
    let n = s.n();
    if sigma.len() != n.get() as usize {
        return Err(Error::DimensionMismatch {
            left: sigma.len() as u8,
            right: n.get(),
        });
    }
    let faces = s
        .faces()
        .iter()
        .map(|f| sigma.apply_to_cell(f))
        .collect::<Result<Vec<_>>>()?;
    let cycle = s
        .cycle()
        .map(|c| ColorCycle::new(&c.colors().iter().map(|&k| sigma.apply(k)).collect::<Vec<_>>()))
        .transpose()?;
    Surface::from_faces(n, faces, cycle)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    /// Every member is `T(Z)` for a Hamiltonian cycle `Z`.
    Hamiltonian,
    /// Members are cycle surfaces of arbitrary length.
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCertificate {
    pub face_disjoint: bool,
    pub full_coverage: bool,
    pub pairwise_intersection_is_qn: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairIntersection {
    pub a: usize,
    pub b: usize,
    pub shared_faces: usize,
    pub contains_all_of_qn: bool,
}

#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub cycle: ColorCycle,
    pub surface: Surface,
    pub components: Vec<ComponentReport>,
}

/// Surfaces of a cycle decomposition together with their certificate.
#[derive(Debug, Clone)]
pub struct ParallelFamily {
    pub n: Dimension,
    pub kind: FamilyKind,
    pub members: Vec<FamilyMember>,
    pub certificate: FamilyCertificate,
    pub intersections: Vec<PairIntersection>,
}

impl ParallelFamily {
    /// Hamiltonian families need all three flags; general families need
    /// face-disjointness and coverage, their intersections are only recorded.
    pub fn is_certified(&self) -> bool {
        let c = &self.certificate;
        let base = c.face_disjoint && c.full_coverage;
        match self.kind {
            FamilyKind::Hamiltonian => base && c.pairwise_intersection_is_qn,
            FamilyKind::General => base,
        }
    }

    pub fn covered_faces(&self) -> u64 {
        self.members.iter().map(|m| m.surface.faces().len() as u64).sum()
    }

    /// Serializable summary: member cycles and face counts, per-component
    /// reports, pairwise intersections and the certificate.
    pub fn summary(&self) -> FamilySummary {
        FamilySummary {
            n: self.n,
            kind: self.kind,
            members: self
                .members
                .iter()
                .map(|m| MemberSummary {
                    cycle: m.cycle.clone(),
                    faces: m.surface.faces().len(),
                    components: m.components.clone(),
                })
                .collect(),
            total_squares: self.n.square_count(),
            covered_faces: self.covered_faces(),
            intersections: self.intersections.clone(),
            certificate: self.certificate,
            certified: self.is_certified(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberSummary {
    pub cycle: ColorCycle,
    pub faces: usize,
    pub components: Vec<ComponentReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySummary {
    pub n: Dimension,
    pub kind: FamilyKind,
    pub members: Vec<MemberSummary>,
    pub total_squares: u64,
    pub covered_faces: u64,
    pub intersections: Vec<PairIntersection>,
    pub certificate: FamilyCertificate,
    pub certified: bool,
}

fn certify_family(n: Dimension, kind: FamilyKind, members: Vec<(ColorCycle, Surface)>) -> Result<ParallelFamily> {
    let mut all: Vec<CubeCell> = members.iter().flat_map(|(_, s)| s.faces().iter().copied()).collect();
    all.sort_unstable();
    let total = all.len();
    all.dedup();
    let face_disjoint = all.len() == total;
    let full_coverage = all.len() as u64 == n.square_count();

    let mut intersections = Vec::new();
    for a in 0..members.len() {
        for b in a + 1..members.len() {
            let x = surface_intersection(&members[a].1, &members[b].1)?;
            intersections.push(PairIntersection {
                a,
                b,
                shared_faces: x.shared_faces.len(),
                contains_all_of_qn: x.contains_all_of_qn,
            });
        }
    }
    let pairwise_intersection_is_qn = intersections
        .iter()
        .all(|x| x.shared_faces == 0 && x.contains_all_of_qn);

    let members = members
        .into_iter()
        .map(|(cycle, surface)| {
            let components = analyze_components(&surface);
            FamilyMember {
                cycle,
                surface,
                components,
            }
        })
        .collect();
    Ok(ParallelFamily {
        n,
        kind,
        members,
        certificate: FamilyCertificate {
            face_disjoint,
            full_coverage,
            pairwise_intersection_is_qn,
        },
        intersections,
    })
}

fn require_certified(d: &CycleDecomposition) -> Result<()> {
    let cert = verify_decomposition(d);
    if !cert.passes() {
        return Err(Error::DecompositionRejected(format!(
            "edge_disjoint = {}, complete = {}",
            cert.edge_disjoint, cert.complete
        )));
    }
    Ok(())
}

/// The surfaces `T(Z_k)` of a Hamiltonian decomposition.
pub fn parallel_family(n: Dimension, d: &CycleDecomposition) -> Result<ParallelFamily> {
    if d.n != n {
        return Err(Error::DimensionMismatch {
            left: n.get(),
            right: d.n.get(),
        });
    }
    require_certified(d)?;
    if !d.is_hamiltonian() {
        return Err(Error::DecompositionRejected(
            "every cycle must be Hamiltonian; use general_parallel_family".to_string(),
        ));
    }
    let members = d
        .cycles
        .iter()
        .map(|z| Ok((z.clone(), build_surface(n, z)?)))
        .collect::<Result<Vec<_>>>()?;
    certify_family(n, FamilyKind::Hamiltonian, members)
}

/// The cycle surfaces of an arbitrary edge-disjoint complete cycle
/// decomposition. Members may be disconnected; each component is analyzed
/// on its own.
pub fn general_parallel_family(n: Dimension, d: &CycleDecomposition) -> Result<ParallelFamily> {
    if d.n != n {
        return Err(Error::DimensionMismatch {
            left: n.get(),
            right: d.n.get(),
        });
    }
    require_certified(d)?;
    let members = d
        .cycles
        .iter()
        .map(|c| Ok((c.clone(), build_cycle_surface(n, c)?)))
        .collect::<Result<Vec<_>>>()?;
    let kind = if d.is_hamiltonian() {
        FamilyKind::Hamiltonian
    } else {
        FamilyKind::General
    };
    certify_family(n, kind, members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube_complex::enumerate_cells;
    use crate::cube_complex::word_parity;

    fn dim(n: u32) -> Dimension {
        Dimension::new(n).unwrap()
    }

    fn cycles(list: &[&str]) -> Vec<ColorCycle> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn walecki_small_cases() {
        let d3 = hamiltonian_decomposition(dim(3)).unwrap();
        assert_eq!(d3.cycles(), cycles(&["1,2,3"]));
        let d5 = hamiltonian_decomposition(dim(5)).unwrap();
        assert_eq!(d5.cycles().len(), 2);
        assert!(verify_decomposition(&d5).passes());
        let d7 = hamiltonian_decomposition(dim(7)).unwrap();
        assert_eq!(d7.cycles().len(), 3);
        assert!(d7.cycles().iter().all(|c| c.is_hamiltonian(dim(7))));
        assert!(verify_decomposition(&d7).passes());
    }

    #[test]
    fn walecki_all_odd_orders() {
        for n in (3..=23).step_by(2) {
            let d = hamiltonian_decomposition(dim(n)).unwrap();
            assert_eq!(d.cycles().len(), (n as usize - 1) / 2);
            assert!(d.is_hamiltonian());
            assert!(verify_decomposition(&d).passes());
        }
    }

    #[test]
    fn even_order_refused() {
        for n in [2, 4, 6, 10] {
            let err = hamiltonian_decomposition(dim(n)).unwrap_err();
            assert!(matches!(err, Error::EvenOrder { .. }));
            assert!(err.to_string().contains("odd"));
        }
    }

    #[test]
    fn verify_examples() {
        let d = CycleDecomposition::new(dim(5), cycles(&["1,2,3,4,5", "1,3,5,2,4"])).unwrap();
        assert_eq!(
            verify_decomposition(&d),
            DecompositionCertificate {
                edge_disjoint: true,
                complete: true
            }
        );
        let d = CycleDecomposition::new(dim(4), cycles(&["1,2,3,4", "1,2,3,4"])).unwrap();
        assert!(!verify_decomposition(&d).edge_disjoint);
        let d = CycleDecomposition::new(dim(5), cycles(&["1,2,3,4,5"])).unwrap();
        assert_eq!(
            verify_decomposition(&d),
            DecompositionCertificate {
                edge_disjoint: true,
                complete: false
            }
        );
        assert!(CycleDecomposition::new(dim(4), cycles(&["1,2,5"])).is_err());
    }

    #[test]
    fn decomposition_json() {
        let d = CycleDecomposition::new(dim(5), cycles(&["1,3,5,2,4", "1,2,3,4,5"])).unwrap();
        let text = d.to_json().unwrap();
        assert_eq!(text, "[[1,2,3,4,5],[1,3,5,2,4]]");
        assert_eq!(CycleDecomposition::from_json(dim(5), &text).unwrap(), d);
        assert!(CycleDecomposition::from_json(dim(5), "[[1,2]]").is_err());
    }

    #[test]
    fn family_n5() {
        let n = dim(5);
        let d = CycleDecomposition::new(n, cycles(&["1,2,3,4,5", "1,3,5,2,4"])).unwrap();
        let fam = parallel_family(n, &d).unwrap();
        assert!(fam.is_certified());
        assert_eq!(fam.members.len(), 2);
        assert!(fam.members.iter().all(|m| m.surface.faces().len() == 40));
        assert_eq!(fam.covered_faces(), 80);
        for m in &fam.members {
            assert_eq!(m.components.len(), 1);
            assert_eq!(m.components[0].genus, Some(5));
        }
    }

    #[test]
    fn family_n3_and_n7() {
        let fam = parallel_family(dim(3), &hamiltonian_decomposition(dim(3)).unwrap()).unwrap();
        assert!(fam.is_certified());
        assert_eq!(fam.members.len(), 1);
        assert_eq!(fam.members[0].surface.faces(), enumerate_cells(dim(3), 2).unwrap());

        let fam = parallel_family(dim(7), &hamiltonian_decomposition(dim(7)).unwrap()).unwrap();
        assert!(fam.is_certified());
        assert!(fam.members.iter().all(|m| m.surface.faces().len() == 224));
        assert_eq!(fam.covered_faces(), 672);
    }

    #[test]
    fn family_rejects_bad_decompositions() {
        let n = dim(5);
        let partial = CycleDecomposition::new(n, cycles(&["1,2,3,4,5"])).unwrap();
        assert!(matches!(
            parallel_family(n, &partial),
            Err(Error::DecompositionRejected(_))
        ));
        let mixed = CycleDecomposition::new(n, cycles(&["1,2,3", "1,4,5", "2,4,3,5"])).unwrap();
        assert!(parallel_family(n, &mixed).is_err());
        assert!(general_parallel_family(n, &partial).is_err());
    }

    #[test]
    fn general_family_with_triangles() {
        let n = dim(5);
        let d = CycleDecomposition::new(n, cycles(&["1,2,3", "1,4,5", "2,4,3,5"])).unwrap();
        assert!(verify_decomposition(&d).passes());
        let fam = general_parallel_family(n, &d).unwrap();
        assert_eq!(fam.kind, FamilyKind::General);
        assert!(fam.certificate.face_disjoint && fam.certificate.full_coverage);
        assert!(fam.is_certified());
        assert!(!fam.certificate.pairwise_intersection_is_qn);
        let tri = fam.members.iter().find(|m| m.cycle.colors() == [1, 2, 3]).unwrap();
        assert_eq!(tri.surface.faces().len(), 24);
        assert_eq!(tri.components.len(), 4);
        assert!(tri.components.iter().all(|c| c.faces == 6 && c.genus == Some(0)));
        let quad = fam.members.iter().find(|m| m.cycle.len() == 4).unwrap();
        assert_eq!(quad.components.len(), 2);
        assert!(quad.components.iter().all(|c| c.genus == Some(1)));

        let h = hamiltonian_decomposition(n).unwrap();
        let a = general_parallel_family(n, &h).unwrap();
        let b = parallel_family(n, &h).unwrap();
        assert_eq!(a.certificate, b.certificate);
        assert_eq!(a.kind, FamilyKind::Hamiltonian);
    }

    #[test]
    fn isometry_examples() {
        let n = dim(5);
        let t_id = build_surface(n, &ColorCycle::identity(n).unwrap()).unwrap();
        assert_eq!(
            apply_isometry(&CoordinatePermutation::identity(n), &t_id).unwrap(),
            t_id
        );

        let sigma = CoordinatePermutation::new(vec![1, 3, 5, 2, 4]).unwrap();
        let image = apply_isometry(&sigma, &t_id).unwrap();
        let target = build_surface(n, &"1,3,5,2,4".parse().unwrap()).unwrap();
        assert_eq!(image.faces(), target.faces());
        assert_eq!(image, target);

        for f in t_id.faces() {
            let g = sigma.apply_to_cell(f).unwrap();
            let mut a: Vec<_> = f.square_corners().unwrap().map(word_parity).to_vec();
            let mut b: Vec<_> = g.square_corners().unwrap().map(word_parity).to_vec();
            a.sort_by_key(|p| *p as u8);
            b.sort_by_key(|p| *p as u8);
            assert_eq!(a, b);
        }

        assert!(CoordinatePermutation::new(vec![1, 1, 2]).is_err());
        assert!(CoordinatePermutation::new(vec![1, 2, 4]).is_err());
        let small = CoordinatePermutation::new(vec![2, 1, 3]).unwrap();
        assert!(matches!(
            apply_isometry(&small, &t_id),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn isometry_carries_identity_surface_to_every_cycle() {
        let n = dim(6);
        let t_id = build_surface(n, &ColorCycle::identity(n).unwrap()).unwrap();
        let mut rest: Vec<u8> = (2..=6).collect();
        // all 5! orderings starting at 1
        let mut perms = Vec::new();
        permute(&mut rest, 0, &mut perms);
        for p in perms {
            let mut seq = vec![1u8];
            seq.extend(p);
            let z = ColorCycle::new(&seq).unwrap();
            let sigma = CoordinatePermutation::from_cycle(&z).unwrap();
            assert_eq!(apply_isometry(&sigma, &t_id).unwrap(), build_surface(n, &z).unwrap());
        }
    }

    fn permute(v: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
        if k == v.len() {
            out.push(v.clone());
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, out);
            v.swap(k, i);
        }
    }
}
