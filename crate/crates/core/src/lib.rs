//! Minimum-genus surfaces of hypercube graphs.
//!
//! The hypercube graph `Q_n` is the 1-skeleton of the n-cube `H_n`. For a
//! cyclic order `Z` of the coordinates, the squares of `H_n` whose two edge
//! colors are consecutive in `Z` form a closed orientable surface `T(Z)`
//! containing `Q_n`, of genus `1 + (n-4) 2^(n-3)`, which is the genus of
//! `Q_n`. This crate builds those surfaces and certifies every claim about
//! them:
//!
//! - [`cube_complex`]: cells of `H_n`, edge colors, bicolors, bipartition.
//! - [`surface`]: `T(Z)` and cycle surfaces, intersections, JSON form.
//! - [`topology`]: closed-surface check, orientation with Möbius witnesses,
//!   the right-hand-rule orientation, Euler genus, rotation systems and face
//!   tracing.
//! - [`decomposition`]: Hamiltonian decompositions of `K_n` and the parallel
//!   families of surfaces that partition the 2-skeleton.
//! - [`formulas`]: closed-form genus values and the bipartite lower bound.
//! - [`report`] and [`mesh`]: run reports and OFF export used by the
//!   `hypercube-genus` binary.
//!
//! ```
//! use hypercube_genus::prelude::*;
//!
//! let n = Dimension::new(5)?;
//! let t = build_surface(n, &ColorCycle::identity(n)?)?;
//! let report = check_closed_surface(&t);
//! assert!(report.is_closed_surface() && report.connected);
//! assert!(orient(&t)?.is_orientable());
//! assert_eq!(euler_genus(&report)?, qn_genus(5)?.get());
//! # Ok::<(), hypercube_genus::Error>(())
//! ```

pub mod cube_complex;
pub mod decomposition;
pub mod error;
pub mod formulas;
pub mod mesh;
pub mod report;
pub mod surface;
pub mod topology;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::cube_complex::{
        cell_count, enumerate_cells, squares_with_bicolor, Bicolor, CubeCell, Dimension, EdgeColor, Parity,
    };
    pub use crate::decomposition::{
        apply_isometry, general_parallel_family, hamiltonian_decomposition, parallel_family, verify_decomposition,
        CoordinatePermutation, CycleDecomposition, ParallelFamily,
    };
    pub use crate::error::{Error, Result};
    pub use crate::formulas::{bipartite_lower_bound, kmn_genus, kn_genus, qn_genus, GenusValue};
    pub use crate::mesh::{export_mesh, MeshFile, Projection};
    pub use crate::surface::{build_cycle_surface, build_surface, surface_intersection, ColorCycle, Surface};
    pub use crate::topology::{
        black_vertex_orientation, check_closed_surface, euler_genus, euler_genus_from_counts, find_mobius_strip,
        orient, rotation_system, trace_faces, traced_genus, ManifoldReport, MobiusWitness, Orientation,
        OrientationAssignment, RotationSystem,
    };
}
