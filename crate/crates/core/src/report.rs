//! Machine-readable run reports for the command-line front end.
//!
//! Every command produces one [`RunReport`]; the text format is a rendering
//! of the same data. Reports contain no timing unless explicitly requested,
//! so identical invocations serialize to identical bytes.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cube_complex::Dimension;
use crate::decomposition::{
    general_parallel_family, hamiltonian_decomposition, parallel_family, verify_decomposition, CycleDecomposition,
    DecompositionCertificate, FamilySummary, ParallelFamily,
};
use crate::error::Result;
use crate::formulas::{bipartite_lower_bound, qn_genus};
use crate::surface::{build_surface, ColorCycle, Surface};
use crate::topology::{
    analyze_components, black_vertex_orientation, check_closed_surface, euler_genus, find_mobius_strip, orient,
    rotation_system, trace_faces, traced_genus, ComponentReport, ManifoldReport, MobiusWitness, Orientation,
};

/// Every certificate computed for one surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceCertificate {
    pub manifold: ManifoldReport,
    pub orientable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mobius_witness: Option<MobiusWitness>,
    /// Right-hand-rule orientation matches propagation up to a global flip.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right_hand_rule_agrees: Option<bool>,
    pub euler_genus: Option<u64>,
    pub traced_faces: Option<usize>,
    pub traced_walks_quadrilateral: Option<bool>,
    pub traced_walks_match_faces: Option<bool>,
    pub traced_genus: Option<u64>,
    /// `1 + (n-4) 2^(n-3)`, reported when the surface is some `T(Z)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula_genus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_bound_tight: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub components: Vec<ComponentReport>,
    pub passed: bool,
}

/// Runs the manifold check, both orientation routes, both genus routes and
/// the closed-form comparison.
pub fn certify_surface(s: &Surface) -> SurfaceCertificate {
    let manifold = check_closed_surface(s);
    let mut cert = SurfaceCertificate {
        manifold,
        orientable: None,
        mobius_witness: None,
        right_hand_rule_agrees: None,
        euler_genus: None,
        traced_faces: None,
        traced_walks_quadrilateral: None,
        traced_walks_match_faces: None,
        traced_genus: None,
        formula_genus: None,
        lower_bound: None,
        lower_bound_tight: None,
        components: Vec::new(),
        passed: false,
    };
    if !manifold.is_closed_surface() {
        return cert;
    }
    let orientation = match orient(s) {
        Ok(o) => o,
        Err(_) => return cert,
    };
    cert.orientable = Some(orientation.is_orientable());
    let assignment = match orientation {
        Orientation::Coherent(a) => a,
        Orientation::Mobius(w) => {
            cert.mobius_witness = Some(w);
            return cert;
        }
    };
    let hamiltonian = s.cycle().is_some_and(|z| z.is_hamiltonian(s.n()));
    if hamiltonian {
        cert.right_hand_rule_agrees = Some(
            black_vertex_orientation(s)
                .map(|b| b.is_coherent_on(s) && b.agrees_up_to_component_flips(&assignment, s))
                .unwrap_or(false),
        );
    }
    if let Ok(rs) = rotation_system(s) {
        if let Ok(walks) = trace_faces(&rs, &assignment) {
            cert.traced_faces = Some(walks.len());
            cert.traced_walks_quadrilateral = Some(walks.iter().all(|w| w.len() == 4));
            let mut squares: Option<Vec<_>> = walks.iter().map(|w| w.as_square()).collect();
            if let Some(sq) = squares.as_mut() {
                sq.sort_unstable();
            }
            cert.traced_walks_match_faces = Some(squares.as_deref() == Some(s.faces()));
            if manifold.connected {
                cert.traced_genus = traced_genus(&rs, &walks).ok();
            }
        }
    }
    if manifold.connected {
        cert.euler_genus = euler_genus(&manifold).ok();
    } else {
        cert.components = analyze_components(s);
    }
    if hamiltonian {
        let n = s.n().get() as u32;
        cert.formula_genus = qn_genus(n).ok().map(|g| g.get());
        let bound = bipartite_lower_bound(s.n().vertex_count(), s.n().edge_count());
        cert.lower_bound = Some(bound.to_string());
        cert.lower_bound_tight = cert
            .euler_genus
            .map(|g| bound.is_integer() && bound.to_integer() == g as i128);
    }

    let traced_ok = cert.traced_walks_match_faces == Some(true) && cert.traced_walks_quadrilateral == Some(true);
    let genus_ok = if manifold.connected {
        cert.euler_genus.is_some() && cert.euler_genus == cert.traced_genus
    } else {
        cert.components
            .iter()
            .all(|c| c.orientable == Some(true) && c.genus.is_some())
    };
    let formula_ok = !hamiltonian
        || (cert.right_hand_rule_agrees == Some(true)
            && cert.formula_genus == cert.euler_genus
            && cert.lower_bound_tight == Some(true));
    cert.passed = traced_ok && genus_ok && formula_ok;
    cert
}

/// Inputs echoed into a report.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<ColorCycle>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Vec<ColorCycle>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub build_limit: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub projection: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MobiusReport {
    pub n: Dimension,
    pub witness: Option<MobiusWitness>,
    pub verified: Option<bool>,
}

/// Closed-form genus next to the value computed from a constructed surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ConstructedGenus {
    Value(u64),
    /// Above the build limit only the formula is evaluated.
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: u32,
    pub v: u64,
    pub e: u64,
    pub faces: u64,
    pub formula_genus: u64,
    pub constructed_genus: ConstructedGenus,
    pub lower_bound: String,
    pub tight: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: Parameters,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surface: Option<SurfaceCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mobius: Option<MobiusReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<TableRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
    pub passed: bool,
}

impl RunReport {
    fn new(command: &str, parameters: Parameters) -> Self {
        RunReport {
            command: command.to_string(),
            parameters,
            surface: None,
            decomposition: None,
            family: None,
            mobius: None,
            table: None,
            wall_time_ms: None,
            passed: false,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    pub fn to_text(&self) -> String {
        render_text(self)
    }
}

/// Builds `T(Z)` (identity cycle by default) and certifies it.
pub fn run_build(n: Dimension, cycle: Option<ColorCycle>) -> Result<(RunReport, Surface)> {
    let z = match cycle {
        Some(z) => z,
        None => ColorCycle::identity(n)?,
    };
    let s = build_surface(n, &z)?;
    let cert = certify_surface(&s);
    let mut report = RunReport::new(
        "build",
        Parameters {
            n: Some(n.get() as u32),
            cycle: Some(z),
            ..Default::default()
        },
    );
    report.passed = cert.passed;
    report.surface = Some(cert);
    Ok((report, s))
}

/// Re-certifies a loaded surface.
pub fn run_verify(s: &Surface, input: Option<String>) -> RunReport {
    let cert = certify_surface(s);
    let mut report = RunReport::new(
        "verify",
        Parameters {
            n: Some(s.n().get() as u32),
            cycle: s.cycle().cloned(),
            input,
            ..Default::default()
        },
    );
    report.passed = cert.passed;
    report.surface = Some(cert);
    report
}

/// Builds a parallel family from a supplied decomposition, or from the
/// round-table Hamiltonian decomposition for odd `n`.
pub fn run_family(n: Dimension, decomposition: Option<CycleDecomposition>) -> Result<(RunReport, ParallelFamily)> {
    let d = match decomposition {
        Some(d) => d,
        None => hamiltonian_decomposition(n)?,
    };
    let dcert = verify_decomposition(&d);
    let family = if d.is_hamiltonian() {
        parallel_family(n, &d)?
    } else {
        general_parallel_family(n, &d)?
    };
    let mut report = RunReport::new(
        "family",
        Parameters {
            n: Some(n.get() as u32),
            decomposition: Some(d.cycles().to_vec()),
            ..Default::default()
        },
    );
    let summary = family.summary();
    report.passed = dcert.passes() && summary.certified;
    report.decomposition = Some(dcert);
    report.family = Some(summary);
    Ok((report, family))
}

pub fn run_mobius(n: Dimension) -> RunReport {
    let witness = find_mobius_strip(n);
    let verified = witness.as_ref().map(|w| w.verify());
    let mut report = RunReport::new(
        "mobius",
        Parameters {
            n: Some(n.get() as u32),
            ..Default::default()
        },
    );
    report.passed = verified.unwrap_or(true);
    report.mobius = Some(MobiusReport { n, witness, verified });
    report
}

/// Default largest `n` for which the table builds a surface.
pub const DEFAULT_BUILD_LIMIT: u32 = 10;

/// Rows `n = 3..=n_max` comparing closed form, construction and lower bound.
pub fn genus_table(n_max: u32, build_limit: u32) -> Result<Vec<TableRow>> {
    if n_max < 3 {
        return Ok(Vec::new());
    }
    Dimension::new(n_max)?;
    (3..=n_max)
        .map(|n| {
            let d = Dimension::new(n)?;
            let formula = qn_genus(n)?.get();
            let bound = bipartite_lower_bound(d.vertex_count(), d.edge_count());
            let constructed = if n <= build_limit {
                let s = build_surface(d, &ColorCycle::identity(d)?)?;
                ConstructedGenus::Value(euler_genus(&check_closed_surface(&s))?)
            } else {
                ConstructedGenus::Skipped("formula-only".to_string())
            };
            Ok(TableRow {
                n,
                v: d.vertex_count(),
                e: d.edge_count(),
                faces: n as u64 * (1u64 << (n - 2)),
                formula_genus: formula,
                constructed_genus: constructed,
                lower_bound: bound.to_string(),
                tight: bound.is_integer() && bound.to_integer() == formula as i128,
            })
        })
        .collect()
}

pub fn run_table(n_max: u32, build_limit: u32) -> Result<RunReport> {
    let rows = genus_table(n_max, build_limit)?;
    let passed = rows.iter().all(|r| {
        r.tight
            && match r.constructed_genus {
                ConstructedGenus::Value(g) => g == r.formula_genus,
                ConstructedGenus::Skipped(_) => true,
            }
    });
    let mut report = RunReport::new(
        "table",
        Parameters {
            n_max: Some(n_max),
            build_limit: Some(build_limit),
            ..Default::default()
        },
    );
    report.passed = passed;
    report.table = Some(rows);
    Ok(report)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

pub fn render_text(r: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "command: {}", r.command);
    if let Some(n) = r.parameters.n {
        let _ = writeln!(out, "n: {n}");
    }
    if let Some(c) = &r.parameters.cycle {
        let _ = writeln!(out, "cycle: {c}");
    }
    if let Some(c) = &r.surface {
        let m = &c.manifold;
        let _ = writeln!(out, "v e f: {} {} {}", m.v, m.e, m.f);
        let _ = writeln!(
            out,
            "closed surface: {} (edge degrees {}, links {})",
            yes_no(m.is_closed_surface()),
            yes_no(m.edge_degrees_ok),
            yes_no(m.links_ok)
        );
        let _ = writeln!(out, "components: {}", m.component_count);
        let _ = writeln!(out, "orientable: {}", c.orientable.map_or("-", yes_no));
        if let Some(w) = &c.mobius_witness {
            let _ = writeln!(out, "mobius witness: {} faces", w.len());
        }
        if let Some(a) = c.right_hand_rule_agrees {
            let _ = writeln!(out, "right-hand rule agrees: {}", yes_no(a));
        }
        let _ = writeln!(out, "genus (euler): {}", opt(&c.euler_genus));
        let _ = writeln!(
            out,
            "genus (traced): {} from {} walks",
            opt(&c.traced_genus),
            opt(&c.traced_faces)
        );
        if c.formula_genus.is_some() {
            let _ = writeln!(out, "genus (formula): {}", opt(&c.formula_genus));
            let _ = writeln!(
                out,
                "lower bound: {} tight: {}",
                opt(&c.lower_bound),
                c.lower_bound_tight.map_or("-", yes_no)
            );
        }
        for (i, comp) in c.components.iter().enumerate() {
            let _ = writeln!(out, "component {i}: {} faces, genus {}", comp.faces, opt(&comp.genus));
        }
    }
    if let Some(d) = &r.decomposition {
        let _ = writeln!(
            out,
            "decomposition: edge-disjoint {}, complete {}",
            yes_no(d.edge_disjoint),
            yes_no(d.complete)
        );
    }
    if let Some(f) = &r.family {
        let _ = writeln!(out, "members: {}", f.members.len());
        for m in &f.members {
            let genera: Vec<String> = m.components.iter().map(|c| opt(&c.genus)).collect();
            let _ = writeln!(
                out,
                "  {}: {} faces, component genera [{}]",
                m.cycle,
                m.faces,
                genera.join(", ")
            );
        }
        let _ = writeln!(out, "coverage: {}/{} faces", f.covered_faces, f.total_squares);
        let c = &f.certificate;
        let _ = writeln!(
            out,
            "face-disjoint {}, full coverage {}, pairwise intersections = Q_n {}",
            yes_no(c.face_disjoint),
            yes_no(c.full_coverage),
            yes_no(c.pairwise_intersection_is_qn)
        );
    }
    if let Some(m) = &r.mobius {
        match &m.witness {
            Some(w) => {
                let _ = writeln!(
                    out,
                    "mobius strip of {} faces, verified {}",
                    w.len(),
                    m.verified.map_or("-", yes_no)
                );
                for step in &w.steps {
                    let _ = writeln!(out, "  {} via {}", step.face, step.edge);
                }
            }
            None => {
                let _ = writeln!(
                    out,
                    "no mobius strip within {} faces",
                    crate::topology::MOBIUS_SEARCH_DEPTH
                );
            }
        }
    }
    if let Some(rows) = &r.table {
        let _ = writeln!(
            out,
            "{:>3} {:>10} {:>12} {:>12} {:>12} {:>14} {:>12} {:>6}",
            "n", "v", "e", "|F|", "formula", "constructed", "bound", "tight"
        );
        for row in rows {
            let constructed = match &row.constructed_genus {
                ConstructedGenus::Value(g) => g.to_string(),
                ConstructedGenus::Skipped(s) => s.clone(),
            };
            let _ = writeln!(
                out,
                "{:>3} {:>10} {:>12} {:>12} {:>12} {:>14} {:>12} {:>6}",
                row.n,
                row.v,
                row.e,
                row.faces,
                row.formula_genus,
                constructed,
                row.lower_bound,
                yes_no(row.tight)
            );
        }
    }
    if let Some(ms) = r.wall_time_ms {
        let _ = writeln!(out, "wall time: {ms} ms");
    }
    let _ = writeln!(out, "passed: {}", yes_no(r.passed));
    out
}
