//! Shorter color cycles give disjoint copies of lower-dimensional surfaces,
//! and a non-Hamiltonian decomposition of K_5 still partitions the squares.

use hypercube_genus::prelude::*;
use hypercube_genus::topology::analyze_components;

fn main() -> Result<()> {
    let n = Dimension::new(6)?;
    let c = ColorCycle::new(&[1, 2, 4, 5])?;
    let s = build_cycle_surface(n, &c)?;
    let comps = analyze_components(&s);
    println!(
        "cycle {:?} in H_6: {} faces in {} components",
        c.colors(),
        s.faces().len(),
        comps.len()
    );
    for comp in comps.iter().take(2) {
        println!(
            "  {} faces, orientable {:?}, genus {:?}",
            comp.faces, comp.orientable, comp.genus
        );
    }

    let k5 = Dimension::new(5)?;
    let cycles = [&[1, 2, 3][..], &[1, 4, 5], &[2, 4, 3, 5]]
        .map(ColorCycle::new)
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let dec = CycleDecomposition::new(k5, cycles)?;
    let family = general_parallel_family(k5, &dec)?;
    println!("\nK_5 = 123 + 145 + 2435: certified {}", family.is_certified());
    for p in &family.intersections {
        println!("  members {} and {} share {} faces", p.a, p.b, p.shared_faces);
    }
    Ok(())
}
