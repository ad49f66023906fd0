//! Partition the squares of H_n into isometric genus-minimal surfaces.

use hypercube_genus::prelude::*;

fn main() -> Result<()> {
    let n = Dimension::new(7)?;
    let dec = hamiltonian_decomposition(n)?;
    println!("decomposition: {}", dec.to_json()?);
    println!("certificate: {:?}", verify_decomposition(&dec));

    let family = parallel_family(n, &dec)?;
    for m in &family.members {
        let genus = euler_genus(&check_closed_surface(&m.surface))?;
        println!(
            "  Z = {:?}: {} faces, genus {genus}",
            m.cycle.colors(),
            m.surface.faces().len()
        );
    }
    println!("{:?}", family.certificate);
    println!("covered {} of {} squares", family.covered_faces(), n.square_count());

    let base = build_surface(n, &ColorCycle::identity(n)?)?;
    for m in &family.members {
        let sigma = CoordinatePermutation::from_cycle(&m.cycle)?;
        let image = apply_isometry(&sigma, &base)?;
        println!(
            "  sigma {:?} maps T(identity) onto member: {}",
            sigma.images(),
            image.faces() == m.surface.faces()
        );
    }
    Ok(())
}
