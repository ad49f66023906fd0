//! Write the Q_4 torus as an OFF mesh.
//!
//! `cargo run --example export_off -- q4.off`

use hypercube_genus::prelude::*;

fn main() -> Result<()> {
    let n = Dimension::new(4)?;
    let s = build_surface(n, &ColorCycle::identity(n)?)?;
    let mesh = export_mesh(&s, Projection::Random { seed: 0 })?;
    let off = mesh.to_off();
    match std::env::args().nth(1) {
        Some(path) => {
            std::fs::write(&path, &off)?;
            println!(
                "wrote {} vertices and {} quads to {path}",
                mesh.vertices.len(),
                mesh.faces.len()
            );
        }
        None => print!("{off}"),
    }
    Ok(())
}
