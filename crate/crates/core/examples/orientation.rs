//! Two orientations of T(Z) and a Möbius strip in the full 2-skeleton.

use hypercube_genus::prelude::*;

fn main() -> Result<()> {
    let n = Dimension::new(4)?;
    let s = build_surface(n, &ColorCycle::identity(n)?)?;

    let propagated = orient(&s)?;
    let propagated = propagated.assignment().expect("T(Z) is orientable");
    let right_hand = black_vertex_orientation(&s)?;
    println!("propagation coherent: {}", propagated.is_coherent_on(&s));
    println!("right-hand rule coherent: {}", right_hand.is_coherent_on(&s));
    println!(
        "agree up to a flip: {}",
        propagated.agrees_up_to_component_flips(&right_hand, &s)
    );
    for of in propagated.faces.iter().take(4) {
        let corners = of.face.square_corners()?;
        println!("  {} positive={} corners={:?}", of.face, of.positive, corners);
    }

    for k in 2..=5 {
        match find_mobius_strip(Dimension::new(k)?) {
            None => println!("\nH_{k}: no orientation-reversing strip"),
            Some(w) => {
                println!("\nH_{k}: strip of {} faces, verified {}", w.len(), w.verify());
                for step in &w.steps {
                    println!("  {} via {}", step.face, step.edge);
                }
            }
        }
    }
    Ok(())
}
