//! Recover the faces of T(Z) from its rotation system alone.

use hypercube_genus::prelude::*;

fn main() -> Result<()> {
    let n = Dimension::new(5)?;
    let s = build_surface(n, &ColorCycle::new(&[1, 3, 5, 2, 4])?)?;
    let orientation = orient(&s)?;
    let assignment = orientation.assignment().expect("orientable");
    let rs = rotation_system(&s)?;

    let origin = CubeCell::vertex(n, 0)?;
    let rot = rs.at(&origin).expect("origin is a vertex");
    println!("rotation at {origin}: colors {:?}", rot.colors());

    let walks = trace_faces(&rs, assignment)?;
    println!("{} walks, lengths {:?}", walks.len(), {
        let mut l: Vec<usize> = walks.iter().map(|w| w.len()).collect();
        l.dedup();
        l
    });
    if let Some(w) = walks.first() {
        println!(
            "first walk closes the square {:?}",
            w.as_square().map(|c| c.to_string())
        );
    }
    println!(
        "traced genus {} = Euler genus {}",
        traced_genus(&rs, &walks)?,
        euler_genus(&check_closed_surface(&s))?
    );
    Ok(())
}
