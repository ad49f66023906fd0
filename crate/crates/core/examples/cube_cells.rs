//! Enumerate the cells of the 5-cube and inspect one square.

use hypercube_genus::prelude::*;

fn main() -> Result<()> {
    let n = Dimension::new(5)?;
    for k in 0..=5 {
        println!("{k}-cells of H_5: {}", enumerate_cells(n, k)?.len());
    }

    let square: CubeCell = "2-face[n=5; active={1,3}; fixed=*1*10]".parse()?;
    println!("\n{square}");
    println!("bicolor: {:?}", square.face_bicolor()?);
    for edge in square.boundary()? {
        println!("  edge {edge} color {}", edge.edge_color()?.0);
    }
    let corners = square.square_corners()?;
    let words: Vec<String> = corners.iter().map(|&w| CubeCell::word_string(n, w)).collect();
    println!("corners: {}", words.join(" -> "));

    let class = squares_with_bicolor(n, Bicolor::new(2, 4)?)?;
    println!("\nsquares bicolored 24: {}", class.len());
    Ok(())
}
