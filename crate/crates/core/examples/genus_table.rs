//! Genus of Q_n from the construction and from the closed form.

use hypercube_genus::report::genus_table;

fn main() -> hypercube_genus::Result<()> {
    println!(
        "{:>3} {:>6} {:>8} {:>8} {:>10} {:>11}",
        "n", "v", "e", "faces", "formula", "constructed"
    );
    for row in genus_table(12, 9)? {
        let built = serde_json::to_string(&row.constructed_genus)?;
        println!(
            "{:>3} {:>6} {:>8} {:>8} {:>10} {:>11}",
            row.n,
            row.v,
            row.e,
            row.faces,
            row.formula_genus,
            built.trim_matches('"')
        );
    }
    Ok(())
}
