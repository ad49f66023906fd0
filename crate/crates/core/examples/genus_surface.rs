//! Build T(Z) for a Hamiltonian color cycle and certify its genus.
//!
//! `cargo run --example genus_surface -- 6 1,3,5,2,4,6`

use hypercube_genus::prelude::*;
use hypercube_genus::report::certify_surface;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let n = Dimension::new(
        args.next()
            .map_or(Ok(5), |a| a.parse())
            .map_err(|_| Error::Domain("bad n".into()))?,
    )?;
    let z = match args.next() {
        Some(text) => text.parse()?,
        None => ColorCycle::identity(n)?,
    };
    let s = build_surface(n, &z)?;
    let cert = certify_surface(&s);
    let m = &cert.manifold;
    println!("Z = {:?}", z.colors());
    println!(
        "v = {}, e = {}, f = {}, chi = {}",
        m.v,
        m.e,
        m.f,
        m.euler_characteristic()
    );
    println!("closed surface: {}", m.is_closed_surface());
    println!("orientable: {:?}", cert.orientable);
    println!("genus from counts: {:?}", cert.euler_genus);
    println!("genus from traced faces: {:?}", cert.traced_genus);
    println!("closed form: {}", qn_genus(n.get() as u32)?);
    println!("lower bound: {:?}", cert.lower_bound);
    println!("certified: {}", cert.passed);
    Ok(())
}
