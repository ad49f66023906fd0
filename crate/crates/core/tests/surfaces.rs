use hypercube_genus::prelude::*;
use hypercube_genus::report::certify_surface;
use hypercube_genus::topology::analyze_components;
use proptest::prelude::*;
use proptest::sample::subsequence;

fn hamiltonian(max_n: u8) -> impl Strategy<Value = (u8, Vec<u8>)> {
    (3..=max_n).prop_flat_map(|n| (Just(n), Just((1..=n).collect::<Vec<u8>>()).prop_shuffle()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn every_hamiltonian_surface_has_the_closed_form_genus((n, colors) in hamiltonian(8)) {
        let d = Dimension::new(n as u32).unwrap();
        let z = ColorCycle::new(&colors).unwrap();
        let s = build_surface(d, &z).unwrap();
        let cert = certify_surface(&s);
        prop_assert!(cert.passed);
        prop_assert_eq!(cert.euler_genus, Some(qn_genus(n as u32).unwrap().get()));
        prop_assert_eq!(cert.traced_genus, cert.euler_genus);
    }

    #[test]
    fn isometry_carries_identity_surface_onto_any_t_z((n, colors) in hamiltonian(7)) {
        let d = Dimension::new(n as u32).unwrap();
        let z = ColorCycle::new(&colors).unwrap();
        let base = build_surface(d, &ColorCycle::identity(d).unwrap()).unwrap();
        let sigma = CoordinatePermutation::from_cycle(&z).unwrap();
        let image = apply_isometry(&sigma, &base).unwrap();
        let direct = build_surface(d, &z).unwrap();
        prop_assert_eq!(image.faces(), direct.faces());
    }

    #[test]
    fn cycle_surfaces_split_into_equal_components(
        (n, colors) in (4u8..=7).prop_flat_map(|n| {
            (Just(n), subsequence((1..=n).collect::<Vec<u8>>(), 3..n as usize).prop_shuffle())
        })
    ) {
        let d = Dimension::new(n as u32).unwrap();
        let c = ColorCycle::new(&colors).unwrap();
        let s = build_cycle_surface(d, &c).unwrap();
        let comps = analyze_components(&s);
        prop_assert_eq!(comps.len(), 1usize << (n as usize - colors.len()));
        let m = colors.len() as u32;
        let g = qn_genus(m).unwrap().get();
        for comp in &comps {
            prop_assert_eq!(comp.orientable, Some(true));
            prop_assert_eq!(comp.genus, Some(g));
        }
    }

    #[test]
    fn surface_json_round_trip((n, colors) in hamiltonian(7)) {
        let d = Dimension::new(n as u32).unwrap();
        let s = build_surface(d, &ColorCycle::new(&colors).unwrap()).unwrap();
        let text = s.to_json().unwrap();
        let back = Surface::from_json(&text).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(certify_surface(&back), certify_surface(&s));
    }
}

#[test]
fn worked_examples() {
    // the cube is a sphere, Q_4 sits on a torus, Q_5 on a genus-5 surface
    for (n, g) in [(3u32, 0u64), (4, 1), (5, 5)] {
        let d = Dimension::new(n).unwrap();
        let s = build_surface(d, &ColorCycle::identity(d).unwrap()).unwrap();
        let r = check_closed_surface(&s);
        assert!(r.is_closed_surface());
        assert_eq!(euler_genus(&r).unwrap(), g);
    }
}

#[test]
fn walecki_families_cover_the_skeleton() {
    for n in [3u32, 5, 7, 9, 11] {
        let d = Dimension::new(n).unwrap();
        let dec = hamiltonian_decomposition(d).unwrap();
        let fam = parallel_family(d, &dec).unwrap();
        assert!(fam.is_certified());
        assert_eq!(fam.covered_faces(), d.square_count());
    }
}
