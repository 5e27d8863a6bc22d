use strata_core::lattice::{
    cartan_type, classify_subsystems, enumerate_roots, sign_characters, weyl_orbit,
    BilinearLattice, CartanType, LatticeVector, OrbitCache, OrbitOptions, RootSystemData,
};
use strata_core::rational::{rat, Matrix};
use strata_core::Error;

fn system(ty: &str) -> RootSystemData {
    let t: CartanType = ty.parse().unwrap();
    let c = t.cartan_matrix();
    let m = Matrix::from_rows(
        c.iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect(),
    );
    let l = BilinearLattice::from_cartan(&m, (1..=t.rank()).map(|i| format!("a{i}")).collect())
        .unwrap();
    RootSystemData::from_simple_roots(
        &l,
        (0..t.rank()).map(|i| LatticeVector::basis(&l, i)).collect(),
    )
    .unwrap()
}

#[test]
fn e8_has_240_roots() {
    let sys = system("E8");
    assert_eq!(sys.len(), 240);
    assert_eq!(sys.type_label().to_string(), "E8");
}

#[test]
fn every_root_reflection_permutes_roots() {
    let sys = system("D5");
    let table = sys.reflection_table();
    // table[i][j] is root i reflected in root j
    for j in 0..sys.len() {
        let mut image: Vec<usize> = (0..sys.len()).map(|i| table[i][j]).collect();
        image.sort_unstable();
        assert_eq!(image, (0..sys.len()).collect::<Vec<_>>());
    }
}

#[test]
fn positive_root_counts_match_type() {
    for ty in ["A4", "D6", "E6", "E7", "A5+A1"] {
        let sys = system(ty);
        assert_eq!(
            sys.positive_roots().len(),
            ty.parse::<CartanType>().unwrap().positive_roots(),
            "{ty}"
        );
    }
}

#[test]
fn e6_characters() {
    let census = sign_characters(&system("E6"), None).unwrap();
    assert_eq!(census.total, 64);
    assert_eq!(census.kernel_type_histogram.values().sum::<usize>(), 64);
}

#[test]
fn subsystems_of_e7() {
    let e7 = system("E7");
    let a7 = classify_subsystems(&e7, &"A7".parse().unwrap(), &OrbitOptions::default()).unwrap();
    assert_eq!((a7.count, a7.transitive), (36, true));
    let e6 = classify_subsystems(&e7, &"E6".parse().unwrap(), &OrbitOptions::default()).unwrap();
    // |W(E7)| / (|W(E6)| * 2)
    assert_eq!((e6.count, e6.transitive), (28, true));
}

#[test]
fn cached_orbit_equals_fresh_orbit() {
    let sys = system("E7");
    let dir = tempfile::tempdir().unwrap();
    let seed = sys.simple_roots()[0].clone();
    let fresh = weyl_orbit(&seed, &sys.simple_reflections(), &OrbitOptions::default()).unwrap();
    let opts = OrbitOptions::with_cache(Some(OrbitCache::new(dir.path())));
    let cold = weyl_orbit(&seed, &sys.simple_reflections(), &opts).unwrap();
    let warm = weyl_orbit(&seed, &sys.simple_reflections(), &opts).unwrap();
    assert_eq!(fresh.len(), 126);
    assert_eq!(fresh, cold);
    assert_eq!(cold, warm);
}

#[test]
fn orbit_cap_is_enforced() {
    let sys = system("E6");
    let opts = OrbitOptions {
        cap: 10,
        cache: None,
    };
    let err = weyl_orbit(&sys.simple_roots()[0], &sys.simple_reflections(), &opts);
    assert!(matches!(err, Err(Error::OrbitCap { cap: 10 })));
}

#[test]
fn recognizes_type_of_root_list() {
    let sys = system("D4");
    let (t, basis) = cartan_type(sys.roots()).unwrap();
    assert_eq!(t.to_string(), "D4");
    assert_eq!(basis.len(), 4);
    assert!(sys.is_root_basis(&basis));
}

#[test]
fn hyperbolic_lattice_needs_a_constraint() {
    let l = BilinearLattice::diagonal(&[1, -1, -1], &["l", "e1", "e2"]).unwrap();
    assert!(enumerate_roots(&l, None).is_err());
    let k = LatticeVector::from_i64(&l, &[3, -1, -1]).unwrap();
    let roots = enumerate_roots(&l, Some(&k)).unwrap();
    // degree-7 del Pezzo: root system A1
    assert_eq!(roots.len(), 2);
}
