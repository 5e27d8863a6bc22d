use strata_core::artin::{
    artin_presentation, braid_group, coxeter_image, garside_of_vertex, stratum_presentation,
    verify_in_coxeter, ArtinWord, GroupPresentation,
};
use strata_core::coxeter::{build_affine, quasi_special_report, terminal_pairs, AffineType};
use strata_core::delpezzo::StratumKey;

#[test]
fn affine_types_parse() {
    for s in ["E7~", "Ê7", "affine-E7"] {
        assert_eq!(s.parse::<AffineType>().unwrap(), AffineType::E7);
    }
    assert!("F4~".parse::<AffineType>().is_err());
}

#[test]
fn diagrams_and_automorphisms() {
    let e7 = build_affine(AffineType::E7).unwrap();
    assert_eq!(e7.diagram().vertices().len(), 8);
    assert_eq!(e7.diagram().edges().len(), 7);
    assert_eq!(e7.diagram().automorphisms().len(), 2);
    let e6 = build_affine(AffineType::E6).unwrap();
    assert_eq!(e6.diagram().automorphisms().len(), 6);
    assert_eq!(terminal_pairs(e6.diagram()).len(), 3);
}

#[test]
fn relations_and_vertices() {
    for t in [AffineType::E6, AffineType::E7] {
        let real = build_affine(t).unwrap();
        assert!(real.coxeter_relation_failures().is_empty());
        assert!(real.vertices_valid());
        for v in real.diagram().vertices() {
            assert!(real.stabilizer_check(*v), "{t} {v}");
        }
    }
}

#[test]
fn quasi_special_vertices_of_e6() {
    let rep = quasi_special_report(&build_affine(AffineType::E6).unwrap()).unwrap();
    let qs: Vec<usize> = rep
        .rows
        .iter()
        .filter(|r| r.quasi_special)
        .map(|r| r.vertex)
        .collect();
    assert_eq!(qs, vec![0, 1, 2, 3, 5, 6]);
    assert!(
        !rep.rows
            .iter()
            .find(|r| r.vertex == 4)
            .unwrap()
            .quasi_special
    );
}

#[test]
fn garside_elements_are_longest() {
    let e7 = build_affine(AffineType::E7).unwrap();
    for i in [0, 2] {
        let d = garside_of_vertex(&e7, i).unwrap();
        let img = coxeter_image(&d.word, &e7);
        let (_, w) = e7.longest_element(i).unwrap();
        assert_eq!(img, w);
        assert!(coxeter_image(&d.word.then(&d.word), &e7).is_identity());
    }
}

#[test]
fn artin_relators_hold_in_coxeter_group() {
    let e6 = build_affine(AffineType::E6).unwrap();
    let p = artin_presentation("E6~", e6.diagram());
    assert_eq!(p.relators.len(), 21);
    assert!(p
        .relators
        .iter()
        .all(|w| coxeter_image(w, &e6).is_identity()));
}

#[test]
fn stratum_presentations_verify() {
    for key in [StratumKey::TwoOneOne, StratumKey::TwoTwo] {
        let sp = stratum_presentation(key).unwrap();
        sp.presentation.validate().unwrap();
        assert!(verify_in_coxeter(&sp).unwrap().passed(), "{key}");
    }
    let sp = stratum_presentation(StratumKey::Four).unwrap();
    assert!(verify_in_coxeter(&sp).is_err());
}

#[test]
fn braid_groups() {
    let b4 = braid_group(4).unwrap();
    assert_eq!(b4.generators, vec!["s1", "s2", "s3"]);
    assert_eq!(b4.relators.len(), 3);
    assert!(braid_group(1).is_err());
}

#[test]
fn json_round_trip_and_schema() {
    let p = stratum_presentation(StratumKey::TwoTwo)
        .unwrap()
        .presentation;
    let text = p.to_json().unwrap();
    assert_eq!(GroupPresentation::from_json(&text).unwrap(), p);
    let bumped = text.replacen("\"schema_version\": 1", "\"schema_version\": 99", 1);
    assert!(GroupPresentation::from_json(&bumped).is_err());
    let mut bad = p.clone();
    bad.relators.push(ArtinWord::letter(40, 1));
    bad.relator_notes.push("bad".into());
    assert!(GroupPresentation::from_json(&bad.to_json().unwrap()).is_err());
}
