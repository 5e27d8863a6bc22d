use strata_core::catalog::{catalog, dimension_consistency, RecordKind};
use strata_core::claims::{run_claims, ClaimContext, REGISTRY};
use strata_core::delpezzo::StratumKey;

#[test]
fn nonhyperelliptic_dimensions_follow_formula() {
    for r in catalog()
        .iter()
        .filter(|r| r.kind == RecordKind::Nonhyperelliptic)
    {
        let n = r.partition.parse::<StratumKey>().unwrap().parts().len() as u32;
        assert_eq!(r.dim_h, 2 * 3 + n - 1, "{}", r.partition);
        assert_eq!(r.dim_ph + 1, r.dim_h);
    }
}

#[test]
fn kodaira_column() {
    let c = catalog();
    let kodaira: Vec<_> = c
        .iter()
        .filter(|r| r.kind == RecordKind::Nonhyperelliptic)
        .map(|r| {
            (
                r.partition.as_str(),
                r.kodaira_type.as_deref().unwrap(),
                r.ambient_root_type.as_deref().unwrap(),
            )
        })
        .collect();
    assert_eq!(
        kodaira,
        vec![
            ("(1^4)", "smooth", "E7"),
            ("(2,1^2)", "I1 (mult)", "E7"),
            ("(2^2)", "I2 (mult)", "E6"),
            ("(3,1)", "II (add)", "E7"),
            ("(4)", "III (add)", "E6"),
        ]
    );
}

#[test]
fn group_refs_resolve() {
    for r in catalog() {
        if let Some(key) = &r.fundamental_group_ref {
            if let Some(rest) = key.strip_prefix("hyp") {
                assert!(["(4)", "(2,2)"].contains(&rest));
            } else {
                let k = key.parse().unwrap();
                assert!(strata_core::artin::stratum_presentation(k).is_ok(), "{key}");
            }
        }
    }
}

#[test]
fn consistency_report() {
    assert!(dimension_consistency().unwrap().passed());
}

#[test]
fn registry_filter() {
    assert_eq!(REGISTRY.len(), 20);
    let ids = vec!["C17".to_string(), "C18".to_string(), "C19".to_string()];
    let rep = run_claims(Some(&ids), &ClaimContext::default()).unwrap();
    assert_eq!(
        rep.claims.iter().map(|c| c.id.as_str()).collect::<Vec<_>>(),
        ["C17", "C18", "C19"]
    );
    assert!(rep.all_passed());
    let json = rep.to_json().unwrap();
    assert!(json.contains("\"schema_version\": 1"));
    assert!(run_claims(Some(&["C0".to_string()]), &ClaimContext::default()).is_err());
}
