//! The claim registry: every acceptance check as one executable claim.

use serde::Serialize;

use crate::artin::{
    coxeter_image, garside_of_vertex, garside_word, hyperelliptic_group_data, stratum_presentation,
    torus_weight_check, verify_in_coxeter, HyperellipticKey,
};
use crate::catalog::dimension_consistency;
use crate::coxeter::{
    build_affine, quasi_special_report, terminal_pairs, vertices_with_subdiagram, AffineType,
};
use crate::degeneration::{
    central_pairing, limit_class, permutation_weyl_iso, specialize_report,
    verify_limit_intersections, verify_limit_map, CentralFiberClass,
};
use crate::delpezzo::{
    build_picard, e6_stated_basis, enumerate_exceptionals, epsilon_character, evaluate,
    kernel_roots_report, label_exceptionals, partner_pairs, root_differences, root_system_of_x,
    stratum_subsystems, BLabel, Sign, StratumKey,
};
use crate::error::{Error, Result};
use crate::lattice::{
    classify_subsystems, sign_characters, weyl_orbit, CartanType, OrbitCache, OrbitOptions,
    RootSystemData,
};
use crate::rational::{rat, ratio};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Settings shared by all claims.
#[derive(Clone, Debug, Default)]
pub struct ClaimContext {
    pub cache: Option<OrbitCache>,
}

impl ClaimContext {
    fn orbit_options(&self) -> OrbitOptions {
        OrbitOptions::with_cache(self.cache.clone())
    }
}

type Check = fn(&ClaimContext) -> Result<(bool, String)>;

pub struct ClaimSpec {
    pub id: &'static str,
    pub description: &'static str,
    pub anchor: &'static str,
    pub operation: &'static str,
    pub expected: &'static str,
    check: Check,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClaimRecord {
    pub id: String,
    pub description: String,
    pub anchor: String,
    pub operation: String,
    pub expected: String,
    pub observed: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub schema_version: u32,
    pub claims: Vec<ClaimRecord>,
    pub passed: usize,
    pub failed: usize,
}

impl ClaimReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

fn c1(ctx: &ClaimContext) -> Result<(bool, String)> {
    let pic = build_picard();
    let exc = enumerate_exceptionals(&pic)?;
    let pairs = partner_pairs(&pic, &exc)?;
    let sys = root_system_of_x(&pic)?;
    let orbit = weyl_orbit(&pic.e(7), &sys.simple_reflections(), &ctx.orbit_options())?;
    let ok = exc.len() == 56
        && pairs.len() == 28
        && orbit.len() == 56
        && orbit.iter().all(|v| pic.is_exceptional(v));
    Ok((
        ok,
        format!(
            "{} exceptional classes, {} partner pairs meeting in 2, Weyl orbit of e7 has {}",
            exc.len(),
            pairs.len(),
            orbit.len()
        ),
    ))
}

fn c2(_: &ClaimContext) -> Result<(bool, String)> {
    let pic = build_picard();
    let kk = pic.anticanonical().square();
    let sys = root_system_of_x(&pic)?;
    let exc = enumerate_exceptionals(&pic)?;
    let diffs = root_differences(&sys, &exc)?;
    let ok = kk == rat(2)
        && sys.len() == 126
        && sys.type_label().to_string() == "E7"
        && diffs.len() == 126;
    Ok((
        ok,
        format!(
            "K.K = {kk}, {} roots of type {}, {} realized as E - E' with E.E' = 0",
            sys.len(),
            sys.type_label(),
            diffs.len()
        ),
    ))
}

fn c3(_: &ClaimContext) -> Result<(bool, String)> {
    let pic = build_picard();
    let dict = label_exceptionals(&pic)?;
    let mut labels: Vec<BLabel> = dict.labels().to_vec();
    labels.sort();
    labels.dedup();
    let eps = epsilon_character(&dict)?;
    let mut minus_e = 0;
    for i in 1..=7 {
        if matches!(evaluate(&eps, &pic.e(i)), Ok(-1)) {
            minus_e += 1;
        }
    }
    let mut plus_lines = 0;
    for i in 1..=7 {
        for j in i + 1..=7 {
            let v = pic.line().sub(&pic.e(i)).sub(&pic.e(j));
            if matches!(evaluate(&eps, &v), Ok(1)) {
                plus_lines += 1;
            }
        }
    }
    let ok = dict.len() == 56 && labels.len() == 56 && minus_e == 7 && plus_lines == 21;
    Ok((
        ok,
        format!(
            "{} distinct labels; epsilon unique; eps(e_i) = -1 for {minus_e}/7, eps(l-e_i-e_j) = +1 for {plus_lines}/21",
            labels.len()
        ),
    ))
}

fn c4(_: &ClaimContext) -> Result<(bool, String)> {
    let pic = build_picard();
    let eps = epsilon_character(&label_exceptionals(&pic)?)?;
    let rep = kernel_roots_report(&pic, &eps)?;
    let index = rep.index_in_root_lattice;
    let ok = rep.count == 56
        && rep.type_label.to_string() == "A7"
        && rep.stated_basis_certified
        && index == Some(2);
    Ok((
        ok,
        format!(
            "{} kernel roots of type {}, stated basis certified: {}, index {}",
            rep.count,
            rep.type_label,
            rep.stated_basis_certified,
            index.map_or("infinite".to_string(), |i| i.to_string())
        ),
    ))
}

fn c5(_: &ClaimContext) -> Result<(bool, String)> {
    let g = CentralFiberClass::generator;
    let rules = [
        (
            central_pairing(&g(0, Sign::Plus), &g(0, Sign::Plus)),
            ratio(-3, 4),
        ),
        (
            central_pairing(&g(0, Sign::Plus), &g(0, Sign::Minus)),
            rat(1),
        ),
        (
            central_pairing(&g(0, Sign::Plus), &g(1, Sign::Plus)),
            ratio(1, 4),
        ),
        (
            central_pairing(&g(0, Sign::Plus), &g(1, Sign::Minus)),
            rat(0),
        ),
    ];
    let rules_ok = rules.iter().all(|(a, b)| a == b);
    let mut minus_one = 0;
    for label in BLabel::all() {
        let l = limit_class(label)?;
        if central_pairing(&l.class, &l.class) == rat(-1) {
            minus_one += 1;
        }
    }
    let lim = verify_limit_intersections()?;
    let dict = label_exceptionals(&build_picard())?;
    let pres = verify_limit_map(&dict)?;
    let ok = rules_ok && minus_one == 56 && lim.passed() && pres.passed();
    Ok((
        ok,
        format!(
            "generator rules hold: {rules_ok}; {minus_one}/56 limits of square -1; {} labelled pairs, {} rule mismatches; limit map: {} pairs, {} mismatches",
            lim.pairs_checked,
            lim.mismatches.len(),
            pres.pairs_checked,
            pres.mismatches
        ),
    ))
}

fn c6(_: &ClaimContext) -> Result<(bool, String)> {
    let rep = specialize_report(&build_picard())?;
    let ok =
        rep.passed() && rep.roots == 126 && rep.specialize_true == 56 && rep.specialize_false == 70;
    Ok((
        ok,
        format!(
            "{} roots: eps=+1 on {}, same-sign limit on {}, other on {}, disagreements {}",
            rep.roots,
            rep.epsilon_plus,
            rep.specialize_true,
            rep.specialize_false,
            rep.disagreements
        ),
    ))
}

fn c7(_: &ClaimContext) -> Result<(bool, String)> {
    let rep = permutation_weyl_iso(&build_picard())?;
    let ok = rep.passed() && rep.image_order == 40320;
    Ok((
        ok,
        format!(
            "image order {} of W(A7) order {}, injective {}, transpositions are kernel reflections {}, iota = -1 on roots {}",
            rep.image_order, rep.weyl_order, rep.injective, rep.transpositions_are_kernel_reflections, rep.sign_swap_is_minus_one_on_roots
        ),
    ))
}

fn e7_system() -> Result<RootSystemData> {
    root_system_of_x(&build_picard())
}

fn c8(_: &ClaimContext) -> Result<(bool, String)> {
    let census = sign_characters(&e7_system()?, Some(&"A7".parse::<CartanType>()?))?;
    let ok = census.total == 128 && census.characters.len() == 36 && census.transitive;
    Ok((
        ok,
        format!(
            "{} characters, {} with index-2 A7 kernel, {} Weyl orbit(s)",
            census.total,
            census.characters.len(),
            census.orbits.len()
        ),
    ))
}

fn c9(ctx: &ClaimContext) -> Result<(bool, String)> {
    let sys = e7_system()?;
    let rep = classify_subsystems(&sys, &"A7".parse()?, &ctx.orbit_options())?;
    let census = sign_characters(&sys, Some(&"A7".parse::<CartanType>()?))?;
    let ok = rep.count == 36 && rep.transitive && rep.count == census.characters.len();
    Ok((
        ok,
        format!(
            "{} A7 subsystems in {} orbit(s); character count {}",
            rep.count,
            rep.orbit_sizes.len(),
            census.characters.len()
        ),
    ))
}

fn c10(_: &ClaimContext) -> Result<(bool, String)> {
    let mut parts = Vec::new();
    let mut ok = true;
    for t in [AffineType::E7, AffineType::E6] {
        let real = build_affine(t)?;
        let fails = real.coxeter_relation_failures();
        let valid = real.vertices_valid();
        ok &= fails.is_empty() && valid;
        parts.push(format!(
            "{t}: {} Coxeter relation failures, vertices valid {valid}",
            fails.len()
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn c11(_: &ClaimContext) -> Result<(bool, String)> {
    let e7 = build_affine(AffineType::E7)?;
    let rep = quasi_special_report(&e7)?;
    let row = |v: usize| rep.rows.iter().find(|r| r.vertex == v);
    let e7_node = row(0).is_some_and(|r| {
        r.subdiagram_type == "E7" && r.automorphism.as_ref().is_some_and(|g| g.is_identity())
    });
    let a7_nodes = vertices_with_subdiagram(&e7, "A7")?;
    let a7_ok = a7_nodes.len() == 1
        && row(a7_nodes[0]).is_some_and(|r| {
            r.automorphism
                .as_ref()
                .is_some_and(|g| !g.is_identity() && g.compose(g).is_identity())
        });
    let e6 = build_affine(AffineType::E6)?;
    let pairs = terminal_pairs(e6.diagram());
    let mut e6_ok = pairs.len() == 3;
    for &(i, j) in &pairs {
        let (gi, gj) = (e6.quasi_special(i)?, e6.quasi_special(j)?);
        e6_ok &= gi.is_some() && gi == gj;
    }
    let g = row(a7_nodes.first().copied().unwrap_or(0)).and_then(|r| r.automorphism.clone());
    Ok((
        e7_node && a7_ok && e6_ok,
        format!(
            "E7~: E7 node g = id {e7_node}, A7 node(s) {a7_nodes:?} with g = {}; E6~: terminal pairs {pairs:?} quasi-special with equal g {e6_ok}",
            g.map_or("none".into(), |g| g.cycles())
        ),
    ))
}

fn c12(_: &ClaimContext) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for key in [StratumKey::TwoOneOne, StratumKey::TwoTwo] {
        let v = verify_in_coxeter(&stratum_presentation(key)?)?;
        for p in &v.pairs {
            ok &= p.opposition_reproduced && p.translation_reproduced;
            parts.push(format!(
                "{} ({},{}): opposition {}, translation {} = 2(v_j - v_i) {}",
                v.affine_type,
                p.i,
                p.j,
                p.opposition_reproduced,
                p.translation.join(","),
                p.translation_reproduced
            ));
        }
    }
    Ok((ok, parts.join("; ")))
}

fn c13(_: &ClaimContext) -> Result<(bool, String)> {
    let e7 = build_affine(AffineType::E7)?;
    let e6 = build_affine(AffineType::E6)?;
    let mut ok = true;
    let mut parts = Vec::new();
    let cases: [(
        &crate::coxeter::AffineRealization,
        &[usize],
        usize,
        &[usize],
    ); 5] = [
        (&e7, &[0], 63, &[]),
        (&e7, &[2], 28, &[]),
        (&e6, &[0], 36, &[]),
        (&e7, &[0, 2], 21, &[1, 3, 4, 5, 6, 7]),
        (&e6, &[2], 16, &[]),
    ];
    for (real, fixed, want, subset) in cases {
        let g = if subset.is_empty() {
            garside_of_vertex(real, fixed[0])?
        } else {
            garside_word(real, subset)?
        };
        let img = coxeter_image(&g.word, real);
        let fixes = fixed
            .iter()
            .all(|&v| img.apply(real.vertex(v)) == real.vertex(v));
        let longest = if subset.is_empty() {
            real.longest_element(fixed[0])?.1 == img
        } else {
            g.type_label.parse::<CartanType>()?.positive_roots() == real.length(&img)
        };
        let this = g.length == want && real.length(&img) == want && fixes && longest;
        ok &= this;
        parts.push(format!("{} {}", g.type_label, g.length));
    }
    Ok((
        ok,
        format!(
            "lengths {}; images are the parabolic longest elements: {ok}",
            parts.join(", ")
        ),
    ))
}

fn c14(_: &ClaimContext) -> Result<(bool, String)> {
    let sp = stratum_presentation(StratumKey::TwoOneOne)?;
    let v = verify_in_coxeter(&sp)?;
    let gens = sp.presentation.generators.len();
    let ok = gens == 8
        && sp.artin_relators == 28
        && sp.extra_relators == 9
        && v.passed()
        && v.artin_relators_checked == 28;
    Ok((
        ok,
        format!(
            "{gens} generators, {} Artin relators, {} extra relators, Coxeter checks (a)-(c) pass {}",
            sp.artin_relators,
            sp.extra_relators,
            v.passed()
        ),
    ))
}

fn c15(_: &ClaimContext) -> Result<(bool, String)> {
    let sp = stratum_presentation(StratumKey::TwoTwo)?;
    let aut = sp
        .presentation
        .semidirect
        .as_ref()
        .map_or(0, |s| s.elements.len());
    let v = verify_in_coxeter(&sp)?;
    let variant_extra = sp
        .variant
        .as_ref()
        .map_or(0, |p| p.relators.len() - sp.artin_relators);
    let ok = aut == 6
        && sp.extra_relators == 1
        && variant_extra == 3
        && v.passed()
        && v.pairs.len() == 3;
    Ok((
        ok,
        format!(
            "|Aut| = {aut}, {} Artin + {} extra relators, variant with {variant_extra} terminal relations, {} pairs checked, pass {}",
            sp.artin_relators,
            sp.extra_relators,
            v.pairs.len(),
            v.passed()
        ),
    ))
}

fn c16(_: &ClaimContext) -> Result<(bool, String)> {
    let pic = build_picard();
    let mut ok = true;
    let mut parts = Vec::new();
    for key in StratumKey::ALL {
        let s = stratum_subsystems(&pic, key)?;
        let b = s.boundary.as_ref().map(|b| {
            ok &= b.is_root_basis(b.simple_roots());
            b.type_label().to_string()
        });
        parts.push(format!(
            "{key}: {}{}",
            s.ambient.type_label(),
            b.map_or(String::new(), |b| format!(" / {b}"))
        ));
    }
    let e6 = RootSystemData::from_simple_roots(pic.lattice(), e6_stated_basis(&pic))?;
    ok &= e6.type_label().to_string() == "E6";
    let want = [
        "(4): E6",
        "(3,1): E7",
        "(2^2): E6 / A5",
        "(2,1^2): E7 / A6",
        "(1^4): E7 / A7",
    ];
    ok &= parts.iter().map(String::as_str).eq(want);
    Ok((ok, parts.join("; ")))
}

fn c17(_: &ClaimContext) -> Result<(bool, String)> {
    let a = torus_weight_check(3, HyperellipticKey::SingleZero);
    let b = torus_weight_check(3, HyperellipticKey::TwoZeros);
    let general = (2..=12).all(|g| {
        torus_weight_check(g, HyperellipticKey::SingleZero).matches
            && torus_weight_check(g, HyperellipticKey::TwoZeros).matches
    });
    let ok = a.matches && b.matches && a.computed == -5 && b.computed == -3 && general;
    Ok((
        ok,
        format!(
            "g=3: (4) -> {}, (2,2) -> {}; formulas 1-2g and -g hold for g = 2..12: {general}",
            a.computed, b.computed
        ),
    ))
}

fn c18(_: &ClaimContext) -> Result<(bool, String)> {
    let b7 = hyperelliptic_group_data(3, HyperellipticKey::SingleZero)?;
    let b8 = hyperelliptic_group_data(3, HyperellipticKey::TwoZeros)?;
    let counts = |p: &crate::artin::GroupPresentation| {
        (
            p.generators.len(),
            p.count_notes("braid"),
            p.count_notes("commute"),
        )
    };
    let t7 = b7
        .extension
        .as_ref()
        .map_or("", |e| e.text.as_str())
        .to_string();
    let t8 = b8
        .extension
        .as_ref()
        .map_or("", |e| e.text.as_str())
        .to_string();
    let ok = counts(&b7) == (6, 5, 10)
        && counts(&b8) == (7, 6, 15)
        && t7 == "extension of μ_5 by B_7"
        && t8 == "extension of S_2 × μ_3 by B_8";
    Ok((
        ok,
        format!(
            "B_7 {:?}, B_8 {:?} (generators, braid, commute); {t7}; {t8}",
            counts(&b7),
            counts(&b8)
        ),
    ))
}

fn c19(_: &ClaimContext) -> Result<(bool, String)> {
    let rep = dimension_consistency()?;
    let summary: Vec<String> = rep
        .rows
        .iter()
        .map(|r| format!("{} {}={}", r.partition, r.dim_ph, r.model_dimension))
        .collect();
    Ok((rep.passed(), summary.join(", ")))
}

fn c20(ctx: &ClaimContext) -> Result<(bool, String)> {
    let parent = ctx
        .cache
        .as_ref()
        .map(|c| c.dir().to_path_buf())
        .unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&parent)?;
    let dir = tempfile::Builder::new()
        .prefix("determinism-")
        .tempdir_in(&parent)?;
    let inner = ClaimContext {
        cache: Some(OrbitCache::new(dir.path())),
    };
    let ids: Vec<String> = REGISTRY
        .iter()
        .filter(|c| c.id != "C20")
        .map(|c| c.id.to_string())
        .collect();
    let cold = run_claims(Some(&ids), &inner)?.to_json()?;
    let files = std::fs::read_dir(dir.path())?.count();
    let warm = run_claims(Some(&ids), &inner)?.to_json()?;
    let ok = cold == warm && files > 0;
    Ok((
        ok,
        format!(
            "cold and warm reports ({} bytes, {files} cache files) identical: {}",
            cold.len(),
            cold == warm
        ),
    ))
}

pub static REGISTRY: [ClaimSpec; 20] = [
    ClaimSpec { id: "C1", description: "56 exceptional classes in 28 partner pairs with cross-pairing 2", anchor: "exceptional curves of the double plane", operation: "enumerate_exceptionals, partner_pairs, weyl_orbit", expected: "56, 28, orbit 56", check: c1 },
    ClaimSpec { id: "C2", description: "K.K = 2; 126 roots orthogonal to K of type E7, each a difference of disjoint exceptionals", anchor: "root system of Pic(X)", operation: "root_system_of_x, root_differences", expected: "2, 126, E7, 126", check: c2 },
    ClaimSpec { id: "C3", description: "labels are a bijection onto the 56 exceptionals; eps exists, is unique, eps(e_i) = -1, eps(l-e_i-e_j) = +1", anchor: "labelled exceptional dictionary", operation: "label_exceptionals, epsilon_character", expected: "bijective, 7/7, 21/21", check: c3 },
    ClaimSpec { id: "C4", description: "ker(eps) has 56 roots of type A7 with the stated basis, of index 2 in Q(E7)", anchor: "kernel of the sign character", operation: "kernel_roots_report", expected: "56, A7, certified, 2", check: c4 },
    ClaimSpec { id: "C5", description: "central-fibre pairing rules, limit squares -1, labelled intersection rules and preservation by the limit map", anchor: "degeneration to the central fibre", operation: "central_pairing, verify_limit_intersections, verify_limit_map", expected: "all rules hold", check: c5 },
    ClaimSpec { id: "C6", description: "eps(alpha) = +1 iff the limit of alpha is a same-sign singleton difference", anchor: "specialization of roots", operation: "specialize_report", expected: "56 true, 70 false", check: c6 },
    ClaimSpec { id: "C7", description: "permutations of B give an injective map onto a group of order 40320 in W(ker eps); iota = -1 on roots", anchor: "permutations of the branch set", operation: "permutation_weyl_iso", expected: "40320, injective", check: c7 },
    ClaimSpec { id: "C8", description: "E7 sign-character census: 128 characters, 36 with index-2 A7 kernel, one Weyl orbit", anchor: "sign characters of E7", operation: "sign_characters", expected: "128, 36, transitive", check: c8 },
    ClaimSpec { id: "C9", description: "36 A7 subsystems of E7 in one Weyl orbit, matching the character count", anchor: "A7 subsystems of E7", operation: "classify_subsystems", expected: "36, transitive", check: c9 },
    ClaimSpec { id: "C10", description: "affine realizations satisfy all Coxeter relations and the alcove vertex equations", anchor: "affine Coxeter realization", operation: "build_affine, coxeter_relation_failures, vertices_valid", expected: "no failures", check: c10 },
    ClaimSpec { id: "C11", description: "quasi-special vertices: E7 node with g = id, unique A7 node with an involution; E6~ terminal pairs with equal g", anchor: "quasi-special vertices", operation: "quasi_special_report, terminal_pairs", expected: "as stated", check: c11 },
    ClaimSpec { id: "C12", description: "opposition identities and (Delta_j g_j)(Delta_i g_i)^-1 = translation by 2(v_j - v_i)", anchor: "translations from Garside elements", operation: "verify_in_coxeter", expected: "exact equality", check: c12 },
    ClaimSpec { id: "C13", description: "Garside lengths E7 63, A7 28, E6 36, A6 21, A5+A1 16; images are parabolic longest elements", anchor: "Garside elements", operation: "garside_word, coxeter_image", expected: "63, 28, 36, 21, 16", check: c13 },
    ClaimSpec { id: "C14", description: "(2,1^2) presentation: 8 generators, 28 Artin and 9 extra relators, Coxeter checks pass", anchor: "fundamental group of PH(2,1^2)", operation: "stratum_presentation, verify_in_coxeter", expected: "8, 28, 9, pass", check: c14 },
    ClaimSpec { id: "C15", description: "(2,2) presentation: semidirect with |Aut| = 6, extra relator and three-relator variant checked", anchor: "fundamental group of PH(2,2)", operation: "stratum_presentation, verify_in_coxeter", expected: "6, 1, 3, pass", check: c15 },
    ClaimSpec { id: "C16", description: "stratum subsystem bases are root bases of the claimed types", anchor: "root subsystems of the strata", operation: "stratum_subsystems", expected: "E6, E7, E6/A5, E7/A6, E7/A7", check: c16 },
    ClaimSpec { id: "C17", description: "torus weights on phi: (2g-2) -> 1-2g, (g-1,g-1) -> -g", anchor: "hyperelliptic torus action", operation: "torus_weight_check", expected: "-5, -3", check: c17 },
    ClaimSpec { id: "C18", description: "braid presentations B_7 and B_8 with extension descriptors", anchor: "hyperelliptic strata", operation: "hyperelliptic_group_data", expected: "6 and 7 generators", check: c18 },
    ClaimSpec { id: "C19", description: "catalog dimensions agree with models and gerbe base counts", anchor: "stratum catalog", operation: "dimension_consistency", expected: "all consistent", check: c19 },
    ClaimSpec { id: "C20", description: "cold and warm cache runs give byte-identical JSON reports", anchor: "determinism", operation: "run_claims twice", expected: "identical", check: c20 },
];

fn run_one(spec: &ClaimSpec, ctx: &ClaimContext) -> ClaimRecord {
    let (passed, observed) = match (spec.check)(ctx) {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    ClaimRecord {
        id: spec.id.into(),
        description: spec.description.into(),
        anchor: spec.anchor.into(),
        operation: spec.operation.into(),
        expected: spec.expected.into(),
        observed,
        passed,
    }
}

/// Runs the registry, or the claims named in `filter` (in registry order).
pub fn run_claims(filter: Option<&[String]>, ctx: &ClaimContext) -> Result<ClaimReport> {
    let selected: Vec<&ClaimSpec> = match filter {
        None => REGISTRY.iter().collect(),
        Some(ids) => {
            for id in ids {
                if !REGISTRY.iter().any(|c| c.id.eq_ignore_ascii_case(id)) {
                    return Err(Error::UnknownKey(format!("no such claim: {id}")));
                }
            }
            REGISTRY
                .iter()
                .filter(|c| ids.iter().any(|id| c.id.eq_ignore_ascii_case(id)))
                .collect()
        }
    };
    let claims: Vec<ClaimRecord> = selected.into_iter().map(|c| run_one(c, ctx)).collect();
    let passed = claims.iter().filter(|c| c.passed).count();
    Ok(ClaimReport {
        schema_version: REPORT_SCHEMA_VERSION,
        failed: claims.len() - passed,
        passed,
        claims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique_and_ordered() {
        for (k, c) in REGISTRY.iter().enumerate() {
            assert_eq!(c.id, format!("C{}", k + 1));
        }
    }

    #[test]
    fn single_claim() {
        let rep = run_claims(Some(&["c1".to_string()]), &ClaimContext::default()).unwrap();
        assert_eq!(rep.claims.len(), 1);
        assert!(rep.all_passed(), "{:?}", rep.claims);
    }

    #[test]
    fn unknown_claim() {
        let err = run_claims(Some(&["C99".to_string()]), &ClaimContext::default()).unwrap_err();
        assert!(err.to_string().contains("no such claim"));
    }
}
