//! The genus-3 strata of abelian differentials: models, dimensions, gerbe
//! loci and their consistency.

use serde::Serialize;

use crate::delpezzo::{build_picard, stratum_subsystems, StratumKey};
use crate::error::Result;
use crate::lattice::CartanType;

pub const GENUS: u32 = 3;

/// Number of branch points of a hyperelliptic genus-3 curve.
const BRANCH_POINTS: u32 = 2 * GENUS + 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecordKind {
    Nonhyperelliptic,
    HyperellipticComponent,
    /// The hyperelliptic locus inside a nonhyperelliptic stratum, a `Z/2`-gerbe over its base.
    HyperellipticLocus,
}

/// Symbolic model of a stratum; only its dimension is evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Model {
    /// `S(R, C)`
    Additive { root: String },
    /// `S(R, C×)`, or `S_(R0)(R, C×)` when `boundary` is set.
    Multiplicative {
        root: String,
        boundary: Option<String>,
    },
    /// `S_(R0)(R, C̄_{1,1})`
    EllipticFamily { root: String, boundary: String },
    /// `W(R)\Hom(Q(R), C×)°`
    WeylTorusQuotient { root: String },
    /// Configurations of `strands` points in `C` modulo affine maps.
    BranchConfigurations { strands: u32 },
}

fn rank_of(root: &str) -> Result<usize> {
    Ok(root.parse::<CartanType>()?.rank())
}

impl Model {
    pub fn descriptor(&self) -> String {
        match self {
            Model::Additive { root } => format!("S({root},C)"),
            Model::Multiplicative {
                root,
                boundary: None,
            } => format!("S({root},Cx)"),
            Model::Multiplicative {
                root,
                boundary: Some(b),
            } => format!("S_({b})({root},Cx)"),
            Model::EllipticFamily { root, boundary } => format!("S_({boundary})({root},C11bar)"),
            Model::WeylTorusQuotient { root } => format!("W({root})\\Hom(Q({root}),Cx)°"),
            Model::BranchConfigurations { strands } => format!("Conf_{strands}(C)/Aff(C)"),
        }
    }

    /// `rank - 1` for `S(R,C)`, `rank` for `S(R,C×)` and torus quotients,
    /// `rank + 1` over the compactified elliptic family.
    pub fn dimension(&self) -> Result<u32> {
        Ok(match self {
            Model::Additive { root } => rank_of(root)? as u32 - 1,
            Model::Multiplicative { root, .. } | Model::WeylTorusQuotient { root } => {
                rank_of(root)? as u32
            }
            Model::EllipticFamily { root, .. } => rank_of(root)? as u32 + 1,
            Model::BranchConfigurations { strands } => strands - 2,
        })
    }

    pub fn root(&self) -> Option<&str> {
        match self {
            Model::Additive { root }
            | Model::Multiplicative { root, .. }
            | Model::EllipticFamily { root, .. }
            | Model::WeylTorusQuotient { root } => Some(root),
            Model::BranchConfigurations { .. } => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StratumRecord {
    pub partition: String,
    pub kind: RecordKind,
    pub dim_h: u32,
    pub dim_ph: u32,
    pub kodaira_type: Option<String>,
    pub ambient_root_type: Option<String>,
    pub boundary_subsystem_type: Option<String>,
    pub model: String,
    #[serde(skip)]
    pub model_spec: Model,
    /// Key accepted by `present`.
    pub fundamental_group_ref: Option<String>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub key: StratumKey,
}

fn nonhyperelliptic(key: StratumKey) -> StratumRecord {
    let n = key.parts().len() as u32;
    let dim_h = 2 * GENUS + n - 1;
    let (kodaira, ambient, boundary, model, group, notes): (&str, &str, Option<&str>, Model, Option<&str>, Vec<String>) = match key {
        StratumKey::Four => (
            "III (add)",
            "E6",
            None,
            Model::Additive { root: "E6".into() },
            Some("(4)"),
            vec!["fundamental group: Artin group of type E6 modulo its infinite cyclic centre (Delta^2)".into(),
                 "an alternative statement pairs this stratum with E7; recorded as a suspected transposition".into()],
        ),
        StratumKey::ThreeOne => (
            "II (add)",
            "E7",
            None,
            Model::Additive { root: "E7".into() },
            Some("(3,1)"),
            vec!["fundamental group: Artin group of type E7 modulo its infinite cyclic centre (Delta)".into(),
                 "an alternative statement pairs this stratum with E6; recorded as a suspected transposition".into()],
        ),
        StratumKey::TwoTwo => (
            "I2 (mult)",
            "E6",
            Some("A5"),
            Model::Multiplicative { root: "E6".into(), boundary: Some("A5".into()) },
            Some("(2,2)"),
            vec!["open part away from the hyperelliptic locus: S(E6,Cx)".into()],
        ),
        StratumKey::TwoOneOne => (
            "I1 (mult)",
            "E7",
            Some("A6"),
            Model::Multiplicative { root: "E7".into(), boundary: Some("A6".into()) },
            Some("(2,1^2)"),
            vec!["open part away from the hyperelliptic locus: S(E7,Cx)".into()],
        ),
        StratumKey::OneOneOneOne => (
            "smooth",
            "E7",
            Some("A7"),
            Model::EllipticFamily { root: "E7".into(), boundary: "A7".into() },
            None,
            vec!["fundamental group not emitted: no presentation is derived for this stratum".into(),
                 "open part away from the hyperelliptic locus: S(E7, C11/M11)".into()],
        ),
    };
    StratumRecord {
        partition: key.name().into(),
        kind: RecordKind::Nonhyperelliptic,
        dim_h,
        dim_ph: dim_h - 1,
        kodaira_type: Some(kodaira.into()),
        ambient_root_type: Some(ambient.into()),
        boundary_subsystem_type: boundary.map(Into::into),
        model: model.descriptor(),
        model_spec: model,
        fundamental_group_ref: group.map(Into::into),
        notes,
        key,
    }
}

/// `(2g-2)` and `(g-1,g-1)` hyperelliptic components: a hyperelliptic curve
/// (`2g - 1` moduli) plus the support of `D` (a Weierstrass point, or a free point).
fn hyperelliptic_component(key: StratumKey) -> StratumRecord {
    let (free, strands, group, quotient) = match key {
        StratumKey::Four => (0, 2 * GENUS + 1, "hyp(4)", format!("μ_{}", 2 * GENUS - 1)),
        _ => (1, 2 * GENUS + 2, "hyp(2,2)", format!("S_2 × μ_{GENUS}")),
    };
    let dim_ph = 2 * GENUS - 1 + free;
    let model = Model::BranchConfigurations { strands };
    StratumRecord {
        partition: key.name().into(),
        kind: RecordKind::HyperellipticComponent,
        dim_h: dim_ph + 1,
        dim_ph,
        kodaira_type: None,
        ambient_root_type: None,
        boundary_subsystem_type: None,
        model: model.descriptor(),
        model_spec: model,
        fundamental_group_ref: Some(group.into()),
        notes: vec![format!(
            "fundamental group: extension of {quotient} by B_{strands}"
        )],
        key,
    }
}

fn gerbe_locus(key: StratumKey) -> StratumRecord {
    let (model, notes) = match key {
        StratumKey::OneOneOneOne => (
            Model::Multiplicative {
                root: "A7".into(),
                boundary: None,
            },
            vec![],
        ),
        StratumKey::TwoOneOne => (
            Model::WeylTorusQuotient { root: "A6".into() },
            vec!["double cover of S(A6,Cx)".into()],
        ),
        _ => (
            Model::Multiplicative {
                root: "A5".into(),
                boundary: None,
            },
            vec![
                "an alternative statement gives S(E6,Cx) as this gerbe base; S(A5,Cx) is recorded"
                    .into(),
            ],
        ),
    };
    let dim_ph = model.dimension().expect("static root types");
    StratumRecord {
        partition: format!("{}_hyp", key.name()),
        kind: RecordKind::HyperellipticLocus,
        dim_h: dim_ph + 1,
        dim_ph,
        kodaira_type: None,
        ambient_root_type: None,
        boundary_subsystem_type: None,
        model: format!("Z/2-gerbe over {}", model.descriptor()),
        model_spec: model,
        fundamental_group_ref: None,
        notes,
        key,
    }
}

/// Nonhyperelliptic strata in the order (1⁴), (2,1²), (2²), (3,1), (4),
/// then the hyperelliptic components and the three gerbe loci.
pub fn catalog() -> Vec<StratumRecord> {
    let mut out: Vec<StratumRecord> = StratumKey::ALL
        .iter()
        .rev()
        .map(|&k| nonhyperelliptic(k))
        .collect();
    out.push(hyperelliptic_component(StratumKey::Four));
    out.push(hyperelliptic_component(StratumKey::TwoTwo));
    for k in [
        StratumKey::OneOneOneOne,
        StratumKey::TwoOneOne,
        StratumKey::TwoTwo,
    ] {
        out.push(gerbe_locus(k));
    }
    out
}

/// Dimension of the hyperelliptic locus of a stratum from a direct count:
/// the quotient `P^1` carries `supp D = {0, ∞}` and `m` branch points in
/// `C×`, where `m = 8 - w` and `w` is the number of Weierstrass points in
/// `supp D`; dividing by `C×` leaves `m - 1`.
pub fn hyperelliptic_locus_dimension(key: StratumKey) -> Option<u32> {
    let w = match key {
        StratumKey::OneOneOneOne => 0,
        StratumKey::TwoOneOne => 1,
        StratumKey::TwoTwo => 2,
        _ => return None,
    };
    Some(BRANCH_POINTS - w - 1)
}

#[derive(Clone, Debug, Serialize)]
pub struct DimensionRow {
    pub partition: String,
    pub kind: RecordKind,
    pub dim_ph: u32,
    pub model: String,
    pub model_dimension: u32,
    /// Independent count, where one exists.
    pub derived_dimension: Option<u32>,
    /// Ambient root type recomputed from the Picard lattice.
    pub computed_ambient: Option<String>,
    pub computed_boundary: Option<String>,
    pub consistent: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DimensionReport {
    pub rows: Vec<DimensionRow>,
}

impl DimensionReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.consistent)
    }
}

/// Checks every record's `dim_PH` against its model and, for the
/// nonhyperelliptic strata, the stored root types against the root systems
/// computed in `Pic(X)`. Each gerbe locus is checked to be a divisor in its stratum.
pub fn dimension_consistency() -> Result<DimensionReport> {
    let records = catalog();
    let pic = build_picard();
    let mut rows = Vec::new();
    for r in &records {
        let model_dimension = r.model_spec.dimension()?;
        let mut ok = model_dimension == r.dim_ph && r.dim_h == r.dim_ph + 1;
        let (mut ambient, mut boundary, mut derived) = (None, None, None);
        match r.kind {
            RecordKind::Nonhyperelliptic => {
                let n = r.key.parts().len() as u32;
                ok &= r.dim_h == 2 * GENUS + n - 1;
                let sub = stratum_subsystems(&pic, r.key)?;
                let a = sub.ambient.type_label().to_string();
                let b = sub.boundary.as_ref().map(|b| b.type_label().to_string());
                ok &= r.ambient_root_type.as_deref() == Some(a.as_str())
                    && r.model_spec.root() == Some(a.as_str())
                    && r.boundary_subsystem_type == b;
                ambient = Some(a);
                boundary = b;
            }
            RecordKind::HyperellipticComponent => {}
            RecordKind::HyperellipticLocus => {
                derived = hyperelliptic_locus_dimension(r.key);
                ok &= derived == Some(r.dim_ph);
                let parent = records
                    .iter()
                    .find(|p| p.kind == RecordKind::Nonhyperelliptic && p.key == r.key)
                    .expect("every locus has a stratum");
                ok &= parent.dim_ph == r.dim_ph + 1;
            }
        }
        rows.push(DimensionRow {
            partition: r.partition.clone(),
            kind: r.kind,
            dim_ph: r.dim_ph,
            model: r.model.clone(),
            model_dimension,
            derived_dimension: derived,
            computed_ambient: ambient,
            computed_boundary: boundary,
            consistent: ok,
        });
    }
    Ok(DimensionReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find<'a>(c: &'a [StratumRecord], p: &str, kind: RecordKind) -> &'a StratumRecord {
        c.iter()
            .find(|r| r.partition == p && r.kind == kind)
            .unwrap()
    }

    #[test]
    fn records() {
        let c = catalog();
        assert_eq!(c.len(), 10);
        let r = find(&c, "(1^4)", RecordKind::Nonhyperelliptic);
        assert_eq!((r.dim_h, r.dim_ph), (9, 8));
        assert!(r.fundamental_group_ref.is_none());
        let r = find(&c, "(3,1)", RecordKind::Nonhyperelliptic);
        assert_eq!(r.kodaira_type.as_deref(), Some("II (add)"));
        assert_eq!(r.ambient_root_type.as_deref(), Some("E7"));
        assert_eq!(r.model, "S(E7,C)");
        let r = find(&c, "(1^4)_hyp", RecordKind::HyperellipticLocus);
        assert_eq!(r.model, "Z/2-gerbe over S(A7,Cx)");
        let r = find(&c, "(4)", RecordKind::HyperellipticComponent);
        assert_eq!((r.dim_h, r.dim_ph), (6, 5));
        let r = find(&c, "(2^2)", RecordKind::HyperellipticComponent);
        assert_eq!((r.dim_h, r.dim_ph), (7, 6));
    }

    #[test]
    fn model_dimensions() {
        assert_eq!(
            Model::Additive { root: "E6".into() }.dimension().unwrap(),
            5
        );
        assert_eq!(
            Model::Multiplicative {
                root: "E7".into(),
                boundary: None
            }
            .dimension()
            .unwrap(),
            7
        );
        assert_eq!(
            Model::EllipticFamily {
                root: "E7".into(),
                boundary: "A7".into()
            }
            .dimension()
            .unwrap(),
            8
        );
        assert_eq!(
            Model::BranchConfigurations { strands: 7 }
                .dimension()
                .unwrap(),
            5
        );
    }

    #[test]
    fn locus_counts() {
        assert_eq!(
            hyperelliptic_locus_dimension(StratumKey::OneOneOneOne),
            Some(7)
        );
        assert_eq!(
            hyperelliptic_locus_dimension(StratumKey::TwoOneOne),
            Some(6)
        );
        assert_eq!(hyperelliptic_locus_dimension(StratumKey::TwoTwo), Some(5));
        assert_eq!(hyperelliptic_locus_dimension(StratumKey::Four), None);
    }

    #[test]
    fn consistency() {
        let rep = dimension_consistency().unwrap();
        assert!(
            rep.passed(),
            "{:#?}",
            rep.rows
                .iter()
                .filter(|r| !r.consistent)
                .collect::<Vec<_>>()
        );
        assert_eq!(rep.rows.len(), 10);
    }
}
