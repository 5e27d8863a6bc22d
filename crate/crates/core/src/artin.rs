//! Artin group presentations, Garside words and the stratum fundamental-group
//! presentations, checked through the affine Coxeter quotient.
//!
//! Relators are words equal to the identity. A braid relation
//! `t_i t_j t_i = t_j t_i t_j` is stored as `t_i t_j t_i t_j^-1 t_i^-1 t_j^-1`
//! and a commutation as `t_i t_j t_i^-1 t_j^-1`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coxeter::{
    build_affine, terminal_pairs, AffineIsometry, AffineRealization, AffineType, CoxeterDiagram,
    DiagramAutomorphism,
};
use crate::delpezzo::StratumKey;
use crate::error::{Error, Result};
use crate::lattice::CartanType;

pub const PRESENTATION_SCHEMA_VERSION: u32 = 1;

/// A word in generators `t_i^{±1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArtinWord(pub Vec<(usize, i8)>);

impl ArtinWord {
    pub fn positive(indices: &[usize]) -> Self {
        ArtinWord(indices.iter().map(|&i| (i, 1)).collect())
    }

    pub fn letter(i: usize, e: i8) -> Self {
        ArtinWord(vec![(i, e)])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }

    pub fn inverse(&self) -> Self {
        ArtinWord(self.0.iter().rev().map(|&(i, e)| (i, -e)).collect())
    }

    pub fn then(&self, other: &ArtinWord) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ArtinWord(v)
    }

    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Self {
        ArtinWord(self.0.iter().map(|&(i, e)| (f(i), e)).collect())
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.iter().map(|&(i, _)| i).max()
    }

    fn render(&self, names: &[String], sep: &str) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&(i, e)| {
                if e == 1 {
                    names[i].clone()
                } else {
                    format!("{}^{e}", names[i])
                }
            })
            .collect::<Vec<_>>()
            .join(sep)
    }
}

pub fn braid_relator(i: usize, j: usize) -> ArtinWord {
    ArtinWord(vec![(i, 1), (j, 1), (i, 1), (j, -1), (i, -1), (j, -1)])
}

pub fn commutation_relator(i: usize, j: usize) -> ArtinWord {
    ArtinWord(vec![(i, 1), (j, 1), (i, -1), (j, -1)])
}

/// A finite group acting on a presentation by permuting its generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemidirectData {
    pub group: String,
    /// Every element as the list of images `g(0), g(1), …`; the identity comes first.
    pub elements: Vec<Vec<usize>>,
    pub action: String,
}

/// A named kernel-by-quotient extension that is not computed further.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionDescriptor {
    pub kernel: String,
    pub quotient: String,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub schema_version: u32,
    pub name: String,
    pub generators: Vec<String>,
    pub relators: Vec<ArtinWord>,
    /// One note per relator, e.g. `braid 0-1`.
    pub relator_notes: Vec<String>,
    pub semidirect: Option<SemidirectData>,
    pub extension: Option<ExtensionDescriptor>,
}

impl GroupPresentation {
    pub fn new(name: impl Into<String>, generators: Vec<String>) -> Self {
        GroupPresentation {
            schema_version: PRESENTATION_SCHEMA_VERSION,
            name: name.into(),
            generators,
            relators: Vec::new(),
            relator_notes: Vec::new(),
            semidirect: None,
            extension: None,
        }
    }

    pub fn push(&mut self, word: ArtinWord, note: impl Into<String>) {
        self.relators.push(word);
        self.relator_notes.push(note.into());
    }

    pub fn count_notes(&self, prefix: &str) -> usize {
        self.relator_notes
            .iter()
            .filter(|n| n.starts_with(prefix))
            .count()
    }

    /// Relators only use declared generators and exponents `±1`; the
    /// semidirect elements are permutations of the generators.
    pub fn validate(&self) -> Result<()> {
        let n = self.generators.len();
        if self.relators.len() != self.relator_notes.len() {
            return Err(Error::Inconsistent("one note per relator expected".into()));
        }
        for (w, note) in self.relators.iter().zip(&self.relator_notes) {
            if w.0.iter().any(|&(i, e)| i >= n || (e != 1 && e != -1)) {
                return Err(Error::Inconsistent(format!(
                    "relator {note} uses an undeclared generator"
                )));
            }
        }
        if let Some(sd) = &self.semidirect {
            for g in &sd.elements {
                DiagramAutomorphism::from_images(g.clone())?;
                if g.len() != n {
                    return Err(Error::Inconsistent(
                        "semidirect element has the wrong degree".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let p: GroupPresentation = serde_json::from_str(text)?;
        if p.schema_version != PRESENTATION_SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "unsupported schema_version {}",
                p.schema_version
            )));
        }
        p.validate()?;
        Ok(p)
    }

    /// An equivalent presentation without semidirect data: each non-identity
    /// group element becomes a generator, with its multiplication table and
    /// its action on the original generators as relators.
    pub fn flatten(&self) -> GroupPresentation {
        let Some(sd) = &self.semidirect else {
            return self.clone();
        };
        let base = self.generators.len();
        let mut out = GroupPresentation::new(self.name.clone(), self.generators.clone());
        out.extension = self.extension.clone();
        for (w, n) in self.relators.iter().zip(&self.relator_notes) {
            out.push(w.clone(), n.clone());
        }
        let elems: Vec<DiagramAutomorphism> = sd
            .elements
            .iter()
            .map(|e| DiagramAutomorphism::from_images(e.clone()).expect("validated"))
            .collect();
        let index_of =
            |g: &DiagramAutomorphism| elems.iter().position(|e| e == g).expect("closed group");
        // element k (k >= 1) becomes generator base + k - 1
        let gen = |k: usize| base + k - 1;
        for k in 1..elems.len() {
            out.generators.push(format!("g{k}"));
        }
        for a in 1..elems.len() {
            for b in 1..elems.len() {
                let c = index_of(&elems[a].compose(&elems[b]));
                let mut w = ArtinWord(vec![(gen(a), 1), (gen(b), 1)]);
                if c != 0 {
                    w.0.push((gen(c), -1));
                }
                out.push(w, format!("aut g{a}*g{b}"));
            }
        }
        for a in 1..elems.len() {
            for t in 0..base {
                let w = ArtinWord(vec![
                    (gen(a), 1),
                    (t, 1),
                    (gen(a), -1),
                    (elems[a].apply(t), -1),
                ]);
                out.push(w, format!("action g{a} on {}", self.generators[t]));
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "group {}", self.name);
        let _ = writeln!(s, "generators: {}", self.generators.join(" "));
        if let Some(sd) = &self.semidirect {
            let elems: Vec<String> = sd
                .elements
                .iter()
                .map(|e| {
                    DiagramAutomorphism::from_images(e.clone())
                        .map(|g| g.cycles())
                        .unwrap_or_default()
                })
                .collect();
            let _ = writeln!(
                s,
                "semidirect with {} = {{{}}}, {}",
                sd.group,
                elems.join(", "),
                sd.action
            );
        }
        if let Some(ext) = &self.extension {
            let _ = writeln!(s, "extension: {}", ext.text);
        }
        let _ = writeln!(s, "relators ({}):", self.relators.len());
        for (w, note) in self.relators.iter().zip(&self.relator_notes) {
            let _ = writeln!(s, "  {} = 1    [{note}]", w.render(&self.generators, " "));
        }
        s
    }

    /// Plain finitely-presented-group syntax: a free group, a relator list
    /// and the quotient, with `*` for products and `^-1` for inverses.
    pub fn to_gap_style(&self) -> String {
        let flat = self.flatten();
        let mut s = String::new();
        let _ = writeln!(s, "# {}", self.name);
        if let Some(ext) = &self.extension {
            let _ = writeln!(s, "# {}", ext.text);
        }
        let names: Vec<String> = flat.generators.iter().map(|g| format!("\"{g}\"")).collect();
        let _ = writeln!(s, "F := FreeGroup({});", names.join(", "));
        for (k, g) in flat.generators.iter().enumerate() {
            let _ = writeln!(s, "{g} := F.{};", k + 1);
        }
        let _ = writeln!(s, "rels := [");
        let n = flat.relators.len();
        for (k, w) in flat.relators.iter().enumerate() {
            let comma = if k + 1 < n { "," } else { "" };
            let _ = writeln!(s, "  {}{comma}", w.render(&flat.generators, "*"));
        }
        let _ = writeln!(s, "];");
        let _ = writeln!(s, "G := F / rels;");
        s
    }
}

/// Generators `t_v` for the vertices of `diagram`, with one braid relator
/// per edge and one commutator per non-edge.
pub fn artin_presentation(name: &str, diagram: &CoxeterDiagram) -> GroupPresentation {
    let v = diagram.vertices();
    let mut p = GroupPresentation::new(name, v.iter().map(|i| format!("t{i}")).collect());
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            if diagram.has_edge(v[a], v[b]) {
                p.push(braid_relator(a, b), format!("braid {}-{}", v[a], v[b]));
            } else {
                p.push(
                    commutation_relator(a, b),
                    format!("commute {}-{}", v[a], v[b]),
                );
            }
        }
    }
    p
}

#[derive(Clone, Debug, Serialize)]
pub struct GarsideData {
    pub parabolic: Vec<usize>,
    pub type_label: String,
    pub word: ArtinWord,
    pub length: usize,
}

/// The positive lift of the lowest-index-first reduced word of the longest
/// element of the parabolic on `subset`; generator indices are diagram vertices.
pub fn garside_word(real: &AffineRealization, subset: &[usize]) -> Result<GarsideData> {
    let sub = real.diagram().induced(subset);
    let ty = sub.cartan_type()?;
    let word = real.parabolic_longest_word(subset)?;
    Ok(GarsideData {
        parabolic: sub.vertices().to_vec(),
        type_label: ty.to_string(),
        length: word.len(),
        word: ArtinWord::positive(&word),
    })
}

/// `Δ_i`, the Garside element of `Γ_i`.
pub fn garside_of_vertex(real: &AffineRealization, i: usize) -> Result<GarsideData> {
    let keep = real.diagram().without(i).vertices().to_vec();
    garside_word(real, &keep)
}

/// Image of a word under `t_i ↦ s_i` (so `t_i^{-1} ↦ s_i` as well).
pub fn coxeter_image(word: &ArtinWord, real: &AffineRealization) -> AffineIsometry {
    word.0
        .iter()
        .fold(AffineIsometry::identity(real.rank()), |acc, &(i, _)| {
            acc.compose(&real.reflection(i))
        })
}

/// A stratum presentation together with the data needed to check it.
#[derive(Clone, Debug)]
pub struct StratumPresentation {
    pub key: StratumKey,
    pub presentation: GroupPresentation,
    pub variant: Option<GroupPresentation>,
    pub affine_type: Option<AffineType>,
    /// Quasi-special pairs `(i, j)` used by the extra relators.
    pub pairs: Vec<(usize, usize)>,
    /// Number of braid and commutation relators.
    pub artin_relators: usize,
    pub extra_relators: usize,
}

fn aut_semidirect(real: &AffineRealization) -> SemidirectData {
    SemidirectData {
        group: format!("Aut({})", real.affine_type()),
        elements: real
            .diagram()
            .automorphisms()
            .into_iter()
            .map(|g| {
                (0..real.diagram().vertices().len())
                    .map(|v| g.apply(v))
                    .collect()
            })
            .collect(),
        action: "g t_i g^-1 = t_g(i)".into(),
    }
}

fn finite_quotient(key: StratumKey, ty: &str, power: usize) -> Result<StratumPresentation> {
    let t: CartanType = ty.parse()?;
    // A finite diagram embedded as a parabolic of the matching affine diagram.
    let affine = if ty == "E6" {
        AffineType::E6
    } else {
        AffineType::E7
    };
    let real = build_affine(affine)?;
    let diagram = real.diagram().without(0);
    if diagram.cartan_type()? != t {
        return Err(Error::Inconsistent(format!(
            "parabolic is not of type {ty}"
        )));
    }
    let pos = |v: usize| v - 1;
    let mut p = artin_presentation(&format!("PH{key}"), &diagram);
    p.generators = (1..=t.rank()).map(|i| format!("t{i}")).collect();
    let delta = garside_of_vertex(&real, 0)?.word.relabel(pos);
    let mut central = ArtinWord::default();
    for _ in 0..power {
        central = central.then(&delta);
    }
    let artin = p.relators.len();
    p.push(
        central,
        if power == 1 {
            format!("center: Delta_{ty}")
        } else {
            format!("center: Delta_{ty}^{power}")
        },
    );
    Ok(StratumPresentation {
        key,
        presentation: p,
        variant: None,
        affine_type: None,
        pairs: Vec::new(),
        artin_relators: artin,
        extra_relators: 1,
    })
}

/// The presentations attached to the strata. `(1^4)` has none.
pub fn stratum_presentation(key: StratumKey) -> Result<StratumPresentation> {
    match key {
        StratumKey::TwoOneOne => {
            let real = build_affine(AffineType::E7)?;
            let (i, j) = (0, 2);
            let g = real
                .quasi_special(j)?
                .ok_or_else(|| Error::Verification("A7 vertex is not quasi-special".into()))?;
            let mut p = artin_presentation("PH(2,1^2)", real.diagram());
            let artin = p.relators.len();
            let x = garside_of_vertex(&real, j)?.word.inverse().then(&garside_of_vertex(&real, i)?.word);
            p.push(x.then(&x), "order 2: (Delta_A7^-1 Delta_E7)^2");
            for &t in real.diagram().vertices() {
                let w = x
                    .then(&ArtinWord::letter(t, 1))
                    .then(&x.inverse())
                    .then(&ArtinWord::letter(g.apply(t), -1));
                p.push(w, format!("conjugation: X t{t} X^-1 = t{}", g.apply(t)));
            }
            let extra = p.relators.len() - artin;
            Ok(StratumPresentation {
                key,
                presentation: p,
                variant: None,
                affine_type: Some(AffineType::E7),
                pairs: vec![(i, j)],
                artin_relators: artin,
                extra_relators: extra,
            })
        }
        StratumKey::TwoTwo => {
            let real = build_affine(AffineType::E6)?;
            let pairs = terminal_pairs(real.diagram());
            let relator = |(i, j): (usize, usize)| -> Result<ArtinWord> {
                Ok(garside_of_vertex(&real, j)?.word.then(&garside_of_vertex(&real, i)?.word.inverse()))
            };
            let mut p = artin_presentation("PH(2,2)", real.diagram());
            p.semidirect = Some(aut_semidirect(&real));
            let artin = p.relators.len();
            let mut variant = p.clone();
            variant.name = "PH(2,2) (three terminal relations)".into();
            let (i, j) = pairs[0];
            p.push(relator((i, j))?, format!("Delta_A5+A1 = Delta_E6 (terminal {i}, neighbour {j})"));
            for &(a, b) in &pairs {
                variant.push(relator((a, b))?, format!("Delta_A5+A1 = Delta_E6 (terminal {a}, neighbour {b})"));
            }
            Ok(StratumPresentation {
                key,
                presentation: p,
                variant: Some(variant),
                affine_type: Some(AffineType::E6),
                pairs,
                artin_relators: artin,
                extra_relators: 1,
            })
        }
        StratumKey::Four => finite_quotient(key, "E6", 2),
        StratumKey::ThreeOne => finite_quotient(key, "E7", 1),
        StratumKey::OneOneOneOne => Err(Error::UnknownKey(
            "no presentation is emitted for (1^4); its orbifold fundamental group is not determined here".into(),
        )),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairCheck {
    pub i: usize,
    pub j: usize,
    pub g_i: DiagramAutomorphism,
    pub g_j: DiagramAutomorphism,
    /// (a) `g_i^aff ∘ image(Δ_i) = s_i` and likewise for `j`, and `g Δ = Δ g`.
    pub opposition_reproduced: bool,
    /// (b) image of `(Δ_j g_j)(Δ_i g_i)^{-1}` is translation by `2(v_j - v_i)`.
    pub translation_reproduced: bool,
    pub translation: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoxeterVerification {
    pub affine_type: AffineType,
    pub pairs: Vec<PairCheck>,
    /// (c) braid and commutation relators mapping to the identity.
    pub artin_relators_checked: usize,
    pub failing_relators: Vec<String>,
}

impl CoxeterVerification {
    pub fn passed(&self) -> bool {
        self.failing_relators.is_empty()
            && self
                .pairs
                .iter()
                .all(|p| p.opposition_reproduced && p.translation_reproduced)
    }
}

/// Checks (a) and (b) for quasi-special vertices `i`, `j`.
pub fn check_pair(real: &AffineRealization, i: usize, j: usize) -> Result<PairCheck> {
    let gi = real
        .quasi_special(i)?
        .ok_or_else(|| Error::Verification(format!("vertex {i} is not quasi-special")))?;
    let gj = real
        .quasi_special(j)?
        .ok_or_else(|| Error::Verification(format!("vertex {j} is not quasi-special")))?;
    let di = coxeter_image(&garside_of_vertex(real, i)?.word, real);
    let dj = coxeter_image(&garside_of_vertex(real, j)?.word, real);
    let ai = real.affine_extension(&gi)?;
    let aj = real.affine_extension(&gj)?;
    let opp = ai.compose(&di) == real.opposition(i)
        && di.compose(&ai) == real.opposition(i)
        && aj.compose(&dj) == real.opposition(j)
        && dj.compose(&aj) == real.opposition(j);
    let loop_image = dj.compose(&aj).compose(&di.compose(&ai).inverse()?);
    let t = real.translation_of_pair(i, j)?;
    let trans = loop_image.is_translation() && loop_image.translation == t;
    Ok(PairCheck {
        i,
        j,
        g_i: gi,
        g_j: gj,
        opposition_reproduced: opp,
        translation_reproduced: trans,
        translation: crate::coxeter::coords_text(&t),
    })
}

/// Necessary conditions for a stratum presentation, checked in the affine
/// Weyl group: checks (a), (b) for the quasi-special pairs used and (c) for
/// every braid or commutation relator.
pub fn verify_in_coxeter(sp: &StratumPresentation) -> Result<CoxeterVerification> {
    let ty = sp.affine_type.ok_or_else(|| Error::Unsupported {
        target: sp.key.to_string(),
        ambient: "affine Coxeter checks".into(),
    })?;
    let real = build_affine(ty)?;
    let mut failing = Vec::new();
    let mut checked = 0;
    for (w, note) in sp
        .presentation
        .relators
        .iter()
        .zip(&sp.presentation.relator_notes)
    {
        if note.starts_with("braid") || note.starts_with("commute") {
            checked += 1;
            if !coxeter_image(w, &real).is_identity() {
                failing.push(note.clone());
            }
        }
    }
    let pairs = sp
        .pairs
        .iter()
        .map(|&(i, j)| check_pair(&real, i, j))
        .collect::<Result<Vec<_>>>()?;
    Ok(CoxeterVerification {
        affine_type: ty,
        pairs,
        artin_relators_checked: checked,
        failing_relators: failing,
    })
}

/// The two hyperelliptic strata of genus `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HyperellipticKey {
    /// `(2g-2)`
    SingleZero,
    /// `(g-1, g-1)`
    TwoZeros,
}

impl HyperellipticKey {
    pub fn name(self, g: u32) -> String {
        match self {
            HyperellipticKey::SingleZero => format!("({})", 2 * g - 2),
            HyperellipticKey::TwoZeros => format!("({0},{0})", g - 1),
        }
    }
}

/// The Artin presentation of the braid group on `strands` strands (an `A_{strands-1}` chain).
pub fn braid_group(strands: usize) -> Result<GroupPresentation> {
    if strands < 2 {
        return Err(Error::Inconsistent(
            "braid groups need at least 2 strands".into(),
        ));
    }
    let n = strands - 1;
    let diagram = CoxeterDiagram::new((1..=n).collect(), (1..n).map(|i| (i, i + 1)))?;
    let mut p = artin_presentation(&format!("B_{strands}"), &diagram);
    p.generators = (1..=n).map(|i| format!("s{i}")).collect();
    Ok(p)
}

pub fn hyperelliptic_group_data(g: u32, key: HyperellipticKey) -> Result<GroupPresentation> {
    if g < 2 {
        return Err(Error::Inconsistent(format!("genus {g} < 2")));
    }
    let (strands, quotient) = match key {
        HyperellipticKey::SingleZero => (2 * g + 1, format!("μ_{}", 2 * g - 1)),
        HyperellipticKey::TwoZeros => (2 * g + 2, format!("S_2 × μ_{g}")),
    };
    let mut p = braid_group(strands as usize)?;
    p.name = format!("PH^hyp{} (g = {g})", key.name(g));
    let kernel = format!("B_{strands}");
    p.extension = Some(ExtensionDescriptor {
        text: format!("extension of {quotient} by {kernel}"),
        kernel,
        quotient,
    });
    Ok(p)
}

#[derive(Clone, Debug, Serialize)]
pub struct TorusWeight {
    pub genus: u32,
    pub key: HyperellipticKey,
    /// Weights of `(ρ, z, w)` under `ζ`.
    pub action_weights: [i64; 3],
    /// `weight(dz) - weight(w)`.
    pub computed: i64,
    /// The stated exponent of `ζ` on `φ`.
    pub stated: i64,
    pub matches: bool,
}

/// Weight of `φ = w^{-1} dz` from the declared torus action.
pub fn torus_weight_check(g: u32, key: HyperellipticKey) -> TorusWeight {
    let g_i = i64::from(g);
    let (weights, stated) = match key {
        HyperellipticKey::SingleZero => ([2, 2, 2 * g_i + 1], 1 - 2 * g_i),
        HyperellipticKey::TwoZeros => ([1, 1, g_i + 1], -g_i),
    };
    let computed = weights[1] - weights[2];
    TorusWeight {
        genus: g,
        key,
        action_weights: weights,
        computed,
        stated,
        matches: computed == stated,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_artin_presentations() {
        let a2 = CoxeterDiagram::new(vec![1, 2], [(1, 2)]).unwrap();
        let p = artin_presentation("A2", &a2);
        assert_eq!(p.count_notes("braid"), 1);
        assert_eq!(p.count_notes("commute"), 0);
        let e7 = build_affine(AffineType::E7).unwrap();
        let p = artin_presentation("E7~", e7.diagram());
        assert_eq!(p.generators.len(), 8);
        assert_eq!(p.count_notes("braid"), 7);
        assert_eq!(p.count_notes("commute"), 21);
    }

    #[test]
    fn presentation_is_aut_equivariant() {
        let e6 = build_affine(AffineType::E6).unwrap();
        let p = artin_presentation("E6~", e6.diagram());
        let canon = |ws: &[ArtinWord]| {
            let mut v: Vec<(usize, usize, bool)> = ws
                .iter()
                .map(|w| {
                    let (a, b) = (w.0[0].0, w.0[1].0);
                    (a.min(b), a.max(b), w.len() == 6)
                })
                .collect();
            v.sort();
            v
        };
        for g in e6.diagram().automorphisms() {
            let moved: Vec<ArtinWord> = p
                .relators
                .iter()
                .map(|w| w.relabel(|i| g.apply(i)))
                .collect();
            assert_eq!(canon(&moved), canon(&p.relators));
        }
    }

    #[test]
    fn garside_words() {
        let e6 = build_affine(AffineType::E6).unwrap();
        let a1 = garside_word(&e6, &[1]).unwrap();
        assert_eq!(a1.word, ArtinWord::positive(&[1]));
        let a2 = garside_word(&e6, &[1, 3]).unwrap();
        assert_eq!(a2.word, ArtinWord::positive(&[1, 3, 1]));
        assert_eq!(garside_of_vertex(&e6, 0).unwrap().length, 36);
        assert_eq!(garside_of_vertex(&e6, 2).unwrap().length, 16);
        let e7 = build_affine(AffineType::E7).unwrap();
        let d = garside_of_vertex(&e7, 0).unwrap();
        assert_eq!((d.length, d.type_label.as_str()), (63, "E7"));
        assert!(d.word.is_positive());
        assert_eq!(garside_of_vertex(&e7, 2).unwrap().length, 28);
        assert_eq!(garside_word(&e7, &[1, 3, 4, 5, 6, 7]).unwrap().length, 21);
    }

    #[test]
    fn coxeter_images() {
        let e7 = build_affine(AffineType::E7).unwrap();
        assert!(coxeter_image(&ArtinWord::default(), &e7).is_identity());
        assert!(coxeter_image(&ArtinWord::positive(&[3, 3]), &e7).is_identity());
        let d = garside_of_vertex(&e7, 2).unwrap();
        let img = coxeter_image(&d.word, &e7);
        assert_eq!(img.apply(e7.vertex(2)), e7.vertex(2));
        assert_eq!(e7.length(&img), d.length);
    }

    #[test]
    fn two_one_one() {
        let sp = stratum_presentation(StratumKey::TwoOneOne).unwrap();
        assert_eq!(sp.presentation.generators.len(), 8);
        assert_eq!(sp.artin_relators, 28);
        assert_eq!(sp.extra_relators, 9);
        let v = verify_in_coxeter(&sp).unwrap();
        assert!(v.passed(), "{v:?}");
        assert!(v.pairs[0].g_i.is_identity());
        assert!(!v.pairs[0].g_j.is_identity());
    }

    #[test]
    fn two_two() {
        let sp = stratum_presentation(StratumKey::TwoTwo).unwrap();
        assert_eq!(
            sp.presentation.semidirect.as_ref().unwrap().elements.len(),
            6
        );
        assert_eq!(sp.presentation.relators.len(), 22);
        assert_eq!(sp.variant.as_ref().unwrap().relators.len(), 24);
        let v = verify_in_coxeter(&sp).unwrap();
        assert!(v.passed(), "{v:?}");
        for p in &v.pairs {
            assert_eq!(p.g_i, p.g_j);
            assert_eq!(p.g_i.apply(p.i), p.i);
        }
        let flat = sp.presentation.flatten();
        assert_eq!(flat.generators.len(), 7 + 5);
        flat.validate().unwrap();
        assert!(sp.presentation.to_gap_style().contains("G := F / rels;"));
    }

    #[test]
    fn finite_strata_and_missing_one() {
        let p4 = stratum_presentation(StratumKey::Four).unwrap();
        assert_eq!(p4.presentation.generators.len(), 6);
        assert_eq!(p4.presentation.relators.last().unwrap().len(), 72);
        let p31 = stratum_presentation(StratumKey::ThreeOne).unwrap();
        assert_eq!(p31.presentation.relators.last().unwrap().len(), 63);
        assert!(stratum_presentation(StratumKey::OneOneOneOne).is_err());
    }

    #[test]
    fn hyperelliptic_groups() {
        let b7 = hyperelliptic_group_data(3, HyperellipticKey::SingleZero).unwrap();
        assert_eq!(b7.generators.len(), 6);
        assert_eq!(
            (b7.count_notes("braid"), b7.count_notes("commute")),
            (5, 10)
        );
        assert_eq!(
            b7.extension.as_ref().unwrap().text,
            "extension of μ_5 by B_7"
        );
        let b8 = hyperelliptic_group_data(3, HyperellipticKey::TwoZeros).unwrap();
        assert_eq!(b8.generators.len(), 7);
        assert_eq!(
            b8.extension.as_ref().unwrap().text,
            "extension of S_2 × μ_3 by B_8"
        );
        let b2 = braid_group(2).unwrap();
        assert_eq!((b2.generators.len(), b2.relators.len()), (1, 0));
    }

    #[test]
    fn torus_weights() {
        assert_eq!(
            torus_weight_check(3, HyperellipticKey::SingleZero).computed,
            -5
        );
        assert_eq!(
            torus_weight_check(3, HyperellipticKey::TwoZeros).computed,
            -3
        );
        for g in 2..10 {
            assert!(torus_weight_check(g, HyperellipticKey::SingleZero).matches);
            assert!(torus_weight_check(g, HyperellipticKey::TwoZeros).matches);
        }
    }

    #[test]
    fn json_round_trip_of_strata() {
        for key in [StratumKey::TwoOneOne, StratumKey::TwoTwo, StratumKey::Four] {
            let p = stratum_presentation(key).unwrap().presentation;
            let text = p.to_json().unwrap();
            let back = GroupPresentation::from_json(&text).unwrap();
            assert_eq!(back, p);
            assert_eq!(back.to_json().unwrap(), text);
        }
    }

    fn arb_presentation() -> impl Strategy<Value = GroupPresentation> {
        (1usize..6).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec((0..n, prop::bool::ANY), 0..8), 0..6)
                .prop_map(move |rels| {
                    let mut p =
                        GroupPresentation::new("random", (0..n).map(|i| format!("x{i}")).collect());
                    for (k, r) in rels.into_iter().enumerate() {
                        p.push(
                            ArtinWord(
                                r.into_iter()
                                    .map(|(i, b)| (i, if b { 1 } else { -1 }))
                                    .collect(),
                            ),
                            format!("r{k}"),
                        );
                    }
                    p
                })
        })
    }

    proptest! {
        #[test]
        fn json_round_trip(p in arb_presentation()) {
            let text = p.to_json().unwrap();
            let back = GroupPresentation::from_json(&text).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.to_json().unwrap(), text);
        }
    }
}
