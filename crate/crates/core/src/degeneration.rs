//! The central fibre of the hyperelliptic degeneration: the rational pairing
//! on the classes `R_b^±`, limit classes `E^±_β` and their intersection rules.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::delpezzo::{
    epsilon_character, evaluate, label_exceptionals, root_system_of_x, BLabel, LabeledDictionary,
    PicardLattice, Sign, B_SIZE,
};
use crate::error::{Error, Result};
use crate::lattice::{IsometryElement, LatticeVector, RootSystemData};
use crate::rational::{fmt_rat, rat, ratio, Matrix, Rat};

const GENERATORS: usize = 2 * B_SIZE as usize;

/// `R^2` for the ray class `R` of `V_0`.
pub const V0_RAY_SQUARE: (i64, i64) = (1, 4);
/// `C·R` for the curve class `C` of `V_0`.
pub const V0_CURVE_DOT_RAY: i64 = 2;
/// `pic(V)` is generated by this multiple of `R`.
pub const V0_PIC_GENERATOR_MULTIPLE: i64 = 4;

fn slot(b: u8, sign: Sign) -> usize {
    2 * usize::from(b) + usize::from(sign == Sign::Minus)
}

/// A rational combination of the 16 classes `R_b^±`, `b ∈ B`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CentralFiberClass {
    coeffs: Vec<Rat>,
}

impl CentralFiberClass {
    pub fn zero() -> Self {
        CentralFiberClass {
            coeffs: vec![Rat::zero(); GENERATORS],
        }
    }

    /// `R_b^s`.
    pub fn generator(b: u8, sign: Sign) -> Self {
        assert!(b < B_SIZE, "b{b} is not in B");
        let mut c = Self::zero();
        c.coeffs[slot(b, sign)] = Rat::one();
        c
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.len() != GENERATORS {
            return Err(Error::Dimension {
                expected: GENERATORS,
                got: coeffs.len(),
            });
        }
        Ok(CentralFiberClass { coeffs })
    }

    pub fn coeff(&self, b: u8, sign: Sign) -> &Rat {
        &self.coeffs[slot(b, sign)]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        CentralFiberClass {
            coeffs: crate::rational::add(&self.coeffs, &other.coeffs),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        CentralFiberClass {
            coeffs: crate::rational::sub(&self.coeffs, &other.coeffs),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        CentralFiberClass {
            coeffs: crate::rational::scale(&self.coeffs, c),
        }
    }

    /// Nonzero terms as text, e.g. `R+b0 - R+b1`.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for b in 0..B_SIZE {
            for sign in [Sign::Plus, Sign::Minus] {
                let c = self.coeff(b, sign);
                if c.is_zero() {
                    continue;
                }
                let neg = *c < Rat::zero();
                let mag = if neg { -c } else { c.clone() };
                if out.is_empty() {
                    if neg {
                        out.push('-');
                    }
                } else {
                    out.push_str(if neg { " - " } else { " + " });
                }
                if !mag.is_one() {
                    out.push_str(&fmt_rat(&mag));
                }
                out.push_str(&format!("R{}b{b}", sign.symbol()));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn generator_pairing(b: u8, s: Sign, c: u8, t: Sign) -> Rat {
    match (b == c, s == t) {
        (true, true) => ratio(-3, 4),
        (true, false) => rat(1),
        (false, true) => ratio(1, 4),
        (false, false) => rat(0),
    }
}

/// The intersection pairing on the central fibre classes.
pub fn central_pairing(x: &CentralFiberClass, y: &CentralFiberClass) -> Rat {
    let mut total = Rat::zero();
    for b in 0..B_SIZE {
        for s in [Sign::Plus, Sign::Minus] {
            let xb = x.coeff(b, s);
            if xb.is_zero() {
                continue;
            }
            for c in 0..B_SIZE {
                for t in [Sign::Plus, Sign::Minus] {
                    let yc = y.coeff(c, t);
                    if !yc.is_zero() {
                        total += xb * yc * generator_pairing(b, s, c, t);
                    }
                }
            }
        }
    }
    total
}

/// `E^s_β = R^s_b + R^s_{b'}`.
#[derive(Clone, Debug)]
pub struct LimitClass {
    pub label: BLabel,
    pub class: CentralFiberClass,
}

pub fn limit_class(label: BLabel) -> Result<LimitClass> {
    let (b, c) = label.pair();
    let s = label.sign();
    let class = CentralFiberClass::generator(b, s).add(&CentralFiberClass::generator(c, s));
    if central_pairing(&class, &class) != rat(-1) {
        return Err(Error::Verification(format!(
            "{label} does not have self-intersection -1"
        )));
    }
    let diff = CentralFiberClass::generator(b, s).sub(&CentralFiberClass::generator(c, s));
    if central_pairing(&diff, &diff) != rat(-2) {
        return Err(Error::Verification(format!(
            "R{0}b{b} - R{0}b{c} does not have square -2",
            s.symbol()
        )));
    }
    Ok(LimitClass { label, class })
}

/// The rule predicting `E·E'` from the labels alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum IntersectionRule {
    /// Same label.
    Diagonal,
    /// (i) pairs share one point.
    SingletonSameSign,
    SingletonOppositeSign,
    /// (ii) disjoint pairs.
    DisjointSameSign,
    DisjointOppositeSign,
    /// (iii) same pair, opposite signs.
    SamePairOpposite,
}

impl IntersectionRule {
    pub fn of(a: &BLabel, b: &BLabel) -> IntersectionRule {
        let same = a.sign() == b.sign();
        match (a.overlap(b), same) {
            (2, true) => IntersectionRule::Diagonal,
            (2, false) => IntersectionRule::SamePairOpposite,
            (1, true) => IntersectionRule::SingletonSameSign,
            (1, false) => IntersectionRule::SingletonOppositeSign,
            (_, true) => IntersectionRule::DisjointSameSign,
            (_, false) => IntersectionRule::DisjointOppositeSign,
        }
    }

    pub fn expected(self) -> i64 {
        match self {
            IntersectionRule::Diagonal => -1,
            IntersectionRule::SingletonSameSign | IntersectionRule::DisjointOppositeSign => 0,
            IntersectionRule::SingletonOppositeSign | IntersectionRule::DisjointSameSign => 1,
            IntersectionRule::SamePairOpposite => 2,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RuleTally {
    pub rule: IntersectionRule,
    pub expected: i64,
    pub pairs: usize,
    pub mismatches: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LimitReport {
    pub pairs_checked: usize,
    pub tallies: Vec<RuleTally>,
    /// Distinct values of `E·E'` for `E ≠ E'`.
    pub off_diagonal_values: Vec<String>,
    /// First few mismatching pairs, as `label·label = value`.
    pub mismatches: Vec<String>,
}

impl LimitReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.tallies.iter().all(|t| t.mismatches == 0)
    }
}

/// Checks rules (i)–(iii) and the diagonal for every ordered pair of labels.
pub fn verify_limit_intersections() -> Result<LimitReport> {
    let labels = BLabel::all();
    let limits = labels
        .iter()
        .map(|&l| limit_class(l))
        .collect::<Result<Vec<_>>>()?;
    let mut tallies: BTreeMap<IntersectionRule, (usize, usize)> = BTreeMap::new();
    let mut values = BTreeSet::new();
    let mut mismatches = Vec::new();
    for a in &limits {
        for b in &limits {
            let rule = IntersectionRule::of(&a.label, &b.label);
            let v = central_pairing(&a.class, &b.class);
            let entry = tallies.entry(rule).or_insert((0, 0));
            entry.0 += 1;
            if v != rat(rule.expected()) {
                entry.1 += 1;
                if mismatches.len() < 10 {
                    mismatches.push(format!("{}·{} = {}", a.label, b.label, fmt_rat(&v)));
                }
            }
            if a.label != b.label {
                values.insert(v);
            }
        }
    }
    Ok(LimitReport {
        pairs_checked: limits.len() * limits.len(),
        tallies: tallies
            .into_iter()
            .map(|(rule, (pairs, bad))| RuleTally {
                rule,
                expected: rule.expected(),
                pairs,
                mismatches: bad,
            })
            .collect(),
        off_diagonal_values: values.iter().map(fmt_rat).collect(),
        mismatches,
    })
}

/// The limit map on `Pic(X) ⊗ Q`, fixed on the basis by
/// `e_i ↦ E^-_{b0,bi}` and `l = (l - e1 - e2) + e1 + e2`.
#[derive(Clone, Debug)]
pub struct LimitMap {
    images: Vec<CentralFiberClass>,
}

impl LimitMap {
    pub fn new() -> Result<Self> {
        let e = |i: u8| -> Result<CentralFiberClass> {
            Ok(limit_class(BLabel::new(Sign::Minus, 0, i)?)?.class)
        };
        let l = limit_class(BLabel::new(Sign::Plus, 1, 2)?)?
            .class
            .add(&e(1)?)
            .add(&e(2)?);
        let mut images = vec![l];
        for i in 1..=7 {
            images.push(e(i)?);
        }
        Ok(LimitMap { images })
    }

    pub fn apply(&self, v: &LatticeVector) -> CentralFiberClass {
        let mut out = CentralFiberClass::zero();
        for (c, img) in v.coords().iter().zip(&self.images) {
            if !c.is_zero() {
                out = out.add(&img.scale(c));
            }
        }
        out
    }
}

/// True when `x` pairs to zero with every generator.
pub fn in_radical(x: &CentralFiberClass) -> bool {
    (0..B_SIZE).all(|b| {
        [Sign::Plus, Sign::Minus]
            .iter()
            .all(|&s| central_pairing(x, &CentralFiberClass::generator(b, s)).is_zero())
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PreservationReport {
    pub pairs_checked: usize,
    pub mismatches: usize,
    /// Classes whose linear image differs from the limit class by more than the radical.
    pub linear_extension_failures: usize,
}

impl PreservationReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.linear_extension_failures == 0
    }
}

/// Compares `E·E'` in `Pic(X)` with the central pairing of the limit classes,
/// for all 56×56 pairs, and checks the linear limit map agrees with the
/// labelled limit classes modulo the radical of the central pairing.
pub fn verify_limit_map(dict: &LabeledDictionary) -> Result<PreservationReport> {
    let limits = dict
        .labels()
        .iter()
        .map(|&l| limit_class(l))
        .collect::<Result<Vec<_>>>()?;
    let mut mismatches = 0;
    for (a, la) in dict.classes().iter().zip(&limits) {
        for (b, lb) in dict.classes().iter().zip(&limits) {
            if a.vec.dot(&b.vec) != central_pairing(&la.class, &lb.class) {
                mismatches += 1;
            }
        }
    }
    let map = LimitMap::new()?;
    let failures = dict
        .classes()
        .iter()
        .zip(&limits)
        .filter(|(c, l)| !in_radical(&map.apply(&c.vec).sub(&l.class)))
        .count();
    Ok(PreservationReport {
        pairs_checked: limits.len() * limits.len(),
        mismatches,
        linear_extension_failures: failures,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootShape {
    SameSignSingleton,
    OppositeSignDisjoint,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShapeWitness {
    pub root: String,
    pub shape: RootShape,
    pub minuend: BLabel,
    pub subtrahend: BLabel,
    pub decompositions: usize,
    pub epsilon: i8,
}

/// Classifies a root by its decompositions `α = E - E'` into disjoint
/// exceptional classes; all decompositions must have the same shape.
pub fn root_shape(
    dict: &LabeledDictionary,
    eps: &crate::lattice::SignCharacter,
    alpha: &LatticeVector,
) -> Result<ShapeWitness> {
    let mut shapes = BTreeSet::new();
    let mut first = None;
    let mut count = 0;
    for (c, &label) in dict.classes().iter().zip(dict.labels()) {
        let other = c.vec.sub(alpha);
        let Some(other_label) = dict.label_of(&other) else {
            continue;
        };
        if !c.vec.dot(&other).is_zero() {
            continue;
        }
        let shape = match (
            label.sign() == other_label.sign(),
            label.overlap(&other_label),
        ) {
            (true, 1) => RootShape::SameSignSingleton,
            (false, 0) => RootShape::OppositeSignDisjoint,
            _ => {
                return Err(Error::Verification(format!(
                    "{alpha} = {label} - {other_label} has an unexpected shape"
                )))
            }
        };
        shapes.insert(shape);
        count += 1;
        first.get_or_insert((shape, label, other_label));
    }
    let Some((shape, minuend, subtrahend)) = first else {
        return Err(Error::Verification(format!("{alpha} has no decomposition")));
    };
    if shapes.len() != 1 {
        return Err(Error::Verification(format!(
            "{alpha} has decompositions of both shapes"
        )));
    }
    Ok(ShapeWitness {
        root: alpha.pretty(),
        shape,
        minuend,
        subtrahend,
        decompositions: count,
        epsilon: evaluate(eps, alpha)?,
    })
}

/// Pairings of `x` with the 16 generators; this determines `x` modulo the radical.
pub fn pairing_profile(x: &CentralFiberClass) -> Vec<Rat> {
    (0..B_SIZE)
        .flat_map(|b| [Sign::Plus, Sign::Minus].map(|s| CentralFiberClass::generator(b, s)))
        .map(|g| central_pairing(x, &g))
        .collect()
}

/// Whether the limit of `α` equals a same-sign difference `R^s_b - R^s_{b'}`
/// modulo the radical of the central pairing.
pub fn specializes_as_same_sign_difference(map: &LimitMap, alpha: &LatticeVector) -> bool {
    let profile = pairing_profile(&map.apply(alpha));
    (0..B_SIZE).any(|b| {
        (0..B_SIZE).any(|c| {
            b != c
                && [Sign::Plus, Sign::Minus].iter().any(|&s| {
                    let d =
                        CentralFiberClass::generator(b, s).sub(&CentralFiberClass::generator(c, s));
                    pairing_profile(&d) == profile
                })
        })
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SpecializeReport {
    pub roots: usize,
    pub epsilon_plus: usize,
    pub epsilon_minus: usize,
    /// Roots whose limit is a same-sign difference.
    pub specialize_true: usize,
    pub specialize_false: usize,
    /// Roots where shape, limit form and `ε` disagree.
    pub disagreements: usize,
    pub plus_witness: Option<ShapeWitness>,
    pub minus_witness: Option<ShapeWitness>,
}

impl SpecializeReport {
    pub fn passed(&self) -> bool {
        self.disagreements == 0
    }
}

/// For every root: `ε(α) = +1` iff its shape is same-sign-singleton iff its
/// limit is a same-sign difference.
pub fn specialize_report(pic: &PicardLattice) -> Result<SpecializeReport> {
    let dict = label_exceptionals(pic)?;
    let eps = epsilon_character(&dict)?;
    let sys = root_system_of_x(pic)?;
    let map = LimitMap::new()?;
    let mut report = SpecializeReport {
        roots: sys.len(),
        epsilon_plus: 0,
        epsilon_minus: 0,
        specialize_true: 0,
        specialize_false: 0,
        disagreements: 0,
        plus_witness: None,
        minus_witness: None,
    };
    for alpha in sys.roots() {
        let w = root_shape(&dict, &eps, alpha)?;
        let spec = specializes_as_same_sign_difference(&map, alpha);
        let plus = w.epsilon == 1;
        if plus {
            report.epsilon_plus += 1;
        } else {
            report.epsilon_minus += 1;
        }
        if spec {
            report.specialize_true += 1;
        } else {
            report.specialize_false += 1;
        }
        if plus != (w.shape == RootShape::SameSignSingleton) || plus != spec {
            report.disagreements += 1;
        }
        let slot = if plus {
            &mut report.plus_witness
        } else {
            &mut report.minus_witness
        };
        if slot.is_none() {
            *slot = Some(w);
        }
    }
    Ok(report)
}

/// A permutation of `B`, `perm[b] = σ(b)`.
pub type BPermutation = [u8; B_SIZE as usize];

/// The isometry of `Pic(X)` induced by relabelling `E^s_{b,b'} ↦ E^s_{σb,σb'}`.
pub fn induced_isometry(
    pic: &PicardLattice,
    dict: &LabeledDictionary,
    perm: &BPermutation,
) -> Result<IsometryElement> {
    let relabel = |v: &LatticeVector| -> Result<LatticeVector> {
        let label = dict
            .label_of(v)
            .ok_or_else(|| Error::Inconsistent(format!("{v} is not labelled")))?;
        let (a, b) = label.pair();
        let image = BLabel::new(label.sign(), perm[usize::from(a)], perm[usize::from(b)])?;
        Ok(dict.class_of(&image).expect("all labels present").clone())
    };
    let l12 = pic.line().sub(&pic.e(1)).sub(&pic.e(2));
    let mut images = vec![relabel(&l12)?
        .add(&relabel(&pic.e(1))?)
        .add(&relabel(&pic.e(2))?)];
    for i in 1..=7 {
        images.push(relabel(&pic.e(i))?);
    }
    let g = IsometryElement::from_images(&images);
    if !g.preserves_form(pic.lattice()) {
        return Err(Error::Verification(format!(
            "relabelling by {perm:?} is not an isometry"
        )));
    }
    for c in dict.classes() {
        if g.apply(&c.vec) != relabel(&c.vec)? {
            return Err(Error::Verification(format!(
                "relabelling by {perm:?} is not linear on {}",
                c.vec
            )));
        }
    }
    Ok(g)
}

/// `u ↦ (u·K)K - u`, which swaps `E^+_β` and `E^-_β`.
pub fn sign_swap(pic: &PicardLattice) -> IsometryElement {
    let k = pic.anticanonical();
    let images: Vec<LatticeVector> = (0..8)
        .map(|i| {
            let u = LatticeVector::basis(pic.lattice(), i);
            k.scale(&u.dot(k)).sub(&u)
        })
        .collect();
    IsometryElement::from_images(&images)
}

#[derive(Clone, Debug, Serialize)]
pub struct PermutationReport {
    /// For each adjacent transposition `(b_k b_{k+1})`, the kernel root it reflects in.
    pub transposition_roots: Vec<String>,
    pub transpositions_are_kernel_reflections: bool,
    pub identity_maps_to_identity: bool,
    pub image_order: usize,
    pub weyl_order: u128,
    pub injective: bool,
    pub sign_swap_is_minus_one_on_roots: bool,
    pub sign_swap_swaps_labels: bool,
}

impl PermutationReport {
    pub fn passed(&self) -> bool {
        self.transpositions_are_kernel_reflections
            && self.identity_maps_to_identity
            && self.injective
            && self.image_order as u128 == self.weyl_order
            && self.sign_swap_is_minus_one_on_roots
            && self.sign_swap_swaps_labels
    }
}

/// Verifies that `S(B)` acts faithfully on `Pic(X)` through the Weyl group of
/// the `ε`-kernel, and that the sign swap acts as `-1` on roots.
pub fn permutation_weyl_iso(pic: &PicardLattice) -> Result<PermutationReport> {
    let dict = label_exceptionals(pic)?;
    let eps = epsilon_character(&dict)?;
    let full = root_system_of_x(pic)?;
    let kernel_roots: Vec<LatticeVector> = full
        .roots()
        .iter()
        .filter(|r| matches!(evaluate(&eps, r), Ok(1)))
        .cloned()
        .collect();
    let kernel = RootSystemData::from_roots(pic.lattice(), kernel_roots)?;

    let identity: BPermutation = std::array::from_fn(|i| i as u8);
    let identity_ok = induced_isometry(pic, &dict, &identity)?.is_identity();

    let mut roots = Vec::new();
    let mut all_reflections = true;
    let mut generator_perms: Vec<Vec<usize>> = Vec::new();
    for k in 0..usize::from(B_SIZE) - 1 {
        let mut t = identity;
        t.swap(k, k + 1);
        let g = induced_isometry(pic, &dict, &t)?;
        let root = kernel
            .positive_roots()
            .into_iter()
            .find(|a| IsometryElement::reflection(a) == g);
        match root {
            Some(a) => roots.push(a.pretty()),
            None => {
                all_reflections = false;
                roots.push("none".into());
            }
        }
        generator_perms.push(
            dict.classes()
                .iter()
                .map(|c| {
                    dict.index_of_class(&g.apply(&c.vec))
                        .expect("exceptionals are permuted")
                })
                .collect(),
        );
    }
    // Exceptional classes span Pic(X), so the action on them is faithful.
    let start: Vec<usize> = (0..dict.len()).collect();
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for g in &generator_perms {
            let q: Vec<usize> = p.iter().map(|&i| g[i]).collect();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    let image_order = seen.len();

    let iota = sign_swap(pic);
    let minus_one = full.roots().iter().all(|r| iota.apply(r) == r.neg());
    let swaps = dict
        .classes()
        .iter()
        .zip(dict.labels())
        .all(|(c, l)| dict.label_of(&iota.apply(&c.vec)) == Some(l.partner()));

    Ok(PermutationReport {
        transposition_roots: roots,
        transpositions_are_kernel_reflections: all_reflections,
        identity_maps_to_identity: identity_ok,
        image_order,
        weyl_order: kernel.type_label().weyl_order(),
        // |S(B)| = 8!, so equality of orders is injectivity.
        injective: image_order == 40320,
        sign_swap_is_minus_one_on_roots: minus_one,
        sign_swap_swaps_labels: swaps,
    })
}

/// The three numerical facts about `V_0` used for the ray class `R` and the curve `C`.
pub fn v0_constants_consistent() -> bool {
    let r_sq = ratio(V0_RAY_SQUARE.0, V0_RAY_SQUARE.1);
    let m = rat(V0_PIC_GENERATOR_MULTIPLE);
    let gen_sq = &m * &m * &r_sq;
    let gen_dot_c = &m * rat(V0_CURVE_DOT_RAY);
    gen_sq.is_integer() && gen_dot_c.is_integer() && !(rat(2) * &r_sq).is_integer()
}

/// Central pairing matrix on the 16 generators, in the order `R+b0, R-b0, R+b1, …`.
pub fn central_gram() -> Matrix {
    let gens: Vec<CentralFiberClass> = (0..B_SIZE)
        .flat_map(|b| [Sign::Plus, Sign::Minus].map(|s| CentralFiberClass::generator(b, s)))
        .collect();
    let mut m = Matrix::zeros(GENERATORS, GENERATORS);
    for i in 0..GENERATORS {
        for j in 0..GENERATORS {
            m[(i, j)] = central_pairing(&gens[i], &gens[j]);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delpezzo::build_picard;
    use proptest::prelude::*;

    fn r(b: u8, s: Sign) -> CentralFiberClass {
        CentralFiberClass::generator(b, s)
    }

    #[test]
    fn generator_rules() {
        assert_eq!(
            central_pairing(&r(0, Sign::Plus), &r(0, Sign::Plus)),
            ratio(-3, 4)
        );
        assert_eq!(
            central_pairing(&r(0, Sign::Plus), &r(0, Sign::Minus)),
            rat(1)
        );
        assert_eq!(
            central_pairing(&r(0, Sign::Plus), &r(1, Sign::Minus)),
            rat(0)
        );
        assert_eq!(
            central_pairing(&r(3, Sign::Minus), &r(5, Sign::Minus)),
            ratio(1, 4)
        );
        assert!(central_gram().is_symmetric());
    }

    #[test]
    fn limit_classes() {
        let p01 = limit_class(BLabel::new(Sign::Plus, 0, 1).unwrap()).unwrap();
        assert_eq!(central_pairing(&p01.class, &p01.class), rat(-1));
        let m25 = limit_class(BLabel::new(Sign::Minus, 2, 5).unwrap()).unwrap();
        assert_eq!(central_pairing(&m25.class, &m25.class), rat(-1));
        let p02 = limit_class(BLabel::new(Sign::Plus, 0, 2).unwrap()).unwrap();
        let p23 = limit_class(BLabel::new(Sign::Plus, 2, 3).unwrap()).unwrap();
        let m01 = limit_class(BLabel::new(Sign::Minus, 0, 1).unwrap()).unwrap();
        assert_eq!(central_pairing(&p01.class, &p02.class), rat(0));
        assert_eq!(central_pairing(&p01.class, &p23.class), rat(1));
        assert_eq!(central_pairing(&p01.class, &m01.class), rat(2));
        assert_eq!(p01.class.pretty(), "R+b0 + R+b1");
    }

    #[test]
    fn all_rules_hold() {
        let rep = verify_limit_intersections().unwrap();
        assert!(rep.passed(), "{:?}", rep.mismatches);
        assert_eq!(rep.pairs_checked, 56 * 56);
        assert_eq!(rep.off_diagonal_values, vec!["0", "1", "2"]);
    }

    #[test]
    fn limit_map_preserves_intersections() {
        let pic = build_picard();
        let dict = label_exceptionals(&pic).unwrap();
        let rep = verify_limit_map(&dict).unwrap();
        assert!(rep.passed(), "{rep:?}");
        // K has no canonical limit: its images differ by radical classes.
        let k1 = limit_class(BLabel::new(Sign::Plus, 0, 1).unwrap())
            .unwrap()
            .class
            .add(
                &limit_class(BLabel::new(Sign::Minus, 0, 1).unwrap())
                    .unwrap()
                    .class,
            );
        let k2 = limit_class(BLabel::new(Sign::Plus, 2, 3).unwrap())
            .unwrap()
            .class
            .add(
                &limit_class(BLabel::new(Sign::Minus, 2, 3).unwrap())
                    .unwrap()
                    .class,
            );
        assert_ne!(k1, k2);
        assert!(in_radical(&k1.sub(&k2)));
    }

    #[test]
    fn shapes_follow_epsilon() {
        let pic = build_picard();
        let dict = label_exceptionals(&pic).unwrap();
        let eps = epsilon_character(&dict).unwrap();
        let e12 = pic.e(1).sub(&pic.e(2));
        let w = root_shape(&dict, &eps, &e12).unwrap();
        assert_eq!(w.shape, RootShape::SameSignSingleton);
        assert_eq!(w.epsilon, 1);
        let k = pic.anticanonical();
        let a = k.sub(&pic.line()).add(&pic.e(1));
        assert_eq!(
            root_shape(&dict, &eps, &a).unwrap().shape,
            RootShape::SameSignSingleton
        );
        // E+{b1,b2} - E-{b3,b4} = (l - e1 - e2) - (K - (l - e3 - e4))
        let b = pic.class(-1, [0, 0, 0, 0, 1, 1, 1]);
        let w = root_shape(&dict, &eps, &b).unwrap();
        assert_eq!(w.shape, RootShape::OppositeSignDisjoint);
        assert_eq!(w.epsilon, -1);

        let rep = specialize_report(&pic).unwrap();
        assert!(rep.passed());
        assert_eq!((rep.epsilon_plus, rep.epsilon_minus), (56, 70));
        assert_eq!((rep.specialize_true, rep.specialize_false), (56, 70));
    }

    #[test]
    fn permutations_and_sign_swap() {
        let pic = build_picard();
        let dict = label_exceptionals(&pic).unwrap();
        let mut t: BPermutation = std::array::from_fn(|i| i as u8);
        t.swap(1, 2);
        let e12 = pic.e(1).sub(&pic.e(2));
        assert_eq!(
            induced_isometry(&pic, &dict, &t).unwrap(),
            IsometryElement::reflection(&e12)
        );
        assert_eq!(sign_swap(&pic).apply(&e12), e12.neg());
        let rep = permutation_weyl_iso(&pic).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.image_order, 40320);
    }

    #[test]
    fn v0_constants() {
        assert!(v0_constants_consistent());
    }

    fn small_class() -> impl Strategy<Value = CentralFiberClass> {
        prop::collection::vec((-6i64..=6, 1i64..=4), GENERATORS).prop_map(|v| {
            CentralFiberClass::from_coeffs(v.into_iter().map(|(n, d)| ratio(n, d)).collect())
                .unwrap()
        })
    }

    proptest! {
        #[test]
        fn pairing_is_symmetric_and_bilinear(x in small_class(), y in small_class(), z in small_class(), a in -5i64..5) {
            prop_assert_eq!(central_pairing(&x, &y), central_pairing(&y, &x));
            let lhs = central_pairing(&x.scale(&rat(a)).add(&y), &z);
            let rhs = rat(a) * central_pairing(&x, &z) + central_pairing(&y, &z);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
