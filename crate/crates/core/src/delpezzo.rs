//! The Picard lattice of a degree-2 del Pezzo surface, its exceptional classes,
//! the `B`-labelling of those classes and the sign character `ε`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::characters::root_lattice;
use crate::lattice::roots::vectors_of_square;
use crate::lattice::{
    cartan_type, enumerate_roots, sublattice_index, BilinearLattice, CartanType, LatticeRef,
    LatticeVector, RootSystemData, SignCharacter,
};
use crate::rational::{rat, Matrix};

/// Number of points of `B`.
pub const B_SIZE: u8 = 8;

#[derive(Clone, Debug)]
pub struct PicardLattice {
    base: LatticeRef,
    k: LatticeVector,
}

/// `Pic(X)` with basis `l, e1, …, e7`, form `diag(1, -1, …, -1)` and `K = 3l - Σ e_i`.
pub fn build_picard() -> PicardLattice {
    let base = BilinearLattice::diagonal(
        &[1, -1, -1, -1, -1, -1, -1, -1],
        &["l", "e1", "e2", "e3", "e4", "e5", "e6", "e7"],
    )
    .expect("diagonal form is valid");
    let k = LatticeVector::from_i64(&base, &[3, -1, -1, -1, -1, -1, -1, -1]).expect("rank 8");
    PicardLattice { base, k }
}

impl PicardLattice {
    pub fn lattice(&self) -> &LatticeRef {
        &self.base
    }

    pub fn anticanonical(&self) -> &LatticeVector {
        &self.k
    }

    pub fn line(&self) -> LatticeVector {
        LatticeVector::basis(&self.base, 0)
    }

    /// `e_i` for `1 <= i <= 7`.
    pub fn e(&self, i: usize) -> LatticeVector {
        assert!((1..=7).contains(&i), "e_{i} out of range");
        LatticeVector::basis(&self.base, i)
    }

    /// `a·l + Σ b_i e_i`.
    pub fn class(&self, a: i64, b: [i64; 7]) -> LatticeVector {
        let mut c = vec![a];
        c.extend(b);
        LatticeVector::from_i64(&self.base, &c).expect("rank 8")
    }

    pub fn is_exceptional(&self, v: &LatticeVector) -> bool {
        v.is_integral() && v.square() == rat(-1) && v.dot(&self.k) == rat(1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExceptionalClass {
    pub vec: LatticeVector,
}

/// All classes with `E·E = -1`, `E·K = 1`, in lexicographic coordinate order.
pub fn enumerate_exceptionals(pic: &PicardLattice) -> Result<Vec<ExceptionalClass>> {
    let found = vectors_of_square(pic.lattice(), Some((pic.anticanonical(), rat(1))), &rat(-1))?;
    Ok(found
        .into_iter()
        .map(|vec| ExceptionalClass { vec })
        .collect())
}

/// Index pairs `(i, j)`, `i < j`, with `exceptionals[j] = K - exceptionals[i]`.
pub fn partner_pairs(
    pic: &PicardLattice,
    exceptionals: &[ExceptionalClass],
) -> Result<Vec<(usize, usize)>> {
    let position: BTreeMap<&LatticeVector, usize> = exceptionals
        .iter()
        .enumerate()
        .map(|(i, e)| (&e.vec, i))
        .collect();
    let mut pairs = Vec::new();
    for (i, e) in exceptionals.iter().enumerate() {
        let partner = pic.anticanonical().sub(&e.vec);
        let j = *position
            .get(&partner)
            .ok_or_else(|| Error::Inconsistent(format!("K - {} is not exceptional", e.vec)))?;
        if j == i {
            return Err(Error::Inconsistent(format!("{} is its own partner", e.vec)));
        }
        if e.vec.dot(&partner) != rat(2) {
            return Err(Error::Inconsistent(format!(
                "{} meets its partner in {}",
                e.vec,
                e.vec.dot(&partner)
            )));
        }
        if i < j {
            pairs.push((i, j));
        }
    }
    Ok(pairs)
}

/// The roots of `Pic(X)`: `(-2)`-classes orthogonal to `K`.
pub fn root_system_of_x(pic: &PicardLattice) -> Result<RootSystemData> {
    let roots = enumerate_roots(pic.lattice(), Some(pic.anticanonical()))?;
    let sys = RootSystemData::from_roots(pic.lattice(), roots)?;
    if sys.type_label().to_string() != "E7" {
        return Err(Error::Inconsistent(format!(
            "R(X) has type {}",
            sys.type_label()
        )));
    }
    Ok(sys)
}

/// For each root `α` (in the system's order) one pair of indices `(E, E')`
/// into `exceptionals` with `α = E - E'` and `E·E' = 0`.
pub fn root_differences(
    system: &RootSystemData,
    exceptionals: &[ExceptionalClass],
) -> Result<Vec<(usize, usize)>> {
    let position: BTreeMap<&LatticeVector, usize> = exceptionals
        .iter()
        .enumerate()
        .map(|(i, e)| (&e.vec, i))
        .collect();
    system
        .roots()
        .iter()
        .map(|alpha| {
            exceptionals
                .iter()
                .enumerate()
                .find_map(|(i, e)| {
                    let other = e.vec.sub(alpha);
                    let j = *position.get(&other)?;
                    e.vec.dot(&other).is_zero().then_some((i, j))
                })
                .ok_or_else(|| {
                    Error::Verification(format!(
                        "root {alpha} is not a difference of disjoint exceptionals"
                    ))
                })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_char(self.symbol())
    }
}

/// `E^s_{b_i, b_j}`: a sign and a 2-element subset of `B = {b0, …, b7}`, stored with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BLabel {
    sign: Sign,
    pair: (u8, u8),
}

impl BLabel {
    pub fn new(sign: Sign, a: u8, b: u8) -> Result<Self> {
        if a == b || a >= B_SIZE || b >= B_SIZE {
            return Err(Error::Inconsistent(format!("invalid pair {{b{a}, b{b}}}")));
        }
        Ok(BLabel {
            sign,
            pair: (a.min(b), a.max(b)),
        })
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn pair(&self) -> (u8, u8) {
        self.pair
    }

    pub fn partner(&self) -> BLabel {
        BLabel {
            sign: self.sign.flip(),
            pair: self.pair,
        }
    }

    pub fn pair_text(&self) -> String {
        format!("{{b{},b{}}}", self.pair.0, self.pair.1)
    }

    /// Number of common points of the two pairs.
    pub fn overlap(&self, other: &BLabel) -> usize {
        let (a, b) = self.pair;
        [other.pair.0, other.pair.1]
            .iter()
            .filter(|&&x| x == a || x == b)
            .count()
    }

    /// All 56 labels, ordered by pair then sign.
    pub fn all() -> Vec<BLabel> {
        let mut out = Vec::with_capacity(56);
        for a in 0..B_SIZE {
            for b in a + 1..B_SIZE {
                for sign in [Sign::Plus, Sign::Minus] {
                    out.push(BLabel { sign, pair: (a, b) });
                }
            }
        }
        out
    }
}

impl fmt::Display for BLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}{}", self.sign.symbol(), self.pair_text())
    }
}

impl Serialize for BLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The bijection between the 56 exceptional classes and the 56 labels.
#[derive(Clone, Debug)]
pub struct LabeledDictionary {
    classes: Vec<ExceptionalClass>,
    labels: Vec<BLabel>,
    by_class: BTreeMap<LatticeVector, usize>,
    by_label: BTreeMap<BLabel, usize>,
}

impl LabeledDictionary {
    pub fn classes(&self) -> &[ExceptionalClass] {
        &self.classes
    }

    pub fn labels(&self) -> &[BLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn label_of(&self, v: &LatticeVector) -> Option<BLabel> {
        self.by_class.get(v).map(|&i| self.labels[i])
    }

    pub fn class_of(&self, label: &BLabel) -> Option<&LatticeVector> {
        self.by_label.get(label).map(|&i| &self.classes[i].vec)
    }

    pub fn index_of_class(&self, v: &LatticeVector) -> Option<usize> {
        self.by_class.get(v).copied()
    }

    /// Index of `K - E` for the class at `i`.
    pub fn partner_index(&self, i: usize) -> usize {
        self.by_label[&self.labels[i].partner()]
    }
}

/// Labels every exceptional class using the four families
/// `e_i = E^-_{b0,bi}`, `K - e_i = E^+_{b0,bi}`, `l - e_i - e_j = E^+_{bi,bj}`,
/// `K - (l - e_i - e_j) = E^-_{bi,bj}`, and checks they exhaust all 56.
pub fn label_exceptionals(pic: &PicardLattice) -> Result<LabeledDictionary> {
    let k = pic.anticanonical();
    let mut entries: Vec<(LatticeVector, BLabel)> = Vec::with_capacity(56);
    for i in 1..=7u8 {
        let e = pic.e(usize::from(i));
        entries.push((e.clone(), BLabel::new(Sign::Minus, 0, i)?));
        entries.push((k.sub(&e), BLabel::new(Sign::Plus, 0, i)?));
    }
    for i in 1..=7u8 {
        for j in i + 1..=7 {
            let c = pic
                .line()
                .sub(&pic.e(usize::from(i)))
                .sub(&pic.e(usize::from(j)));
            entries.push((k.sub(&c), BLabel::new(Sign::Minus, i, j)?));
            entries.push((c, BLabel::new(Sign::Plus, i, j)?));
        }
    }
    let all = enumerate_exceptionals(pic)?;
    let mut classes = Vec::with_capacity(56);
    let mut labels = Vec::with_capacity(56);
    let mut by_class = BTreeMap::new();
    let mut by_label = BTreeMap::new();
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    for (i, (v, label)) in entries.into_iter().enumerate() {
        if !pic.is_exceptional(&v) {
            return Err(Error::Inconsistent(format!(
                "{v} labelled {label} is not exceptional"
            )));
        }
        if by_class.insert(v.clone(), i).is_some() || by_label.insert(label, i).is_some() {
            return Err(Error::Inconsistent(format!("{v} / {label} occurs twice")));
        }
        classes.push(ExceptionalClass { vec: v });
        labels.push(label);
    }
    if classes != all {
        return Err(Error::Inconsistent(format!(
            "dictionary covers {} classes, enumeration found {}",
            classes.len(),
            all.len()
        )));
    }
    let dict = LabeledDictionary {
        classes,
        labels,
        by_class,
        by_label,
    };
    for i in 0..dict.len() {
        let j = dict.partner_index(i);
        if dict.classes[j].vec != k.sub(&dict.classes[i].vec) {
            return Err(Error::Inconsistent(format!(
                "partner of {} is not K - {}",
                dict.labels[i], dict.labels[i]
            )));
        }
    }
    Ok(dict)
}

/// The character of `Pic(X)` with value `±1` on `E^±_β`, solved over `GF(2)`
/// on the basis `l, e1, …, e7`. Fails if the 56 constraints are inconsistent
/// or do not determine the character.
pub fn epsilon_character(dict: &LabeledDictionary) -> Result<SignCharacter> {
    let n = dict.classes.first().map_or(0, |c| c.vec.coords().len());
    // Each row: bit k = parity of coordinate k, bit n = 1 when the value is -1.
    let mut rows: Vec<u32> = Vec::with_capacity(dict.len());
    for (c, label) in dict.classes.iter().zip(&dict.labels) {
        let mut row = 0u32;
        for (k, x) in c.vec.coords().iter().enumerate() {
            if !c.vec.is_integral() {
                return Err(Error::Inconsistent("non-integral exceptional class".into()));
            }
            if (x.to_integer() % 2u8).to_i64() != Some(0) {
                row |= 1 << k;
            }
        }
        if label.sign == Sign::Minus {
            row |= 1 << n;
        }
        rows.push(row);
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| rows[i] >> col & 1 == 1) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i] >> col & 1 == 1 {
                rows[i] ^= rows[r];
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|&row| row != 0) {
        return Err(Error::Inconsistent(
            "sign labels are not a character".into(),
        ));
    }
    if pivots.len() != n {
        return Err(Error::Inconsistent(
            "sign labels do not determine a unique character".into(),
        ));
    }
    let mut values = vec![1i8; n];
    for (i, &col) in pivots.iter().enumerate() {
        if rows[i] >> n & 1 == 1 {
            values[col] = -1;
        }
    }
    SignCharacter::new(values)
}

/// Value of a character given on the Picard basis at a class.
pub fn evaluate(chi: &SignCharacter, v: &LatticeVector) -> Result<i8> {
    chi.evaluate(v.coords())
}

/// Certified data on the roots of `ker ε`.
#[derive(Clone, Debug)]
pub struct KernelReport {
    pub system: RootSystemData,
    pub count: usize,
    pub type_label: CartanType,
    /// `(-2l + e2 + … + e7, e1 - e2, …, e6 - e7)`.
    pub stated_basis: Vec<LatticeVector>,
    pub stated_basis_certified: bool,
    /// Index of the span of the kernel roots in `Q(E7)`.
    pub index_in_root_lattice: Option<u64>,
}

pub fn a7_stated_basis(pic: &PicardLattice) -> Vec<LatticeVector> {
    let mut basis = vec![pic.class(-2, [0, 1, 1, 1, 1, 1, 1])];
    basis.extend((1..7).map(|i| pic.e(i).sub(&pic.e(i + 1))));
    basis
}

pub fn kernel_roots_report(pic: &PicardLattice, eps: &SignCharacter) -> Result<KernelReport> {
    let full = root_system_of_x(pic)?;
    let kernel: Vec<LatticeVector> = full
        .roots()
        .iter()
        .filter(|r| matches!(evaluate(eps, r), Ok(1)))
        .cloned()
        .collect();
    let system = RootSystemData::from_roots(pic.lattice(), kernel)?;
    let stated = a7_stated_basis(pic);
    let certified = stated
        .iter()
        .all(|b| b.square() == rat(-2) && matches!(evaluate(eps, b), Ok(1)))
        && system.is_root_basis(&stated);

    let qr = root_lattice(&full)?;
    let in_qr = system
        .roots()
        .iter()
        .map(|r| {
            let c = full
                .simple_coords(r)
                .ok_or_else(|| Error::Inconsistent(format!("{r} outside Q(E7)")))?;
            LatticeVector::new(&qr, c)
        })
        .collect::<Result<Vec<_>>>()?;
    let index = sublattice_index(&in_qr, &qr)?.as_u64();
    Ok(KernelReport {
        count: system.len(),
        type_label: system.type_label().clone(),
        system,
        stated_basis: stated,
        stated_basis_certified: certified,
        index_in_root_lattice: index,
    })
}

/// A genus-3 stratum, named by its partition of 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StratumKey {
    OneOneOneOne,
    TwoOneOne,
    TwoTwo,
    ThreeOne,
    Four,
}

impl StratumKey {
    pub const ALL: [StratumKey; 5] = [
        StratumKey::Four,
        StratumKey::ThreeOne,
        StratumKey::TwoTwo,
        StratumKey::TwoOneOne,
        StratumKey::OneOneOneOne,
    ];

    pub fn parts(self) -> &'static [u32] {
        match self {
            StratumKey::OneOneOneOne => &[1, 1, 1, 1],
            StratumKey::TwoOneOne => &[2, 1, 1],
            StratumKey::TwoTwo => &[2, 2],
            StratumKey::ThreeOne => &[3, 1],
            StratumKey::Four => &[4],
        }
    }

    /// Short name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            StratumKey::OneOneOneOne => "(1^4)",
            StratumKey::TwoOneOne => "(2,1^2)",
            StratumKey::TwoTwo => "(2^2)",
            StratumKey::ThreeOne => "(3,1)",
            StratumKey::Four => "(4)",
        }
    }
}

impl fmt::Display for StratumKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StratumKey {
    type Err = Error;

    /// Accepts `(2,1^2)`, `2,1,1`, `211`, `(2,1²)` and similar spellings.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s
            .chars()
            .filter(|c| !matches!(c, '(' | ')' | ' ' | ',' | 'H' | 'P'))
            .flat_map(|c| match c {
                '²' => vec!['^', '2'],
                '⁴' => vec!['^', '4'],
                c => vec![c],
            })
            .collect();
        let mut parts = Vec::new();
        let mut chars = cleaned.chars().peekable();
        while let Some(c) = chars.next() {
            let d = c
                .to_digit(10)
                .ok_or_else(|| Error::UnknownKey(s.to_string()))?;
            let mut times = 1;
            if chars.peek() == Some(&'^') {
                chars.next();
                times = chars
                    .next()
                    .and_then(|e| e.to_digit(10))
                    .ok_or_else(|| Error::UnknownKey(s.to_string()))?;
            }
            parts.extend(std::iter::repeat_n(d, times as usize));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        StratumKey::ALL
            .into_iter()
            .find(|k| k.parts() == parts.as_slice())
            .ok_or_else(|| Error::UnknownKey(s.to_string()))
    }
}

/// The restricted root system of a stratum and its boundary subsystem.
#[derive(Clone, Debug)]
pub struct StratumSubsystems {
    pub key: StratumKey,
    pub ambient: RootSystemData,
    pub boundary: Option<RootSystemData>,
    /// Exceptional classes orthogonal to the ambient system, for the `E6` strata.
    pub component_classes: Vec<LatticeVector>,
}

pub fn e6_stated_basis(pic: &PicardLattice) -> Vec<LatticeVector> {
    let mut basis = vec![pic.class(1, [-1, -1, -1, 0, 0, 0, 0])];
    basis.extend((1..6).map(|i| pic.e(i).sub(&pic.e(i + 1))));
    basis
}

fn chain(pic: &PicardLattice, last: usize) -> Vec<LatticeVector> {
    (1..last).map(|i| pic.e(i).sub(&pic.e(i + 1))).collect()
}

fn expect_type(sys: &RootSystemData, want: &str) -> Result<()> {
    if sys.type_label().to_string() != want {
        return Err(Error::Inconsistent(format!(
            "expected {want}, found {}",
            sys.type_label()
        )));
    }
    Ok(())
}

pub fn stratum_subsystems(pic: &PicardLattice, key: StratumKey) -> Result<StratumSubsystems> {
    let full = root_system_of_x(pic)?;
    let e6 = |pic: &PicardLattice| -> Result<(RootSystemData, Vec<LatticeVector>)> {
        let stated = RootSystemData::from_simple_roots(pic.lattice(), e6_stated_basis(pic))?;
        expect_type(&stated, "E6")?;
        let components: Vec<LatticeVector> = enumerate_exceptionals(pic)?
            .into_iter()
            .map(|c| c.vec)
            .filter(|v| stated.simple_roots().iter().all(|a| v.dot(a).is_zero()))
            .collect();
        let perp: Vec<LatticeVector> = full
            .roots()
            .iter()
            .filter(|r| components.iter().all(|c| r.dot(c).is_zero()))
            .cloned()
            .collect();
        if perp != stated.roots() {
            return Err(Error::Inconsistent(
                "E6 system differs from the complement of its component classes".into(),
            ));
        }
        Ok((stated, components))
    };
    let (ambient, boundary, component_classes) = match key {
        StratumKey::OneOneOneOne => {
            let eps = epsilon_character(&label_exceptionals(pic)?)?;
            let rep = kernel_roots_report(pic, &eps)?;
            let b = RootSystemData::from_simple_roots(pic.lattice(), rep.stated_basis)?;
            expect_type(&b, "A7")?;
            (full, Some(b), Vec::new())
        }
        StratumKey::TwoOneOne => {
            let b = RootSystemData::from_simple_roots(pic.lattice(), chain(pic, 7))?;
            expect_type(&b, "A6")?;
            (full, Some(b), Vec::new())
        }
        StratumKey::ThreeOne => (full, None, Vec::new()),
        StratumKey::TwoTwo => {
            let (a, comps) = e6(pic)?;
            let b = RootSystemData::from_simple_roots(pic.lattice(), chain(pic, 6))?;
            expect_type(&b, "A5")?;
            if !b.roots().iter().all(|r| a.contains(r)) {
                return Err(Error::Inconsistent("A5 not inside E6".into()));
            }
            (a, Some(b), comps)
        }
        StratumKey::Four => {
            let (a, comps) = e6(pic)?;
            (a, None, comps)
        }
    };
    if !boundary
        .as_ref()
        .is_none_or(|b| b.roots().iter().all(|r| ambient.contains(r)))
    {
        return Err(Error::Inconsistent(format!(
            "boundary of {key} leaves the ambient system"
        )));
    }
    Ok(StratumSubsystems {
        key,
        ambient,
        boundary,
        component_classes,
    })
}

/// One row of the labelled exceptional table.
#[derive(Clone, Debug, Serialize)]
pub struct ExceptionalRow {
    pub index: usize,
    pub coords: Vec<String>,
    pub class: String,
    pub sign: Sign,
    pub pair: String,
    pub partner: usize,
    pub epsilon: i8,
}

pub fn exceptional_table(pic: &PicardLattice) -> Result<Vec<ExceptionalRow>> {
    let dict = label_exceptionals(pic)?;
    let eps = epsilon_character(&dict)?;
    dict.classes
        .iter()
        .zip(&dict.labels)
        .enumerate()
        .map(|(i, (c, label))| {
            Ok(ExceptionalRow {
                index: i,
                coords: c.vec.coord_strings(),
                class: c.vec.pretty(),
                sign: label.sign,
                pair: label.pair_text(),
                partner: dict.partner_index(i),
                epsilon: evaluate(&eps, &c.vec)?,
            })
        })
        .collect()
}

/// Gram matrix of a list of vectors.
pub fn gram_of(vs: &[LatticeVector]) -> Matrix {
    let n = vs.len();
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = vs[i].dot(&vs[j]);
        }
    }
    g
}

/// Rank over `Q` of a list of vectors.
pub fn span_rank(vs: &[LatticeVector]) -> usize {
    Matrix::from_rows(vs.iter().map(|v| v.coords().to_vec()).collect()).rank()
}

/// Type of the roots of `system` in the kernel of `chi`.
pub fn kernel_type(system: &RootSystemData, chi: &SignCharacter) -> Result<CartanType> {
    let kernel: Vec<LatticeVector> = system
        .roots()
        .iter()
        .filter(|r| matches!(evaluate(chi, r), Ok(1)))
        .cloned()
        .collect();
    Ok(cartan_type(&kernel)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn picard_basics() {
        let pic = build_picard();
        let k = pic.anticanonical();
        assert_eq!(k.square(), rat(2));
        assert_eq!(k.dot(&pic.e(1)), rat(1));
        assert_eq!(pic.lattice().gram()[(0, 0)], rat(1));
        assert_eq!(pic.lattice().gram()[(7, 7)], rat(-1));
    }

    #[test]
    fn fifty_six_exceptionals_in_28_pairs() {
        let pic = build_picard();
        let exc = enumerate_exceptionals(&pic).unwrap();
        assert_eq!(exc.len(), 56);
        assert!(exc.iter().any(|e| e.vec == pic.e(1)));
        assert_eq!(partner_pairs(&pic, &exc).unwrap().len(), 28);
        let span: Vec<LatticeVector> = exc.iter().map(|e| e.vec.clone()).collect();
        assert_eq!(span_rank(&span), 8);
    }

    #[test]
    fn e7_roots_are_differences() {
        let pic = build_picard();
        let sys = root_system_of_x(&pic).unwrap();
        assert_eq!(sys.len(), 126);
        let exc = enumerate_exceptionals(&pic).unwrap();
        assert_eq!(root_differences(&sys, &exc).unwrap().len(), 126);
    }

    #[test]
    fn dictionary_and_epsilon() {
        let pic = build_picard();
        let dict = label_exceptionals(&pic).unwrap();
        assert_eq!(dict.len(), 56);
        assert_eq!(
            dict.label_of(&pic.e(3)),
            Some(BLabel::new(Sign::Minus, 0, 3).unwrap())
        );
        let l12 = pic.class(1, [-1, -1, 0, 0, 0, 0, 0]);
        assert_eq!(
            dict.label_of(&l12),
            Some(BLabel::new(Sign::Plus, 1, 2).unwrap())
        );
        let k3 = pic.anticanonical().sub(&pic.e(3));
        assert_eq!(
            dict.label_of(&k3),
            Some(BLabel::new(Sign::Plus, 0, 3).unwrap())
        );

        let eps = epsilon_character(&dict).unwrap();
        assert_eq!(eps.values_on_basis(), &[1, -1, -1, -1, -1, -1, -1, -1]);
        assert_eq!(evaluate(&eps, pic.anticanonical()).unwrap(), -1);
        assert_eq!(evaluate(&eps, &l12).unwrap(), 1);
    }

    #[test]
    fn inconsistent_signs_are_rejected() {
        let pic = build_picard();
        let mut dict = label_exceptionals(&pic).unwrap();
        let i = dict.index_of_class(&pic.e(1)).unwrap();
        dict.labels[i] = dict.labels[i].partner();
        assert!(epsilon_character(&dict).is_err());
    }

    #[test]
    fn a7_kernel() {
        let pic = build_picard();
        let eps = epsilon_character(&label_exceptionals(&pic).unwrap()).unwrap();
        let rep = kernel_roots_report(&pic, &eps).unwrap();
        assert_eq!(rep.count, 56);
        assert_eq!(rep.type_label.to_string(), "A7");
        assert!(rep.stated_basis_certified);
        assert_eq!(rep.index_in_root_lattice, Some(2));
    }

    #[test]
    fn stratum_keys_parse() {
        for k in StratumKey::ALL {
            assert_eq!(k.name().parse::<StratumKey>().unwrap(), k);
        }
        assert_eq!(
            "2,1,1".parse::<StratumKey>().unwrap(),
            StratumKey::TwoOneOne
        );
        assert_eq!("(2,2)".parse::<StratumKey>().unwrap(), StratumKey::TwoTwo);
        assert_eq!(
            "(1⁴)".parse::<StratumKey>().unwrap(),
            StratumKey::OneOneOneOne
        );
        assert_eq!(
            "(2,1²)".parse::<StratumKey>().unwrap(),
            StratumKey::TwoOneOne
        );
        assert!("(5)".parse::<StratumKey>().is_err());
    }

    #[test]
    fn stratum_systems() {
        let pic = build_picard();
        let s = stratum_subsystems(&pic, StratumKey::TwoTwo).unwrap();
        assert_eq!(s.ambient.type_label().to_string(), "E6");
        assert_eq!(s.ambient.len(), 72);
        assert_eq!(s.boundary.unwrap().type_label().to_string(), "A5");
        let mut comps = s.component_classes.clone();
        comps.sort();
        let mut want = vec![pic.e(7), pic.anticanonical().sub(&pic.e(7))];
        want.sort();
        assert_eq!(comps, want);
        let s = stratum_subsystems(&pic, StratumKey::TwoOneOne).unwrap();
        assert_eq!(s.boundary.unwrap().type_label().to_string(), "A6");
        assert!(stratum_subsystems(&pic, StratumKey::Four)
            .unwrap()
            .boundary
            .is_none());
        assert!(stratum_subsystems(&pic, StratumKey::ThreeOne)
            .unwrap()
            .boundary
            .is_none());
        let s = stratum_subsystems(&pic, StratumKey::OneOneOneOne).unwrap();
        assert_eq!(s.boundary.unwrap().len(), 56);
    }
}
