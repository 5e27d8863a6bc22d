//! Affine Coxeter diagrams of type Ê6 and Ê7 and an exact model of their
//! alcove geometry.
//!
//! Points are written in coordinates on the simple roots `α_1, …, α_n` of the
//! finite system, with the positive form `⟨x, y⟩ = -x·y` (so `⟨α, α⟩ = 2`).
//! The fundamental alcove is `K = {x : ⟨x, α_j⟩ >= 0, ⟨x, α̃⟩ <= 1}`, with
//! wall functionals `a_j(x) = ⟨x, α_j⟩` for `j >= 1` and `a_0(x) = 1 - ⟨x, α̃⟩`.
//! Vertex `0` of the affine diagram is the extra node; vertex `j >= 1` is the
//! Bourbaki node `j` of the finite diagram.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{BilinearLattice, CartanType, LatticeVector, RootSystemData};
use crate::rational::{fmt_rat, fmt_vec, rat, Matrix, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AffineType {
    E6,
    E7,
}

impl AffineType {
    pub fn finite(self) -> CartanType {
        match self {
            AffineType::E6 => CartanType::simple('E', 6),
            AffineType::E7 => CartanType::simple('E', 7),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AffineType::E6 => "E6~",
            AffineType::E7 => "E7~",
        }
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AffineType {
    type Err = Error;

    /// Accepts `E6~`, `Ê6`, `affine-E6` and plain `E6` (likewise for E7).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        let t = t
            .trim_start_matches("AFFINE-")
            .trim_end_matches('~')
            .replace('Ê', "E");
        match t.as_str() {
            "E6" => Ok(AffineType::E6),
            "E7" => Ok(AffineType::E7),
            _ => Err(Error::UnknownKey(format!("affine type {s:?}"))),
        }
    }
}

impl Serialize for AffineType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A simply laced Coxeter diagram on labelled vertices; absent edges mean `m = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterDiagram {
    vertices: Vec<usize>,
    edges: BTreeSet<(usize, usize)>,
}

impl CoxeterDiagram {
    pub fn new(
        vertices: Vec<usize>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let set: BTreeSet<usize> = vertices.iter().copied().collect();
        if set.len() != vertices.len() {
            return Err(Error::Inconsistent("repeated vertex".into()));
        }
        let mut e = BTreeSet::new();
        for (a, b) in edges {
            if a == b || !set.contains(&a) || !set.contains(&b) {
                return Err(Error::Inconsistent(format!("bad edge {a}-{b}")));
            }
            e.insert((a.min(b), a.max(b)));
        }
        let mut vertices = vertices;
        vertices.sort_unstable();
        Ok(CoxeterDiagram { vertices, edges: e })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Order of `s_a s_b`.
    pub fn m(&self, a: usize, b: usize) -> u32 {
        if a == b {
            1
        } else if self.has_edge(a, b) {
            3
        } else {
            2
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|(a, b)| *a == v || *b == v)
            .count()
    }

    /// The subdiagram on `keep`.
    pub fn induced(&self, keep: &[usize]) -> CoxeterDiagram {
        let set: BTreeSet<usize> = keep
            .iter()
            .copied()
            .filter(|v| self.vertices.contains(v))
            .collect();
        CoxeterDiagram {
            vertices: set.iter().copied().collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|(a, b)| set.contains(a) && set.contains(b))
                .collect(),
        }
    }

    /// `Γ_i`: remove `i` and its edges.
    pub fn without(&self, i: usize) -> CoxeterDiagram {
        let keep: Vec<usize> = self.vertices.iter().copied().filter(|&v| v != i).collect();
        self.induced(&keep)
    }

    /// ADE type, or an error for diagrams of infinite type.
    pub fn cartan_type(&self) -> Result<CartanType> {
        let n = self.vertices.len();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match self.m(self.vertices[i], self.vertices[j]) {
                        1 => 2,
                        3 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        CartanType::from_cartan(&cartan).map_err(|e| Error::InfiniteType(format!("{self}: {e}")))
    }

    pub fn is_finite_type(&self) -> bool {
        self.cartan_type().is_ok()
    }

    /// All vertex permutations preserving the edge set, identity first.
    pub fn automorphisms(&self) -> Vec<DiagramAutomorphism> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        let mut image = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.extend_automorphism(&mut image, &mut used, &mut out);
        out.sort_by_key(|g| !g.is_identity());
        out
    }

    fn extend_automorphism(
        &self,
        image: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<DiagramAutomorphism>,
    ) {
        let n = self.vertices.len();
        let k = image.len();
        if k == n {
            let perm: Vec<(usize, usize)> = self
                .vertices
                .iter()
                .copied()
                .zip(image.iter().map(|&j| self.vertices[j]))
                .collect();
            out.push(DiagramAutomorphism::from_pairs(&perm));
            return;
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            let ok = (0..k).all(|p| {
                self.has_edge(self.vertices[p], self.vertices[k])
                    == self.has_edge(self.vertices[image[p]], self.vertices[cand])
            }) && self.degree(self.vertices[k]) == self.degree(self.vertices[cand]);
            if ok {
                used[cand] = true;
                image.push(cand);
                self.extend_automorphism(image, used, out);
                image.pop();
                used[cand] = false;
            }
        }
    }

    pub fn is_automorphism(&self, g: &DiagramAutomorphism) -> bool {
        self.vertices
            .iter()
            .all(|&v| self.vertices.contains(&g.apply(v)))
            && self.vertices.iter().all(|&a| {
                self.vertices
                    .iter()
                    .all(|&b| self.has_edge(a, b) == self.has_edge(g.apply(a), g.apply(b)))
            })
    }
}

impl fmt::Display for CoxeterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.vertices.iter().map(ToString::to_string).collect();
        let e: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "{{{}}} [{}]", v.join(","), e.join(" "))
    }
}

/// A permutation of diagram vertex labels; labels not mentioned are fixed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagramAutomorphism {
    perm: Vec<usize>,
}

impl DiagramAutomorphism {
    pub fn identity(n: usize) -> Self {
        DiagramAutomorphism {
            perm: (0..n).collect(),
        }
    }

    pub fn from_images(perm: Vec<usize>) -> Result<Self> {
        let set: BTreeSet<usize> = perm.iter().copied().collect();
        if set.len() != perm.len() || perm.iter().any(|&x| x >= perm.len()) {
            return Err(Error::Inconsistent(format!(
                "{perm:?} is not a permutation"
            )));
        }
        Ok(DiagramAutomorphism { perm })
    }

    fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        let n = pairs.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
        let mut perm: Vec<usize> = (0..n).collect();
        for &(a, b) in pairs {
            perm[a] = b;
        }
        DiagramAutomorphism { perm }
    }

    pub fn apply(&self, v: usize) -> usize {
        self.perm.get(v).copied().unwrap_or(v)
    }

    pub fn images(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &DiagramAutomorphism) -> DiagramAutomorphism {
        let n = self.perm.len().max(other.perm.len());
        DiagramAutomorphism {
            perm: (0..n).map(|v| self.apply(other.apply(v))).collect(),
        }
    }

    pub fn inverse(&self) -> DiagramAutomorphism {
        let mut inv = vec![0; self.perm.len()];
        for (i, &j) in self.perm.iter().enumerate() {
            inv[j] = i;
        }
        DiagramAutomorphism { perm: inv }
    }

    /// Cycle notation, e.g. `(0 6)(1 5)`, or `id`.
    pub fn cycles(&self) -> String {
        let mut seen = vec![false; self.perm.len()];
        let mut out = String::new();
        for s in 0..self.perm.len() {
            if seen[s] || self.perm[s] == s {
                continue;
            }
            let mut cyc = vec![s];
            seen[s] = true;
            let mut c = self.perm[s];
            while c != s {
                seen[c] = true;
                cyc.push(c);
                c = self.perm[c];
            }
            let parts: Vec<String> = cyc.iter().map(ToString::to_string).collect();
            out.push_str(&format!("({})", parts.join(" ")));
        }
        if out.is_empty() {
            out.push_str("id");
        }
        out
    }
}

impl Serialize for DiagramAutomorphism {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.cycles())
    }
}

/// `x ↦ linear·x + translation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineIsometry {
    pub linear: Matrix,
    pub translation: Vec<Rat>,
}

impl AffineIsometry {
    pub fn identity(n: usize) -> Self {
        AffineIsometry {
            linear: Matrix::identity(n),
            translation: vec![Rat::zero(); n],
        }
    }

    pub fn translation_by(v: Vec<Rat>) -> Self {
        AffineIsometry {
            linear: Matrix::identity(v.len()),
            translation: v,
        }
    }

    pub fn apply(&self, x: &[Rat]) -> Vec<Rat> {
        crate::rational::add(&self.linear.mul_vec(x), &self.translation)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineIsometry) -> AffineIsometry {
        AffineIsometry {
            linear: self.linear.mul(&other.linear),
            translation: self.apply(&other.translation),
        }
    }

    pub fn inverse(&self) -> Result<AffineIsometry> {
        let inv = self.linear.inverse()?;
        let t = inv.mul_vec(&self.translation);
        Ok(AffineIsometry {
            linear: inv,
            translation: crate::rational::neg(&t),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.linear.is_identity() && self.translation.iter().all(Zero::is_zero)
    }

    pub fn is_translation(&self) -> bool {
        self.linear.is_identity()
    }

    pub fn translation_text(&self) -> String {
        fmt_vec(&self.translation)
    }
}

/// The exact alcove model of an affine Weyl group of type Ê6 or Ê7.
#[derive(Clone, Debug)]
pub struct AffineRealization {
    affine_type: AffineType,
    diagram: CoxeterDiagram,
    finite: RootSystemData,
    cartan: Matrix,
    highest: Vec<Rat>,
    vertices: Vec<Vec<Rat>>,
    barycenter: Vec<Rat>,
    positive_roots: Vec<Vec<Rat>>,
}

pub fn build_affine(affine_type: AffineType) -> Result<AffineRealization> {
    let ty = affine_type.finite();
    let n = ty.rank();
    let cartan_i = ty.cartan_matrix();
    let cartan = Matrix::from_rows(
        cartan_i
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect(),
    );
    let lattice =
        BilinearLattice::from_cartan(&cartan, (1..=n).map(|i| format!("a{i}")).collect())?;
    let finite = RootSystemData::from_simple_roots(
        &lattice,
        (0..n).map(|i| LatticeVector::basis(&lattice, i)).collect(),
    )?;
    let highest = finite
        .highest_root()
        .ok_or_else(|| Error::Inconsistent("no highest root".into()))?
        .coords()
        .to_vec();
    let pair = |x: &[Rat], y: &[Rat]| crate::rational::dot(x, &cartan.mul_vec(y));

    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if cartan_i[i][j] != 0 {
                edges.push((i + 1, j + 1));
            }
        }
        let unit: Vec<Rat> = (0..n)
            .map(|k| if k == i { rat(1) } else { rat(0) })
            .collect();
        if !pair(&highest, &unit).is_zero() {
            edges.push((0, i + 1));
        }
    }
    let diagram = CoxeterDiagram::new((0..=n).collect(), edges)?;

    // v_i: ⟨v_i, α_j⟩ = 0 for j ∉ {0, i}, ⟨v_i, α̃⟩ = 1.
    let mut vertices = vec![vec![Rat::zero(); n]];
    for i in 1..=n {
        let mut rows = Vec::with_capacity(n);
        let mut rhs = Vec::with_capacity(n);
        for j in 1..=n {
            if j == i {
                rows.push(cartan.mul_vec(&highest));
                rhs.push(rat(1));
            } else {
                rows.push(cartan.row(j - 1).to_vec());
                rhs.push(rat(0));
            }
        }
        vertices.push(Matrix::from_rows(rows).solve(&rhs)?);
    }
    let mut barycenter = vec![Rat::zero(); n];
    for v in &vertices {
        barycenter = crate::rational::add(&barycenter, v);
    }
    let barycenter =
        crate::rational::scale(&barycenter, &Rat::new(1.into(), ((n + 1) as i64).into()));
    let positive_roots = finite
        .positive_roots()
        .iter()
        .map(|r| r.coords().to_vec())
        .collect();
    Ok(AffineRealization {
        affine_type,
        diagram,
        finite,
        cartan,
        highest,
        vertices,
        barycenter,
        positive_roots,
    })
}

impl AffineRealization {
    pub fn affine_type(&self) -> AffineType {
        self.affine_type
    }

    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    pub fn finite_system(&self) -> &RootSystemData {
        &self.finite
    }

    pub fn rank(&self) -> usize {
        self.cartan.rows()
    }

    pub fn highest_root(&self) -> &[Rat] {
        &self.highest
    }

    pub fn vertex(&self, i: usize) -> &[Rat] {
        &self.vertices[i]
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    pub fn pair(&self, x: &[Rat], y: &[Rat]) -> Rat {
        crate::rational::dot(x, &self.cartan.mul_vec(y))
    }

    fn simple(&self, j: usize) -> Vec<Rat> {
        (0..self.rank())
            .map(|k| if k + 1 == j { rat(1) } else { rat(0) })
            .collect()
    }

    /// The wall functional `a_j`; the alcove is `a_j >= 0` for all `j`.
    pub fn wall(&self, j: usize, x: &[Rat]) -> Rat {
        if j == 0 {
            rat(1) - self.pair(x, &self.highest)
        } else {
            self.pair(x, &self.simple(j))
        }
    }

    /// The affine reflection `s_j` in the `j`-th wall of the alcove.
    pub fn reflection(&self, j: usize) -> AffineIsometry {
        let n = self.rank();
        let (root, offset) = if j == 0 {
            (self.highest.clone(), rat(1))
        } else {
            (self.simple(j), rat(0))
        };
        // x ↦ x - (⟨x, root⟩ - offset) root
        let cr = self.cartan.mul_vec(&root);
        let mut linear = Matrix::identity(n);
        for r in 0..n {
            for c in 0..n {
                let d = &root[r] * &cr[c];
                linear[(r, c)] -= d;
            }
        }
        AffineIsometry {
            linear,
            translation: crate::rational::scale(&root, &offset),
        }
    }

    /// Image of `t_{w_1} t_{w_2} ⋯` under `t_j ↦ s_j`.
    pub fn word_image(&self, word: &[usize]) -> AffineIsometry {
        word.iter()
            .fold(AffineIsometry::identity(self.rank()), |acc, &j| {
                acc.compose(&self.reflection(j))
            })
    }

    /// The point reflection `a ↦ v_i - (a - v_i)`.
    pub fn opposition(&self, i: usize) -> AffineIsometry {
        let n = self.rank();
        AffineIsometry {
            linear: Matrix::identity(n).scale(&rat(-1)),
            translation: crate::rational::scale(&self.vertices[i], &rat(2)),
        }
    }

    /// Number of affine reflecting hyperplanes separating the alcove from its image;
    /// equals the Coxeter length of an element of the affine Weyl group.
    pub fn length(&self, w: &AffineIsometry) -> usize {
        let x = &self.barycenter;
        let y = w.apply(x);
        self.positive_roots
            .iter()
            .map(|a| {
                let p = self.pair(x, a).floor();
                let q = self.pair(&y, a).floor();
                (p - q).abs().to_integer().try_into().unwrap_or(usize::MAX)
            })
            .sum()
    }

    /// A reduced word for the longest element of the parabolic subgroup on
    /// `subset`, built by taking the lowest-index ascent at each step.
    pub fn parabolic_longest_word(&self, subset: &[usize]) -> Result<Vec<usize>> {
        let sub = self.diagram.induced(subset);
        let ty = sub.cartan_type()?;
        let mut z = self.barycenter.clone();
        let mut word = Vec::new();
        while let Some(&j) = sub
            .vertices()
            .iter()
            .find(|&&j| self.wall(j, &z).is_positive())
        {
            z = self.reflection(j).apply(&z);
            word.push(j);
            if word.len() > ty.positive_roots() {
                return Err(Error::Inconsistent(format!(
                    "longest element of {ty} did not terminate"
                )));
            }
        }
        if word.len() != ty.positive_roots() {
            return Err(Error::Inconsistent(format!(
                "longest word of {ty} has length {}, expected {}",
                word.len(),
                ty.positive_roots()
            )));
        }
        Ok(word)
    }

    /// `w_i`: the longest element of the parabolic on `Γ_i`, as a word and an isometry.
    pub fn longest_element(&self, i: usize) -> Result<(Vec<usize>, AffineIsometry)> {
        let keep: Vec<usize> = self.diagram.without(i).vertices().to_vec();
        let word = self.parabolic_longest_word(&keep)?;
        let image = self.word_image(&word);
        Ok((word, image))
    }

    /// The permutation of alcove vertices induced by `w`, if `w` maps the vertex set to itself.
    pub fn vertex_permutation(&self, w: &AffineIsometry) -> Option<DiagramAutomorphism> {
        let images: Option<Vec<usize>> = self
            .vertices
            .iter()
            .map(|v| {
                let img = w.apply(v);
                self.vertices.iter().position(|u| *u == img)
            })
            .collect();
        DiagramAutomorphism::from_images(images?).ok()
    }

    /// The affine map with `v_k ↦ v_{g(k)}`.
    pub fn affine_extension(&self, g: &DiagramAutomorphism) -> Result<AffineIsometry> {
        let n = self.rank();
        let base = &self.vertices[g.apply(0)];
        let src: Vec<Vec<Rat>> = (1..=n).map(|k| self.vertices[k].clone()).collect();
        let dst: Vec<Vec<Rat>> = (1..=n)
            .map(|k| crate::rational::sub(&self.vertices[g.apply(k)], base))
            .collect();
        // linear · src_k = dst_k, with v_0 = 0.
        let s = Matrix::from_columns(&src);
        let d = Matrix::from_columns(&dst);
        let linear = d.mul(&s.inverse()?);
        Ok(AffineIsometry {
            linear,
            translation: base.clone(),
        })
    }

    pub fn preserves_form(&self, w: &AffineIsometry) -> bool {
        w.linear.transpose().mul(&self.cartan).mul(&w.linear) == self.cartan
    }

    /// `Some(g_i)` when `s_i ∘ w_i` maps the alcove to itself; `g_i` is the
    /// induced vertex permutation, which is then a diagram automorphism.
    pub fn quasi_special(&self, i: usize) -> Result<Option<DiagramAutomorphism>> {
        let (_, w) = self.longest_element(i)?;
        let u = self.opposition(i).compose(&w);
        let Some(g) = self.vertex_permutation(&u) else {
            return Ok(None);
        };
        if !self.diagram.is_automorphism(&g) {
            return Err(Error::Verification(format!(
                "vertex permutation {} of s_{i} w_{i} is not a diagram automorphism",
                g.cycles()
            )));
        }
        Ok(Some(g))
    }

    /// The vector of the translation `s_j ∘ s_i`, checked to be `2(v_j - v_i)`.
    pub fn translation_of_pair(&self, i: usize, j: usize) -> Result<Vec<Rat>> {
        let t = self.opposition(j).compose(&self.opposition(i));
        let expected = crate::rational::scale(
            &crate::rational::sub(&self.vertices[j], &self.vertices[i]),
            &rat(2),
        );
        if !t.is_translation() || t.translation != expected {
            return Err(Error::Verification(format!(
                "s_{j} s_{i} is not translation by 2(v_{j} - v_{i})"
            )));
        }
        Ok(expected)
    }

    /// Pairs `(i, j)` for which `(s_i s_j)^{m_ij}` is not the identity (empty when all hold).
    pub fn coxeter_relation_failures(&self) -> Vec<(usize, usize)> {
        let v = self.diagram.vertices();
        let mut bad = Vec::new();
        for &i in v {
            for &j in v {
                if j < i {
                    continue;
                }
                let m = self.diagram.m(i, j);
                let p = self.reflection(i).compose(&self.reflection(j));
                let mut acc = AffineIsometry::identity(self.rank());
                for _ in 0..m {
                    acc = acc.compose(&p);
                }
                // the order must be exactly m
                let exact = (1..m).all(|k| {
                    let mut a = AffineIsometry::identity(self.rank());
                    for _ in 0..k {
                        a = a.compose(&p);
                    }
                    !a.is_identity()
                });
                if !acc.is_identity() || !exact || !self.preserves_form(&p) {
                    bad.push((i, j));
                }
            }
        }
        bad
    }

    /// Vertices of the alcove satisfy `a_j(v_i) = 0` for `j ≠ i`, `a_i(v_i) > 0`,
    /// and are affinely independent.
    pub fn vertices_valid(&self) -> bool {
        let n = self.rank();
        let equations = (0..=n).all(|i| {
            (0..=n).all(|j| {
                let a = self.wall(j, &self.vertices[i]);
                if i == j {
                    a.is_positive()
                } else {
                    a.is_zero()
                }
            })
        });
        let diffs: Vec<Vec<Rat>> = (1..=n)
            .map(|i| crate::rational::sub(&self.vertices[i], &self.vertices[0]))
            .collect();
        equations
            && self.vertices[0].iter().all(Zero::is_zero)
            && Matrix::from_rows(diffs).rank() == n
    }

    /// Each generator of `Γ_i` fixes `v_i` and `s_i` does not.
    pub fn stabilizer_check(&self, i: usize) -> bool {
        self.diagram.vertices().iter().all(|&j| {
            let fixes = self.reflection(j).apply(&self.vertices[i]) == self.vertices[i];
            fixes == (j != i)
        })
    }

    pub fn vertex_text(&self, i: usize) -> String {
        fmt_vec(&self.vertices[i])
    }
}

/// Row of the quasi-special report.
#[derive(Clone, Debug, Serialize)]
pub struct QuasiSpecialRow {
    pub vertex: usize,
    pub subdiagram_type: String,
    pub quasi_special: bool,
    pub automorphism: Option<DiagramAutomorphism>,
    pub vertex_coords: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiSpecialReport {
    pub affine_type: AffineType,
    pub automorphism_group_order: usize,
    pub rows: Vec<QuasiSpecialRow>,
}

pub fn quasi_special_report(real: &AffineRealization) -> Result<QuasiSpecialReport> {
    let rows = real
        .diagram()
        .vertices()
        .iter()
        .map(|&i| {
            let g = real.quasi_special(i)?;
            Ok(QuasiSpecialRow {
                vertex: i,
                subdiagram_type: real.diagram().without(i).cartan_type()?.to_string(),
                quasi_special: g.is_some(),
                automorphism: g,
                vertex_coords: real.vertex(i).iter().map(fmt_rat).collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QuasiSpecialReport {
        affine_type: real.affine_type(),
        automorphism_group_order: real.diagram().automorphisms().len(),
        rows,
    })
}

/// Vertices `i` of the affine diagram whose `Γ_i` has the given type.
pub fn vertices_with_subdiagram(real: &AffineRealization, ty: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for &i in real.diagram().vertices() {
        if real.diagram().without(i).cartan_type()?.to_string() == ty {
            out.push(i);
        }
    }
    Ok(out)
}

/// Terminal vertices of the diagram and their unique neighbours.
pub fn terminal_pairs(diagram: &CoxeterDiagram) -> Vec<(usize, usize)> {
    diagram
        .vertices()
        .iter()
        .filter(|&&v| diagram.degree(v) == 1)
        .map(|&v| {
            let w = diagram
                .vertices()
                .iter()
                .copied()
                .find(|&w| diagram.has_edge(v, w))
                .expect("terminal vertex has a neighbour");
            (v, w)
        })
        .collect()
}

/// Exact coordinates as strings.
pub fn coords_text(v: &[Rat]) -> Vec<String> {
    v.iter().map(fmt_rat).collect()
}
