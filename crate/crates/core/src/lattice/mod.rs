//! Lattices with symmetric rational bilinear forms, their vectors and isometries.
//!
//! Sign convention: roots have square `-2`. A lattice is the free abelian group
//! `Z^rank` in its chosen basis; coordinates are stored as exact rationals so
//! that `Q`-combinations (dual vectors, alcove points) share the same type.

pub mod characters;
pub mod integer;
pub mod orbit;
pub mod roots;
pub mod subsystems;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, fmt_rat, fmt_vec, rat, Matrix, Rat};

pub use characters::{sign_characters, CharacterCensus, SignCharacter};
pub use integer::{sublattice_index, LatticeIndex};
pub use orbit::{weyl_orbit, OrbitCache, OrbitOptions};
pub use roots::{cartan_type, enumerate_roots, CartanType, RootSystemData};
pub use subsystems::{classify_subsystems, SubsystemReport};

pub type LatticeRef = Arc<BilinearLattice>;

#[derive(Clone, PartialEq, Eq)]
pub struct BilinearLattice {
    gram: Matrix,
    labels: Vec<String>,
}

impl BilinearLattice {
    pub fn new(gram: Matrix, labels: Vec<String>) -> Result<LatticeRef> {
        if gram.rows() == 0 {
            return Err(Error::InvalidLattice("rank must be positive".into()));
        }
        if !gram.is_symmetric() {
            return Err(Error::InvalidLattice("gram matrix is not symmetric".into()));
        }
        if labels.len() != gram.rows() {
            return Err(Error::Dimension {
                expected: gram.rows(),
                got: labels.len(),
            });
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::InvalidLattice(
                "basis labels must be distinct".into(),
            ));
        }
        Ok(Arc::new(BilinearLattice { gram, labels }))
    }

    /// Lattice with default labels `b0, b1, ...`.
    pub fn with_gram(gram: Matrix) -> Result<LatticeRef> {
        let labels = (0..gram.rows()).map(|i| format!("b{i}")).collect();
        Self::new(gram, labels)
    }

    pub fn diagonal(entries: &[i64], labels: &[&str]) -> Result<LatticeRef> {
        let mut g = Matrix::zeros(entries.len(), entries.len());
        for (i, &d) in entries.iter().enumerate() {
            g[(i, i)] = rat(d);
        }
        Self::new(g, labels.iter().map(|s| s.to_string()).collect())
    }

    /// Root lattice with the given Cartan matrix on its simple-root basis;
    /// the form is `-cartan` so simple roots square to `-2`.
    pub fn from_cartan(cartan: &Matrix, labels: Vec<String>) -> Result<LatticeRef> {
        Self::new(cartan.scale(&rat(-1)), labels)
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn pair(&self, x: &[Rat], y: &[Rat]) -> Rat {
        rational::dot(x, &self.gram.mul_vec(y))
    }

    /// The dual lattice `Hom(L, Z)` in the dual basis, carrying the inverse form.
    pub fn dual(&self) -> Result<LatticeRef> {
        let inv = self.gram.inverse()?;
        let labels = self.labels.iter().map(|l| format!("{l}*")).collect();
        Self::new(inv, labels)
    }

    /// Canonical text used for content addressing.
    pub fn canonical_text(&self) -> String {
        let rows: Vec<String> = (0..self.rank())
            .map(|i| fmt_vec(self.gram.row(i)))
            .collect();
        format!("gram[{}]", rows.join(";"))
    }
}

impl fmt::Debug for BilinearLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BilinearLattice")
            .field("labels", &self.labels)
            .field("gram", &self.gram)
            .finish()
    }
}

pub fn vector(ambient: &LatticeRef, coords: Vec<Rat>) -> Result<LatticeVector> {
    LatticeVector::new(ambient, coords)
}

/// A vector of `Q ⊗ L`, compared and ordered by its coordinates only.
#[derive(Clone)]
pub struct LatticeVector {
    coords: Vec<Rat>,
    ambient: LatticeRef,
}

impl LatticeVector {
    pub fn new(ambient: &LatticeRef, coords: Vec<Rat>) -> Result<Self> {
        if coords.len() != ambient.rank() {
            return Err(Error::Dimension {
                expected: ambient.rank(),
                got: coords.len(),
            });
        }
        Ok(LatticeVector {
            coords,
            ambient: Arc::clone(ambient),
        })
    }

    pub fn from_i64(ambient: &LatticeRef, coords: &[i64]) -> Result<Self> {
        Self::new(ambient, rational::ints(coords))
    }

    pub fn zero(ambient: &LatticeRef) -> Self {
        LatticeVector {
            coords: vec![Rat::zero(); ambient.rank()],
            ambient: Arc::clone(ambient),
        }
    }

    pub fn basis(ambient: &LatticeRef, i: usize) -> Self {
        let mut v = Self::zero(ambient);
        v.coords[i] = Rat::one();
        v
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn ambient(&self) -> &LatticeRef {
        &self.ambient
    }

    pub fn dot(&self, other: &LatticeVector) -> Rat {
        self.ambient.pair(&self.coords, &other.coords)
    }

    pub fn square(&self) -> Rat {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    fn with_coords(&self, coords: Vec<Rat>) -> Self {
        LatticeVector {
            coords,
            ambient: Arc::clone(&self.ambient),
        }
    }

    pub fn add(&self, other: &LatticeVector) -> Self {
        self.with_coords(rational::add(&self.coords, &other.coords))
    }

    pub fn sub(&self, other: &LatticeVector) -> Self {
        self.with_coords(rational::sub(&self.coords, &other.coords))
    }

    pub fn neg(&self) -> Self {
        self.with_coords(rational::neg(&self.coords))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self.with_coords(rational::scale(&self.coords, c))
    }

    /// `u ↦ u + (u·α)α`, the reflection in a root `α` of square `-2`.
    pub fn reflect(&self, alpha: &LatticeVector) -> Self {
        let c = self.dot(alpha);
        if c.is_zero() {
            return self.clone();
        }
        self.add(&alpha.scale(&c))
    }

    pub fn coord_strings(&self) -> Vec<String> {
        self.coords.iter().map(fmt_rat).collect()
    }

    /// Human readable form in the basis labels, e.g. `l - e1 - e2`.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for (c, label) in self.coords.iter().zip(self.ambient.labels()) {
            if c.is_zero() {
                continue;
            }
            let negative = *c < Rat::zero();
            let mag = if negative { -c } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&fmt_rat(&mag));
            }
            out.push_str(label);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl PartialEq for LatticeVector {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl Eq for LatticeVector {}

impl Hash for LatticeVector {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl PartialOrd for LatticeVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LatticeVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_vec(&self.coords))
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

/// A linear map of `Q ⊗ L`, stored as the matrix acting on coordinate columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsometryElement {
    matrix: Matrix,
}

impl IsometryElement {
    pub fn new(matrix: Matrix) -> Self {
        IsometryElement { matrix }
    }

    pub fn identity(rank: usize) -> Self {
        Self::new(Matrix::identity(rank))
    }

    /// Matrix of `s_α` on the ambient basis.
    pub fn reflection(alpha: &LatticeVector) -> Self {
        let lattice = alpha.ambient();
        let n = lattice.rank();
        let g_alpha = lattice.gram().mul_vec(alpha.coords());
        let mut m = Matrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                let d = &alpha.coords()[i] * &g_alpha[j];
                m[(i, j)] += d;
            }
        }
        Self::new(m)
    }

    /// The linear map taking each basis vector `i` to `images[i]`.
    pub fn from_images(images: &[LatticeVector]) -> Self {
        let cols: Vec<Vec<Rat>> = images.iter().map(|v| v.coords().to_vec()).collect();
        Self::new(Matrix::from_columns(&cols))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &LatticeVector) -> LatticeVector {
        v.with_coords(self.matrix.mul_vec(v.coords()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &IsometryElement) -> IsometryElement {
        Self::new(self.matrix.mul(&other.matrix))
    }

    pub fn inverse(&self) -> Result<IsometryElement> {
        Ok(Self::new(self.matrix.inverse()?))
    }

    /// Action on dual coordinates: `λ ↦ λ ∘ self⁻¹`.
    pub fn contragredient(&self) -> Result<IsometryElement> {
        Ok(Self::new(self.matrix.inverse()?.transpose()))
    }

    pub fn preserves_form(&self, lattice: &BilinearLattice) -> bool {
        let m = &self.matrix;
        m.rows() == lattice.rank() && m.transpose().mul(lattice.gram()).mul(m) == *lattice.gram()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn canonical_text(&self) -> String {
        let rows: Vec<String> = (0..self.matrix.rows())
            .map(|i| fmt_vec(self.matrix.row(i)))
            .collect();
        rows.join(";")
    }
}

impl fmt::Debug for IsometryElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> LatticeRef {
        BilinearLattice::from_cartan(
            &Matrix::from_i64(&[&[2, -1], &[-1, 2]]),
            vec!["a1".into(), "a2".into()],
        )
        .unwrap()
    }

    #[test]
    fn rejects_bad_lattices() {
        assert!(BilinearLattice::new(
            Matrix::from_i64(&[&[1, 2], &[3, 4]]),
            vec!["x".into(), "y".into()]
        )
        .is_err());
        assert!(BilinearLattice::new(
            Matrix::from_i64(&[&[1, 0], &[0, 1]]),
            vec!["x".into(), "x".into()]
        )
        .is_err());
        assert!(BilinearLattice::new(Matrix::identity(2), vec!["x".into()]).is_err());
    }

    #[test]
    fn reflection_is_involutive_isometry() {
        let l = a2();
        let a = LatticeVector::basis(&l, 0);
        let s = IsometryElement::reflection(&a);
        assert!(s.preserves_form(&l));
        assert!(s.compose(&s).is_identity());
        assert_eq!(s.apply(&a), a.neg());
        let b = LatticeVector::basis(&l, 1);
        assert_eq!(b.reflect(&a), a.add(&b));
        assert_eq!(s.apply(&b), b.reflect(&a));
    }

    #[test]
    fn contragredient_preserves_dual_form() {
        let l = a2();
        let dual = l.dual().unwrap();
        let s = IsometryElement::reflection(&LatticeVector::basis(&l, 1));
        assert!(s.contragredient().unwrap().preserves_form(&dual));
    }

    #[test]
    fn pretty_printing() {
        let l = BilinearLattice::diagonal(&[1, -1, -1], &["l", "e1", "e2"]).unwrap();
        let v = LatticeVector::from_i64(&l, &[1, -1, -1]).unwrap();
        assert_eq!(v.pretty(), "l - e1 - e2");
        assert_eq!(
            LatticeVector::from_i64(&l, &[-2, 0, 1]).unwrap().pretty(),
            "-2l + e2"
        );
        assert_eq!(LatticeVector::zero(&l).pretty(), "0");
    }
}
