//! Root enumeration, root systems and ADE type recognition.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::integer::integer_kernel;
use super::{IsometryElement, LatticeRef, LatticeVector};
use crate::error::{Error, Result};
use crate::rational::{rat, Matrix, Rat};

/// All lattice vectors `v` with `v·v = -2` (and `v·u = 0` when `orthogonal_to`
/// is given), in lexicographic order of their coordinates.
///
/// The search is a Fincke–Pohst enumeration over a `Z`-basis of the orthogonal
/// complement, so the form must be negative definite there.
pub fn enumerate_roots(
    lattice: &LatticeRef,
    orthogonal_to: Option<&LatticeVector>,
) -> Result<Vec<LatticeVector>> {
    let constraint = orthogonal_to.map(|u| (u, Rat::zero()));
    vectors_of_square(lattice, constraint, &rat(-2))
}

/// All lattice vectors `x` with `x·x = square` and, when a constraint `(u, c)`
/// is given, `x·u = c`. The form must be negative definite on `u^⊥`
/// (on the whole lattice without a constraint), otherwise the region is infinite.
pub fn vectors_of_square(
    lattice: &LatticeRef,
    constraint: Option<(&LatticeVector, Rat)>,
    square: &Rat,
) -> Result<Vec<LatticeVector>> {
    let n = lattice.rank();
    // x = offset + B t with t integral; offset is a particular solution.
    let (basis, offset, residual): (Vec<Vec<BigInt>>, Vec<Rat>, Rat) = match constraint.clone() {
        None => (
            (0..n).map(|i| unit(n, i)).collect(),
            vec![Rat::zero(); n],
            -square,
        ),
        Some((u, value)) => {
            if u.coords().len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: u.coords().len(),
                });
            }
            let gu = lattice.gram().mul_vec(u.coords());
            if gu.iter().all(Zero::is_zero) {
                return Err(Error::InfiniteSearch(
                    "constraint vector pairs trivially".into(),
                ));
            }
            let u_sq = u.square();
            if u_sq.is_zero() {
                return Err(Error::InfiniteSearch(
                    "constraint vector is isotropic".into(),
                ));
            }
            // Integer row r with x·u = (r·x)/scale.
            let lcm = gu.iter().fold(BigInt::from(1), |acc, q| {
                num_integer::Integer::lcm(&acc, q.denom())
            });
            let row: Vec<BigInt> = gu.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
            let target = &value * Rat::from_integer(lcm.clone());
            let Some((g, particular)) = integer_solution(&row) else {
                return Err(Error::InfiniteSearch(
                    "constraint vector pairs trivially".into(),
                ));
            };
            let kernel = integer_kernel(std::slice::from_ref(&row), n);
            if !target.is_integer() || !(target.to_integer() % &g).is_zero() {
                return Ok(Vec::new());
            }
            let mult = target.to_integer() / &g;
            let x0: Vec<Rat> = particular
                .iter()
                .map(|p| Rat::from_integer(p * &mult))
                .collect();
            // Split x0 = λu + p with p ⟂ u; then (x - λu)² = square - λ²u².
            let lambda = &value / &u_sq;
            let residual = &lambda * &lambda * &u_sq - square;
            (kernel, x0, residual)
        }
    };
    let m = basis.len();
    let basis_q: Vec<Vec<Rat>> = basis
        .iter()
        .map(|b| b.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let mut form = Matrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            form[(i, j)] = -lattice.pair(&basis_q[i], &basis_q[j]);
        }
    }
    // Center: offset's component in the span of the basis, in basis coordinates.
    let center = if offset.iter().all(Zero::is_zero) {
        vec![Rat::zero(); m]
    } else {
        let rhs: Vec<Rat> = basis_q.iter().map(|b| -lattice.pair(b, &offset)).collect();
        let s = form.solve(&rhs)?;
        s.iter().map(|x| -x).collect()
    };
    let mut found = Vec::new();
    for t in close_vectors(&form, &center, &residual)? {
        let mut coords = offset.clone();
        for (ti, b) in t.iter().zip(&basis_q) {
            if ti.is_zero() {
                continue;
            }
            for (c, bk) in coords.iter_mut().zip(b) {
                *c += ti * bk;
            }
        }
        let v = LatticeVector::new(lattice, coords)?;
        let ok_constraint = constraint.as_ref().is_none_or(|(u, c)| v.dot(u) == *c);
        if ok_constraint && v.square() == *square {
            found.push(v);
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}

fn unit(n: usize, i: usize) -> Vec<BigInt> {
    (0..n).map(|k| BigInt::from(u8::from(k == i))).collect()
}

/// `(g, x)` with `row·x = g = gcd(row)`, for a nonzero integer row.
fn integer_solution(row: &[BigInt]) -> Option<(BigInt, Vec<BigInt>)> {
    let n = row.len();
    let mut g = BigInt::zero();
    let mut x = vec![BigInt::zero(); n];
    for (i, a) in row.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        if g.is_zero() {
            g = a.abs();
            x[i] = if a.is_negative() {
                BigInt::from(-1)
            } else {
                BigInt::from(1)
            };
            continue;
        }
        let e = num_integer::Integer::extended_gcd(&g, a);
        // e.gcd = e.x * g + e.y * a
        for xi in x.iter_mut() {
            *xi *= &e.x;
        }
        x[i] += &e.y;
        g = e.gcd;
    }
    if g.is_zero() {
        return None;
    }
    if g.is_negative() {
        g = -g;
        for xi in x.iter_mut() {
            *xi = -xi.clone();
        }
    }
    Some((g, x))
}

/// Every integer vector `x` with `(x - c)ᵀ F (x - c) <= bound`, for positive definite `F`.
pub fn close_vectors(form: &Matrix, center: &[Rat], bound: &Rat) -> Result<Vec<Vec<Rat>>> {
    let m = form.rows();
    // q[i][i] > 0 and F(y) = Σ q_ii (y_i + Σ_{j>i} q_ij y_j)^2.
    let mut q = form.clone();
    for i in 0..m {
        if q[(i, i)] <= Rat::zero() {
            return Err(Error::InfiniteSearch(format!(
                "form is not definite on the search lattice (pivot {i} is {})",
                crate::rational::fmt_rat(&q[(i, i)])
            )));
        }
        for j in i + 1..m {
            q[(j, i)] = q[(i, j)].clone();
            let v = &q[(i, j)] / &q[(i, i)];
            q[(i, j)] = v;
        }
        for k in i + 1..m {
            for l in k..m {
                let d = &q[(k, i)] * &q[(i, l)];
                q[(k, l)] -= d;
            }
        }
    }
    let mut out = Vec::new();
    let mut x = vec![Rat::zero(); m];
    if *bound >= Rat::zero() {
        search(&q, center, m, bound.clone(), &mut x, &mut out);
    }
    Ok(out)
}

/// Nonzero integer vectors with `xᵀ F x <= bound`.
pub fn short_vectors(form: &Matrix, bound: &Rat) -> Result<Vec<Vec<Rat>>> {
    let mut v = close_vectors(form, &vec![Rat::zero(); form.rows()], bound)?;
    v.retain(|x| x.iter().any(|c| !c.is_zero()));
    Ok(v)
}

fn search(
    q: &Matrix,
    c: &[Rat],
    level: usize,
    remaining: Rat,
    x: &mut Vec<Rat>,
    out: &mut Vec<Vec<Rat>>,
) {
    if level == 0 {
        out.push(x.clone());
        return;
    }
    let i = level - 1;
    let m = q.rows();
    let mut center = c[i].clone();
    for j in i + 1..m {
        center -= &q[(i, j)] * (&x[j] - &c[j]);
    }
    let qii = q[(i, i)].clone();
    let fits = |xi: &Rat| {
        let d = xi - &center;
        &qii * &d * &d <= remaining
    };
    let start = Rat::from_integer(center.floor().to_integer());
    let one = rat(1);
    let mut candidates = Vec::new();
    let mut lo = start.clone();
    while fits(&lo) {
        candidates.push(lo.clone());
        lo -= &one;
    }
    let mut hi = &start + &one;
    while fits(&hi) {
        candidates.push(hi.clone());
        hi += &one;
    }
    for xi in candidates {
        let d = &xi - &center;
        let used = &qii * &d * &d;
        x[i] = xi;
        search(q, c, i, &remaining - used, x, out);
    }
    x[i] = Rat::zero();
}

/// An ADE type, possibly reducible, e.g. `E7` or `A5+A1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    components: Vec<(char, usize)>,
}

impl CartanType {
    pub fn new(mut components: Vec<(char, usize)>) -> Self {
        components.sort_by(|a, b| b.1.cmp(&a.1).then(letter_rank(a.0).cmp(&letter_rank(b.0))));
        CartanType { components }
    }

    pub fn simple(letter: char, rank: usize) -> Self {
        Self::new(vec![(letter, rank)])
    }

    pub fn components(&self) -> &[(char, usize)] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.1).sum()
    }

    pub fn positive_roots(&self) -> usize {
        self.components
            .iter()
            .map(|&(l, n)| match (l, n) {
                ('A', n) => n * (n + 1) / 2,
                ('D', n) => n * (n - 1),
                ('E', 6) => 36,
                ('E', 7) => 63,
                ('E', 8) => 120,
                _ => unreachable!("validated on construction"),
            })
            .sum()
    }

    pub fn weyl_order(&self) -> u128 {
        let fact = |k: usize| (1..=k as u128).product::<u128>();
        self.components
            .iter()
            .map(|&(l, n)| match (l, n) {
                ('A', n) => fact(n + 1),
                ('D', n) => (1u128 << (n - 1)) * fact(n),
                ('E', 6) => 51_840,
                ('E', 7) => 2_903_040,
                ('E', 8) => 696_729_600,
                _ => unreachable!("validated on construction"),
            })
            .product()
    }

    /// Identifies a simply laced Cartan matrix.
    pub fn from_cartan(cartan: &[Vec<i64>]) -> Result<Self> {
        let n = cartan.len();
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAde("Cartan matrix is not square".into()));
            }
            for (j, &a) in row.iter().enumerate() {
                let ok = if i == j {
                    a == 2
                } else {
                    (a == 0 || a == -1) && a == cartan[j][i]
                };
                if !ok {
                    return Err(Error::NotAde(format!("entry ({i},{j}) = {a}")));
                }
            }
        }
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).filter(|&j| j != i && cartan[i][j] == -1).collect())
            .collect();
        Ok(Self::new(
            components(&adj)
                .into_iter()
                .map(|comp| classify_tree(&comp, &adj))
                .collect::<Result<Vec<_>>>()?,
        ))
    }

    /// Standard Cartan matrix with Bourbaki numbering (0-based).
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut m = vec![vec![0i64; n]; n];
        let mut offset = 0;
        for &(l, r) in &self.components {
            for i in 0..r {
                m[offset + i][offset + i] = 2;
            }
            for (a, b) in standard_edges(l, r) {
                m[offset + a][offset + b] = -1;
                m[offset + b][offset + a] = -1;
            }
            offset += r;
        }
        m
    }
}

fn letter_rank(c: char) -> u8 {
    match c {
        'E' => 0,
        'D' => 1,
        _ => 2,
    }
}

/// Edges of the Dynkin diagram of one irreducible type (Bourbaki numbering, 0-based).
pub fn standard_edges(letter: char, rank: usize) -> Vec<(usize, usize)> {
    match letter {
        'A' => (1..rank).map(|i| (i - 1, i)).collect(),
        'D' => {
            let mut e: Vec<_> = (1..rank - 1).map(|i| (i - 1, i)).collect();
            e.push((rank - 3, rank - 1));
            e
        }
        'E' => {
            // 1-3-4-5-...-n with 2 attached to 4
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((3..rank).map(|i| (i - 1, i)));
            e
        }
        _ => Vec::new(),
    }
}

fn components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; adj.len()];
    let mut out = Vec::new();
    for s in 0..adj.len() {
        if seen[s] {
            continue;
        }
        let mut comp = Vec::new();
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn classify_tree(comp: &[usize], adj: &[Vec<usize>]) -> Result<(char, usize)> {
    let n = comp.len();
    let edges: usize = comp.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
    if edges != n - 1 {
        return Err(Error::NotAde("Dynkin diagram contains a cycle".into()));
    }
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| adj[v].len() > 2).collect();
    match branch.as_slice() {
        [] => Ok(('A', n)),
        [c] if adj[*c].len() == 3 => {
            let mut arms: Vec<usize> = adj[*c]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*c, start, 1);
                    loop {
                        let next: Vec<usize> =
                            adj[cur].iter().copied().filter(|&w| w != prev).collect();
                        match next.as_slice() {
                            [] => return len,
                            [w] => {
                                prev = cur;
                                cur = *w;
                                len += 1;
                            }
                            _ => return usize::MAX,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Ok(('D', n)),
                [1, 2, 2] => Ok(('E', 6)),
                [1, 2, 3] => Ok(('E', 7)),
                [1, 2, 4] => Ok(('E', 8)),
                _ => Err(Error::NotAde(format!("branch arms {arms:?}"))),
            }
        }
        _ => Err(Error::NotAde("more than one branch vertex".into())),
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(l, n)| format!("{l}{n}"))
            .collect();
        f.write_str(&parts.join("+"))
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(CartanType::new(Vec::new()));
        }
        let mut comps = Vec::new();
        for part in s.split('+') {
            let part = part.trim().replace('_', "");
            let mut chars = part.chars();
            let letter = chars
                .next()
                .map(|c| c.to_ascii_uppercase())
                .ok_or_else(|| Error::Parse(format!("bad type label {s:?}")))?;
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::Parse(format!("bad type label {s:?}")))?;
            let valid = match letter {
                'A' => rank >= 1,
                'D' => rank >= 4,
                'E' => (6..=8).contains(&rank),
                _ => false,
            };
            if !valid {
                return Err(Error::Parse(format!("not an ADE type: {part}")));
            }
            comps.push((letter, rank));
        }
        Ok(CartanType::new(comps))
    }
}

impl serde::Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Integer Cartan matrix `a_ij = -α_i·α_j` of a list of roots.
pub fn cartan_matrix_of(simple: &[LatticeVector]) -> Result<Vec<Vec<i64>>> {
    simple
        .iter()
        .map(|a| {
            simple
                .iter()
                .map(|b| {
                    let d = -a.dot(b);
                    if !d.is_integer() {
                        return Err(Error::NotAde("non-integral pairing".into()));
                    }
                    d.to_integer()
                        .to_i64()
                        .ok_or_else(|| Error::NotAde("pairing overflow".into()))
                })
                .collect()
        })
        .collect()
}

const PRIMES: [i64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// Deterministic generic functional: pairing of coordinates with distinct primes,
/// falling back to the lexicographic sign when some root is killed.
fn positivity(roots: &[LatticeVector]) -> Box<dyn Fn(&LatticeVector) -> bool> {
    let n = roots.first().map_or(0, |r| r.coords().len());
    let weights: Vec<Rat> = (0..n)
        .map(|k| {
            let p = PRIMES[k % PRIMES.len()];
            rat(p + 53 * (k / PRIMES.len()) as i64)
        })
        .collect();
    let eval = move |v: &LatticeVector| -> Rat {
        v.coords()
            .iter()
            .zip(&weights)
            .fold(Rat::zero(), |acc, (c, w)| acc + c * w)
    };
    if roots.iter().all(|r| !eval(r).is_zero()) {
        Box::new(move |v| eval(v).is_positive())
    } else {
        Box::new(|v| {
            v.coords()
                .iter()
                .find(|c| !c.is_zero())
                .is_some_and(|c| c.is_positive())
        })
    }
}

/// Extracts a root basis of a root subsystem and recognizes its ADE type.
///
/// Simple roots are the indecomposable roots positive on a fixed generic
/// functional, listed in lexicographic coordinate order.
pub fn cartan_type(roots: &[LatticeVector]) -> Result<(CartanType, Vec<LatticeVector>)> {
    if roots.is_empty() {
        return Ok((CartanType::new(Vec::new()), Vec::new()));
    }
    if let Some(bad) = roots.iter().find(|r| r.square() != rat(-2)) {
        return Err(Error::Inconsistent(format!(
            "{bad:?} does not have square -2"
        )));
    }
    let positive_fn = positivity(roots);
    let positive: BTreeSet<LatticeVector> =
        roots.iter().filter(|r| positive_fn(r)).cloned().collect();
    let mut simple: Vec<LatticeVector> = positive
        .iter()
        .filter(|a| {
            !positive
                .iter()
                .any(|b| *b != **a && positive.contains(&a.sub(b)))
        })
        .cloned()
        .collect();
    simple.sort();
    let ty = CartanType::from_cartan(&cartan_matrix_of(&simple)?)?;
    if 2 * ty.positive_roots() != roots.len() {
        return Err(Error::Inconsistent(format!(
            "{} roots do not form a closed system of type {ty}",
            roots.len()
        )));
    }
    Ok((ty, simple))
}

/// A finite root system inside a lattice, with a chosen root basis.
#[derive(Clone, Debug)]
pub struct RootSystemData {
    ambient: LatticeRef,
    roots: Vec<LatticeVector>,
    simple_roots: Vec<LatticeVector>,
    type_label: CartanType,
    index: BTreeMap<LatticeVector, usize>,
}

impl RootSystemData {
    /// Root system from a (closed) root set; the basis is extracted by [`cartan_type`].
    pub fn from_roots(ambient: &LatticeRef, mut roots: Vec<LatticeVector>) -> Result<Self> {
        roots.sort();
        roots.dedup();
        let (type_label, simple_roots) = cartan_type(&roots)?;
        Ok(Self::assemble(ambient, roots, simple_roots, type_label))
    }

    /// Root system generated by the reflections in `simple`, keeping `simple` as the basis.
    pub fn from_simple_roots(ambient: &LatticeRef, simple: Vec<LatticeVector>) -> Result<Self> {
        let mut seen: BTreeSet<LatticeVector> = simple.iter().cloned().collect();
        let mut queue: VecDeque<LatticeVector> = simple.iter().cloned().collect();
        while let Some(r) = queue.pop_front() {
            for s in &simple {
                let img = r.reflect(s);
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let roots: Vec<LatticeVector> = seen.into_iter().collect();
        let type_label = CartanType::from_cartan(&cartan_matrix_of(&simple)?)?;
        let sys = Self::assemble(ambient, roots, simple, type_label);
        if !sys.is_root_basis(sys.simple_roots()) {
            return Err(Error::Inconsistent(
                "generators are not a root basis".into(),
            ));
        }
        Ok(sys)
    }

    fn assemble(
        ambient: &LatticeRef,
        roots: Vec<LatticeVector>,
        simple_roots: Vec<LatticeVector>,
        type_label: CartanType,
    ) -> Self {
        let index = roots
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect();
        RootSystemData {
            ambient: ambient.clone(),
            roots,
            simple_roots,
            type_label,
            index,
        }
    }

    pub fn ambient(&self) -> &LatticeRef {
        &self.ambient
    }

    pub fn roots(&self) -> &[LatticeVector] {
        &self.roots
    }

    pub fn simple_roots(&self) -> &[LatticeVector] {
        &self.simple_roots
    }

    pub fn type_label(&self) -> &CartanType {
        &self.type_label
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn index_of(&self, v: &LatticeVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn contains(&self, v: &LatticeVector) -> bool {
        self.index.contains_key(v)
    }

    /// Coordinates of `v` in the simple roots, when `v` lies in their span.
    pub fn simple_coords(&self, v: &LatticeVector) -> Option<Vec<Rat>> {
        express_in(&self.simple_roots, v)
    }

    pub fn simple_reflections(&self) -> Vec<IsometryElement> {
        self.simple_roots
            .iter()
            .map(IsometryElement::reflection)
            .collect()
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        cartan_matrix_of(&self.simple_roots).expect("validated on construction")
    }

    pub fn positive_roots(&self) -> Vec<LatticeVector> {
        self.roots
            .iter()
            .filter(|r| {
                self.simple_coords(r)
                    .is_some_and(|c| c.iter().all(|x| !x.is_negative()))
            })
            .cloned()
            .collect()
    }

    /// The positive root of maximal height (irreducible systems only).
    pub fn highest_root(&self) -> Option<LatticeVector> {
        let mut best: Option<(Rat, LatticeVector)> = None;
        for r in self.positive_roots() {
            let h: Rat = self.simple_coords(&r)?.iter().sum();
            if best.as_ref().is_none_or(|(bh, _)| h > *bh) {
                best = Some((h, r));
            }
        }
        best.map(|(_, r)| r)
    }

    /// Certifies that `candidates` is a root basis of this system: they are
    /// roots, linearly independent, of full rank, and every root is a
    /// sign-coherent integer combination of them.
    pub fn is_root_basis(&self, candidates: &[LatticeVector]) -> bool {
        if candidates.len() != self.type_label.rank()
            || !candidates.iter().all(|c| self.contains(c))
        {
            return false;
        }
        let rows: Vec<Vec<Rat>> = candidates.iter().map(|c| c.coords().to_vec()).collect();
        if Matrix::from_rows(rows).rank() != candidates.len() {
            return false;
        }
        self.roots.iter().all(|r| match express_in(candidates, r) {
            Some(c) => {
                c.iter().all(|x| x.is_integer())
                    && (c.iter().all(|x| !x.is_negative()) || c.iter().all(|x| !x.is_positive()))
            }
            None => false,
        })
    }

    /// Checks the defining invariants: squares `-2`, negation and reflection
    /// closure, and the basis property of `simple_roots`.
    pub fn validate(&self) -> Result<()> {
        for r in &self.roots {
            if r.square() != rat(-2) {
                return Err(Error::Inconsistent(format!(
                    "{r:?} has square {}",
                    r.square()
                )));
            }
            if !self.contains(&r.neg()) {
                return Err(Error::Inconsistent(format!("-{r:?} missing")));
            }
        }
        for a in &self.roots {
            for b in &self.roots {
                if !self.contains(&b.reflect(a)) {
                    return Err(Error::Inconsistent(format!("s_{a:?}({b:?}) missing")));
                }
            }
        }
        if !self.is_root_basis(&self.simple_roots) {
            return Err(Error::Inconsistent(
                "simple roots are not a root basis".into(),
            ));
        }
        Ok(())
    }

    /// `table[i][j]` = index of `s_{root j}(root i)`.
    pub fn reflection_table(&self) -> Vec<Vec<usize>> {
        self.roots
            .iter()
            .map(|r| {
                self.roots
                    .iter()
                    .map(|a| {
                        self.index_of(&r.reflect(a))
                            .expect("closed under reflections")
                    })
                    .collect()
            })
            .collect()
    }

    /// `table[i][j]` = `root i · root j` as an integer.
    pub fn pairing_table(&self) -> Vec<Vec<i64>> {
        self.roots
            .iter()
            .map(|a| {
                self.roots
                    .iter()
                    .map(|b| a.dot(b).to_integer().to_i64().expect("small pairing"))
                    .collect()
            })
            .collect()
    }
}

/// Solves `v = Σ c_i basis_i` over `Q`, using the Gram matrix of the basis.
pub fn express_in(basis: &[LatticeVector], v: &LatticeVector) -> Option<Vec<Rat>> {
    if basis.is_empty() {
        return v.is_zero().then(Vec::new);
    }
    let k = basis.len();
    let mut g = Matrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            g[(i, j)] = basis[i].dot(&basis[j]);
        }
    }
    let rhs: Vec<Rat> = basis.iter().map(|b| b.dot(v)).collect();
    let c = g.solve(&rhs).ok()?;
    let mut recon = LatticeVector::zero(v.ambient());
    for (ci, b) in c.iter().zip(basis) {
        recon = recon.add(&b.scale(ci));
    }
    (recon == *v).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::BilinearLattice;

    fn root_lattice(ty: &str) -> LatticeRef {
        let t: CartanType = ty.parse().unwrap();
        let c = t.cartan_matrix();
        let m = Matrix::from_rows(
            c.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        );
        BilinearLattice::from_cartan(&m, (1..=t.rank()).map(|i| format!("a{i}")).collect()).unwrap()
    }

    #[test]
    fn rank_one_roots() {
        let l = BilinearLattice::diagonal(&[-2], &["a"]).unwrap();
        let roots = enumerate_roots(&l, None).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].coords(), &[rat(-1)]);
        assert_eq!(cartan_type(&roots).unwrap().0.to_string(), "A1");
    }

    #[test]
    fn root_counts_of_standard_types() {
        for (ty, count) in [
            ("A1", 2),
            ("A2", 6),
            ("A7", 56),
            ("D4", 24),
            ("D5", 40),
            ("E6", 72),
            ("E7", 126),
        ] {
            let l = root_lattice(ty);
            let roots = enumerate_roots(&l, None).unwrap();
            assert_eq!(roots.len(), count, "{ty}");
            let sys = RootSystemData::from_roots(&l, roots).unwrap();
            assert_eq!(sys.type_label().to_string(), ty);
            sys.validate().unwrap();
        }
    }

    #[test]
    fn indefinite_search_is_rejected() {
        let l = BilinearLattice::diagonal(&[1, -1], &["x", "y"]).unwrap();
        assert!(matches!(
            enumerate_roots(&l, None),
            Err(Error::InfiniteSearch(_))
        ));
        let u = LatticeVector::from_i64(&l, &[0, 1]).unwrap();
        // complement of y is spanned by x, positive definite: still rejected
        assert!(enumerate_roots(&l, Some(&u)).is_err());
    }

    #[test]
    fn type_labels_parse_and_order() {
        let t: CartanType = "A1+A5".parse().unwrap();
        assert_eq!(t.to_string(), "A5+A1");
        assert_eq!(t.positive_roots(), 16);
        assert_eq!("D6+A1".parse::<CartanType>().unwrap().rank(), 7);
        assert!("E9".parse::<CartanType>().is_err());
        assert!("B3".parse::<CartanType>().is_err());
        assert_eq!("E7".parse::<CartanType>().unwrap().weyl_order(), 2_903_040);
        assert_eq!("A7".parse::<CartanType>().unwrap().weyl_order(), 40_320);
    }

    #[test]
    fn non_ade_cartan_matrix_is_an_error() {
        // affine A2: a triangle
        let c = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert!(matches!(CartanType::from_cartan(&c), Err(Error::NotAde(_))));
        let b2 = vec![vec![2, -2], vec![-1, 2]];
        assert!(CartanType::from_cartan(&b2).is_err());
    }

    #[test]
    fn reducible_types_are_recognized() {
        for ty in ["A5+A1", "A2+A2+A2", "D6+A1", "A3+A3+A1"] {
            let t: CartanType = ty.parse().unwrap();
            assert_eq!(
                CartanType::from_cartan(&t.cartan_matrix())
                    .unwrap()
                    .to_string(),
                ty
            );
        }
    }

    #[test]
    fn highest_root_of_e7() {
        let l = root_lattice("E7");
        let sys = RootSystemData::from_simple_roots(
            &l,
            (0..7).map(|i| LatticeVector::basis(&l, i)).collect(),
        )
        .unwrap();
        let h = sys.highest_root().unwrap();
        // Bourbaki: 2 2 3 4 3 2 1
        assert_eq!(
            h.coords(),
            crate::rational::ints(&[2, 2, 3, 4, 3, 2, 1]).as_slice()
        );
    }
}
