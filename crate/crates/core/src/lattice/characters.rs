//! Sign characters `Q(R) → {±1}` and their kernels.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::orbit::orbit_closure;
use super::roots::{cartan_type, CartanType, RootSystemData};
use super::{sublattice_index, LatticeVector};
use crate::error::{Error, Result};
use crate::rational::Rat;

/// A homomorphism from a lattice to `{±1}`, given by its values on a basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignCharacter {
    values_on_basis: Vec<i8>,
}

impl SignCharacter {
    pub fn new(values_on_basis: Vec<i8>) -> Result<Self> {
        if values_on_basis.iter().any(|&v| v != 1 && v != -1) {
            return Err(Error::Inconsistent("character values must be ±1".into()));
        }
        Ok(SignCharacter { values_on_basis })
    }

    /// The `bits`-th character in binary enumeration order: bit `k` set means `-1` on basis `k`.
    pub fn from_bits(bits: u64, rank: usize) -> Self {
        SignCharacter {
            values_on_basis: (0..rank)
                .map(|k| if bits >> k & 1 == 1 { -1 } else { 1 })
                .collect(),
        }
    }

    pub fn values_on_basis(&self) -> &[i8] {
        &self.values_on_basis
    }

    pub fn is_trivial(&self) -> bool {
        self.values_on_basis.iter().all(|&v| v == 1)
    }

    /// Value on a vector with integer coordinates in the character's basis.
    pub fn evaluate(&self, coords: &[Rat]) -> Result<i8> {
        if coords.len() != self.values_on_basis.len() {
            return Err(Error::Dimension {
                expected: self.values_on_basis.len(),
                got: coords.len(),
            });
        }
        let mut odd = false;
        for (c, &v) in coords.iter().zip(&self.values_on_basis) {
            if !c.is_integer() {
                return Err(Error::Inconsistent(format!(
                    "character undefined on non-integral coordinate {c}"
                )));
            }
            if v == -1 && (c.to_integer() % 2u8).to_i64() != Some(0) {
                odd = !odd;
            }
        }
        Ok(if odd { -1 } else { 1 })
    }

    pub fn label(&self) -> String {
        self.values_on_basis
            .iter()
            .map(|&v| if v == 1 { '+' } else { '-' })
            .collect()
    }
}

/// Result of enumerating the sign characters of a root lattice.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterCensus {
    pub total: usize,
    pub filter: Option<String>,
    /// Characters passing the filter (all characters when unfiltered).
    pub characters: Vec<SignCharacter>,
    pub kernel_types: Vec<String>,
    /// Histogram of kernel root-system types over all characters.
    pub kernel_type_histogram: BTreeMap<String, usize>,
    /// Weyl orbits on `characters`, as index lists.
    pub orbits: Vec<Vec<usize>>,
    pub transitive: bool,
}

/// Enumerates all `2^rank` characters on the simple-root basis of `system`.
///
/// With a filter, keeps the characters whose kernel roots have the given type
/// and span a sublattice of index 2 in `Q(R)`, and reports the Weyl action on them.
pub fn sign_characters(
    system: &RootSystemData,
    kernel_type_filter: Option<&CartanType>,
) -> Result<CharacterCensus> {
    let rank = system.rank();
    let qr = root_lattice(system)?;
    let root_coords: Vec<Vec<Rat>> = system
        .roots()
        .iter()
        .map(|r| {
            system
                .simple_coords(r)
                .ok_or_else(|| Error::Inconsistent(format!("{r:?} outside the root span")))
        })
        .collect::<Result<_>>()?;

    let mut histogram = BTreeMap::new();
    let mut kept = Vec::new();
    let mut kept_types = Vec::new();
    for bits in 0..(1u64 << rank) {
        let chi = SignCharacter::from_bits(bits, rank);
        let mut kernel = Vec::new();
        let mut kernel_coords = Vec::new();
        for (r, c) in system.roots().iter().zip(&root_coords) {
            if chi.evaluate(c)? == 1 {
                kernel.push(r.clone());
                kernel_coords.push(LatticeVector::new(&qr, c.clone())?);
            }
        }
        let (ty, _) = cartan_type(&kernel)?;
        *histogram.entry(ty.to_string()).or_insert(0) += 1;
        let keep = match kernel_type_filter {
            None => true,
            Some(want) => ty == *want && sublattice_index(&kernel_coords, &qr)?.as_u64() == Some(2),
        };
        if keep {
            kept.push(chi);
            kept_types.push(ty.to_string());
        }
    }

    let position: BTreeMap<SignCharacter, usize> = kept
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    let pairing: Vec<Vec<i64>> = system
        .simple_roots()
        .iter()
        .map(|a| {
            system
                .simple_roots()
                .iter()
                .map(|b| a.dot(b).to_integer().to_i64().unwrap_or(0))
                .collect()
        })
        .collect();
    let act = |chi: &SignCharacter, j: usize| -> SignCharacter {
        let vj = chi.values_on_basis[j];
        SignCharacter {
            values_on_basis: (0..rank)
                .map(|k| {
                    let v = chi.values_on_basis[k];
                    if pairing[k][j].rem_euclid(2) == 1 {
                        v * vj
                    } else {
                        v
                    }
                })
                .collect(),
        }
    };
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut assigned = vec![false; kept.len()];
    for start in 0..kept.len() {
        if assigned[start] {
            continue;
        }
        let orbit = orbit_closure(
            kept[start].clone(),
            |c| (0..rank).map(|j| act(c, j)).collect(),
            1 << 20,
        )?;
        let mut idx = Vec::with_capacity(orbit.len());
        for c in &orbit {
            let i = *position.get(c).ok_or_else(|| {
                Error::Inconsistent("Weyl action does not preserve the filtered characters".into())
            })?;
            assigned[i] = true;
            idx.push(i);
        }
        idx.sort_unstable();
        orbits.push(idx);
    }
    Ok(CharacterCensus {
        total: 1 << rank,
        filter: kernel_type_filter.map(ToString::to_string),
        transitive: orbits.len() == 1,
        characters: kept,
        kernel_types: kept_types,
        kernel_type_histogram: histogram,
        orbits,
    })
}

/// The root lattice `Q(R)` on the simple-root basis of `system`.
pub fn root_lattice(system: &RootSystemData) -> Result<super::LatticeRef> {
    let k = system.rank();
    let mut g = crate::rational::Matrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            g[(i, j)] = system.simple_roots()[i].dot(&system.simple_roots()[j]);
        }
    }
    super::BilinearLattice::new(g, (1..=k).map(|i| format!("α{i}")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{enumerate_roots, BilinearLattice};
    use crate::rational::ints;

    #[test]
    fn a1_has_two_characters() {
        let l = BilinearLattice::diagonal(&[-2], &["a"]).unwrap();
        let sys = RootSystemData::from_roots(&l, enumerate_roots(&l, None).unwrap()).unwrap();
        let census = sign_characters(&sys, None).unwrap();
        assert_eq!(census.total, 2);
        assert_eq!(census.characters.len(), 2);
        assert_eq!(census.kernel_type_histogram.get("A1"), Some(&1));
        assert_eq!(census.kernel_type_histogram.get("0"), Some(&1));
    }

    #[test]
    fn evaluation_is_multiplicative() {
        let chi = SignCharacter::new(vec![1, -1, -1]).unwrap();
        assert_eq!(chi.evaluate(&ints(&[5, 1, 0])).unwrap(), -1);
        assert_eq!(chi.evaluate(&ints(&[5, 1, 1])).unwrap(), 1);
        assert_eq!(chi.evaluate(&ints(&[0, -3, 0])).unwrap(), -1);
        let half = [
            crate::rational::ratio(1, 2),
            crate::rational::rat(0),
            crate::rational::rat(0),
        ];
        assert!(chi.evaluate(&half).is_err());
        assert!(SignCharacter::new(vec![2]).is_err());
    }
}
