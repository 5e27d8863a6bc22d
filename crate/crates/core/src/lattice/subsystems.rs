//! Direct search for root subsystems of a given type, and their Weyl orbits.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use super::characters::root_lattice;
use super::orbit::{orbit_closure, weyl_orbit, OrbitOptions};
use super::roots::{cartan_type, CartanType, RootSystemData};
use super::{IsometryElement, LatticeVector};
use crate::error::{Error, Result};

/// Indivisible covectors `λ ∈ Hom(Q(R), Z)` whose kernel is the root lattice
/// of a subsystem of a given type, found as the Weyl orbit of a fundamental weight.
#[derive(Clone, Debug, Serialize)]
pub struct CovectorOrbit {
    /// 1-based node of the system's root basis whose fundamental weight defines the orbit.
    pub node: usize,
    pub kernel_type: String,
    pub size: usize,
    /// Number of distinct kernels; each is cut out by `±λ`.
    pub distinct_kernels: usize,
    /// Values on the simple roots of each covector, lexicographically ordered.
    #[serde(skip)]
    pub covectors: Vec<LatticeVector>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubsystemReport {
    pub ambient_type: String,
    pub target: String,
    pub count: usize,
    pub orbit_sizes: Vec<usize>,
    pub transitive: bool,
    /// A root basis of the first subsystem of each orbit, pretty-printed.
    pub representatives: Vec<Vec<String>>,
    pub covector_orbit: Option<CovectorOrbit>,
    /// Each subsystem as a sorted list of indices into the ambient root list.
    #[serde(skip)]
    pub subsystems: Vec<Vec<usize>>,
}

fn supported(ambient: &str, target: &str) -> bool {
    ambient == target
        || matches!(
            (ambient, target),
            ("E7", "A7") | ("E7", "A6") | ("E7", "A5") | ("E7", "E6") | ("E6", "A5")
        )
}

/// Finds every subsystem of `system` of type `target` by a depth-first search
/// over Dynkin-labelled root bases, normalized so that the first basis root is
/// the smallest root of the subsystem, then groups them into Weyl orbits.
pub fn classify_subsystems(
    system: &RootSystemData,
    target: &CartanType,
    options: &OrbitOptions,
) -> Result<SubsystemReport> {
    let ambient_type = system.type_label().to_string();
    if !supported(&ambient_type, &target.to_string()) {
        return Err(Error::Unsupported {
            target: target.to_string(),
            ambient: ambient_type,
        });
    }
    let refl = system.reflection_table();
    let pairing = system.pairing_table();
    let neg: Vec<usize> = system
        .roots()
        .iter()
        .map(|r| system.index_of(&r.neg()).expect("negation closed"))
        .collect();

    let cartan = target.cartan_matrix();
    let order = search_order(&cartan);
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for r0 in 0..system.len() {
        if neg[r0] < r0 {
            continue;
        }
        let mut assigned = vec![r0];
        extend(
            &cartan,
            &order,
            &pairing,
            &refl,
            &neg,
            &mut assigned,
            &mut found,
        );
    }
    let subsystems: Vec<Vec<usize>> = found.into_iter().collect();

    // Simple reflections of the ambient system as permutations of root indices.
    let perms: Vec<Vec<usize>> = system
        .simple_roots()
        .iter()
        .map(|s| {
            let j = system.index_of(s).expect("simple roots are roots");
            (0..system.len()).map(|i| refl[i][j]).collect()
        })
        .collect();
    let position: BTreeMap<&Vec<usize>, usize> =
        subsystems.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut assigned = vec![false; subsystems.len()];
    let mut orbit_sizes = Vec::new();
    let mut representatives = Vec::new();
    for start in 0..subsystems.len() {
        if assigned[start] {
            continue;
        }
        let orbit = orbit_closure(
            subsystems[start].clone(),
            |s| {
                perms
                    .iter()
                    .map(|p| {
                        let mut img: Vec<usize> = s.iter().map(|&i| p[i]).collect();
                        img.sort_unstable();
                        img
                    })
                    .collect()
            },
            1 << 24,
        )?;
        for s in &orbit {
            let i = *position.get(s).ok_or_else(|| {
                Error::Inconsistent("Weyl image of a subsystem was not found by the search".into())
            })?;
            assigned[i] = true;
        }
        orbit_sizes.push(orbit.len());
        let roots: Vec<LatticeVector> = subsystems[start]
            .iter()
            .map(|&i| system.roots()[i].clone())
            .collect();
        let (_, basis) = cartan_type(&roots)?;
        representatives.push(basis.iter().map(LatticeVector::pretty).collect());
    }

    let covector_orbit = if target.components().len() == 1 && target.rank() + 1 == system.rank() {
        covector_orbit(system, target, options)?
    } else {
        None
    };

    Ok(SubsystemReport {
        ambient_type,
        target: target.to_string(),
        count: subsystems.len(),
        transitive: orbit_sizes.len() == 1,
        orbit_sizes,
        representatives,
        covector_orbit,
        subsystems,
    })
}

/// Node order in which every node after the first is adjacent to an earlier one
/// (per connected component), so pairing constraints prune early.
fn search_order(cartan: &[Vec<i64>]) -> Vec<usize> {
    let n = cartan.len();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in 0..n {
                if !seen[w] && cartan[v][w] != 0 {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

fn closure(generators: &[usize], refl: &[Vec<usize>]) -> Vec<usize> {
    let mut seen = vec![false; refl.len()];
    let mut stack: Vec<usize> = generators.to_vec();
    for &g in generators {
        seen[g] = true;
    }
    let mut out = stack.clone();
    while let Some(r) = stack.pop() {
        for &g in generators {
            let img = refl[r][g];
            if !seen[img] {
                seen[img] = true;
                stack.push(img);
                out.push(img);
            }
        }
    }
    out.sort_unstable();
    out
}

fn extend(
    cartan: &[Vec<i64>],
    order: &[usize],
    pairing: &[Vec<i64>],
    refl: &[Vec<usize>],
    neg: &[usize],
    assigned: &mut Vec<usize>,
    found: &mut BTreeSet<Vec<usize>>,
) {
    let r0 = assigned[0];
    // assigned roots so far must not generate anything below r0
    let partial = closure(assigned, refl);
    if partial.first() != Some(&r0) {
        return;
    }
    let k = assigned.len();
    if k == order.len() {
        found.insert(partial);
        return;
    }
    let node = order[k];
    for r in r0 + 1..pairing.len() {
        if neg[r] < r0 || assigned.contains(&r) {
            continue;
        }
        let fits = order[..k]
            .iter()
            .zip(assigned.iter())
            .all(|(&m, &a)| pairing[r][a] == -cartan[node][m]);
        if fits {
            assigned.push(r);
            extend(cartan, order, pairing, refl, neg, assigned, found);
            assigned.pop();
        }
    }
}

fn covector_orbit(
    system: &RootSystemData,
    target: &CartanType,
    options: &OrbitOptions,
) -> Result<Option<CovectorOrbit>> {
    let qr = root_lattice(system)?;
    let dual = qr.dual()?;
    let coords: Vec<Vec<crate::rational::Rat>> = system
        .roots()
        .iter()
        .map(|r| system.simple_coords(r).expect("roots lie in the root span"))
        .collect();
    let node = (0..system.rank()).find_map(|i| {
        let kernel: Vec<LatticeVector> = system
            .roots()
            .iter()
            .zip(&coords)
            .filter(|(_, c)| num_traits::Zero::is_zero(&c[i]))
            .map(|(r, _)| r.clone())
            .collect();
        match cartan_type(&kernel) {
            Ok((ty, _)) if ty == *target => Some(Ok(i)),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        }
    });
    let Some(node) = node.transpose()? else {
        return Ok(None);
    };
    let generators = (0..system.rank())
        .map(|j| IsometryElement::reflection(&LatticeVector::basis(&qr, j)).contragredient())
        .collect::<Result<Vec<_>>>()?;
    let seed = LatticeVector::basis(&dual, node);
    let orbit = weyl_orbit(&seed, &generators, options)?;
    let kernels: BTreeSet<Vec<usize>> = orbit
        .iter()
        .map(|lambda| {
            coords
                .iter()
                .enumerate()
                .filter(|(_, c)| {
                    num_traits::Zero::is_zero(&crate::rational::dot(c, lambda.coords()))
                })
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    Ok(Some(CovectorOrbit {
        node: node + 1,
        kernel_type: target.to_string(),
        size: orbit.len(),
        distinct_kernels: kernels.len(),
        covectors: orbit,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{enumerate_roots, BilinearLattice};
    use crate::rational::{rat, Matrix};

    fn system(ty: &str) -> RootSystemData {
        let t: CartanType = ty.parse().unwrap();
        let c = t.cartan_matrix();
        let m = Matrix::from_rows(
            c.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        );
        let l = BilinearLattice::from_cartan(&m, (1..=t.rank()).map(|i| format!("a{i}")).collect())
            .unwrap();
        RootSystemData::from_simple_roots(
            &l,
            (0..t.rank()).map(|i| LatticeVector::basis(&l, i)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn a1_in_a1() {
        let l = BilinearLattice::diagonal(&[-2], &["a"]).unwrap();
        let sys = RootSystemData::from_roots(&l, enumerate_roots(&l, None).unwrap()).unwrap();
        let rep =
            classify_subsystems(&sys, &"A1".parse().unwrap(), &OrbitOptions::default()).unwrap();
        assert_eq!(rep.count, 1);
        assert!(rep.transitive);
    }

    #[test]
    fn a5_in_e6() {
        let rep = classify_subsystems(
            &system("E6"),
            &"A5".parse().unwrap(),
            &OrbitOptions::default(),
        )
        .unwrap();
        // |W(E6)| / |W(A5) x W(A1)| = 51840 / 1440
        assert_eq!(rep.count, 36);
        assert!(rep.transitive);
        let cov = rep.covector_orbit.unwrap();
        assert_eq!(cov.node, 2);
        assert_eq!(cov.kernel_type, "A5");
    }

    #[test]
    fn unsupported_pairs_are_errors() {
        let err = classify_subsystems(
            &system("E6"),
            &"A7".parse().unwrap(),
            &OrbitOptions::default(),
        );
        assert!(matches!(err, Err(Error::Unsupported { .. })));
        assert!(classify_subsystems(
            &system("A3"),
            &"A1".parse().unwrap(),
            &OrbitOptions::default()
        )
        .is_err());
    }
}
