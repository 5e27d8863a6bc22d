//! Breadth-first orbit closure under a finite set of isometries, with an
//! optional content-addressed on-disk cache.
//!
//! Cache file layout (text, UTF-8, `\n` line endings):
//!
//! ```text
//! strata-orbit v1
//! key <64 hex digits>
//! rank <n>
//! count <m>
//! <coord_1> <coord_2> ... <coord_n>     (m lines, rationals as p or p/q)
//! ```
//!
//! The key is the SHA-256 of the lattice Gram matrix, the seed and the
//! generator matrices in canonical text form. Files are written to a temporary
//! name and renamed into place, so concurrent readers never observe a partial file.

use std::collections::{BTreeSet, VecDeque};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::{IsometryElement, LatticeVector};
use crate::error::{Error, Result};
use crate::rational::{fmt_rat, fmt_vec, parse_rat};

pub const DEFAULT_ORBIT_CAP: usize = 10_000_000;
const CACHE_MAGIC: &str = "strata-orbit v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCache {
    dir: PathBuf,
}

impl OrbitCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        OrbitCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.orbit"))
    }

    fn load(&self, key: &str, seed: &LatticeVector) -> Result<Option<Vec<LatticeVector>>> {
        let path = self.path_for(key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        decode(&text, key, seed).map(Some)
    }

    fn store(&self, key: &str, orbit: &[LatticeVector]) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let final_path = self.path_for(key);
        let tmp = self.dir.join(format!(".{key}.{}.tmp", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(encode(key, orbit).as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &final_path)?;
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct OrbitOptions {
    pub cap: usize,
    pub cache: Option<OrbitCache>,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions {
            cap: DEFAULT_ORBIT_CAP,
            cache: None,
        }
    }
}

impl OrbitOptions {
    pub fn with_cache(cache: Option<OrbitCache>) -> Self {
        OrbitOptions {
            cache,
            ..Self::default()
        }
    }
}

pub fn cache_key(seed: &LatticeVector, generators: &[IsometryElement]) -> String {
    let mut h = Sha256::new();
    h.update(CACHE_MAGIC.as_bytes());
    h.update(b"\n");
    h.update(seed.ambient().canonical_text().as_bytes());
    h.update(b"\nseed");
    h.update(fmt_vec(seed.coords()).as_bytes());
    for g in generators {
        h.update(b"\ngen");
        h.update(g.canonical_text().as_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

pub fn encode(key: &str, orbit: &[LatticeVector]) -> String {
    let rank = orbit.first().map_or(0, |v| v.coords().len());
    let mut out = format!(
        "{CACHE_MAGIC}\nkey {key}\nrank {rank}\ncount {}\n",
        orbit.len()
    );
    for v in orbit {
        let coords: Vec<String> = v.coords().iter().map(fmt_rat).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    out
}

pub fn decode(text: &str, key: &str, seed: &LatticeVector) -> Result<Vec<LatticeVector>> {
    let bad = |what: &str| Error::Parse(format!("orbit cache file: {what}"));
    let mut lines = text.lines();
    if lines.next() != Some(CACHE_MAGIC) {
        return Err(bad("unknown header"));
    }
    let field = |line: Option<&str>, name: &str| -> Result<String> {
        line.and_then(|l| l.strip_prefix(name))
            .and_then(|l| l.strip_prefix(' '))
            .map(str::to_string)
            .ok_or_else(|| bad(name))
    };
    if field(lines.next(), "key")? != key {
        return Err(bad("key mismatch"));
    }
    let rank: usize = field(lines.next(), "rank")?
        .parse()
        .map_err(|_| bad("rank"))?;
    let count: usize = field(lines.next(), "count")?
        .parse()
        .map_err(|_| bad("count"))?;
    let mut out = Vec::with_capacity(count);
    for line in lines {
        let coords = line.split(' ').map(parse_rat).collect::<Result<Vec<_>>>()?;
        if coords.len() != rank {
            return Err(bad("row length"));
        }
        out.push(LatticeVector::new(seed.ambient(), coords)?);
    }
    if out.len() != count {
        return Err(bad("truncated"));
    }
    Ok(out)
}

/// The smallest generator-stable set containing `seed`, sorted lexicographically.
pub fn weyl_orbit(
    seed: &LatticeVector,
    generators: &[IsometryElement],
    options: &OrbitOptions,
) -> Result<Vec<LatticeVector>> {
    let key = options.cache.as_ref().map(|_| cache_key(seed, generators));
    if let (Some(cache), Some(key)) = (&options.cache, &key) {
        if let Some(hit) = cache.load(key, seed)? {
            return Ok(hit);
        }
    }
    let orbit = orbit_closure(
        seed.clone(),
        |v| generators.iter().map(|g| g.apply(v)).collect(),
        options.cap,
    )?;
    if let (Some(cache), Some(key)) = (&options.cache, &key) {
        cache.store(key, &orbit)?;
    }
    Ok(orbit)
}

/// Generic breadth-first closure; `step` lists the images of one element.
pub fn orbit_closure<T, F>(seed: T, step: F, cap: usize) -> Result<Vec<T>>
where
    T: Ord + Clone,
    F: Fn(&T) -> Vec<T>,
{
    let mut seen = BTreeSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed]);
    while let Some(x) = queue.pop_front() {
        for y in step(&x) {
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::OrbitCap { cap });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{BilinearLattice, LatticeRef};
    use crate::rational::Matrix;

    fn a2() -> (LatticeRef, Vec<IsometryElement>) {
        let l = BilinearLattice::from_cartan(
            &Matrix::from_i64(&[&[2, -1], &[-1, 2]]),
            vec!["a1".into(), "a2".into()],
        )
        .unwrap();
        let gens = (0..2)
            .map(|i| IsometryElement::reflection(&LatticeVector::basis(&l, i)))
            .collect();
        (l, gens)
    }

    #[test]
    fn zero_is_a_fixed_point() {
        let (l, gens) = a2();
        let orbit = weyl_orbit(&LatticeVector::zero(&l), &gens, &OrbitOptions::default()).unwrap();
        assert_eq!(orbit.len(), 1);
    }

    #[test]
    fn root_orbit_and_cap() {
        let (l, gens) = a2();
        let seed = LatticeVector::basis(&l, 0);
        let orbit = weyl_orbit(&seed, &gens, &OrbitOptions::default()).unwrap();
        assert_eq!(orbit.len(), 6);
        let capped = OrbitOptions {
            cap: 4,
            cache: None,
        };
        assert!(matches!(
            weyl_orbit(&seed, &gens, &capped),
            Err(Error::OrbitCap { cap: 4 })
        ));
    }

    #[test]
    fn cache_round_trips_bit_exactly() {
        let (l, gens) = a2();
        let dir = tempfile::tempdir().unwrap();
        let opts = OrbitOptions::with_cache(Some(OrbitCache::new(dir.path())));
        let seed = LatticeVector::new(
            &l,
            vec![crate::rational::ratio(1, 3), crate::rational::rat(0)],
        )
        .unwrap();
        let fresh = weyl_orbit(&seed, &gens, &opts).unwrap();
        let key = cache_key(&seed, &gens);
        let bytes = fs::read(opts.cache.as_ref().unwrap().path_for(&key)).unwrap();
        let warm = weyl_orbit(&seed, &gens, &opts).unwrap();
        assert_eq!(fresh, warm);
        assert_eq!(encode(&key, &warm).into_bytes(), bytes);
        assert_eq!(
            fresh,
            weyl_orbit(&seed, &gens, &OrbitOptions::default()).unwrap()
        );
    }

    #[test]
    fn corrupt_cache_is_reported() {
        let (l, _) = a2();
        let seed = LatticeVector::zero(&l);
        assert!(decode("garbage\n", "k", &seed).is_err());
        assert!(decode("strata-orbit v1\nkey k\nrank 2\ncount 2\n0 0\n", "k", &seed).is_err());
        assert!(decode("strata-orbit v1\nkey other\nrank 2\ncount 0\n", "k", &seed).is_err());
    }
}
