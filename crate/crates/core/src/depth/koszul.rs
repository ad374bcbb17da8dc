//! Upper Koszul simplicial complexes `K^b(I)`.

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;

/// A finite simplicial complex on ground set `{0..64}`, faces stored as
/// bitmasks grouped by cardinality (`faces[s]` holds faces with `s`
/// vertices, so `faces[0]` is `[0]` unless the complex is void).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimplicialComplex {
    faces: Vec<Vec<u64>>,
}

impl SimplicialComplex {
    /// The void complex, with no faces at all.
    pub fn void() -> Self {
        SimplicialComplex { faces: Vec::new() }
    }

    /// Downward closure of the given faces.
    pub fn from_facets(facets: &[u64]) -> Self {
        let mut all: FxHashSet<u64> = FxHashSet::default();
        for &f in facets {
            // the set stays downward closed, so a present face brings its subsets
            if all.contains(&f) {
                continue;
            }
            let mut sub = f;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        if all.is_empty() {
            return SimplicialComplex::void();
        }
        let top = all.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
        let mut faces = vec![Vec::new(); top + 1];
        for f in all {
            faces[f.count_ones() as usize].push(f);
        }
        for group in &mut faces {
            group.sort_unstable();
        }
        SimplicialComplex { faces }
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Faces with exactly `s` vertices, sorted.
    pub fn faces_of_size(&self, s: usize) -> &[u64] {
        self.faces.get(s).map_or(&[], Vec::as_slice)
    }

    /// Largest face cardinality plus one (0 for the void complex).
    pub fn size_levels(&self) -> usize {
        self.faces.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, face: u64) -> bool {
        self.faces_of_size(face.count_ones() as usize)
            .binary_search(&face)
            .is_ok()
    }

    /// Whole faces listed as sorted vertex indices.
    pub fn face_lists(&self) -> Vec<Vec<usize>> {
        self.faces
            .iter()
            .flatten()
            .map(|&f| (0..64).filter(|&v| f >> v & 1 == 1).collect())
            .collect()
    }
}

/// `K^b(I)`: faces `tau` of the support of `b` with `x^(b - e_tau)` in `I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulComplex {
    pub b: Vec<u32>,
    pub complex: SimplicialComplex,
}

/// The facet candidates of `K^b(I)`: for each generator `g | x^b`, the set
/// `{i : g_i < b_i}`. Faces are exactly subsets of these sets.
pub fn koszul_facets(gens: &[&[u32]], b: &[u32]) -> Vec<u64> {
    let mut facets: Vec<u64> = gens
        .iter()
        .filter(|g| g.iter().zip(b).all(|(x, y)| x <= y))
        .map(|g| {
            g.iter()
                .zip(b)
                .enumerate()
                .filter(|(_, (x, y))| x < y)
                .fold(0u64, |m, (i, _)| m | 1 << i)
        })
        .collect();
    facets.sort_unstable();
    facets.dedup();
    // keep inclusion-maximal sets only
    let all = facets.clone();
    facets.retain(|&f| !all.iter().any(|&h| h != f && h & f == f));
    facets
}

pub fn koszul_complex(i: &MonomialIdeal, b: &[u32]) -> Result<KoszulComplex> {
    if b.len() != i.arity() {
        return Err(Error::ArityMismatch {
            expected: i.arity(),
            found: b.len(),
        });
    }
    if i.arity() > 64 {
        return Err(Error::SizeLimit {
            what: "ring arity for Koszul complexes",
            cap: 64,
        });
    }
    let gens: Vec<&[u32]> = i.generators().iter().map(|g| g.exponents()).collect();
    Ok(KoszulComplex {
        b: b.to_vec(),
        complex: SimplicialComplex::from_facets(&koszul_facets(&gens, b)),
    })
}
