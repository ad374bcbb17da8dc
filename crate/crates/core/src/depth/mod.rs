//! Depth of `S/I` from multigraded Betti numbers of `I`.
//!
//! `beta_{i,b}(I)` is the reduced homology of the upper Koszul complex
//! `K^b(I)` in degree `i - 1`, nonzero only for `b` in the lcm lattice.
//! Then `pd(S/I) = 1 + max{i : beta_i(I) != 0}` and `depth = n - pd`.

pub mod homology;
pub mod koszul;
pub mod lattice;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

pub use homology::{reduced_homology_dims, Field};
pub use koszul::{koszul_complex, koszul_facets, KoszulComplex, SimplicialComplex};
pub use lattice::{lcm_lattice, LcmLattice, DEFAULT_MAX_GENERATORS, DEFAULT_MAX_LATTICE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineConfig {
    pub max_gens: usize,
    pub max_lattice: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            max_gens: DEFAULT_MAX_GENERATORS,
            max_lattice: DEFAULT_MAX_LATTICE,
        }
    }
}

/// Nonzero multigraded Betti numbers `beta_{i,b}(I)` over one field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub field: Field,
    pub entries: BTreeMap<(usize, Vec<u32>), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, b: &[u32]) -> usize {
        self.entries.get(&(i, b.to_vec())).copied().unwrap_or(0)
    }

    /// Total Betti number `beta_i(I)`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, v)| v)
            .sum()
    }

    /// Largest homological index carrying a nonzero entry.
    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// Smallest multidegree (lexicographically) at the largest index.
    pub fn witness(&self) -> Option<(usize, Vec<u32>)> {
        let top = self.max_index()?;
        self.entries
            .keys()
            .filter(|(i, _)| *i == top)
            .map(|(i, b)| (*i, b.clone()))
            .min_by(|x, y| x.1.cmp(&y.1))
    }
}

/// Outcome of a depth computation. `witness_i` is the Betti index
/// `i = pd(S/I) - 1` and `witness_b` a multidegree with `beta_{i,b} != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthReport {
    pub ideal_hash: String,
    pub n: usize,
    pub t: u32,
    pub depth: usize,
    pub pd: usize,
    pub field: Field,
    pub witness_b: Option<Vec<u32>>,
    pub witness_i: Option<usize>,
    pub elapsed_ms: u64,
}

/// Stable identifier of an ideal: SHA-256 over its canonical JSON.
pub fn ideal_hash(i: &MonomialIdeal) -> String {
    let json = serde_json::to_string(i).expect("ideals serialize");
    Sha256::digest(json.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Betti tables of `I` over each requested field, sharing the lattice and
/// the complexes between fields.
pub fn betti_tables(
    i: &MonomialIdeal,
    fields: &[Field],
    config: &EngineConfig,
) -> Result<Vec<BettiTable>> {
    let lattice = lcm_lattice(i, config.max_gens, config.max_lattice)?;
    if i.arity() > 64 {
        return Err(Error::SizeLimit {
            what: "ring arity for Koszul complexes",
            cap: 64,
        });
    }
    let gens: Vec<&[u32]> = i.generators().iter().map(|g| g.exponents()).collect();
    let per_b: Vec<(usize, Vec<Vec<usize>>)> = lattice
        .elements()
        .par_iter()
        .enumerate()
        .filter_map(|(k, b)| {
            let facets = koszul_facets(&gens, b);
            // a common vertex makes the complex a cone, hence acyclic
            if facets.is_empty() || facets.iter().fold(u64::MAX, |m, &f| m & f) != 0 {
                return None;
            }
            let complex = SimplicialComplex::from_facets(&facets);
            let dims: Vec<Vec<usize>> = fields
                .iter()
                .map(|&f| reduced_homology_dims(&complex, f))
                .collect();
            dims.iter()
                .any(|d| d.iter().any(|&x| x > 0))
                .then_some((k, dims))
        })
        .collect();
    let mut tables: Vec<BettiTable> = fields
        .iter()
        .map(|&field| BettiTable {
            field,
            entries: BTreeMap::new(),
        })
        .collect();
    for (k, dims) in per_b {
        let b = &lattice.elements()[k];
        for (table, d) in tables.iter_mut().zip(dims) {
            for (s, &x) in d.iter().enumerate() {
                if x > 0 {
                    table.entries.insert((s, b.clone()), x);
                }
            }
        }
    }
    Ok(tables)
}

pub fn betti_table(i: &MonomialIdeal, field: Field, config: &EngineConfig) -> Result<BettiTable> {
    Ok(betti_tables(i, &[field], config)?.remove(0))
}

fn report_from(i: &MonomialIdeal, t: u32, table: Option<&BettiTable>, field: Field, ms: u64) -> DepthReport {
    let n = i.arity();
    let (pd, witness_i, witness_b) = match table.and_then(BettiTable::witness) {
        Some((k, b)) => (k + 1, Some(k), Some(b)),
        None => (0, None, None),
    };
    DepthReport {
        ideal_hash: ideal_hash(i),
        n,
        t,
        depth: n - pd,
        pd,
        field,
        witness_b,
        witness_i,
        elapsed_ms: ms,
    }
}

/// Depth of `S/I` over each field; `t` is recorded as given (use 1 for a
/// plain ideal). The zero ideal has depth `n`.
pub fn depth_reports(
    i: &MonomialIdeal,
    t: u32,
    fields: &[Field],
    config: &EngineConfig,
) -> Result<Vec<DepthReport>> {
    let start = Instant::now();
    if i.is_zero() {
        return Ok(fields
            .iter()
            .map(|&f| report_from(i, t, None, f, 0))
            .collect());
    }
    let tables = betti_tables(i, fields, config)?;
    let ms = start.elapsed().as_millis() as u64;
    Ok(tables
        .iter()
        .map(|tb| report_from(i, t, Some(tb), tb.field, ms))
        .collect())
}

pub fn depth_quotient(i: &MonomialIdeal, field: Field, config: &EngineConfig) -> Result<DepthReport> {
    Ok(depth_reports(i, 1, &[field], config)?.remove(0))
}

/// `depth(S/I^t)`.
pub fn depth_of_power(
    i: &MonomialIdeal,
    t: u32,
    fields: &[Field],
    config: &EngineConfig,
) -> Result<Vec<DepthReport>> {
    depth_reports(&i.power(t)?, t, fields, config)
}

/// Whether `(I^t : f)` is the maximal ideal, which forces `depth(S/I^t) = 0`.
pub fn witness_colon_maximal(i: &MonomialIdeal, t: u32, f: &Monomial) -> Result<bool> {
    let p = i.power(t)?;
    if p.contains(f)? {
        return Err(Error::Precondition(format!("{f} lies in the power I^{t}")));
    }
    let colon = p.colon_monomial(f)?;
    colon.equals(&MonomialIdeal::maximal(i.arity()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedGraph;
    use crate::monomial::{ideal, mono};

    fn depth(i: &MonomialIdeal) -> usize {
        let r = depth_reports(i, 1, &[Field::Gf2, Field::Rational], &EngineConfig::default()).unwrap();
        assert_eq!(r[0].depth, r[1].depth);
        r[0].depth
    }

    #[test]
    fn principal_table() {
        let t = betti_table(&ideal(2, &[&[1, 1]]), Field::Gf2, &EngineConfig::default()).unwrap();
        assert_eq!(t.entries.len(), 1);
        assert_eq!(t.get(0, &[1, 1]), 1);
    }

    #[test]
    fn two_generator_syzygy() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let t = betti_table(&i, Field::Rational, &EngineConfig::default()).unwrap();
        assert_eq!(t.get(1, &[1, 1, 1]), 1);
        assert_eq!(t.total(0), 2);
        assert_eq!(t.max_index(), Some(1));
    }

    #[test]
    fn small_depths() {
        let c3 = WeightedGraph::cycle(3, &[1, 1, 1]).unwrap().edge_ideal();
        assert_eq!(depth(&c3), 1);
        let p3 = WeightedGraph::path(3, &[1, 1]).unwrap().edge_ideal();
        assert_eq!(depth(&p3), 1);
        assert_eq!(depth(&MonomialIdeal::zero(4)), 4);
        assert_eq!(depth(&MonomialIdeal::maximal(3)), 0);
    }

    #[test]
    fn report_fields() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let r = depth_quotient(&i, Field::Gf2, &EngineConfig::default()).unwrap();
        assert_eq!((r.pd, r.depth, r.n), (2, 1, 3));
        assert_eq!(r.witness_i, Some(1));
        assert_eq!(r.witness_b, Some(vec![1, 1, 1]));
        assert_eq!(r.ideal_hash.len(), 64);
    }

    #[test]
    fn maximal_ideal_witnesses() {
        let c5 = WeightedGraph::cycle(5, &[2, 1, 1, 1, 1]).unwrap().edge_ideal();
        assert!(witness_colon_maximal(&c5, 3, &mono(&[2, 2, 1, 1, 1])).unwrap());
        let triv = WeightedGraph::cycle(5, &[1; 5]).unwrap().edge_ideal();
        assert!(witness_colon_maximal(&triv, 3, &mono(&[1, 1, 1, 1, 1])).unwrap());
        assert!(matches!(
            witness_colon_maximal(&triv, 1, &mono(&[1, 1, 0, 0, 0])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn even_trivial_cycle_has_no_maximal_colon() {
        let c4 = WeightedGraph::cycle(4, &[1; 4]).unwrap().edge_ideal();
        let p = c4.power(3).unwrap();
        let bound = p.exponent_bound();
        for a in 0..=bound[0] {
            for b in 0..=bound[1] {
                for c in 0..=bound[2] {
                    for d in 0..=bound[3] {
                        let f = mono(&[a, b, c, d]);
                        if !p.contains(&f).unwrap() {
                            assert!(!witness_colon_maximal(&c4, 3, &f).unwrap());
                        }
                    }
                }
            }
        }
    }
}
