//! Join-closure of generator multidegrees.

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;

pub const DEFAULT_MAX_GENERATORS: usize = 600;
pub const DEFAULT_MAX_LATTICE: usize = 200_000;

/// The lcm lattice of a monomial ideal without its bottom element: every
/// lcm of a nonempty set of minimal generators, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcmLattice {
    arity: usize,
    elements: Vec<Vec<u32>>,
}

impl LcmLattice {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Vec<u32>] {
        &self.elements
    }

    pub fn contains(&self, b: &[u32]) -> bool {
        self.elements
            .binary_search_by(|e| e.as_slice().cmp(b))
            .is_ok()
    }
}

pub(crate) fn join(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

/// Worklist closure: every new element is joined with each generator, which
/// reaches all lcms of generator subsets.
pub fn lcm_lattice(i: &MonomialIdeal, max_gens: usize, max_lattice: usize) -> Result<LcmLattice> {
    if i.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if i.num_generators() > max_gens {
        return Err(Error::SizeLimit {
            what: "generator count",
            cap: max_gens,
        });
    }
    let gens: Vec<&[u32]> = i.generators().iter().map(|g| g.exponents()).collect();
    let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
    let mut queue: Vec<Vec<u32>> = Vec::new();
    for g in &gens {
        if seen.insert(g.to_vec()) {
            queue.push(g.to_vec());
        }
    }
    while let Some(x) = queue.pop() {
        for g in &gens {
            let y = join(&x, g);
            if !seen.contains(&y) {
                if seen.len() >= max_lattice {
                    return Err(Error::SizeLimit {
                        what: "lcm lattice size",
                        cap: max_lattice,
                    });
                }
                seen.insert(y.clone());
                queue.push(y);
            }
        }
    }
    let mut elements: Vec<Vec<u32>> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(LcmLattice {
        arity: i.arity(),
        elements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedGraph;
    use crate::monomial::ideal;

    #[test]
    fn one_join() {
        let l = lcm_lattice(&ideal(3, &[&[1, 1, 0], &[0, 1, 1]]), 600, 1000).unwrap();
        assert_eq!(l.elements(), &[vec![0, 1, 1], vec![1, 1, 0], vec![1, 1, 1]]);
    }

    #[test]
    fn principal_is_singleton() {
        let l = lcm_lattice(&ideal(2, &[&[2, 3]]), 600, 1000).unwrap();
        assert_eq!(l.len(), 1);
    }

    #[test]
    fn four_cycle_matches_subset_joins() {
        let i = WeightedGraph::cycle(4, &[1; 4]).unwrap().edge_ideal();
        let gens = i.generators();
        let mut brute = std::collections::BTreeSet::new();
        for mask in 1u32..(1 << gens.len()) {
            let mut acc = vec![0; 4];
            for (k, g) in gens.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    acc = join(&acc, g.exponents());
                }
            }
            brute.insert(acc);
        }
        let l = lcm_lattice(&i, 600, 1000).unwrap();
        assert_eq!(l.elements(), brute.into_iter().collect::<Vec<_>>().as_slice());
    }

    #[test]
    fn caps_are_enforced() {
        let i = WeightedGraph::cycle(5, &[1; 5]).unwrap().edge_ideal();
        assert_eq!(
            lcm_lattice(&i, 4, 1000),
            Err(Error::SizeLimit { what: "generator count", cap: 4 })
        );
        assert!(matches!(
            lcm_lattice(&i, 600, 3),
            Err(Error::SizeLimit { what: "lcm lattice size", cap: 3 })
        ));
        assert_eq!(lcm_lattice(&MonomialIdeal::zero(2), 600, 10), Err(Error::ZeroIdeal));
    }
}
