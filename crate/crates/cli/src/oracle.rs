//! Brute-force multigraded Betti numbers, independent of the lattice engine.
//!
//! For `b` an lcm of generators, `beta_{i,b}(I)` is the reduced homology in
//! degree `i - 1` of the complex of generator subsets dividing `b` whose lcm
//! is strictly below `b`. Every subset is enumerated, so keep `|G|` small.

use std::collections::{BTreeMap, BTreeSet};

use edge_depth::depth::Field;
use edge_depth::MonomialIdeal;

pub const MAX_ORACLE_GENERATORS: usize = 12;

fn lcm_of(gens: &[Vec<u32>], mask: u32, arity: usize) -> Vec<u32> {
    let mut out = vec![0; arity];
    for (k, g) in gens.iter().enumerate() {
        if mask >> k & 1 == 1 {
            for (o, &e) in out.iter_mut().zip(g) {
                *o = (*o).max(e);
            }
        }
    }
    out
}

fn rank_gf2(rows: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<bool>> = rows.iter().map(|r| r.iter().map(|&x| x % 2 != 0).collect()).collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] {
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Fraction-free elimination over the integers, which computes the rank over Q.
fn rank_rational(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev: i128 = 1;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][c];
        for r in rank + 1..m.len() {
            let f = m[r][c];
            for k in c..cols {
                let v = piv
                    .checked_mul(m[r][k])
                    .and_then(|a| f.checked_mul(m[rank][k]).and_then(|b| a.checked_sub(b)))
                    .expect("oracle matrices stay small");
                m[r][k] = v / prev;
            }
        }
        prev = piv;
        rank += 1;
    }
    rank
}

fn rank(rows: &[Vec<i64>], field: Field) -> usize {
    match field {
        Field::Gf2 => rank_gf2(rows),
        Field::Rational => rank_rational(rows),
    }
}

/// Reduced homology dimensions of the complex whose faces are `faces`
/// (bitmasks, closed under subsets, containing the empty face).
fn reduced_homology(faces: &[u32], field: Field) -> Vec<usize> {
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    let by_size: Vec<Vec<u32>> = (0..=top)
        .map(|s| faces.iter().copied().filter(|f| f.count_ones() as usize == s).collect())
        .collect();
    // boundary from faces of size s to size s - 1, s >= 1
    let boundary_rank = |s: usize| -> usize {
        if s == 0 || s > top {
            return 0;
        }
        let rows: Vec<Vec<i64>> = by_size[s]
            .iter()
            .map(|&f| {
                let mut row = vec![0i64; by_size[s - 1].len()];
                let mut sign = 1;
                for v in 0..32 {
                    if f >> v & 1 == 1 {
                        let g = f & !(1 << v);
                        let col = by_size[s - 1].iter().position(|&h| h == g).expect("closed under subsets");
                        row[col] = sign;
                        sign = -sign;
                    }
                }
                row
            })
            .collect();
        rank(&rows, field)
    };
    let ranks: Vec<usize> = (0..=top + 1).map(boundary_rank).collect();
    // dims[s] is reduced homology in degree s - 1
    (0..=top)
        .map(|s| by_size[s].len() - ranks[s] - ranks[s + 1])
        .collect()
}

/// Nonzero `beta_{i,b}(I)` keyed by `(i, b)`.
pub fn brute_force_betti(i: &MonomialIdeal, field: Field) -> BTreeMap<(usize, Vec<u32>), usize> {
    let gens: Vec<Vec<u32>> = i.generators().iter().map(|g| g.exponents().to_vec()).collect();
    assert!(gens.len() <= MAX_ORACLE_GENERATORS, "oracle is exponential in the generator count");
    let arity = i.arity();
    let lcms: BTreeSet<Vec<u32>> = (1u32..1 << gens.len()).map(|m| lcm_of(&gens, m, arity)).collect();
    let mut out = BTreeMap::new();
    for b in lcms {
        let below: Vec<Vec<u32>> = gens
            .iter()
            .filter(|g| g.iter().zip(&b).all(|(x, y)| x <= y))
            .cloned()
            .collect();
        let faces: Vec<u32> = (0u32..1 << below.len())
            .filter(|&m| lcm_of(&below, m, arity) != b)
            .collect();
        for (s, d) in reduced_homology(&faces, field).into_iter().enumerate() {
            if d > 0 {
                out.insert((s, b.clone()), d);
            }
        }
    }
    out
}

/// `sum_S (-1)^(|S|-1)` over nonempty generator subsets with lcm `b`, which
/// must equal `sum_i (-1)^i beta_{i,b}(I)`.
pub fn taylor_euler(i: &MonomialIdeal) -> BTreeMap<Vec<u32>, i64> {
    let gens: Vec<Vec<u32>> = i.generators().iter().map(|g| g.exponents().to_vec()).collect();
    let mut out: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for m in 1u32..1 << gens.len() {
        let sign = if m.count_ones() % 2 == 1 { 1 } else { -1 };
        *out.entry(lcm_of(&gens, m, i.arity())).or_default() += sign;
    }
    out.retain(|_, v| *v != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use edge_depth::monomial::ideal;

    #[test]
    fn two_variables() {
        let b = brute_force_betti(&ideal(2, &[&[1, 0], &[0, 1]]), Field::Rational);
        let want: BTreeMap<_, _> = [((0, vec![1, 0]), 1), ((0, vec![0, 1]), 1), ((1, vec![1, 1]), 1)].into();
        assert_eq!(b, want);
    }

    #[test]
    fn ranks_over_both_fields() {
        let m = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        assert_eq!(rank_gf2(&m), 2);
        assert_eq!(rank_rational(&m), 3);
    }

    #[test]
    fn euler_of_path() {
        let e = taylor_euler(&ideal(3, &[&[1, 1, 0], &[0, 1, 1]]));
        assert_eq!(e.get(&vec![1, 1, 1]), Some(&-1));
        assert_eq!(e.len(), 3);
    }
}
