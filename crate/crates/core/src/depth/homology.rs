//! Reduced simplicial homology from boundary-matrix ranks.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::koszul::SimplicialComplex;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Gf2,
    Rational,
}

impl Field {
    pub fn as_str(self) -> &'static str {
        match self {
            Field::Gf2 => "gf2",
            Field::Rational => "rational",
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "gf2" => Ok(Field::Gf2),
            "rational" | "q" => Ok(Field::Rational),
            other => Err(Error::Precondition(format!("unknown field {other:?}"))),
        }
    }
}

/// Sparse boundary map from faces of size `s` to faces of size `s - 1`:
/// one row per `s`-face listing `(column, sign)` pairs.
fn boundary_rows(c: &SimplicialComplex, s: usize) -> (Vec<Vec<(usize, i8)>>, usize) {
    let lower = c.faces_of_size(s - 1);
    let rows = c
        .faces_of_size(s)
        .iter()
        .map(|&face| {
            let mut row = Vec::with_capacity(s);
            let mut bits = face;
            let mut k = 0;
            while bits != 0 {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                let col = lower
                    .binary_search(&(face & !(1u64 << v)))
                    .expect("complex is downward closed");
                row.push((col, if k % 2 == 0 { 1 } else { -1 }));
                k += 1;
            }
            row
        })
        .collect();
    (rows, lower.len())
}

/// Rank over GF(2) by elimination on packed bit rows.
pub fn rank_gf2(rows: &[Vec<(usize, i8)>], cols: usize) -> usize {
    let words = cols.div_ceil(64).max(1);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut bits = vec![0u64; words];
            for &(c, _) in r {
                bits[c / 64] ^= 1 << (c % 64);
            }
            bits
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..m.len()).find(|&r| m[r][w] & bit != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for r in (rank + 1)..m.len() {
            if m[r][w] & bit != 0 {
                for (x, y) in m[r].iter_mut().zip(&pivot).skip(w) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Rank over the rationals by fraction-free (Bareiss) elimination, first in
/// checked `i128` and, on overflow, again over arbitrary-precision integers.
pub fn rank_rational(rows: &[Vec<(usize, i8)>], cols: usize) -> usize {
    let dense = |r: &Vec<(usize, i8)>| {
        let mut v = vec![0i128; cols];
        for &(c, s) in r {
            v[c] += s as i128;
        }
        v
    };
    let m: Vec<Vec<i128>> = rows.iter().map(dense).collect();
    match bareiss_i128(m.clone(), cols) {
        Some(r) => r,
        None => bareiss_big(
            m.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
            cols,
        ),
    }
}

fn bareiss_i128(mut m: Vec<Vec<i128>>, cols: usize) -> Option<usize> {
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col];
        for r in (rank + 1)..m.len() {
            let factor = m[r][col];
            for c in col..cols {
                let v = pivot
                    .checked_mul(m[r][c])?
                    .checked_sub(factor.checked_mul(m[rank][c])?)?;
                m[r][c] = v / prev;
            }
        }
        prev = pivot;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    Some(rank)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in (rank + 1)..m.len() {
            let factor = m[r][col].clone();
            for c in col..cols {
                let v = &pivot * &m[r][c] - &factor * &m[rank][c];
                m[r][c] = v / &prev;
            }
        }
        prev = pivot;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// `dims[s]` is the dimension of reduced homology in degree `s - 1`, for
/// `s = 0..=levels` (so `dims[0]` is the degree `-1` group). The void
/// complex has all zeros; `{∅}` has a one in degree `-1`.
pub fn reduced_homology_dims(c: &SimplicialComplex, field: Field) -> Vec<usize> {
    let levels = c.size_levels();
    if levels == 0 {
        return vec![0];
    }
    let rank_fn = match field {
        Field::Gf2 => rank_gf2,
        Field::Rational => rank_rational,
    };
    // ranks[s] = rank of the boundary from size s to size s-1; ranks[0] = 0
    let mut ranks = vec![0usize; levels + 1];
    for (s, r) in ranks.iter_mut().enumerate().take(levels).skip(1) {
        let (rows, cols) = boundary_rows(c, s);
        *r = rank_fn(&rows, cols);
    }
    (0..levels)
        .map(|s| c.faces_of_size(s).len() - ranks[s] - ranks[s + 1])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(c: &SimplicialComplex) -> Vec<usize> {
        let g = reduced_homology_dims(c, Field::Gf2);
        assert_eq!(g, reduced_homology_dims(c, Field::Rational));
        g
    }

    #[test]
    fn conventions() {
        assert_eq!(both(&SimplicialComplex::void()), vec![0]);
        assert_eq!(both(&SimplicialComplex::from_facets(&[0])), vec![1]);
    }

    #[test]
    fn two_points_and_circle() {
        assert_eq!(both(&SimplicialComplex::from_facets(&[1, 2])), vec![0, 1]);
        let hollow = SimplicialComplex::from_facets(&[0b011, 0b110, 0b101]);
        assert_eq!(both(&hollow), vec![0, 0, 1]);
        let solid = SimplicialComplex::from_facets(&[0b111]);
        assert_eq!(both(&solid), vec![0, 0, 0, 0]);
    }

    #[test]
    fn hollow_tetrahedron_is_a_sphere() {
        let c = SimplicialComplex::from_facets(&[0b0111, 0b1011, 0b1101, 0b1110]);
        assert_eq!(both(&c), vec![0, 0, 0, 1]);
    }

    #[test]
    fn projective_plane_depends_on_the_field() {
        // six-vertex triangulation of the real projective plane
        let tri: [[u32; 3]; 10] = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        let facets: Vec<u64> = tri
            .iter()
            .map(|t| t.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let c = SimplicialComplex::from_facets(&facets);
        assert_eq!(reduced_homology_dims(&c, Field::Gf2), vec![0, 0, 1, 1]);
        assert_eq!(reduced_homology_dims(&c, Field::Rational), vec![0, 0, 0, 0]);
    }

    #[test]
    fn bareiss_falls_back_on_overflow() {
        let small = vec![vec![(0, 1i8), (1, 1)], vec![(0, 1), (1, -1)]];
        assert_eq!(rank_rational(&small, 2), 2);
        let m: Vec<Vec<BigInt>> = vec![
            vec![BigInt::from(i128::MAX), BigInt::from(3)],
            vec![BigInt::from(i128::MAX), BigInt::from(3)],
        ];
        assert_eq!(bareiss_big(m, 2), 1);
        assert_eq!(bareiss_i128(vec![vec![i128::MAX, 2], vec![i128::MAX, 3]], 2), None);
    }

    #[test]
    fn field_parsing() {
        assert_eq!("gf2".parse::<Field>().unwrap(), Field::Gf2);
        assert_eq!("Rational".parse::<Field>().unwrap(), Field::Rational);
        assert!("gf3".parse::<Field>().is_err());
    }
}
