//! Ranks, determinants and minors of polynomial matrices.
//!
//! Exact answers come from fraction-free (Bareiss) elimination, where every
//! intermediate entry is a minor of the input and each division is exact.
//! Evaluation at random points over a large prime field gives cheap lower
//! bounds that are used only to skip work whose outcome they already fix.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::rank_mod_p;
use crate::poly::{FieldSpec, Polynomial, CHECK_PRIME, NVARS};

/// Independent evaluation points used by the randomized pre-check.
pub const CHECK_POINTS: usize = 3;

const SEED: u64 = 0x5eed_cafe;

/// Prime used for specializations: the characteristic itself over a prime
/// field, [`CHECK_PRIME`] over the rationals.
pub(crate) fn check_prime(field: FieldSpec) -> u64 {
    match field {
        FieldSpec::Rationals => CHECK_PRIME,
        FieldSpec::Prime(p) => p,
    }
}

/// Deterministic random points of `(Z/pZ)^4`.
pub(crate) fn random_points(n: usize, p: u64, salt: u64) -> Vec<[u64; NVARS]> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ salt);
    (0..n).map(|_| std::array::from_fn(|_| rng.gen_range(1..p))).collect()
}

pub(crate) fn eval_matrix(m: &[Vec<Polynomial>], point: &[u64; NVARS], p: u64) -> Option<Vec<Vec<u64>>> {
    m.iter().map(|r| r.iter().map(|e| e.eval_mod(point, p)).collect::<Option<Vec<u64>>>()).collect()
}

/// Largest rank over `CHECK_POINTS` random specializations: a lower bound
/// for the rank over the fraction field.
pub fn rank_lower_bound(field: FieldSpec, m: &[Vec<Polynomial>]) -> usize {
    let p = check_prime(field);
    random_points(CHECK_POINTS, p, 1)
        .iter()
        .filter_map(|pt| eval_matrix(m, pt, p))
        .map(|v| rank_mod_p(v, p))
        .max()
        .unwrap_or(0)
}

/// Rank over the fraction field of `K[x, y, z, t]`, by Bareiss elimination.
pub fn bareiss_rank(field: FieldSpec, m: &[Vec<Polynomial>]) -> usize {
    eliminate(field, m.to_vec()).0
}

/// Exact rank; the randomized bound short-circuits when it is already
/// maximal.
pub fn exact_rank(field: FieldSpec, m: &[Vec<Polynomial>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    if rows == 0 || cols == 0 {
        return 0;
    }
    if rank_lower_bound(field, m) == rows.min(cols) {
        return rows.min(cols);
    }
    bareiss_rank(field, m)
}

pub fn determinant(field: FieldSpec, m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        return Polynomial::one(field);
    }
    let (rank, sign, last) = eliminate(field, m.to_vec());
    if rank < n {
        return Polynomial::zero(field);
    }
    if sign < 0 {
        -last
    } else {
        last
    }
}

/// Returns the rank, the sign of the applied permutations and the last
/// pivot, which for a full-rank square matrix is its determinant.
fn eliminate(field: FieldSpec, mut a: Vec<Vec<Polynomial>>) -> (usize, i32, Polynomial) {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = Polynomial::one(field);
    let mut sign = 1;
    let mut k = 0;
    while k < rows.min(cols) {
        // the sparsest nonzero pivot keeps intermediate entries small
        let pivot = (k..rows)
            .flat_map(|i| (k..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| a[i][j].len());
        let Some((pi, pj)) = pivot else { break };
        if pi != k {
            a.swap(pi, k);
            sign = -sign;
        }
        if pj != k {
            for row in a.iter_mut() {
                row.swap(pj, k);
            }
            sign = -sign;
        }
        for i in k + 1..rows {
            for j in k + 1..cols {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = Polynomial::zero(field);
        }
        prev = a[k][k].clone();
        k += 1;
    }
    (k, sign, prev)
}

/// Row and column index sets of size `r`, in lexicographic order.
pub fn index_subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(r).collect()
}

pub fn submatrix(m: &[Vec<Polynomial>], rows: &[usize], cols: &[usize]) -> Vec<Vec<Polynomial>> {
    rows.iter().map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect()).collect()
}

/// A minor with its position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: Polynomial,
}

/// All nonzero `r`-minors, computed exactly.
pub fn minors(field: FieldSpec, m: &[Vec<Polynomial>], r: usize) -> Vec<Minor> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |row| row.len());
    let mut out = Vec::new();
    for rows in index_subsets(nrows, r) {
        for cols in index_subsets(ncols, r) {
            let value = determinant(field, &submatrix(m, &rows, &cols));
            if !value.is_zero() {
                out.push(Minor { rows: rows.clone(), cols, value });
            }
        }
    }
    out
}

/// Positions of the `r`-minors that are nonzero at a random point; every
/// nonzero minor shows up with high probability, and each listed one is
/// certainly nonzero.
pub(crate) fn nonvanishing_minor_positions(
    field: FieldSpec,
    m: &[Vec<Polynomial>],
    r: usize,
    salt: u64,
) -> Vec<(Vec<usize>, Vec<usize>)> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |row| row.len());
    let p = check_prime(field);
    let point = random_points(1, p, salt)[0];
    let Some(v) = eval_matrix(m, &point, p) else {
        return index_subsets(nrows, r)
            .into_iter()
            .flat_map(|rs| index_subsets(ncols, r).into_iter().map(move |cs| (rs.clone(), cs)))
            .collect();
    };
    let mut out = Vec::new();
    for rows in index_subsets(nrows, r) {
        for cols in index_subsets(ncols, r) {
            let sub: Vec<Vec<u64>> = rows.iter().map(|&i| cols.iter().map(|&j| v[i][j]).collect()).collect();
            if rank_mod_p(sub, p) == r {
                out.push((rows.clone(), cols));
            }
        }
    }
    // shuffle deterministically so greedy selection does not favour one corner
    out.shuffle(&mut ChaCha8Rng::seed_from_u64(SEED ^ salt));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    fn mat(rows: &[&[&str]]) -> Vec<Vec<Polynomial>> {
        rows.iter().map(|r| r.iter().map(|s| q(s)).collect()).collect()
    }

    const QQ: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn determinants() {
        assert_eq!(determinant(QQ, &mat(&[&["x", "y"], &["z", "t"]])), q("xt - yz"));
        assert_eq!(determinant(QQ, &mat(&[&["0", "1"], &["1", "0"]])), q("-1"));
        let m = mat(&[&["x", "y", "0"], &["0", "x", "y"], &["z", "0", "t"]]);
        // expansion along the first row
        assert_eq!(determinant(QQ, &m), q("x^2t + y^2z"));
    }

    #[test]
    fn ranks() {
        let m = mat(&[&["x", "y", "z"], &["y", "z", "t"]]);
        assert_eq!(bareiss_rank(QQ, &m), 2);
        assert_eq!(exact_rank(QQ, &m), 2);
        let dependent = mat(&[&["x", "y"], &["xz", "yz"], &["0", "0"]]);
        assert_eq!(bareiss_rank(QQ, &dependent), 1);
        assert_eq!(exact_rank(QQ, &dependent), 1);
        assert_eq!(exact_rank(QQ, &mat(&[&["0", "0"]])), 0);
        assert!(rank_lower_bound(QQ, &m) <= 2);
    }

    #[test]
    fn two_minors_of_twisted_cubic_matrix() {
        let m = mat(&[&["x", "y", "z"], &["y", "z", "t"]]);
        let ms = minors(QQ, &m, 2);
        assert_eq!(ms.len(), 3);
        assert_eq!(ms[0].value, q("xz - y^2"));
        assert_eq!(nonvanishing_minor_positions(QQ, &m, 2, 7).len(), 3);
    }

    #[test]
    fn subsets() {
        assert_eq!(index_subsets(4, 2).len(), 6);
        assert_eq!(index_subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(index_subsets(2, 3).is_empty());
    }
}
