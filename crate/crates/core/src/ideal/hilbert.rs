//! Hilbert series of R/I read off the initial ideal.

use crate::poly::{Monomial, MonomialOrder, NVARS};

use super::{Ideal, IdealError};

/// Numerator `N(s)` of the Hilbert series `N(s) / (1 - s)^4` of `R/J` for
/// the monomial ideal `J` generated by `gens`. Coefficients are listed by
/// increasing power of `s`.
pub fn monomial_hilbert_numerator(gens: Vec<Monomial>) -> Vec<i64> {
    let mut n = numerator(minimalize(gens));
    trim(&mut n);
    n
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn numerator(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    // Pivot on a variable shared by at least two generators.
    let shared = (0..NVARS)
        .map(|v| (v, gens.iter().filter(|g| g.slot(v) > 0).count()))
        .filter(|&(_, c)| c >= 2)
        .max_by_key(|&(_, c)| c);
    let Some((v, _)) = shared else {
        // pairwise coprime: a complete intersection of monomials
        return gens.iter().fold(vec![1], |acc, g| mul(&acc, &one_minus_power(g.degree())));
    };
    let e = gens.iter().map(|g| g.slot(v)).filter(|&k| k > 0).min().unwrap();
    let mut exps = [0u16; NVARS];
    exps[v] = e;
    let p = Monomial::new(exps);
    // 0 -> R/(J:p)(-e) -> R/J -> R/(J + p) -> 0
    let colon: Vec<Monomial> = gens.iter().map(|g| *g - g.gcd(&p)).collect();
    let mut plus = gens;
    plus.push(p);
    let a = numerator(minimalize(plus));
    let b = numerator(minimalize(colon));
    let mut shifted = vec![0; e as usize];
    shifted.extend(b);
    add(&a, &shifted)
}

fn one_minus_power(d: u32) -> Vec<i64> {
    let mut v = vec![0; d as usize + 1];
    v[0] = 1;
    v[d as usize] -= 1;
    v
}

fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

fn trim(v: &mut Vec<i64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

/// Divides `n` by `(1 - s)` exactly; `n(1)` must vanish.
fn divide_one_minus_s(n: &[i64]) -> Vec<i64> {
    // n = (1 - s) q  =>  q_k = sum_{i <= k} n_i
    let mut q = Vec::with_capacity(n.len().saturating_sub(1));
    let mut acc = 0;
    for x in &n[..n.len() - 1] {
        acc += x;
        q.push(acc);
    }
    q
}

fn binomial(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Numerator of the series over `(1 - s)^4`.
    pub numerator: Vec<i64>,
    /// Krull dimension of R/I; `-1` for the unit ideal.
    pub dimension: i32,
    pub degree: i64,
    /// `(d, c)` with Hilbert polynomial `d j + c`, when R/I has dimension 2.
    pub hilbert_polynomial: Option<(i64, i64)>,
}

impl HilbertData {
    pub fn from_numerator(numerator: Vec<i64>) -> Self {
        if numerator.iter().all(|&c| c == 0) {
            return HilbertData { numerator, dimension: -1, degree: 0, hilbert_polynomial: None };
        }
        let mut reduced = numerator.clone();
        let mut k = 0;
        while k < 4 && reduced.iter().sum::<i64>() == 0 {
            reduced = divide_one_minus_s(&reduced);
            k += 1;
        }
        let dimension = 4 - k;
        let degree = reduced.iter().sum();
        let hilbert_polynomial = (dimension == 2).then(|| {
            let c = reduced.iter().enumerate().map(|(i, q)| q * (1 - i as i64)).sum();
            (degree, c)
        });
        HilbertData { numerator, dimension, degree, hilbert_polynomial }
    }

    /// `dim_K (R/I)_j`.
    pub fn hilbert_function(&self, j: i64) -> i64 {
        self.numerator.iter().enumerate().map(|(i, n)| n * binomial(j - i as i64 + 3, 3)).sum()
    }

    /// `1 - c` for a curve with Hilbert polynomial `d j + c`.
    pub fn arithmetic_genus(&self) -> Option<i64> {
        self.hilbert_polynomial.map(|(_, c)| 1 - c)
    }
}

impl Ideal {
    pub fn hilbert_data(&self) -> Result<HilbertData, IdealError> {
        if !self.is_homogeneous() {
            return Err(IdealError::NotHomogeneous);
        }
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        Ok(HilbertData::from_numerator(monomial_hilbert_numerator(self.initial_monomials())))
    }

    /// Krull dimension of R/I: 4 for the zero ideal, -1 for the unit ideal.
    /// Valid for inhomogeneous ideals too, via the grevlex initial ideal.
    pub fn krull_dimension(&self) -> i32 {
        if self.is_zero() {
            return 4;
        }
        let gens: Vec<Monomial> = self
            .groebner_basis(MonomialOrder::Grevlex)
            .iter()
            .filter_map(|g| g.leading_term(MonomialOrder::Grevlex).map(|(m, _)| m))
            .collect();
        HilbertData::from_numerator(monomial_hilbert_numerator(gens)).dimension
    }

    /// `4 - dim R/I`; `None` for the unit ideal.
    pub fn codimension(&self) -> Option<i32> {
        let d = self.krull_dimension();
        (d >= 0).then_some(4 - d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{degree_part, tests::ideal};
    use crate::poly::Var;

    fn mono(e: [u16; 4]) -> Monomial {
        Monomial::new(e)
    }

    /// dim (R/I)_j by exact linear algebra on I_j.
    fn direct_count(i: &Ideal, j: u32) -> i64 {
        Monomial::all_of_degree(j).len() as i64 - degree_part(i, j).len() as i64
    }

    #[test]
    fn numerators_of_small_monomial_ideals() {
        assert_eq!(monomial_hilbert_numerator(vec![]), [1]);
        assert_eq!(monomial_hilbert_numerator(vec![Monomial::one()]), [0]);
        assert_eq!(monomial_hilbert_numerator(vec![Monomial::var(Var::X)]), [1, -1]);
        // (x^2, xy, y^2): 1 - 3s^2 + 2s^3
        let sq = vec![mono([2, 0, 0, 0]), mono([1, 1, 0, 0]), mono([0, 2, 0, 0])];
        assert_eq!(monomial_hilbert_numerator(sq), [1, 0, -3, 2]);
    }

    #[test]
    fn complete_intersection_two_three() {
        let i = ideal(&["xz - yt", "y^3 + t^3 + xzt"]);
        let h = i.hilbert_data().unwrap();
        // (1 - s^2)(1 - s^3)
        assert_eq!(h.numerator, [1, 0, -1, -1, 0, 1]);
        assert_eq!((h.dimension, h.degree), (2, 6));
        assert_eq!(h.arithmetic_genus(), Some(4));
    }

    #[test]
    fn quadric_with_square_of_line() {
        let i = ideal(&["xz - yt", "x^2", "xy", "y^2"]);
        let h = i.hilbert_data().unwrap();
        assert_eq!(h.dimension, 2);
        assert_eq!(h.degree, 2);
        for j in 0..=8 {
            assert_eq!(h.hilbert_function(j), direct_count(&i, j as u32), "degree {j}");
        }
    }

    #[test]
    fn triple_ruling_has_degree_three() {
        let i = ideal(&["xz - yt", "x^3", "x^2y", "xy^2", "y^3"]);
        let h = i.hilbert_data().unwrap();
        assert_eq!((h.dimension, h.degree), (2, 3));
        for j in [0, 2, 3, 5, 7] {
            assert_eq!(h.hilbert_function(j), direct_count(&i, j as u32));
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(ideal(&["x", "y", "z", "t"]).krull_dimension(), 0);
        assert_eq!(ideal(&["x", "x + 1"]).krull_dimension(), -1);
        assert_eq!(ideal(&["0"]).krull_dimension(), 4);
        assert_eq!(ideal(&["x", "y", "z", "z + t^2"]).codimension(), Some(4));
        assert_eq!(ideal(&["x", "y", "tz", "t^2"]).codimension(), Some(3));
        assert_eq!(ideal(&["0"]).hilbert_data(), Err(IdealError::ZeroIdeal));
        assert_eq!(ideal(&["x + 1"]).hilbert_data(), Err(IdealError::NotHomogeneous));
    }

    #[test]
    fn point_has_length_one() {
        let h = ideal(&["x", "y", "z"]).hilbert_data().unwrap();
        assert_eq!((h.dimension, h.degree, h.hilbert_polynomial), (1, 1, None));
    }

    /// hilb(R/I_d)(j) = hilb(R/(x,y)^d)(j) - hilb(R/(x,y)^(d-1))(j-2)
    #[test]
    fn mapping_cone_identity() {
        for d in 1..=6u32 {
            let power = |e: u32| -> Vec<String> { (0..=e).map(|a| format!("x^{}y^{}", a, e - a)).collect() };
            let pd: Vec<String> = power(d);
            let mut gens: Vec<&str> = pd.iter().map(|s| s.as_str()).collect();
            let id = {
                let mut g = gens.clone();
                g.push("xz - yt");
                ideal(&g).hilbert_data().unwrap()
            };
            let a = ideal(&gens).hilbert_data().unwrap();
            let pd1 = power(d - 1);
            gens = pd1.iter().map(|s| s.as_str()).collect();
            let b = ideal(&gens).hilbert_data().unwrap();
            for j in 0..=10i64 {
                let rhs = a.hilbert_function(j) - if j >= 2 { b.hilbert_function(j - 2) } else { 0 };
                assert_eq!(id.hilbert_function(j), rhs, "d = {d}, j = {j}");
            }
            assert_eq!(id.degree, d as i64);
        }
    }
}
