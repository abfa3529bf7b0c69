//! Quadric ranks, the ACM test and the classification report.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::homology::{koszul_complex, rao_module, FreeComplex};
use crate::ideal::{degree_part, Ideal};
use crate::linalg::dense_rank;
use crate::poly::{Polynomial, Scalar, NVARS};

use super::CurveError;

/// Random combinations tried when estimating the generic rank of `I_2`.
const PENCIL_SAMPLES: usize = 8;

/// Rank of the symmetric 4x4 matrix of a quadratic form, with off-diagonal
/// entries equal to half the mixed coefficients.
pub fn quadric_rank(q: &Polynomial) -> Result<u8, CurveError> {
    if q.is_zero() || !q.is_homogeneous() || q.total_degree() != Some(2) {
        return Err(CurveError::WrongDegrees(format!("{q} is not a nonzero quadratic form")));
    }
    let field = q.field();
    let half = field.inv(&field.from_int(2));
    let mut s: Vec<Vec<Scalar>> = vec![vec![field.from_int(0); NVARS]; NVARS];
    for (m, c) in q.terms() {
        let e = m.exponents();
        let vars: Vec<usize> = (0..NVARS).flat_map(|i| std::iter::repeat_n(i, e[i] as usize)).collect();
        let (i, j) = (vars[0], vars[1]);
        if i == j {
            s[i][i] = c.clone();
        } else {
            let h = field.mul(c, &half);
            s[i][j] = h.clone();
            s[j][i] = h;
        }
    }
    Ok(dense_rank(field, &s) as u8)
}

/// Largest rank among the basis quadrics and a few seeded random
/// combinations of them, which is the rank of a general member.
fn general_rank(quadrics: &[Polynomial]) -> Option<u8> {
    let first = quadrics.first()?;
    let field = first.field();
    let mut best = quadrics.iter().map(|q| quadric_rank(q).expect("degree-2 piece")).max()?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2026);
    for _ in 0..PENCIL_SAMPLES {
        if best == NVARS as u8 || quadrics.len() == 1 {
            break;
        }
        let combo = quadrics
            .iter()
            .fold(Polynomial::zero(field), |acc, q| &acc + &q.scale(&field.from_int(rng.gen_range(-50..=50))));
        if !combo.is_zero() {
            best = best.max(quadric_rank(&combo).expect("degree-2 combination"));
        }
    }
    Some(best)
}

/// Invariants of a curve on a quadric surface. `acm` is `None` when neither
/// criterion applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub contains_quadric: bool,
    pub quadric_rank: Option<u8>,
    pub extremal: bool,
    pub acm: Option<bool>,
    pub mu: usize,
    pub degree: i64,
    pub arithmetic_genus: i64,
    pub rao_dims: Option<BTreeMap<i32, usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AcmCriterion {
    /// A quadric contains the curve and `μ(I) <= 3` decides.
    GeneratorCount,
    /// The Rao module was computed from a certified resolution.
    RaoVanishing,
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AcmVerdict {
    pub acm: Option<bool>,
    pub mu: usize,
    pub criterion: AcmCriterion,
}

struct Analysis {
    report: ClassificationReport,
    criterion: AcmCriterion,
}

fn analyze(ideal: &Ideal, resolution: Option<&FreeComplex>) -> Result<Analysis, CurveError> {
    if !ideal.is_homogeneous() {
        return Err(CurveError::NotHomogeneous("the curve ideal".into()));
    }
    let sat = ideal.saturate()?;
    let dim = sat.krull_dimension();
    if dim != 2 {
        return Err(CurveError::NotACurve(dim));
    }
    let quadrics = degree_part(&sat, 2);
    let quadric_rank = general_rank(&quadrics);
    let gens = sat.minimal_generator_count()?;
    let hilbert = sat.hilbert_data()?;
    let rao = match resolution {
        Some(res) => Some(rao_module(&sat, res)?),
        None if gens.total == 2 => Some(rao_module(&sat, &koszul_complex(sat.field(), &gens.generators)?)?),
        None => None,
    };
    let (acm, criterion) = if !quadrics.is_empty() {
        (Some(gens.total <= 3), AcmCriterion::GeneratorCount)
    } else if let Some(r) = &rao {
        (Some(r.is_zero()), AcmCriterion::RaoVanishing)
    } else {
        (None, AcmCriterion::Undetermined)
    };
    let report = ClassificationReport {
        contains_quadric: !quadrics.is_empty(),
        quadric_rank,
        extremal: quadrics.len() >= 2,
        acm,
        mu: gens.total,
        degree: hilbert.degree,
        arithmetic_genus: hilbert.arithmetic_genus().expect("curves have a Hilbert polynomial"),
        rao_dims: rao.map(|r| r.dims().clone()),
    };
    Ok(Analysis { report, criterion })
}

/// Saturates `ideal` and reports its quadric, generator and Hilbert data.
/// The Rao module is included when the curve is a complete intersection.
pub fn classify_curve(ideal: &Ideal) -> Result<ClassificationReport, CurveError> {
    Ok(analyze(ideal, None)?.report)
}

/// As [`classify_curve`], with the Rao module read off from a minimal free
/// resolution of the saturated ideal. The resolution is certified first.
pub fn classify_curve_with_resolution(
    ideal: &Ideal,
    resolution: &FreeComplex,
) -> Result<ClassificationReport, CurveError> {
    Ok(analyze(ideal, Some(resolution))?.report)
}

pub fn is_acm_curve(ideal: &Ideal, resolution: Option<&FreeComplex>) -> Result<AcmVerdict, CurveError> {
    let a = analyze(ideal, resolution)?;
    Ok(AcmVerdict { acm: a.report.acm, mu: a.report.mu, criterion: a.criterion })
}
