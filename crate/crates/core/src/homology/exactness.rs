//! Certification of free complexes: vanishing compositions, minimality and
//! the Buchsbaum–Eisenbud acyclicity criterion.

use std::fmt;

use crate::ideal::Ideal;
use crate::poly::Polynomial;

use super::matrix::{self, Minor};
use super::{FreeComplex, GradedMap, HomologyError};

/// A nonzero entry of `φ_i ∘ φ_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionWitness {
    pub position: usize,
    pub row: usize,
    pub col: usize,
    pub entry: Polynomial,
}

impl fmt::Display for CompositionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "composition-zero: φ{}·φ{} has entry ({}, {}) = {}",
            self.position,
            self.position + 1,
            self.row,
            self.col,
            self.entry
        )
    }
}

/// First nonzero entry among the compositions of consecutive maps.
pub fn composition_witness(c: &FreeComplex) -> Option<CompositionWitness> {
    for i in 1..c.len() {
        let prod = c.map(i).compose(c.map(i + 1)).expect("modules checked at construction");
        for (r, row) in prod.entries().iter().enumerate() {
            for (col, e) in row.iter().enumerate() {
                if !e.is_zero() {
                    return Some(CompositionWitness { position: i, row: r, col, entry: e.clone() });
                }
            }
        }
    }
    None
}

pub fn verify_complex(c: &FreeComplex) -> bool {
    composition_witness(c).is_none()
}

/// No nonzero constant entry in any map.
pub fn is_minimal_complex(c: &FreeComplex) -> bool {
    c.maps().iter().all(|m| m.entries().iter().flatten().all(|e| e.is_zero() || !e.is_constant()))
}

/// Rank over the fraction field: exact elimination, with the randomized
/// lower bound used only to skip it when already maximal.
pub fn matrix_rank(m: &GradedMap) -> usize {
    matrix::exact_rank(m.field(), m.entries())
}

/// Verdict at position `i` of the complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BePosition {
    pub index: usize,
    pub free_rank: usize,
    pub map_rank: usize,
    pub next_rank: usize,
    /// Codimension of the ideal of `map_rank`-minors of `φ_i`; `None` when
    /// that ideal is the unit ideal.
    pub codim: Option<i32>,
    /// The minors whose ideal realizes `codim`.
    pub minors: Vec<Minor>,
}

impl BePosition {
    pub fn rank_condition(&self) -> bool {
        self.free_rank == self.map_rank + self.next_rank
    }

    pub fn codim_condition(&self) -> bool {
        self.codim.is_none_or(|c| c >= self.index as i32)
    }

    pub fn passed(&self) -> bool {
        self.rank_condition() && self.codim_condition()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BeFailure {
    Rank { position: usize, free_rank: usize, map_rank: usize, next_rank: usize },
    Codim { position: usize, rank: usize, required: usize, found: i32 },
}

impl fmt::Display for BeFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BeFailure::Rank { position, free_rank, map_rank, next_rank } => write!(
                f,
                "rank: rank F{position} = {free_rank} but rank φ{position} + rank φ{} = {map_rank} + {next_rank}",
                position + 1
            ),
            BeFailure::Codim { position, rank, required, found } => {
                write!(f, "codim: I_{rank}(φ{position}) has codimension {found} < {required}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeCertificate {
    pub positions: Vec<BePosition>,
}

impl BeCertificate {
    pub fn passed(&self) -> bool {
        self.positions.iter().all(|p| p.passed())
    }

    /// The first failing position, as a named witness.
    pub fn failure(&self) -> Option<BeFailure> {
        let p = self.positions.iter().find(|p| !p.passed())?;
        Some(if !p.rank_condition() {
            BeFailure::Rank { position: p.index, free_rank: p.free_rank, map_rank: p.map_rank, next_rank: p.next_rank }
        } else {
            BeFailure::Codim { position: p.index, rank: p.map_rank, required: p.index, found: p.codim.unwrap_or(0) }
        })
    }
}

impl fmt::Display for BeCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.positions {
            let codim = p.codim.map_or("unit".to_string(), |c| c.to_string());
            writeln!(
                f,
                "F{}: rank {} = {} + {} [{}], codim I_{}(φ{}) = {} >= {} [{}]",
                p.index,
                p.free_rank,
                p.map_rank,
                p.next_rank,
                if p.rank_condition() { "ok" } else { "FAIL" },
                p.map_rank,
                p.index,
                codim,
                p.index,
                if p.codim_condition() { "ok" } else { "FAIL" },
            )?;
        }
        Ok(())
    }
}

/// Codimension of `I_r(m)`, certified by a small set of minors when it
/// reaches `target`. Minors nonzero at a random point are added greedily;
/// if they do not reach `target`, every `r`-minor is computed.
fn minors_codim(m: &GradedMap, r: usize, target: usize, salt: u64) -> (Option<i32>, Vec<Minor>) {
    let field = m.field();
    if r == 0 {
        return (None, Vec::new());
    }
    let codim_of = |ms: &[Minor]| -> Option<i32> {
        Ideal::new(field, ms.iter().map(|x| x.value.clone()).collect()).expect("same field").codimension()
    };
    let mut chosen: Vec<Minor> = Vec::new();
    let mut current = Ideal::zero(field);
    for (rows, cols) in matrix::nonvanishing_minor_positions(field, m.entries(), r, salt) {
        let value = matrix::determinant(field, &matrix::submatrix(m.entries(), &rows, &cols));
        if value.is_zero() || current.contains(&value) {
            continue;
        }
        chosen.push(Minor { rows, cols, value });
        current = Ideal::new(field, chosen.iter().map(|x| x.value.clone()).collect()).expect("same field");
        // codim is at most the number of generators
        if chosen.len() >= target {
            let c = current.codimension();
            if c.is_none_or(|c| c >= target as i32) {
                return (c, chosen);
            }
        }
    }
    let all = matrix::minors(field, m.entries(), r);
    (codim_of(&all), all)
}

/// Buchsbaum–Eisenbud: `F_0 <- F_1 <- ... <- F_n <- 0` is acyclic iff for
/// each `i >= 1`, `rank F_i = rank φ_i + rank φ_{i+1}` and
/// `codim I_{rank φ_i}(φ_i) >= i`.
pub fn buchsbaum_eisenbud_check(c: &FreeComplex) -> Result<BeCertificate, HomologyError> {
    if let Some(w) = composition_witness(c) {
        return Err(HomologyError::NotAComplex(w));
    }
    let n = c.len();
    let ranks: Vec<usize> = (1..=n).map(|i| matrix_rank(c.map(i))).collect();
    let mut positions = Vec::with_capacity(n);
    for i in 1..=n {
        let map_rank = ranks[i - 1];
        let next_rank = if i < n { ranks[i] } else { 0 };
        let free_rank = c.module(i).rank();
        let (codim, minors) = if free_rank == map_rank + next_rank {
            minors_codim(c.map(i), map_rank, i, i as u64)
        } else {
            (Some(0), Vec::new())
        };
        positions.push(BePosition { index: i, free_rank, map_rank, next_rank, codim, minors });
    }
    Ok(BeCertificate { positions })
}
