use std::collections::BTreeMap;
use std::fmt;

use crate::poly::{FieldSpec, Polynomial, NVARS};

use super::HomologyError;

/// `⊕ R(-a_i)`, stored by the generator degrees `a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeGradedModule {
    degrees: Vec<i32>,
}

impl FreeGradedModule {
    pub fn from_degrees(degrees: Vec<i32>) -> Self {
        FreeGradedModule { degrees }
    }

    /// `⊕ R(k_i)` from the twists `k_i`.
    pub fn from_twists(twists: &[i32]) -> Self {
        FreeGradedModule { degrees: twists.iter().map(|k| -k).collect() }
    }

    /// `R(-a)^n`.
    pub fn uniform(a: i32, n: usize) -> Self {
        FreeGradedModule { degrees: vec![a; n] }
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn twists(&self) -> Vec<i32> {
        self.degrees.iter().map(|a| -a).collect()
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn dual(&self) -> Self {
        FreeGradedModule { degrees: self.degrees.iter().map(|a| -a).collect() }
    }

    pub fn direct_sum(&self, other: &FreeGradedModule) -> Self {
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(&other.degrees);
        FreeGradedModule { degrees }
    }

    /// `dim_K` of the degree-`j` piece.
    pub fn hilbert_function(&self, j: i32) -> i64 {
        self.degrees.iter().map(|a| monomial_count(j - a)).sum()
    }
}

/// Number of monomials of degree `d` in four variables.
pub(crate) fn monomial_count(d: i32) -> i64 {
    if d < 0 {
        return 0;
    }
    let d = d as i64;
    (d + 1) * (d + 2) * (d + 3) / 6
}

impl fmt::Display for FreeGradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            return write!(f, "0");
        }
        let mut counts: BTreeMap<i32, usize> = BTreeMap::new();
        for a in &self.degrees {
            *counts.entry(*a).or_default() += 1;
        }
        let parts: Vec<String> = counts
            .iter()
            .map(|(a, n)| {
                let base = if *a == 0 { "R".to_string() } else { format!("R({})", -a) };
                if *n == 1 {
                    base
                } else {
                    format!("{base}^{n}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// A homogeneous map of free modules. `entries[i][j]` is the component from
/// source generator `j` to target generator `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    field: FieldSpec,
    source: FreeGradedModule,
    target: FreeGradedModule,
    entries: Vec<Vec<Polynomial>>,
}

impl GradedMap {
    /// Validates shapes and that every nonzero entry `(i, j)` is homogeneous
    /// of degree `a_j - b_i`.
    pub fn new(
        field: FieldSpec,
        source: FreeGradedModule,
        target: FreeGradedModule,
        entries: Vec<Vec<Polynomial>>,
    ) -> Result<Self, HomologyError> {
        if entries.len() != target.rank() || entries.iter().any(|r| r.len() != source.rank()) {
            return Err(HomologyError::DimensionMismatch(format!(
                "matrix shape does not match {} x {} for ranks of target and source",
                target.rank(),
                source.rank()
            )));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.field() != field {
                    return Err(HomologyError::FieldMismatch);
                }
                if e.is_zero() {
                    continue;
                }
                let expected = source.degrees[j] - target.degrees[i];
                if !e.is_homogeneous() || e.total_degree().map(|d| d as i32) != Some(expected) {
                    return Err(HomologyError::DegreeMismatch {
                        map: None,
                        row: i,
                        col: j,
                        expected,
                        entry: e.to_string(),
                    });
                }
            }
        }
        Ok(GradedMap { field, source, target, entries })
    }

    /// Map with target degrees given and source degrees inferred from the
    /// first nonzero entry in each column; zero columns are rejected.
    pub fn infer_source(
        field: FieldSpec,
        target: FreeGradedModule,
        entries: Vec<Vec<Polynomial>>,
    ) -> Result<Self, HomologyError> {
        let cols = entries.first().map_or(0, |r| r.len());
        let mut degrees = Vec::with_capacity(cols);
        for j in 0..cols {
            let found = entries
                .iter()
                .enumerate()
                .find_map(|(i, r)| r.get(j)?.total_degree().map(|d| d as i32 + target.degrees[i]));
            match found {
                Some(a) => degrees.push(a),
                None => {
                    return Err(HomologyError::DimensionMismatch(format!(
                        "column {j} is zero; its degree is undetermined"
                    )))
                }
            }
        }
        GradedMap::new(field, FreeGradedModule::from_degrees(degrees), target, entries)
    }

    pub fn zero(field: FieldSpec, source: FreeGradedModule, target: FreeGradedModule) -> Self {
        let entries = vec![vec![Polynomial::zero(field); source.rank()]; target.rank()];
        GradedMap { field, source, target, entries }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn source(&self) -> &FreeGradedModule {
        &self.source
    }

    pub fn target(&self) -> &FreeGradedModule {
        &self.target
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }

    /// The dual map `Hom(target, R) -> Hom(source, R)`.
    pub fn transpose(&self) -> GradedMap {
        let entries =
            (0..self.ncols()).map(|j| (0..self.nrows()).map(|i| self.entries[i][j].clone()).collect()).collect();
        GradedMap { field: self.field, source: self.target.dual(), target: self.source.dual(), entries }
    }

    /// `self ∘ other`, where `other` maps into the source of `self`.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap, HomologyError> {
        if other.target != self.source {
            return Err(HomologyError::DimensionMismatch("composition of maps with unequal middle modules".into()));
        }
        let mut entries = vec![vec![Polynomial::zero(self.field); other.ncols()]; self.nrows()];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                for k in 0..self.ncols() {
                    let a = &self.entries[i][k];
                    let b = &other.entries[k][j];
                    if !a.is_zero() && !b.is_zero() {
                        *e = &*e + &(a * b);
                    }
                }
            }
        }
        Ok(GradedMap { field: self.field, source: other.source.clone(), target: self.target.clone(), entries })
    }

    /// Entrywise substitution of variables; degrees are kept, so `images`
    /// should be linear forms.
    pub fn substitute(&self, images: &[Polynomial; NVARS]) -> GradedMap {
        let entries = self.entries.iter().map(|r| r.iter().map(|e| e.substitute(images)).collect()).collect();
        GradedMap { field: self.field, source: self.source.clone(), target: self.target.clone(), entries }
    }
}

impl fmt::Display for GradedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self.entries.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect();
        let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
        for row in &cells {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", padded.join("  "))?;
        }
        Ok(())
    }
}

/// `F_0 <- F_1 <- ... <- F_n`, stored as `maps[i] = φ_{i+1}: F_{i+1} -> F_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeComplex {
    maps: Vec<GradedMap>,
}

impl FreeComplex {
    /// Checks that consecutive maps share their middle module. Whether the
    /// compositions vanish is left to [`super::verify_complex`].
    pub fn new(maps: Vec<GradedMap>) -> Result<Self, HomologyError> {
        if maps.is_empty() {
            return Err(HomologyError::DimensionMismatch("a complex needs at least one map".into()));
        }
        let field = maps[0].field;
        for (i, w) in maps.windows(2).enumerate() {
            if w[1].target != w[0].source {
                return Err(HomologyError::DimensionMismatch(format!(
                    "source of φ{} ({}) differs from target of φ{} ({})",
                    i + 1,
                    w[0].source,
                    i + 2,
                    w[1].target
                )));
            }
        }
        if maps.iter().any(|m| m.field != field) {
            return Err(HomologyError::FieldMismatch);
        }
        Ok(FreeComplex { maps })
    }

    pub fn field(&self) -> FieldSpec {
        self.maps[0].field
    }

    pub fn maps(&self) -> &[GradedMap] {
        &self.maps
    }

    /// `φ_i: F_i -> F_{i-1}` for `1 <= i <= len`.
    pub fn map(&self, i: usize) -> &GradedMap {
        &self.maps[i - 1]
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// `F_0, ..., F_n`.
    pub fn modules(&self) -> Vec<FreeGradedModule> {
        let mut out = vec![self.maps[0].target.clone()];
        out.extend(self.maps.iter().map(|m| m.source.clone()));
        out
    }

    pub fn module(&self, i: usize) -> FreeGradedModule {
        if i == 0 {
            self.maps[0].target.clone()
        } else {
            self.maps[i - 1].source.clone()
        }
    }

    /// `Hom(-, R)` reindexed as a chain complex: position `k` holds
    /// `F_{n-k}^*` and `ψ_k = φ_{n-k+1}^T`.
    pub fn dual(&self) -> FreeComplex {
        FreeComplex { maps: self.maps.iter().rev().map(|m| m.transpose()).collect() }
    }

    pub fn substitute(&self, images: &[Polynomial; NVARS]) -> FreeComplex {
        FreeComplex { maps: self.maps.iter().map(|m| m.substitute(images)).collect() }
    }

    /// Betti numbers of the module resolved by `F_1 <- ... <- F_n`, that is
    /// the ideal generated by the entries of `φ_1` when `F_0 = R`.
    pub fn betti_table(&self) -> BettiTable {
        BettiTable::from_modules(&self.modules()[1..])
    }

    /// `sum_i (-1)^i dim (F_i)_j`.
    pub fn euler_characteristic(&self, j: i32) -> i64 {
        self.modules()
            .iter()
            .enumerate()
            .map(|(i, m)| if i % 2 == 0 { m.hilbert_function(j) } else { -m.hilbert_function(j) })
            .sum()
    }
}

/// `β_{i,a}`: the number of generators of degree `a` in homological
/// position `i`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), usize>,
    length: usize,
}

impl BettiTable {
    pub fn from_modules(modules: &[FreeGradedModule]) -> Self {
        let mut entries = BTreeMap::new();
        for (i, m) in modules.iter().enumerate() {
            for a in m.degrees() {
                *entries.entry((i, *a)).or_default() += 1;
            }
        }
        BettiTable { entries, length: modules.len() }
    }

    pub fn get(&self, i: usize, a: i32) -> usize {
        self.entries.get(&(i, a)).copied().unwrap_or(0)
    }

    /// Total rank in homological position `i`.
    pub fn rank(&self, i: usize) -> usize {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, n)| n).sum()
    }

    pub fn ranks(&self) -> Vec<usize> {
        (0..self.length).map(|i| self.rank(i)).collect()
    }

    pub fn entries(&self) -> &BTreeMap<(usize, i32), usize> {
        &self.entries
    }
}

/// Macaulay-style diagram: column `i`, row `a - i`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: std::collections::BTreeSet<i32> = self.entries.keys().map(|(i, a)| a - *i as i32).collect();
        let ranks = self.ranks();
        let w = ranks.iter().map(|r| r.to_string().len()).max().unwrap_or(1).max(self.length.to_string().len()) + 1;
        let label_w = rows.iter().map(|r| format!("{r}:").len()).max().unwrap_or(0).max("total:".len());
        write!(f, "{:label_w$}", "")?;
        for i in 0..self.length {
            write!(f, "{i:>w$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>label_w$}", "total:")?;
        for r in &ranks {
            write!(f, "{r:>w$}")?;
        }
        writeln!(f)?;
        for row in rows {
            write!(f, "{:>label_w$}", format!("{row}:"))?;
            for i in 0..self.length {
                let n = self.get(i, row + i as i32);
                if n == 0 {
                    write!(f, "{:>w$}", ".")?;
                } else {
                    write!(f, "{n:>w$}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Koszul complex resolving `R/(f_1, ..., f_n)` for a regular sequence.
pub fn koszul_complex(field: FieldSpec, forms: &[Polynomial]) -> Result<FreeComplex, HomologyError> {
    let n = forms.len();
    let mut degs = Vec::with_capacity(n);
    for f in forms {
        match f.total_degree() {
            Some(d) if f.is_homogeneous() => degs.push(d as i32),
            _ => return Err(HomologyError::DimensionMismatch(format!("{f} is not a nonzero form"))),
        }
    }
    let subsets = |k: usize| -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == k {
                out.push((0..n).filter(|i| mask & (1 << i) != 0).collect());
            }
        }
        out.sort();
        out
    };
    let module = |s: &[Vec<usize>]| {
        FreeGradedModule::from_degrees(s.iter().map(|set| set.iter().map(|i| degs[*i]).sum()).collect())
    };
    let mut maps = Vec::with_capacity(n);
    for k in 1..=n {
        let src = subsets(k);
        let tgt = subsets(k - 1);
        let mut entries = vec![vec![Polynomial::zero(field); src.len()]; tgt.len()];
        for (j, s) in src.iter().enumerate() {
            for (pos, v) in s.iter().enumerate() {
                let rest: Vec<usize> = s.iter().copied().filter(|x| x != v).collect();
                let i = tgt.binary_search(&rest).expect("faces are subsets");
                entries[i][j] = if pos % 2 == 0 { forms[*v].clone() } else { -&forms[*v] };
            }
        }
        maps.push(GradedMap::new(field, module(&src), module(&tgt), entries)?);
    }
    FreeComplex::new(maps)
}
