//! Degree-by-degree linear algebra: graded pieces of maps, homology and
//! cokernel tables, Hartshorne-Rao modules and annihilators.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::ideal::Ideal;
use crate::linalg::{nullspace, Echelon, SparseVec};
use crate::poly::{FieldSpec, Monomial, Polynomial, Scalar};

use super::exactness::{buchsbaum_eisenbud_check, composition_witness, is_minimal_complex};
use super::{FreeComplex, FreeGradedModule, GradedMap, HomologyError};

/// Zero degrees required at each end of an explicit window.
pub const WINDOW_MARGIN: i32 = 2;

/// How far past the top generator degree a cokernel scan may run before the
/// module is declared not of finite length.
pub const COKERNEL_SCAN_CAP: i32 = 24;

type Key = (usize, Monomial);

/// Basis of `(⊕ R(-a_r))_j`: generator index, then monomials
/// grevlex-descending.
fn piece_basis(module: &FreeGradedModule, j: i32) -> Vec<Key> {
    let mut out = Vec::new();
    for (r, a) in module.degrees().iter().enumerate() {
        if j - a >= 0 {
            out.extend(Monomial::all_of_degree((j - a) as u32).into_iter().map(|m| (r, m)));
        }
    }
    out
}

fn image(m: &GradedMap, (col, mono): &Key) -> SparseVec<Key> {
    let mut v = SparseVec::new();
    for (r, row) in m.entries().iter().enumerate() {
        for (em, c) in row[*col].terms() {
            v.insert((r, *em + *mono), c.clone());
        }
    }
    v
}

/// Echelon basis of `im(m)` in degree `j`.
fn image_span(m: &GradedMap, j: i32) -> Echelon<Key> {
    let mut e = Echelon::new(m.field());
    for b in piece_basis(m.source(), j) {
        e.insert(image(m, &b));
    }
    e
}

/// A dense scalar matrix with explicit shape, so empty pieces keep their
/// dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub entries: Vec<Vec<Scalar>>,
}

impl ScalarMatrix {
    pub fn rank(&self, field: FieldSpec) -> usize {
        crate::linalg::dense_rank(field, &self.entries)
    }
}

/// Matrix of `m` in degree `j`, in the bases of [`piece_basis`].
pub fn graded_piece(m: &GradedMap, j: i32) -> ScalarMatrix {
    let rows = piece_basis(m.target(), j);
    let cols = piece_basis(m.source(), j);
    let index: BTreeMap<&Key, usize> = rows.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut entries = vec![vec![Scalar::zero(); cols.len()]; rows.len()];
    for (c, b) in cols.iter().enumerate() {
        for (k, v) in image(m, b) {
            entries[index[&k]][c] = v;
        }
    }
    ScalarMatrix { nrows: rows.len(), ncols: cols.len(), entries }
}

fn rank_in_degree(m: &GradedMap, j: i32) -> usize {
    image_span(m, j).rank()
}

/// How a table's module is presented, when known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    /// The cokernel of the map.
    Cokernel(GradedMap),
    /// `M_j = Hom_K(N_{-j-shift}, K)` where `N` is the cokernel of the map.
    GradedDual { cokernel: GradedMap, shift: i32 },
}

impl Presentation {
    pub fn cokernel_map(&self) -> &GradedMap {
        match self {
            Presentation::Cokernel(m) | Presentation::GradedDual { cokernel: m, .. } => m,
        }
    }
}

/// A finite-length graded module recorded by its nonzero dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleTable {
    presentation: Option<Presentation>,
    dims: BTreeMap<i32, usize>,
}

impl ModuleTable {
    pub fn new(presentation: Option<Presentation>, dims: BTreeMap<i32, usize>) -> Self {
        ModuleTable { presentation, dims: dims.into_iter().filter(|(_, d)| *d > 0).collect() }
    }

    pub fn presentation(&self) -> Option<&Presentation> {
        self.presentation.as_ref()
    }

    pub fn dims(&self) -> &BTreeMap<i32, usize> {
        &self.dims
    }

    pub fn dim(&self, j: i32) -> usize {
        self.dims.get(&j).copied().unwrap_or(0)
    }

    pub fn support(&self) -> Option<(i32, i32)> {
        Some((*self.dims.keys().next()?, *self.dims.keys().next_back()?))
    }

    pub fn total_dimension(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }
}

impl fmt::Display for ModuleTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(|(j, d)| format!("{j}: {d}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Default window `[-(m + 4), m + 4]` with `m` the largest absolute
/// generator degree in the complex.
pub fn default_window(c: &FreeComplex) -> (i32, i32) {
    let m = c.modules().iter().flat_map(|f| f.degrees().to_vec()).map(i32::abs).max().unwrap_or(0);
    (-(m + 4), m + 4)
}

/// `H_p` of the complex, degree by degree over `window` (or the default
/// window), requiring `WINDOW_MARGIN` zero degrees at both ends.
pub fn homology_table(
    c: &FreeComplex,
    position: usize,
    window: Option<(i32, i32)>,
) -> Result<ModuleTable, HomologyError> {
    if position > c.len() {
        return Err(HomologyError::DimensionMismatch(format!(
            "position {position} outside a complex of length {}",
            c.len()
        )));
    }
    let (lo, hi) = window.unwrap_or_else(|| default_window(c));
    if hi - lo + 1 < 2 * WINDOW_MARGIN {
        return Err(HomologyError::WindowTooSmall { lo, hi, degree: lo, dim: 0 });
    }
    let module = c.module(position);
    let mut dims = BTreeMap::new();
    for j in lo..=hi {
        let free = module.hilbert_function(j) as usize;
        let out_rank = if position >= 1 { rank_in_degree(c.map(position), j) } else { 0 };
        let in_rank = if position < c.len() { rank_in_degree(c.map(position + 1), j) } else { 0 };
        let d = free - out_rank - in_rank;
        let in_margin = j < lo + WINDOW_MARGIN || j > hi - WINDOW_MARGIN;
        if in_margin && d != 0 {
            return Err(HomologyError::WindowTooSmall { lo, hi, degree: j, dim: d });
        }
        dims.insert(j, d);
    }
    let presentation = (position == 0).then(|| Presentation::Cokernel(c.map(1).clone()));
    Ok(ModuleTable::new(presentation, dims))
}

/// Dimensions of `coker(m)`, scanning upward from the lowest target
/// generator degree until a zero at or above the top generator degree
/// (after which the cokernel vanishes), then checking the margin.
pub fn cokernel_table(m: &GradedMap) -> Result<ModuleTable, HomologyError> {
    let target = m.target();
    let mut dims = BTreeMap::new();
    let Some(&lo) = target.degrees().iter().min() else {
        return Ok(ModuleTable::new(Some(Presentation::Cokernel(m.clone())), dims));
    };
    let hi = *target.degrees().iter().max().unwrap();
    let dim_at = |j: i32| target.hilbert_function(j) as usize - rank_in_degree(m, j);
    let mut j = lo;
    loop {
        if j > hi + COKERNEL_SCAN_CAP {
            return Err(HomologyError::NotFiniteLength { scanned_to: j - 1 });
        }
        let d = dim_at(j);
        if d == 0 && j >= hi {
            break;
        }
        dims.insert(j, d);
        j += 1;
    }
    for k in 1..=WINDOW_MARGIN {
        let d = dim_at(j + k);
        if d != 0 {
            return Err(HomologyError::WindowTooSmall { lo, hi: j + k, degree: j + k, dim: d });
        }
    }
    Ok(ModuleTable::new(Some(Presentation::Cokernel(m.clone())), dims))
}

/// `M(j) = dim Ext^2(I, R)_{-j-4}` from a certified minimal free resolution
/// `R <- F_1 <- F_2 <- F_3` of the ideal of a curve.
pub fn rao_module(ideal: &Ideal, resolution: &FreeComplex) -> Result<ModuleTable, HomologyError> {
    if resolution.module(0).degrees() != [0] {
        return Err(HomologyError::ResolutionMismatch("F_0 must be R".into()));
    }
    if let Some(w) = composition_witness(resolution) {
        return Err(HomologyError::NotAComplex(w));
    }
    if !is_minimal_complex(resolution) {
        return Err(HomologyError::NotMinimal);
    }
    let cert = buchsbaum_eisenbud_check(resolution)?;
    if let Some(f) = cert.failure() {
        return Err(HomologyError::ResolutionNotExact(f.to_string()));
    }
    let generated =
        Ideal::new(ideal.field(), resolution.map(1).entries()[0].clone()).map_err(|_| HomologyError::FieldMismatch)?;
    if !generated.equals(ideal) {
        return Err(HomologyError::ResolutionMismatch("φ1 does not generate the ideal".into()));
    }
    let dim = ideal.krull_dimension();
    if dim != 2 {
        return Err(HomologyError::NotACurve(dim));
    }
    rao_from_resolution(resolution)
}

/// The Ext computation of [`rao_module`] without the certification steps.
pub fn rao_from_resolution(resolution: &FreeComplex) -> Result<ModuleTable, HomologyError> {
    let n = resolution.len();
    let reflect = |t: &ModuleTable| -> BTreeMap<i32, usize> { t.dims().iter().map(|(j, d)| (-j - 4, *d)).collect() };
    match n {
        0..=2 => Ok(ModuleTable::new(None, BTreeMap::new())),
        3 => {
            let dual = resolution.map(3).transpose();
            let ext = cokernel_table(&dual)?;
            Ok(ModuleTable::new(Some(Presentation::GradedDual { cokernel: dual, shift: 4 }), reflect(&ext)))
        }
        _ => {
            let dual = resolution.dual();
            let ext = homology_table(&dual, n - 3, None)?;
            Ok(ModuleTable::new(None, reflect(&ext)))
        }
    }
}

/// [`rao_from_resolution`] over an explicit window `[lo, hi]` of Rao-module
/// degrees, with the zero margin enforced at both ends.
pub fn rao_in_window(resolution: &FreeComplex, (lo, hi): (i32, i32)) -> Result<ModuleTable, HomologyError> {
    let n = resolution.len();
    if n < 3 {
        return Ok(ModuleTable::new(None, BTreeMap::new()));
    }
    let ext = homology_table(&resolution.dual(), n - 3, Some((-hi - 4, -lo - 4))).map_err(|e| match e {
        HomologyError::WindowTooSmall { degree, dim, .. } => {
            HomologyError::WindowTooSmall { lo, hi, degree: -degree - 4, dim }
        }
        other => other,
    })?;
    let dims = ext.dims().iter().map(|(j, d)| (-j - 4, *d)).collect();
    let presentation = (n == 3).then(|| Presentation::GradedDual { cokernel: resolution.map(3).transpose(), shift: 4 });
    Ok(ModuleTable::new(presentation, dims))
}

/// `dim M(j) = dim M(shift - j)` for all `j`.
pub fn duality_check(table: &ModuleTable, shift: i32) -> bool {
    table.dims().iter().all(|(j, d)| table.dim(shift - j) == *d)
}

/// Basis of the degree-`k` forms `ℓ` with `ℓ M = 0`, for `M` presented as a
/// cokernel `H / im P`: `ℓ` annihilates iff `ℓ e_i ∈ im P` for every
/// generator `e_i` of `H`. A graded dual has the same annihilator.
pub fn annihilator_space(table: &ModuleTable, k: u32) -> Result<Vec<Polynomial>, HomologyError> {
    let p = table.presentation().ok_or(HomologyError::MissingPresentation)?.cokernel_map();
    let field = p.field();
    let monos = Monomial::all_of_degree(k);
    let mut spans: BTreeMap<i32, Echelon<Key>> = BTreeMap::new();
    let mut columns: Vec<SparseVec<(usize, Key)>> = vec![SparseVec::new(); monos.len()];
    for (i, a) in p.target().degrees().iter().enumerate() {
        let span = spans.entry(a + k as i32).or_insert_with(|| image_span(p, a + k as i32));
        for (c, m) in monos.iter().enumerate() {
            let rem = span.reduce(SparseVec::from([((i, *m), field.one())]));
            columns[c].extend(rem.into_iter().map(|(key, v)| ((i, key), v)));
        }
    }
    Ok(nullspace(field, &columns)
        .into_iter()
        .map(|coeffs| {
            let terms = monos.iter().zip(coeffs).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (*m, c));
            Polynomial::from_terms(field, terms).expect("field elements").monic()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::koszul_complex;
    use crate::poly::q;

    const QQ: FieldSpec = FieldSpec::Rationals;

    fn row_map(target_deg: i32, row: &[&str]) -> GradedMap {
        GradedMap::infer_source(QQ, FreeGradedModule::uniform(target_deg, 1), vec![row.iter().map(|s| q(s)).collect()])
            .unwrap()
    }

    #[test]
    fn piece_of_multiplication_by_x() {
        let m = row_map(0, &["x"]);
        let p = graded_piece(&m, 1);
        assert_eq!((p.nrows, p.ncols), (4, 1));
        let col: Vec<Scalar> = p.entries.iter().map(|r| r[0].clone()).collect();
        assert_eq!(col, [1, 0, 0, 0].map(|v| QQ.from_int(v)));
        let z = graded_piece(&m, 0);
        assert_eq!((z.nrows, z.ncols), (1, 0));
    }

    #[test]
    fn exact_koszul_has_no_interior_homology() {
        let k = koszul_complex(QQ, &[q("x"), q("y"), q("z")]).unwrap();
        for pos in 1..=3 {
            assert!(homology_table(&k, pos, None).unwrap().is_zero());
        }
        // R/(x, y, z) is not of finite length
        assert!(matches!(homology_table(&k, 0, None), Err(HomologyError::WindowTooSmall { .. })));
    }

    #[test]
    fn residue_field() {
        let t = cokernel_table(&row_map(0, &["x", "y", "z", "t"])).unwrap();
        assert_eq!(t.dims(), &BTreeMap::from([(0, 1)]));
        assert_eq!(annihilator_space(&t, 2).unwrap().len(), 10);
        assert_eq!(annihilator_space(&t, 1).unwrap().len(), 4);
        assert!(matches!(cokernel_table(&row_map(0, &["x", "y", "z"])), Err(HomologyError::NotFiniteLength { .. })));
    }

    #[test]
    fn koszul_quotient_annihilators() {
        // R/(x, y, z^2, t^2)
        let t = cokernel_table(&row_map(0, &["x", "y", "z^2", "t^2"])).unwrap();
        assert_eq!(t.dims(), &BTreeMap::from([(0, 1), (1, 2), (2, 1)]));
        assert!(duality_check(&t, 2));
        let lin = annihilator_space(&t, 1).unwrap();
        assert_eq!(lin, vec![q("x"), q("y")]);
    }

    #[test]
    fn duality() {
        let t = ModuleTable::new(None, BTreeMap::from([(0, 1), (1, 2)]));
        assert!(!duality_check(&t, 1));
        let s = ModuleTable::new(None, BTreeMap::from([(0, 2), (1, 2)]));
        assert!(duality_check(&s, 1));
    }
}
