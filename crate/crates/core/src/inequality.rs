//! Marginal inequalities from Schubert coefficients along extremal edges.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::chamber::{extremal_edges, multiplicity_types, qubit_extremal_edges, ranking_for_edge, CubicleRanking, Edge};
use crate::error::{Error, Result};
use crate::schubert::{
    divided_difference_word, schubert_terms, shuffles, Monomial, Permutation, SparsePolynomial, Var,
};
use crate::spectra::{int, Normalization, Rational, SystemFormat};

/// `Σ_k r_k ν_k − Σ_c Σ_i p^c_i λ^c_i ≥ 0`, with every coefficient group summing to zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarginalInequality {
    format: SystemFormat,
    composite: Vec<i64>,
    components: Vec<Vec<i64>>,
}

impl MarginalInequality {
    /// Validates shapes and zero sums, then divides out the common factor.
    pub fn new(format: SystemFormat, composite: Vec<i64>, components: Vec<Vec<i64>>) -> Result<Self> {
        if composite.len() != format.composite_dim() || components.len() != format.components() {
            return Err(Error::Dimension(format!("inequality does not fit format {format}")));
        }
        for (c, p) in components.iter().enumerate() {
            if p.len() != format.dims()[c] {
                return Err(Error::Dimension(format!("group {} has width {}, expected {}", c + 1, p.len(), format.dims()[c])));
            }
        }
        let groups = std::iter::once(&composite).chain(components.iter());
        for g in groups {
            if g.iter().sum::<i64>() != 0 {
                return Err(Error::Precondition(format!("coefficient group {g:?} must sum to zero")));
            }
        }
        if composite.iter().chain(components.iter().flatten()).all(|&v| v == 0) {
            return Err(Error::Precondition("inequality is identically zero".into()));
        }
        let mut ineq = MarginalInequality { format, composite, components };
        ineq.make_primitive();
        Ok(ineq)
    }

    fn make_primitive(&mut self) {
        let g = self.composite.iter().chain(self.components.iter().flatten()).fold(0i64, |g, x| g.gcd(x));
        if g > 1 {
            self.composite.iter_mut().for_each(|x| *x /= g);
            self.components.iter_mut().flatten().for_each(|x| *x /= g);
        }
    }

    pub fn format(&self) -> &SystemFormat {
        &self.format
    }

    pub fn composite(&self) -> &[i64] {
        &self.composite
    }

    pub fn components(&self) -> &[Vec<i64>] {
        &self.components
    }

    /// Positive integer multiple; canonical form is unchanged.
    pub fn scaled(&self, k: i64) -> MarginalInequality {
        assert!(k > 0, "scale must be positive");
        MarginalInequality {
            format: self.format.clone(),
            composite: self.composite.iter().map(|x| x * k).collect(),
            components: self.components.iter().map(|p| p.iter().map(|x| x * k).collect()).collect(),
        }
    }

    /// Jointly primitive form (a no-op for values built through [`MarginalInequality::new`]).
    pub fn canonical(&self) -> MarginalInequality {
        let mut c = self.clone();
        c.make_primitive();
        c
    }

    /// Left-hand side at the given spectra; homogeneous, so valid for any trace normalization.
    pub fn evaluate(&self, composite: &[Rational], components: &[Vec<Rational>]) -> Rational {
        let mut v = Rational::zero();
        for (r, x) in self.composite.iter().zip(composite) {
            v += x * int(*r);
        }
        for (p, lam) in self.components.iter().zip(components) {
            for (a, x) in p.iter().zip(lam) {
                v -= x * int(*a);
            }
        }
        v
    }

    pub fn evaluate_f64(&self, composite: &[f64], components: &[Vec<f64>]) -> f64 {
        let mut v = 0.0;
        for (r, x) in self.composite.iter().zip(composite) {
            v += *r as f64 * x;
        }
        for (p, lam) in self.components.iter().zip(components) {
            for (a, x) in p.iter().zip(lam) {
                v -= *a as f64 * x;
            }
        }
        v
    }

    /// Relabel components; `perm[c]` is the source of slot `c`. Dimensions must agree.
    pub fn permuted(&self, perm: &[usize]) -> MarginalInequality {
        MarginalInequality {
            format: self.format.clone(),
            composite: self.composite.clone(),
            components: perm.iter().map(|&s| self.components[s].clone()).collect(),
        }
    }

    /// Image under `λ ↦ (−λ_d, …, −λ_1)` applied to every spectrum.
    pub fn dual(&self) -> MarginalInequality {
        let flip = |v: &[i64]| v.iter().rev().map(|x| -x).collect::<Vec<_>>();
        MarginalInequality {
            format: self.format.clone(),
            composite: flip(&self.composite),
            components: self.components.iter().map(|p| flip(p)).collect(),
        }
    }

    /// Body line of the inequality file format: `r_1 … r_N | p^1 … | p^2 … >= 0`.
    pub fn to_row(&self) -> String {
        let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let mut parts = vec![join(&self.composite)];
        parts.extend(self.components.iter().map(|p| join(p)));
        format!("{} >= 0", parts.join(" | "))
    }
}

impl fmt::Display for MarginalInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_row())
    }
}

/// Which generator produced an inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    General,
    QubitFastPath,
}

/// Edge, component permutations, composite permutation and coefficient behind an inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub edge: Edge,
    pub component_perms: Vec<Permutation>,
    pub w: Permutation,
    pub coefficient: i64,
    pub route: Route,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let us: Vec<String> = self.component_perms.iter().map(|u| u.to_string()).collect();
        write!(f, "edge {} u {} w {} c {}", self.edge, us.join(";"), self.w, self.coefficient)
    }
}

/// Deduplicated, canonically sorted inequalities with optional provenance.
#[derive(Clone, Debug, PartialEq)]
pub struct InequalitySystem {
    pub format: SystemFormat,
    pub normalization: Normalization,
    pub inequalities: Vec<MarginalInequality>,
    pub provenance: Vec<Option<Provenance>>,
}

impl InequalitySystem {
    pub fn empty(format: SystemFormat, normalization: Normalization) -> Self {
        InequalitySystem { format, normalization, inequalities: vec![], provenance: vec![] }
    }

    /// Sorts and drops duplicates; the first provenance of a duplicated row is kept.
    pub fn from_entries(
        format: SystemFormat,
        normalization: Normalization,
        entries: impl IntoIterator<Item = (MarginalInequality, Option<Provenance>)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<MarginalInequality, Option<Provenance>> = BTreeMap::new();
        for (ineq, prov) in entries {
            if ineq.format() != &format {
                return Err(Error::Dimension(format!("inequality for {} in a {} system", ineq.format(), format)));
            }
            map.entry(ineq.canonical()).or_insert(prov);
        }
        let (inequalities, provenance) = map.into_iter().unzip();
        Ok(InequalitySystem { format, normalization, inequalities, provenance })
    }

    pub fn from_inequalities(
        format: SystemFormat,
        normalization: Normalization,
        ineqs: impl IntoIterator<Item = MarginalInequality>,
    ) -> Result<Self> {
        Self::from_entries(format, normalization, ineqs.into_iter().map(|i| (i, None)))
    }

    pub fn len(&self) -> usize {
        self.inequalities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inequalities.is_empty()
    }

    pub fn contains(&self, ineq: &MarginalInequality) -> bool {
        self.inequalities.binary_search(&ineq.canonical()).is_ok()
    }

    pub fn canonical_set(&self) -> BTreeSet<MarginalInequality> {
        self.inequalities.iter().cloned().collect()
    }

    /// Closure under permutations of equal-dimension components (and duality if asked).
    pub fn orbit_expanded(&self, with_duality: bool) -> InequalitySystem {
        let mut entries = vec![];
        for (ineq, prov) in self.inequalities.iter().zip(&self.provenance) {
            for image in orbit(ineq, with_duality) {
                entries.push((image, prov.clone()));
            }
        }
        Self::from_entries(self.format.clone(), self.normalization, entries).expect("same format")
    }
}

/// All images of an inequality under component symmetries, optionally with duality.
pub fn orbit(ineq: &MarginalInequality, with_duality: bool) -> BTreeSet<MarginalInequality> {
    let mut out = BTreeSet::new();
    for p in ineq.format().component_symmetries() {
        let img = ineq.permuted(&p);
        if with_duality {
            out.insert(img.dual());
        }
        out.insert(img);
    }
    out
}

/// Options for [`generate_system`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationOptions {
    /// Keep only coefficient 1 (otherwise every nonzero coefficient).
    pub unit_coefficients_only: bool,
    /// Qubit-only generator using odd transpositions and single sign flips.
    pub qubit_fast_path: bool,
    /// Replace the default bound on the length of the composite permutation.
    pub max_length_override: Option<usize>,
}

impl Default for GenerationOptions {
    fn default() -> Self {
        GenerationOptions { unit_coefficients_only: true, qubit_fast_path: false, max_length_override: None }
    }
}

fn component_var(c: usize, i: usize) -> Var {
    Var::new(c, i + 1)
}

/// Substitute `z_k ↦ Σ_c x_{c, i_c}` for the tuple ranked `k` into the Schubert polynomial of `w`.
pub fn specialize_schubert(ranking: &CubicleRanking, w: &Permutation) -> Result<SparsePolynomial> {
    let format = ranking.format();
    if w.size() != format.composite_dim() {
        return Err(Error::Dimension(format!("w must lie in S_{}", format.composite_dim())));
    }
    if w.length() > format.length_bound() {
        return Err(Error::LengthBound(w.length(), format.length_bound()));
    }
    let linear: Vec<SparsePolynomial> = (1..=format.composite_dim())
        .map(|k| {
            let mut p = SparsePolynomial::zero();
            for (c, &i) in ranking.tuple_at(k).iter().enumerate() {
                p.add_term(Monomial::var(component_var(c, i)), BigInt::from(1));
            }
            p
        })
        .collect();
    let mut out = SparsePolynomial::zero();
    for (zs, coef) in schubert_terms(w) {
        let mut term = SparsePolynomial::constant(BigInt::from(coef));
        for &z in &zs {
            term = term.mul(&linear[z as usize - 1]);
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// `∂_{u_1} ⊗ ⋯ ⊗ ∂_{u_r}` of the specialized Schubert polynomial, as an integer.
/// Returns 0 when lengths do not add up or a permutation is not a shuffle of its block type.
pub fn edge_coefficient(edge: &Edge, component_perms: &[Permutation], w: &Permutation) -> Result<i64> {
    edge_coefficient_with(&ranking_for_edge(edge), edge, component_perms, w)
}

/// [`edge_coefficient`] under an explicitly chosen ranking.
pub fn edge_coefficient_with(
    ranking: &CubicleRanking,
    edge: &Edge,
    component_perms: &[Permutation],
    w: &Permutation,
) -> Result<i64> {
    let (types, comp_type) = multiplicity_types(edge);
    if component_perms.len() != types.len() {
        return Err(Error::Dimension("one permutation per component required".into()));
    }
    for (u, t) in component_perms.iter().zip(&types) {
        if u.size() != t.iter().sum::<usize>() {
            return Err(Error::Dimension(format!("permutation {u} has the wrong size")));
        }
        if !u.is_shuffle(t) {
            return Ok(0);
        }
    }
    if !w.is_shuffle(&comp_type) {
        return Ok(0);
    }
    let total: usize = component_perms.iter().map(|u| u.length()).sum();
    if total != w.length() {
        return Ok(0);
    }
    let mut f = specialize_schubert(ranking, w)?;
    for (c, u) in component_perms.iter().enumerate() {
        f = divided_difference_word(&f, c, &u.reduced_word());
        if f.is_zero() {
            return Ok(0);
        }
    }
    let v = f.as_constant().ok_or_else(|| Error::Precondition("coefficient is not a constant".into()))?;
    v.to_i64().ok_or_else(|| Error::Precondition("coefficient overflow".into()))
}

/// Inequality `Σ_c ⟨a^c, λ^c⟩ ≤ ⟨composed(a), ν⟩` of an edge.
pub fn basic_inequality(edge: &Edge) -> MarginalInequality {
    MarginalInequality::new(edge.format(), edge.composed(), edge.components.clone()).expect("edge is nonzero")
}

/// Inequality from a coefficient triple: `r[w(k)] += composed_k`, `p^c[u_c(i)] += a^c_i`.
pub fn permuted_inequality(edge: &Edge, component_perms: &[Permutation], w: &Permutation) -> MarginalInequality {
    let composed = edge.composed();
    let mut r = vec![0i64; composed.len()];
    for (k, v) in composed.iter().enumerate() {
        r[w.apply(k + 1) - 1] += v;
    }
    let comps = edge
        .components
        .iter()
        .zip(component_perms)
        .map(|(a, u)| {
            let mut p = vec![0i64; a.len()];
            for (i, v) in a.iter().enumerate() {
                p[u.apply(i + 1) - 1] += v;
            }
            p
        })
        .collect();
    MarginalInequality::new(edge.format(), r, comps).expect("edge is nonzero")
}

fn keep(coef: i64, unit_only: bool) -> bool {
    if unit_only {
        coef == 1
    } else {
        coef != 0
    }
}

/// Basic inequality plus the single-transposition modifications of a qubit edge whose
/// coefficient passes the filter (unit, or odd when `unit_only` is false).
pub fn qubit_candidates_with(edge: &Edge, unit_only: bool) -> Result<Vec<(MarginalInequality, Provenance)>> {
    let format = edge.format();
    if !format.is_qubit_array() {
        return Err(Error::InvalidFormat(format!("{format} is not a qubit array")));
    }
    let n = format.components();
    let big_n = format.composite_dim();
    let ranking = ranking_for_edge(edge);
    let composed = edge.composed();
    let ids: Vec<Permutation> = vec![Permutation::identity(2); n];
    let mut out = vec![(
        basic_inequality(edge),
        Provenance {
            edge: edge.clone(),
            component_perms: ids.clone(),
            w: Permutation::identity(big_n),
            coefficient: 1,
            route: Route::QubitFastPath,
        },
    )];
    // signs ε_i(k) of qubit i in the tuple ranked k, as prefix sums
    let tuples: Vec<Vec<usize>> = (1..=big_n).map(|k| ranking.tuple_at(k)).collect();
    for j in 1..=big_n / 2 {
        let pos = 2 * j - 1;
        if composed[pos - 1] == composed[pos] {
            continue;
        }
        let w = Permutation::simple(big_n, pos);
        for i in 0..n {
            if edge.components[i][0] == 0 {
                continue;
            }
            let coef: i64 = tuples[..pos].iter().map(|t| if t[i] == 0 { 1 } else { -1 }).sum();
            let passes = if unit_only { coef == 1 } else { coef % 2 != 0 };
            if !passes {
                continue;
            }
            let mut us = ids.clone();
            us[i] = Permutation::simple(2, 1);
            out.push((
                permuted_inequality(edge, &us, &w),
                Provenance { edge: edge.clone(), component_perms: us, w: w.clone(), coefficient: coef, route: Route::QubitFastPath },
            ));
        }
    }
    Ok(out)
}

/// [`qubit_candidates_with`] in unit-coefficient mode, inequalities only.
pub fn qubit_candidates(edge: &Edge) -> Result<Vec<MarginalInequality>> {
    Ok(qubit_candidates_with(edge, true)?.into_iter().map(|(i, _)| i).collect())
}

type TermCache = HashMap<Permutation, Arc<Vec<(Vec<u8>, u64)>>>;

/// Constant `∂_u x^β` for each shuffle `u` of one component, indexed by exponent vector `β`.
struct DividedDifferenceTable {
    perms: Vec<Permutation>,
    words: Vec<Vec<usize>>,
    memo: HashMap<Vec<u8>, Vec<(usize, i64)>>,
}

impl DividedDifferenceTable {
    fn new(perms: Vec<Permutation>) -> Self {
        let words = perms.iter().map(|u| u.reduced_word()).collect();
        DividedDifferenceTable { perms, words, memo: HashMap::new() }
    }

    fn lookup(&mut self, beta: &[u8]) -> &[(usize, i64)] {
        if !self.memo.contains_key(beta) {
            let deg: usize = beta.iter().map(|&b| b as usize).sum();
            let mono = Monomial::from_pairs(
                beta.iter().enumerate().filter(|(_, &b)| b > 0).map(|(i, &b)| (Var::new(0, i + 1), b as u32)).collect(),
            );
            let f = SparsePolynomial::monomial(mono, BigInt::from(1));
            let mut vals = vec![];
            for (idx, u) in self.perms.iter().enumerate() {
                if u.length() != deg {
                    continue;
                }
                let g = divided_difference_word(&f, 0, &self.words[idx]);
                if let Some(c) = g.as_constant() {
                    if !c.is_zero() {
                        vals.push((idx, c.to_i64().expect("small")));
                    }
                }
            }
            self.memo.insert(beta.to_vec(), vals);
        }
        &self.memo[beta]
    }
}

/// Coefficients `c^w_{u_1…u_r}` for one edge, over all component shuffles at once.
struct EdgeCoefficients<'a> {
    edge: &'a Edge,
    dims: Vec<usize>,
    offsets: Vec<usize>,
    /// Group-variable index of each component of the tuple ranked `k` (0-based `k`).
    linear: Vec<Vec<usize>>,
    tables: Vec<DividedDifferenceTable>,
    strides: Vec<usize>,
    tuple_count: usize,
    memo: HashMap<Vec<u8>, Vec<(usize, i64)>>,
}

impl<'a> EdgeCoefficients<'a> {
    fn new(edge: &'a Edge) -> Self {
        let format = edge.format();
        let dims = format.dims().to_vec();
        let offsets: Vec<usize> = dims
            .iter()
            .scan(0, |s, &d| {
                let o = *s;
                *s += d;
                Some(o)
            })
            .collect();
        let ranking = ranking_for_edge(edge);
        let linear = (1..=format.composite_dim())
            .map(|k| ranking.tuple_at(k).iter().enumerate().map(|(c, &i)| offsets[c] + i).collect())
            .collect();
        let (types, _) = multiplicity_types(edge);
        let tables: Vec<DividedDifferenceTable> =
            types.iter().map(|t| DividedDifferenceTable::new(shuffles(t, usize::MAX))).collect();
        let mut strides = vec![1; tables.len()];
        for c in (0..tables.len().saturating_sub(1)).rev() {
            strides[c] = strides[c + 1] * tables[c + 1].perms.len();
        }
        let tuple_count = tables.iter().map(|t| t.perms.len()).product();
        EdgeCoefficients { edge, dims, offsets, linear, tables, strides, tuple_count, memo: HashMap::new() }
    }

    fn perms_at(&self, index: usize) -> Vec<Permutation> {
        self.tables.iter().zip(&self.strides).map(|(t, &s)| t.perms[(index / s) % t.perms.len()].clone()).collect()
    }

    /// Sparse `(u-tuple index, value)` for the specialized monomial `Π z_k^{α_k}`.
    fn monomial(&mut self, zs: &[u8]) -> Vec<(usize, i64)> {
        if let Some(v) = self.memo.get(zs) {
            return v.clone();
        }
        let g: usize = self.dims.iter().sum();
        let mut poly: HashMap<Vec<u8>, i64> = HashMap::from([(vec![0u8; g], 1)]);
        for &z in zs {
            let mut next: HashMap<Vec<u8>, i64> = HashMap::with_capacity(poly.len() * self.dims.len());
            for (beta, c) in &poly {
                for &var in &self.linear[z as usize - 1] {
                    let mut b = beta.clone();
                    b[var] += 1;
                    *next.entry(b).or_insert(0) += c;
                }
            }
            poly = next;
        }
        let mut acc: HashMap<usize, i64> = HashMap::new();
        for (beta, cnt) in poly {
            let mut partial: Vec<(usize, i64)> = vec![(0, cnt)];
            for c in 0..self.dims.len() {
                let slice = &beta[self.offsets[c]..self.offsets[c] + self.dims[c]];
                let stride = self.strides[c];
                let vals = self.tables[c].lookup(slice);
                if vals.is_empty() {
                    partial.clear();
                    break;
                }
                partial = partial
                    .iter()
                    .flat_map(|&(idx, v)| vals.iter().map(move |&(ui, x)| (idx + ui * stride, v * x)))
                    .collect();
            }
            for (idx, v) in partial {
                *acc.entry(idx).or_insert(0) += v;
            }
        }
        let mut out: Vec<(usize, i64)> = acc.into_iter().filter(|&(_, v)| v != 0).collect();
        out.sort_unstable();
        self.memo.insert(zs.to_vec(), out.clone());
        out
    }

    /// Dense coefficients over all u-tuples for a composite permutation with known terms.
    fn coefficients(&mut self, terms: &[(Vec<u8>, u64)]) -> Vec<i64> {
        let mut acc = vec![0i64; self.tuple_count];
        for (zs, k) in terms {
            for (idx, v) in self.monomial(zs) {
                acc[idx] += *k as i64 * v;
            }
        }
        acc
    }

    fn inequalities(&mut self, ws: &[Permutation], cache: &TermCache, unit_only: bool) -> Vec<(MarginalInequality, Provenance)> {
        let mut out = vec![];
        for w in ws {
            let coeffs = self.coefficients(&cache[w]);
            for (idx, &c) in coeffs.iter().enumerate() {
                if keep(c, unit_only) {
                    let us = self.perms_at(idx);
                    out.push((
                        permuted_inequality(self.edge, &us, w),
                        Provenance { edge: self.edge.clone(), component_perms: us, w: w.clone(), coefficient: c, route: Route::General },
                    ));
                }
            }
        }
        out
    }
}

/// Normalization tag used for a generated system of this format.
pub fn default_normalization(format: &SystemFormat) -> Normalization {
    if format.is_qubit_array() {
        Normalization::TraceZero
    } else {
        Normalization::TraceOne
    }
}

/// All admissible inequalities of a format: every extremal edge, every admissible triple.
pub fn generate_system(format: &SystemFormat, opts: &GenerationOptions) -> Result<InequalitySystem> {
    let edges = if format.is_qubit_array() { qubit_extremal_edges(format.components()) } else { extremal_edges(format) };
    generate_for_edges(format, &edges, opts)
}

/// Generation restricted to the given edges.
pub fn generate_for_edges(format: &SystemFormat, edges: &[Edge], opts: &GenerationOptions) -> Result<InequalitySystem> {
    if opts.qubit_fast_path {
        let rows: Vec<Vec<(MarginalInequality, Provenance)>> = edges
            .par_iter()
            .map(|e| qubit_candidates_with(e, opts.unit_coefficients_only))
            .collect::<Result<_>>()?;
        return InequalitySystem::from_entries(
            format.clone(),
            default_normalization(format),
            rows.into_iter().flatten().map(|(i, p)| (i, Some(p))),
        );
    }
    let bound = opts.max_length_override.unwrap_or_else(|| format.length_bound());
    let per_edge_ws: Vec<Vec<Permutation>> =
        edges.iter().map(|e| shuffles(&multiplicity_types(e).1, bound)).collect();
    let distinct: BTreeSet<&Permutation> = per_edge_ws.iter().flatten().collect();
    let distinct: Vec<&Permutation> = distinct.into_iter().collect();
    let cache: TermCache =
        distinct.par_iter().map(|w| ((*w).clone(), Arc::new(schubert_terms(w)))).collect();
    let rows: Vec<Vec<(MarginalInequality, Provenance)>> = edges
        .par_iter()
        .zip(per_edge_ws.par_iter())
        .map(|(e, ws)| EdgeCoefficients::new(e).inequalities(ws, &cache, opts.unit_coefficients_only))
        .collect();
    InequalitySystem::from_entries(
        format.clone(),
        default_normalization(format),
        rows.into_iter().flatten().map(|(i, p)| (i, Some(p))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chamber::{ranking_for_edge_with, TieBreak};

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }
    fn edge(s: &str) -> Edge {
        s.parse().unwrap()
    }

    #[test]
    fn paper_coefficients_two_qubits() {
        let e = edge("1,-1;1,-1");
        let id = Permutation::identity(2);
        let s = perm("2,1");
        assert_eq!(edge_coefficient(&e, &[id.clone(), id.clone()], &Permutation::identity(4)).unwrap(), 1);
        assert_eq!(edge_coefficient(&e, &[s.clone(), s.clone()], &perm("2,1,4,3")).unwrap(), 2);
        assert_eq!(edge_coefficient(&e, &[s.clone(), id.clone()], &perm("2,1,3,4")).unwrap(), 1);
        assert_eq!(edge_coefficient(&e, &[id.clone(), s.clone()], &perm("2,1,3,4")).unwrap(), 1);
        // length mismatch is zero, not an error
        assert_eq!(edge_coefficient(&e, &[s.clone(), s], &perm("2,1,3,4")).unwrap(), 0);
    }

    #[test]
    fn specialization_degree_one() {
        let e = edge("1,-1;1,-1");
        let r = ranking_for_edge(&e);
        let f = specialize_schubert(&r, &perm("2,1,3,4")).unwrap();
        let want = SparsePolynomial::var(Var::new(0, 1)).add(&SparsePolynomial::var(Var::new(1, 1)));
        assert_eq!(f, want);
        assert_eq!(specialize_schubert(&r, &Permutation::identity(4)).unwrap(), SparsePolynomial::one());
        assert!(specialize_schubert(&r, &perm("4,3,2,1")).is_err());
    }

    #[test]
    fn basic_two_qubit() {
        let b = basic_inequality(&edge("1,-1;1,-1"));
        assert_eq!(b.composite(), &[2, 0, 0, -2]);
        assert_eq!(b.components(), &[vec![1, -1], vec![1, -1]]);
    }

    #[test]
    fn fast_path_matches_general_coefficients() {
        for s in ["1,-1;1,-1;1,-1", "1,-1;1,-1;2,-2", "0,0;1,-1;1,-1"] {
            let e = edge(s);
            for (ineq, prov) in qubit_candidates_with(&e, false).unwrap() {
                let c = edge_coefficient(&e, &prov.component_perms, &prov.w).unwrap();
                assert_eq!(c, prov.coefficient, "{s} {ineq}");
            }
        }
    }

    #[test]
    fn ranking_choice_does_not_change_coefficients() {
        let e = edge("1,-1;1,-1");
        let a = ranking_for_edge_with(&e, TieBreak::LastComponentFirst);
        let b = ranking_for_edge_with(&e, TieBreak::FirstComponentFirst);
        let us = shuffles(&[1, 1], 1);
        for w in shuffles(&[1, 2, 1], 2) {
            for u in &us {
                for v in &us {
                    let p = [u.clone(), v.clone()];
                    assert_eq!(edge_coefficient_with(&a, &e, &p, &w).unwrap(), edge_coefficient_with(&b, &e, &p, &w).unwrap());
                }
            }
        }
    }

    #[test]
    fn bulk_coefficients_match_direct() {
        let e = edge("2,-1,-1;1,0,-1");
        let mut ec = EdgeCoefficients::new(&e);
        let (types, ct) = multiplicity_types(&e);
        assert_eq!(types, vec![vec![1, 2], vec![1, 1, 1]]);
        for w in shuffles(&ct, 3) {
            let coeffs = ec.coefficients(&schubert_terms(&w));
            for (idx, &c) in coeffs.iter().enumerate() {
                let us = ec.perms_at(idx);
                assert_eq!(c, edge_coefficient(&e, &us, &w).unwrap(), "w {w} u {us:?}");
            }
        }
    }

    #[test]
    fn two_qubit_generation_contains_bravyi() {
        let f = SystemFormat::qubits(2);
        let sys = generate_system(&f, &GenerationOptions::default()).unwrap();
        let fast = generate_system(&f, &GenerationOptions { qubit_fast_path: true, ..Default::default() }).unwrap();
        assert_eq!(sys.canonical_set(), fast.canonical_set());
        for (r, a, b) in [
            (vec![1, 1, -1, -1], vec![1, -1], vec![0, 0]),
            (vec![2, 0, 0, -2], vec![1, -1], vec![1, -1]),
            (vec![0, 2, 0, -2], vec![1, -1], vec![-1, 1]),
            (vec![2, 0, -2, 0], vec![1, -1], vec![-1, 1]),
        ] {
            let i = MarginalInequality::new(f.clone(), r, vec![a, b]).unwrap();
            assert!(sys.contains(&i), "{i}");
        }
    }

    #[test]
    fn zero_sum_required() {
        let f = SystemFormat::qubits(2);
        assert!(MarginalInequality::new(f.clone(), vec![1, 0, 0, 0], vec![vec![0, 0], vec![0, 0]]).is_err());
        let i = MarginalInequality::new(f, vec![3, 0, 0, -3], vec![vec![3, -3], vec![0, 0]]).unwrap();
        assert_eq!(i.composite(), &[1, 0, 0, -1]);
        assert_eq!(i.scaled(3).canonical(), i);
    }
}
