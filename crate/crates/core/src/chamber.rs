//! Walls, cubicles and extremal edges of the subdivision of a product of Weyl chambers.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lp::{lp_solve, LinearProgram, LpStatus, Sense};
use crate::spectra::{block_type, int, Normalization, Rational, Spectrum, SystemFormat};

/// Hyperplane where two composed sums coincide, as one zero-sum normal per component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wall {
    pub normal: Vec<Vec<i64>>,
}

/// Primitive integer ray of the subdivision, one weakly decreasing zero-sum vector per component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub components: Vec<Vec<i64>>,
}

impl Edge {
    pub fn new(components: Vec<Vec<i64>>) -> Result<Self> {
        for c in &components {
            if c.len() < 2 || c.windows(2).any(|w| w[0] < w[1]) || c.iter().sum::<i64>() != 0 {
                return Err(Error::InvalidSpectrum(format!("edge component {c:?} is not a trace-zero chamber vector")));
            }
        }
        if components.iter().all(|c| c.iter().all(|&v| v == 0)) {
            return Err(Error::InvalidSpectrum("edge must be nonzero".into()));
        }
        Ok(Edge { components })
    }

    /// Qubit edge from trace-zero scalars: component `c` is `(a_c, -a_c)`.
    pub fn from_qubit_scalars(a: &[i64]) -> Result<Self> {
        Edge::new(a.iter().map(|&x| vec![x.abs(), -x.abs()]).collect())
    }

    pub fn format(&self) -> SystemFormat {
        SystemFormat::new(self.components.iter().map(|c| c.len()).collect()).expect("valid edge format")
    }

    pub fn spectra(&self) -> Vec<Spectrum> {
        self.components
            .iter()
            .map(|c| Spectrum::new(c.iter().map(|&v| int(v)).collect(), Normalization::TraceZero).expect("chamber vector"))
            .collect()
    }

    /// Composed values in row-major tuple order (not sorted).
    pub fn tuple_sums(&self) -> Vec<i64> {
        crate::spectra::composed_sums(&self.components)
    }

    /// Composed spectrum, sorted nonincreasingly.
    pub fn composed(&self) -> Vec<i64> {
        let mut v = self.tuple_sums();
        v.sort_by(|a, b| b.cmp(a));
        v
    }

    pub fn qubit_scalars(&self) -> Option<Vec<i64>> {
        self.components.iter().map(|c| (c.len() == 2).then_some(c[0])).collect()
    }

    /// Apply a permutation of components (`perm[c]` is the source of slot `c`).
    pub fn permuted(&self, perm: &[usize]) -> Edge {
        Edge { components: perm.iter().map(|&s| self.components[s].clone()).collect() }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&parts.join(";"))
    }
}

impl FromStr for Edge {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let comps = s
            .trim()
            .split(';')
            .map(|c| {
                c.split(',')
                    .map(|v| v.trim().parse::<i64>().map_err(|_| Error::InvalidSpectrum(s.to_string())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Edge::new(comps)
    }
}

/// Bijection from index tuples (row-major order) to ranks `1..N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubicleRanking {
    dims: Vec<usize>,
    /// `rank[t]` for the row-major tuple index `t`.
    rank: Vec<usize>,
}

impl CubicleRanking {
    /// From the sequence of tuple indices in rank order.
    pub fn from_order(format: &SystemFormat, order: &[usize]) -> Result<Self> {
        let n = format.composite_dim();
        if order.len() != n {
            return Err(Error::Dimension(format!("ranking needs {n} entries")));
        }
        let mut rank = vec![0; n];
        for (k, &t) in order.iter().enumerate() {
            if t >= n || rank[t] != 0 {
                return Err(Error::Precondition("order is not a bijection".into()));
            }
            rank[t] = k + 1;
        }
        let r = CubicleRanking { dims: format.dims().to_vec(), rank };
        if !r.is_monotone() {
            return Err(Error::Precondition("rank must increase along every index".into()));
        }
        Ok(r)
    }

    pub fn format(&self) -> SystemFormat {
        SystemFormat::new(self.dims.clone()).expect("valid")
    }

    pub fn rank_of(&self, tuple_index: usize) -> usize {
        self.rank[tuple_index]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// Tuple indices sorted by rank.
    pub fn order(&self) -> Vec<usize> {
        let mut o = vec![0; self.rank.len()];
        for (t, &k) in self.rank.iter().enumerate() {
            o[k - 1] = t;
        }
        o
    }

    /// Component indices (0-based) of the tuple ranked `k` (1-based).
    pub fn tuple_at(&self, k: usize) -> Vec<usize> {
        decode(&self.dims, self.order()[k - 1])
    }

    fn is_monotone(&self) -> bool {
        let n = self.rank.len();
        (0..n).all(|t| successors(&self.dims, t).into_iter().all(|s| self.rank[s] > self.rank[t]))
    }

    /// Two-component rankings as a matrix of ranks.
    pub fn as_matrix(&self) -> Option<Vec<Vec<usize>>> {
        if self.dims.len() != 2 {
            return None;
        }
        let (a, b) = (self.dims[0], self.dims[1]);
        Some((0..a).map(|i| (0..b).map(|j| self.rank[i * b + j]).collect()).collect())
    }

    /// Whether the edge's composed sums are weakly decreasing along this ranking.
    pub fn closure_contains(&self, edge: &Edge) -> bool {
        let sums = edge.tuple_sums();
        let o = self.order();
        o.windows(2).all(|w| sums[w[0]] >= sums[w[1]])
    }
}

impl fmt::Display for CubicleRanking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(m) = self.as_matrix() {
            let rows: Vec<String> =
                m.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")).collect();
            f.write_str(&rows.join(";"))
        } else {
            let parts: Vec<String> = self.rank.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

pub(crate) fn decode(dims: &[usize], mut t: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for c in (0..dims.len()).rev() {
        out[c] = t % dims[c];
        t /= dims[c];
    }
    out
}

pub(crate) fn encode(dims: &[usize], tuple: &[usize]) -> usize {
    tuple.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

fn successors(dims: &[usize], t: usize) -> Vec<usize> {
    let tup = decode(dims, t);
    (0..dims.len())
        .filter(|&c| tup[c] + 1 < dims[c])
        .map(|c| {
            let mut u = tup.clone();
            u[c] += 1;
            encode(dims, &u)
        })
        .collect()
}

fn predecessors(dims: &[usize], t: usize) -> Vec<usize> {
    let tup = decode(dims, t);
    (0..dims.len())
        .filter(|&c| tup[c] > 0)
        .map(|c| {
            let mut u = tup.clone();
            u[c] -= 1;
            encode(dims, &u)
        })
        .collect()
}

fn gcd_all(v: impl Iterator<Item = i64>) -> i64 {
    v.fold(0i64, |g, x| g.gcd(&x))
}

fn canonical_sign(v: &mut [Vec<i64>]) {
    let first = v.iter().flatten().find(|&&x| x != 0).copied().unwrap_or(0);
    if first < 0 {
        v.iter_mut().flatten().for_each(|x| *x = -*x);
    }
}

/// All distinct wall normals, including the chamber walls.
pub fn walls(format: &SystemFormat) -> Vec<Wall> {
    let dims = format.dims();
    let tuples = format.tuples();
    let mut set = BTreeSet::new();
    for (i, t) in tuples.iter().enumerate() {
        for u in tuples.iter().skip(i + 1) {
            let mut normal: Vec<Vec<i64>> = dims
                .iter()
                .enumerate()
                .map(|(c, &d)| {
                    let mut v = vec![0i64; d];
                    v[t[c]] += 1;
                    v[u[c]] -= 1;
                    v
                })
                .collect();
            canonical_sign(&mut normal);
            set.insert(Wall { normal });
        }
    }
    set.into_iter().collect()
}

/// Coordinates of a zero-sum normal on the chamber space: drop the last entry of each component.
fn project_normal(normal: &[Vec<i64>]) -> Vec<i64> {
    normal
        .iter()
        .flat_map(|v| {
            let last = *v.last().unwrap();
            v[..v.len() - 1].iter().map(move |x| x - last)
        })
        .collect()
}

fn lift(dims: &[usize], y: &[i64]) -> Vec<Vec<i64>> {
    let mut out = Vec::with_capacity(dims.len());
    let mut k = 0;
    for &d in dims {
        let mut v: Vec<i64> = y[k..k + d - 1].to_vec();
        v.push(-v.iter().sum::<i64>());
        out.push(v);
        k += d - 1;
    }
    out
}

/// Determinant of a small integer matrix (fraction-free elimination).
pub(crate) fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else { return 0 };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Kernel of an `(n-1) x n` matrix from signed maximal minors.
pub(crate) fn minor_kernel(rows: &[Vec<i64>]) -> Vec<i64> {
    let n = rows.len() + 1;
    (0..n)
        .map(|j| {
            let sub: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, &v)| v as i128).collect())
                .collect();
            let d = det(sub);
            (if j % 2 == 0 { d } else { -d }) as i64
        })
        .collect()
}

fn primitive(v: &mut [i64]) {
    let g = gcd_all(v.iter().copied());
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

fn in_chamber(comps: &[Vec<i64>]) -> bool {
    comps.iter().all(|c| c.windows(2).all(|w| w[0] >= w[1]))
}

/// Fraction-free row echelon used to test independence incrementally.
#[derive(Clone)]
struct Echelon {
    rows: Vec<(usize, Vec<i128>)>,
}

impl Echelon {
    fn reduce(&self, v: &[i64]) -> Option<(usize, Vec<i128>)> {
        let mut w: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for (p, r) in &self.rows {
            if w[*p] != 0 {
                let (a, b) = (r[*p], w[*p]);
                for k in 0..w.len() {
                    w[k] = w[k] * a - r[k] * b;
                }
                let g = w.iter().fold(0i128, |g, x| g.gcd(x));
                if g > 1 {
                    w.iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        w.iter().position(|&x| x != 0).map(|p| (p, w))
    }
}

/// Extremal edges by intersecting `D-1` independent walls, sorted canonically.
pub fn extremal_edges(format: &SystemFormat) -> Vec<Edge> {
    let dims = format.dims().to_vec();
    let d = format.chamber_dim();
    let normals: Vec<Vec<i64>> = walls(format).iter().map(|w| project_normal(&w.normal)).collect();
    if d == 1 {
        // a single chamber coordinate: the only ray is the chamber itself
        let mut comps = lift(&dims, &[1]);
        primitive_components(&mut comps);
        return vec![Edge { components: comps }];
    }
    let found: Vec<BTreeSet<Vec<Vec<i64>>>> = (0..normals.len())
        .into_par_iter()
        .map(|first| {
            let mut out = BTreeSet::new();
            let mut ech = Echelon { rows: vec![] };
            if let Some(r) = ech.reduce(&normals[first]) {
                ech.rows.push(r);
                let mut chosen = vec![first];
                edge_dfs(&normals, &dims, d, first + 1, &mut chosen, &ech, &mut out);
            }
            out
        })
        .collect();
    let mut all = BTreeSet::new();
    for s in found {
        all.extend(s);
    }
    all.into_iter().map(|components| Edge { components }).collect()
}

fn primitive_components(comps: &mut [Vec<i64>]) {
    let g = gcd_all(comps.iter().flatten().copied());
    if g > 1 {
        comps.iter_mut().flatten().for_each(|x| *x /= g);
    }
}

fn edge_dfs(
    normals: &[Vec<i64>],
    dims: &[usize],
    d: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    ech: &Echelon,
    out: &mut BTreeSet<Vec<Vec<i64>>>,
) {
    if chosen.len() == d - 1 {
        let rows: Vec<Vec<i64>> = chosen.iter().map(|&i| normals[i].clone()).collect();
        let mut k = minor_kernel(&rows);
        primitive(&mut k);
        for sign in [1i64, -1] {
            let y: Vec<i64> = k.iter().map(|x| x * sign).collect();
            let mut comps = lift(dims, &y);
            primitive_components(&mut comps);
            if in_chamber(&comps) {
                out.insert(comps);
            }
        }
        return;
    }
    for i in start..normals.len() {
        if normals.len() - i < d - 1 - chosen.len() {
            break;
        }
        if let Some(r) = ech.reduce(&normals[i]) {
            let mut e2 = ech.clone();
            e2.rows.push(r);
            chosen.push(i);
            edge_dfs(normals, dims, d, i + 1, chosen, &e2, out);
            chosen.pop();
        }
    }
}

/// Qubit walls `η · a = 0` with `η ∈ {0, ±1}^n`, first nonzero entry positive.
pub fn qubit_walls(n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![];
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let v: Vec<i64> = (0..n)
            .map(|_| {
                let digit = (c % 3) as i64 - 1;
                c /= 3;
                digit
            })
            .collect();
        if let Some(&f) = v.iter().find(|&&x| x != 0) {
            if f > 0 {
                out.push(v);
            }
        }
    }
    out.sort();
    out
}

/// Qubit edges from absolute values of signed maximal minors of `(n-1)`-subsets of walls,
/// as trace-zero scalars.
pub fn qubit_edges_by_minors(n: usize) -> Vec<Vec<i64>> {
    if n == 1 {
        return vec![vec![1]];
    }
    let ws = qubit_walls(n);
    let found: Vec<BTreeSet<Vec<i64>>> = (0..ws.len())
        .into_par_iter()
        .map(|first| {
            let mut out = BTreeSet::new();
            let mut chosen = vec![first];
            minors_rec(&ws, n, first + 1, &mut chosen, &mut out);
            out
        })
        .collect();
    let mut all = BTreeSet::new();
    for s in found {
        all.extend(s);
    }
    all.into_iter().collect()
}

fn minors_rec(ws: &[Vec<i64>], n: usize, start: usize, chosen: &mut Vec<usize>, out: &mut BTreeSet<Vec<i64>>) {
    if chosen.len() == n - 1 {
        let rows: Vec<Vec<i64>> = chosen.iter().map(|&i| ws[i].clone()).collect();
        let mut k: Vec<i64> = minor_kernel(&rows).into_iter().map(|x| x.abs()).collect();
        if k.iter().any(|&x| x != 0) {
            primitive(&mut k);
            out.insert(k);
        }
        return;
    }
    for i in start..ws.len() {
        chosen.push(i);
        minors_rec(ws, n, i + 1, chosen, out);
        chosen.pop();
    }
}

/// Edges of an all-qubit format from the minor method, as [`Edge`] values sorted canonically.
pub fn qubit_extremal_edges(n: usize) -> Vec<Edge> {
    let mut v: Vec<Edge> =
        qubit_edges_by_minors(n).iter().map(|a| Edge::from_qubit_scalars(a).expect("nonzero")).collect();
    v.sort();
    v
}

/// Sorted representatives of edges up to permutations of equal-dimension components.
pub fn edge_orbit_representatives(edges: &[Edge], format: &SystemFormat) -> Vec<Edge> {
    let syms = format.component_symmetries();
    let mut reps = BTreeSet::new();
    for e in edges {
        let rep = syms.iter().map(|p| e.permuted(p)).min().unwrap();
        reps.insert(rep);
    }
    reps.into_iter().collect()
}

/// Per-component block types and the composite block type of an edge.
pub fn multiplicity_types(edge: &Edge) -> (Vec<Vec<usize>>, Vec<usize>) {
    let comps = edge.components.iter().map(|c| block_type(c)).collect();
    (comps, block_type(&edge.composed()))
}

/// Tie-break used for edge rankings: which component index dominates among equal sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    /// Smaller index of the last component first, then the one before it, and so on.
    LastComponentFirst,
    /// Row-major lexicographic order of tuples.
    FirstComponentFirst,
}

/// Ranking of a cubicle whose closure contains the edge: sums descending, ties broken by
/// [`TieBreak::LastComponentFirst`].
pub fn ranking_for_edge(edge: &Edge) -> CubicleRanking {
    ranking_for_edge_with(edge, TieBreak::LastComponentFirst)
}

pub fn ranking_for_edge_with(edge: &Edge, tie: TieBreak) -> CubicleRanking {
    let format = edge.format();
    let dims = format.dims().to_vec();
    let sums = edge.tuple_sums();
    let mut order: Vec<usize> = (0..sums.len()).collect();
    order.sort_by(|&a, &b| {
        sums[b].cmp(&sums[a]).then_with(|| {
            let (ta, tb) = (decode(&dims, a), decode(&dims, b));
            match tie {
                TieBreak::LastComponentFirst => ta.iter().rev().cmp(tb.iter().rev()),
                TieBreak::FirstComponentFirst => ta.cmp(&tb),
            }
        })
    });
    CubicleRanking::from_order(&format, &order).expect("perturbed edge order is monotone")
}

/// LP over chamber points: maximize a uniform slack for a strict partial ranking.
/// `prefix` lists ranked tuple indices; every other tuple must lie strictly below the last one.
fn prefix_slack(format: &SystemFormat, prefix: &[usize]) -> Rational {
    let dims = format.dims();
    let g: usize = dims.iter().sum();
    let nv = g + 1;
    let t = g;
    let mut lp = LinearProgram::new(nv);
    let mut obj = vec![int(0); nv];
    obj[t] = int(1);
    lp = lp.maximize(obj);
    for v in 0..g {
        lp.free(v);
    }
    lp.bound(t, None, Some(int(1)));
    let offsets: Vec<usize> = dims.iter().scan(0, |s, &d| {
        let o = *s;
        *s += d;
        Some(o)
    }).collect();
    for (c, &d) in dims.iter().enumerate() {
        let mut row = vec![int(0); nv];
        for i in 0..d {
            row[offsets[c] + i] = int(1);
        }
        lp.add(row, Sense::Eq, int(0));
        for i in 0..d - 1 {
            let mut row = vec![int(0); nv];
            row[offsets[c] + i] = int(1);
            row[offsets[c] + i + 1] = int(-1);
            row[t] = int(-1);
            lp.add(row, Sense::Ge, int(0));
        }
    }
    let sum_row = |tuple_idx: usize, sign: i64, row: &mut Vec<Rational>| {
        for (c, &i) in decode(dims, tuple_idx).iter().enumerate() {
            row[offsets[c] + i] += int(sign);
        }
    };
    let diff = |a: usize, b: usize, lp: &mut LinearProgram| {
        let mut row = vec![int(0); nv];
        sum_row(a, 1, &mut row);
        sum_row(b, -1, &mut row);
        row[t] = int(-1);
        lp.add(row, Sense::Ge, int(0));
    };
    for w in prefix.windows(2) {
        diff(w[0], w[1], &mut lp);
    }
    if let Some(&last) = prefix.last() {
        let ranked: BTreeSet<usize> = prefix.iter().copied().collect();
        for u in 0..format.composite_dim() {
            if !ranked.contains(&u) {
                diff(last, u, &mut lp);
            }
        }
    }
    let sol = lp_solve(&lp).expect("well-formed slack LP");
    match sol.status {
        LpStatus::Optimal => sol.value.unwrap(),
        _ => int(0),
    }
}

/// True iff some chamber-interior point has composed sums strictly ordered by the ranking.
pub fn is_realizable(ranking: &CubicleRanking) -> bool {
    prefix_slack(&ranking.format(), &ranking.order()) > int(0)
}

/// All monotone rankings (standard tableaux for two components).
pub fn monotone_rankings(format: &SystemFormat) -> Vec<CubicleRanking> {
    let n = format.composite_dim();
    let dims = format.dims().to_vec();
    let mut out = vec![];
    let mut placed = vec![false; n];
    let mut order = vec![];
    fn rec(dims: &[usize], n: usize, placed: &mut Vec<bool>, order: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if order.len() == n {
            out.push(order.clone());
            return;
        }
        for t in 0..n {
            if !placed[t] && predecessors(dims, t).iter().all(|&p| placed[p]) {
                placed[t] = true;
                order.push(t);
                rec(dims, n, placed, order, out);
                order.pop();
                placed[t] = false;
            }
        }
    }
    let mut orders = vec![];
    rec(&dims, n, &mut placed, &mut order, &mut orders);
    for o in orders {
        out.push(CubicleRanking::from_order(format, &o).expect("monotone"));
    }
    out.sort();
    out
}

/// All realizable rankings, by depth-first extension of realizable prefixes.
pub fn cubicles(format: &SystemFormat) -> Vec<CubicleRanking> {
    let n = format.composite_dim();
    let dims = format.dims().to_vec();
    let mut out = vec![];
    let mut placed = vec![false; n];
    let mut order = vec![];
    cubicle_rec(format, &dims, n, &mut placed, &mut order, &mut out);
    let mut res: Vec<CubicleRanking> =
        out.into_iter().map(|o| CubicleRanking::from_order(format, &o).expect("monotone")).collect();
    res.sort();
    res
}

fn cubicle_rec(
    format: &SystemFormat,
    dims: &[usize],
    n: usize,
    placed: &mut Vec<bool>,
    order: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if order.len() == n {
        out.push(order.clone());
        return;
    }
    for t in 0..n {
        if placed[t] || !predecessors(dims, t).iter().all(|&p| placed[p]) {
            continue;
        }
        order.push(t);
        if order.len() == n || prefix_slack(format, order) > int(0) {
            placed[t] = true;
            cubicle_rec(format, dims, n, placed, order, out);
            placed[t] = false;
        }
        order.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fmt(s: &str) -> SystemFormat {
        s.parse().unwrap()
    }

    #[test]
    fn wall_counts() {
        assert_eq!(walls(&fmt("2x2")).len(), 4);
        assert_eq!(walls(&fmt("2x2x2")).len(), 13);
        let w = walls(&fmt("2x2"));
        assert!(w.contains(&Wall { normal: vec![vec![1, -1], vec![0, 0]] }));
        assert!(w.contains(&Wall { normal: vec![vec![0, 0], vec![1, -1]] }));
        assert!(w.contains(&Wall { normal: vec![vec![1, -1], vec![1, -1]] }));
        assert!(w.contains(&Wall { normal: vec![vec![1, -1], vec![-1, 1]] }));
    }

    #[test]
    fn two_qubit_edges() {
        let e = extremal_edges(&fmt("2x2"));
        let want: Vec<Edge> = ["0,0;1,-1", "1,-1;0,0", "1,-1;1,-1"].iter().map(|s| s.parse().unwrap()).collect();
        assert_eq!(e, want);
    }

    #[test]
    fn determinant_and_kernel() {
        assert_eq!(det(vec![vec![2, 1], vec![1, 3]]), 5);
        assert_eq!(det(vec![vec![0, 1], vec![1, 0]]), -1);
        let k = minor_kernel(&[vec![1, 1, 0], vec![0, 1, 1]]);
        assert_eq!(k, vec![1, -1, 1]);
    }

    #[test]
    fn ranking_examples() {
        let e: Edge = "1,-1;1,-1".parse().unwrap();
        let r = ranking_for_edge(&e);
        assert_eq!(r.as_matrix().unwrap(), vec![vec![1, 3], vec![2, 4]]);
        assert!(is_realizable(&r));
        assert!(r.closure_contains(&e));
        let alt = ranking_for_edge_with(&e, TieBreak::FirstComponentFirst);
        assert_eq!(alt.as_matrix().unwrap(), vec![vec![1, 2], vec![3, 4]]);
        let e2: Edge = "1,-1;0,0".parse().unwrap();
        let r2 = ranking_for_edge(&e2);
        assert!(r2.closure_contains(&e2));
        assert_eq!(r2.as_matrix().unwrap(), vec![vec![1, 2], vec![3, 4]]);
        let e3: Edge = "0,0;1,-1".parse().unwrap();
        assert_eq!(ranking_for_edge(&e3).as_matrix().unwrap(), vec![vec![1, 3], vec![2, 4]]);
    }

    #[test]
    fn multiplicities() {
        let e: Edge = "1,-1;1,-1".parse().unwrap();
        assert_eq!(multiplicity_types(&e), (vec![vec![1, 1], vec![1, 1]], vec![1, 2, 1]));
        let e: Edge = "0,0;1,-1".parse().unwrap();
        assert_eq!(multiplicity_types(&e).0[0], vec![2]);
    }

    #[test]
    fn small_cubicle_counts() {
        assert_eq!(cubicles(&fmt("2x2")).len(), 2);
        assert_eq!(cubicles(&fmt("2x3")).len(), 5);
    }

    #[test]
    fn edge_parse_rejects_bad_input() {
        assert!("1,-1;0,1".parse::<Edge>().is_err());
        assert!("0,0;0,0".parse::<Edge>().is_err());
        assert!("1,0;0,0".parse::<Edge>().is_err());
    }
}
