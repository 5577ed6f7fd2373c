//! Symmetric group oracle: characters, Kronecker and Littlewood-Richardson coefficients,
//! reduced (stable) Kronecker coefficients, permutation modules and quasiclassical triples.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lp::{lp_solve, LinearProgram, LpStatus, Sense};
use crate::spectra::{conjugate, dominance_leq, Rational, Spectrum, YoungDiagram};

pub type Partition = YoungDiagram;

/// Conjugacy class of `S_n`, named by its cycle type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConjClass {
    pub cycle_type: Partition,
    pub size: BigUint,
}

impl ConjClass {
    pub fn new(cycle_type: Partition) -> Self {
        let n = cycle_type.weight();
        let mut denom = BigUint::one();
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for &c in cycle_type.rows() {
            *counts.entry(c).or_default() += 1;
        }
        for (&len, &m) in &counts {
            denom *= BigUint::from(len).pow(m as u32) * factorial(m);
        }
        ConjClass { size: factorial(n) / denom, cycle_type }
    }

    pub fn weight(&self) -> usize {
        self.cycle_type.weight()
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// All conjugacy classes of `S_n`.
pub fn classes(n: usize) -> Vec<ConjClass> {
    Partition::partitions(n).into_iter().map(ConjClass::new).collect()
}

fn check_weights(ps: &[&Partition]) -> Result<usize> {
    let n = ps[0].weight();
    for p in &ps[1..] {
        if p.weight() != n {
            return Err(Error::WeightMismatch(n as u64, p.weight() as u64));
        }
    }
    Ok(n)
}

type CharKey = (Vec<u8>, Vec<u8>);

fn char_cache() -> &'static RwLock<HashMap<CharKey, i64>> {
    static CACHE: OnceLock<RwLock<HashMap<CharKey, i64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Beta-set (first-column hook lengths) of `rows`, descending.
fn beta_set(rows: &[u8]) -> Vec<usize> {
    let l = rows.len();
    rows.iter().enumerate().map(|(i, &r)| r as usize + l - 1 - i).collect()
}

fn from_beta(beta: &[usize]) -> Vec<u8> {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let l = b.len();
    let mut rows: Vec<u8> = b.iter().enumerate().map(|(i, &x)| (x + i + 1 - l) as u8).collect();
    while rows.last() == Some(&0) {
        rows.pop();
    }
    rows
}

/// Murnaghan-Nakayama: peel rim hooks of the first cycle length.
fn mn_character(shape: &[u8], cycles: &[u8]) -> i64 {
    if cycles.is_empty() {
        return if shape.is_empty() { 1 } else { 0 };
    }
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(&v) = char_cache().read().expect("cache lock").get(&key) {
        return v;
    }
    let k = cycles[0] as usize;
    let rest = &cycles[1..];
    let beta = beta_set(shape);
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let mut moved = beta.clone();
        moved[i] = b - k;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_character(&from_beta(&moved), rest);
    }
    char_cache().write().expect("cache lock").insert(key, total);
    total
}

fn small(p: &Partition) -> Vec<u8> {
    p.rows().iter().map(|&r| r as u8).collect()
}

/// Irreducible character `χ^λ` on a conjugacy class.
pub fn character(lambda: &Partition, class: &ConjClass) -> Result<i64> {
    check_weights(&[lambda, &class.cycle_type])?;
    if lambda.weight() > 255 {
        return Err(Error::Precondition("partitions above weight 255 are not supported".into()));
    }
    Ok(mn_character(&small(lambda), &small(&class.cycle_type)))
}

/// `(1/n!) Σ |C| f(C)` for an integer class function product.
fn class_average(n: usize, f: impl Fn(&ConjClass) -> Result<BigInt>) -> Result<BigInt> {
    let mut sum = BigInt::zero();
    for c in classes(n) {
        sum += BigInt::from(c.size.clone()) * f(&c)?;
    }
    let nf = BigInt::from(factorial(n));
    let (q, r) = sum.div_rem(&nf);
    debug_assert!(r.is_zero(), "class average not integral");
    Ok(q)
}

fn to_u64(x: BigInt) -> Result<u64> {
    x.to_u64().ok_or_else(|| Error::Precondition(format!("coefficient {x} not a machine integer")))
}

/// Kronecker coefficient `g(λ, μ, ν)`: multiplicity of `ν` in `λ ⊗ μ`.
pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let n = check_weights(&[lambda, mu, nu])?;
    let v = class_average(n, |c| {
        Ok(BigInt::from(character(lambda, c)?) * character(mu, c)? * character(nu, c)?)
    })?;
    to_u64(v)
}

/// Nonzero components of `λ ⊗ μ` with multiplicities.
pub fn kronecker_product(lambda: &Partition, mu: &Partition) -> Result<Vec<(Partition, u64)>> {
    let n = check_weights(&[lambda, mu])?;
    let mut out = Vec::new();
    for nu in Partition::partitions(n) {
        let g = kronecker(lambda, mu, &nu)?;
        if g > 0 {
            out.push((nu, g));
        }
    }
    Ok(out)
}

/// Littlewood-Richardson coefficient `c^ν_{λμ}` by counting LR skew tableaux of shape `ν/λ`
/// and content `μ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if nu.weight() != lambda.weight() + mu.weight() {
        return Err(Error::WeightMismatch(nu.weight() as u64, (lambda.weight() + mu.weight()) as u64));
    }
    if (0..lambda.height()).any(|i| lambda.row(i) > nu.row(i)) {
        return Ok(0);
    }
    // reading order: rows top to bottom, each right to left
    let mut cells = Vec::new();
    for i in 0..nu.height() {
        for j in (lambda.row(i)..nu.row(i)).rev() {
            cells.push((i, j));
        }
    }
    let content = mu.rows().to_vec();
    let mut filling: HashMap<(usize, usize), usize> = HashMap::new();
    let mut counts = vec![0usize; content.len()];
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        lambda: &Partition,
        content: &[usize],
        filling: &mut HashMap<(usize, usize), usize>,
        counts: &mut [usize],
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        let right = filling.get(&(i, j + 1)).copied();
        let above = if i > 0 && j >= lambda.row(i - 1) { filling.get(&(i - 1, j)).copied() } else { None };
        let mut total = 0;
        for v in 0..content.len() {
            if right.is_some_and(|r| v > r) {
                break;
            }
            if above.is_some_and(|a| v <= a) {
                continue;
            }
            if counts[v] == content[v] || (v > 0 && counts[v] + 1 > counts[v - 1]) {
                continue;
            }
            counts[v] += 1;
            filling.insert((i, j), v);
            total += go(k + 1, cells, lambda, content, filling, counts);
            filling.remove(&(i, j));
            counts[v] -= 1;
        }
        total
    }
    Ok(go(0, &cells, lambda, &content, &mut filling, &mut counts))
}

/// `(n − |λ̄|, λ̄)`, or `None` if that is not a partition.
pub fn pad_first_row(reduced: &Partition, n: usize) -> Option<Partition> {
    let w = reduced.weight();
    if n < w + reduced.row(0) {
        return None;
    }
    let mut rows = vec![n - w];
    rows.extend_from_slice(reduced.rows());
    Partition::new(rows).ok()
}

/// Default cap for the stabilization search.
pub fn default_cap(a: &Partition, b: &Partition, c: &Partition) -> usize {
    a.weight() + b.weight() + c.weight() + 4
}

/// Stable value of `g((n−|λ̄|,λ̄), (n−|μ̄|,μ̄), (n−|ν̄|,ν̄))`: the first value repeated at two
/// consecutive `n`, searching up to `n_cap`.
pub fn reduced_kronecker(lb: &Partition, mb: &Partition, nb: &Partition, n_cap: Option<usize>) -> Result<u64> {
    let cap = n_cap.unwrap_or_else(|| default_cap(lb, mb, nb));
    let start = [lb, mb, nb].iter().map(|p| p.weight() + p.row(0)).max().unwrap_or(0).max(1);
    let value = |n: usize| -> Result<u64> {
        let pad = |p: &Partition| pad_first_row(p, n).expect("n above the padding threshold");
        kronecker(&pad(lb), &pad(mb), &pad(nb))
    };
    let mut prev: Option<u64> = None;
    for n in start..=cap {
        let g = value(n)?;
        if prev == Some(g) {
            return Ok(g);
        }
        prev = Some(g);
    }
    Err(Error::Unstable(cap))
}

/// `|λ ∩ μ| = Σ min(λ_i, μ_i)`, the largest first row in `λ ⊗ μ`.
pub fn max_first_row(lambda: &Partition, mu: &Partition) -> Result<usize> {
    check_weights(&[lambda, mu])?;
    Ok(intersection(lambda, mu).weight())
}

/// Largest `ν_1` with `g(λ, μ, ν) > 0`, by direct search.
pub fn max_first_row_oracle(lambda: &Partition, mu: &Partition) -> Result<usize> {
    Ok(kronecker_product(lambda, mu)?.iter().map(|(nu, _)| nu.row(0)).max().unwrap_or(0))
}

/// Row-wise minimum of two diagrams.
pub fn intersection(a: &Partition, b: &Partition) -> Partition {
    let h = a.height().min(b.height());
    Partition::new((0..h).map(|i| a.row(i).min(b.row(i))).collect()).expect("minimum of decreasing rows")
}

/// `ν` with its first row removed.
pub fn strip_first_row(nu: &Partition) -> Partition {
    Partition::new(nu.rows().iter().skip(1).copied().collect()).expect("tail of a partition")
}

/// `g(λ, μ, ν)` for `ν_1 = |λ ∩ μ|` as `Σ c^λ_{κα} c^μ_{κβ} g(α, β, ν̄)` with `κ = λ ∩ μ`.
pub fn boundary_kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    check_weights(&[lambda, mu, nu])?;
    let kappa = intersection(lambda, mu);
    if nu.row(0) != kappa.weight() {
        return Err(Error::Precondition(format!(
            "first row {} differs from |λ∩μ| = {}",
            nu.row(0),
            kappa.weight()
        )));
    }
    let tail = strip_first_row(nu);
    let m = tail.weight();
    let alphas: Vec<(Partition, u64)> = Partition::partitions(m)
        .into_iter()
        .map(|a| Ok((lr_coefficient(&kappa, &a, lambda)?, a)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(c, _)| *c > 0)
        .map(|(c, a)| (a, c))
        .collect();
    let betas: Vec<(Partition, u64)> = Partition::partitions(m)
        .into_iter()
        .map(|b| Ok((lr_coefficient(&kappa, &b, mu)?, b)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(c, _)| *c > 0)
        .map(|(c, b)| (b, c))
        .collect();
    let mut total = 0;
    for (a, ca) in &alphas {
        for (b, cb) in &betas {
            total += ca * cb * kronecker(a, b, &tail)?;
        }
    }
    Ok(total)
}

fn two_row_check(p: &Partition, name: &str) -> Result<()> {
    if p.height() > 2 {
        return Err(Error::Precondition(format!("{name} must have at most two rows")));
    }
    Ok(())
}

/// Lattice points `(a, b)` of the two-row heptagon for `(λ, μ, ν)`, ordered so `λ_2 ≥ μ_2`.
fn septagon_points(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Vec<(i64, i64)>> {
    two_row_check(lambda, "λ")?;
    two_row_check(mu, "μ")?;
    if nu.height() > 4 {
        return Err(Error::Precondition("ν must have at most four rows".into()));
    }
    check_weights(&[lambda, mu, nu])?;
    let (l, m) = if lambda.row(1) >= mu.row(1) { (lambda, mu) } else { (mu, lambda) };
    let (l1, l2, m2) = (l.row(0) as i64, l.row(1) as i64, m.row(1) as i64);
    let v = |i: usize| nu.row(i) as i64;
    let mut pts = Vec::new();
    for a in v(2) + v(3)..=v(1) + v(3) {
        for b in v(1) + v(3)..=(v(1) + v(2)).min(v(0) + v(3)) {
            let d = b - a;
            if d < l2 - m2 || d > l1 - m2 || a + b > l2 + m2 || (a + b - l2 - m2) % 2 != 0 {
                continue;
            }
            pts.push((a, b));
        }
    }
    Ok(pts)
}

/// Number of lattice points in the two-row heptagon (equals `g` for odd weight).
pub fn septagon_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    Ok(septagon_points(lambda, mu, nu)?.len() as u64)
}

/// Lattice point count with weight 1/2 on the line `b − a = λ_1 − μ_2` (even weight rule).
pub fn septagon_weighted(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Rational> {
    let (l, m) = if lambda.row(1) >= mu.row(1) { (lambda, mu) } else { (mu, lambda) };
    let edge = l.row(0) as i64 - m.row(1) as i64;
    let pts = septagon_points(lambda, mu, nu)?;
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    Ok(pts.iter().fold(Rational::zero(), |acc, &(a, b)| {
        if b - a == edge {
            acc + half.clone()
        } else {
            acc + Rational::one()
        }
    }))
}

/// Fixed points of a permutation of cycle type `cycles` on ordered set partitions of type
/// `blocks`: the number of ways to drop whole cycles into blocks filling them exactly.
pub fn permutation_character(blocks: &Partition, cycles: &Partition) -> Result<BigUint> {
    check_weights(&[blocks, cycles])?;
    let mut memo: HashMap<(usize, Vec<usize>), BigUint> = HashMap::new();
    fn go(k: usize, cycles: &[usize], room: &mut Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), BigUint>) -> BigUint {
        if k == cycles.len() {
            return BigUint::one();
        }
        let key = (k, room.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for b in 0..room.len() {
            if room[b] >= cycles[k] {
                room[b] -= cycles[k];
                total += go(k + 1, cycles, room, memo);
                room[b] += cycles[k];
            }
        }
        memo.insert(key, total.clone());
        total
    }
    Ok(go(0, cycles.rows(), &mut blocks.rows().to_vec(), &mut memo))
}

/// Multiplicity of the irreducible `ν` in `[λ] ⊗ [μ]`, where `[λ]` is the permutation module
/// induced from the Young subgroup `S_λ`.
pub fn perm_module_mult(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let n = check_weights(&[lambda, mu, nu])?;
    let v = class_average(n, |c| {
        let pl = BigInt::from(permutation_character(lambda, &c.cycle_type)?);
        let pm = BigInt::from(permutation_character(mu, &c.cycle_type)?);
        Ok(pl * pm * character(nu, c)?)
    })?;
    to_u64(v)
}

/// Nonnegative integer matrices with row sums `rows` and column sums `cols`.
pub fn transport_matrices(rows: &[usize], cols: &[usize]) -> Vec<Vec<usize>> {
    let (r, c) = (rows.len(), cols.len());
    let mut out = Vec::new();
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return out;
    }
    fn go(cell: usize, r: usize, c: usize, rows: &mut [usize], cols: &mut [usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cell == r * c {
            out.push(cur.clone());
            return;
        }
        let (i, j) = (cell / c, cell % c);
        let hi = rows[i].min(cols[j]);
        // last column and last row entries are forced
        let range: Vec<usize> = if j == c - 1 {
            if rows[i] > cols[j] {
                return;
            }
            vec![rows[i]]
        } else if i == r - 1 {
            if cols[j] > rows[i] {
                return;
            }
            vec![cols[j]]
        } else {
            (0..=hi).collect()
        };
        for x in range {
            rows[i] -= x;
            cols[j] -= x;
            cur.push(x);
            go(cell + 1, r, c, rows, cols, cur, out);
            cur.pop();
            rows[i] += x;
            cols[j] += x;
        }
    }
    go(0, r, c, &mut rows.to_vec(), &mut cols.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Some integer matrix with margins `λ`, `μ` has sorted content majorized by `ν`.
pub fn transport_exists(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<bool> {
    check_weights(&[lambda, mu, nu])?;
    for m in transport_matrices(lambda.rows(), mu.rows()) {
        let mut content: Vec<usize> = m.into_iter().filter(|&x| x > 0).collect();
        content.sort_unstable_by(|a, b| b.cmp(a));
        if dominance_leq(&Partition::new(content)?, nu)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Exists a nonnegative real matrix with row sums `λ`, column sums `μ` and sorted content
/// majorized by `ν`. Top-k sums are linearized with one threshold variable per `k`.
pub fn quasiclassical_test(lambda: &Spectrum, mu: &Spectrum, nu: &Spectrum) -> Result<bool> {
    let (l, m, v) = (lambda.values(), mu.values(), nu.values());
    if lambda.trace() != mu.trace() || lambda.trace() != nu.trace() {
        return Err(Error::InvalidSpectrum("spectra must have equal sums".into()));
    }
    let (a, b) = (l.len(), m.len());
    let cells = a * b;
    let ks = cells.min(v.len().saturating_sub(1));
    // variables: p (cells), then for each k in 1..=ks: t_k (free) and u_k (cells)
    let nvars = cells + ks * (1 + cells);
    let mut lp = LinearProgram::new(nvars);
    let zero = Rational::zero;
    for (i, li) in l.iter().enumerate() {
        let mut row = vec![zero(); nvars];
        for j in 0..b {
            row[i * b + j] = Rational::one();
        }
        lp.add(row, Sense::Eq, li.clone());
    }
    for (j, mj) in m.iter().enumerate() {
        let mut row = vec![zero(); nvars];
        for i in 0..a {
            row[i * b + j] = Rational::one();
        }
        lp.add(row, Sense::Eq, mj.clone());
    }
    let mut prefix = Rational::zero();
    for k in 1..=ks {
        prefix += v[k - 1].clone();
        let t = cells + (k - 1) * (1 + cells);
        lp.free(t);
        // k t + Σ u ≤ ν_1 + … + ν_k,  u_ij ≥ p_ij − t
        let mut row = vec![zero(); nvars];
        row[t] = Rational::from_integer(BigInt::from(k));
        for q in 0..cells {
            row[t + 1 + q] = Rational::one();
        }
        lp.add(row, Sense::Le, prefix.clone());
        for q in 0..cells {
            let mut row = vec![zero(); nvars];
            row[t + 1 + q] = Rational::one();
            row[q] = -Rational::one();
            row[t] = Rational::one();
            lp.add(row, Sense::Ge, Rational::zero());
        }
    }
    Ok(lp_solve(&lp)?.status != LpStatus::Infeasible)
}

/// `d(λ) = |λ| − λ_1`.
pub fn depth(p: &Partition) -> usize {
    p.weight() - p.row(0)
}

/// Conjugate partition, re-exported for callers of this module.
pub fn transpose(p: &Partition) -> Partition {
    conjugate(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn characters() {
        for n in 1..=8 {
            let cl = classes(n);
            let total: BigUint = cl.iter().map(|c| c.size.clone()).sum();
            assert_eq!(total, factorial(n));
            for lam in Partition::partitions(n) {
                let mut s = BigInt::zero();
                for c in &cl {
                    let x = character(&lam, c).unwrap();
                    s += BigInt::from(c.size.clone()) * x * x;
                }
                assert_eq!(s, BigInt::from(factorial(n)), "{lam}");
            }
            for c in &cl {
                assert_eq!(character(&p(&[n]), c).unwrap(), 1);
                let odd = c.cycle_type.rows().iter().filter(|&&k| k % 2 == 0).count();
                let sign = if odd % 2 == 0 { 1 } else { -1 };
                assert_eq!(character(&p(&vec![1; n]), c).unwrap(), sign);
            }
        }
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(&p(&[2, 2]), &p(&[2, 2]), &p(&[2, 2])).unwrap(), 1);
        assert_eq!(kronecker(&p(&[1, 1]), &p(&[1, 1]), &p(&[1, 1])).unwrap(), 0);
        for l in Partition::partitions(5) {
            for m in Partition::partitions(5) {
                assert_eq!(kronecker(&l, &m, &p(&[5])).unwrap(), (l == m) as u64);
            }
        }
        assert!(kronecker(&p(&[2]), &p(&[1]), &p(&[2])).is_err());
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1, 1]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(), 2);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[]), &p(&[3])).unwrap(), 0);
    }

    #[test]
    fn reduced_examples() {
        assert_eq!(reduced_kronecker(&p(&[2]), &p(&[1, 1]), &p(&[2, 1]), None).unwrap(), 2);
        assert_eq!(reduced_kronecker(&p(&[2]), &p(&[2]), &p(&[]), None).unwrap(), 1);
        assert_eq!(reduced_kronecker(&p(&[2]), &p(&[1, 1]), &p(&[]), None).unwrap(), 0);
        assert!(matches!(reduced_kronecker(&p(&[2]), &p(&[1, 1]), &p(&[2, 1]), Some(5)), Err(Error::Unstable(5))));
    }

    #[test]
    fn first_row_and_boundary() {
        assert_eq!(max_first_row(&p(&[5, 2]), &p(&[5, 1, 1])).unwrap(), 6);
        assert_eq!(max_first_row_oracle(&p(&[5, 2]), &p(&[5, 1, 1])).unwrap(), 6);
        assert_eq!(max_first_row(&p(&[4]), &p(&[1, 1, 1, 1])).unwrap(), 1);
        let (l, m, n) = (p(&[5, 2]), p(&[5, 1, 1]), p(&[6, 1]));
        assert_eq!(boundary_kronecker(&l, &m, &n).unwrap(), kronecker(&l, &m, &n).unwrap());
        assert!(boundary_kronecker(&l, &m, &p(&[7])).is_err());
    }

    #[test]
    fn septagon_example() {
        let (l, n) = (p(&[4, 3]), p(&[4, 3]));
        assert_eq!(septagon_count(&l, &l, &n).unwrap(), 1);
        assert_eq!(kronecker(&l, &l, &n).unwrap(), 1);
        assert!(septagon_count(&p(&[3, 2, 2]), &l, &n).is_err());
    }

    #[test]
    fn permutation_modules() {
        assert_eq!(perm_module_mult(&p(&[1, 1]), &p(&[2]), &p(&[1, 1])).unwrap(), 1);
        // trivial multiplicity counts orbits on pairs of flags: 2 for [1,1]⊗[1,1]
        assert_eq!(perm_module_mult(&p(&[1, 1]), &p(&[1, 1]), &p(&[2])).unwrap(), 2);
        assert_eq!(transport_matrices(&[1, 1], &[1, 1]).len(), 2);
        assert!(transport_exists(&p(&[2, 1]), &p(&[2, 1]), &p(&[3])).unwrap());
    }

    #[test]
    fn quasiclassical_examples() {
        let s = |v: &[i64], d: i64| {
            Spectrum::from_unsorted(v.iter().map(|&x| Rational::new(BigInt::from(x), BigInt::from(d))).collect())
        };
        assert!(quasiclassical_test(&s(&[1, 1], 2), &s(&[1, 1], 2), &s(&[1, 1, 1, 1], 4)).unwrap());
        assert!(!quasiclassical_test(&s(&[1, 0], 1), &s(&[1, 0], 1), &s(&[1, 1, 0, 0], 2)).unwrap());
        assert!(quasiclassical_test(&s(&[1, 0], 1), &s(&[1, 0], 1), &s(&[1, 0, 0, 0], 1)).unwrap());
        assert!(quasiclassical_test(&s(&[1], 1), &s(&[1], 2), &s(&[1], 1)).is_err());
    }
}
