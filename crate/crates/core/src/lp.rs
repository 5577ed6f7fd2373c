//! Exact rational linear programming: revised simplex with Bland's rule.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::spectra::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub sense: Sense,
    pub rhs: Rational,
}

/// `optimize objective · x` subject to constraints and per-variable bounds.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub objective: Vec<Rational>,
    pub maximize: bool,
    pub constraints: Vec<Constraint>,
    /// (lower, upper); `None` means unbounded on that side.
    pub bounds: Vec<(Option<Rational>, Option<Rational>)>,
}

impl LinearProgram {
    /// All variables nonnegative, zero objective.
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            objective: vec![Rational::zero(); num_vars],
            maximize: false,
            constraints: vec![],
            bounds: vec![(Some(Rational::zero()), None); num_vars],
        }
    }

    pub fn maximize(mut self, objective: Vec<Rational>) -> Self {
        self.objective = objective;
        self.maximize = true;
        self
    }

    pub fn minimize(mut self, objective: Vec<Rational>) -> Self {
        self.objective = objective;
        self.maximize = false;
        self
    }

    pub fn free(&mut self, var: usize) {
        self.bounds[var] = (None, None);
    }

    pub fn bound(&mut self, var: usize, lower: Option<Rational>, upper: Option<Rational>) {
        self.bounds[var] = (lower, upper);
    }

    pub fn add(&mut self, coeffs: Vec<Rational>, sense: Sense, rhs: Rational) {
        self.constraints.push(Constraint { coeffs, sense, rhs });
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug)]
pub struct LpSolution {
    pub status: LpStatus,
    pub value: Option<Rational>,
    pub point: Option<Vec<Rational>>,
}

/// `min c·x, A x = b, x >= 0` with the columns given sparsely.
#[derive(Clone, Debug)]
pub struct StandardForm {
    pub rows: usize,
    pub columns: Vec<Vec<(usize, Rational)>>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

#[derive(Clone, Debug)]
pub enum StandardOutcome {
    Optimal { x: Vec<Rational>, value: Rational, duals: Vec<Rational> },
    /// `z` with `z·A_j >= 0` for every column and `z·b < 0`.
    Infeasible { certificate: Vec<Rational> },
    Unbounded,
}

fn lcm_of_denoms<'a>(it: impl Iterator<Item = &'a Rational>) -> BigInt {
    it.fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

struct Engine {
    m: usize,
    cols: Vec<Vec<(usize, BigInt)>>,
    n_real: usize,
    basis: Vec<usize>,
    binv: Vec<Vec<Rational>>,
    xb: Vec<Rational>,
    /// Column that left the basis in the last pivot.
    basis_prev: usize,
}

impl Engine {
    fn duals(&self, cost: &dyn Fn(usize) -> BigInt) -> Vec<Rational> {
        let m = self.m;
        let mut y = vec![Rational::zero(); m];
        for (r, &bj) in self.basis.iter().enumerate() {
            let cj = cost(bj);
            if cj.is_zero() {
                continue;
            }
            let cj = Rational::from_integer(cj);
            for i in 0..m {
                if !self.binv[r][i].is_zero() {
                    y[i] += &cj * &self.binv[r][i];
                }
            }
        }
        y
    }

    /// Runs the simplex on the current basis. `allowed(j)` restricts entering columns.
    fn run(&mut self, cost: &dyn Fn(usize) -> BigInt, allowed: &dyn Fn(usize) -> bool) -> bool {
        let m = self.m;
        let mut in_basis = vec![false; self.cols.len()];
        for &j in &self.basis {
            in_basis[j] = true;
        }
        loop {
            let y = self.duals(cost);
            let den = lcm_of_denoms(y.iter());
            let yi: Vec<BigInt> = y.iter().map(|v| (v * Rational::from_integer(den.clone())).to_integer()).collect();
            let mut entering = None;
            for j in 0..self.cols.len() {
                if in_basis[j] || !allowed(j) {
                    continue;
                }
                let mut d = cost(j) * &den;
                for (i, a) in &self.cols[j] {
                    if !yi[*i].is_zero() {
                        d -= &yi[*i] * a;
                    }
                }
                if d.is_negative() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(j) = entering else { return true };
            let mut alpha = vec![Rational::zero(); m];
            for (i, a) in &self.cols[j] {
                let a = Rational::from_integer(a.clone());
                for (r, al) in alpha.iter_mut().enumerate() {
                    if !self.binv[r][*i].is_zero() {
                        *al += &self.binv[r][*i] * &a;
                    }
                }
            }
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..m {
                if alpha[r].is_positive() {
                    let ratio = &self.xb[r] / &alpha[r];
                    let better = match &leave {
                        None => true,
                        Some((lr, best)) => ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr]),
                    };
                    if better {
                        leave = Some((r, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else { return false };
            self.pivot(r, j, &alpha);
            in_basis[j] = true;
            in_basis[self.basis_prev] = false;
        }
    }

    fn pivot(&mut self, r: usize, j: usize, alpha: &[Rational]) {
        let m = self.m;
        let piv = alpha[r].clone();
        for v in self.binv[r].iter_mut() {
            *v /= &piv;
        }
        self.xb[r] /= &piv;
        let prow = self.binv[r].clone();
        let px = self.xb[r].clone();
        for i in 0..m {
            if i == r || alpha[i].is_zero() {
                continue;
            }
            let f = alpha[i].clone();
            for (k, pv) in prow.iter().enumerate() {
                if !pv.is_zero() {
                    self.binv[i][k] -= &f * pv;
                }
            }
            self.xb[i] -= &f * &px;
        }
        self.basis_prev = self.basis[r];
        self.basis[r] = j;
    }
}

/// Solve a problem in standard form exactly.
pub fn solve_standard(sf: &StandardForm) -> Result<StandardOutcome> {
    let m = sf.rows;
    let n = sf.columns.len();
    if sf.b.len() != m || sf.c.len() != n {
        return Err(Error::MalformedLp("dimension mismatch in standard form".into()));
    }
    if sf.columns.iter().flatten().any(|(i, _)| *i >= m) {
        return Err(Error::MalformedLp("row index out of range".into()));
    }
    // per-row integer scaling, with a sign making b >= 0
    let mut row_scale = vec![BigInt::one(); m];
    let mut row_vals: Vec<Vec<&Rational>> = vec![vec![]; m];
    for col in &sf.columns {
        for (i, a) in col {
            row_vals[*i].push(a);
        }
    }
    for i in 0..m {
        let l = lcm_of_denoms(row_vals[i].iter().copied().chain(std::iter::once(&sf.b[i])));
        row_scale[i] = if sf.b[i].is_negative() { -l } else { l };
    }
    let scale_r: Vec<Rational> = row_scale.iter().map(|s| Rational::from_integer(s.clone())).collect();
    let mut cols: Vec<Vec<(usize, BigInt)>> = sf
        .columns
        .iter()
        .map(|col| {
            col.iter()
                .filter(|(_, a)| !a.is_zero())
                .map(|(i, a)| (*i, (a * &scale_r[*i]).to_integer()))
                .collect()
        })
        .collect();
    let b: Vec<BigInt> = (0..m).map(|i| (&sf.b[i] * &scale_r[i]).to_integer()).collect();
    let c_den = lcm_of_denoms(sf.c.iter());
    let c_int: Vec<BigInt> =
        sf.c.iter().map(|v| (v * Rational::from_integer(c_den.clone())).to_integer()).collect();

    // initial basis: an existing unit column per row when possible, else an artificial
    let mut basis = vec![usize::MAX; m];
    for (j, col) in cols.iter().enumerate() {
        if col.len() == 1 && col[0].1.is_one() && basis[col[0].0] == usize::MAX {
            basis[col[0].0] = j;
        }
    }
    let n_real = n;
    for (i, slot) in basis.iter_mut().enumerate() {
        if *slot == usize::MAX {
            cols.push(vec![(i, BigInt::one())]);
            *slot = cols.len() - 1;
        }
    }
    let mut binv = vec![vec![Rational::zero(); m]; m];
    for (i, row) in binv.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    let xb: Vec<Rational> = b.iter().map(|v| Rational::from_integer(v.clone())).collect();
    let mut eng = Engine { m, cols, n_real, basis, binv, xb, basis_prev: 0 };

    let n_real_c = eng.n_real;
    let phase1_cost = move |j: usize| if j >= n_real_c { BigInt::one() } else { BigInt::zero() };
    let has_artificial = eng.basis.iter().any(|&j| j >= n_real);
    if has_artificial {
        eng.run(&phase1_cost, &|_| true);
        let infeas: Rational = eng
            .basis
            .iter()
            .zip(&eng.xb)
            .filter(|(j, _)| **j >= n_real)
            .map(|(_, v)| v.clone())
            .sum();
        if infeas.is_positive() {
            let y = eng.duals(&phase1_cost);
            let certificate = (0..m).map(|i| -&y[i] * &scale_r[i]).collect();
            return Ok(StandardOutcome::Infeasible { certificate });
        }
        // drive zero-level artificials out of the basis where possible
        for r in 0..m {
            if eng.basis[r] < n_real {
                continue;
            }
            let mut target = None;
            for j in 0..n_real {
                if eng.basis.contains(&j) {
                    continue;
                }
                let mut a = Rational::zero();
                for (i, v) in &eng.cols[j] {
                    if !eng.binv[r][*i].is_zero() {
                        a += &eng.binv[r][*i] * Rational::from_integer(v.clone());
                    }
                }
                if !a.is_zero() {
                    target = Some(j);
                    break;
                }
            }
            if let Some(j) = target {
                let mut alpha = vec![Rational::zero(); m];
                for (i, v) in &eng.cols[j] {
                    let v = Rational::from_integer(v.clone());
                    for (rr, al) in alpha.iter_mut().enumerate() {
                        if !eng.binv[rr][*i].is_zero() {
                            *al += &eng.binv[rr][*i] * &v;
                        }
                    }
                }
                eng.pivot(r, j, &alpha);
            }
        }
    }
    let cost2 = |j: usize| if j < n_real { c_int[j].clone() } else { BigInt::zero() };
    if !eng.run(&cost2, &|j| j < n_real) {
        return Ok(StandardOutcome::Unbounded);
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &j) in eng.basis.iter().enumerate() {
        if j < n {
            x[j] = eng.xb[r].clone();
        }
    }
    let value: Rational = x.iter().zip(&sf.c).map(|(a, b)| a * b).sum();
    let y = eng.duals(&cost2);
    let cden = Rational::from_integer(c_den);
    let duals = (0..m).map(|i| &y[i] * &scale_r[i] / &cden).collect();
    Ok(StandardOutcome::Optimal { x, value, duals })
}

/// Solve a general LP exactly.
pub fn lp_solve(lp: &LinearProgram) -> Result<LpSolution> {
    let nv = lp.num_vars;
    if lp.objective.len() != nv || lp.bounds.len() != nv {
        return Err(Error::MalformedLp("objective or bounds length differs from variable count".into()));
    }
    if lp.constraints.iter().any(|c| c.coeffs.len() != nv) {
        return Err(Error::MalformedLp("constraint width differs from variable count".into()));
    }
    // x_j = offset_j + sign_j * x'_j, or x'_j+ - x'_j- for free variables
    enum Map {
        Shift(Rational, i8, usize),
        Split(usize, usize),
    }
    let mut maps = Vec::with_capacity(nv);
    let mut ncols = 0usize;
    let mut extra_rows: Vec<(usize, Rational)> = vec![];
    for (lo, hi) in &lp.bounds {
        match (lo, hi) {
            (Some(l), u) => {
                maps.push(Map::Shift(l.clone(), 1, ncols));
                if let Some(u) = u {
                    if u < l {
                        return Ok(LpSolution { status: LpStatus::Infeasible, value: None, point: None });
                    }
                    extra_rows.push((ncols, u - l));
                }
                ncols += 1;
            }
            (None, Some(u)) => {
                maps.push(Map::Shift(u.clone(), -1, ncols));
                ncols += 1;
            }
            (None, None) => {
                maps.push(Map::Split(ncols, ncols + 1));
                ncols += 2;
            }
        }
    }
    let sign = if lp.maximize { -Rational::one() } else { Rational::one() };
    let mut rows: Vec<(Vec<(usize, Rational)>, Rational)> = vec![];
    let mut slack_signs: Vec<Option<i8>> = vec![];
    let expand = |coeffs: &[Rational]| -> (Vec<(usize, Rational)>, Rational) {
        let mut out = vec![];
        let mut shift = Rational::zero();
        for (j, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            match &maps[j] {
                Map::Shift(off, s, col) => {
                    shift += a * off;
                    out.push((*col, if *s > 0 { a.clone() } else { -a.clone() }));
                }
                Map::Split(p, q) => {
                    out.push((*p, a.clone()));
                    out.push((*q, -a.clone()));
                }
            }
        }
        (out, shift)
    };
    for c in &lp.constraints {
        let (row, shift) = expand(&c.coeffs);
        rows.push((row, &c.rhs - shift));
        slack_signs.push(match c.sense {
            Sense::Le => Some(1),
            Sense::Ge => Some(-1),
            Sense::Eq => None,
        });
    }
    for (col, cap) in extra_rows {
        rows.push((vec![(col, Rational::one())], cap));
        slack_signs.push(Some(1));
    }
    let m = rows.len();
    let mut columns: Vec<Vec<(usize, Rational)>> = vec![vec![]; ncols];
    for (i, (row, _)) in rows.iter().enumerate() {
        for (j, a) in row {
            columns[*j].push((i, a.clone()));
        }
    }
    for (i, s) in slack_signs.iter().enumerate() {
        if let Some(s) = s {
            columns.push(vec![(i, Rational::from_integer(BigInt::from(*s)))]);
        }
    }
    let (cobj, cshift) = expand(&lp.objective);
    let mut c = vec![Rational::zero(); columns.len()];
    for (j, a) in cobj {
        c[j] += &sign * a;
    }
    let sf = StandardForm { rows: m, columns, b: rows.iter().map(|r| r.1.clone()).collect(), c };
    match solve_standard(&sf)? {
        StandardOutcome::Infeasible { .. } => {
            Ok(LpSolution { status: LpStatus::Infeasible, value: None, point: None })
        }
        StandardOutcome::Unbounded => Ok(LpSolution { status: LpStatus::Unbounded, value: None, point: None }),
        StandardOutcome::Optimal { x, value, .. } => {
            let point: Vec<Rational> = maps
                .iter()
                .map(|mp| match mp {
                    Map::Shift(off, s, col) => {
                        if *s > 0 {
                            off + &x[*col]
                        } else {
                            off - &x[*col]
                        }
                    }
                    Map::Split(p, q) => &x[*p] - &x[*q],
                })
                .collect();
            let value = &sign * value + cshift;
            Ok(LpSolution { status: LpStatus::Optimal, value: Some(value), point: Some(point) })
        }
    }
}

/// True iff every constraint and bound holds exactly at `point`.
pub fn is_feasible_point(lp: &LinearProgram, point: &[Rational]) -> bool {
    if point.len() != lp.num_vars {
        return false;
    }
    let bounds_ok = lp.bounds.iter().zip(point).all(|((lo, hi), x)| {
        lo.as_ref().is_none_or(|l| x >= l) && hi.as_ref().is_none_or(|u| x <= u)
    });
    bounds_ok
        && lp.constraints.iter().all(|c| {
            let lhs: Rational = c.coeffs.iter().zip(point).map(|(a, x)| a * x).sum();
            match c.sense {
                Sense::Le => lhs <= c.rhs,
                Sense::Ge => lhs >= c.rhs,
                Sense::Eq => lhs == c.rhs,
            }
        })
}
