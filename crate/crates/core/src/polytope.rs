//! Redundancy elimination, membership verdicts and exact comparisons of inequality systems.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::inequality::{orbit, InequalitySystem, MarginalInequality};
use crate::lp::{lp_solve, solve_standard, LinearProgram, LpStatus, Sense, StandardForm, StandardOutcome};
use crate::spectra::{int, Normalization, Rational, Spectrum, SystemFormat};

/// Primitive integer form with a fixed sense; the derived order on inequalities is total.
pub fn canonicalize(ineq: &MarginalInequality) -> MarginalInequality {
    ineq.canonical()
}

/// Concatenated partial sums `v_1, v_1+v_2, …` (all but the last) of every coefficient group,
/// with component groups negated to match the sign of the expression.
fn partial_sums(ineq: &MarginalInequality) -> Vec<i64> {
    let mut out = vec![];
    let mut push = |v: &[i64], sign: i64| {
        let mut s = 0;
        for x in &v[..v.len() - 1] {
            s += x * sign;
            out.push(s);
        }
    };
    push(ineq.composite(), 1);
    for p in ineq.components() {
        push(p, -1);
    }
    out
}

/// Trace-zero chamber point whose pairing with a zero-sum vector equals `z · P(v)`.
fn witness_from_certificate(format: &SystemFormat, z: &[Rational]) -> (Vec<Rational>, Vec<Vec<Rational>>) {
    let mut groups = vec![format.composite_dim()];
    groups.extend(format.dims());
    let mut out = vec![];
    let mut k = 0;
    for &d in &groups {
        // x_i = Σ_{j >= i} z_j over this group's d-1 entries, then shifted to zero sum
        let mut x = vec![Rational::zero(); d];
        for i in (0..d - 1).rev() {
            x[i] = &x[i + 1] + &z[k + i];
        }
        let mean: Rational = x.iter().sum::<Rational>() / int(d as i64);
        out.push(x.into_iter().map(|v| v - &mean).collect::<Vec<_>>());
        k += d - 1;
    }
    let composite = out.remove(0);
    (composite, out)
}

/// Result of a redundancy probe.
#[derive(Clone, Debug, PartialEq)]
pub enum Probe {
    /// Nonnegative multipliers of the other inequalities.
    Redundant(Vec<Rational>),
    /// Trace-zero point satisfying the others on which the probed inequality is negative.
    Essential { composite: Vec<Rational>, components: Vec<Vec<Rational>> },
}

impl Probe {
    pub fn is_redundant(&self) -> bool {
        matches!(self, Probe::Redundant(_))
    }
}

/// Decide whether `ineq` follows from `others` on the product of Weyl chambers.
/// Every inequality is homogeneous with zero-sum groups, so trace normalization plays no role.
pub fn probe_redundancy(ineq: &MarginalInequality, others: &[MarginalInequality]) -> Result<Probe> {
    let format = ineq.format().clone();
    let b: Vec<Rational> = partial_sums(ineq).into_iter().map(int).collect();
    let rows = b.len();
    let mut columns: Vec<Vec<(usize, Rational)>> = Vec::with_capacity(others.len() + rows);
    for g in others {
        if g.format() != &format {
            return Err(Error::Dimension("mixed formats in redundancy probe".into()));
        }
        columns.push(partial_sums(g).into_iter().enumerate().filter(|(_, v)| *v != 0).map(|(i, v)| (i, int(v))).collect());
    }
    for i in 0..rows {
        columns.push(vec![(i, int(1))]);
    }
    let c = vec![Rational::zero(); columns.len()];
    let sf = StandardForm { rows, columns, b, c };
    match solve_standard(&sf)? {
        StandardOutcome::Optimal { x, .. } => Ok(Probe::Redundant(x[..others.len()].to_vec())),
        StandardOutcome::Infeasible { certificate } => {
            let (composite, components) = witness_from_certificate(&format, &certificate);
            Ok(Probe::Essential { composite, components })
        }
        StandardOutcome::Unbounded => Err(Error::MalformedLp("feasibility problem reported unbounded".into())),
    }
}

/// True iff the inequality is implied by the others together with the chamber order.
pub fn is_redundant(ineq: &MarginalInequality, others: &InequalitySystem) -> Result<bool> {
    let rest: Vec<MarginalInequality> = others.inequalities.iter().filter(|g| *g != ineq).cloned().collect();
    let dup = rest.len() < others.len();
    Ok(dup || probe_redundancy(ineq, &rest)?.is_redundant())
}

/// Output of [`reduce_system`].
#[derive(Clone, Debug)]
pub struct ReductionReport {
    pub system: InequalitySystem,
    pub input_count: usize,
    pub removed: Vec<MarginalInequality>,
    /// For each retained inequality, a point satisfying every other one on which it is negative.
    pub witnesses: Vec<(MarginalInequality, Vec<Rational>, Vec<Vec<Rational>>)>,
    /// Smallest member of each orbit of retained inequalities, with the orbit size.
    pub orbits: Vec<(MarginalInequality, usize)>,
    /// Whether the symmetry shortcut was applied (input closed under the group).
    pub symmetry_used: bool,
    pub duality_used: bool,
    /// Removed inequalities that failed to re-verify against the output (expected empty).
    pub unverified: Vec<MarginalInequality>,
}

/// Irredundant subsystem defining the same cone. Inequalities are probed against the full
/// input, which is valid because canonical forms are distinct and the cone is pointed;
/// with `use_symmetry` (and `use_duality`) one member per orbit is probed when the input is
/// closed under the group. Removed inequalities are re-checked against the output.
pub fn reduce_system(system: &InequalitySystem, use_symmetry: bool, use_duality: bool) -> Result<ReductionReport> {
    let all = &system.inequalities;
    let closed = |dual: bool| all.iter().all(|i| orbit(i, dual).iter().all(|j| system.contains(j)));
    let symmetry_used = use_symmetry && closed(false);
    let duality_used = use_duality && closed(true) && (symmetry_used || !use_symmetry);
    let group_dual = duality_used;
    // orbit representative for each inequality
    let rep_of: Vec<MarginalInequality> = all
        .iter()
        .map(|i| {
            if symmetry_used || duality_used {
                orbit(i, group_dual).into_iter().next().expect("orbit contains the inequality")
            } else {
                i.clone()
            }
        })
        .collect();
    let reps: BTreeSet<&MarginalInequality> = rep_of.iter().collect();
    let reps: Vec<&MarginalInequality> = reps.into_iter().rev().collect();
    let probes: Vec<(MarginalInequality, Probe)> = reps
        .par_iter()
        .map(|h| {
            let rest: Vec<MarginalInequality> = all.iter().filter(|g| g != h).cloned().collect();
            probe_redundancy(h, &rest).map(|p| ((*h).clone(), p))
        })
        .collect::<Result<_>>()?;
    let verdict: BTreeMap<MarginalInequality, Probe> = probes.into_iter().collect();
    let mut kept = vec![];
    let mut removed = vec![];
    let mut witnesses = vec![];
    for (i, ineq) in all.iter().enumerate() {
        match &verdict[&rep_of[i]] {
            Probe::Redundant(_) => removed.push(ineq.clone()),
            Probe::Essential { composite, components } => {
                kept.push(ineq.clone());
                if &rep_of[i] == ineq {
                    witnesses.push((ineq.clone(), composite.clone(), components.clone()));
                }
            }
        }
    }
    let provenance: BTreeMap<&MarginalInequality, _> =
        all.iter().zip(&system.provenance).map(|(i, p)| (i, p.clone())).collect();
    let reduced = InequalitySystem::from_entries(
        system.format.clone(),
        system.normalization,
        kept.iter().map(|i| (i.clone(), provenance[i].clone())),
    )?;
    let unverified: Vec<MarginalInequality> = removed
        .par_iter()
        .filter_map(|h| match probe_redundancy(h, &reduced.inequalities) {
            Ok(p) if p.is_redundant() => None,
            _ => Some(h.clone()),
        })
        .collect();
    let mut orbit_map: BTreeMap<MarginalInequality, usize> = BTreeMap::new();
    for i in &kept {
        let rep = orbit(i, false).into_iter().next().expect("nonempty");
        *orbit_map.entry(rep).or_insert(0) += 1;
    }
    Ok(ReductionReport {
        input_count: all.len(),
        system: reduced,
        removed,
        witnesses,
        orbits: orbit_map.into_iter().collect(),
        symmetry_used,
        duality_used,
        unverified,
    })
}

/// Outcome of evaluating a system at given spectra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub compatible: bool,
    pub violated: Vec<usize>,
    pub margins_checked: Normalization,
}

/// Evaluate every inequality exactly at trace-one spectra.
pub fn check_membership(system: &InequalitySystem, composite: &Spectrum, components: &[Spectrum]) -> Result<Verdict> {
    let f = &system.format;
    if composite.len() != f.composite_dim() || components.len() != f.components() {
        return Err(Error::Dimension(format!("spectra do not match format {f}")));
    }
    for (s, &d) in components.iter().zip(f.dims()) {
        if s.len() != d {
            return Err(Error::Dimension(format!("margin of length {} for dimension {d}", s.len())));
        }
    }
    let one = int(1);
    for s in std::iter::once(composite).chain(components) {
        if s.trace() != one {
            return Err(Error::InvalidSpectrum(format!("spectrum {s} is not trace-one")));
        }
    }
    let comps: Vec<Vec<Rational>> = components.iter().map(|s| s.values().to_vec()).collect();
    let violated: Vec<usize> = system
        .inequalities
        .iter()
        .enumerate()
        .filter(|(_, i)| i.evaluate(composite.values(), &comps).is_negative())
        .map(|(k, _)| k)
        .collect();
    Ok(Verdict { compatible: violated.is_empty(), violated, margins_checked: Normalization::TraceOne })
}

/// `Σ r_k ν_k + Σ_c Σ_i q^c_i λ^c_i + constant ≥ 0` with rational data.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineInequality {
    pub composite: Vec<Rational>,
    pub components: Vec<Vec<Rational>>,
    pub constant: Rational,
}

impl AffineInequality {
    pub fn zero(format: &SystemFormat) -> Self {
        AffineInequality {
            composite: vec![Rational::zero(); format.composite_dim()],
            components: format.dims().iter().map(|&d| vec![Rational::zero(); d]).collect(),
            constant: Rational::zero(),
        }
    }

    pub fn negated(&self) -> Self {
        AffineInequality {
            composite: self.composite.iter().map(|x| -x).collect(),
            components: self.components.iter().map(|v| v.iter().map(|x| -x).collect()).collect(),
            constant: -&self.constant,
        }
    }
}

impl From<&MarginalInequality> for AffineInequality {
    fn from(i: &MarginalInequality) -> Self {
        AffineInequality {
            composite: i.composite().iter().map(|&x| int(x)).collect(),
            components: i.components().iter().map(|p| p.iter().map(|&x| int(-x)).collect()).collect(),
            constant: Rational::zero(),
        }
    }
}

/// Trace-one spectra, optionally with the composite spectrum pinned, cut out by affine inequalities.
#[derive(Clone, Debug)]
pub struct SpectralRegion {
    pub format: SystemFormat,
    pub constraints: Vec<AffineInequality>,
    pub fixed_composite: Option<Vec<Rational>>,
}

impl SpectralRegion {
    pub fn new(format: SystemFormat, constraints: Vec<AffineInequality>) -> Self {
        SpectralRegion { format, constraints, fixed_composite: None }
    }

    pub fn from_system(system: &InequalitySystem) -> Self {
        SpectralRegion::new(system.format.clone(), system.inequalities.iter().map(AffineInequality::from).collect())
    }

    pub fn with_composite(mut self, nu: Vec<Rational>) -> Self {
        self.fixed_composite = Some(nu);
        self
    }

    fn flatten(&self, a: &AffineInequality) -> Vec<Rational> {
        a.composite.iter().chain(a.components.iter().flatten()).cloned().collect()
    }

    fn program(&self) -> LinearProgram {
        let n = self.format.composite_dim();
        let mut groups = vec![n];
        groups.extend(self.format.dims());
        let nv: usize = groups.iter().sum();
        let mut lp = LinearProgram::new(nv);
        let mut k = 0;
        for &d in &groups {
            let mut row = vec![Rational::zero(); nv];
            row[k..k + d].iter_mut().for_each(|x| *x = int(1));
            lp.add(row, Sense::Eq, int(1));
            for i in 0..d - 1 {
                let mut row = vec![Rational::zero(); nv];
                row[k + i] = int(1);
                row[k + i + 1] = int(-1);
                lp.add(row, Sense::Ge, Rational::zero());
            }
            k += d;
        }
        for c in &self.constraints {
            lp.add(self.flatten(c), Sense::Ge, -&c.constant);
        }
        if let Some(nu) = &self.fixed_composite {
            for (i, v) in nu.iter().enumerate() {
                let mut row = vec![Rational::zero(); nv];
                row[i] = int(1);
                lp.add(row, Sense::Eq, v.clone());
            }
        }
        lp
    }

    /// Minimum of an affine expression over the region (`None` if the region is empty).
    pub fn minimum(&self, target: &AffineInequality) -> Result<Option<Rational>> {
        let obj = self.flatten(target);
        let lp = self.program().minimize(obj);
        let sol = lp_solve(&lp)?;
        Ok(match sol.status {
            LpStatus::Optimal => Some(sol.value.unwrap() + &target.constant),
            LpStatus::Infeasible => None,
            LpStatus::Unbounded => unreachable!("spectra are bounded"),
        })
    }

    /// True iff the target holds everywhere on the region.
    pub fn implies(&self, target: &AffineInequality) -> Result<bool> {
        Ok(self.minimum(target)?.map_or(true, |m| !m.is_negative()))
    }

    /// Mutual implication of every constraint of the other region (same pinning assumed).
    pub fn equivalent(&self, other: &SpectralRegion) -> Result<bool> {
        for c in &other.constraints {
            if !self.implies(c)? {
                return Ok(false);
            }
        }
        for c in &self.constraints {
            if !other.implies(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_feasible(&self) -> Result<bool> {
        let nv = self.format.composite_dim() + self.format.dims().iter().sum::<usize>();
        let lp = self.program().minimize(vec![Rational::zero(); nv]);
        Ok(lp_solve(&lp)?.status == LpStatus::Optimal)
    }
}

/// Every inequality of `a` follows from `b` on the chamber product, and conversely.
pub fn systems_equivalent(a: &InequalitySystem, b: &InequalitySystem) -> Result<bool> {
    let covers = |x: &InequalitySystem, y: &InequalitySystem| -> Result<bool> {
        for h in &y.inequalities {
            if !x.contains(h) && !probe_redundancy(h, &x.inequalities)?.is_redundant() {
                return Ok(false);
            }
        }
        Ok(true)
    };
    Ok(covers(a, b)? && covers(b, a)?)
}
