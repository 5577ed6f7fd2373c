//! Exact spectra, system formats and Young-diagram combinatorics.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse an exact rational from `p`, `p/q` or a decimal literal such as `0.125`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidSpectrum(format!("not a rational: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let neg = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let r = Rational::new(n, d);
        return Ok(if neg { -r } else { r });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Normalization {
    /// Entries sum to one and are nonnegative.
    TraceOne,
    /// Entries sum to zero.
    TraceZero,
    /// No normalization (composed spectra, diagrams).
    Unnormalized,
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Normalization::TraceOne => "trace-one",
            Normalization::TraceZero => "trace-zero",
            Normalization::Unnormalized => "unnormalized",
        })
    }
}

impl FromStr for Normalization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "trace-one" => Ok(Normalization::TraceOne),
            "trace-zero" => Ok(Normalization::TraceZero),
            "unnormalized" => Ok(Normalization::Unnormalized),
            other => Err(Error::InvalidSpectrum(format!("unknown normalization {other:?}"))),
        }
    }
}

/// Weakly decreasing sequence of exact rationals with a normalization tag.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spectrum {
    values: Vec<Rational>,
    normalization: Normalization,
}

impl Spectrum {
    pub fn new(values: Vec<Rational>, normalization: Normalization) -> Result<Self> {
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSpectrum("entries must be weakly decreasing".into()));
        }
        let sum: Rational = values.iter().sum();
        match normalization {
            Normalization::TraceOne => {
                if !sum.is_one() || values.iter().any(|v| v.is_negative()) {
                    return Err(Error::InvalidSpectrum(
                        "trace-one spectrum must be nonnegative with unit sum".into(),
                    ));
                }
            }
            Normalization::TraceZero => {
                if !sum.is_zero() {
                    return Err(Error::InvalidSpectrum("trace-zero spectrum must sum to zero".into()));
                }
            }
            Normalization::Unnormalized => {}
        }
        Ok(Spectrum { values, normalization })
    }

    /// Sorts the values and infers the normalization tag.
    pub fn from_unsorted(mut values: Vec<Rational>) -> Self {
        values.sort_by(|a, b| b.cmp(a));
        let sum: Rational = values.iter().sum();
        let normalization = if sum.is_zero() {
            Normalization::TraceZero
        } else if sum.is_one() && values.iter().all(|v| !v.is_negative()) {
            Normalization::TraceOne
        } else {
            Normalization::Unnormalized
        };
        Spectrum { values, normalization }
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        let v: Vec<Rational> = values.iter().map(|&x| int(x)).collect();
        let sum: Rational = v.iter().sum();
        let norm = if sum.is_zero() { Normalization::TraceZero } else { Normalization::Unnormalized };
        Spectrum::new(v, norm)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn trace(&self) -> Rational {
        self.values.iter().sum()
    }

    /// Shift to zero trace: `v - tr/len`.
    pub fn to_trace_zero(&self) -> Spectrum {
        let shift = self.trace() / int(self.len() as i64);
        Spectrum {
            values: self.values.iter().map(|v| v - &shift).collect(),
            normalization: Normalization::TraceZero,
        }
    }

    /// Divide by the trace. Fails on zero trace or negative entries.
    pub fn to_trace_one(&self) -> Result<Spectrum> {
        let t = self.trace();
        if !t.is_positive() {
            return Err(Error::InvalidSpectrum("trace must be positive".into()));
        }
        Spectrum::new(self.values.iter().map(|v| v / &t).collect(), Normalization::TraceOne)
    }

    /// Multiply every entry by a positive rational; the tag is recomputed.
    pub fn scaled(&self, factor: &Rational) -> Spectrum {
        Spectrum::from_unsorted(self.values.iter().map(|v| v * factor).collect())
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Spectrum {
    type Err = Error;
    /// Comma-separated exact rationals. Input order is kept and must be decreasing.
    fn from_str(s: &str) -> Result<Self> {
        let values = s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSpectrum(format!("not weakly decreasing: {s}")));
        }
        Ok(Spectrum::from_unsorted(values))
    }
}

/// Composite sums `a_i + b_j + ...` over all index tuples, sorted nonincreasingly.
pub fn compose_spectra(specs: &[Spectrum]) -> Result<Spectrum> {
    if specs.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut acc: Vec<Rational> = vec![Rational::zero()];
    for s in specs {
        let mut next = Vec::with_capacity(acc.len() * s.len());
        for a in &acc {
            for v in s.values() {
                next.push(a + v);
            }
        }
        acc = next;
    }
    Ok(Spectrum::from_unsorted(acc))
}

/// Integer version of [`compose_spectra`] keeping tuple order (row-major, last index fastest).
pub fn composed_sums(parts: &[Vec<i64>]) -> Vec<i64> {
    let mut acc = vec![0i64];
    for p in parts {
        acc = acc.iter().flat_map(|a| p.iter().map(move |v| a + v)).collect();
    }
    acc
}

/// Format `d_1 x d_2 x ... x d_r` of a multipartite system.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SystemFormat {
    dims: Vec<usize>,
}

impl SystemFormat {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidFormat("at least one subsystem required".into()));
        }
        if dims.iter().any(|&d| d < 2) {
            return Err(Error::InvalidFormat("every subsystem needs dimension at least 2".into()));
        }
        Ok(SystemFormat { dims })
    }

    pub fn qubits(n: usize) -> Self {
        SystemFormat { dims: vec![2; n] }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn components(&self) -> usize {
        self.dims.len()
    }

    pub fn composite_dim(&self) -> usize {
        self.dims.iter().product()
    }

    /// D = sum of (d_c - 1): dimension of the product of trace-zero chambers.
    pub fn chamber_dim(&self) -> usize {
        self.dims.iter().map(|d| d - 1).sum()
    }

    pub fn is_qubit_array(&self) -> bool {
        self.dims.iter().all(|&d| d == 2)
    }

    /// Maximal total length of component permutations: sum of d(d-1)/2.
    pub fn length_bound(&self) -> usize {
        self.dims.iter().map(|d| d * (d - 1) / 2).sum()
    }

    /// All index tuples in row-major order (last component fastest), 0-based.
    pub fn tuples(&self) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for &d in &self.dims {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (0..d).map(move |i| {
                        let mut t2 = t.clone();
                        t2.push(i);
                        t2
                    })
                })
                .collect();
        }
        out
    }

    /// Permutations of component slots that preserve the dimensions, identity first.
    /// `p[c]` is the source component placed in slot `c`.
    pub fn component_symmetries(&self) -> Vec<Vec<usize>> {
        let r = self.dims.len();
        let mut out = vec![];
        let mut cur = vec![];
        let mut used = vec![false; r];
        fn rec(dims: &[usize], cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == dims.len() {
                out.push(cur.clone());
                return;
            }
            let slot = cur.len();
            for s in 0..dims.len() {
                if !used[s] && dims[s] == dims[slot] {
                    used[s] = true;
                    cur.push(s);
                    rec(dims, cur, used, out);
                    cur.pop();
                    used[s] = false;
                }
            }
        }
        rec(&self.dims, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Display for SystemFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join("x"))
    }
}

impl FromStr for SystemFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let dims = s
            .trim()
            .split(['x', 'X'])
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidFormat(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        SystemFormat::new(dims)
    }
}

/// Young diagram with trailing zero rows removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSpectrum(format!("rows must be weakly decreasing: {rows:?}")));
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(YoungDiagram { rows })
    }

    pub fn empty() -> Self {
        YoungDiagram { rows: vec![] }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Row `i` (0-based); zero beyond the height.
    pub fn row(&self, i: usize) -> usize {
        self.rows.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn to_spectrum(&self) -> Spectrum {
        Spectrum::from_unsorted(self.rows.iter().map(|&r| int(r as i64)).collect())
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn partitions(n: usize) -> Vec<YoungDiagram> {
        fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
            if n == 0 {
                out.push(YoungDiagram { rows: cur.clone() });
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                go(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions of `n` with at most `h` rows.
    pub fn partitions_with_height(n: usize, h: usize) -> Vec<YoungDiagram> {
        Self::partitions(n).into_iter().filter(|p| p.height() <= h).collect()
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" || s == "()" {
            return Ok(YoungDiagram::empty());
        }
        let rows = s
            .trim_matches(|c| c == '(' || c == ')')
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidSpectrum(format!("bad diagram {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        YoungDiagram::new(rows)
    }
}

/// Dominance order: every partial sum of `a` is at most the one of `b`.
pub fn dominance_leq(a: &YoungDiagram, b: &YoungDiagram) -> Result<bool> {
    if a.weight() != b.weight() {
        return Err(Error::WeightMismatch(a.weight() as u64, b.weight() as u64));
    }
    let n = a.height().max(b.height());
    let (mut sa, mut sb) = (0, 0);
    for i in 0..n {
        sa += a.row(i);
        sb += b.row(i);
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Transposed diagram.
pub fn conjugate(a: &YoungDiagram) -> YoungDiagram {
    let first = a.row(0);
    let rows = (0..first).map(|j| a.rows.iter().filter(|&&r| r > j).count()).collect();
    YoungDiagram { rows }
}

/// A 0-1 matrix with row sums `rows` and column sums `cols` exists.
pub fn gale_ryser(rows: &YoungDiagram, cols: &YoungDiagram) -> Result<bool> {
    dominance_leq(rows, &conjugate(cols))
}

/// (depth, height) where depth = weight minus first row.
pub fn depth_height(a: &YoungDiagram) -> (usize, usize) {
    (a.weight() - a.row(0), a.height())
}

/// Multiplicities of equal consecutive values, as block sizes.
pub fn block_type<T: PartialEq>(values: &[T]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for (i, v) in values.iter().enumerate() {
        if i > 0 && values[i - 1] == *v {
            *out.last_mut().unwrap() += 1;
        } else {
            out.push(1);
        }
    }
    out
}
