//! Plain-text inequality files, bundled reference tables and fixture comparison.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use sha2::{Digest, Sha256};

use crate::chamber::Edge;
use crate::error::{Error, Result};
use crate::inequality::{InequalitySystem, MarginalInequality};
use crate::schubert::{Monomial, Permutation, SparsePolynomial, Var};
use crate::spectra::{Normalization, SystemFormat};

/// One body line as written: composite coefficients then one group per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub composite: Vec<i64>,
    pub groups: Vec<Vec<i64>>,
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let mut parts = vec![join(&self.composite)];
        parts.extend(self.groups.iter().map(|g| join(g)));
        write!(f, "{} >= 0", parts.join(" | "))
    }
}

/// Header plus rows of an inequality file. Header keys other than `format`, `normalization`
/// and `count` are kept in order as metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemFile {
    pub format: SystemFormat,
    pub normalization: Normalization,
    pub metadata: Vec<(String, String)>,
    pub rows: Vec<Row>,
}

fn parse_ints(s: &str, line: usize) -> Result<Vec<i64>> {
    s.split_whitespace()
        .map(|t| t.parse::<i64>().map_err(|_| Error::Parse { line, msg: format!("bad integer {t:?}") }))
        .collect()
}

impl SystemFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut format = None;
        let mut normalization = None;
        let mut count = None;
        let mut metadata = vec![];
        let mut rows = vec![];
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            if let Some(body) = t.strip_suffix(">= 0") {
                let f: &SystemFormat = format.as_ref().ok_or(Error::Parse { line, msg: "row before format header".into() })?;
                let mut parts = body.split('|');
                let composite = parse_ints(parts.next().unwrap_or(""), line)?;
                let groups = parts.map(|p| parse_ints(p, line)).collect::<Result<Vec<_>>>()?;
                if composite.len() != f.composite_dim() || groups.len() != f.components() {
                    return Err(Error::Parse { line, msg: format!("row shape does not match format {f}") });
                }
                for (c, g) in groups.iter().enumerate() {
                    let d = f.dims()[c];
                    let scalar_ok = d == 2 && normalization == Some(Normalization::TraceZero);
                    if g.len() != d && !(scalar_ok && g.len() == 1) {
                        return Err(Error::Parse { line, msg: format!("group {} has width {}, expected {d}", c + 1, g.len()) });
                    }
                }
                rows.push(Row { composite, groups });
                continue;
            }
            let (k, v) = t.split_once(':').ok_or(Error::Parse { line, msg: format!("unrecognized line {t:?}") })?;
            let (k, v) = (k.trim(), v.trim());
            let err = |e: Error| Error::Parse { line, msg: e.to_string() };
            match k {
                "format" => format = Some(v.parse::<SystemFormat>().map_err(err)?),
                "normalization" => normalization = Some(v.parse::<Normalization>().map_err(err)?),
                "count" => {
                    count = Some(v.parse::<usize>().map_err(|_| Error::Parse { line, msg: format!("bad count {v:?}") })?)
                }
                _ => metadata.push((k.to_string(), v.to_string())),
            }
        }
        let format = format.ok_or(Error::Parse { line: 0, msg: "missing format header".into() })?;
        let normalization = normalization.ok_or(Error::Parse { line: 0, msg: "missing normalization header".into() })?;
        if let Some(c) = count {
            if c != rows.len() {
                return Err(Error::Parse { line: 0, msg: format!("count {c} but {} rows", rows.len()) });
            }
        }
        Ok(SystemFile { format, normalization, metadata, rows })
    }

    pub fn meta(&self, key: &str) -> Option<&str> {
        self.metadata.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn annotations(&self) -> Vec<&str> {
        self.metadata.iter().filter(|(k, _)| k == "annotation").map(|(_, v)| v.as_str()).collect()
    }

    pub fn from_system(system: &InequalitySystem, metadata: Vec<(String, String)>) -> Self {
        let rows = system
            .inequalities
            .iter()
            .map(|i| Row { composite: i.composite().to_vec(), groups: i.components().to_vec() })
            .collect();
        SystemFile { format: system.format.clone(), normalization: system.normalization, metadata, rows }
    }

    /// Rows as canonical inequalities. A width-one qubit group `s` stands for the trace-zero
    /// spectrum `(s/2, −s/2)`, so it becomes `(s, −s)` with the other groups doubled.
    pub fn to_system(&self) -> Result<InequalitySystem> {
        let ineqs = self.rows.iter().map(|r| row_inequality(&self.format, r)).collect::<Result<Vec<_>>>()?;
        InequalitySystem::from_inequalities(self.format.clone(), self.normalization, ineqs)
    }

    /// Symmetry group implied by the `symmetry:` header.
    pub fn symmetry(&self) -> Result<Symmetry> {
        match self.meta("symmetry").unwrap_or("none") {
            "none" => Ok(Symmetry::None),
            "component-swap" | "qubit-permutations" | "component-permutations" => Ok(Symmetry::Components),
            other => Err(Error::Parse { line: 0, msg: format!("unknown symmetry {other:?}") }),
        }
    }
}

/// Row to inequality, expanding scalar qubit groups.
pub fn row_inequality(format: &SystemFormat, row: &Row) -> Result<MarginalInequality> {
    let scalar = row.groups.iter().any(|g| g.len() == 1);
    if !scalar {
        return MarginalInequality::new(format.clone(), row.composite.clone(), row.groups.clone());
    }
    let composite = row.composite.iter().map(|x| 2 * x).collect();
    let groups = row
        .groups
        .iter()
        .map(|g| if g.len() == 1 { vec![g[0], -g[0]] } else { g.iter().map(|x| 2 * x).collect() })
        .collect();
    MarginalInequality::new(format.clone(), composite, groups)
}

impl fmt::Display for SystemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "format: {}", self.format)?;
        writeln!(f, "normalization: {}", self.normalization)?;
        writeln!(f, "count: {}", self.rows.len())?;
        for (k, v) in &self.metadata {
            writeln!(f, "{k}: {v}")?;
        }
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for SystemFile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SystemFile::parse(s)
    }
}

/// Symmetry under which a listed system is complete.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    None,
    Components,
}

/// Set comparison of a system against a reference file.
#[derive(Clone, Debug, PartialEq)]
pub struct FixtureDiff {
    pub matched: Vec<MarginalInequality>,
    pub missing_from_generated: Vec<MarginalInequality>,
    pub extra_in_generated: Vec<MarginalInequality>,
    /// Size of the reference after orbit expansion.
    pub expanded_count: usize,
    /// `expanded-count:` header value, when present.
    pub declared_count: Option<usize>,
    pub annotations: Vec<String>,
}

impl FixtureDiff {
    pub fn is_exact(&self) -> bool {
        self.missing_from_generated.is_empty() && self.extra_in_generated.is_empty()
    }

    pub fn is_contained(&self) -> bool {
        self.missing_from_generated.is_empty()
    }
}

/// Reference set of a fixture, expanded over its declared symmetry.
pub fn fixture_set(fixture: &SystemFile) -> Result<BTreeSet<MarginalInequality>> {
    let sys = fixture.to_system()?;
    Ok(match fixture.symmetry()? {
        Symmetry::None => sys.canonical_set(),
        Symmetry::Components => sys.orbit_expanded(false).canonical_set(),
    })
}

pub fn verify_fixture(system: &InequalitySystem, fixture: &SystemFile) -> Result<FixtureDiff> {
    if system.format != fixture.format {
        return Err(Error::InvalidFormat(format!("system is {} but fixture is {}", system.format, fixture.format)));
    }
    let want = fixture_set(fixture)?;
    let have = system.canonical_set();
    let declared_count = fixture.meta("expanded-count").and_then(|v| v.parse().ok());
    Ok(FixtureDiff {
        matched: want.intersection(&have).cloned().collect(),
        missing_from_generated: want.difference(&have).cloned().collect(),
        extra_in_generated: have.difference(&want).cloned().collect(),
        expanded_count: want.len(),
        declared_count,
        annotations: fixture.annotations().into_iter().map(String::from).collect(),
    })
}

/// Bundled reference tables.
pub mod tables {
    pub const QUBITS2: &str = include_str!("../fixtures/qubits2.txt");
    pub const QUBITS3: &str = include_str!("../fixtures/qubits3.txt");
    pub const QUBITS4: &str = include_str!("../fixtures/qubits4.txt");
    pub const QUTRITS2: &str = include_str!("../fixtures/qutrits2.txt");
    pub const FORMAT2X3: &str = include_str!("../fixtures/format2x3.txt");
    pub const FORMAT2X4: &str = include_str!("../fixtures/format2x4.txt");
    pub const FORMAT2X2X3: &str = include_str!("../fixtures/format2x2x3.txt");
    pub const STATS: &str = include_str!("../fixtures/stats.txt");
    pub const EDGES3X3: &str = include_str!("../fixtures/edges3x3.txt");
    pub const EDGES_QUBITS: &str = include_str!("../fixtures/edges_qubits.txt");
    pub const SCHUBERT4: &str = include_str!("../fixtures/schubert4.txt");
    pub const SHA256SUMS: &str = include_str!("../fixtures/SHA256SUMS");

    /// `(file name, contents)` of every bundled table.
    pub const ALL: [(&str, &str); 11] = [
        ("edges3x3.txt", EDGES3X3),
        ("edges_qubits.txt", EDGES_QUBITS),
        ("format2x2x3.txt", FORMAT2X2X3),
        ("format2x3.txt", FORMAT2X3),
        ("format2x4.txt", FORMAT2X4),
        ("qubits2.txt", QUBITS2),
        ("qubits3.txt", QUBITS3),
        ("qubits4.txt", QUBITS4),
        ("qutrits2.txt", QUTRITS2),
        ("schubert4.txt", SCHUBERT4),
        ("stats.txt", STATS),
    ];
}

/// Bundled inequality table for a format, if any.
pub fn reference_system(format: &SystemFormat) -> Option<SystemFile> {
    let text = match format.to_string().as_str() {
        "2x2" => tables::QUBITS2,
        "2x2x2" => tables::QUBITS3,
        "2x2x2x2" => tables::QUBITS4,
        "3x3" => tables::QUTRITS2,
        "2x3" => tables::FORMAT2X3,
        "2x4" => tables::FORMAT2X4,
        "2x2x3" => tables::FORMAT2X2X3,
        _ => return None,
    };
    Some(SystemFile::parse(text).expect("bundled table parses"))
}

/// Hex SHA-256 digest.
pub fn sha256_hex(data: &[u8]) -> String {
    Sha256::digest(data).iter().map(|b| format!("{b:02x}")).collect()
}

/// Names of bundled tables whose digest differs from the recorded one.
pub fn checksum_mismatches() -> Vec<String> {
    let recorded: Vec<(&str, &str)> = tables::SHA256SUMS
        .lines()
        .filter_map(|l| l.split_once("  ").map(|(h, n)| (n.trim(), h.trim())))
        .collect();
    tables::ALL
        .iter()
        .filter(|(name, text)| {
            let digest = sha256_hex(text.as_bytes());
            !recorded.iter().any(|(n, h)| n == name && *h == digest)
        })
        .map(|(name, _)| name.to_string())
        .collect()
}

/// One line of the statistics table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatsRow {
    pub format: SystemFormat,
    pub rank: usize,
    pub inequalities: usize,
    pub orbit_representatives: usize,
    pub edges: usize,
    pub permutations: u64,
}

pub fn stats_table() -> Vec<StatsRow> {
    tables::STATS
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            StatsRow {
                format: f[0].parse().expect("format"),
                rank: f[1].parse().expect("rank"),
                inequalities: f[2].parse().expect("count"),
                orbit_representatives: f[3].parse().expect("count"),
                edges: f[4].parse().expect("count"),
                permutations: f[5].parse().expect("count"),
            }
        })
        .collect()
}

/// The listed 3x3 edges (one of each swapped pair).
pub fn listed_edges_3x3() -> Vec<Edge> {
    tables::EDGES3X3
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#') && !l.starts_with("annotation:"))
        .map(|l| l.parse().expect("edge"))
        .collect()
}

/// Listed qubit edges in scalar form, by number of qubits.
pub fn listed_qubit_edges(n: usize) -> Vec<Vec<i64>> {
    tables::EDGES_QUBITS
        .lines()
        .filter(|l| !l.starts_with('#'))
        .filter_map(|l| l.split_once(':'))
        .filter(|(k, _)| k.trim().parse::<usize>().ok() == Some(n))
        .map(|(_, v)| v.split(',').map(|x| x.trim().parse().expect("int")).collect())
        .collect()
}

/// Entries of the `S_4` table: 1-based permutation and polynomial in `x_1, x_2, x_3`.
/// The first entry is stored under the label it has in the table (a duplicate); callers
/// decide how to treat it.
pub fn schubert_table() -> Vec<(Permutation, SparsePolynomial)> {
    tables::SCHUBERT4
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#') && !l.contains(':'))
        .map(schubert_entry)
        .collect()
}

/// Terms missing from table entries, as recorded on `omission:` lines.
pub fn schubert_table_omissions() -> Vec<(Permutation, SparsePolynomial)> {
    tables::SCHUBERT4.lines().filter_map(|l| l.strip_prefix("omission:")).map(|l| schubert_entry(l.trim())).collect()
}

fn schubert_entry(line: &str) -> (Permutation, SparsePolynomial) {
    let (name, poly) = line.split_once(' ').expect("two fields");
    let one_line: Vec<usize> = name.chars().map(|c| c.to_digit(10).expect("digit") as usize + 1).collect();
    (Permutation::new(one_line).expect("permutation"), parse_xyz(poly.trim()))
}

/// Polynomials such as `x^2y+xy^2+1` in `x, y, z`.
pub fn parse_xyz(s: &str) -> SparsePolynomial {
    let mut p = SparsePolynomial::zero();
    for term in s.split('+') {
        let term = term.trim();
        let mut pairs = vec![];
        let chars: Vec<char> = term.chars().collect();
        let mut i = 0;
        let mut coef = 1i64;
        while i < chars.len() {
            let c = chars[i];
            let pos = match c {
                'x' => 1,
                'y' => 2,
                'z' => 3,
                d if d.is_ascii_digit() => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    coef *= chars[start..i].iter().collect::<String>().parse::<i64>().expect("int");
                    continue;
                }
                _ => panic!("unexpected {c:?} in {s:?}"),
            };
            i += 1;
            let mut e = 1u32;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                e = chars[i].to_digit(10).expect("exponent");
                i += 1;
            }
            pairs.push((Var::new(0, pos), e));
        }
        p.add_term(Monomial::from_pairs(pairs), BigInt::from(coef));
    }
    p
}

/// Greatest common divisor of a slice.
pub fn gcd_slice(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, x| g.gcd(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for text in [tables::QUBITS2, tables::FORMAT2X3, tables::QUTRITS2] {
            let f = SystemFile::parse(text).unwrap();
            let again = SystemFile::parse(&f.to_string()).unwrap();
            assert_eq!(f, again);
            let sys = f.to_system().unwrap();
            let out = SystemFile::from_system(&sys, vec![]);
            assert_eq!(SystemFile::parse(&out.to_string()).unwrap().to_system().unwrap(), sys);
        }
    }

    #[test]
    fn empty_system_has_count_zero() {
        let sys = InequalitySystem::empty("2x3".parse().unwrap(), Normalization::TraceOne);
        let text = SystemFile::from_system(&sys, vec![]).to_string();
        assert!(text.contains("count: 0"));
        assert!(SystemFile::parse(&text).unwrap().to_system().unwrap().is_empty());
    }

    #[test]
    fn shape_errors_carry_line_numbers() {
        let bad = "format: 2x3\nnormalization: trace-one\n1 -1 | 1 -1 | 0 0 0 >= 0\n";
        assert!(matches!(SystemFile::parse(bad), Err(Error::Parse { line: 3, .. })));
        let bad_count = "format: 2x2\nnormalization: trace-one\ncount: 2\n1 0 0 -1 | 1 -1 | 1 -1 >= 0\n";
        assert!(SystemFile::parse(bad_count).is_err());
    }

    #[test]
    fn scalar_qubit_rows() {
        let f = SystemFile::parse(tables::QUBITS2).unwrap();
        let sys = f.to_system().unwrap();
        let basic = MarginalInequality::new(f.format.clone(), vec![2, 0, 0, -2], vec![vec![1, -1], vec![1, -1]]).unwrap();
        assert!(sys.contains(&basic));
        assert_eq!(fixture_set(&f).unwrap().len(), 7);
    }

    #[test]
    fn checksums_match() {
        assert!(checksum_mismatches().is_empty(), "{:?}", checksum_mismatches());
    }

    #[test]
    fn xyz_parser() {
        let p = parse_xyz("x^2y+xy^2+2z");
        assert_eq!(p.len(), 3);
        assert_eq!(parse_xyz("1"), SparsePolynomial::one());
    }
}
