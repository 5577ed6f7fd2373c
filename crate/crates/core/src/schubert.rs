//! Permutations, divided differences and Schubert polynomials.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{one_line:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { one_line: (1..=n).collect() }
    }

    /// The longest element `(n, n-1, ..., 1)`.
    pub fn longest(n: usize) -> Self {
        Permutation { one_line: (1..=n).rev().collect() }
    }

    /// Simple transposition exchanging `i` and `i+1`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.one_line.swap(i - 1, i);
        p
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn size(&self) -> usize {
        self.one_line.len()
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        let mut n = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    n += 1;
                }
            }
        }
        n
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.size()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation { one_line: other.one_line.iter().map(|&j| self.one_line[j - 1]).collect() }
    }

    /// Append fixed points up to size `n`.
    pub fn extended(&self, n: usize) -> Self {
        let mut v = self.one_line.clone();
        v.extend(self.size() + 1..=n);
        Permutation { one_line: v }
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.size()).filter(|&i| self.one_line[i - 1] > self.one_line[i]).collect()
    }

    /// A reduced word `(a_1, ..., a_l)` with `self = s_{a_1} ∘ ... ∘ s_{a_l}`.
    /// `pick_last` selects which right descent is peeled off first.
    pub fn reduced_word_with(&self, pick_last: bool) -> Vec<usize> {
        let mut w = self.one_line.clone();
        let mut word = Vec::new();
        loop {
            let desc: Vec<usize> = (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect();
            let Some(&i) = (if pick_last { desc.last() } else { desc.first() }) else { break };
            w.swap(i - 1, i);
            word.push(i);
        }
        word.reverse();
        word
    }

    pub fn reduced_word(&self) -> Vec<usize> {
        self.reduced_word_with(false)
    }

    /// All reduced words.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        let mut memo: HashMap<Vec<usize>, Vec<Vec<usize>>> = HashMap::new();
        reduced_words_rec(&self.one_line, &mut memo)
    }

    /// Increasing within each consecutive block of the given sizes.
    pub fn is_shuffle(&self, blocks: &[usize]) -> bool {
        let mut start = 0;
        for &b in blocks {
            if self.one_line[start..start + b].windows(2).any(|p| p[0] > p[1]) {
                return false;
            }
            start += b;
        }
        true
    }

    /// Lehmer code: `c_i = #{j > i : w(j) < w(i)}`.
    pub fn code(&self) -> Vec<usize> {
        let w = &self.one_line;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[j] < w[i]).count()).collect()
    }

    pub fn from_code(code: &[usize]) -> Result<Self> {
        let n = code.len();
        let mut avail: Vec<usize> = (1..=n).collect();
        let mut out = Vec::with_capacity(n);
        for (i, &c) in code.iter().enumerate() {
            if c >= n - i {
                return Err(Error::InvalidPermutation(format!("bad code {code:?}")));
            }
            out.push(avail.remove(c));
        }
        Ok(Permutation { one_line: out })
    }
}

fn reduced_words_rec(w: &[usize], memo: &mut HashMap<Vec<usize>, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
    if let Some(v) = memo.get(w) {
        return v.clone();
    }
    let mut out = Vec::new();
    let mut any = false;
    for i in 1..w.len() {
        if w[i - 1] > w[i] {
            any = true;
            let mut v = w.to_vec();
            v.swap(i - 1, i);
            for mut word in reduced_words_rec(&v, memo) {
                word.push(i);
                out.push(word);
            }
        }
    }
    if !any {
        out.push(vec![]);
    }
    memo.insert(w.to_vec(), out.clone());
    out
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidPermutation(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(v)
    }
}

/// Variable `x[group, position]`, position 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub group: usize,
    pub pos: usize,
}

impl Var {
    pub fn new(group: usize, pos: usize) -> Self {
        Var { group, pos }
    }
}

/// Product of variables with positive exponents, sorted by variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: vec![] }
    }

    pub fn from_pairs(mut pairs: Vec<(Var, u32)>) -> Self {
        pairs.retain(|p| p.1 > 0);
        pairs.sort();
        let mut exps: Vec<(Var, u32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            match exps.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => exps.push((v, e)),
            }
        }
        Monomial { exps }
    }

    pub fn var(v: Var) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn exponents(&self) -> &[(Var, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps.iter().find(|p| p.0 == v).map_or(0, |p| p.1)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|p| p.1).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut pairs = self.exps.clone();
        pairs.extend_from_slice(&other.exps);
        Monomial::from_pairs(pairs)
    }

    fn with_exponent(&self, v: Var, e: u32) -> Monomial {
        let mut pairs: Vec<(Var, u32)> = self.exps.iter().filter(|p| p.0 != v).cloned().collect();
        pairs.push((v, e));
        Monomial::from_pairs(pairs)
    }
}

/// Polynomial with exact integer coefficients and no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparsePolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn var(v: Var) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::var(v), BigInt::one());
        p
    }

    pub fn monomial(m: Monomial, c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> SparsePolynomial {
        if k.is_zero() {
            return Self::zero();
        }
        SparsePolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn mul(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        SparsePolynomial { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn pow(&self, e: u32) -> SparsePolynomial {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Largest total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Swap `x[group,i]` and `x[group,i+1]`.
    pub fn swap_vars(&self, group: usize, i: usize) -> SparsePolynomial {
        let (a, b) = (Var::new(group, i), Var::new(group, i + 1));
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (ea, eb) = (m.exponent(a), m.exponent(b));
            out.add_term(m.with_exponent(a, eb).with_exponent(b, ea), c.clone());
        }
        out
    }

    /// Replace variables by polynomials; unmapped variables are kept.
    pub fn substitute(&self, map: &HashMap<Var, SparsePolynomial>) -> SparsePolynomial {
        let mut out = Self::zero();
        let mut powers: HashMap<(Var, u32), SparsePolynomial> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = SparsePolynomial::constant(c.clone());
            for &(v, e) in m.exponents() {
                let factor = match map.get(&v) {
                    Some(p) => powers.entry((v, e)).or_insert_with(|| p.pow(e)).clone(),
                    None => SparsePolynomial::monomial(Monomial::from_pairs(vec![(v, e)]), BigInt::one()),
                };
                term = term.mul(&factor);
            }
            out = out.add(&term);
        }
        out
    }

    /// Value at the integer point given by `point`.
    pub fn evaluate(&self, point: &dyn Fn(Var) -> BigInt) -> BigInt {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.exponents() {
                t *= num_traits::pow(point(v), e as usize);
            }
            total += t;
        }
        total
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            write!(f, "{}", c.abs())?;
            for &(v, e) in m.exponents() {
                write!(f, "*x[{},{}]", v.group, v.pos)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// `(f - s_i f) / (x_i - x_{i+1})` in the variables of `group`.
pub fn divided_difference(f: &SparsePolynomial, group: usize, i: usize) -> SparsePolynomial {
    let (xa, xb) = (Var::new(group, i), Var::new(group, i + 1));
    let mut out = SparsePolynomial::zero();
    for (m, c) in f.terms() {
        let (a, b) = (m.exponent(xa), m.exponent(xb));
        if a == b {
            continue;
        }
        let (hi, lo, sign) = if a > b { (a, b, 1) } else { (b, a, -1) };
        // x^hi y^lo - x^lo y^hi = x^lo y^lo (x^d - y^d), and (x^d - y^d)/(x - y) = sum x^{d-1-k} y^k
        let d = hi - lo;
        let coeff = c * BigInt::from(sign);
        for k in 0..d {
            let mm = m.with_exponent(xa, lo + d - 1 - k).with_exponent(xb, lo + k);
            out.add_term(mm, coeff.clone());
        }
    }
    out
}

/// `∂_{a_1} ∂_{a_2} ... ∂_{a_l} f` for a word `(a_1, ..., a_l)`.
pub fn divided_difference_word(f: &SparsePolynomial, group: usize, word: &[usize]) -> SparsePolynomial {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        g = divided_difference(&g, group, i);
        if g.is_zero() {
            break;
        }
    }
    g
}

/// Schubert polynomial in the variables of group 0, from the staircase monomial.
pub fn schubert_polynomial(w: &Permutation) -> SparsePolynomial {
    schubert_polynomial_in(w, 0)
}

pub fn schubert_polynomial_in(w: &Permutation, group: usize) -> SparsePolynomial {
    let n = w.size();
    let stair = Monomial::from_pairs((1..n).map(|i| (Var::new(group, i), (n - i) as u32)).collect());
    let top = SparsePolynomial::monomial(stair, BigInt::one());
    let v = w.inverse().compose(&Permutation::longest(n));
    divided_difference_word(&top, group, &v.reduced_word())
}

/// Terms of a Schubert polynomial as (sorted variable indices, coefficient), computed from
/// compatible sequences over all reduced words. Suited to large `n` with small length.
pub fn schubert_terms(w: &Permutation) -> Vec<(Vec<u8>, u64)> {
    let mut acc: HashMap<Vec<u8>, u64> = HashMap::new();
    let mut buf = Vec::with_capacity(w.length());
    for word in w.reduced_words() {
        compatible(&word, 0, 1, &mut buf, &mut acc);
    }
    let mut out: Vec<(Vec<u8>, u64)> = acc.into_iter().collect();
    out.sort();
    out
}

fn compatible(word: &[usize], j: usize, lo: usize, buf: &mut Vec<u8>, acc: &mut HashMap<Vec<u8>, u64>) {
    if j == word.len() {
        *acc.entry(buf.clone()).or_insert(0) += 1;
        return;
    }
    for i in lo..=word[j] {
        buf.push(i as u8);
        let next_lo = if j + 1 < word.len() && word[j] < word[j + 1] { i + 1 } else { i };
        compatible(word, j + 1, next_lo, buf, acc);
        buf.pop();
    }
}

/// Same polynomial as [`schubert_polynomial`], via compatible sequences.
pub fn schubert_polynomial_bjs(w: &Permutation) -> SparsePolynomial {
    let mut p = SparsePolynomial::zero();
    for (idx, c) in schubert_terms(w) {
        let m = Monomial::from_pairs(idx.iter().map(|&i| (Var::new(0, i as usize), 1)).collect());
        p.add_term(m, BigInt::from(c));
    }
    p
}

/// All permutations increasing within consecutive blocks of the given sizes, with length at
/// most `max_len`; sorted by length then one-line notation.
pub fn shuffles(blocks: &[usize], max_len: usize) -> Vec<Permutation> {
    let n: usize = blocks.iter().sum();
    // a shuffle has a weakly increasing Lehmer code inside each block
    let mut block_start = vec![false; n];
    let mut s = 0;
    for &b in blocks {
        if s < n {
            block_start[s] = true;
        }
        s += b;
    }
    let mut out = Vec::new();
    let mut code = Vec::with_capacity(n);
    shuffle_rec(n, &block_start, max_len, &mut code, &mut out);
    out.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
    out
}

fn shuffle_rec(n: usize, starts: &[bool], budget: usize, code: &mut Vec<usize>, out: &mut Vec<Permutation>) {
    let i = code.len();
    if i == n {
        out.push(Permutation::from_code(code).expect("valid code"));
        return;
    }
    let lo = if i > 0 && !starts[i] { code[i - 1] } else { 0 };
    let hi = (n - 1 - i).min(budget);
    for c in lo..=hi {
        code.push(c);
        shuffle_rec(n, starts, budget - c, code, out);
        code.pop();
    }
}

/// All permutations of `S_n` with length at most `max_len`.
pub fn permutations_up_to_length(n: usize, max_len: usize) -> Vec<Permutation> {
    shuffles(&vec![1; n], max_len)
}

/// Number of permutations of `S_n` with at most `max_len` inversions.
pub fn mahonian_count(n: usize, max_len: usize) -> BigUint {
    let mut poly = vec![BigUint::one()];
    for k in 1..=n {
        let mut next = vec![BigUint::zero(); poly.len() + k - 1];
        for (i, c) in poly.iter().enumerate() {
            for j in 0..k {
                next[i + j] += c;
            }
        }
        poly = next;
    }
    poly.iter().take(max_len + 1).sum()
}

/// Small-integer view of [`mahonian_count`] for tests and reports.
pub fn mahonian_count_u64(n: usize, max_len: usize) -> u64 {
    mahonian_count(n, max_len).to_u64().expect("fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }
    fn x(i: usize) -> SparsePolynomial {
        SparsePolynomial::var(Var::new(0, i))
    }

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(p(&[2, 1, 3, 4]).length(), 1);
        for n in 1..7 {
            assert_eq!(Permutation::longest(n).length(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn reduced_word_reconstructs() {
        let w = p(&[3, 1, 4, 2]);
        let word = w.reduced_word();
        assert_eq!(word.len(), w.length());
        let mut acc = Permutation::identity(4);
        for &i in &word {
            acc = acc.compose(&Permutation::simple(4, i));
        }
        assert_eq!(acc, w);
        assert_eq!(p(&[2, 1, 4, 3]).reduced_words().len(), 2);
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(divided_difference(&x(1), 0, 1), SparsePolynomial::one());
        assert!(divided_difference(&x(1).mul(&x(2)), 0, 1).is_zero());
        assert_eq!(divided_difference(&x(1).pow(2), 0, 1), x(1).add(&x(2)));
    }

    #[test]
    fn schubert_examples() {
        assert_eq!(schubert_polynomial(&p(&[2, 1, 3, 4])), x(1));
        assert_eq!(schubert_polynomial(&p(&[1, 2, 4, 3])), x(1).add(&x(2)).add(&x(3)));
        assert_eq!(schubert_polynomial(&p(&[3, 4, 1, 2])), x(1).pow(2).mul(&x(2).pow(2)));
        assert_eq!(schubert_polynomial(&Permutation::identity(4)), SparsePolynomial::one());
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(shuffles(&[4], 10), vec![Permutation::identity(4)]);
        assert_eq!(shuffles(&[1, 1], 1), vec![p(&[1, 2]), p(&[2, 1])]);
        assert_eq!(shuffles(&[2, 2], 4).len(), 6);
        assert!(shuffles(&[1, 2, 1], 2).iter().all(|w| w.is_shuffle(&[1, 2, 1])));
    }

    #[test]
    fn mahonian_examples() {
        assert_eq!(mahonian_count_u64(4, 2), 9);
        assert_eq!(mahonian_count_u64(8, 3), 111);
        assert_eq!(mahonian_count_u64(9, 6), 2298);
        assert_eq!(mahonian_count_u64(6, 15), 720);
        assert_eq!(permutations_up_to_length(6, 4).len(), 98);
    }

    #[test]
    fn display_polynomial() {
        let f = x(1).pow(2).sub(&x(2).scale(&BigInt::from(3)));
        assert_eq!(f.to_string(), "1*x[0,1]^2 - 3*x[0,2]");
    }
}
