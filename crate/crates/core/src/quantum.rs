//! Random density matrices, partial traces and Hermitian spectra in double precision.

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::inequality::InequalitySystem;
use crate::spectra::SystemFormat;

/// Name of the generator recorded in reports.
pub const GENERATOR: &str = "ChaCha20 (rand_chacha), one stream per trial, Box-Muller normals";

/// Eigenvalues below this are treated as zero when counting rank.
pub const RANK_THRESHOLD: f64 = 1e-8;

const HERMITIAN_TOL: f64 = 1e-12;
const JACOBI_TOL: f64 = 1e-13;

/// Dense square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix { dim, data: vec![Complex64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Dimension("matrix must be square".into()));
        }
        Ok(ComplexMatrix { dim, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_real(rows: &[Vec<f64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect()).collect())
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex64::new(v, 0.0);
        }
        m
    }

    /// `|ψ⟩⟨ψ|` normalized to unit trace.
    pub fn pure(psi: &[Complex64]) -> Self {
        let n = psi.len();
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = psi[i] * psi[j].conj() / norm;
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(i, j)] = self[(j, i)].conj();
            }
        }
        m
    }

    pub fn mul(&self, other: &ComplexMatrix) -> Self {
        let n = self.dim;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    m.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        m
    }

    pub fn kron(&self, other: &ComplexMatrix) -> Self {
        let (a, b) = (self.dim, other.dim);
        let mut m = Self::zeros(a * b);
        for i in 0..a {
            for j in 0..a {
                for k in 0..b {
                    for l in 0..b {
                        m[(i * b + k, j * b + l)] = self[(i, j)] * other[(k, l)];
                    }
                }
            }
        }
        m
    }

    pub fn scale(&self, s: f64) -> Self {
        ComplexMatrix { dim: self.dim, data: self.data.iter().map(|z| z * s).collect() }
    }

    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Largest `|M_ij − conj(M_ji)|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                d = d.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        d
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

/// Generator for one trial: the seed selects the key, the trial index the stream.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn uniform_open(rng: &mut ChaCha20Rng) -> f64 {
    // (0, 1]: never zero, so the logarithm below is finite
    ((rng.next_u64() >> 11) as f64 + 1.0) * (1.0 / (1u64 << 53) as f64)
}

/// Standard complex normal (independent N(0,1) real and imaginary parts) by Box-Muller.
pub fn complex_normal(rng: &mut ChaCha20Rng) -> Complex64 {
    let u1 = uniform_open(rng);
    let u2 = uniform_open(rng);
    let r = (-2.0 * u1.ln()).sqrt();
    let t = 2.0 * std::f64::consts::PI * u2;
    Complex64::new(r * t.cos(), r * t.sin())
}

/// `G G† / tr(G G†)` with `G` a `dim × rank` matrix of complex normals.
pub fn random_density_from(rng: &mut ChaCha20Rng, dim: usize, rank: usize) -> Result<ComplexMatrix> {
    if rank == 0 || rank > dim {
        return Err(Error::Precondition(format!("rank {rank} outside 1..={dim}")));
    }
    let g: Vec<Complex64> = (0..dim * rank).map(|_| complex_normal(rng)).collect();
    let mut m = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            m[(i, j)] = (0..rank).map(|k| g[i * rank + k] * g[j * rank + k].conj()).sum();
        }
    }
    let tr = m.trace().re;
    Ok(m.scale(1.0 / tr))
}

pub fn random_density(dim: usize, rank: usize, seed: u64) -> Result<ComplexMatrix> {
    random_density_from(&mut trial_rng(seed, 0), dim, rank)
}

/// Reduced matrix on the kept factors (sorted, 0-based).
pub fn partial_trace(rho: &ComplexMatrix, format: &SystemFormat, keep: &[usize]) -> Result<ComplexMatrix> {
    let dims = format.dims();
    if rho.dim() != format.composite_dim() {
        return Err(Error::Dimension(format!("matrix of size {} for format {format}", rho.dim())));
    }
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if keep.is_empty() || keep.iter().any(|&k| k >= dims.len()) {
        return Err(Error::Dimension("kept factors must be a nonempty set of components".into()));
    }
    let traced: Vec<usize> = (0..dims.len()).filter(|c| !keep.contains(c)).collect();
    let kd: usize = keep.iter().map(|&c| dims[c]).product();
    let td: usize = traced.iter().map(|&c| dims[c]).product();
    let index = |k: usize, t: usize| -> usize {
        // assemble the full multi-index from kept and traced parts
        let mut digits = vec![0; dims.len()];
        let mut k = k;
        for &c in keep.iter().rev() {
            digits[c] = k % dims[c];
            k /= dims[c];
        }
        let mut t = t;
        for &c in traced.iter().rev() {
            digits[c] = t % dims[c];
            t /= dims[c];
        }
        digits.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
    };
    let mut out = ComplexMatrix::zeros(kd);
    for a in 0..kd {
        for b in 0..kd {
            out[(a, b)] = (0..td).map(|t| rho[(index(a, t), index(b, t))]).sum();
        }
    }
    Ok(out)
}

/// Eigenvalues of a Hermitian matrix, descending, by cyclic Jacobi on the real symmetric
/// embedding `[[Re, −Im], [Im, Re]]` (each eigenvalue appears twice there).
pub fn hermitian_spectrum(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let defect = m.hermiticity_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::NonHermitian(defect));
    }
    let n = m.dim();
    let s = 2 * n;
    let mut a = vec![0.0f64; s * s];
    for i in 0..n {
        for j in 0..n {
            let z = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
            a[i * s + j] = z.re;
            a[(i + n) * s + (j + n)] = z.re;
            a[(i + n) * s + j] = z.im;
            a[i * s + (j + n)] = -z.im;
        }
    }
    jacobi_eigenvalues(&mut a, s);
    let mut ev: Vec<f64> = (0..s).map(|i| a[i * s + i]).collect();
    ev.sort_by(|x, y| y.partial_cmp(x).expect("finite"));
    Ok(ev.into_iter().step_by(2).collect())
}

fn off_diagonal_norm(a: &[f64], s: usize) -> f64 {
    let mut t = 0.0;
    for i in 0..s {
        for j in 0..s {
            if i != j {
                t += a[i * s + j] * a[i * s + j];
            }
        }
    }
    t.sqrt()
}

fn jacobi_eigenvalues(a: &mut [f64], s: usize) {
    for _sweep in 0..100 {
        if off_diagonal_norm(a, s) < JACOBI_TOL {
            return;
        }
        for p in 0..s {
            for q in p + 1..s {
                let apq = a[p * s + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q * s + q] - a[p * s + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * c;
                for k in 0..s {
                    let akp = a[k * s + p];
                    let akq = a[k * s + q];
                    a[k * s + p] = c * akp - sn * akq;
                    a[k * s + q] = sn * akp + c * akq;
                }
                for k in 0..s {
                    let apk = a[p * s + k];
                    let aqk = a[q * s + k];
                    a[p * s + k] = c * apk - sn * aqk;
                    a[q * s + k] = sn * apk + c * aqk;
                }
            }
        }
    }
}

/// Number of eigenvalues above [`RANK_THRESHOLD`].
pub fn numerical_rank(spectrum: &[f64]) -> usize {
    spectrum.iter().filter(|&&x| x > RANK_THRESHOLD).count()
}

/// Spectra of one random state and its one-body margins.
#[derive(Clone, Debug, PartialEq)]
pub struct StateSample {
    pub seed: u64,
    pub stream: u64,
    pub format: SystemFormat,
    pub rank: usize,
    pub composite: Vec<f64>,
    pub margins: Vec<Vec<f64>>,
}

pub fn sample_state(format: &SystemFormat, rank: usize, seed: u64, stream: u64) -> Result<StateSample> {
    let mut rng = trial_rng(seed, stream);
    let rho = random_density_from(&mut rng, format.composite_dim(), rank)?;
    let composite = hermitian_spectrum(&rho)?;
    let margins = (0..format.components())
        .map(|c| hermitian_spectrum(&partial_trace(&rho, format, &[c])?))
        .collect::<Result<Vec<_>>>()?;
    Ok(StateSample { seed, stream, format: format.clone(), rank, composite, margins })
}

/// Worst observed value of each inequality over random states.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplingReport {
    pub generator: String,
    pub seed: u64,
    pub trials: usize,
    /// Largest amount by which any inequality went negative (0 if none did).
    pub max_violation: f64,
    /// Minimum of each inequality's left-hand side over all trials.
    pub worst: Vec<f64>,
    /// Trials with some value below `-tol`.
    pub violating_trials: usize,
    pub tol: f64,
}

impl SamplingReport {
    pub fn passes(&self) -> bool {
        self.max_violation <= self.tol
    }
}

/// Sample `trials` states with ranks cycling through `1..=N`; trial `t` uses stream `t`.
pub fn necessity_trial(system: &InequalitySystem, trials: usize, seed: u64, tol: f64) -> Result<SamplingReport> {
    let format = &system.format;
    let n = format.composite_dim();
    let per_trial: Vec<Vec<f64>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let s = sample_state(format, t % n + 1, seed, t as u64)?;
            Ok(system.inequalities.iter().map(|i| i.evaluate_f64(&s.composite, &s.margins)).collect())
        })
        .collect::<Result<_>>()?;
    let m = system.len();
    let mut worst = vec![f64::INFINITY; m];
    let mut violating = 0;
    for vals in &per_trial {
        let mut bad = false;
        for (w, &v) in worst.iter_mut().zip(vals) {
            *w = w.min(v);
            bad |= v < -tol;
        }
        violating += bad as usize;
    }
    let max_violation = worst.iter().fold(0.0f64, |acc, &w| acc.max(-w));
    Ok(SamplingReport {
        generator: GENERATOR.to_string(),
        seed,
        trials,
        max_violation,
        worst,
        violating_trials: violating,
        tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn spectrum_basics() {
        let d = hermitian_spectrum(&ComplexMatrix::diagonal(&[0.2, 0.5, 0.3])).unwrap();
        assert!((d[0] - 0.5).abs() < 1e-14 && (d[1] - 0.3).abs() < 1e-14 && (d[2] - 0.2).abs() < 1e-14);
        let x = hermitian_spectrum(&ComplexMatrix::from_real(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap()).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-14 && (x[1] + 1.0).abs() < 1e-14);
        let y = ComplexMatrix::from_rows(vec![vec![c(0.0, 0.0), c(0.0, -1.0)], vec![c(0.0, 1.0), c(0.0, 0.0)]]).unwrap();
        let ys = hermitian_spectrum(&y).unwrap();
        assert!((ys[0] - 1.0).abs() < 1e-14 && (ys[1] + 1.0).abs() < 1e-14);
        let bad = ComplexMatrix::from_real(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(hermitian_spectrum(&bad), Err(Error::NonHermitian(_))));
    }

    #[test]
    fn bell_state_margins() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let rho = ComplexMatrix::pure(&[c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)]);
        let a = partial_trace(&rho, &SystemFormat::qubits(2), &[0]).unwrap();
        assert!(a.max_abs_diff(&ComplexMatrix::identity(2).scale(0.5)) < 1e-15);
    }

    #[test]
    fn product_state_margin() {
        let f: SystemFormat = "2x3".parse().unwrap();
        let ra = random_density(2, 2, 1).unwrap();
        let rb = random_density(3, 2, 2).unwrap();
        let rho = ra.kron(&rb);
        assert!(partial_trace(&rho, &f, &[0]).unwrap().max_abs_diff(&ra) < 1e-14);
        assert!(partial_trace(&rho, &f, &[1]).unwrap().max_abs_diff(&rb) < 1e-14);
    }

    #[test]
    fn deterministic_and_normalized() {
        let a = random_density(6, 3, 42).unwrap();
        let b = random_density(6, 3, 42).unwrap();
        assert_eq!(a, b);
        assert!((a.trace().re - 1.0).abs() < 1e-12);
        let pure = hermitian_spectrum(&random_density(4, 1, 7).unwrap()).unwrap();
        assert!((pure[0] - 1.0).abs() < 1e-10 && pure[1..].iter().all(|x| x.abs() < 1e-10));
    }
}
