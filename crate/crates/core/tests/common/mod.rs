//! Independent reference implementations ("oracles") used to cross-check
//! the production transforms. These are deliberately written as plain
//! double loops with straight-line accumulation — no FFT, no shared code
//! with the library's kernels.

use num_complex::Complex64;
use std::f64::consts::TAU;

/// Classical forward DFT: `X[k] = sum_n x[n] * e^{-2*pi*i*k*n/N}`.
pub fn naive_dft(signal: &[Complex64]) -> Vec<Complex64> {
    let n = signal.len();
    (0..n)
        .map(|k| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (m, v) in signal.iter().enumerate() {
                let angle = -TAU * ((k * m) % n) as f64 / n as f64;
                acc += v * Complex64::new(angle.cos(), angle.sin());
            }
            acc
        })
        .collect()
}

/// Classical inverse DFT: `x[n] = (1/N) * sum_k X[k] * e^{+2*pi*i*k*n/N}`.
pub fn naive_idft(spectrum: &[Complex64]) -> Vec<Complex64> {
    let n = spectrum.len();
    (0..n)
        .map(|m| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, v) in spectrum.iter().enumerate() {
                let angle = TAU * ((k * m) % n) as f64 / n as f64;
                acc += v * Complex64::new(angle.cos(), angle.sin());
            }
            acc / n as f64
        })
        .collect()
}

/// Direct evaluation of the QFT double sum:
/// `beta_j = (1/sqrt(N)) * sum_k alpha_k * e^{+2*pi*i*j*k/N}`.
pub fn naive_qft(amplitudes: &[Complex64]) -> Vec<Complex64> {
    let n = amplitudes.len();
    let scale = 1.0 / (n as f64).sqrt();
    (0..n)
        .map(|j| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, a) in amplitudes.iter().enumerate() {
                let angle = TAU * ((j * k) % n) as f64 / n as f64;
                acc += a * Complex64::new(angle.cos(), angle.sin());
            }
            acc * scale
        })
        .collect()
}

/// Largest elementwise distance between two complex vectors.
pub fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
