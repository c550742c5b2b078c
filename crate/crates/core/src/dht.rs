//! Classical discrete Hilbert transform pipeline.
//!
//! The chain is: forward DFT, one-sided spectral filter, inverse DFT. The
//! result is the analytic signal `x + i*x̂`; its imaginary part is the
//! Hilbert transform `x̂` and its magnitude is the envelope.
//!
//! Conventions: the forward DFT is the plain sum
//! `X[k] = sum_n x[n] * e^{-2*pi*i*k*n/N}` with no scale factor, and the
//! inverse carries the whole `1/N`. This is the classical signal-processing
//! convention; the quantum transforms in [`crate::statevector`] use the
//! opposite kernel sign with symmetric `1/sqrt(N)` factors.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::fft::{fourier_sum, Kernel};
use crate::par;

/// A finite sequence of real-valued samples.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSignal {
    samples: Vec<f64>,
}

impl RealSignal {
    /// Wraps a nonempty list of finite samples.
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySignal);
        }
        if let Some(i) = samples.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteSample(i));
        }
        Ok(Self { samples })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }

    /// The samples reinterpreted as complex numbers with zero imaginary part.
    pub fn to_complex(&self) -> Vec<Complex64> {
        self.samples.iter().map(|&v| Complex64::new(v, 0.0)).collect()
    }
}

/// A complex frequency-domain vector produced by [`dft`].
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSpectrum {
    bins: Vec<Complex64>,
}

impl ComplexSpectrum {
    /// Wraps a nonempty list of finite bins.
    pub fn new(bins: Vec<Complex64>) -> Result<Self> {
        if bins.is_empty() {
            return Err(Error::EmptySpectrum);
        }
        if let Some(i) = bins.iter().position(|b| !b.re.is_finite() || !b.im.is_finite()) {
            return Err(Error::NonFiniteValue(i));
        }
        Ok(Self { bins })
    }

    pub fn len(&self) -> usize {
        self.bins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    pub fn bins(&self) -> &[Complex64] {
        &self.bins
    }
}

/// The complex signal `x + i*x̂` whose spectrum has no negative-frequency
/// content.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticSignal {
    samples: Vec<Complex64>,
}

impl AnalyticSignal {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn real_part(&self) -> Vec<f64> {
        self.samples.iter().map(|z| z.re).collect()
    }

    pub fn imag_part(&self) -> Vec<f64> {
        self.samples.iter().map(|z| z.im).collect()
    }

    /// Per-sample magnitude `sqrt(x^2 + x̂^2)` — the envelope.
    pub fn magnitude(&self) -> Vec<f64> {
        self.samples.iter().map(|z| z.norm()).collect()
    }
}

/// Forward transform: `bins[k] = sum_n signal[n] * e^{-2*pi*i*k*n/N}`.
pub fn dft(signal: &[Complex64]) -> Result<ComplexSpectrum> {
    if signal.is_empty() {
        return Err(Error::EmptySignal);
    }
    ComplexSpectrum::new(fourier_sum(signal, Kernel::Negative))
}

/// Inverse transform: `out[n] = (1/N) * sum_k bins[k] * e^{+2*pi*i*k*n/N}`.
pub fn idft(spectrum: &ComplexSpectrum) -> Result<Vec<Complex64>> {
    if spectrum.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    let n = spectrum.len();
    let scale = 1.0 / n as f64;
    let mut out = fourier_sum(spectrum.bins(), Kernel::Positive);
    for v in &mut out {
        *v *= scale;
    }
    Ok(out)
}

/// One-sided spectral filter: weight 1 at DC, 2 on positive frequencies,
/// 1 on the Nyquist bin when N is even, 0 on negative frequencies.
///
/// For odd N there is no Nyquist bin; positive frequencies run through
/// `(N-1)/2` and everything above gets weight 0, which preserves both the
/// analytic-signal property and the `hilbert(hilbert(x)) = -x` identity.
pub fn analytic_filter(len: usize) -> Result<Vec<f64>> {
    if len == 0 {
        return Err(Error::EmptySignal);
    }
    let mut weights = vec![0.0; len];
    weights[0] = 1.0;
    if len.is_multiple_of(2) {
        for w in weights.iter_mut().take(len / 2).skip(1) {
            *w = 2.0;
        }
        weights[len / 2] = 1.0;
    } else {
        for w in weights.iter_mut().take(len / 2 + 1).skip(1) {
            *w = 2.0;
        }
    }
    Ok(weights)
}

/// Builds the analytic signal: `idft(dft(x) ⊙ H)` with `H` from
/// [`analytic_filter`]. The real part reproduces the input within 1e-9.
pub fn make_analytic(signal: &RealSignal) -> Result<AnalyticSignal> {
    let spectrum = dft(&signal.to_complex())?;
    let weights = analytic_filter(spectrum.len())?;
    let filtered: Vec<Complex64> = spectrum
        .bins()
        .iter()
        .zip(&weights)
        .map(|(b, &w)| b * w)
        .collect();
    let samples = idft(&ComplexSpectrum::new(filtered)?)?;
    Ok(AnalyticSignal { samples })
}

/// The discrete Hilbert transform: imaginary part of the analytic signal.
pub fn hilbert(signal: &RealSignal) -> Result<RealSignal> {
    RealSignal::new(make_analytic(signal)?.imag_part())
}

/// The signal envelope: magnitude of the analytic signal.
pub fn envelope(signal: &RealSignal) -> Result<RealSignal> {
    RealSignal::new(make_analytic(signal)?.magnitude())
}

/// Two-tone demonstration signal
/// `x(t) = 2*cos(2*pi*f1*t) + 2*sin(2*pi*f2*t)` sampled at
/// `t_n = n * duration / N`.
pub fn two_tone(f1: f64, f2: f64, n: usize, duration: f64) -> Result<RealSignal> {
    if n == 0 {
        return Err(Error::EmptySignal);
    }
    if !duration.is_finite() || duration <= 0.0 {
        return Err(Error::InvalidDuration);
    }
    let samples = par::map_indices(n, |i| {
        let t = i as f64 * duration / n as f64;
        2.0 * (TAU * f1 * t).cos() + 2.0 * (TAU * f2 * t).sin()
    });
    RealSignal::new(samples)
}

/// Amplitude-modulated demonstration signal
/// `x(t) = (1 + depth*cos(2*pi*f_m*t)) * cos(2*pi*f_c*t)` sampled at
/// `t_n = n * duration / N`. Its envelope is the modulator
/// `1 + depth*cos(2*pi*f_m*t)` whenever `depth <= 1`.
pub fn am_signal(carrier: f64, modulation: f64, depth: f64, n: usize, duration: f64) -> Result<RealSignal> {
    if n == 0 {
        return Err(Error::EmptySignal);
    }
    if !duration.is_finite() || duration <= 0.0 {
        return Err(Error::InvalidDuration);
    }
    let samples = par::map_indices(n, |i| {
        let t = i as f64 * duration / n as f64;
        (1.0 + depth * (TAU * modulation * t).cos()) * (TAU * carrier * t).cos()
    });
    RealSignal::new(samples)
}

/// Sample instants `t_n = n * duration / N` matching the generators above.
pub fn sample_times(n: usize, duration: f64) -> Vec<f64> {
    (0..n).map(|i| i as f64 * duration / n as f64).collect()
}
