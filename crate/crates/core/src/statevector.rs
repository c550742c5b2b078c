//! Dense quantum state vectors with QFT/IQFT and polar decomposition.
//!
//! A state over n qubits stores all N = 2^n complex amplitudes. The quantum
//! Fourier transform here uses the `e^{+2*pi*i*j*k/N}` kernel with symmetric
//! `1/sqrt(N)` factors — note the sign is opposite to the classical DFT in
//! [`crate::dht`]; both conventions are kept deliberately.
//!
//! Index convention: amplitude index x is the big-endian integer reading of
//! the qubit string, i.e. qubit 0 is the most significant bit. This only
//! matters for serialization and for the steganography module's per-qubit
//! indexing; the transforms act on indices directly.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::fft::{fourier_sum, Kernel};
use crate::par;

/// Largest supported register: N = 2^20 amplitudes keeps the dense vector at
/// desk scale (~16 MiB).
pub const MAX_QUBITS: usize = 20;

/// Tolerance on the squared norm of externally supplied amplitude lists;
/// loose enough to accept states deserialized from decimal text.
pub const NORM_INPUT_TOL: f64 = 1e-6;

/// Amplitudes with magnitude below this are treated as zero when extracting
/// phases, and their phase is reported as 0.
pub const POLAR_ZERO_TOL: f64 = 1e-12;

/// A normalized pure state over n qubits, stored as 2^n amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Validates and wraps an amplitude list.
    ///
    /// The length must be a power of two in `2..=2^20` and every entry
    /// finite. The squared norm must be 1 within [`NORM_INPUT_TOL`]; inputs
    /// off by more than 1e-12 are renormalized, so constructing from a
    /// state's own amplitudes is bit-exact.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let n = amplitudes.len();
        if !n.is_power_of_two() || n < 2 {
            return Err(Error::InvalidStateLength(n));
        }
        let n_qubits = n.trailing_zeros() as usize;
        if n_qubits > MAX_QUBITS {
            return Err(Error::QubitCountOutOfRange { n_qubits, max: MAX_QUBITS });
        }
        if let Some(i) = amplitudes
            .iter()
            .position(|a| !a.re.is_finite() || !a.im.is_finite())
        {
            return Err(Error::NonFiniteValue(i));
        }
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > NORM_INPUT_TOL {
            return Err(Error::NotNormalized);
        }
        let mut amplitudes = amplitudes;
        if (norm_sqr - 1.0).abs() > 1e-12 {
            let inv = 1.0 / norm_sqr.sqrt();
            for a in &mut amplitudes {
                *a *= inv;
            }
        }
        Ok(Self { amplitudes })
    }

    /// Wraps amplitudes that are already normalized by construction.
    pub(crate) fn from_normalized(amplitudes: Vec<Complex64>) -> Self {
        debug_assert!(amplitudes.len().is_power_of_two() && amplitudes.len() >= 2);
        debug_assert!(
            (amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>() - 1.0).abs() < 1e-9
        );
        Self { amplitudes }
    }

    /// The computational basis state `|index⟩`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        check_qubit_range(n_qubits)?;
        let n = 1usize << n_qubits;
        if index >= n {
            return Err(Error::InvalidStateLength(index));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); n];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self { amplitudes })
    }

    /// The uniform superposition `(1/sqrt(N)) * sum_x |x⟩`.
    pub fn uniform(n_qubits: usize) -> Result<Self> {
        check_qubit_range(n_qubits)?;
        let n = 1usize << n_qubits;
        let a = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
        Ok(Self { amplitudes: vec![a; n] })
    }

    pub fn n_qubits(&self) -> usize {
        self.amplitudes.len().trailing_zeros() as usize
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// The 2-norm, 1 within 1e-10 by invariant.
    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }
}

fn check_qubit_range(n_qubits: usize) -> Result<()> {
    if !(1..=MAX_QUBITS).contains(&n_qubits) {
        return Err(Error::QubitCountOutOfRange { n_qubits, max: MAX_QUBITS });
    }
    Ok(())
}

/// A seeded random state: amplitudes drawn with independent standard complex
/// Gaussian components, then normalized. Deterministic for a given seed.
pub fn random_state(n_qubits: usize, seed: u64) -> Result<StateVector> {
    check_qubit_range(n_qubits)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 1usize << n_qubits;
    let mut amplitudes: Vec<Complex64> = (0..n)
        .map(|_| {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            Complex64::new(re, im)
        })
        .collect();
    let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
    if norm_sqr == 0.0 {
        // Unreachable in practice; keeps the normalization total.
        amplitudes[0] = Complex64::new(1.0, 0.0);
    } else {
        let inv = 1.0 / norm_sqr.sqrt();
        for a in &mut amplitudes {
            *a *= inv;
        }
    }
    Ok(StateVector { amplitudes })
}

/// Quantum Fourier transform:
/// `out[j] = (1/sqrt(N)) * sum_k in[k] * e^{+2*pi*i*j*k/N}`.
///
/// Normalization is enforced by the [`StateVector`] type, so the transform
/// itself cannot fail; unitarity keeps the output normalized.
pub fn qft(state: &StateVector) -> StateVector {
    StateVector::from_normalized(scaled_transform(state.amplitudes(), Kernel::Positive))
}

/// Inverse quantum Fourier transform:
/// `out[x] = (1/sqrt(N)) * sum_j in[j] * e^{-2*pi*i*j*x/N}`.
pub fn iqft(state: &StateVector) -> StateVector {
    StateVector::from_normalized(scaled_transform(state.amplitudes(), Kernel::Negative))
}

fn scaled_transform(amplitudes: &[Complex64], kernel: Kernel) -> Vec<Complex64> {
    let scale = 1.0 / (amplitudes.len() as f64).sqrt();
    let mut out = fourier_sum(amplitudes, kernel);
    for a in &mut out {
        *a *= scale;
    }
    out
}

/// QFT on a raw amplitude vector with no normalization handling; exists so
/// tests can probe linearity on unnormalized inputs.
#[doc(hidden)]
pub fn qft_unchecked(amplitudes: &[Complex64]) -> Vec<Complex64> {
    scaled_transform(amplitudes, Kernel::Positive)
}

/// Inverse counterpart of [`qft_unchecked`].
#[doc(hidden)]
pub fn iqft_unchecked(amplitudes: &[Complex64]) -> Vec<Complex64> {
    scaled_transform(amplitudes, Kernel::Negative)
}

/// One `(r, theta)` pair of a polar decomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarEntry {
    /// Magnitude, `>= 0`.
    pub magnitude: f64,
    /// Principal argument in `(-pi, pi]`; 0 whenever the magnitude is 0.
    pub phase: f64,
}

/// Magnitude/phase view of a complex vector: `entry_j = r_j * e^{i*theta_j}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarDecomposition {
    entries: Vec<PolarEntry>,
}

impl PolarDecomposition {
    /// Validates entry invariants: finite `r >= 0`, `theta` in `(-pi, pi]`,
    /// and `theta = 0` wherever `r = 0`.
    pub fn new(entries: Vec<PolarEntry>) -> Result<Self> {
        for (i, e) in entries.iter().enumerate() {
            let valid = e.magnitude.is_finite()
                && e.magnitude >= 0.0
                && e.phase.is_finite()
                && e.phase > -PI
                && e.phase <= PI
                && (e.magnitude != 0.0 || e.phase == 0.0);
            if !valid {
                return Err(Error::InvalidPolarEntry(i));
            }
        }
        Ok(Self { entries })
    }

    pub(crate) fn from_valid(entries: Vec<PolarEntry>) -> Self {
        Self { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[PolarEntry] {
        &self.entries
    }

    pub fn magnitudes(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.magnitude).collect()
    }

    pub fn phases(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.phase).collect()
    }
}

/// Splits one amplitude into the crate's polar convention: magnitudes below
/// [`POLAR_ZERO_TOL`] report phase 0, and an exact argument of `-pi` (from a
/// negative-zero imaginary part) folds onto `+pi`.
pub(crate) fn polar_parts(a: Complex64) -> (f64, f64) {
    let r = a.norm();
    if r < POLAR_ZERO_TOL {
        return (r, 0.0);
    }
    let mut theta = a.arg();
    if theta <= -PI {
        theta = PI;
    }
    (r, theta)
}

/// Extracts `(|amplitude|, arg)` per entry: phases in `(-pi, pi]`, with a
/// zero phase recorded for magnitudes below the zero tolerance.
pub fn to_polar(state: &StateVector) -> PolarDecomposition {
    let amplitudes = state.amplitudes();
    let entries = par::map_indices(amplitudes.len(), |i| {
        let (magnitude, phase) = polar_parts(amplitudes[i]);
        PolarEntry { magnitude, phase }
    });
    PolarDecomposition::from_valid(entries)
}

/// Rebuilds amplitudes `r_j * e^{i*theta_j}`. The squared magnitudes must
/// sum to 1 within [`NORM_INPUT_TOL`].
pub fn from_polar(polar: &PolarDecomposition) -> Result<StateVector> {
    let norm_sqr: f64 = polar.entries.iter().map(|e| e.magnitude * e.magnitude).sum();
    if (norm_sqr - 1.0).abs() > NORM_INPUT_TOL {
        return Err(Error::NotNormalized);
    }
    let entries = polar.entries();
    let amplitudes = par::map_indices(entries.len(), |i| {
        Complex64::from_polar(entries[i].magnitude, entries[i].phase)
    });
    StateVector::new(amplitudes)
}

#[derive(Serialize, Deserialize)]
struct StateVectorRepr {
    n_qubits: usize,
    amplitudes: Vec<[f64; 2]>,
}

impl Serialize for StateVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        StateVectorRepr {
            n_qubits: self.n_qubits(),
            amplitudes: self.amplitudes.iter().map(|a| [a.re, a.im]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StateVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = StateVectorRepr::deserialize(deserializer)?;
        if repr.n_qubits == 0 || repr.n_qubits > MAX_QUBITS {
            return Err(D::Error::custom(format!(
                "n_qubits {} out of range (1..={MAX_QUBITS})",
                repr.n_qubits
            )));
        }
        if repr.amplitudes.len() != 1usize << repr.n_qubits {
            return Err(D::Error::custom(format!(
                "amplitude count {} does not match n_qubits {}",
                repr.amplitudes.len(),
                repr.n_qubits
            )));
        }
        let amplitudes = repr
            .amplitudes
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        StateVector::new(amplitudes).map_err(D::Error::custom)
    }
}

impl Serialize for PolarDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = self.entries.iter().map(|e| [e.magnitude, e.phase]).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolarDecomposition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[f64; 2]>::deserialize(deserializer)?;
        let entries = pairs
            .iter()
            .map(|&[magnitude, phase]| PolarEntry { magnitude, phase })
            .collect();
        PolarDecomposition::new(entries).map_err(D::Error::custom)
    }
}
