//! Quantum Hilbert transform: QFT, sign-conditional phase modulation of the
//! Fourier coefficients, inverse QFT.
//!
//! The default rule mirrors the classical Hilbert transformer: Fourier
//! coefficients with positive phase are shifted by -pi/2, those with
//! negative phase by +pi/2, and zero-phase (or zero-magnitude)
//! coefficients are left alone. Because the shift direction depends on the
//! input's own phases, the map is *not* linear; the unit tests exhibit a
//! concrete witness pair.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde::de::Error as _;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::error::{Error, Result};
use crate::statevector::{
    from_polar, iqft, polar_parts, qft, to_polar, PolarDecomposition, PolarEntry, StateVector,
    POLAR_ZERO_TOL,
};

/// Sign-conditional phase-shift rule applied to each Fourier coefficient.
///
/// `positive_shift` is added where `theta > zero_tol`, `negative_shift`
/// where `theta < -zero_tol`; phases within `zero_tol` of 0 pass through.
/// The defaults are the Hilbert shifts -pi/2 / +pi/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseShiftRule {
    positive_shift: f64,
    negative_shift: f64,
    zero_tol: f64,
}

impl PhaseShiftRule {
    pub fn new(positive_shift: f64, negative_shift: f64, zero_tol: f64) -> Result<Self> {
        if !positive_shift.is_finite() || !negative_shift.is_finite() {
            return Err(Error::InvalidPhaseRule("shifts must be finite"));
        }
        if !zero_tol.is_finite() || zero_tol < 0.0 {
            return Err(Error::InvalidPhaseRule("zero_tol must be finite and nonnegative"));
        }
        Ok(Self { positive_shift, negative_shift, zero_tol })
    }

    pub fn positive_shift(&self) -> f64 {
        self.positive_shift
    }

    pub fn negative_shift(&self) -> f64 {
        self.negative_shift
    }

    pub fn zero_tol(&self) -> f64 {
        self.zero_tol
    }
}

impl Default for PhaseShiftRule {
    /// The Hilbert rule: -pi/2 on positive phases, +pi/2 on negative ones,
    /// with the crate-wide zero tolerance.
    fn default() -> Self {
        Self {
            positive_shift: -FRAC_PI_2,
            negative_shift: FRAC_PI_2,
            zero_tol: POLAR_ZERO_TOL,
        }
    }
}

/// Reduces an angle to the principal range `(-pi, pi]`.
pub fn wrap_phase(theta: f64) -> f64 {
    let mut w = theta.rem_euclid(TAU);
    if w > PI {
        w -= TAU;
    }
    w
}

/// Applies `rule` to every entry: magnitudes are untouched, phases are
/// shifted by the branch their sign selects and re-wrapped to `(-pi, pi]`.
pub fn modulate_phases(polar: &PolarDecomposition, rule: &PhaseShiftRule) -> PolarDecomposition {
    let entries = polar
        .entries()
        .iter()
        .map(|e| {
            let phase = if e.phase > rule.zero_tol {
                wrap_phase(e.phase + rule.positive_shift)
            } else if e.phase < -rule.zero_tol {
                wrap_phase(e.phase + rule.negative_shift)
            } else {
                e.phase
            };
            PolarEntry { magnitude: e.magnitude, phase }
        })
        .collect();
    PolarDecomposition::from_valid(entries)
}

/// Full record of one transform application: the input and output states
/// plus the Fourier-basis polar views they passed through.
#[derive(Debug, Clone, PartialEq)]
pub struct QhtTrace {
    input_polar: PolarDecomposition,
    output_polar: PolarDecomposition,
    input_state: StateVector,
    output_state: StateVector,
}

impl QhtTrace {
    /// Validates the cross-field invariants: all four parts share one
    /// length, and the modulation was phase-only (magnitudes match within
    /// 1e-12 elementwise).
    pub fn new(
        input_polar: PolarDecomposition,
        output_polar: PolarDecomposition,
        input_state: StateVector,
        output_state: StateVector,
    ) -> Result<Self> {
        let n = input_state.len();
        if input_polar.len() != n || output_polar.len() != n || output_state.len() != n {
            return Err(Error::InvalidTrace("field lengths differ"));
        }
        for (a, b) in input_polar.entries().iter().zip(output_polar.entries()) {
            if (a.magnitude - b.magnitude).abs() > 1e-12 {
                return Err(Error::InvalidTrace("Fourier magnitudes differ"));
            }
        }
        Ok(Self { input_polar, output_polar, input_state, output_state })
    }

    pub fn len(&self) -> usize {
        self.input_state.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn input_polar(&self) -> &PolarDecomposition {
        &self.input_polar
    }

    pub fn output_polar(&self) -> &PolarDecomposition {
        &self.output_polar
    }

    pub fn input_state(&self) -> &StateVector {
        &self.input_state
    }

    pub fn output_state(&self) -> &StateVector {
        &self.output_state
    }
}

/// Runs the transform and returns the full trace:
/// `output = iqft(from_polar(modulate(to_polar(qft(input)))))`.
pub fn qht(state: &StateVector, rule: &PhaseShiftRule) -> Result<QhtTrace> {
    let fourier = qft(state);
    let input_polar = to_polar(&fourier);
    let output_polar = modulate_phases(&input_polar, rule);
    let modulated = from_polar(&output_polar)?;
    let output_state = iqft(&modulated);
    QhtTrace::new(input_polar, output_polar, state.clone(), output_state)
}

/// One row of the before/after comparison table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FigureRow {
    pub index: usize,
    pub amp_before: f64,
    pub phase_before: f64,
    pub amp_after: f64,
    pub phase_after: f64,
}

/// Tabulates computational-basis magnitude and phase, before and after the
/// transform — one row per basis state, ready for bar or polar plots.
pub fn emit_figure_data(trace: &QhtTrace) -> Vec<FigureRow> {
    trace
        .input_state()
        .amplitudes()
        .iter()
        .zip(trace.output_state().amplitudes())
        .enumerate()
        .map(|(index, (before, after))| {
            let (amp_before, phase_before) = polar_parts(*before);
            let (amp_after, phase_after) = polar_parts(*after);
            FigureRow { index, amp_before, phase_before, amp_after, phase_after }
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct QhtTraceRepr {
    input_polar: PolarDecomposition,
    output_polar: PolarDecomposition,
    input_state: StateVector,
    output_state: StateVector,
}

impl Serialize for QhtTrace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        QhtTraceRepr {
            input_polar: self.input_polar.clone(),
            output_polar: self.output_polar.clone(),
            input_state: self.input_state.clone(),
            output_state: self.output_state.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QhtTrace {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = QhtTraceRepr::deserialize(deserializer)?;
        QhtTrace::new(repr.input_polar, repr.output_polar, repr.input_state, repr.output_state)
            .map_err(D::Error::custom)
    }
}
