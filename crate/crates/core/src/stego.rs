//! Phase steganography over single-qubit carrier registers.
//!
//! A register of s basis-state qubits carries the cover bits. Payload bits
//! ride as ±pi/2 phase shifts on the qubits flagged by a classical
//! identifier mask; a two-bit scheme label declares which direction encodes
//! payload bit 1. The decoded frame is message block + identifier + scheme,
//! 2s + 2 qubits in total.
//!
//! The shift sits on the argument of each qubit's sole nonzero amplitude.
//! On one physical copy that is an unobservable global phase; the simulator
//! grants direct amplitude access, standing in for the multi-copy phase
//! estimation a real receiver would perform.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qht::{modulate_phases, wrap_phase, PhaseShiftRule};
use crate::statevector::{PolarDecomposition, PolarEntry, StateVector};

/// Largest supported register size.
pub const MAX_REFERENCE_BITS: usize = 64;

/// Decode classification tolerance, in radians: generous against
/// double-precision phase arithmetic, strict against the pi/2 separation
/// between symbols.
pub const PHASE_TOL: f64 = 1e-6;

/// Tolerance on per-qubit amplitude magnitudes when checking that a frame
/// still carries the reference basis states.
const AMP_TOL: f64 = 1e-6;

/// Which phase direction encodes payload bit 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// Label "10": +pi/2 encodes 1, -pi/2 encodes 0.
    PlusEncodesOne,
    /// Label "01": +pi/2 encodes 0, -pi/2 encodes 1.
    PlusEncodesZero,
}

impl Scheme {
    pub fn parse(label: &str) -> Result<Self> {
        match label {
            "10" => Ok(Scheme::PlusEncodesOne),
            "01" => Ok(Scheme::PlusEncodesZero),
            _ => Err(Error::InvalidScheme),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Scheme::PlusEncodesOne => "10",
            Scheme::PlusEncodesZero => "01",
        }
    }

    /// The scheme's two framing bits.
    pub fn bits(self) -> [bool; 2] {
        match self {
            Scheme::PlusEncodesOne => [true, false],
            Scheme::PlusEncodesZero => [false, true],
        }
    }

    /// Exact unit rotation (±i) embedding one payload bit.
    fn rotation(self, payload_bit: bool) -> Complex64 {
        let plus = match self {
            Scheme::PlusEncodesOne => payload_bit,
            Scheme::PlusEncodesZero => !payload_bit,
        };
        if plus {
            Complex64::new(0.0, 1.0)
        } else {
            Complex64::new(0.0, -1.0)
        }
    }

    /// Maps a decoded shift direction back to the payload bit.
    fn bit_for_plus_shift(self, shifted_plus: bool) -> bool {
        match self {
            Scheme::PlusEncodesOne => shifted_plus,
            Scheme::PlusEncodesZero => !shifted_plus,
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scheme::parse(s)
    }
}

impl Serialize for Scheme {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for Scheme {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let label = String::deserialize(deserializer)?;
        Scheme::parse(&label).map_err(D::Error::custom)
    }
}

/// Parses a string of '0'/'1' characters into bits.
pub fn parse_bits(text: &str) -> Result<Vec<bool>> {
    text.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::InvalidBitString),
        })
        .collect()
}

/// Renders bits as a '0'/'1' string.
pub fn format_bits(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn popcount(bits: &[bool]) -> usize {
    bits.iter().filter(|&&b| b).count()
}

/// Alice's pre-shared side of the protocol: the cover bits, their qubit
/// encodings, and the recorded reference phase of each qubit's amplitude.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceRegister {
    bits: Vec<bool>,
    qubit_states: Vec<StateVector>,
    phases: Vec<f64>,
    seed: u64,
}

impl ReferenceRegister {
    /// Validates and wraps explicit register contents. Each qubit state
    /// must be a single-qubit basis state matching its bit, with the
    /// recorded phase on the nonzero amplitude.
    pub fn new(
        bits: Vec<bool>,
        qubit_states: Vec<StateVector>,
        phases: Vec<f64>,
        seed: u64,
    ) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyReference);
        }
        if bits.len() > MAX_REFERENCE_BITS {
            return Err(Error::ReferenceTooLong(bits.len(), MAX_REFERENCE_BITS));
        }
        if qubit_states.len() != bits.len() || phases.len() != bits.len() {
            return Err(Error::InconsistentReference("field lengths differ"));
        }
        for ((bit, state), phase) in bits.iter().zip(&qubit_states).zip(&phases) {
            if state.len() != 2 {
                return Err(Error::InconsistentReference("qubit state is not single-qubit"));
            }
            if !phase.is_finite() || *phase <= -std::f64::consts::PI || *phase > std::f64::consts::PI
            {
                return Err(Error::InconsistentReference("recorded phase outside (-pi, pi]"));
            }
            let main = state.amplitudes()[*bit as usize];
            let off = state.amplitudes()[1 - *bit as usize];
            let aligned = (main.norm() - 1.0).abs() <= 1e-9
                && off.norm() <= 1e-9
                && wrap_phase(main.arg() - phase).abs() <= 1e-9;
            if !aligned {
                return Err(Error::InconsistentReference("qubit state disagrees with bit/phase"));
            }
        }
        Ok(Self { bits, qubit_states, phases, seed })
    }

    /// Register size s.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn qubit_states(&self) -> &[StateVector] {
        &self.qubit_states
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Encodes each cover bit b as the basis state |b⟩ with a recorded
/// reference phase of 0. Deterministic; the seed is carried for
/// reproducibility bookkeeping, not consumed here.
pub fn make_reference(bits: &[bool], seed: u64) -> Result<ReferenceRegister> {
    if bits.is_empty() {
        return Err(Error::EmptyReference);
    }
    if bits.len() > MAX_REFERENCE_BITS {
        return Err(Error::ReferenceTooLong(bits.len(), MAX_REFERENCE_BITS));
    }
    let qubit_states = bits
        .iter()
        .map(|&b| StateVector::basis(1, b as usize).expect("single-qubit basis state"))
        .collect();
    Ok(ReferenceRegister {
        bits: bits.to_vec(),
        qubit_states,
        phases: vec![0.0; bits.len()],
        seed,
    })
}

/// The secret bits to embed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Payload {
    bits: Vec<bool>,
}

impl Payload {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyPayload);
        }
        Ok(Self { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }
}

impl fmt::Display for Payload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_bits(&self.bits))
    }
}

/// The transmitted frame: message block, then identifier, then scheme, with
/// the identifier and scheme carried classically (they become basis states
/// only in serialized form and are never phase-modulated).
#[derive(Debug, Clone, PartialEq)]
pub struct StegoFrame {
    message_block: Vec<StateVector>,
    identifier: Vec<bool>,
    scheme: Scheme,
}

impl StegoFrame {
    /// Validates block shape: s message qubits (each single-qubit) and an
    /// identifier of the same length.
    pub fn new(message_block: Vec<StateVector>, identifier: Vec<bool>, scheme: Scheme) -> Result<Self> {
        let s = message_block.len();
        if s == 0 {
            return Err(Error::EmptyReference);
        }
        if s > MAX_REFERENCE_BITS {
            return Err(Error::ReferenceTooLong(s, MAX_REFERENCE_BITS));
        }
        if identifier.len() != s {
            return Err(Error::IdentifierPayloadMismatch);
        }
        if message_block.iter().any(|q| q.len() != 2) {
            return Err(Error::InvalidTrace("message qubit is not single-qubit"));
        }
        Ok(Self { message_block, identifier, scheme })
    }

    /// Register size s.
    pub fn reference_len(&self) -> usize {
        self.message_block.len()
    }

    /// Total frame length l = 2s + 2.
    pub fn total_length(&self) -> usize {
        2 * self.message_block.len() + 2
    }

    pub fn message_block(&self) -> &[StateVector] {
        &self.message_block
    }

    pub fn identifier(&self) -> &[bool] {
        &self.identifier
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }
}

/// Embeds the payload: the k-th flagged qubit (scanning the identifier left
/// to right) is rotated by +pi/2 or -pi/2 according to payload bit k and
/// the scheme; unflagged qubits pass through untouched.
pub fn encode(
    reference: &ReferenceRegister,
    payload: &Payload,
    identifier: &[bool],
    scheme: Scheme,
) -> Result<StegoFrame> {
    let s = reference.len();
    if identifier.len() != s || popcount(identifier) != payload.len() {
        return Err(Error::IdentifierPayloadMismatch);
    }
    let mut message_block: Vec<StateVector> = reference.qubit_states().to_vec();
    let mut payload_bits = payload.bits().iter();
    for (qubit, &flagged) in message_block.iter_mut().zip(identifier) {
        if flagged {
            let bit = *payload_bits.next().expect("popcount matches payload length");
            let rotation = scheme.rotation(bit);
            let rotated = qubit.amplitudes().iter().map(|a| a * rotation).collect();
            *qubit = StateVector::from_normalized(rotated);
        }
    }
    StegoFrame::new(message_block, identifier.to_vec(), scheme)
}

/// Recovers the payload by comparing each message qubit's phase against the
/// recorded reference phase.
///
/// Unflagged qubits must sit within [`PHASE_TOL`] of the reference phase
/// and flagged qubits within [`PHASE_TOL`] of a ±pi/2 offset; anything else
/// is an error, never a silently wrong bit. A qubit whose amplitude
/// magnitudes no longer match the reference basis state is reported as
/// corrupted.
pub fn decode(frame: &StegoFrame, reference: &ReferenceRegister) -> Result<Payload> {
    let s = reference.len();
    if frame.reference_len() != s {
        return Err(Error::FrameLengthMismatch {
            expected: 2 * s + 2,
            found: frame.total_length(),
        });
    }
    let mut bits = Vec::with_capacity(popcount(frame.identifier()));
    for i in 0..s {
        let expected_index = reference.bits()[i] as usize;
        let qubit = &frame.message_block()[i];
        let main = qubit.amplitudes()[expected_index];
        let off = qubit.amplitudes()[1 - expected_index];
        if (main.norm() - 1.0).abs() > AMP_TOL || off.norm() > AMP_TOL {
            return Err(Error::FrameCorrupted);
        }
        let delta = wrap_phase(main.arg() - reference.phases()[i]);
        if frame.identifier()[i] {
            if (delta - FRAC_PI_2).abs() <= PHASE_TOL {
                bits.push(frame.scheme().bit_for_plus_shift(true));
            } else if (delta + FRAC_PI_2).abs() <= PHASE_TOL {
                bits.push(frame.scheme().bit_for_plus_shift(false));
            } else {
                return Err(Error::UndecodablePhase);
            }
        } else if delta.abs() > PHASE_TOL {
            return Err(Error::FrameCorrupted);
        }
    }
    Payload::new(bits)
}

/// Passes the register's recorded phases through the default Hilbert
/// phase-modulation rule, yielding the baseline the message block would
/// carry if the transform preceded payload embedding.
///
/// This step is deliberately separate from [`encode`], which leaves the
/// reference phases untouched by default; callers opt in by encoding
/// against the returned register.
pub fn apply_qht_baseline(reference: &ReferenceRegister) -> ReferenceRegister {
    let polar = PolarDecomposition::new(
        reference
            .phases()
            .iter()
            .map(|&phase| PolarEntry { magnitude: 1.0, phase })
            .collect(),
    )
    .expect("recorded phases are wrapped");
    let modulated = modulate_phases(&polar, &PhaseShiftRule::default());
    let phases: Vec<f64> = modulated.entries().iter().map(|e| e.phase).collect();
    let qubit_states = reference
        .bits()
        .iter()
        .zip(&phases)
        .map(|(&bit, &phase)| {
            let mut amplitudes = vec![Complex64::new(0.0, 0.0); 2];
            amplitudes[bit as usize] = Complex64::from_polar(1.0, phase);
            StateVector::from_normalized(amplitudes)
        })
        .collect();
    ReferenceRegister {
        bits: reference.bits().to_vec(),
        qubit_states,
        phases,
        seed: reference.seed(),
    }
}

#[derive(Serialize, Deserialize)]
struct ReferenceRegisterRepr {
    s: usize,
    bits: String,
    seed: u64,
    phases: Vec<f64>,
    qubit_states: Vec<StateVector>,
}

impl Serialize for ReferenceRegister {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ReferenceRegisterRepr {
            s: self.len(),
            bits: format_bits(&self.bits),
            seed: self.seed,
            phases: self.phases.clone(),
            qubit_states: self.qubit_states.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ReferenceRegister {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ReferenceRegisterRepr::deserialize(deserializer)?;
        let bits = parse_bits(&repr.bits).map_err(D::Error::custom)?;
        if bits.len() != repr.s {
            return Err(D::Error::custom("field s disagrees with bits length"));
        }
        ReferenceRegister::new(bits, repr.qubit_states, repr.phases, repr.seed)
            .map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct StegoFrameRepr {
    s: usize,
    message_block: Vec<StateVector>,
    identifier: String,
    scheme: Scheme,
}

impl Serialize for StegoFrame {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        StegoFrameRepr {
            s: self.reference_len(),
            message_block: self.message_block.clone(),
            identifier: format_bits(&self.identifier),
            scheme: self.scheme,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StegoFrame {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = StegoFrameRepr::deserialize(deserializer)?;
        let identifier = parse_bits(&repr.identifier).map_err(D::Error::custom)?;
        if identifier.len() != repr.s || repr.message_block.len() != repr.s {
            return Err(D::Error::custom("field s disagrees with block lengths"));
        }
        StegoFrame::new(repr.message_block, identifier, repr.scheme).map_err(D::Error::custom)
    }
}
