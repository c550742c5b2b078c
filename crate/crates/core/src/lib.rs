//! Discrete and quantum Hilbert transforms, with a phase-steganography
//! protocol and an intercept-channel leakage analysis built on top.
//!
//! The crate is organized around one idea carried through three settings:
//! shifting Fourier-component phases by a quarter turn.
//!
//! - [`dht`] — the classical pipeline: DFT, one-sided spectral filter,
//!   analytic signal, Hilbert transform, and envelope detection.
//! - [`statevector`] — dense n-qubit states with QFT/IQFT and the polar
//!   (magnitude/phase) view of their amplitudes.
//! - [`qht`] — the quantum analogue of the Hilbert transformer:
//!   sign-conditional ±pi/2 phase modulation in the Fourier basis.
//! - [`stego`] — hides payload bits as ±pi/2 phase shifts on flagged
//!   carrier qubits, framed with an identifier mask and scheme label.
//! - [`channel`] — density matrices, von Neumann entropy, the Holevo
//!   quantity, and the noise-leakage bound for an intercepted channel.
//! - [`io`] — deterministic CSV/JSON codecs for every exported table.
//!
//! All operations are pure functions over immutable values and are safe to
//! call concurrently. With the default `parallel` feature the large
//! transforms fan out over rayon; disabling it swaps in sequential loops
//! that produce bit-identical results.

pub mod channel;
pub mod dht;
mod error;
mod fft;
pub mod io;
mod par;
pub mod qht;
pub mod statevector;
pub mod stego;

pub use error::{Error, Result};
