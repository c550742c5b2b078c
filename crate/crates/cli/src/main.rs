//! `qhilbert`: command-line front end for the transform library.
//!
//! Subcommands cover signal generation, classical Hilbert analysis,
//! quantum-Hilbert figure data, phase-steganography embed/extract, and
//! eavesdropper leakage tables. All commands are seeded and deterministic:
//! identical arguments produce byte-identical outputs.
//!
//! Exit codes: 0 success, 1 domain failure (a decode that detects
//! corruption, a round trip that does not verify), 2 usage or input error.

use clap::{Parser, Subcommand, ValueEnum};
use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use qhilbert::channel::leakage_bound;
use qhilbert::dht::{
    am_signal, envelope, hilbert, sample_times, two_tone, RealSignal,
};
use qhilbert::io::{
    from_json_str, parse_signal_csv, render_analysis_csv, render_figure_csv, render_signal_csv,
    to_json_string,
};
use qhilbert::qht::{emit_figure_data, qht, PhaseShiftRule};
use qhilbert::statevector::random_state;
use qhilbert::stego::{
    apply_qht_baseline, decode, encode, make_reference, parse_bits, Payload, ReferenceRegister,
    Scheme, StegoFrame,
};

#[derive(Parser)]
#[command(
    name = "qhilbert",
    version,
    about = "Hilbert transforms, their quantum analogue, and phase steganography"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a deterministic demonstration signal as a t,value CSV
    GenSignal {
        #[command(subcommand)]
        kind: SignalKind,
    },
    /// Analyze a t,value CSV; writes t,original,hilbert,envelope
    Hilbert {
        /// Input signal CSV with header t,value
        #[arg(long)]
        input: PathBuf,
        /// Output CSV path
        #[arg(long)]
        output: PathBuf,
    },
    /// Envelope-detect a t,value CSV; writes another t,value CSV
    Envelope {
        /// Input signal CSV with header t,value
        #[arg(long)]
        input: PathBuf,
        /// Output CSV path
        #[arg(long)]
        output: PathBuf,
    },
    /// Apply the quantum Hilbert transform to a seeded random state and
    /// emit the before/after figure table
    Qht {
        /// Register size in qubits (1..=20)
        #[arg(long)]
        n_qubits: usize,
        /// RNG seed for the input state
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path for the figure table
        #[arg(long)]
        output: PathBuf,
        /// Table format
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Embed or extract a payload hidden in quarter-turn phase shifts
    Stego {
        #[command(subcommand)]
        mode: StegoMode,
    },
    /// Print leakage bounds for an intercepted register at noise levels delta
    Leakage {
        /// Comma-separated noise levels, each between 0 and 1
        #[arg(long, value_delimiter = ',', required = true)]
        delta: Vec<f64>,
        /// Register size the eavesdropper intercepts (1..=10)
        #[arg(long, default_value_t = 3)]
        n_qubits: usize,
        /// Also write the reports as a JSON array
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SignalKind {
    /// Two-tone fixture 2cos(2 pi f1 t) + 2sin(2 pi f2 t)
    TwoTone {
        #[arg(long, default_value_t = 0.5)]
        f1: f64,
        #[arg(long, default_value_t = 1.5)]
        f2: f64,
        #[arg(long, default_value_t = 256)]
        samples: usize,
        #[arg(long, default_value_t = 16.0)]
        duration: f64,
        #[arg(long)]
        output: PathBuf,
    },
    /// AM fixture (1 + depth cos(2 pi fm t)) cos(2 pi fc t)
    Am {
        #[arg(long, default_value_t = 20.0)]
        carrier: f64,
        #[arg(long, default_value_t = 2.0)]
        modulation: f64,
        #[arg(long, default_value_t = 0.5)]
        depth: f64,
        #[arg(long, default_value_t = 512)]
        samples: usize,
        #[arg(long, default_value_t = 1.0)]
        duration: f64,
        #[arg(long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum StegoMode {
    /// Embed a payload; writes the frame (and optionally the reference) as JSON
    Encode {
        /// Reference register bits, e.g. 100101
        #[arg(long)]
        ref_bits: String,
        /// Seed for the reference phase pattern
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Payload bits, e.g. 101
        #[arg(long)]
        payload: String,
        /// Identifier bits flagging which qubits carry payload
        #[arg(long)]
        identifier: String,
        /// Scheme label: 10 (plus shift encodes 1) or 01
        #[arg(long, default_value = "10")]
        scheme: String,
        /// Output path for the frame JSON
        #[arg(long)]
        output: PathBuf,
        /// Also write the reference register JSON needed for decoding
        #[arg(long)]
        reference_out: Option<PathBuf>,
    },
    /// Extract the payload from frame + reference JSON; prints the bitstring
    Decode {
        /// Frame JSON produced by `stego encode`
        #[arg(long)]
        frame: PathBuf,
        /// Reference register JSON
        #[arg(long)]
        reference: PathBuf,
    },
    /// Encode then decode in memory and verify the payload survives
    Roundtrip {
        #[arg(long)]
        ref_bits: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        payload: String,
        #[arg(long)]
        identifier: String,
        #[arg(long, default_value = "10")]
        scheme: String,
        /// Run the reference through the quantum Hilbert transform first
        #[arg(long)]
        qht_baseline: bool,
    },
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Failures split by exit code: usage/input errors (2) versus domain
/// failures detected by an otherwise well-formed run (1).
enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

fn usage(err: impl Display) -> CliError {
    CliError::Usage(err.to_string())
}

/// Decode failures that prove tampering are domain errors; everything else
/// (wrong sizes, malformed inputs) is a usage error.
fn decode_error(err: qhilbert::Error) -> CliError {
    match err {
        qhilbert::Error::FrameCorrupted | qhilbert::Error::UndecodablePhase => {
            CliError::Domain(err.to_string())
        }
        other => usage(other),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

/// Nine-decimal table cell; folds negative zero into plain zero so table
/// output never depends on the sign of a zero intermediate.
fn fmt9(x: f64) -> String {
    format!("{:.9}", x + 0.0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::GenSignal { kind } => cmd_gen_signal(kind),
        Command::Hilbert { input, output } => cmd_hilbert(&input, &output),
        Command::Envelope { input, output } => cmd_envelope(&input, &output),
        Command::Qht { n_qubits, seed, output, format } => cmd_qht(n_qubits, seed, &output, format),
        Command::Stego { mode } => cmd_stego(mode),
        Command::Leakage { delta, n_qubits, output } => cmd_leakage(&delta, n_qubits, output.as_deref()),
    }
}

fn cmd_gen_signal(kind: SignalKind) -> Result<(), CliError> {
    let (signal, samples, duration, output) = match kind {
        SignalKind::TwoTone { f1, f2, samples, duration, output } => {
            (two_tone(f1, f2, samples, duration).map_err(usage)?, samples, duration, output)
        }
        SignalKind::Am { carrier, modulation, depth, samples, duration, output } => (
            am_signal(carrier, modulation, depth, samples, duration).map_err(usage)?,
            samples,
            duration,
            output,
        ),
    };
    let times = sample_times(samples, duration);
    write_file(&output, &render_signal_csv(&times, signal.samples()))?;
    println!("wrote {} rows to {}", samples, output.display());
    Ok(())
}

fn load_signal(path: &Path) -> Result<(Vec<f64>, RealSignal), CliError> {
    parse_signal_csv(&read_file(path)?).map_err(usage)
}

fn cmd_hilbert(input: &Path, output: &Path) -> Result<(), CliError> {
    let (times, signal) = load_signal(input)?;
    let transformed = hilbert(&signal).map_err(usage)?;
    let env = envelope(&signal).map_err(usage)?;
    let table = render_analysis_csv(&times, signal.samples(), transformed.samples(), env.samples());
    write_file(output, &table)?;
    println!("wrote {} rows to {}", signal.len(), output.display());
    Ok(())
}

fn cmd_envelope(input: &Path, output: &Path) -> Result<(), CliError> {
    let (times, signal) = load_signal(input)?;
    let env = envelope(&signal).map_err(usage)?;
    write_file(output, &render_signal_csv(&times, env.samples()))?;
    println!("wrote {} rows to {}", signal.len(), output.display());
    Ok(())
}

fn cmd_qht(n_qubits: usize, seed: u64, output: &Path, format: Format) -> Result<(), CliError> {
    if !(1..=20).contains(&n_qubits) {
        return Err(usage(format!("n_qubits must be in 1..=20, got {n_qubits}")));
    }
    let state = random_state(n_qubits, seed).map_err(usage)?;
    let trace = qht(&state, &PhaseShiftRule::default()).map_err(usage)?;
    let rows = emit_figure_data(&trace);
    let rendered = match format {
        Format::Csv => render_figure_csv(&rows),
        Format::Json => to_json_string(&rows),
    };
    write_file(output, &rendered)?;
    println!("n_qubits {}  seed {}  rows {}", n_qubits, seed, rows.len());
    println!("input norm  {}", fmt9(trace.input_state().norm()));
    println!("output norm {}", fmt9(trace.output_state().norm()));
    Ok(())
}

/// Shared parameter parsing for `stego encode` and `stego roundtrip`.
struct StegoPlan {
    reference: ReferenceRegister,
    payload: Payload,
    identifier: Vec<bool>,
    scheme: Scheme,
}

fn stego_plan(
    ref_bits: &str,
    seed: u64,
    payload: &str,
    identifier: &str,
    scheme: &str,
) -> Result<StegoPlan, CliError> {
    let reference = make_reference(&parse_bits(ref_bits).map_err(usage)?, seed).map_err(usage)?;
    let payload = Payload::new(parse_bits(payload).map_err(usage)?).map_err(usage)?;
    let identifier = parse_bits(identifier).map_err(usage)?;
    let scheme = Scheme::parse(scheme).map_err(usage)?;
    Ok(StegoPlan { reference, payload, identifier, scheme })
}

fn cmd_stego(mode: StegoMode) -> Result<(), CliError> {
    match mode {
        StegoMode::Encode { ref_bits, seed, payload, identifier, scheme, output, reference_out } => {
            let plan = stego_plan(&ref_bits, seed, &payload, &identifier, &scheme)?;
            let frame =
                encode(&plan.reference, &plan.payload, &plan.identifier, plan.scheme).map_err(usage)?;
            write_file(&output, &to_json_string(&frame))?;
            if let Some(ref_path) = reference_out {
                write_file(&ref_path, &to_json_string(&plan.reference))?;
            }
            println!("frame length {} -> {}", frame.total_length(), output.display());
            Ok(())
        }
        StegoMode::Decode { frame, reference } => {
            let frame: StegoFrame = from_json_str(&read_file(&frame)?).map_err(usage)?;
            let reference: ReferenceRegister =
                from_json_str(&read_file(&reference)?).map_err(usage)?;
            let payload = decode(&frame, &reference).map_err(decode_error)?;
            println!("{payload}");
            Ok(())
        }
        StegoMode::Roundtrip { ref_bits, seed, payload, identifier, scheme, qht_baseline } => {
            let mut plan = stego_plan(&ref_bits, seed, &payload, &identifier, &scheme)?;
            if qht_baseline {
                plan.reference = apply_qht_baseline(&plan.reference);
            }
            let frame =
                encode(&plan.reference, &plan.payload, &plan.identifier, plan.scheme).map_err(usage)?;
            let recovered = decode(&frame, &plan.reference).map_err(decode_error)?;
            if recovered.bits() != plan.payload.bits() {
                return Err(CliError::Domain(format!(
                    "round trip mismatch: sent {}, received {recovered}",
                    plan.payload
                )));
            }
            println!("{recovered}");
            Ok(())
        }
    }
}

fn cmd_leakage(deltas: &[f64], n_qubits: usize, output: Option<&Path>) -> Result<(), CliError> {
    if deltas.is_empty() {
        return Err(usage("at least one --delta value is required"));
    }
    let reports = deltas
        .iter()
        .map(|&d| leakage_bound(d, n_qubits))
        .collect::<Result<Vec<_>, _>>()
        .map_err(usage)?;
    println!(
        "{:>12} {:>12} {:>12} {:>12}",
        "delta", "chi_ideal", "bound_exact", "bound_approx"
    );
    for r in &reports {
        println!(
            "{:>12} {:>12} {:>12} {:>12}",
            fmt9(r.delta),
            fmt9(r.chi_ideal),
            fmt9(r.bound_exact),
            fmt9(r.bound_approx)
        );
    }
    if let Some(path) = output {
        write_file(path, &to_json_string(&reports))?;
    }
    Ok(())
}
