//! End-to-end tests of the `qhilbert` binary: every documented example
//! invocation, its exit code, and the re-parseability of everything the
//! tool writes.

use std::f64::consts::TAU;
use std::path::Path;
use std::process::{Command, Output};

use num_complex::Complex64;
use qhilbert::channel::LeakageReport;
use qhilbert::io::{
    from_json_str, parse_analysis_csv, parse_figure_csv, parse_signal_csv, to_json_string,
};
use qhilbert::qht::FigureRow;
use qhilbert::statevector::StateVector;
use qhilbert::stego::StegoFrame;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qhilbert"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn assert_exit(output: &Output, code: i32) {
    assert_eq!(
        output.status.code(),
        Some(code),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&output.stdout),
        String::from_utf8_lossy(&output.stderr)
    );
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_signal_two_tone_writes_parseable_csv_with_known_samples() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("tone.csv");
    let output = run(&["gen-signal", "two-tone", "--output", path_str(&out)]);
    assert_exit(&output, 0);
    assert!(stdout(&output).contains("wrote 256 rows"));

    let (times, signal) = parse_signal_csv(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(signal.len(), 256);
    // Spot-check against the closed form 2cos(pi t / 16 * 2 * 0.5) + ...
    for &i in &[0usize, 1, 17, 100, 255] {
        let t = times[i];
        let expected = 2.0 * (TAU * 0.5 * t).cos() + 2.0 * (TAU * 1.5 * t).sin();
        assert!((signal.samples()[i] - expected).abs() < 1e-12);
    }
}

#[test]
fn hilbert_two_tone_matches_per_tone_identities() {
    let dir = tempfile::tempdir().unwrap();
    let tone = dir.path().join("tone.csv");
    let analysis = dir.path().join("analysis.csv");
    assert_exit(&run(&["gen-signal", "two-tone", "--output", path_str(&tone)]), 0);
    let output = run(&[
        "hilbert",
        "--input",
        path_str(&tone),
        "--output",
        path_str(&analysis),
    ]);
    assert_exit(&output, 0);

    let table = parse_analysis_csv(&std::fs::read_to_string(&analysis).unwrap()).unwrap();
    assert_eq!(table.times.len(), 256);
    // H[2cos(2 pi f1 t)] = 2sin(2 pi f1 t); H[2sin(2 pi f2 t)] = -2cos(2 pi f2 t).
    for i in 0..256 {
        let t = table.times[i];
        let expected = 2.0 * (TAU * 0.5 * t).sin() - 2.0 * (TAU * 1.5 * t).cos();
        assert!(
            (table.hilbert[i] - expected).abs() < 1e-9,
            "sample {i}: {} vs {expected}",
            table.hilbert[i]
        );
        assert!(table.envelope[i] >= table.original[i].abs() - 1e-9);
    }
}

#[test]
fn hilbert_missing_file_is_a_usage_error() {
    let output = run(&["hilbert", "--input", "/nonexistent/in.csv", "--output", "/tmp/x.csv"]);
    assert_exit(&output, 2);
    assert!(stderr(&output).starts_with("error: cannot read"));
}

#[test]
fn hilbert_empty_file_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.csv");
    std::fs::write(&empty, "").unwrap();
    let out = dir.path().join("out.csv");
    let output = run(&["hilbert", "--input", path_str(&empty), "--output", path_str(&out)]);
    assert_exit(&output, 2);
}

#[test]
fn hilbert_malformed_csv_names_the_offending_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "t,value\n0.0,1.0\n0.1,oops\n").unwrap();
    let out = dir.path().join("out.csv");
    let output = run(&["hilbert", "--input", path_str(&bad), "--output", path_str(&out)]);
    assert_exit(&output, 2);
    assert!(stderr(&output).contains("line 3"), "stderr: {}", stderr(&output));
}

#[test]
fn envelope_recovers_am_modulator() {
    let dir = tempfile::tempdir().unwrap();
    let am = dir.path().join("am.csv");
    let env = dir.path().join("env.csv");
    assert_exit(&run(&["gen-signal", "am", "--output", path_str(&am)]), 0);
    let output = run(&["envelope", "--input", path_str(&am), "--output", path_str(&env)]);
    assert_exit(&output, 0);

    let (times, signal) = parse_signal_csv(&std::fs::read_to_string(&env).unwrap()).unwrap();
    let n = signal.len();
    assert_eq!(n, 512);
    let margin = n / 20;
    let interior = times.iter().zip(signal.samples()).enumerate();
    for (i, (t, v)) in interior.take(n - margin).skip(margin) {
        let modulator = 1.0 + 0.5 * (TAU * 2.0 * t).cos();
        assert!((v - modulator).abs() < 2e-2, "sample {i}");
    }
}

#[test]
fn qht_emits_figure_rows_and_norm_summary() {
    let dir = tempfile::tempdir().unwrap();
    let fig = dir.path().join("fig.csv");
    let output = run(&[
        "qht",
        "--n-qubits",
        "5",
        "--seed",
        "7",
        "--output",
        path_str(&fig),
    ]);
    assert_exit(&output, 0);
    let text = stdout(&output);
    assert!(text.contains("rows 32"));
    assert!(text.contains("input norm  1.000000000"));
    assert!(text.contains("output norm 1.000000000"));

    let rows = parse_figure_csv(&std::fs::read_to_string(&fig).unwrap()).unwrap();
    assert_eq!(rows.len(), 32);
    // Reconstructable norms from the emitted magnitudes.
    let norm_before: f64 = rows.iter().map(|r| r.amp_before * r.amp_before).sum();
    let norm_after: f64 = rows.iter().map(|r| r.amp_after * r.amp_after).sum();
    assert!((norm_before.sqrt() - 1.0).abs() < 1e-10);
    assert!((norm_after.sqrt() - 1.0).abs() < 1e-10);
}

#[test]
fn qht_three_qubit_run_has_eight_rows() {
    let dir = tempfile::tempdir().unwrap();
    let fig = dir.path().join("fig.csv");
    let output = run(&[
        "qht",
        "--n-qubits",
        "3",
        "--seed",
        "42",
        "--output",
        path_str(&fig),
    ]);
    assert_exit(&output, 0);
    assert!(stdout(&output).contains("rows 8"));
    let rows = parse_figure_csv(&std::fs::read_to_string(&fig).unwrap()).unwrap();
    assert_eq!(rows.len(), 8);
}

#[test]
fn qht_rejects_out_of_range_register_sizes() {
    let output = run(&["qht", "--n-qubits", "0", "--output", "/tmp/x.csv"]);
    assert_exit(&output, 2);
    let output = run(&["qht", "--n-qubits", "21", "--output", "/tmp/x.csv"]);
    assert_exit(&output, 2);
}

#[test]
fn qht_json_and_csv_outputs_agree_bit_for_bit() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("fig.csv");
    let json = dir.path().join("fig.json");
    assert_exit(
        &run(&["qht", "--n-qubits", "4", "--seed", "9", "--output", path_str(&csv)]),
        0,
    );
    assert_exit(
        &run(&[
            "qht",
            "--n-qubits",
            "4",
            "--seed",
            "9",
            "--output",
            path_str(&json),
            "--format",
            "json",
        ]),
        0,
    );
    let from_csv = parse_figure_csv(&std::fs::read_to_string(&csv).unwrap()).unwrap();
    let from_json: Vec<FigureRow> =
        from_json_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(from_csv.len(), from_json.len());
    for (a, b) in from_csv.iter().zip(&from_json) {
        assert_eq!(a.index, b.index);
        assert_eq!(a.amp_before.to_bits(), b.amp_before.to_bits());
        assert_eq!(a.phase_before.to_bits(), b.phase_before.to_bits());
        assert_eq!(a.amp_after.to_bits(), b.amp_after.to_bits());
        assert_eq!(a.phase_after.to_bits(), b.phase_after.to_bits());
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let out_a = run(&["qht", "--n-qubits", "6", "--seed", "3", "--output", path_str(&a)]);
    let out_b = run(&["qht", "--n-qubits", "6", "--seed", "3", "--output", path_str(&b)]);
    assert_exit(&out_a, 0);
    assert_exit(&out_b, 0);
    assert_eq!(out_a.stdout, out_b.stdout);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let fa = dir.path().join("fa.json");
    let fb = dir.path().join("fb.json");
    for f in [&fa, &fb] {
        assert_exit(
            &run(&[
                "stego", "encode", "--ref-bits", "100101", "--payload", "101", "--identifier",
                "101010", "--scheme", "10", "--seed", "5", "--output", path_str(f),
            ]),
            0,
        );
    }
    assert_eq!(std::fs::read(&fa).unwrap(), std::fs::read(&fb).unwrap());
}

#[test]
fn stego_roundtrip_example_box() {
    let output = run(&[
        "stego",
        "roundtrip",
        "--ref-bits",
        "100101",
        "--payload",
        "101",
        "--identifier",
        "101010",
        "--scheme",
        "10",
    ]);
    assert_exit(&output, 0);
    assert_eq!(stdout(&output), "101\n");
}

#[test]
fn stego_roundtrip_survives_qht_baseline() {
    let output = run(&[
        "stego",
        "roundtrip",
        "--ref-bits",
        "100101",
        "--payload",
        "101",
        "--identifier",
        "101010",
        "--scheme",
        "01",
        "--seed",
        "11",
        "--qht-baseline",
    ]);
    assert_exit(&output, 0);
    assert_eq!(stdout(&output), "101\n");
}

#[test]
fn stego_encode_decode_via_files() {
    let dir = tempfile::tempdir().unwrap();
    let frame = dir.path().join("frame.json");
    let reference = dir.path().join("ref.json");
    let output = run(&[
        "stego", "encode", "--ref-bits", "100101", "--payload", "101", "--identifier", "101010",
        "--scheme", "10", "--seed", "5", "--output", path_str(&frame), "--reference-out",
        path_str(&reference),
    ]);
    assert_exit(&output, 0);
    assert!(stdout(&output).contains("frame length 14"));

    let output = run(&[
        "stego",
        "decode",
        "--frame",
        path_str(&frame),
        "--reference",
        path_str(&reference),
    ]);
    assert_exit(&output, 0);
    assert_eq!(stdout(&output), "101\n");
}

#[test]
fn stego_decode_of_tampered_frame_exits_one_with_error_name() {
    let dir = tempfile::tempdir().unwrap();
    let frame_path = dir.path().join("frame.json");
    let reference = dir.path().join("ref.json");
    assert_exit(
        &run(&[
            "stego", "encode", "--ref-bits", "100101", "--payload", "101", "--identifier",
            "101010", "--scheme", "10", "--seed", "5", "--output", path_str(&frame_path),
            "--reference-out", path_str(&reference),
        ]),
        0,
    );

    // Rotate an unflagged qubit's phase: the decoder must flag the frame
    // as corrupted rather than return any payload.
    let frame: StegoFrame = from_json_str(&std::fs::read_to_string(&frame_path).unwrap()).unwrap();
    let mut block = frame.message_block().to_vec();
    let rotation = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
    let rotated: Vec<Complex64> = block[1].amplitudes().iter().map(|a| a * rotation).collect();
    block[1] = StateVector::new(rotated).unwrap();
    let tampered = StegoFrame::new(block, frame.identifier().to_vec(), frame.scheme()).unwrap();
    std::fs::write(&frame_path, to_json_string(&tampered)).unwrap();

    let output = run(&[
        "stego",
        "decode",
        "--frame",
        path_str(&frame_path),
        "--reference",
        path_str(&reference),
    ]);
    assert_exit(&output, 1);
    assert_eq!(stderr(&output), "error: frame corrupted\n");
}

#[test]
fn stego_encode_rejects_popcount_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let frame = dir.path().join("frame.json");
    let output = run(&[
        "stego", "encode", "--ref-bits", "100101", "--payload", "10", "--identifier", "101010",
        "--scheme", "10", "--output", path_str(&frame),
    ]);
    assert_exit(&output, 2);
    assert_eq!(stderr(&output), "error: identifier/payload mismatch\n");
}

#[test]
fn stego_rejects_malformed_bitstrings_and_schemes() {
    let output = run(&[
        "stego", "roundtrip", "--ref-bits", "10x101", "--payload", "101", "--identifier",
        "101010",
    ]);
    assert_exit(&output, 2);
    let output = run(&[
        "stego", "roundtrip", "--ref-bits", "100101", "--payload", "101", "--identifier",
        "101010", "--scheme", "11",
    ]);
    assert_exit(&output, 2);
}

#[test]
fn leakage_table_prints_expected_rows() {
    let output = run(&["leakage", "--delta", "0,0.04,0.5,1"]);
    assert_exit(&output, 0);
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[0].contains("delta"));
    assert!(lines[0].contains("chi_ideal"));
    // chi_ideal column is identically zero; delta=1 saturates the exact bound.
    for row in &lines[1..] {
        let cells: Vec<&str> = row.split_whitespace().collect();
        assert_eq!(cells[1], "0.000000000");
    }
    assert!(lines[4].contains("1.000000000"));
    let last: Vec<&str> = lines[4].split_whitespace().collect();
    assert_eq!(last[2], "1.000000000"); // exact bound at delta = 1
}

#[test]
fn leakage_delta_zero_gives_a_zero_row() {
    let output = run(&["leakage", "--delta", "0"]);
    assert_exit(&output, 0);
    let text = stdout(&output);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(row, ["0.000000000"; 4].to_vec());
}

#[test]
fn leakage_rejects_out_of_range_delta() {
    let output = run(&["leakage", "--delta", "1.5"]);
    assert_exit(&output, 2);
    assert!(stderr(&output).contains("out of range"));
    let output = run(&["leakage", "--delta", "-0.1"]);
    assert_exit(&output, 2);
}

#[test]
fn leakage_json_report_matches_library_serialization() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("leakage.json");
    let output = run(&[
        "leakage",
        "--delta",
        "0,0.04,1",
        "--n-qubits",
        "4",
        "--output",
        path_str(&json),
    ]);
    assert_exit(&output, 0);
    let reports: Vec<LeakageReport> =
        from_json_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(reports.len(), 3);
    for r in &reports {
        assert_eq!(r.n_qubits, 4);
        assert!(r.chi_ideal.abs() < 1e-10);
    }
    assert_eq!(reports[2].bound_exact, 1.0);
}

#[test]
fn unknown_subcommand_uses_clap_exit_code() {
    let output = run(&["no-such-command"]);
    assert_exit(&output, 2);
}
