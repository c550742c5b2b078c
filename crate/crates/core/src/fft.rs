//! Shared discrete Fourier kernel.
//!
//! Every transform in the crate reduces to the unnormalized sum
//! `out[k] = sum_n in[n] * exp(sign * 2*pi*i * k*n / N)` for one of the two
//! kernel signs; callers apply their own scale factor (1, 1/N, or 1/sqrt(N)).
//!
//! Power-of-two lengths take an iterative radix-2 path. Other lengths fall
//! back to direct evaluation against a precomputed twiddle table with
//! pairwise summation, which keeps the worst-case rounding error well below
//! the crate's 1e-12 round-trip contract even at N = 1024.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::par;

/// Sign of the complex exponential: `Negative` applies `e^{-2*pi*i*k*n/N}`,
/// `Positive` applies `e^{+2*pi*i*k*n/N}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Kernel {
    Negative,
    Positive,
}

impl Kernel {
    fn sign(self) -> f64 {
        match self {
            Kernel::Negative => -1.0,
            Kernel::Positive => 1.0,
        }
    }
}

/// Computes the unnormalized Fourier sum of `input` for the given kernel.
///
/// The input must be nonempty; callers validate that before dispatching.
pub(crate) fn fourier_sum(input: &[Complex64], kernel: Kernel) -> Vec<Complex64> {
    debug_assert!(!input.is_empty());
    if input.len().is_power_of_two() {
        let mut buf = input.to_vec();
        radix2_in_place(&mut buf, kernel);
        buf
    } else {
        direct_sum(input, kernel)
    }
}

/// Iterative Cooley-Tukey transform: bit-reversal permutation followed by
/// log2(N) butterfly passes over disjoint blocks.
fn radix2_in_place(buf: &mut [Complex64], kernel: Kernel) {
    let n = buf.len();
    debug_assert!(n.is_power_of_two());
    if n < 2 {
        return;
    }
    bit_reverse_permute(buf);
    let sign = kernel.sign();
    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let step = sign * TAU / len as f64;
        let twiddles: Vec<Complex64> = (0..half)
            .map(|j| Complex64::from_polar(1.0, step * j as f64))
            .collect();
        par::for_each_block(buf, len, |block| {
            let (lo, hi) = block.split_at_mut(half);
            for j in 0..half {
                let t = twiddles[j] * hi[j];
                hi[j] = lo[j] - t;
                lo[j] += t;
            }
        });
        len <<= 1;
    }
}

fn bit_reverse_permute(buf: &mut [Complex64]) {
    let n = buf.len();
    let shift = n.leading_zeros() + 1;
    for i in 0..n {
        let j = i.reverse_bits() >> shift;
        if i < j {
            buf.swap(i, j);
        }
    }
}

/// Direct O(N^2) evaluation for lengths without a radix-2 factorization.
///
/// Twiddles are indexed by `(k*n) mod N`, so every unit-circle point is
/// computed once from an exactly reduced angle.
fn direct_sum(input: &[Complex64], kernel: Kernel) -> Vec<Complex64> {
    let n = input.len();
    let sign = kernel.sign();
    let table: Vec<Complex64> = (0..n)
        .map(|j| Complex64::from_polar(1.0, sign * TAU * j as f64 / n as f64))
        .collect();
    par::map_indices(n, |k| pairwise_row(input, &table, k, 0, n))
}

/// Pairwise (cascade) summation of row `k`; splits keep the accumulation
/// depth logarithmic, bounding rounding growth at O(log N) instead of O(N).
fn pairwise_row(
    input: &[Complex64],
    table: &[Complex64],
    k: usize,
    lo: usize,
    hi: usize,
) -> Complex64 {
    const LEAF: usize = 32;
    if hi - lo <= LEAF {
        let n = input.len();
        let mut acc = Complex64::new(0.0, 0.0);
        for m in lo..hi {
            acc += input[m] * table[(k * m) % n];
        }
        acc
    } else {
        let mid = lo + (hi - lo) / 2;
        pairwise_row(input, table, k, lo, mid) + pairwise_row(input, table, k, mid, hi)
    }
}
