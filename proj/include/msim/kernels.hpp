// SPDX-License-Identifier: Apache-2.0
//
// Data-parallel inner loops used across the simulator. Every kernel has a
// serial reference implementation (the contract) and an OpenMP variant that
// must produce bit-identical results; tests compare the two and the
// bench_kernels tool measures them against each other.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "msim/types.hpp"

namespace msim::kernels {

/// Causal FIR convolution with zero prehistory, output length equals input
/// length (tail truncated): y[i] = sum_k h[k] * x[i-k].
void convolve_serial(std::span<const cplx> x, std::span<const cplx> h,
                     std::span<cplx> y);
void convolve_omp(std::span<const cplx> x, std::span<const cplx> h,
                  std::span<cplx> y);
/// Dispatches to the OpenMP variant for large workloads.
void convolve(std::span<const cplx> x, std::span<const cplx> h,
              std::span<cplx> y);

std::vector<cplx> convolve(std::span<const cplx> x, std::span<const cplx> h);

/// In-place radix-2 FFT; size must be a power of two.
/// Forward transform is the plain sum; inverse applies the 1/N factor,
/// matching the OFDM modulator's scaling convention.
void fft_pow2(std::span<cplx> data, bool inverse);

/// First (kmax+1) bins of the M-point DFT of a real, zero-padded sequence:
/// X[k] = sum_n x[n] e^{-j 2 pi k n / M}, k = 0..kmax.
/// Direct evaluation; M need not be a power of two.
std::vector<cplx> dft_bins_serial(std::span<const double> x, std::size_t m,
                                  std::size_t kmax);
std::vector<cplx> dft_bins_omp(std::span<const double> x, std::size_t m,
                               std::size_t kmax);
std::vector<cplx> dft_bins(std::span<const double> x, std::size_t m,
                           std::size_t kmax);

}  // namespace msim::kernels
