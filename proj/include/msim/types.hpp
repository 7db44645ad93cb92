// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace msim {

using cplx = std::complex<double>;

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kPi = 3.14159265358979323846;

/// Thrown when a caller violates a documented precondition.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a numerical routine cannot produce a usable result
/// (singular system, fixed-point overflow, ...).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite block of complex baseband samples at a fixed sample rate.
/// This is the universal signal currency between modules.
struct IqBuffer {
  std::vector<cplx> samples;
  double sample_rate_hz = 20e6;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }

  double mean_power() const {
    if (samples.empty()) return 0.0;
    double acc = 0.0;
    for (const cplx& s : samples) acc += std::norm(s);
    return acc / static_cast<double>(samples.size());
  }

  /// Copy of samples [start, start+len).
  IqBuffer slice(std::size_t start, std::size_t len) const {
    if (start + len > samples.size())
      throw ContractError("IqBuffer::slice: range out of bounds");
    IqBuffer out;
    out.sample_rate_hz = sample_rate_hz;
    out.samples.assign(samples.begin() + static_cast<std::ptrdiff_t>(start),
                       samples.begin() + static_cast<std::ptrdiff_t>(start + len));
    return out;
  }

  bool all_finite() const {
    for (const cplx& s : samples)
      if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) return false;
    return true;
  }
};

inline double db10(double power_ratio) { return 10.0 * std::log10(power_ratio); }
inline double undb10(double db) { return std::pow(10.0, db / 10.0); }
inline double undb20(double db) { return std::pow(10.0, db / 20.0); }

}  // namespace msim
