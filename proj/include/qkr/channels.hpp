// Copyright 2026 The qkr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QKR_CHANNELS_HPP
#define QKR_CHANNELS_HPP

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qkr/complex_matrix.hpp"
#include "qkr/states.hpp"

namespace qkr {

enum class ChannelFamily {
  kAmplitudeDamping,
  kPhaseDamping,
  kDepolarizing,
  kPhaseFlip,
  kTritPhaseFlip,
};

// The as-printed phase-flip set duplicates the amplitude-damping matrices;
// "standard" substitutes the usual {I, Z, Z^2} dephasing mixture.
enum class PhaseFlipVariant { kStandard, kAsPrinted };

// The as-printed trit-phase-flip weights are not trace preserving;
// "renormalized" fixes the identity coefficient to sqrt(1-p).
enum class TritPhaseFlipVariant { kRenormalized, kAsPrinted };

/// Channel family plus variant. Use the factories; they keep variants
/// attached only to the two families that have them.
struct ChannelKind {
  ChannelFamily family = ChannelFamily::kAmplitudeDamping;
  PhaseFlipVariant pf_variant = PhaseFlipVariant::kStandard;
  TritPhaseFlipVariant tpf_variant = TritPhaseFlipVariant::kRenormalized;

  static ChannelKind amplitude_damping() { return {ChannelFamily::kAmplitudeDamping}; }
  static ChannelKind phase_damping() { return {ChannelFamily::kPhaseDamping}; }
  static ChannelKind depolarizing() { return {ChannelFamily::kDepolarizing}; }
  static ChannelKind phase_flip(PhaseFlipVariant v = PhaseFlipVariant::kStandard) {
    ChannelKind k{ChannelFamily::kPhaseFlip};
    k.pf_variant = v;
    return k;
  }
  static ChannelKind trit_phase_flip(TritPhaseFlipVariant v = TritPhaseFlipVariant::kRenormalized) {
    ChannelKind k{ChannelFamily::kTritPhaseFlip};
    k.tpf_variant = v;
    return k;
  }

  /// Short code used by the CLI and CSV output.
  std::string code() const {
    switch (family) {
      case ChannelFamily::kAmplitudeDamping: return "ad";
      case ChannelFamily::kPhaseDamping: return "pd";
      case ChannelFamily::kDepolarizing: return "dep";
      case ChannelFamily::kPhaseFlip:
        return pf_variant == PhaseFlipVariant::kStandard ? "pf" : "pf-as-printed";
      case ChannelFamily::kTritPhaseFlip:
        return tpf_variant == TritPhaseFlipVariant::kRenormalized ? "tpf" : "tpf-as-printed";
    }
    throw std::logic_error("ChannelKind: bad family");
  }
};

/// omega = e^{2 pi i / 3}; integer powers by angle arithmetic so omega^3
/// lands back on 1 without accumulated rounding.
inline Complex omega_power(int k) {
  int r = k % 3;
  if (r < 0) r += 3;
  return std::polar(1.0, 2.0 * std::numbers::pi * r / 3.0);
}

/// Cyclic level shift: |0> -> |2>, |1> -> |0>, |2> -> |1>.
inline ComplexMatrix shift_generator() {
  ComplexMatrix y(3);
  y(0, 1) = 1.0;
  y(1, 2) = 1.0;
  y(2, 0) = 1.0;
  return y;
}

/// Phase clock: diag(1, omega, omega^2).
inline ComplexMatrix clock_generator() {
  return ComplexMatrix::diagonal({omega_power(0), omega_power(1), omega_power(2)});
}

/// Sum of E^+ E over a Kraus set.
inline ComplexMatrix completeness_sum(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) throw std::invalid_argument("completeness_sum: empty Kraus set");
  ComplexMatrix s(kraus.front().dim());
  for (const auto& e : kraus) s = s + matmul(dagger(e), e);
  return s;
}

/// True iff max-abs entry of (sum E^+ E - I) <= tol.
inline bool verify_completeness(const std::vector<ComplexMatrix>& kraus, double tol) {
  const ComplexMatrix s = completeness_sum(kraus);
  return max_abs_diff(s, ComplexMatrix::identity(s.dim())) <= tol;
}

/// Thrown when a Kraus set fails sum E^+ E = I; the message carries the
/// offending diagonal so the defect is visible (e.g. (1 + p/3) I).
class ChannelCompletenessError : public std::runtime_error {
 public:
  explicit ChannelCompletenessError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void throw_completeness(const std::string& label, const ComplexMatrix& sum) {
  std::ostringstream os;
  os << label << ": Kraus completeness violated; sum(E^+ E) diagonal = [";
  for (std::size_t i = 0; i < sum.dim(); ++i) {
    if (i) os << ", ";
    os << sum(i, i).real();
  }
  os << "] (identity expected)";
  throw ChannelCompletenessError(os.str());
}

}  // namespace detail

/// Single-qutrit Kraus sets as printed, without the completeness gate.
/// Only the as-printed trit-phase flip actually fails the gate; it is kept
/// constructible here so the defect can be inspected and reported.
inline std::vector<ComplexMatrix> single_qutrit_kraus_unchecked(ChannelKind kind, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("single_qutrit_kraus: p out of [0, 1]");
  const double sp = std::sqrt(p);
  const ComplexMatrix eye = ComplexMatrix::identity(3);

  auto amplitude_damping = [&] {
    std::vector<ComplexMatrix> ops(3, ComplexMatrix(3));
    ops[0] = ComplexMatrix::diagonal({1.0, std::sqrt(1.0 - p), std::sqrt(1.0 - p)});
    ops[1](0, 1) = sp;
    ops[2](0, 2) = sp;
    return ops;
  };

  switch (kind.family) {
    case ChannelFamily::kAmplitudeDamping:
      return amplitude_damping();
    case ChannelFamily::kPhaseDamping:
      return {std::sqrt(1.0 - p) * eye, sp * clock_generator()};
    case ChannelFamily::kDepolarizing: {
      const ComplexMatrix y = shift_generator();
      const ComplexMatrix z = clock_generator();
      const ComplexMatrix yy = matmul(y, y);
      const ComplexMatrix zz = matmul(z, z);
      std::vector<ComplexMatrix> words = {
          y, z, yy, matmul(y, z), matmul(yy, z), matmul(y, zz), matmul(yy, zz), zz};
      std::vector<ComplexMatrix> ops;
      ops.reserve(9);
      ops.push_back(std::sqrt(1.0 - p) * eye);
      for (const auto& w : words) ops.push_back(std::sqrt(p / 8.0) * w);
      return ops;
    }
    case ChannelFamily::kPhaseFlip: {
      if (kind.pf_variant == PhaseFlipVariant::kAsPrinted) return amplitude_damping();
      const ComplexMatrix z = clock_generator();
      return {std::sqrt(1.0 - p) * eye, std::sqrt(p / 2.0) * z, std::sqrt(p / 2.0) * matmul(z, z)};
    }
    case ChannelFamily::kTritPhaseFlip: {
      ComplexMatrix f1(3), f2(3), f3(3);
      f1(0, 2) = omega_power(1);
      f1(1, 0) = 1.0;
      f1(2, 1) = omega_power(-1);
      f2(0, 1) = omega_power(-1);
      f2(1, 2) = omega_power(1);
      f2(2, 0) = 1.0;
      f3(0, 1) = omega_power(1);
      f3(1, 2) = omega_power(-1);
      f3(2, 0) = 1.0;
      const double c0 = kind.tpf_variant == TritPhaseFlipVariant::kRenormalized
                            ? std::sqrt(1.0 - p)
                            : std::sqrt(1.0 - 2.0 * p / 3.0);
      const double w = std::sqrt(p / 3.0);
      return {c0 * eye, w * f1, w * f2, w * f3};
    }
  }
  throw std::logic_error("single_qutrit_kraus: bad family");
}

/// Checked construction: throws ChannelCompletenessError when the set is not
/// trace preserving (the as-printed trit-phase flip for p > 0).
inline std::vector<ComplexMatrix> single_qutrit_kraus(ChannelKind kind, double p) {
  auto ops = single_qutrit_kraus_unchecked(kind, p);
  const ComplexMatrix s = completeness_sum(ops);
  if (max_abs_diff(s, ComplexMatrix::identity(3)) > kDefaultTol)
    detail::throw_completeness("channel " + kind.code(), s);
  return ops;
}

/// Lifts a single-qutrit set to three qutrits: every ordered triple
/// e_i (x) e_j (x) e_k. n inputs give n^3 outputs, preserving completeness.
inline std::vector<ComplexMatrix> lift_to_three(const std::vector<ComplexMatrix>& single) {
  for (const auto& e : single)
    if (e.dim() != 3) throw std::invalid_argument("lift_to_three: inputs must be 3x3");
  std::vector<ComplexMatrix> lifted;
  lifted.reserve(single.size() * single.size() * single.size());
  for (const auto& a : single)
    for (const auto& b : single)
      for (const auto& c : single) lifted.push_back(kron(kron(a, b), c));
  return lifted;
}

/// A noise channel acting identically and independently on each qutrit.
/// Construction verifies completeness of both the single-qutrit set and the
/// lifted set, so a held QutritChannel is always trace preserving.
struct QutritChannel {
  ChannelKind kind;
  double p = 0.0;
  std::vector<ComplexMatrix> single_kraus;
  std::vector<ComplexMatrix> lifted_kraus;

  static QutritChannel make(ChannelKind kind, double p) {
    QutritChannel ch;
    ch.kind = kind;
    ch.p = p;
    ch.single_kraus = single_qutrit_kraus(kind, p);
    ch.lifted_kraus = lift_to_three(ch.single_kraus);
    const ComplexMatrix s = completeness_sum(ch.lifted_kraus);
    if (max_abs_diff(s, ComplexMatrix::identity(kTriqutritDim)) > kDefaultTol)
      detail::throw_completeness("lifted channel " + kind.code(), s);
    return ch;
  }
};

/// rho -> sum_k E_k rho E_k^+ over the lifted set.
inline DensityMatrix apply_channel(const DensityMatrix& rho, const QutritChannel& ch) {
  const ComplexMatrix s = completeness_sum(ch.lifted_kraus);
  if (max_abs_diff(s, ComplexMatrix::identity(kTriqutritDim)) > kDefaultTol)
    detail::throw_completeness("apply_channel " + ch.kind.code(), s);
  ComplexMatrix out(kTriqutritDim);
  for (const auto& e : ch.lifted_kraus) out = out + matmul(matmul(e, rho.matrix()), dagger(e));
  return DensityMatrix::from_matrix(out);
}

/// p = 1 - e^{-gamma t}.
inline double decoherence_from_time(double gamma, double t) {
  if (gamma < 0.0 || t < 0.0)
    throw std::invalid_argument("decoherence_from_time: negative input");
  return 1.0 - std::exp(-gamma * t);
}

}  // namespace qkr

#endif  // QKR_CHANNELS_HPP
