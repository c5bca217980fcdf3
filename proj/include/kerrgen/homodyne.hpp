#pragma once

// Homodyne discrimination of the rotated probe: outcome probabilities,
// post-measurement signal states, and the readout confusion matrix.
//
// Two readout models. IdealProjective treats the pointer states as perfectly
// distinguishable (the projection the protocol assumes once |alpha tau| is
// large). GaussianQuadrature quantifies that assumption: unit-variance
// Gaussian pointer distributions with maximum-likelihood midpoint thresholds.

#include <optional>
#include <variant>
#include <vector>

#include "kerrgen/kerr.hpp"

namespace kerrgen {

inline constexpr double kDefaultOrthogonalityTol = 1e-6;

struct IdealProjective {};
struct GaussianQuadrature {
  // Local-oscillator phase. The default, arg(alpha) - pi/2, measures the
  // quadrature with means 2|alpha| sin(k tau), which separate linearly in k
  // for small tau.
  std::optional<double> lo_phase{};
};

struct HomodyneModel {
  std::variant<IdealProjective, GaussianQuadrature> mode;
  Amplitude alpha;
  double tau = 0.0;

  static HomodyneModel ideal(Amplitude alpha, double tau) {
    return {IdealProjective{}, alpha, tau};
  }
  static HomodyneModel gaussian(Amplitude alpha, double tau,
                                std::optional<double> lo_phase = std::nullopt) {
    return {GaussianQuadrature{lo_phase}, alpha, tau};
  }

  bool is_gaussian() const { return std::holds_alternative<GaussianQuadrature>(mode); }
  // Resolved local-oscillator phase (Gaussian mode).
  double resolved_lo_phase() const;
  // Pointer mean 2 Re(alpha e^{-i k tau} e^{-i lo_phase}) for outcome label k.
  double pointer_mean(int k) const;
};

// |<alpha e^{-i n tau} | alpha e^{-i m tau}>|^2, closed form:
// exp(-4 |alpha|^2 sin^2((n - m) tau / 2)). Depends only on |n - m|.
double pointer_overlap(Amplitude alpha, double tau, int n, int m);

struct DistinguishabilityReport {
  double alpha_tau_sq = 0.0;       // |alpha|^2 tau^2
  double max_adjacent_overlap = 0.0;
  double tolerance = kDefaultOrthogonalityTol;
  bool pass = false;
};

// Pass iff the worst adjacent-pointer overlap among labels 0..k_max is within
// the orthogonality tolerance.
DistinguishabilityReport distinguishability_check(Amplitude alpha, double tau, int k_max,
                                                  double tolerance = kDefaultOrthogonalityTol);

struct OutcomeRecord {
  int k = 0;
  double probability = 0.0;   // ideal sector probability
  FockState state;            // renormalized conditional signal state
  // Gaussian readout only:
  std::optional<double> decide_probability;  // P(readout decides k)
  std::optional<double> label_fidelity;      // fidelity of the decided-k mixture to `state`
};

// p[true k][decided j]; rows sum to 1.
struct ConfusionMatrix {
  std::vector<int> labels;
  std::vector<std::vector<double>> p;

  double off_diagonal_mass(int row) const;
};

struct MeasurementResult {
  std::vector<OutcomeRecord> outcomes;
  std::optional<ConfusionMatrix> confusion;  // Gaussian mode only
};

// Groups the joint state by total signal photon number k; probability is the
// sector weight and the conditional state the renormalized sector. Requires
// equal applied tau on every mode (else the k labels are ambiguous) and that
// the model's alpha/tau match the evolved state. Gaussian mode additionally
// attaches the confusion matrix and per-label fidelity degradation.
MeasurementResult measure(const PointerJointState& state, const HomodyneModel& model);

// P(decide j | true k) for labels 0..k_max under the Gaussian readout with
// midpoint thresholds (ties toward smaller k). Requires strictly increasing
// pointer means; the uninformative alpha = 0 / tau = 0 cases throw
// DegenerateReadoutError. IdealProjective models are not applicable.
ConfusionMatrix confusion_matrix(const HomodyneModel& model, int k_max);

// Standard normal upper tail Q(x).
double gaussian_tail(double x);

}  // namespace kerrgen
