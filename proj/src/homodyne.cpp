#include "kerrgen/homodyne.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace kerrgen {

double HomodyneModel::resolved_lo_phase() const {
  if (const auto* gq = std::get_if<GaussianQuadrature>(&mode); gq && gq->lo_phase) {
    return *gq->lo_phase;
  }
  return std::arg(alpha) - std::numbers::pi / 2.0;
}

double HomodyneModel::pointer_mean(int k) const {
  const Amplitude rotated = alpha * std::polar(1.0, -k * tau - resolved_lo_phase());
  return 2.0 * rotated.real();
}

double pointer_overlap(Amplitude alpha, double tau, int n, int m) {
  const double half_angle = 0.5 * (n - m) * tau;
  const double s = std::sin(half_angle);
  return std::exp(-4.0 * std::norm(alpha) * s * s);
}

DistinguishabilityReport distinguishability_check(Amplitude alpha, double tau, int k_max,
                                                  double tolerance) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  DistinguishabilityReport report;
  report.alpha_tau_sq = std::norm(alpha) * tau * tau;
  report.tolerance = tolerance;
  double worst = 0.0;
  for (int k = 0; k < k_max; ++k) {
    worst = std::max(worst, pointer_overlap(alpha, tau, k, k + 1));
  }
  report.max_adjacent_overlap = worst;
  report.pass = worst <= tolerance;
  return report;
}

double gaussian_tail(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double ConfusionMatrix::off_diagonal_mass(int row) const {
  double mass = 0.0;
  for (std::size_t j = 0; j < p[row].size(); ++j) {
    if (static_cast<int>(j) != row) mass += p[row][j];
  }
  return mass;
}

ConfusionMatrix confusion_matrix(const HomodyneModel& model, int k_max) {
  if (!model.is_gaussian()) {
    throw std::invalid_argument("confusion matrix applies to the Gaussian readout only");
  }
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");

  std::vector<double> means(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) means[k] = model.pointer_mean(k);
  for (int k = 0; k < k_max; ++k) {
    if (!(means[k + 1] > means[k])) {
      throw DegenerateReadoutError(
          "pointer means are not strictly increasing in k; midpoint thresholds undefined");
    }
  }

  // Decision thresholds at midpoints of adjacent means.
  std::vector<double> thresholds(static_cast<std::size_t>(k_max));
  for (int k = 0; k < k_max; ++k) thresholds[k] = 0.5 * (means[k] + means[k + 1]);

  auto normal_cdf = [](double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); };

  ConfusionMatrix matrix;
  matrix.labels.resize(static_cast<std::size_t>(k_max) + 1);
  std::iota(matrix.labels.begin(), matrix.labels.end(), 0);
  matrix.p.assign(static_cast<std::size_t>(k_max) + 1,
                  std::vector<double>(static_cast<std::size_t>(k_max) + 1, 0.0));
  for (int k = 0; k <= k_max; ++k) {
    double below = 0.0;  // CDF at the previous threshold
    for (int j = 0; j <= k_max; ++j) {
      const double upper = j < k_max ? normal_cdf(thresholds[j] - means[k]) : 1.0;
      matrix.p[k][j] = upper - below;
      below = upper;
    }
  }
  return matrix;
}

MeasurementResult measure(const PointerJointState& state, const HomodyneModel& model) {
  const auto& taus = state.applied_tau();
  for (double tau_mode : taus) {
    if (tau_mode != taus.front()) {
      throw AmbiguousOutcomeLabelingError(
          "outcome labels by total photon number need equal tau on every mode");
    }
  }
  if (model.alpha != state.alpha()) {
    throw std::invalid_argument("readout model alpha does not match the evolved state");
  }
  if (model.tau != taus.front()) {
    throw std::invalid_argument("readout model tau does not match the applied interaction");
  }

  // Sector decomposition by total signal photon number.
  std::map<int, FockState> sectors;
  std::map<int, double> weights;
  for (const auto& [occ, term] : state.terms()) {
    const int k = std::accumulate(occ.begin(), occ.end(), 0);
    auto [it, inserted] = sectors.try_emplace(k, state.modes(), state.cutoff());
    it->second.add_term(occ, term.amp);
    weights[k] += std::norm(term.amp);
  }

  MeasurementResult result;
  for (auto& [k, sector] : sectors) {
    OutcomeRecord record;
    record.k = k;
    record.probability = weights.at(k);
    record.state = sector.normalized();
    result.outcomes.push_back(std::move(record));
  }

  if (model.is_gaussian()) {
    const int k_max = result.outcomes.back().k;
    result.confusion = confusion_matrix(model, k_max);
    const auto& p = result.confusion->p;
    // P(decide j) mixes the true sectors; conditional states of different k
    // are orthogonal, so the decided-j mixture's fidelity to the ideal
    // conditional state is just the posterior of the correct label.
    std::vector<double> ideal(static_cast<std::size_t>(k_max) + 1, 0.0);
    for (const auto& record : result.outcomes) ideal[record.k] = record.probability;
    for (auto& record : result.outcomes) {
      const int j = record.k;
      double decide = 0.0;
      for (int k = 0; k <= k_max; ++k) decide += p[k][j] * ideal[k];
      record.decide_probability = decide;
      record.label_fidelity = decide > 0.0 ? p[j][j] * ideal[j] / decide : 0.0;
    }
  }
  return result;
}

}  // namespace kerrgen
