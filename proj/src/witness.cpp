#include "kerrgen/witness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kerrgen {

bool WitnessReport::all_pass() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairMoments& pm) { return pm.pass; });
}

double WitnessReport::min_margin() const {
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& pm : pairs) margin = std::min(margin, pm.margin);
  return margin;
}

PairMoments moments(const FockState& state, int i, int j) {
  if (i == j) throw std::invalid_argument("moments need two distinct modes");
  if (i < 0 || j < 0 || i >= state.modes() || j >= state.modes()) {
    throw std::out_of_range("mode index out of range");
  }
  PairMoments pm;
  pm.i = i;
  pm.j = j;
  pm.cross = inner_product(apply_ladder(state, i, Ladder::kLower),
                           apply_ladder(state, j, Ladder::kLower));
  pm.cross_abs_sq = std::norm(pm.cross);
  double corr = 0.0;
  for (const auto& [occ, amp] : state.terms()) {
    corr += static_cast<double>(occ[i]) * static_cast<double>(occ[j]) * std::norm(amp);
  }
  pm.number_corr = corr;
  pm.margin = pm.cross_abs_sq - pm.number_corr;
  pm.pass = pm.cross_abs_sq > pm.number_corr;
  return pm;
}

WitnessReport witness(const FockState& state, const std::vector<std::pair<int, int>>& pairs) {
  WitnessReport report;
  report.pairs.reserve(pairs.size());
  for (const auto& [i, j] : pairs) report.pairs.push_back(moments(state, i, j));
  return report;
}

std::vector<std::pair<int, int>> chain_pairs(int modes) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < modes; ++i) pairs.emplace_back(i, i + 1);
  return pairs;
}

std::vector<std::pair<int, int>> all_pairs(int modes) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < modes; ++i) {
    for (int j = i + 1; j < modes; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

double multinomial_weight(const OccupationTuple& occupation) {
  // Chained binomials keep intermediate values small: k!/(prod n_i!) =
  // prod C(partial_sum_i, n_i).
  double weight = 1.0;
  int placed = 0;
  for (int n : occupation) {
    for (int step = 1; step <= n; ++step) {
      weight *= static_cast<double>(placed + step) / static_cast<double>(step);
    }
    placed += n;
  }
  return weight;
}

std::vector<OccupationTuple> tuples_with_total(int modes, int photons) {
  std::vector<OccupationTuple> result;
  OccupationTuple current(modes, 0);
  // Depth-first distribution of `photons` over `modes` slots.
  auto recurse = [&](auto&& self, int mode, int remaining) -> void {
    if (mode == modes - 1) {
      current[mode] = remaining;
      result.push_back(current);
      return;
    }
    for (int n = 0; n <= remaining; ++n) {
      current[mode] = n;
      self(self, mode + 1, remaining - n);
    }
  };
  recurse(recurse, 0, photons);
  return result;
}

FockState build_target(const TargetSpec& target) {
  if (target.modes < 1) throw std::invalid_argument("target needs at least one mode");
  if (target.photons < 0) throw std::invalid_argument("photon number must be >= 0");
  if (target.photons > kMaxPhotonsPerMode) {
    throw std::invalid_argument("photon number above the per-mode hard limit");
  }

  switch (target.family) {
    case TargetSpec::Family::kKPhoton: {
      const int cutoff = std::max(target.photons, 1);
      FockState state(target.modes, cutoff);
      const double scale = std::pow(static_cast<double>(target.modes), -0.5 * target.photons);
      for (const auto& occ : tuples_with_total(target.modes, target.photons)) {
        state.add_term(occ, Amplitude{std::sqrt(multinomial_weight(occ)) * scale, 0.0});
      }
      return state;
    }
    case TargetSpec::Family::kW: {
      if (target.photons > target.modes) {
        throw std::invalid_argument("W-type state needs photons <= modes");
      }
      FockState state(target.modes, 1);
      for (const auto& occ : tuples_with_total(target.modes, target.photons)) {
        if (std::all_of(occ.begin(), occ.end(), [](int n) { return n <= 1; })) {
          state.add_term(occ, Amplitude{1.0, 0.0});
        }
      }
      return state.normalized();
    }
    case TargetSpec::Family::kNoon: {
      if (target.modes != 2) throw std::invalid_argument("NOON states are two-mode");
      FockState state(2, std::max(target.photons, 1));
      if (target.photons == 0) {
        state.add_term({0, 0}, Amplitude{1.0, 0.0});
        return state;
      }
      const double amp = 1.0 / std::numbers::sqrt2;
      state.add_term({target.photons, 0}, Amplitude{amp, 0.0});
      state.add_term({0, target.photons}, Amplitude{amp, 0.0});
      return state;
    }
  }
  throw std::logic_error("unknown target family");
}

std::string target_name(const TargetSpec& target) {
  std::ostringstream name;
  switch (target.family) {
    case TargetSpec::Family::kKPhoton:
      name << target.modes << "-mode-k" << target.photons;
      break;
    case TargetSpec::Family::kW:
      name << "w-" << target.modes << "-mode-" << target.photons << "-photon";
      break;
    case TargetSpec::Family::kNoon:
      name << "noon-" << target.photons;
      break;
  }
  return name.str();
}

double fidelity(const FockState& state, const FockState& target) {
  return std::norm(inner_product(target, state));
}

}  // namespace kerrgen
