#pragma once

// Pairwise photon-number entanglement witness |<b_i^+ b_j>|^2 > <N_i N_j>,
// the named target-state families it certifies, and fidelities to them.

#include <string>
#include <utility>
#include <vector>

#include "kerrgen/fock_state.hpp"

namespace kerrgen {

struct PairMoments {
  int i = 0;  // 0-based mode indices
  int j = 0;
  Amplitude cross;             // <b_i^+ b_j>
  double cross_abs_sq = 0.0;   // |<b_i^+ b_j>|^2
  double number_corr = 0.0;    // <N_i N_j>
  double margin = 0.0;         // cross_abs_sq - number_corr
  bool pass = false;           // strict inequality, no slack
};

struct WitnessReport {
  std::vector<PairMoments> pairs;

  bool all_pass() const;
  double min_margin() const;
};

// <b_i^+ b_j> and <N_i N_j> on a normalized state, via ladder operators and
// inner products (<psi| b_i^+ b_j |psi> = <b_i psi | b_j psi>).
PairMoments moments(const FockState& state, int i, int j);

WitnessReport witness(const FockState& state, const std::vector<std::pair<int, int>>& pairs);

// (0,1),(1,2),...,(M-2,M-1): the default pair set for M > 3.
std::vector<std::pair<int, int>> chain_pairs(int modes);
std::vector<std::pair<int, int>> all_pairs(int modes);

// Target families produced by the protocol.
//   kKPhoton: M-mode k-photon state, amplitude sqrt(k!/prod n_i!)/sqrt(M^k)
//             on every tuple with sum n_i = k.
//   kW:       equal superposition of all tuples with sum = photons and
//             n_i <= 1 (the 1- and 2-photon W states and their relatives).
//   kNoon:    (|k,0> + |0,k>)/sqrt(2) on two modes.
struct TargetSpec {
  enum class Family { kKPhoton, kW, kNoon };
  Family family = Family::kKPhoton;
  int modes = 2;
  int photons = 1;

  static TargetSpec k_photon(int modes, int photons) {
    return {Family::kKPhoton, modes, photons};
  }
  static TargetSpec w_state(int modes, int photons = 1) {
    return {Family::kW, modes, photons};
  }
  static TargetSpec noon(int photons) { return {Family::kNoon, 2, photons}; }
};

FockState build_target(const TargetSpec& target);

// Stable name used in reports, e.g. "3-mode-k2", "w-3-mode-1-photon", "noon-2".
std::string target_name(const TargetSpec& target);

// |<target|state>|^2; phase-insensitive.
double fidelity(const FockState& state, const FockState& target);

// Exact multinomial coefficient k!/(prod n_i!) as a double (exact for the
// desk-scale k used here).
double multinomial_weight(const OccupationTuple& occupation);

// All occupation tuples of length `modes` summing to `photons`, in
// lexicographic order.
std::vector<OccupationTuple> tuples_with_total(int modes, int photons);

}  // namespace kerrgen
