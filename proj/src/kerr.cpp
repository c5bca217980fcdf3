#include "kerrgen/kerr.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace kerrgen {

PointerJointState::PointerJointState(int modes, Amplitude alpha, int cutoff)
    : modes_(modes), cutoff_(cutoff), alpha_(alpha), applied_tau_(modes, 0.0) {
  if (modes < 1) throw std::invalid_argument("mode count must be >= 1");
}

double PointerJointState::norm_sq() const {
  double total = 0.0;
  for (const auto& [occ, term] : terms_) total += std::norm(term.amp);
  return total;
}

Amplitude PointerJointState::pointer_label(double phase) const {
  return alpha_ * std::polar(1.0, -phase);
}

PointerJointState lift(const FockState& signal, Amplitude alpha) {
  PointerJointState out(signal.modes(), alpha, signal.cutoff());
  for (const auto& [occ, amp] : signal.terms()) {
    out.terms_.emplace(occ, PointerJointState::Term{0.0, amp});
  }
  return out;
}

PointerJointState apply_kerr(const PointerJointState& state, const KerrInteraction& interaction) {
  if (interaction.signal_mode < 0 || interaction.signal_mode >= state.modes()) {
    throw std::out_of_range("signal mode index out of range");
  }
  if (!std::isfinite(interaction.tau)) throw std::invalid_argument("tau must be finite");
  PointerJointState out = state;
  for (auto& [occ, term] : out.terms_) {
    term.phase += occ[interaction.signal_mode] * interaction.tau;
  }
  out.applied_tau_[interaction.signal_mode] += interaction.tau;
  return out;
}

PointerJointState run_sequence(const FockState& signal, Amplitude alpha,
                               std::span<const double> taus) {
  if (static_cast<int>(taus.size()) != signal.modes()) {
    throw std::invalid_argument("need one tau per signal mode");
  }
  PointerJointState state = lift(signal, alpha);
  for (int mode = 0; mode < signal.modes(); ++mode) {
    state = apply_kerr(state, KerrInteraction{taus[mode], mode});
  }
  return state;
}

FockState dense_oracle(const FockState& signal, Amplitude alpha, std::span<const double> taus,
                       int probe_cutoff) {
  if (static_cast<int>(taus.size()) != signal.modes()) {
    throw std::invalid_argument("need one tau per signal mode");
  }
  if (probe_cutoff < 0 || probe_cutoff > kMaxPhotonsPerMode) {
    throw std::invalid_argument("probe cutoff outside hard limit");
  }
  const auto needed = poisson_auto_cutoff(alpha, 1e-12, probe_cutoff);
  if (!needed) {
    std::ostringstream msg;
    msg << "probe cutoff " << probe_cutoff << " leaves Poisson tail > 1e-12 for |alpha|^2 = "
        << std::norm(alpha);
    throw CutoffTooSmallError(msg.str());
  }

  const auto probe_amps = coherent_fock_amplitudes(alpha, probe_cutoff);
  FockState joint(signal.modes() + 1, std::max(signal.cutoff(), probe_cutoff));
  for (const auto& [occ, amp] : signal.terms()) {
    double shift = 0.0;
    for (int mode = 0; mode < signal.modes(); ++mode) shift += occ[mode] * taus[mode];
    OccupationTuple joined = occ;
    joined.push_back(0);
    for (int n_probe = 0; n_probe <= probe_cutoff; ++n_probe) {
      joined.back() = n_probe;
      const Amplitude rotation = std::polar(1.0, -n_probe * shift);
      joint.add_term(joined, amp * probe_amps[n_probe] * rotation);
    }
  }
  return joint.normalized();
}

std::vector<DenseOutcome> dense_outcomes(const FockState& joint, int signal_modes,
                                         Amplitude alpha, double tau) {
  if (joint.modes() != signal_modes + 1) {
    throw std::invalid_argument("joint state must have one probe mode after the signal modes");
  }
  const int probe_cutoff = joint.cutoff();

  // Unnormalized probe vectors and signal sectors, keyed by total photon k.
  std::map<int, std::map<OccupationTuple, std::vector<Amplitude>>> sectors;
  std::map<int, double> sector_norms;
  for (const auto& [occ, amp] : joint.terms()) {
    const int k = std::accumulate(occ.begin(), occ.end() - 1, 0);
    OccupationTuple sig(occ.begin(), occ.end() - 1);
    auto& probe_vec = sectors[k][sig];
    if (probe_vec.empty()) probe_vec.assign(static_cast<std::size_t>(probe_cutoff) + 1, {});
    probe_vec[occ.back()] += amp;
    sector_norms[k] += std::norm(amp);
  }

  std::vector<DenseOutcome> outcomes;
  for (const auto& [k, signal_terms] : sectors) {
    // Truncated, renormalized analytic label |alpha e^{-i k tau}>.
    auto label = coherent_fock_amplitudes(alpha * std::polar(1.0, -k * tau), probe_cutoff);
    double label_norm_sq = 0.0;
    for (const auto& c : label) label_norm_sq += std::norm(c);
    const double label_inv = 1.0 / std::sqrt(label_norm_sq);

    DenseOutcome outcome;
    outcome.k = k;
    outcome.probability = sector_norms.at(k);
    FockState conditional(signal_modes, joint.cutoff());
    double contracted_norm_sq = 0.0;
    for (const auto& [sig, probe_vec] : signal_terms) {
      Amplitude contracted{0.0, 0.0};
      for (int n = 0; n <= probe_cutoff; ++n) {
        contracted += std::conj(label[n] * label_inv) * probe_vec[n];
      }
      contracted_norm_sq += std::norm(contracted);
      conditional.add_term(sig, contracted);
    }
    outcome.conditional = conditional.normalized();
    outcome.probe_label_fidelity = contracted_norm_sq / sector_norms.at(k);
    outcomes.push_back(std::move(outcome));
  }
  return outcomes;
}

}  // namespace kerrgen
