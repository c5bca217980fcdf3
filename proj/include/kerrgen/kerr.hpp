#pragma once

// Cross-Kerr evolution of signal modes against a bright coherent probe.
//
// The probe is carried as an analytic coherent label alpha * e^{-i*phase}:
// coherent states are closed under the interaction, so no probe truncation is
// ever needed, and the bright-probe regime (|alpha| >> any feasible Fock
// cutoff) stays exact. A dense truncated-Fock oracle validates the label
// bookkeeping at small |alpha|.

#include <span>
#include <vector>

#include "kerrgen/fock_state.hpp"

namespace kerrgen {

// One signal mode coupled to the probe for a scaled interaction time tau
// (the per-photon nonlinear phase shift).
struct KerrInteraction {
  double tau = 0.0;
  int signal_mode = 0;

  // tau = coupling * time for a medium traversed in `time` seconds.
  static KerrInteraction from_physical(double coupling, double time, int signal_mode) {
    return {coupling * time, signal_mode};
  }
};

// Joint state of the signal modes and the probe. Each occupation tuple
// carries the probe phase it has imprinted so far, stored as the running sum
// of n_i * tau_i (never reduced mod 2pi).
class PointerJointState {
 public:
  struct Term {
    double phase = 0.0;
    Amplitude amp;
  };

  PointerJointState(int modes, Amplitude alpha, int cutoff);

  int modes() const { return modes_; }
  int cutoff() const { return cutoff_; }
  Amplitude alpha() const { return alpha_; }
  const std::map<OccupationTuple, Term>& terms() const { return terms_; }
  // Total tau applied so far, per signal mode.
  const std::vector<double>& applied_tau() const { return applied_tau_; }

  double norm_sq() const;

  // Probe coherent label alpha * e^{-i*phase} for a given accumulated phase.
  Amplitude pointer_label(double phase) const;

  friend PointerJointState lift(const FockState& signal, Amplitude alpha);
  friend PointerJointState apply_kerr(const PointerJointState& state,
                                      const KerrInteraction& interaction);

 private:
  int modes_;
  int cutoff_;
  Amplitude alpha_;
  std::vector<double> applied_tau_;
  std::map<OccupationTuple, Term> terms_;
};

// Attaches the probe |alpha> with zero accumulated phase.
PointerJointState lift(const FockState& signal, Amplitude alpha);

// |n>|alpha e^{-i phi}>  ->  |n>|alpha e^{-i(phi + n tau)}>: phases advance by
// n_signal_mode * tau, amplitudes and norm unchanged.
PointerJointState apply_kerr(const PointerJointState& state, const KerrInteraction& interaction);

// Probe interacting with every signal mode in turn; taus has one entry per
// mode. With equal taus the tuple (n_1..n_M) ends at phase (sum n_i) * tau.
PointerJointState run_sequence(const FockState& signal, Amplitude alpha,
                               std::span<const double> taus);

// Validation oracle: the same evolution with the probe expanded over a
// truncated Fock basis and the diagonal unitary exp(-i n_probe sum n_i tau_i)
// applied term by term. Returns an (M+1)-mode state, probe last. Requires the
// probe Poisson tail beyond probe_cutoff to be <= 1e-12.
FockState dense_oracle(const FockState& signal, Amplitude alpha, std::span<const double> taus,
                       int probe_cutoff);

// Outcome view of a dense_oracle state, grouped by total signal photon
// number. probe_label_fidelity is the overlap of the sector's probe factor
// with the truncated analytic label |alpha e^{-i k tau}> and should be 1 up
// to truncation error when the label bookkeeping is right.
struct DenseOutcome {
  int k = 0;
  double probability = 0.0;
  FockState conditional;
  double probe_label_fidelity = 0.0;
};

std::vector<DenseOutcome> dense_outcomes(const FockState& joint, int signal_modes,
                                         Amplitude alpha, double tau);

}  // namespace kerrgen
