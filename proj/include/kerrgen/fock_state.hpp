#pragma once

// Sparse multimode photon-number states and their algebra: coherent-state
// expansions, tensor products, inner products and ladder operators.

#include <complex>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "kerrgen/errors.hpp"

namespace kerrgen {

using Amplitude = std::complex<double>;
using OccupationTuple = std::vector<int>;

// Hard per-mode photon cap; far beyond the bright-probe regime where the
// pointer-label engine takes over, and cheap to store.
inline constexpr int kMaxPhotonsPerMode = 64;
inline constexpr double kNormTolerance = 1e-12;

// Normalized superposition over occupation-number tuples, kept as a sparse
// map so conditional states with O(k^2) terms stay O(k^2) in memory.
// Immutable in spirit: operations return new states; the only mutators are
// the builders add_term / normalized used during construction.
class FockState {
 public:
  // Zero vector on one mode; useful as a placeholder in result structs.
  FockState() : FockState(1, 0) {}
  FockState(int modes, int cutoff);

  // Single basis ket |n1,...,nM> with amplitude 1.
  static FockState basis(OccupationTuple occupation, int cutoff);

  int modes() const { return modes_; }
  int cutoff() const { return cutoff_; }
  const std::map<OccupationTuple, Amplitude>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Accumulates into an existing term; exact zeros are not stored.
  void add_term(const OccupationTuple& occupation, Amplitude amp);

  // Amplitude of a tuple, zero if absent.
  Amplitude amplitude(const OccupationTuple& occupation) const;

  double norm_sq() const;

  // Returns a copy scaled to unit norm. Throws on the zero vector.
  FockState normalized() const;

  // Drops terms with |amplitude| < threshold (threshold 0 keeps everything).
  FockState pruned(double threshold) const;

  bool is_zero() const { return terms_.empty(); }

 private:
  int modes_;
  int cutoff_;
  std::map<OccupationTuple, Amplitude> terms_;
};

// Truncation rules for expanding a coherent amplitude over Fock states.
struct WeakTwoTerm {};
struct PoissonCutoff {
  // Explicit cap, or unset to auto-pick the smallest cap meeting tail_tol.
  std::optional<int> max_photons{};
  double tail_tol = 1e-12;
};

struct CoherentSpec {
  Amplitude amplitude;
  std::variant<WeakTwoTerm, PoissonCutoff> truncation = PoissonCutoff{};

  static CoherentSpec weak(Amplitude beta) { return {beta, WeakTwoTerm{}}; }
  static CoherentSpec poisson(Amplitude beta, double tail_tol = 1e-12) {
    return {beta, PoissonCutoff{std::nullopt, tail_tol}};
  }
};

// Single-mode Fock expansion of a coherent amplitude, renormalized after
// truncation. WeakTwoTerm gives (|0> + beta|1>)/sqrt(1+|beta|^2); PoissonCutoff
// keeps e^{-|beta|^2/2} beta^n/sqrt(n!) up to the chosen cap.
// Throws CutoffTooSmallError if no cap within limits meets the tail tolerance.
FockState expand_coherent(const CoherentSpec& spec);

// Unrenormalized Poisson Fock amplitudes e^{-|beta|^2/2} beta^n / sqrt(n!)
// for n = 0..n_max. Shared by the coherent expansion and the dense probe.
std::vector<Amplitude> coherent_fock_amplitudes(Amplitude beta, int n_max);

// Smallest n_max whose discarded Poisson mass is <= tail_tol, or nullopt if
// none exists within hard_limit.
std::optional<int> poisson_auto_cutoff(Amplitude beta, double tail_tol,
                                       int hard_limit = kMaxPhotonsPerMode);

// Tuple-concatenating product state; amplitudes multiply.
FockState tensor(const FockState& a, const FockState& b);

// <a|b>, conjugate-linear in the first argument. Throws on mode mismatch.
Amplitude inner_product(const FockState& a, const FockState& b);

enum class Ladder { kLower, kRaise, kNumber };

// Standard ladder action on one mode; the result is NOT renormalized and may
// be the zero vector. Raising past the cutoff throws CutoffOverflowError.
FockState apply_ladder(const FockState& state, int mode, Ladder kind);

}  // namespace kerrgen
