#include "kerrgen/fock_state.hpp"

#include <cmath>
#include <sstream>

namespace kerrgen {

namespace {

void check_finite(Amplitude amp) {
  if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag())) {
    throw std::invalid_argument("non-finite amplitude");
  }
}

}  // namespace

FockState::FockState(int modes, int cutoff) : modes_(modes), cutoff_(cutoff) {
  if (modes < 1) throw std::invalid_argument("mode count must be >= 1");
  if (cutoff < 0 || cutoff > kMaxPhotonsPerMode) {
    std::ostringstream msg;
    msg << "cutoff " << cutoff << " outside [0, " << kMaxPhotonsPerMode << "]";
    throw std::invalid_argument(msg.str());
  }
}

FockState FockState::basis(OccupationTuple occupation, int cutoff) {
  FockState state(static_cast<int>(occupation.size()), cutoff);
  state.add_term(occupation, Amplitude{1.0, 0.0});
  return state;
}

void FockState::add_term(const OccupationTuple& occupation, Amplitude amp) {
  if (static_cast<int>(occupation.size()) != modes_) {
    throw std::invalid_argument("occupation tuple length does not match mode count");
  }
  for (int n : occupation) {
    if (n < 0 || n > cutoff_) {
      std::ostringstream msg;
      msg << "occupation " << n << " outside [0, " << cutoff_ << "]";
      throw std::out_of_range(msg.str());
    }
  }
  check_finite(amp);
  auto it = terms_.find(occupation);
  if (it == terms_.end()) {
    if (amp != Amplitude{0.0, 0.0}) terms_.emplace(occupation, amp);
    return;
  }
  it->second += amp;
  if (it->second == Amplitude{0.0, 0.0}) terms_.erase(it);
}

Amplitude FockState::amplitude(const OccupationTuple& occupation) const {
  auto it = terms_.find(occupation);
  return it == terms_.end() ? Amplitude{0.0, 0.0} : it->second;
}

double FockState::norm_sq() const {
  double total = 0.0;
  for (const auto& [occ, amp] : terms_) total += std::norm(amp);
  return total;
}

FockState FockState::normalized() const {
  const double n2 = norm_sq();
  if (n2 <= 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  const double inv = 1.0 / std::sqrt(n2);
  FockState out(modes_, cutoff_);
  for (const auto& [occ, amp] : terms_) out.terms_.emplace(occ, amp * inv);
  return out;
}

FockState FockState::pruned(double threshold) const {
  FockState out(modes_, cutoff_);
  for (const auto& [occ, amp] : terms_) {
    if (std::abs(amp) >= threshold) out.terms_.emplace(occ, amp);
  }
  return out;
}

std::vector<Amplitude> coherent_fock_amplitudes(Amplitude beta, int n_max) {
  std::vector<Amplitude> amps(static_cast<std::size_t>(n_max) + 1);
  amps[0] = Amplitude{std::exp(-0.5 * std::norm(beta)), 0.0};
  for (int n = 1; n <= n_max; ++n) {
    amps[n] = amps[n - 1] * beta / std::sqrt(static_cast<double>(n));
  }
  return amps;
}

std::optional<int> poisson_auto_cutoff(Amplitude beta, double tail_tol, int hard_limit) {
  const double mean = std::norm(beta);
  double weight = std::exp(-mean);  // Poisson P(0)
  double kept = weight;
  if (1.0 - kept <= tail_tol) return 0;
  for (int n = 1; n <= hard_limit; ++n) {
    weight *= mean / n;
    kept += weight;
    if (1.0 - kept <= tail_tol) return n;
  }
  return std::nullopt;
}

FockState expand_coherent(const CoherentSpec& spec) {
  check_finite(spec.amplitude);
  const Amplitude beta = spec.amplitude;

  if (std::holds_alternative<WeakTwoTerm>(spec.truncation)) {
    FockState state(1, 1);
    const double norm = 1.0 / std::sqrt(1.0 + std::norm(beta));
    state.add_term({0}, Amplitude{norm, 0.0});
    state.add_term({1}, beta * norm);
    // beta = 0 leaves only the vacuum term; still unit norm.
    return state;
  }

  const auto& cut = std::get<PoissonCutoff>(spec.truncation);
  if (cut.tail_tol <= 0.0) throw std::invalid_argument("tail_tol must be > 0");
  const int hard_limit = cut.max_photons.value_or(kMaxPhotonsPerMode);
  if (hard_limit < 0 || hard_limit > kMaxPhotonsPerMode) {
    throw std::invalid_argument("max_photons outside hard limit");
  }
  const auto n_max = poisson_auto_cutoff(beta, cut.tail_tol, hard_limit);
  if (!n_max) {
    std::ostringstream msg;
    msg << "no cutoff <= " << hard_limit << " reaches Poisson tail " << cut.tail_tol
        << " for |beta|^2 = " << std::norm(beta);
    throw CutoffTooSmallError(msg.str());
  }
  FockState state(1, std::max(*n_max, 1));
  const auto amps = coherent_fock_amplitudes(beta, *n_max);
  for (int n = 0; n <= *n_max; ++n) state.add_term({n}, amps[n]);
  return state.normalized();
}

FockState tensor(const FockState& a, const FockState& b) {
  FockState out(a.modes() + b.modes(), std::max(a.cutoff(), b.cutoff()));
  for (const auto& [occ_a, amp_a] : a.terms()) {
    for (const auto& [occ_b, amp_b] : b.terms()) {
      OccupationTuple joined = occ_a;
      joined.insert(joined.end(), occ_b.begin(), occ_b.end());
      out.add_term(joined, amp_a * amp_b);
    }
  }
  return out;
}

Amplitude inner_product(const FockState& a, const FockState& b) {
  if (a.modes() != b.modes()) {
    throw std::invalid_argument("inner product requires equal mode counts");
  }
  // Walk the smaller map.
  const FockState& lead = a.term_count() <= b.term_count() ? a : b;
  const FockState& other = a.term_count() <= b.term_count() ? b : a;
  Amplitude result{0.0, 0.0};
  for (const auto& [occ, amp] : lead.terms()) {
    const Amplitude partner = other.amplitude(occ);
    if (&lead == &a) {
      result += std::conj(amp) * partner;
    } else {
      result += std::conj(partner) * amp;
    }
  }
  return result;
}

FockState apply_ladder(const FockState& state, int mode, Ladder kind) {
  if (mode < 0 || mode >= state.modes()) throw std::out_of_range("mode index out of range");
  FockState out(state.modes(), state.cutoff());
  for (const auto& [occ, amp] : state.terms()) {
    const int n = occ[mode];
    switch (kind) {
      case Ladder::kLower: {
        if (n == 0) break;  // annihilates the term
        OccupationTuple shifted = occ;
        shifted[mode] = n - 1;
        out.add_term(shifted, amp * std::sqrt(static_cast<double>(n)));
        break;
      }
      case Ladder::kRaise: {
        if (n + 1 > state.cutoff()) {
          throw CutoffOverflowError("raise would exceed the Fock cutoff");
        }
        OccupationTuple shifted = occ;
        shifted[mode] = n + 1;
        out.add_term(shifted, amp * std::sqrt(static_cast<double>(n + 1)));
        break;
      }
      case Ladder::kNumber: {
        if (n == 0) break;
        out.add_term(occ, amp * static_cast<double>(n));
        break;
      }
    }
  }
  return out;
}

}  // namespace kerrgen
