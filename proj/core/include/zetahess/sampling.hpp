#pragma once

// Reproducible random test inputs: integer entries in [-5, 5], non-zero
// covectors by rejection.

#include <cstdint>
#include <initializer_list>
#include <random>

#include "zetahess/exactalg.hpp"

namespace zetahess {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// ZETAHESS_SEED from the environment if set and numeric, else kDefaultSeed.
std::uint64_t default_seed();

/// Mixes a base seed with case coordinates (splitmix64 chain), so each
/// case draws from its own stream regardless of evaluation order.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts);

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi]; the mapping is fixed so streams are portable.
  long integer(long lo, long hi);
  /// Symmetric with entries in [-5, 5]; off-diagonal zero if diagonal.
  PerturbH perturbation(int n, bool diagonal = false);
  /// Entries in [-5, 5], redrawn until non-zero.
  Covector covector(int n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace zetahess
