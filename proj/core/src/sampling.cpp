#include <cstdlib>
#include <string>

#include "zetahess/sampling.hpp"

namespace zetahess {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ZETAHESS_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultSeed;
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) {
  std::uint64_t s = splitmix(base);
  for (auto p : parts) s = splitmix(s ^ p);
  return s;
}

long Sampler::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(engine_() % span);
}

PerturbH Sampler::perturbation(int n, bool diagonal) {
  PerturbH h = PerturbH::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (i == j || !diagonal) h.set(i, j, integer(-5, 5));
  return h;
}

Covector Sampler::covector(int n) {
  while (true) {
    std::vector<Rational> c(static_cast<std::size_t>(n));
    bool nonzero = false;
    for (auto& x : c) {
      x = integer(-5, 5);
      nonzero = nonzero || x != 0;
    }
    if (nonzero) return Covector(std::move(c));
  }
}

}  // namespace zetahess
