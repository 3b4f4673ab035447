#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

#include "zetahess/formcombi.hpp"

namespace zetahess {

std::int64_t binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  k = std::min(k, m - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

// ---------------------------------------------------------------- FormIndex

FormIndex::FormIndex(int n, std::uint32_t bits) : n_(n), bits_(bits) {
  if (n < 0 || n > kMaxDimension) throw ParameterOutOfRange("dimension must lie in [0, 20]");
  if (n < 32 && (bits >> n) != 0) throw ParameterOutOfRange("form index has members outside [0, n)");
}

FormIndex FormIndex::of(int n, std::initializer_list<int> members) {
  return of(n, std::vector<int>(members));
}

FormIndex FormIndex::of(int n, const std::vector<int>& members) {
  std::uint32_t bits = 0;
  for (int m : members) {
    if (m < 0 || m >= n) throw ParameterOutOfRange("form index member out of range");
    if ((bits >> m) & 1U) throw std::invalid_argument("form index members must be distinct");
    bits |= 1U << m;
  }
  return FormIndex(n, bits);
}

int FormIndex::degree() const { return std::popcount(bits_); }

std::vector<int> FormIndex::members() const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (contains(j)) out.push_back(j);
  return out;
}

FormIndex FormIndex::complement() const {
  const std::uint32_t all = n_ == 32 ? ~0U : ((1U << n_) - 1U);
  return FormIndex(n_, all & ~bits_);
}

FormIndex FormIndex::with(int j) const {
  if (j < 0 || j >= n_) throw ParameterOutOfRange("form index member out of range");
  return FormIndex(n_, bits_ | (1U << j));
}

FormIndex FormIndex::without(int j) const {
  if (j < 0 || j >= n_) throw ParameterOutOfRange("form index member out of range");
  return FormIndex(n_, bits_ & ~(1U << j));
}

std::strong_ordering operator<=>(const FormIndex& a, const FormIndex& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const std::uint32_t diff = a.bits_ ^ b.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  // The smallest differing element decides: whoever holds it sorts first.
  const std::uint32_t lowest = diff & (~diff + 1U);
  return (a.bits_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string FormIndex::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int m : members()) {
    os << (first ? "" : ",") << m;
    first = false;
  }
  os << '}';
  return os.str();
}

std::vector<FormIndex> enumerate_forms(int n, int p) {
  if (n < 0 || n > kMaxDimension) throw ParameterOutOfRange("dimension must lie in [0, 20]");
  std::vector<FormIndex> out;
  if (p < 0 || p > n) return out;
  out.reserve(static_cast<std::size_t>(binomial(n, p)));
  std::vector<int> idx(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(FormIndex::of(n, idx));
    int i = p - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - p + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < p; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

int chi(const FormIndex& form, int j) {
  if (j < 0 || j >= form.dimension()) throw ParameterOutOfRange("chi: index out of range");
  return form.contains(j) ? 1 : 0;
}

int sgn(const FormIndex& form, int j) {
  if (j < 0 || j >= form.dimension()) throw ParameterOutOfRange("sgn: index out of range");
  return form.contains(j) ? 1 : -1;
}

int crossing_count(int i, const FormIndex& form) {
  if (i <= 0) return 0;
  const std::uint32_t below = i >= 32 ? form.bits() : (form.bits() & ((1U << i) - 1U));
  return std::popcount(below);
}

// ---------------------------------------------------------------- patterns

FactorPattern::FactorPattern(std::vector<FactorKind> factors) : factors_(std::move(factors)) {
  if (factors_.size() > 4) throw std::invalid_argument("factor patterns have at most four factors");
}

FactorPattern FactorPattern::repeated(FactorKind kind, int count) {
  return FactorPattern(std::vector<FactorKind>(static_cast<std::size_t>(count), kind));
}

std::string FactorPattern::to_string() const {
  std::string s;
  for (auto k : factors_) {
    if (!s.empty()) s += '*';
    switch (k) {
      case FactorKind::Chi: s += "chi"; break;
      case FactorKind::ChiComplement: s += "chi'"; break;
      case FactorKind::Sgn: s += "sgn"; break;
    }
  }
  return s.empty() ? "1" : s;
}

int pattern_value(const FactorPattern& pattern, const FormIndex& form, const std::vector<int>& fixed) {
  int v = 1;
  for (std::size_t m = 0; m < pattern.size(); ++m) {
    const bool in = form.contains(fixed[m]);
    switch (pattern.factors()[m]) {
      case FactorKind::Chi: v *= in ? 1 : 0; break;
      case FactorKind::ChiComplement: v *= in ? 0 : 1; break;
      case FactorKind::Sgn: v *= in ? 1 : -1; break;
    }
    if (v == 0) return 0;
  }
  return v;
}

namespace {

// Net effect of all factors attached to one index, as a function of
// membership: (value if member, value if not member).
struct IndexFactor {
  int if_in = 1;
  int if_out = 1;
};

Rational free_term_counts(int n, int p, int n_chi, int n_comp, int n_sgn) {
  // Each sgn = chi - chi'.  Choosing t of the sgn factors to be chi gives
  // C(n_sgn, t) terms of sign (-1)^(n_sgn - t), each counting subsets that
  // contain n_chi + t given indices and avoid n_comp + n_sgn - t others.
  const int fixed = n_chi + n_comp + n_sgn;
  std::int64_t total = 0;
  for (int t = 0; t <= n_sgn; ++t) {
    const std::int64_t sign = ((n_sgn - t) % 2 == 0) ? 1 : -1;
    total += sign * binomial(n_sgn, t) * binomial(n - fixed, p - n_chi - t);
  }
  return Rational(static_cast<long>(total));
}

}  // namespace

Rational free_term(int n, int p, const FactorPattern& pattern) {
  if (n < static_cast<int>(pattern.size()))
    throw ParameterOutOfRange("free term needs n >= number of distinct fixed indices");
  int n_chi = 0, n_comp = 0, n_sgn = 0;
  for (auto k : pattern.factors()) {
    if (k == FactorKind::Chi) ++n_chi;
    if (k == FactorKind::ChiComplement) ++n_comp;
    if (k == FactorKind::Sgn) ++n_sgn;
  }
  return free_term_counts(n, p, n_chi, n_comp, n_sgn);
}

Rational chi_chicomp_closed(int n, int p, int i, int j) {
  return i == j ? Rational(0) : Rational(static_cast<long>(binomial(n - 2, p - 1)));
}

Rational sgn_sgn_closed(int n, int p, int j, int k) {
  const std::int64_t b = binomial(n - 2, p - 1);
  return Rational(static_cast<long>(binomial(n, p) - 4 * b + (j == k ? 4 * b : 0)));
}

Rational sgn4_free_term_closed(int n, int p) {
  return Rational(static_cast<long>(16 * binomial(n - 4, p - 2) - 8 * binomial(n - 2, p - 1) + binomial(n, p)));
}

IdentitySum identity_sum(int n, int p, const FactorPattern& pattern, const std::vector<int>& fixed) {
  if (fixed.size() != pattern.size()) throw std::invalid_argument("pattern length must equal number of fixed indices");
  for (int j : fixed)
    if (j < 0 || j >= n) throw ParameterOutOfRange("fixed index out of range");

  IdentitySum out;
  std::int64_t brute = 0;
  for (const auto& form : enumerate_forms(n, p)) brute += pattern_value(pattern, form, fixed);
  out.brute = Rational(static_cast<long>(brute));

  const auto& f = pattern.factors();
  using K = FactorKind;
  if (f.size() == 2 && f[0] == K::Chi && f[1] == K::ChiComplement) {
    out.closed = chi_chicomp_closed(n, p, fixed[0], fixed[1]);
    out.printed_formula = true;
    return out;
  }
  if (f.size() == 2 && f[0] == K::Sgn && f[1] == K::Sgn) {
    out.closed = sgn_sgn_closed(n, p, fixed[0], fixed[1]);
    out.printed_formula = true;
    return out;
  }
  const bool distinct = [&] {
    std::vector<int> s = fixed;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
  }();
  if (f.size() == 4 && distinct && std::all_of(f.begin(), f.end(), [](K k) { return k == K::Sgn; })) {
    out.closed = sgn4_free_term_closed(n, p);
    out.printed_formula = true;
    return out;
  }

  // Merge the factors attached to each distinct index into one net factor.
  std::map<int, IndexFactor> merged;
  for (std::size_t m = 0; m < f.size(); ++m) {
    IndexFactor& x = merged[fixed[m]];
    switch (f[m]) {
      case K::Chi: x.if_out = 0; break;
      case K::ChiComplement: x.if_in = 0; break;
      case K::Sgn: x.if_out = -x.if_out; break;
    }
  }
  // Possible net factors: 1, chi, chi', -chi', sgn, or 0.
  int n_chi = 0, n_comp = 0, n_sgn = 0, sign = 1;
  for (const auto& [index, x] : merged) {
    if (x.if_in == 0 && x.if_out == 0) {
      out.closed = 0;
      return out;
    }
    if (x.if_in == 1 && x.if_out == 1) continue;
    if (x.if_in == 0) {
      ++n_comp;
      if (x.if_out < 0) sign = -sign;
    } else if (x.if_out == 0) {
      ++n_chi;
    } else {
      ++n_sgn;
    }
  }
  out.closed = sign * free_term_counts(n, p, n_chi, n_comp, n_sgn);
  return out;
}

}  // namespace zetahess
