#include <algorithm>
#include <sstream>
#include <utility>

#include "zetahess/exactalg.hpp"

namespace zetahess {

namespace {

void require_same_dimension(const PerturbH& h, const Covector& xi) {
  if (h.dimension() != xi.dimension())
    throw DimensionMismatch("perturbation has dimension " + std::to_string(h.dimension()) +
                            " but covector has dimension " + std::to_string(xi.dimension()));
}

}  // namespace

// ---------------------------------------------------------------- PerturbH

PerturbH::PerturbH(const std::vector<std::vector<Rational>>& rows) : n_(static_cast<int>(rows.size())) {
  entries_.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw std::invalid_argument("perturbation must be a square matrix");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) throw std::invalid_argument("perturbation must be symmetric");
}

PerturbH::PerturbH(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    std::vector<Rational> x;
    for (long v : row) x.emplace_back(v);
    r.push_back(std::move(x));
  }
  *this = PerturbH(r);
}

PerturbH PerturbH::zero(int n) {
  PerturbH h;
  h.n_ = n;
  h.entries_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0));
  return h;
}

PerturbH PerturbH::identity(int n) {
  PerturbH h = zero(n);
  for (int i = 0; i < n; ++i) h.entries_[h.index(i, i)] = 1;
  return h;
}

PerturbH PerturbH::symmetric_outer(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("outer product of vectors of different length");
  const int n = static_cast<int>(a.size());
  PerturbH h = zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.entries_[h.index(i, j)] = a[i] * b[j] + b[i] * a[j];
  return h;
}

bool PerturbH::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

void PerturbH::set(int i, int j, const Rational& value) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw ParameterOutOfRange("perturbation index out of range");
  entries_[index(i, j)] = value;
  entries_[index(j, i)] = value;
}

PerturbH& PerturbH::operator+=(const PerturbH& other) {
  if (n_ != other.n_) throw DimensionMismatch("adding perturbations of different dimension");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

PerturbH& PerturbH::operator-=(const PerturbH& other) {
  if (n_ != other.n_) throw DimensionMismatch("subtracting perturbations of different dimension");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

PerturbH& PerturbH::operator*=(const Rational& factor) {
  for (auto& e : entries_) e *= factor;
  return *this;
}

std::string PerturbH::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    if (i) os << ';';
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- Covector

Covector::Covector(std::vector<Rational> components) : components_(std::move(components)) {
  norm2_ = 0;
  for (const auto& c : components_) norm2_ += c * c;
  if (norm2_ == 0) throw ZeroCovector();
}

Covector::Covector(std::initializer_list<long> components)
    : Covector(std::vector<Rational>(components.begin(), components.end())) {}

Covector Covector::unit(int n, int i) {
  if (i < 0 || i >= n) throw ParameterOutOfRange("unit covector index out of range");
  std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
  c[static_cast<std::size_t>(i)] = 1;
  return Covector(std::move(c));
}

Covector Covector::scaled(const Rational& factor) const {
  std::vector<Rational> c = components_;
  for (auto& x : c) x *= factor;
  return Covector(std::move(c));
}

std::string Covector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < components_.size(); ++i) os << (i ? "," : "") << components_[i].get_str();
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- invariants

std::vector<Rational> apply(const PerturbH& h, const Covector& xi) {
  require_same_dimension(h, xi);
  const int n = h.dimension();
  std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i)] += h(i, j) * xi[j];
  return out;
}

ScalarInvariants scalar_invariants(const PerturbH& h, const Covector& xi) {
  require_same_dimension(h, xi);
  const int n = h.dimension();
  ScalarInvariants s;
  const std::vector<Rational> hx = apply(h, xi);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s.hnorm2 += h(i, j) * h(i, j);
    s.hxi2 += hx[static_cast<std::size_t>(i)] * hx[static_cast<std::size_t>(i)];
    s.xhx += xi[i] * hx[static_cast<std::size_t>(i)];
    s.trh += h(i, i);
  }
  s.xi2 = xi.norm2();
  return s;
}

ProjectorTraces projector_traces_matrix(const PerturbH& h, const Covector& xi) {
  require_same_dimension(h, xi);
  const auto n = static_cast<std::size_t>(h.dimension());
  std::vector<Rational> perp(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      perp[i * n + j] = Rational(i == j ? 1 : 0) -
                        xi[static_cast<int>(i)] * xi[static_cast<int>(j)] / xi.norm2();

  // M = H Pi^perp
  std::vector<Rational> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        m[i * n + j] += h(static_cast<int>(i), static_cast<int>(k)) * perp[k * n + j];

  ProjectorTraces t;
  Rational trace = 0;
  for (std::size_t i = 0; i < n; ++i) {
    trace += m[i * n + i];
    for (std::size_t k = 0; k < n; ++k) t.t2 += m[i * n + k] * m[k * n + i];
  }
  t.t1sq = trace * trace;
  return t;
}

ProjectorTraces projector_traces_expansion(const PerturbH& h, const Covector& xi) {
  const ScalarInvariants s = scalar_invariants(h, xi);
  ProjectorTraces t;
  t.t2 = s.hnorm2 - 2 * s.hxi2 / s.xi2 + s.xhx * s.xhx / (s.xi2 * s.xi2);
  t.t1sq = s.xhx * s.xhx / (s.xi2 * s.xi2) - 2 * s.xhx * s.trh / s.xi2 + s.trh * s.trh;
  return t;
}

ProjectorTraces projector_traces(const PerturbH& h, const Covector& xi) {
  ProjectorTraces by_matrix = projector_traces_matrix(h, xi);
  ProjectorTraces by_expansion = projector_traces_expansion(h, xi);
  if (!(by_matrix == by_expansion))
    throw RouteMismatch("projector traces: matrix route (" + to_string(by_matrix.t2) + ", " +
                        to_string(by_matrix.t1sq) + ") != expansion route (" + to_string(by_expansion.t2) +
                        ", " + to_string(by_expansion.t1sq) + ")");
  return by_matrix;
}

// ---------------------------------------------------------------- invariant basis

InvariantVector& InvariantVector::operator+=(const InvariantVector& other) {
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.c[i];
  return *this;
}

bool InvariantVector::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const SPoly& p) { return p.is_zero(); });
}

std::string InvariantVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].to_string();
  return s + ")";
}

std::array<Rational, 5> invariant_basis_values(const PerturbH& h, const Covector& xi) {
  const ScalarInvariants s = scalar_invariants(h, xi);
  const Rational xi4 = s.xi2 * s.xi2;
  return {xi4 * s.hnorm2, s.xi2 * s.hxi2, s.xhx * s.xhx, s.xi2 * s.trh * s.xhx, xi4 * s.trh * s.trh};
}

InvariantVector fpair_to_invariant(const FPair& f) {
  return InvariantVector{{f.f1, Rational(-2) * f.f1, f.f1 + f.f2, Rational(-2) * f.f2, f.f2}};
}

std::array<SPoly, 3> projector_span_residual(const InvariantVector& v) {
  return {v.c[1] + Rational(2) * v.c[0], v.c[2] - v.c[0] - v.c[4], v.c[3] + Rational(2) * v.c[4]};
}

NotInProjectorSpan::NotInProjectorSpan(std::array<SPoly, 3> residual)
    : std::domain_error("invariant vector is not in the projector span; residual (" + residual[0].to_string() +
                        ", " + residual[1].to_string() + ", " + residual[2].to_string() + ")"),
      residual_(std::move(residual)) {}

FPair invariant_to_fpair(const InvariantVector& v) {
  auto residual = projector_span_residual(v);
  for (const auto& r : residual)
    if (!r.is_zero()) throw NotInProjectorSpan(std::move(residual));
  return {v.c[0], v.c[4]};
}

SPoly evaluate_reduced(const InvariantVector& v, const PerturbH& h, const Covector& xi) {
  const auto values = invariant_basis_values(h, xi);
  SPoly out;
  for (std::size_t i = 0; i < values.size(); ++i) out += v.c[i] * values[i];
  return out;
}

}  // namespace zetahess
