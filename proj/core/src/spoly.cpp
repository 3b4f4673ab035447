#include <ostream>
#include <sstream>
#include <utility>

#include "zetahess/exactalg.hpp"

namespace zetahess {

std::string to_string(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

SPoly::SPoly(const Rational& constant) : coeffs_{constant} { trim(); }

SPoly::SPoly(long constant) : coeffs_{Rational(constant)} { trim(); }

SPoly::SPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

SPoly SPoly::variable() { return SPoly(std::vector<Rational>{0, 1}); }

void SPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational SPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational SPoly::evaluate(const Rational& s_shifted) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s_shifted + *it;
  return acc;
}

double SPoly::evaluate(double s_shifted) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s_shifted + it->get_d();
  return acc;
}

SPoly& SPoly::operator+=(const SPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

SPoly& SPoly::operator-=(const SPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

SPoly& SPoly::operator*=(const SPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

SPoly& SPoly::operator*=(const Rational& factor) {
  for (auto& c : coeffs_) c *= factor;
  trim();
  return *this;
}

SPoly SPoly::operator-() const {
  SPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string SPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (negative)
      os << '-';
    else if (!first)
      os << '+';
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << 'S';
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SPoly& p) { return os << p.to_string(); }

}  // namespace zetahess
