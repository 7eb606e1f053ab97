#include "corona/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace corona {

namespace {

// Rational-coefficient scratch polynomials for gcd work, ascending order.
using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b (b nonzero), over Q.
QPoly qmod(QPoly a, const QPoly& b) {
  qtrim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class q = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    qtrim(a);
  }
  return a;
}

QPoly to_q(const IntPoly& p) {
  QPoly q;
  q.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) q.emplace_back(c);
  return q;
}

}  // namespace

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::from_strings(const std::vector<std::string>& decimal_coeffs) {
  std::vector<mpz_class> c;
  c.reserve(decimal_coeffs.size());
  for (const auto& s : decimal_coeffs) c.emplace_back(s);
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::coeff(int i) const {
  static const mpz_class zero = 0;
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

mpz_class IntPoly::operator()(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPoly::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = mpz_class(static_cast<long>(i)) * c_[i];
  return IntPoly(std::move(d));
}

IntPoly IntPoly::composed_with_x_plus(const mpz_class& c) const {
  // Horner in the shifted variable: result = sum c_i (x + c)^i.
  IntPoly result;
  const IntPoly shift({c, 1});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    result = result * shift + IntPoly({*it});
  return result;
}

std::vector<double> IntPoly::as_doubles() const {
  std::vector<double> d;
  d.reserve(c_.size());
  for (const auto& v : c_) d.push_back(v.get_d());
  return d;
}

std::vector<std::string> IntPoly::coeff_strings() const {
  std::vector<std::string> s;
  s.reserve(c_.size());
  for (const auto& v : c_) s.push_back(v.get_str());
  return s;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) out << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) out << "-";
    const mpz_class mag = abs(c_[i]);
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(c));
}

IntPoly operator*(const mpz_class& s, const IntPoly& p) {
  std::vector<mpz_class> c(p.c_);
  for (auto& v : c) v *= s;
  return IntPoly(std::move(c));
}

bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<mpz_class> rem(c_);
  std::vector<mpz_class> quot(degree() - divisor.degree() + 1, 0);
  const mpz_class& lead = divisor.c_.back();
  for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
    mpz_class& top = rem[i + divisor.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    quot[i] = top / lead;
    for (int j = 0; j <= divisor.degree(); ++j) rem[i + j] -= quot[i] * divisor.c_[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("inexact polynomial division");
  return IntPoly(std::move(quot));
}

IntPoly monic_gcd(const IntPoly& a, const IntPoly& b) {
  QPoly x = to_q(a), y = to_q(b);
  qtrim(x);
  qtrim(y);
  while (!y.empty()) {
    QPoly r = qmod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return {};
  // Normalize monic over Q, then demand integer coefficients.
  const mpq_class lead = x.back();
  std::vector<mpz_class> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    mpq_class c = x[i] / lead;
    c.canonicalize();
    if (c.get_den() != 1)
      throw std::domain_error("monic gcd is not integral (no monic input?)");
    out[i] = c.get_num();
  }
  return IntPoly(std::move(out));
}

std::vector<SquareFreeFactor> square_free_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("square-free decomposition of zero");
  if (!p.is_monic()) throw std::domain_error("square-free decomposition needs monic input");
  std::vector<SquareFreeFactor> out;
  if (p.degree() == 0) return out;

  // Yun's algorithm; all divisions are exact.
  const IntPoly dp = p.derivative();
  IntPoly g = monic_gcd(p, dp);
  IntPoly b = p.divide_exact(g);
  IntPoly c = dp.divide_exact(g);
  IntPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    IntPoly s = monic_gcd(b, d);
    if (s.degree() > 0) out.push_back({s, i});
    b = b.divide_exact(s);
    c = d.divide_exact(s);
    d = c - b.derivative();
  }
  return out;
}

RationalFunction RationalFunction::reduce() const {
  if (reduced) return *this;
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    IntPoly one({1});
    return {IntPoly{}, one, true};
  }
  const IntPoly g = monic_gcd(num, den);
  RationalFunction r{num.divide_exact(g), den.divide_exact(g), true};
  return r;
}

bool RationalFunction::same_function(const RationalFunction& o) const {
  return num * o.den == o.num * den;
}

}  // namespace corona
