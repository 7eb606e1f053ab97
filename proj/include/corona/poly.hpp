#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace corona {

/// Integer-coefficient polynomial with arbitrary-precision coefficients,
/// stored in ascending degree order. Coefficient growth on 30+ vertex graphs
/// overflows 64-bit, hence GMP throughout.
class IntPoly {
 public:
  IntPoly() = default;  // zero polynomial
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly from_strings(const std::vector<std::string>& decimal_coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const mpz_class& coeff(int i) const;  // zero above the degree
  const std::vector<mpz_class>& coeffs() const { return c_; }

  mpz_class operator()(const mpz_class& x) const;
  mpq_class operator()(const mpq_class& x) const;

  IntPoly derivative() const;
  /// p(x + c); use c = -r to shift the argument by r.
  IntPoly composed_with_x_plus(const mpz_class& c) const;

  std::vector<double> as_doubles() const;
  std::vector<std::string> coeff_strings() const;
  std::string to_string() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& s, const IntPoly& p);
  friend bool operator==(const IntPoly& a, const IntPoly& b);

  /// Exact polynomial division; throws std::domain_error if the divisor does
  /// not divide *this exactly over the integers.
  IntPoly divide_exact(const IntPoly& divisor) const;

 private:
  std::vector<mpz_class> c_;  // trimmed: back() != 0 unless empty
  void trim();
};

/// Monic gcd computed over the rationals. The result is an integer polynomial
/// whenever either input is monic (every call site here passes a monic
/// characteristic polynomial); throws otherwise.
IntPoly monic_gcd(const IntPoly& a, const IntPoly& b);

struct SquareFreeFactor {
  IntPoly part;      // square-free, monic
  int multiplicity;  // >= 1
};

/// Yun decomposition p = prod part_i^multiplicity_i for monic p.
std::vector<SquareFreeFactor> square_free_decomposition(const IntPoly& p);

/// Ratio N(x)/D(x) of integer polynomials.
struct RationalFunction {
  IntPoly num;
  IntPoly den;
  bool reduced = false;

  /// Divide both parts by their monic gcd; the reduced denominator stays
  /// monic and integral because the unreduced one is monic.
  RationalFunction reduce() const;
  /// Exact equality as functions: num * o.den == o.num * den.
  bool same_function(const RationalFunction& o) const;
};

}  // namespace corona
