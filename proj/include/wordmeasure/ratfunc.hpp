// Exact univariate arithmetic over Q in the variable n: polynomials,
// rational functions in canonical form, and Laurent expansions at n -> oo.
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace wm {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised on division by the zero polynomial or evaluation at a pole.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense polynomial with ascending coefficients. The zero polynomial has an
/// empty coefficient list; otherwise the last coefficient is non-zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  static Polynomial variable() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;
  Polynomial monic() const;

  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Plain rendering, e.g. "n^3 - 5n + 1/2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// Truncated Laurent expansion at n -> oo, stored sparsely.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  explicit LaurentSeries(int floor) : floor_(floor) {}

  int floor() const { return floor_; }
  Rational coefficient(int exponent) const;
  /// Adds c * n^exponent; terms below the floor are dropped.
  void add_term(int exponent, const Rational& c);
  /// Exponents in descending order with their non-zero coefficients.
  const std::map<int, Rational, std::greater<int>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest exponent with a non-zero coefficient; requires !is_zero().
  int leading_exponent() const;

  LaurentSeries& operator+=(const LaurentSeries& o);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  /// Both series restricted to exponents >= max(floors).
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  /// e.g. "-4/n^3 - 4/n^5 + O(1/n^7)".
  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  int floor_ = 0;
  std::map<int, Rational, std::greater<int>> terms_;
};

/// Element of Q(n): reduced fraction with monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT
  explicit RationalFunction(Polynomial p);
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }
  static RationalFunction power_of_n(int exponent);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Throws DivisionByZero at a pole.
  Rational evaluate(const Rational& x) const;
  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  /// deg(num) - deg(den); the growth order at n -> oo. Undefined for zero.
  int order() const { return num_.degree() - den_.degree(); }
  /// Coefficient of n^order() in the expansion at infinity.
  Rational leading_coefficient() const { return num_.leading() / den_.leading(); }

  LaurentSeries laurent(int floor) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Integer-cleared rendering with positive content factored out of the
  /// numerator, e.g. "-4/(n^3 - n)" or "9(n^2 + 4)/(n^5 - 5n^3 + 4n)".
  std::string to_string() const;
  /// {"num": [...], "den": [...]} with ascending coefficients as strings.
  nlohmann::json to_json() const;
  static RationalFunction from_json(const nlohmann::json& j);

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const RationalFunction& f);
std::ostream& operator<<(std::ostream& os, const LaurentSeries& s);

}  // namespace wm
