#include "wordmeasure/ratfunc.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace wm {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r = *this;
  Rational inv = 1 / leading();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quot(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const int db = b.degree();
  const Rational inv_lead = 1 / b.leading();
  for (int d = a.degree(); d >= db; --d) {
    const Rational c = rem[static_cast<size_t>(d)] * inv_lead;
    if (sgn(c) == 0) continue;
    quot[static_cast<size_t>(d - db)] = c;
    for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(d - db + i)] -= c * b.coeffs_[static_cast<size_t>(i)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = Polynomial::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

namespace {

// Renders a polynomial with descending powers. Coefficients that are not
// integers are parenthesized.
std::string render_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    Rational c = p.coeff(d);
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    Rational mag = abs(c);
    const bool unit = (mag == 1);
    if (d == 0 || !unit) {
      if (mag.get_den() == 1)
        os << mag.get_num();
      else if (d == 0)
        os << mag;
      else
        os << "(" << mag << ")";
    }
    if (d >= 1) os << "n";
    if (d >= 2) os << "^" << d;
    first = false;
  }
  return os.str();
}

int term_count(const Polynomial& p) {
  return static_cast<int>(std::count_if(p.coefficients().begin(), p.coefficients().end(),
                                        [](const Rational& c) { return sgn(c) != 0; }));
}

// Splits p = content * primitive where primitive has coprime integer
// coefficients and a positive leading coefficient.
std::pair<Rational, Polynomial> content_split(const Polynomial& p) {
  Integer g = 0;
  Integer l = 1;
  for (const auto& c : p.coefficients()) {
    if (sgn(c) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational content(g, l);
  content.canonicalize();
  if (sgn(p.leading()) < 0) content = -content;
  Polynomial prim = p * Rational(1 / content);
  return {content, prim};
}

bool is_single_token(const Polynomial& p) {
  // An integer constant or a bare power of n.
  if (p.degree() == 0) return true;
  return term_count(p) == 1 && p.leading() == 1;
}

}  // namespace

std::string Polynomial::to_string() const { return render_poly(*this); }

// ------------------------------------------------------------ LaurentSeries

Rational LaurentSeries::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentSeries::add_term(int exponent, const Rational& c) {
  if (exponent < floor_ || sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int LaurentSeries::leading_exponent() const {
  if (terms_.empty()) throw std::logic_error("leading exponent of a zero series");
  return terms_.begin()->first;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  floor_ = std::max(floor_, o.floor_);
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first < floor_)
      it = terms_.erase(it);
    else
      ++it;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  const int f = std::max(a.floor_, b.floor_);
  auto restrict = [f](const LaurentSeries& s) {
    std::vector<std::pair<int, Rational>> v;
    for (const auto& [e, c] : s.terms_)
      if (e >= f) v.emplace_back(e, c);
    return v;
  };
  return restrict(a) == restrict(b);
}

namespace {

std::string render_monomial(int e) {
  if (e == 0) return "";
  std::string s = "n";
  if (std::abs(e) != 1) s += "^" + std::to_string(std::abs(e));
  return s;
}

}  // namespace

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    Rational mag = abs(c);
    if (e >= 0) {
      if (e == 0 || mag != 1) os << mag;
      os << render_monomial(e);
    } else {
      os << mag.get_num() << "/";
      if (mag.get_den() == 1)
        os << render_monomial(e);
      else
        os << "(" << mag.get_den() << render_monomial(e) << ")";
    }
  }
  if (first) os << "0";
  os << " + O(";
  const int next = floor_ - 1;
  if (next >= 0)
    os << (next == 0 ? "1" : render_monomial(next));
  else
    os << "1/" << render_monomial(next);
  os << ")";
  return os.str();
}

nlohmann::json LaurentSeries::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) terms.push_back({{"exp", e}, {"coeff", c.get_str()}});
  return {{"floor", floor_}, {"terms", terms}};
}

// --------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const Rational& c)
    : num_(Polynomial::constant(c)), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::power_of_n(int exponent) {
  if (exponent >= 0) return RationalFunction(Polynomial::monomial(1, exponent));
  return RationalFunction(Polynomial::constant(1), Polynomial::monomial(1, -exponent));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Polynomial::divmod(num_, g).first;
      den_ = Polynomial::divmod(den_, g).first;
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::evaluate(const Rational& x) const {
  Rational d = den_.evaluate(x);
  if (sgn(d) == 0) throw DivisionByZero("evaluation at a pole n = " + x.get_str());
  return num_.evaluate(x) / d;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction result(1);
  RationalFunction base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

LaurentSeries RationalFunction::laurent(int floor) const {
  LaurentSeries out(floor);
  if (is_zero()) return out;
  const int p = num_.degree();
  const int q = den_.degree();
  const int top = p - q;
  if (top < floor) return out;
  const int count = top - floor + 1;
  // With u = 1/n: f = n^top * A(u) / B(u), A and B the reversed polynomials.
  auto a = [&](int k) { return k <= p ? num_.coeff(p - k) : Rational(0); };
  auto b = [&](int k) { return k <= q ? den_.coeff(q - k) : Rational(0); };
  std::vector<Rational> c(static_cast<size_t>(count));
  const Rational inv_b0 = 1 / b(0);
  for (int k = 0; k < count; ++k) {
    Rational acc = a(k);
    for (int i = 1; i <= std::min(k, q); ++i) acc -= b(i) * c[static_cast<size_t>(k - i)];
    c[static_cast<size_t>(k)] = acc * inv_b0;
    out.add_term(top - k, c[static_cast<size_t>(k)]);
  }
  return out;
}

std::string RationalFunction::to_string() const {
  if (is_zero()) return "0";
  auto [cn, pn] = content_split(num_);
  auto [cd, pd] = content_split(den_);
  Rational q = cn / cd;
  const Integer a = q.get_num();
  const Integer b = q.get_den();
  Polynomial den_poly = pd * Rational(b);

  std::string numerator;
  const bool num_const = pn.degree() == 0;
  const bool num_multi = term_count(pn) > 1;
  const bool has_den = !(den_poly.degree() == 0 && den_poly.leading() == 1);
  if (num_const) {
    numerator = a.get_str();
  } else {
    std::string body = pn.to_string();
    if (a == 1) {
      numerator = (num_multi && has_den) ? "(" + body + ")" : body;
    } else if (a == -1) {
      numerator = "-" + (num_multi ? "(" + body + ")" : body);
    } else {
      numerator = a.get_str() + (num_multi ? "(" + body + ")" : body);
    }
  }
  if (!has_den) return numerator;
  std::string dstr = den_poly.to_string();
  if (!is_single_token(den_poly)) dstr = "(" + dstr + ")";
  return numerator + "/" + dstr;
}

nlohmann::json RationalFunction::to_json() const {
  auto arr = [](const Polynomial& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : p.coefficients()) a.push_back(c.get_str());
    return a;
  };
  return {{"num", arr(num_)}, {"den", arr(den_)}};
}

RationalFunction RationalFunction::from_json(const nlohmann::json& j) {
  auto parse = [](const nlohmann::json& a) {
    std::vector<Rational> v;
    for (const auto& s : a) {
      Rational r(s.get<std::string>());
      r.canonicalize();
      v.push_back(r);
    }
    return Polynomial(std::move(v));
  };
  return RationalFunction(parse(j.at("num")), parse(j.at("den")));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }
std::ostream& operator<<(std::ostream& os, const LaurentSeries& s) { return os << s.to_string(); }

}  // namespace wm
