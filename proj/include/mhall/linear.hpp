#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mhall/canonical.hpp"

namespace mhall {

// Exact fraction over 64-bit integers, always normalized with a positive
// denominator. (boost::rational 1.74, the system version, recurses forever
// on mixed-type comparisons, so the little arithmetic needed here is local.)
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d) : num_(n), den_(d) {
    assert(den_ != 0);
    normalize();
  }

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += Rational(-o.num_, o.den_); }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_ = 0;
  long long den_ = 1;
};

// Exact scalars. Products and coproducts of basis classes stay integral, but
// antipode arithmetic mixes signs, so fractions are the right coefficient
// ring for the algebra layer.
using Coeff = Rational;

std::string coeff_to_string(const Coeff& c);

// A finite linear combination of isomorphism classes with exact coefficients.
// Zero coefficients are never stored.
class IsoLin {
 public:
  IsoLin() = default;
  static IsoLin basis(IsoClass c) {
    IsoLin out;
    out.add(std::move(c), 1);
    return out;
  }

  void add(IsoClass c, const Coeff& x);
  Coeff coefficient(const IsoClass& c) const;
  const std::map<IsoClass, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  IsoLin& operator+=(const IsoLin& other);
  IsoLin& operator-=(const IsoLin& other);
  IsoLin& operator*=(const Coeff& x);
  friend IsoLin operator+(IsoLin a, const IsoLin& b) { return a += b; }
  friend IsoLin operator-(IsoLin a, const IsoLin& b) { return a -= b; }
  friend IsoLin operator*(const Coeff& x, IsoLin a) { return a *= x; }
  bool operator==(const IsoLin&) const = default;

 private:
  std::map<IsoClass, Coeff> terms_;
};

// Rank-two tensors (and the three-leg variant used for coassociativity).
using IsoPair = std::pair<IsoClass, IsoClass>;
using TensorLin = std::map<IsoPair, Coeff>;
using TensorLin3 = std::map<std::vector<IsoClass>, Coeff>;

void tensor_add(TensorLin& t, const IsoClass& a, const IsoClass& b, const Coeff& x);

// Text form: one term per line, `<coeff> <canon-hex>`; tensors get two hex
// columns. Coefficients print as `p` or `p/q`.
std::string to_text(const IsoLin& f);
std::string to_text(const TensorLin& t);
IsoLin parse_iso_lin(const std::string& text);

}  // namespace mhall
