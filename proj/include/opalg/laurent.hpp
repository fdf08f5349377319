#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "opalg/word.hpp"

namespace opalg {

using Rational = boost::multiprecision::cpp_rational;

Rational rational_from_string(const std::string& text);
std::string rational_to_string(const Rational& r);

// Exact coefficients: Laurent polynomials in the weight symbol, with
// arbitrary-precision rational coefficients. The zero element is the empty
// term map; stored coefficients are never zero.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long value);  // NOLINT(google-explicit-constructor)
  explicit Laurent(const Rational& value);

  static Laurent lambda(int exponent = 1, const Rational& coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // Units of the ring are exactly the single-term elements c * lambda^e.
  bool is_unit() const { return terms_.size() == 1; }
  Laurent inverse() const;  // throws on non-units

  const std::map<int, Rational>& terms() const { return terms_; }

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator*=(const Laurent& o);
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }

  // Substitute a concrete rational for the weight symbol. Rejects value 0
  // when a negative power is present.
  Laurent eval(const Rational& value) const;

  // Canonical text, e.g. "1", "-3/2 L^2", "2 + L^-1".
  std::string str() const;

 private:
  std::map<int, Rational> terms_;
};

inline Laurent operator*(const Rational& c, const Laurent& l) {
  return Laurent(c) * l;
}

}  // namespace opalg
