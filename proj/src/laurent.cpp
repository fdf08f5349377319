#include "opalg/laurent.hpp"

#include <sstream>

namespace opalg {

Rational rational_from_string(const std::string& text) {
  try {
    Rational r(text);
    return r;
  } catch (const std::exception&) {
    throw Error("bad rational: '" + text + "'");
  }
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Laurent::Laurent(long value) {
  if (value != 0) terms_[0] = value;
}

Laurent::Laurent(const Rational& value) {
  if (value != 0) terms_[0] = value;
}

Laurent Laurent::lambda(int exponent, const Rational& coeff) {
  Laurent l;
  if (coeff != 0) l.terms_[exponent] = coeff;
  return l;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

Laurent Laurent::inverse() const {
  if (!is_unit())
    throw Error("coefficient " + str() +
                " is not invertible in the Laurent ring");
  const auto& [e, c] = *terms_.begin();
  return lambda(-e, Rational(1) / c);
}

Laurent Laurent::operator-() const {
  Laurent out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent out = *this;
  out += o;
  return out;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent out = *this;
  out -= o;
  return out;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Rational prod = c1 * c2;
      if (prod == 0) continue;
      auto it = out.terms_.find(e1 + e2);
      if (it == out.terms_.end()) {
        out.terms_[e1 + e2] = prod;
      } else {
        it->second += prod;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  return out;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::eval(const Rational& value) const {
  Laurent out;
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && value == 0)
      throw Error("weight 0 is not invertible (negative power present)");
    Rational pow = 1;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) pow *= value;
    if (e < 0) pow = Rational(1) / pow;
    acc += c * pow;
  }
  return Laurent(acc);
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool show_rat = (mag != 1) || e == 0;
    if (show_rat) out += rational_to_string(mag);
    if (e != 0) {
      if (show_rat) out += " ";
      out += "L";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace opalg
