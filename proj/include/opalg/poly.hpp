#pragma once

#include <map>
#include <utility>

#include "opalg/laurent.hpp"
#include "opalg/order.hpp"
#include "opalg/word.hpp"

namespace opalg {

// A finite linear combination of bracketed words with Laurent coefficients.
// Canonical: no zero coefficients are stored.
class OpPoly {
 public:
  OpPoly() = default;
  explicit OpPoly(const Word& w, Laurent c = Laurent(1));
  static OpPoly scalar(const Laurent& c);  // c times the unit word

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, Laurent, WordStructLess>& terms() const {
    return terms_;
  }
  Laurent coeff(const Word& w) const;

  void add_term(const Word& w, const Laurent& c);

  OpPoly operator-() const;
  OpPoly& operator+=(const OpPoly& o);
  OpPoly& operator-=(const OpPoly& o);
  OpPoly operator+(const OpPoly& o) const;
  OpPoly operator-(const OpPoly& o) const;
  bool operator==(const OpPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const OpPoly& o) const { return terms_ != o.terms_; }

  OpPoly scaled(const Laurent& c) const;

  // True iff some monomial contains the unit word anywhere (the poly itself
  // or under a bracket); such a poly is rejected in nonunitary sessions.
  void check_mode(Mode mode) const;

  std::pair<Word, Laurent> leading(OrderKind kind) const;  // throws on zero
  bool is_monic(OrderKind kind) const;
  OpPoly monic(OrderKind kind) const;  // divides by the leading coefficient

  OpPoly eval_lambda(const Rational& value) const;

 private:
  std::map<Word, Laurent, WordStructLess> terms_;
};

OpPoly poly_add(const OpPoly& f, const OpPoly& g);
OpPoly poly_scale(const Laurent& c, const OpPoly& f);
// Bilinear extension of concatenation.
OpPoly poly_mul(const OpPoly& f, const OpPoly& g);
// Linear extension of the bracket operator.
OpPoly poly_op(const OpPoly& f);
// Linear extension of substitution: q applied to every monomial.
OpPoly substitute_poly(const Context& q, const OpPoly& f);

}  // namespace opalg
