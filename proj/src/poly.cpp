#include "opalg/poly.hpp"

namespace opalg {

OpPoly::OpPoly(const Word& w, Laurent c) {
  if (!c.is_zero()) terms_.emplace(w, std::move(c));
}

OpPoly OpPoly::scalar(const Laurent& c) { return OpPoly(Word(), c); }

Laurent OpPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Laurent() : it->second;
}

void OpPoly::add_term(const Word& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OpPoly OpPoly::operator-() const {
  OpPoly out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

OpPoly& OpPoly::operator+=(const OpPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

OpPoly& OpPoly::operator-=(const OpPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

OpPoly OpPoly::operator+(const OpPoly& o) const {
  OpPoly out = *this;
  out += o;
  return out;
}

OpPoly OpPoly::operator-(const OpPoly& o) const {
  OpPoly out = *this;
  out -= o;
  return out;
}

OpPoly OpPoly::scaled(const Laurent& c) const {
  OpPoly out;
  for (const auto& [w, k] : terms_) out.add_term(w, k * c);
  return out;
}

namespace {

bool word_mentions_unit(const WordNode& n) {
  for (const Prime& f : n.factors) {
    if (f.is_letter()) continue;
    if (f.inner->factors.empty() || word_mentions_unit(*f.inner)) return true;
  }
  return false;
}

}  // namespace

void OpPoly::check_mode(Mode mode) const {
  if (mode == Mode::unitary) return;
  for (const auto& [w, c] : terms_)
    if (w.is_unit() || word_mentions_unit(*w.node()))
      throw Error("mode violation: polynomial mentions the unit");
}

std::pair<Word, Laurent> OpPoly::leading(OrderKind kind) const {
  if (terms_.empty()) throw Error("the zero polynomial has no leading term");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (cmp(kind, it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

bool OpPoly::is_monic(OrderKind kind) const {
  if (terms_.empty()) return false;
  auto [w, c] = leading(kind);
  return !w.is_unit() && c.is_one();
}

OpPoly OpPoly::monic(OrderKind kind) const {
  auto [w, c] = leading(kind);
  (void)w;
  return scaled(c.inverse());
}

OpPoly OpPoly::eval_lambda(const Rational& value) const {
  OpPoly out;
  for (const auto& [w, c] : terms_) out.add_term(w, c.eval(value));
  return out;
}

OpPoly poly_add(const OpPoly& f, const OpPoly& g) { return f + g; }

OpPoly poly_scale(const Laurent& c, const OpPoly& f) { return f.scaled(c); }

OpPoly poly_mul(const OpPoly& f, const OpPoly& g) {
  OpPoly out;
  for (const auto& [wf, cf] : f.terms())
    for (const auto& [wg, cg] : g.terms())
      out.add_term(Word::concat(wf, wg), cf * cg);
  return out;
}

OpPoly poly_op(const OpPoly& f) {
  OpPoly out;
  for (const auto& [w, c] : f.terms()) out.add_term(Word::bracket(w), c);
  return out;
}

OpPoly substitute_poly(const Context& q, const OpPoly& f) {
  OpPoly out;
  for (const auto& [w, c] : f.terms()) out.add_term(q.substitute(w), c);
  return out;
}

}  // namespace opalg
