#include "opalg/presets.hpp"

#include <algorithm>

namespace opalg {

namespace {

const Pattern X = pat_var(0);
const Pattern Y = pat_var(1);

Pattern br(const Pattern& p) { return pat_bracket(p); }
Pattern cat(std::vector<Pattern> ps) { return pat_cat(std::move(ps)); }

const Laurent kOne = Laurent(1);
const Laurent kLam = Laurent::lambda();

// [X]Y -> [XY] - X[Y] (- w XY for the modified variant)
RuleSchema leibniz_left(bool modified) {
  RuleSchema s;
  s.name = modified ? "leibniz-modified" : "leibniz";
  s.vars = 2;
  s.lead = cat({br(X), Y});
  s.rhs = {{kOne, br(cat({X, Y}))}, {-kOne, cat({X, br(Y)})}};
  if (modified) s.rhs.push_back({-kLam, cat({X, Y})});
  return s;
}

// X[Y] -> [XY] - [X]Y (- w XY)
RuleSchema leibniz_right(bool modified) {
  RuleSchema s;
  s.name = modified ? "leibniz-modified" : "leibniz";
  s.vars = 2;
  s.lead = cat({X, br(Y)});
  s.rhs = {{kOne, br(cat({X, Y}))}, {-kOne, cat({br(X), Y})}};
  if (modified) s.rhs.push_back({-kLam, cat({X, Y})});
  return s;
}

// [X][Y] -> (1/w)[XY] - (1/w)[X]Y - (1/w)X[Y]
RuleSchema leibniz_weighted() {
  RuleSchema s;
  s.name = "leibniz-weighted";
  s.vars = 2;
  s.lead = cat({br(X), br(Y)});
  const Laurent inv = Laurent::lambda(-1);
  s.rhs = {{inv, br(cat({X, Y}))},
           {-inv, cat({br(X), Y})},
           {-inv, cat({X, br(Y)})}};
  return s;
}

// [1] -> 0, or [1] -> -w for the modified variant
RuleSchema op_unit(bool modified) {
  RuleSchema s;
  s.name = "op-unit";
  s.vars = 0;
  s.lead = br(pat_unit());
  if (modified) s.rhs = {{-kLam, pat_unit()}};
  return s;
}

// [[X]Y] -> [X][Y] - [X[Y]] - w [XY]   (w XY for the modified variant)
RuleSchema rota_left(bool modified) {
  RuleSchema s;
  s.name = modified ? "rota-baxter-modified" : "rota-baxter";
  s.vars = 2;
  s.lead = br(cat({br(X), Y}));
  s.rhs = {{kOne, cat({br(X), br(Y)})}, {-kOne, br(cat({X, br(Y)}))}};
  s.rhs.push_back(
      {-kLam, modified ? cat({X, Y}) : br(cat({X, Y}))});
  return s;
}

// [X[Y]] -> [X][Y] - [[X]Y] - w [XY]   (w XY for the modified variant)
RuleSchema rota_right(bool modified) {
  RuleSchema s;
  s.name = modified ? "rota-baxter-modified" : "rota-baxter";
  s.vars = 2;
  s.lead = br(cat({X, br(Y)}));
  s.rhs = {{kOne, cat({br(X), br(Y)})}, {-kOne, br(cat({br(X), Y}))}};
  s.rhs.push_back(
      {-kLam, modified ? cat({X, Y}) : br(cat({X, Y}))});
  return s;
}

}  // namespace

std::string preset_name(PresetKind kind) {
  switch (kind) {
    case PresetKind::diff0l: return "diff0l";
    case PresetKind::diff0r: return "diff0r";
    case PresetKind::diff_lambda: return "difflambda";
    case PresetKind::mdiffl: return "mdiffl";
    case PresetKind::mdiffr: return "mdiffr";
    case PresetKind::rbl: return "rbl";
    case PresetKind::rbr: return "rbr";
    case PresetKind::mrbl: return "mrbl";
    case PresetKind::mrbr: return "mrbr";
  }
  throw Error("bad preset kind");
}

PresetKind preset_from_name(const std::string& name) {
  for (PresetKind k : all_presets())
    if (preset_name(k) == name) return k;
  throw Error("unknown preset: " + name);
}

const std::vector<PresetKind>& all_presets() {
  static const std::vector<PresetKind> kinds = {
      PresetKind::diff0l, PresetKind::diff0r, PresetKind::diff_lambda,
      PresetKind::mdiffl, PresetKind::mdiffr, PresetKind::rbl,
      PresetKind::rbr,    PresetKind::mrbl,   PresetKind::mrbr};
  return kinds;
}

Preset make_preset(PresetKind kind, std::optional<OrderKind> order,
                   std::optional<Rational> lambda) {
  Preset p;
  p.kind = kind;
  p.lambda_value = lambda;
  RewriteSystem& S = p.system;
  S.name = preset_name(kind);
  switch (kind) {
    case PresetKind::diff0l:
      S.mode = Mode::unitary;
      S.order = OrderKind::pll;
      S.schemas = {leibniz_left(false), op_unit(false)};
      break;
    case PresetKind::diff0r:
      S.mode = Mode::unitary;
      S.order = OrderKind::plr;
      S.schemas = {leibniz_right(false), op_unit(false)};
      break;
    case PresetKind::diff_lambda:
      S.mode = Mode::unitary;
      S.order = order.value_or(OrderKind::pll);
      S.schemas = {leibniz_weighted(), op_unit(false)};
      break;
    case PresetKind::mdiffl:
      S.mode = Mode::unitary;
      S.order = OrderKind::pll;
      S.schemas = {leibniz_left(true), op_unit(true)};
      break;
    case PresetKind::mdiffr:
      S.mode = Mode::unitary;
      S.order = OrderKind::plr;
      S.schemas = {leibniz_right(true), op_unit(true)};
      break;
    case PresetKind::rbl:
      S.mode = Mode::nonunitary;
      S.order = OrderKind::pll;
      S.schemas = {rota_left(false)};
      break;
    case PresetKind::rbr:
      S.mode = Mode::nonunitary;
      S.order = OrderKind::plr;
      S.schemas = {rota_right(false)};
      break;
    case PresetKind::mrbl:
      S.mode = Mode::nonunitary;
      S.order = OrderKind::pll;
      S.schemas = {rota_left(true)};
      break;
    case PresetKind::mrbr:
      S.mode = Mode::nonunitary;
      S.order = OrderKind::plr;
      S.schemas = {rota_right(true)};
      break;
  }
  if (order.has_value() && kind != PresetKind::diff_lambda &&
      *order != S.order)
    throw Error("preset " + S.name + " requires order " +
                order_name(S.order));
  if (lambda.has_value()) {
    if (kind == PresetKind::diff_lambda && *lambda == 0)
      throw Error(
          "difflambda needs an invertible weight; 0 has no inverse");
    for (RuleSchema& schema : S.schemas) schema = schema.with_lambda(*lambda);
  }
  return p;
}

RewriteSystem make_unitary_rb_system(std::optional<Rational> lambda) {
  RewriteSystem S;
  S.name = "rb-unitary";
  S.mode = Mode::unitary;
  S.order = OrderKind::pll;

  RuleSchema generic = rota_left(false);
  generic.name = "rb-generic";

  // y = 1: [X][1] -> [X[1]] + [[X]] + w [X]
  RuleSchema right_one;
  right_one.name = "rb-one-right";
  right_one.vars = 1;
  right_one.lead = cat({br(X), br(pat_unit())});
  right_one.rhs = {{kOne, br(cat({X, br(pat_unit())}))},
                   {kOne, br(br(X))},
                   {kLam, br(X)}};

  // x = 1: [[1]Y] -> [1][Y] - [[Y]] - w [Y]
  RuleSchema left_one;
  left_one.name = "rb-one-left";
  left_one.vars = 2;
  left_one.lead = br(cat({br(pat_unit()), Y}));
  left_one.rhs = {{kOne, cat({br(pat_unit()), br(Y)})},
                  {-kOne, br(br(Y))},
                  {-kLam, br(Y)}};

  // x = y = 1: [1][1] -> 2[[1]] + w [1]
  RuleSchema one_one;
  one_one.name = "rb-one-one";
  one_one.vars = 0;
  one_one.lead = cat({br(pat_unit()), br(pat_unit())});
  one_one.rhs = {{Laurent(2), br(br(pat_unit()))}, {kLam, br(pat_unit())}};

  S.schemas = {generic, right_one, left_one, one_one};
  if (lambda.has_value())
    for (RuleSchema& schema : S.schemas) schema = schema.with_lambda(*lambda);
  return S;
}

RewriteSystem system_from_name(const std::string& name,
                               std::optional<OrderKind> order,
                               std::optional<Rational> lambda) {
  if (name == "rb-unitary") {
    if (order.has_value() && *order != OrderKind::pll)
      throw Error("rb-unitary is defined under pll");
    return make_unitary_rb_system(lambda);
  }
  return make_preset(preset_from_name(name), order, lambda).system;
}

RewriteSystem make_nonterminating_diff_lambda(OrderKind order) {
  RewriteSystem S;
  S.name = "difflambda-wrong-orientation";
  S.mode = Mode::unitary;
  S.order = order;
  RuleSchema s;
  s.name = "leibniz-weighted-reversed";
  s.vars = 2;
  if (order == OrderKind::pll) {
    s.lead = cat({br(X), Y});
    s.rhs = {{kOne, br(cat({X, Y}))},
             {-kOne, cat({X, br(Y)})},
             {-kLam, cat({br(X), br(Y)})}};
  } else {
    s.lead = cat({X, br(Y)});
    s.rhs = {{kOne, br(cat({X, Y}))},
             {-kOne, cat({br(X), Y})},
             {-kLam, cat({br(X), br(Y)})}};
  }
  S.schemas = {s};
  return S;
}

OpPoly quotient_mul(const Preset& preset, const Word& u, const Word& v) {
  check_mode(u, preset.system.mode);
  check_mode(v, preset.system.mode);
  if (!is_irreducible(preset.system, u) || !is_irreducible(preset.system, v))
    throw Error("quotient_mul expects irreducible words");
  return normal_form(preset.system, OpPoly(Word::concat(u, v))).normal_form;
}

OpPoly quotient_op(const Preset& preset, const Word& u) {
  check_mode(u, preset.system.mode);
  if (!is_irreducible(preset.system, u))
    throw Error("quotient_op expects an irreducible word");
  return normal_form(preset.system, OpPoly(Word::bracket(u))).normal_form;
}

OpPoly axiom_difference(const Preset& preset, const Word& u, const Word& v) {
  const Laurent w = preset.lambda_value.has_value()
                        ? Laurent(*preset.lambda_value)
                        : Laurent::lambda();
  const OpPoly du(Word::bracket(u));
  const OpPoly dv(Word::bracket(v));
  const OpPoly pu(u);
  const OpPoly pv(v);
  OpPoly lhs;
  OpPoly rhs;
  switch (preset.kind) {
    case PresetKind::diff0l:
    case PresetKind::diff0r:
      lhs = OpPoly(Word::bracket(Word::concat(u, v)));
      rhs = poly_mul(du, pv) + poly_mul(pu, dv);
      break;
    case PresetKind::diff_lambda:
      lhs = OpPoly(Word::bracket(Word::concat(u, v)));
      rhs = poly_mul(du, pv) + poly_mul(pu, dv) +
            poly_mul(du, dv).scaled(w);
      break;
    case PresetKind::mdiffl:
    case PresetKind::mdiffr:
      lhs = OpPoly(Word::bracket(Word::concat(u, v)));
      rhs = poly_mul(du, pv) + poly_mul(pu, dv) + poly_mul(pu, pv).scaled(w);
      break;
    case PresetKind::rbl:
    case PresetKind::rbr:
      lhs = poly_mul(du, dv);
      rhs = poly_op(poly_mul(du, pv)) + poly_op(poly_mul(pu, dv)) +
            poly_op(poly_mul(pu, pv)).scaled(w);
      break;
    case PresetKind::mrbl:
    case PresetKind::mrbr:
      lhs = poly_mul(du, dv);
      rhs = poly_op(poly_mul(du, pv) + poly_mul(pu, dv)) +
            poly_mul(pu, pv).scaled(w);
      break;
  }
  return lhs - rhs;
}

bool verify_axiom(const Preset& preset, const Word& u, const Word& v) {
  check_mode(u, preset.system.mode);
  check_mode(v, preset.system.mode);
  return normal_form(preset.system, axiom_difference(preset, u, v))
      .normal_form.is_zero();
}

Multidegree multidegree(const Word& w) {
  return {w.letter_count(), w.bracket_count()};
}

namespace {

// Words as factor sequences with exactly n letters and k brackets,
// enumerated by the first-factor decomposition.
std::vector<Word> seqs(int n, int k, int alphabet_size, Mode mode) {
  std::vector<Word> out;
  if (n == 0 && k == 0) {
    out.emplace_back();
    return out;
  }
  if (n < 0 || k < 0) return out;
  if (n >= 1) {
    for (const Word& rest : seqs(n - 1, k, alphabet_size, mode))
      for (int l = 0; l < alphabet_size; ++l)
        out.push_back(Word::concat(Word::letter(l), rest));
  }
  if (k >= 1) {
    for (int np = 0; np <= n; ++np)
      for (int kp = 0; kp <= k - 1; ++kp) {
        if (mode == Mode::nonunitary && np == 0 && kp == 0) continue;
        for (const Word& payload : seqs(np, kp, alphabet_size, mode))
          for (const Word& rest :
               seqs(n - np, k - 1 - kp, alphabet_size, mode))
            out.push_back(Word::concat(Word::bracket(payload), rest));
      }
  }
  return out;
}

}  // namespace

std::vector<Word> enumerate_words(int letters, int brackets,
                                  int alphabet_size, Mode mode) {
  if (mode == Mode::nonunitary && letters == 0 && brackets == 0) return {};
  return seqs(letters, brackets, alphabet_size, mode);
}

std::vector<Word> enumerate_irr(const Preset& preset, int letters,
                                int brackets, int alphabet_size) {
  std::vector<Word> out;
  for (const Word& w :
       enumerate_words(letters, brackets, alphabet_size, preset.system.mode))
    if (is_irreducible(preset.system, w)) out.push_back(w);
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
    return cmp(preset.system.order, a, b) < 0;
  });
  return out;
}

long long count_irr(const Preset& preset, int letters, int brackets,
                    int alphabet_size) {
  long long count = 0;
  for (const Word& w :
       enumerate_words(letters, brackets, alphabet_size, preset.system.mode))
    if (is_irreducible(preset.system, w)) ++count;
  return count;
}

}  // namespace opalg
