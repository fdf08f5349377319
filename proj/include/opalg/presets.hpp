#pragma once

#include <optional>

#include "opalg/rewrite.hpp"

namespace opalg {

enum class PresetKind {
  diff0l,
  diff0r,
  diff_lambda,
  mdiffl,
  mdiffr,
  rbl,
  rbr,
  mrbl,
  mrbr,
};

std::string preset_name(PresetKind kind);
PresetKind preset_from_name(const std::string& name);
const std::vector<PresetKind>& all_presets();

struct Preset {
  PresetKind kind = PresetKind::diff0l;
  RewriteSystem system;
  std::optional<Rational> lambda_value;  // empty = symbolic weight
};

// order may be chosen only for diff_lambda (both directions are valid
// there); the other presets fix their own order. A concrete weight
// specializes every rule coefficient; diff_lambda rejects weight 0.
Preset make_preset(PresetKind kind, std::optional<OrderKind> order = {},
                   std::optional<Rational> lambda = {});

// The weighted Rota-Baxter rules over the full unitary monoid, split into
// the four shapes the metavariables-at-the-unit produce. Not a preset (the
// system fails confluence); used as the negative control.
RewriteSystem make_unitary_rb_system(std::optional<Rational> lambda = {});

// Resolves preset names plus "rb-unitary".
RewriteSystem system_from_name(const std::string& name,
                               std::optional<OrderKind> order = {},
                               std::optional<Rational> lambda = {});

// The wrongly oriented weighted Leibniz rule (lead taken on the wrong side);
// its remainder contains a monomial above the lead, so the termination
// ledger must flag it.
RewriteSystem make_nonterminating_diff_lambda(OrderKind order);

// Product / operator on the canonical basis: inputs must be irreducible.
OpPoly quotient_mul(const Preset& preset, const Word& u, const Word& v);
OpPoly quotient_op(const Preset& preset, const Word& u);

// lhs - rhs of the preset's defining identity, in the free algebra.
OpPoly axiom_difference(const Preset& preset, const Word& u, const Word& v);
bool verify_axiom(const Preset& preset, const Word& u, const Word& v);

struct Multidegree {
  int letters = 0;
  int brackets = 0;
};

Multidegree multidegree(const Word& w);

// All words with exactly `letters` letters from the alphabet (with
// repetition) and `brackets` operator applications, deterministic order.
std::vector<Word> enumerate_words(int letters, int brackets,
                                  int alphabet_size, Mode mode);

std::vector<Word> enumerate_irr(const Preset& preset, int letters,
                                int brackets, int alphabet_size);
long long count_irr(const Preset& preset, int letters, int brackets,
                    int alphabet_size);

}  // namespace opalg
