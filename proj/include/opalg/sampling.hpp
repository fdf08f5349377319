#pragma once

#include <random>

#include "opalg/poly.hpp"

namespace opalg {

struct WordGenOptions {
  int alphabet_size = 2;
  int max_letters = 4;  // budget for degx
  int max_depth = 3;
  Mode mode = Mode::unitary;
  bool allow_unit_result = false;  // unitary only
};

// Random bracketed word within the given budgets; never the unit unless
// allow_unit_result is set in unitary mode.
Word random_word(std::mt19937_64& rng, const WordGenOptions& opts);

struct PolyGenOptions {
  WordGenOptions word;
  int max_terms = 4;
  int max_coeff = 5;      // numerators/denominators drawn from 1..max_coeff
  int max_lambda_pow = 2; // exponents drawn from -max..max
};

OpPoly random_poly(std::mt19937_64& rng, const PolyGenOptions& opts);

}  // namespace opalg
