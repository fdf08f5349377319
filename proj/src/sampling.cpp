#include "opalg/sampling.hpp"

namespace opalg {

namespace {

// Builds a word with exactly `letters` letter slots (a bracketed unit counts
// as a slot in unitary mode) spread over a random shape.
Word gen(std::mt19937_64& rng, int slots, int depth_left,
         const WordGenOptions& o) {
  if (slots <= 0) return Word();
  std::uniform_int_distribution<int> coin(0, 99);
  std::vector<Prime> fs;
  int remaining = slots;
  while (remaining > 0) {
    // budget for this factor
    std::uniform_int_distribution<int> take_d(1, remaining);
    int take = take_d(rng);
    const bool can_bracket = depth_left > 0;
    const bool want_bracket = can_bracket && coin(rng) < 45;
    if (!want_bracket || take == 0) take = std::min(take, remaining);
    if (want_bracket) {
      Word payload;
      if (o.mode == Mode::unitary && coin(rng) < 10) {
        payload = Word();  // bracketed unit, consumes one slot
        take = 1;
      } else {
        payload = gen(rng, take, depth_left - 1, o);
      }
      Prime p;
      p.inner = payload.node();
      fs.push_back(p);
    } else {
      std::uniform_int_distribution<int> letter_d(0, o.alphabet_size - 1);
      for (int i = 0; i < take; ++i) {
        Prime p;
        p.letter = letter_d(rng);
        fs.push_back(p);
      }
    }
    remaining -= take;
  }
  return Word::from_factors(std::move(fs));
}

}  // namespace

Word random_word(std::mt19937_64& rng, const WordGenOptions& opts) {
  if (opts.allow_unit_result && opts.mode == Mode::unitary) {
    std::uniform_int_distribution<int> coin(0, 9);
    if (coin(rng) == 0) return Word();
  }
  std::uniform_int_distribution<int> slots_d(1, std::max(1, opts.max_letters));
  return gen(rng, slots_d(rng), opts.max_depth, opts);
}

OpPoly random_poly(std::mt19937_64& rng, const PolyGenOptions& opts) {
  std::uniform_int_distribution<int> terms_d(1, std::max(1, opts.max_terms));
  std::uniform_int_distribution<int> num_d(1, std::max(1, opts.max_coeff));
  std::uniform_int_distribution<int> pow_d(-opts.max_lambda_pow,
                                           opts.max_lambda_pow);
  std::uniform_int_distribution<int> sign_d(0, 1);
  OpPoly out;
  const int n = terms_d(rng);
  for (int i = 0; i < n; ++i) {
    Word w = random_word(rng, opts.word);
    Rational c(num_d(rng), num_d(rng));
    if (sign_d(rng)) c = -c;
    out.add_term(w, Laurent::lambda(pow_d(rng), c));
  }
  return out;
}

}  // namespace opalg
