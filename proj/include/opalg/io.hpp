#pragma once

#include <string>

#include "opalg/poly.hpp"
#include "opalg/rewrite.hpp"

#include "json.hpp"

namespace opalg {

class ParseError : public Error {
 public:
  ParseError(std::size_t pos, const std::string& msg)
      : Error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// Surface syntax:
//   poly   := term (('+'|'-') term)*
//   term   := coeff? word | coeff
//   coeff  := product of atoms, '*' optional, '/' divides (unit divisor)
//   atom   := '(' coeff ')' | rational | lam
//   lam    := ('L'|'lambda'|U+03BB) ('^' int)?
//   word   := wordatom+ | '1'
//   wordatom := letter | '[' word ']'
OpPoly parse_poly(const std::string& text, const Alphabet& alphabet,
                  Mode mode);
Word parse_word(const std::string& text, const Alphabet& alphabet, Mode mode);

std::string render_word(const Word& w, const Alphabet& alphabet);
// Terms ordered descending under `kind`; every Laurent term of a coefficient
// becomes its own printed term, so the output re-parses to the same poly.
std::string render_poly(const OpPoly& f, const Alphabet& alphabet,
                        OrderKind kind = OrderKind::pll);
std::string render_context(const Context& q, const Alphabet& alphabet);
std::string render_path(const PathWord& p, const Alphabet& alphabet);
std::string render_paths(const std::vector<PathWord>& ps,
                         const Alphabet& alphabet);

// letter -> "x"; bracket -> ["op", word]; product -> ["cat", atoms...];
// unit -> ["one"]
nlohmann::json word_to_json(const Word& w, const Alphabet& alphabet);
nlohmann::json poly_to_json(const OpPoly& f, const Alphabet& alphabet,
                            OrderKind kind = OrderKind::pll);
nlohmann::json laurent_to_json(const Laurent& c);

std::string report_to_text(const GsReport& report);
nlohmann::json report_to_json(const GsReport& report);

}  // namespace opalg
