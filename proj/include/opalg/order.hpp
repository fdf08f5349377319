#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opalg/word.hpp"

namespace opalg {

// Which side of a word weighs more: pll reads factor sequences left to
// right, plr right to left.
enum class OrderKind { pll, plr };

std::string order_name(OrderKind k);
OrderKind order_from_name(const std::string& name);

// Path words live over X together with the operator symbol P and the
// multiplication symbol Mu, with every letter < P < Mu.
using PathSymbol = std::int32_t;
inline constexpr PathSymbol kPathP = 1 << 30;
inline constexpr PathSymbol kPathMu = (1 << 30) + 1;

using PathWord = std::vector<PathSymbol>;

// One path per letter occurrence (bracketed units count as letters), left to
// right. The path records, from the root down, a Mu for each level of
// breadth >= 2 and a P for each bracket crossed; a bracketed unit ends in P.
std::vector<PathWord> letter_paths(const Word& w);

std::vector<PathWord> patl(const Word& w);  // = letter_paths
std::vector<PathWord> patr(const Word& w);  // reversed tuple

// Degree-lexicographic comparison: shorter paths are smaller; equal lengths
// compare symbol-wise. Returns -1/0/1.
int dlex_cmp(const PathWord& a, const PathWord& b);

// The monomial order used by the engine. First key is degx. On ties the
// prime factor sequences are compared from the heavy side (left for pll,
// right for plr): letters by rank, every letter below every bracket,
// brackets by recursing into their contents, and when one factor sequence
// exhausts the other as a proper prefix (suffix for plr) the shorter side is
// larger; the unit is below everything. The result is 0 only for identical
// words, and the order is bracket, left and right compatible, so it is
// stable under substitution into any context.
int cmp(OrderKind kind, const Word& u, const Word& v);

inline bool word_less(OrderKind kind, const Word& u, const Word& v) {
  return cmp(kind, u, v) < 0;
}

}  // namespace opalg
