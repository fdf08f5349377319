#include "opalg/order.hpp"

#include <algorithm>

namespace opalg {

std::string order_name(OrderKind k) { return k == OrderKind::pll ? "pll" : "plr"; }

OrderKind order_from_name(const std::string& name) {
  if (name == "pll") return OrderKind::pll;
  if (name == "plr") return OrderKind::plr;
  throw Error("unknown order: " + name + " (expected pll or plr)");
}

namespace {

void paths_rec(const WordNode& node, PathWord& prefix,
               std::vector<PathWord>& out) {
  const bool multi = node.factors.size() >= 2;
  for (const Prime& f : node.factors) {
    const std::size_t mark = prefix.size();
    if (multi) prefix.push_back(kPathMu);
    if (f.is_letter()) {
      prefix.push_back(f.letter);
      out.push_back(prefix);
    } else {
      prefix.push_back(kPathP);
      if (f.inner->factors.empty())
        out.push_back(prefix);  // the bracketed unit is itself an occurrence
      else
        paths_rec(*f.inner, prefix, out);
    }
    prefix.resize(mark);
  }
}

}  // namespace

std::vector<PathWord> letter_paths(const Word& w) {
  std::vector<PathWord> out;
  out.reserve(static_cast<std::size_t>(w.degx()));
  PathWord prefix;
  paths_rec(*w.node(), prefix, out);
  return out;
}

std::vector<PathWord> patl(const Word& w) { return letter_paths(w); }

std::vector<PathWord> patr(const Word& w) {
  auto paths = letter_paths(w);
  std::reverse(paths.begin(), paths.end());
  return paths;
}

int dlex_cmp(const PathWord& a, const PathWord& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

namespace {

int seq_cmp(OrderKind kind, const std::vector<Prime>& a,
            const std::vector<Prime>& b);

int prime_cmp(OrderKind kind, const Prime& a, const Prime& b) {
  if (a.is_letter() != b.is_letter()) return a.is_letter() ? -1 : 1;
  if (a.is_letter())
    return a.letter == b.letter ? 0 : (a.letter < b.letter ? -1 : 1);
  if (a.inner.get() == b.inner.get()) return 0;
  return seq_cmp(kind, a.inner->factors, b.inner->factors);
}

int seq_cmp(OrderKind kind, const std::vector<Prime>& a,
            const std::vector<Prime>& b) {
  if (a.empty() || b.empty()) {
    if (a.empty() && b.empty()) return 0;
    return a.empty() ? -1 : 1;  // the unit is minimal
  }
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Prime& fa = kind == OrderKind::pll ? a[i] : a[a.size() - 1 - i];
    const Prime& fb = kind == OrderKind::pll ? b[i] : b[b.size() - 1 - i];
    int c = prime_cmp(kind, fa, fb);
    if (c != 0) return c;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? 1 : -1;  // a proper prefix outweighs its extensions
}

}  // namespace

int cmp(OrderKind kind, const Word& u, const Word& v) {
  if (u == v) return 0;
  if (u.degx() != v.degx()) return u.degx() < v.degx() ? -1 : 1;
  return seq_cmp(kind, u.factors(), v.factors());
}

}  // namespace opalg
