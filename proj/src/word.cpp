#include "opalg/word.hpp"

#include <algorithm>
#include <deque>

namespace opalg {

std::string mode_name(Mode m) {
  return m == Mode::unitary ? "unitary" : "nonunitary";
}

Mode mode_from_name(const std::string& name) {
  if (name == "unitary") return Mode::unitary;
  if (name == "nonunitary") return Mode::nonunitary;
  throw Error("unknown mode: " + name);
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (n.empty()) throw Error("empty letter name");
    if (n == "1" || n == "L" || n == "lambda")
      throw Error("letter name '" + n + "' is reserved");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == n) throw Error("duplicate letter name '" + n + "'");
  }
}

Alphabet Alphabet::from_csv(const std::string& csv) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) names.push_back(cur);
  return Alphabet(std::move(names));
}

int Alphabet::rank_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

const std::string& Alphabet::name(int rank) const {
  if (rank < 0 || rank >= size()) throw Error("letter rank out of range");
  return names_[static_cast<std::size_t>(rank)];
}

namespace {

std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

WordNodePtr make_node(std::vector<Prime> factors) {
  auto node = std::make_shared<WordNode>();
  node->factors = std::move(factors);
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const Prime& f : node->factors) {
    if (f.is_letter()) {
      h = hash_mix(h, 0x1000003ULL + static_cast<std::size_t>(f.letter));
      node->degx += 1;
      node->letters += 1;
    } else {
      h = hash_mix(h, hash_mix(0x9dc5ULL, f.inner->hash));
      node->depth = std::max(node->depth, 1 + f.inner->depth);
      node->degx += f.inner->factors.empty() ? 1 : f.inner->degx;
      node->letters += f.inner->letters;
      node->brackets += 1 + f.inner->brackets;
    }
  }
  node->hash = h;
  return node;
}

const WordNodePtr& unit_node() {
  static const WordNodePtr n = make_node({});
  return n;
}

bool node_equal(const WordNode& a, const WordNode& b) {
  if (a.hash != b.hash || a.factors.size() != b.factors.size()) return false;
  if (a.degx != b.degx || a.depth != b.depth) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    const Prime& fa = a.factors[i];
    const Prime& fb = b.factors[i];
    if (fa.letter != fb.letter) return false;
    if (fa.is_letter()) continue;
    if (fa.inner.get() == fb.inner.get()) continue;
    if (!node_equal(*fa.inner, *fb.inner)) return false;
  }
  return true;
}

int node_struct_cmp(const WordNode& a, const WordNode& b) {
  if (&a == &b) return 0;
  if (a.depth != b.depth) return a.depth < b.depth ? -1 : 1;
  if (a.factors.size() != b.factors.size())
    return a.factors.size() < b.factors.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    const Prime& fa = a.factors[i];
    const Prime& fb = b.factors[i];
    if (fa.is_letter() != fb.is_letter()) return fa.is_letter() ? -1 : 1;
    if (fa.is_letter()) {
      if (fa.letter != fb.letter) return fa.letter < fb.letter ? -1 : 1;
    } else {
      int c = node_struct_cmp(*fa.inner, *fb.inner);
      if (c != 0) return c;
    }
  }
  return 0;
}

}  // namespace

Word::Word() : node_(unit_node()) {}

Word Word::of_node(WordNodePtr node) {
  Word w;
  w.node_ = node ? std::move(node) : unit_node();
  return w;
}

Word Word::letter(int rank) {
  if (rank < 0) throw Error("letter rank must be nonnegative");
  Prime p;
  p.letter = rank;
  return of_node(make_node({p}));
}

Word Word::bracket(const Word& u) {
  Prime p;
  p.inner = u.node_;
  return of_node(make_node({p}));
}

Word Word::concat(const Word& u, const Word& v) {
  if (u.is_unit()) return v;
  if (v.is_unit()) return u;
  std::vector<Prime> fs = u.factors();
  fs.insert(fs.end(), v.factors().begin(), v.factors().end());
  return of_node(make_node(std::move(fs)));
}

Word Word::from_factors(std::vector<Prime> factors) {
  return of_node(make_node(std::move(factors)));
}

Word Word::subrange(int start, int len) const {
  const auto& fs = factors();
  if (start < 0 || len < 0 ||
      static_cast<std::size_t>(start + len) > fs.size())
    throw Error("subrange out of bounds");
  return of_node(make_node(std::vector<Prime>(
      fs.begin() + start, fs.begin() + start + len)));
}

bool Word::operator==(const Word& o) const {
  if (node_.get() == o.node_.get()) return true;
  return node_equal(*node_, *o.node_);
}

int Word::struct_cmp(const Word& a, const Word& b) {
  return node_struct_cmp(*a.node_, *b.node_);
}

Word prime_word(const Prime& p) { return Word::from_factors({p}); }

namespace {

bool node_nonunitary_ok(const WordNode& n) {
  if (n.factors.empty()) return false;
  for (const Prime& f : n.factors)
    if (!f.is_letter() && !node_nonunitary_ok(*f.inner)) return false;
  return true;
}

}  // namespace

bool nonunitary_ok(const Word& w) { return node_nonunitary_ok(*w.node()); }

void check_mode(const Word& w, Mode mode) {
  if (mode == Mode::nonunitary && !nonunitary_ok(w))
    throw Error("mode violation: the unit is not a semigroup word");
}

Context::Context() : layers_(1) {}

Context::Context(std::vector<ContextLayer> layers)
    : layers_(std::move(layers)) {
  if (layers_.empty()) throw Error("context needs at least one layer");
}

bool Context::is_hole() const {
  return layers_.size() == 1 && layers_[0].prefix.empty() &&
         layers_[0].suffix.empty();
}

Word Context::substitute(const Word& u) const {
  Word cur = u;
  for (std::size_t i = layers_.size(); i-- > 0;) {
    const ContextLayer& layer = layers_[i];
    if (i + 1 < layers_.size()) cur = Word::bracket(cur);
    std::vector<Prime> fs = layer.prefix;
    fs.insert(fs.end(), cur.factors().begin(), cur.factors().end());
    fs.insert(fs.end(), layer.suffix.begin(), layer.suffix.end());
    cur = Word::from_factors(std::move(fs));
  }
  return cur;
}

Word substitute(const Context& q, const Word& u) { return q.substitute(u); }

std::vector<std::pair<Context, Word>> enumerate_contexts(const Word& w) {
  std::vector<std::pair<Context, Word>> out;
  out.emplace_back(Context(), w);

  struct Slot {
    std::vector<ContextLayer> layers;  // layers above this level
    WordNodePtr node;
    bool root;
  };
  std::deque<Slot> queue;
  queue.push_back({{}, w.node(), true});

  while (!queue.empty()) {
    Slot slot = std::move(queue.front());
    queue.pop_front();
    const auto& fs = slot.node->factors;
    const int m = static_cast<int>(fs.size());
    for (int start = 0; start < m; ++start) {
      for (int len = 1; start + len <= m; ++len) {
        if (slot.root && start == 0 && len == m) continue;  // emitted as (hole, w)
        ContextLayer layer;
        layer.prefix.assign(fs.begin(), fs.begin() + start);
        layer.suffix.assign(fs.begin() + start + len, fs.end());
        std::vector<ContextLayer> layers = slot.layers;
        layers.push_back(std::move(layer));
        out.emplace_back(
            Context(std::move(layers)),
            Word::of_node(
                [&] {
                  return Word::from_factors(std::vector<Prime>(
                             fs.begin() + start, fs.begin() + start + len))
                      .node();
                }()));
      }
    }
    for (int i = 0; i < m; ++i) {
      if (fs[i].is_letter()) continue;
      ContextLayer layer;
      layer.prefix.assign(fs.begin(), fs.begin() + i);
      layer.suffix.assign(fs.begin() + i + 1, fs.end());
      std::vector<ContextLayer> layers = slot.layers;
      layers.push_back(std::move(layer));
      queue.push_back({std::move(layers), fs[i].inner, false});
    }
  }
  return out;
}

}  // namespace opalg
