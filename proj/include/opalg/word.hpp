#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace opalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unitary sessions work over the free operated monoid (the empty word 1 is a
// term and may appear under brackets); nonunitary sessions work over the free
// operated semigroup, where 1 is banned everywhere.
enum class Mode { unitary, nonunitary };

std::string mode_name(Mode m);
Mode mode_from_name(const std::string& name);

// Letter names with their declared well-order: rank = declaration index.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  // "x,y,z" -> alphabet with ranks 0,1,2. Rejects duplicates and the
  // reserved spellings (1, L, lambda).
  static Alphabet from_csv(const std::string& csv);

  int rank_of(const std::string& name) const;  // -1 if unknown
  const std::string& name(int rank) const;
  int size() const { return static_cast<int>(names_.size()); }

 private:
  std::vector<std::string> names_;
};

struct WordNode;
using WordNodePtr = std::shared_ptr<const WordNode>;

// A prime factor: either a letter (rank >= 0) or a bracketed subword.
struct Prime {
  int letter = -1;
  WordNodePtr inner;  // non-null iff this factor is a bracket

  bool is_letter() const { return letter >= 0; }
};

struct WordNode {
  std::vector<Prime> factors;
  std::size_t hash = 0;
  int depth = 0;     // maximal bracket nesting
  int degx = 0;      // letter occurrences plus bracketed-unit occurrences
  int letters = 0;   // letter occurrences only
  int brackets = 0;  // bracket occurrences
};

// An immutable bracketed word. Copies share the underlying tree.
class Word {
 public:
  Word();  // the unit 1

  static Word letter(int rank);
  static Word bracket(const Word& u);
  static Word concat(const Word& u, const Word& v);
  static Word from_factors(std::vector<Prime> factors);
  static Word of_node(WordNodePtr node);

  const std::vector<Prime>& factors() const { return node_->factors; }
  bool is_unit() const { return node_->factors.empty(); }
  int breadth() const { return static_cast<int>(node_->factors.size()); }
  int depth() const { return node_->depth; }
  int degx() const { return node_->degx; }
  int letter_count() const { return node_->letters; }
  int bracket_count() const { return node_->brackets; }
  std::size_t hash() const { return node_->hash; }
  const WordNodePtr& node() const { return node_; }

  // Contiguous run of top-level factors as a word.
  Word subrange(int start, int len) const;

  bool operator==(const Word& o) const;
  bool operator!=(const Word& o) const { return !(*this == o); }

  // Deterministic structural total order (depth, breadth, then factors).
  // Used for container keys and tie-breaking in reports; this is not the
  // monomial order.
  static int struct_cmp(const Word& a, const Word& b);

 private:
  WordNodePtr node_;
};

Word prime_word(const Prime& p);

// True iff w is a valid semigroup word: nonempty, with nonempty bracket
// payloads all the way down.
bool nonunitary_ok(const Word& w);
void check_mode(const Word& w, Mode mode);

struct WordStructLess {
  bool operator()(const Word& a, const Word& b) const {
    return Word::struct_cmp(a, b) < 0;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

// One layer of a context: the factors to the left and right of the hole (or
// of the bracket leading to the next layer).
struct ContextLayer {
  std::vector<Prime> prefix;
  std::vector<Prime> suffix;
};

// A bracketed word over X plus one hole, stored as the chain of layers from
// the root down to the hole. Consecutive layers are separated by a bracket,
// so the invariant "exactly one hole" holds by construction.
class Context {
 public:
  Context();  // the bare hole
  explicit Context(std::vector<ContextLayer> layers);

  const std::vector<ContextLayer>& layers() const { return layers_; }
  int hole_depth() const { return static_cast<int>(layers_.size()) - 1; }
  bool is_hole() const;

  Word substitute(const Word& u) const;

 private:
  std::vector<ContextLayer> layers_;
};

Word substitute(const Context& q, const Word& u);

// All pairs (q, s) with q|_s = w and s a contiguous run of factors at some
// nesting level. (hole, w) comes first, then levels outermost to innermost,
// brackets left to right, runs by (start, length).
std::vector<std::pair<Context, Word>> enumerate_contexts(const Word& w);

}  // namespace opalg
