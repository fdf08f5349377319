#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "opalg/poly.hpp"

namespace opalg {

// A rule pattern: a word shape over at most two metavariables. A variable
// factor binds a contiguous run of factors (a whole subword); a bracket
// factor matches a bracket whose payload matches the inner pattern. The
// empty pattern is the unit, so a bracket around the empty pattern is the
// bracketed unit constant.
struct Pattern {
  struct Factor {
    int var = -1;
    std::shared_ptr<const Pattern> inner;  // non-null iff bracket
    bool is_var() const { return var >= 0; }
  };
  std::vector<Factor> factors;
};

Pattern pat_var(int id);
Pattern pat_unit();
Pattern pat_bracket(const Pattern& p);
Pattern pat_cat(std::vector<Pattern> parts);

using Binding = std::array<std::optional<Word>, 2>;

Word instantiate(const Pattern& p, const Binding& b);

// One rewrite-rule family: lead rewrites to the rhs combination. The rule
// polynomial lead - rhs is monic by construction. allow_unit controls
// whether a metavariable may bind the unit (only meaningful in unitary
// sessions).
struct RuleSchema {
  std::string name;
  Pattern lead;
  std::vector<std::pair<Laurent, Pattern>> rhs;
  std::array<bool, 2> allow_unit{{false, false}};
  int vars = 0;

  OpPoly rule_poly(const Binding& b) const;
  OpPoly rhs_poly(const Binding& b) const;
  RuleSchema with_lambda(const Rational& value) const;
};

struct RewriteSystem {
  std::string name;
  Mode mode = Mode::unitary;
  OrderKind order = OrderKind::pll;
  std::vector<RuleSchema> schemas;
};

// All bindings of p against exactly the word w (anchored both ends), in
// deterministic order (variables take the shortest admissible run first).
std::vector<Binding> match_pattern(const Pattern& p, const Word& w,
                                   const std::array<bool, 2>& allow_unit);

struct MatchHit {
  const RuleSchema* schema = nullptr;
  Context context;
  Binding binding;
  Word redex;  // the matched subword, equal to the instantiated lead
};

// Every way any schema lead matches a run of w at any nesting level,
// ordered by context (see enumerate_contexts), then schema, then binding.
std::vector<MatchHit> find_matches(const RewriteSystem& S, const Word& w);
std::optional<MatchHit> first_match(const RewriteSystem& S, const Word& w);
bool is_irreducible(const RewriteSystem& S, const Word& w);

struct ReductionStep {
  Context context;
  std::string rule;
  Binding binding;
  Laurent coeff;  // coefficient of the rewritten monomial
  Word monomial;  // the monomial that was rewritten
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  OpPoly normal_form;
};

struct ReduceOptions {
  std::uint64_t step_limit = 1'000'000;
  // When set, picks a random reducible monomial and a random match instead
  // of the canonical largest-first strategy.
  std::mt19937_64* rng = nullptr;
};

// Repeatedly rewrites the largest reducible monomial until none is left.
ReductionTrace normal_form(const RewriteSystem& S, const OpPoly& f,
                           const ReduceOptions& opts = {});

bool ideal_member(const RewriteSystem& S, const OpPoly& f,
                  ReductionTrace* trace = nullptr);

// A concrete rule: a schema instantiated at concrete words.
struct InstRule {
  std::string label;
  OpPoly poly;  // monic
  Word lead;
};

InstRule instantiate_rule(const RewriteSystem& S, const RuleSchema& schema,
                          const Binding& b, const Alphabet& names);

enum class CompKind { intersection, inclusion };

struct Composition {
  CompKind kind = CompKind::intersection;
  Word ambiguity;
  std::string left;
  std::string right;
  Context context;  // where the right lead sits (inclusions) or the overlap
  OpPoly poly;
};

// Critical pairs of the ordered pair (f, g): overlaps w = lead(f) u = v
// lead(g) with a proper two-sided overlap, and occurrences of lead(g) inside
// lead(f). A self-pair at the trivial context is skipped.
std::vector<Composition> compositions_between(const InstRule& f,
                                              const InstRule& g,
                                              bool same_rule);

struct GsCheckOptions {
  int fresh_letters = 3;
  int max_depth = 1;    // bracket nesting allowed in instantiations
  int max_degx = 0;     // 0 = no bound on the ambiguity degree
  int workers = 1;
  std::uint64_t step_limit = 1'000'000;
};

struct GsEntry {
  Composition comp;
  OpPoly nf;
  bool trivial = false;
};

struct GsReport {
  std::string system;
  OrderKind order = OrderKind::pll;
  Alphabet fresh;
  std::vector<GsEntry> entries;
  bool all_trivial() const;
};

// Metavariable instantiation pool: fresh letters nested up to max_depth
// brackets, plus nests of the bracketed unit in unitary mode.
std::vector<Word> instantiation_pool(const RewriteSystem& S,
                                     const GsCheckOptions& opts);
std::vector<InstRule> bounded_instances(const RewriteSystem& S,
                                        const GsCheckOptions& opts,
                                        Alphabet* fresh_names);

// Enumerates every composition among the bounded instances and reduces each
// one; entries are sorted deterministically regardless of worker count.
GsReport check_gs_bounded(const RewriteSystem& S,
                          const GsCheckOptions& opts = {});

struct LedgerViolation {
  std::string rule;
  Binding binding;
  Word lead;
  Word offender;  // remainder monomial not below the lead
};

// Samples random admissible instantiations of every schema and checks that
// each remainder monomial is strictly below the instantiated lead.
std::vector<LedgerViolation> check_termination_ledger(const RewriteSystem& S,
                                                      int samples,
                                                      std::mt19937_64& rng);

}  // namespace opalg
