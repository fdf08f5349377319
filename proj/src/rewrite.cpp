#include "opalg/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <unordered_map>

#include "opalg/io.hpp"
#include "opalg/sampling.hpp"

namespace opalg {

Pattern pat_var(int id) {
  if (id < 0 || id > 1) throw Error("pattern variables are 0 or 1");
  Pattern p;
  Pattern::Factor f;
  f.var = id;
  p.factors.push_back(std::move(f));
  return p;
}

Pattern pat_unit() { return Pattern{}; }

Pattern pat_bracket(const Pattern& p) {
  Pattern out;
  Pattern::Factor f;
  f.inner = std::make_shared<const Pattern>(p);
  out.factors.push_back(std::move(f));
  return out;
}

Pattern pat_cat(std::vector<Pattern> parts) {
  Pattern out;
  for (Pattern& p : parts)
    out.factors.insert(out.factors.end(), p.factors.begin(), p.factors.end());
  return out;
}

Word instantiate(const Pattern& p, const Binding& b) {
  std::vector<Prime> fs;
  for (const Pattern::Factor& f : p.factors) {
    if (f.is_var()) {
      const auto& w = b[static_cast<std::size_t>(f.var)];
      if (!w) throw Error("unbound pattern variable");
      fs.insert(fs.end(), w->factors().begin(), w->factors().end());
    } else {
      Prime pr;
      pr.inner = instantiate(*f.inner, b).node();
      fs.push_back(std::move(pr));
    }
  }
  return Word::from_factors(std::move(fs));
}

OpPoly RuleSchema::rhs_poly(const Binding& b) const {
  OpPoly out;
  for (const auto& [c, p] : rhs) out.add_term(instantiate(p, b), c);
  return out;
}

OpPoly RuleSchema::rule_poly(const Binding& b) const {
  OpPoly out(instantiate(lead, b));
  out -= rhs_poly(b);
  return out;
}

RuleSchema RuleSchema::with_lambda(const Rational& value) const {
  RuleSchema out = *this;
  for (auto& [c, p] : out.rhs) c = c.eval(value);
  std::erase_if(out.rhs,
                [](const auto& item) { return item.first.is_zero(); });
  return out;
}

namespace {

struct Matcher {
  const std::array<bool, 2>& allow_unit;
  Binding bind;
  std::vector<Binding>* out = nullptr;

  void seq(const std::vector<Pattern::Factor>& pf, std::size_t pi,
           const std::vector<Prime>& wf, std::size_t wi,
           const std::function<void()>& k) {
    if (pi == pf.size()) {
      if (wi == wf.size()) k();
      return;
    }
    const Pattern::Factor& f = pf[pi];
    if (f.is_var()) {
      auto& slot = bind[static_cast<std::size_t>(f.var)];
      if (slot) {  // repeated variable: require the same run again
        const auto& bw = slot->factors();
        if (wi + bw.size() > wf.size()) return;
        Word here = Word::from_factors(
            std::vector<Prime>(wf.begin() + static_cast<long>(wi),
                               wf.begin() + static_cast<long>(wi + bw.size())));
        if (!(here == *slot)) return;
        seq(pf, pi + 1, wf, wi + bw.size(), k);
        return;
      }
      const std::size_t lo =
          allow_unit[static_cast<std::size_t>(f.var)] ? 0 : 1;
      for (std::size_t len = lo; wi + len <= wf.size(); ++len) {
        slot = Word::from_factors(
            std::vector<Prime>(wf.begin() + static_cast<long>(wi),
                               wf.begin() + static_cast<long>(wi + len)));
        seq(pf, pi + 1, wf, wi + len, k);
        slot.reset();
      }
      return;
    }
    if (wi >= wf.size() || wf[wi].is_letter()) return;
    seq(f.inner->factors, 0, wf[wi].inner->factors, 0,
        [&] { seq(pf, pi + 1, wf, wi + 1, k); });
  }
};

}  // namespace

std::vector<Binding> match_pattern(const Pattern& p, const Word& w,
                                   const std::array<bool, 2>& allow_unit) {
  std::vector<Binding> out;
  Matcher m{allow_unit, {}, &out};
  m.seq(p.factors, 0, w.factors(), 0, [&] { out.push_back(m.bind); });
  return out;
}

std::vector<MatchHit> find_matches(const RewriteSystem& S, const Word& w) {
  std::vector<MatchHit> hits;
  for (const auto& [q, s] : enumerate_contexts(w)) {
    for (const RuleSchema& schema : S.schemas) {
      for (Binding& b : match_pattern(schema.lead, s, schema.allow_unit)) {
        MatchHit hit;
        hit.schema = &schema;
        hit.context = q;
        hit.binding = std::move(b);
        hit.redex = s;
        hits.push_back(std::move(hit));
      }
    }
  }
  return hits;
}

std::optional<MatchHit> first_match(const RewriteSystem& S, const Word& w) {
  for (const auto& [q, s] : enumerate_contexts(w)) {
    for (const RuleSchema& schema : S.schemas) {
      auto bs = match_pattern(schema.lead, s, schema.allow_unit);
      if (bs.empty()) continue;
      MatchHit hit;
      hit.schema = &schema;
      hit.context = q;
      hit.binding = std::move(bs.front());
      hit.redex = s;
      return hit;
    }
  }
  return std::nullopt;
}

bool is_irreducible(const RewriteSystem& S, const Word& w) {
  return !first_match(S, w).has_value();
}

namespace {

struct WordEq {
  bool operator()(const Word& a, const Word& b) const { return a == b; }
};

using ReducibleMemo = std::unordered_map<Word, bool, WordHash, WordEq>;

bool reducible(const RewriteSystem& S, const Word& w, ReducibleMemo& memo) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  bool r = first_match(S, w).has_value();
  memo.emplace(w, r);
  return r;
}

}  // namespace

ReductionTrace normal_form(const RewriteSystem& S, const OpPoly& f,
                           const ReduceOptions& opts) {
  f.check_mode(S.mode);
  ReductionTrace trace;
  OpPoly cur = f;
  ReducibleMemo memo;
  std::uint64_t steps = 0;
  for (;;) {
    Word chosen;
    bool found = false;
    if (opts.rng == nullptr) {
      for (const auto& [w, c] : cur.terms()) {
        if (!reducible(S, w, memo)) continue;
        if (!found || cmp(S.order, w, chosen) > 0) {
          chosen = w;
          found = true;
        }
      }
    } else {
      std::vector<Word> reds;
      for (const auto& [w, c] : cur.terms())
        if (reducible(S, w, memo)) reds.push_back(w);
      if (!reds.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, reds.size() - 1);
        chosen = reds[pick(*opts.rng)];
        found = true;
      }
    }
    if (!found) break;
    if (++steps > opts.step_limit)
      throw Error(
          "reduction exceeded the step limit; the rule set does not descend "
          "under the session order");

    MatchHit hit;
    if (opts.rng == nullptr) {
      hit = *first_match(S, chosen);
    } else {
      auto hits = find_matches(S, chosen);
      std::uniform_int_distribution<std::size_t> pick(0, hits.size() - 1);
      hit = hits[pick(*opts.rng)];
    }
    const Laurent c = cur.coeff(chosen);
    OpPoly placed =
        substitute_poly(hit.context, hit.schema->rule_poly(hit.binding));
    cur -= placed.scaled(c);

    ReductionStep step;
    step.context = hit.context;
    step.rule = hit.schema->name;
    step.binding = hit.binding;
    step.coeff = c;
    step.monomial = chosen;
    trace.steps.push_back(std::move(step));
  }
  trace.normal_form = std::move(cur);
  return trace;
}

bool ideal_member(const RewriteSystem& S, const OpPoly& f,
                  ReductionTrace* trace) {
  ReductionTrace t = normal_form(S, f);
  const bool member = t.normal_form.is_zero();
  if (trace != nullptr) *trace = std::move(t);
  return member;
}

InstRule instantiate_rule(const RewriteSystem& S, const RuleSchema& schema,
                          const Binding& b, const Alphabet& names) {
  InstRule r;
  r.poly = schema.rule_poly(b);
  r.lead = instantiate(schema.lead, b);
  auto [lw, lc] = r.poly.leading(S.order);
  if (!(lw == r.lead) || !lc.is_one())
    throw Error("rule '" + schema.name +
                "' is not oriented by its lead under " + order_name(S.order) +
                " at " + render_word(r.lead, names));
  r.label = schema.name;
  if (schema.vars > 0) {
    r.label += "(";
    for (int v = 0; v < schema.vars; ++v) {
      if (v > 0) r.label += ", ";
      r.label += render_word(*b[static_cast<std::size_t>(v)], names);
    }
    r.label += ")";
  }
  return r;
}

std::vector<Composition> compositions_between(const InstRule& f,
                                              const InstRule& g,
                                              bool same_rule) {
  std::vector<Composition> out;
  const auto& lf = f.lead.factors();
  const auto& lg = g.lead.factors();

  // Overlaps lead(f) u = v lead(g) with a proper two-sided overlap.
  const int nf = static_cast<int>(lf.size());
  const int ng = static_cast<int>(lg.size());
  for (int o = 1; o < std::min(nf, ng); ++o) {
    bool match = true;
    for (int i = 0; i < o && match; ++i) {
      const Prime& a = lf[static_cast<std::size_t>(nf - o + i)];
      const Prime& b = lg[static_cast<std::size_t>(i)];
      match = prime_word(a) == prime_word(b);
    }
    if (!match) continue;
    Word u = g.lead.subrange(o, ng - o);
    Word v = f.lead.subrange(0, nf - o);
    Composition comp;
    comp.kind = CompKind::intersection;
    comp.ambiguity = Word::concat(f.lead, u);
    comp.left = f.label;
    comp.right = g.label;
    ContextLayer layer;
    layer.suffix = u.factors();
    comp.context = Context({layer});  // where lead(f) sits in the ambiguity
    comp.poly = poly_mul(f.poly, OpPoly(u)) - poly_mul(OpPoly(v), g.poly);
    out.push_back(std::move(comp));
  }

  // Occurrences of lead(g) inside lead(f).
  for (const auto& [q, s] : enumerate_contexts(f.lead)) {
    if (!(s == g.lead)) continue;
    if (same_rule && q.is_hole()) continue;
    Composition comp;
    comp.kind = CompKind::inclusion;
    comp.ambiguity = f.lead;
    comp.left = f.label;
    comp.right = g.label;
    comp.context = q;
    comp.poly = f.poly - substitute_poly(q, g.poly);
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Word> instantiation_pool(const RewriteSystem& S,
                                     const GsCheckOptions& opts) {
  std::vector<Word> pool;
  for (int j = 0; j <= opts.max_depth; ++j)
    for (int l = 0; l < opts.fresh_letters; ++l) {
      Word w = Word::letter(l);
      for (int k = 0; k < j; ++k) w = Word::bracket(w);
      pool.push_back(w);
    }
  if (S.mode == Mode::unitary) {
    for (int j = 1; j <= opts.max_depth; ++j) {
      Word w;
      for (int k = 0; k < j; ++k) w = Word::bracket(w);
      pool.push_back(w);
    }
  }
  return pool;
}

namespace {

Alphabet fresh_alphabet(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    std::string name(1, static_cast<char>('a' + i % 26));
    if (i >= 26) name += std::to_string(i / 26);
    names.push_back(name);
  }
  return Alphabet(std::move(names));
}

}  // namespace

std::vector<InstRule> bounded_instances(const RewriteSystem& S,
                                        const GsCheckOptions& opts,
                                        Alphabet* fresh_names) {
  Alphabet fresh = fresh_alphabet(opts.fresh_letters);
  if (fresh_names != nullptr) *fresh_names = fresh;
  std::vector<Word> pool = instantiation_pool(S, opts);
  std::vector<InstRule> rules;
  auto push_unique = [&](InstRule r) {
    for (const InstRule& have : rules)
      if (have.lead == r.lead && have.poly == r.poly) return;
    rules.push_back(std::move(r));
  };
  for (const RuleSchema& schema : S.schemas) {
    if (schema.vars == 0) {
      push_unique(instantiate_rule(S, schema, {}, fresh));
      continue;
    }
    std::vector<Word> first_choices = pool;
    if (schema.allow_unit[0] && S.mode == Mode::unitary)
      first_choices.insert(first_choices.begin(), Word());
    for (const Word& x : first_choices) {
      if (schema.vars == 1) {
        Binding b;
        b[0] = x;
        push_unique(instantiate_rule(S, schema, b, fresh));
        continue;
      }
      std::vector<Word> second_choices = pool;
      if (schema.allow_unit[1] && S.mode == Mode::unitary)
        second_choices.insert(second_choices.begin(), Word());
      for (const Word& y : second_choices) {
        Binding b;
        b[0] = x;
        b[1] = y;
        push_unique(instantiate_rule(S, schema, b, fresh));
      }
    }
  }
  return rules;
}

namespace {

// Unique sort key for a context: plant a marker letter in the hole.
Word context_marker_word(const Context& q) {
  return q.substitute(Word::letter((1 << 20) + 7));
}

}  // namespace

bool GsReport::all_trivial() const {
  for (const GsEntry& e : entries)
    if (!e.trivial) return false;
  return true;
}

GsReport check_gs_bounded(const RewriteSystem& S, const GsCheckOptions& opts) {
  GsReport report;
  report.system = S.name;
  report.order = S.order;
  auto rules = bounded_instances(S, opts, &report.fresh);

  std::vector<Composition> comps;
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = 0; j < rules.size(); ++j)
      for (Composition& c : compositions_between(rules[i], rules[j], i == j)) {
        if (opts.max_degx > 0 && c.ambiguity.degx() > opts.max_degx) continue;
        comps.push_back(std::move(c));
      }

  std::vector<GsEntry> entries(comps.size());
  const int workers = std::max(1, opts.workers);
  auto run = [&](int t) {
    ReduceOptions ropts;
    ropts.step_limit = opts.step_limit;
    for (std::size_t k = static_cast<std::size_t>(t); k < comps.size();
         k += static_cast<std::size_t>(workers)) {
      GsEntry e;
      e.comp = comps[k];
      e.nf = normal_form(S, comps[k].poly, ropts).normal_form;
      e.trivial = e.nf.is_zero();
      entries[k] = std::move(e);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool_threads;
    pool_threads.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool_threads.emplace_back(run, t);
    for (auto& th : pool_threads) th.join();
  }

  std::sort(entries.begin(), entries.end(),
            [&](const GsEntry& a, const GsEntry& b) {
              int c = cmp(S.order, a.comp.ambiguity, b.comp.ambiguity);
              if (c != 0) return c < 0;
              if (a.comp.kind != b.comp.kind)
                return a.comp.kind < b.comp.kind;
              if (a.comp.left != b.comp.left) return a.comp.left < b.comp.left;
              if (a.comp.right != b.comp.right)
                return a.comp.right < b.comp.right;
              return Word::struct_cmp(context_marker_word(a.comp.context),
                                      context_marker_word(b.comp.context)) < 0;
            });
  report.entries = std::move(entries);
  return report;
}

std::vector<LedgerViolation> check_termination_ledger(const RewriteSystem& S,
                                                      int samples,
                                                      std::mt19937_64& rng) {
  std::vector<LedgerViolation> out;
  WordGenOptions gen;
  gen.alphabet_size = 3;
  gen.max_letters = 3;
  gen.max_depth = 2;
  gen.mode = S.mode;
  for (const RuleSchema& schema : S.schemas) {
    for (int s = 0; s < samples; ++s) {
      Binding b;
      for (int v = 0; v < schema.vars; ++v)
        b[static_cast<std::size_t>(v)] = random_word(rng, gen);
      Word lead = instantiate(schema.lead, b);
      OpPoly rhs = schema.rhs_poly(b);
      for (const auto& [w, c] : rhs.terms()) {
        if (cmp(S.order, w, lead) < 0) continue;
        LedgerViolation v;
        v.rule = schema.name;
        v.binding = b;
        v.lead = lead;
        v.offender = w;
        out.push_back(std::move(v));
      }
      if (schema.vars == 0) break;  // nothing to sample
    }
  }
  return out;
}

}  // namespace opalg
