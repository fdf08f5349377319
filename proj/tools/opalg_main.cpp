#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "opalg/io.hpp"
#include "opalg/presets.hpp"
#include "opalg/replay.hpp"

namespace {

using namespace opalg;

struct CommonOpts {
  std::string alphabet = "x,y,z";
  std::string order;
  std::string lambda;
  bool json = false;
};

std::optional<OrderKind> order_opt(const CommonOpts& c) {
  if (c.order.empty()) return std::nullopt;
  return order_from_name(c.order);
}

std::optional<Rational> lambda_opt(const CommonOpts& c) {
  if (c.lambda.empty()) return std::nullopt;
  return rational_from_string(c.lambda);
}

void add_common(CLI::App* cmd, CommonOpts& c, bool with_order = true,
                bool with_lambda = true) {
  cmd->add_option("--alphabet", c.alphabet,
                  "comma-separated letters, declaration order is the "
                  "well-order (default x,y,z)");
  if (with_order)
    cmd->add_option("--order", c.order, "monomial order: pll or plr");
  if (with_lambda)
    cmd->add_option("--lambda", c.lambda,
                    "evaluate the weight at a rational p/q "
                    "(default: symbolic)");
  cmd->add_flag("--json", c.json, "emit JSON");
}

int run_reduce(const std::string& system, const CommonOpts& c,
               const std::string& expr, bool trace) {
  RewriteSystem S = system_from_name(system, order_opt(c), lambda_opt(c));
  Alphabet alpha = Alphabet::from_csv(c.alphabet);
  OpPoly f = parse_poly(expr, alpha, S.mode);
  if (lambda_opt(c)) f = f.eval_lambda(*lambda_opt(c));
  ReductionTrace t = normal_form(S, f);
  if (trace) {
    for (const ReductionStep& step : t.steps)
      std::cout << "# " << step.rule << " at "
                << render_context(step.context, alpha) << " on "
                << render_word(step.monomial, alpha) << " coeff "
                << step.coeff.str() << "\n";
  }
  if (c.json)
    std::cout << poly_to_json(t.normal_form, alpha, S.order).dump() << "\n";
  else
    std::cout << render_poly(t.normal_form, alpha, S.order) << "\n";
  return 0;
}

int run_compare(const CommonOpts& c, const std::string& mode_name_opt,
                const std::string& lhs, const std::string& rhs) {
  OrderKind kind = order_opt(c).value_or(OrderKind::pll);
  Mode mode = mode_name_opt.empty() ? Mode::unitary
                                    : mode_from_name(mode_name_opt);
  Alphabet alpha = Alphabet::from_csv(c.alphabet);
  Word u = parse_word(lhs, alpha, mode);
  Word v = parse_word(rhs, alpha, mode);
  int r = cmp(kind, u, v);
  std::cout << (r < 0 ? "LT" : r > 0 ? "GT" : "EQ") << "\n";
  return 0;
}

int run_path(const CommonOpts& c, const std::string& mode_name_opt,
             const std::string& expr) {
  Mode mode = mode_name_opt.empty() ? Mode::unitary
                                    : mode_from_name(mode_name_opt);
  Alphabet alpha = Alphabet::from_csv(c.alphabet);
  Word w = parse_word(expr, alpha, mode);
  if (c.json) {
    auto tuple_json = [&](const std::vector<PathWord>& ps) {
      nlohmann::json arr = nlohmann::json::array();
      for (const PathWord& p : ps) {
        nlohmann::json pj = nlohmann::json::array();
        for (PathSymbol s : p)
          pj.push_back(s == kPathP    ? std::string("P")
                       : s == kPathMu ? std::string("mu")
                                      : alpha.name(s));
        arr.push_back(pj);
      }
      return arr;
    };
    std::cout << nlohmann::json({{"patl", tuple_json(patl(w))},
                                 {"patr", tuple_json(patr(w))}})
                     .dump()
              << "\n";
  } else {
    std::cout << "patl: " << render_paths(patl(w), alpha) << "\n";
    std::cout << "patr: " << render_paths(patr(w), alpha) << "\n";
  }
  return 0;
}

int run_leading(const CommonOpts& c, const std::string& mode_name_opt,
                const std::string& expr) {
  OrderKind kind = order_opt(c).value_or(OrderKind::pll);
  Mode mode = mode_name_opt.empty() ? Mode::unitary
                                    : mode_from_name(mode_name_opt);
  Alphabet alpha = Alphabet::from_csv(c.alphabet);
  OpPoly f = parse_poly(expr, alpha, mode);
  auto [w, coeff] = f.leading(kind);
  if (c.json) {
    std::cout << nlohmann::json({{"word", word_to_json(w, alpha)},
                                 {"coeff", laurent_to_json(coeff)}})
                     .dump()
              << "\n";
  } else {
    std::cout << "word: " << render_word(w, alpha) << "\n";
    std::cout << "coeff: " << coeff.str() << "\n";
  }
  return 0;
}

GsCheckOptions gs_opts(int fresh, int depth, int degx, int workers) {
  GsCheckOptions o;
  o.fresh_letters = fresh;
  o.max_depth = depth;
  o.max_degx = degx;
  o.workers = workers;
  return o;
}

int run_check_gs(const std::string& system, const CommonOpts& c, int fresh,
                 int depth, int degx, int workers) {
  RewriteSystem S = system_from_name(system, order_opt(c), lambda_opt(c));
  GsReport report = check_gs_bounded(S, gs_opts(fresh, depth, degx, workers));
  if (c.json)
    std::cout << report_to_json(report).dump(2) << "\n";
  else
    std::cout << report_to_text(report);
  return 0;
}

int run_compose(const std::string& system, const CommonOpts& c, int fresh,
                int depth, int degx) {
  RewriteSystem S = system_from_name(system, order_opt(c), lambda_opt(c));
  GsCheckOptions o = gs_opts(fresh, depth, degx, 1);
  Alphabet names;
  auto rules = bounded_instances(S, o, &names);
  std::vector<Composition> comps;
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = 0; j < rules.size(); ++j)
      for (Composition& comp :
           compositions_between(rules[i], rules[j], i == j)) {
        if (o.max_degx > 0 && comp.ambiguity.degx() > o.max_degx) continue;
        comps.push_back(std::move(comp));
      }
  if (c.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Composition& comp : comps)
      arr.push_back(
          {{"kind", comp.kind == CompKind::intersection ? "intersection"
                                                        : "inclusion"},
           {"ambiguity", render_word(comp.ambiguity, names)},
           {"rules", nlohmann::json::array({comp.left, comp.right})},
           {"composition", render_poly(comp.poly, names, S.order)}});
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const Composition& comp : comps)
      std::cout << (comp.kind == CompKind::intersection ? "intersection"
                                                        : "inclusion")
                << " w=" << render_word(comp.ambiguity, names)
                << " left=" << comp.left << " right=" << comp.right
                << " composition="
                << render_poly(comp.poly, names, S.order) << "\n";
    std::cout << comps.size() << " compositions\n";
  }
  return 0;
}

int run_enumerate_irr(const std::string& preset_name_str, const CommonOpts& c,
                      int letters, int brackets, bool count_only) {
  Preset preset =
      make_preset(preset_from_name(preset_name_str), order_opt(c),
                  lambda_opt(c));
  Alphabet alpha = Alphabet::from_csv(c.alphabet);
  if (count_only) {
    std::cout << count_irr(preset, letters, brackets, alpha.size()) << "\n";
    return 0;
  }
  auto words = enumerate_irr(preset, letters, brackets, alpha.size());
  if (c.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Word& w : words) arr.push_back(word_to_json(w, alpha));
    std::cout << arr.dump() << "\n";
  } else {
    for (const Word& w : words) std::cout << render_word(w, alpha) << "\n";
  }
  return 0;
}

int run_replay_cmd(const std::vector<std::string>& ids, bool all,
                   const std::string& catalog_path, bool json) {
  ReplayCatalog cat;
  if (catalog_path.empty()) {
    cat = builtin_catalog();
  } else {
    std::ifstream in(catalog_path);
    if (!in) throw Error("cannot open catalogue file " + catalog_path);
    std::stringstream buf;
    buf << in.rdbuf();
    cat = parse_catalog(buf.str());
  }
  std::vector<const ReplayEntry*> todo;
  if (all) {
    for (const ReplayEntry& e : cat.entries) todo.push_back(&e);
  } else {
    for (const std::string& id : ids) {
      const ReplayEntry* e = find_entry(cat, id);
      if (e == nullptr) throw Error("unknown replay id: " + id);
      todo.push_back(e);
    }
  }
  if (todo.empty()) throw Error("no replay ids given (try --all)");
  bool all_match = true;
  nlohmann::json out = nlohmann::json::array();
  for (const ReplayEntry* e : todo) {
    ReplayOutcome r = run_replay(cat, *e);
    all_match = all_match && r.matches_expected;
    if (json) {
      nlohmann::json nfs = nlohmann::json::array();
      for (const OpPoly& nf : r.normal_forms)
        nfs.push_back(render_poly(nf, cat.alphabet, r.order));
      out.push_back({{"id", e->id},
                     {"trivial", r.trivial},
                     {"expected_trivial", e->expect_trivial},
                     {"match", r.matches_expected},
                     {"normal_forms", nfs}});
    } else {
      std::cout << e->id << ": " << (r.trivial ? "TRIVIAL" : "NONTRIVIAL")
                << " (expected "
                << (e->expect_trivial ? "TRIVIAL" : "NONTRIVIAL") << ") "
                << (r.matches_expected ? "OK" : "MISMATCH");
      if (!r.trivial) {
        std::cout << " residue=";
        for (std::size_t i = 0; i < r.normal_forms.size(); ++i) {
          if (i > 0) std::cout << " | ";
          std::cout << render_poly(r.normal_forms[i], cat.alphabet, r.order);
        }
      }
      std::cout << "\n";
    }
  }
  if (json) std::cout << out.dump(2) << "\n";
  return all_match ? 0 : 1;
}

int run_verify_axiom(const std::string& preset_name_str, const CommonOpts& c,
                     const std::string& lhs, const std::string& rhs) {
  Preset preset = make_preset(preset_from_name(preset_name_str),
                              order_opt(c), lambda_opt(c));
  Alphabet alpha = Alphabet::from_csv(c.alphabet);
  Word u = parse_word(lhs, alpha, preset.system.mode);
  Word v = parse_word(rhs, alpha, preset.system.mode);
  std::cout << (verify_axiom(preset, u, v) ? "true" : "false") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "opalg: normal forms, monomial orders and critical-pair checks for "
      "operated algebras on bracketed words"};
  app.require_subcommand(1);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "reduce a polynomial to its "
                                              "normal form");
  CommonOpts rc;
  std::string r_system;
  std::string r_expr;
  bool r_trace = false;
  reduce->add_option("--preset,--system", r_system,
                     "rule system: diff0l diff0r difflambda mdiffl mdiffr "
                     "rbl rbr mrbl mrbr rb-unitary")
      ->required();
  reduce->add_option("expr", r_expr, "polynomial")->required();
  reduce->add_flag("--trace", r_trace, "print the reduction steps");
  add_common(reduce, rc);

  // compare
  auto* compare = app.add_subcommand("compare", "compare two words");
  CommonOpts cc;
  std::string c_mode;
  std::string c_lhs, c_rhs;
  compare->add_option("lhs", c_lhs)->required();
  compare->add_option("rhs", c_rhs)->required();
  compare->add_option("--mode", c_mode, "unitary or nonunitary");
  add_common(compare, cc, true, false);

  // path
  auto* path = app.add_subcommand("path", "letter paths of a word");
  CommonOpts pc;
  std::string p_mode;
  std::string p_expr;
  path->add_option("word", p_expr)->required();
  path->add_option("--mode", p_mode, "unitary or nonunitary");
  add_common(path, pc, false, false);

  // leading
  auto* leading = app.add_subcommand("leading", "leading monomial and "
                                                "coefficient");
  CommonOpts lc;
  std::string l_mode;
  std::string l_expr;
  leading->add_option("expr", l_expr)->required();
  leading->add_option("--mode", l_mode, "unitary or nonunitary");
  add_common(leading, lc, true, false);

  // check-gs
  auto* checkgs = app.add_subcommand(
      "check-gs", "enumerate and reduce all bounded compositions");
  CommonOpts gc;
  std::string g_system;
  int g_fresh = 3, g_depth = 1, g_degx = 0, g_workers = 1;
  checkgs->add_option("--preset,--system", g_system)->required();
  checkgs->add_option("--fresh-letters", g_fresh,
                      "fresh letters for instantiation (default 3)");
  checkgs->add_option("--max-depth", g_depth,
                      "bracket nesting in instantiations (default 1)");
  checkgs->add_option("--max-degx", g_degx,
                      "degree bound on ambiguities (0 = none)");
  checkgs->add_option("--workers", g_workers, "worker threads (default 1)");
  add_common(checkgs, gc);

  // compose
  auto* compose = app.add_subcommand(
      "compose", "list bounded compositions without reducing them");
  CommonOpts oc;
  std::string o_system;
  int o_fresh = 3, o_depth = 1, o_degx = 0;
  compose->add_option("--preset,--system", o_system)->required();
  compose->add_option("--fresh-letters", o_fresh);
  compose->add_option("--max-depth", o_depth);
  compose->add_option("--max-degx", o_degx);
  add_common(compose, oc);

  // enumerate-irr
  auto* enumirr = app.add_subcommand("enumerate-irr",
                                     "irreducible words by multidegree");
  CommonOpts ec;
  std::string e_preset;
  int e_letters = 0, e_brackets = 0;
  bool e_count = false;
  enumirr->add_option("--preset", e_preset)->required();
  enumirr->add_option("--letters", e_letters, "number of letters")
      ->required();
  enumirr->add_option("--brackets", e_brackets, "number of brackets")
      ->required();
  enumirr->add_flag("--count", e_count, "print only the count");
  add_common(enumirr, ec);

  // replay
  auto* replay = app.add_subcommand("replay",
                                    "run catalogued critical-pair "
                                    "computations");
  std::vector<std::string> y_ids;
  bool y_all = false;
  bool y_json = false;
  std::string y_catalog;
  replay->add_option("ids", y_ids, "catalogue ids");
  replay->add_flag("--all", y_all, "run every catalogue entry");
  replay->add_option("--catalog", y_catalog, "external catalogue file");
  replay->add_flag("--json", y_json, "emit JSON");

  // verify-axiom
  auto* verify = app.add_subcommand("verify-axiom",
                                    "check the defining identity on two "
                                    "words");
  CommonOpts vc;
  std::string v_preset, v_lhs, v_rhs;
  verify->add_option("--preset", v_preset)->required();
  verify->add_option("lhs", v_lhs)->required();
  verify->add_option("rhs", v_rhs)->required();
  add_common(verify, vc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*reduce) return run_reduce(r_system, rc, r_expr, r_trace);
    if (*compare) return run_compare(cc, c_mode, c_lhs, c_rhs);
    if (*path) return run_path(pc, p_mode, p_expr);
    if (*leading) return run_leading(lc, l_mode, l_expr);
    if (*checkgs)
      return run_check_gs(g_system, gc, g_fresh, g_depth, g_degx, g_workers);
    if (*compose) return run_compose(o_system, oc, o_fresh, o_depth, o_degx);
    if (*enumirr)
      return run_enumerate_irr(e_preset, ec, e_letters, e_brackets, e_count);
    if (*replay) return run_replay_cmd(y_ids, y_all, y_catalog, y_json);
    if (*verify) return run_verify_axiom(v_preset, vc, v_lhs, v_rhs);
  } catch (const opalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
