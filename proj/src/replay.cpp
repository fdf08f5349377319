#include "opalg/replay.hpp"

#include "opalg/io.hpp"
#include "replay_catalog_data.hpp"

namespace opalg {

ReplayCatalog parse_catalog(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw Error(std::string("bad catalogue JSON: ") + e.what());
  }
  ReplayCatalog cat;
  cat.alphabet = Alphabet::from_csv(j.at("alphabet").get<std::string>());
  for (const auto& je : j.at("entries")) {
    ReplayEntry e;
    e.id = je.at("id").get<std::string>();
    e.system = je.at("system").get<std::string>();
    auto side = [](const nlohmann::json& js) {
      ReplaySide s;
      s.schema = js.at("schema").get<std::string>();
      if (js.contains("x")) s.x = js.at("x").get<std::string>();
      if (js.contains("y")) s.y = js.at("y").get<std::string>();
      return s;
    };
    e.left = side(je.at("left"));
    e.right = side(je.at("right"));
    const std::string expect = je.at("expect").get<std::string>();
    if (expect == "trivial")
      e.expect_trivial = true;
    else if (expect == "nontrivial")
      e.expect_trivial = false;
    else
      throw Error("catalogue entry " + e.id + ": bad expect '" + expect + "'");
    if (je.contains("note")) e.note = je.at("note").get<std::string>();
    cat.entries.push_back(std::move(e));
  }
  return cat;
}

const ReplayCatalog& builtin_catalog() {
  static const ReplayCatalog cat = parse_catalog(detail::kReplayCatalogJson);
  return cat;
}

const ReplayEntry* find_entry(const ReplayCatalog& cat,
                              const std::string& id) {
  for (const ReplayEntry& e : cat.entries)
    if (e.id == id) return &e;
  return nullptr;
}

namespace {

InstRule build_side(const RewriteSystem& S, const ReplaySide& side,
                    const Alphabet& alphabet) {
  const RuleSchema* schema = nullptr;
  for (const RuleSchema& s : S.schemas)
    if (s.name == side.schema) {
      schema = &s;
      break;
    }
  if (schema == nullptr)
    throw Error("system " + S.name + " has no rule '" + side.schema + "'");
  Binding b;
  if (side.x) b[0] = parse_word(*side.x, alphabet, S.mode);
  if (side.y) b[1] = parse_word(*side.y, alphabet, S.mode);
  for (int v = 0; v < schema->vars; ++v)
    if (!b[static_cast<std::size_t>(v)])
      throw Error("rule '" + schema->name + "' needs " +
                  (v == 0 ? std::string("x") : std::string("y")));
  return instantiate_rule(S, *schema, b, alphabet);
}

}  // namespace

ReplayOutcome run_replay(const ReplayCatalog& cat, const ReplayEntry& entry) {
  const RewriteSystem S = system_from_name(entry.system);
  InstRule left = build_side(S, entry.left, cat.alphabet);
  InstRule right = build_side(S, entry.right, cat.alphabet);
  const bool same =
      left.lead == right.lead && left.poly == right.poly;
  ReplayOutcome out;
  out.order = S.order;
  out.compositions = compositions_between(left, right, same);
  if (out.compositions.empty())
    throw Error("catalogue entry " + entry.id + " yields no compositions");
  out.trivial = true;
  for (const Composition& c : out.compositions) {
    OpPoly nf = normal_form(S, c.poly).normal_form;
    if (!nf.is_zero()) out.trivial = false;
    out.normal_forms.push_back(std::move(nf));
  }
  out.matches_expected = out.trivial == entry.expect_trivial;
  return out;
}

}  // namespace opalg
