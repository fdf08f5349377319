#pragma once

#include <optional>

#include "opalg/presets.hpp"

namespace opalg {

// A catalogued critical-pair computation: two concrete rule instances whose
// compositions have a known outcome.
struct ReplaySide {
  std::string schema;
  std::optional<std::string> x;
  std::optional<std::string> y;
};

struct ReplayEntry {
  std::string id;
  std::string system;
  ReplaySide left;
  ReplaySide right;
  bool expect_trivial = true;
  std::string note;
};

struct ReplayCatalog {
  Alphabet alphabet;
  std::vector<ReplayEntry> entries;
};

ReplayCatalog parse_catalog(const std::string& json_text);
const ReplayCatalog& builtin_catalog();
const ReplayEntry* find_entry(const ReplayCatalog& cat, const std::string& id);

struct ReplayOutcome {
  bool trivial = false;
  bool matches_expected = false;
  std::vector<Composition> compositions;
  std::vector<OpPoly> normal_forms;
  OrderKind order = OrderKind::pll;
};

ReplayOutcome run_replay(const ReplayCatalog& cat, const ReplayEntry& entry);

}  // namespace opalg
