#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xosim/valuation.hpp"

namespace xosim {

/// Optional generator metadata carried alongside an instance file.
struct Provenance {
  std::string construction;        // e.g. "tight", "hidden-bit", "random-bxos"
  std::string params_json;         // construction parameters as a JSON object
  uint64_t seed = 0;
  std::string hidden_json;         // withheld unless saved with reveal = true
};

struct Instance {
  std::vector<Valuation> players;
  std::optional<Provenance> provenance;

  int m() const { return players.empty() ? 0 : players[0].m(); }
  int n() const { return static_cast<int>(players.size()); }
};

/// Instance JSON: {"m": int, "players": [{"clauses": [...]}., ...]}.
/// A clause is either an array of m numbers or {"set": [indices]} for binary
/// clauses; the loader accepts both, the writer emits the compact set form
/// for binary clauses.
Instance load_instance(const std::string& path);
Instance parse_instance(const std::string& json_text);

std::string instance_to_json(const Instance& inst, bool reveal_hidden = false);
void save_instance(const Instance& inst, const std::string& path, bool reveal_hidden = false);

}  // namespace xosim
