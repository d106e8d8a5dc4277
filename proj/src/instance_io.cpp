#include "xosim/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace xosim {

using nlohmann::json;

namespace {

Clause clause_from_json(const json& jc, int m) {
  if (jc.is_object()) {
    if (!jc.contains("set")) throw std::invalid_argument("instance JSON: clause object needs \"set\"");
    ItemSet supp(m);
    for (const auto& idx : jc.at("set")) {
      int i = idx.get<int>();
      if (i < 0 || i >= m) throw std::invalid_argument("instance JSON: item index out of range");
      supp.set(i);
    }
    return Clause(std::move(supp));
  }
  if (!jc.is_array() || static_cast<int>(jc.size()) != m)
    throw std::invalid_argument("instance JSON: clause must list exactly m values");
  std::vector<double> vals;
  vals.reserve(m);
  for (const auto& v : jc) vals.push_back(v.get<double>());
  return Clause(std::move(vals));
}

json clause_to_json(const Clause& c) {
  if (c.binary()) {
    json set = json::array();
    c.support().for_each([&](int i) { set.push_back(i); });
    return json{{"set", set}};
  }
  json arr = json::array();
  for (double v : c.dense_values()) {
    if (v == static_cast<long long>(v))
      arr.push_back(static_cast<long long>(v));
    else
      arr.push_back(v);
  }
  return arr;
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
  json j = json::parse(json_text);
  if (!j.contains("m") || !j.contains("players"))
    throw std::invalid_argument("instance JSON: needs \"m\" and \"players\"");
  int m = j.at("m").get<int>();
  Instance inst;
  for (const auto& jp : j.at("players")) {
    std::vector<Clause> clauses;
    for (const auto& jc : jp.at("clauses")) clauses.push_back(clause_from_json(jc, m));
    inst.players.emplace_back(std::move(clauses));
  }
  if (inst.players.empty()) throw std::invalid_argument("instance JSON: no players");
  if (j.contains("provenance")) {
    const auto& jp = j.at("provenance");
    Provenance prov;
    prov.construction = jp.value("construction", "");
    prov.seed = jp.value("seed", 0ULL);
    if (jp.contains("params")) prov.params_json = jp.at("params").dump();
    if (jp.contains("hidden")) prov.hidden_json = jp.at("hidden").dump();
    inst.provenance = std::move(prov);
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string instance_to_json(const Instance& inst, bool reveal_hidden) {
  json j;
  j["m"] = inst.m();
  json players = json::array();
  for (const auto& v : inst.players) {
    json clauses = json::array();
    for (const auto& c : v.clauses()) clauses.push_back(clause_to_json(c));
    players.push_back(json{{"clauses", clauses}});
  }
  j["players"] = players;
  if (inst.provenance) {
    json prov;
    prov["construction"] = inst.provenance->construction;
    prov["seed"] = inst.provenance->seed;
    if (!inst.provenance->params_json.empty())
      prov["params"] = json::parse(inst.provenance->params_json);
    if (reveal_hidden && !inst.provenance->hidden_json.empty())
      prov["hidden"] = json::parse(inst.provenance->hidden_json);
    j["provenance"] = prov;
  }
  // Compact form: adversarial instances carry thousands of large clauses.
  return j.dump() + "\n";
}

void save_instance(const Instance& inst, const std::string& path, bool reveal_hidden) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << instance_to_json(inst, reveal_hidden);
}

}  // namespace xosim
