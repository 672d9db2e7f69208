#include "hkdual/ledger_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hkdual {

using nlohmann::json;

namespace {

std::vector<long> element_of(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array of integers");
  std::vector<long> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument(std::string(what) + " must hold integers");
    out.push_back(v.get<long>());
  }
  return out;
}

Integer integer_of(const json& j, const char* what) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>(), 10);
  throw std::invalid_argument(std::string(what) + " must be an integer");
}

json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

}  // namespace

FixedPointLedger parse_ledger(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("ledger is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("ledger must be a JSON object");
  if (doc.value("schemaVersion", 0) != kLedgerSchemaVersion)
    throw std::invalid_argument("unsupported ledger schemaVersion");

  FixedPointLedger ledger;
  if (!doc.contains("name") || !doc.at("name").is_string() || doc.at("name").get<std::string>().empty())
    throw std::invalid_argument("ledger needs a nonempty 'name' string");
  ledger.name = doc.at("name").get<std::string>();
  if (!doc.contains("group")) throw std::invalid_argument("ledger needs a 'group' field");
  ledger.group_factors = element_of(doc.at("group"), "group");
  if (doc.contains("eulerX")) ledger.euler_total = integer_of(doc.at("eulerX"), "eulerX");
  ledger.disjoint_fixed_sets = doc.value("disjointFixedSets", false);

  try {
    if (doc.contains("explicit")) {
      const auto& ex = doc.at("explicit");
      const auto count = ex.at("pointCount").get<std::size_t>();
      std::vector<std::vector<std::size_t>> gens;
      for (const auto& g : ex.at("generators")) gens.push_back(g.get<std::vector<std::size_t>>());
      ledger.action =
          GroupAction::from_generators(FiniteAbelianGroup(ledger.group_factors), count, gens);
    }
    if (doc.contains("fixed")) {
      for (const auto& e : doc.at("fixed")) {
        FixedPointEntry entry;
        entry.element = element_of(e.at("element"), "element");
        if (e.contains("points")) entry.cardinality = integer_of(e.at("points"), "points");
        if (e.contains("euler")) entry.euler = integer_of(e.at("euler"), "euler");
        ledger.entries.push_back(std::move(entry));
      }
    }
    if (doc.contains("stepwise")) {
      const auto& s = doc.at("stepwise");
      StepwiseQuotient step;
      step.first = element_of(s.at("first"), "stepwise.first");
      step.second = element_of(s.at("second"), "stepwise.second");
      if (s.contains("newFixedPoints"))
        step.declared_new_fixed = integer_of(s.at("newFixedPoints"), "newFixedPoints");
      ledger.stepwise = std::move(step);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed ledger: ") + e.what());
  }
  ledger.validate();
  return ledger;
}

FixedPointLedger load_ledger(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open ledger file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ledger(buf.str());
}

std::string ledger_to_text(const FixedPointLedger& ledger) {
  json doc;
  doc["schemaVersion"] = kLedgerSchemaVersion;
  doc["name"] = ledger.name;
  doc["group"] = ledger.group_factors;
  if (ledger.euler_total) doc["eulerX"] = integer_to_json(*ledger.euler_total);
  doc["disjointFixedSets"] = ledger.disjoint_fixed_sets;
  json fixed = json::array();
  for (const auto& e : ledger.entries) {
    json j;
    j["element"] = e.element;
    if (e.cardinality) j["points"] = integer_to_json(*e.cardinality);
    if (e.euler) j["euler"] = integer_to_json(*e.euler);
    fixed.push_back(std::move(j));
  }
  doc["fixed"] = std::move(fixed);
  if (ledger.action) {
    const auto& a = *ledger.action;
    json gens = json::array();
    for (std::size_t k = 0; k < a.group().factors().size(); ++k) {
      const std::size_t g = a.group().generator(k);
      std::vector<std::size_t> perm(a.set_size());
      for (std::size_t x = 0; x < a.set_size(); ++x) perm[x] = a.act(g, x);
      gens.push_back(perm);
    }
    doc["explicit"] = {{"pointCount", a.set_size()}, {"generators", std::move(gens)}};
  }
  if (ledger.stepwise) {
    json s;
    s["first"] = ledger.stepwise->first;
    s["second"] = ledger.stepwise->second;
    if (ledger.stepwise->declared_new_fixed)
      s["newFixedPoints"] = integer_to_json(*ledger.stepwise->declared_new_fixed);
    doc["stepwise"] = std::move(s);
  }
  return doc.dump(2) + "\n";
}

}  // namespace hkdual
