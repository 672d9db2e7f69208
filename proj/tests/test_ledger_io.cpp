#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hkdual/ledger_io.hpp"

using namespace hkdual;

namespace {

std::string data_path(const std::string& name) { return std::string(HKDUAL_DATA_DIR) + "/ledgers/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void check_same_report(const FixedPointLedger& a, const FixedPointLedger& b) {
  const auto ra = singularity_report(a);
  const auto rb = singularity_report(b);
  CHECK(ra.stepwise_count == rb.stepwise_count);
  CHECK(ra.burnside_count == rb.burnside_count);
  CHECK(ra.discrepancy == rb.discrepancy);
  CHECK(ra.per_stabilizer == rb.per_stabilizer);
}

}  // namespace

TEST_CASE("built-in ledgers round-trip through text") {
  for (const auto& ledger : {kummer_translation_model(), kummer_declared_ledger()}) {
    const auto text = ledger_to_text(ledger);
    const auto back = parse_ledger(text);
    CHECK(ledger_to_text(back) == text);
    check_same_report(ledger, back);
    CHECK(back.name == ledger.name);
    CHECK(back.group_factors == ledger.group_factors);
    CHECK(back.action.has_value() == ledger.action.has_value());
  }
}

TEST_CASE("shipped ledger files match the built-in ledgers") {
  const auto model = load_ledger(data_path("kum2_model.json"));
  const auto declared = load_ledger(data_path("kum2_declared.json"));
  CHECK(read_file(data_path("kum2_model.json")) == ledger_to_text(kummer_translation_model()));
  CHECK(read_file(data_path("kum2_declared.json")) == ledger_to_text(kummer_declared_ledger()));
  check_same_report(model, kummer_translation_model());
  check_same_report(declared, kummer_declared_ledger());
  CHECK(singularity_report(declared).stepwise_count == Integer(18));
  CHECK(singularity_report(model).burnside_count == Integer(36));
}

TEST_CASE("large integers survive as strings") {
  auto ledger = kummer_declared_ledger();
  ledger.euler_total = Integer("123456789012345678901234567890");
  const auto back = parse_ledger(ledger_to_text(ledger));
  CHECK(back.euler_total == ledger.euler_total);
}

TEST_CASE("malformed ledgers are rejected") {
  const auto good = ledger_to_text(kummer_declared_ledger());
  CHECK_NOTHROW(parse_ledger(good));
  CHECK_THROWS_AS(parse_ledger("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ledger("[]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ledger(R"({"schemaVersion": 2, "name": "x", "group": [3]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ledger(R"({"schemaVersion": 1, "group": [3]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ledger(R"({"schemaVersion": 1, "name": "x", "group": [3], "disjointFixedSets": false,
    "fixed": [{"element": [1], "points": 3}, {"element": [2], "points": 4}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_ledger(R"({"schemaVersion": 1, "name": "x", "group": [3], "disjointFixedSets": false,
    "fixed": [{"element": [1], "points": "abc"}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_ledger(R"({"schemaVersion": 1, "name": "x", "group": [3], "disjointFixedSets": false,
    "fixed": [], "explicit": {"pointCount": 3, "generators": [[0, 0, 1]]}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_ledger(data_path("does_not_exist.json")), std::invalid_argument);
}
