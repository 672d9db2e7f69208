#pragma once

#include <string>

#include "hkdual/quotient.hpp"

namespace hkdual {

inline constexpr int kLedgerSchemaVersion = 1;

/// Parses a ledger document (schema in docs/ledger_format.md). Throws
/// std::invalid_argument with a diagnostic on malformed or inconsistent input.
FixedPointLedger parse_ledger(const std::string& text);
FixedPointLedger load_ledger(const std::string& path);

/// Serializes with two-space indentation; parse_ledger(ledger_to_text(l))
/// reproduces l.
std::string ledger_to_text(const FixedPointLedger& ledger);

}  // namespace hkdual
