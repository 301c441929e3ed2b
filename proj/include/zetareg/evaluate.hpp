#pragma once

#include "zetareg/query.hpp"
#include "zetareg/special.hpp"

#include <json.hpp>

#include <string>

namespace zetareg::cli {

struct EvalOptions {
    special::EvalPrecision precision;
    long truncation = 200; // certificate depth for non-integer mu
};

// Dispatches a parsed query to the engine and assembles a result document:
// exact text when available, 12-digit decimal, branch/certificate data and a
// "route" field naming the derivation used.  Domain failures throw Error.
nlohmann::json evaluate(const QueryAst& ast, const EvalOptions& opts = {});

// Deterministic renderings of a result document.
std::string render_text(const nlohmann::json& doc);
std::string render_csv(const nlohmann::json& doc);

} // namespace zetareg::cli
