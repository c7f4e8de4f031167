#pragma once

#include <json.hpp>

#include "sbmtest/gof.hpp"
#include "sbmtest/select.hpp"

namespace sbmtest {

/// Stable JSON document for a test result. Field names are part of the
/// external interface and documented in the README.
nlohmann::json to_json(const GofTestResult& result);

/// Full scan trace for audit.
nlohmann::json to_json(const KEstimateResult& result);

}  // namespace sbmtest
