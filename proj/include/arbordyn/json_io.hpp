#pragma once

#include <string>

#include "json.hpp"

#include "arbordyn/galois.hpp"
#include "arbordyn/insep.hpp"
#include "arbordyn/orbit.hpp"
#include "arbordyn/polyfactor.hpp"
#include "arbordyn/zsig.hpp"

namespace arbordyn {

/// Version tag carried by every CLI report and checked by the validator.
inline constexpr const char* kSchemaVersion = "arbordyn-report/1";

nlohmann::ordered_json to_json(const Factorization& f, const FieldDesc& fd);
nlohmann::ordered_json to_json(const InsepReport& r);
nlohmann::ordered_json to_json(const BoundConstants& b);
nlohmann::ordered_json to_json(const EffectiveBound& e);
nlohmann::ordered_json to_json(const ZsigmondyReport& r);
nlohmann::ordered_json to_json(const ExceptionalPrimes& e);
nlohmann::ordered_json to_json(const GlobalBound& g);
nlohmann::ordered_json to_json(const StollReport& s);
nlohmann::ordered_json to_json(const MasonStothersReport& m);
nlohmann::ordered_json to_json(const JonesReport& j);
nlohmann::ordered_json to_json(const DiscRecursionReport& d);

/// Wrap a payload as a versioned report for the given command verb.
nlohmann::ordered_json wrap_report(const std::string& command, nlohmann::ordered_json payload);

struct SchemaCheck {
    bool ok = false;
    std::string reason;
};

/// Validate a report against the shipped schema (path to the schema JSON).
/// Checks the version tag (mismatches get a version-mismatch reason), the
/// command, and presence plus JSON type of every required field.
SchemaCheck schema_validate(const nlohmann::json& report, const std::string& schema_path);

}  // namespace arbordyn
