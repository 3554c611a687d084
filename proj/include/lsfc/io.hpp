#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "lsfc/bounds.hpp"
#include "lsfc/oracle.hpp"
#include "lsfc/scheme.hpp"
#include "lsfc/simulator.hpp"

namespace lsfc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "lsfc-report/1";

/// {"field": {"kind": "prime", "q": 11}, "matrix": [[...]]}; rational
/// entries may be "num/den" strings.
struct DemandFile {
    Field field;
    Matrix matrix;
};

Field parse_field_json(const Json& j);
Json field_to_json(const Field& f);

/// Accepts `prime:<q>` or `rational`.
Field parse_field_flag(const std::string& s);

DemandFile parse_demand_file(const Json& j);
Json demand_file_to_json(const DemandFile& d);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const Field& f);

Json bounds_to_json(const BoundsReport& rep);
Json plan_to_json(const SchemePlan& plan);
Json simulation_to_json(const SimulationReport& rep);
Json oracle_to_json(const OracleResult& res);

/// Versioned top-level report; `simulation` may be null.
Json run_report(const ProblemInstance& inst, const SchemePlan& plan,
                const BoundsReport& bounds, const SimulationReport* sim);

} // namespace lsfc
