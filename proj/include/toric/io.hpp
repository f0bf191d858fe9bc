#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/family.hpp"
#include "toric/lawrence.hpp"
#include "toric/markov.hpp"

namespace toric {

/// Version of the JSON report layout.
inline constexpr int kReportSchemaVersion = 1;

/// "rows cols" header, then rows·cols whitespace-separated integers, row-major.
IntMat parse_matrix(std::istream& in);
IntMat parse_matrix_text(const std::string& text);
std::string format_matrix(const IntMat& m);

IntMat read_matrix(const std::filesystem::path& path);
void write_matrix(const std::filesystem::path& path, const IntMat& m);

/// One move per row; an empty set is written as "0 <dim>".
IntMat moves_matrix(const std::vector<Move>& moves, std::size_t dim);
std::vector<Move> matrix_moves(const IntMat& m);

/// Configuration from a matrix file: one row is a monomial curve, several
/// rows use the all-ones grading (construction fails if that is not a
/// certificate).
Configuration configuration_from_matrix(const IntMat& m);

struct ResourceBudget {
    std::size_t max_fiber = kDefaultFiberCap;
    std::size_t max_completion = CompletionLimits{}.max_elements;
};

/// Defaults, overridden by TORIC_MAX_FIBER and TORIC_MAX_COMPLETION.
ResourceBudget budget_from_environment();

nlohmann::json to_json(const IntVec& v);
nlohmann::json to_json(const IntMat& m);
nlohmann::json to_json(const PivotCheck& c);
nlohmann::json to_json(const WitnessCheck& c);
nlohmann::json to_json(const ComplexityProfile& p);
nlohmann::json to_json(const TableCheck& c);
nlohmann::json to_json(const Type6Check& c);
nlohmann::json to_json(const CiCheck& c);
nlohmann::json to_json(const RestrictionReport& r);

/// {"schema": version, "claim", "parameters", "pass", "certificate", "seconds"}.
nlohmann::json verdict(const std::string& claim, nlohmann::json parameters, bool pass,
                       nlohmann::json certificate, double seconds);

} // namespace toric
