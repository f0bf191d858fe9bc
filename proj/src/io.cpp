#include "toric/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace toric {

namespace {

Int parse_int(const std::string& token) {
    Int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
        throw OverflowError("integer out of 64-bit range: " + token);
    if (ec != std::errc() || ptr != last || first == last)
        throw ParseError("not an integer: '" + token + "'");
    return value;
}

std::size_t parse_count(const std::string& token, const char* what) {
    const Int v = parse_int(token);
    if (v < 0) throw ParseError(std::string("negative ") + what + " in header");
    return static_cast<std::size_t>(v);
}

std::size_t env_count(const char* name, std::size_t fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    const Int v = parse_int(raw);
    if (v <= 0) throw ParseError(std::string(name) + " must be positive");
    return static_cast<std::size_t>(v);
}

nlohmann::json points_json(const std::vector<FiberPoint>& pts) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : pts) out.push_back(to_json(p));
    return out;
}

} // namespace

IntMat parse_matrix(std::istream& in) {
    std::string header;
    while (std::getline(in, header))
        if (header.find_first_not_of(" \t\r") != std::string::npos) break;
    std::istringstream hs(header);
    std::string a, b, extra;
    if (!(hs >> a >> b) || (hs >> extra))
        throw ParseError("header must be exactly two integers 'rows cols'");
    const std::size_t rows = parse_count(a, "row count");
    const std::size_t cols = parse_count(b, "column count");
    if (cols == 0) throw ParseError("column count must be positive");
    std::vector<Int> entries;
    entries.reserve(rows * cols);
    std::string token;
    while (in >> token) {
        if (entries.size() == rows * cols)
            throw ParseError("more than " + std::to_string(rows * cols) + " entries");
        entries.push_back(parse_int(token));
    }
    if (entries.size() != rows * cols)
        throw ParseError("expected " + std::to_string(rows * cols) + " entries, found " +
                         std::to_string(entries.size()));
    return IntMat(rows, cols, std::move(entries));
}

IntMat parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

std::string format_matrix(const IntMat& m) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << '\n' << m;
    return os.str();
}

IntMat read_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return parse_matrix(in);
}

void write_matrix(const std::filesystem::path& path, const IntMat& m) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path.string());
    out << format_matrix(m);
    if (!out) throw ParseError("write failed for " + path.string());
}

IntMat moves_matrix(const std::vector<Move>& moves, std::size_t dim) {
    for (const auto& m : moves)
        if (m.size() != dim) throw DimensionError("moves of unequal length");
    return IntMat::from_rows(moves, dim);
}

std::vector<Move> matrix_moves(const IntMat& m) {
    std::vector<Move> out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row_vec(i));
    return out;
}

Configuration configuration_from_matrix(const IntMat& m) {
    if (m.rows() == 1) return make_curve(m.row(0));
    return Configuration(m, IntVec(m.rows(), 1));
}

ResourceBudget budget_from_environment() {
    ResourceBudget b;
    b.max_fiber = env_count("TORIC_MAX_FIBER", b.max_fiber);
    b.max_completion = env_count("TORIC_MAX_COMPLETION", b.max_completion);
    return b;
}

nlohmann::json to_json(const IntVec& v) { return nlohmann::json(v.entries()); }

nlohmann::json to_json(const IntMat& m) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row_vec(i)));
    return out;
}

nlohmann::json to_json(const PivotCheck& c) {
    nlohmann::json decs = nlohmann::json::array();
    for (const auto& d : c.decompositions)
        decs.push_back({{"left", to_json(d.left)}, {"right", to_json(d.right)}});
    return {{"move", to_json(c.move)},           {"degree", to_json(c.degree)},
            {"fiber_size", c.fiber_size},        {"pivots", points_json(c.pivots)},
            {"expected", points_json(c.expected)}, {"decompositions", decs}};
}

nlohmann::json to_json(const WitnessCheck& c) {
    return {{"fiber_size", c.fiber_size},
            {"points", points_json(c.points)},
            {"column_totals", to_json(c.column_totals)}};
}

nlohmann::json to_json(const ComplexityProfile& p) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : p.per_r) {
        nlohmann::json counts = nlohmann::json::object();
        for (std::size_t t = 1; t < r.type_counts.size(); ++t)
            if (r.type_counts[t]) counts[std::to_string(t)] = r.type_counts[t];
        rows.push_back({{"r", r.r},
                        {"size", r.basis_size},
                        {"max_type", r.max_type},
                        {"type_counts", counts},
                        {"seconds", r.seconds}});
    }
    nlohmann::json out{{"rows", rows}, {"complexity_lower_bound", p.complexity_lower_bound}};
    out["truncated"] = p.truncated ? nlohmann::json(*p.truncated) : nlohmann::json(nullptr);
    return out;
}

nlohmann::json to_json(const TableCheck& c) {
    nlohmann::json out = to_json(c.profile);
    out["matches"] = c.matches;
    nlohmann::json ref = nlohmann::json::array();
    for (const auto& row : a5_reference_rows())
        ref.push_back({{"r", row.r}, {"size", row.size}, {"max_type", row.max_type}});
    out["reference"] = ref;
    return out;
}

nlohmann::json to_json(const Type6Check& c) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& a : c.audits)
        out.push_back({{"matrix", to_json(a.matrix)},
                       {"rows_in_lattice", a.rows_in_lattice},
                       {"column_sums", to_json(a.column_sums)},
                       {"member", a.member()},
                       {"type", a.type},
                       {"distinct_permutations", a.distinct_permutations},
                       {"permutations_ok", a.permutations_ok}});
    return out;
}

nlohmann::json to_json(const CiCheck& c) {
    nlohmann::json subsets = nlohmann::json::array();
    for (const auto& [t, ci] : c.subsets)
        subsets.push_back({{"triple", std::vector<Int>(t.begin(), t.end())},
                           {"complete_intersection", ci}});
    return {{"subsets", subsets}, {"curve_generators", c.curve_generators}};
}

nlohmann::json to_json(const RestrictionReport& r) {
    nlohmann::json a = nlohmann::json::array();
    nlohmann::json b = nlohmann::json::array();
    for (const auto& m : r.only_in_prefix) a.push_back(to_json(m));
    for (const auto& m : r.only_in_restricted) b.push_back(to_json(m));
    return {{"prefix_universal_size", r.prefix_universal_size},
            {"restricted_universal_size", r.restricted_universal_size},
            {"only_in_prefix", a},
            {"only_in_restricted", b}};
}

nlohmann::json verdict(const std::string& claim, nlohmann::json parameters, bool pass,
                       nlohmann::json certificate, double seconds) {
    return {{"schema", kReportSchemaVersion}, {"claim", claim},
            {"parameters", std::move(parameters)}, {"pass", pass},
            {"certificate", std::move(certificate)}, {"seconds", seconds}};
}

} // namespace toric
