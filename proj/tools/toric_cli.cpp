#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "toric/family.hpp"
#include "toric/graver.hpp"
#include "toric/io.hpp"
#include "toric/lawrence.hpp"
#include "toric/markov.hpp"

using namespace toric;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
    std::size_t threads = 1;
    std::size_t max_fiber = 0;
    std::size_t max_completion = 0;
};

MarkovOptions markov_options(const Common& c) {
    const ResourceBudget env = budget_from_environment();
    MarkovOptions o;
    o.fiber_cap = c.max_fiber ? c.max_fiber : env.max_fiber;
    o.completion.max_elements = c.max_completion ? c.max_completion : env.max_completion;
    return o;
}

void emit_matrix(const IntMat& m, const std::string& out) {
    if (out.empty())
        std::cout << format_matrix(m);
    else
        write_matrix(out, m);
}

void emit_json(const nlohmann::json& j, const std::string& out) {
    std::cout << j.dump(2) << '\n';
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw ParseError("cannot write " + out);
        f << j.dump(2) << '\n';
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fibers, Graver and Markov bases of toric lattices and their Lawrence liftings"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--threads", common.threads, "Parallelism hint (results never depend on it)");
    app.add_option("--max-fiber", common.max_fiber, "Maximum points per fiber");
    app.add_option("--max-completion", common.max_completion,
                   "Maximum elements held by a completion");

    std::string input;
    std::string output;
    std::string json_out;

    auto* fiber = app.add_subcommand("fiber", "Enumerate a fiber");
    std::vector<Int> degree;
    fiber->add_option("matrix", input, "Configuration file")->required();
    fiber->add_option("--deg", degree, "Degree b (comma separated)")->required()->delimiter(',');
    fiber->add_option("-o", output, "Output file");

    auto* graver = app.add_subcommand("graver", "Graver basis");
    graver->add_option("matrix", input)->required();
    graver->add_option("-o", output);

    auto* markov = app.add_subcommand("markov", "Minimal Markov basis");
    markov->add_option("matrix", input)->required();
    markov->add_option("-o", output);
    bool want_universal = false;
    bool want_indispensable = false;
    auto* uflag = markov->add_flag("--universal", want_universal, "Universal Markov basis");
    markov->add_flag("--indispensable", want_indispensable, "Indispensable set")->excludes(uflag);

    auto* universal = app.add_subcommand("universal", "Universal Markov basis");
    universal->add_option("matrix", input)->required();
    universal->add_option("-o", output);

    auto* indispensable = app.add_subcommand("indispensable", "Indispensable set");
    indispensable->add_option("matrix", input)->required();
    indispensable->add_option("-o", output);

    auto* liftcmd = app.add_subcommand("lift", "Lawrence lifting matrix");
    std::size_t r = 2;
    liftcmd->add_option("matrix", input)->required();
    liftcmd->add_option("--r", r)->required()->check(CLI::Range(2, 1000));
    liftcmd->add_option("-o", output);

    auto* complexity = app.add_subcommand("complexity", "Sizes and max types for r = 2..rmax");
    std::size_t rmax = 0;
    double max_seconds = 0;
    complexity->add_option("matrix", input)->required();
    complexity->add_option("--rmax", rmax)->required()->check(CLI::Range(2, 1000));
    complexity->add_option("--json", json_out);
    complexity->add_option("--max-seconds", max_seconds, "Do not start a new r after this");

    auto* restrict_cmd = app.add_subcommand("restrict", "Compare M(B^(r)) with M(A^(r)) on B");
    std::size_t prefix = 0;
    restrict_cmd->add_option("matrix", input)->required();
    restrict_cmd->add_option("--prefix", prefix)->required();
    restrict_cmd->add_option("--r", r)->required()->check(CLI::Range(2, 1000));
    restrict_cmd->add_option("--json", json_out);

    auto* verify = app.add_subcommand("verify", "Check a stated property of the A_n family");
    std::string claim;
    std::size_t n = 5;
    std::optional<std::size_t> vr;
    verify->add_option("--claim", claim)
        ->required()
        ->check(CLI::IsMember({"lemma1", "lemma2", "lemma3", "witness", "table1", "remark6",
                               "subsets-ci", "restriction"}));
    verify->add_option("--n", n);
    verify->add_option("--rmax", vr);
    verify->add_option("--json", json_out);
    verify->add_option("--max-seconds", max_seconds);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        const MarkovOptions opts = markov_options(common);
        auto load = [&] { return configuration_from_matrix(read_matrix(input)); };
        const auto t0 = std::chrono::steady_clock::now();

        if (*fiber) {
            const Configuration c = load();
            const Fiber f = enumerate_fiber(c, IntVec(degree), opts.fiber_cap);
            if (f.truncated) throw TruncatedFiber("fiber exceeds --max-fiber");
            emit_matrix(moves_matrix(f.points, c.cols()), output);
            return kPass;
        }
        if (*graver) {
            const Configuration c = load();
            GraverLimits limits;
            limits.max_elements = opts.completion.max_elements;
            emit_matrix(moves_matrix(graver_basis(c, limits).moves, c.cols()), output);
            return kPass;
        }
        if (*markov || *universal || *indispensable) {
            const Configuration c = load();
            MarkovBasis b;
            if (*universal || want_universal)
                b = universal_markov_basis(c, opts);
            else if (*indispensable || want_indispensable)
                b = indispensable_set(c, opts);
            else
                b = minimal_markov_basis(c, opts);
            emit_matrix(moves_matrix(b.moves, c.cols()), output);
            return kPass;
        }
        if (*liftcmd) {
            emit_matrix(lift(load(), r).matrix(), output);
            return kPass;
        }
        if (*complexity) {
            ProfileOptions po;
            po.markov = opts;
            po.max_seconds = max_seconds;
            const ComplexityProfile p = complexity_profile(load(), rmax, po);
            nlohmann::json j = to_json(p);
            j["schema"] = kReportSchemaVersion;
            emit_json(j, json_out);
            return p.truncated ? kUsage : kPass;
        }
        if (*restrict_cmd) {
            const RestrictionReport rep = check_restriction(load(), prefix, r, opts);
            emit_json(verdict("restriction", {{"matrix", input}, {"prefix", prefix}, {"r", r}},
                              rep.holds, to_json(rep), seconds_since(t0)),
                      json_out);
            return rep.holds ? kPass : kFail;
        }
        if (*verify) {
            nlohmann::json params{{"n", n}};
            bool pass = false;
            nlohmann::json cert;
            if (claim == "lemma1" || claim == "lemma2" || claim == "lemma3") {
                const PivotCheck c = claim == "lemma1"   ? check_unit_row_first_zero(n)
                                     : claim == "lemma2" ? check_unit_row_second_zero(n)
                                                         : check_last_row_rigid(n);
                pass = c.pass;
                cert = to_json(c);
            } else if (claim == "witness") {
                const WitnessCheck c = verify_witness_indispensable(n, opts.fiber_cap);
                pass = c.pass;
                cert = to_json(c);
            } else if (claim == "table1") {
                ProfileOptions po;
                po.markov = opts;
                po.max_seconds = max_seconds;
                const std::size_t k = vr.value_or(3);
                params = {{"rmax", k}};
                const TableCheck c = a5_table(k, po);
                pass = c.pass && !c.profile.truncated;
                cert = to_json(c);
            } else if (claim == "remark6") {
                params = nlohmann::json::object();
                const Type6Check c = verify_type6_examples();
                pass = c.pass;
                cert = to_json(c);
            } else if (claim == "subsets-ci") {
                const CiCheck c = verify_subsets_ci(n, opts);
                pass = c.pass;
                cert = to_json(c);
            } else {
                const std::size_t k = vr.value_or(2);
                params["r"] = k;
                params["prefix"] = 3;
                const RestrictionReport rep = check_restriction(curve_family(n).config, 3, k, opts);
                pass = rep.holds;
                cert = to_json(rep);
            }
            emit_json(verdict(claim, params, pass, cert, seconds_since(t0)), json_out);
            return pass ? kPass : kFail;
        }
    } catch (const ToricError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return kUsage;
    }
    return kUsage;
}
