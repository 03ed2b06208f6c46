// command-line front end: descriptors in, report artifacts out
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "partmult/analysis.hpp"
#include "partmult/constructions.hpp"
#include "partmult/engine.hpp"
#include "partmult/io.hpp"

namespace {

using namespace partmult;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;       // usage, budget, malformed input
constexpr int kExitVerifyFail = 2;  // a verified property did not hold

struct CommonOpts {
    std::string set_a;
    std::string set_m = "naturals";
    std::string format = "csv";
    std::string output;
    long long budget = 1'000'000'000;
    bool deterministic = false;
    std::string kernel = "openmp";
    int jobs = 1;
};

EngineOptions engine_options(const CommonOpts& c) {
    EngineOptions opts;
    opts.work_ceiling = c.budget;
    opts.kernel = c.kernel == "serial" ? KernelMode::serial : KernelMode::openmp;
    return opts;
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
    return buf;
}

void emit(const CommonOpts& c, const std::string& command, json params, json report,
          const std::function<void(std::ostream&)>& write_csv) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!c.output.empty()) {
        file.open(c.output);
        if (!file) throw std::runtime_error("cannot open output file " + c.output);
        os = &file;
    }
    if (c.format == "json") {
        json doc;
        doc["command"] = command;
        params["budget"] = c.budget;
        params["kernel"] = c.kernel;
        doc["params"] = std::move(params);
        if (!c.deterministic) doc["timestamp"] = timestamp_utc();
        doc["report"] = std::move(report);
        *os << doc.dump(2) << '\n';
    } else {
        write_csv(*os);
    }
}

void add_common(CLI::App* cmd, CommonOpts& c, bool with_sets = true,
                bool with_set_m = true) {
    if (with_sets) {
        cmd->add_option("--set-a", c.set_a, "part set descriptor (JSON or shorthand)");
        if (with_set_m)
            cmd->add_option("--set-m", c.set_m,
                            "multiplicity set descriptor (default: naturals)");
    }
    cmd->add_option("--format", c.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output,-o", c.output, "write the report to a file");
    cmd->add_option("--budget", c.budget,
                    "work ceiling in elementary big-integer additions")
        ->envname("PARTMULT_BUDGET");
    cmd->add_flag("--deterministic", c.deterministic,
                  "suppress the timestamp so identical configs emit identical bytes");
    cmd->add_option("--kernel", c.kernel, "serial or openmp coefficient kernels")
        ->check(CLI::IsMember({"serial", "openmp"}));
}

CountTable build_table(const CommonOpts& c, i64 n_max, const std::string& engine) {
    const SetDescriptor a = io::parse_descriptor(c.set_a);
    const SetDescriptor m = io::parse_descriptor(c.set_m);
    const EngineOptions opts = engine_options(c);
    if (engine == "generic") return count_generic(a, m, n_max, opts);
    if (engine == "ap") return count_ap_optimized(a, m, n_max, opts);
    return count_auto(a, m, n_max, opts);
}

int run_verify_am(const CommonOpts& c, i64 base, i64 n_max) {
    const auto [a_set, m_set] = thm_am_pair(base);
    const CountTable t = count_auto(a_set, m_set, n_max, engine_options(c));

    bool positive_ok = true;
    i64 first_zero = -1;
    for (i64 n = 1; n <= n_max; ++n)
        if (t.at(n) < 1) {
            positive_ok = false;
            first_zero = n;
            break;
        }
    json powers = json::array();
    bool powers_ok = true;
    for (i64 r = 0, v = 1; v <= n_max; ++r, v *= base) {
        const bool ok = t.at(v) == 1;
        powers_ok = powers_ok && ok;
        powers.push_back({{"r", r}, {"n", v}, {"p", t.at(v).get_str()}, {"ok", ok}});
        if (v > n_max / base) break;
    }
    const bool ok = positive_ok && powers_ok;

    json report{{"base", base},
                {"n_max", n_max},
                {"positive_everywhere", positive_ok},
                {"first_zero", first_zero},
                {"powers", powers},
                {"ok", ok}};
    emit(c, "verify-am", {{"base", base}, {"n_max", n_max}}, report,
         [&](std::ostream& os) {
             os << "r,n,p,ok\n";
             for (const json& row : powers)
                 os << row["r"] << ',' << row["n"] << ','
                    << row["p"].get<std::string>() << ',' << (row["ok"].get<bool>() ? 1 : 0)
                    << '\n';
         });
    return ok ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partition counting with restricted multiplicities"};
    app.require_subcommand(1);

    CommonOpts c;

    // count
    auto* cmd_count = app.add_subcommand("count", "table of p(0..N)");
    i64 n_max = 0;
    std::string engine = "auto";
    add_common(cmd_count, c);
    cmd_count->add_option("--n-max", n_max, "table limit N")->required();
    cmd_count->add_option("--engine", engine, "auto, generic, or ap")
        ->check(CLI::IsMember({"auto", "generic", "ap"}));

    // oracle
    auto* cmd_oracle = app.add_subcommand("oracle", "enumerate the partitions of one n");
    i64 oracle_n = 0, oracle_cap = 1000;
    add_common(cmd_oracle, c);
    cmd_oracle->add_option("--n", oracle_n, "target integer")->required();
    cmd_oracle->add_option("--cap", oracle_cap, "witness cap");

    // verify-am
    auto* cmd_verify = app.add_subcommand(
        "verify-am", "positivity and power-uniqueness suite for the geometric pair");
    i64 base = 0;
    add_common(cmd_verify, c, /*with_sets=*/false);
    cmd_verify->add_option("--base", base, "geometric base a >= 2")->required();
    cmd_verify->add_option("--n-max", n_max, "check range limit")->required();
    // the pair is derived from --base; explicit sets are rejected
    std::string reject_a, reject_m;
    cmd_verify->add_option("--set-a", reject_a)->group("");
    cmd_verify->add_option("--set-m", reject_m)->group("");

    // growth
    auto* cmd_growth = app.add_subcommand("growth", "log p(n)/log n exponent report");
    add_common(cmd_growth, c);
    cmd_growth->add_option("--n-max", n_max, "table limit N")->required();

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "counting inequalities at given x");
    std::vector<i64> x_list;
    add_common(cmd_bounds, c);
    cmd_bounds->add_option("--x", x_list, "x values")->required()->delimiter(',');
    cmd_bounds->add_option("--jobs", c.jobs, "concurrent table builds")
        ->check(CLI::PositiveNumber);

    // iterate
    auto* cmd_iterate = app.add_subcommand("iterate", "iterated witness construction");
    i64 k = 1, rounds = 1;
    add_common(cmd_iterate, c);
    cmd_iterate->add_option("--k", k, "exponent k in p(n) > n^k")->required();
    cmd_iterate->add_option("--rounds", rounds, "requested witnesses")->required();
    cmd_iterate->add_option("--jobs", c.jobs, "accepted for symmetry; rounds are sequential");

    // schur
    auto* cmd_schur = app.add_subcommand("schur", "asymptotic ratio for a finite part set");
    add_common(cmd_schur, c, /*with_sets=*/true, /*with_set_m=*/false);
    cmd_schur->add_option("--n-max", n_max, "table limit N")->required();

    // construct-f
    auto* cmd_f = app.add_subcommand("construct-f", "staircase sequence and f table");
    i64 terms = 4, f_max = 1'000'000;
    std::string rule = "minimal", custom;
    add_common(cmd_f, c, /*with_sets=*/false);
    cmd_f->add_option("--terms", terms, "sequence length K");
    cmd_f->add_option("--rule", rule, "minimal or custom")
        ->check(CLI::IsMember({"minimal", "custom"}));
    cmd_f->add_option("--custom", custom, "comma list of terms for --rule custom");
    cmd_f->add_option("--f-max", f_max, "cap on CSV rows of the f table");

    // be-check
    auto* cmd_be = app.add_subcommand("be-check", "gcd-without-one-element condition");
    i64 bound = 0;
    add_common(cmd_be, c, /*with_sets=*/true, /*with_set_m=*/false);
    cmd_be->add_option("--bound", bound, "truncation bound")->required();

    // monotone
    auto* cmd_mono = app.add_subcommand("monotone", "first monotonicity violation");
    i64 from = 0;
    bool strict = false;
    add_common(cmd_mono, c);
    cmd_mono->add_option("--n-max", n_max, "table limit N")->required();
    cmd_mono->add_option("--from", from, "scan start index");
    cmd_mono->add_flag("--strict", strict, "require strict increase");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_count->parsed()) {
            const CountTable t = build_table(c, n_max, engine);
            emit(c, "count",
                 {{"set_a", io::descriptor_to_json(t.parts)},
                  {"set_m", io::descriptor_to_json(t.mults)},
                  {"n_max", n_max},
                  {"engine", engine}},
                 io::table_to_json(t), [&](std::ostream& os) { io::write_table_csv(t, os); });
            return kExitOk;
        }
        if (cmd_oracle->parsed()) {
            const SetDescriptor a = io::parse_descriptor(c.set_a);
            const SetDescriptor m = io::parse_descriptor(c.set_m);
            const EnumerationResult r = enumerate_partitions(a, m, oracle_n, oracle_cap);
            emit(c, "oracle",
                 {{"set_a", io::descriptor_to_json(a)},
                  {"set_m", io::descriptor_to_json(m)},
                  {"n", oracle_n},
                  {"cap", oracle_cap}},
                 io::witnesses_to_json(r, oracle_n),
                 [&](std::ostream& os) { io::write_witnesses_csv(r, os); });
            return kExitOk;
        }
        if (cmd_verify->parsed()) {
            if (!reject_a.empty() || !reject_m.empty()) {
                std::cerr << "verify-am derives both sets from --base; "
                             "--set-a/--set-m are not accepted\n";
                return kExitUsage;
            }
            return run_verify_am(c, base, n_max);
        }
        if (cmd_growth->parsed()) {
            const CountTable t = build_table(c, n_max, "auto");
            const GrowthReport r = growth_exponents(t);
            emit(c, "growth",
                 {{"set_a", io::descriptor_to_json(t.parts)},
                  {"set_m", io::descriptor_to_json(t.mults)},
                  {"n_max", n_max}},
                 io::growth_to_json(r), [&](std::ostream& os) { io::write_growth_csv(r, os); });
            return kExitOk;
        }
        if (cmd_bounds->parsed()) {
            const SetDescriptor a = io::parse_descriptor(c.set_a);
            const SetDescriptor m = io::parse_descriptor(c.set_m);
            const EngineOptions opts = engine_options(c);
            std::vector<BoundsReport> reports(x_list.size());
            if (c.jobs > 1) {
                std::vector<std::future<BoundsReport>> futures;
                futures.reserve(x_list.size());
                for (i64 x : x_list)
                    futures.push_back(std::async(std::launch::async, [&, x] {
                        return bounds_report(a, m, x, opts);
                    }));
                for (size_t i = 0; i < futures.size(); ++i) reports[i] = futures[i].get();
            } else {
                for (size_t i = 0; i < x_list.size(); ++i)
                    reports[i] = bounds_report(a, m, x_list[i], opts);
            }
            json body = json::array();
            for (const BoundsReport& r : reports) body.push_back(io::bounds_to_json(r));
            emit(c, "bounds",
                 {{"set_a", io::descriptor_to_json(a)},
                  {"set_m", io::descriptor_to_json(m)},
                  {"x", x_list},
                  {"jobs", c.jobs}},
                 std::move(body),
                 [&](std::ostream& os) { io::write_bounds_csv(reports, os); });
            return kExitOk;
        }
        if (cmd_iterate->parsed()) {
            const SetDescriptor a = io::parse_descriptor(c.set_a);
            const SetDescriptor m = io::parse_descriptor(c.set_m);
            const IteratedSearchResult r =
                iterated_witness_search(a, m, k, rounds, engine_options(c));
            emit(c, "iterate",
                 {{"set_a", io::descriptor_to_json(a)},
                  {"set_m", io::descriptor_to_json(m)},
                  {"k", k},
                  {"rounds", rounds}},
                 io::iterated_to_json(r),
                 [&](std::ostream& os) { io::write_iterated_csv(r, os); });
            return kExitOk;
        }
        if (cmd_schur->parsed()) {
            const SetDescriptor a = io::parse_descriptor(c.set_a);
            if (a.kind() != SetDescriptor::Kind::finite)
                throw std::invalid_argument("schur needs a finite part set");
            const CountTable t =
                count_auto(a, SetDescriptor::naturals(), n_max, engine_options(c));
            const std::vector<SchurPoint> pts = schur_ratio(t, a.elements());
            emit(c, "schur",
                 {{"set_a", io::descriptor_to_json(a)}, {"n_max", n_max}},
                 io::schur_to_json(pts, t),
                 [&](std::ostream& os) { io::write_schur_csv(pts, t, os); });
            return kExitOk;
        }
        if (cmd_f->parsed()) {
            StaircaseSequence s;
            if (rule == "custom") {
                std::vector<mpz_class> ts;
                std::istringstream is(custom);
                std::string tok;
                while (std::getline(is, tok, ','))
                    ts.emplace_back(tok);
                s = build_sequence_custom(std::move(ts));
            } else {
                s = build_sequence_minimal(terms);
            }
            emit(c, "construct-f",
                 {{"terms", terms}, {"rule", rule}, {"f_max", f_max}},
                 io::staircase_to_json(s),
                 [&](std::ostream& os) { io::write_staircase_csv(s, f_max, os); });
            return kExitOk;
        }
        if (cmd_be->parsed()) {
            const SetDescriptor a = io::parse_descriptor(c.set_a);
            const BeReport r = be_condition(a, bound);
            emit(c, "be-check",
                 {{"set_a", io::descriptor_to_json(a)}, {"bound", bound}},
                 io::be_to_json(r, bound), [&](std::ostream& os) { io::write_be_csv(r, os); });
            return kExitOk;
        }
        if (cmd_mono->parsed()) {
            const CountTable t = build_table(c, n_max, "auto");
            const std::optional<i64> violation = monotonicity_scan(t, from, strict);
            json report{{"from", from},
                        {"strict", strict},
                        {"violation", violation ? json(*violation) : json(nullptr)}};
            emit(c, "monotone",
                 {{"set_a", io::descriptor_to_json(t.parts)},
                  {"set_m", io::descriptor_to_json(t.mults)},
                  {"n_max", n_max},
                  {"from", from},
                  {"strict", strict}},
                 report, [&](std::ostream& os) {
                     os << "from,strict,violation\n";
                     os << from << ',' << (strict ? 1 : 0) << ','
                        << (violation ? std::to_string(*violation) : "none") << '\n';
                 });
            return kExitOk;
        }
    } catch (const BudgetError& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnsupportedDecomposition& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
