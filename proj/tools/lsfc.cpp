// lsfc: plan, simulate, bound, and brute-force-check multi-user linearly
// separable distributed computing schemes.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lsfc/example1.hpp"
#include "lsfc/io.hpp"
#include "lsfc/oracle.hpp"
#include "lsfc/rng.hpp"
#include "lsfc/simulator.hpp"

namespace {

constexpr int kExitBadArgs = 2;
constexpr int kExitDemandMismatch = 3;
constexpr int kExitVerification = 4;
constexpr int kExitOracleBudget = 5;

struct BadArgs : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DemandMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw BadArgs("cannot open output file " + out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

lsfc::DemandMatrix load_demand(const lsfc::ProblemInstance& inst, const std::string& path,
                               bool random, std::uint64_t seed) {
    if (random) {
        lsfc::SplitMix64 rng(seed);
        return lsfc::DemandMatrix{rng.next_matrix(inst.L, inst.K, inst.field)};
    }
    if (path.empty()) throw BadArgs("either --demand <path> or --random is required");
    std::ifstream f(path);
    if (!f) throw BadArgs("cannot open demand file " + path);
    lsfc::Json j = lsfc::Json::parse(f);
    lsfc::DemandFile df = lsfc::parse_demand_file(j);
    try {
        return lsfc::DemandMatrix::checked(inst, std::move(df.matrix));
    } catch (const std::exception& e) {
        throw DemandMismatch(e.what());
    }
}

void verify_plan(const lsfc::ProblemInstance& inst, const lsfc::DemandMatrix& demand,
                 const lsfc::SchemePlan& plan) {
    auto cert = lsfc::to_factorization(plan);
    if (!lsfc::verify_certificate(cert, demand.matrix, inst.Delta, inst.M))
        throw VerificationFailure("factorization certificate failed verification");
}

struct InstanceFlags {
    std::size_t k = 0, l = 0, m = 0, delta = 0;
    std::string field = "rational";
    lsfc::ProblemInstance instance() const {
        lsfc::ProblemInstance inst{k, l, m, delta, lsfc::parse_field_flag(field)};
        inst.validate();
        return inst;
    }
    void add_to(CLI::App* cmd) {
        cmd->add_option("--k", k, "subfunction count K")->required();
        cmd->add_option("--l", l, "user count L")->required();
        cmd->add_option("--m", m, "per-server computation budget M")->required();
        cmd->add_option("--delta", delta, "per-server connectivity budget Delta")->required();
        cmd->add_option("--field", field, "prime:<q> or rational")->required();
    }
};

// "a..b" or a single value.
std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            std::size_t v = std::stoull(s);
            return {v, v};
        }
        std::size_t a = std::stoull(s.substr(0, dots));
        std::size_t b = std::stoull(s.substr(dots + 2));
        if (a > b) throw BadArgs("empty range " + s);
        return {a, b};
    } catch (const std::invalid_argument&) {
        throw BadArgs("malformed range '" + s + "'");
    }
}

bool is_prime(std::size_t q) {
    if (q < 2) return false;
    for (std::size_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

std::size_t worker_count() {
    if (const char* env = std::getenv("LSFC_WORKERS")) {
        std::size_t n = std::strtoull(env, nullptr, 10);
        if (n >= 1) return n;
    }
    return 1;
}

int run_plan_like(const InstanceFlags& flags, const std::string& demand_path, bool random,
                  std::uint64_t demand_seed, const std::string& out, bool simulate,
                  std::uint64_t sim_seed, bool force_zero_f) {
    lsfc::ProblemInstance inst = flags.instance();
    lsfc::DemandMatrix demand = load_demand(inst, demand_path, random, demand_seed);
    lsfc::SchemePlan plan = lsfc::build_plan(inst, demand);
    verify_plan(inst, demand, plan);
    lsfc::BoundsReport bounds = lsfc::gap_report(inst);

    if (simulate) {
        auto outputs = force_zero_f ? lsfc::SubfunctionOutputs::zero(inst, sim_seed)
                                    : lsfc::SubfunctionOutputs::random(inst, sim_seed);
        lsfc::SimulationReport sim = lsfc::run(inst, demand, plan, outputs);
        if (!sim.exact || !sim.audit.all_pass)
            throw VerificationFailure("simulation verdict failed");
        write_output(out, lsfc::run_report(inst, plan, bounds, &sim).dump(2));
    } else {
        write_output(out, lsfc::run_report(inst, plan, bounds, nullptr).dump(2));
    }
    return 0;
}

int cmd_bounds(const std::string& ks, const std::string& ls, const std::string& ms,
               const std::string& ds, const std::string& qs, const std::string& format,
               std::uint64_t seed, const std::string& out) {
    auto [k0, k1] = parse_range(ks);
    auto [l0, l1] = parse_range(ls);
    auto [m0, m1] = parse_range(ms);
    auto [d0, d1] = parse_range(ds);
    auto [q0, q1] = parse_range(qs);
    if (format != "csv" && format != "json") throw BadArgs("--format must be csv or json");

    struct Point {
        std::size_t k, l, m, delta, q;
    };
    std::vector<Point> points;
    for (std::size_t k = k0; k <= k1; ++k)
        for (std::size_t l = l0; l <= l1; ++l)
            for (std::size_t m = m0; m <= m1 && m <= k; ++m)
                for (std::size_t d = d0; d <= d1 && d <= l; ++d)
                    for (std::size_t q = q0; q <= q1; ++q)
                        if (is_prime(q)) points.push_back({k, l, m, d, q});
    if (points.empty()) throw BadArgs("sweep ranges select no valid parameter points");

    std::vector<lsfc::Json> rows(points.size());
    auto eval = [&](std::size_t idx) {
        const Point& p = points[idx];
        lsfc::ProblemInstance inst{p.k, p.l, p.m, p.delta,
                                   lsfc::Field::prime(static_cast<std::int64_t>(p.q))};
        lsfc::BoundsReport rep = lsfc::gap_report(inst);
        lsfc::SplitMix64 rng(seed);
        lsfc::DemandMatrix demand{rng.next_matrix(inst.L, inst.K, inst.field)};
        lsfc::SchemePlan plan = lsfc::build_plan(inst, demand);
        lsfc::Json row = {{"k", p.k},          {"l", p.l},
                          {"m", p.m},          {"delta", p.delta},
                          {"q", p.q},          {"rate_formula", rep.rate_formula},
                          {"rate_achieved", plan.rate}};
        lsfc::Json bounds_json = lsfc::bounds_to_json(rep);
        for (auto& [key, val] : bounds_json.items())
            if (key != "rate_formula") row[key] = val;
        rows[idx] = std::move(row);
    };

    std::size_t workers = std::min(worker_count(), points.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < points.size(); ++i) eval(i);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < points.size(); i += workers) eval(i);
            });
        for (auto& t : pool) t.join();
    }

    if (format == "json") {
        lsfc::Json j = lsfc::Json::array();
        for (auto& r : rows) j.push_back(std::move(r));
        write_output(out, j.dump(2));
        return 0;
    }
    std::ostringstream csv;
    csv << "k,l,m,delta,q,rate_formula,rate_achieved,lb_finite_q,lb_large_q,lb_real,"
           "gap_finite_q,gap_real,delta_divides_l,block_width_divides_k,q_ge_k\n";
    for (const auto& r : rows) {
        csv << r["k"] << ',' << r["l"] << ',' << r["m"] << ',' << r["delta"] << ',' << r["q"]
            << ',' << r["rate_formula"] << ',' << r["rate_achieved"] << ',' << r["lb_finite_q"]
            << ',' << r["lb_large_q"] << ',' << r["lb_real"] << ',' << r["gap_finite_q"] << ','
            << r["gap_real"] << ',' << (r["delta_divides_l"].get<bool>() ? 1 : 0) << ','
            << (r["block_width_divides_k"].get<bool>() ? 1 : 0) << ','
            << (r["q_ge_k"].get<bool>() ? 1 : 0) << '\n';
    }
    write_output(out, csv.str());
    return 0;
}

int cmd_oracle(const InstanceFlags& flags, const std::string& demand_path, bool random,
               std::uint64_t seed, std::size_t r_max, bool sandwich, const std::string& out) {
    lsfc::ProblemInstance inst = flags.instance();
    lsfc::DemandMatrix demand = load_demand(inst, demand_path, random, seed);
    if (sandwich) {
        lsfc::SandwichReport rep = lsfc::sandwich_check(inst, demand, r_max);
        lsfc::Json j = {{"schema", lsfc::kReportSchema},
                        {"lower_bound", rep.lower_bound},
                        {"min_r", rep.min_r},
                        {"scheme_rate", rep.scheme_rate},
                        {"holds", rep.holds}};
        write_output(out, j.dump(2));
        if (!rep.holds) throw VerificationFailure("sandwich bracket failed");
        return 0;
    }
    lsfc::OracleResult res = lsfc::min_rate_bruteforce(inst, demand, r_max);
    write_output(out, lsfc::oracle_to_json(res).dump(2));
    if (!res.min_r) return kExitOracleBudget;
    return 0;
}

int cmd_example1(const std::string& field_flag, const std::string& out) {
    lsfc::Field f = lsfc::parse_field_flag(field_flag);
    lsfc::ProblemInstance inst = lsfc::example1_instance(f);
    lsfc::DemandMatrix demand = lsfc::example1_demand(f);
    lsfc::SchemePlan plan = lsfc::build_plan(inst, demand);
    verify_plan(inst, demand, plan);
    lsfc::GoldenCheck golden = lsfc::check_example1(plan);
    if (!golden.pass) throw VerificationFailure("reference check failed: " + golden.detail);
    lsfc::BoundsReport bounds = lsfc::gap_report(inst);
    auto outputs = lsfc::SubfunctionOutputs::random(inst, 1);
    lsfc::SimulationReport sim = lsfc::run(inst, demand, plan, outputs);
    if (!sim.exact || !sim.audit.all_pass)
        throw VerificationFailure("reference simulation failed");
    write_output(out, lsfc::run_report(inst, plan, bounds, &sim).dump(2));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-user linearly separable distributed computing toolkit"};
    app.require_subcommand(1);

    InstanceFlags plan_flags, sim_flags, oracle_flags;
    std::string demand_path, out_path;
    bool random = false;
    std::uint64_t seed = 0;

    auto* plan_cmd = app.add_subcommand("plan", "build a scheme plan and report");
    plan_flags.add_to(plan_cmd);
    plan_cmd->add_option("--demand", demand_path, "demand matrix JSON file");
    plan_cmd->add_flag("--random", random, "draw a random demand matrix");
    plan_cmd->add_option("--seed", seed, "seed for --random");
    plan_cmd->add_option("--out", out_path, "output path (default stdout)");

    std::string sim_demand, sim_out;
    bool sim_random = false, force_zero_f = false;
    std::uint64_t sim_demand_seed = 0, f_seed = 0;
    auto* sim_cmd = app.add_subcommand("simulate", "plan, then run the three-phase protocol");
    sim_flags.add_to(sim_cmd);
    sim_cmd->add_option("--demand", sim_demand, "demand matrix JSON file");
    sim_cmd->add_flag("--random", sim_random, "draw a random demand matrix");
    sim_cmd->add_option("--demand-seed", sim_demand_seed, "seed for --random");
    sim_cmd->add_option("--seed", f_seed, "seed for the subfunction outputs");
    sim_cmd->add_flag("--force-zero-f", force_zero_f, "use all-zero subfunction outputs");
    sim_cmd->add_option("--out", sim_out, "output path (default stdout)");

    std::string bk = "1", bl = "1", bm = "1", bd = "1", bq = "2", fmt = "csv", bounds_out;
    std::uint64_t bounds_seed = 1;
    auto* bounds_cmd = app.add_subcommand("bounds", "achievable rate and converse bounds");
    bounds_cmd->add_option("--k", bk, "K or range a..b")->required();
    bounds_cmd->add_option("--l", bl, "L or range a..b")->required();
    bounds_cmd->add_option("--m", bm, "M or range a..b")->required();
    bounds_cmd->add_option("--delta", bd, "Delta or range a..b")->required();
    bounds_cmd->add_option("--q", bq, "prime q or range a..b (non-primes skipped)")->required();
    bounds_cmd->add_option("--format", fmt, "csv or json");
    bounds_cmd->add_option("--seed", bounds_seed, "seed for the rate_achieved demand draw");
    bounds_cmd->add_option("--out", bounds_out, "output path (default stdout)");

    std::string oracle_demand, oracle_out;
    bool oracle_random = false, sandwich = false;
    std::uint64_t oracle_seed = 0;
    std::size_t r_max = 5;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force minimal factorization rate");
    oracle_flags.add_to(oracle_cmd);
    oracle_cmd->add_option("--demand", oracle_demand, "demand matrix JSON file");
    oracle_cmd->add_flag("--random", oracle_random, "draw a random demand matrix");
    oracle_cmd->add_option("--seed", oracle_seed, "seed for --random");
    oracle_cmd->add_option("--rmax", r_max, "largest inner dimension to try");
    oracle_cmd->add_flag("--sandwich", sandwich, "check lower bound <= min R <= scheme rate");
    oracle_cmd->add_option("--out", oracle_out, "output path (default stdout)");

    std::string ex_field = "prime:11", ex_out;
    auto* ex_cmd = app.add_subcommand("example1", "reproduce the built-in reference instance");
    ex_cmd->add_option("--field", ex_field, "prime:<q> or rational");
    ex_cmd->add_option("--out", ex_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitBadArgs;
    }

    try {
        if (plan_cmd->parsed())
            return run_plan_like(plan_flags, demand_path, random, seed, out_path, false, 0, false);
        if (sim_cmd->parsed())
            return run_plan_like(sim_flags, sim_demand, sim_random, sim_demand_seed, sim_out,
                                 true, f_seed, force_zero_f);
        if (bounds_cmd->parsed())
            return cmd_bounds(bk, bl, bm, bd, bq, fmt, bounds_seed, bounds_out);
        if (oracle_cmd->parsed())
            return cmd_oracle(oracle_flags, oracle_demand, oracle_random, oracle_seed, r_max,
                              sandwich, oracle_out);
        if (ex_cmd->parsed()) return cmd_example1(ex_field, ex_out);
    } catch (const BadArgs& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArgs;
    } catch (const DemandMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDemandMismatch;
    } catch (const VerificationFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerification;
    } catch (const lsfc::OracleBudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitOracleBudget;
    } catch (const lsfc::DimensionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDemandMismatch;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerification;
    }
    return 0;
}
