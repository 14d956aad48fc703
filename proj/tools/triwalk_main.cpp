// triwalk: exact and asymptotic n-step transition probabilities of
// zero-drift random walks on the triangular lattice.
//
// Subcommands: validate, realize, kernel, expand, compare, clt.
// Exit codes: 0 ok, 2 invalid config, 3 optimizer failure, 4 capacity
// exceeded, 5 tolerance failure.

#include "triwalk/config.hpp"
#include "triwalk/expansion.hpp"
#include "triwalk/heat.hpp"
#include "triwalk/kernel.hpp"
#include "triwalk/standard_realization.hpp"
#include "triwalk/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace triwalk;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "triwalk 1.0.0";

std::string walk_digest(const StepDistribution& p) {
    return to_fraction_string(p.alpha) + "," + to_fraction_string(p.alpha_p) + "," +
           to_fraction_string(p.beta) + "," + to_fraction_string(p.beta_p) + "," +
           to_fraction_string(p.gamma) + "," + to_fraction_string(p.gamma_p);
}

void write_file(const std::string& dir, const std::string& name, const std::string& body) {
    std::filesystem::create_directories(dir);
    std::ofstream out(dir + "/" + name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + dir + "/" + name);
    out << body;
}

std::vector<int> parse_grid(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    if (out.empty()) throw std::invalid_argument("empty n-grid");
    return out;
}

int cmd_validate(const WalkConfig& cfg) {
    const auto& p = cfg.walk;
    json j;
    j["command"] = "validate";
    j["input"] = walk_digest(p);
    j["kappa"] = to_fraction_string(p.kappa);
    j["alpha_hat"] = to_fraction_string(p.alpha_hat);
    j["beta_hat"] = to_fraction_string(p.beta_hat);
    j["gamma_hat"] = to_fraction_string(p.gamma_hat);
    j["Gamma"] = to_fraction_string(p.gamma_fun);
    j["period"] = p.is_periodic() ? 3 : 1;
    j["aperiodic"] = !p.is_periodic();
    std::string body = j.dump(2) + "\n";
    std::cout << body;
    write_file(cfg.out_dir, "validate.json", body);
    return 0;
}

int cmd_realize(const WalkConfig& cfg) {
    const auto& p = cfg.walk;
    StandardBasis sb = standard_basis(p);
    EnergyMinimizer m = minimize_energy(p, sb.A_G);
    double residual = std::max({std::abs(m.u - sb.l), std::abs(m.v1 - sb.h2.x),
                                std::abs(m.v2 - sb.h2.y)});
    json j;
    j["command"] = "realize";
    j["input"] = walk_digest(p);
    j["A_G"] = to_decimal(sb.A_G);
    j["l"] = to_decimal(sb.l);
    j["h1"] = {to_decimal(sb.h1.x), to_decimal(sb.h1.y)};
    j["h2"] = {to_decimal(sb.h2.x), to_decimal(sb.h2.y)};
    j["h3"] = {to_decimal(sb.h3().x), to_decimal(sb.h3().y)};
    j["optimizer"] = {{"u", to_decimal(m.u)},
                      {"v1", to_decimal(m.v1)},
                      {"v2", to_decimal(m.v2)},
                      {"energy", to_decimal(m.value)},
                      {"residual", to_decimal(residual)}};
    std::string body = j.dump(2) + "\n";
    std::cout << body;
    write_file(cfg.out_dir, "realize.json", body);
    return 0;
}

int cmd_kernel(const WalkConfig& cfg, int n) {
    KernelMode mode = cfg.exact_mode ? KernelMode::Exact : KernelMode::Float;
    KernelTable table = KernelTable::delta(cfg.walk, mode);
    table.evolve(n);

    std::ostringstream csv;
    csv << "x1,x2,probability,fraction\n";
    json rows = json::array();
    for (std::int64_t i = -table.radius(); i <= table.radius(); ++i) {
        for (std::int64_t j = -table.radius(); j <= table.radius(); ++j) {
            LatticePoint y{i, j};
            double v = table.value_at(y);
            if (v == 0.0 && (mode == KernelMode::Float || table.exact_at(y) == 0)) continue;
            std::string frac = mode == KernelMode::Exact ? to_fraction_string(table.exact_at(y)) : "";
            csv << i << "," << j << "," << to_decimal(v) << "," << frac << "\n";
            json row;
            row["x1"] = i;
            row["x2"] = j;
            row["probability"] = to_decimal(v);
            if (mode == KernelMode::Exact) row["fraction"] = frac;
            rows.push_back(row);
        }
    }
    json j;
    j["command"] = "kernel";
    j["input"] = walk_digest(cfg.walk);
    j["n"] = n;
    j["mode"] = cfg.exact_mode ? "exact" : "float";
    j["entries"] = rows;
    write_file(cfg.out_dir, "kernel.csv", csv.str());
    write_file(cfg.out_dir, "kernel.json", j.dump(2) + "\n");
    std::cout << "kernel: n=" << n << ", support radius " << table.radius() << ", "
              << rows.size() << " entries -> " << cfg.out_dir << "/kernel.{csv,json}\n";
    return 0;
}

int cmd_expand(const WalkConfig& cfg, int order) {
    auto P = correction_polynomials(cfg.walk, order);
    json j;
    j["command"] = "expand";
    j["input"] = walk_digest(cfg.walk);
    j["order"] = order;
    json plist = json::array();
    for (int k = 1; k <= order; ++k) {
        const auto& poly = P[static_cast<std::size_t>(k - 1)];
        std::cout << "P_" << k << "(y) = " << poly.str("y1", "y2") << "\n";
        json terms = json::array();
        for (const auto& [key, coeff] : poly.terms()) {
            json t;
            t["d1"] = key.first;
            t["d2"] = key.second;
            t["coeff"] = to_fraction_string(coeff);
            terms.push_back(t);
        }
        plist.push_back({{"j", k}, {"terms", terms}});
    }
    j["P"] = plist;
    write_file(cfg.out_dir, "expand.json", j.dump(2) + "\n");
    return 0;
}

int cmd_compare(const WalkConfig& cfg, std::int64_t y1, std::int64_t y2,
                const std::vector<int>& n_grid, double tol) {
    const auto& p = cfg.walk;
    LatticePoint y{y1, y2};
    std::vector<double> r = a1_residuals(p, y, n_grid);
    std::vector<double> ns(n_grid.begin(), n_grid.end());
    std::vector<double> exps;
    for (std::size_t e = 1; e < ns.size(); ++e) exps.push_back(static_cast<double>(e));
    double extrapolant = richardson(ns, r, exps);
    Rational closed = a1_closed_form(p, Rational(y1), Rational(y2), A1Basis::StandardCoords);
    double closed_d = to_double(closed);

    std::ostringstream csv;
    csv << "n,residual,extrapolant,closed_form\n";
    for (std::size_t i = 0; i < ns.size(); ++i)
        csv << n_grid[i] << "," << to_decimal(r[i]) << "," << to_decimal(extrapolant) << ","
            << to_decimal(closed_d) << "\n";
    write_file(cfg.out_dir, "compare.csv", csv.str());

    SvgPlot plot("a1 residual r(n) vs 1/n", "1/n", "r(n)");
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < ns.size(); ++i) pts.push_back({1.0 / ns[i], r[i]});
    std::sort(pts.begin(), pts.end());
    plot.add_series("r(n)", pts);
    plot.add_hline("closed-form a1 = " + to_fraction_string(closed), closed_d);
    plot.write(cfg.out_dir + "/compare.svg");

    double err = std::abs(extrapolant - closed_d);
    std::cout << "y = (" << y1 << ", " << y2 << ")\n"
              << "closed-form a1 = " << to_fraction_string(closed) << " = " << to_decimal(closed_d)
              << "\nextrapolant    = " << to_decimal(extrapolant) << "\n|error|        = "
              << to_decimal(err) << (err <= tol ? "  (within tol " : "  (EXCEEDS tol ")
              << to_decimal(tol) << ")\n";
    return err <= tol ? 0 : 5;
}

int cmd_clt(const WalkConfig& cfg) {
    const auto& p = cfg.walk;
    StandardBasis sb = standard_basis(p);
    TestFunction f = TestFunction::gaussian(1.0);

    std::vector<double> deltas = {0.4, 0.2, 0.1, 0.05, 0.025};
    std::ostringstream gcsv;
    gcsv << "delta,generator_gap\n";
    std::vector<std::pair<double, double>> gpts;
    for (double d : deltas) {
        double gap = generator_gap(p, sb, f, d);
        gcsv << to_decimal(d) << "," << to_decimal(gap) << "\n";
        gpts.push_back({d, gap});
    }
    write_file(cfg.out_dir, "clt_generator.csv", gcsv.str());

    std::vector<int> ns = {25, 50, 100, 200, 400};
    std::ostringstream scsv;
    scsv << "n,semigroup_gap\n";
    std::vector<std::pair<double, double>> spts;
    for (int n : ns) {
        int nn = n;
        if (p.is_periodic()) nn = 3 * ((n + 2) / 3);  // stay on the return class
        double gap = semigroup_gap(p, sb, f, 1.0, nn, {0, 0});
        scsv << nn << "," << to_decimal(gap) << "\n";
        spts.push_back({static_cast<double>(nn), gap});
    }
    write_file(cfg.out_dir, "clt_semigroup.csv", scsv.str());

    SvgPlot plot("scaling limit gaps", "delta resp. n", "gap");
    plot.set_log_log(true);
    plot.add_series("generator gap(delta)", gpts);
    plot.add_series("semigroup gap(n)", spts);
    plot.write(cfg.out_dir + "/clt.svg");
    std::cout << "clt: wrote clt_generator.csv, clt_semigroup.csv, clt.svg under " << cfg.out_dir
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"n-step transition probabilities on the triangular lattice"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string config_path, mode_override, out_override, n_grid_csv = "64,128,256,512";
    int n = 8, order = 2;
    double tol = 0.02;
    std::vector<std::int64_t> yflag = {0, 0};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("config", config_path, "JSON config file")->required();
        sub->add_option("--mode", mode_override, "exact|float override");
        sub->add_option("--out", out_override, "output directory override");
    };
    auto* sv = app.add_subcommand("validate", "validate a step distribution");
    add_common(sv);
    auto* sr = app.add_subcommand("realize", "standard realization + optimizer cross-check");
    add_common(sr);
    auto* sk = app.add_subcommand("kernel", "n-step kernel table as CSV/JSON");
    add_common(sk);
    sk->add_option("--n", n, "number of steps")->check(CLI::NonNegativeNumber);
    auto* se = app.add_subcommand("expand", "correction polynomials P_1..P_N");
    add_common(se);
    se->add_option("--order", order, "expansion order N")->check(CLI::PositiveNumber);
    auto* sc = app.add_subcommand("compare", "numeric a1 vs closed form");
    add_common(sc);
    sc->add_option("--y", yflag, "target lattice point y1 y2")->expected(2);
    sc->add_option("--n-grid", n_grid_csv, "comma-separated n values");
    sc->add_option("--tol", tol, "acceptance tolerance on |extrapolant - closed form|");
    auto* sl = app.add_subcommand("clt", "generator and semigroup gap tables");
    add_common(sl);

    CLI11_PARSE(app, argc, argv);

    auto started = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        WalkConfig cfg = WalkConfig::load(config_path);
        if (!mode_override.empty()) cfg.exact_mode = mode_override != "float";
        if (!out_override.empty()) cfg.out_dir = out_override;

        if (sv->parsed()) rc = cmd_validate(cfg);
        else if (sr->parsed()) rc = cmd_realize(cfg);
        else if (sk->parsed()) rc = cmd_kernel(cfg, n);
        else if (se->parsed()) rc = cmd_expand(cfg, order);
        else if (sc->parsed()) rc = cmd_compare(cfg, yflag[0], yflag[1], parse_grid(n_grid_csv), tol);
        else if (sl->parsed()) rc = cmd_clt(cfg);
    } catch (const InvalidWalk& e) {
        std::cerr << "invalid walk: " << e.what() << "\n";
        return 2;
    } catch (const NonConvergence& e) {
        std::cerr << "optimizer failure: " << e.what() << "\n";
        return 3;
    } catch (const CapacityExceeded& e) {
        std::cerr << "capacity exceeded: " << e.what() << "\n";
        return 4;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    std::cerr << "[" << kVersion << "] done in " << ms << " ms\n";
    return rc;
}
