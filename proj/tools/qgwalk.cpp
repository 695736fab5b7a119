// qgwalk: verify, explore and export finite quantum groups and the random
// walks on them.
//
// Exit codes: 0 success, 1 axiom failure or numerical failure, 2 usage error
// or unsupported request.

#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qgw/io.hpp"

using namespace qgw;

namespace {

struct Options {
    std::string group_positional;
    std::string group_flag;
    std::string state = "simple";
    int kmax = 10;
    std::string out;
    std::uint64_t seed = 1;
    std::string irreps_path;
    CLI::Option* irreps_opt = nullptr;

    std::string group() const {
        if (!group_positional.empty() && !group_flag.empty() && group_positional != group_flag)
            throw SpecError("group given twice with different values");
        const std::string g = group_flag.empty() ? group_positional : group_flag;
        if (g.empty()) throw SpecError("no group given");
        return g;
    }
    bool irreps_requested() const { return irreps_opt && irreps_opt->count() > 0; }
    std::optional<std::string> irreps_file() const {
        if (irreps_requested() && !irreps_path.empty()) return irreps_path;
        return std::nullopt;
    }
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) std::cout << text;
    else write_text_file(o.out, text);
}

int cmd_verify(const Options& o) {
    const ResolvedGroup g = resolve_group(o.group());
    const AxiomReport report = verify(g.descriptor);
    json j = report_to_json(report);
    j["label"] = g.descriptor.label;
    bool ok = report.accepted(kAxiomTolerance);

    std::optional<IrrepTable> table;
    if (o.irreps_requested()) table = resolve_irreps(g, o.irreps_file());
    else if (g.irreps) table = g.irreps;
    if (table) {
        const IrrepDiagnostics d = check_irreps(g.quantum_group(), *table);
        j["irreps"] = diagnostics_to_json(d);
        ok = ok && d.accepted();
    } else {
        j["irreps"] = nullptr;
        j["irreps_missing"] = g.irreps_missing;
    }
    j["ok"] = ok;
    emit(o, j.dump(2) + "\n");
    return ok ? 0 : 1;
}

int cmd_walk(const Options& o) {
    if (o.kmax < 1) throw SpecError("--kmax must be at least 1");
    const ResolvedGroup g = resolve_group(o.group());
    const QuantumGroup& qg = g.quantum_group();
    const IrrepTable irreps = resolve_irreps(g, o.irreps_file());
    const Functional nu = resolve_state(o.state, g, o.seed);
    require_state(nu, qg, 1e-9);
    const BoundSeries series = run_experiment(qg, irreps, nu, o.kmax);
    std::ostringstream csv;
    write_csv(series, csv);
    emit(o, csv.str());
    return 0;
}

// Closed-form bounds for the catalog walks, next to the generic lemmas.
struct ClosedForms {
    std::function<std::optional<double>(int)> ubl, upper, lower;
};

std::optional<double> guarded(const std::function<double()>& f) {
    try {
        return f();
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

bool same_state(const Functional& a, const Functional& b) { return a.shape() == b.shape() && max_diff(a, b) < 1e-12; }

KpParams kp_params_of(const Functional& nu) {
    const Vec& c = nu.coeffs();
    KpParams p;
    for (int i = 0; i < 4; ++i) p.mu[i] = c(i).real();
    p.mu[4] = (c(4) + c(7)).real();
    if (p.mu[4] > 0) {
        p.z = (c(4) - c(7)).real() / p.mu[4];
        p.x = 2.0 * c(5).real() / p.mu[4];
        p.y = -2.0 * c(5).imag() / p.mu[4];
    }
    return p;
}

ClosedForms closed_forms(const ResolvedGroup& g, const Functional& nu, std::uint64_t seed) {
    ClosedForms f;
    auto family_walk = [&](const std::string& spec) {
        try {
            return same_state(nu, resolve_state(spec, g, seed));
        } catch (const Error&) {
            return false;
        }
    };
    const int n = g.order;
    auto sum_ubl = [](const std::vector<std::pair<std::string, double>>& c) {
        double s = 0.0;
        for (const auto& [name, v] : c) s += v;
        return std::sqrt(0.25 * s);
    };
    switch (g.family) {
    case Family::zn:
        if (!family_walk("simple")) break;
        f.ubl = [=](int k) { return guarded([&] { return sum_ubl(zn_contributions(n, k)); }); };
        f.upper = [=](int k) { return guarded([&] { return zn_upper(n, k).value; }); };
        f.lower = [=](int k) { return guarded([&] { return zn_lower(n, k).value; }); };
        break;
    case Family::cube:
        if (!family_walk("simple")) break;
        f.upper = [=](int k) {
            const double c = 4.0 * k / (n + 1) - std::log(static_cast<double>(n));
            return guarded([&] { return std::sqrt(cube_upper_squared(n, c).value); });
        };
        break;
    case Family::sekine:
        if (!family_walk("preset:sekine-walk")) break;
        f.ubl = [=](int k) { return guarded([&] { return sum_ubl(sekine_contributions(n, k)); }); };
        f.upper = [=](int k) {
            const double alpha = (k - n * n / 80.0) / (static_cast<double>(n) * n);
            return guarded([&] { return sekine_upper(n, alpha).value; });
        };
        f.lower = [=](int k) { return guarded([&] { return sekine_lower(n, k).value; }); };
        break;
    case Family::kp: {
        const KpParams p = kp_params_of(nu);
        f.ubl = [=](int k) { return guarded([&] { return kp_symmetric_upper(p, k).value; }); };
        if (family_walk("preset:example2")) {
            f.upper = [](int k) { return guarded([&] { return kp_example2_upper(k).value; }); };
            f.lower = [](int k) { return guarded([&] { return kp_example2_lower(k).value; }); };
        }
        break;
    }
    case Family::group_algebra:
        if (!g.symmetric_group || !family_walk("preset:perm")) break;
        f.upper = [=](int k) {
            const double alpha = k / std::pow(static_cast<double>(n), n);
            return guarded([&] { return std::sqrt(dual_sn_upper_squared(n, alpha).value); });
        };
        f.lower = [=](int k) {
            const double beta = k / (std::pow(static_cast<double>(n), n) - 1.0);
            return guarded([&] { return std::sqrt(dual_sn_lower_squared(n, beta).value); });
        };
        break;
    default: break;
    }
    return f;
}

int cmd_bounds(const Options& o) {
    if (o.kmax < 1) throw SpecError("--kmax must be at least 1");
    const ResolvedGroup g = resolve_group(o.group());
    const QuantumGroup& qg = g.quantum_group();
    const IrrepTable irreps = resolve_irreps(g, o.irreps_file());
    const Functional nu = resolve_state(o.state, g, o.seed);
    require_state(nu, qg, 1e-9);
    const auto blocks = fourier_blocks(nu, irreps);
    const ClosedForms f = closed_forms(g, nu, o.seed);
    auto cell = [](const std::function<std::optional<double>(int)>& fn, int k) {
        if (!fn) return std::string();
        const auto v = fn(k);
        return v ? format_double(*v) : std::string();
    };
    std::ostringstream csv;
    csv << "k,ubl,lbl,closed_ubl,closed_upper,closed_lower\n";
    for (int k = 1; k <= o.kmax; ++k) {
        csv << k << ',' << format_double(ubl_from_blocks(blocks, irreps, k).value) << ','
            << format_double(lbl_from_blocks(blocks, k)) << ',' << cell(f.ubl, k) << ',' << cell(f.upper, k) << ','
            << cell(f.lower, k) << '\n';
    }
    emit(o, csv.str());
    return 0;
}

int cmd_export(const Options& o) {
    const ResolvedGroup g = resolve_group(o.group());
    std::optional<IrrepTable> table = g.irreps;
    if (o.irreps_requested()) table = resolve_irreps(g, o.irreps_file());
    emit(o, descriptor_to_json(g.quantum_group(), table).dump(1) + "\n");
    return 0;
}

int cmd_describe(const Options& o) {
    const ResolvedGroup g = resolve_group(o.group());
    const AxiomReport r = verify(g.descriptor);
    json j;
    j["label"] = g.descriptor.label;
    j["dim"] = g.descriptor.dim;
    j["quantum_group"] = g.group.has_value();
    if (g.group) {
        j["blocks"] = g.group->shape.dims();
        j["haar_weights"] = g.group->haar.weights();
    }
    j["commutative"] = r.commutative;
    j["cocommutative"] = r.cocommutative;
    j["kac_residual"] = r.kac;
    if (g.irreps) {
        json list = json::array();
        for (const Irrep& i : g.irreps->irreps) list.push_back({{"name", i.name}, {"dim", i.dim}});
        j["irreps"] = list;
    } else {
        j["irreps"] = nullptr;
        j["irreps_missing"] = g.irreps_missing;
    }
    emit(o, j.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random walks on finite quantum groups"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool walk_options) {
        sub->add_option("spec", o.group_positional, "group spec (kp, sekine:N, zn:N, cube:N, f:G, dual:G, sweedler, file:PATH)");
        sub->add_option("--group", o.group_flag, "group spec");
        sub->add_option("--out", o.out, "output file (default stdout)");
        o.irreps_opt = nullptr;
        CLI::Option* irr = sub->add_option("--irreps", o.irreps_path, "require an irrep table, optionally read from PATH")
                               ->expected(0, 1);
        if (walk_options) {
            sub->add_option("--state", o.state, "state spec")->capture_default_str();
            sub->add_option("--kmax", o.kmax, "largest convolution power")->capture_default_str();
            sub->add_option("--seed", o.seed, "seed for random states")->capture_default_str();
        }
        return irr;
    };

    struct Command {
        CLI::App* app;
        CLI::Option* irreps;
        int (*run)(const Options&);
    };
    std::vector<Command> commands;
    auto add = [&](const char* name, const char* help, bool walk_options, int (*run)(const Options&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        commands.push_back({sub, add_common(sub, walk_options), run});
    };
    add("verify", "check the Hopf axioms and the irrep table", false, cmd_verify);
    add("walk", "exact distances and bound lemmas along a walk (CSV)", true, cmd_walk);
    add("bounds", "generic and closed-form bounds along a walk (CSV)", true, cmd_bounds);
    add("export", "write a descriptor JSON", false, cmd_export);
    add("describe", "summarise a group", false, cmd_describe);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    for (const Command& c : commands) {
        if (!c.app->parsed()) continue;
        o.irreps_opt = c.irreps;
        try {
            return c.run(o);
        } catch (const SpecError& e) {
            std::cerr << "qgwalk: " << e.what() << '\n';
            return 2;
        } catch (const UnsupportedError& e) {
            std::cerr << "qgwalk: unsupported: " << e.what() << '\n';
            return 2;
        } catch (const DomainError& e) {
            std::cerr << "qgwalk: " << e.what() << '\n';
            return 2;
        } catch (const ValidationError& e) {
            std::cerr << "qgwalk: invalid input: " << e.what() << '\n';
            return 2;
        } catch (const StructuralError& e) {
            std::cerr << "qgwalk: invalid input: " << e.what() << '\n';
            return 2;
        } catch (const std::exception& e) {
            std::cerr << "qgwalk: " << e.what() << '\n';
            return 1;
        }
    }
    return 2;
}
