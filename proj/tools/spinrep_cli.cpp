// spinrep: command-line front end for the Majorana/T-rep/S-rep conversions.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "spinrep/angular.hpp"
#include "spinrep/io.hpp"
#include "spinrep/polynomial.hpp"
#include "spinrep/quasiprob.hpp"
#include "spinrep/render.hpp"
#include "spinrep/srep.hpp"
#include "spinrep/trep.hpp"

using namespace spinrep;

namespace {

enum Exit { ok = 0, malformed = 2, invalid = 3, numerical = 4 };

struct Settings {
    double tolerance = -1.0; ///< < 0 means module defaults
    bool no_hermit_check = false;

    double tol_or(double fallback) const { return tolerance > 0 ? tolerance : fallback; }
};

std::string read_all(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string& path) {
    std::istringstream ss(read_all(path));
    return parse_json(ss);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw InvalidArgument("cannot write '" + path + "'");
    out << text;
}

Matrix read_state(const std::string& path, const Settings& s) {
    return state_from_json(read_json(path), s.no_hermit_check ? -1.0 : s.tol_or(1e-8));
}

Matrix require_state(const Matrix& rho) {
    if (!is_density_matrix(rho, 1e-8, 1e-10))
        throw ValidationError("input is not a density matrix (unit trace, positive semidefinite)");
    return rho;
}

EulerAngles parse_euler(const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidArgument("--euler expects three comma-separated numbers, got '" + text + "'");
        }
    }
    if (v.size() != 3)
        throw InvalidArgument("--euler expects three comma-separated numbers, got '" + text + "'");
    return {v[0], v[1], v[2]};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Majorana representation of spin states"};
    app.require_subcommand(1);
    Settings settings;
    if (const char* env = std::getenv("SPINREP_TOL")) {
        try {
            settings.tolerance = std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "error: SPINREP_TOL is not a number\n";
            return malformed;
        }
    }
    app.add_option("--tolerance", settings.tolerance, "Override the default numerical tolerances");
    app.add_flag("--no-hermit-check", settings.no_hermit_check, "Accept non-Hermitian operators on load");

    std::string in, out, state_name, spin_text, m_text = "0", euler_text;
    double theta = 0.0, phi = 0.0;
    int constituents = 1, grid = 32;
    bool use_oracle = false, as_radii = false;

    auto* make = app.add_subcommand("make", "Write a named state");
    make->add_option("--state", state_name, "sc|dicke|ghz|w|cat-q|cat-c|mixed")->required();
    make->add_option("--spin", spin_text, "Spin as p/q")->required();
    make->add_option("--m", m_text, "Magnetic number for dicke, as p/q");
    make->add_option("--theta", theta, "Polar angle of the coherent state");
    make->add_option("--phi", phi, "Azimuth of the coherent state");
    make->add_option("--out", out);

    auto* trep = app.add_subcommand("trep", "Decompose a state into its T-representation");
    auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Rebuild the operator from a T-rep");
    auto* reduce_cmd = app.add_subcommand("reduce", "Trace out constituents");
    reduce_cmd->add_option("--constituents", constituents)->required();
    reduce_cmd->add_flag("--oracle", use_oracle, "Use the tensor-embedding oracle");
    auto* anticoherence_cmd = app.add_subcommand("anticoherence", "Anticoherence order and residuals");
    auto* husimi_cmd = app.add_subcommand("husimi", "Husimi function on a grid");
    auto* pfunction_cmd = app.add_subcommand("pfunction", "P-function on a grid");
    for (auto* c : {husimi_cmd, pfunction_cmd})
        c->add_option("--grid", grid, "Polar cells; 2n azimuthal cells")->check(CLI::PositiveNumber);
    auto* rotate_cmd = app.add_subcommand("rotate", "Apply U(R) rho U(R)^dagger");
    rotate_cmd->add_option("--euler", euler_text, "alpha,beta,gamma in radians (z-y-z)")->required();
    auto* srep_cmd = app.add_subcommand("srep", "S-representation coefficients");
    auto* render_cmd = app.add_subcommand("render", "SVG of a T-rep");
    render_cmd->add_flag("--spheres-as-radii", as_radii, "Concentric spheres of radius w");
    for (auto* c : {trep, reconstruct_cmd, reduce_cmd, anticoherence_cmd, husimi_cmd, pfunction_cmd, rotate_cmd,
                    srep_cmd, render_cmd})
        c->add_option("--in", in, "Input file (default stdin)");
    for (auto* c : {trep, reconstruct_cmd, reduce_cmd, husimi_cmd, pfunction_cmd, rotate_cmd, srep_cmd, render_cmd})
        c->add_option("--out", out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : malformed;
    }

    try {
        if (make->parsed()) {
            NamedStateSpec spec;
            spec.kind = parse_named_state(state_name);
            spec.spin = Spin::parse(spin_text);
            spec.two_m = parse_doubled(m_text);
            spec.direction = {theta, phi};
            write_text(out, dump(state_to_json(named_state(spec))));
        } else if (trep->parsed()) {
            const Matrix rho = read_state(in, settings);
            write_text(out, dump(trep_to_json(decompose(rho, settings.tol_or(1e-6)))));
        } else if (reconstruct_cmd->parsed()) {
            write_text(out, dump(state_to_json(reconstruct(trep_from_json(read_json(in))))));
        } else if (reduce_cmd->parsed()) {
            const Matrix rho = read_state(in, settings);
            Matrix red;
            if (use_oracle) {
                red = oracle::partial_trace(rho, constituents);
            } else {
                const MajoranaPoly p = poly_from_operator(rho);
                if (constituents < 0 || constituents > p.degree())
                    throw InvalidArgument("cannot trace out " + std::to_string(constituents) + " of " +
                                          std::to_string(p.degree()) + " constituents");
                red = operator_from_poly(partial_trace_L(p, constituents));
            }
            write_text(out, dump(state_to_json(red)));
        } else if (anticoherence_cmd->parsed()) {
            const Matrix rho = read_state(in, settings);
            const auto report = anticoherence(poly_from_operator(rho), settings.tol_or(1e-9));
            std::ostringstream os;
            char buf[64];
            os << "order " << report.order << "\n";
            for (size_t t = 0; t < report.residuals.size(); ++t) {
                std::snprintf(buf, sizeof buf, "%zu %.17g\n", t, report.residuals[t]);
                os << buf;
            }
            std::cout << os.str();
        } else if (husimi_cmd->parsed() || pfunction_cmd->parsed()) {
            const Matrix rho = require_state(read_state(in, settings));
            std::ostringstream os;
            if (husimi_cmd->parsed())
                write_grid_csv(os, grid, [&](const Star& n) { return husimi(rho, n); });
            else
                write_grid_csv(os, grid, [&](const Star& n) { return p_function(rho, n); });
            write_text(out, os.str());
        } else if (rotate_cmd->parsed()) {
            const Matrix rho = read_state(in, settings);
            write_text(out, dump(state_to_json(rotate_operator(rho, parse_euler(euler_text).rotation()))));
        } else if (srep_cmd->parsed()) {
            const Matrix rho = read_state(in, settings);
            write_text(out, dump(srep_to_json(srep_coefficients(rho))));
        } else if (render_cmd->parsed()) {
            write_text(out, render_svg(trep_from_json(read_json(in)), {as_radii}));
        }
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return malformed;
    } catch (const ValidationError& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return invalid;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return numerical;
    }
    return ok;
}
