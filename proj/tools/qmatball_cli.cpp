// qmatball: batch front end. Exit codes: 0 ok, 1 verification failure, 2 invalid input.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmatball/admissible.hpp"
#include "qmatball/coset.hpp"
#include "qmatball/grid.hpp"
#include "qmatball/json_io.hpp"
#include "qmatball/matrix_ball.hpp"
#include "qmatball/series.hpp"

using namespace qmatball;
using nlohmann::json;

namespace {

constexpr int kVerifyFail = 1;
constexpr int kBadInput = 2;

struct Config {
    int n = 2;
    double q = 0.5;
    int trunc = 6;
    double tol = 1e-10;
    std::string string_file;
    std::string perm_file;
    int fock = 0;
    std::string emit = "z";
    std::string out_file;
    bool oracle = false;
    double perturb = 0.0;
    int k = 1;
    int j = 1;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

void emit_text(const Config& c, const std::string& text) {
    if (c.out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.out_file);
    if (!out) throw InvalidInput("cannot write " + c.out_file);
    out << text;
}

void emit_json(const Config& c, const json& j) { emit_text(c, j.dump(2) + "\n"); }

AdmissibleString load_string(const Config& c) {
    if (c.string_file.empty()) throw InvalidInput("--string FILE is required");
    return io::string_from_json(read_json(c.string_file));
}

int cmd_count(const Config& c) {
    if (c.n < 0 || c.n > 8) throw InvalidInput("count: need 0 <= n <= 8");
    const auto gf = gf_counts(c.n);
    const std::size_t enumerated = c.n == 0 ? 1 : enumerate_admissible(c.n).size();
    const bool ok = BigInt(enumerated) == gf[static_cast<std::size_t>(c.n)];
    std::ostringstream s;
    s << enumerated << ' ' << gf[static_cast<std::size_t>(c.n)] << (ok ? " OK" : " MISMATCH") << '\n';
    emit_text(c, s.str());
    return ok ? 0 : kBadInput;
}

int cmd_enumerate(const Config& c) {
    if (c.n < 1 || c.n > 6) throw InvalidInput("enumerate: need 1 <= n <= 6");
    json list = json::array();
    for (const auto& ks : enumerate_admissible(c.n)) list.push_back(ks);
    emit_json(c, list);
    return 0;
}

// Brute force over S x S, only for small degree.
Permutation orbit_minimizer(const Permutation& sigma) {
    const int n = sigma.size() / 2;
    if (n > 4) throw InvalidInput("--oracle needs m <= 8");
    Permutation best = sigma;
    for (const auto& a : all_permutations(n))
        for (const auto& b : all_permutations(n)) {
            auto lift = [&](const Permutation& p) {
                auto im = p.images();
                for (int i = n + 1; i <= 2 * n; ++i) im.push_back(i);
                return Permutation(im);
            };
            const auto x = lift(a) * sigma * lift(b);
            if (length(x) < length(best) || (length(x) == length(best) && x < best)) best = x;
        }
    return best;
}

int cmd_minimize(const Config& c) {
    if (c.perm_file.empty()) throw InvalidInput("--perm FILE is required");
    const auto sigma = io::permutation_from_json(read_json(c.perm_file));
    const auto f = minimal_coset_rep(sigma);
    const int ls = length(sigma);
    const int lw = length(f.w);
    const int lg = length(f.left);
    const int lh = length(f.right);
    json out = {{"sigma", sigma.images()},
                {"w", f.w.images()},
                {"g", f.left.images()},
                {"h", f.right.images()},
                {"lengths", {{"sigma", ls}, {"w", lw}, {"g", lg}, {"h", lh}}},
                {"additive", ls == lw + lg + lh}};
    bool ok = ls == lw + lg + lh && f.left * f.w * f.right == sigma;
    if (c.oracle) {
        const auto brute = orbit_minimizer(sigma);
        out["oracle_w"] = brute.images();
        ok = ok && length(brute) == lw && brute == f.w;
    }
    emit_json(c, out);
    return ok ? 0 : kVerifyFail;
}

GeneratorImages<double> load_images(const Config& c) {
    if (c.fock > 0) return fock_rep<double>(c.fock, c.q, c.trunc);
    return rep_from_string<double>(load_string(c), c.q, c.trunc);
}

int cmd_build(const Config& c) {
    const auto g = load_images(c);
    json gens = json::array();
    for (int k = 1; k <= g.n; ++k)
        for (int j = 1; j <= g.n; ++j) {
            json e = {{"k", k}, {"j", j}};
            if (c.emit == "z") e["operator"] = io::to_json(g.at(k, j));
            else e["vacuum"] = io::complex_json(vacuum_element(g.at(k, j)));
            gens.push_back(e);
        }
    emit_json(c, {{"n", g.n}, {"q", g.q}, {"N", g.N}, {"f", g.f}, {"emit", c.emit}, {"generators", gens}});
    return 0;
}

int cmd_verify(const Config& c) {
    auto g = load_images(c);
    if (c.perturb != 0.0) {
        g.z[0] += std::complex<double>(c.perturb) * TensorOperator<double>::identity(g.f, g.N);
        g.zstar[0] = adjoint(g.z[0]);
    }
    auto reports = verify_relations(g);
    if (c.fock > 0) reports.push_back({"vacuum", {}, static_cast<double>(vacuum_annihilation(g)), 0});
    for (auto& r : contraction_check(g)) reports.push_back(std::move(r));
    if (g.n >= 2)
        for (auto& r : a_m_checks(g)) reports.push_back(std::move(r));
    if (c.oracle) {
        const auto grid = c.fock > 0 ? GridDiagram(c.fock) : grid_from_string(load_string(c));
        reports.push_back({"cross-construction", {}, static_cast<double>(images_distance(g, rep_from_grid<double>(grid, c.q, c.trunc))), 1});
    }
    json list = json::array();
    for (const auto& r : reports) list.push_back(io::to_json(r));
    const double worst = max_residual(reports);
    const bool pass = worst < c.tol;
    emit_json(c, {{"reports", list}, {"summary", {{"max_residual", worst}, {"pass", pass}, {"tol", c.tol}}}});
    return pass ? 0 : kVerifyFail;
}

int cmd_render(const Config& c) {
    emit_text(c, render_ascii(grid_from_string(load_string(c))));
    return 0;
}

int cmd_paths(const Config& c) {
    if (c.n < 1 || c.k < 1 || c.k > c.n || c.j < 1 || c.j > c.n) throw InvalidInput("paths: need 1 <= k, j <= n");
    json list = json::array();
    for (const auto& p : enumerate_paths(c.n, c.k, c.j)) {
        json steps = json::array();
        for (const auto& s : p.steps) steps.push_back({{"row", s.row}, {"col", s.col}, {"arrow", to_string(s.arrow)}});
        list.push_back({{"k", p.k}, {"j", p.j}, {"steps", steps}});
    }
    emit_json(c, list);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Config c;
    CLI::App app{"Quantum matrix ball representations: enumeration, construction and verification"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", c.out_file, "write output to FILE instead of stdout");
        sub->add_flag("--oracle", c.oracle, "run brute-force cross-checks");
    };
    auto add_rep = [&](CLI::App* sub) {
        sub->add_option("--q", c.q, "deformation parameter, 0 < q < 1")->check(CLI::Range(0.0, 1.0))->check([](const std::string& s) {
            const double v = std::stod(s);
            return v > 0.0 && v < 1.0 ? std::string() : std::string("q must lie strictly between 0 and 1");
        });
        sub->add_option("--trunc", c.trunc, "truncation level N (>= 3)")->check(CLI::Range(3, 64));
        sub->add_option("--string", c.string_file, "admissible string JSON");
        sub->add_option("--fock", c.fock, "use the Fock representation of size n")->check(CLI::Range(1, 3));
    };

    auto* count = app.add_subcommand("count", "A_n by enumeration and by generating function");
    count->add_option("--n", c.n)->required();
    auto* enumerate = app.add_subcommand("enumerate", "list admissible sequences [k_n, ..., k_1]");
    enumerate->add_option("--n", c.n)->required();
    auto* minimize = app.add_subcommand("minimize", "minimal double coset representative");
    minimize->add_option("--perm", c.perm_file, "permutation JSON")->required();
    auto* build = app.add_subcommand("build", "generator images of a representation");
    add_rep(build);
    build->add_option("--emit", c.emit, "z | matrix-elements")->check(CLI::IsMember({"z", "matrix-elements"}));
    auto* verify = app.add_subcommand("verify", "relation, vacuum, contraction and A_m suites");
    add_rep(verify);
    verify->add_option("--tol", c.tol, "pass threshold")->check(CLI::PositiveNumber);
    verify->add_option("--perturb", c.perturb, "add eps * I to z_1^1 (harness self-test)");
    auto* render = app.add_subcommand("render", "ASCII grid diagram of a string");
    render->add_option("--string", c.string_file, "admissible string JSON")->required();
    auto* paths = app.add_subcommand("paths", "lattice paths from column k to row j");
    paths->add_option("--n", c.n)->required();
    paths->add_option("--k", c.k)->required();
    paths->add_option("--j", c.j)->required();
    for (auto* sub : {count, enumerate, minimize, build, verify, render, paths}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (count->parsed()) return cmd_count(c);
        if (enumerate->parsed()) return cmd_enumerate(c);
        if (minimize->parsed()) return cmd_minimize(c);
        if (build->parsed()) return cmd_build(c);
        if (verify->parsed()) return cmd_verify(c);
        if (render->parsed()) return cmd_render(c);
        if (paths->parsed()) return cmd_paths(c);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const ResourceLimit& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}
