#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qmatball/admissible.hpp"
#include "qmatball/grid.hpp"
#include "qmatball/relations.hpp"
#include "qmatball/soibelman.hpp"
#include "qmatball/tensor_operator.hpp"

namespace qmatball {

/// Images pi(z_k^j) and their adjoints for one representation of Pol(Mat_n)_q.
template <typename Scalar = double>
struct GeneratorImages {
    int n = 0;
    Scalar q = Scalar(0.5);
    int N = 0;
    int f = 0;
    std::vector<TensorOperator<Scalar>> z;      // (k-1)*n + (j-1)
    std::vector<TensorOperator<Scalar>> zstar;  // same layout
    std::string provenance;

    const TensorOperator<Scalar>& at(int k, int j) const { return z[slot(k, j)]; }
    const TensorOperator<Scalar>& star(int k, int j) const { return zstar[slot(k, j)]; }
    const TensorOperator<Scalar>& get(const GenRef& g) const { return g.star ? star(g.row, g.col) : at(g.row, g.col); }

    std::size_t slot(int k, int j) const {
        if (k < 1 || k > n || j < 1 || j > n) throw InvalidInput("generator index out of range");
        return static_cast<std::size_t>((k - 1) * n + (j - 1));
    }
};

/// Word of the block swap used for the Fock representation: column c contributes
/// s_{c+n-1}, s_{c+n-2}, ..., s_c. It is compose_word([n, ..., n]) read backwards.
inline ReducedWord fock_word(int n) {
    if (n < 1) throw InvalidInput("n must be >= 1");
    ReducedWord w{2 * n, {}};
    for (int c = 1; c <= n; ++c)
        for (int r = c + n - 1; r >= c; --r) w.letters.push_back(r);
    return w;
}

/// pi_s o zeta for the block swap s: z_k^j -> (-q)^{k-n} pi_s(t_{n+k, n+j}).
template <typename Scalar = double>
GeneratorImages<Scalar> fock_rep(int n, Scalar q, int N, std::uint64_t cap = kDefaultStateCap) {
    const auto word = fock_word(n);
    if (state_size(static_cast<int>(word.length()), N, cap) == 0)
        throw ResourceLimit("Fock space N^(n^2) = " + std::to_string(N) + "^" + std::to_string(word.length()) +
                            " exceeds the cap of " + std::to_string(cap) + " states; lower N");
    SoibelmanRep<Scalar> rep(word, q, N);
    TBlocks<Scalar> blocks(q, N);
    GeneratorImages<Scalar> g{n, q, N, rep.factor_count(), {}, {}, "fock n=" + std::to_string(n)};
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j) {
            const std::complex<Scalar> pre(std::pow(-q, k - n), 0);
            g.z.push_back(pre * rep_generator(rep, n + k, n + j, blocks));
            g.zstar.push_back(adjoint(g.z.back()));
        }
    return g;
}

/// tau assignments for the colored cells of a grid, keyed by Fock factor index.
template <typename Scalar = double>
FactorEvaluation<Scalar> grid_evaluation(const GridDiagram& grid) {
    FactorEvaluation<Scalar> ev;
    for (int row = 1; row <= grid.n(); ++row)
        for (int col = 1; col <= grid.n(); ++col) {
            const Cell& c = grid.at(row, col);
            if (c.color == CellColor::White) continue;
            ev.assignments[grid.factor_index(row, col)] = c.color == CellColor::Light ? static_cast<Scalar>(c.phase) : Scalar(0);
        }
    return ev;
}

/// Fock representation with tau_phi applied to every colored cell of grid_from_string(s).
template <typename Scalar = double>
GeneratorImages<Scalar> rep_from_string(const AdmissibleString& s, Scalar q, int N, std::uint64_t cap = kDefaultStateCap) {
    const auto fock = fock_rep<Scalar>(s.n(), q, N, cap);
    const auto ev = grid_evaluation<Scalar>(grid_from_string(s));
    GeneratorImages<Scalar> g{s.n(), q, N, fock.f - static_cast<int>(ev.assignments.size()), {}, {}, "string"};
    for (const auto& op : fock.z) {
        g.z.push_back(apply_tau(op, ev));
        g.zstar.push_back(adjoint(g.z.back()));
    }
    return g;
}

/// Same images built by the path calculus instead of the coproduct.
template <typename Scalar = double>
GeneratorImages<Scalar> rep_from_grid(const GridDiagram& grid, Scalar q, int N) {
    const int n = grid.n();
    GeneratorImages<Scalar> g{n, q, N, static_cast<int>(grid.white_cells().size()), {}, {}, "paths"};
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j) {
            g.z.push_back(synthesize_z<Scalar>(grid, k, j, q, N));
            g.zstar.push_back(adjoint(g.z.back()));
        }
    return g;
}

struct RelationReport {
    std::string relation;
    std::vector<int> indices;
    double residual = 0.0;
    int window = 0;
};

template <typename Scalar>
std::vector<ScaledProduct<Scalar>> to_products(const GeneratorImages<Scalar>& g, const Expression& e,
                                               const TensorOperator<Scalar>& unit) {
    std::vector<ScaledProduct<Scalar>> out;
    for (const auto& [mono, coeff] : e.terms()) {
        ScaledProduct<Scalar> p{std::complex<Scalar>(coeff.evaluate(g.q)), {}};
        if (mono.empty()) p.ops.push_back(&unit);
        for (const auto& gen : mono) p.ops.push_back(&g.get(gen));
        out.push_back(std::move(p));
    }
    return out;
}

template <typename Scalar>
Scalar expression_residual(const GeneratorImages<Scalar>& g, const Expression& e, int d) {
    const auto unit = TensorOperator<Scalar>::identity(g.f, g.N);
    return residual_of_sum(to_products(g, e, unit), g.f, g.N, d);
}

/// Every quadratic relation, case and R-form instance, on the window d = 2.
template <typename Scalar = double>
std::vector<RelationReport> verify_relations(const GeneratorImages<Scalar>& g) {
    std::vector<RelationReport> out;
    for (const auto& inst : matrix_ball_relations(g.n)) {
        out.push_back({relation_name(inst.id), {inst.indices.begin(), inst.indices.end()},
                       static_cast<double>(expression_residual(g, inst.expr, 2)), 2});
    }
    return out;
}

/// True iff the R-matrix form and the four-case expansion agree coefficient by coefficient.
inline bool r_form_matches_cases(int n) {
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int al = 1; al <= n; ++al)
                for (int be = 1; be <= n; ++be)
                    if (!(r_form(n, a, b, al, be) == case_form(n, a, b, al, be))) return false;
    return true;
}

inline double max_residual(const std::vector<RelationReport>& r) {
    double m = 0.0;
    for (const auto& x : r) m = std::max(m, x.residual);
    return m;
}

/// A = [a_{k,j}] row-major, k, j = 1..n.
using MonomialExponent = std::vector<std::vector<int>>;

inline int degree(const MonomialExponent& a) {
    int s = 0;
    for (const auto& row : a)
        for (int x : row) s += x;
    return s;
}

/// z(A) = (z_n^n)^{a_nn} (z_n^{n-1})^{a_{n,n-1}} ... (z_1^1)^{a_11}; |A| must not exceed `cap`
/// (default N - 2).
template <typename Scalar = double>
TensorOperator<Scalar> z_monomial(const GeneratorImages<Scalar>& g, const MonomialExponent& a, int cap = -1) {
    if (static_cast<int>(a.size()) != g.n) throw InvalidInput("exponent matrix must be n x n");
    for (const auto& row : a) {
        if (static_cast<int>(row.size()) != g.n) throw InvalidInput("exponent matrix must be n x n");
        for (int x : row)
            if (x < 0) throw InvalidInput("exponents must be nonnegative");
    }
    if (cap < 0) cap = g.N - 2;
    if (degree(a) > cap) throw InvalidInput("monomial degree exceeds the cap");
    auto out = TensorOperator<Scalar>::identity(g.f, g.N);
    for (int k = g.n; k >= 1; --k)
        for (int j = g.n; j >= 1; --j)
            for (int e = 0; e < a[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)]; ++e) out = out * g.at(k, j);
    return out;
}

/// <op e_0, e_0>.
template <typename Scalar = double>
std::complex<Scalar> vacuum_expectation(const GeneratorImages<Scalar>& g, const TensorOperator<Scalar>& op) {
    if (op.factor_count() != g.f || op.dim() != g.N) throw InvalidInput("operator shape mismatch");
    return vacuum_element(op);
}

/// sum_j q^{2n-alpha-beta} z_j^alpha (z_j^beta)* - delta_{alpha beta} I.
template <typename Scalar = double>
TensorOperator<Scalar> shilov_generator(const GeneratorImages<Scalar>& g, int alpha, int beta) {
    auto out = TensorOperator<Scalar>::zero(g.f, g.N);
    const std::complex<Scalar> c(std::pow(g.q, 2 * g.n - alpha - beta), 0);
    for (int j = 1; j <= g.n; ++j) out += c * (g.at(j, alpha) * g.star(j, beta));
    if (alpha == beta) out += std::complex<Scalar>(-1) * TensorOperator<Scalar>::identity(g.f, g.N);
    return out;
}

template <typename Scalar = double>
Scalar shilov_residual(const GeneratorImages<Scalar>& g, int alpha, int beta) {
    return residual_on_window(shilov_generator(g, alpha, beta), TensorOperator<Scalar>::zero(g.f, g.N), 2);
}

/// True iff k_i < i for every i: the diagram is white only inside the strictly lower-right triangle.
inline bool annihilates_shilov(const AdmissibleString& s) {
    for (int i = 1; i <= s.n(); ++i)
        if (s.k(i) >= i) return false;
    return true;
}

enum class RepCase { A, B };

/// B iff row n and column n of the grid are entirely white.
inline RepCase classify_case(const AdmissibleString& s) {
    const auto grid = grid_from_string(s);
    for (int i = 1; i <= s.n(); ++i)
        if (grid.at(s.n(), i).color != CellColor::White || grid.at(i, s.n()).color != CellColor::White) return RepCase::A;
    return RepCase::B;
}

/// [(3,0),(3,0),(2,phi)] with Omega = e_0: max of ||(z_j^i)* Omega|| for (i,j) != (1,1) and
/// ||(z_1^1)* Omega - e^{-i phi} Omega||.
template <typename Scalar = double>
Scalar coherent_check(Scalar q, int N, Scalar phi) {
    const AdmissibleString s({3, 3, 2}, {0.0, 0.0, static_cast<double>(phi)});
    const auto g = rep_from_string<Scalar>(s, q, N);
    const std::vector<int> zero(static_cast<std::size_t>(g.f), 0);
    Scalar worst(0);
    for (int k = 1; k <= 3; ++k)
        for (int j = 1; j <= 3; ++j) {
            auto img = apply_to_basis(g.star(k, j), zero);
            if (k == 1 && j == 1) img.push_back({0, -std::polar(Scalar(1), -phi)});
            detail::compact(img);
            Scalar sq(0);
            for (const auto& e : img) sq += std::norm(e.second);
            worst = std::max(worst, std::sqrt(sq));
        }
    return worst;
}

/// A_m = I - sum_{j=m}^n z_j^n (z_j^n)*.
template <typename Scalar = double>
TensorOperator<Scalar> a_m(const GeneratorImages<Scalar>& g, int m) {
    auto out = TensorOperator<Scalar>::identity(g.f, g.N);
    for (int j = m; j <= g.n; ++j) out += std::complex<Scalar>(-1) * (g.at(j, g.n) * g.star(j, g.n));
    return out;
}

/// Commutation of z_j^n with A_m (exact for j < m, q^2-twisted for j >= m) on window 3, and the
/// alternative form of A_m on window 2.
template <typename Scalar = double>
std::vector<RelationReport> a_m_checks(const GeneratorImages<Scalar>& g) {
    if (g.n < 2) throw InvalidInput("a_m_checks needs n >= 2");
    std::vector<RelationReport> out;
    const int n = g.n;
    for (int m = 1; m <= n; ++m) {
        const auto am = a_m(g, m);
        for (int j = 1; j <= n; ++j) {
            const auto& zj = g.at(j, n);
            const std::complex<Scalar> c(j < m ? Scalar(1) : g.q * g.q);
            const Scalar r = residual_of_sum<Scalar>({{c, {&zj, &am}}, {std::complex<Scalar>(-1), {&am, &zj}}}, g.f, g.N, 3);
            out.push_back({j < m ? "A_m-comm" : "A_m-qcomm", {m, j}, static_cast<double>(r), 3});
        }
        const auto& zm = g.at(m, n);
        const auto& zms = g.star(m, n);
        const std::complex<Scalar> inv(1 / (1 - g.q * g.q));
        const Scalar r = residual_of_sum<Scalar>({{std::complex<Scalar>(1), {&am}}, {-inv, {&zms, &zm}}, {inv, {&zm, &zms}}}, g.f, g.N, 2);
        out.push_back({"A_m-alt", {m}, static_cast<double>(r), 2});
    }
    return out;
}

/// Power-iteration norms of the last column z_1^n..z_n^n and last row z_n^{n-1}..z_n^1; the report's
/// residual is max(0, norm - 1).
template <typename Scalar = double>
std::vector<RelationReport> contraction_check(const GeneratorImages<Scalar>& g, int iters = 60) {
    std::vector<RelationReport> out;
    auto one = [&](int k, int j) {
        const Scalar est = norm_estimate(g.at(k, j), iters);
        out.push_back({"contraction", {k, j}, std::max(0.0, static_cast<double>(est) - 1.0), 0});
    };
    for (int k = 1; k <= g.n; ++k) one(k, g.n);
    for (int j = g.n - 1; j >= 1; --j) one(g.n, j);
    return out;
}

/// max ||pi(z_k^j)* e_0|| over all generators; exactly zero for a vacuum vector.
template <typename Scalar = double>
Scalar vacuum_annihilation(const GeneratorImages<Scalar>& g) {
    const std::vector<int> zero(static_cast<std::size_t>(g.f), 0);
    Scalar worst(0);
    for (const auto& op : g.zstar) {
        Scalar sq(0);
        for (const auto& e : apply_to_basis(op, zero)) sq += std::norm(e.second);
        worst = std::max(worst, std::sqrt(sq));
    }
    return worst;
}

/// Window residual between two constructions, max over all generators.
template <typename Scalar = double>
Scalar images_distance(const GeneratorImages<Scalar>& a, const GeneratorImages<Scalar>& b, int d = 1) {
    if (a.n != b.n || a.f != b.f || a.N != b.N) throw InvalidInput("generator image shapes differ");
    Scalar worst(0);
    for (std::size_t i = 0; i < a.z.size(); ++i) worst = std::max(worst, residual_on_window(a.z[i], b.z[i], d));
    return worst;
}

}  // namespace qmatball
