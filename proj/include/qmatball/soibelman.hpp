#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "qmatball/admissible.hpp"
#include "qmatball/permutation.hpp"
#include "qmatball/tensor_operator.hpp"

namespace qmatball {

/// pi_s (x) chi_phi for a reduced word of s in S_m, truncated at level N.
template <typename Scalar = double>
struct SoibelmanRep {
    int m = 0;
    ReducedWord word;
    Scalar q = Scalar(0.5);
    int N = 6;
    std::optional<std::vector<Scalar>> phases;

    SoibelmanRep(ReducedWord w, Scalar q_, int n_, std::optional<std::vector<Scalar>> ph = std::nullopt)
        : m(w.m), word(std::move(w)), q(q_), N(n_), phases(std::move(ph)) {
        if (!is_reduced(word)) throw InvalidInput("word is not reduced");
        detail::check_q(q);
        detail::check_dim(N);
        if (phases) {
            if (static_cast<int>(phases->size()) != m) throw InvalidInput("phase vector must have length m");
            Scalar sum(0);
            for (Scalar p : *phases) sum += p;
            if (!same_phase(static_cast<double>(sum), 0.0)) throw InvalidInput("phases must sum to 0 mod 2*pi");
        }
    }

    int factor_count() const { return static_cast<int>(word.length()); }
};

/// The four T blocks, built once and shared by every term of a construction.
template <typename Scalar = double>
struct TBlocks {
    std::array<std::array<FactorPtr<Scalar>, 2>, 2> t;
    TBlocks(Scalar q, int n) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t_block<Scalar>(i + 1, j + 1, q, n);
    }
    const FactorPtr<Scalar>& operator()(int i, int j) const {
        return t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
};

/// pi_i(t_kl) in C[SU_m]_q: a T block when k, l in {i, i+1}, else delta_kl times the identity.
template <typename Scalar = double>
struct ElementaryImage {
    FactorPtr<Scalar> factor;  // null: scalar multiple of the identity
    Scalar scalar = 0;
};

template <typename Scalar = double>
ElementaryImage<Scalar> pi_elementary(int i, int m, Scalar q, int N, int k, int l) {
    if (m < 2 || i < 1 || i > m - 1) throw InvalidInput("pi_elementary: need 1 <= i <= m-1");
    if (k < 1 || k > m || l < 1 || l > m) throw InvalidInput("pi_elementary: generator index out of range");
    const bool kin = k == i || k == i + 1;
    const bool lin = l == i || l == i + 1;
    if (kin && lin) return {t_block<Scalar>(k - i + 1, l - i + 1, q, N), Scalar(1)};
    return {nullptr, k == l ? Scalar(1) : Scalar(0)};
}

/// pi_s(t_kl) via the coproduct: sum over intermediate indices k = r_0, r_1, ..., r_f = l of
/// pi_{a_1}(t_{r_0 r_1}) (x) ... (x) pi_{a_f}(t_{r_{f-1} r_f}). Only band-compatible paths are
/// expanded; terms come out in lexicographic order of (r_1, ..., r_{f-1}).
template <typename Scalar = double>
TensorOperator<Scalar> rep_generator(const SoibelmanRep<Scalar>& rep, int k, int l, const TBlocks<Scalar>& blocks) {
    if (k < 1 || k > rep.m || l < 1 || l > rep.m) throw InvalidInput("generator index out of range");
    const int f = rep.factor_count();
    TensorOperator<Scalar> out(f, rep.N);
    std::vector<FactorPtr<Scalar>> factors(static_cast<std::size_t>(f));
    const auto& letters = rep.word.letters;

    auto walk = [&](auto& self, int pos, int r) -> void {
        if (pos == f) {
            if (r == l) out.add_term({std::complex<Scalar>(1), factors});
            return;
        }
        const int a = letters[static_cast<std::size_t>(pos)];
        if (r == a || r == a + 1) {
            for (int next = a; next <= a + 1; ++next) {
                factors[static_cast<std::size_t>(pos)] = blocks(r - a + 1, next - a + 1);
                self(self, pos + 1, next);
            }
            factors[static_cast<std::size_t>(pos)] = nullptr;
        } else {
            self(self, pos + 1, r);
        }
    };
    walk(walk, 0, k);

    if (rep.phases) return std::polar(Scalar(1), (*rep.phases)[static_cast<std::size_t>(l - 1)]) * out;
    return out;
}

template <typename Scalar = double>
TensorOperator<Scalar> rep_generator(const SoibelmanRep<Scalar>& rep, int k, int l) {
    return rep_generator(rep, k, l, TBlocks<Scalar>(rep.q, rep.N));
}

/// tau_phi assignments: 1-based factor index -> phase.
template <typename Scalar = double>
struct FactorEvaluation {
    std::map<int, Scalar> assignments;
};

/// Replaces each assigned factor by its tau_phi value; zero terms are dropped and the factor count
/// shrinks by the number of assignments.
template <typename Scalar = double>
TensorOperator<Scalar> apply_tau(const TensorOperator<Scalar>& op, const FactorEvaluation<Scalar>& ev) {
    const int f = op.factor_count();
    for (const auto& [idx, phi] : ev.assignments)
        if (idx < 1 || idx > f) throw InvalidInput("tau assignment index out of range");
    TensorOperator<Scalar> out(f - static_cast<int>(ev.assignments.size()), op.dim());
    for (const auto& t : op.terms()) {
        TensorTerm<Scalar> nt{t.scalar, {}};
        for (int i = 0; i < f; ++i) {
            const auto& m = t.factors[static_cast<std::size_t>(i)];
            auto it = ev.assignments.find(i + 1);
            if (it == ev.assignments.end()) {
                nt.factors.push_back(m);
                continue;
            }
            auto v = tau(m, it->second);
            if (!v) throw InvalidInput("factor is not expressible in the primitive set");
            nt.scalar *= *v;
        }
        out.add_term(std::move(nt));
    }
    return out;
}

/// U op U* for U = (x)_f diag(e^{i m theta_f}): entry (r, c) of factor f picks up e^{i (r - c) theta_f}.
template <typename Scalar = double>
TensorOperator<Scalar> diagonal_gauge(const TensorOperator<Scalar>& op, const std::vector<Scalar>& theta) {
    if (static_cast<int>(theta.size()) != op.factor_count()) throw InvalidInput("gauge length mismatch");
    std::map<std::pair<const FactorMatrix<Scalar>*, std::size_t>, FactorPtr<Scalar>> cache;
    TensorOperator<Scalar> out(op.factor_count(), op.dim());
    for (const auto& t : op.terms()) {
        TensorTerm<Scalar> nt{t.scalar, {}};
        for (std::size_t i = 0; i < t.factors.size(); ++i) {
            const auto& m = t.factors[i];
            if (!m || theta[i] == Scalar(0)) {
                nt.factors.push_back(m);
                continue;
            }
            auto key = std::make_pair(m.get(), i);
            auto it = cache.find(key);
            if (it == cache.end()) {
                auto e = m->entries();
                for (int r = 0; r < e.rows(); ++r)
                    for (int c = 0; c < e.cols(); ++c) e(r, c) *= std::polar(Scalar(1), Scalar(r - c) * theta[i]);
                it = cache.emplace(key, make_factor<Scalar>(std::move(e), m->provenance())).first;
            }
            nt.factors.push_back(it->second);
        }
        out.add_term(std::move(nt));
    }
    return out;
}

/// Gauge angles that intertwine chi_{s^-1(phi)} (x) pi_s with pi_s (x) chi_phi, and the
/// resulting left phase vector.
template <typename Scalar = double>
std::pair<std::vector<Scalar>, std::vector<Scalar>> twist_gauge(const ReducedWord& word, std::vector<Scalar> phi) {
    std::vector<Scalar> theta(word.length());
    for (std::size_t p = word.length(); p-- > 0;) {
        const auto a = static_cast<std::size_t>(word.letters[p]);
        theta[p] = phi[a] - phi[a - 1];
        std::swap(phi[a - 1], phi[a]);
    }
    return {theta, phi};
}

/// Max window residual over all (i, j) between (pi_s (x) chi_phi)(t_ij) and the gauged
/// (chi_{s^-1(phi)} (x) pi_s)(t_ij).
template <typename Scalar = double>
Scalar twist_check(const Permutation& s, const std::vector<Scalar>& phi, Scalar q, int N) {
    std::vector<double> as_double(phi.begin(), phi.end());
    const auto expected = twist_phases(s, as_double);
    const auto word = reduced_word(s);
    const auto [theta, left] = twist_gauge<Scalar>(word, phi);
    for (std::size_t i = 0; i < left.size(); ++i)
        if (!same_phase(static_cast<double>(left[i]), expected[i])) throw std::logic_error("twist phases disagree");

    SoibelmanRep<Scalar> plain(word, q, N);
    TBlocks<Scalar> blocks(q, N);
    Scalar worst(0);
    for (int i = 1; i <= s.size(); ++i) {
        for (int j = 1; j <= s.size(); ++j) {
            const auto base = rep_generator(plain, i, j, blocks);
            const auto lhs = std::polar(Scalar(1), phi[static_cast<std::size_t>(j - 1)]) * base;
            const auto rhs = diagonal_gauge(std::polar(Scalar(1), left[static_cast<std::size_t>(i - 1)]) * base, theta);
            worst = std::max(worst, residual_on_window(lhs, rhs, 1));
        }
    }
    return worst;
}

/// <pi(t) e_0, e_0>.
template <typename Scalar = double>
std::complex<Scalar> vacuum_element(const TensorOperator<Scalar>& op) {
    const std::vector<int> zero(static_cast<std::size_t>(op.factor_count()), 0);
    return matrix_element(op, zero, zero);
}

}  // namespace qmatball
