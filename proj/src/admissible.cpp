#include "qmatball/admissible.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qmatball/coset.hpp"
#include "qmatball/errors.hpp"

namespace qmatball {

double wrap_phase(double phi) {
    double r = std::fmod(phi, kTwoPi);
    if (r < 0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

bool same_phase(double a, double b) {
    double d = wrap_phase(a - b);
    return d <= kPhaseTol || kTwoPi - d <= kPhaseTol;
}

int admissible_bound(std::span<const int> ks, int j) {
    const int n = static_cast<int>(ks.size());
    int bound = j;
    for (int i = j + 1; i <= n; ++i) bound = std::max(bound, ks[static_cast<std::size_t>(n - i)] + j + 1 - i);
    return bound;
}

int first_violation(std::span<const int> ks) {
    const int n = static_cast<int>(ks.size());
    for (int j = n; j >= 1; --j) {
        int kj = ks[static_cast<std::size_t>(n - j)];
        if (kj < 0 || kj > admissible_bound(ks, j)) return j;
    }
    return 0;
}

bool is_admissible(std::span<const int> ks, int n) {
    return static_cast<int>(ks.size()) == n && n >= 0 && first_violation(ks) == 0;
}

AdmissibleString::AdmissibleString(std::vector<int> ks, std::vector<double> phases)
    : ks_(std::move(ks)), phases_(std::move(phases)) {
    if (ks_.empty()) throw InvalidInput("admissible string must have n >= 1");
    if (phases_.size() != ks_.size()) throw InvalidInput("phase count differs from k count");
    if (int j = first_violation(ks_); j != 0) {
        throw InvalidInput("inadmissible string: k_" + std::to_string(j) + " = " +
                           std::to_string(k(j)) + " violates bound " +
                           std::to_string(admissible_bound(ks_, j)));
    }
    for (int j = 1; j <= n(); ++j) {
        double& phi = phases_[static_cast<std::size_t>(n() - j)];
        if (!std::isfinite(phi)) throw InvalidInput("phase phi_" + std::to_string(j) + " not finite");
        phi = wrap_phase(phi);
        if (at_bound(j) && !same_phase(phi, 0.0)) {
            throw InvalidInput("phase phi_" + std::to_string(j) +
                               " must be 0 because k_j meets its bound");
        }
        if (at_bound(j)) phi = 0.0;
    }
}

AdmissibleString::AdmissibleString(std::vector<int> ks)
    : AdmissibleString(ks, std::vector<double>(ks.size(), 0.0)) {}

std::vector<int> cycle_letters(int k, int j, int n) {
    if (n < 1 || j < 1 || j > n || k < 0 || k > n) {
        throw InvalidInput("cycle c_{" + std::to_string(k) + "," + std::to_string(j) +
                           "} out of range for n = " + std::to_string(n));
    }
    std::vector<int> letters;
    for (int a = j + n - k; a <= j + n - 1; ++a) letters.push_back(a);
    return letters;
}

Permutation cycle_c(int k, int j, int n) {
    auto letters = cycle_letters(k, j, n);
    return evaluate(2 * n, letters);
}

ReducedWord compose_word(std::span<const int> ks) {
    const int n = static_cast<int>(ks.size());
    if (!is_admissible(ks, n)) throw InvalidInput("compose requires an admissible sequence");
    ReducedWord w{2 * n, {}};
    for (int j = n; j >= 1; --j) {
        auto letters = cycle_letters(ks[static_cast<std::size_t>(n - j)], j, n);
        w.letters.insert(w.letters.end(), letters.begin(), letters.end());
    }
    return w;
}

Permutation compose(std::span<const int> ks) { return evaluate(compose_word(ks)); }

// c_{k_j,j} is the only remaining factor that moves n + j once the cycles for
// j+1..n are peeled off, and it sends n + j to n + j - k_j.
std::vector<int> decompose(const Permutation& w) {
    const int m = w.size();
    if (m < 2 || m % 2 != 0) throw InvalidInput("decompose expects a permutation of S_{2n}");
    const int n = m / 2;
    if (minimal_coset_rep(w).w != w) {
        throw InvalidInput("decompose: " + w.to_string() + " is not minimal in its double coset");
    }
    std::vector<int> ks(static_cast<std::size_t>(n));
    Permutation rest = w;
    for (int j = n; j >= 1; --j) {
        int k = n + j - rest(n + j);
        if (k < 0 || k > n) throw InvalidInput("decompose: cycle peeling failed");
        ks[static_cast<std::size_t>(n - j)] = k;
        rest = cycle_c(k, j, n).inverse() * rest;
    }
    if (!rest.is_identity() || !is_admissible(ks, n)) {
        throw InvalidInput("decompose: permutation is not a product of admissible cycles");
    }
    return ks;
}

std::set<int> boundary_set(std::span<const int> ks, int n) {
    if (!is_admissible(ks, n)) throw InvalidInput("boundary_set requires an admissible sequence");
    std::set<int> out;
    for (int j = 1; j <= n; ++j)
        if (ks[static_cast<std::size_t>(n - j)] == admissible_bound(ks, j)) out.insert(j);
    return out;
}

namespace {

void extend(int n, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(prefix.size()) == n) {
        out.push_back(prefix);
        return;
    }
    // Next entry is k_j with j = n - |prefix|; its bound only looks at k_{j+1..n}.
    const int j = n - static_cast<int>(prefix.size());
    int bound = j;
    for (int i = j + 1; i <= n; ++i) bound = std::max(bound, prefix[static_cast<std::size_t>(n - i)] + j + 1 - i);
    for (int k = 0; k <= bound; ++k) {
        prefix.push_back(k);
        extend(n, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_admissible(int n) {
    if (n < 0) throw InvalidInput("enumerate_admissible requires n >= 0");
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    extend(n, prefix, out);
    return out;
}

std::vector<double> twist_phases(const Permutation& s, std::span<const double> phi) {
    const int m = s.size();
    if (static_cast<int>(phi.size()) != m) throw InvalidInput("phase vector length differs from m");
    double sum = std::accumulate(phi.begin(), phi.end(), 0.0);
    if (!same_phase(sum, 0.0)) throw InvalidInput("phases must sum to 0 mod 2*pi");
    Permutation inv = s.inverse();
    std::vector<double> out(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) out[static_cast<std::size_t>(i - 1)] = phi[static_cast<std::size_t>(inv(i) - 1)];
    return out;
}

}  // namespace qmatball
