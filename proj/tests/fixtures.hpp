#pragma once

// Shared literal fixtures and helpers for the representation tests.

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qmatball/admissible.hpp"
#include "qmatball/tensor_operator.hpp"

namespace fixture {

using Labels = std::vector<std::string>;

/// The six elementary tensors of pi_{F,3}(z_1^1), factor 1 first; overall scalar (-q)^{-2}.
inline std::vector<Labels> six_term_z11() {
    return {
        {"T21", "T21", "T22", "I", "I", "T12", "I", "I", "T12"},
        {"T21", "T22", "I", "I", "T11", "T22", "I", "I", "T12"},
        {"T22", "I", "I", "T11", "T21", "T22", "I", "I", "T12"},
        {"T21", "T22", "I", "I", "T12", "I", "I", "T11", "T22"},
        {"T22", "I", "I", "T11", "T22", "I", "I", "T11", "T22"},
        {"T22", "I", "I", "T12", "I", "I", "T11", "T21", "T22"},
    };
}

/// Terms as label lists with their scalars, merged by labels (scalars compared by the caller).
inline std::multimap<Labels, std::complex<double>> term_multiset(const qmatball::TensorOperator<double>& op) {
    std::multimap<Labels, std::complex<double>> out;
    for (const auto& t : op.terms()) {
        Labels l;
        for (const auto& f : t.factors) l.push_back(f ? f->label() : "I");
        out.emplace(l, t.scalar);
    }
    return out;
}

/// Random phase wherever the string allows one (k_j below its bound), zero at the bound.
inline qmatball::AdmissibleString with_random_phases(const std::vector<int>& ks, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.05, 2 * std::numbers::pi - 0.05);
    const int n = static_cast<int>(ks.size());
    std::vector<double> phases(ks.size(), 0.0);
    for (int j = 1; j <= n; ++j)
        if (ks[static_cast<std::size_t>(n - j)] < qmatball::admissible_bound(ks, j)) phases[static_cast<std::size_t>(n - j)] = u(rng);
    return qmatball::AdmissibleString(ks, phases);
}

}  // namespace fixture
