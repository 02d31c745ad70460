#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qmatball {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Truncated power series with exact rational coefficients, coeffs[i] = [x^i].
class RationalSeries {
public:
    explicit RationalSeries(std::size_t order) : coeffs_(order + 1) {}
    RationalSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {}

    std::size_t order() const { return coeffs_.size() - 1; }
    const BigRational& operator[](std::size_t i) const { return coeffs_[i]; }
    BigRational& operator[](std::size_t i) { return coeffs_[i]; }

    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);

private:
    std::vector<BigRational> coeffs_;
};

/// exp(u) for u with zero constant term, via n e_n = sum_k k u_k e_{n-k}.
RationalSeries series_exp(const RationalSeries& u);

/// result[n] = n! [x^n] exp(x / (1 - x)) / (1 - x) for n = 0..n_max.
std::vector<BigInt> gf_counts(int n_max);

}  // namespace qmatball
