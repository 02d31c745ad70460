#include "qmatball/series.hpp"

#include <algorithm>

#include "qmatball/errors.hpp"

namespace qmatball {

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    RationalSeries out(order);
    for (std::size_t i = 0; i <= order; ++i)
        for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
    return out;
}

RationalSeries series_exp(const RationalSeries& u) {
    if (u[0] != 0) throw InvalidInput("series_exp needs a series without constant term");
    RationalSeries e(u.order());
    e[0] = 1;
    for (std::size_t n = 1; n <= u.order(); ++n) {
        BigRational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += BigRational(static_cast<long long>(k)) * u[k] * e[n - k];
        e[n] = acc / BigRational(static_cast<long long>(n));
    }
    return e;
}

std::vector<BigInt> gf_counts(int n_max) {
    if (n_max < 0) throw InvalidInput("gf_counts requires n_max >= 0");
    const auto order = static_cast<std::size_t>(n_max);

    RationalSeries geometric(order);  // 1 / (1 - x)
    RationalSeries u(order);          // x / (1 - x)
    for (std::size_t i = 0; i <= order; ++i) {
        geometric[i] = 1;
        u[i] = i == 0 ? 0 : 1;
    }
    RationalSeries f = series_exp(u) * geometric;

    std::vector<BigInt> out;
    BigInt factorial = 1;
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) factorial *= static_cast<unsigned long long>(n);
        BigRational scaled = f[n] * BigRational(factorial);
        if (denominator(scaled) != 1) throw std::logic_error("gf_counts: non-integral coefficient");
        out.push_back(numerator(scaled));
    }
    return out;
}

}  // namespace qmatball
