#include "qmatball/coset.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "qmatball/errors.hpp"

namespace qmatball {

bool in_first_block(const Permutation& p) {
    const int n = p.size() / 2;
    for (int i = n + 1; i <= p.size(); ++i)
        if (p(i) != i) return false;
    return true;
}

CosetFactorization minimal_coset_rep(const Permutation& sigma) {
    const int m = sigma.size();
    if (m % 2 != 0) throw InvalidInput("minimal_coset_rep expects a permutation of S_{2n}");
    const int n = m / 2;

    // g in S with sigma g(1) < ... < sigma g(n).
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sigma(a) < sigma(b); });
    std::vector<int> g_images(static_cast<std::size_t>(m));
    std::iota(g_images.begin(), g_images.end(), 1);
    std::copy(order.begin(), order.end(), g_images.begin());
    Permutation g(g_images);
    Permutation sg = sigma * g;

    // h in S ordering 1..n like (sigma g)^{-1} does: h(j) < h(k) iff (sg)^{-1}(j) < (sg)^{-1}(k).
    Permutation sg_inv = sg.inverse();
    std::vector<int> by_preimage(static_cast<std::size_t>(n));
    std::iota(by_preimage.begin(), by_preimage.end(), 1);
    std::sort(by_preimage.begin(), by_preimage.end(),
              [&](int a, int b) { return sg_inv(a) < sg_inv(b); });
    std::vector<int> h_images(static_cast<std::size_t>(m));
    std::iota(h_images.begin(), h_images.end(), 1);
    for (int rank = 1; rank <= n; ++rank) h_images[static_cast<std::size_t>(by_preimage[static_cast<std::size_t>(rank - 1)] - 1)] = rank;
    Permutation h(h_images);

    Permutation w = h * sg;
    return CosetFactorization{w, h.inverse(), g.inverse()};
}

}  // namespace qmatball
