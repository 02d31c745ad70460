#pragma once

#include "qmatball/permutation.hpp"

namespace qmatball {

/// sigma = left * w * right with left, right in S (the copy of S_n acting on 1..n inside S_{2n}),
/// w the unique length minimizer of the double coset S sigma S, and
/// length(sigma) = length(w) + length(left) + length(right).
struct CosetFactorization {
    Permutation w;
    Permutation left;
    Permutation right;
};

/// True iff p fixes n+1..2n pointwise.
bool in_first_block(const Permutation& p);

/// Sort-based construction: right^{-1} orders sigma on 1..n, then left^{-1} orders the preimages
/// of 1..n. Throws InvalidInput for odd degree.
CosetFactorization minimal_coset_rep(const Permutation& sigma);

}  // namespace qmatball
