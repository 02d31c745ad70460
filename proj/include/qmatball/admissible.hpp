#pragma once

#include <set>
#include <span>
#include <utility>
#include <vector>

#include "qmatball/permutation.hpp"

namespace qmatball {

// Integer sequences [k_n, ..., k_1] are passed in that order (descending j), so
// ks[n - j] holds k_j.

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPhaseTol = 1e-12;

/// Reduce an angle into [0, 2*pi).
double wrap_phase(double phi);
/// Equality of angles modulo 2*pi, to kPhaseTol.
bool same_phase(double a, double b);

/// max( max_{j<i<=n} (k_i + j + 1 - i), j ); for j = n the inner range is empty and the bound is n.
int admissible_bound(std::span<const int> ks, int j);

bool is_admissible(std::span<const int> ks, int n);

/// Pairs [(k_n, phi_n), ..., (k_1, phi_1)] with admissible k and phi_j = 0 at the bound.
class AdmissibleString {
public:
    AdmissibleString() = default;

    /// Throws InvalidInput naming the first violated index when the data is not admissible.
    AdmissibleString(std::vector<int> ks, std::vector<double> phases);
    /// All phases zero.
    explicit AdmissibleString(std::vector<int> ks);

    int n() const { return static_cast<int>(ks_.size()); }
    int k(int j) const { return ks_[static_cast<std::size_t>(n() - j)]; }
    double phase(int j) const { return phases_[static_cast<std::size_t>(n() - j)]; }
    bool at_bound(int j) const { return k(j) == admissible_bound(ks_, j); }

    /// Descending order, as written in [(k_n, phi_n), ..., (k_1, phi_1)].
    const std::vector<int>& ks() const { return ks_; }
    const std::vector<double>& phases() const { return phases_; }

    friend bool operator==(const AdmissibleString&, const AdmissibleString&) = default;

private:
    std::vector<int> ks_;
    std::vector<double> phases_;
};

/// Index j of the first bound violation in ks (scanning j = n..1), or 0 if admissible.
int first_violation(std::span<const int> ks);

/// c_{k,j} = s_{j+n-k} s_{j+n-k+1} ... s_{j+n-1} in S_{2n}; identity for k = 0.
Permutation cycle_c(int k, int j, int n);
/// The letters of c_{k,j} in product order.
std::vector<int> cycle_letters(int k, int j, int n);

/// w = c_{k_n,n} c_{k_{n-1},n-1} ... c_{k_1,1}.
Permutation compose(std::span<const int> ks);
/// Reduced word of compose(ks): the concatenated cycle letters.
ReducedWord compose_word(std::span<const int> ks);

/// Inverse of compose on orbit minimizers. Throws InvalidInput if w is not minimal in its orbit.
std::vector<int> decompose(const Permutation& w);

/// { j : k_j equals its admissible bound }.
std::set<int> boundary_set(std::span<const int> ks, int n);

/// Admissible sequences of length n in lexicographic order of [k_n, ..., k_1].
std::vector<std::vector<int>> enumerate_admissible(int n);

/// phi' = [phi_{s^-1(1)}, ..., phi_{s^-1(m)}]. Requires sum(phi) == 0 mod 2*pi.
std::vector<double> twist_phases(const Permutation& s, std::span<const double> phi);

}  // namespace qmatball
