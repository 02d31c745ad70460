#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qmatball {

/// Bijection of {1..m} in one-line notation: images()[i-1] = sigma(i).
///
/// Composition is functional: (a * b)(x) = a(b(x)).
class Permutation {
public:
    Permutation() = default;

    /// Throws InvalidInput unless `images` is a bijection of {1..m}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int m);
    /// Adjacent transposition s_i = (i, i+1) in S_m.
    static Permutation adjacent(int i, int m);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

    std::string to_string() const;

private:
    std::vector<int> images_;
};

/// Word in the adjacent transpositions s_1..s_{m-1}; evaluates to s_{l_1} s_{l_2} ... s_{l_k}.
struct ReducedWord {
    int m = 0;
    std::vector<int> letters;

    std::size_t length() const { return letters.size(); }
    friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

/// Product of the letters of a word in S_m (no reducedness requirement).
Permutation evaluate(int m, std::span<const int> letters);
inline Permutation evaluate(const ReducedWord& w) { return evaluate(w.m, w.letters); }

/// Inversion count #{ j < i : sigma(i) < sigma(j) }.
int length(const Permutation& sigma);

/// Canonical reduced word: strip the smallest descent first, letters emitted in evaluation order.
ReducedWord reduced_word(const Permutation& sigma);

/// Reduced word obtained by stripping the largest descent first. Differs from
/// reduced_word() whenever sigma has more than one reduced expression of that shape.
ReducedWord reduced_word_largest_descent(const Permutation& sigma);

/// True iff evaluating `w` gives a permutation of length |w|.
bool is_reduced(const ReducedWord& w);

/// l_j^s = #{ 1 <= k < j : s(j) < s(k) }.
int l_exponent(const Permutation& s, int j);

/// All permutations of S_m in lexicographic order of their one-line notation.
std::vector<Permutation> all_permutations(int m);

}  // namespace qmatball
