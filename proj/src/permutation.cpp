#include "qmatball/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qmatball/errors.hpp"

namespace qmatball {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int m = size();
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > m || seen[static_cast<std::size_t>(v - 1)]) {
            throw InvalidInput("permutation images must be a bijection of {1.." + std::to_string(m) +
                               "}");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int m) {
    if (m < 0) throw InvalidInput("permutation size must be nonnegative");
    std::vector<int> im(static_cast<std::size_t>(m));
    std::iota(im.begin(), im.end(), 1);
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

Permutation Permutation::adjacent(int i, int m) {
    if (i < 1 || i >= m) {
        throw InvalidInput("adjacent transposition s_" + std::to_string(i) + " not in S_" +
                           std::to_string(m));
    }
    Permutation p = identity(m);
    std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p = identity(size());
    for (int i = 1; i <= size(); ++i) p.images_[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw InvalidInput("composing permutations of different degree");
    Permutation p = Permutation::identity(a.size());
    for (int i = 1; i <= a.size(); ++i) p.images_[static_cast<std::size_t>(i - 1)] = a(b(i));
    return p;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
    os << ')';
    return os.str();
}

Permutation evaluate(int m, std::span<const int> letters) {
    Permutation p = Permutation::identity(m);
    for (int a : letters) p = p * Permutation::adjacent(a, m);
    return p;
}

int length(const Permutation& sigma) {
    int inv = 0;
    for (int i = 1; i <= sigma.size(); ++i)
        for (int j = 1; j < i; ++j)
            if (sigma(i) < sigma(j)) ++inv;
    return inv;
}

namespace {

// sigma * s_{i_1} * ... * s_{i_k} = e after sorting, so sigma = s_{i_k} ... s_{i_1}.
template <typename PickDescent>
ReducedWord strip_descents(const Permutation& sigma, PickDescent pick) {
    std::vector<int> cur = sigma.images();
    std::vector<int> emitted;
    for (;;) {
        int d = pick(cur);
        if (d == 0) break;
        std::swap(cur[static_cast<std::size_t>(d - 1)], cur[static_cast<std::size_t>(d)]);
        emitted.push_back(d);
    }
    std::reverse(emitted.begin(), emitted.end());
    return ReducedWord{sigma.size(), std::move(emitted)};
}

}  // namespace

ReducedWord reduced_word(const Permutation& sigma) {
    return strip_descents(sigma, [](const std::vector<int>& c) {
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            if (c[i] > c[i + 1]) return static_cast<int>(i + 1);
        return 0;
    });
}

ReducedWord reduced_word_largest_descent(const Permutation& sigma) {
    return strip_descents(sigma, [](const std::vector<int>& c) {
        for (std::size_t i = c.size(); i-- > 1;)
            if (c[i - 1] > c[i]) return static_cast<int>(i);
        return 0;
    });
}

bool is_reduced(const ReducedWord& w) {
    for (int a : w.letters)
        if (a < 1 || a >= w.m) return false;
    return static_cast<std::size_t>(length(evaluate(w))) == w.length();
}

int l_exponent(const Permutation& s, int j) {
    if (j < 1 || j > s.size()) throw InvalidInput("l_exponent index out of range");
    int count = 0;
    for (int k = 1; k < j; ++k)
        if (s(j) < s(k)) ++count;
    return count;
}

std::vector<Permutation> all_permutations(int m) {
    std::vector<int> im(static_cast<std::size_t>(m));
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

}  // namespace qmatball
