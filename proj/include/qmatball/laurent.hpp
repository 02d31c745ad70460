#pragma once

#include <cmath>
#include <map>
#include <string>

namespace qmatball {

/// Finite Laurent polynomial in q with integer coefficients. Zero coefficients are never stored,
/// so structural equality is exact equality of polynomials.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(int exponent, long long coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, long long>& terms() const { return terms_; }

    template <typename Scalar>
    Scalar evaluate(Scalar q) const {
        Scalar acc(0);
        for (const auto& [e, c] : terms_) acc += static_cast<Scalar>(c) * std::pow(q, e);
        return acc;
    }

    LaurentPoly& operator+=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(const LaurentPoly& a) { return a * LaurentPoly(-1); }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string to_string() const;

private:
    void add_term(int e, long long c);
    std::map<int, long long> terms_;
};

}  // namespace qmatball
