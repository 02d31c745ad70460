#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qmatball/laurent.hpp"

namespace qmatball {

/// z_row^col, or its adjoint. For C[SU_m]_q the same record names t_{row,col}.
struct GenRef {
    int row = 1;
    int col = 1;
    bool star = false;
    friend auto operator<=>(const GenRef&, const GenRef&) = default;
};

/// Product of generators, left to right; empty means the unit.
using Monomial = std::vector<GenRef>;

/// Noncommutative polynomial with Laurent-in-q integer coefficients, zero terms removed.
class Expression {
public:
    void add(const Monomial& m, const LaurentPoly& c);
    const std::map<Monomial, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    friend Expression operator-(const Expression& a, const Expression& b);
    friend bool operator==(const Expression&, const Expression&) = default;
    std::string to_string() const;

private:
    std::map<Monomial, LaurentPoly> terms_;
};

enum class RelationId { Zaa1, Zaa2, Zaa3, Zaa1Star, Zaa2Star, Zaa3Star, Zaa41, Zaa42, Zaa43, Zaa44, RForm };

std::string relation_name(RelationId id);

/// One relation "expr = 0" with indices (a, b, alpha, beta).
struct RelationInstance {
    RelationId id;
    std::array<int, 4> indices;
    Expression expr;
};

/// R_{ij}^{kl} as a Laurent polynomial.
LaurentPoly r_coefficient(int i, int j, int k, int l);

/// (z_b^beta)* z_a^alpha - q^2 sum R R z_{a'}^{alpha'} (z_{b'}^{beta'})* - (1 - q^2) delta delta.
Expression r_form(int n, int a, int b, int alpha, int beta);
/// The matching one of the four explicit cases, in the same "= 0" normalization.
Expression case_form(int n, int a, int b, int alpha, int beta);
RelationId case_id(int a, int b, int alpha, int beta);

/// Every instance of the quadratic relation families, the four cases and the R-form for size n.
std::vector<RelationInstance> matrix_ball_relations(int n);

/// The three quadratic families of C[SL_m]_q on t_{alpha,a}, tagged with the Zaa1..Zaa3 ids.
std::vector<RelationInstance> quantum_matrix_relations(int m);

}  // namespace qmatball
