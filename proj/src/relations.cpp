#include "qmatball/relations.hpp"

#include <sstream>

#include "qmatball/errors.hpp"

namespace qmatball {

namespace {

GenRef z(int row, int col) { return {row, col, false}; }
GenRef zs(int row, int col) { return {row, col, true}; }

LaurentPoly q_pow(int e) { return LaurentPoly::monomial(e); }
// q - q^{-1}
LaurentPoly q_minus_qinv() { return q_pow(1) - q_pow(-1); }
// 1 - q^2
LaurentPoly one_minus_q2() { return LaurentPoly(1) - q_pow(2); }

void check_indices(int n, std::initializer_list<int> idx) {
    for (int i : idx)
        if (i < 1 || i > n) throw InvalidInput("relation index out of range");
}

}  // namespace

void Expression::add(const Monomial& m, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Expression operator-(const Expression& a, const Expression& b) {
    Expression out = a;
    for (const auto& [m, c] : b.terms_) out.add(m, -c);
    return out;
}

std::string Expression::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (m.empty()) os << " I";
        for (const auto& g : m) os << " z" << g.row << "^" << g.col << (g.star ? "*" : "");
    }
    return os.str();
}

std::string relation_name(RelationId id) {
    switch (id) {
        case RelationId::Zaa1: return "zaa1";
        case RelationId::Zaa2: return "zaa2";
        case RelationId::Zaa3: return "zaa3";
        case RelationId::Zaa1Star: return "zaa1*";
        case RelationId::Zaa2Star: return "zaa2*";
        case RelationId::Zaa3Star: return "zaa3*";
        case RelationId::Zaa41: return "zaa41";
        case RelationId::Zaa42: return "zaa42";
        case RelationId::Zaa43: return "zaa43";
        case RelationId::Zaa44: return "zaa44";
        case RelationId::RForm: return "R-form";
    }
    return "?";
}

LaurentPoly r_coefficient(int i, int j, int k, int l) {
    if (i != j && i == k && j == l) return q_pow(-1);
    if (i == j && j == k && k == l) return LaurentPoly(1);
    if (i == j && k == l && l > j) return LaurentPoly(1) - q_pow(-2);
    return {};
}

Expression r_form(int n, int a, int b, int alpha, int beta) {
    check_indices(n, {a, b, alpha, beta});
    Expression e;
    e.add({zs(b, beta), z(a, alpha)}, 1);
    for (int a2 = 1; a2 <= n; ++a2)
        for (int b2 = 1; b2 <= n; ++b2) {
            const LaurentPoly r1 = r_coefficient(b, a, b2, a2);
            if (r1.is_zero()) continue;
            for (int al2 = 1; al2 <= n; ++al2)
                for (int be2 = 1; be2 <= n; ++be2) {
                    const LaurentPoly r2 = r_coefficient(beta, alpha, be2, al2);
                    if (r2.is_zero()) continue;
                    e.add({z(a2, al2), zs(b2, be2)}, -(q_pow(2) * r1 * r2));
                }
        }
    if (a == b && alpha == beta) e.add({}, -one_minus_q2());
    return e;
}

RelationId case_id(int a, int b, int alpha, int beta) {
    if (a != b && alpha != beta) return RelationId::Zaa41;
    if (a == b && alpha != beta) return RelationId::Zaa42;
    if (a != b) return RelationId::Zaa43;
    return RelationId::Zaa44;
}

Expression case_form(int n, int a, int b, int alpha, int beta) {
    check_indices(n, {a, b, alpha, beta});
    Expression e;
    const LaurentPoly qinv_minus_q = q_pow(-1) - q_pow(1);
    switch (case_id(a, b, alpha, beta)) {
        case RelationId::Zaa41:
            e.add({zs(b, beta), z(a, alpha)}, 1);
            e.add({z(a, alpha), zs(b, beta)}, -1);
            break;
        case RelationId::Zaa42:
            e.add({zs(a, beta), z(a, alpha)}, 1);
            e.add({z(a, alpha), zs(a, beta)}, -q_pow(1));
            for (int j = a + 1; j <= n; ++j) e.add({z(j, alpha), zs(j, beta)}, qinv_minus_q);
            break;
        case RelationId::Zaa43:
            e.add({zs(b, alpha), z(a, alpha)}, 1);
            e.add({z(a, alpha), zs(b, alpha)}, -q_pow(1));
            for (int j = alpha + 1; j <= n; ++j) e.add({z(a, j), zs(b, j)}, qinv_minus_q);
            break;
        default:
            e.add({zs(a, alpha), z(a, alpha)}, 1);
            e.add({z(a, alpha), zs(a, alpha)}, -q_pow(2));
            for (int j = alpha + 1; j <= n; ++j) e.add({z(a, j), zs(a, j)}, one_minus_q2());
            for (int j = a + 1; j <= n; ++j) e.add({z(j, alpha), zs(j, alpha)}, one_minus_q2());
            for (int j = alpha + 1; j <= n; ++j)
                for (int m = a + 1; m <= n; ++m) e.add({z(m, j), zs(m, j)}, -(q_pow(-2) * one_minus_q2() * one_minus_q2()));
            e.add({}, -one_minus_q2());
            break;
    }
    return e;
}

std::vector<RelationInstance> matrix_ball_relations(int n) {
    if (n < 1) throw InvalidInput("n must be >= 1");
    std::vector<RelationInstance> out;
    auto each = [n](auto&& fn) {
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int al = 1; al <= n; ++al)
                    for (int be = 1; be <= n; ++be) fn(a, b, al, be);
    };
    each([&](int a, int b, int al, int be) {
        std::array<int, 4> idx{a, b, al, be};
        if ((a == b && al < be) || (a < b && al == be)) {
            Expression e;
            e.add({z(a, al), z(b, be)}, 1);
            e.add({z(b, be), z(a, al)}, -q_pow(1));
            out.push_back({RelationId::Zaa1, idx, e});
            Expression s;
            s.add({zs(b, be), zs(a, al)}, 1);
            s.add({zs(a, al), zs(b, be)}, -q_pow(1));
            out.push_back({RelationId::Zaa1Star, idx, s});
        } else if (al < be && a > b) {
            Expression e;
            e.add({z(a, al), z(b, be)}, 1);
            e.add({z(b, be), z(a, al)}, -1);
            out.push_back({RelationId::Zaa2, idx, e});
            Expression s;
            s.add({zs(b, be), zs(a, al)}, 1);
            s.add({zs(a, al), zs(b, be)}, -1);
            out.push_back({RelationId::Zaa2Star, idx, s});
        } else if (al < be && a < b) {
            Expression e;
            e.add({z(a, al), z(b, be)}, 1);
            e.add({z(b, be), z(a, al)}, -1);
            e.add({z(a, be), z(b, al)}, -q_minus_qinv());
            out.push_back({RelationId::Zaa3, idx, e});
            Expression s;
            s.add({zs(b, be), zs(a, al)}, 1);
            s.add({zs(a, al), zs(b, be)}, -1);
            s.add({zs(b, al), zs(a, be)}, -q_minus_qinv());
            out.push_back({RelationId::Zaa3Star, idx, s});
        }
    });
    each([&](int a, int b, int al, int be) {
        out.push_back({case_id(a, b, al, be), {a, b, al, be}, case_form(n, a, b, al, be)});
    });
    each([&](int a, int b, int al, int be) {
        out.push_back({RelationId::RForm, {a, b, al, be}, r_form(n, a, b, al, be)});
    });
    return out;
}

std::vector<RelationInstance> quantum_matrix_relations(int m) {
    if (m < 1) throw InvalidInput("m must be >= 1");
    std::vector<RelationInstance> out;
    for (int al = 1; al <= m; ++al)
        for (int a = 1; a <= m; ++a)
            for (int be = 1; be <= m; ++be)
                for (int b = 1; b <= m; ++b) {
                    std::array<int, 4> idx{a, b, al, be};
                    Expression e;
                    if ((a == b && al < be) || (a < b && al == be)) {
                        e.add({z(al, a), z(be, b)}, 1);
                        e.add({z(be, b), z(al, a)}, -q_pow(1));
                        out.push_back({RelationId::Zaa1, idx, e});
                    } else if (al < be && a > b) {
                        e.add({z(al, a), z(be, b)}, 1);
                        e.add({z(be, b), z(al, a)}, -1);
                        out.push_back({RelationId::Zaa2, idx, e});
                    } else if (al < be && a < b) {
                        e.add({z(al, a), z(be, b)}, 1);
                        e.add({z(be, b), z(al, a)}, -1);
                        e.add({z(be, a), z(al, b)}, -q_minus_qinv());
                        out.push_back({RelationId::Zaa3, idx, e});
                    }
                }
    return out;
}

}  // namespace qmatball
