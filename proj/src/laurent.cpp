#include "qmatball/laurent.hpp"

#include <sstream>

namespace qmatball {

LaurentPoly LaurentPoly::monomial(int exponent, long long coeff) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

void LaurentPoly::add_term(int e, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        long long mag = c < 0 ? -c : c;
        if (e == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << "q^" << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace qmatball
