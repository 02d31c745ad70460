#include "qmatball/factor_matrix.hpp"

namespace qmatball {

std::string to_string(Primitive p) {
    switch (p) {
        case Primitive::Shift: return "S";
        case Primitive::ShiftAdj: return "S*";
        case Primitive::Cq: return "C";
        case Primitive::Dq: return "D";
        case Primitive::T11: return "T11";
        case Primitive::T12: return "T12";
        case Primitive::T21: return "T21";
        case Primitive::T22: return "T22";
    }
    return "?";
}

Primitive adjoint(Primitive p) {
    switch (p) {
        case Primitive::Shift: return Primitive::ShiftAdj;
        case Primitive::ShiftAdj: return Primitive::Shift;
        case Primitive::T11: return Primitive::T22;
        case Primitive::T22: return Primitive::T11;
        default: return p;
    }
}

}  // namespace qmatball
