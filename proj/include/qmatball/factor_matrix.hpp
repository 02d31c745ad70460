#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qmatball/errors.hpp"

namespace qmatball {

/// Building blocks of C*(S) on the truncated l^2(Z_+).
enum class Primitive : std::uint8_t { Shift, ShiftAdj, Cq, Dq, T11, T12, T21, T22 };

std::string to_string(Primitive p);
Primitive adjoint(Primitive p);

/// An N x N complex matrix acting on one tensor factor, together with the word of primitives
/// whose product built it. The word is what the characters tau_phi are evaluated on; factors
/// read back from dumps have no word.
template <typename Scalar = double>
class FactorMatrix {
public:
    using Complex = std::complex<Scalar>;
    using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
    using Provenance = std::vector<Primitive>;

    FactorMatrix(Matrix entries, std::optional<Provenance> provenance)
        : entries_(std::move(entries)), provenance_(std::move(provenance)) {
        if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
            throw InvalidInput("factor matrix must be square and nonempty");
        }
        if (!entries_.allFinite()) throw InvalidInput("factor matrix has non-finite entries");
        index_columns();
    }

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Matrix& entries() const { return entries_; }
    const std::optional<Provenance>& provenance() const { return provenance_; }

    /// Structurally nonzero entries of column c as (row, value) pairs.
    struct Entry {
        int row;
        Complex value;
    };
    std::span<const Entry> column(int c) const {
        auto b = col_start_[static_cast<std::size_t>(c)];
        auto e = col_start_[static_cast<std::size_t>(c) + 1];
        return {nonzeros_.data() + b, e - b};
    }

    std::string label() const {
        if (!provenance_) return "M";
        std::string s;
        for (std::size_t i = 0; i < provenance_->size(); ++i) s += (i ? " " : "") + to_string((*provenance_)[i]);
        return s;
    }

private:
    void index_columns() {
        col_start_.assign(static_cast<std::size_t>(dim()) + 1, 0);
        nonzeros_.clear();
        for (int c = 0; c < dim(); ++c) {
            col_start_[static_cast<std::size_t>(c)] = nonzeros_.size();
            for (int r = 0; r < dim(); ++r)
                if (entries_(r, c) != Complex(0)) nonzeros_.push_back({r, entries_(r, c)});
        }
        col_start_.back() = nonzeros_.size();
    }

    Matrix entries_;
    std::optional<Provenance> provenance_;
    std::vector<std::size_t> col_start_;
    std::vector<Entry> nonzeros_;
};

/// Factors are shared immutably between terms; a null pointer is the identity marker.
template <typename Scalar = double>
using FactorPtr = std::shared_ptr<const FactorMatrix<Scalar>>;

namespace detail {

inline void check_dim(int n) {
    if (n < 2) throw InvalidInput("truncation level N must be >= 2");
}
template <typename Scalar>
void check_q(Scalar q) {
    if (!(q > Scalar(0) && q < Scalar(1))) throw InvalidInput("q must lie in (0, 1)");
}

}  // namespace detail

template <typename Scalar = double>
FactorPtr<Scalar> make_factor(typename FactorMatrix<Scalar>::Matrix m,
                              std::optional<std::vector<Primitive>> provenance) {
    return std::make_shared<const FactorMatrix<Scalar>>(std::move(m), std::move(provenance));
}

/// S e_k = e_{k+1}, with e_{N-1} sent to 0.
template <typename Scalar = double>
FactorPtr<Scalar> shift(int n) {
    detail::check_dim(n);
    typename FactorMatrix<Scalar>::Matrix m = FactorMatrix<Scalar>::Matrix::Zero(n, n);
    for (int k = 0; k + 1 < n; ++k) m(k + 1, k) = 1;
    return make_factor<Scalar>(std::move(m), std::vector{Primitive::Shift});
}

template <typename Scalar = double>
FactorPtr<Scalar> shift_adjoint(int n) {
    detail::check_dim(n);
    typename FactorMatrix<Scalar>::Matrix m = FactorMatrix<Scalar>::Matrix::Zero(n, n);
    for (int k = 0; k + 1 < n; ++k) m(k, k + 1) = 1;
    return make_factor<Scalar>(std::move(m), std::vector{Primitive::ShiftAdj});
}

/// C_q e_m = sqrt(1 - q^{2m}) e_m.
template <typename Scalar = double>
FactorPtr<Scalar> c_q(Scalar q, int n) {
    detail::check_q(q);
    detail::check_dim(n);
    typename FactorMatrix<Scalar>::Matrix m = FactorMatrix<Scalar>::Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = std::sqrt(Scalar(1) - std::pow(q, 2 * k));
    return make_factor<Scalar>(std::move(m), std::vector{Primitive::Cq});
}

/// D_q e_m = q^m e_m.
template <typename Scalar = double>
FactorPtr<Scalar> d_q(Scalar q, int n) {
    detail::check_q(q);
    detail::check_dim(n);
    typename FactorMatrix<Scalar>::Matrix m = FactorMatrix<Scalar>::Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = std::pow(q, k);
    return make_factor<Scalar>(std::move(m), std::vector{Primitive::Dq});
}

/// T_11 = S* C_q, T_12 = -q D_q, T_21 = D_q, T_22 = C_q S.
template <typename Scalar = double>
FactorPtr<Scalar> t_block(int i, int j, Scalar q, int n) {
    if (i < 1 || i > 2 || j < 1 || j > 2) throw InvalidInput("t_block indices must be in {1,2}");
    const auto s = shift<Scalar>(n)->entries();
    const auto c = c_q<Scalar>(q, n)->entries();
    const auto d = d_q<Scalar>(q, n)->entries();
    typename FactorMatrix<Scalar>::Matrix m;
    Primitive tag{};
    if (i == 1 && j == 1) {
        m = s.adjoint() * c;
        tag = Primitive::T11;
    } else if (i == 1 && j == 2) {
        m = -q * d;
        tag = Primitive::T12;
    } else if (i == 2 && j == 1) {
        m = d;
        tag = Primitive::T21;
    } else {
        m = c * s;
        tag = Primitive::T22;
    }
    return make_factor<Scalar>(std::move(m), std::vector{tag});
}

/// Identity markers (null) are the multiplicative unit.
template <typename Scalar>
FactorPtr<Scalar> multiply(const FactorPtr<Scalar>& a, const FactorPtr<Scalar>& b) {
    if (!a) return b;
    if (!b) return a;
    if (a->dim() != b->dim()) throw InvalidInput("factor dimension mismatch");
    std::optional<std::vector<Primitive>> prov;
    if (a->provenance() && b->provenance()) {
        prov = *a->provenance();
        prov->insert(prov->end(), b->provenance()->begin(), b->provenance()->end());
    }
    return make_factor<Scalar>(a->entries() * b->entries(), std::move(prov));
}

template <typename Scalar>
FactorPtr<Scalar> adjoint(const FactorPtr<Scalar>& a) {
    if (!a) return a;
    std::optional<std::vector<Primitive>> prov;
    if (a->provenance()) {
        prov.emplace();
        for (auto it = a->provenance()->rbegin(); it != a->provenance()->rend(); ++it)
            prov->push_back(adjoint(*it));
    }
    return make_factor<Scalar>(a->entries().adjoint(), std::move(prov));
}

/// tau_phi (the character S -> e^{i phi}) on a primitive word. Returns nullopt for unknown provenance.
template <typename Scalar>
std::optional<std::complex<Scalar>> tau(const FactorPtr<Scalar>& a, Scalar phi) {
    using Complex = std::complex<Scalar>;
    if (!a) return Complex(1);
    if (!a->provenance()) return std::nullopt;
    const Complex up = std::polar(Scalar(1), phi);
    const Complex down = std::conj(up);
    Complex value(1);
    for (Primitive p : *a->provenance()) {
        switch (p) {
            case Primitive::Shift:
            case Primitive::T22: value *= up; break;
            case Primitive::ShiftAdj:
            case Primitive::T11: value *= down; break;
            case Primitive::Cq: break;
            case Primitive::Dq:
            case Primitive::T12:
            case Primitive::T21: return Complex(0);
        }
    }
    return value;
}

}  // namespace qmatball
