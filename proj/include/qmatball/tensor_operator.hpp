#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qmatball/errors.hpp"
#include "qmatball/factor_matrix.hpp"
#include "qmatball/parallel.hpp"

namespace qmatball {

/// Default cap on N^f for dense vectors and Fock constructions.
inline constexpr std::uint64_t kDefaultStateCap = std::uint64_t{1} << 22;

/// N^f, or 0 if it overflows `cap`.
inline std::uint64_t state_size(int f, int dim, std::uint64_t cap = kDefaultStateCap) {
    std::uint64_t s = 1;
    for (int i = 0; i < f; ++i) {
        s *= static_cast<std::uint64_t>(dim);
        if (s > cap) return 0;
    }
    return s;
}

template <typename Scalar = double>
struct TensorTerm {
    std::complex<Scalar> scalar{1};
    std::vector<FactorPtr<Scalar>> factors;  // null entries are identities
};

/// Sum of scalar-weighted elementary tensors on (C^N)^{(x) f}.
template <typename Scalar = double>
class TensorOperator {
public:
    using Complex = std::complex<Scalar>;
    using Term = TensorTerm<Scalar>;

    TensorOperator() = default;
    TensorOperator(int f, int dim) : f_(f), dim_(dim) {
        if (f < 0) throw InvalidInput("factor count must be >= 0");
        if (dim < 1) throw InvalidInput("dimension must be >= 1");
    }

    static TensorOperator zero(int f, int dim) { return TensorOperator(f, dim); }
    static TensorOperator identity(int f, int dim) {
        TensorOperator op(f, dim);
        op.add_term({Complex(1), std::vector<FactorPtr<Scalar>>(static_cast<std::size_t>(f))});
        return op;
    }
    /// scalar * (factors placed at the given positions, identity elsewhere).
    static TensorOperator elementary(int f, int dim, Complex scalar,
                                     const std::vector<std::pair<int, FactorPtr<Scalar>>>& placed) {
        TensorOperator op(f, dim);
        Term t{scalar, std::vector<FactorPtr<Scalar>>(static_cast<std::size_t>(f))};
        for (const auto& [pos, m] : placed) {
            if (pos < 0 || pos >= f) throw InvalidInput("factor position out of range");
            t.factors[static_cast<std::size_t>(pos)] = m;
        }
        op.add_term(std::move(t));
        return op;
    }

    int factor_count() const { return f_; }
    int dim() const { return dim_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(Term t) {
        if (static_cast<int>(t.factors.size()) != f_) throw InvalidInput("term has wrong factor count");
        for (const auto& m : t.factors)
            if (m && m->dim() != dim_) throw InvalidInput("term factor has wrong dimension");
        if (t.scalar == Complex(0)) return;
        terms_.push_back(std::move(t));
    }

    TensorOperator& operator+=(const TensorOperator& o) {
        check_shape(o);
        const auto extra = o.terms_;  // o may be *this
        terms_.insert(terms_.end(), extra.begin(), extra.end());
        return *this;
    }

    void check_shape(const TensorOperator& o) const {
        if (o.f_ != f_ || o.dim_ != dim_) throw InvalidInput("operator shape mismatch");
    }

private:
    int f_ = 0;
    int dim_ = 1;
    std::vector<Term> terms_;
};

template <typename Scalar>
TensorOperator<Scalar> operator+(TensorOperator<Scalar> a, const TensorOperator<Scalar>& b) {
    return a += b;
}

template <typename Scalar>
TensorOperator<Scalar> operator*(std::complex<Scalar> c, const TensorOperator<Scalar>& a) {
    TensorOperator<Scalar> out(a.factor_count(), a.dim());
    for (auto t : a.terms()) {
        t.scalar *= c;
        out.add_term(std::move(t));
    }
    return out;
}

template <typename Scalar>
TensorOperator<Scalar> operator-(const TensorOperator<Scalar>& a, const TensorOperator<Scalar>& b) {
    return a + std::complex<Scalar>(-1) * b;
}

/// Distributes over terms; factor products are cached per pair so shared factors stay shared.
template <typename Scalar>
TensorOperator<Scalar> operator*(const TensorOperator<Scalar>& a, const TensorOperator<Scalar>& b) {
    a.check_shape(b);
    using Key = std::pair<const FactorMatrix<Scalar>*, const FactorMatrix<Scalar>*>;
    std::map<Key, FactorPtr<Scalar>> cache;
    TensorOperator<Scalar> out(a.factor_count(), a.dim());
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            TensorTerm<Scalar> t{ta.scalar * tb.scalar, {}};
            t.factors.reserve(ta.factors.size());
            for (std::size_t i = 0; i < ta.factors.size(); ++i) {
                const auto& x = ta.factors[i];
                const auto& y = tb.factors[i];
                if (!x || !y) {
                    t.factors.push_back(x ? x : y);
                    continue;
                }
                Key key{x.get(), y.get()};
                auto it = cache.find(key);
                if (it == cache.end()) it = cache.emplace(key, multiply(x, y)).first;
                t.factors.push_back(it->second);
            }
            out.add_term(std::move(t));
        }
    }
    return out;
}

/// Conjugates scalars and adjoints factors in place; elementary tensors need no reordering.
template <typename Scalar>
TensorOperator<Scalar> adjoint(const TensorOperator<Scalar>& a) {
    std::map<const FactorMatrix<Scalar>*, FactorPtr<Scalar>> cache;
    TensorOperator<Scalar> out(a.factor_count(), a.dim());
    for (const auto& ta : a.terms()) {
        TensorTerm<Scalar> t{std::conj(ta.scalar), {}};
        for (const auto& x : ta.factors) {
            if (!x) {
                t.factors.push_back(x);
                continue;
            }
            auto it = cache.find(x.get());
            if (it == cache.end()) it = cache.emplace(x.get(), adjoint(x)).first;
            t.factors.push_back(it->second);
        }
        out.add_term(std::move(t));
    }
    return out;
}

template <typename Scalar>
TensorOperator<Scalar> add(const TensorOperator<Scalar>& a, const TensorOperator<Scalar>& b) { return a + b; }
template <typename Scalar>
TensorOperator<Scalar> mul(const TensorOperator<Scalar>& a, const TensorOperator<Scalar>& b) { return a * b; }
template <typename Scalar>
TensorOperator<Scalar> scale(std::complex<Scalar> c, const TensorOperator<Scalar>& a) { return c * a; }

/// Dense vector on (C^N)^{(x) f}; factor 0 is the most significant digit of the linear index,
/// matching the Kronecker product convention.
template <typename Scalar = double>
class StateVector {
public:
    using Complex = std::complex<Scalar>;
    using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

    StateVector(int f, int dim, std::uint64_t cap = kDefaultStateCap) : f_(f), dim_(dim) {
        if (f < 0 || dim < 1) throw InvalidInput("bad state shape");
        const auto size = state_size(f, dim, cap);
        if (size == 0) throw ResourceLimit("state vector size N^f exceeds the configured cap");
        amplitudes_ = Vector::Zero(static_cast<Eigen::Index>(size));
    }

    static StateVector basis(int f, int dim, const std::vector<int>& multi) {
        StateVector v(f, dim);
        v.amplitudes_[static_cast<Eigen::Index>(v.index_of(multi))] = 1;
        return v;
    }
    static StateVector vacuum(int f, int dim) { return basis(f, dim, std::vector<int>(static_cast<std::size_t>(f), 0)); }
    /// Deterministic pseudo-random unit vector.
    static StateVector random(int f, int dim, std::uint64_t seed) {
        StateVector v(f, dim);
        std::mt19937_64 rng(seed);
        std::normal_distribution<Scalar> g;
        for (Eigen::Index i = 0; i < v.amplitudes_.size(); ++i) v.amplitudes_[i] = Complex(g(rng), g(rng));
        v.amplitudes_.normalize();
        return v;
    }

    int factor_count() const { return f_; }
    int dim() const { return dim_; }
    std::uint64_t size() const { return static_cast<std::uint64_t>(amplitudes_.size()); }
    const Vector& amplitudes() const { return amplitudes_; }
    Vector& amplitudes() { return amplitudes_; }

    std::uint64_t index_of(const std::vector<int>& multi) const {
        if (static_cast<int>(multi.size()) != f_) throw InvalidInput("multi-index has wrong length");
        std::uint64_t idx = 0;
        for (int m : multi) {
            if (m < 0 || m >= dim_) throw InvalidInput("multi-index component out of range");
            idx = idx * static_cast<std::uint64_t>(dim_) + static_cast<std::uint64_t>(m);
        }
        return idx;
    }
    std::vector<int> multi_index(std::uint64_t idx) const {
        std::vector<int> m(static_cast<std::size_t>(f_));
        for (int i = f_ - 1; i >= 0; --i) {
            m[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::uint64_t>(dim_));
            idx /= static_cast<std::uint64_t>(dim_);
        }
        return m;
    }
    Complex operator[](const std::vector<int>& multi) const {
        return amplitudes_[static_cast<Eigen::Index>(index_of(multi))];
    }

    Scalar norm() const { return amplitudes_.norm(); }

private:
    int f_;
    int dim_;
    Vector amplitudes_;
};

/// <u, v>, linear in u.
template <typename Scalar>
std::complex<Scalar> inner(const StateVector<Scalar>& u, const StateVector<Scalar>& v) {
    return v.amplitudes().dot(u.amplitudes());
}

/// Sparse image of a basis vector: (linear index, amplitude) pairs sorted by index, duplicates merged.
template <typename Scalar>
using SparseState = std::vector<std::pair<std::uint64_t, std::complex<Scalar>>>;

namespace detail {

template <typename Scalar>
void expand_term(const TensorTerm<Scalar>& t, const std::vector<int>& digits, int dim, std::complex<Scalar> amp,
                 SparseState<Scalar>& out) {
    const std::size_t f = digits.size();
    // Depth-first walk over the factor columns; each factor contributes its structural nonzeros.
    struct Frame {
        std::size_t pos;
        std::uint64_t idx;
        std::complex<Scalar> amp;
    };
    std::vector<Frame> stack{{0, 0, amp * t.scalar}};
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        if (fr.pos == f) {
            out.emplace_back(fr.idx, fr.amp);
            continue;
        }
        const auto& m = t.factors[fr.pos];
        const int c = digits[fr.pos];
        const auto base = fr.idx * static_cast<std::uint64_t>(dim);
        if (!m) {
            stack.push_back({fr.pos + 1, base + static_cast<std::uint64_t>(c), fr.amp});
            continue;
        }
        for (const auto& e : m->column(c))
            stack.push_back({fr.pos + 1, base + static_cast<std::uint64_t>(e.row), fr.amp * e.value});
    }
}

template <typename Scalar>
void compact(SparseState<Scalar>& s) {
    std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < s.size(); ++r) {
        if (w > 0 && s[w - 1].first == s[r].first) s[w - 1].second += s[r].second;
        else s[w++] = s[r];
    }
    s.resize(w);
}

}  // namespace detail

/// op e_m without touching a dense vector.
template <typename Scalar>
SparseState<Scalar> apply_to_basis(const TensorOperator<Scalar>& op, const std::vector<int>& digits) {
    if (static_cast<int>(digits.size()) != op.factor_count()) throw InvalidInput("multi-index has wrong length");
    for (int d : digits)
        if (d < 0 || d >= op.dim()) throw InvalidInput("multi-index component out of range");
    SparseState<Scalar> out;
    for (const auto& t : op.terms()) detail::expand_term(t, digits, op.dim(), std::complex<Scalar>(1), out);
    detail::compact(out);
    return out;
}

template <typename Scalar>
SparseState<Scalar> apply_sparse(const TensorOperator<Scalar>& op, const SparseState<Scalar>& in) {
    const int f = op.factor_count();
    const auto dim = static_cast<std::uint64_t>(op.dim());
    std::vector<int> digits(static_cast<std::size_t>(f));
    SparseState<Scalar> out;
    for (const auto& [idx, amp] : in) {
        std::uint64_t rest = idx;
        for (int i = f - 1; i >= 0; --i) {
            digits[static_cast<std::size_t>(i)] = static_cast<int>(rest % dim);
            rest /= dim;
        }
        for (const auto& t : op.terms()) detail::expand_term(t, digits, op.dim(), amp, out);
    }
    detail::compact(out);
    return out;
}

/// c * ops[0] * ops[1] * ... , applied right to left without forming the product.
template <typename Scalar>
struct ScaledProduct {
    std::complex<Scalar> coeff;
    std::vector<const TensorOperator<Scalar>*> ops;
};

/// max over the window m_i <= N - 1 - d of || sum_p p e_m ||.
template <typename Scalar>
Scalar residual_of_sum(const std::vector<ScaledProduct<Scalar>>& sum, int f, int dim, int d) {
    for (const auto& p : sum)
        for (const auto* op : p.ops)
            if (op->factor_count() != f || op->dim() != dim) throw InvalidInput("operator shape mismatch");
    const int side = dim - d;
    if (d < 0 || side <= 0) throw InvalidInput("residual window is empty (N <= d)");
    std::uint64_t count = 1;
    for (int i = 0; i < f; ++i) count *= static_cast<std::uint64_t>(side);

    std::vector<Scalar> chunk_max(chunk_count(count), Scalar(0));
    parallel_chunks(count, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        Scalar local(0);
        SparseState<Scalar> acc;
        for (std::size_t w = begin; w < end; ++w) {
            std::uint64_t rest = w;
            std::uint64_t idx = 0;
            std::uint64_t place = 1;
            for (int i = f - 1; i >= 0; --i) {
                idx += (rest % static_cast<std::uint64_t>(side)) * place;
                rest /= static_cast<std::uint64_t>(side);
                place *= static_cast<std::uint64_t>(dim);
            }
            acc.clear();
            for (const auto& p : sum) {
                SparseState<Scalar> v{{idx, p.coeff}};
                for (auto it = p.ops.rbegin(); it != p.ops.rend() && !v.empty(); ++it) v = apply_sparse(**it, v);
                acc.insert(acc.end(), v.begin(), v.end());
            }
            detail::compact(acc);
            Scalar sq(0);
            for (const auto& e : acc) sq += std::norm(e.second);
            local = std::max(local, std::sqrt(sq));
        }
        chunk_max[chunk] = local;
    });
    return *std::max_element(chunk_max.begin(), chunk_max.end());
}

/// <op e_in, e_out>.
template <typename Scalar>
std::complex<Scalar> matrix_element(const TensorOperator<Scalar>& op, const std::vector<int>& out_multi,
                                    const std::vector<int>& in_multi) {
    std::uint64_t target = 0;
    for (int d : out_multi) target = target * static_cast<std::uint64_t>(op.dim()) + static_cast<std::uint64_t>(d);
    std::complex<Scalar> acc(0);
    for (const auto& [idx, amp] : apply_to_basis(op, in_multi))
        if (idx == target) acc += amp;
    return acc;
}

/// Matrix-free application; only nonzero input amplitudes are expanded.
template <typename Scalar>
StateVector<Scalar> apply(const TensorOperator<Scalar>& op, const StateVector<Scalar>& v) {
    if (op.factor_count() != v.factor_count() || op.dim() != v.dim()) throw InvalidInput("operator/vector shape mismatch");
    StateVector<Scalar> out(v.factor_count(), v.dim());
    SparseState<Scalar> buf;
    for (std::uint64_t i = 0; i < v.size(); ++i) {
        const auto amp = v.amplitudes()[static_cast<Eigen::Index>(i)];
        if (amp == std::complex<Scalar>(0)) continue;
        const auto digits = v.multi_index(i);
        buf.clear();
        for (const auto& t : op.terms()) detail::expand_term(t, digits, op.dim(), amp, buf);
        for (const auto& [idx, a] : buf) out.amplitudes()[static_cast<Eigen::Index>(idx)] += a;
    }
    return out;
}

/// max ||(a - b) e_m|| over basis vectors with every m_i <= N - 1 - d.
template <typename Scalar>
Scalar residual_on_window(const TensorOperator<Scalar>& a, const TensorOperator<Scalar>& b, int d) {
    a.check_shape(b);
    const int side = a.dim() - d;
    if (d < 0 || side <= 0) throw InvalidInput("residual window is empty (N <= d)");
    const auto diff = a - b;
    const int f = a.factor_count();
    std::uint64_t count = 1;
    for (int i = 0; i < f; ++i) count *= static_cast<std::uint64_t>(side);

    std::vector<Scalar> chunk_max(chunk_count(count), Scalar(0));
    parallel_chunks(count, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        std::vector<int> digits(static_cast<std::size_t>(f));
        Scalar local(0);
        for (std::size_t w = begin; w < end; ++w) {
            std::uint64_t rest = w;
            for (int i = f - 1; i >= 0; --i) {
                digits[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(side));
                rest /= static_cast<std::uint64_t>(side);
            }
            Scalar sq(0);
            for (const auto& [idx, amp] : apply_to_basis(diff, digits)) sq += std::norm(amp);
            local = std::max(local, std::sqrt(sq));
        }
        chunk_max[chunk] = local;
    });
    return *std::max_element(chunk_max.begin(), chunk_max.end());
}

/// Power iteration on op* op from a fixed pseudo-random start; returns sqrt of the Rayleigh quotient,
/// a lower bound on ||op|| that is nondecreasing in iters.
template <typename Scalar>
Scalar norm_estimate(const TensorOperator<Scalar>& op, int iters, std::uint64_t seed = 0x5eed) {
    if (iters < 1) throw InvalidInput("norm_estimate needs iters >= 1");
    if (op.empty()) return Scalar(0);
    const auto adj = adjoint(op);
    auto x = StateVector<Scalar>::random(op.factor_count(), op.dim(), seed);
    Scalar estimate(0);
    for (int it = 0; it < iters; ++it) {
        auto y = apply(op, x);
        estimate = std::max(estimate, y.norm());
        auto z = apply(adj, y);
        const Scalar zn = z.norm();
        if (zn == Scalar(0)) break;
        z.amplitudes() /= zn;
        x = std::move(z);
    }
    return estimate;
}

}  // namespace qmatball
