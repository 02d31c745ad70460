#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmatball/admissible.hpp"
#include "qmatball/errors.hpp"
#include "qmatball/matrix_ball.hpp"
#include "qmatball/permutation.hpp"
#include "qmatball/tensor_operator.hpp"

namespace qmatball::io {

using nlohmann::json;

inline json to_json(const Permutation& p) { return {{"m", p.size()}, {"images", p.images()}}; }

inline Permutation permutation_from_json(const json& j) {
    try {
        const int m = j.at("m").get<int>();
        auto images = j.at("images").get<std::vector<int>>();
        if (static_cast<int>(images.size()) != m) throw InvalidInput("permutation: images must have m entries");
        return Permutation(std::move(images));
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed permutation JSON: ") + e.what());
    }
}

inline json to_json(const AdmissibleString& s) {
    json pairs = json::array();
    for (std::size_t i = 0; i < s.ks().size(); ++i) pairs.push_back({s.ks()[i], s.phases()[i]});
    return {{"n", s.n()}, {"pairs", pairs}};
}

/// {"n", "pairs": [[k_n, phi_n], ..., [k_1, phi_1]]}.
inline AdmissibleString string_from_json(const json& j) {
    std::vector<int> ks;
    std::vector<double> phases;
    try {
        const int n = j.at("n").get<int>();
        for (const auto& p : j.at("pairs")) {
            if (!p.is_array() || p.empty() || p.size() > 2) throw InvalidInput("each pair must be [k, phi]");
            ks.push_back(p.at(0).get<int>());
            phases.push_back(p.size() > 1 ? p.at(1).get<double>() : 0.0);
        }
        if (n < 1 || static_cast<int>(ks.size()) != n) throw InvalidInput("string: need n >= 1 and exactly n pairs");
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed string JSON: ") + e.what());
    }
    return AdmissibleString(std::move(ks), std::move(phases));
}

template <typename Scalar>
json complex_json(std::complex<Scalar> c) {
    return json::array({static_cast<double>(c.real()), static_cast<double>(c.imag())});
}

template <typename Scalar>
std::complex<Scalar> complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw InvalidInput("complex values are [re, im]");
    return {j.at(0).get<Scalar>(), j.at(1).get<Scalar>()};
}

template <typename Scalar>
json to_json(const TensorOperator<Scalar>& op) {
    json terms = json::array();
    for (const auto& t : op.terms()) {
        json factors = json::array();
        for (const auto& m : t.factors) {
            if (!m) {
                factors.push_back("I");
                continue;
            }
            json rows = json::array();
            for (int r = 0; r < m->dim(); ++r) {
                json row = json::array();
                for (int c = 0; c < m->dim(); ++c) row.push_back(complex_json(m->entries()(r, c)));
                rows.push_back(row);
            }
            factors.push_back(rows);
        }
        terms.push_back({{"scalar", complex_json(t.scalar)}, {"factors", factors}});
    }
    return {{"f", op.factor_count()}, {"dim", op.dim()}, {"terms", terms}};
}

/// Factors read back carry no primitive word, so they cannot be tau-evaluated.
template <typename Scalar = double>
TensorOperator<Scalar> operator_from_json(const json& j) {
    try {
        const int f = j.at("f").get<int>();
        const int dim = j.at("dim").get<int>();
        TensorOperator<Scalar> op(f, dim);
        for (const auto& jt : j.at("terms")) {
            TensorTerm<Scalar> t{complex_from_json<Scalar>(jt.at("scalar")), {}};
            for (const auto& jf : jt.at("factors")) {
                if (jf.is_string()) {
                    if (jf.get<std::string>() != "I") throw InvalidInput("factor strings other than \"I\" are not allowed");
                    t.factors.push_back(nullptr);
                    continue;
                }
                typename FactorMatrix<Scalar>::Matrix m(dim, dim);
                if (static_cast<int>(jf.size()) != dim) throw InvalidInput("factor has wrong row count");
                for (int r = 0; r < dim; ++r) {
                    if (static_cast<int>(jf.at(r).size()) != dim) throw InvalidInput("factor has wrong column count");
                    for (int c = 0; c < dim; ++c) m(r, c) = complex_from_json<Scalar>(jf.at(r).at(c));
                }
                t.factors.push_back(make_factor<Scalar>(std::move(m), std::nullopt));
            }
            op.add_term(std::move(t));
        }
        return op;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed operator JSON: ") + e.what());
    }
}

/// Nonzero amplitudes only, as [[multi-index], [re, im]].
template <typename Scalar>
json to_json(const StateVector<Scalar>& v) {
    json amps = json::array();
    for (std::uint64_t i = 0; i < v.size(); ++i) {
        const auto a = v.amplitudes()[static_cast<Eigen::Index>(i)];
        if (a != std::complex<Scalar>(0)) amps.push_back({v.multi_index(i), complex_json(a)});
    }
    return {{"f", v.factor_count()}, {"dim", v.dim()}, {"amplitudes", amps}};
}

template <typename Scalar = double>
StateVector<Scalar> vector_from_json(const json& j) {
    try {
        StateVector<Scalar> v(j.at("f").get<int>(), j.at("dim").get<int>());
        for (const auto& e : j.at("amplitudes"))
            v.amplitudes()[static_cast<Eigen::Index>(v.index_of(e.at(0).get<std::vector<int>>()))] += complex_from_json<Scalar>(e.at(1));
        return v;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed vector JSON: ") + e.what());
    }
}

template <typename Scalar>
json to_json(const SoibelmanRep<Scalar>& rep) {
    json j = {{"m", rep.m}, {"word", rep.word.letters}, {"q", rep.q}, {"N", rep.N}};
    j["phases"] = rep.phases ? json(*rep.phases) : json::array();
    return j;
}

template <typename Scalar = double>
SoibelmanRep<Scalar> rep_from_json(const json& j) {
    try {
        ReducedWord w{j.at("m").get<int>(), j.at("word").get<std::vector<int>>()};
        for (int l : w.letters)
            if (l < 1 || l >= w.m) throw InvalidInput("word letter out of range");
        std::optional<std::vector<Scalar>> phases;
        if (j.contains("phases") && !j.at("phases").empty()) phases = j.at("phases").get<std::vector<Scalar>>();
        return SoibelmanRep<Scalar>(std::move(w), j.at("q").get<Scalar>(), j.at("N").get<int>(), std::move(phases));
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed representation JSON: ") + e.what());
    }
}

inline json to_json(const RelationReport& r) {
    return {{"relation", r.relation}, {"indices", r.indices}, {"residual", r.residual}};
}

}  // namespace qmatball::io
