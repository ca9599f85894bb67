#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "reqtrace/errors.hpp"
#include "reqtrace/vectorize.hpp"
#include "reqtrace/wordsim.hpp"

namespace reqtrace {

/// Plain cosine similarity between two sparse vectors in the same space.
/// Returns 0 when either vector is all-zero; the result is clamped to
/// [0, 1] (inputs are nonnegative, so only rounding can stray outside).
inline double cosine(const TfIdfVector& a, const TfIdfVector& b) {
    if (a.is_zero() || b.is_zero()) return 0.0;
    double dot = 0.0;
    std::size_t ia = 0;
    std::size_t ib = 0;
    while (ia < a.entries.size() && ib < b.entries.size()) {
        const auto [index_a, weight_a] = a.entries[ia];
        const auto [index_b, weight_b] = b.entries[ib];
        if (index_a == index_b) {
            dot += weight_a * weight_b;
            ++ia;
            ++ib;
        } else if (index_a < index_b) {
            ++ia;
        } else {
            ++ib;
        }
    }
    const double denom = a.norm() * b.norm();
    if (denom == 0.0) return 0.0;
    return std::clamp(dot / denom, 0.0, 1.0);
}

/// Matrix-vector product m * x over the sparse representations: the
/// diagonal passes x through and each stored row entry adds sim_ij * x_j
/// to component i. Entries come out sorted by index.
inline TfIdfVector transform(const WordSimilarityMatrix& m, const TfIdfVector& x) {
    std::vector<double> dense(m.size(), 0.0);
    for (const auto& [index, weight] : x.entries) {
        if (index >= m.size()) {
            throw DimensionMismatch("vector index " + std::to_string(index) +
                                    " exceeds matrix size " + std::to_string(m.size()));
        }
        dense[index] = weight;
    }
    TfIdfVector result;
    result.owner = x.owner;
    for (std::uint32_t i = 0; i < m.size(); ++i) {
        double value = dense[i];
        for (const auto& [j, sim] : m.row(i)) {
            value += sim * dense[j];
        }
        if (value != 0.0) result.entries.emplace_back(i, value);
    }
    return result;
}

/// Embedding-informed similarity: (cos(A, m*B) + cos(B, m*A)) / 2.
/// Reduces exactly to plain cosine when m is the identity, is commutative
/// for every matrix (the two terms swap), and stays in [0, 1] for
/// nonnegative inputs. All-zero vectors score 0.
inline double enhanced_similarity(const TfIdfVector& a, const TfIdfVector& b,
                                  const WordSimilarityMatrix& m) {
    if (a.is_zero() || b.is_zero()) return 0.0;
    const TfIdfVector mb = transform(m, b);
    const TfIdfVector ma = transform(m, a);
    return (cosine(a, mb) + cosine(b, ma)) / 2;
}

/// Brute-force reference for enhanced_similarity: expands both vectors and
/// the matrix densely and evaluates the same formula with naive O(n^2)
/// loops. Shares nothing with the sparse path; intended for cross-checks
/// at test scale.
inline double enhanced_similarity_dense_oracle(const TfIdfVector& a, const TfIdfVector& b,
                                               const WordSimilarityMatrix& m) {
    const std::size_t n = m.size();
    std::vector<double> da(n, 0.0);
    std::vector<double> db(n, 0.0);
    for (const auto& [index, weight] : a.entries) da.at(index) = weight;
    for (const auto& [index, weight] : b.entries) db.at(index) = weight;

    std::vector<std::vector<double>> sim(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        sim[i][i] = 1.0;
        for (const auto& [j, value] : m.row(static_cast<std::uint32_t>(i))) {
            sim[i][j] = value;
        }
    }

    auto matvec = [&](const std::vector<double>& x) {
        std::vector<double> y(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) y[i] += sim[i][j] * x[j];
        }
        return y;
    };
    auto dense_cosine = [&](const std::vector<double>& x, const std::vector<double>& y) {
        double dot = 0.0;
        double nx = 0.0;
        double ny = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            dot += x[i] * y[i];
            nx += x[i] * x[i];
            ny += y[i] * y[i];
        }
        if (nx == 0.0 || ny == 0.0) return 0.0;
        return std::clamp(dot / (std::sqrt(nx) * std::sqrt(ny)), 0.0, 1.0);
    };

    const double ab = dense_cosine(da, matvec(db));
    const double ba = dense_cosine(db, matvec(da));
    return (ab + ba) / 2;
}

}  // namespace reqtrace
