#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "reqtrace/embeddings.hpp"
#include "reqtrace/errors.hpp"
#include "reqtrace/parallel.hpp"
#include "reqtrace/vectorize.hpp"

namespace reqtrace {

/// The two hyper-parameters of the word-similarity matrix:
/// `similarity_threshold` is the floor below which a word-pair similarity
/// is zeroed; `synonym_threshold` is the per-word budget on the summed
/// influence of all related words.
struct WordSimConfig {
    double similarity_threshold = 0.5;
    double synonym_threshold = 1.0;
};

/// Sparse n-by-n word-similarity matrix over the vocabulary. The diagonal
/// is implicitly 1 and only nonzero off-diagonal entries are stored, sorted
/// by column within each row. Rows whose off-diagonal sum exceeded the
/// synonym budget were rescaled, which may leave the matrix asymmetric.
class WordSimilarityMatrix {
public:
    using Entry = std::pair<std::uint32_t, double>;

    WordSimilarityMatrix() = default;

    explicit WordSimilarityMatrix(std::uint32_t n)
        : n_(n), rows_(n), raw_sums_(n, 0.0) {}

    std::uint32_t size() const { return n_; }

    const std::vector<Entry>& row(std::uint32_t i) const {
        check_index(i);
        return rows_[i];
    }

    /// Off-diagonal entry (i, j); the diagonal reads as 1.
    double at(std::uint32_t i, std::uint32_t j) const {
        check_index(i);
        check_index(j);
        if (i == j) return 1.0;
        const auto& entries = rows_[i];
        const auto it = std::lower_bound(entries.begin(), entries.end(), j,
                                         [](const Entry& e, std::uint32_t col) { return e.first < col; });
        return (it != entries.end() && it->first == j) ? it->second : 0.0;
    }

    double row_offdiag_sum(std::uint32_t i) const {
        check_index(i);
        double sum = 0.0;
        for (const auto& [col, value] : rows_[i]) sum += value;
        return sum;
    }

    /// Post-floor, pre-cap off-diagonal row sum (diagnostic).
    double raw_offdiag_sum(std::uint32_t i) const {
        check_index(i);
        return raw_sums_[i];
    }

    bool row_capped(std::uint32_t i, double synonym_threshold) const {
        check_index(i);
        return raw_sums_[i] > synonym_threshold;
    }

    std::size_t nonzero_count() const {
        std::size_t count = 0;
        for (const auto& entries : rows_) count += entries.size();
        return count;
    }

    void set_row(std::uint32_t i, std::vector<Entry> entries, double raw_sum) {
        rows_[i] = std::move(entries);
        raw_sums_[i] = raw_sum;
    }

private:
    void check_index(std::uint32_t i) const {
        if (i >= n_) {
            throw IndexOutOfRange("matrix row/col " + std::to_string(i) +
                                  " out of range (n=" + std::to_string(n_) + ")");
        }
    }

    std::uint32_t n_ = 0;
    std::vector<std::vector<Entry>> rows_;
    std::vector<double> raw_sums_;
};

/// Builds the word-similarity matrix row by row: raw entries are embedding
/// cosines clamped to [0, 1], entries below `similarity_threshold` are
/// dropped, and rows whose remaining sum exceeds `synonym_threshold` are
/// rescaled by synonym_threshold / sum. Entries pushed under the floor by
/// the rescale are kept. Vocabulary terms without an embedding contribute
/// identity rows. Rows are independent, so construction runs in parallel
/// with results bit-identical to a sequential build.
inline WordSimilarityMatrix build_matrix(const Vocabulary& vocab, const EmbeddingTable& table,
                                         const WordSimConfig& cfg, unsigned max_threads = 0) {
    if (vocab.size() == 0) {
        throw EmptyCorpus("cannot build word-similarity matrix over empty vocabulary");
    }
    const std::uint32_t n = vocab.size();
    WordSimilarityMatrix matrix(n);

    // resolve embeddings once per vocabulary index
    std::vector<const std::vector<double>*> vecs(n, nullptr);
    std::vector<double> norms(n, 0.0);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (const auto* v = table.lookup(vocab.term(i))) {
            double sum = 0.0;
            for (const double x : *v) sum += x * x;
            if (sum > 0.0) {
                vecs[i] = v;
                norms[i] = std::sqrt(sum);
            }
        }
    }

    parallel_for(n, [&](std::size_t row) {
        const auto i = static_cast<std::uint32_t>(row);
        if (vecs[i] == nullptr) return;  // OOV: unit basis row
        std::vector<WordSimilarityMatrix::Entry> entries;
        double sum = 0.0;
        const auto& vi = *vecs[i];
        for (std::uint32_t j = 0; j < n; ++j) {
            if (j == i || vecs[j] == nullptr) continue;
            const auto& vj = *vecs[j];
            double dot = 0.0;
            for (std::size_t k = 0; k < vi.size(); ++k) dot += vi[k] * vj[k];
            double value = dot / (norms[i] * norms[j]);
            if (value <= 0.0) continue;  // negative cosines clamp to 0
            value = std::min(value, 1.0);
            if (value < cfg.similarity_threshold) continue;
            entries.emplace_back(j, value);
            sum += value;
        }
        if (sum > cfg.synonym_threshold) {
            const double scale = cfg.synonym_threshold / sum;
            for (auto& [col, value] : entries) value *= scale;
        }
        matrix.set_row(i, std::move(entries), sum);
    }, max_threads);

    return matrix;
}

inline double row_offdiag_sum(const WordSimilarityMatrix& matrix, std::uint32_t i) {
    return matrix.row_offdiag_sum(i);
}

/// Audit dump: one `term_i,term_j,value` triple per stored entry.
inline void dump_matrix_csv(const std::string& path, const WordSimilarityMatrix& matrix,
                            const Vocabulary& vocab) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoFailure("cannot write matrix dump: " + path);
    }
    out << "term_i,term_j,value\n";
    char buffer[64];
    for (std::uint32_t i = 0; i < matrix.size(); ++i) {
        for (const auto& [j, value] : matrix.row(i)) {
            std::snprintf(buffer, sizeof(buffer), "%.12g", value);
            out << vocab.term(i) << ',' << vocab.term(j) << ',' << buffer << '\n';
        }
    }
    if (!out) {
        throw IoFailure("write failed: " + path);
    }
}

}  // namespace reqtrace
