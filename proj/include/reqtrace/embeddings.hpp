#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "reqtrace/errors.hpp"
#include "reqtrace/vectorize.hpp"

namespace reqtrace {
namespace detail {

inline std::string lowercase_ascii(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
    });
    return s;
}

inline bool is_unsigned_integer(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return c >= '0' && c <= '9'; });
}

}  // namespace detail

/// Pretrained word vectors loaded from a word2vec/GloVe-style text file.
/// Immutable after load; lookups are safe from multiple threads.
class EmbeddingTable {
public:
    EmbeddingTable() = default;

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return vectors_.size(); }

    /// Stored vector for the lowercased token, or null when out of vocabulary.
    const std::vector<double>* lookup(const std::string& token) const {
        const auto it = vectors_.find(detail::lowercase_ascii(token));
        return it == vectors_.end() ? nullptr : &it->second;
    }

    /// Cosine of the two embedding vectors; absent when either token is out
    /// of vocabulary or has a zero-norm vector.
    std::optional<double> word_cosine(const std::string& t1, const std::string& t2) const {
        const auto* v1 = lookup(t1);
        const auto* v2 = lookup(t2);
        if (v1 == nullptr || v2 == nullptr) return std::nullopt;
        double dot = 0.0;
        double n1 = 0.0;
        double n2 = 0.0;
        for (std::size_t i = 0; i < v1->size(); ++i) {
            dot += (*v1)[i] * (*v2)[i];
            n1 += (*v1)[i] * (*v1)[i];
            n2 += (*v2)[i] * (*v2)[i];
        }
        if (n1 == 0.0 || n2 == 0.0) return std::nullopt;
        return dot / (std::sqrt(n1) * std::sqrt(n2));
    }

    void insert(std::string token, std::vector<double> vec) {
        vectors_[std::move(token)] = std::move(vec);
    }

    void set_dim(std::size_t d) { dim_ = d; }

private:
    std::size_t dim_ = 0;
    std::unordered_map<std::string, std::vector<double>> vectors_;
};

/// Loads a word-vector text file: optional `<count> <dim>` header line,
/// then one `token v1 v2 ... vd` record per line. Dimension is inferred
/// from the first record and enforced afterwards. When a vocabulary filter
/// is given, only its terms are retained.
inline EmbeddingTable load_embeddings(const std::string& path,
                                      const Vocabulary* vocab_filter = nullptr) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoFailure("cannot open embedding file: " + path);
    }
    EmbeddingTable table;
    std::string line;
    std::size_t lineno = 0;
    bool first_content_line = true;
    std::size_t dim = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::strip(line).empty()) continue;
        std::istringstream fields(line);
        std::string token;
        fields >> token;
        std::vector<double> values;
        std::string value_text;
        bool malformed = false;
        while (fields >> value_text) {
            try {
                std::size_t used = 0;
                values.push_back(std::stod(value_text, &used));
                if (used != value_text.size()) malformed = true;
            } catch (const std::exception&) {
                malformed = true;
            }
            if (malformed) break;
        }
        // `<count> <dim>` header: exactly two integer fields on the first line
        if (first_content_line && detail::is_unsigned_integer(token) && values.size() == 1 &&
            !malformed && values[0] == std::floor(values[0]) && value_text.find('.') == std::string::npos) {
            first_content_line = false;
            continue;
        }
        first_content_line = false;
        if (malformed || values.empty()) {
            throw MalformedRecord(path + ":" + std::to_string(lineno) +
                                  ": expected `token v1 ... vd`");
        }
        if (dim == 0) {
            dim = values.size();
            table.set_dim(dim);
        } else if (values.size() != dim) {
            throw DimensionMismatch(path + ":" + std::to_string(lineno) + ": record has " +
                                    std::to_string(values.size()) + " values, expected " +
                                    std::to_string(dim));
        }
        std::string key = detail::lowercase_ascii(std::move(token));
        if (vocab_filter != nullptr && !vocab_filter->find(key)) continue;
        table.insert(std::move(key), std::move(values));
    }
    return table;
}

/// Free-function spellings of the table operations.
inline std::optional<std::vector<double>> lookup(const EmbeddingTable& table,
                                                 const std::string& token) {
    const auto* vec = table.lookup(token);
    if (vec == nullptr) return std::nullopt;
    return *vec;
}

inline std::optional<double> word_cosine(const EmbeddingTable& table, const std::string& t1,
                                         const std::string& t2) {
    return table.word_cosine(t1, t2);
}

}  // namespace reqtrace
