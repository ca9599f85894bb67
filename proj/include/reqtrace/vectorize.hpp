#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "reqtrace/corpus.hpp"
#include "reqtrace/errors.hpp"

namespace reqtrace {

/// Bijective term <-> index map over the corpus vocabulary, ordered
/// lexicographically by term for deterministic indexing.
class Vocabulary {
public:
    Vocabulary() = default;

    explicit Vocabulary(std::set<std::string> terms) {
        terms_.assign(terms.begin(), terms.end());
        index_.reserve(terms_.size());
        for (std::uint32_t i = 0; i < terms_.size(); ++i) {
            index_.emplace(terms_[i], i);
        }
    }

    std::uint32_t size() const { return static_cast<std::uint32_t>(terms_.size()); }

    const std::string& term(std::uint32_t index) const {
        if (index >= terms_.size()) {
            throw IndexOutOfRange("vocabulary index " + std::to_string(index) +
                                  " out of range (n=" + std::to_string(terms_.size()) + ")");
        }
        return terms_[index];
    }

    std::optional<std::uint32_t> find(const std::string& term) const {
        const auto it = index_.find(term);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const std::vector<std::string>& terms() const { return terms_; }

private:
    std::vector<std::string> terms_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

/// Sparse TF-IDF vector over the corpus vocabulary. Entries are sorted by
/// dimension index and every stored weight is strictly positive.
struct TfIdfVector {
    std::string owner;
    std::vector<std::pair<std::uint32_t, double>> entries;

    bool is_zero() const { return entries.empty(); }

    double norm() const {
        double sum = 0.0;
        for (const auto& [index, weight] : entries) sum += weight * weight;
        return std::sqrt(sum);
    }

    std::uint32_t max_index() const {
        return entries.empty() ? 0 : entries.back().first;
    }
};

struct IdfTable {
    std::vector<double> idf;
    std::size_t doc_count = 0;
};

/// Builds the vocabulary from the union of all token lists. At least one
/// token must survive preprocessing across the corpus.
inline Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& docs) {
    std::set<std::string> terms;
    for (const auto& tokens : docs) {
        terms.insert(tokens.begin(), tokens.end());
    }
    if (terms.empty()) {
        throw EmptyCorpus("no terms in corpus: all documents are empty");
    }
    return Vocabulary(std::move(terms));
}

/// idf[t] = ln(N / df_t) with raw document frequencies, no smoothing.
inline IdfTable compute_idf(const std::vector<std::vector<std::string>>& docs,
                            const Vocabulary& vocab) {
    std::vector<std::size_t> df(vocab.size(), 0);
    std::set<std::uint32_t> seen;
    for (const auto& tokens : docs) {
        seen.clear();
        for (const auto& token : tokens) {
            if (const auto index = vocab.find(token)) seen.insert(*index);
        }
        for (const auto index : seen) ++df[index];
    }
    IdfTable table;
    table.doc_count = docs.size();
    table.idf.resize(vocab.size(), 0.0);
    for (std::uint32_t t = 0; t < vocab.size(); ++t) {
        if (df[t] > 0) {
            table.idf[t] = std::log(static_cast<double>(docs.size()) /
                                    static_cast<double>(df[t]));
        }
    }
    return table;
}

/// weight(t) = raw count of t in the document times idf[t]. Zero-weight
/// terms are omitted, so a document whose every term has idf 0 (or no
/// tokens at all) yields an all-zero vector.
inline TfIdfVector vectorize(const std::vector<std::string>& tokens, const Vocabulary& vocab,
                             const IdfTable& idf, std::string owner = {}) {
    std::map<std::uint32_t, std::size_t> counts;
    for (const auto& token : tokens) {
        if (const auto index = vocab.find(token)) ++counts[*index];
    }
    TfIdfVector vec;
    vec.owner = std::move(owner);
    vec.entries.reserve(counts.size());
    for (const auto& [index, count] : counts) {
        const double weight = static_cast<double>(count) * idf.idf[index];
        if (weight > 0.0) vec.entries.emplace_back(index, weight);
    }
    return vec;
}

/// Debug dump of the term-document matrix: terms as columns, one row per
/// document, zero cells included.
inline void dump_term_document_csv(const std::string& path,
                                   const std::vector<TfIdfVector>& vectors,
                                   const Vocabulary& vocab) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoFailure("cannot write term-document dump: " + path);
    }
    out << "doc";
    for (const auto& term : vocab.terms()) out << ',' << term;
    out << '\n';
    char buffer[64];
    for (const auto& vec : vectors) {
        out << vec.owner;
        std::size_t next = 0;
        for (std::uint32_t t = 0; t < vocab.size(); ++t) {
            double weight = 0.0;
            if (next < vec.entries.size() && vec.entries[next].first == t) {
                weight = vec.entries[next].second;
                ++next;
            }
            std::snprintf(buffer, sizeof(buffer), "%.12g", weight);
            out << ',' << buffer;
        }
        out << '\n';
    }
    if (!out) {
        throw IoFailure("write failed: " + path);
    }
}

}  // namespace reqtrace
