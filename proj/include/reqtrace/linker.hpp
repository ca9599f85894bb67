#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "reqtrace/corpus.hpp"
#include "reqtrace/errors.hpp"
#include "reqtrace/evalkit.hpp"
#include "reqtrace/linker_types.hpp"
#include "reqtrace/parallel.hpp"
#include "reqtrace/simfunc.hpp"
#include "reqtrace/vectorize.hpp"

namespace reqtrace {

/// Per-document vectors keyed by requirement id.
using VectorIndex = std::unordered_map<std::string, TfIdfVector>;

/// Scores every HLR x LLR pair. Output order is deterministic: sorted by
/// hlr_id, then llr_id, regardless of input document order. Pair scoring
/// runs in parallel; each pair owns its output slot, so the result is
/// identical to a sequential run.
inline std::vector<CandidateLink> score_all(const ProjectBundle& bundle,
                                            const VectorIndex& vectors,
                                            const WordSimilarityMatrix& matrix,
                                            const LinkerConfig& cfg,
                                            unsigned max_threads = 0) {
    std::vector<const RequirementDoc*> high;
    std::vector<const RequirementDoc*> low;
    high.reserve(bundle.high.size());
    low.reserve(bundle.low.size());
    for (const auto& doc : bundle.high) high.push_back(&doc);
    for (const auto& doc : bundle.low) low.push_back(&doc);
    const auto by_id = [](const RequirementDoc* a, const RequirementDoc* b) {
        return a->id < b->id;
    };
    std::sort(high.begin(), high.end(), by_id);
    std::sort(low.begin(), low.end(), by_id);

    std::vector<const TfIdfVector*> high_vecs(high.size());
    std::vector<const TfIdfVector*> low_vecs(low.size());
    const auto resolve = [&](const RequirementDoc* doc) {
        const auto it = vectors.find(doc->id);
        if (it == vectors.end()) {
            throw MissingVector("no vector for requirement \"" + doc->id + "\"");
        }
        return &it->second;
    };
    for (std::size_t i = 0; i < high.size(); ++i) high_vecs[i] = resolve(high[i]);
    for (std::size_t i = 0; i < low.size(); ++i) low_vecs[i] = resolve(low[i]);

    // the transformed vectors depend only on one side of each pair, so
    // compute m*x once per document
    std::vector<TfIdfVector> high_transformed(high.size());
    std::vector<TfIdfVector> low_transformed(low.size());
    if (cfg.method == Method::Enhanced) {
        parallel_for(high.size(), [&](std::size_t i) {
            high_transformed[i] = transform(matrix, *high_vecs[i]);
        }, max_threads);
        parallel_for(low.size(), [&](std::size_t i) {
            low_transformed[i] = transform(matrix, *low_vecs[i]);
        }, max_threads);
    }

    std::vector<CandidateLink> scored(high.size() * low.size());
    parallel_for(scored.size(), [&](std::size_t pair) {
        const std::size_t hi = pair / low.size();
        const std::size_t li = pair % low.size();
        double score = 0.0;
        if (cfg.method == Method::PlainVSM) {
            score = cosine(*high_vecs[hi], *low_vecs[li]);
        } else if (!high_vecs[hi]->is_zero() && !low_vecs[li]->is_zero()) {
            score = (cosine(*high_vecs[hi], low_transformed[li]) +
                     cosine(*low_vecs[li], high_transformed[hi])) / 2;
        }
        scored[pair] = CandidateLink{high[hi]->id, low[li]->id, score};
    }, max_threads);
    return scored;
}

/// Pairs with score >= threshold, order preserved.
inline std::vector<CandidateLink> filter_links(const std::vector<CandidateLink>& scored,
                                               double threshold) {
    std::vector<CandidateLink> kept;
    for (const auto& link : scored) {
        if (link.score >= threshold) kept.push_back(link);
    }
    return kept;
}

struct SweepRow {
    double threshold = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double f2 = 0.0;
    HayesLevel hayes = HayesLevel::Unacceptable;
};

/// Evaluates the scored pairs at each threshold. Recall is non-increasing
/// down the list when thresholds are ascending.
inline std::vector<SweepRow> sweep(const std::vector<CandidateLink>& scored,
                                   const AnswerSet& answers,
                                   const std::vector<double>& thresholds) {
    if (answers.empty()) {
        throw EmptyAnswerSet("cannot sweep against an empty answer set");
    }
    std::vector<SweepRow> rows;
    rows.reserve(thresholds.size());
    for (const double threshold : thresholds) {
        const auto report = evaluate(filter_links(scored, threshold), answers);
        rows.push_back(SweepRow{threshold, report.precision, report.recall, report.f1,
                                report.f2, report.hayes_level});
    }
    return rows;
}

/// Uniform grid 0, step, 2*step, ..., 1 (inclusive).
inline std::vector<double> threshold_grid(double step) {
    std::vector<double> grid;
    const auto count = static_cast<std::size_t>(std::llround(1.0 / step));
    grid.reserve(count + 1);
    for (std::size_t i = 0; i <= count; ++i) {
        grid.push_back(static_cast<double>(i) * step);
    }
    return grid;
}

/// Row with the highest F2; earlier rows (lower thresholds) win ties.
inline const SweepRow& best_f2_row(const std::vector<SweepRow>& rows) {
    if (rows.empty()) {
        throw DataError("sweep produced no rows");
    }
    const SweepRow* best = &rows.front();
    for (const auto& row : rows) {
        if (row.f2 > best->f2) best = &row;
    }
    return *best;
}

namespace detail {

inline void format_score(char* buffer, std::size_t size, double value) {
    std::snprintf(buffer, size, "%.12g", value);
}

}  // namespace detail

/// Links CSV: header `hlr_id,llr_id,score`, one row per link.
inline void write_links_csv(const std::string& path, const std::vector<CandidateLink>& links) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoFailure("cannot write links file: " + path);
    }
    out << "hlr_id,llr_id,score\n";
    char buffer[64];
    for (const auto& link : links) {
        detail::format_score(buffer, sizeof(buffer), link.score);
        out << link.hlr_id << ',' << link.llr_id << ',' << buffer << '\n';
    }
    if (!out) {
        throw IoFailure("write failed: " + path);
    }
}

/// Sweep CSV: header `threshold,precision,recall,f1,f2`, plot-ready.
inline void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoFailure("cannot write sweep file: " + path);
    }
    out << "threshold,precision,recall,f1,f2\n";
    char buffer[64];
    for (const auto& row : rows) {
        detail::format_score(buffer, sizeof(buffer), row.threshold);
        out << buffer;
        for (const double value : {row.precision, row.recall, row.f1, row.f2}) {
            detail::format_score(buffer, sizeof(buffer), value);
            out << ',' << buffer;
        }
        out << '\n';
    }
    if (!out) {
        throw IoFailure("write failed: " + path);
    }
}

}  // namespace reqtrace
