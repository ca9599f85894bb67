#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "reqtrace/corpus.hpp"
#include "reqtrace/errors.hpp"
#include "reqtrace/linker_types.hpp"

namespace reqtrace {

/// Hayes et al. acceptance bands for candidate-link generators. Each level
/// requires BOTH its recall and precision minima; higher levels take
/// precedence.
enum class HayesLevel { Excellent, Good, Acceptable, Unacceptable };

inline std::string_view to_string(HayesLevel level) {
    switch (level) {
        case HayesLevel::Excellent: return "excellent";
        case HayesLevel::Good: return "good";
        case HayesLevel::Acceptable: return "acceptable";
        default: return "unacceptable";
    }
}

struct HayesBand {
    HayesLevel level;
    double min_recall;
    double min_precision;
};

/// Bands ordered best first: Excellent (R>=0.8, P>=0.5), Good (0.7, 0.3),
/// Acceptable (0.6, 0.2).
inline const std::vector<HayesBand>& hayes_bands() {
    static const std::vector<HayesBand> bands = {
        {HayesLevel::Excellent, 0.8, 0.5},
        {HayesLevel::Good, 0.7, 0.3},
        {HayesLevel::Acceptable, 0.6, 0.2},
    };
    return bands;
}

inline HayesLevel hayes_level(double recall, double precision) {
    for (const auto& band : hayes_bands()) {
        if (recall >= band.min_recall && precision >= band.min_precision) {
            return band.level;
        }
    }
    return HayesLevel::Unacceptable;
}

struct EvalReport {
    std::size_t true_positives = 0;
    std::size_t false_positives = 0;
    std::size_t false_negatives = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double f2 = 0.0;
    HayesLevel hayes_level = HayesLevel::Unacceptable;
};

/// Confusion counts with set semantics on (hlr_id, llr_id) pairs:
/// duplicate candidate links collapse before counting.
inline std::tuple<std::size_t, std::size_t, std::size_t> confusion(
    const std::vector<CandidateLink>& links, const AnswerSet& answers) {
    std::set<std::pair<std::string, std::string>> predicted;
    for (const auto& link : links) {
        predicted.emplace(link.hlr_id, link.llr_id);
    }
    std::size_t tp = 0;
    for (const auto& pair : predicted) {
        if (answers.links.count(pair) != 0) ++tp;
    }
    const std::size_t fp = predicted.size() - tp;
    const std::size_t fn = answers.links.size() - tp;
    return {tp, fp, fn};
}

/// F-measure (1+b^2)PR / (b^2 P + R); 0 when both P and R are 0.
inline double f_beta(double precision, double recall, double beta) {
    const double b2 = beta * beta;
    const double denom = b2 * precision + recall;
    if (denom == 0.0) return 0.0;
    return (1.0 + b2) * precision * recall / denom;
}

/// Full report against a gold answer set. Precision is defined as 0 when
/// no links were emitted; an empty answer set is an error rather than a
/// degenerate evaluation.
inline EvalReport evaluate(const std::vector<CandidateLink>& links, const AnswerSet& answers) {
    if (answers.empty()) {
        throw EmptyAnswerSet("cannot evaluate against an empty answer set");
    }
    const auto [tp, fp, fn] = confusion(links, answers);
    EvalReport report;
    report.true_positives = tp;
    report.false_positives = fp;
    report.false_negatives = fn;
    report.precision = (tp + fp) > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
    report.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
    report.f1 = f_beta(report.precision, report.recall, 1.0);
    report.f2 = f_beta(report.precision, report.recall, 2.0);
    report.hayes_level = hayes_level(report.recall, report.precision);
    return report;
}

/// Checks the AnswerSet invariant that every referenced id resolves
/// against the loaded requirement sets.
inline void check_answers_resolve(const AnswerSet& answers, const ProjectBundle& bundle) {
    std::set<std::string> high_ids;
    std::set<std::string> low_ids;
    for (const auto& doc : bundle.high) high_ids.insert(doc.id);
    for (const auto& doc : bundle.low) low_ids.insert(doc.id);
    for (const auto& [hlr_id, llr_id] : answers.links) {
        if (high_ids.count(hlr_id) == 0) {
            throw UnresolvedId("answer set references unknown high-level id \"" + hlr_id + "\"");
        }
        if (low_ids.count(llr_id) == 0) {
            throw UnresolvedId("answer set references unknown low-level id \"" + llr_id + "\"");
        }
    }
}

}  // namespace reqtrace
