#pragma once

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "reqtrace/errors.hpp"

namespace reqtrace {

enum class Level { High, Low };

inline std::string_view to_string(Level level) {
    return level == Level::High ? "high" : "low";
}

/// One requirement. `tokens` starts empty and is filled by the
/// preprocessing stage.
struct RequirementDoc {
    std::string id;
    Level level = Level::High;
    std::string text;
    std::vector<std::string> tokens;
};

/// Gold trace links as a set of (hlr_id, llr_id) pairs.
struct AnswerSet {
    std::set<std::pair<std::string, std::string>> links;

    bool empty() const { return links.empty(); }
    std::size_t size() const { return links.size(); }
    bool contains(const std::string& hlr_id, const std::string& llr_id) const {
        return links.count({hlr_id, llr_id}) != 0;
    }
};

struct ProjectBundle {
    std::vector<RequirementDoc> high;
    std::vector<RequirementDoc> low;
    std::optional<AnswerSet> answers;
};

namespace detail {

inline std::string strip(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
    return std::string(s.substr(b, e - b));
}

inline bool is_skippable(const std::string& line) {
    const std::string t = strip(line);
    return t.empty() || t[0] == '#';
}

}  // namespace detail

/// Loads requirements from the canonical file format: UTF-8 text, one
/// requirement per line as `ID<TAB>text`. Blank lines and lines starting
/// with `#` are skipped. Ids are kept verbatim and must be unique.
inline std::vector<RequirementDoc> load_requirements(const std::string& path, Level level) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoFailure("cannot open requirement file: " + path);
    }
    std::vector<RequirementDoc> docs;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::is_skippable(line)) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw MalformedRecord(path + ":" + std::to_string(lineno) +
                                  ": expected ID<TAB>text");
        }
        std::string id = detail::strip(line.substr(0, tab));
        std::string text = detail::strip(line.substr(tab + 1));
        if (id.empty()) {
            throw MalformedRecord(path + ":" + std::to_string(lineno) + ": empty id");
        }
        if (text.empty()) {
            throw MalformedRecord(path + ":" + std::to_string(lineno) +
                                  ": requirement \"" + id + "\" has empty text");
        }
        if (!seen.insert(id).second) {
            throw DuplicateId(path + ":" + std::to_string(lineno) +
                              ": duplicate requirement id \"" + id + "\"");
        }
        docs.push_back(RequirementDoc{std::move(id), level, std::move(text), {}});
    }
    if (docs.empty()) {
        throw EmptyInput(path + ": no requirements found");
    }
    return docs;
}

/// Loads a gold answer set: whitespace-separated `HLR_ID LLR_ID` per line,
/// `#` comments and blank lines skipped. Duplicate lines collapse to one link.
inline AnswerSet load_answer_set(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoFailure("cannot open answer file: " + path);
    }
    AnswerSet answers;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::is_skippable(line)) continue;
        std::istringstream fields(line);
        std::string hlr_id;
        std::string llr_id;
        if (!(fields >> hlr_id >> llr_id)) {
            throw MalformedLink(path + ":" + std::to_string(lineno) +
                                ": expected HLR_ID LLR_ID");
        }
        answers.links.emplace(std::move(hlr_id), std::move(llr_id));
    }
    return answers;
}

/// Writes requirements back in the canonical `ID<TAB>text` format.
inline void save_requirements(const std::string& path, const std::vector<RequirementDoc>& docs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoFailure("cannot write requirement file: " + path);
    }
    for (const auto& doc : docs) {
        out << doc.id << '\t' << doc.text << '\n';
    }
    if (!out) {
        throw IoFailure("write failed: " + path);
    }
}

/// Writes an answer set in the canonical `HLR_ID LLR_ID` format, one link
/// per line in set order.
inline void save_answer_set(const std::string& path, const AnswerSet& answers) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoFailure("cannot write answer file: " + path);
    }
    for (const auto& [hlr_id, llr_id] : answers.links) {
        out << hlr_id << ' ' << llr_id << '\n';
    }
    if (!out) {
        throw IoFailure("write failed: " + path);
    }
}

}  // namespace reqtrace
