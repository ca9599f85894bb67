#pragma once

#include <algorithm>
#include <fstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "reqtrace/corpus.hpp"
#include "reqtrace/errors.hpp"

namespace reqtrace {

/// Dictionary of words removed before vectorization. All entries lowercase.
struct StopwordList {
    std::unordered_set<std::string> words;
};

inline StopwordList load_stopwords(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoFailure("cannot open stopword file: " + path);
    }
    StopwordList list;
    std::string line;
    while (std::getline(in, line)) {
        std::string word = detail::strip(line);
        if (word.empty() || word[0] == '#') continue;
        std::transform(word.begin(), word.end(), word.begin(), [](unsigned char c) {
            return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
        });
        list.words.insert(std::move(word));
    }
    if (list.words.empty()) {
        throw EmptyInput(path + ": stopword list is empty");
    }
    return list;
}

/// Splits text into lowercased alphabetic tokens. Punctuation, digits and
/// any non-ASCII bytes act as separators. Tokens shorter than 2 characters
/// are dropped. Locale-independent by construction.
inline std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (current.size() >= 2) tokens.push_back(current);
        current.clear();
    };
    for (const char ch : text) {
        if (ch >= 'a' && ch <= 'z') {
            current.push_back(ch);
        } else if (ch >= 'A' && ch <= 'Z') {
            current.push_back(static_cast<char>(ch - 'A' + 'a'));
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

/// Keeps the tokens absent from the stopword set, preserving order.
inline std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                                 const StopwordList& stopwords) {
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    for (const auto& token : tokens) {
        if (stopwords.words.count(token) == 0) kept.push_back(token);
    }
    return kept;
}

namespace detail {

inline bool is_vowel_char(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

inline bool ends_with(std::string_view word, std::string_view suffix) {
    return word.size() >= suffix.size() &&
           word.compare(word.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Irregular forms and words the suffix rules would mangle.
inline const std::unordered_map<std::string, std::string>& lemma_exceptions() {
    static const std::unordered_map<std::string, std::string> map = {
        // protected: not inflections despite their endings
        {"thing", "thing"},       {"string", "string"},
        {"nothing", "nothing"},   {"something", "something"},
        {"anything", "anything"}, {"everything", "everything"},
        {"series", "series"},     {"species", "species"},
        {"king", "king"},         {"ring", "ring"},
        {"spring", "spring"},     {"wing", "wing"},
        {"exceed", "exceed"},     {"proceed", "proceed"},
        {"embed", "embed"},
        // irregular past/participle forms common in requirements text
        {"made", "make"},         {"given", "give"},
        {"taken", "take"},        {"written", "write"},
        {"writing", "write"},     {"sent", "send"},
        {"built", "build"},       {"kept", "keep"},
        {"found", "find"},        {"held", "hold"},
        {"shown", "show"},        {"seen", "see"},
        {"known", "know"},        {"done", "do"},
        {"met", "meet"},          {"chosen", "choose"},
        {"lost", "lose"},         {"left", "leave"},
        {"meant", "mean"},        {"said", "say"},
        {"drawn", "draw"},
        // silent-e bases the restoration heuristics miss
        {"deleted", "delete"},    {"deleting", "delete"},
        {"completed", "complete"},{"completing", "complete"},
        {"scheduled", "schedule"},{"scheduling", "schedule"},
        {"embedded", "embed"},    {"embedding", "embed"},
        {"cached", "cache"},      {"caches", "cache"},
        {"caching", "cache"},
        {"indices", "index"},     {"matrices", "matrix"},
    };
    return map;
}

// count of vowel->consonant transitions, Porter-style, over the whole word
inline int vc_measure(std::string_view w) {
    int m = 0;
    bool in_vowel_run = false;
    for (const char c : w) {
        if (is_vowel_char(c)) {
            in_vowel_run = true;
        } else {
            if (in_vowel_run) ++m;
            in_vowel_run = false;
        }
    }
    return m;
}

// Repairs a stem after an -ed/-ing suffix was stripped: undoes consonant
// doubling and restores a trailing silent e where the ending strongly
// implies one.
inline std::string restore_stem(std::string stem) {
    const std::size_t n = stem.size();
    if (n < 3) {
        stem.push_back('e');  // us -> use
        return stem;
    }
    const char last = stem[n - 1];
    const char prev = stem[n - 2];
    // doubled consonant (stopp -> stop); doubling replaces the silent e,
    // so return without further repair
    if (last == prev && !is_vowel_char(last) && last != 'l' && last != 's' && last != 'z') {
        stem.pop_back();
        return stem;
    }
    // English stems do not end in bare v/c/z (remov -> remove, trac -> trace)
    if (last == 'v' || last == 'c' || last == 'z') {
        stem.push_back('e');
        return stem;
    }
    // consonant-vowel-consonant tails usually mark a dropped e (creat ->
    // create, requir -> require, stor -> store). Exceptions: i+t endings
    // (edit, limit, audit) and longer e/o-vowel stems (monitor, enter,
    // target), which end bare.
    const char third = stem[n - 3];
    if (!is_vowel_char(third) && is_vowel_char(prev) && !is_vowel_char(last) &&
        last != 'w' && last != 'x' && last != 'y' &&
        !(prev == 'i' && last == 't') &&
        (prev == 'a' || prev == 'i' || prev == 'u' || vc_measure(stem) == 1)) {
        stem.push_back('e');
        return stem;
    }
    // consonant + l (enabl -> enable, handl -> handle)
    if (last == 'l' && !is_vowel_char(prev) && prev != 'l') {
        stem.push_back('e');
        return stem;
    }
    return stem;
}

inline std::string lemmatize_word(const std::string& word) {
    const auto& exceptions = lemma_exceptions();
    if (const auto it = exceptions.find(word); it != exceptions.end()) {
        return it->second;
    }
    const std::size_t n = word.size();
    if (n < 4) return word;

    // plural and 3rd-person -s
    if (ends_with(word, "ies") && n >= 5) {
        return word.substr(0, n - 3) + "y";  // policies -> policy
    }
    if (ends_with(word, "sses")) {
        return word.substr(0, n - 2);  // addresses -> address
    }
    if (ends_with(word, "xes") || ends_with(word, "ches") || ends_with(word, "shes") ||
        ends_with(word, "zes")) {
        return word.substr(0, n - 2);  // boxes -> box, searches -> search
    }
    if (word.back() == 's' && !ends_with(word, "ss") && !ends_with(word, "us") &&
        !ends_with(word, "is")) {
        return word.substr(0, n - 1);  // requirements -> requirement
    }

    if (ends_with(word, "eed")) return word;  // need, exceed

    if (ends_with(word, "ied") && n >= 5) {
        return word.substr(0, n - 3) + "y";  // modified -> modify
    }
    if (ends_with(word, "ed")) {
        return restore_stem(word.substr(0, n - 2));
    }
    if (ends_with(word, "ing") && n >= 5) {
        return restore_stem(word.substr(0, n - 3));
    }
    return word;
}

}  // namespace detail

/// Porter's suffix-stripping algorithm, used as the alternative normalizer.
/// Operates on lowercase ASCII words.
class PorterStemmer {
public:
    static std::string stem(const std::string& word) {
        if (word.size() <= 2) return word;
        std::string w = word;
        step1a(w);
        step1b(w);
        step1c(w);
        step2(w);
        step3(w);
        step4(w);
        step5a(w);
        step5b(w);
        return w;
    }

private:
    static bool is_consonant(const std::string& w, std::size_t i) {
        const char c = w[i];
        if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
        if (c == 'y') return i == 0 ? true : !is_consonant(w, i - 1);
        return true;
    }

    // number of VC sequences in w[0, end)
    static int measure(const std::string& w, std::size_t end) {
        int m = 0;
        std::size_t i = 0;
        while (i < end && is_consonant(w, i)) ++i;
        while (i < end) {
            while (i < end && !is_consonant(w, i)) ++i;
            if (i == end) break;
            ++m;
            while (i < end && is_consonant(w, i)) ++i;
        }
        return m;
    }

    static bool has_vowel(const std::string& w, std::size_t end) {
        for (std::size_t i = 0; i < end; ++i) {
            if (!is_consonant(w, i)) return true;
        }
        return false;
    }

    static bool double_consonant(const std::string& w) {
        const std::size_t n = w.size();
        return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
    }

    // stem ends consonant-vowel-consonant, final consonant not w/x/y
    static bool cvc(const std::string& w) {
        const std::size_t n = w.size();
        if (n < 3) return false;
        if (!is_consonant(w, n - 3) || is_consonant(w, n - 2) || !is_consonant(w, n - 1)) {
            return false;
        }
        const char c = w[n - 1];
        return c != 'w' && c != 'x' && c != 'y';
    }

    static bool ends(const std::string& w, std::string_view s) {
        return detail::ends_with(w, s);
    }

    static void step1a(std::string& w) {
        if (ends(w, "sses")) {
            w.resize(w.size() - 2);
        } else if (ends(w, "ies")) {
            w.resize(w.size() - 2);
        } else if (!ends(w, "ss") && ends(w, "s")) {
            w.resize(w.size() - 1);
        }
    }

    static void step1b(std::string& w) {
        if (ends(w, "eed")) {
            if (measure(w, w.size() - 3) > 0) w.resize(w.size() - 1);
            return;
        }
        bool stripped = false;
        if (ends(w, "ed") && has_vowel(w, w.size() - 2)) {
            w.resize(w.size() - 2);
            stripped = true;
        } else if (ends(w, "ing") && has_vowel(w, w.size() - 3)) {
            w.resize(w.size() - 3);
            stripped = true;
        }
        if (!stripped) return;
        if (ends(w, "at") || ends(w, "bl") || ends(w, "iz")) {
            w.push_back('e');
        } else if (double_consonant(w) && !ends(w, "l") && !ends(w, "s") && !ends(w, "z")) {
            w.resize(w.size() - 1);
        } else if (measure(w, w.size()) == 1 && cvc(w)) {
            w.push_back('e');
        }
    }

    static void step1c(std::string& w) {
        if (ends(w, "y") && has_vowel(w, w.size() - 1)) {
            w.back() = 'i';
        }
    }

    // (suffix, replacement, minimum measure of the remaining stem)
    static void replace_suffixes(
        std::string& w,
        const std::vector<std::pair<std::string_view, std::string_view>>& rules) {
        for (const auto& [suffix, replacement] : rules) {
            if (!ends(w, suffix)) continue;
            const std::size_t stem_len = w.size() - suffix.size();
            if (measure(w, stem_len) > 0) {
                w.resize(stem_len);
                w.append(replacement);
            }
            return;  // longest matching suffix decides, matched or not
        }
    }

    static void step2(std::string& w) {
        replace_suffixes(w, {{"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
                             {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
                             {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
                             {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
                             {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
                             {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
                             {"iviti", "ive"},   {"biliti", "ble"}});
    }

    static void step3(std::string& w) {
        replace_suffixes(w, {{"icate", "ic"}, {"ative", ""}, {"alize", "al"},
                             {"iciti", "ic"}, {"ical", "ic"}, {"ful", ""},
                             {"ness", ""}});
    }

    static void step4(std::string& w) {
        static const std::vector<std::string_view> suffixes = {
            "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
            "ment", "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize"};
        for (const auto suffix : suffixes) {
            if (!ends(w, suffix)) continue;
            const std::size_t stem_len = w.size() - suffix.size();
            if (measure(w, stem_len) > 1) {
                if (suffix == "ion" && stem_len > 0 && w[stem_len - 1] != 's' &&
                    w[stem_len - 1] != 't') {
                    return;
                }
                w.resize(stem_len);
            }
            return;
        }
    }

    static void step5a(std::string& w) {
        if (!ends(w, "e")) return;
        const int m = measure(w, w.size() - 1);
        if (m > 1) {
            w.resize(w.size() - 1);
        } else if (m == 1) {
            std::string stem = w.substr(0, w.size() - 1);
            if (!cvc(stem)) w.resize(w.size() - 1);
        }
    }

    static void step5b(std::string& w) {
        if (measure(w, w.size()) > 1 && double_consonant(w) && ends(w, "l")) {
            w.resize(w.size() - 1);
        }
    }
};

enum class Normalizer { RuleLemmatizer, PorterStemmer };

/// Maps each token to its base form under the chosen normalizer. The
/// default is a rule-based suffix lemmatizer that strips plural, -ed and
/// -ing endings with silent-e restoration; the Porter stemmer is available
/// behind the config flag.
inline std::vector<std::string> lemmatize(const std::vector<std::string>& tokens,
                                          Normalizer normalizer = Normalizer::RuleLemmatizer) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& token : tokens) {
        out.push_back(normalizer == Normalizer::RuleLemmatizer
                          ? detail::lemmatize_word(token)
                          : PorterStemmer::stem(token));
    }
    return out;
}

/// tokenize -> remove stopwords -> lemmatize, in that order.
inline std::vector<std::string> preprocess_text(const std::string& text,
                                                const StopwordList& stopwords,
                                                Normalizer normalizer = Normalizer::RuleLemmatizer) {
    return lemmatize(remove_stopwords(tokenize(text), stopwords), normalizer);
}

/// Fills the `tokens` field of every document in place.
inline void preprocess_docs(std::vector<RequirementDoc>& docs, const StopwordList& stopwords,
                            Normalizer normalizer = Normalizer::RuleLemmatizer) {
    for (auto& doc : docs) {
        doc.tokens = preprocess_text(doc.text, stopwords, normalizer);
    }
}

}  // namespace reqtrace
