#pragma once

#include <string>

namespace reqtrace {

/// One scored HLR-LLR pair.
struct CandidateLink {
    std::string hlr_id;
    std::string llr_id;
    double score = 0.0;
};

enum class Method { Enhanced, PlainVSM };

struct LinkerConfig {
    double link_threshold = 0.5;
    Method method = Method::Enhanced;
};

}  // namespace reqtrace
