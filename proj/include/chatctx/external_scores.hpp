#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace chatctx {

// Adapter for scores produced outside this tool (e.g. transformer models).
// File format: TSV with header "transcript_id\tordinal\tscore".
struct ExternalScores {
    std::map<std::pair<std::string, int64_t>, double> by_message;
};

ExternalScores load_external_scores(const std::string& path);

} // namespace chatctx
