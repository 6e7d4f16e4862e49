#pragma once

#include <string>
#include <vector>

namespace chatctx {

// Per-message determination value: 1 pulls toward Adult, 0 toward Child.
struct MessageScore {
    double value = 0.5;  // in [0, 1]
    std::string scorer_id;

    bool operator==(const MessageScore&) const = default;
};

// Lowercased whitespace-split tokens; punctuation is kept inside tokens so
// emoticons survive. Empty text gives an empty list.
std::vector<std::string> tokenize(std::string_view text);

} // namespace chatctx
