#include "chatctx/transcript.hpp"

#include <algorithm>
#include <cctype>

namespace chatctx {

const char* to_string(GoldRole role) {
    switch (role) {
        case GoldRole::Adult: return "adult";
        case GoldRole::Child: return "child";
        case GoldRole::Unknown: return "unknown";
    }
    return "unknown";
}

const char* to_string(Source source) {
    switch (source) {
        case Source::PJ: return "PJ";
        case Source::PAN12: return "PAN12";
        case Source::Other: return "Other";
    }
    return "Other";
}

const char* to_string(OgLabel label) {
    switch (label) {
        case OgLabel::Positive: return "positive";
        case OgLabel::Negative: return "negative";
        case OgLabel::Unknown: return "unknown";
    }
    return "unknown";
}

std::optional<GoldRole> parse_gold_role(std::string_view s) {
    if (s == "adult") return GoldRole::Adult;
    if (s == "child") return GoldRole::Child;
    if (s == "unknown") return GoldRole::Unknown;
    return std::nullopt;
}

std::optional<Source> parse_source(std::string_view s) {
    if (s == "PJ") return Source::PJ;
    if (s == "PAN12") return Source::PAN12;
    if (s == "Other") return Source::Other;
    return std::nullopt;
}

std::optional<OgLabel> parse_og_label(std::string_view s) {
    if (s == "positive") return OgLabel::Positive;
    if (s == "negative") return OgLabel::Negative;
    if (s == "unknown") return OgLabel::Unknown;
    return std::nullopt;
}

void Transcript::finalize() {
    actor_ids.clear();
    for (int64_t i = 0; i < static_cast<int64_t>(messages.size()); ++i) {
        messages[i].ordinal = i;
        const std::string& actor = messages[i].actor_id;
        if (std::find(actor_ids.begin(), actor_ids.end(), actor) == actor_ids.end()) {
            actor_ids.push_back(actor);
        }
    }
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

} // namespace chatctx
