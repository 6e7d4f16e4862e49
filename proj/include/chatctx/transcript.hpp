#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chatctx {

enum class GoldRole : uint8_t { Adult, Child, Unknown };
enum class Source : uint8_t { PJ, PAN12, Other };
enum class OgLabel : uint8_t { Positive, Negative, Unknown };

const char* to_string(GoldRole role);
const char* to_string(Source source);
const char* to_string(OgLabel label);

std::optional<GoldRole> parse_gold_role(std::string_view s);
std::optional<Source> parse_source(std::string_view s);
std::optional<OgLabel> parse_og_label(std::string_view s);

struct Message {
    std::string actor_id;
    int64_t ordinal = 0;                   // position in transcript, contiguous from 0
    std::string text;                      // verbatim after preamble stripping
    std::optional<std::string> timestamp;  // raw string, never parsed to an instant
    GoldRole gold_role = GoldRole::Unknown;

    bool operator==(const Message&) const = default;
};

struct Transcript {
    std::string id;
    Source source = Source::Other;
    std::vector<Message> messages;
    std::vector<std::string> actor_ids;    // unique, first-appearance order
    OgLabel og_label = OgLabel::Unknown;
    std::optional<std::string> attacker_id;
    bool needs_manual_review = false;

    bool operator==(const Transcript&) const = default;

    size_t actor_count() const { return actor_ids.size(); }

    // Recomputes actor_ids from messages (unique, first appearance) and
    // renumbers ordinals 0..n-1.
    void finalize();
};

// ASCII lowercase; bytes >= 0x80 pass through untouched.
std::string to_lower(std::string_view s);

} // namespace chatctx
