#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chatctx/registry.hpp"
#include "chatctx/transcript.hpp"

namespace chatctx {

// One rendered line of a chat page, with whether any of its text was styled
// both bold and blue (the attacker marker used by formatted pages).
struct PjLine {
    std::string text;
    bool blue_bold = false;
};

// Flattens a page to text lines, tracking bold+blue styling. Lines break on
// <br>, block-level tags, and newlines in text nodes. Throws MalformedPage
// on pages with no text at all.
std::vector<PjLine> extract_pj_lines(std::string_view html);

struct ParsedLine {
    std::string sender;
    std::string text;
    std::optional<std::string> timestamp;  // raw, brackets removed
};

// Removes a leading date/time preamble (full date, clock time with optional
// seconds, optional AM/PM; wrapped in (), [], or bare) and splits the sender
// at the first ':'. nullopt when the line has no sender delimiter (the line
// continues the previous message). Unrecognized prefixes stay in the text.
std::optional<ParsedLine> strip_preamble(std::string_view line);

enum class PjBranch : uint8_t { Formatted, Name };

struct PjPageResult {
    bool attacker_entry_needed = false;
    Transcript transcript;              // valid when !attacker_entry_needed
    PjBranch branch = PjBranch::Formatted;
    std::vector<std::string> senders;   // observed sender names, first appearance
};

// Processes one chat page. Branch order: (1) any message line styled
// blue+bold -> formatted processing; (2) page title (file name minus
// extension) or a registry username matches a sender name -> name
// processing; (3) neither -> attacker_entry_needed, signaling a manual
// registry addition. Throws MalformedPage when no message lines exist and
// EmailFormatPage for email-style pages (excluded at ingestion).
PjPageResult parse_pj_page(std::string_view html, std::string_view page_name,
                           const AttackerRegistry& registry);

} // namespace chatctx
