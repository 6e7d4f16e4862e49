#include "chatctx/pj.hpp"

#include <algorithm>
#include <cctype>

#include "chatctx/error.hpp"
#include "chatctx/markup.hpp"

namespace chatctx {

namespace {

struct StyleState {
    bool bold = false;
    bool blue = false;
};

bool is_block_tag(const std::string& name) {
    static const char* kBlocks[] = {"p",  "div", "tr",    "li",    "table",
                                    "h1", "h2",  "h3",    "h4",    "h5",
                                    "h6", "ul",  "ol",    "pre",   "blockquote",
                                    "hr", "body"};
    for (const char* b : kBlocks) {
        if (name == b) return true;
    }
    return false;
}

bool is_blue_color(std::string_view value) {
    std::string v = to_lower(value);
    v.erase(std::remove_if(v.begin(), v.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            v.end());
    return v.find("blue") != std::string::npos || v == "#00f" || v == "#0000ff" ||
           v == "rgb(0,0,255)";
}

bool is_bold_weight(std::string_view value) {
    std::string v = to_lower(value);
    size_t b = v.find_first_not_of(" \t");
    if (b == std::string::npos) return false;
    size_t e = v.find_last_not_of(" \t");
    v = v.substr(b, e - b + 1);
    if (v == "bold" || v == "bolder") return true;
    int weight = 0;
    for (char c : v) {
        if (c < '0' || c > '9') return false;
        weight = weight * 10 + (c - '0');
    }
    return weight >= 700;
}

// Applies an inline style attribute ("color: blue; font-weight: bold") to
// the state.
void apply_style_attr(std::string_view style, StyleState& state) {
    size_t pos = 0;
    while (pos < style.size()) {
        size_t semi = style.find(';', pos);
        if (semi == std::string_view::npos) semi = style.size();
        std::string_view decl = style.substr(pos, semi - pos);
        size_t colon = decl.find(':');
        if (colon != std::string_view::npos) {
            auto trim = [](std::string_view s) {
                size_t b = s.find_first_not_of(" \t");
                if (b == std::string_view::npos) return std::string_view{};
                size_t e = s.find_last_not_of(" \t");
                return s.substr(b, e - b + 1);
            };
            std::string prop = to_lower(trim(decl.substr(0, colon)));
            std::string_view value = trim(decl.substr(colon + 1));
            if (prop == "color" && is_blue_color(value)) state.blue = true;
            if (prop == "font-weight" && is_bold_weight(value)) state.bold = true;
        }
        pos = semi + 1;
    }
}

bool has_visible_text(std::string_view s) {
    return std::any_of(s.begin(), s.end(), [](unsigned char c) { return !std::isspace(c); });
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
    if (s.size() < prefix.size()) return false;
    for (size_t i = 0; i < prefix.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(s[i])) !=
            std::tolower(static_cast<unsigned char>(prefix[i]))) {
            return false;
        }
    }
    return true;
}

bool looks_like_email_page(const std::vector<PjLine>& lines) {
    bool subject = false;
    bool from_to = false;
    for (const PjLine& line : lines) {
        if (starts_with_ci(line.text, "subject:")) subject = true;
        if (starts_with_ci(line.text, "from:") || starts_with_ci(line.text, "to:")) {
            from_to = true;
        }
    }
    return subject && from_to;
}

std::string page_title(std::string_view page_name) {
    size_t slash = page_name.find_last_of("/\\");
    if (slash != std::string_view::npos) page_name.remove_prefix(slash + 1);
    size_t dot = page_name.rfind('.');
    if (dot != std::string_view::npos && dot > 0) page_name = page_name.substr(0, dot);
    return std::string(page_name);
}

} // namespace

std::vector<PjLine> extract_pj_lines(std::string_view html) {
    MarkupReader reader(html);
    std::vector<StyleState> stack{StyleState{}};
    std::vector<std::string> open_tags;

    std::vector<PjLine> lines;
    std::string current;
    bool current_blue_bold = false;
    bool in_skip = false;  // inside <script>/<style>/<head>
    int skip_depth = 0;

    auto flush = [&]() {
        size_t b = current.find_first_not_of(" \t\r");
        if (b != std::string::npos) {
            size_t e = current.find_last_not_of(" \t\r");
            lines.push_back({current.substr(b, e - b + 1), current_blue_bold});
        }
        current.clear();
        current_blue_bold = false;
    };

    while (auto event = reader.next()) {
        switch (event->kind) {
            case MarkupEvent::Kind::StartTag: {
                const std::string& name = event->name;
                if (name == "script" || name == "style" || name == "head" ||
                    name == "title") {
                    if (!event->self_closing) {
                        in_skip = true;
                        ++skip_depth;
                    }
                    break;
                }
                if (name == "br") {
                    flush();
                    break;
                }
                if (is_block_tag(name)) flush();
                StyleState state = stack.back();
                if (name == "b" || name == "strong") state.bold = true;
                if (name == "font") {
                    if (const std::string* color = find_attr(*event, "color")) {
                        if (is_blue_color(*color)) state.blue = true;
                    }
                }
                if (const std::string* style = find_attr(*event, "style")) {
                    apply_style_attr(*style, state);
                }
                if (!event->self_closing) {
                    stack.push_back(state);
                    open_tags.push_back(name);
                }
                break;
            }
            case MarkupEvent::Kind::EndTag: {
                const std::string& name = event->name;
                if (name == "script" || name == "style" || name == "head" ||
                    name == "title") {
                    if (skip_depth > 0) --skip_depth;
                    in_skip = skip_depth > 0;
                    break;
                }
                if (is_block_tag(name)) flush();
                // Lenient unwinding: pop to the nearest matching open tag.
                for (size_t i = open_tags.size(); i-- > 0;) {
                    if (open_tags[i] == name) {
                        open_tags.resize(i);
                        stack.resize(i + 1);
                        break;
                    }
                }
                break;
            }
            case MarkupEvent::Kind::Text: {
                if (in_skip) break;
                const StyleState& state = stack.back();
                std::string_view text = event->text;
                size_t pos = 0;
                while (pos <= text.size()) {
                    size_t nl = text.find('\n', pos);
                    std::string_view piece = text.substr(
                        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
                    if (!piece.empty()) {
                        current.append(piece);
                        if (state.bold && state.blue && has_visible_text(piece)) {
                            current_blue_bold = true;
                        }
                    }
                    if (nl == std::string_view::npos) break;
                    flush();
                    pos = nl + 1;
                }
                break;
            }
        }
    }
    flush();

    if (lines.empty()) {
        fail(ErrorCode::MalformedPage, "no text lines extractable");
    }
    return lines;
}

std::optional<ParsedLine> strip_preamble(std::string_view line) {
    size_t pos = 0;
    auto skip_spaces = [&]() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    };
    auto match_digits = [&](size_t p, int min_d, int max_d, size_t& len) {
        size_t n = 0;
        while (p + n < line.size() && std::isdigit(static_cast<unsigned char>(line[p + n])) &&
               static_cast<int>(n) < max_d) {
            ++n;
        }
        if (static_cast<int>(n) < min_d) return false;
        len = n;
        return true;
    };

    skip_spaces();
    size_t preamble_start = pos;

    char bracket = 0;
    if (pos < line.size() && (line[pos] == '(' || line[pos] == '[')) {
        bracket = line[pos];
        ++pos;
        skip_spaces();
    }

    size_t ts_begin = pos;
    bool saw_date = false;
    bool saw_time = false;

    // Optional full date: d{1,4} sep d{1,2} sep d{1,4} with sep in {/, -, .}.
    {
        size_t p = pos;
        size_t d1, d2, d3;
        if (match_digits(p, 1, 4, d1)) {
            size_t q = p + d1;
            if (q < line.size() && (line[q] == '/' || line[q] == '-' || line[q] == '.')) {
                char sep = line[q];
                ++q;
                if (match_digits(q, 1, 2, d2)) {
                    q += d2;
                    if (q < line.size() && line[q] == sep) {
                        ++q;
                        if (match_digits(q, 1, 4, d3)) {
                            q += d3;
                            saw_date = true;
                            pos = q;
                            if (pos < line.size() && line[pos] == ',') ++pos;
                            skip_spaces();
                        }
                    }
                }
            }
        }
    }

    // Optional clock time: d{1,2}:d{2}(:d{2})?
    {
        size_t p = pos;
        size_t d1, d2, d3;
        if (match_digits(p, 1, 2, d1)) {
            size_t q = p + d1;
            if (q < line.size() && line[q] == ':' && match_digits(q + 1, 2, 2, d2)) {
                q += 1 + d2;
                if (q < line.size() && line[q] == ':' && match_digits(q + 1, 2, 2, d3)) {
                    q += 1 + d3;
                }
                saw_time = true;
                pos = q;
                // Optional AM/PM.
                size_t r = pos;
                while (r < line.size() && line[r] == ' ') ++r;
                if (r + 1 < line.size()) {
                    char a = static_cast<char>(std::tolower(static_cast<unsigned char>(line[r])));
                    char m = static_cast<char>(std::tolower(static_cast<unsigned char>(line[r + 1])));
                    if ((a == 'a' || a == 'p') && m == 'm') {
                        bool ends = r + 2 >= line.size() || line[r + 2] == ' ' ||
                                    line[r + 2] == ')' || line[r + 2] == ']' ||
                                    line[r + 2] == '\t';
                        if (ends) pos = r + 2;
                    }
                }
            }
        }
    }

    size_t ts_end = pos;
    bool have_ts = saw_date || saw_time;

    if (bracket) {
        skip_spaces();
        char closer = bracket == '(' ? ')' : ']';
        if (have_ts && pos < line.size() && line[pos] == closer) {
            ++pos;
        } else {
            // Not a recognized bracketed preamble; leave everything in place.
            have_ts = false;
            pos = preamble_start;
        }
    } else if (!have_ts) {
        pos = preamble_start;
    }

    std::optional<std::string> timestamp;
    if (have_ts && ts_end > ts_begin) {
        timestamp = std::string(line.substr(ts_begin, ts_end - ts_begin));
    }

    skip_spaces();
    size_t colon = line.find(':', pos);
    if (colon == std::string_view::npos) return std::nullopt;

    std::string_view sender = line.substr(pos, colon - pos);
    size_t se = sender.find_last_not_of(" \t");
    sender = se == std::string_view::npos ? std::string_view{} : sender.substr(0, se + 1);
    if (sender.empty()) return std::nullopt;

    size_t text_pos = colon + 1;
    if (text_pos < line.size() && line[text_pos] == ' ') ++text_pos;

    ParsedLine parsed;
    parsed.sender = std::string(sender);
    parsed.text = std::string(line.substr(text_pos));
    parsed.timestamp = std::move(timestamp);
    return parsed;
}

PjPageResult parse_pj_page(std::string_view html, std::string_view page_name,
                           const AttackerRegistry& registry) {
    std::vector<PjLine> lines = extract_pj_lines(html);
    if (looks_like_email_page(lines)) {
        fail(ErrorCode::EmailFormatPage,
             std::string(page_name) + ": email-format page, excluded");
    }

    struct RawMessage {
        std::string sender;
        std::string text;
        std::optional<std::string> timestamp;
        bool blue_bold = false;
    };
    std::vector<RawMessage> raw;
    std::vector<std::string> senders;
    for (const PjLine& line : lines) {
        auto parsed = strip_preamble(line.text);
        if (!parsed) {
            // Continuation of the previous message; page preamble otherwise.
            if (!raw.empty()) {
                raw.back().text += "\n" + line.text;
                raw.back().blue_bold = raw.back().blue_bold || line.blue_bold;
            }
            continue;
        }
        RawMessage m;
        m.sender = std::move(parsed->sender);
        m.text = std::move(parsed->text);
        m.timestamp = std::move(parsed->timestamp);
        m.blue_bold = line.blue_bold;
        if (std::find(senders.begin(), senders.end(), m.sender) == senders.end()) {
            senders.push_back(m.sender);
        }
        raw.push_back(std::move(m));
    }
    if (raw.empty()) {
        fail(ErrorCode::MalformedPage,
             std::string(page_name) + ": no message lines extractable");
    }

    PjPageResult result;
    result.senders = senders;

    std::string attacker;
    const bool any_blue_bold =
        std::any_of(raw.begin(), raw.end(), [](const RawMessage& m) { return m.blue_bold; });

    std::vector<GoldRole> roles(raw.size(), GoldRole::Child);
    if (any_blue_bold) {
        result.branch = PjBranch::Formatted;
        for (size_t i = 0; i < raw.size(); ++i) {
            if (raw[i].blue_bold) {
                roles[i] = GoldRole::Adult;
                if (attacker.empty()) attacker = raw[i].sender;
            }
        }
    } else {
        const std::string title = page_title(page_name);
        std::vector<std::string> matched;
        for (const std::string& sender : senders) {
            std::string lower = to_lower(sender);
            if (lower == to_lower(title) || registry.contains(sender)) {
                matched.push_back(sender);
            }
        }
        if (matched.empty()) {
            result.attacker_entry_needed = true;
            return result;
        }
        result.branch = PjBranch::Name;
        attacker = matched.front();
        for (size_t i = 0; i < raw.size(); ++i) {
            if (std::find(matched.begin(), matched.end(), raw[i].sender) != matched.end()) {
                roles[i] = GoldRole::Adult;
            }
        }
    }

    // All non-attacker senders fold onto a single decoy actor (the victim
    // side may hand off between screen names; it is still one actor).
    std::string decoy;
    for (const std::string& sender : senders) {
        if (sender != attacker) {
            decoy = sender;
            break;
        }
    }

    Transcript t;
    t.id = page_title(page_name);
    t.source = Source::PJ;
    t.og_label = OgLabel::Positive;
    t.attacker_id = attacker;
    for (size_t i = 0; i < raw.size(); ++i) {
        Message m;
        m.actor_id = raw[i].sender == attacker ? attacker : decoy;
        m.text = std::move(raw[i].text);
        m.timestamp = std::move(raw[i].timestamp);
        m.gold_role = roles[i];
        t.messages.push_back(std::move(m));
    }
    t.finalize();
    result.transcript = std::move(t);
    return result;
}

} // namespace chatctx
