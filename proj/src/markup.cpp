#include "chatctx/markup.hpp"

#include <cctype>

#include "chatctx/error.hpp"
#include "chatctx/transcript.hpp"

namespace chatctx {

namespace {

bool is_name_char(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '-' || c == '_' || c == ':' || c == '.';
}

void append_codepoint(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

} // namespace

std::string decode_entities(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out.push_back(s[i++]);
            continue;
        }
        size_t semi = s.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 12) {
            out.push_back(s[i++]);
            continue;
        }
        std::string_view body = s.substr(i + 1, semi - i - 1);
        if (body == "amp") out.push_back('&');
        else if (body == "lt") out.push_back('<');
        else if (body == "gt") out.push_back('>');
        else if (body == "quot") out.push_back('"');
        else if (body == "apos") out.push_back('\'');
        else if (body == "nbsp") out.push_back(' ');
        else if (!body.empty() && body[0] == '#') {
            uint32_t cp = 0;
            bool ok = body.size() > 1;
            if (body.size() > 2 && (body[1] == 'x' || body[1] == 'X')) {
                for (size_t k = 2; k < body.size() && ok; ++k) {
                    char c = body[k];
                    uint32_t d;
                    if (c >= '0' && c <= '9') d = c - '0';
                    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
                    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
                    else { ok = false; break; }
                    cp = cp * 16 + d;
                }
            } else {
                for (size_t k = 1; k < body.size() && ok; ++k) {
                    char c = body[k];
                    if (c < '0' || c > '9') { ok = false; break; }
                    cp = cp * 10 + static_cast<uint32_t>(c - '0');
                }
            }
            if (ok && cp > 0 && cp <= 0x10FFFF) {
                append_codepoint(out, cp);
            } else {
                out.append(s.substr(i, semi - i + 1));
            }
        } else {
            // Unknown entity: keep verbatim.
            out.append(s.substr(i, semi - i + 1));
        }
        i = semi + 1;
    }
    return out;
}

const std::string* find_attr(const MarkupEvent& event, std::string_view name) {
    for (const MarkupAttr& a : event.attrs) {
        if (a.name == name) return &a.value;
    }
    return nullptr;
}

MarkupReader::MarkupReader(std::string_view input, bool strict)
    : input_(input), strict_(strict) {}

void MarkupReader::malformed(const std::string& what) const {
    fail(ErrorCode::MalformedXml, what + " at offset " + std::to_string(pos_));
}

std::optional<MarkupEvent> MarkupReader::next() {
    while (pos_ < input_.size()) {
        if (input_[pos_] == '<') {
            auto event = read_tag();
            if (event) return event;
            continue;  // skipped comment/doctype/PI
        }
        size_t start = pos_;
        size_t lt = input_.find('<', pos_);
        if (lt == std::string_view::npos) lt = input_.size();
        pos_ = lt;
        std::string_view raw = input_.substr(start, lt - start);
        MarkupEvent event;
        event.kind = MarkupEvent::Kind::Text;
        event.text = decode_entities(raw);
        return event;
    }
    if (strict_ && !open_.empty()) {
        malformed("unclosed element <" + open_.back() + ">");
    }
    return std::nullopt;
}

std::optional<MarkupEvent> MarkupReader::read_tag() {
    // pos_ is at '<'
    size_t start = pos_;
    ++pos_;
    if (pos_ >= input_.size()) {
        if (strict_) malformed("dangling '<'");
        pos_ = input_.size();
        return std::nullopt;
    }

    // Comments, doctype, processing instructions, CDATA.
    if (input_[pos_] == '!') {
        if (input_.compare(pos_, 3, "!--") == 0) {
            size_t end = input_.find("-->", pos_ + 3);
            if (end == std::string_view::npos) {
                if (strict_) malformed("unterminated comment");
                pos_ = input_.size();
                return std::nullopt;
            }
            pos_ = end + 3;
            return std::nullopt;
        }
        if (input_.compare(pos_, 8, "![CDATA[") == 0) {
            size_t end = input_.find("]]>", pos_ + 8);
            if (end == std::string_view::npos) {
                if (strict_) malformed("unterminated CDATA");
                pos_ = input_.size();
                return std::nullopt;
            }
            MarkupEvent event;
            event.kind = MarkupEvent::Kind::Text;
            event.text.assign(input_.substr(pos_ + 8, end - pos_ - 8));
            pos_ = end + 3;
            return event;
        }
        size_t end = input_.find('>', pos_);
        if (end == std::string_view::npos) {
            if (strict_) malformed("unterminated declaration");
            pos_ = input_.size();
            return std::nullopt;
        }
        pos_ = end + 1;
        return std::nullopt;
    }
    if (input_[pos_] == '?') {
        size_t end = input_.find('>', pos_);
        if (end == std::string_view::npos) {
            if (strict_) malformed("unterminated processing instruction");
            pos_ = input_.size();
            return std::nullopt;
        }
        pos_ = end + 1;
        return std::nullopt;
    }

    bool closing = false;
    if (input_[pos_] == '/') {
        closing = true;
        ++pos_;
    }

    size_t name_start = pos_;
    while (pos_ < input_.size() && is_name_char(input_[pos_])) ++pos_;
    if (pos_ == name_start) {
        if (strict_) malformed("missing tag name");
        // Lenient: treat the '<' as literal text.
        pos_ = start + 1;
        MarkupEvent event;
        event.kind = MarkupEvent::Kind::Text;
        event.text = "<";
        return event;
    }
    MarkupEvent event;
    event.kind = closing ? MarkupEvent::Kind::EndTag : MarkupEvent::Kind::StartTag;
    event.name = to_lower(input_.substr(name_start, pos_ - name_start));

    // Attributes.
    while (true) {
        while (pos_ < input_.size() &&
               std::isspace(static_cast<unsigned char>(input_[pos_]))) {
            ++pos_;
        }
        if (pos_ >= input_.size()) {
            if (strict_) malformed("unterminated tag");
            return std::nullopt;
        }
        if (input_[pos_] == '>') {
            ++pos_;
            break;
        }
        if (input_[pos_] == '/' && pos_ + 1 < input_.size() && input_[pos_ + 1] == '>') {
            event.self_closing = true;
            pos_ += 2;
            break;
        }
        size_t attr_start = pos_;
        while (pos_ < input_.size() && is_name_char(input_[pos_])) ++pos_;
        if (pos_ == attr_start) {
            if (strict_) malformed("bad attribute");
            ++pos_;  // skip junk byte
            continue;
        }
        MarkupAttr attr;
        attr.name = to_lower(input_.substr(attr_start, pos_ - attr_start));
        while (pos_ < input_.size() &&
               std::isspace(static_cast<unsigned char>(input_[pos_]))) {
            ++pos_;
        }
        if (pos_ < input_.size() && input_[pos_] == '=') {
            ++pos_;
            while (pos_ < input_.size() &&
                   std::isspace(static_cast<unsigned char>(input_[pos_]))) {
                ++pos_;
            }
            if (pos_ < input_.size() && (input_[pos_] == '"' || input_[pos_] == '\'')) {
                char quote = input_[pos_++];
                size_t val_start = pos_;
                size_t end = input_.find(quote, pos_);
                if (end == std::string_view::npos) {
                    if (strict_) malformed("unterminated attribute value");
                    pos_ = input_.size();
                    return std::nullopt;
                }
                attr.value = decode_entities(input_.substr(val_start, end - val_start));
                pos_ = end + 1;
            } else {
                size_t val_start = pos_;
                while (pos_ < input_.size() && input_[pos_] != '>' &&
                       !std::isspace(static_cast<unsigned char>(input_[pos_]))) {
                    if (input_[pos_] == '/' && pos_ + 1 < input_.size() &&
                        input_[pos_ + 1] == '>') {
                        break;
                    }
                    ++pos_;
                }
                attr.value = decode_entities(input_.substr(val_start, pos_ - val_start));
            }
        }
        if (!closing) event.attrs.push_back(std::move(attr));
    }

    if (strict_) {
        if (event.kind == MarkupEvent::Kind::StartTag && !event.self_closing) {
            open_.push_back(event.name);
        } else if (event.kind == MarkupEvent::Kind::EndTag) {
            if (open_.empty() || open_.back() != event.name) {
                malformed("mismatched </" + event.name + ">");
            }
            open_.pop_back();
        }
    }
    return event;
}

} // namespace chatctx
