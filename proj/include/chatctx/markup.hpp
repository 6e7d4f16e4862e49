#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chatctx {

// Minimal tag/text event reader covering the markup these corpora actually
// use: elements with quoted or bare attributes, character/entity references,
// comments, doctype/PI skipping, CDATA. Lenient by default (HTML pages);
// strict mode (XML) throws MalformedXml on syntax errors and on mismatched
// or unclosed elements.
struct MarkupAttr {
    std::string name;   // lowercased
    std::string value;  // entity-decoded
};

struct MarkupEvent {
    enum class Kind { StartTag, EndTag, Text };
    Kind kind = Kind::Text;
    std::string name;               // lowercased tag name
    std::vector<MarkupAttr> attrs;  // StartTag only
    std::string text;               // Text only, entity-decoded
    bool self_closing = false;
};

class MarkupReader {
public:
    explicit MarkupReader(std::string_view input, bool strict = false);

    // nullopt at end of input. In strict mode, end of input with unclosed
    // elements throws.
    std::optional<MarkupEvent> next();

private:
    std::string_view input_;
    size_t pos_ = 0;
    bool strict_ = false;
    std::vector<std::string> open_;  // strict-mode element stack

    std::optional<MarkupEvent> read_tag();
    [[noreturn]] void malformed(const std::string& what) const;
};

// Decodes &amp; &lt; &gt; &quot; &apos; &nbsp; and numeric (&#NN; &#xHH;)
// references; unknown entities pass through verbatim.
std::string decode_entities(std::string_view s);

const std::string* find_attr(const MarkupEvent& event, std::string_view name);

} // namespace chatctx
