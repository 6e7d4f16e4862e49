#include "chatctx/pan12.hpp"

#include "chatctx/error.hpp"
#include "chatctx/markup.hpp"

namespace chatctx {

namespace {

bool is_ws_only(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

} // namespace

std::vector<Transcript> parse_pan12(std::string_view xml,
                                    const std::set<std::string>& predator_ids) {
    MarkupReader reader(xml, /*strict=*/true);

    std::vector<Transcript> corpus;
    Transcript* conversation = nullptr;
    bool in_message = false;
    std::string author, time, text;
    bool has_author = false, has_time = false, has_text = false;
    std::string* capture = nullptr;

    bool saw_root = false;
    while (auto event = reader.next()) {
        switch (event->kind) {
            case MarkupEvent::Kind::StartTag: {
                const std::string& name = event->name;
                if (name == "conversations") {
                    saw_root = true;
                } else if (name == "conversation") {
                    const std::string* id = find_attr(*event, "id");
                    if (!id || id->empty()) {
                        fail(ErrorCode::MalformedXml, "conversation without id");
                    }
                    corpus.emplace_back();
                    conversation = &corpus.back();
                    conversation->id = *id;
                    conversation->source = Source::PAN12;
                    if (event->self_closing) conversation = nullptr;
                } else if (name == "message") {
                    if (!conversation) {
                        fail(ErrorCode::MalformedXml, "message outside conversation");
                    }
                    in_message = true;
                    author.clear();
                    time.clear();
                    text.clear();
                    has_author = has_time = has_text = false;
                    if (event->self_closing) {
                        fail(ErrorCode::MalformedXml, "empty message element");
                    }
                } else if (in_message && name == "author") {
                    capture = &author;
                    has_author = true;
                    if (event->self_closing) capture = nullptr;
                } else if (in_message && name == "time") {
                    capture = &time;
                    has_time = true;
                    if (event->self_closing) capture = nullptr;
                } else if (in_message && name == "text") {
                    capture = &text;
                    has_text = true;
                    if (event->self_closing) capture = nullptr;
                }
                break;
            }
            case MarkupEvent::Kind::EndTag: {
                const std::string& name = event->name;
                if (name == "author" || name == "time" || name == "text") {
                    capture = nullptr;
                } else if (name == "message") {
                    if (!in_message || !has_author) {
                        fail(ErrorCode::MalformedXml, "message without author");
                    }
                    Message m;
                    m.actor_id = author;
                    m.text = text;
                    if (has_time && !time.empty()) m.timestamp = time;
                    conversation->messages.push_back(std::move(m));
                    in_message = false;
                } else if (name == "conversation") {
                    conversation = nullptr;
                }
                break;
            }
            case MarkupEvent::Kind::Text: {
                if (capture) {
                    capture->append(event->text);
                } else if (!is_ws_only(event->text) && !in_message) {
                    // stray text between elements is tolerated
                }
                break;
            }
        }
    }
    if (!saw_root) {
        fail(ErrorCode::MalformedXml, "missing conversations root element");
    }

    for (Transcript& t : corpus) {
        bool positive = false;
        for (const Message& m : t.messages) {
            if (predator_ids.count(m.actor_id)) {
                positive = true;
                break;
            }
        }
        t.og_label = positive ? OgLabel::Positive : OgLabel::Negative;
        if (positive) {
            for (Message& m : t.messages) {
                const bool predator = predator_ids.count(m.actor_id) > 0;
                m.gold_role = predator ? GoldRole::Adult : GoldRole::Child;
                if (predator && !t.attacker_id) t.attacker_id = m.actor_id;
            }
        }
        t.finalize();
    }
    return corpus;
}

} // namespace chatctx
