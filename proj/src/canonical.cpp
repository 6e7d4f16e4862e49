#include "chatctx/canonical.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chatctx/error.hpp"

namespace chatctx {

using nlohmann::json;

namespace {

[[noreturn]] void bad_record(size_t line_number, const std::string& what) {
    fail(ErrorCode::MalformedRecord,
         "line " + std::to_string(line_number) + ": " + what);
}

} // namespace

std::string transcript_to_json_line(const Transcript& t) {
    json messages = json::array();
    for (const Message& m : t.messages) {
        json jm;
        jm["actor"] = m.actor_id;
        jm["text"] = m.text;
        jm["ts"] = m.timestamp ? json(*m.timestamp) : json(nullptr);
        jm["gold_role"] = to_string(m.gold_role);
        messages.push_back(std::move(jm));
    }
    json j;
    j["id"] = t.id;
    j["source"] = to_string(t.source);
    j["og_label"] = to_string(t.og_label);
    j["actors"] = t.actor_ids;
    j["attacker"] = t.attacker_id ? json(*t.attacker_id) : json(nullptr);
    j["needs_manual_review"] = t.needs_manual_review;
    j["messages"] = std::move(messages);
    return j.dump();
}

Transcript transcript_from_json_line(const std::string& line, size_t line_number) {
    json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) bad_record(line_number, "not a JSON object");

    auto require = [&](const char* key) -> const json& {
        auto it = j.find(key);
        if (it == j.end()) bad_record(line_number, std::string("missing \"") + key + "\"");
        return *it;
    };

    Transcript t;
    const json& id = require("id");
    if (!id.is_string()) bad_record(line_number, "\"id\" must be a string");
    t.id = id.get<std::string>();

    const json& source = require("source");
    auto parsed_source = source.is_string()
                             ? parse_source(source.get<std::string>())
                             : std::nullopt;
    if (!parsed_source) bad_record(line_number, "bad \"source\"");
    t.source = *parsed_source;

    const json& og = require("og_label");
    auto parsed_og = og.is_string() ? parse_og_label(og.get<std::string>()) : std::nullopt;
    if (!parsed_og) bad_record(line_number, "bad \"og_label\"");
    t.og_label = *parsed_og;

    const json& actors = require("actors");
    if (!actors.is_array()) bad_record(line_number, "\"actors\" must be an array");
    for (const json& a : actors) {
        if (!a.is_string()) bad_record(line_number, "actor ids must be strings");
        t.actor_ids.push_back(a.get<std::string>());
    }

    const json& attacker = require("attacker");
    if (attacker.is_string()) {
        t.attacker_id = attacker.get<std::string>();
    } else if (!attacker.is_null()) {
        bad_record(line_number, "\"attacker\" must be a string or null");
    }

    const json& review = require("needs_manual_review");
    if (!review.is_boolean()) bad_record(line_number, "\"needs_manual_review\" must be a bool");
    t.needs_manual_review = review.get<bool>();

    const json& messages = require("messages");
    if (!messages.is_array()) bad_record(line_number, "missing \"messages\" array");
    int64_t ordinal = 0;
    for (const json& jm : messages) {
        if (!jm.is_object()) bad_record(line_number, "message must be an object");
        Message m;
        auto actor = jm.find("actor");
        if (actor == jm.end() || !actor->is_string()) {
            bad_record(line_number, "message missing \"actor\"");
        }
        m.actor_id = actor->get<std::string>();
        auto text = jm.find("text");
        if (text == jm.end() || !text->is_string()) {
            bad_record(line_number, "message missing \"text\"");
        }
        m.text = text->get<std::string>();
        auto ts = jm.find("ts");
        if (ts != jm.end() && ts->is_string()) m.timestamp = ts->get<std::string>();
        auto role = jm.find("gold_role");
        if (role == jm.end() || !role->is_string()) {
            bad_record(line_number, "message missing \"gold_role\"");
        }
        auto parsed_role = parse_gold_role(role->get<std::string>());
        if (!parsed_role) bad_record(line_number, "bad \"gold_role\"");
        m.gold_role = *parsed_role;
        m.ordinal = ordinal++;
        t.messages.push_back(std::move(m));
    }

    // Referential integrity within a record.
    for (const Message& m : t.messages) {
        if (std::find(t.actor_ids.begin(), t.actor_ids.end(), m.actor_id) ==
            t.actor_ids.end()) {
            bad_record(line_number, "message actor \"" + m.actor_id + "\" not in actors");
        }
    }
    if (t.attacker_id &&
        std::find(t.actor_ids.begin(), t.actor_ids.end(), *t.attacker_id) ==
            t.actor_ids.end()) {
        bad_record(line_number, "attacker not in actors");
    }
    return t;
}

std::vector<Transcript> read_canonical(std::istream& in) {
    std::vector<Transcript> corpus;
    std::string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        corpus.push_back(transcript_from_json_line(line, line_number));
    }
    return corpus;
}

std::vector<Transcript> read_canonical_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::Io, "cannot open " + path);
    return read_canonical(in);
}

void write_canonical(std::ostream& out, const std::vector<Transcript>& corpus) {
    for (const Transcript& t : corpus) {
        out << transcript_to_json_line(t) << '\n';
    }
}

void write_canonical_file(const std::string& path, const std::vector<Transcript>& corpus) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::Io, "cannot write " + path);
    write_canonical(out, corpus);
    if (!out) fail(ErrorCode::Io, "write failed: " + path);
}

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
    static const char* digits = "0123456789abcdef";
    uint64_t h = fnv1a64(bytes);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

std::string file_digest_hex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::Io, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return fnv1a64_hex(buffer.str());
}

} // namespace chatctx
