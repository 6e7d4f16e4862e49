#include "chatctx/registry.hpp"

#include <fstream>

#include "chatctx/error.hpp"
#include "chatctx/transcript.hpp"

namespace chatctx {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::Io, "cannot open " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string t = trim(line);
        if (!t.empty()) out.push_back(std::move(t));
    }
    return out;
}

} // namespace

void AttackerRegistry::add(std::string_view username) {
    std::string key = to_lower(username);
    if (!key.empty()) usernames_.insert(std::move(key));
}

bool AttackerRegistry::contains(std::string_view username) const {
    return usernames_.count(to_lower(username)) > 0;
}

AttackerRegistry AttackerRegistry::from_file(const std::string& path) {
    AttackerRegistry registry;
    for (const std::string& name : read_lines(path)) {
        registry.add(name);
    }
    return registry;
}

std::vector<std::string> read_id_file(const std::string& path) {
    return read_lines(path);
}

} // namespace chatctx
