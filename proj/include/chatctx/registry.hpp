#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace chatctx {

// Known-attackers list. Usernames are case-normalized; insertion is idempotent.
class AttackerRegistry {
public:
    void add(std::string_view username);
    bool contains(std::string_view username) const;
    size_t size() const { return usernames_.size(); }
    const std::set<std::string>& usernames() const { return usernames_; }

    // Plain text, one username per line, '#' comments and blank lines allowed.
    static AttackerRegistry from_file(const std::string& path);

private:
    std::set<std::string> usernames_;
};

// Plain text id list, one per line; '#' comments and blank lines ignored.
// Ids are kept verbatim (no case folding).
std::vector<std::string> read_id_file(const std::string& path);

} // namespace chatctx
