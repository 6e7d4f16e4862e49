#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "chatctx/transcript.hpp"

namespace chatctx {

// Canonical corpus interchange: JSONL, one transcript per line.
// {"id", "source", "og_label", "actors", "attacker", "needs_manual_review",
//  "messages": [{"actor", "text", "ts", "gold_role"}]}
// Message ordinals are the array positions.

std::string transcript_to_json_line(const Transcript& t);
Transcript transcript_from_json_line(const std::string& line, size_t line_number);

std::vector<Transcript> read_canonical(std::istream& in);
std::vector<Transcript> read_canonical_file(const std::string& path);
void write_canonical(std::ostream& out, const std::vector<Transcript>& corpus);
void write_canonical_file(const std::string& path, const std::vector<Transcript>& corpus);

// FNV-1a 64-bit digest, hex encoded; used for corpus digests in run manifests.
uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);
std::string file_digest_hex(const std::string& path);

} // namespace chatctx
