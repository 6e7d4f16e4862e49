#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "chatctx/transcript.hpp"

namespace chatctx {

// Parses a conversations XML document: one transcript per <conversation>,
// messages taken in document order. A conversation is positive iff any
// author appears in predator_ids; in positive conversations predator
// messages are Adult and the rest Child; negative conversations keep
// unknown roles. Throws MalformedXml.
std::vector<Transcript> parse_pan12(std::string_view xml,
                                    const std::set<std::string>& predator_ids);

} // namespace chatctx
