#pragma once

#include <vector>

#include "chatctx/transcript.hpp"

namespace chatctx {

// Keeps transcripts with message count >= min_messages, and exactly two
// actors when required. Monotone: raising min_messages never adds transcripts.
std::vector<Transcript> filter_transcripts(const std::vector<Transcript>& corpus,
                                           size_t min_messages,
                                           bool require_two_actors);

// Sets needs_manual_review iff one gold role strictly exceeds 70% of the
// transcript's messages. Pure apart from that flag.
Transcript check_label_balance(Transcript t);

} // namespace chatctx
