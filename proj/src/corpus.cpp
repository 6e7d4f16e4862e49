#include "chatctx/corpus.hpp"

namespace chatctx {

std::vector<Transcript> filter_transcripts(const std::vector<Transcript>& corpus,
                                           size_t min_messages,
                                           bool require_two_actors) {
    std::vector<Transcript> kept;
    for (const Transcript& t : corpus) {
        if (t.messages.size() < min_messages) continue;
        if (require_two_actors && t.actor_count() != 2) continue;
        kept.push_back(t);
    }
    return kept;
}

Transcript check_label_balance(Transcript t) {
    int64_t adult = 0;
    int64_t child = 0;
    for (const Message& m : t.messages) {
        if (m.gold_role == GoldRole::Adult) ++adult;
        if (m.gold_role == GoldRole::Child) ++child;
    }
    const int64_t total = static_cast<int64_t>(t.messages.size());
    // Integer comparison keeps the 70% boundary exact: share > 0.7 <=> 10*n > 7*total.
    const int64_t dominant = adult > child ? adult : child;
    t.needs_manual_review = total > 0 && 10 * dominant > 7 * total;
    return t;
}

} // namespace chatctx
