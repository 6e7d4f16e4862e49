#include "chatctx/nb.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "chatctx/error.hpp"

namespace chatctx {

void NbModel::rebuild_totals() {
    adult_token_total = std::accumulate(adult_token_counts.begin(),
                                        adult_token_counts.end(), int64_t{0});
    child_token_total = std::accumulate(child_token_counts.begin(),
                                        child_token_counts.end(), int64_t{0});
}

NbModel train_nb(const std::vector<Transcript>& corpus, double alpha) {
    if (!(alpha > 0.0)) {
        fail(ErrorCode::InvalidArgument, "alpha must be > 0");
    }
    NbModel model;
    model.alpha = alpha;
    for (const Transcript& t : corpus) {
        for (const Message& m : t.messages) {
            if (m.gold_role == GoldRole::Unknown) continue;
            const bool adult = m.gold_role == GoldRole::Adult;
            if (adult) {
                ++model.adult_doc_count;
            } else {
                ++model.child_doc_count;
            }
            for (const std::string& token : tokenize(m.text)) {
                auto [it, inserted] = model.vocabulary.try_emplace(
                    token, static_cast<int32_t>(model.vocabulary.size()));
                if (inserted) {
                    model.adult_token_counts.push_back(0);
                    model.child_token_counts.push_back(0);
                }
                if (adult) {
                    ++model.adult_token_counts[static_cast<size_t>(it->second)];
                } else {
                    ++model.child_token_counts[static_cast<size_t>(it->second)];
                }
            }
        }
    }
    if (model.adult_doc_count + model.child_doc_count == 0) {
        fail(ErrorCode::EmptyTrainingSet, "no gold-labeled messages to train on");
    }
    model.rebuild_totals();
    return model;
}

std::pair<double, double> nb_posteriors(const NbModel& model,
                                        std::span<const std::string> tokens) {
    const int64_t docs = model.adult_doc_count + model.child_doc_count;
    // Empty classes pin the posterior: the prior is zero.
    if (model.adult_doc_count == 0) return {0.0, 1.0};
    if (model.child_doc_count == 0) return {1.0, 0.0};

    const double vocab = static_cast<double>(model.vocabulary.size());
    const double adult_denom =
        static_cast<double>(model.adult_token_total) + model.alpha * vocab;
    const double child_denom =
        static_cast<double>(model.child_token_total) + model.alpha * vocab;

    double log_adult = std::log(static_cast<double>(model.adult_doc_count) /
                                static_cast<double>(docs));
    double log_child = std::log(static_cast<double>(model.child_doc_count) /
                                static_cast<double>(docs));
    for (const std::string& token : tokens) {
        auto it = model.vocabulary.find(token);
        if (it == model.vocabulary.end()) continue;  // out of vocabulary
        const size_t idx = static_cast<size_t>(it->second);
        log_adult += std::log(
            (static_cast<double>(model.adult_token_counts[idx]) + model.alpha) /
            adult_denom);
        log_child += std::log(
            (static_cast<double>(model.child_token_counts[idx]) + model.alpha) /
            child_denom);
    }

    // Stable normalization via the log-odds. Both probabilities share one
    // exp() so they sum to 1 to within an ulp.
    const double odds = log_adult - log_child;
    if (odds >= 0) {
        const double e = std::exp(-odds);
        return {1.0 / (1.0 + e), e / (1.0 + e)};
    }
    const double e = std::exp(odds);
    return {e / (1.0 + e), 1.0 / (1.0 + e)};
}

MessageScore score_nb(const NbModel& model, const Message& msg) {
    const std::vector<std::string> tokens = tokenize(msg.text);
    auto [p_adult, p_child] = nb_posteriors(model, tokens);
    (void)p_child;
    return MessageScore{p_adult, "nb"};
}

} // namespace chatctx
