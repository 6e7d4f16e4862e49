#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chatctx/score.hpp"
#include "chatctx/transcript.hpp"

namespace chatctx {

// Multinomial naive Bayes over bag-of-words token counts with Laplace
// smoothing. The two classes are Adult and Child; priors come from message
// counts.
struct NbModel {
    std::unordered_map<std::string, int32_t> vocabulary;  // token -> index
    std::vector<int64_t> adult_token_counts;
    std::vector<int64_t> child_token_counts;
    int64_t adult_doc_count = 0;
    int64_t child_doc_count = 0;
    double alpha = 1.0;

    // Derived totals, rebuilt on train/load.
    int64_t adult_token_total = 0;
    int64_t child_token_total = 0;

    void rebuild_totals();
};

// Trains on every message with a gold role of Adult or Child. alpha must be
// positive; a corpus with no labeled messages is rejected.
NbModel train_nb(const std::vector<Transcript>& corpus, double alpha = 1.0);

// (P(Adult|tokens), P(Child|tokens)), computed in log space. Tokens outside
// the training vocabulary are skipped, so an all-unseen message scores the
// class prior ratio.
std::pair<double, double> nb_posteriors(const NbModel& model,
                                        std::span<const std::string> tokens);

MessageScore score_nb(const NbModel& model, const Message& msg);

} // namespace chatctx
