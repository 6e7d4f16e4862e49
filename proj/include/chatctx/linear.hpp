#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "chatctx/score.hpp"
#include "chatctx/transcript.hpp"

namespace chatctx {

enum class LinearKind : uint8_t { Hinge, Logistic };

const char* to_string(LinearKind kind);

// Linear classifier over bag-of-words token counts. Hinge emits hard 0/1
// scores; Logistic emits calibrated scores in (0, 1).
struct LinearModel {
    std::unordered_map<std::string, int32_t> vocabulary;  // token -> index
    std::vector<double> weights;                          // by vocabulary index
    double bias = 0.0;
    LinearKind kind = LinearKind::Hinge;
};

struct SgdOptions {
    int epochs = 10;
    double learning_rate = 0.1;
    uint64_t seed = 0;
};

// Stochastic subgradient training; Adult is the positive class. The sample
// order is reshuffled each epoch from the seed, so identical options give
// identical weights.
LinearModel train_linear(const std::vector<Transcript>& corpus, LinearKind kind,
                         const SgdOptions& options);

double linear_decision(const LinearModel& model, std::span<const std::string> tokens);

MessageScore score_linear(const LinearModel& model, const Message& msg);

} // namespace chatctx
