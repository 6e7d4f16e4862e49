#include "chatctx/linear.hpp"

#include <algorithm>
#include <cmath>

#include "chatctx/error.hpp"
#include "chatctx/rng.hpp"

namespace chatctx {

namespace {

struct Sample {
    std::vector<std::pair<int32_t, double>> features;  // (index, count)
    double y = 1.0;                                    // +1 Adult, -1 Child
};

double sigmoid(double x) {
    if (x >= 0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

} // namespace

const char* to_string(LinearKind kind) {
    return kind == LinearKind::Hinge ? "hinge" : "logistic";
}

LinearModel train_linear(const std::vector<Transcript>& corpus, LinearKind kind,
                         const SgdOptions& options) {
    if (options.epochs < 1) {
        fail(ErrorCode::InvalidArgument, "epochs must be >= 1");
    }
    if (!(options.learning_rate > 0.0)) {
        fail(ErrorCode::InvalidArgument, "learning rate must be > 0");
    }

    LinearModel model;
    model.kind = kind;

    std::vector<Sample> samples;
    std::unordered_map<int32_t, double> counts;
    for (const Transcript& t : corpus) {
        for (const Message& m : t.messages) {
            if (m.gold_role == GoldRole::Unknown) continue;
            counts.clear();
            for (const std::string& token : tokenize(m.text)) {
                auto [it, inserted] = model.vocabulary.try_emplace(
                    token, static_cast<int32_t>(model.vocabulary.size()));
                counts[it->second] += 1.0;
            }
            Sample s;
            s.y = m.gold_role == GoldRole::Adult ? 1.0 : -1.0;
            s.features.assign(counts.begin(), counts.end());
            // Fixed feature order keeps float accumulation reproducible.
            std::sort(s.features.begin(), s.features.end());
            samples.push_back(std::move(s));
        }
    }
    if (samples.empty()) {
        fail(ErrorCode::EmptyTrainingSet, "no gold-labeled messages to train on");
    }
    model.weights.assign(model.vocabulary.size(), 0.0);

    std::vector<size_t> order(samples.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 engine(options.seed);

    for (int epoch = 0; epoch < options.epochs; ++epoch) {
        seeded_shuffle(order, engine);
        for (size_t idx : order) {
            const Sample& s = samples[idx];
            double decision = model.bias;
            for (const auto& [feature, count] : s.features) {
                decision += model.weights[static_cast<size_t>(feature)] * count;
            }
            if (kind == LinearKind::Hinge) {
                if (s.y * decision < 1.0) {
                    for (const auto& [feature, count] : s.features) {
                        model.weights[static_cast<size_t>(feature)] +=
                            options.learning_rate * s.y * count;
                    }
                    model.bias += options.learning_rate * s.y;
                }
            } else {
                const double target = s.y > 0 ? 1.0 : 0.0;
                const double grad = sigmoid(decision) - target;
                for (const auto& [feature, count] : s.features) {
                    model.weights[static_cast<size_t>(feature)] -=
                        options.learning_rate * grad * count;
                }
                model.bias -= options.learning_rate * grad;
            }
        }
    }
    return model;
}

double linear_decision(const LinearModel& model, std::span<const std::string> tokens) {
    double decision = model.bias;
    for (const std::string& token : tokens) {
        auto it = model.vocabulary.find(token);
        if (it == model.vocabulary.end()) continue;
        decision += model.weights[static_cast<size_t>(it->second)];
    }
    return decision;
}

MessageScore score_linear(const LinearModel& model, const Message& msg) {
    const std::vector<std::string> tokens = tokenize(msg.text);
    const double decision = linear_decision(model, tokens);
    if (model.kind == LinearKind::Hinge) {
        return MessageScore{decision >= 0.0 ? 1.0 : 0.0, "hinge"};
    }
    return MessageScore{sigmoid(decision), "logistic"};
}

} // namespace chatctx
