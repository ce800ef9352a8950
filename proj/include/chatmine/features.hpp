#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

#include "chatmine/corpus.hpp"
#include "chatmine/lexicon.hpp"
#include "chatmine/models.hpp"
#include "chatmine/sentiment.hpp"

namespace chatmine {

inline constexpr std::size_t kNumFeatures = 14;
inline constexpr std::size_t kNumMetaFeatures = 6; // the non-sentiment block

// Identifies the predictor layout (6 meta + 2x4 sentiment cells) in result
// files so alternate sets can be benchmarked against it.
inline constexpr const char* kFeatureSetVersion = "meta6-sent8/v1";

// The 14 per-session predictors: 6 session-level meta signals plus the
// per-(speaker, step) sentiment grid.
struct FeatureVector {
    double utterance_count = 0.0;
    double duration_minutes = 0.0;
    double customer_utterance_fraction = 0.0;
    double mean_agent_response_latency_sec = 0.0;
    double hour_of_day = 0.0; // customer-local, 0..23
    double disconnected_by_customer = 0.0;
    std::array<double, 4> customer_sent_step{};
    std::array<double, 4> agent_sent_step{};
    std::optional<bool> label_dissatisfied; // absent for unsurveyed sessions

    std::array<double, kNumFeatures> predictors() const;
};

const std::array<std::string, kNumFeatures>& feature_names();

// TRUE iff overall satisfaction is Dissatisfied or VeryDissatisfied.
// Callers must not invoke this for unsurveyed sessions; they are unlabeled,
// not FALSE.
bool label_dissatisfaction(const SurveyResult& sv);

// Meta features read only timing/speaker structure; text reaches the vector
// solely through the supplied StageSentiment.
FeatureVector extract_features(const Session& s, const StageSentiment& ss);

enum class FeatureSelection { All, MetaOnly };

// Labeled sessions only, in corpus order.
Dataset build_dataset(const Corpus& c, const SentimentLexicon& lex,
                      FeatureSelection sel = FeatureSelection::All, int threads = 1,
                      StageMethod method = StageMethod::Index);

// All sessions, in corpus order: header row with the 14 predictor names plus
// "label" ("", "true" or "false").
void write_feature_matrix_csv(const Corpus& c, const SentimentLexicon& lex, std::ostream& out,
                              int threads = 1, StageMethod method = StageMethod::Index);

} // namespace chatmine
