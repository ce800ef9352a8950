#include "chatmine/features.hpp"

#include <ostream>

#include "chatmine/csv.hpp"
#include "chatmine/parallel.hpp"

namespace chatmine {

std::array<double, kNumFeatures> FeatureVector::predictors() const {
    return {
        utterance_count,
        duration_minutes,
        customer_utterance_fraction,
        mean_agent_response_latency_sec,
        hour_of_day,
        disconnected_by_customer,
        customer_sent_step[0],
        customer_sent_step[1],
        customer_sent_step[2],
        customer_sent_step[3],
        agent_sent_step[0],
        agent_sent_step[1],
        agent_sent_step[2],
        agent_sent_step[3],
    };
}

const std::array<std::string, kNumFeatures>& feature_names() {
    static const std::array<std::string, kNumFeatures> kNames = {
        "utterance_count",
        "duration_minutes",
        "customer_utterance_fraction",
        "mean_agent_response_latency_sec",
        "hour_of_day",
        "disconnected_by_customer",
        "customer_sent_step1",
        "customer_sent_step2",
        "customer_sent_step3",
        "customer_sent_step4",
        "agent_sent_step1",
        "agent_sent_step2",
        "agent_sent_step3",
        "agent_sent_step4",
    };
    return kNames;
}

bool label_dissatisfaction(const SurveyResult& sv) {
    return sv.overall_satisfaction == Rating::VeryDissatisfied ||
           sv.overall_satisfaction == Rating::Dissatisfied;
}

FeatureVector extract_features(const Session& s, const StageSentiment& ss) {
    FeatureVector fv;
    fv.utterance_count = static_cast<double>(s.utterances.size());
    fv.duration_minutes = s.duration_minutes();

    std::size_t customer_count = 0;
    for (const Utterance& u : s.utterances)
        if (u.speaker == Speaker::Customer) ++customer_count;
    fv.customer_utterance_fraction =
        s.utterances.empty()
            ? 0.0
            : static_cast<double>(customer_count) / static_cast<double>(s.utterances.size());

    // mean gap over agent utterances directly following a customer utterance
    double latency_sum = 0.0;
    std::size_t latency_n = 0;
    for (std::size_t i = 1; i < s.utterances.size(); ++i) {
        if (s.utterances[i].speaker == Speaker::Agent &&
            s.utterances[i - 1].speaker == Speaker::Customer) {
            latency_sum += static_cast<double>(s.utterances[i].timestamp -
                                               s.utterances[i - 1].timestamp) /
                           1000.0;
            ++latency_n;
        }
    }
    fv.mean_agent_response_latency_sec =
        latency_n ? latency_sum / static_cast<double>(latency_n) : 0.0;

    // customer-local hour of day
    {
        TimeMs local = s.start_time + static_cast<TimeMs>(s.timezone_offset_minutes) * 60000;
        TimeMs hours = local / 3600000;
        if (local % 3600000 < 0) hours -= 1;
        TimeMs hod = hours % 24;
        if (hod < 0) hod += 24;
        fv.hour_of_day = static_cast<double>(hod);
    }

    fv.disconnected_by_customer = s.disconnected_by == Disconnector::Customer ? 1.0 : 0.0;
    fv.customer_sent_step = ss.customer_by_step;
    fv.agent_sent_step = ss.agent_by_step;
    if (s.survey) fv.label_dissatisfied = label_dissatisfaction(*s.survey);
    return fv;
}

Dataset build_dataset(const Corpus& c, const SentimentLexicon& lex, FeatureSelection sel,
                      int threads, StageMethod method) {
    std::vector<FeatureVector> all(c.sessions.size());
    parallel_for(c.sessions.size(), threads, [&](std::size_t i) {
        all[i] = extract_features(c.sessions[i], stage_sentiment(c.sessions[i], lex, method));
    });

    Dataset ds;
    ds.d = sel == FeatureSelection::MetaOnly ? kNumMetaFeatures : kNumFeatures;
    const auto& names = feature_names();
    ds.feature_names.assign(names.begin(), names.begin() + static_cast<long>(ds.d));

    for (const FeatureVector& fv : all) {
        if (!fv.label_dissatisfied) continue;
        const auto row = fv.predictors();
        ds.x.insert(ds.x.end(), row.begin(), row.begin() + static_cast<long>(ds.d));
        ds.y.push_back(*fv.label_dissatisfied ? 1 : 0);
    }
    ds.n = ds.y.size();
    return ds;
}

void write_feature_matrix_csv(const Corpus& c, const SentimentLexicon& lex, std::ostream& out,
                              int threads, StageMethod method) {
    std::vector<FeatureVector> all(c.sessions.size());
    parallel_for(c.sessions.size(), threads, [&](std::size_t i) {
        all[i] = extract_features(c.sessions[i], stage_sentiment(c.sessions[i], lex, method));
    });

    const auto& names = feature_names();
    for (std::size_t j = 0; j < names.size(); ++j) out << names[j] << ',';
    out << "label\n";
    for (const FeatureVector& fv : all) {
        for (double v : fv.predictors()) out << format_double(v) << ',';
        if (fv.label_dissatisfied) out << (*fv.label_dissatisfied ? "true" : "false");
        out << '\n';
    }
}

} // namespace chatmine
