#include "chatmine/synth.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "chatmine/csv.hpp"
#include "chatmine/digest.hpp"
#include "chatmine/error.hpp"
#include "chatmine/parallel.hpp"
#include "chatmine/rng.hpp"
#include "chatmine/sentiment.hpp"

namespace chatmine {

namespace {

// --- generator tuning (not part of SynthConfig) -----------------------------

constexpr double kCustomerEmitProb = 0.55;  // chance a customer utterance carries a valence word
constexpr double kAgentEmitProb = 0.35;
constexpr double kSignSlope = 0.75;         // p(positive) = 0.5 + slope * effective bias
constexpr double kBoosterPrefixProb = 0.18;
constexpr double kNegatedFormProb = 0.10;   // express sign as negated opposite ("not good")
constexpr double kRepeatSpeakerProb = 0.28; // double-texting
constexpr double kRitualProbSatisfied = 0.80; // survey-ritual closing in FALSE sessions
constexpr double kRitualProbDissatisfied = 0.29;
constexpr int kMinUtterances = 2;

// Interpolation weight toward the satisfied anchor, per rating 1..5.
constexpr double kRatingWeight[5] = {0.0, 0.15, 0.55, 0.80, 1.0};

const TimeMs kEpoch2014 = 1388534400000LL; // 2014-01-01T00:00:00Z

// --- phrase material ---------------------------------------------------------

const std::vector<std::string> kProducts = {
    "smartphone", "tablet", "laptop", "smartwatch", "headphones", "router",
};

const std::vector<std::string> kDeviceParts = {
    "screen", "battery", "charger", "speaker", "camera",
    "display", "power key", "volume key", "cable", "touchpad",
};

// predicate-adjective banks; every word must exist in the shipped lexicon
const std::vector<std::string> kCustomerPos = {
    "great", "perfect", "awesome", "excellent", "wonderful", "amazing", "helpful",
    "fantastic", "good", "nice", "brilliant", "superb", "lovely", "terrific",
};
const std::vector<std::string> kCustomerNeg = {
    "terrible", "awful", "horrible", "frustrating", "annoying", "ridiculous", "useless",
    "unacceptable", "disappointing", "bad", "pathetic", "dreadful", "lousy", "miserable",
};
const std::vector<std::string> kBoosterWords = {
    "very", "really", "so", "extremely", "absolutely", "totally",
};

// Agent lines are fully written with at most one valence word each; customer
// templates carry a {S} slot filled from the word banks. Templates avoid
// off-sign lexicon words so the injected signal is not diluted.
const std::vector<std::string> kAgentGreeting = {
    "hi thanks for contacting the technical team how can we get you going today",
    "hello you have reached product support what can i do for you today",
    "hi there what seems to be the trouble today",
    "hello which device are we looking at today",
};

const std::vector<std::string> kCustomerProblemNeutral = {
    "my {P} stopped charging yesterday",
    "i cannot sign into my account on the {P}",
    "the {D} on my {P} keeps freezing",
    "after the last update my messages stopped syncing",
    "my {P} restarts itself every few minutes",
    "the {D} is not responding when i tap it",
    "i dropped my {P} and now the {D} flickers",
    "the battery drains within an hour",
    "my {P} will not connect to wifi anymore",
    "hi i have a question about my {P}",
};
const std::vector<std::string> kCustomerProblemPos = {
    "the {P} was {S} until yesterday and now it will not start",
    "i am usually {S} with this {P} but something changed after the update",
    "everything was {S} before the {D} started acting up",
};
const std::vector<std::string> kCustomerProblemNeg = {
    "i purchased this {P} and then i noticed a {S} scuff on the {D}",
    "there is a {S} crack across the {D}",
    "the {P} has been {S} since the last update",
    "this {S} problem with the {D} keeps coming back",
    "the {D} looks {S} after the drop",
};

const std::vector<std::string> kCustomerQaNeutral = {
    "ok let me try that",
    "i restarted the {P} like you said",
    "it is still doing the same thing",
    "the {D} shows an error code now",
    "hold on a second",
    "yes i already tried that",
    "how long will this take",
    "the update finished just now",
    "i see a message about the {D}",
    "should i reset the settings",
    "done what next",
    "the serial number is on the back right",
};
const std::vector<std::string> kCustomerQaPos = {
    "that was {S}",
    "ok this is looking {S} now",
    "the {D} seems {S} again",
    "you have been {S} so far",
    "that explanation was {S}",
};
const std::vector<std::string> kCustomerQaNeg = {
    "this is {S}",
    "the {D} is still {S}",
    "honestly this has been {S}",
    "i have tried that already and it is {S}",
    "the same {S} error keeps showing",
};

const std::vector<std::string> kAgentQaNeutral = {
    "could you tell me the model number of your {P}",
    "please hold while i check that for you",
    "can you open the settings menu and select about",
    "please press and hold the power key for ten seconds",
    "i am looking into your account now",
    "does it happen again after a restart",
    "please make sure the latest update is installed",
    "you can clear the cache from the storage menu",
    "let me walk you through the next step",
    "one moment while i pull up the diagnostic",
    "could you confirm the email on the account",
},
kAgentQaPos = {
    "i would be glad to look into that for you",
    "good news the warranty still covers this",
    "that is great let us continue",
    "perfect that is exactly what i needed",
    "excellent the diagnostic just came back clean",
    "i am happy to walk you through it",
    "wonderful the update went through on our side",
},
kAgentQaNeg = {
    "i am sorry to hear that",
    "i am sorry you are running into this",
    "unfortunately this model cannot do that",
    "i apologize for the inconvenience",
    "i understand the trouble this has caused",
    "we are unable to change that from here",
    "i regret the delay on our side",
};

const std::vector<std::string> kCustomerClosingNeutral = {
    "ok bye",
    "alright bye",
    "got it bye",
    "ok then",
    "that is all i needed",
},
kCustomerClosingPos = {
    "the service today was {S}",
    "that was {S}",
    "this chat was {S}",
    "you did a {S} job today",
},
kCustomerClosingNeg = {
    "this was {S} service",
    "what a {S} waste of time",
    "this chat has been {S}",
    "the responses i got today were {S}",
};

const std::vector<std::string> kAgentClosingNeutral = {
    "is there anything else i can do for you today",
    "i will end this session now",
    "we are here any time if it comes back",
    "feel free to reach out again",
    "goodbye",
},
kAgentClosingPos = {
    "i am glad we could resolve this today",
    "it was a pleasure working with you",
    "have a great rest of your day",
    "happy to be of service today",
},
kAgentClosingNeg = {
    "i am sorry we could not do more today",
    "unfortunately that is everything available to us",
    "i apologize again for the inconvenience",
    "i regret that this could not be settled today",
};

// Emitted in order by the last agent utterances of satisfied closings; the
// discriminative stage-4 vocabulary lives here.
const std::vector<std::string> kRitualLines = {
    "it was a pleasure assisting you today",
    "please click the blue button to receive a transcript of your chat",
    "before you go please fill out a brief survey about your experience",
    "you may close this chat window have a great day",
};

const std::vector<std::string> kReasonBank = {
    "issue was not resolved",
    "waited too long for responses",
    "agent did not understand the problem",
    "chat disconnected before we finished",
    "was told to visit a service center instead",
};

// --- helpers -----------------------------------------------------------------

const std::string& pick(const std::vector<std::string>& pool, Rng& rng) {
    return pool[static_cast<std::size_t>(rng.below(pool.size()))];
}

std::string fill_slots(const std::string& tmpl, const std::string& sent,
                       const std::string& product, const std::string& part) {
    std::string out;
    out.reserve(tmpl.size() + 16);
    for (std::size_t i = 0; i < tmpl.size();) {
        if (tmpl[i] == '{' && i + 2 < tmpl.size() && tmpl[i + 2] == '}') {
            switch (tmpl[i + 1]) {
            case 'S': out += sent; i += 3; continue;
            case 'P': out += product; i += 3; continue;
            case 'D': out += part; i += 3; continue;
            default: break;
            }
        }
        out += tmpl[i++];
    }
    return out;
}

// CDF of the negative binomial (failures before r successes) at k.
double negbin_cdf(int k, int r, double p) {
    // r = 2: pmf(j) = (j + 1) p^2 q^j
    (void)r;
    const double q = 1.0 - p;
    double cdf = 0.0;
    double qj = 1.0;
    for (int j = 0; j <= k; ++j) {
        cdf += (j + 1) * p * p * qj;
        qj *= q;
    }
    return cdf;
}

// Success probability p such that the clipped count distribution has its 75th
// percentile at target. The CDF at the target sits just above 0.75 so the
// nearest-rank percentile does not straddle the boundary.
double calibrate_negbin_p(int target_p75) {
    const int k = target_p75 - kMinUtterances; // failures allowed at the percentile
    double lo = 1e-6, hi = 1.0 - 1e-6;
    for (int iter = 0; iter < 100; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (negbin_cdf(k, 2, mid) < 0.755) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

struct SessionPlan {
    Rating latent_rating = Rating::Average;
    bool surveyed = false;
    bool dissatisfied = false; // latent label driving text bias
};

double trajectory_bias(const SynthConfig& cfg, Rating rating, Speaker sp, std::size_t step) {
    const double w = kRatingWeight[static_cast<int>(rating) - 1];
    const auto& sat = sp == Speaker::Customer ? cfg.trajectory.satisfied_customer
                                              : cfg.trajectory.satisfied_agent;
    const auto& dis = sp == Speaker::Customer ? cfg.trajectory.dissatisfied_customer
                                              : cfg.trajectory.dissatisfied_agent;
    const double anchor = w * sat[step] + (1.0 - w) * dis[step];
    return cfg.label_signal_strength * anchor;
}

std::string sentiment_phrase(bool positive, Rng& rng) {
    if (rng.bernoulli(kNegatedFormProb)) {
        // opposite-sign word under negation reads as the intended sign
        return "not " + pick(positive ? kCustomerNeg : kCustomerPos, rng);
    }
    std::string word = pick(positive ? kCustomerPos : kCustomerNeg, rng);
    if (rng.bernoulli(kBoosterPrefixProb)) return pick(kBoosterWords, rng) + " " + word;
    return word;
}

enum class Kind { Greeting, Problem, Qa, Closing };

std::string make_text(const SynthConfig& cfg, const SessionPlan& plan, Speaker sp, Kind kind,
                      std::size_t step, const std::string& product, Rng& rng) {
    if (kind == Kind::Greeting) return pick(kAgentGreeting, rng);

    const std::vector<std::string>* neutral = nullptr;
    const std::vector<std::string>* positive = nullptr;
    const std::vector<std::string>* negative = nullptr;
    if (sp == Speaker::Customer) {
        switch (kind) {
        case Kind::Problem:
            neutral = &kCustomerProblemNeutral; positive = &kCustomerProblemPos;
            negative = &kCustomerProblemNeg; break;
        case Kind::Closing:
            neutral = &kCustomerClosingNeutral; positive = &kCustomerClosingPos;
            negative = &kCustomerClosingNeg; break;
        default:
            neutral = &kCustomerQaNeutral; positive = &kCustomerQaPos;
            negative = &kCustomerQaNeg; break;
        }
    } else {
        switch (kind) {
        case Kind::Closing:
            neutral = &kAgentClosingNeutral; positive = &kAgentClosingPos;
            negative = &kAgentClosingNeg; break;
        default:
            neutral = &kAgentQaNeutral; positive = &kAgentQaPos;
            negative = &kAgentQaNeg; break;
        }
    }

    const double emit_prob = sp == Speaker::Customer ? kCustomerEmitProb : kAgentEmitProb;
    const std::string& part = pick(kDeviceParts, rng);
    if (!rng.bernoulli(emit_prob))
        return fill_slots(pick(*neutral, rng), "", product, part);

    const double bias = trajectory_bias(cfg, plan.latent_rating, sp, step);
    const double p_pos = std::clamp(0.5 + kSignSlope * bias, 0.05, 0.95);
    const bool is_positive = rng.bernoulli(p_pos);
    if (sp == Speaker::Agent)
        return pick(is_positive ? *positive : *negative, rng);
    const std::string phrase = sentiment_phrase(is_positive, rng);
    return fill_slots(pick(is_positive ? *positive : *negative, rng), phrase, product, part);
}

Session generate_session(const SynthConfig& cfg, std::size_t index, double negbin_p) {
    Rng rng(Rng::mix(cfg.seed, index));
    Session s;

    {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "s%07zu", index);
        s.session_id = buf;
        std::snprintf(buf, sizeof(buf), "a%03d", static_cast<int>(rng.below(40)) + 1);
        s.agent_id = buf;
        std::snprintf(buf, sizeof(buf), "c%07zu", index);
        s.customer_id = buf;
    }
    s.product_type = pick(kProducts, rng);

    // latent experience drives both the survey answer and the text bias
    SessionPlan plan;
    {
        const double u = rng.uniform01();
        double acc = 0.0;
        int rating = 5;
        for (int i = 0; i < 5; ++i) {
            acc += cfg.rating_distribution[static_cast<std::size_t>(i)];
            if (u < acc) { rating = i + 1; break; }
        }
        plan.latent_rating = static_cast<Rating>(rating);
        plan.dissatisfied = rating <= 2;
        plan.surveyed = rng.bernoulli(cfg.survey_response_rate);
    }
    if (plan.surveyed) {
        SurveyResult sv;
        sv.overall_satisfaction = plan.latent_rating;
        if (rng.bernoulli(0.8)) sv.prefer_chat = rng.bernoulli(0.7);
        if (rng.bernoulli(0.7)) {
            int k = static_cast<int>(plan.latent_rating) +
                    static_cast<int>(std::lround(0.8 * rng.normal()));
            sv.knowledge_rating = static_cast<Rating>(std::clamp(k, 1, 5));
        }
        if (plan.dissatisfied) sv.dissatisfaction_reason = pick(kReasonBank, rng);
        s.survey = std::move(sv);
    }

    // timezone and start time; 24/7 service, uniform over a year
    {
        const double u = rng.uniform01();
        s.timezone_offset_minutes = u < 0.45 ? -300 : u < 0.70 ? -360 : u < 0.80 ? -420 : -480;
        s.start_time = kEpoch2014 +
                       static_cast<TimeMs>(rng.uniform01() * 365.0 * 86400.0) * 1000LL;
    }

    {
        const double u = rng.uniform01();
        s.disconnected_by = u < 0.45   ? Disconnector::Customer
                            : u < 0.80 ? Disconnector::Agent
                            : u < 0.95 ? Disconnector::System
                                       : Disconnector::Unknown;
    }

    const double sigma = std::sqrt(2.0 * std::log(cfg.duration_mean_min / cfg.duration_median_min));
    const double duration_min = rng.lognormal(std::log(cfg.duration_median_min), sigma);
    const TimeMs duration_ms = std::max<TimeMs>(1000, static_cast<TimeMs>(duration_min * 60000.0));
    s.end_time = s.start_time + duration_ms;

    const std::size_t max_m = static_cast<std::size_t>(cfg.utterance_count_p75) * 10;
    std::size_t m = kMinUtterances + static_cast<std::size_t>(rng.negative_binomial(2, negbin_p));
    m = std::min(m, max_m);

    // speakers: agent greets, customer states the problem, then alternate with
    // occasional double-texting
    std::vector<Speaker> speakers(m);
    speakers[0] = Speaker::Agent;
    if (m > 1) speakers[1] = Speaker::Customer;
    for (std::size_t i = 2; i < m; ++i) {
        if (rng.bernoulli(kRepeatSpeakerProb)) speakers[i] = speakers[i - 1];
        else
            speakers[i] =
                speakers[i - 1] == Speaker::Agent ? Speaker::Customer : Speaker::Agent;
    }

    std::vector<TimeMs> offsets(m, 0);
    for (std::size_t i = 1; i < m; ++i)
        offsets[i] = static_cast<TimeMs>(rng.uniform01() * static_cast<double>(duration_ms));
    std::sort(offsets.begin() + 1, offsets.end());

    const auto stages = segment_stages(m);
    auto stage_of = [&stages](std::size_t i) {
        for (std::size_t k = 0; k < 4; ++k)
            if (stages[k].contains(i)) return k;
        return std::size_t{3};
    };

    // survey-ritual closing: one decision per session, rendered by the last
    // agent utterances of stage 4
    const bool ritual = rng.bernoulli(plan.dissatisfied ? kRitualProbDissatisfied
                                                        : kRitualProbSatisfied);
    std::vector<std::size_t> ritual_slots; // utterance index -> ritual line
    if (ritual) {
        std::vector<std::size_t> agent_in_stage4;
        for (std::size_t i = stages[3].begin; i < stages[3].end; ++i)
            if (speakers[i] == Speaker::Agent) agent_in_stage4.push_back(i);
        const std::size_t lines = std::min<std::size_t>(kRitualLines.size(),
                                                        agent_in_stage4.size());
        for (std::size_t j = 0; j < lines; ++j)
            ritual_slots.push_back(agent_in_stage4[agent_in_stage4.size() - lines + j]);
    }

    s.utterances.resize(m);
    std::size_t ritual_next = 0;
    for (std::size_t i = 0; i < m; ++i) {
        Utterance& u = s.utterances[i];
        u.speaker = speakers[i];
        u.timestamp = s.start_time + offsets[i];

        if (ritual_next < ritual_slots.size() && ritual_slots[ritual_next] == i) {
            u.text = kRitualLines[ritual_next];
            ++ritual_next;
            continue;
        }

        const std::size_t step = stage_of(i);
        Kind kind = Kind::Qa;
        if (i == 0) kind = Kind::Greeting;
        else if (speakers[i] == Speaker::Customer && (i == 1 || step == 0)) kind = Kind::Problem;
        else if (step == 3) kind = Kind::Closing;
        u.text = make_text(cfg, plan, speakers[i], kind, step, s.product_type, rng);
    }
    return s;
}

} // namespace

void SynthConfig::validate() const {
    if (duration_median_min <= 0.0)
        throw ConfigError("duration_median_min must be positive");
    if (duration_mean_min < duration_median_min)
        throw ConfigError("duration_mean_min must be >= duration_median_min (log-normal)");
    if (survey_response_rate < 0.0 || survey_response_rate > 1.0)
        throw ConfigError("survey_response_rate must lie in [0, 1]");
    double sum = 0.0;
    for (double p : rating_distribution) {
        if (p < 0.0) throw ConfigError("rating_distribution entries must be non-negative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw ConfigError("rating_distribution must sum to 1 (got " + format_double(sum) + ")");
    if (utterance_count_p75 < kMinUtterances + 1)
        throw ConfigError("utterance_count_p75 must be at least " +
                          std::to_string(kMinUtterances + 1));
    if (label_signal_strength < 0.0 || label_signal_strength > 1.0)
        throw ConfigError("label_signal_strength must lie in [0, 1]");
    auto check_traj = [](const std::array<double, 4>& t, const char* name) {
        for (double v : t)
            if (!(v >= -1.0 && v <= 1.0))
                throw ConfigError(std::string(name) + " entries must lie in [-1, 1]");
    };
    check_traj(trajectory.satisfied_customer, "trajectory.satisfied.customer");
    check_traj(trajectory.satisfied_agent, "trajectory.satisfied.agent");
    check_traj(trajectory.dissatisfied_customer, "trajectory.dissatisfied.customer");
    check_traj(trajectory.dissatisfied_agent, "trajectory.dissatisfied.agent");
}

std::string SynthConfig::canonical_text() const {
    std::ostringstream out;
    auto arr4 = [](const std::array<double, 4>& a) {
        return format_double(a[0]) + " " + format_double(a[1]) + " " + format_double(a[2]) +
               " " + format_double(a[3]);
    };
    out << "n_sessions = " << n_sessions << '\n'
        << "duration_median_min = " << format_double(duration_median_min) << '\n'
        << "duration_mean_min = " << format_double(duration_mean_min) << '\n'
        << "survey_response_rate = " << format_double(survey_response_rate) << '\n'
        << "rating_distribution = " << format_double(rating_distribution[0]) << ' '
        << format_double(rating_distribution[1]) << ' ' << format_double(rating_distribution[2])
        << ' ' << format_double(rating_distribution[3]) << ' '
        << format_double(rating_distribution[4]) << '\n'
        << "utterance_count_p75 = " << utterance_count_p75 << '\n'
        << "label_signal_strength = " << format_double(label_signal_strength) << '\n'
        << "seed = " << seed << '\n'
        << "trajectory.satisfied.customer = " << arr4(trajectory.satisfied_customer) << '\n'
        << "trajectory.satisfied.agent = " << arr4(trajectory.satisfied_agent) << '\n'
        << "trajectory.dissatisfied.customer = " << arr4(trajectory.dissatisfied_customer) << '\n'
        << "trajectory.dissatisfied.agent = " << arr4(trajectory.dissatisfied_agent) << '\n';
    return out.str();
}

SynthConfig load_synth_config(std::istream& in) {
    SynthConfig cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        // trim
        std::size_t b = 0, e = line.size();
        while (b < e && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
        if (b == e) continue;
        line = line.substr(b, e - b);

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("synth config line " + std::to_string(line_no) +
                              ": expected key = value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
        std::size_t vb = 0;
        while (vb < value.size() && std::isspace(static_cast<unsigned char>(value[vb]))) ++vb;
        value = value.substr(vb);

        std::istringstream vs(value);
        auto read_double = [&](double& target) {
            if (!(vs >> target))
                throw ConfigError("synth config line " + std::to_string(line_no) +
                                  ": bad numeric value for " + key);
        };
        auto read_arr4 = [&](std::array<double, 4>& target) {
            for (double& t : target) read_double(t);
        };

        if (key == "n_sessions") {
            long long v = 0;
            if (!(vs >> v) || v < 0)
                throw ConfigError("synth config line " + std::to_string(line_no) +
                                  ": bad n_sessions");
            cfg.n_sessions = static_cast<std::size_t>(v);
        } else if (key == "duration_median_min") read_double(cfg.duration_median_min);
        else if (key == "duration_mean_min") read_double(cfg.duration_mean_min);
        else if (key == "survey_response_rate") read_double(cfg.survey_response_rate);
        else if (key == "rating_distribution") {
            for (double& p : cfg.rating_distribution) read_double(p);
        } else if (key == "utterance_count_p75") {
            if (!(vs >> cfg.utterance_count_p75))
                throw ConfigError("synth config line " + std::to_string(line_no) +
                                  ": bad utterance_count_p75");
        } else if (key == "label_signal_strength") read_double(cfg.label_signal_strength);
        else if (key == "seed") {
            if (!(vs >> cfg.seed))
                throw ConfigError("synth config line " + std::to_string(line_no) + ": bad seed");
        } else if (key == "trajectory.satisfied.customer")
            read_arr4(cfg.trajectory.satisfied_customer);
        else if (key == "trajectory.satisfied.agent") read_arr4(cfg.trajectory.satisfied_agent);
        else if (key == "trajectory.dissatisfied.customer")
            read_arr4(cfg.trajectory.dissatisfied_customer);
        else if (key == "trajectory.dissatisfied.agent")
            read_arr4(cfg.trajectory.dissatisfied_agent);
        else
            throw ConfigError("synth config line " + std::to_string(line_no) +
                              ": unknown key '" + key + "'");

        std::string trailing;
        if (vs >> trailing)
            throw ConfigError("synth config line " + std::to_string(line_no) +
                              ": unexpected trailing value '" + trailing + "'");
    }
    if (in.bad()) throw IngestError("stream read failure while loading synth config");
    cfg.validate();
    return cfg;
}

SynthConfig load_synth_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open synth config file: " + path);
    return load_synth_config(in);
}

Corpus synthesize_corpus(const SynthConfig& cfg, int threads) {
    cfg.validate();
    Corpus corpus;
    corpus.provenance.kind = Provenance::Kind::Synthetic;
    corpus.provenance.seed = cfg.seed;
    corpus.provenance.config_hash = digest_string(fnv1a64(cfg.canonical_text()));
    if (cfg.n_sessions == 0) return corpus;

    const double negbin_p = calibrate_negbin_p(cfg.utterance_count_p75);
    corpus.sessions.resize(cfg.n_sessions);
    parallel_for(cfg.n_sessions, threads, [&](std::size_t i) {
        corpus.sessions[i] = generate_session(cfg, i, negbin_p);
    });
    return corpus;
}

} // namespace chatmine
