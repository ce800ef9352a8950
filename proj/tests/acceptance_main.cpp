// Acceptance suite: runs every shipping criterion end to end and prints one
// pass/fail line each. Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chatmine/corpus_io.hpp"
#include "chatmine/error.hpp"
#include "chatmine/features.hpp"
#include "chatmine/lexicon.hpp"
#include "chatmine/manifest.hpp"
#include "chatmine/models.hpp"
#include "chatmine/rng.hpp"
#include "chatmine/sentiment.hpp"
#include "chatmine/synth.hpp"
#include "chatmine/textstats.hpp"

#ifndef CHATMINE_DATA_DIR
#define CHATMINE_DATA_DIR "data"
#endif
#ifndef CHATMINE_CLI_PATH
#define CHATMINE_CLI_PATH "chatmine"
#endif

namespace fs = std::filesystem;
using namespace chatmine;

namespace {

struct Failure : std::runtime_error {
    explicit Failure(const std::string& msg) : std::runtime_error(msg) {}
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::string fmt(double v) {
    std::ostringstream o;
    o.precision(6);
    o << v;
    return o.str();
}

struct Context {
    fs::path dir;          // scratch space
    fs::path corpus25k;    // written by C3, reused by C4/C5
    fs::path log;
};

int run_cli(const std::vector<std::string>& args, const fs::path& log) {
    std::string cmd = std::string(CHATMINE_CLI_PATH);
    for (const std::string& a : args) cmd += " '" + a + "'";
    cmd += " >>" + log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Failure("cannot read " + p.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(slurp(p));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        rows.push_back(std::move(fields));
    }
    return rows;
}

std::map<std::string, std::string> read_kv_csv(const fs::path& p) {
    std::map<std::string, std::string> kv;
    for (const auto& row : read_csv(p))
        if (row.size() == 2) kv[row[0]] = row[1];
    return kv;
}

const SentimentLexicon& shipped_lexicon() {
    static const SentimentLexicon lex =
        load_lexicon_file(std::string(CHATMINE_DATA_DIR) + "/lexicon/chatmine-v1.tsv");
    return lex;
}

// --- criteria ----------------------------------------------------------------

// C1: majority accuracy on the published 4,649 / 20,175 label split.
void c1_majority_arithmetic(Context&) {
    std::vector<std::uint8_t> y;
    y.insert(y.end(), 4649, 1);
    y.insert(y.end(), 20175, 0);
    MajorityModel m = train_majority(y);
    require(!m.predicts_true, "majority model must predict FALSE");
    std::vector<std::uint8_t> preds(y.size(), 0);
    Metrics metrics = evaluate(preds, y);
    require(std::abs(metrics.accuracy - 0.81272) <= 0.0001,
            "majority accuracy " + fmt(metrics.accuracy) + " not within 1e-4 of 0.81272");
    require(metrics.f1 == 0.0, "TRUE-class F1 must be exactly 0");
}

// C2: sign fidelity on the two quoted utterances under the shipped lexicon.
void c2_sentiment_signs(Context&) {
    const auto& lex = shipped_lexicon();
    const double neg = score_utterance(
        "I purchased phone and then I noticed a terrible scuff on my screen.", lex).valence;
    const double pos = score_utterance(
        "It was a pleasure assisting you, thank you for contacting Samsung Technical Support.",
        lex).valence;
    require(neg < 0.0, "scuff utterance scored " + fmt(neg) + ", expected < 0");
    require(pos > 0.0, "pleasure utterance scored " + fmt(pos) + ", expected > 0");
}

// C3: synth with paper defaults reproduces the published corpus statistics.
void c3_synth_calibration(Context& ctx) {
    ctx.corpus25k = ctx.dir / "corpus25k.jsonl";
    const std::string cfg = std::string(CHATMINE_DATA_DIR) + "/paper-defaults.cfg";
    require(run_cli({"--threads", "2", "--config", cfg, "synth", "--out",
                     ctx.corpus25k.string()},
                    ctx.log) == 0,
            "synth command failed");
    const fs::path stats_csv = ctx.dir / "stats25k.csv";
    require(run_cli({"stats", "--corpus", ctx.corpus25k.string(), "--out",
                     stats_csv.string()},
                    ctx.log) == 0,
            "stats command failed");

    auto kv = read_kv_csv(stats_csv);
    const double median = std::stod(kv.at("duration_median_min"));
    const double mean = std::stod(kv.at("duration_mean_min"));
    const double rate = std::stod(kv.at("survey_response_rate"));
    const double vd = std::stod(kv.at("rating_very_dissatisfied"));
    const double d = std::stod(kv.at("rating_dissatisfied"));
    const double a = std::stod(kv.at("rating_average"));
    const double s = std::stod(kv.at("rating_satisfied"));
    const double vs = std::stod(kv.at("rating_very_satisfied"));
    const double surveyed = vd + d + a + s + vs;

    require(std::stod(kv.at("n_sessions")) == 25000.0, "expected 25000 sessions");
    require(std::abs(median - 14.2) <= 1.0, "median " + fmt(median) + " outside 14.2 +/- 1.0");
    require(std::abs(mean - 17.5) <= 1.0, "mean " + fmt(mean) + " outside 17.5 +/- 1.0");
    require(std::abs(rate - 0.16) <= 0.02, "survey rate " + fmt(rate) + " outside 0.16 +/- 0.02");
    require(std::abs(vs / surveyed - 0.45) <= 0.02,
            "VerySatisfied fraction " + fmt(vs / surveyed) + " outside 0.45 +/- 0.02");
    require(std::abs(vd / surveyed - 0.14) <= 0.02,
            "VeryDissatisfied fraction " + fmt(vd / surveyed) + " outside 0.14 +/- 0.02");
}

struct PooledRow {
    double accuracy = 0.0;
    double f1 = 0.0;
};

PooledRow pooled_row(const fs::path& metrics_csv) {
    for (const auto& row : read_csv(metrics_csv))
        if (row.size() >= 6 && row[1] == "pooled")
            return {std::stod(row[2]), std::stod(row[5])};
    throw Failure("no pooled row in " + metrics_csv.string());
}

// C4: full-feature forest F1 beats meta-only by >= 0.15; accuracies near baseline.
void c4_forest_vs_meta(Context& ctx) {
    require(fs::exists(ctx.corpus25k), "C3 corpus missing");
    auto train = [&](const std::string& model, const std::string& features,
                     const std::string& out) {
        std::vector<std::string> args = {"--seed",  "42",
                                         "--threads", "2",
                                         "train",  "--corpus", ctx.corpus25k.string(),
                                         "--model", model,
                                         "--cv",    "10",
                                         "--out-dir", (ctx.dir / out).string()};
        if (!features.empty()) {
            args.push_back("--features");
            args.push_back(features);
        }
        require(run_cli(args, ctx.log) == 0, "train " + model + " " + features + " failed");
        return pooled_row(ctx.dir / out / "metrics.csv");
    };

    const PooledRow all = train("forest", "", "train_all");
    const PooledRow meta = train("forest", "meta-only", "train_meta");
    const PooledRow maj = train("majority", "", "train_majority");

    require(all.f1 - meta.f1 >= 0.15, "forest F1 gap " + fmt(all.f1 - meta.f1) +
                                          " (all=" + fmt(all.f1) + ", meta=" + fmt(meta.f1) +
                                          ") below 0.15");
    require(all.accuracy >= maj.accuracy - 0.01,
            "full-feature accuracy " + fmt(all.accuracy) + " below majority " +
                fmt(maj.accuracy) + " - 0.01");
    require(meta.accuracy >= maj.accuracy - 0.01,
            "meta-only accuracy " + fmt(meta.accuracy) + " below majority " +
                fmt(maj.accuracy) + " - 0.01");
}

// C5: Figure-4 qualitative shape on the synthetic corpus.
void c5_dynamics_shape(Context& ctx) {
    require(fs::exists(ctx.corpus25k), "C3 corpus missing");
    const fs::path out = ctx.dir / "dynamics.csv";
    require(run_cli({"--threads", "2", "dynamics", "--corpus", ctx.corpus25k.string(),
                     "--out", out.string()},
                    ctx.log) == 0,
            "dynamics command failed");

    std::map<std::string, double> mean; // "group/speaker/step" -> mean
    for (const auto& row : read_csv(out)) {
        if (row.size() < 7 || row[0] == "group") continue;
        mean[row[0] + "/" + row[1] + "/" + row[2]] = std::stod(row[3]);
    }
    require(mean.size() == 16, "expected 16 dynamics cells, got " + fmt(double(mean.size())));

    require(mean.at("VD/customer/4") < mean.at("VS/customer/4"),
            "VD customer step-4 mean " + fmt(mean.at("VD/customer/4")) +
                " not below VS " + fmt(mean.at("VS/customer/4")));

    auto spread = [&](const std::string& speaker) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (int step = 1; step <= 4; ++step) {
            const double v = mean.at("VD/" + speaker + "/" + std::to_string(step));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return hi - lo;
    };
    const double customer = spread("customer");
    const double agent = spread("agent");
    require(customer > agent, "VD customer spread " + fmt(customer) +
                                  " not above agent spread " + fmt(agent));
}

// C6: a label-determining feature dominates mean-decrease-entropy importance.
void c6_importance_property(Context&) {
    Dataset ds;
    ds.n = 500;
    ds.d = 14;
    Rng rng(2718);
    for (std::size_t i = 0; i < ds.n; ++i)
        for (std::size_t j = 0; j < ds.d; ++j) ds.x.push_back(rng.uniform(-1.0, 1.0));
    for (std::size_t j = 0; j < ds.d; ++j) ds.feature_names.push_back("f" + std::to_string(j));
    const std::size_t target = 5;
    for (std::size_t i = 0; i < ds.n; ++i)
        ds.y.push_back(ds.at(i, target) > 0.0 ? 1 : 0);

    ForestConfig cfg;
    cfg.seed = 123;
    cfg.threads = 2;
    ForestModel model = train_forest(ds, cfg);
    const auto imp = feature_importance(model);
    for (std::size_t j = 0; j < imp.size(); ++j) {
        if (j == target) continue;
        require(imp[target] >= 3.0 * imp[j],
                "importance of determining feature " + fmt(imp[target]) +
                    " not 3x feature " + std::to_string(j) + " (" + fmt(imp[j]) + ")");
    }
}

// C7: chi-squared / Cramer's V against an independent formula; ranking against
// a brute-force recomputation.
void c7_statistics_oracles(Context&) {
    Rng rng(31415);
    int checked = 0;
    while (checked < 200) {
        ContingencyTable t{rng.below(60), rng.below(60), rng.below(60), rng.below(60)};
        if (t.a + t.b == 0 || t.c + t.d == 0 || t.a + t.c == 0 || t.b + t.d == 0) continue;
        ++checked;

        // textbook route: sum of (O-E)^2 / E
        const double obs[2][2] = {{double(t.a), double(t.b)}, {double(t.c), double(t.d)}};
        const double r[2] = {obs[0][0] + obs[0][1], obs[1][0] + obs[1][1]};
        const double c[2] = {obs[0][0] + obs[1][0], obs[0][1] + obs[1][1]};
        const double n = r[0] + r[1];
        double brute = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const double e = r[i] * c[j] / n;
                brute += (obs[i][j] - e) * (obs[i][j] - e) / e;
            }
        const double mine = chi_squared(t);
        require(std::abs(mine - brute) <= 1e-9 * std::max(1.0, std::abs(brute)),
                "chi2 mismatch: " + fmt(mine) + " vs " + fmt(brute));
        const double v = cramers_v(t);
        require(std::abs(v - std::sqrt(brute / n)) <= 1e-9, "cramers_v mismatch");
    }

    // ranking equals brute force on a 50-session corpus
    SynthConfig scfg;
    scfg.n_sessions = 50;
    scfg.seed = 777;
    scfg.survey_response_rate = 1.0;
    Corpus corpus = synthesize_corpus(scfg);
    NgramConfig cfg;
    cfg.speaker = SpeakerScope::Agent;
    cfg.stage = 4;
    cfg.min_session_support = 2;
    NgramRanking fast = rank_ngrams(corpus, cfg);

    std::vector<std::set<Gram>> sets;
    std::vector<bool> labels;
    std::size_t n_true = 0, n_false = 0;
    for (const Session& s : corpus.sessions) {
        if (!s.survey) continue;
        sets.push_back(session_ngrams(s, cfg));
        labels.push_back(label_dissatisfaction(*s.survey));
        (labels.back() ? n_true : n_false) += 1;
    }
    std::set<Gram> all;
    for (const auto& g : sets) all.insert(g.begin(), g.end());
    std::vector<NgramStat> brute;
    for (const Gram& g : all) {
        ContingencyTable t;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            const bool present = sets[i].count(g) > 0;
            if (present && labels[i]) ++t.a;
            else if (present) ++t.b;
            else if (labels[i]) ++t.c;
            else ++t.d;
        }
        if (t.a + t.b < cfg.min_session_support) continue;
        NgramStat st;
        st.gram = g;
        st.v = cramers_v(t);
        st.chi2 = chi_squared(t);
        st.freq_true = double(t.a) / double(n_true);
        st.freq_false = double(t.b) / double(n_false);
        st.support = t.a + t.b;
        brute.push_back(std::move(st));
    }
    std::sort(brute.begin(), brute.end(), [](const NgramStat& x, const NgramStat& y) {
        if (x.v != y.v) return x.v > y.v;
        return x.gram < y.gram;
    });
    require(fast.stats.size() == brute.size(),
            "ranking size mismatch: " + fmt(double(fast.stats.size())) + " vs " +
                fmt(double(brute.size())));
    for (std::size_t i = 0; i < brute.size(); ++i) {
        require(fast.stats[i].gram == brute[i].gram, "gram order mismatch at " +
                                                         std::to_string(i));
        require(fast.stats[i].v == brute[i].v, "v mismatch at " + std::to_string(i));
        require(fast.stats[i].chi2 == brute[i].chi2, "chi2 mismatch at " + std::to_string(i));
        require(fast.stats[i].freq_true == brute[i].freq_true, "freq_true mismatch");
        require(fast.stats[i].freq_false == brute[i].freq_false, "freq_false mismatch");
    }
}

// C8: logistic gradient vs central finite differences; fold partitions.
void c8_numerical_suite(Context&) {
    Rng rng(161803);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 5 + rng.below(40);
        const std::size_t d = 14;
        std::vector<double> x(n * d);
        for (double& v : x) v = rng.uniform(-2.0, 2.0);
        std::vector<std::uint8_t> y(n);
        for (auto& v : y) v = rng.bernoulli(0.5) ? 1 : 0;
        std::vector<double> w(d);
        for (double& v : w) v = rng.uniform(-1.0, 1.0);
        const double bias = rng.uniform(-1.0, 1.0);
        const double l2 = 1e-3;

        std::vector<double> grad(d);
        double grad_b = 0.0;
        logistic_gradient(x, y, n, d, w, bias, l2, grad, grad_b);
        const double h = 1e-6;
        for (std::size_t j = 0; j < d; ++j) {
            auto wp = w, wm = w;
            wp[j] += h;
            wm[j] -= h;
            const double fd =
                (logistic_loss(x, y, n, d, wp, bias, l2) -
                 logistic_loss(x, y, n, d, wm, bias, l2)) /
                (2.0 * h);
            worst = std::max(worst,
                             std::abs(fd - grad[j]) / std::max(1e-8, std::abs(grad[j])));
        }
    }
    require(worst < 1e-4, "gradient relative error " + fmt(worst) + " >= 1e-4");

    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.below(400);
        const int k = 2 + int(rng.below(std::min<std::uint64_t>(n - 1, 20)));
        auto folds = make_folds(n, k, trial);
        std::set<std::uint32_t> seen;
        std::size_t total = 0, mx = 0, mn = n;
        for (const auto& f : folds) {
            total += f.size();
            mx = std::max(mx, f.size());
            mn = std::min(mn, f.size());
            seen.insert(f.begin(), f.end());
        }
        require(total == n && seen.size() == n && mx - mn <= 1,
                "fold partition violated for n=" + std::to_string(n) +
                    " k=" + std::to_string(k));
    }
}

// C9: planted-association expansion with an independent PMI recomputation.
void c9_pmi_expansion_oracle(Context&) {
    SentimentLexicon seed;
    seed.meta = {"seed", "1", ""};
    seed.entries = {{"great", 3.0}, {"awful", -3.0}};

    Corpus c;
    for (int i = 0; i < 40; ++i) {
        std::vector<Utterance> utts;
        utts.push_back({Speaker::Agent, 0, "zorp great stuff"});
        utts.push_back({Speaker::Customer, 1, "awful day today"});
        utts.push_back({Speaker::Agent, 2, "neutral filler line"});
        Session s;
        s.session_id = "p" + std::to_string(i);
        s.start_time = 0;
        s.end_time = 10;
        s.utterances = std::move(utts);
        c.sessions.push_back(std::move(s));
    }

    PmiConfig cfg;
    cfg.min_count = 5;
    cfg.polarity_threshold = 0.5;
    cfg.smoothing = 0.5;

    const double before = lexicon_coverage(c, seed);
    ExpansionResult r = expand_lexicon(c, seed, cfg);
    const double after = lexicon_coverage(c, r.lexicon);
    require(after >= before, "coverage decreased under expansion");

    const ExpansionEntry* zorp = nullptr;
    for (const auto& e : r.added)
        if (e.token == "zorp") zorp = &e;
    require(zorp != nullptr, "planted token was not added");
    require(zorp->valence > 0.0, "planted token has the wrong sign");

    // independent count-based recomputation
    std::uint64_t w = 0, cz = 0, cg = 0, ca = 0, czg = 0, cza = 0;
    for (const Session& s : c.sessions)
        for (const Utterance& u : s.utterances) {
            ++w;
            std::set<std::string> toks;
            for (const Token& t : tokenize(u.text)) toks.insert(t.text);
            cz += toks.count("zorp");
            cg += toks.count("great");
            ca += toks.count("awful");
            czg += toks.count("zorp") && toks.count("great");
            cza += toks.count("zorp") && toks.count("awful");
        }
    auto ref_pmi = [&](std::uint64_t a, std::uint64_t b, std::uint64_t ab) {
        const double pa = double(a) / double(w), pb = double(b) / double(w);
        const double pab = (double(ab) + cfg.smoothing * pa * pb) / (double(w) + cfg.smoothing);
        return std::log2(pab / (pa * pb));
    };
    const double want = ref_pmi(cz, cg, czg) - ref_pmi(cz, ca, cza);
    require(std::abs(zorp->score - want) <= 1e-9,
            "polarity score " + fmt(zorp->score) + " differs from recomputation " + fmt(want));
}

// C10: every command re-run from its manifest reproduces outputs byte for byte.
void c10_manifest_determinism(Context& ctx) {
    const fs::path dir = ctx.dir / "replay";
    fs::create_directories(dir);

    const fs::path cfg_path = dir / "synth.cfg";
    {
        std::ofstream cfg(cfg_path);
        cfg << "n_sessions = 2000\nseed = 9\n";
    }
    const fs::path corpus = dir / "corpus.jsonl";

    struct Step {
        std::string name;
        std::vector<std::string> args;
        fs::path manifest;
    };
    const std::vector<Step> steps = {
        {"synth",
         {"--threads", "2", "--config", cfg_path.string(), "synth", "--out", corpus.string()},
         dir / "corpus.manifest.json"},
        {"stats",
         {"stats", "--corpus", corpus.string(), "--out", (dir / "stats.csv").string()},
         dir / "stats.manifest.json"},
        {"dynamics",
         {"--threads", "2", "dynamics", "--corpus", corpus.string(), "--out",
          (dir / "dynamics.csv").string()},
         dir / "dynamics.manifest.json"},
        {"train",
         {"--seed", "5", "--threads", "2", "train", "--corpus", corpus.string(), "--model",
          "forest", "--cv", "5", "--trees", "50", "--out-dir", (dir / "train").string()},
         dir / "train/manifest.json"},
        {"ngrams",
         {"ngrams", "--corpus", corpus.string(), "--speaker", "agent", "--stage", "4",
          "--min-support", "5", "--out", (dir / "ngrams.csv").string()},
         dir / "ngrams.manifest.json"},
        {"expand",
         {"--threads", "2", "expand", "--corpus", corpus.string(), "--min-count", "20",
          "--threshold", "5", "--out", (dir / "expanded.tsv").string()},
         dir / "expanded.manifest.json"},
    };

    for (const Step& step : steps) {
        require(run_cli(step.args, ctx.log) == 0, step.name + " failed on first run");
        RunManifest m = read_manifest(step.manifest.string());
        require(!m.outputs.empty(), step.name + " manifest lists no outputs");

        // recorded digests match the files on disk
        for (const ManifestFile& f : m.outputs)
            require(digest_string(fnv1a64_file(f.path)) == f.digest,
                    step.name + ": manifest digest stale for " + f.path);

        // keep originals aside, then replay the manifest's argv
        for (const ManifestFile& f : m.outputs)
            fs::copy_file(f.path, f.path + ".orig", fs::copy_options::overwrite_existing);
        std::vector<std::string> argv(m.argv.begin() + 1, m.argv.end());
        require(run_cli(argv, ctx.log) == 0, step.name + " failed on replay");

        for (const ManifestFile& f : m.outputs) {
            require(slurp(f.path) == slurp(f.path + ".orig"),
                    step.name + ": replay changed " + f.path);
        }
    }
}

} // namespace

int main() {
    Context ctx;
    ctx.dir = fs::temp_directory_path() / "chatmine-acceptance";
    fs::remove_all(ctx.dir);
    fs::create_directories(ctx.dir);
    ctx.log = ctx.dir / "cli.log";

    struct Criterion {
        std::string id;
        std::string name;
        double limit_seconds;
        std::function<void(Context&)> fn;
    };
    const std::vector<Criterion> criteria = {
        {"C1", "majority baseline arithmetic", 1.0, c1_majority_arithmetic},
        {"C2", "sentiment sign fidelity", 1.0, c2_sentiment_signs},
        {"C3", "synthetic corpus calibration", 60.0, c3_synth_calibration},
        {"C4", "forest vs meta-only F1 gap", 300.0, c4_forest_vs_meta},
        {"C5", "sentiment dynamics shape", 120.0, c5_dynamics_shape},
        {"C6", "importance ranks determining feature", 30.0, c6_importance_property},
        {"C7", "chi-squared / Cramer's V / ranking oracles", 30.0, c7_statistics_oracles},
        {"C8", "gradient and fold partition suite", 30.0, c8_numerical_suite},
        {"C9", "PMI expansion oracle", 30.0, c9_pmi_expansion_oracle},
        {"C10", "manifest replay determinism", 600.0, c10_manifest_determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.fn(ctx);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (error.empty() && elapsed > c.limit_seconds)
            error = "runtime " + fmt(elapsed) + "s exceeds " + fmt(c.limit_seconds) + "s";
        if (error.empty()) {
            std::cout << "[PASS] " << c.id << " " << c.name << " (" << fmt(elapsed) << "s)\n";
        } else {
            std::cout << "[FAIL] " << c.id << " " << c.name << " (" << fmt(elapsed)
                      << "s): " << error << "\n";
            ++failures;
        }
        std::cout.flush();
    }
    std::cout << "acceptance: " << (criteria.size() - failures) << "/" << criteria.size()
              << " criteria passed\n";
    return failures;
}
