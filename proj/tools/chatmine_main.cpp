// chatmine: batch pipeline for chat-session corpora.
//
// Commands: synth, stats, dynamics, train, ngrams, expand. Every command
// writes its outputs plus a .manifest.json recording the resolved
// configuration and output digests; re-running the recorded argv reproduces
// the outputs byte-for-byte.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chatmine/corpus_io.hpp"
#include "chatmine/csv.hpp"
#include "chatmine/error.hpp"
#include "chatmine/features.hpp"
#include "chatmine/lexicon.hpp"
#include "chatmine/manifest.hpp"
#include "chatmine/models.hpp"
#include "chatmine/sentiment.hpp"
#include "chatmine/synth.hpp"
#include "chatmine/textstats.hpp"
#include "chatmine/version.hpp"

#ifndef CHATMINE_DATA_DIR
#define CHATMINE_DATA_DIR "data"
#endif

namespace {

using namespace chatmine;
using nlohmann::ordered_json;

struct GlobalOpts {
    std::uint64_t seed = 0;
    bool seed_given = false;
    int threads = 1;
    std::string config; // synth config path
    std::vector<std::string> argv;
};

std::string default_lexicon_path() {
    return std::string(CHATMINE_DATA_DIR) + "/lexicon/chatmine-v1.tsv";
}

Corpus load_corpus_checked(const std::string& path) {
    ParseResult r = parse_sessions_file(path, infer_format(path));
    for (const ParseSkip& s : r.report.skipped)
        std::cerr << "warning: skipped session at position " << s.position
                  << (s.session_id.empty() ? "" : " (" + s.session_id + ")") << ": " << s.reason
                  << "\n";
    if (r.corpus.sessions.empty())
        throw ConfigError("corpus '" + path + "' contains no well-formed sessions");
    return std::move(r.corpus);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << content;
    out.flush();
    if (!out) throw IngestError("write failure: " + path);
}

struct ManifestBuilder {
    RunManifest m;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    ManifestBuilder(const GlobalOpts& g, std::string command) {
        m.command = std::move(command);
        m.argv = g.argv;
        m.seed = g.seed;
        m.threads = g.threads;
    }
    void input(const std::string& path) { m.inputs.push_back(describe_file(path)); }
    void output(const std::string& path) { m.outputs.push_back(describe_file(path)); }
    void write(const std::string& manifest_path) {
        m.duration_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        write_manifest(m, manifest_path);
    }
};

// --- synth -------------------------------------------------------------------

int cmd_synth(const GlobalOpts& g, const std::string& out_path) {
    ManifestBuilder mb(g, "synth");
    SynthConfig cfg = SynthConfig::paper_defaults();
    if (!g.config.empty()) {
        cfg = load_synth_config_file(g.config);
        mb.input(g.config);
    }
    if (g.seed_given) cfg.seed = g.seed;
    mb.m.seed = cfg.seed;

    Corpus corpus = synthesize_corpus(cfg, g.threads);
    write_jsonl_file(corpus, out_path);

    {
        std::istringstream canon(cfg.canonical_text());
        ordered_json jc;
        std::string line;
        while (std::getline(canon, line)) {
            auto eq = line.find(" = ");
            if (eq != std::string::npos) jc[line.substr(0, eq)] = line.substr(eq + 3);
        }
        mb.m.config = std::move(jc);
        mb.m.config["config_hash"] = corpus.provenance.config_hash;
    }
    mb.output(out_path);
    mb.write(manifest_path_for(out_path));
    std::cerr << "synth: wrote " << corpus.sessions.size() << " sessions to " << out_path
              << "\n";
    return 0;
}

// --- stats -------------------------------------------------------------------

int cmd_stats(const GlobalOpts& g, const std::string& corpus_path, const std::string& out_path) {
    ManifestBuilder mb(g, "stats");
    mb.input(corpus_path);
    Corpus corpus = load_corpus_checked(corpus_path);
    CorpusStats st = corpus_stats(corpus);

    std::ostringstream csv;
    csv << "metric,value\n";
    csv << "n_sessions," << st.n_sessions << "\n";
    csv << "duration_mean_min," << format_double(st.duration_mean_min) << "\n";
    csv << "duration_median_min," << format_double(st.duration_median_min) << "\n";
    csv << "duration_std_min," << format_double(st.duration_std_min) << "\n";
    csv << "utterances_p25," << st.utt_p25 << "\n";
    csv << "utterances_p50," << st.utt_p50 << "\n";
    csv << "utterances_p75," << st.utt_p75 << "\n";
    csv << "utterances_p95," << st.utt_p95 << "\n";
    csv << "survey_response_rate," << format_double(st.survey_response_rate) << "\n";
    const char* bins[5] = {"very_dissatisfied", "dissatisfied", "average", "satisfied",
                           "very_satisfied"};
    for (int i = 0; i < 5; ++i)
        csv << "rating_" << bins[i] << "," << st.rating_histogram[static_cast<std::size_t>(i)]
            << "\n";
    write_text_file(out_path, csv.str());

    mb.m.config = {{"corpus", corpus_path}};
    mb.output(out_path);
    mb.write(manifest_path_for(out_path));
    return 0;
}

// --- dynamics ------------------------------------------------------------------

int cmd_dynamics(const GlobalOpts& g, const std::string& corpus_path,
                 const std::string& lexicon_path, const std::string& stage_method,
                 const std::string& out_path) {
    ManifestBuilder mb(g, "dynamics");
    mb.input(corpus_path);
    mb.input(lexicon_path);
    Corpus corpus = load_corpus_checked(corpus_path);
    SentimentLexicon lex = load_lexicon_file(lexicon_path);

    const StageMethod method =
        stage_method == "time" ? StageMethod::Time : StageMethod::Index;
    DynamicsResult r = sentiment_dynamics(corpus, lex, vs_vd_groups(), g.threads, method);
    for (const std::string& w : r.warnings) std::cerr << "warning: " << w << "\n";

    std::ostringstream csv;
    write_dynamics_csv(r, csv);
    write_text_file(out_path, csv.str());

    mb.m.config = {{"corpus", corpus_path},
                   {"lexicon", lexicon_path},
                   {"groups", "VS,VD"},
                   {"stage_method", stage_method}};
    mb.output(out_path);
    mb.write(manifest_path_for(out_path));
    return 0;
}

// --- train -------------------------------------------------------------------

struct TrainOpts {
    std::string corpus_path;
    std::string lexicon_path;
    std::string model = "forest";
    std::string features = "all";
    std::string stage_method = "index";
    std::string fold_metrics = "pooled";
    int cv_k = 10;
    int n_trees = 100;
    int max_features = 0;
    int min_leaf = 1;
    int max_depth = 0;
    double lr = 0.1;
    int epochs = 500;
    double l2 = 1e-3;
    double class_weight = 1.0;
    std::string out_dir;
    std::string features_csv; // optional matrix export
};

int cmd_train(const GlobalOpts& g, const TrainOpts& o) {
    ManifestBuilder mb(g, "train");
    mb.input(o.corpus_path);
    mb.input(o.lexicon_path);
    Corpus corpus = load_corpus_checked(o.corpus_path);
    SentimentLexicon lex = load_lexicon_file(o.lexicon_path);

    const FeatureSelection sel =
        o.features == "meta-only" ? FeatureSelection::MetaOnly : FeatureSelection::All;
    const StageMethod method =
        o.stage_method == "time" ? StageMethod::Time : StageMethod::Index;
    Dataset ds = build_dataset(corpus, lex, sel, g.threads, method);
    if (ds.n < static_cast<std::size_t>(o.cv_k))
        throw ConfigError("corpus has " + std::to_string(ds.n) +
                          " labeled sessions; need at least k=" + std::to_string(o.cv_k));

    ClassifierSpec spec;
    if (o.model == "majority") spec.kind = ClassifierSpec::Kind::Majority;
    else if (o.model == "logistic") spec.kind = ClassifierSpec::Kind::Logistic;
    else spec.kind = ClassifierSpec::Kind::Forest;
    spec.logistic = {o.lr, o.epochs, o.l2, g.seed, o.class_weight};
    spec.forest = {o.n_trees, o.max_features, o.min_leaf, o.max_depth,
                   g.seed,    g.threads,      o.class_weight};

    std::filesystem::create_directories(o.out_dir);
    Metrics metrics = cross_validate(ds, spec, o.cv_k, g.seed);

    {
        std::ostringstream csv;
        write_metrics_csv(o.model + (sel == FeatureSelection::MetaOnly ? "-meta-only" : ""),
                          metrics, csv, o.fold_metrics == "mean");
        write_text_file(o.out_dir + "/metrics.csv", csv.str());
        mb.output(o.out_dir + "/metrics.csv");
    }

    // final model on the full labeled set, for the dump and the importances
    if (spec.kind == ClassifierSpec::Kind::Forest) {
        ForestConfig cfg = spec.forest;
        ForestModel model = train_forest(ds, cfg);
        {
            std::ostringstream imp;
            write_importance_csv(rank_importance(feature_importance(model), ds.feature_names),
                                 imp);
            write_text_file(o.out_dir + "/importance.csv", imp.str());
            mb.output(o.out_dir + "/importance.csv");
        }
        std::ostringstream dump;
        dump_model_json(model, dump);
        write_text_file(o.out_dir + "/model.json", dump.str());
        mb.output(o.out_dir + "/model.json");
    } else if (spec.kind == ClassifierSpec::Kind::Logistic) {
        LogisticModel model = train_logistic(ds, spec.logistic);
        std::ostringstream dump;
        dump_model_json(model, dump);
        write_text_file(o.out_dir + "/model.json", dump.str());
        mb.output(o.out_dir + "/model.json");
    } else {
        MajorityModel model = train_majority(ds.y);
        std::ostringstream dump;
        dump_model_json(model, dump);
        write_text_file(o.out_dir + "/model.json", dump.str());
        mb.output(o.out_dir + "/model.json");
    }

    if (!o.features_csv.empty()) {
        std::ostringstream fcsv;
        write_feature_matrix_csv(corpus, lex, fcsv, g.threads, method);
        write_text_file(o.features_csv, fcsv.str());
        mb.output(o.features_csv);
    }

    mb.m.config = {{"corpus", o.corpus_path},
                   {"lexicon", o.lexicon_path},
                   {"model", o.model},
                   {"features", o.features},
                   {"feature_set", kFeatureSetVersion},
                   {"stage_method", o.stage_method},
                   {"fold_metrics", o.fold_metrics},
                   {"cv_k", o.cv_k},
                   {"n_trees", o.n_trees},
                   {"max_features", o.max_features},
                   {"min_leaf", o.min_leaf},
                   {"max_depth", o.max_depth},
                   {"learning_rate", o.lr},
                   {"epochs", o.epochs},
                   {"l2", o.l2},
                   {"class_weight", o.class_weight},
                   {"labeled_sessions", ds.n}};
    mb.write(o.out_dir + "/manifest.json");

    const Metrics headline =
        o.fold_metrics == "mean" ? fold_mean_metrics(metrics) : metrics;
    std::cerr << "train: " << o.model << " " << o.fold_metrics
              << " accuracy=" << format_double(headline.accuracy)
              << " f1=" << format_double(headline.f1) << "\n";
    return 0;
}

// --- ngrams ------------------------------------------------------------------

int cmd_ngrams(const GlobalOpts& g, const std::string& corpus_path, const std::string& speaker,
               const std::string& stage, const std::string& n_list, int min_support,
               const std::string& out_path) {
    ManifestBuilder mb(g, "ngrams");
    mb.input(corpus_path);
    Corpus corpus = load_corpus_checked(corpus_path);

    NgramConfig cfg;
    cfg.n_values.clear();
    {
        std::istringstream ns(n_list);
        std::string tok;
        while (std::getline(ns, tok, ',')) {
            if (tok.empty()) continue;
            cfg.n_values.push_back(std::stoi(tok));
        }
    }
    cfg.speaker = speaker == "customer" ? SpeakerScope::Customer
                  : speaker == "agent"  ? SpeakerScope::Agent
                                        : SpeakerScope::Both;
    cfg.stage = stage == "all" ? 0 : std::stoi(stage);
    cfg.min_session_support = static_cast<std::size_t>(min_support);
    cfg.validate();

    NgramRanking ranking = rank_ngrams(corpus, cfg);
    if (ranking.n_true_sessions + ranking.n_false_sessions == 0)
        throw ConfigError("corpus has no labeled sessions; nothing to rank");
    for (const std::string& w : ranking.warnings) std::cerr << "warning: " << w << "\n";

    std::ostringstream csv;
    write_ngram_csv(ranking, csv);
    write_text_file(out_path, csv.str());

    mb.m.config = {{"corpus", corpus_path},     {"speaker", speaker},
                   {"stage", stage},            {"n", n_list},
                   {"min_support", min_support}};
    mb.output(out_path);
    mb.write(manifest_path_for(out_path));
    return 0;
}

// --- expand ------------------------------------------------------------------

int cmd_expand(const GlobalOpts& g, const std::string& corpus_path,
               const std::string& seed_lexicon_path, const std::string& window,
               int min_count, double threshold, double smoothing, const std::string& out_path,
               std::string report_path) {
    ManifestBuilder mb(g, "expand");
    mb.input(corpus_path);
    mb.input(seed_lexicon_path);
    Corpus corpus = load_corpus_checked(corpus_path);
    SentimentLexicon seed = load_lexicon_file(seed_lexicon_path);

    PmiConfig cfg;
    cfg.window = window == "session" ? PmiWindow::Session : PmiWindow::Utterance;
    cfg.min_count = static_cast<std::size_t>(min_count);
    cfg.polarity_threshold = threshold;
    cfg.smoothing = smoothing;
    cfg.validate();

    const double coverage_before = lexicon_coverage(corpus, seed);
    ExpansionResult r = expand_lexicon(corpus, seed, cfg);
    const double coverage_after = lexicon_coverage(corpus, r.lexicon);

    save_lexicon_file(r.lexicon, out_path);

    if (report_path.empty()) report_path = out_path + ".report.csv";
    std::ostringstream rep;
    rep << "metric,value\n";
    rep << "windows," << r.n_windows << "\n";
    rep << "candidates," << r.n_candidates << "\n";
    rep << "tokens_added," << r.added.size() << "\n";
    rep << "coverage_before," << format_double(coverage_before) << "\n";
    rep << "coverage_after," << format_double(coverage_after) << "\n";
    rep << "token,score,valence,count\n";
    for (const ExpansionEntry& e : r.added)
        rep << csv_escape(e.token) << ',' << format_double(e.score) << ','
            << format_double(e.valence) << ',' << e.count << "\n";
    write_text_file(report_path, rep.str());

    mb.m.config = {{"corpus", corpus_path},   {"seed_lexicon", seed_lexicon_path},
                   {"window", window},        {"min_count", min_count},
                   {"threshold", threshold},  {"smoothing", smoothing}};
    mb.output(out_path);
    mb.output(report_path);
    mb.write(manifest_path_for(out_path));

    std::cerr << "expand: added " << r.added.size() << " tokens; coverage "
              << format_double(coverage_before) << " -> " << format_double(coverage_after)
              << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kToolName) + " " + kToolVersion +
                 " - chat-session corpus analytics"};
    app.require_subcommand(1);

    GlobalOpts g;
    for (int i = 0; i < argc; ++i) g.argv.emplace_back(argv[i]);

    auto* seed_opt =
        app.add_option("--seed", g.seed, "Seed for all randomness (default 0)")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker thread cap (default 1)")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    app.add_option("--config", g.config, "Synth config file (synth command)");
    app.fallthrough();

    // synth
    auto* synth = app.add_subcommand("synth", "Generate a calibrated synthetic corpus (JSONL)");
    std::string synth_out;
    synth->add_option("--out", synth_out, "Output corpus path (.jsonl)")->required();

    // stats
    auto* stats = app.add_subcommand("stats", "Corpus statistics report (CSV)");
    std::string stats_corpus, stats_out;
    stats->add_option("--corpus", stats_corpus, "Input corpus (.jsonl or .xml)")->required();
    stats->add_option("--out", stats_out, "Output CSV path")->required();

    // dynamics
    auto* dynamics =
        app.add_subcommand("dynamics", "Per-(group, speaker, step) sentiment means (CSV)");
    std::string dyn_corpus, dyn_lexicon = default_lexicon_path(), dyn_out,
                dyn_stage_method = "index";
    dynamics->add_option("--corpus", dyn_corpus, "Input corpus")->required();
    dynamics->add_option("--lexicon", dyn_lexicon, "Sentiment lexicon TSV")
        ->capture_default_str();
    dynamics->add_option("--stage-method", dyn_stage_method, "Stage boundary rule")
        ->check(CLI::IsMember({"index", "time"}))
        ->capture_default_str();
    dynamics->add_option("--out", dyn_out, "Output CSV path")->required();

    // train
    auto* train = app.add_subcommand("train", "Cross-validated dissatisfaction classifiers");
    TrainOpts to;
    to.lexicon_path = default_lexicon_path();
    train->add_option("--corpus", to.corpus_path, "Input corpus")->required();
    train->add_option("--lexicon", to.lexicon_path, "Sentiment lexicon TSV")
        ->capture_default_str();
    train->add_option("--model", to.model, "Classifier")
        ->check(CLI::IsMember({"majority", "logistic", "forest"}))
        ->capture_default_str();
    train->add_option("--features", to.features, "Feature set")
        ->check(CLI::IsMember({"all", "meta-only"}))
        ->capture_default_str();
    train->add_option("--stage-method", to.stage_method, "Stage boundary rule")
        ->check(CLI::IsMember({"index", "time"}))
        ->capture_default_str();
    train->add_option("--fold-metrics", to.fold_metrics, "Headline metric style")
        ->check(CLI::IsMember({"pooled", "mean"}))
        ->capture_default_str();
    train->add_option("--class-weight", to.class_weight,
                      "Weight of the TRUE class (1 = off)")
        ->capture_default_str();
    train->add_option("--cv", to.cv_k, "Cross-validation folds")->check(CLI::Range(2, 1000))
        ->capture_default_str();
    train->add_option("--trees", to.n_trees, "Forest size")->capture_default_str();
    train->add_option("--max-features", to.max_features,
                      "Features per split (0 = ceil(sqrt(d)))")
        ->capture_default_str();
    train->add_option("--min-leaf", to.min_leaf, "Minimum samples per leaf")
        ->capture_default_str();
    train->add_option("--max-depth", to.max_depth, "Depth cap (0 = unlimited)")
        ->capture_default_str();
    train->add_option("--lr", to.lr, "Logistic learning rate")->capture_default_str();
    train->add_option("--epochs", to.epochs, "Logistic epochs")->capture_default_str();
    train->add_option("--l2", to.l2, "Logistic L2 strength")->capture_default_str();
    train->add_option("--out-dir", to.out_dir, "Output directory")->required();
    train->add_option("--features-csv", to.features_csv,
                      "Also export the full feature matrix CSV");

    // ngrams
    auto* ngrams = app.add_subcommand("ngrams", "Discriminative n-gram ranking (CSV)");
    std::string ng_corpus, ng_speaker = "agent", ng_stage = "4", ng_n = "1,2", ng_out;
    int ng_support = 20;
    ngrams->add_option("--corpus", ng_corpus, "Input corpus")->required();
    ngrams->add_option("--speaker", ng_speaker, "Speaker scope")
        ->check(CLI::IsMember({"customer", "agent", "both"}))
        ->capture_default_str();
    ngrams->add_option("--stage", ng_stage, "Conversation step (1-4) or 'all'")
        ->check(CLI::IsMember({"1", "2", "3", "4", "all"}))
        ->capture_default_str();
    ngrams->add_option("--n", ng_n, "Gram orders, comma separated")->capture_default_str();
    ngrams->add_option("--min-support", ng_support, "Minimum session support")
        ->capture_default_str();
    ngrams->add_option("--out", ng_out, "Output CSV path")->required();

    // expand
    auto* expand = app.add_subcommand("expand", "PMI-based lexicon expansion");
    std::string ex_corpus, ex_seed_lex = default_lexicon_path(), ex_window = "utterance",
                ex_out, ex_report;
    int ex_min_count = 5;
    double ex_threshold = 1.0, ex_smoothing = 0.5;
    expand->add_option("--corpus", ex_corpus, "Input corpus")->required();
    expand->add_option("--seed-lexicon", ex_seed_lex, "Seed lexicon TSV")
        ->capture_default_str();
    expand->add_option("--window", ex_window, "Co-occurrence window")
        ->check(CLI::IsMember({"utterance", "session"}))
        ->capture_default_str();
    expand->add_option("--min-count", ex_min_count, "Minimum window count")
        ->capture_default_str();
    expand->add_option("--threshold", ex_threshold, "Polarity score threshold")
        ->capture_default_str();
    expand->add_option("--smoothing", ex_smoothing, "Joint-probability smoothing")
        ->capture_default_str();
    expand->add_option("--out", ex_out, "Expanded lexicon TSV path")->required();
    expand->add_option("--report", ex_report, "Coverage report CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    g.seed_given = seed_opt->count() > 0;

    try {
        if (synth->parsed()) return cmd_synth(g, synth_out);
        if (stats->parsed()) return cmd_stats(g, stats_corpus, stats_out);
        if (dynamics->parsed())
            return cmd_dynamics(g, dyn_corpus, dyn_lexicon, dyn_stage_method, dyn_out);
        if (train->parsed()) return cmd_train(g, to);
        if (ngrams->parsed())
            return cmd_ngrams(g, ng_corpus, ng_speaker, ng_stage, ng_n, ng_support, ng_out);
        if (expand->parsed())
            return cmd_expand(g, ex_corpus, ex_seed_lex, ex_window, ex_min_count, ex_threshold,
                              ex_smoothing, ex_out, ex_report);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IngestError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
