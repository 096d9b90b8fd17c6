// Command-line front end: smooth / train / evaluate / cut / gen-sbm /
// benchmark. Every subcommand prints machine-readable key=value lines;
// keys ending in _seconds are wall-clock timings and are the only
// nondeterministic output for a fixed --seed.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sce/sce.hpp"

namespace {

// Seed stream ids for CLI-level sub-generators, separate from the
// trainer's internal streams.
constexpr std::uint64_t kStreamFeatures = 101;
constexpr std::uint64_t kStreamSplits = 102;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

sce::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open graph '" + path + "'");
    }
    sce::EdgeListResult result = sce::load_edge_list(in);
    if (result.skipped_self_loops > 0) {
        std::cerr << "warning: skipped "
                  << result.skipped_self_loops << " self-loop(s) in '" << path
                  << "'\n";
    }
    return std::move(result.graph);
}

std::string join_sizes(const std::vector<std::size_t>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << v[i];
    }
    return out.str();
}

void emit_config(const sce::TrainConfig& c, const std::string& loss) {
    std::cout << "k=" << c.k << "\n"
              << "dims=" << join_sizes(c.dims) << "\n"
              << "lr=" << c.lr << "\n"
              << "alpha=" << c.alpha << "\n"
              << "beta=" << c.beta << "\n"
              << "epochs=" << c.epochs << "\n"
              << "neg_per_node=" << c.neg_per_node << "\n"
              << "batch_size=" << c.batch_size << "\n"
              << "aggregator=" << sce::to_string(c.aggregator) << "\n"
              << "seed=" << c.seed << "\n"
              << "loss=" << loss << "\n";
}

// Training flags shared by train/evaluate/benchmark. A --config file is
// applied first; any flag given on the command line wins over it.
struct TrainFlags {
    std::string config_path;
    std::uint64_t k = 2;
    std::string dims;
    double lr = 0.001;
    double alpha = 1.0;
    double beta = 0.0;
    std::uint64_t epochs = 20;
    std::uint64_t neg_per_node = 5;
    std::uint64_t batch_size = 0;
    std::string aggregator = "none";
    std::string loss = "sce";
    std::uint64_t seed = 0;
    CLI::App* cmd = nullptr;

    void attach(CLI::App* c) {
        cmd = c;
        c->add_option("--config", config_path,
                      "key=value config file (flags override it)");
        c->add_option("--seed", seed, "root random seed");
        c->add_option("--k", k, "smoothing iterations");
        c->add_option("--dims", dims,
                      "layer widths, input first (e.g. 32,16)");
        c->add_option("--lr", lr, "Adam learning rate");
        c->add_option("--alpha", alpha, "unsupervised loss weight");
        c->add_option("--beta", beta, "L2 penalty weight");
        c->add_option("--epochs", epochs, "training updates");
        c->add_option("--neg-per-node", neg_per_node,
                      "negative pairs sampled per node");
        c->add_option("--batch-size", batch_size,
                      "mini-batch rows (0 = full batch)");
        c->add_option("--aggregator", aggregator,
                      "multi-scale aggregation: none, concat, mean or max");
        c->add_option("--loss", loss, "training loss: sce or negative");
    }

    sce::TrainConfig resolve() const {
        sce::TrainConfig cfg;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                throw std::runtime_error("cannot open config '" + config_path +
                                         "'");
            }
            sce::parse_train_config(in, cfg);
        }
        if (cmd->count("--k")) cfg.k = k;
        if (cmd->count("--dims")) cfg.dims = sce::parse_dims(dims);
        if (cmd->count("--lr")) cfg.lr = lr;
        if (cmd->count("--alpha")) cfg.alpha = alpha;
        if (cmd->count("--beta")) cfg.beta = beta;
        if (cmd->count("--epochs")) cfg.epochs = epochs;
        if (cmd->count("--neg-per-node")) cfg.neg_per_node = neg_per_node;
        if (cmd->count("--batch-size")) cfg.batch_size = batch_size;
        if (cmd->count("--aggregator")) {
            cfg.aggregator = sce::aggregator_from_string(aggregator);
        }
        if (cmd->count("--seed")) cfg.seed = seed;
        return cfg;
    }

    sce::LossKind loss_kind() const { return sce::loss_kind_from_string(loss); }
};

sce::TrainResult run_training(const sce::Graph& g,
                              const sce::DenseMatrix& features,
                              const sce::TrainConfig& cfg, sce::LossKind kind) {
    if (cfg.batch_size > 0) {
        return sce::train_minibatch(g, features, cfg, kind);
    }
    return sce::train(g, features, cfg, kind);
}

void cmd_gen_sbm(const std::string& sizes_text, double p_in, double p_out,
                 std::uint64_t seed, std::uint64_t f, double signal,
                 double noise, const std::string& out_graph,
                 const std::string& out_features,
                 const std::string& out_labels) {
    std::vector<std::size_t> sizes = sce::parse_dims(sizes_text);
    sce::SbmResult sbm = sce::gen_sbm(sizes, p_in, p_out, seed);
    std::cout << "blocks=" << sizes.size() << "\n"
              << "n=" << sbm.graph.num_nodes() << "\n"
              << "m=" << sbm.graph.num_edges() << "\n";
    if (!out_graph.empty()) {
        sce::write_edge_list(sbm.graph, out_graph);
        std::cout << "graph_file=" << out_graph << "\n";
    }
    if (!out_labels.empty()) {
        sce::write_labels(sbm.labels, out_labels);
        std::cout << "labels_file=" << out_labels << "\n";
    }
    if (!out_features.empty()) {
        if (f == 0) {
            throw std::runtime_error("gen-sbm: --f must be >= 1 to write features");
        }
        sce::DenseMatrix features =
            sce::gen_features(sbm.labels, f, signal, noise,
                              sce::derive_seed(seed, kStreamFeatures));
        sce::write_matrix(features, out_features);
        std::cout << "features_file=" << out_features << "\n"
                  << "f=" << f << "\n";
    }
}

void cmd_smooth(const std::string& graph_path, const std::string& features_path,
                std::uint64_t k, const std::string& out_path) {
    sce::Graph g = load_graph(graph_path);
    sce::DenseMatrix features = sce::read_features(features_path);
    sce::SmoothingOperator op(g, k);
    sce::DenseMatrix smoothed = op.smooth(features);
    std::cout << "n=" << g.num_nodes() << "\n"
              << "k=" << k << "\n"
              << "rows=" << smoothed.rows() << "\n"
              << "cols=" << smoothed.cols() << "\n";
    if (!out_path.empty()) {
        sce::write_matrix(smoothed, out_path);
        std::cout << "out=" << out_path << "\n";
    }
}

void cmd_cut(const std::string& graph_path, const std::string& variant_text) {
    sce::Graph g = load_graph(graph_path);
    sce::CutVariant variant;
    if (variant_text == "phi") {
        variant = sce::CutVariant::phi;
    } else if (variant_text == "phi_prime") {
        variant = sce::CutVariant::phi_prime;
    } else {
        throw std::runtime_error("cut: unknown variant '" + variant_text +
                                 "' (expected phi or phi_prime)");
    }
    sce::CutResult result = sce::brute_force_sparsest_cut(g, variant);
    std::vector<sce::NodeId> members = result.best_set.members();
    std::ostringstream set_text;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) set_text << ",";
        set_text << members[i];
    }
    std::cout << "n=" << g.num_nodes() << "\n"
              << "m=" << g.num_edges() << "\n"
              << "variant=" << variant_text << "\n"
              << "value=" << result.value << "\n"
              << "set_size=" << members.size() << "\n"
              << "set=" << set_text.str() << "\n";
}

void cmd_train(const TrainFlags& flags, const std::string& graph_path,
               const std::string& features_path, const std::string& out_path) {
    sce::Graph g = load_graph(graph_path);
    sce::DenseMatrix features = sce::read_features(features_path);
    sce::TrainConfig cfg = flags.resolve();
    if (cfg.dims.empty()) {
        // Default: one linear layer keeping the input width.
        cfg.dims = {features.cols(), features.cols()};
    }
    emit_config(cfg, flags.loss);
    std::cout << "n=" << g.num_nodes() << "\n"
              << "m=" << g.num_edges() << "\n"
              << "f=" << features.cols() << "\n";

    const auto t0 = std::chrono::steady_clock::now();
    sce::TrainResult result = run_training(g, features, cfg, flags.loss_kind());
    const double train_time = seconds_since(t0);

    if (std::isfinite(result.initial_loss)) {
        std::cout << "initial_loss=" << result.initial_loss << "\n";
    }
    if (!result.loss_history.empty()) {
        std::cout << "final_loss=" << result.loss_history.back() << "\n";
    }
    sce::DenseMatrix z = sce::embed(g, features, cfg, result.params);
    std::cout << "embedding_rows=" << z.rows() << "\n"
              << "embedding_cols=" << z.cols() << "\n";
    if (!out_path.empty()) {
        sce::write_matrix(z, out_path);
        std::cout << "out=" << out_path << "\n";
    }
    std::cout << "train_time_seconds=" << train_time << "\n";
}

struct SplitScores {
    std::vector<double> accuracy;
    std::vector<double> micro_f1;
};

SplitScores probe_splits(const sce::DenseMatrix& z,
                         const std::vector<int>& labels, std::size_t per_class,
                         std::size_t num_splits, std::uint64_t seed) {
    std::vector<sce::LabeledSplit> splits = sce::make_splits(
        labels, per_class, num_splits, sce::derive_seed(seed, kStreamSplits));
    SplitScores scores;
    for (const sce::LabeledSplit& split : splits) {
        sce::ProbeResult probe = sce::logistic_probe(z, split);
        scores.accuracy.push_back(probe.accuracy);
        scores.micro_f1.push_back(probe.micro_f1);
    }
    return scores;
}

double mean_of(const std::vector<double>& v) {
    double total = 0.0;
    for (double x : v) total += x;
    return v.empty() ? 0.0 : total / static_cast<double>(v.size());
}

double std_of(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double mean = mean_of(v);
    double total = 0.0;
    for (double x : v) total += (x - mean) * (x - mean);
    return std::sqrt(total / static_cast<double>(v.size()));
}

void emit_scores(const SplitScores& scores) {
    for (std::size_t i = 0; i < scores.accuracy.size(); ++i) {
        std::cout << "accuracy_" << i << "=" << scores.accuracy[i] << "\n";
    }
    std::cout << "accuracy_mean=" << mean_of(scores.accuracy) << "\n"
              << "accuracy_std=" << std_of(scores.accuracy) << "\n"
              << "micro_f1_mean=" << mean_of(scores.micro_f1) << "\n"
              << "micro_f1_std=" << std_of(scores.micro_f1) << "\n";
}

void cmd_evaluate(const std::string& features_path,
                  const std::string& labels_path, std::size_t per_class,
                  std::size_t num_splits, std::uint64_t seed) {
    sce::DenseMatrix z = sce::read_features(features_path);
    std::vector<int> labels = sce::read_labels(labels_path);
    if (labels.size() != z.rows()) {
        throw std::runtime_error(
            "evaluate: '" + labels_path + "' has " +
            std::to_string(labels.size()) + " labels but '" + features_path +
            "' has " + std::to_string(z.rows()) + " rows");
    }
    std::cout << "n=" << z.rows() << "\n"
              << "d=" << z.cols() << "\n"
              << "per_class=" << per_class << "\n"
              << "splits=" << num_splits << "\n"
              << "seed=" << seed << "\n";
    emit_scores(probe_splits(z, labels, per_class, num_splits, seed));
}

void cmd_benchmark(const TrainFlags& flags, const std::string& graph_path,
                   const std::string& features_path,
                   const std::string& labels_path, std::size_t per_class,
                   std::size_t num_splits, const std::string& out_path) {
    sce::Dataset ds = sce::load_dataset(graph_path, features_path, labels_path);
    if (!ds.labels) {
        throw std::runtime_error("benchmark: cannot open labels '" +
                                 labels_path + "'");
    }
    sce::TrainConfig cfg = flags.resolve();
    if (cfg.dims.empty()) {
        cfg.dims = {ds.features.cols(), ds.features.cols()};
    }
    emit_config(cfg, flags.loss);
    std::cout << "n=" << ds.graph.num_nodes() << "\n"
              << "m=" << ds.graph.num_edges() << "\n"
              << "f=" << ds.features.cols() << "\n"
              << "per_class=" << per_class << "\n"
              << "splits=" << num_splits << "\n";

    const auto t0 = std::chrono::steady_clock::now();
    sce::TrainResult result =
        run_training(ds.graph, ds.features, cfg, flags.loss_kind());
    const double train_time = seconds_since(t0);

    if (std::isfinite(result.initial_loss)) {
        std::cout << "initial_loss=" << result.initial_loss << "\n";
    }
    if (!result.loss_history.empty()) {
        std::cout << "final_loss=" << result.loss_history.back() << "\n";
    }
    sce::DenseMatrix z = sce::embed(ds.graph, ds.features, cfg, result.params);
    std::cout << "embedding_cols=" << z.cols() << "\n";
    if (!out_path.empty()) {
        sce::write_matrix(z, out_path);
        std::cout << "out=" << out_path << "\n";
    }
    emit_scores(probe_splits(z, *ds.labels, per_class, num_splits, cfg.seed));
    std::cout << "train_time_seconds=" << train_time << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::cout << std::setprecision(17);

    CLI::App app{"Unsupervised node embeddings via smoothed contrastive "
                 "encoding, plus graph-cut utilities"};
    app.require_subcommand(1);

    // gen-sbm
    std::string sbm_sizes, sbm_out_graph, sbm_out_features, sbm_out_labels;
    double sbm_p_in = 0.1, sbm_p_out = 0.01, sbm_signal = 1.0, sbm_noise = 0.0;
    std::uint64_t sbm_seed = 0, sbm_f = 0;
    CLI::App* gen = app.add_subcommand(
        "gen-sbm", "Generate a stochastic block model graph (plus optional "
                   "features and labels)");
    gen->add_option("--sizes", sbm_sizes, "block sizes (e.g. 200,200)")
        ->required();
    gen->add_option("--p-in", sbm_p_in, "intra-block edge probability");
    gen->add_option("--p-out", sbm_p_out, "inter-block edge probability");
    gen->add_option("--seed", sbm_seed, "root random seed");
    gen->add_option("--f", sbm_f, "feature width (with --out-features)");
    gen->add_option("--signal", sbm_signal, "class-signal scale");
    gen->add_option("--noise", sbm_noise, "Gaussian noise scale");
    gen->add_option("--out-graph", sbm_out_graph, "edge-list output path");
    gen->add_option("--out-features", sbm_out_features,
                    "feature matrix output path");
    gen->add_option("--out-labels", sbm_out_labels, "labels output path");

    // smooth
    std::string sm_graph, sm_features, sm_out;
    std::uint64_t sm_k = 2;
    CLI::App* smooth = app.add_subcommand(
        "smooth", "Apply the k-step neighborhood-averaging filter to features");
    smooth->add_option("--graph", sm_graph, "edge-list file")->required();
    smooth->add_option("--features", sm_features, "feature matrix file")
        ->required();
    smooth->add_option("--k", sm_k, "smoothing iterations");
    smooth->add_option("--out", sm_out, "smoothed matrix output path");

    // cut
    std::string cut_graph, cut_variant = "phi_prime";
    CLI::App* cut = app.add_subcommand(
        "cut", "Brute-force sparsest cut on a small graph (n <= 20)");
    cut->add_option("--graph", cut_graph, "edge-list file")->required();
    cut->add_option("--variant", cut_variant, "objective: phi or phi_prime");

    // train
    std::string tr_graph, tr_features, tr_out;
    TrainFlags tr_flags;
    CLI::App* train = app.add_subcommand(
        "train", "Train embeddings and write them in the SCE1 binary format");
    train->add_option("--graph", tr_graph, "edge-list file")->required();
    train->add_option("--features", tr_features, "feature matrix file")
        ->required();
    train->add_option("--out", tr_out, "embedding output path");
    tr_flags.attach(train);

    // evaluate
    std::string ev_features, ev_labels;
    std::uint64_t ev_per_class = 20, ev_splits = 10, ev_seed = 0;
    CLI::App* evaluate = app.add_subcommand(
        "evaluate",
        "Score a saved embedding matrix with the logistic-regression probe");
    evaluate->add_option("--features", ev_features, "embedding matrix file")
        ->required();
    evaluate->add_option("--labels", ev_labels, "labels file")->required();
    evaluate->add_option("--per-class", ev_per_class,
                         "training labels per class");
    evaluate->add_option("--splits", ev_splits, "number of random splits");
    evaluate->add_option("--seed", ev_seed, "root random seed");

    // benchmark
    std::string bm_graph, bm_features, bm_labels, bm_out;
    std::uint64_t bm_per_class = 20, bm_splits = 10;
    TrainFlags bm_flags;
    CLI::App* benchmark = app.add_subcommand(
        "benchmark", "Train then probe over random splits; report mean/std "
                     "accuracy and micro-F1");
    benchmark->add_option("--graph", bm_graph, "edge-list file")->required();
    benchmark->add_option("--features", bm_features, "feature matrix file")
        ->required();
    benchmark->add_option("--labels", bm_labels, "labels file")->required();
    benchmark->add_option("--per-class", bm_per_class,
                          "training labels per class");
    benchmark->add_option("--splits", bm_splits, "number of random splits");
    benchmark->add_option("--out", bm_out, "embedding output path");
    bm_flags.attach(benchmark);

    try {
        app.parse(argc, argv);
        if (gen->parsed()) {
            cmd_gen_sbm(sbm_sizes, sbm_p_in, sbm_p_out, sbm_seed, sbm_f,
                        sbm_signal, sbm_noise, sbm_out_graph, sbm_out_features,
                        sbm_out_labels);
        } else if (smooth->parsed()) {
            cmd_smooth(sm_graph, sm_features, sm_k, sm_out);
        } else if (cut->parsed()) {
            cmd_cut(cut_graph, cut_variant);
        } else if (train->parsed()) {
            cmd_train(tr_flags, tr_graph, tr_features, tr_out);
        } else if (evaluate->parsed()) {
            cmd_evaluate(ev_features, ev_labels, ev_per_class, ev_splits,
                         ev_seed);
        } else if (benchmark->parsed()) {
            cmd_benchmark(bm_flags, bm_graph, bm_features, bm_labels,
                          bm_per_class, bm_splits, bm_out);
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
