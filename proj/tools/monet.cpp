/* Copyright (c) 2026 The monet Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "monet/error.hpp"
#include "monet/experiments.hpp"
#include "monet/io.hpp"
#include "monet/pca.hpp"
#include "monet/synth.hpp"
#include "monet/trainer.hpp"

namespace {

constexpr const char* kVersion = "monet 0.1.0";

// Every artifact directory gets a manifest binding outputs to the exact
// inputs and configuration that produced them.
void write_manifest(const std::string& out_dir, const std::string& command,
                    const std::map<std::string, std::string>& inputs,
                    const nlohmann::json& config) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["command"] = command;
  nlohmann::json in;
  for (const auto& [path, _] : inputs) {
    (void)_;
    in[path] = monet::file_hash(path);
  }
  j["inputs"] = in;
  j["config"] = config;
  std::ofstream out(out_dir + "/manifest.json");
  out << j.dump(2) << "\n";

  std::ofstream cfg(out_dir + "/resolved_config.txt");
  cfg << "command = " << command << "\n";
  for (const auto& [key, value] : config.items()) {
    cfg << key << " = "
        << (value.is_string() ? value.get<std::string>() : value.dump())
        << "\n";
  }
}

struct TrainFlags {
  std::string cooc_path;
  std::string metadata_path;
  std::string variant = "glove";
  double lambda = 1.0;
  int dims = 16;
  int meta_dims = 2;
  int epochs = 20;
  int batch_size = 100;
  double lr = 0.05;
  double x_max = 100.0;
  double alpha = 0.75;
  double init_scale = 0.1;
  double accum_init = 1e-8;
  std::uint64_t seed = 1;
  int nodes = 0;
  std::string out_dir;
};

void add_train_flags(CLI::App* cmd, TrainFlags& f) {
  cmd->add_option("--cooc", f.cooc_path, "co-occurrence artifact (.bin)")
      ->required();
  cmd->add_option("--metadata", f.metadata_path,
                  "node metadata file (required for glove_meta/monet)");
  cmd->add_option("--variant", f.variant, "glove, glove_meta, or monet");
  cmd->add_option("--lambda", f.lambda, "projection relaxation in [0,1]");
  cmd->add_option("--dims", f.dims, "topology embedding width");
  cmd->add_option("--meta-dims", f.meta_dims, "metadata embedding width");
  cmd->add_option("--epochs", f.epochs, "training epochs");
  cmd->add_option("--batch-size", f.batch_size, "pairs per step");
  cmd->add_option("--lr", f.lr, "initial adaptive-gradient learning rate");
  cmd->add_option("--x-max", f.x_max, "loss smoothing cap");
  cmd->add_option("--alpha", f.alpha, "loss smoothing exponent");
  cmd->add_option("--init-scale", f.init_scale, "uniform init half-width");
  cmd->add_option("--accum-init", f.accum_init,
                  "starting gradient-accumulator value");
  cmd->add_option("--seed", f.seed, "training seed");
  cmd->add_option("--nodes", f.nodes,
                  "node count (0 = infer from metadata/co-occurrences)");
  cmd->add_option("--out", f.out_dir, "output directory")->required();
}

int run_train(const TrainFlags& f) {
  monet::TrainConfig tc;
  tc.variant = monet::variant_from_string(f.variant);
  tc.dim = f.dims;
  tc.meta_dim = tc.variant == monet::Variant::glove ? 0 : f.meta_dims;
  tc.learning_rate = f.lr;
  tc.batch_size = f.batch_size;
  tc.epochs = f.epochs;
  tc.x_max = f.x_max;
  tc.alpha = f.alpha;
  tc.init_scale = f.init_scale;
  tc.accum_init = f.accum_init;
  tc.lambda = f.lambda;
  tc.seed = f.seed;

  if (tc.variant != monet::Variant::glove && f.metadata_path.empty())
    throw monet::ConfigError("variant " + f.variant +
                             " requires --metadata");

  const monet::CooccurrenceStore cooc = monet::load_cooccurrence(f.cooc_path);
  monet::Matrix metadata;
  const monet::Matrix* meta_ptr = nullptr;
  if (!f.metadata_path.empty()) {
    metadata = monet::load_matrix_tsv(f.metadata_path);
    if (f.nodes > 0 && metadata.rows() != f.nodes)
      throw monet::DimensionError("metadata rows != --nodes");
    meta_ptr = &metadata;
  }

  monet::TrainOptions opts;
  opts.verbose = true;
  monet::ModelState state =
      monet::train(cooc, meta_ptr, tc, f.nodes, opts);

  monet::ensure_directory(f.out_dir);
  monet::save_checkpoint(state, f.out_dir + "/checkpoint.bin");
  auto [w, z] = monet::combined_embedding(state);
  monet::save_matrix_tsv(w, f.out_dir + "/W.tsv");
  if (z.cols() > 0) monet::save_matrix_tsv(z, f.out_dir + "/Z.tsv");

  std::map<std::string, std::string> inputs{{f.cooc_path, ""}};
  if (!f.metadata_path.empty()) inputs[f.metadata_path] = "";
  write_manifest(f.out_dir, "train", inputs,
                 {{"variant", f.variant},
                  {"lambda", f.lambda},
                  {"dims", f.dims},
                  {"meta_dims", f.meta_dims},
                  {"epochs", f.epochs},
                  {"batch_size", f.batch_size},
                  {"lr", f.lr},
                  {"x_max", f.x_max},
                  {"alpha", f.alpha},
                  {"init_scale", f.init_scale},
                  {"accum_init", f.accum_init},
                  {"seed", f.seed},
                  {"nodes", f.nodes}});
  std::cout << "wrote " << f.out_dir << "/checkpoint.bin and embeddings\n";
  return 0;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"graph embedding trainer with metadata-orthogonal training"};
  app.set_config("--config", "", "read defaults from a key=value file");
  app.require_subcommand(1);

  // --- synth ---------------------------------------------------------
  auto* synth = app.add_subcommand(
      "synth", "generate structure-matched stand-in datasets");
  std::string synth_dataset = "blogs";
  std::string synth_out = ".";
  std::uint64_t synth_seed = 0;
  synth->add_option("--dataset", synth_dataset, "blogs or ratings")
      ->check(CLI::IsMember({"blogs", "ratings"}));
  synth->add_option("--out", synth_out, "output directory");
  synth->add_option("--seed", synth_seed, "generator seed (0 = default)");

  // --- walks ---------------------------------------------------------
  auto* walks = app.add_subcommand("walks", "generate a random-walk corpus");
  std::string walks_graph, walks_out;
  bool walks_bipartite = false, walks_items_only = false;
  int walks_per_node = 80, walk_length = 40;
  std::uint64_t walks_seed = 1;
  walks->add_option("--graph", walks_graph, "edge list or ratings file")
      ->required();
  walks->add_flag("--bipartite", walks_bipartite,
                  "parse as user/item ratings");
  walks->add_flag("--items-only", walks_items_only,
                  "drop user visits and compact item ids (bipartite only)");
  walks->add_option("--walks-per-node", walks_per_node, "walks per node");
  walks->add_option("--walk-length", walk_length, "nodes per walk");
  walks->add_option("--seed", walks_seed, "walk seed");
  walks->add_option("--out", walks_out, "output directory")->required();

  // --- cooc ----------------------------------------------------------
  auto* cooc = app.add_subcommand(
      "cooc", "accumulate distance-weighted co-occurrences");
  std::string cooc_walks, cooc_out;
  int cooc_window = 10;
  cooc->add_option("--walks", cooc_walks, "walk corpus artifact (.bin)")
      ->required();
  cooc->add_option("--window", cooc_window, "context window");
  cooc->add_option("--out", cooc_out, "output directory")->required();

  // --- train ---------------------------------------------------------
  auto* train_cmd =
      app.add_subcommand("train", "fit embeddings on co-occurrences");
  TrainFlags tf;
  add_train_flags(train_cmd, tf);

  // --- export --------------------------------------------------------
  auto* export_cmd = app.add_subcommand(
      "export", "write embeddings and PCA coordinates from a checkpoint");
  std::string export_ckpt, export_meta, export_out;
  export_cmd->add_option("--checkpoint", export_ckpt, "checkpoint (.bin)")
      ->required();
  export_cmd->add_option("--metadata", export_meta,
                         "metadata file (re-attached for Z export)");
  export_cmd->add_option("--out", export_out, "output directory")->required();

  // --- experiment ----------------------------------------------------
  auto* exp = app.add_subcommand("experiment", "run a full study");
  std::string exp_name;
  exp->add_option("name", exp_name, "blogs or shilling")
      ->required()
      ->check(CLI::IsMember({"blogs", "shilling"}));
  std::string exp_graph = "data/blogs_edges.tsv";
  std::string exp_metadata = "data/blogs_metadata.tsv";
  std::string exp_ratings = "data/ratings_ratings.tsv";
  std::string exp_out = "out";
  int exp_reps = 10;
  std::uint64_t exp_seed = 7;
  int exp_epochs = -1;
  int exp_wpn = -1, exp_wlen = -1, exp_window = -1;
  double exp_lambda = 1.0;
  exp->add_option("--graph", exp_graph, "blogs edge list");
  exp->add_option("--metadata", exp_metadata, "blogs affiliation metadata");
  exp->add_option("--ratings", exp_ratings, "ratings file (shilling)");
  exp->add_option("--out", exp_out, "report directory");
  exp->add_option("--repetitions", exp_reps, "independent repetitions");
  exp->add_option("--seed", exp_seed, "master seed");
  exp->add_option("--epochs", exp_epochs, "override training epochs");
  exp->add_option("--walks-per-node", exp_wpn, "override walks per node");
  exp->add_option("--walk-length", exp_wlen, "override walk length");
  exp->add_option("--window", exp_window, "override co-occurrence window");
  exp->add_option("--lambda", exp_lambda, "monet lambda (blogs)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // pin usage failures to exit code 2
  }

  if (synth->parsed()) {
    monet::ensure_directory(synth_out);
    if (synth_dataset == "blogs") {
      monet::synth_blog_graph(synth_out + "/blogs",
                              synth_seed == 0 ? 101 : synth_seed);
      std::cout << "wrote " << synth_out << "/blogs_edges.tsv and "
                << synth_out << "/blogs_metadata.tsv\n";
    } else {
      monet::synth_rating_graph(synth_out + "/ratings",
                                synth_seed == 0 ? 202 : synth_seed);
      std::cout << "wrote " << synth_out << "/ratings_ratings.tsv\n";
    }
    return 0;
  }

  if (walks->parsed()) {
    monet::Graph g = walks_bipartite
                         ? monet::load_bipartite_ratings(walks_graph)
                         : monet::load_edge_list(walks_graph);
    monet::WalkCorpus corpus =
        monet::generate_walks(g, walks_per_node, walk_length, walks_seed);
    if (walks_items_only) {
      if (!g.bipartite())
        throw monet::ConfigError("--items-only requires --bipartite");
      corpus = monet::filter_walks(
          corpus, [&](monet::NodeId v) { return v >= g.user_count; });
      std::vector<monet::NodeId> to_local(
          static_cast<size_t>(g.node_count), -1);
      for (monet::NodeId v = g.user_count; v < g.node_count; ++v)
        to_local[static_cast<size_t>(v)] = v - g.user_count;
      corpus = monet::reindex_walks(corpus, to_local);
    }
    monet::ensure_directory(walks_out);
    monet::save_walks(corpus, walks_out + "/walks.bin");
    write_manifest(walks_out, "walks", {{walks_graph, ""}},
                   {{"walks_per_node", walks_per_node},
                    {"walk_length", walk_length},
                    {"seed", walks_seed},
                    {"bipartite", walks_bipartite},
                    {"items_only", walks_items_only}});
    std::cout << "wrote " << walks_out << "/walks.bin (" << corpus.walks.size()
              << " walks)\n";
    return 0;
  }

  if (cooc->parsed()) {
    const monet::WalkCorpus corpus = monet::load_walks(cooc_walks);
    const monet::CooccurrenceStore store =
        monet::build_cooccurrence(corpus, cooc_window);
    monet::ensure_directory(cooc_out);
    monet::save_cooccurrence(store, cooc_out + "/cooc.bin");
    write_manifest(cooc_out, "cooc", {{cooc_walks, ""}},
                   {{"window", cooc_window}});
    std::cout << "wrote " << cooc_out << "/cooc.bin (" << store.pair_count()
              << " pairs)\n";
    return 0;
  }

  if (train_cmd->parsed()) return run_train(tf);

  if (export_cmd->parsed()) {
    monet::ModelState state = monet::load_checkpoint(export_ckpt);
    if (!export_meta.empty())
      state.metadata = monet::load_metadata(
          export_meta, static_cast<monet::NodeId>(state.center.rows()));
    monet::ensure_directory(export_out);
    auto [w, z] = monet::combined_embedding(state);
    monet::save_matrix_tsv(w, export_out + "/W.tsv");
    if (z.cols() > 0) monet::save_matrix_tsv(z, export_out + "/Z.tsv");
    monet::save_matrix_tsv(monet::pca_2d(w), export_out + "/W_pca.tsv");
    write_manifest(export_out, "export", {{export_ckpt, ""}},
                   {{"metadata", export_meta}});
    std::cout << "wrote embeddings to " << export_out << "\n";
    return 0;
  }

  if (exp->parsed()) {
    if (exp_name == "blogs") {
      monet::BlogExperimentConfig cfg;
      cfg.edges_path = exp_graph;
      cfg.metadata_path = exp_metadata;
      cfg.out_dir = exp_out;
      cfg.repetitions = exp_reps;
      cfg.master_seed = exp_seed;
      cfg.train.lambda = exp_lambda;
      if (exp_epochs >= 0) cfg.train.epochs = exp_epochs;
      if (exp_wpn > 0) cfg.walks.walks_per_node = exp_wpn;
      if (exp_wlen > 0) cfg.walks.walk_length = exp_wlen;
      if (exp_window > 0) cfg.walks.window = exp_window;
      monet::ensure_directory(exp_out);
      monet::run_blog_experiment(cfg);
      write_manifest(exp_out, "experiment blogs",
                     {{exp_graph, ""}, {exp_metadata, ""}},
                     {{"repetitions", exp_reps},
                      {"seed", exp_seed},
                      {"epochs", cfg.train.epochs},
                      {"walks_per_node", cfg.walks.walks_per_node},
                      {"walk_length", cfg.walks.walk_length},
                      {"window", cfg.walks.window},
                      {"lambda", exp_lambda}});
      std::cout << "report written to " << exp_out << "/blog_report.json\n";
    } else {
      monet::ShillingExperimentConfig cfg;
      cfg.ratings_path = exp_ratings;
      cfg.out_dir = exp_out;
      cfg.repetitions = exp_reps;
      cfg.master_seed = exp_seed;
      if (exp_epochs >= 0) cfg.train.epochs = exp_epochs;
      if (exp_wpn > 0) cfg.walks.walks_per_node = exp_wpn;
      if (exp_wlen > 0) cfg.walks.walk_length = exp_wlen;
      if (exp_window > 0) cfg.walks.window = exp_window;
      monet::ensure_directory(exp_out);
      monet::run_shilling_experiment(cfg);
      write_manifest(exp_out, "experiment shilling", {{exp_ratings, ""}},
                     {{"repetitions", exp_reps},
                      {"seed", exp_seed},
                      {"epochs", cfg.train.epochs},
                      {"walks_per_node", cfg.walks.walks_per_node},
                      {"walk_length", cfg.walks.walk_length},
                      {"window", cfg.walks.window}});
      std::cout << "report written to " << exp_out
                << "/shilling_report.json\n";
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const monet::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const monet::MissingInputError& e) {
    std::cerr << "missing input: " << e.what() << "\n";
    return 3;
  } catch (const monet::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const monet::DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return 3;
  } catch (const monet::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
