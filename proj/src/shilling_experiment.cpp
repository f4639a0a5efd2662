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

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>

#include "monet/distances.hpp"
#include "monet/error.hpp"
#include "monet/experiments.hpp"
#include "monet/io.hpp"
#include "monet/parallel.hpp"
#include "monet/rng.hpp"
#include "monet/shilling.hpp"
#include "monet/trainer.hpp"

#include <json.hpp>

namespace monet {

std::string monet_method_name(double lambda) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "monet_%.2f", lambda);
  return buf;
}

namespace {

struct RepMethodResult {
  double attacked = 0.0;
  double mrr_value = 0.0;
  double lift = 0.0;
  double dist_r = 0.0;
  double wall_seconds = 0.0;
};

using RepResult = std::map<std::string, RepMethodResult>;

double count_attacked_in_topk(const Matrix& embedding, NodeId target_local,
                              const std::set<NodeId>& influence_local, int k) {
  const auto top = topk_neighbors(embedding, target_local, k);
  double hits = 0;
  for (NodeId id : top)
    if (influence_local.count(id)) ++hits;
  return hits;
}

}  // namespace

ShillingReport run_shilling_experiment(const ShillingExperimentConfig& config) {
  if (!file_exists(config.ratings_path)) {
    throw MissingInputError(
        "shilling experiment input not found.\n  ratings: " +
        config.ratings_path +
        "\nProvide a MovieLens-100k style ratings file "
        "(user<TAB>item<TAB>rating<TAB>timestamp; the original is the "
        "ml-100k u.data distributed by GroupLens), or generate a stand-in "
        "with `monet synth --dataset ratings --out <dir>`.");
  }

  const Graph base = load_bipartite_ratings(config.ratings_path);
  const NodeId items = base.item_count();

  std::vector<std::string> method_names = {"glove", "glove_meta"};
  for (double lam : config.lambda_grid)
    method_names.push_back(monet_method_name(lam));
  method_names.push_back("nlp");
  method_names.push_back("random");

  std::vector<RepResult> reps(static_cast<size_t>(config.repetitions));
  parallel_for(config.repetitions, [&](int rep) {
    RepResult& result = reps[static_cast<size_t>(rep)];
    const AttackSpec spec = sample_attack_spec(
        base, config.influence_size, config.attacker_fraction,
        config.known_fraction, derive_seed(config.master_seed, 31, rep));
    const Graph attacked = inject_attack(base, spec);
    // Study protocol: the models know attacker rating counts for the
    // attacked items only; organic ratings by known attackers elsewhere
    // stay out of the metadata.
    const Matrix counts_all = attacker_metadata(attacked, spec);
    Matrix counts = Matrix::Zero(items, 1);
    for (NodeId id : spec.influence_set)
      counts(id - attacked.user_count, 0) = counts_all(id - attacked.user_count, 0);
    counts(spec.target - attacked.user_count, 0) =
        counts_all(spec.target - attacked.user_count, 0);

    // Item-only corpus: user visits are dropped from the walks, and the
    // surviving item ids are compacted to [0, items).
    const WalkCorpus walks = generate_walks(
        attacked, config.walks.walks_per_node, config.walks.walk_length,
        derive_seed(config.master_seed, 37, rep));
    const WalkCorpus item_walks = filter_walks(
        walks, [&](NodeId v) { return v >= attacked.user_count; });
    std::vector<NodeId> to_local(static_cast<size_t>(attacked.node_count), -1);
    for (NodeId v = attacked.user_count; v < attacked.node_count; ++v)
      to_local[static_cast<size_t>(v)] = v - attacked.user_count;
    const WalkCorpus local_walks = reindex_walks(item_walks, to_local);
    const CooccurrenceStore cooc =
        build_cooccurrence(local_walks, config.walks.window);
    const auto nn_map = cooccurrence_nn(cooc);

    const NodeId target_local = spec.target - attacked.user_count;
    std::set<NodeId> influence_local;
    for (NodeId id : spec.influence_set)
      influence_local.insert(id - attacked.user_count);

    const Matrix random_embed = random_embedding(
        items, config.train.dim, derive_seed(config.master_seed, 41, rep));
    const double random_mrr = mrr(random_embed, nn_map);

    const std::uint64_t pair_seed = derive_seed(config.master_seed, 47, rep);

    std::map<std::string, Matrix> embeddings;
    auto record = [&](const std::string& name, Matrix w, double seconds) {
      RepMethodResult r;
      r.attacked = count_attacked_in_topk(w, target_local, influence_local,
                                          config.top_k);
      r.mrr_value = mrr(w, nn_map);
      r.lift = r.mrr_value / random_mrr;
      r.wall_seconds = seconds;
      result[name] = r;
      embeddings[name] = std::move(w);
    };

    for (const auto& name : method_names) {
      if (name == "random") {
        record(name, random_embed, 0.0);
        continue;
      }
      if (name == "nlp") {
        // Direction rejection applied to the plain glove embedding.
        const auto t0 = std::chrono::steady_clock::now();
        const Vector dir = attack_direction(embeddings.at("glove"), counts);
        Matrix w = nlp_debias(embeddings.at("glove"), dir);
        const double secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
        record(name, std::move(w), secs);
        continue;
      }
      TrainConfig tc = config.train;
      // Methods train independently, as separate runs would.
      tc.seed = derive_seed(config.master_seed, 43, rep) ^
                splitmix64(fnv1a64(name));
      if (name == "glove") {
        tc.variant = Variant::glove;
      } else if (name == "glove_meta") {
        tc.variant = Variant::glove_meta;
      } else {
        tc.variant = Variant::monet;
        tc.lambda = std::stod(name.substr(name.find('_') + 1));
      }
      const Matrix* meta_ptr =
          tc.variant == Variant::glove ? nullptr : &counts;
      const auto t0 = std::chrono::steady_clock::now();
      ModelState state = train(cooc, meta_ptr, tc, items);
      const double secs = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
      record(name, combined_embedding(state).first, secs);
    }

    for (const auto& name : method_names) {
      result[name].dist_r =
          distance_correlation(embeddings.at("glove"), embeddings.at(name),
                               config.distance_sample_pairs, pair_seed);
    }
    std::cerr << "shilling: repetition " << rep + 1 << "/"
              << config.repetitions << " done\n";
  });

  ShillingReport report;
  report.method_names = method_names;
  report.lambda_grid = config.lambda_grid;
  report.notes = {
      "nlp debiasing reads the published formula as the standard "
      "single-direction rejection W - (W a / |a|) a^T with a unit direction",
      "mrr lift is the per-repetition ratio to a seeded random-embedding "
      "baseline, averaged over repetitions"};
  for (const auto& name : method_names) {
    std::vector<double> attacked, mrrs, lifts, rs, wall;
    for (const auto& rep : reps) {
      const auto& r = rep.at(name);
      attacked.push_back(r.attacked);
      mrrs.push_back(r.mrr_value);
      lifts.push_back(r.lift);
      rs.push_back(r.dist_r);
      wall.push_back(r.wall_seconds);
    }
    ShillingMethodReport m;
    m.attacked_top20 = summarize(attacked);
    m.mrr = summarize(mrrs);
    m.mrr_lift = summarize(lifts).mean;
    m.distance_r = summarize(rs).mean;
    m.wall_time_sec = summarize(wall).mean;
    report.methods[name] = m;
  }

  if (!config.out_dir.empty()) write_shilling_report(report, config.out_dir);
  return report;
}

void write_shilling_report(const ShillingReport& report,
                           const std::string& out_dir) {
  ensure_directory(out_dir);
  nlohmann::json j;
  for (const auto& name : report.method_names) {
    const auto& m = report.methods.at(name);
    j[name] = {
        {"attacked_top20", {{"mean", m.attacked_top20.mean},
                            {"std", m.attacked_top20.std}}},
        {"mrr", {{"mean", m.mrr.mean}, {"std", m.mrr.std}}},
        {"mrr_lift", m.mrr_lift},
        {"distance_r", m.distance_r},
        {"wall_time_sec", m.wall_time_sec},
    };
  }
  j["_meta"] = {{"notes", report.notes},
                {"lambda_grid", report.lambda_grid}};

  std::ofstream out(out_dir + "/shilling_report.json");
  out << j.dump(2) << "\n";
  out.close();

  std::FILE* f = std::fopen((out_dir + "/shilling_metrics.tsv").c_str(), "w");
  std::fprintf(f,
               "method\tattacked_top20_mean\tattacked_top20_std\tmrr_mean\t"
               "mrr_std\tmrr_lift\tdistance_r\twall_time_sec\n");
  for (const auto& name : report.method_names) {
    const auto& m = report.methods.at(name);
    std::fprintf(f, "%s\t%.4f\t%.4f\t%.6f\t%.6f\t%.4f\t%.4f\t%.4f\n",
                 name.c_str(), m.attacked_top20.mean, m.attacked_top20.std,
                 m.mrr.mean, m.mrr.std, m.mrr_lift, m.distance_r,
                 m.wall_time_sec);
  }
  std::fclose(f);
}

}  // namespace monet
