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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "monet/error.hpp"
#include "monet/experiments.hpp"
#include "monet/io.hpp"
#include "monet/parallel.hpp"
#include "monet/pca.hpp"
#include "monet/projection.hpp"
#include "monet/rng.hpp"
#include "monet/trainer.hpp"

#include <json.hpp>

namespace monet {

StatSummary summarize(const std::vector<double>& values) {
  StatSummary s;
  if (values.empty()) return s;
  for (double v : values) s.mean += v;
  s.mean /= static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

double BlogReport::probe_mean(const std::string& method,
                              ProbeKind kind) const {
  const auto& pts = methods.at(method).probes;
  double sum = 0.0;
  int count = 0;
  for (const auto& pt : pts) {
    if (pt.kind != kind) continue;
    sum += pt.accuracy.mean;
    ++count;
  }
  return count > 0 ? sum / count : 0.0;
}

double BlogReport::probe_at(const std::string& method, ProbeKind kind,
                            double p) const {
  for (const auto& pt : methods.at(method).probes) {
    if (pt.kind == kind && std::abs(pt.p - p) < 1e-12)
      return pt.accuracy.mean;
  }
  throw ConfigError("probe_at: no such grid point");
}

namespace {

// Everything one repetition produces for one method.
struct RepMethodResult {
  double leakage = 0.0;
  Matrix sigma_t;  // 0x0 when not applicable
  // accuracy[kind][p index]
  std::vector<std::vector<double>> accuracy;
  double wall_seconds = 0.0;
  Matrix embedding;  // kept only for repetition 0
};

using RepResult = std::map<std::string, RepMethodResult>;

std::vector<int> labels_from_metadata(const Matrix& metadata) {
  std::vector<int> labels(static_cast<size_t>(metadata.rows()));
  for (Eigen::Index i = 0; i < metadata.rows(); ++i) {
    Eigen::Index arg = 0;
    metadata.row(i).maxCoeff(&arg);
    labels[static_cast<size_t>(i)] = static_cast<int>(arg);
  }
  return labels;
}

}  // namespace

BlogReport run_blog_experiment(const BlogExperimentConfig& config) {
  if (!file_exists(config.edges_path) || !file_exists(config.metadata_path)) {
    throw MissingInputError(
        "blog experiment inputs not found.\n  edges:    " + config.edges_path +
        "\n  metadata: " + config.metadata_path +
        "\nProvide the political-blogs edge list and one-hot affiliation "
        "metadata at those paths (the graph ships with the graph-tool "
        "collection), or generate stand-ins with `monet synth --dataset "
        "blogs --out <dir>`.");
  }

  const Graph graph = load_edge_list(config.edges_path);
  const Matrix metadata = load_metadata(config.metadata_path, graph.node_count);
  const std::vector<int> labels = labels_from_metadata(metadata);
  const std::vector<std::string> method_names = {"random", "glove",
                                                 "glove_meta", "monet"};

  std::vector<RepResult> reps(static_cast<size_t>(config.repetitions));
  parallel_for(config.repetitions, [&](int rep) {
    RepResult& result = reps[static_cast<size_t>(rep)];
    const std::uint64_t walk_seed = derive_seed(config.master_seed, 11, rep);

    // All methods within a repetition factor the same co-occurrences.
    const WalkCorpus corpus =
        generate_walks(graph, config.walks.walks_per_node,
                       config.walks.walk_length, walk_seed);
    const CooccurrenceStore cooc =
        build_cooccurrence(corpus, config.walks.window);

    for (const auto& name : method_names) {
      RepMethodResult r;
      Matrix w, z;
      if (name == "random") {
        const auto t0 = std::chrono::steady_clock::now();
        w = random_embedding(graph.node_count, config.train.dim,
                             derive_seed(config.master_seed, 17, rep));
        r.wall_seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        z = Matrix(graph.node_count, 0);
      } else {
        TrainConfig tc = config.train;
        // Methods train independently, as separate runs would.
        tc.seed = derive_seed(config.master_seed, 13, rep) ^
                  splitmix64(fnv1a64(name));
        tc.variant = variant_from_string(name);
        const Matrix* meta_ptr =
            tc.variant == Variant::glove ? nullptr : &metadata;
        const auto t0 = std::chrono::steady_clock::now();
        ModelState state = train(cooc, meta_ptr, tc, graph.node_count);
        r.wall_seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        auto [ww, zz] = combined_embedding(state);
        w = std::move(ww);
        z = std::move(zz);
        if (tc.variant != Variant::glove)
          r.sigma_t = metadata_importance(state);
      }

      // Leakage against the model's own metadata embedding; raw metadata
      // for methods without one.
      const Matrix& z_ref = z.cols() > 0 ? z : metadata;
      r.leakage = metadata_leakage(z_ref, w);
      r.accuracy.assign(2, std::vector<double>(config.p_grid.size(), 0.0));
      r.embedding = std::move(w);
      result[name] = std::move(r);
    }

    // Shared splits across methods at each train fraction.
    for (size_t pi = 0; pi < config.p_grid.size(); ++pi) {
      const double p = config.p_grid[pi];
      const std::uint64_t split_seed =
          derive_seed(config.master_seed, 100 + pi, rep);
      for (const auto& name : method_names) {
        auto& r = result[name];
        r.accuracy[0][pi] = probe_split_accuracy(r.embedding, labels, p,
                                                 split_seed, ProbeKind::linear);
        r.accuracy[1][pi] = probe_split_accuracy(
            r.embedding, labels, p, split_seed, ProbeKind::nonlinear);
      }
    }
    if (rep != 0) {
      for (const auto& name : method_names) result[name].embedding = Matrix();
    }
    std::cerr << "blogs: repetition " << rep + 1 << "/" << config.repetitions
              << " done\n";
  });

  BlogReport report;
  report.method_names = method_names;
  report.p_grid = config.p_grid;
  report.labels = labels;
  report.notes = {
      "linear probe is an L2-regularized logistic classifier standing in "
      "for a linear SVM",
      "nonlinear probe is RBF kernel ridge with sign readout standing in "
      "for an RBF SVM"};
  for (const auto& name : method_names) {
    BlogMethodReport m;
    std::vector<double> leakage, wall;
    std::vector<Matrix> sigmas;
    for (const auto& rep : reps) {
      const auto& r = rep.at(name);
      leakage.push_back(r.leakage);
      wall.push_back(r.wall_seconds);
      if (r.sigma_t.size() > 0) sigmas.push_back(r.sigma_t);
    }
    m.leakage = summarize(leakage);
    m.wall_time_sec = summarize(wall).mean;
    if (!sigmas.empty()) {
      m.sigma_t_mean = Matrix::Zero(sigmas[0].rows(), sigmas[0].cols());
      for (const auto& s : sigmas) m.sigma_t_mean += s;
      m.sigma_t_mean /= static_cast<double>(sigmas.size());
    }
    for (int kind = 0; kind < 2; ++kind) {
      for (size_t pi = 0; pi < config.p_grid.size(); ++pi) {
        std::vector<double> acc;
        for (const auto& rep : reps)
          acc.push_back(rep.at(name).accuracy[static_cast<size_t>(kind)][pi]);
        ProbePoint pt;
        pt.p = config.p_grid[pi];
        pt.kind = kind == 0 ? ProbeKind::linear : ProbeKind::nonlinear;
        pt.accuracy = summarize(acc);
        m.probes.push_back(pt);
      }
    }
    m.sample_embedding = reps.front().at(name).embedding;
    report.methods[name] = std::move(m);
  }

  if (!config.out_dir.empty()) write_blog_report(report, config.out_dir);
  return report;
}

void write_blog_report(const BlogReport& report, const std::string& out_dir) {
  ensure_directory(out_dir);
  nlohmann::json j;
  for (const auto& name : report.method_names) {
    const auto& m = report.methods.at(name);
    nlohmann::json jm;
    jm["leakage"] = {{"mean", m.leakage.mean}, {"std", m.leakage.std}};
    if (m.sigma_t_mean.size() > 0) {
      nlohmann::json rows = nlohmann::json::array();
      for (Eigen::Index r = 0; r < m.sigma_t_mean.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.sigma_t_mean.cols(); ++c)
          row.push_back(m.sigma_t_mean(r, c));
        rows.push_back(row);
      }
      jm["sigma_T"] = rows;
    } else {
      jm["sigma_T"] = nullptr;
    }
    nlohmann::json probes = nlohmann::json::array();
    for (const auto& pt : m.probes) {
      probes.push_back({{"p", pt.p},
                        {"kind", pt.kind == ProbeKind::linear ? "linear"
                                                              : "nonlinear"},
                        {"mean", pt.accuracy.mean},
                        {"std", pt.accuracy.std}});
    }
    jm["probes"] = probes;
    jm["wall_time_sec"] = m.wall_time_sec;
    j[name] = jm;
  }
  j["_meta"] = {{"notes", report.notes}, {"p_grid", report.p_grid}};

  std::ofstream out(out_dir + "/blog_report.json");
  out << j.dump(2) << "\n";
  out.close();

  // Plot-ready tables.
  {
    std::FILE* f = std::fopen((out_dir + "/blog_probes.tsv").c_str(), "w");
    std::fprintf(f, "method\tkind\tp\tmean\tstd\n");
    for (const auto& name : report.method_names) {
      for (const auto& pt : report.methods.at(name).probes) {
        std::fprintf(f, "%s\t%s\t%.2f\t%.6f\t%.6f\n", name.c_str(),
                     pt.kind == ProbeKind::linear ? "linear" : "nonlinear",
                     pt.p, pt.accuracy.mean, pt.accuracy.std);
      }
    }
    std::fclose(f);
  }
  {
    std::FILE* f = std::fopen((out_dir + "/blog_leakage.tsv").c_str(), "w");
    std::fprintf(f, "method\tleakage_mean\tleakage_std\twall_time_sec\n");
    for (const auto& name : report.method_names) {
      const auto& m = report.methods.at(name);
      std::fprintf(f, "%s\t%.8g\t%.8g\t%.4f\n", name.c_str(), m.leakage.mean,
                   m.leakage.std, m.wall_time_sec);
    }
    std::fclose(f);
  }
  for (const auto& name : report.method_names) {
    const auto& m = report.methods.at(name);
    if (m.sample_embedding.size() == 0) continue;
    const Matrix coords = pca_2d(m.sample_embedding);
    std::FILE* f =
        std::fopen((out_dir + "/blog_pca_" + name + ".tsv").c_str(), "w");
    std::fprintf(f, "node_id\tx\ty\tlabel\n");
    for (Eigen::Index i = 0; i < coords.rows(); ++i) {
      std::fprintf(f, "%lld\t%.8g\t%.8g\t%d\n", static_cast<long long>(i),
                   coords(i, 0), coords(i, 1),
                   report.labels[static_cast<size_t>(i)]);
    }
    std::fclose(f);
  }
}

}  // namespace monet
