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

#pragma once

#include <cstdint>
#include <string>

namespace monet {

// Structure-matched stand-ins for the two benchmark datasets, written in
// the exact on-disk formats the loaders consume. They let the experiment
// pipelines run end to end on machines without the originals; point the
// experiment commands at the real files when they are available.

/// Two equally sized communities (554/553 nodes), 19,034 undirected edges,
/// ~91% of them within-community. Writes `<prefix>_edges.tsv` (tab-separated
/// id pairs) and `<prefix>_metadata.tsv` (one-hot community rows).
void synth_blog_graph(const std::string& prefix, std::uint64_t seed = 101);

/// Bipartite rating graph with 943 users, 1,682 items, exactly 100,000
/// distinct ratings, >= 20 per user, heavy-tailed item popularity. Writes
/// `<prefix>_ratings.tsv` in the "user<TAB>item<TAB>rating<TAB>timestamp"
/// layout (1-based ids).
void synth_rating_graph(const std::string& prefix, std::uint64_t seed = 202);

}  // namespace monet
