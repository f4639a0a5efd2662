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
#include <vector>

#include "monet/cooccurrence.hpp"
#include "monet/model.hpp"
#include "monet/walks.hpp"

namespace monet {

// Binary artifacts share a 4-byte magic, a version byte, and a record-type
// byte, followed by length-prefixed little-endian payload sections.

void save_walks(const WalkCorpus& corpus, const std::string& path);
WalkCorpus load_walks(const std::string& path);

void save_cooccurrence(const CooccurrenceStore& cooc, const std::string& path);
CooccurrenceStore load_cooccurrence(const std::string& path);

void save_matrix_binary(const Matrix& m, const std::string& path);
Matrix load_matrix_binary(const std::string& path);

/// Model checkpoint: header (variant, n, d, m, d_z, lambda) then row-major
/// parameter and accumulator blocks. The metadata matrix itself is input
/// data and is not stored; re-attach it after loading when exporting Z.
void save_checkpoint(const ModelState& state, const std::string& path);
ModelState load_checkpoint(const std::string& path);

/// Full-precision TSV, one row per line ("%.17g" fields).
void save_matrix_tsv(const Matrix& m, const std::string& path);
Matrix load_matrix_tsv(const std::string& path);

/// FNV-1a 64-bit content hash, hex encoded; used by run manifests.
std::string file_hash(const std::string& path);

bool file_exists(const std::string& path);
void ensure_directory(const std::string& path);

}  // namespace monet
