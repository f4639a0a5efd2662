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

#include "monet/io.hpp"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "monet/error.hpp"

namespace monet {

namespace {

constexpr char kMagic[4] = {'M', 'N', 'E', 'T'};
constexpr std::uint8_t kVersion = 1;

enum class RecordType : std::uint8_t {
  walks = 1,
  cooccurrence = 2,
  matrix = 3,
  checkpoint = 4,
};

void write_header(std::ostream& out, RecordType type) {
  out.write(kMagic, 4);
  const std::uint8_t v = kVersion;
  const std::uint8_t t = static_cast<std::uint8_t>(type);
  out.write(reinterpret_cast<const char*>(&v), 1);
  out.write(reinterpret_cast<const char*>(&t), 1);
}

void read_header(std::istream& in, RecordType expected,
                 const std::string& path) {
  char magic[4];
  std::uint8_t v = 0, t = 0;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&v), 1);
  in.read(reinterpret_cast<char*>(&t), 1);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw ParseError("bad magic header in " + path);
  if (v != kVersion)
    throw ParseError("unsupported format version in " + path);
  if (t != static_cast<std::uint8_t>(expected))
    throw ParseError("unexpected record type in " + path);
}

template <class T>
void write_pod(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T read_pod(std::istream& in, const std::string& path) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw ParseError("truncated file: " + path);
  return v;
}

void write_matrix_block(std::ostream& out, const Matrix& m) {
  write_pod<std::uint64_t>(out, static_cast<std::uint64_t>(m.rows()));
  write_pod<std::uint64_t>(out, static_cast<std::uint64_t>(m.cols()));
  out.write(reinterpret_cast<const char*>(m.data()),
            static_cast<std::streamsize>(sizeof(double)) * m.size());
}

Matrix read_matrix_block(std::istream& in, const std::string& path) {
  const auto rows = read_pod<std::uint64_t>(in, path);
  const auto cols = read_pod<std::uint64_t>(in, path);
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  in.read(reinterpret_cast<char*>(m.data()),
          static_cast<std::streamsize>(sizeof(double)) * m.size());
  if (!in) throw ParseError("truncated matrix block: " + path);
  return m;
}

void write_vector_block(std::ostream& out, const Vector& v) {
  write_pod<std::uint64_t>(out, static_cast<std::uint64_t>(v.size()));
  out.write(reinterpret_cast<const char*>(v.data()),
            static_cast<std::streamsize>(sizeof(double)) * v.size());
}

Vector read_vector_block(std::istream& in, const std::string& path) {
  const auto size = read_pod<std::uint64_t>(in, path);
  Vector v(static_cast<Eigen::Index>(size));
  in.read(reinterpret_cast<char*>(v.data()),
          static_cast<std::streamsize>(sizeof(double)) * v.size());
  if (!in) throw ParseError("truncated vector block: " + path);
  return v;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MissingInputError("cannot write file: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingInputError("cannot open file: " + path);
  return in;
}

}  // namespace

void save_walks(const WalkCorpus& corpus, const std::string& path) {
  auto out = open_out(path);
  write_header(out, RecordType::walks);
  write_pod<std::int32_t>(out, corpus.walk_length);
  write_pod<std::int32_t>(out, corpus.walks_per_node);
  write_pod<std::uint64_t>(out, corpus.seed);
  write_pod<std::uint64_t>(out, corpus.walks.size());
  for (const auto& walk : corpus.walks) {
    write_pod<std::uint32_t>(out, static_cast<std::uint32_t>(walk.size()));
    out.write(reinterpret_cast<const char*>(walk.data()),
              static_cast<std::streamsize>(sizeof(NodeId)) *
                  static_cast<std::streamsize>(walk.size()));
  }
}

WalkCorpus load_walks(const std::string& path) {
  auto in = open_in(path);
  read_header(in, RecordType::walks, path);
  WalkCorpus corpus;
  corpus.walk_length = read_pod<std::int32_t>(in, path);
  corpus.walks_per_node = read_pod<std::int32_t>(in, path);
  corpus.seed = read_pod<std::uint64_t>(in, path);
  const auto count = read_pod<std::uint64_t>(in, path);
  corpus.walks.resize(count);
  for (auto& walk : corpus.walks) {
    const auto len = read_pod<std::uint32_t>(in, path);
    walk.resize(len);
    in.read(reinterpret_cast<char*>(walk.data()),
            static_cast<std::streamsize>(sizeof(NodeId)) * len);
    if (!in) throw ParseError("truncated walk record: " + path);
  }
  return corpus;
}

void save_cooccurrence(const CooccurrenceStore& cooc, const std::string& path) {
  auto out = open_out(path);
  write_header(out, RecordType::cooccurrence);
  const auto entries = cooc.entries();
  write_pod<std::uint64_t>(out, entries.size());
  for (const auto& e : entries) {
    write_pod<std::int32_t>(out, e.i);
    write_pod<std::int32_t>(out, e.j);
    write_pod<double>(out, e.weight);
  }
}

CooccurrenceStore load_cooccurrence(const std::string& path) {
  auto in = open_in(path);
  read_header(in, RecordType::cooccurrence, path);
  const auto count = read_pod<std::uint64_t>(in, path);
  CooccurrenceStore store;
  for (std::uint64_t k = 0; k < count; ++k) {
    const auto i = read_pod<std::int32_t>(in, path);
    const auto j = read_pod<std::int32_t>(in, path);
    const auto w = read_pod<double>(in, path);
    store.add(i, j, w);
  }
  return store;
}

void save_matrix_binary(const Matrix& m, const std::string& path) {
  auto out = open_out(path);
  write_header(out, RecordType::matrix);
  write_matrix_block(out, m);
}

Matrix load_matrix_binary(const std::string& path) {
  auto in = open_in(path);
  read_header(in, RecordType::matrix, path);
  return read_matrix_block(in, path);
}

void save_checkpoint(const ModelState& state, const std::string& path) {
  auto out = open_out(path);
  write_header(out, RecordType::checkpoint);
  write_pod<std::uint8_t>(out, static_cast<std::uint8_t>(state.variant));
  write_pod<double>(out, state.lambda);
  write_pod<std::uint64_t>(out, static_cast<std::uint64_t>(state.center.rows()));
  write_pod<std::uint64_t>(out, static_cast<std::uint64_t>(state.center.cols()));
  write_pod<std::uint64_t>(out,
                           static_cast<std::uint64_t>(state.meta_center.rows()));
  write_pod<std::uint64_t>(out,
                           static_cast<std::uint64_t>(state.meta_center.cols()));
  write_matrix_block(out, state.center);
  write_matrix_block(out, state.context);
  write_vector_block(out, state.center_bias);
  write_vector_block(out, state.context_bias);
  write_matrix_block(out, state.meta_center);
  write_matrix_block(out, state.meta_context);
  write_matrix_block(out, state.center_accum);
  write_matrix_block(out, state.context_accum);
  write_vector_block(out, state.center_bias_accum);
  write_vector_block(out, state.context_bias_accum);
  write_matrix_block(out, state.meta_center_accum);
  write_matrix_block(out, state.meta_context_accum);
}

ModelState load_checkpoint(const std::string& path) {
  auto in = open_in(path);
  read_header(in, RecordType::checkpoint, path);
  ModelState s;
  s.variant = static_cast<Variant>(read_pod<std::uint8_t>(in, path));
  s.lambda = read_pod<double>(in, path);
  read_pod<std::uint64_t>(in, path);  // n
  read_pod<std::uint64_t>(in, path);  // d
  read_pod<std::uint64_t>(in, path);  // m
  read_pod<std::uint64_t>(in, path);  // d_z
  s.center = read_matrix_block(in, path);
  s.context = read_matrix_block(in, path);
  s.center_bias = read_vector_block(in, path);
  s.context_bias = read_vector_block(in, path);
  s.meta_center = read_matrix_block(in, path);
  s.meta_context = read_matrix_block(in, path);
  s.center_accum = read_matrix_block(in, path);
  s.context_accum = read_matrix_block(in, path);
  s.center_bias_accum = read_vector_block(in, path);
  s.context_bias_accum = read_vector_block(in, path);
  s.meta_center_accum = read_matrix_block(in, path);
  s.meta_context_accum = read_matrix_block(in, path);
  return s;
}

void save_matrix_tsv(const Matrix& m, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw MissingInputError("cannot write file: " + path);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::fprintf(f, j == 0 ? "%.17g" : "\t%.17g", m(i, j));
    }
    std::fputc('\n', f);
  }
  std::fclose(f);
}

Matrix load_matrix_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingInputError("cannot open file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::vector<double> row;
    double v;
    while (ss >> v) row.push_back(v);
    if (!rows.empty() && rows.front().size() != row.size())
      throw ParseError("ragged TSV matrix: " + path);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty TSV matrix: " + path);
  Matrix m(static_cast<Eigen::Index>(rows.size()),
           static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

std::string file_hash(const std::string& path) {
  auto in = open_in(path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    const auto got = in.gcount();
    for (std::streamsize k = 0; k < got; ++k) {
      h ^= static_cast<unsigned char>(buf[k]);
      h *= 0x100000001b3ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(h));
  return hex;
}

bool file_exists(const std::string& path) {
  std::error_code ec;
  return std::filesystem::exists(path, ec);
}

void ensure_directory(const std::string& path) {
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec) throw MissingInputError("cannot create directory: " + path);
}

}  // namespace monet
