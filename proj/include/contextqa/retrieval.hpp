#pragma once

#include <filesystem>
#include <string>
#include <unordered_set>
#include <vector>

#include "contextqa/corpus.hpp"
#include "contextqa/embedding.hpp"

namespace contextqa {

enum class SimilarityMetric { Cosine, Dot };

struct RankedSection {
  std::string section_id;
  double score = 0.0;
  int rank = 0;  // 1-based
};

struct StoreEntry {
  std::string id;
  EmbeddingVector values;
};

/// In-memory section-embedding store. Immutable once built; concurrent
/// rank_sections calls over a shared store are safe.
class VectorStore {
 public:
  explicit VectorStore(int dim, SimilarityMetric metric_default = SimilarityMetric::Cosine);

  void add(std::string id, EmbeddingVector values);

  const std::vector<StoreEntry>& entries() const { return entries_; }
  int dim() const { return dim_; }
  SimilarityMetric metric_default() const { return metric_default_; }
  std::size_t size() const { return entries_.size(); }

 private:
  int dim_;
  SimilarityMetric metric_default_;
  std::vector<StoreEntry> entries_;
  std::unordered_set<std::string> ids_;
};

/// Dot returns the inner product; cosine divides by both norms and clamps
/// to [-1, 1] against rounding. Throws on dimension mismatch, and on a
/// zero-norm operand under cosine.
double similarity(const EmbeddingVector& a, const EmbeddingVector& b, SimilarityMetric metric);

/// Exhaustive ranking of every store entry, descending score, ties broken
/// by ascending section id. An empty store yields an empty list.
std::vector<RankedSection> rank_sections(const EmbeddingVector& query, const VectorStore& store,
                                         SimilarityMetric metric);

// Binary store container: "CFVS" magic, version, dim, entry count, entries
// (id length, id bytes, little-endian float32 values), CRC32 of the payload.
void save_store(const VectorStore& store, const std::filesystem::path& path);
VectorStore load_store(const std::filesystem::path& path);

/// Inspection-only CSV mirror (title, heading, elided bracketed vector).
void export_store_csv(const VectorStore& store, const CorpusTable& corpus,
                      const std::filesystem::path& path);

}  // namespace contextqa
