#pragma once

#include <filesystem>
#include <string>

#include "extremal/chevalley.hpp"

namespace extremal::cli {

// Chevalley structure constants over Q, one JSON file per (type, rank).
class ConstantCache {
 public:
  static constexpr int kSchemaVersion = 1;

  // Directory from EXTREMAL_LIE_CACHE, default ./.cache.
  static std::filesystem::path default_dir();
  explicit ConstantCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  // Loads and revalidates a stored table, or builds one and stores it atomically.
  ChevalleyAlgebra algebra(char type, int rank, const Field& f);
  bool last_was_hit() const { return hit_; }

 private:
  std::filesystem::path file_for(char type, int rank) const;
  void store(char type, int rank, const LieAlgebra& over_q) const;

  std::filesystem::path dir_;
  bool hit_ = false;
};

}  // namespace extremal::cli
