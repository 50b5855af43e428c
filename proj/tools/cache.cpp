#include "cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace extremal::cli {

std::filesystem::path ConstantCache::default_dir() {
  const char* env = std::getenv("EXTREMAL_LIE_CACHE");
  return env && *env ? std::filesystem::path(env) : std::filesystem::path(".cache");
}

std::filesystem::path ConstantCache::file_for(char type, int rank) const {
  return dir_ / (std::string(1, type) + std::to_string(rank) + ".json");
}

ChevalleyAlgebra ConstantCache::algebra(char type, int rank, const Field& f) {
  hit_ = false;
  auto path = file_for(type, rank);
  if (std::filesystem::exists(path)) {
    try {
      std::ifstream in(path);
      auto j = nlohmann::json::parse(in);
      if (j.at("schema_version").get<int>() == kSchemaVersion &&
          j.at("convention_version").get<std::string>() == ChevalleyConstants::convention_version() &&
          j.at("type").get<std::string>() == std::string(1, type) && j.at("rank").get<int>() == rank) {
        auto over_q = LieAlgebra::from_json(j.at("algebra").dump());
        ChevalleyAlgebra g(type, rank, f, over_q);
        hit_ = true;
        return g;
      }
    } catch (const std::exception& e) {
      std::cerr << "cache: ignoring " << path.string() << ": " << e.what() << "\n";
    }
  }
  ChevalleyAlgebra q(type, rank, Field::rationals());
  try {
    store(type, rank, q.algebra());
  } catch (const std::exception& e) {
    std::cerr << "cache: cannot write " << path.string() << ": " << e.what() << "\n";
  }
  if (f.is_rational()) return q;
  return ChevalleyAlgebra(type, rank, f, q.algebra());
}

void ConstantCache::store(char type, int rank, const LieAlgebra& over_q) const {
  std::filesystem::create_directories(dir_);
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["convention_version"] = ChevalleyConstants::convention_version();
  j["type"] = std::string(1, type);
  j["rank"] = rank;
  j["algebra"] = nlohmann::json::parse(over_q.to_json());
  auto final_path = file_for(type, rank);
  std::random_device rd;
  auto tmp = final_path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    out << j.dump();
    if (!out) throw std::runtime_error("write failed");
  }
  std::filesystem::rename(tmp, final_path);
}

}  // namespace extremal::cli
