#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "jackclust/mpoly/serialize.hpp"

namespace jackclust {

// On-disk store of text entries. Each entry is written to a temporary file and renamed into
// place; an entry that fails its framing check or its payload parse is deleted and reported
// as absent. Writes to one key are serialized within the process.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;

  std::optional<std::string> load(const std::string& key);
  void store(const std::string& key, const std::string& payload);
  void discard(const std::string& key);

  std::optional<Poly> load_poly(const std::string& key);
  void store_poly(const std::string& key, const Poly& f);
  Poly get_or_compute_poly(const std::string& key, const std::function<Poly()>& compute);

 private:
  std::mutex& key_mutex(const std::string& key);

  std::filesystem::path dir_;
  std::mutex table_mu_;
  std::unordered_map<std::string, std::unique_ptr<std::mutex>> key_mu_;
};

}  // namespace jackclust
