#include "jackclust/clustercli/cache.hpp"

#include <atomic>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <thread>

#include "jackclust/errors.hpp"

namespace jackclust {

namespace {

// FNV-1a, stable across builds.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << v;
  return out.str();
}

// Entry layout: "jackclust-cache 1\n" "key <key>\n" <payload> "\nend <payload bytes> <payload hash>\n".
std::string frame(const std::string& key, const std::string& payload) {
  return "jackclust-cache 1\nkey " + key + "\n" + payload + "\nend " + std::to_string(payload.size()) + " " +
         hex(fnv1a(payload)) + "\n";
}

std::optional<std::string> unframe(const std::string& key, const std::string& text) {
  const std::string head = "jackclust-cache 1\nkey " + key + "\n";
  if (text.compare(0, head.size(), head) != 0) return std::nullopt;
  auto tail = text.rfind("\nend ");
  if (tail == std::string::npos || tail < head.size()) return std::nullopt;
  std::string payload = text.substr(head.size(), tail - head.size());
  std::istringstream trailer(text.substr(tail + 5));
  std::size_t size = 0;
  std::string hash;
  if (!(trailer >> size >> hash)) return std::nullopt;
  if (size != payload.size() || hash != hex(fnv1a(payload))) return std::nullopt;
  return payload;
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path ResultCache::path_for(const std::string& key) const { return dir_ / (hex(fnv1a(key)) + ".entry"); }

std::mutex& ResultCache::key_mutex(const std::string& key) {
  std::lock_guard<std::mutex> lock(table_mu_);
  auto& slot = key_mu_[key];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

std::optional<std::string> ResultCache::load(const std::string& key) {
  std::lock_guard<std::mutex> lock(key_mutex(key));
  const auto path = path_for(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  auto payload = unframe(key, buf.str());
  if (!payload) {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
  return payload;
}

void ResultCache::store(const std::string& key, const std::string& payload) {
  std::lock_guard<std::mutex> lock(key_mutex(key));
  static std::atomic<unsigned long> counter{0};
  const auto path = path_for(key);
  std::ostringstream tmpname;
  tmpname << path.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
          << counter++;
  const auto tmp = dir_ / tmpname.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << frame(key, payload);
    out.flush();
    if (!out) throw std::runtime_error("cache write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void ResultCache::discard(const std::string& key) {
  std::lock_guard<std::mutex> lock(key_mutex(key));
  std::error_code ec;
  std::filesystem::remove(path_for(key), ec);
}

std::optional<Poly> ResultCache::load_poly(const std::string& key) {
  auto text = load(key);
  if (!text) return std::nullopt;
  try {
    return deserialize_poly(*text);
  } catch (const ParseError&) {
    discard(key);
    return std::nullopt;
  }
}

void ResultCache::store_poly(const std::string& key, const Poly& f) { store(key, serialize(f)); }

Poly ResultCache::get_or_compute_poly(const std::string& key, const std::function<Poly()>& compute) {
  if (auto hit = load_poly(key)) return *hit;
  Poly f = compute();
  store_poly(key, f);
  return f;
}

}  // namespace jackclust
