#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

namespace jackclust {

// Process-wide memo table. Values are computed outside the lock; when two threads
// race on a key the first stored value wins and both callers receive it.
template <class V>
class MemoCache {
 public:
  std::shared_ptr<const V> get_or_compute(const std::string& key, const std::function<V()>& compute) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    auto value = std::make_shared<const V>(compute());
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = table_.emplace(key, value);
    return it->second;
  }
  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return table_.size();
  }
  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    table_.clear();
  }

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::shared_ptr<const V>> table_;
};

}  // namespace jackclust
