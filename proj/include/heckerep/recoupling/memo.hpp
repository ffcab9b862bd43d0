#pragma once

#include <cstdlib>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace heckerep {

// Maximum entries per memo table, from HECKEREP_CACHE_LIMIT (0 or unset: unbounded).
std::size_t cache_limit();

// Write-once memo table. Concurrent fills of one key compute equal values; the
// first insertion wins and later ones are dropped.
template <class Key, class Value>
class MemoCache {
 public:
  template <class F>
  Value get(const Key& key, F&& compute) {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    Value v = compute();
    std::unique_lock lock(mu_);
    const std::size_t limit = cache_limit();
    if (limit == 0 || map_.size() < limit) map_.try_emplace(key, v);
    return v;
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<Key, Value> map_;
};

}  // namespace heckerep
