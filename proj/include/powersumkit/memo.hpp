#pragma once

#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>

namespace powersumkit {

namespace detail {
inline std::atomic<bool>& memo_switch() {
  static std::atomic<bool> enabled{true};
  return enabled;
}
}  // namespace detail

/// Global switch for every memo table. Disabling it makes lookups always
/// recompute, which is how cache transparency is tested.
inline bool memoization_enabled() { return detail::memo_switch().load(std::memory_order_relaxed); }
inline void set_memoization(bool enabled) { detail::memo_switch().store(enabled); }

/// RAII toggle for tests.
class ScopedMemoization {
 public:
  explicit ScopedMemoization(bool enabled) : previous_(memoization_enabled()) {
    set_memoization(enabled);
  }
  ~ScopedMemoization() { set_memoization(previous_); }
  ScopedMemoization(const ScopedMemoization&) = delete;
  ScopedMemoization& operator=(const ScopedMemoization&) = delete;

 private:
  bool previous_;
};

/// Write-once keyed cache. Concurrent lookups are shared; a value is computed
/// outside the lock and the first insert for a key wins. Every computation
/// for a key yields the same value, so racing writers are harmless.
template <typename Key, typename Value>
class MemoTable {
 public:
  template <typename Compute>
  Value get_or_compute(const Key& key, Compute&& compute) {
    if (!memoization_enabled()) return compute();
    {
      std::shared_lock lock(mutex_);
      if (auto it = cells_.find(key); it != cells_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return cells_.try_emplace(key, std::move(value)).first->second;
  }

  std::optional<Value> lookup(const Key& key) const {
    std::shared_lock lock(mutex_);
    if (auto it = cells_.find(key); it != cells_.end()) return it->second;
    return std::nullopt;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return cells_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> cells_;
};

}  // namespace powersumkit
