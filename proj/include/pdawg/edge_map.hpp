#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "pdawg/symbol.hpp"

namespace pdawg {

/// Ordered Symbol -> V map. A sorted vector while small, a std::map once the
/// degree exceeds kThreshold. Iteration is always in label order.
template <class V>
class EdgeMap {
 public:
  static constexpr std::size_t kThreshold = 16;

  EdgeMap() = default;
  EdgeMap(const EdgeMap& o) : small_(o.small_), big_(o.big_ ? std::make_unique<std::map<Symbol, V>>(*o.big_) : nullptr) {}
  EdgeMap& operator=(const EdgeMap& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<std::map<Symbol, V>>(*o.big_) : nullptr;
    }
    return *this;
  }
  EdgeMap(EdgeMap&&) noexcept = default;
  EdgeMap& operator=(EdgeMap&&) noexcept = default;

  std::size_t size() const { return big_ ? big_->size() : small_.size(); }
  bool empty() const { return size() == 0; }

  const V* find(Symbol k) const {
    if (big_) {
      auto it = big_->find(k);
      return it == big_->end() ? nullptr : &it->second;
    }
    auto it = lower(k);
    return it != small_.end() && it->first == k ? &it->second : nullptr;
  }
  V* find(Symbol k) { return const_cast<V*>(std::as_const(*this).find(k)); }

  bool contains(Symbol k) const { return find(k) != nullptr; }

  void set(Symbol k, V v) {
    if (big_) {
      (*big_)[k] = std::move(v);
      return;
    }
    auto it = lower(k);
    if (it != small_.end() && it->first == k) {
      it->second = std::move(v);
      return;
    }
    small_.insert(it, {k, std::move(v)});
    if (small_.size() > kThreshold) {
      big_ = std::make_unique<std::map<Symbol, V>>(small_.begin(), small_.end());
      small_.clear();
      small_.shrink_to_fit();
    }
  }

  bool erase(Symbol k) {
    if (big_) return big_->erase(k) > 0;
    auto it = lower(k);
    if (it == small_.end() || it->first != k) return false;
    small_.erase(it);
    return true;
  }

  void clear() {
    small_.clear();
    big_.reset();
  }

  template <class F>
  void for_each(F&& f) const {
    if (big_) {
      for (const auto& [k, v] : *big_) f(k, v);
    } else {
      for (const auto& [k, v] : small_) f(k, v);
    }
  }

  /// Up to `limit` entries with key >= from, in order; returns how many.
  std::size_t from(Symbol k, std::pair<Symbol, V>* out, std::size_t limit) const {
    std::size_t got = 0;
    if (big_) {
      for (auto it = big_->lower_bound(k); it != big_->end() && got < limit; ++it) out[got++] = *it;
    } else {
      for (auto it = lower(k); it != small_.end() && got < limit; ++it) out[got++] = *it;
    }
    return got;
  }

  std::vector<std::pair<Symbol, V>> entries() const {
    std::vector<std::pair<Symbol, V>> out;
    out.reserve(size());
    for_each([&](Symbol k, const V& v) { out.emplace_back(k, v); });
    return out;
  }

 private:
  using Small = std::vector<std::pair<Symbol, V>>;

  typename Small::const_iterator lower(Symbol k) const {
    return std::lower_bound(small_.begin(), small_.end(), k, [](const auto& e, Symbol x) { return e.first < x; });
  }
  typename Small::iterator lower(Symbol k) {
    return std::lower_bound(small_.begin(), small_.end(), k, [](const auto& e, Symbol x) { return e.first < x; });
  }

  Small small_;
  std::unique_ptr<std::map<Symbol, V>> big_;
};

}  // namespace pdawg
