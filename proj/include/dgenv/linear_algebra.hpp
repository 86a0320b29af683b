#pragma once

// Exact sparse row echelon forms.  A row's pivot is its largest key, so
// reduction sweeps keys from the top down and never revisits a key.

#include "dgenv/graded_ring.hpp"

#include <functional>
#include <map>

namespace dgenv {

template <class Key, class Compare = std::less<Key>>
class EchelonBasis {
 public:
  using Vector = std::map<Key, Scalar, Compare>;

  /// Fully reduces v against the stored rows.
  Vector reduce(Vector v) const {
    auto bound = v.end();
    while (bound != v.begin()) {
      auto it = std::prev(bound);
      auto pivot = rows_.find(it->first);
      if (pivot == rows_.end()) {
        bound = it;
        continue;
      }
      const Scalar factor = it->second;
      const Key top = it->first;
      v.erase(it);
      // The pivot entry is 1 and cancels `top`; the rest are smaller keys.
      for (const auto& [k, c] : pivot->second) {
        if (!(Compare{}(k, top))) continue;
        auto [slot, inserted] = v.try_emplace(k, 0);
        slot->second -= factor * c;
        if (slot->second == 0) v.erase(slot);
      }
      bound = v.lower_bound(top);
    }
    return v;
  }

  /// Adds v to the span; returns false when v was already dependent.
  bool insert(Vector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const Scalar inv = 1 / v.rbegin()->second;
    for (auto& [k, c] : v) c *= inv;
    const Key pivot = v.rbegin()->first;
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(const Vector& v) const { return reduce(v).empty(); }
  bool is_pivot(const Key& k) const { return rows_.count(k) != 0; }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<Key, Vector, Compare> rows_;
};

}  // namespace dgenv
