// Copyright 2026 The Symket Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMKET_TERM_MAP_H
#define SYMKET_TERM_MAP_H

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symket/scalar.h"

namespace symket {

/// Insertion-ordered map from a keyed term to its simplified, non-zero coefficient.
/// `Key` must expose `const std::string &key() const`.
template <typename Key>
class TermMap {
   public:
    using value_type = std::pair<Key, Scalar>;

    auto begin() const {
        return items_.begin();
    }
    auto end() const {
        return items_.end();
    }
    size_t size() const {
        return items_.size();
    }
    bool empty() const {
        return items_.empty();
    }
    const value_type &front() const {
        return items_.front();
    }

    const Scalar *find(const Key &k) const {
        auto it = index_.find(k.key());
        return it == index_.end() ? nullptr : &items_[it->second].second;
    }

    /// Adds `coefficient` to the entry for `k`; the entry disappears if the sum simplifies to zero.
    void add(const Key &k, const Scalar &coefficient) {
        auto it = index_.find(k.key());
        if (it == index_.end()) {
            Scalar c = simplify(coefficient);
            if (!c.is_zero()) {
                index_.emplace(k.key(), items_.size());
                items_.emplace_back(k, std::move(c));
            }
            return;
        }
        size_t pos = it->second;
        Scalar merged = simplify(items_[pos].second + coefficient);
        if (!merged.is_zero()) {
            items_[pos].second = std::move(merged);
            return;
        }
        items_.erase(items_.begin() + static_cast<std::ptrdiff_t>(pos));
        index_.erase(it);
        for (auto &[name, idx] : index_) {
            if (idx > pos) {
                idx--;
            }
        }
    }

   private:
    std::vector<value_type> items_;
    std::unordered_map<std::string, size_t> index_;
};

}  // namespace symket

#endif
