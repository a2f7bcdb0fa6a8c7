#pragma once

// Brute-force reduced word enumeration and commutation classes. Used as ground
// truth for the tiling bijection; exponential, so guarded by length.

#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "rhombic/error.hpp"
#include "rhombic/permutation.hpp"

namespace rhombic {

struct CommutationClass {
  Word representative;  // lexicographically least member
  std::set<Word> members;
};

namespace detail {

inline void check_enumeration_guard(const Permutation& w) {
  if (w.length() > kMaxEnumerationLength) {
    throw GuardExceeded("length " + std::to_string(w.length()) + " exceeds enumeration limit " +
                        std::to_string(kMaxEnumerationLength));
  }
}

inline const std::vector<std::vector<int>>& reduced_letter_lists(
    const Permutation& w, std::map<Permutation, std::vector<std::vector<int>>>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  std::vector<std::vector<int>> out;
  if (w.is_identity()) {
    out.emplace_back();
  } else {
    for (int i = 1; i < w.size(); ++i) {
      if (w(i) < w(i + 1)) continue;
      // i is a right descent: every reduced word of w s_i extends by i.
      for (const auto& prefix : reduced_letter_lists(apply_simple(w, i), memo)) {
        auto word = prefix;
        word.push_back(i);
        out.push_back(std::move(word));
      }
    }
  }
  return memo.emplace(w, std::move(out)).first->second;
}

}  // namespace detail

inline std::set<Word> reduced_words(const Permutation& w) {
  detail::check_enumeration_guard(w);
  std::map<Permutation, std::vector<std::vector<int>>> memo;
  std::set<Word> out;
  for (const auto& letters : detail::reduced_letter_lists(w, memo)) out.emplace(w.size(), letters);
  return out;
}

/// All words reachable from `start` by swapping adjacent letters i, j, |i - j| > 1.
inline std::set<Word> commutation_closure(const Word& start) {
  std::set<Word> seen{start};
  std::deque<Word> queue{start};
  while (!queue.empty()) {
    const Word current = queue.front();
    queue.pop_front();
    std::vector<int> letters(current.letters().begin(), current.letters().end());
    for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
      if (std::abs(letters[k] - letters[k + 1]) <= 1) continue;
      std::swap(letters[k], letters[k + 1]);
      Word next(current.rank(), letters);
      if (seen.insert(next).second) queue.push_back(std::move(next));
      std::swap(letters[k], letters[k + 1]);
    }
  }
  return seen;
}

/// Partition of reduced_words(w), ordered by representative.
inline std::vector<CommutationClass> commutation_classes(const Permutation& w) {
  std::set<Word> remaining = reduced_words(w);
  std::vector<CommutationClass> out;
  while (!remaining.empty()) {
    // The smallest remaining word is the least member of its own class.
    const Word representative = *remaining.begin();
    std::set<Word> members = commutation_closure(representative);
    for (const Word& member : members) remaining.erase(member);
    out.push_back({representative, std::move(members)});
  }
  return out;
}

}  // namespace rhombic
