#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rhombic/error.hpp"

namespace rhombic {

/// Element of S_n in one-line notation, 1-indexed: w(i) = values()[i - 1].
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
      if (v < 1 || v > size() || seen[v]) {
        throw InvalidInput("not a permutation of 1.." + std::to_string(size()));
      }
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  /// n, n-1, ..., 1
  static Permutation longest(int n) {
    std::vector<int> v(n);
    std::iota(v.rbegin(), v.rend(), 1);
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[i - 1]; }
  std::span<const int> values() const { return values_; }

  Permutation inverse() const {
    std::vector<int> inv(values_.size());
    for (int i = 0; i < size(); ++i) inv[values_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i) {
      if (values_[i] != i + 1) return false;
    }
    return true;
  }

  /// Coxeter length, the number of inversions.
  int length() const {
    int count = 0;
    for (int i = 0; i < size(); ++i) {
      for (int j = i + 1; j < size(); ++j) count += values_[i] > values_[j];
    }
    return count;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// A word in the simple transpositions s_1, ..., s_{n-1}.
class Word {
 public:
  Word() = default;

  Word(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
    if (n < 1) throw InvalidInput("word rank must be positive");
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      if (letters_[k] < 1 || letters_[k] >= n) {
        throw InvalidInput("letter " + std::to_string(letters_[k]) + " at position " +
                           std::to_string(k + 1) + " outside 1.." + std::to_string(n - 1));
      }
    }
  }

  int rank() const { return n_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  int operator[](std::size_t k) const { return letters_[k]; }

  Word appended(int letter) const {
    Word out = *this;
    out.letters_.push_back(letter);
    return out;
  }

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  int n_ = 1;
  std::vector<int> letters_;
};

/// Value pairs (a, b), a < b, with b appearing before a in one-line notation.
using InversionSet = std::set<std::pair<int, int>>;

inline InversionSet inversions(const Permutation& w) {
  InversionSet out;
  const auto v = w.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) out.emplace(v[j], v[i]);
    }
  }
  return out;
}

/// Right multiplication by s_i: exchanges the entries in positions i and i+1.
inline Permutation apply_simple(const Permutation& u, int i) {
  if (i < 1 || i >= u.size()) {
    throw InvalidInput("letter " + std::to_string(i) + " outside 1.." +
                       std::to_string(u.size() - 1));
  }
  std::vector<int> v(u.values().begin(), u.values().end());
  std::swap(v[i - 1], v[i]);
  return Permutation(std::move(v));
}

struct Evaluation {
  Permutation permutation;
  bool is_reduced = true;
};

inline Evaluation evaluate(const Word& word) {
  std::vector<int> u(word.rank());
  std::iota(u.begin(), u.end(), 1);
  bool reduced = true;
  for (int i : word.letters()) {
    if (u[i - 1] > u[i]) reduced = false;
    std::swap(u[i - 1], u[i]);
  }
  return {Permutation(std::move(u)), reduced};
}

namespace detail {

inline bool extend_pattern(std::span<const int> w, std::span<const int> p, std::size_t start,
                           std::vector<int>& chosen) {
  const std::size_t k = chosen.size();
  if (k == p.size()) return true;
  if (w.size() - start < p.size() - k) return false;
  for (std::size_t pos = start; pos < w.size(); ++pos) {
    bool consistent = true;
    for (std::size_t j = 0; j < k && consistent; ++j) {
      consistent = (w[chosen[j]] < w[pos]) == (p[j] < p[k]);
    }
    if (!consistent) continue;
    chosen.push_back(static_cast<int>(pos));
    if (extend_pattern(w, p, pos + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// True iff some subsequence of w is order-isomorphic to p.
inline bool contains_pattern(const Permutation& w, const Permutation& p) {
  if (p.size() > w.size()) throw InvalidInput("pattern longer than permutation");
  std::vector<int> chosen;
  chosen.reserve(p.size());
  return detail::extend_pattern(w.values(), p.values(), 0, chosen);
}

/// Right weak order: inversions(u) is a subset of inversions(w).
inline bool weak_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw InvalidInput("rank mismatch in weak order comparison");
  const InversionSet iu = inversions(u);
  const InversionSet iw = inversions(w);
  return std::includes(iw.begin(), iw.end(), iu.begin(), iu.end());
}

/// Strong Bruhat order via the dominance (rank matrix) criterion.
inline bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw InvalidInput("rank mismatch in Bruhat comparison");
  const int n = u.size();
  // at_least[j] = #{k <= i : x(k) >= j}, maintained as i advances.
  std::vector<int> cu(n + 2, 0), cw(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= u(i); ++j) ++cu[j];
    for (int j = 1; j <= w(i); ++j) ++cw[j];
    for (int j = 1; j <= n; ++j) {
      if (cu[j] > cw[j]) return false;
    }
  }
  return true;
}

/// Digit string for n <= 9 ("7456312"), comma-separated otherwise.
inline std::string format_permutation(const Permutation& w) {
  std::string out;
  for (int i = 1; i <= w.size(); ++i) {
    if (w.size() > 9 && i > 1) out += ',';
    out += std::to_string(w(i));
  }
  return out;
}

inline std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(word[k]);
  }
  return out;
}

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token = text.substr(pos, comma - pos);
    if (token.empty() || token.size() > 9 ||
        !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw InvalidInput(std::string("malformed ") + what + ": '" + text + "'");
    }
    out.push_back(std::stoi(token));
    pos = comma + 1;
  }
  return out;
}

}  // namespace detail

inline Permutation parse_permutation(const std::string& text) {
  if (text.empty()) throw InvalidInput("empty permutation");
  if (text.find(',') != std::string::npos) {
    return Permutation(detail::parse_int_list(text, "permutation"));
  }
  std::vector<int> v;
  for (char c : text) {
    if (c < '1' || c > '9') throw InvalidInput("malformed permutation: '" + text + "'");
    v.push_back(c - '0');
  }
  return Permutation(std::move(v));
}

/// Comma-separated letters; n defaults to one more than the largest letter.
inline Word parse_word(const std::string& text, int n = 0) {
  std::vector<int> letters;
  if (!text.empty()) letters = detail::parse_int_list(text, "word");
  if (n == 0) n = letters.empty() ? 1 : *std::max_element(letters.begin(), letters.end()) + 1;
  return Word(n, std::move(letters));
}

/// All permutations of S_n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace rhombic
