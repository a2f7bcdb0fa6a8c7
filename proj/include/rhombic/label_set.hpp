#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "rhombic/error.hpp"

namespace rhombic {

/// A subset of {1, ..., n} with n <= 64.
///
/// Tiling vertices are identified by label sets: the vertex reached from C^0
/// by walking along edges labeled i1, i2, ... is {i1, i2, ...}, and its
/// dimension is the cardinality. Ordering is lexicographic on the ascending
/// member lists, which is also the order used for canonical serialization.
class LabelSet {
 public:
  static constexpr int kMaxLabel = 64;

  constexpr LabelSet() = default;

  LabelSet(std::initializer_list<int> labels) {
    for (int label : labels) insert(label);
  }

  static LabelSet from_mask(std::uint64_t mask) {
    LabelSet s;
    s.mask_ = mask;
    return s;
  }

  /// {1, ..., j}
  static LabelSet prefix(int j) {
    check(j == 0 ? 1 : j);
    LabelSet s;
    s.mask_ = j == kMaxLabel ? ~std::uint64_t{0} : (std::uint64_t{1} << j) - 1;
    return s;
  }

  template <typename Range>
  static LabelSet of(const Range& labels) {
    LabelSet s;
    for (int label : labels) s.insert(label);
    return s;
  }

  bool contains(int label) const {
    return label >= 1 && label <= kMaxLabel && (mask_ >> (label - 1)) & 1u;
  }

  void insert(int label) {
    check(label);
    mask_ |= bit(label);
  }

  void erase(int label) {
    check(label);
    mask_ &= ~bit(label);
  }

  LabelSet with(int label) const {
    LabelSet s = *this;
    s.insert(label);
    return s;
  }

  LabelSet without(int label) const {
    LabelSet s = *this;
    s.erase(label);
    return s;
  }

  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  std::uint64_t mask() const { return mask_; }

  /// Largest member, or 0 if empty.
  int max() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }

  bool subset_of(LabelSet other) const { return (mask_ & ~other.mask_) == 0; }
  bool disjoint(LabelSet other) const { return (mask_ & other.mask_) == 0; }

  friend LabelSet operator|(LabelSet a, LabelSet b) { return from_mask(a.mask_ | b.mask_); }
  friend LabelSet operator&(LabelSet a, LabelSet b) { return from_mask(a.mask_ & b.mask_); }
  friend LabelSet operator-(LabelSet a, LabelSet b) { return from_mask(a.mask_ & ~b.mask_); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  friend bool operator==(LabelSet a, LabelSet b) { return a.mask_ == b.mask_; }

  friend std::strong_ordering operator<=>(LabelSet a, LabelSet b) {
    const std::uint64_t diff = a.mask_ ^ b.mask_;
    if (diff == 0) return std::strong_ordering::equal;
    // The member lists agree below the lowest differing label d. The set that
    // holds d continues with d; the other continues with something larger, or
    // has ended and is therefore a proper prefix.
    const std::uint64_t low = diff & -diff;
    const std::uint64_t above = ~((low << 1) - 1);
    if (a.mask_ & low) {
      return (b.mask_ & above) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return (a.mask_ & above) ? std::strong_ordering::greater : std::strong_ordering::less;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int m : members()) {
      if (!first) out += ',';
      out += std::to_string(m);
      first = false;
    }
    return out + "}";
  }

 private:
  static std::uint64_t bit(int label) { return std::uint64_t{1} << (label - 1); }

  static void check(int label) {
    if (label < 1 || label > kMaxLabel) {
      throw InvalidInput("label " + std::to_string(label) + " outside 1.." +
                         std::to_string(kMaxLabel));
    }
  }

  std::uint64_t mask_ = 0;
};

}  // namespace rhombic
