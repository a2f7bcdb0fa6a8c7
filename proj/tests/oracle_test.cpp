#include <gtest/gtest.h>

#include "rhombic/oracle.hpp"

namespace rhombic {
namespace {

Permutation P(const char* s) { return parse_permutation(s); }

TEST(Oracle, ReducedWords) {
  EXPECT_EQ(reduced_words(P("321")), (std::set<Word>{Word(3, {1, 2, 1}), Word(3, {2, 1, 2})}));
  // Staircase (3,2,1) has 6!/(5*3*3) = 16 standard tableaux.
  EXPECT_EQ(reduced_words(P("4321")).size(), 16u);
  EXPECT_EQ(reduced_words(P("1234")), (std::set<Word>{Word(4, {})}));
}

TEST(Oracle, ReducedWordsAreReducedWordsOfW) {
  for (const Permutation& w : all_permutations(4)) {
    for (const Word& word : reduced_words(w)) {
      EXPECT_EQ(static_cast<int>(word.size()), w.length());
      const auto e = evaluate(word);
      EXPECT_EQ(e.permutation, w);
      EXPECT_TRUE(e.is_reduced);
    }
  }
}

TEST(Oracle, CommutationClasses) {
  const auto c321 = commutation_classes(P("321"));
  ASSERT_EQ(c321.size(), 2u);
  for (const auto& c : c321) EXPECT_EQ(c.members.size(), 1u);

  EXPECT_EQ(commutation_classes(P("4321")).size(), 8u);

  const Word first = parse_word("3,4,2,5,6,5,3,4,3,2,1,5,2,3,6,4,5", 7);
  const Word second = parse_word("3,4,2,5,6,5,3,4,3,2,1,5,2,6,3,4,5", 7);
  EXPECT_TRUE(commutation_closure(first).contains(second));
}

TEST(Oracle, ClassesPartitionReducedWords) {
  for (const Permutation& w : all_permutations(4)) {
    const auto words = reduced_words(w);
    const auto classes = commutation_classes(w);
    std::set<Word> seen;
    std::size_t total = 0;
    for (const auto& c : classes) {
      EXPECT_EQ(c.representative, *c.members.begin());
      EXPECT_EQ(commutation_closure(*c.members.rbegin()), c.members);
      total += c.members.size();
      seen.insert(c.members.begin(), c.members.end());
    }
    EXPECT_EQ(total, seen.size());
    EXPECT_EQ(seen, words);
    EXPECT_GE(words.size(), classes.size());
    EXPECT_GE(classes.size(), 1u);
  }
}

TEST(Oracle, Guard) {
  EXPECT_THROW(reduced_words(Permutation::longest(8)), GuardExceeded);
}

}  // namespace
}  // namespace rhombic
