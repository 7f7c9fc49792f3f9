#pragma once

// Exact braid-word algebra for the Artin braid group B_n, with a faithful
// equality oracle via the action on the free group F_n.
//
// Conventions used throughout the project:
//  - Generators sigma_i (1 <= i <= n-1) are counterclockwise halftwists of
//    the adjacent punctures i, i+1.
//  - Words act left to right: in the word w = l1 l2 ... lk the letter l1
//    acts first.  compose(w1, w2) is "w1 then w2".
//  - Equality of words is decided through the (faithful) Artin action on
//    F_n = pi_1 of the n-punctured disk.

#include <cstdint>
#include <string>
#include <vector>

namespace bm {

// One letter sigma_i^sign of a braid word.
struct BraidLetter {
  int index;  // generator index, 1-based, in [1, n-1]
  int sign;   // +1 or -1

  bool operator==(const BraidLetter&) const = default;
};

// A word in the Artin generators of B_n.  Words are never normalized;
// equality goes through the Artin action (see equal()).
struct BraidWord {
  int strand_count = 0;
  std::vector<BraidLetter> letters;

  BraidWord() = default;
  explicit BraidWord(int n) : strand_count(n) {}
  BraidWord(int n, std::vector<BraidLetter> ls);

  void push(int index, int sign);
  std::size_t length() const { return letters.size(); }
};

// Identity braid in B_n.
BraidWord identity_braid(int n);

// Single generator sigma_i^sign in B_n.
BraidWord generator(int n, int index, int sign = +1);

// Concatenation "w1 then w2".  Throws std::invalid_argument on a
// strand-count mismatch.
BraidWord compose(const BraidWord& w1, const BraidWord& w2);

// Reversed list with flipped signs.
BraidWord invert(const BraidWord& w);

// e-fold concatenation (inverted when e < 0).
BraidWord power(const BraidWord& w, int e);

// Sum of letter signs; additive under compose, invariant under conjugation.
long long exponent_sum(const BraidWord& w);

// A freely reduced word in the free group F_n.
struct FreeWord {
  // Letters are (generator index 1..n, sign); the constructor and all
  // mutating helpers keep the word freely reduced.
  std::vector<std::pair<int, int>> letters;

  void push(int index, int sign);
  void push_word(const FreeWord& w);
  FreeWord inverse() const;

  bool operator==(const FreeWord&) const = default;
};

// The image of the n free generators under a braid's Artin action.
struct ArtinAutomorphism {
  std::vector<FreeWord> images;  // images[i-1] = image of x_i

  bool operator==(const ArtinAutomorphism&) const = default;
};

// The standard Artin action:
//   sigma_i:  x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i,  x_k -> x_k.
// Letters of w are applied left to right (first letter first).
ArtinAutomorphism artin_action(const BraidWord& w);

// Exact braid equality via faithfulness of the Artin action.
bool equal(const BraidWord& w1, const BraidWord& w2);

// The permutation induced on puncture positions: result[i-1] is where the
// puncture starting at position i ends up.
std::vector<int> permutation(const BraidWord& w);

// Positive halftwist of the block {k, ..., l}: the 180-degree
// counterclockwise rotation of those punctures.  Standard positive word of
// length (l-k+1)(l-k)/2; block_halftwist(k, k+1, n) = sigma_k.
BraidWord block_halftwist(int k, int l, int n);

// Debug text form: "s3 s4^-1 s3^2".  parse_braid round-trips format_braid.
std::string format_braid(const BraidWord& w);
BraidWord parse_braid(const std::string& text, int n);

}  // namespace bm
