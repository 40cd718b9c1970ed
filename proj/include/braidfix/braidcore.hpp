#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidfix {

/// Raised when braid text cannot be parsed; the message names the bad token.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation's precondition on its mathematical input fails.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A word in the braid group B_n. Letter g = i stands for sigma_i and
/// g = -i for its inverse, with 1 <= |g| <= strands - 1. Words are kept
/// unreduced; two words are never compared as group elements.
class BraidWord {
public:
  BraidWord() = default;
  /// Throws DomainError if strands < 1 or any letter is out of range.
  BraidWord(int strands, std::vector<int> letters);

  int strands() const noexcept { return strands_; }
  const std::vector<int> &letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const BraidWord &, const BraidWord &) = default;

private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// Parses whitespace separated nonzero integers. Without an explicit strand
/// count the braid lives in B_{max|g|+1}.
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);

/// Inverse of parse_braid: letters joined by single spaces.
std::string format_braid(const BraidWord &b);

BraidWord concat(const BraidWord &a, const BraidWord &b);
BraidWord inverse(const BraidWord &b);
/// Flips every crossing (closure becomes the mirror image).
BraidWord mirror(const BraidWord &b);

/// Bijection on {0..n-1}; image[k] is the end position of the strand that
/// starts at position k.
struct Permutation {
  std::vector<int> image;

  std::size_t size() const noexcept { return image.size(); }
  bool is_identity() const noexcept;
  /// Cycle lengths in non-increasing order.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
};

Permutation permutation(const BraidWord &b);

/// True iff the closure of b has one component.
bool is_knot_closure(const BraidWord &b);

/// Human readable cycle structure, e.g. "(2)(1)".
std::string describe_cycles(const Permutation &p);

/// One syllable x_gen^exp of a free group word; gen is 1-based.
struct FreeLetter {
  int gen = 1;
  int exp = 1;
  friend bool operator==(const FreeLetter &, const FreeLetter &) = default;
};

/// Freely reduced word over x_1, x_2, ...
class FreeWord {
public:
  FreeWord() = default;
  explicit FreeWord(std::vector<FreeLetter> letters);

  static FreeWord generator(int gen, int exp = 1);
  /// x_1 x_2 ... x_n
  static FreeWord boundary_word(int n);

  const std::vector<FreeLetter> &letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  int max_generator() const noexcept;

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord &rhs) const;
  std::string to_string() const;

  friend bool operator==(const FreeWord &, const FreeWord &) = default;

private:
  void push(FreeLetter l);
  std::vector<FreeLetter> letters_;
};

/// Applies the automorphism of F_n induced by b, where sigma_i sends
/// x_i -> x_i x_{i+1} x_i^-1 and x_{i+1} -> x_i. The letters of b compose so
/// that evaluating the result on (X_1..X_n) equals hurwitz(b, X).
FreeWord free_action(const BraidWord &b, const FreeWord &w);

/// xi^-1 * b * xi, concatenated without reduction.
BraidWord markov_conjugate(const BraidWord &b, const BraidWord &xi);

enum class StabilizeSide { left, right };

/// Adds a strand and the letter sigma_n^sign. Left multiplication is the
/// default; the right-hand variant exists for experiments only.
BraidWord markov_stabilize(const BraidWord &b, int sign,
                           StabilizeSide side = StabilizeSide::left);

/// Split of a word b = head * sigma_{n-1}^sign * tail around its only letter
/// in the last column.
struct Destabilization {
  BraidWord head;
  int sign = 1;
  BraidWord tail;
  /// tail * head in B_{n-1}
  BraidWord result;
};

/// Only words with exactly one letter of column n-1 are destabilized.
std::optional<Destabilization> markov_destabilize(const BraidWord &b);

} // namespace braidfix
