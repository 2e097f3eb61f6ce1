#pragma once

#include <set>
#include <string>
#include <vector>

#include "legch/front.hpp"

namespace legch {

// Monomial in the free noncommutative algebra; the empty word is 1.
using Word = std::vector<Gen>;

int word_degree(const GradedAlphabet& alphabet, const Word& w);

// Z2-formal sum of words. Adding a word that is already present cancels it.
class Chain {
 public:
  Chain() = default;
  Chain(std::initializer_list<Word> words);

  void toggle(const Word& w);
  Chain& operator+=(const Chain& other);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  // Concatenation product, extended bilinearly.
  friend Chain operator*(const Chain& a, const Chain& b);

  bool empty() const { return words_.empty(); }
  std::size_t size() const { return words_.size(); }
  bool contains(const Word& w) const { return words_.count(w) != 0; }
  const std::set<Word>& words() const { return words_; }
  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::set<Word> words_;
};

std::string format_word(const GradedAlphabet& alphabet, const Word& w);
std::string format_chain(const GradedAlphabet& alphabet, const Chain& c);

struct Disk {
  Gen target = 0;
  // Negative corners read counterclockwise from the target: upper boundary
  // right to left, then lower boundary left to right.
  Word corners;
  // Regions (connected components of the front complement) covered.
  std::vector<int> regions;
  std::size_t start_event = 0;
};

// Every admissible disk of the front, for every target, in a fixed order.
std::vector<Disk> enumerate_disks(const FrontDiagram& front);

// Admissible disks with right-most corner at c.
std::vector<Disk> admissible_disks(const FrontDiagram& front, Gen c);

// Number of complement regions; region ids in Disk::regions index into this.
int region_count(const FrontDiagram& front);

class Differential {
 public:
  Differential() = default;
  explicit Differential(std::vector<Chain> images) : images_(std::move(images)) {}

  int size() const { return static_cast<int>(images_.size()); }
  const Chain& operator[](Gen g) const { return images_.at(static_cast<std::size_t>(g)); }
  Chain& at(Gen g) { return images_.at(static_cast<std::size_t>(g)); }

  // Leibniz extension to a single word, with d(1) = 0.
  Chain apply(const Word& w) const;
  Chain apply(const Chain& c) const;

 private:
  std::vector<Chain> images_;
};

// d(crossing) = sum of disk words; d(cusp) = 1 + sum of disk words.
// Throws InternalInconsistency if a word fails the degree-drop check.
Differential differential(const FrontDiagram& front, const GradedAlphabet& alphabet);

// d over Z2 ignoring the grading; available even when r != 0.
Differential ungraded_differential(const FrontDiagram& front);

bool verify_d_squared(const Differential& d);

// Words with at most one factor of nonzero degree; the rest never survive an
// augmentation.
Chain suppress_multi_nonzero(const GradedAlphabet& alphabet, const Chain& c);

}  // namespace legch
