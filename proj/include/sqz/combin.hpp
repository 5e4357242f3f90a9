#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sqz/errors.hpp"

namespace sqz {

// Permutation of {1..n} in one-line notation: apply(k) = one_line[k-1].
// Composition convention: (sigma*tau)(x) = sigma(tau(x)); a word
// s_{a1}...s_{al} applies s_{al} first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  explicit Permutation(std::vector<int> one_line);

  static Permutation simple(int n, int i);  // s_i in S_n

  int size() const { return int(line_.size()); }
  int apply(int x) const { return line_[x - 1]; }
  const std::vector<int>& one_line() const { return line_; }

  Permutation operator*(const Permutation& o) const;  // (*this)(o(x))
  Permutation inverse() const;
  bool operator==(const Permutation&) const = default;
  bool is_identity() const;

  int length() const;  // inversion count
  std::vector<int> descents() const;  // positions i with pi(i) > pi(i+1)

  std::string to_string() const;  // comma-separated one-line
  static Permutation parse(const std::string& text, int n = 0);

 private:
  std::vector<int> line_;
};

using ReducedWord = std::vector<int>;

Permutation word_to_permutation(const ReducedWord& word, int n);
std::string word_to_string(const ReducedWord& word);
ReducedWord parse_word(const std::string& text);

// A word of length l(pi) with product pi; deterministic
// (repeatedly peels the smallest descent).
ReducedWord reduced_word(const Permutation& pi);

// All reduced words of pi, in a deterministic order, up to `cap` many.
std::vector<ReducedWord> all_reduced_words(const Permutation& pi,
                                           std::size_t cap = SIZE_MAX);

// Involution in S_n as disjoint transpositions (i_k, j_k), i_k < j_k,
// stored with i_1 < i_2 < ... < i_m.
class Involution {
 public:
  Involution() = default;
  Involution(int n, std::vector<std::pair<int, int>> pairs);

  static Involution identity(int n) { return Involution(n, {}); }

  int n() const { return n_; }
  int rank() const { return int(pairs_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  bool is_identity() const { return pairs_.empty(); }
  std::vector<int> fixed_points() const;

  Permutation as_permutation() const;

  bool operator==(const Involution&) const = default;

  std::string to_string() const;  // "(1,3)(2,4)" or "id"
  static Involution parse(const std::string& text, int n);

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> pairs_;
};

// Strictly upper-triangular 0/1 matrix as a sorted set of positions.
class UpperMatrix {
 public:
  UpperMatrix() = default;
  UpperMatrix(int n, std::vector<std::pair<int, int>> entries);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& entries() const { return entries_; }
  bool operator==(const UpperMatrix&) const = default;

  // Entries must form a partial matching with no composable pairs
  // (square-zero); throws otherwise.
  Involution to_involution() const;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> entries_;
};

// N_w: the strictly upper part of the permutation matrix of w.
UpperMatrix n_matrix(const Involution& w);

// dim O_w = mn + sum(i_k - j_k) - sum_{k>=2} r_k(w).
int orbit_dim(const Involution& w);

// Arc-diagram rule: m(n-m) - #crossings - sum over fixed points of the
// number of arcs passing over the point.
int orbit_dim_arcs(const Involution& w);

// One-line i_1..i_m, fixed points ascending, j_1..j_m.
Permutation pi_w(const Involution& w);

int length(const Permutation& pi);

// Position (i,j) maps to (sigma(i), sigma(j)); throws NotUpperTriangular.
UpperMatrix conjugate(const Permutation& sigma, const UpperMatrix& m);

// w_m = (1,n-m+1)(2,n-m+2)...(m,n); throws RankTooLarge when 2m > n.
Involution minimal_involution(int n, int m);

// All sigma with sigma . N_{w_m} = N_w and l(sigma) = l(pi_w)
// (brute force over S_n).
std::vector<Permutation> minimal_conjugators(const Involution& w);

// All involutions of S_n, ordered by (rank, pairs lexicographic).
std::vector<Involution> enumerate_involutions(int n);

// Number of involutions in S_n via I(n) = I(n-1) + (n-1) I(n-2);
// independent of the enumeration.
long long involution_count(int n);

// Flag permutation of a full-rank involution supported in the upper-right
// n x n block of a 2n x 2n matrix (reverse the block's rows; the result is
// the matrix of pi_w^{-1}).  Throws NotBlockSupported.
Permutation block_flag_permutation(const Involution& w, int n_block);

// Arc diagram as text: paired positions share a letter, fixed points are
// dots, e.g. ".a.b.a.b" for (2,6)(4,7) in S_8.
std::string arc_string(const Involution& w);

}  // namespace sqz
