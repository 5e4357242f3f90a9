#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "sqz/combin.hpp"

using namespace sqz;

namespace {

// independent oracle: filter S_n by w^2 = id
int brute_force_involution_count(int n) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  int count = 0;
  do {
    Permutation p(line);
    if (p * p == Permutation(n)) ++count;
  } while (std::next_permutation(line.begin(), line.end()));
  return count;
}

}  // namespace

TEST_SUITE("combin") {

TEST_CASE("involution enumeration counts") {
  CHECK(enumerate_involutions(1).size() == 1);
  auto inv3 = enumerate_involutions(3);
  REQUIRE(inv3.size() == 4);
  CHECK(inv3[0].to_string() == "id");
  CHECK(inv3[1].to_string() == "(1,2)");
  CHECK(inv3[2].to_string() == "(1,3)");
  CHECK(inv3[3].to_string() == "(2,3)");
  for (int n = 1; n <= 7; ++n)
    CHECK(int(enumerate_involutions(n).size()) == brute_force_involution_count(n));
  CHECK(enumerate_involutions(8).size() == 764);
  CHECK(involution_count(8) == 764);
}

TEST_CASE("n_matrix") {
  Involution w(5, {{1, 3}, {2, 4}});
  CHECK(n_matrix(w).entries() == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
  CHECK(n_matrix(Involution::identity(4)).entries().empty());
  CHECK(n_matrix(Involution(2, {{1, 2}})).entries() ==
        std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("orbit dimension formula") {
  CHECK(orbit_dim(Involution(8, {{2, 6}, {4, 7}})) == 8);
  CHECK(orbit_dim(Involution::identity(5)) == 0);
  CHECK(orbit_dim(Involution(7, {{1, 6}, {3, 4}})) == 8);
}

TEST_CASE("orbit dimension via arcs") {
  CHECK(orbit_dim_arcs(Involution(8, {{2, 6}, {4, 7}})) == 8);
  CHECK(orbit_dim_arcs(Involution::identity(5)) == 0);
  CHECK(orbit_dim_arcs(Involution(3, {{1, 3}})) == 1);
  CHECK(orbit_dim(Involution(3, {{1, 3}})) == 1);
}

TEST_CASE("pi_w") {
  CHECK(pi_w(Involution(7, {{1, 6}, {3, 4}})) ==
        Permutation({1, 3, 2, 5, 7, 6, 4}));
  Permutation p = pi_w(Involution(6, {{1, 5}, {2, 6}, {3, 4}}));
  CHECK(p == Permutation({1, 2, 3, 5, 6, 4}));
  CHECK(p.length() == 2);
  CHECK(pi_w(Involution::identity(4)).is_identity());
}

TEST_CASE("length") {
  CHECK(Permutation({1, 3, 2, 5, 7, 6, 4}).length() == 5);
  CHECK(Permutation(6).length() == 0);
  CHECK(Permutation({3, 2, 1}).length() == 3);
}

TEST_CASE("reduced words") {
  CHECK(reduced_word(Permutation(4)).empty());
  CHECK(reduced_word(Permutation::simple(3, 1)) == ReducedWord{1});
  Permutation pi = pi_w(Involution(7, {{1, 6}, {3, 4}}));
  ReducedWord w = reduced_word(pi);
  CHECK(int(w.size()) == pi.length());
  CHECK(word_to_permutation(w, 7) == pi);
  // the paper's choice s2 s6 s4 s5 s6 is another reduced word for the same pi
  CHECK(word_to_permutation({2, 6, 4, 5, 6}, 7) == pi);
}

TEST_CASE("all reduced words of the longest element of S3") {
  auto words = all_reduced_words(Permutation({3, 2, 1}));
  REQUIRE(words.size() == 2);
  CHECK(words[0] == ReducedWord{1, 2, 1});
  CHECK(words[1] == ReducedWord{2, 1, 2});
}

TEST_CASE("conjugation") {
  Involution w(7, {{1, 6}, {3, 4}});
  UpperMatrix start = n_matrix(minimal_involution(7, 2));
  CHECK(conjugate(pi_w(w), start) == n_matrix(w));
  CHECK(conjugate(Permutation(7), start) == start);
  CHECK_THROWS_AS(conjugate(Permutation::simple(2, 1), n_matrix(Involution(2, {{1, 2}}))),
                  NotUpperTriangular);
}

TEST_CASE("minimal involutions") {
  CHECK(minimal_involution(3, 1) == Involution(3, {{1, 3}}));
  CHECK(minimal_involution(4, 2) == Involution(4, {{1, 3}, {2, 4}}));
  CHECK(minimal_involution(5, 0).is_identity());
  CHECK_THROWS_AS(minimal_involution(3, 2), RankTooLarge);
}

TEST_CASE("three conjugators of (15)(26)(34)") {
  Involution w(6, {{1, 5}, {2, 6}, {3, 4}});
  auto sigmas = minimal_conjugators(w);
  REQUIRE(sigmas.size() == 3);
  std::vector<std::string> got;
  for (auto& s : sigmas) {
    CHECK(s.length() == 2);
    got.push_back(s.to_string());
  }
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"1,2,3,5,6,4", "1,3,2,5,4,6", "3,1,2,4,5,6"});
}

TEST_CASE("block flag permutation") {
  CHECK(block_flag_permutation(Involution(6, {{1, 4}, {2, 6}, {3, 5}}), 3) ==
        Permutation({2, 3, 1}));
  // w = (1,n+1)...(n,2n) maps to the longest element
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int k = 1; k <= n; ++k) pairs.emplace_back(k, n + k);
    Permutation p = block_flag_permutation(Involution(2 * n, pairs), n);
    for (int x = 1; x <= n; ++x) CHECK(p.apply(x) == n + 1 - x);
  }
  CHECK(block_flag_permutation(Involution(2, {{1, 2}}), 1) == Permutation(1));
  CHECK_THROWS_AS(block_flag_permutation(Involution(6, {{1, 2}, {3, 4}, {5, 6}}), 3),
                  NotBlockSupported);
}

TEST_CASE("dimension invariants up to n = 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Involution& w : enumerate_involutions(n)) {
      int d = orbit_dim(w);
      CHECK(d == orbit_dim_arcs(w));
      int m = w.rank();
      CHECK(d == pi_w(w).length() + m * (m + 1) / 2);
      CHECK(conjugate(pi_w(w), n_matrix(minimal_involution(n, m))) == n_matrix(w));
    }
  }
}

TEST_CASE("word suffixes preserve upper-triangularity") {
  for (int n = 3; n <= 6; ++n) {
    for (const Involution& w : enumerate_involutions(n)) {
      ReducedWord word = reduced_word(pi_w(w));
      UpperMatrix mat = n_matrix(minimal_involution(n, w.rank()));
      int dim = orbit_dim(minimal_involution(n, w.rank()));
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        mat = conjugate(Permutation::simple(n, *it), mat);  // throws if not upper
        Involution step = mat.to_involution();
        CHECK(orbit_dim(step) == dim + 1);
        dim = orbit_dim(step);
      }
      CHECK(mat == n_matrix(w));
    }
  }
}

TEST_CASE("arc strings") {
  CHECK(arc_string(Involution(8, {{2, 6}, {4, 7}})) == ".a.b.ab.");
  CHECK(arc_string(Involution::identity(3)) == "...");
}

TEST_CASE("involution parsing") {
  CHECK(Involution::parse("(1,2)(3,4)", 4) == Involution(4, {{1, 2}, {3, 4}}));
  CHECK(Involution::parse(" ( 3 , 1 ) ", 3) == Involution(3, {{1, 3}}));  // reversed pair
  CHECK(Involution::parse("id", 5).is_identity());
  CHECK_THROWS_AS(Involution::parse("(1,1)", 3), SizeMismatch);
  CHECK_THROWS_AS(Involution::parse("(1,2)(2,3)", 3), SizeMismatch);
}

}  // TEST_SUITE
