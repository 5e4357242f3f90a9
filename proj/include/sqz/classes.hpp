#pragma once

#include <string>
#include <vector>

#include "sqz/combin.hpp"
#include "sqz/operators.hpp"
#include "sqz/ring.hpp"

namespace sqz {

enum class ClassKind { Fundamental, Csm, MotivicChern };

std::string kind_name(ClassKind k);
OperatorKind op_for(Theory theory, ClassKind kind);

// One coordinate weight u t_i/t_j of N presented as an honest polynomial
// atom together with the Laurent monomial it was cleared by:
// e(u t_i/t_j) = atom * x^mono.
struct WeightFactor {
  LaurentPoly atom;
  Exps mono;
};
WeightFactor euler_weight(const TheoryContext& tc, int i, int j);

// e(N) as a factor list (honest atoms; the monomial part is returned
// separately through euler_class).
FactorList euler_factors(int n, const TheoryContext& tc);
// Expanded Euler class of N: prod_{i<j} e(u t_i/t_j).
LaurentPoly euler_class(int n, const TheoryContext& tc);

// [X_{w_m}]/e(N) = prod over the region {(i,j): i<=m, n-m+i<=j<=n}
RatFunc base_fundamental(int n, int m, const TheoryContext& tc);
// c_SM resp. mC of the minimal orbit divided by e(N): off-anti-diagonal
// factors c/e, anti-diagonal factors c/e - 1.
RatFunc base_characteristic(int n, int m, const TheoryContext& tc);

struct ClassResult {
  Involution w;
  Theory theory = Theory::Cohomology;
  UMode u_mode = UMode::Keep;
  ClassKind kind = ClassKind::Fundamental;
  ReducedWord word;
  RatFunc normalized;  // value / e(N)
  LaurentPoly value;   // the class, a (Laurent) polynomial
  int dim = 0;
  int codim = 0;
};

// Word = reduced_word(pi_w(w)).  Throws NotDivisible if polynomiality
// fails (an implementation bug by Theorem 4.2/5.1).
ClassResult compute_class(const Involution& w, const TheoryContext& tc, ClassKind kind);
// Any valid driver word: its suffixes must conjugate N_{w_m} up to N_w
// through upper-triangular matrices and its length must match dim O_w.
ClassResult compute_class(const Involution& w, const TheoryContext& tc, ClassKind kind,
                          const ReducedWord& word);

// The word-applied base class without the e(N) expansion step; cheap, used
// by the block pipelines where e(N) would be large.
RatFunc normalized_class(const Involution& w, const TheoryContext& tc, ClassKind kind);
RatFunc normalized_class(const Involution& w, const TheoryContext& tc, ClassKind kind,
                         const ReducedWord& word);

// Independent oracle: sum of reciprocal tangent Euler classes over the 2^l
// subword fixed points of the Bott-Samelson-type resolution driven by
// `word` over the rank-m base.  Equals the normalized fundamental class.
RatFunc localization_pushforward(const ReducedWord& word, int n, int m,
                                 const TheoryContext& tc, int jobs = 0);
// Serial reference implementation kept for testing and benchmarking.
RatFunc localization_pushforward_serial(const ReducedWord& word, int n, int m,
                                        const TheoryContext& tc);

// Homogeneous component of degree codim (H-theory CSM results only).
LaurentPoly csm_lowest_part(const ClassResult& r);

std::string class_to_text(const ClassResult& r);
std::string class_to_json(const ClassResult& r);
std::string class_to_latex(const ClassResult& r);
std::string poly_to_json(const LaurentPoly& p);

}  // namespace sqz
