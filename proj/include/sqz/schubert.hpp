#pragma once

#include <string>
#include <vector>

#include "sqz/classes.hpp"

namespace sqz {

// Block engines live on 2n t-slots with x_i = slot i and y_j = slot n+j
// (after the substitution t_i = x_{n+1-i}, t_{n+j} = y_j).
VarContext schubert_ctx(int n);      // cohomology side, honest polynomials
VarContext grothendieck_ctx(int n);  // K side, Laurent
VarNames schubert_names(const VarContext& ctx, int n, bool latex = false);

struct DoubleSchubert {
  Permutation perm;
  LaurentPoly poly;
};

struct Grothendieck {
  Permutation perm;
  LaurentPoly poly;
};

// Inductive double Schubert polynomials: longest element gets
// prod_{i+j<=n}(x_i - y_j), shorter ones by peeling descents with d^x_i.
DoubleSchubert double_schubert(const Permutation& pi);

// Grothendieck polynomials by the isobaric recursion.  `eq_convention`
// selects the longest-element product over i+j = n instead of i+j <= n
// (the printed variant); verify_grothendieck_block adjudicates.
Grothendieck grothendieck(const Permutation& pi, bool eq_convention = false);

LaurentPoly divided_difference_x(const LaurentPoly& f, int i, int n_block);
LaurentPoly divided_difference_y(const LaurentPoly& f, int i, int n_block);
LaurentPoly isobaric_x(const LaurentPoly& f, int i, int n_block);

// Rename t-variables into block variables: t_i -> x_{n+1-i}, t_{n+j} -> y_j.
LaurentPoly block_substitution(const LaurentPoly& p, int n_block);

// e(Hom(C^n,C^n)) * [X_w]/e(N) with u specialized (0 in H, 1 in K),
// computed through the operator pipeline; the result is a polynomial in the
// block context.  Throws MiddleReflectionInBlockMode if the word touches
// the middle reflection s_n.
LaurentPoly block_class(const Involution& w, int n_block, Theory theory);
LaurentPoly block_class(const Involution& w, int n_block, Theory theory,
                        const ReducedWord& word);

// All rank-n involutions supported in the upper-right block of Inv_{2n}.
std::vector<Involution> full_rank_block_involutions(int n_block);

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckResult> cases;
  bool pass() const;
  void add(std::string name, bool ok, std::string detail = "");
};

// Prop 6.2: block classes equal double Schubert polynomials.
CheckReport verify_schubert_block(int n);
// Prop 6.3; also adjudicates the longest-element convention.
CheckReport verify_grothendieck_block(int n);

// Porteous determinant for the rank-one locus of the (i,j) corner,
// expanded in t-variables (u -> 0 cohomology context on n variables).
LaurentPoly porteous_class(int i, int j, int n);

// e(N_{i,j}) factors: (t_r - t_s) for r <= i, s >= j.
FactorList corner_euler_factors(int i, int j, int n, const VarContext& ctx);

// Walk words from the corner (1,n) down/left to (i,j).
ReducedWord walk_word_rows_first(int i, int j, int n);
ReducedWord walk_word_cols_first(int i, int j, int n);

// Porteous vs beta-pipeline for all transpositions, walk recursions, and
// the two printed n=8 checks.
CheckReport verify_porteous(int n);

// Eq. (mnoz_w_P1) and the printed boundary-class identity in N_6.
CheckReport boundary_identity_checks();

}  // namespace sqz
