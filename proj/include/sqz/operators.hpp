#pragma once

#include "sqz/combin.hpp"
#include "sqz/ring.hpp"

namespace sqz {

enum class Theory { Cohomology, KTheory };
enum class UMode { Keep, Zero, One };

// The four Hecke-type operators: beta_i and beta_i^K drive fundamental
// classes, A_i and A_i^K drive CSM and motivic Chern classes.
enum class OperatorKind { BetaH, BetaK, A_H, A_K };

struct TheoryContext {
  Theory theory = Theory::Cohomology;
  UMode u_mode = UMode::Keep;
  VarContext vars;

  static TheoryContext cohomology(int n, UMode u = UMode::Keep);
  static TheoryContext ktheory(int n, UMode u = UMode::Keep);
  void validate() const;
};

std::string theory_name(Theory t);
std::string u_mode_name(UMode u);

// beta_i(x) = x/(t_{i+1}-t_i) + s_i(x)/(t_i-t_{i+1}) = -divided difference
RatFunc beta_h(const RatFunc& x, int i);
// beta_i^K(x) = (t_{i+1} x - t_i s_i(x)) / (t_{i+1} - t_i)
RatFunc beta_k(const RatFunc& x, int i);
// A_i(x) = x/(t_{i+1}-t_i) + (1+t_i-t_{i+1})/(t_i-t_{i+1}) s_i(x)
RatFunc a_h(const RatFunc& x, int i);
// A_i^K(x) = (1+y)(t_i/t_{i+1})/(1-t_i/t_{i+1}) x
//          + (1+y t_{i+1}/t_i)/(1-t_{i+1}/t_i) s_i(x)
RatFunc a_k(const RatFunc& x, int i);

RatFunc apply_op(OperatorKind kind, const RatFunc& x, int i);

// First letter outermost: op_{a_1}(op_{a_2}(... op_{a_l}(x)))
RatFunc apply_word(const ReducedWord& word, const RatFunc& x, OperatorKind kind);

// s_i of the t-variables as a one-line permutation
std::vector<int> simple_swap(int n, int i);
RatFunc act_simple(const RatFunc& x, int i);

}  // namespace sqz
