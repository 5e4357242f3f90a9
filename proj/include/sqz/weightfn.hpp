#pragma once

#include "sqz/schubert.hpp"

namespace sqz {

// The section-7 pipeline lives on 2n-1 t-slots: z_i = slot i (i <= n),
// gamma_j = slot n+j (j <= n-1), u specialized to 1.
VarContext weight_ctx(int n);
VarNames weight_names(const VarContext& ctx, int n, bool latex = false);
TheoryContext weight_theory(int n);

// w_tau in Inv_{2n-1}: pairs (tau(j), n+j) for j <= n-1.
Involution tau_to_involution(const Permutation& tau, int n);

// mC(O_{w_tau} inside Hom(C^{n-1}, C^n)): the normalized motivic Chern
// class multiplied by e^K(Hom), u -> 1.  A Laurent polynomial.
RatFunc mc_hom_orbit(const Permutation& tau, int n);

// lambda_y(b_{n-1}) = prod_{i<=j<=n-1} (1 + y gamma_j/gamma_i)
RatFunc borel_lambda_y(int n);
FactorList borel_lambda_factors(int n, Exps* mono);

struct WeightFunction {
  Permutation tau;
  RatFunc value;  // in z/gamma/y variables
};

// W~_tau = mc_hom_orbit / lambda_y(b_{n-1})
WeightFunction weight_function(const Permutation& tau, int n);

// Eq. (rtv-rec) for every covering pair, plus the identification with the
// A^K recursion.
CheckReport verify_rtv_recursion(int n);

}  // namespace sqz
