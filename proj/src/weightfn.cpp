#include "sqz/weightfn.hpp"

#include <algorithm>
#include <numeric>

namespace sqz {

VarContext weight_ctx(int n) { return VarContext{2 * n - 1, false, true, true}; }

VarNames weight_names(const VarContext& ctx, int n, bool latex) {
  VarNames vn = VarNames::standard(ctx);
  for (int i = 1; i <= n; ++i)
    vn.names[ctx.t_slot(i)] =
        latex ? "z_{" + std::to_string(i) + "}" : "z" + std::to_string(i);
  for (int j = 1; j < n; ++j)
    vn.names[ctx.t_slot(n + j)] =
        latex ? "\\gamma_{" + std::to_string(j) + "}" : "g" + std::to_string(j);
  return vn;
}

TheoryContext weight_theory(int n) {
  TheoryContext tc;
  tc.theory = Theory::KTheory;
  tc.u_mode = UMode::One;
  tc.vars = weight_ctx(n);
  return tc;
}

Involution tau_to_involution(const Permutation& tau, int n) {
  if (tau.size() != n) throw SizeMismatch("tau must be a permutation of n letters");
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j <= n - 1; ++j) pairs.emplace_back(tau.apply(j), n + j);
  return Involution(2 * n - 1, std::move(pairs));
}

RatFunc mc_hom_orbit(const Permutation& tau, int n) {
  TheoryContext tc = weight_theory(n);
  if (n == 1) return RatFunc::one(tc.vars);  // empty Hom
  Involution w = tau_to_involution(tau, n);
  ReducedWord word = reduced_word(pi_w(w));
  for (int a : word)
    if (a == n)
      throw MiddleReflectionInBlockMode("weight pipeline crossed the block");
  RatFunc norm = normalized_class(w, tc, ClassKind::MotivicChern, word);
  // e^K(Hom(C^{n-1},C^n)): coordinates (i, n+j), u -> 1
  FactorList atoms;
  Exps mono = zero_exps();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      WeightFactor f = euler_weight(tc, i, n + j);
      atoms.push_back({f.atom, 1});
      for (int s = 0; s < kMaxSlots; ++s) mono[s] = int16_t(mono[s] + f.mono[s]);
    }
  sort_factors(atoms);
  if (norm.fac_known()) {
    FactorList uni, den_missing, e_missing;
    factor_union(norm.den_factors(), atoms, &uni, &den_missing, &e_missing);
    if (e_missing.empty())
      return RatFunc((norm.num() * expand_factors(tc.vars, den_missing)).shift(mono));
  }
  LaurentPoly e = expand_factors(tc.vars, atoms).shift(mono);
  return RatFunc(exact_div(e, norm.den()) * norm.num());
}

FactorList borel_lambda_factors(int n, Exps* mono) {
  VarContext c = weight_ctx(n);
  FactorList fs;
  *mono = zero_exps();
  LaurentPoly y = LaurentPoly::var_y(c);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i; j <= n - 1; ++j) {
      // 1 + y gamma_j/gamma_i = (gamma_i + y gamma_j) gamma_i^-1
      fs.push_back({LaurentPoly::var_t(c, n + i) + y * LaurentPoly::var_t(c, n + j), 1});
      (*mono)[c.t_slot(n + i)] -= 1;
    }
  sort_factors(fs);
  return fs;
}

RatFunc borel_lambda_y(int n) {
  VarContext c = weight_ctx(n);
  Exps mono;
  FactorList fs = borel_lambda_factors(n, &mono);
  return RatFunc(expand_factors(c, fs).shift(mono));
}

WeightFunction weight_function(const Permutation& tau, int n) {
  RatFunc mc = mc_hom_orbit(tau, n);
  Exps mono;
  FactorList lam = borel_lambda_factors(n, &mono);
  Exps inv = zero_exps();
  for (int s = 0; s < kMaxSlots; ++s) inv[s] = int16_t(-mono[s]);
  // mc / lambda_y = mc * x^{-mono} / prod(lam)
  return {tau, RatFunc::from_factored(mc.num().shift(inv), lam)};
}

CheckReport verify_rtv_recursion(int n) {
  CheckReport rep;
  VarContext c = weight_ctx(n);
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> all;
  do {
    all.emplace_back(line);
  } while (std::next_permutation(line.begin(), line.end()));
  for (const Permutation& tau : all) {
    WeightFunction wt = weight_function(tau, n);
    for (int a = 1; a < n; ++a) {
      Permutation stau = Permutation::simple(n, a) * tau;
      if (stau.length() != tau.length() + 1) continue;  // not a covering pair
      WeightFunction target = weight_function(stau, n);
      // coefficients of eq. (rtv-rec)
      LaurentPoly za = LaurentPoly::var_t(c, a), za1 = LaurentPoly::var_t(c, a + 1);
      LaurentPoly y = LaurentPoly::var_y(c);
      RatFunc coeff1(za + y * za1, za - za1);           // (1+y z_{a+1}/z_a)/(1-z_{a+1}/z_a)
      RatFunc coeff2((LaurentPoly::one(c) + y) * za, za1 - za);  // (1+y) z_a/z_{a+1} / (1-z_a/z_{a+1})
      std::vector<int> swap_a(2 * n - 1);
      std::iota(swap_a.begin(), swap_a.end(), 1);
      std::swap(swap_a[a - 1], swap_a[a]);
      RatFunc rhs = coeff1 * wt.value.act_permutation(swap_a) + coeff2 * wt.value;
      bool ok = rhs == target.value;
      rep.add("rtv-rec " + tau.to_string() + " -> " + stau.to_string() +
                  " (a=" + std::to_string(a) + ")",
              ok);
      // the recursion is exactly A^K_a with t -> z
      bool ok_ak = a_k(wt.value, a) == target.value;
      rep.add("rtv-rec equals A^K recursion " + tau.to_string() + " a=" +
                  std::to_string(a),
              ok_ak);
    }
  }
  return rep;
}

}  // namespace sqz
