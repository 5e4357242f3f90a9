#include "sqz/operators.hpp"

#include <numeric>

namespace sqz {

TheoryContext TheoryContext::cohomology(int n, UMode u) {
  TheoryContext tc;
  tc.theory = Theory::Cohomology;
  tc.u_mode = u;
  tc.vars = VarContext{n, true, false, false};
  tc.validate();
  return tc;
}

TheoryContext TheoryContext::ktheory(int n, UMode u) {
  TheoryContext tc;
  tc.theory = Theory::KTheory;
  tc.u_mode = u;
  tc.vars = VarContext{n, true, true, true};
  tc.validate();
  return tc;
}

void TheoryContext::validate() const {
  if (u_mode == UMode::Zero && theory != Theory::Cohomology)
    throw UsageError("u -> 0 is a cohomology-only specialization");
  if (u_mode == UMode::One && theory != Theory::KTheory)
    throw UsageError("u -> 1 is a K-theory-only specialization");
  if ((theory == Theory::KTheory) != vars.has_y)
    throw UsageError("the motivic parameter y is present exactly in K-theory");
  if ((theory == Theory::KTheory) != vars.laurent)
    throw UsageError("Laurent exponents are a K-theory feature");
}

std::string theory_name(Theory t) { return t == Theory::Cohomology ? "H" : "K"; }

std::string u_mode_name(UMode u) {
  switch (u) {
    case UMode::Keep: return "keep";
    case UMode::Zero: return "zero";
    case UMode::One: return "one";
  }
  return "?";
}

std::vector<int> simple_swap(int n, int i) {
  if (i < 1 || i >= n) throw SizeMismatch("operator index out of range");
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 1);
  std::swap(s[i - 1], s[i]);
  return s;
}

RatFunc act_simple(const RatFunc& x, int i) {
  return x.act_permutation(simple_swap(x.ctx().n, i));
}

namespace {

void check_index(const RatFunc& x, int i) {
  if (i < 1 || i >= x.ctx().n) throw SizeMismatch("operator index out of range");
}

}  // namespace

RatFunc beta_h(const RatFunc& x, int i) {
  check_index(x, i);
  const VarContext& c = x.ctx();
  LaurentPoly d = LaurentPoly::var_t(c, i + 1) - LaurentPoly::var_t(c, i);
  return (x - act_simple(x, i)).div_factor(d);
}

RatFunc beta_k(const RatFunc& x, int i) {
  check_index(x, i);
  const VarContext& c = x.ctx();
  LaurentPoly ti = LaurentPoly::var_t(c, i);
  LaurentPoly ti1 = LaurentPoly::var_t(c, i + 1);
  return (x.mul_poly(ti1) - act_simple(x, i).mul_poly(ti)).div_factor(ti1 - ti);
}

RatFunc a_h(const RatFunc& x, int i) {
  check_index(x, i);
  const VarContext& c = x.ctx();
  LaurentPoly ti = LaurentPoly::var_t(c, i);
  LaurentPoly ti1 = LaurentPoly::var_t(c, i + 1);
  RatFunc first = x.div_factor(ti1 - ti);
  RatFunc second =
      act_simple(x, i).mul_poly(LaurentPoly::one(c) + ti - ti1).div_factor(ti - ti1);
  return first + second;
}

RatFunc a_k(const RatFunc& x, int i) {
  check_index(x, i);
  const VarContext& c = x.ctx();
  LaurentPoly ti = LaurentPoly::var_t(c, i);
  LaurentPoly ti1 = LaurentPoly::var_t(c, i + 1);
  LaurentPoly y = LaurentPoly::var_y(c);
  LaurentPoly one = LaurentPoly::one(c);
  // (1+y) t_i / (t_{i+1} - t_i) * x
  RatFunc first = x.mul_poly((one + y) * ti).div_factor(ti1 - ti);
  // (t_i + y t_{i+1}) / (t_i - t_{i+1}) * s_i(x)
  RatFunc second = act_simple(x, i).mul_poly(ti + y * ti1).div_factor(ti - ti1);
  return first + second;
}

RatFunc apply_op(OperatorKind kind, const RatFunc& x, int i) {
  switch (kind) {
    case OperatorKind::BetaH: return beta_h(x, i);
    case OperatorKind::BetaK: return beta_k(x, i);
    case OperatorKind::A_H: return a_h(x, i);
    case OperatorKind::A_K: return a_k(x, i);
  }
  throw Error("unknown operator kind");
}

RatFunc apply_word(const ReducedWord& word, const RatFunc& x, OperatorKind kind) {
  RatFunc r = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = apply_op(kind, r, *it);
  return r;
}

}  // namespace sqz
