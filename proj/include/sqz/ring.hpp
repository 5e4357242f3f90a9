#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sqz/errors.hpp"

namespace sqz {

using Int = boost::multiprecision::cpp_int;

// Variables live in fixed slots: slot 0 is u, slots 1..n are t_1..t_n,
// slot n+1 is y.  Unused slots always carry exponent 0.
struct VarContext {
  int n = 1;
  bool has_u = true;
  bool has_y = false;
  // Laurent mode: t- and u-exponents may be negative (K-theory); monomial
  // factors are units and never stay in denominators.
  bool laurent = false;

  int slots() const { return n + 2; }
  int u_slot() const { return 0; }
  int t_slot(int i) const { return i; }  // 1-based
  int y_slot() const { return n + 1; }

  bool operator==(const VarContext&) const = default;
};

inline constexpr int kMaxSlots = 20;
using Exps = std::array<int16_t, kMaxSlots>;

inline Exps zero_exps() {
  Exps e{};
  e.fill(0);
  return e;
}

struct ExpsHash {
  std::size_t operator()(const Exps& e) const {
    std::size_t h = 1469598103934665603ull;
    for (int16_t v : e) {
      h ^= static_cast<std::size_t>(static_cast<uint16_t>(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct Term {
  Exps exps;
  int deg = 0;  // total degree, cached
  Int coeff;
};

int total_degree(const Exps& e);

// Canonical term order: total degree descending, ties broken by
// lexicographic comparison of the exponent vector (u, t_1..t_n, y),
// larger vector first.
bool term_before(const Exps& a, int deg_a, const Exps& b, int deg_b);

// Variable names used by text rendering.  Defaults to u, t1..tn, y.
struct VarNames {
  std::vector<std::string> names;  // one per slot
  static VarNames standard(const VarContext& ctx);
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(VarContext ctx) : ctx_(ctx) {}

  static LaurentPoly zero(const VarContext& ctx) { return LaurentPoly(ctx); }
  static LaurentPoly constant(const VarContext& ctx, Int c);
  static LaurentPoly one(const VarContext& ctx) { return constant(ctx, 1); }
  static LaurentPoly monomial(const VarContext& ctx, const Exps& e, Int c);
  static LaurentPoly var_u(const VarContext& ctx);
  static LaurentPoly var_t(const VarContext& ctx, int i);
  static LaurentPoly var_y(const VarContext& ctx);

  const VarContext& ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Throws on zero.
  const Term& leading() const;
  int degree() const;  // total degree of leading term; 0 for the zero poly
  int max_exp(int slot) const;
  int min_exp(int slot) const;
  Exps min_exps() const;  // componentwise minimum over terms (zero poly: 0)
  std::size_t term_count() const { return terms_.size(); }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly mul_term(const Exps& e, const Int& c) const;
  LaurentPoly mul_int(const Int& c) const;
  LaurentPoly shift(const Exps& e) const;  // multiply by the monomial x^e
  LaurentPoly pow(int k) const;            // k >= 0

  // t_i -> t_{sigma(i)}; u and y untouched.  sigma is one-line, 1-based.
  LaurentPoly act_permutation(const std::vector<int>& sigma) const;

  LaurentPoly homogeneous_component(int d) const;
  // Largest d with a nonzero degree-d component (0 for the zero poly).
  int y_degree() const { return max_exp(ctx_.y_slot()); }

  Int content() const;          // gcd of coefficients, >= 0
  LaurentPoly primitive() const;
  int leading_sign() const;     // sign of leading coefficient; 0 for zero

  // Build from raw terms (normalizes: sorts, merges, drops zeros).
  static LaurentPoly from_terms(const VarContext& ctx, std::vector<Term> ts);

  std::string to_string(const VarNames& names) const;
  std::string to_string() const;
  std::string to_latex(const VarNames& names) const;

  static LaurentPoly parse(const VarContext& ctx, const std::string& text);

 private:
  VarContext ctx_;
  std::vector<Term> terms_;  // canonical order, no zero coeffs, unique exps
};

// Exact quotient a/b; throws NotDivisible if none exists (Laurent-aware:
// monomial factors are units).
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
bool try_exact_div(const LaurentPoly& a, const LaurentPoly& b,
                   LaurentPoly* quotient);

// Gcd over Z including integer content and any common monomial factor.
// Result is sign-normalized (positive leading coefficient).
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// A denominator kept in factored form: product of primitive,
// positive-leading irreducible polynomials with multiplicities.
struct Factor {
  LaurentPoly base;
  int mult = 1;
};
using FactorList = std::vector<Factor>;

// deterministic total order on polynomials (for factor bookkeeping)
bool poly_less(const LaurentPoly& a, const LaurentPoly& b);
// sort by base and merge equal bases
void sort_factors(FactorList& f);
LaurentPoly expand_factors(const VarContext& ctx, const FactorList& f);
// multiset union with max multiplicities; *a_missing / *b_missing receive
// what each side must be multiplied by to reach the union
void factor_union(const FactorList& a, const FactorList& b, FactorList* uni,
                  FactorList* a_missing, FactorList* b_missing);

// Normalized rational function.  Invariants: den != 0, gcd(num, den) is a
// unit, den has positive leading coefficient under the canonical order, and
// in Laurent (K-theory) contexts den carries no monomial factor (monomials
// are absorbed into num's exponents).
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(LaurentPoly p);
  RatFunc(LaurentPoly num, LaurentPoly den);
  // num / prod(factors^mult).  Factors need not be pre-canonicalized;
  // signs and monomial parts are normalized here.  Keeps the factored
  // denominator for cheap later cancellation.
  static RatFunc from_factored(LaurentPoly num, const FactorList& factors);
  static RatFunc zero(const VarContext& ctx) {
    return RatFunc(LaurentPoly::zero(ctx));
  }
  static RatFunc one(const VarContext& ctx) {
    return RatFunc(LaurentPoly::one(ctx));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  const VarContext& ctx() const { return num_.ctx(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;
  bool fac_known() const { return fac_known_; }
  const FactorList& den_factors() const { return den_fac_; }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc invert() const;  // throws DenominatorVanishes on zero
  RatFunc pow(int k) const;
  RatFunc mul_poly(const LaurentPoly& p) const;
  RatFunc div_factor(const LaurentPoly& atom) const;  // divide by one factor

  RatFunc act_permutation(const std::vector<int>& sigma) const;

  // Simultaneous substitution: values[slot] replaces that variable; all
  // values share one target context.  Throws DenominatorVanishes if the
  // substituted denominator is zero.
  RatFunc substitute(const std::vector<RatFunc>& values) const;

  std::string to_string(const VarNames& names) const;
  std::string to_string() const;
  std::string to_latex(const VarNames& names) const;

  static RatFunc parse(const VarContext& ctx, const std::string& text);

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_;
  FactorList den_fac_;
  bool fac_known_ = false;
};

// Substitution helpers.
std::vector<RatFunc> identity_substitution(const VarContext& ctx);
RatFunc specialize_u(const RatFunc& x, const Int& value);
LaurentPoly specialize_u(const LaurentPoly& x, const Int& value);

void require_same_ctx(const VarContext& a, const VarContext& b);

}  // namespace sqz
