#include "sqz/ring.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>

namespace sqz {

void require_same_ctx(const VarContext& a, const VarContext& b) {
  if (!(a == b)) throw ContextMismatch("variable contexts differ");
}

int total_degree(const Exps& e) {
  int d = 0;
  for (int16_t v : e) d += v;
  return d;
}

bool term_before(const Exps& a, int deg_a, const Exps& b, int deg_b) {
  if (deg_a != deg_b) return deg_a > deg_b;
  return a > b;  // lexicographic on (u, t1..tn, y), larger first
}

VarNames VarNames::standard(const VarContext& ctx) {
  VarNames vn;
  vn.names.resize(ctx.slots());
  vn.names[ctx.u_slot()] = "u";
  for (int i = 1; i <= ctx.n; ++i) vn.names[ctx.t_slot(i)] = "t" + std::to_string(i);
  vn.names[ctx.y_slot()] = "y";
  return vn;
}

namespace {

Exps add_exps(const Exps& a, const Exps& b) {
  Exps r{};
  for (int i = 0; i < kMaxSlots; ++i) {
    int s = int(a[i]) + int(b[i]);
    if (s < -32000 || s > 32000) throw Error("exponent overflow");
    r[i] = int16_t(s);
  }
  return r;
}

Exps sub_exps(const Exps& a, const Exps& b) {
  Exps r{};
  for (int i = 0; i < kMaxSlots; ++i) {
    int s = int(a[i]) - int(b[i]);
    if (s < -32000 || s > 32000) throw Error("exponent overflow");
    r[i] = int16_t(s);
  }
  return r;
}

Exps neg_exps(const Exps& a) { return sub_exps(zero_exps(), a); }

Exps min_of(const Exps& a, const Exps& b) {
  Exps r{};
  for (int i = 0; i < kMaxSlots; ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

LaurentPoly LaurentPoly::constant(const VarContext& ctx, Int c) {
  LaurentPoly p(ctx);
  if (c != 0) p.terms_.push_back({zero_exps(), 0, std::move(c)});
  return p;
}

LaurentPoly LaurentPoly::monomial(const VarContext& ctx, const Exps& e, Int c) {
  LaurentPoly p(ctx);
  if (c != 0) p.terms_.push_back({e, total_degree(e), std::move(c)});
  return p;
}

LaurentPoly LaurentPoly::var_u(const VarContext& ctx) {
  Exps e = zero_exps();
  e[ctx.u_slot()] = 1;
  return monomial(ctx, e, 1);
}

LaurentPoly LaurentPoly::var_t(const VarContext& ctx, int i) {
  if (i < 1 || i > ctx.n) throw SizeMismatch("t-index out of range");
  Exps e = zero_exps();
  e[ctx.t_slot(i)] = 1;
  return monomial(ctx, e, 1);
}

LaurentPoly LaurentPoly::var_y(const VarContext& ctx) {
  Exps e = zero_exps();
  e[ctx.y_slot()] = 1;
  return monomial(ctx, e, 1);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exps == zero_exps());
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exps == zero_exps() && terms_[0].coeff == 1;
}

const Term& LaurentPoly::leading() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return terms_.front();
}

int LaurentPoly::degree() const { return terms_.empty() ? 0 : terms_.front().deg; }

int LaurentPoly::max_exp(int slot) const {
  int m = 0;
  for (const Term& t : terms_) m = std::max(m, int(t.exps[slot]));
  return m;
}

int LaurentPoly::min_exp(int slot) const {
  if (terms_.empty()) return 0;
  int m = terms_[0].exps[slot];
  for (const Term& t : terms_) m = std::min(m, int(t.exps[slot]));
  return m;
}

Exps LaurentPoly::min_exps() const {
  if (terms_.empty()) return zero_exps();
  Exps m = terms_[0].exps;
  for (const Term& t : terms_) m = min_of(m, t.exps);
  return m;
}

LaurentPoly LaurentPoly::from_terms(const VarContext& ctx, std::vector<Term> ts) {
  for (Term& t : ts) t.deg = total_degree(t.exps);
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
    return term_before(a.exps, a.deg, b.exps, b.deg);
  });
  LaurentPoly p(ctx);
  p.terms_.reserve(ts.size());
  for (Term& t : ts) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  require_same_ctx(ctx_, o.ctx_);
  LaurentPoly r(ctx_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const Term& a = terms_[i];
    const Term& b = o.terms_[j];
    if (a.exps == b.exps) {
      Int c = a.coeff + b.coeff;
      if (c != 0) r.terms_.push_back({a.exps, a.deg, std::move(c)});
      ++i, ++j;
    } else if (term_before(a.exps, a.deg, b.exps, b.deg)) {
      r.terms_.push_back(a);
      ++i;
    } else {
      r.terms_.push_back(b);
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  require_same_ctx(ctx_, o.ctx_);
  if (is_zero() || o.is_zero()) return zero(ctx_);
  if (is_one()) return o;
  if (o.is_one()) return *this;
  std::unordered_map<Exps, Int, ExpsHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : o.terms_) {
      acc[add_exps(a.exps, b.exps)] += a.coeff * b.coeff;
    }
  }
  std::vector<Term> ts;
  ts.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) ts.push_back({e, 0, std::move(c)});
  }
  return from_terms(ctx_, std::move(ts));
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (!(ctx_ == o.ctx_) || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exps != o.terms_[i].exps || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  }
  return true;
}

LaurentPoly LaurentPoly::mul_term(const Exps& e, const Int& c) const {
  LaurentPoly r(ctx_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    Exps ne = add_exps(t.exps, e);
    r.terms_.push_back({ne, total_degree(ne), t.coeff * c});
  }
  if (total_degree(e) != 0 || e != zero_exps()) {
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) {
      return term_before(a.exps, a.deg, b.exps, b.deg);
    });
  }
  return r;
}

LaurentPoly LaurentPoly::mul_int(const Int& c) const { return mul_term(zero_exps(), c); }

LaurentPoly LaurentPoly::shift(const Exps& e) const { return mul_term(e, 1); }

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw Error("negative polynomial power");
  LaurentPoly r = one(ctx_);
  LaurentPoly b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

LaurentPoly LaurentPoly::act_permutation(const std::vector<int>& sigma) const {
  if (int(sigma.size()) != ctx_.n) throw SizeMismatch("permutation size mismatch");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const Term& t : terms_) {
    Exps e = t.exps;
    for (int i = 1; i <= ctx_.n; ++i) e[ctx_.t_slot(sigma[i - 1])] = t.exps[ctx_.t_slot(i)];
    ts.push_back({e, t.deg, t.coeff});
  }
  return from_terms(ctx_, std::move(ts));
}

LaurentPoly LaurentPoly::homogeneous_component(int d) const {
  LaurentPoly r(ctx_);
  for (const Term& t : terms_) {
    if (t.deg == d) r.terms_.push_back(t);
  }
  return r;
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const Term& t : terms_) {
    g = int_gcd(g, t.coeff);
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::primitive() const {
  Int c = content();
  if (c == 0 || c == 1) return *this;
  LaurentPoly r = *this;
  for (Term& t : r.terms_) t.coeff /= c;
  return r;
}

int LaurentPoly::leading_sign() const {
  if (terms_.empty()) return 0;
  return terms_.front().coeff > 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Exact division and gcd
// ---------------------------------------------------------------------------

namespace {

// Division of honest polynomials (all exponents >= 0) in the canonical
// (graded) order.  Returns false if b does not divide a.
bool div_honest(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* q) {
  const VarContext& ctx = a.ctx();
  LaurentPoly r = a;
  const Term& lb = b.leading();
  std::vector<Term> qt;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    Exps e{};
    for (int i = 0; i < kMaxSlots; ++i) {
      int d = int(lr.exps[i]) - int(lb.exps[i]);
      if (d < 0) return false;
      e[i] = int16_t(d);
    }
    Int c, rem;
    boost::multiprecision::divide_qr(lr.coeff, lb.coeff, c, rem);
    if (rem != 0) return false;
    qt.push_back({e, total_degree(e), c});
    r -= b.mul_term(e, c);
  }
  if (q) *q = LaurentPoly::from_terms(ctx, std::move(qt));
  return true;
}

struct Univariate {
  // coefficient polynomials by exponent of the chosen slot (exponent zeroed)
  std::map<int, LaurentPoly> coeffs;
  int deg = 0;
};

Univariate univariate_in(const LaurentPoly& p, int slot) {
  Univariate u;
  for (const Term& t : p.terms()) {
    int e = t.exps[slot];
    auto it = u.coeffs.find(e);
    if (it == u.coeffs.end()) {
      it = u.coeffs.emplace(e, LaurentPoly(p.ctx())).first;
    }
    Exps ne = t.exps;
    ne[slot] = 0;
    it->second += LaurentPoly::monomial(p.ctx(), ne, t.coeff);
    u.deg = std::max(u.deg, e);
  }
  return u;
}

LaurentPoly coeff_of(const LaurentPoly& p, int slot, int e) {
  LaurentPoly r(p.ctx());
  for (const Term& t : p.terms()) {
    if (t.exps[slot] == e) {
      Exps ne = t.exps;
      ne[slot] = 0;
      r += LaurentPoly::monomial(p.ctx(), ne, t.coeff);
    }
  }
  return r;
}

int deg_in(const LaurentPoly& p, int slot) { return p.max_exp(slot); }

LaurentPoly gcd_rec(LaurentPoly a, LaurentPoly b);

// gcd of the coefficient polynomials with respect to `slot`
LaurentPoly content_in(const LaurentPoly& p, int slot) {
  Univariate u = univariate_in(p, slot);
  LaurentPoly g(p.ctx());
  for (auto& [e, c] : u.coeffs) {
    g = gcd_rec(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b with respect to
// `slot` (deg_a >= deg_b >= 1).
LaurentPoly prem(LaurentPoly a, const LaurentPoly& b, int slot) {
  int db = deg_in(b, slot);
  int scale = deg_in(a, slot) - db + 1;
  LaurentPoly lcb = coeff_of(b, slot, db);
  while (!a.is_zero()) {
    int da = deg_in(a, slot);
    if (da < db) break;
    LaurentPoly lca = coeff_of(a, slot, da);
    Exps sh = zero_exps();
    sh[slot] = int16_t(da - db);
    a = a * lcb - b.mul_term(sh, 1) * lca;
    --scale;
  }
  // match the textbook normalization exactly
  for (; scale > 0; --scale) a = a * lcb;
  return a;
}

// gcd of honest nonzero polynomials, up to sign.
LaurentPoly gcd_rec(LaurentPoly a, LaurentPoly b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const VarContext& ctx = a.ctx();
  Int ig = int_gcd(a.content(), b.content());
  a = a.primitive();
  b = b.primitive();

  Exps ma = a.min_exps(), mb = b.min_exps();
  Exps common = min_of(ma, mb);
  a = a.shift(neg_exps(ma));
  b = b.shift(neg_exps(mb));

  LaurentPoly result(ctx);
  if (a.is_constant() || b.is_constant()) {
    result = LaurentPoly::constant(ctx, 1);
  } else {
    // pick the variable where pseudo-division does the least work
    int slot = -1;
    long best = 0;
    for (int s = 0; s < ctx.slots(); ++s) {
      int da = deg_in(a, s), db = deg_in(b, s);
      if (da == 0 && db == 0) continue;
      long score = (da == 0 || db == 0) ? 0 : std::max(da, db);
      if (slot < 0 || score < best) {
        slot = s;
        best = score;
      }
    }
    assert(slot >= 0);
    if (deg_in(a, slot) == 0) {
      result = gcd_rec(a, content_in(b, slot));
    } else if (deg_in(b, slot) == 0) {
      result = gcd_rec(content_in(a, slot), b);
    } else {
      LaurentPoly ca = content_in(a, slot);
      LaurentPoly cb = content_in(b, slot);
      LaurentPoly pa = exact_div(a, ca);
      LaurentPoly pb = exact_div(b, cb);
      LaurentPoly cg = gcd_rec(ca, cb);

      // subresultant PRS on the primitive parts
      LaurentPoly A = pa, B = pb;
      if (deg_in(A, slot) < deg_in(B, slot)) std::swap(A, B);
      LaurentPoly gg = LaurentPoly::one(ctx);
      LaurentPoly hh = LaurentPoly::one(ctx);
      LaurentPoly g(ctx);
      while (true) {
        int delta = deg_in(A, slot) - deg_in(B, slot);
        LaurentPoly rem = prem(A, B, slot);
        if (rem.is_zero()) {
          g = exact_div(B, content_in(B, slot));
          break;
        }
        if (deg_in(rem, slot) == 0) {
          g = LaurentPoly::constant(ctx, 1);
          break;
        }
        A = B;
        B = exact_div(rem, gg * hh.pow(delta));
        gg = coeff_of(A, slot, deg_in(A, slot));
        if (delta > 0) hh = exact_div(gg.pow(delta), hh.pow(delta - 1));
      }
      result = cg * g;
    }
  }
  result = result.mul_int(ig).shift(common);
  if (result.leading_sign() < 0) result = -result;
  return result;
}

}  // namespace

bool try_exact_div(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* q) {
  require_same_ctx(a.ctx(), b.ctx());
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    if (q) *q = LaurentPoly::zero(a.ctx());
    return true;
  }
  Exps ma = a.min_exps(), mb = b.min_exps();
  LaurentPoly ah = a.shift(neg_exps(ma));
  LaurentPoly bh = b.shift(neg_exps(mb));
  LaurentPoly quot;
  if (!div_honest(ah, bh, &quot)) return false;
  if (q) *q = quot.shift(sub_exps(ma, mb));
  return true;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly q;
  if (!try_exact_div(a, b, &q)) throw NotDivisible("polynomial division is not exact");
  return q;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_ctx(a.ctx(), b.ctx());
  auto signfix = [](LaurentPoly p) {
    if (p.leading_sign() < 0) p = -p;
    return p;
  };
  if (a.is_zero()) return signfix(b);
  if (b.is_zero()) return signfix(a);
  Exps ma = a.min_exps(), mb = b.min_exps();
  LaurentPoly g = gcd_rec(a.shift(neg_exps(ma)), b.shift(neg_exps(mb)));
  return signfix(g.shift(min_of(ma, mb)));
}

// ---------------------------------------------------------------------------
// RatFunc
// ---------------------------------------------------------------------------

bool poly_less(const LaurentPoly& a, const LaurentPoly& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (ta.size() != tb.size()) return ta.size() < tb.size();
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].exps != tb[i].exps) return ta[i].exps < tb[i].exps;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return false;
}

void sort_factors(FactorList& f) {
  std::sort(f.begin(), f.end(),
            [](const Factor& a, const Factor& b) { return poly_less(a.base, b.base); });
  FactorList merged;
  for (Factor& x : f) {
    if (x.mult == 0) continue;
    if (!merged.empty() && merged.back().base == x.base) {
      merged.back().mult += x.mult;
    } else {
      merged.push_back(std::move(x));
    }
  }
  f = std::move(merged);
}

LaurentPoly expand_factors(const VarContext& ctx, const FactorList& f) {
  LaurentPoly r = LaurentPoly::one(ctx);
  for (const Factor& x : f) r *= x.base.pow(x.mult);
  return r;
}

void factor_union(const FactorList& a, const FactorList& b, FactorList* uni,
                  FactorList* a_missing, FactorList* b_missing) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && poly_less(a[i].base, b[j].base))) {
      uni->push_back(a[i]);
      b_missing->push_back(a[i]);
      ++i;
    } else if (i == a.size() || poly_less(b[j].base, a[i].base)) {
      uni->push_back(b[j]);
      a_missing->push_back(b[j]);
      ++j;
    } else {
      int m = std::max(a[i].mult, b[j].mult);
      uni->push_back({a[i].base, m});
      if (m > a[i].mult) a_missing->push_back({a[i].base, m - a[i].mult});
      if (m > b[j].mult) b_missing->push_back({b[j].base, m - b[j].mult});
      ++i, ++j;
    }
  }
}

RatFunc::RatFunc(LaurentPoly p)
    : num_(std::move(p)), den_(LaurentPoly::one(num_.ctx())), fac_known_(true) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  require_same_ctx(num_.ctx(), den_.ctx());
  normalize();
}

RatFunc RatFunc::from_factored(LaurentPoly num, const FactorList& factors) {
  RatFunc r;
  r.num_ = std::move(num);
  const VarContext& ctx = r.num_.ctx();
  FactorList canon;
  for (const Factor& f : factors) {
    if (f.mult == 0) continue;
    if (f.mult < 0) throw Error("negative factor multiplicity");
    if (f.base.is_zero()) throw DenominatorVanishes("zero denominator factor");
    LaurentPoly base = f.base;
    // peel off sign, monomial and integer content; they move to num
    Exps mono = base.min_exps();
    if (mono != zero_exps()) base = base.shift(neg_exps(mono));
    Int c = base.content();
    if (base.leading_sign() < 0) c = -c;
    if (c != 1) {
      LaurentPoly q;
      bool ok = try_exact_div(base, LaurentPoly::constant(ctx, c), &q);
      assert(ok);
      (void)ok;
      base = q;
    }
    for (int k = 0; k < f.mult; ++k) r.num_ = r.num_.shift(neg_exps(mono));
    if (c != 1) {
      Int cc = 1;
      for (int k = 0; k < f.mult; ++k) cc *= c;
      if (cc != 1) canon.push_back({LaurentPoly::constant(ctx, cc < 0 ? -cc : cc), 1});
      if (cc < 0) r.num_ = -r.num_;
    }
    if (!base.is_one()) canon.push_back({base, f.mult});
  }
  sort_factors(canon);
  r.den_fac_ = std::move(canon);
  r.fac_known_ = true;
  r.den_ = expand_factors(ctx, r.den_fac_);
  r.normalize();
  return r;
}

void RatFunc::normalize() {
  const VarContext& ctx = num_.ctx();
  if (den_.is_zero()) throw DenominatorVanishes("zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly::one(ctx);
    den_fac_.clear();
    fac_known_ = true;
    return;
  }
  if (fac_known_) {
    bool changed = false;
    for (Factor& f : den_fac_) {
      if (f.base.is_constant()) {
        // cancel shared integer content
        Int c = f.base.leading().coeff;
        Int g = int_gcd(num_.content(), c);
        if (g > 1) {
          num_ = exact_div(num_, LaurentPoly::constant(ctx, g));
          c /= g;
          f.base = LaurentPoly::constant(ctx, c);
          changed = true;
        }
        if (f.base.is_one()) f.mult = 0;
        continue;
      }
      LaurentPoly q;
      while (f.mult > 0 && try_exact_div(num_, f.base, &q)) {
        num_ = q;
        --f.mult;
        changed = true;
      }
    }
    if (changed || den_.is_zero()) {
      den_fac_.erase(std::remove_if(den_fac_.begin(), den_fac_.end(),
                                    [](const Factor& f) { return f.mult == 0; }),
                     den_fac_.end());
      den_ = expand_factors(ctx, den_fac_);
    }
    return;
  }
  // generic path
  if (ctx.laurent) {
    Exps mono = den_.min_exps();
    if (mono != zero_exps()) {
      den_ = den_.shift(neg_exps(mono));
      num_ = num_.shift(neg_exps(mono));
    }
    Exps mn = num_.min_exps();
    LaurentPoly nh = num_.shift(neg_exps(mn));
    LaurentPoly g = poly_gcd(nh, den_);
    if (!g.is_one()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  } else {
    LaurentPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  if (den_.leading_sign() < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (den_.is_one()) {
    den_fac_.clear();
    fac_known_ = true;
  }
}

bool RatFunc::is_polynomial() const { return den_.is_one(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  require_same_ctx(ctx(), o.ctx());
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (fac_known_ && o.fac_known_) {
    FactorList uni, a_missing, b_missing;
    factor_union(den_fac_, o.den_fac_, &uni, &a_missing, &b_missing);
    LaurentPoly n = num_ * expand_factors(ctx(), a_missing) +
                    o.num_ * expand_factors(ctx(), b_missing);
    RatFunc r;
    r.num_ = std::move(n);
    r.den_fac_ = std::move(uni);
    r.fac_known_ = true;
    r.den_ = expand_factors(ctx(), r.den_fac_);
    r.normalize();
    return r;
  }
  LaurentPoly g = poly_gcd(den_, o.den_);
  LaurentPoly da = exact_div(den_, g);
  LaurentPoly db = exact_div(o.den_, g);
  RatFunc r;
  r.num_ = num_ * db + o.num_ * da;
  r.den_ = den_ * db;
  r.fac_known_ = false;
  r.normalize();
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  require_same_ctx(ctx(), o.ctx());
  if (is_zero() || o.is_zero()) return zero(ctx());
  RatFunc r;
  if (fac_known_ && o.fac_known_) {
    FactorList uni = den_fac_;
    uni.insert(uni.end(), o.den_fac_.begin(), o.den_fac_.end());
    sort_factors(uni);
    r.num_ = num_ * o.num_;
    r.den_fac_ = std::move(uni);
    r.fac_known_ = true;
    r.den_ = expand_factors(ctx(), r.den_fac_);
    r.normalize();
    return r;
  }
  LaurentPoly g1 = poly_gcd(num_, o.den_);
  LaurentPoly g2 = poly_gcd(o.num_, den_);
  r.num_ = exact_div(num_, g1) * exact_div(o.num_, g2);
  r.den_ = exact_div(den_, g2) * exact_div(o.den_, g1);
  r.fac_known_ = false;
  r.normalize();
  return r;
}

RatFunc RatFunc::invert() const {
  if (num_.is_zero()) throw DenominatorVanishes("division by zero");
  RatFunc r;
  r.num_ = den_;
  r.den_ = num_;
  r.fac_known_ = false;
  r.normalize();
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.invert(); }

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return invert().pow(-k);
  RatFunc r = one(ctx());
  RatFunc b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

RatFunc RatFunc::mul_poly(const LaurentPoly& p) const {
  RatFunc r = *this;
  r.num_ = r.num_ * p;
  r.normalize();
  return r;
}

RatFunc RatFunc::div_factor(const LaurentPoly& atom) const {
  if (fac_known_) {
    FactorList f = den_fac_;
    f.push_back({atom, 1});
    return from_factored(num_, f);
  }
  RatFunc r;
  r.num_ = num_;
  r.den_ = den_ * atom;
  r.fac_known_ = false;
  r.normalize();
  return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

RatFunc RatFunc::act_permutation(const std::vector<int>& sigma) const {
  RatFunc r;
  r.num_ = num_.act_permutation(sigma);
  r.den_ = den_.act_permutation(sigma);
  if (fac_known_) {
    int sign = 1;
    FactorList f;
    f.reserve(den_fac_.size());
    for (const Factor& x : den_fac_) {
      LaurentPoly b = x.base.act_permutation(sigma);
      if (b.leading_sign() < 0) {
        b = -b;
        if (x.mult % 2) sign = -sign;
      }
      f.push_back({std::move(b), x.mult});
    }
    sort_factors(f);
    r.den_fac_ = std::move(f);
    r.fac_known_ = true;
    if (sign < 0) {
      r.num_ = -r.num_;
      r.den_ = -r.den_;
    }
  } else {
    if (r.den_.leading_sign() < 0) {
      r.num_ = -r.num_;
      r.den_ = -r.den_;
    }
  }
  return r;
}

RatFunc RatFunc::substitute(const std::vector<RatFunc>& values) const {
  const VarContext& src = ctx();
  if (int(values.size()) != src.slots()) throw SizeMismatch("substitution size mismatch");
  const VarContext& dst = values.empty() ? src : values[0].ctx();
  auto eval_poly = [&](const LaurentPoly& p) {
    RatFunc acc = RatFunc::zero(dst);
    for (const Term& t : p.terms()) {
      RatFunc m(LaurentPoly::constant(dst, t.coeff));
      for (int s = 0; s < src.slots(); ++s) {
        int e = t.exps[s];
        if (e != 0) m *= values[s].pow(e);
      }
      acc += m;
    }
    return acc;
  };
  RatFunc dn = eval_poly(den_);
  if (dn.is_zero()) throw DenominatorVanishes("substitution makes denominator vanish");
  return eval_poly(num_) / dn;
}

std::vector<RatFunc> identity_substitution(const VarContext& ctx) {
  std::vector<RatFunc> v;
  v.reserve(ctx.slots());
  v.push_back(RatFunc(LaurentPoly::var_u(ctx)));
  for (int i = 1; i <= ctx.n; ++i) v.push_back(RatFunc(LaurentPoly::var_t(ctx, i)));
  v.push_back(RatFunc(LaurentPoly::var_y(ctx)));
  return v;
}

LaurentPoly specialize_u(const LaurentPoly& x, const Int& value) {
  const VarContext& ctx = x.ctx();
  std::vector<Term> ts;
  for (const Term& t : x.terms()) {
    int e = t.exps[ctx.u_slot()];
    Int c = t.coeff;
    if (e < 0) {
      if (value == 0) throw DenominatorVanishes("u -> 0 with negative u-exponent");
      for (int k = 0; k < -e; ++k) {
        if (c % value != 0) throw Error("u-specialization not integral");
        c /= value;
      }
    } else {
      for (int k = 0; k < e; ++k) c *= value;
    }
    Exps ne = t.exps;
    ne[ctx.u_slot()] = 0;
    ts.push_back({ne, 0, std::move(c)});
  }
  return LaurentPoly::from_terms(ctx, std::move(ts));
}

RatFunc specialize_u(const RatFunc& x, const Int& value) {
  LaurentPoly d = specialize_u(x.den(), value);
  if (d.is_zero()) throw DenominatorVanishes("u-specialization makes denominator vanish");
  return RatFunc(specialize_u(x.num(), value), d);
}

// ---------------------------------------------------------------------------
// Text rendering and parsing
// ---------------------------------------------------------------------------

namespace {

void render_term(std::ostream& os, const VarContext& ctx, const Term& t,
                 const VarNames& names, bool first, bool latex) {
  Int c = t.coeff;
  if (c < 0) {
    os << (first ? "-" : " - ");
    c = -c;
  } else {
    os << (first ? "" : " + ");
  }
  bool any_var = t.exps != zero_exps();
  bool coeff_printed = false;
  if (c != 1 || !any_var) {
    os << c.str();
    coeff_printed = true;
  }
  bool need_sep = coeff_printed;
  for (int s = 0; s < ctx.slots(); ++s) {
    int e = t.exps[s];
    if (e == 0) continue;
    if (need_sep && !latex) os << "*";
    if (need_sep && latex) os << " ";
    os << names.names[s];
    if (e != 1) {
      if (latex) {
        os << "^{" << e << "}";
      } else {
        os << "^" << e;
      }
    }
    need_sep = true;
  }
}

std::string poly_string(const LaurentPoly& p, const VarNames& names, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : p.terms()) {
    render_term(os, p.ctx(), t, names, first, latex);
    first = false;
  }
  return os.str();
}

struct Parser {
  const VarContext& ctx;
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  Int parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw ParseError("expected integer at position " + std::to_string(start));
    return Int(s.substr(start, pos - start));
  }

  int parse_exponent() {
    skip_ws();
    if (eat('(')) {
      Int v = parse_int();
      if (!eat(')')) throw ParseError("expected ')'");
      return int(v);
    }
    return int(parse_int());
  }

  LaurentPoly parse_primary() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      LaurentPoly e = parse_expr();
      if (!eat(')')) throw ParseError("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return LaurentPoly::constant(ctx, parse_int());
    }
    if (c == 'u') {
      ++pos;
      return LaurentPoly::var_u(ctx);
    }
    if (c == 'y') {
      ++pos;
      return LaurentPoly::var_y(ctx);
    }
    if (c == 't') {
      ++pos;
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) throw ParseError("expected t-variable index");
      int i = std::stoi(s.substr(start, pos - start));
      if (i < 1 || i > ctx.n) throw ParseError("t-variable index out of range");
      return LaurentPoly::var_t(ctx, i);
    }
    throw ParseError(std::string("unexpected character '") + c + "'");
  }

  LaurentPoly parse_factor() {
    LaurentPoly base = parse_primary();
    skip_ws();
    if (eat('^')) {
      int e = parse_exponent();
      if (e >= 0) return base.pow(e);
      // negative power of a single-term base only
      if (base.term_count() != 1 || base.leading().coeff != 1)
        throw ParseError("negative exponent requires a plain variable base");
      Exps ne = base.leading().exps;
      for (auto& v : ne) v = int16_t(v * e);
      return LaurentPoly::monomial(ctx, ne, 1);
    }
    return base;
  }

  bool at_factor_start() {
    skip_ws();
    if (pos >= s.size()) return false;
    char c = s[pos];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || c == 'u' ||
           c == 'y' || c == 't';
  }

  LaurentPoly parse_term() {
    LaurentPoly r = parse_factor();
    while (true) {
      skip_ws();
      if (eat('*')) {
        r *= parse_factor();
      } else if (at_factor_start()) {
        r *= parse_factor();
      } else {
        break;
      }
    }
    return r;
  }

  LaurentPoly parse_expr() {
    LaurentPoly r(ctx);
    bool neg = false;
    skip_ws();
    if (eat('-')) neg = true;
    else eat('+');
    LaurentPoly t = parse_term();
    r = neg ? -t : t;
    while (true) {
      skip_ws();
      if (eat('+')) {
        r += parse_term();
      } else if (eat('-')) {
        r -= parse_term();
      } else {
        break;
      }
    }
    return r;
  }
};

}  // namespace

std::string LaurentPoly::to_string(const VarNames& names) const {
  return poly_string(*this, names, false);
}

std::string LaurentPoly::to_string() const {
  return poly_string(*this, VarNames::standard(ctx_), false);
}

std::string LaurentPoly::to_latex(const VarNames& names) const {
  return poly_string(*this, names, true);
}

LaurentPoly LaurentPoly::parse(const VarContext& ctx, const std::string& text) {
  Parser p{ctx, text};
  LaurentPoly r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input after polynomial");
  return r;
}

std::string RatFunc::to_string(const VarNames& names) const {
  if (den_.is_one()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ") / (" + den_.to_string(names) + ")";
}

std::string RatFunc::to_string() const {
  return to_string(VarNames::standard(ctx()));
}

std::string RatFunc::to_latex(const VarNames& names) const {
  if (den_.is_one()) return num_.to_latex(names);
  return "\\frac{" + num_.to_latex(names) + "}{" + den_.to_latex(names) + "}";
}

RatFunc RatFunc::parse(const VarContext& ctx, const std::string& text) {
  int depth = 0;
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == '/' && depth == 0) {
      if (slash != std::string::npos) throw ParseError("multiple top-level '/'");
      slash = i;
    }
  }
  if (slash == std::string::npos) return RatFunc(LaurentPoly::parse(ctx, text));
  LaurentPoly n = LaurentPoly::parse(ctx, text.substr(0, slash));
  LaurentPoly d = LaurentPoly::parse(ctx, text.substr(slash + 1));
  return RatFunc(std::move(n), std::move(d));
}

}  // namespace sqz
