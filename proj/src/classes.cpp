#include "sqz/classes.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "sqz/parallel.hpp"

namespace sqz {

std::string kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::Fundamental: return "fund";
    case ClassKind::Csm: return "csm";
    case ClassKind::MotivicChern: return "mc";
  }
  return "?";
}

OperatorKind op_for(Theory theory, ClassKind kind) {
  if (kind == ClassKind::Fundamental)
    return theory == Theory::Cohomology ? OperatorKind::BetaH : OperatorKind::BetaK;
  if (kind == ClassKind::Csm) {
    if (theory != Theory::Cohomology) throw UsageError("CSM classes live in cohomology");
    return OperatorKind::A_H;
  }
  if (theory != Theory::KTheory) throw UsageError("motivic Chern classes live in K-theory");
  return OperatorKind::A_K;
}

WeightFactor euler_weight(const TheoryContext& tc, int i, int j) {
  const VarContext& c = tc.vars;
  LaurentPoly ti = LaurentPoly::var_t(c, i);
  LaurentPoly tj = LaurentPoly::var_t(c, j);
  WeightFactor f;
  f.mono = zero_exps();
  if (tc.theory == Theory::Cohomology) {
    // e(u t_i/t_j) = u + t_i - t_j
    f.atom = (tc.u_mode == UMode::Zero) ? ti - tj : LaurentPoly::var_u(c) + ti - tj;
  } else {
    // e^K(u t_i/t_j) = 1 - t_j/(u t_i) = (u t_i - t_j) u^-1 t_i^-1
    if (tc.u_mode == UMode::One) {
      f.atom = ti - tj;
      f.mono[c.t_slot(i)] = -1;
    } else {
      f.atom = LaurentPoly::var_u(c) * ti - tj;
      f.mono[c.u_slot()] = -1;
      f.mono[c.t_slot(i)] = -1;
    }
  }
  return f;
}

FactorList euler_factors(int n, const TheoryContext& tc) {
  FactorList fs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) fs.push_back({euler_weight(tc, i, j).atom, 1});
  return fs;
}

LaurentPoly euler_class(int n, const TheoryContext& tc) {
  const VarContext& c = tc.vars;
  LaurentPoly e = LaurentPoly::one(c);
  Exps mono = zero_exps();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      WeightFactor f = euler_weight(tc, i, j);
      e *= f.atom;
      for (int s = 0; s < kMaxSlots; ++s) mono[s] = int16_t(mono[s] + f.mono[s]);
    }
  return e.shift(mono);
}

namespace {

// region of the minimal rank-m orbit: {(i,j): 1<=i<=m, n-m+i<=j<=n}
std::vector<std::pair<int, int>> minimal_region(int n, int m) {
  std::vector<std::pair<int, int>> r;
  for (int i = 1; i <= m; ++i)
    for (int j = n - m + i; j <= n; ++j) r.emplace_back(i, j);
  return r;
}

}  // namespace

RatFunc base_fundamental(int n, int m, const TheoryContext& tc) {
  if (2 * m > n) throw RankTooLarge("rank too large for the ambient size");
  const VarContext& c = tc.vars;
  LaurentPoly num = LaurentPoly::one(c);
  Exps mono = zero_exps();
  FactorList den;
  for (auto& [i, j] : minimal_region(n, m)) {
    WeightFactor f = euler_weight(tc, i, j);
    den.push_back({f.atom, 1});
    for (int s = 0; s < kMaxSlots; ++s) mono[s] = int16_t(mono[s] - f.mono[s]);
  }
  return RatFunc::from_factored(num.shift(mono), den);
}

RatFunc base_characteristic(int n, int m, const TheoryContext& tc) {
  if (2 * m > n) throw RankTooLarge("rank too large for the ambient size");
  const VarContext& c = tc.vars;
  LaurentPoly num = LaurentPoly::one(c);
  FactorList den;
  LaurentPoly y = tc.theory == Theory::KTheory ? LaurentPoly::var_y(c)
                                               : LaurentPoly::zero(c);
  for (auto& [i, j] : minimal_region(n, m)) {
    WeightFactor f = euler_weight(tc, i, j);
    den.push_back({f.atom, 1});
    bool anti = (j == n - m + i);
    if (tc.theory == Theory::Cohomology) {
      // c/e = (1 + u + t_i - t_j)/(u + t_i - t_j); c/e - 1 = 1/(u + t_i - t_j)
      if (!anti) num *= LaurentPoly::one(c) + f.atom;
    } else {
      // c/e = (u t_i + y t_j)/(u t_i - t_j); c/e - 1 = (1+y) t_j/(u t_i - t_j)
      LaurentPoly tj = LaurentPoly::var_t(c, j);
      if (anti) {
        num *= (LaurentPoly::one(c) + y) * tj;
      } else {
        // atom + (1+y) t_j = u t_i + y t_j  (resp. t_i + y t_j when u = 1)
        num *= f.atom + (LaurentPoly::one(c) + y) * tj;
      }
    }
  }
  return RatFunc::from_factored(std::move(num), den);
}

namespace {

void validate_word(const Involution& w, const ReducedWord& word) {
  int n = w.n();
  int m = w.rank();
  if (int(word.size()) + m * (m + 1) / 2 != orbit_dim(w))
    throw DimensionMismatch("word length does not match the orbit dimension");
  UpperMatrix mat = n_matrix(minimal_involution(n, m));
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    mat = conjugate(Permutation::simple(n, *it), mat);  // may throw
  if (!(mat == n_matrix(w)))
    throw UsageError("word does not drive the minimal orbit to the target orbit");
}

}  // namespace

RatFunc normalized_class(const Involution& w, const TheoryContext& tc, ClassKind kind,
                         const ReducedWord& word) {
  tc.validate();
  validate_word(w, word);
  int n = w.n();
  int m = w.rank();
  RatFunc base = (kind == ClassKind::Fundamental) ? base_fundamental(n, m, tc)
                                                  : base_characteristic(n, m, tc);
  return apply_word(word, base, op_for(tc.theory, kind));
}

RatFunc normalized_class(const Involution& w, const TheoryContext& tc, ClassKind kind) {
  return normalized_class(w, tc, kind, reduced_word(pi_w(w)));
}

ClassResult compute_class(const Involution& w, const TheoryContext& tc, ClassKind kind,
                          const ReducedWord& word) {
  ClassResult r;
  r.w = w;
  r.theory = tc.theory;
  r.u_mode = tc.u_mode;
  r.kind = kind;
  r.word = word;
  r.dim = orbit_dim(w);
  r.codim = w.n() * (w.n() - 1) / 2 - r.dim;
  r.normalized = normalized_class(w, tc, kind, word);
  LaurentPoly eN = euler_class(w.n(), tc);
  // polynomiality certificate: den | e(N), value = cofactor * num
  LaurentPoly cof = exact_div(eN, r.normalized.den());
  r.value = cof * r.normalized.num();
  return r;
}

ClassResult compute_class(const Involution& w, const TheoryContext& tc, ClassKind kind) {
  return compute_class(w, tc, kind, reduced_word(pi_w(w)));
}

// ---------------------------------------------------------------------------
// Fixed-point localization oracle
// ---------------------------------------------------------------------------

namespace {

// Euler class of the tangent space at one fixed point, kept factored:
// sign * x^mono * prod(atoms)
struct PointEuler {
  int sign = 1;
  Exps mono = zero_exps();
  FactorList atoms;
};

void push_atom(PointEuler& p, LaurentPoly atom, Exps mono) {
  if (atom.leading_sign() < 0) {
    atom = -atom;
    p.sign = -p.sign;
  }
  for (int s = 0; s < kMaxSlots; ++s) p.mono[s] = int16_t(p.mono[s] + mono[s]);
  p.atoms.push_back({std::move(atom), 1});
}

PointEuler act_point(const PointEuler& p, const std::vector<int>& sigma) {
  PointEuler q;
  q.sign = p.sign;
  for (int s = 0; s < kMaxSlots; ++s) q.mono[s] = 0;
  // permute the monomial exponents (t-slots only; u and y are fixed)
  q.mono = p.mono;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    q.mono[1 + sigma[i] - 1] = p.mono[1 + int(i)];
  for (const Factor& f : p.atoms) {
    LaurentPoly a = f.base.act_permutation(sigma);
    if (a.leading_sign() < 0) {
      a = -a;
      q.sign = -q.sign;
    }
    q.atoms.push_back({std::move(a), f.mult});
  }
  return q;
}

// e(t_a/t_b) for the P^1 tangent directions (no u factor)
void pi1_weight(const TheoryContext& tc, int a, int b, LaurentPoly* atom, Exps* mono) {
  const VarContext& c = tc.vars;
  *mono = zero_exps();
  *atom = LaurentPoly::var_t(c, a) - LaurentPoly::var_t(c, b);
  if (tc.theory == Theory::KTheory) {
    // e^K(t_a/t_b) = 1 - t_b/t_a = (t_a - t_b) t_a^-1
    (*mono)[c.t_slot(a)] = -1;
  }
}

std::vector<PointEuler> fixed_point_eulers(const ReducedWord& word, int n, int m,
                                           const TheoryContext& tc) {
  PointEuler base;
  for (auto& [i, j] : minimal_region(n, m)) {
    WeightFactor f = euler_weight(tc, i, j);
    push_atom(base, f.atom, f.mono);
  }
  std::vector<PointEuler> pts = {base};
  // letters applied base-outward: last letter first
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    LaurentPoly a0, ainf;
    Exps m0, minf;
    pi1_weight(tc, i + 1, i, &a0, &m0);  // tangent at p_0
    pi1_weight(tc, i, i + 1, &ainf, &minf);
    std::vector<PointEuler> next;
    next.reserve(2 * pts.size());
    auto sigma = simple_swap(n, i);
    for (const PointEuler& p : pts) {
      PointEuler q0 = p;
      push_atom(q0, a0, m0);
      next.push_back(std::move(q0));
      PointEuler qi = act_point(p, sigma);
      push_atom(qi, ainf, minf);
      next.push_back(std::move(qi));
    }
    pts = std::move(next);
  }
  return pts;
}

RatFunc localization_sum(const ReducedWord& word, int n, int m, const TheoryContext& tc,
                         int jobs) {
  tc.validate();
  const VarContext& c = tc.vars;
  std::vector<PointEuler> pts = fixed_point_eulers(word, n, m, tc);
  for (PointEuler& p : pts) sort_factors(p.atoms);
  // common denominator: multiset max over all points
  FactorList common;
  for (const PointEuler& p : pts) {
    FactorList uni, am, bm;
    factor_union(common, p.atoms, &uni, &am, &bm);
    common = std::move(uni);
  }
  // sum of sign * x^{-mono} * (common \ atoms)
  std::vector<LaurentPoly> parts(pts.size(), LaurentPoly::zero(c));
  parallel_for(pts.size(), jobs, [&](std::size_t k) {
    const PointEuler& p = pts[k];
    FactorList uni, missing, other;
    factor_union(p.atoms, common, &uni, &missing, &other);
    LaurentPoly cof = LaurentPoly::one(c);
    for (const Factor& f : missing) cof *= f.base.pow(f.mult);
    Exps inv = zero_exps();
    for (int s = 0; s < kMaxSlots; ++s) inv[s] = int16_t(-p.mono[s]);
    parts[k] = cof.shift(inv).mul_int(p.sign);
  });
  LaurentPoly num = LaurentPoly::zero(c);
  for (const LaurentPoly& p : parts) num += p;
  // simplified once, here
  return RatFunc::from_factored(std::move(num), common);
}

}  // namespace

RatFunc localization_pushforward(const ReducedWord& word, int n, int m,
                                 const TheoryContext& tc, int jobs) {
  return localization_sum(word, n, m, tc, jobs);
}

RatFunc localization_pushforward_serial(const ReducedWord& word, int n, int m,
                                        const TheoryContext& tc) {
  return localization_sum(word, n, m, tc, 1);
}

LaurentPoly csm_lowest_part(const ClassResult& r) {
  if (r.theory != Theory::Cohomology || r.kind != ClassKind::Csm)
    throw UsageError("csm_lowest_part expects an H-theory CSM result");
  return r.value.homogeneous_component(r.codim);
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string poly_to_json(const LaurentPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  const VarContext& c = p.ctx();
  for (const Term& t : p.terms()) {
    nlohmann::ordered_json jt;
    jt["coeff"] = t.coeff.str();
    nlohmann::ordered_json ex;
    ex["u"] = int(t.exps[c.u_slot()]);
    std::vector<int> tv(c.n);
    for (int i = 1; i <= c.n; ++i) tv[i - 1] = t.exps[c.t_slot(i)];
    ex["t"] = tv;
    ex["y"] = int(t.exps[c.y_slot()]);
    jt["exps"] = ex;
    terms.push_back(jt);
  }
  return terms.dump();
}

namespace {

nlohmann::ordered_json class_json(const ClassResult& r) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json pr = nlohmann::ordered_json::array();
  for (auto& [a, b] : r.w.pairs()) pr.push_back({a, b});
  j["involution"] = pr;
  j["n"] = r.w.n();
  j["dim"] = r.dim;
  j["codim"] = r.codim;
  j["theory"] = theory_name(r.theory);
  j["u_mode"] = u_mode_name(r.u_mode);
  j["kind"] = kind_name(r.kind);
  j["word"] = r.word;
  j["value"] = nlohmann::ordered_json::parse(poly_to_json(r.value));
  return j;
}

}  // namespace

std::string class_to_json(const ClassResult& r) { return class_json(r).dump(); }

std::string class_to_text(const ClassResult& r) {
  std::ostringstream os;
  os << "w = " << r.w.to_string() << "  n = " << r.w.n() << "  theory = "
     << theory_name(r.theory) << "  kind = " << kind_name(r.kind) << "\n";
  os << "dim = " << r.dim << "  codim = " << r.codim << "  word = "
     << word_to_string(r.word) << "\n";
  os << "value = " << r.value.to_string() << "\n";
  os << "value/e(N) = " << r.normalized.to_string() << "\n";
  return os.str();
}

std::string class_to_latex(const ClassResult& r) {
  VarNames names = VarNames::standard(r.value.ctx());
  for (int i = 1; i <= r.value.ctx().n; ++i)
    names.names[r.value.ctx().t_slot(i)] = "t_{" + std::to_string(i) + "}";
  return r.value.to_latex(names);
}

}  // namespace sqz
