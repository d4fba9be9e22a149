#include "aw/deltamod.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "aw/classify.hpp"
#include "aw/linalg.hpp"

namespace aw {

void ModuleParams::validate() const {
  if (n < 0) throw PreconditionError("n must be nonnegative");
  if (q.is_zero() || a.is_zero() || b.is_zero() || c.is_zero()) throw PreconditionError("q, a, b, c must be nonzero");
  if (lambda && lambda->is_zero()) throw PreconditionError("lambda must be nonzero");
  if (is_root_of_unity(q)) throw PreconditionError("q must not be a root of unity");
}

SymbolArgs<Scalar> ModuleParams::args() const { return {lam(), q, a, b, c, lambda ? std::nullopt : std::optional<int>(n)}; }

void DeltaRep::validate() const {
  const std::size_t d = A.rows();
  for (const auto* m : {&A, &B, &C})
    if (m->rows() != d || m->cols() != d) throw PreconditionError("A, B, C must be square of equal size");
  if (q.is_zero() || pow(q, 4) == Scalar(1)) throw PreconditionError("q^4 = 1 is degenerate");
  if (window > d) throw PreconditionError("window exceeds dimension");
}

namespace {

struct Products {
  ExactMatrix ab, ba;
};

Products products(const DeltaRep& r) { return {r.A * r.B, r.B * r.A}; }

ExactMatrix gamma_from(const DeltaRep& r, const Products& p) {
  const Scalar& q = r.q;
  const Scalar qi = q.inverse();
  return (r.C + (p.ab * q - p.ba * qi) * (q * q - qi * qi).inverse()) * (q + qi);
}

// The common shape of the alpha and beta formulas: X^2 Y - (q^2+q^-2) XYX + YX^2 + (q^2-q^-2)^2 Y + (q-q^-1)^2 X gamma.
ExactMatrix quadratic_image(const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& xy, const ExactMatrix& yx,
                            const ExactMatrix& gamma, const Scalar& q) {
  const Scalar qi = q.inverse();
  const Scalar d1 = q - qi, d2 = q * q - qi * qi;
  ExactMatrix num = x * xy - (x * yx) * (q * q + qi * qi) + yx * x + y * (d2 * d2) + (x * gamma) * (d1 * d1);
  return num * (d1 * d2).inverse();
}

ExactMatrix top(const ExactMatrix& m, std::size_t w) { return m.block(0, 0, w, w); }

}  // namespace

ExactMatrix gamma_image(const DeltaRep& rep) { return gamma_from(rep, products(rep)); }

ExactMatrix alpha_image(const DeltaRep& rep, const ExactMatrix& gamma) {
  auto p = products(rep);
  return quadratic_image(rep.B, rep.A, p.ba, p.ab, gamma, rep.q);
}

ExactMatrix beta_image(const DeltaRep& rep, const ExactMatrix& gamma) {
  auto p = products(rep);
  return quadratic_image(rep.A, rep.B, p.ab, p.ba, gamma, rep.q);
}

ExactMatrix c_vee(const DeltaRep& rep) {
  const Scalar qi = rep.q.inverse();
  return rep.C + commutator(rep.A, rep.B) * (rep.q - qi).inverse();
}

ExactMatrix cubic_residual(const DeltaRep& rep) {
  const Scalar& q = rep.q;
  const Scalar qi = q.inverse();
  const Scalar q3 = qint(3, q);
  const Scalar d2 = q * q - qi * qi;
  const ExactMatrix& a = rep.A;
  const ExactMatrix& b = rep.B;
  ExactMatrix b2 = b * b;
  ExactMatrix ba = b * a, ab = a * b;
  return b2 * ba - (b2 * ab) * q3 + (ba * b2) * q3 - ab * b2 + (ba - ab) * (d2 * d2);
}

ExactMatrix c_from_gamma(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& gamma, const Scalar& q) {
  const Scalar qi = q.inverse();
  return gamma * (q + qi).inverse() - (a * b * q - b * a * qi) * (q * q - qi * qi).inverse();
}

RelationReport check_relations(const DeltaRep& rep) {
  rep.validate();
  RelationReport r;
  r.window = rep.window;
  const std::size_t w = rep.window;
  auto p = products(rep);
  ExactMatrix g = gamma_from(rep, p);
  ExactMatrix al = quadratic_image(rep.B, rep.A, p.ba, p.ab, g, rep.q);
  ExactMatrix be = quadratic_image(rep.A, rep.B, p.ab, p.ba, g, rep.q);
  const ExactMatrix* images[3] = {&al, &be, &g};
  r.central = true;
  for (int k = 0; k < 3; ++k) {
    for (const auto* x : {&rep.A, &rep.B, &rep.C})
      if (!top(commutator(*images[k], *x), w).is_zero()) r.central = false;
    r.scalars[k] = top(*images[k], w).scalar_value();
  }
  r.cubic_zero = top(cubic_residual(rep), w).is_zero();
  if (rep.central) {
    bool same = true;
    for (int k = 0; k < 3; ++k) same = same && r.scalars[k] && *r.scalars[k] == (*rep.central)[k];
    r.matches_expected = same;
  }
  return r;
}

DeltaRep verma_truncation(const ModuleParams& params, std::size_t depth) {
  params.validate();
  if (depth == 0) throw PreconditionError("depth must be positive");
  if (pow(params.q, 4) == Scalar(1)) throw PreconditionError("q^4 = 1 is degenerate");
  SymbolArgs<Scalar> s{params.lam(), params.q, params.a, params.b, params.c, std::nullopt};
  auto m = build_rep(depth, s);
  const Scalar& L = s.lambda;
  const Scalar& q = s.q;
  DeltaRep r{m.L, m.U, m.T3, params.q, std::array<Scalar, 3>{omega(L, q, params.b, params.c, params.a),
                                                            omega(L, q, params.c, params.a, params.b),
                                                            omega(L, q, params.a, params.b, params.c)},
             depth > 3 ? depth - 3 : 0};
  return r;
}

DeltaRep vn_module(const ModuleParams& params) {
  params.validate();
  if (params.lambda && *params.lambda != pow(params.q, params.n))
    throw PreconditionError("V_n needs lambda = q^n");
  auto s = SymbolArgs<Scalar>::specialized(params.n, params.q, params.a, params.b, params.c);
  const std::size_t d = static_cast<std::size_t>(params.n) + 1;
  auto m = build_rep(d, s);
  const Scalar& L = s.lambda;
  const Scalar& q = s.q;
  return {m.L, m.U, m.T3, params.q,
          std::array<Scalar, 3>{omega(L, q, params.b, params.c, params.a), omega(L, q, params.c, params.a, params.b),
                                omega(L, q, params.a, params.b, params.c)},
          d};
}

bool GroupElem24::odd() const {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 1;
}

bool GroupElem24::in_klein() const {
  return sign1 == 1 && (perm == std::array<int, 3>{0, 1, 2} || perm == std::array<int, 3>{2, 1, 0});
}

std::string GroupElem24::str() const {
  static const std::map<std::array<int, 3>, std::string> names = {
      {{0, 1, 2}, "1"}, {{2, 1, 0}, "s"}, {{1, 0, 2}, "t"}, {{1, 2, 0}, "st"}, {{2, 0, 1}, "ts"}, {{0, 2, 1}, "sts"}};
  return "(" + std::to_string(sign0) + "," + std::to_string(sign1) + "," + names.at(perm) + ")";
}

GroupElem24 operator*(const GroupElem24& g, const GroupElem24& h) {
  // (1,g)(s',1) = (t,1)(1,g) with t[g(i)] = s'[i]
  auto sg = g.sign_triple();
  auto sh = h.sign_triple();
  std::array<int, 3> t{};
  for (int i = 0; i < 3; ++i) t[g.perm[i]] = sh[i];
  GroupElem24 r;
  r.sign0 = sg[0] * t[0];
  r.sign1 = sg[1] * t[1];
  for (int i = 0; i < 3; ++i) r.perm[i] = g.perm[h.perm[i]];
  return r;
}

GroupElem24 as_element(Generator g) {
  switch (g) {
    case Generator::E0:
      return GroupElem24::neg0();
    case Generator::E1:
      return GroupElem24::neg1();
    case Generator::Sigma:
      return GroupElem24::sigma();
    case Generator::Tau:
      return GroupElem24::tau();
  }
  return {};
}

std::string generator_name(Generator g) {
  switch (g) {
    case Generator::E0:
      return "E0";
    case Generator::E1:
      return "E1";
    case Generator::Sigma:
      return "sigma";
    case Generator::Tau:
      return "tau";
  }
  return "?";
}

namespace {

struct WordTable {
  std::vector<GroupElem24> elements;
  std::vector<std::vector<Generator>> words;
};

const WordTable& word_table() {
  static const WordTable table = [] {
    WordTable t;
    t.elements.push_back(GroupElem24::identity());
    t.words.emplace_back();
    for (std::size_t k = 0; k < t.elements.size(); ++k)
      for (Generator gen : {Generator::E0, Generator::E1, Generator::Sigma, Generator::Tau}) {
        GroupElem24 next = t.elements[k] * as_element(gen);
        if (std::find(t.elements.begin(), t.elements.end(), next) != t.elements.end()) continue;
        auto w = t.words[k];
        w.push_back(gen);
        t.elements.push_back(next);
        t.words.push_back(std::move(w));
      }
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<GroupElem24>& GroupElem24::all() { return word_table().elements; }

const std::vector<Generator>& canonical_word(const GroupElem24& g) {
  const auto& t = word_table();
  auto it = std::find(t.elements.begin(), t.elements.end(), g);
  if (it == t.elements.end()) throw PreconditionError("not a group element: " + g.str());
  return t.words[static_cast<std::size_t>(it - t.elements.begin())];
}

Tuple4 act(const Tuple4& t, const GroupElem24& g) {
  auto s = g.sign_triple();
  std::array<Scalar, 3> x{t.a, t.b, t.c};
  for (int i = 0; i < 3; ++i)
    if (s[i] < 0) x[i] = x[i].inverse();
  const bool odd = g.odd();
  std::array<Scalar, 3> y;
  for (int i = 0; i < 3; ++i) y[i] = odd ? x[g.perm[i]].inverse() : x[g.perm[i]];
  return {odd ? -t.eps : t.eps, y[0], y[1], y[2]};
}

OrbitKey orbit_key(const Scalar& a, const Scalar& b, const Scalar& c) {
  OrbitKey k;
  const Scalar* in[3] = {&a, &b, &c};
  for (int i = 0; i < 3; ++i) {
    if (in[i]->is_zero()) throw PreconditionError("orbit_key: zero entry");
    Scalar inv_x = in[i]->inverse();
    k.key[i] = lex_less(*in[i], inv_x) ? inv_x : *in[i];
  }
  return k;
}

namespace {

SymbolArgs<Scalar> tuple_args(const ModuleParams& p, const Tuple4& t) {
  return SymbolArgs<Scalar>::specialized(p.n, pow(p.q, t.eps), t.a, t.b, t.c);
}

ExactMatrix step_transition(const ModuleParams& p, const Tuple4& t, Generator gen) {
  const std::size_t d = static_cast<std::size_t>(p.n) + 1;
  auto s = tuple_args(p, t);
  switch (gen) {
    case Generator::E0:
      return build_transition(TransitionKind::E, d, s);
    case Generator::E1:
      return build_transition(TransitionKind::F, d, s.with_xyz(s.x, s.y.inverse(), s.z));
    case Generator::Sigma:
      return build_transition(TransitionKind::S, d, s);
    case Generator::Tau:
      return build_transition(TransitionKind::P, d, s) *
             build_transition(TransitionKind::E, d, s.inverted_q().with_xyz(s.y, s.y, s.y));
  }
  throw PreconditionError("unknown generator");
}

}  // namespace

ExactMatrix transition_for_word(const ModuleParams& params, const std::vector<Generator>& word) {
  params.validate();
  ExactMatrix m = ExactMatrix::identity(static_cast<std::size_t>(params.n) + 1);
  Tuple4 t{1, params.a, params.b, params.c};
  for (Generator gen : word) {
    m = m * step_transition(params, t, gen);
    t = act(t, as_element(gen));
  }
  return m;
}

std::array<ExactMatrix, 3> expected_matrices24(const ModuleParams& params, const GroupElem24& g) {
  Tuple4 t = act(Tuple4{1, params.a, params.b, params.c}, g);
  auto m = build_rep(static_cast<std::size_t>(params.n) + 1, tuple_args(params, t));
  const ExactMatrix* forms[3] = {&m.L, &m.U, &m.T3};
  std::array<ExactMatrix, 3> out;
  for (int k = 0; k < 3; ++k) out[g.perm[k]] = *forms[k];
  return out;
}

Basis24 change_basis24(const ModuleParams& params, const GroupElem24& g) {
  params.validate();
  if (!g.in_klein() && !irreducible_criterion(params))
    throw PreconditionError("change_basis24: V_n(a,b,c) is reducible; only the Klein subgroup bases exist");
  DeltaRep rep = vn_module(params);
  Basis24 out;
  out.element = g;
  out.params = act(Tuple4{1, params.a, params.b, params.c}, g);
  out.transition = transition_for_word(params, canonical_word(g));
  auto inv_m = inverse(out.transition);
  if (!inv_m) throw PreconditionError("change_basis24: transition matrix is singular");
  out.A = *inv_m * rep.A * out.transition;
  out.B = *inv_m * rep.B * out.transition;
  out.C = *inv_m * rep.C * out.transition;
  auto expected = expected_matrices24(params, g);
  out.matches = out.A == expected[0] && out.B == expected[1] && out.C == expected[2];
  return out;
}

}  // namespace aw
