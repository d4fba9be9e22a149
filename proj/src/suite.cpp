#include "aw/suite.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "aw/awpoly.hpp"
#include "aw/classify.hpp"
#include "aw/leonard.hpp"
#include "aw/qgroups.hpp"

namespace aw {

namespace {

using Args = SymbolArgs<Scalar>;

// Tally of checked cases and the first failure.
struct Tally {
  std::size_t cases = 0;
  std::string first_failure;
  bool ok() const { return first_failure.empty(); }
  void check(bool cond, const std::string& what) {
    ++cases;
    if (!cond && first_failure.empty()) first_failure = what;
  }
  template <class F>
  void guarded(const std::string& what, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      check(false, what + ": " + e.what());
    }
  }
};

std::string label(const ModuleParams& p) {
  return "n=" + std::to_string(p.n) + " q=" + p.q.str() + " (a,b,c)=(" + p.a.str() + "," + p.b.str() + "," + p.c.str() +
         ")";
}

Scalar random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7), coin(0, 3);
  for (;;) {
    Scalar x(mpq_class(num(rng), den(rng)), coin(rng) == 0 ? mpq_class(num(rng), den(rng)) : mpq_class(0));
    if (!x.is_zero()) return x;
  }
}

Scalar random_q(std::mt19937_64& rng) {
  for (;;) {
    Scalar q = random_nonzero(rng);
    if (!is_root_of_unity(q) && !(pow(q, 4) == Scalar(1))) return q;
  }
}

// Grid q in {2, 3, 1/2}, n <= max_n, (a, b, c) in {1, -1, 2, 3, q, q^2, i}^3 with duplicates removed.
std::vector<ModuleParams> parameter_grid(int max_n) {
  std::vector<ModuleParams> out;
  for (const Scalar& q : {Scalar(2), Scalar(3), Scalar::ratio(1, 2)}) {
    std::vector<Scalar> values;
    for (const Scalar& v : {Scalar(1), Scalar(-1), Scalar(2), Scalar(3), q, q * q, Scalar::i()}) {
      bool seen = false;
      for (const auto& w : values) seen = seen || w == v;
      if (!seen) values.push_back(v);
    }
    for (int n = 0; n <= max_n; ++n)
      for (const auto& a : values)
        for (const auto& b : values)
          for (const auto& c : values) out.push_back(ModuleParams{n, q, a, b, c, std::nullopt});
  }
  return out;
}

bool same_set(std::vector<Scalar> xs, std::vector<Scalar> ys) {
  auto contains = [](const std::vector<Scalar>& v, const Scalar& x) {
    for (const auto& y : v)
      if (y == x) return true;
    return false;
  };
  for (const auto& x : xs)
    if (!contains(ys, x)) return false;
  for (const auto& y : ys)
    if (!contains(xs, y)) return false;
  return true;
}

void criterion1(Tally& t, const SuiteOptions& o) {
  std::mt19937_64 rng(o.seed);
  for (int draw = 0; draw < 200; ++draw) {
    const Scalar L = random_nonzero(rng), q = random_q(rng), x = random_nonzero(rng), y = random_nonzero(rng),
                 z = random_nonzero(rng);
    const int n = static_cast<int>(rng() % 9);
    const std::string tag = "draw " + std::to_string(draw);
    const Args s = Args::specialized(n, q, x, y, z), si = s.inverted_q();
    for (int i = -3; i <= 10; ++i) {
      t.check(theta(i, L.inverse(), q.inverse(), x.inverse()) == theta(i, L, q, x), tag + " theta inversion");
      t.check(phi(i, L.inverse(), q.inverse(), x.inverse(), y.inverse(), z.inverse()) == phi(i, L, q, x, y, z),
              tag + " phi inversion");
      t.check(phi(i, L, q, x, y, z) == phi(i, L, q, x, y, z.inverse()), tag + " phi in Z");
      t.check(theta(n - i, s) == theta(i, si), tag + " theta reflection");
      t.check(phi(n - i + 1, s) == phi(i, si), tag + " phi reflection");
      t.check(theta(i, L, q, x) == (q * q + (q * q).inverse()) * theta(i - 1, L, q, x) - theta(i - 2, L, q, x),
              tag + " theta recurrence");
    }
    t.check(omega(L, q, y, x, z) == omega(L, q, x, y, z), tag + " omega symmetry");
    t.check(omega(L.inverse(), q.inverse(), x.inverse(), y.inverse(), z.inverse()) == omega(L, q, x, y, z),
            tag + " omega inversion");
    Scalar sum(0);
    for (int i = 0; i <= n; ++i) sum += theta(i, s);
    t.check(sum == qint(n + 1, q) * (x + x.inverse()), tag + " theta sum");
  }
}

void criterion2(Tally& t, const SuiteOptions&) {
  const std::size_t depth = 8, window = 7;
  const Scalar L = Scalar::ratio(5, 2);
  const Scalar qs[] = {Scalar(2), Scalar::ratio(1, 3), Scalar::parse("1+i")};
  const Scalar xs[] = {Scalar(3), Scalar::ratio(-1, 2), Scalar::parse("2i")};
  const Scalar ys[] = {Scalar(5), Scalar::ratio(2, 3), Scalar::parse("1-i")};
  const Scalar zs[] = {Scalar(7), Scalar::ratio(-3, 4), Scalar::i()};
  for (const auto& q : qs)
    for (const auto& x : xs)
      for (const auto& y : ys)
        for (const auto& z : zs) {
          const std::string tag = "q=" + q.str() + " x=" + x.str() + " y=" + y.str() + " z=" + z.str();
          t.guarded(tag, [&] {
            const Args s{L, q, x, y, z, std::nullopt};
            auto rep = build_rep(depth, s);
            auto rep_xinv = build_rep(depth, s.with_xyz(x.inverse(), y, z));
            auto rep_z = build_rep(depth, s.with_xyz(z, y, z));
            ExactMatrix e = build_transition(TransitionKind::E, depth, s);
            ExactMatrix sm = build_transition(TransitionKind::S, depth, s);
            t.check((rep.L * e - e * rep_xinv.L).block(0, 0, depth, window).is_zero(), tag + " E equation");
            t.check((rep.T3 * sm - sm * rep_z.L).block(0, 0, window, window).is_zero(), tag + " S equation");
            for (int n = 0; n <= 4; ++n) {
              const Args sp = Args::specialized(n, q, x, y, z);
              auto rn = build_rep(n + 1, sp);
              ExactMatrix f = build_transition(TransitionKind::F, n + 1, sp);
              ExactMatrix p = build_transition(TransitionKind::P, n + 1, sp);
              auto rinv = build_rep(n + 1, sp.inverted_q().with_xyz(y, y, y));
              t.check((rn.L * f - f * rn.L).is_zero(), tag + " F equation n=" + std::to_string(n));
              t.check((rn.U * p - p * rinv.L).is_zero(), tag + " P equation n=" + std::to_string(n));
            }
          });
        }
}

void criterion3(Tally& t, const SuiteOptions&) {
  for (const auto& p : parameter_grid(4)) {
    t.guarded(label(p), [&] {
      DeltaRep rep = vn_module(p);
      RelationReport r = check_relations(rep);
      t.check(r.ok() && r.scalar(), label(p) + " V_n relations");
    });
  }
  const Scalar lambda = Scalar::ratio(5, 3);
  for (const Scalar& q : {Scalar(2), Scalar(3), Scalar::ratio(1, 2)})
    for (const auto& abc : std::vector<std::array<Scalar, 3>>{{Scalar(2), Scalar(3), Scalar::i()},
                                                             {q, Scalar(-1), q * q},
                                                             {Scalar(1), Scalar(1), Scalar(1)}}) {
      ModuleParams p{0, q, abc[0], abc[1], abc[2], lambda};
      t.guarded("Verma " + label(p), [&] {
        RelationReport r = check_relations(verma_truncation(p, 8));
        t.check(r.ok() && r.scalar(), "Verma " + label(p));
      });
    }
}

void criterion4(Tally& t, const SuiteOptions&) {
  for (const auto& p : parameter_grid(3)) {
    t.guarded(label(p), [&] {
      t.check(irreducible_criterion(p) == irreducible_oracle(vn_module(p)), label(p) + " criterion differs from oracle");
    });
  }
}

void criterion5(Tally& t, const SuiteOptions& o) {
  std::uint64_t k = 0;
  for (const auto& p : parameter_grid(3)) {
    if (!irreducible_criterion(p)) continue;
    const std::uint64_t seed = o.seed + k++;
    t.guarded(label(p), [&] {
      const DeltaRep base = vn_module(p);
      const Conjugated c = random_conjugation(base, seed);
      const RecognitionResult r = recognize(c.rep);
      const DeltaRep target = vn_module(r.params);
      const ExactMatrix& m = r.intertwiner;
      auto m_inv = inverse(m);
      bool exact = m_inv && *m_inv * c.rep.A * m == target.A && *m_inv * c.rep.B * m == target.B &&
                   *m_inv * c.rep.C * m == target.C;
      t.check(r.orbit == orbit_key(p.a, p.b, p.c), label(p) + " orbit key");
      t.check(exact, label(p) + " intertwiner");
      auto roots = trace_quadratic_roots(c.rep);
      const Scalar* abc[3] = {&p.a, &p.b, &p.c};
      for (int i = 0; i < 3; ++i)
        t.check(same_set(roots[i], {*abc[i], abc[i]->inverse()}), label(p) + " trace quadratic");
    });
  }
}

std::vector<ModuleParams> generic_points() {
  auto P = [](int n, Scalar q, Scalar a, Scalar b, Scalar c) { return ModuleParams{n, q, a, b, c, std::nullopt}; };
  return {P(1, 2, 2, 3, 5),
          P(2, 3, 2, Scalar::ratio(5, 3), Scalar::i()),
          P(3, Scalar::ratio(1, 2), 3, -2, 7),
          P(2, 3, 2, 5, 7),
          P(3, Scalar::ratio(1, 2), 3, -2, Scalar::parse("1+i")),
          P(1, 2, 3, 2, 5),
          P(2, 2, Scalar::ratio(3, 5), 7, Scalar::parse("2-i")),
          P(3, 3, 5, Scalar::ratio(-1, 3), 11),
          P(1, Scalar::ratio(2, 3), 13, 4, Scalar::ratio(5, 7)),
          P(2, Scalar::parse("1+i"), 3, 5, Scalar::ratio(7, 2))};
}

void criterion6(Tally& t, const SuiteOptions&) {
  for (const auto& p : generic_points()) {
    t.check(irreducible_criterion(p), label(p) + " not irreducible");
    for (const auto& g : GroupElem24::all())
      t.guarded(label(p) + " " + g.str(), [&] { t.check(change_basis24(p, g).matches, label(p) + " " + g.str()); });
  }
  using G = Generator;
  const std::vector<std::pair<std::vector<G>, std::vector<G>>> words = {
      {{G::E0, G::Sigma}, {G::Sigma, G::E0}},
      {{G::Tau}, {G::Tau, G::Tau, G::Tau}},
      {{G::Sigma, G::Tau}, {G::Tau, G::Sigma, G::Tau, G::Sigma}},
      {{G::E1}, {G::E1, G::E1, G::E1}},
      {{G::E0, G::E1}, {G::E1, G::E0}},
  };
  const ModuleParams p = generic_points()[1];
  for (const auto& [w1, w2] : words) {
    GroupElem24 g1, g2;
    for (auto x : w1) g1 = g1 * as_element(x);
    for (auto x : w2) g2 = g2 * as_element(x);
    t.check(g1 == g2, "word pair names different elements");
    t.check(proportionality(transition_for_word(p, w1), transition_for_word(p, w2)).has_value(),
            "word pair " + g1.str() + " not proportional");
  }
}

void criterion7(Tally& t, const SuiteOptions&) {
  const AWContext gen{4, 3, 3, 5, 7};
  const AWContext gen2{Scalar::ratio(5, 3), 3, Scalar::parse("2+i"), -2, Scalar::ratio(3, 2)};
  const AWContext example{4, 2, 3, 5, 7};
  for (const auto* ctx : {&gen, &gen2}) {
    for (int i = 0; i <= 5; ++i) {
      const std::string tag = "lambda=" + ctx->lambda.str() + " i=" + std::to_string(i);
      t.guarded(tag, [&] {
        const RecurrenceCoeffs r = recurrence_coeffs(i, *ctx);
        const Polynomial x({Scalar(0), Scalar(1)});
        Polynomial rhs = aw_poly(i + 1, *ctx) * r.a + aw_poly(i, *ctx) * r.c;
        if (i > 0) rhs = rhs + aw_poly(i - 1, *ctx) * r.b;
        t.check(x * aw_poly(i, *ctx) == rhs, tag + " recurrence");
      });
    }
  }
  for (const auto* ctx : {&example, &gen})
    for (int i = 0; i <= 2; ++i) {
      const std::string tag = "lambda=" + ctx->lambda.str() + " D i=" + std::to_string(i);
      t.guarded(tag, [&] { t.check(aw_operator_check(i, *ctx, 4 * (i + 2) + 4), tag); });
    }
}

void criterion8(Tally& t, const SuiteOptions&) {
  for (const auto& p : generic_points()) {
    t.guarded(label(p), [&] {
      auto r = realize_uq(p, 1);
      t.check(r && r->ok(), label(p) + " type 1 realization");
      t.check(!realize_uq(p, -1), label(p) + " type -1 should be absent");
    });
  }
  for (int n : {1, 2}) {
    const ModuleParams p{n, 2, Scalar::i(), Scalar::i(), Scalar::i(), std::nullopt};
    for (int eps : {1, -1})
      t.guarded(label(p), [&] {
        auto r = realize_uq(p, eps);
        t.check(r && r->ok() && r->eps == eps, label(p) + " type " + std::to_string(eps));
      });
  }
}

void criterion9(Tally& t, const SuiteOptions&) {
  for (const Scalar& q : {Scalar(2), Scalar(3)})
    for (int n = 0; n <= 3; ++n) {
      std::vector<So3Family> families{{true, {1, 1, 1}}, {true, {-1, -1, 1}}, {true, {1, -1, -1}},
                                      {true, {-1, 1, -1}}, {false, {1, 1, 1}}};
      for (const auto& f : families) {
        const std::string tag = "so3 n=" + std::to_string(n) + " q=" + q.str() + (f.classical ? " classical" : " nonclassical");
        t.guarded(tag, [&] { t.check(so3_check(n, q, f).ok(), tag); });
      }
    }
}

std::map<int, int> expected_components(int m, int n, int p) {
  std::map<int, int> out;
  for (int i = 0; i <= std::min(m, n); ++i) {
    const int j = m + n - 2 * i;
    for (int k = 0; k <= std::min(j, p); ++k) ++out[j + p - 2 * k];
  }
  return out;
}

void criterion10(Tally& t, const SuiteOptions&) {
  for (const auto& d : std::vector<std::array<int, 3>>{{1, 1, 1}, {1, 1, 2}, {2, 1, 1}, {1, 2, 1}}) {
    const std::string tag = "racah (" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]) + ")";
    t.guarded(tag, [&] {
      RacahData r = racah(d[0], d[1], d[2], 2);
      t.check(r.relations.central, tag + " centrality");
      t.check(r.cg_ok && r.components == expected_components(d[0], d[1], d[2]), tag + " CG multiset");
      t.check(r.u_diagonalizes_a && r.v_diagonalizes_b, tag + " coupled bases");
      t.check(r.tridiagonal_ok, tag + " tridiagonal");
    });
  }
}

void criterion11(Tally& t, const SuiteOptions&) {
  auto E = [](double x) { return std::polar(1.0, x); };
  t.guarded("unitary", [&] {
    UnitaryReport r = unitary_check_float(2, E(1.0), E(0.3), E(0.3), E(0.7), 1e-9);
    std::ostringstream os;
    os << "residuals " << r.residual_a << " " << r.residual_b << " " << r.residual_c;
    t.check(r.pass(), os.str());
  });
}

struct CriterionSpec {
  const char* title;
  double limit;
  std::function<void(Tally&, const SuiteOptions&)> run;
};

const std::vector<CriterionSpec>& criteria() {
  static const std::vector<CriterionSpec> specs = {
      {"symbol identities", 5, criterion1},
      {"matrix equations E S F P", 30, criterion2},
      {"V_n and Verma relations", 120, criterion3},
      {"irreducibility criterion equals oracle", 300, criterion4},
      {"classification round trip", 300, criterion5},
      {"24 bases and word independence", 60, criterion6},
      {"Askey-Wilson recurrence and operator", 30, criterion7},
      {"U_q(sl2) realizations", 60, criterion8},
      {"so3 specialization", 30, criterion9},
      {"Racah coupling", 180, criterion10},
      {"unitary form", 1, criterion11},
  };
  return specs;
}

}  // namespace

CriterionResult run_criterion(int id, const SuiteOptions& opts) {
  if (id < 1 || id > kCriterionCount) throw PreconditionError("criterion id must be in 1.." + std::to_string(kCriterionCount));
  const CriterionSpec& spec = criteria()[id - 1];
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  spec.run(t, opts);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CriterionResult r{id, spec.title, t.ok() && t.cases > 0, t.cases, t.first_failure, secs, spec.limit};
  if (r.passed && !r.within_limit()) {
    r.passed = false;
    r.detail = "time limit exceeded";
  }
  return r;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id)
    if (opts.only.empty() || opts.only.count(id)) out.push_back(run_criterion(id, opts));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << " | " << r.title << " | " << r.cases
     << " cases | " << r.seconds << "s/" << r.limit_seconds << "s";
  if (!r.detail.empty()) os << " | " << r.detail;
  return os.str();
}

}  // namespace aw
