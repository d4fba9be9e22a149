#include "aw/io.hpp"

#include <map>

namespace aw {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

const std::map<std::array<int, 3>, std::string>& perm_names() {
  static const std::map<std::array<int, 3>, std::string> names = {
      {{0, 1, 2}, "1"}, {{2, 1, 0}, "s"}, {{1, 0, 2}, "t"}, {{1, 2, 0}, "st"}, {{2, 0, 1}, "ts"}, {{0, 2, 1}, "sts"}};
  return names;
}

}  // namespace

Json to_json(const Scalar& x) { return x.str(); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw PreconditionError("scalar must be a string or an integer");
}

Json to_json(const ExactMatrix& m) {
  Json entries = Json::array();
  for (const auto& x : m.entries()) entries.push_back(x.str());
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

ExactMatrix matrix_from_json(const Json& j) {
  const std::size_t r = j.at("rows").get<std::size_t>(), c = j.at("cols").get<std::size_t>();
  std::vector<Scalar> e;
  for (const auto& x : j.at("entries")) e.push_back(scalar_from_json(x));
  return ExactMatrix(r, c, std::move(e));
}

Json to_json(const ModuleParams& p) {
  Json j{{"n", p.n}, {"q", p.q.str()}, {"a", p.a.str()}, {"b", p.b.str()}, {"c", p.c.str()}};
  if (p.lambda) j["lambda"] = p.lambda->str();
  return j;
}

ModuleParams params_from_json(const Json& j) {
  ModuleParams p;
  p.n = j.value("n", 0);
  p.q = scalar_from_json(j.at("q"));
  p.a = scalar_from_json(j.at("a"));
  p.b = scalar_from_json(j.at("b"));
  p.c = scalar_from_json(j.at("c"));
  if (j.contains("lambda") && !j.at("lambda").is_null()) p.lambda = scalar_from_json(j.at("lambda"));
  return p;
}

Json to_json(const DeltaRep& r) {
  Json j{{"A", to_json(r.A)}, {"B", to_json(r.B)}, {"C", to_json(r.C)}, {"q", r.q.str()}};
  if (r.central) j["central"] = {(*r.central)[0].str(), (*r.central)[1].str(), (*r.central)[2].str()};
  j["window"] = r.window;
  return j;
}

DeltaRep deltarep_from_json(const Json& j) {
  DeltaRep r;
  r.A = matrix_from_json(j.at("A"));
  r.B = matrix_from_json(j.at("B"));
  r.C = matrix_from_json(j.at("C"));
  r.q = scalar_from_json(j.at("q"));
  if (j.contains("central") && !j.at("central").is_null()) {
    const auto& c = j.at("central");
    r.central = std::array<Scalar, 3>{scalar_from_json(c.at(0)), scalar_from_json(c.at(1)), scalar_from_json(c.at(2))};
  }
  r.window = j.value("window", r.A.rows());
  r.validate();
  return r;
}

Json to_json(const Polynomial& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(x.str());
  return {{"coeffs", c}};
}

Json to_json(const RelationReport& r) {
  Json s = Json::array();
  for (const auto& x : r.scalars) s.push_back(optional_json(x));
  Json j{{"window", r.window}, {"central", r.central}, {"scalar", r.scalar()}, {"scalars", s},
         {"cubic_zero", r.cubic_zero}};
  j["matches_expected"] = r.matches_expected ? Json(*r.matches_expected) : Json(nullptr);
  j["ok"] = r.ok();
  return j;
}

Json to_json(const GroupElem24& g) { return g.str(); }

GroupElem24 parse_group_element(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != ' ') t += ch;
  const auto p1 = t.find(','), p2 = t.find(',', p1 == std::string::npos ? 0 : p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos) throw PreconditionError("group element must be (s0,s1,word)");
  GroupElem24 g;
  try {
    g.sign0 = std::stoi(t.substr(0, p1));
    g.sign1 = std::stoi(t.substr(p1 + 1, p2 - p1 - 1));
  } catch (const std::exception&) {
    throw PreconditionError("group element signs must be integers");
  }
  if ((g.sign0 != 1 && g.sign0 != -1) || (g.sign1 != 1 && g.sign1 != -1))
    throw PreconditionError("group element signs must be +1 or -1");
  const std::string w = t.substr(p2 + 1);
  for (const auto& [perm, name] : perm_names())
    if (name == w) {
      g.perm = perm;
      return g;
    }
  throw PreconditionError("unknown permutation word: " + w);
}

Json to_json(const Basis24& b) {
  Json word = Json::array();
  for (auto gen : canonical_word(b.element)) word.push_back(generator_name(gen));
  return {{"element", b.element.str()},
          {"word", word},
          {"params", {{"eps", b.params.eps}, {"a", b.params.a.str()}, {"b", b.params.b.str()}, {"c", b.params.c.str()}}},
          {"transition", to_json(b.transition)},
          {"A", to_json(b.A)},
          {"B", to_json(b.B)},
          {"C", to_json(b.C)},
          {"matches", b.matches}};
}

Json to_json(const RecognitionResult& r) {
  return {{"params", to_json(r.params)},
          {"orbit", {r.orbit.key[0].str(), r.orbit.key[1].str(), r.orbit.key[2].str()}},
          {"intertwiner", to_json(r.intertwiner)}};
}

Json to_json(const LeonardReport& r) {
  Json j{{"diag_flags", r.diag_flags}, {"pair_flags", r.pair_flags}, {"triple_flag", r.triple_flag}};
  j["direct_diag"] = r.direct_diag ? Json(*r.direct_diag) : Json(nullptr);
  j["direct_pairs"] = r.direct_pairs ? Json(*r.direct_pairs) : Json(nullptr);
  j["direct_triple"] = r.direct_triple ? Json(*r.direct_triple) : Json(nullptr);
  Json w = Json::array();
  for (const auto& e : r.eigenbases) w.push_back(optional_json(e));
  j["eigenbases"] = w;
  j["consistent"] = r.consistent();
  return j;
}

Json to_json(const UnitaryReport& r) {
  return {{"residual_a", r.residual_a}, {"residual_b", r.residual_b}, {"residual_c", r.residual_c},
          {"b_inverted", r.b_inverted}, {"tolerance", r.tolerance}, {"pass", r.pass()}};
}

Json to_json(const Uqsl2Rep& r) {
  Json j{{"e", to_json(r.e)}, {"f", to_json(r.f)}, {"k", to_json(r.k)}, {"k_inv", to_json(r.k_inv)}, {"q", r.q.str()}};
  j["n"] = r.n ? Json(*r.n) : Json(nullptr);
  j["type"] = r.type_eps ? Json(*r.type_eps) : Json(nullptr);
  return j;
}

Json to_json(const Realization& r) {
  return {{"type", r.eps},
          {"module", to_json(r.module)},
          {"x", to_json(r.xyz.x)},
          {"y", to_json(r.xyz.y)},
          {"z", to_json(r.xyz.z)},
          {"basis", to_json(r.basis)},
          {"residual_zero", r.residual_zero},
          {"ok", r.ok()}};
}

Json to_json(const CGDecomposition& d) {
  Json comps = Json::array();
  for (const auto& [key, mult] : d.multiplicities()) comps.push_back({{"n", key.first}, {"type", key.second}, {"multiplicity", mult}});
  Json blocks = Json::array();
  for (const auto& b : d.blocks) blocks.push_back({{"n", b.n}, {"type", b.eps}, {"basis", to_json(b.basis)}});
  return {{"components", comps}, {"blocks", blocks}};
}

Json to_json(const RacahData& r) {
  Json comps = Json::array();
  for (const auto& [n, mult] : r.components) comps.push_back({{"n", n}, {"multiplicity", mult}});
  return {{"dims", r.dims},
          {"transition", to_json(r.transition)},
          {"components", comps},
          {"tridiagonal_ok", r.tridiagonal_ok},
          {"irreducible_tridiagonal", r.irreducible_tridiagonal},
          {"relations", to_json(r.relations)},
          {"cg_ok", r.cg_ok},
          {"u_diagonalizes_a", r.u_diagonalizes_a},
          {"v_diagonalizes_b", r.v_diagonalizes_b},
          {"u_labels", r.u_labels},
          {"v_labels", r.v_labels},
          {"u_basis", to_json(r.u_basis)},
          {"v_basis", to_json(r.v_basis)},
          {"a_in_v", to_json(r.a_in_v)},
          {"b_in_u", to_json(r.b_in_u)},
          {"ok", r.ok()}};
}

Json to_json(const So3Report& r) {
  return {{"params", to_json(r.params)},
          {"K", {to_json(r.K[0]), to_json(r.K[1]), to_json(r.K[2])}},
          {"relation_zero", r.relation_zero},
          {"central_scalars", {r.central_scalars[0].str(), r.central_scalars[1].str(), r.central_scalars[2].str()}},
          {"central_zero", r.central_zero},
          {"ok", r.ok()}};
}

}  // namespace aw
