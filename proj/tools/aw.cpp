#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "aw/io.hpp"
#include "aw/suite.hpp"

namespace {

using aw::Json;
using aw::Scalar;

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct ParamFlags {
  int n = 0;
  std::string q = "2", a = "1", b = "1", c = "1", lambda;

  void add(CLI::App* app, bool with_lambda = false) {
    app->add_option("--n", n, "module index n >= 0");
    app->add_option("--q", q, "scalar q");
    app->add_option("--a", a, "scalar a");
    app->add_option("--b", b, "scalar b");
    app->add_option("--c", c, "scalar c");
    if (with_lambda) app->add_option("--lambda", lambda, "scalar lambda (default q^n)");
  }

  aw::ModuleParams params() const {
    aw::ModuleParams p{n, Scalar::parse(q), Scalar::parse(a), Scalar::parse(b), Scalar::parse(c), std::nullopt};
    if (!lambda.empty()) p.lambda = Scalar::parse(lambda);
    return p;
  }
};

struct Outcome {
  Json doc;
  bool verified = true;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw aw::PreconditionError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw aw::PreconditionError("malformed JSON in " + path + ": " + e.what());
  }
}

std::string option_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

// CommandRequest {"command", "params", "options"} as an equivalent argument list.
std::vector<std::string> request_to_args(const Json& req) {
  if (!req.is_object() || !req.contains("command") || !req.at("command").is_string())
    throw aw::PreconditionError("CommandRequest needs a string \"command\"");
  std::vector<std::string> args{"aw", req.at("command").get<std::string>()};
  for (const char* section : {"params", "options"}) {
    if (!req.contains(section)) continue;
    const Json& obj = req.at(section);
    if (!obj.is_object()) throw aw::PreconditionError(std::string(section) + " must be an object");
    for (const auto& [key, value] : obj.items()) {
      if (value.is_boolean()) {
        if (value.get<bool>()) args.push_back("--" + key);
        continue;
      }
      if (value.is_array()) {
        for (const auto& x : value) args.insert(args.end(), {"--" + key, option_text(x)});
        continue;
      }
      args.insert(args.end(), {"--" + key, option_text(value)});
    }
  }
  return args;
}

aw::DeltaRep rep_or_params(const std::string& rep_file, const ParamFlags& pf) {
  if (!rep_file.empty()) return aw::deltarep_from_json(read_json_file(rep_file));
  return aw::vn_module(pf.params());
}

Json witness_json(const std::optional<std::vector<aw::ExactMatrix>>& w) {
  if (!w) return nullptr;
  Json out = Json::array();
  for (const auto& v : *w) out.push_back(aw::to_json(v));
  return out;
}

struct Cli {
  CLI::App app{"Askey-Wilson algebra modules: exact construction and verification"};
  std::string json_file, out_file;
  std::uint64_t seed = 20240607;
  bool seed_given = false;
  std::function<Outcome()> action;

  ParamFlags pf, pf2;
  std::string rep_file, element, mode = "standard", family = "classical", kind;
  std::size_t depth = 8;
  int index = 0, eps = 1, eps2 = 1, m = 1, nn = 1, p = 1;
  std::vector<int> only, signs{1, 1, 1};
  bool direct = false;
  double q_angle = 1.0, a_angle = 0.3, b_angle = 0.3, c_angle = 0.7, tolerance = 1e-9, radius = 1.0;

  Cli() {
    app.require_subcommand(0, 1);
    app.fallthrough();
    app.add_option("--json", json_file, "read a CommandRequest from FILE");
    app.add_option("--out", out_file, "write the JSON result to FILE");
    app.add_option("--seed", seed, "seed for randomized steps")->each([this](const std::string&) { seed_given = true; });

    auto* build = app.add_subcommand("build", "matrices of V_n(a,b,c)");
    pf.add(build);
    build->callback([this] { action = [this] { return Outcome{aw::to_json(aw::vn_module(pf.params()))}; }; });

    auto* verma = app.add_subcommand("verma", "truncated Verma module matrices");
    pf.add(verma, true);
    verma->add_option("--depth", depth, "truncation depth");
    verma->callback([this] {
      action = [this] { return Outcome{aw::to_json(aw::verma_truncation(pf.params(), depth))}; };
    });

    auto* verify = app.add_subcommand("verify", "relation and centrality check");
    pf.add(verify, true);
    verify->add_option("--rep", rep_file, "DeltaRep JSON file");
    verify->add_option("--depth", depth, "Verma depth when lambda is given");
    verify->callback([this] {
      action = [this] {
        aw::DeltaRep rep;
        if (!rep_file.empty())
          rep = aw::deltarep_from_json(read_json_file(rep_file));
        else if (!pf.lambda.empty())
          rep = aw::verma_truncation(pf.params(), depth);
        else
          rep = aw::vn_module(pf.params());
        auto r = aw::check_relations(rep);
        return Outcome{aw::to_json(r), r.ok()};
      };
    });

    auto* irr = app.add_subcommand("irreducible", "irreducibility criterion and oracle");
    pf.add(irr);
    irr->callback([this] {
      action = [this] {
        auto params = pf.params();
        const bool crit = aw::irreducible_criterion(params);
        auto oracle = aw::irreducible_oracle_witness(aw::vn_module(params));
        Json doc{{"irreducible", oracle.irreducible},
                 {"criterion", crit},
                 {"oracle", oracle.irreducible},
                 {"witness", witness_json(oracle.witness)}};
        return Outcome{doc, crit == oracle.irreducible};
      };
    });

    auto* cls = app.add_subcommand("classify", "recognize a module up to isomorphism");
    pf.add(cls);
    cls->add_option("--rep", rep_file, "DeltaRep JSON file");
    cls->callback([this] {
      action = [this] {
        aw::DeltaRep rep = rep_or_params(rep_file, pf);
        Json doc;
        if (seed_given) {
          auto c = aw::random_conjugation(rep, seed);
          rep = c.rep;
          doc["conjugated_by"] = aw::to_json(c.by);
        }
        doc["recognition"] = aw::to_json(aw::recognize(rep));
        return Outcome{doc};
      };
    });

    auto* iso = app.add_subcommand("iso", "isomorphism between V_n(a,b,c) and V_n(a2,b2,c2)");
    pf.add(iso);
    iso->add_option("--a2", pf2.a, "second a");
    iso->add_option("--b2", pf2.b, "second b");
    iso->add_option("--c2", pf2.c, "second c");
    iso->callback([this] {
      action = [this] {
        auto p1 = pf.params();
        auto p2 = p1;
        p2.a = Scalar::parse(pf2.a);
        p2.b = Scalar::parse(pf2.b);
        p2.c = Scalar::parse(pf2.c);
        auto m = aw::isomorphic(p1, p2);
        Json doc{{"isomorphic", m.has_value()}, {"intertwiner", m ? aw::to_json(*m) : Json(nullptr)},
                 {"orbit_equal", aw::orbit_key(p1.a, p1.b, p1.c) == aw::orbit_key(p2.a, p2.b, p2.c)}};
        return Outcome{doc};
      };
    });

    auto* bases = app.add_subcommand("bases", "the 24 bases of V_n(a,b,c)");
    pf.add(bases);
    bases->add_option("--element", element, "one element as (s0,s1,w), w in 1,s,t,st,ts,sts");
    bases->callback([this] {
      action = [this] {
        auto params = pf.params();
        Json list = Json::array();
        bool all = true;
        std::vector<aw::GroupElem24> elems;
        if (element.empty())
          elems = aw::GroupElem24::all();
        else
          elems.push_back(aw::parse_group_element(element));
        for (const auto& g : elems) {
          auto b = aw::change_basis24(params, g);
          all = all && b.matches;
          list.push_back(aw::to_json(b));
        }
        return Outcome{Json{{"bases", list}, {"all_match", all}}, all};
      };
    });

    auto* poly = app.add_subcommand("awpoly", "Askey-Wilson polynomial p_i and its recurrence");
    pf.add(poly, true);
    poly->add_option("--i", index, "polynomial index");
    poly->callback([this] {
      action = [this] {
        auto p = pf.params();
        aw::AWContext ctx{p.lam(), p.q, p.a, p.b, p.c};
        auto rc = aw::recurrence_coeffs(index, ctx);
        const bool eigen = aw::aw_operator_check(index, ctx, 4 * static_cast<std::size_t>(index + 2) + 4);
        Json doc{{"i", index},
                 {"polynomial", aw::to_json(aw::aw_poly(index, ctx))},
                 {"recurrence", {{"a", rc.a.str()}, {"b", rc.b.str()}, {"c", rc.c.str()}}},
                 {"eigenvalue", aw::theta(index, ctx.lambda, ctx.q, ctx.b).str()},
                 {"operator_identity", eigen}};
        return Outcome{doc, eigen};
      };
    });

    auto* leo = app.add_subcommand("leonard", "Leonard pair and triple criteria");
    pf.add(leo);
    leo->add_flag("--direct", direct, "verify from eigenbases as well");
    leo->callback([this] {
      action = [this] {
        auto r = aw::leonard_check(pf.params(), direct);
        return Outcome{aw::to_json(r), r.consistent()};
      };
    });

    auto* uni = app.add_subcommand("unitary", "floating-point unitary form check; parameters are exp(i*angle)");
    uni->add_option("--n", pf.n, "module index");
    uni->add_option("--q-angle", q_angle, "angle of q");
    uni->add_option("--a-angle", a_angle, "angle of a");
    uni->add_option("--b-angle", b_angle, "angle of b");
    uni->add_option("--c-angle", c_angle, "angle of c");
    uni->add_option("--c-radius", radius, "modulus of c");
    uni->add_option("--tol", tolerance, "residual tolerance");
    uni->callback([this] {
      action = [this] {
        auto E = [](double t) { return std::polar(1.0, t); };
        auto r = aw::unitary_check_float(pf.n, E(q_angle), E(a_angle), E(b_angle), std::polar(radius, c_angle), tolerance);
        return Outcome{aw::to_json(r), r.pass()};
      };
    });

    auto* uq = app.add_subcommand("uq", "U_q(sl2) modules, realizations and the so3 specialization");
    pf.add(uq);
    uq->add_option("--mode", mode, "standard, realize or so3")->check(CLI::IsMember({"standard", "realize", "so3"}));
    uq->add_option("--eps", eps, "type +1 or -1")->check(CLI::IsMember({1, -1}));
    uq->add_option("--family", family, "so3 family")->check(CLI::IsMember({"classical", "nonclassical"}));
    uq->add_option("--signs", signs, "so3 classical signs e0 e1 e2")->expected(3);
    uq->callback([this] {
      action = [this] {
        const Scalar q = Scalar::parse(pf.q);
        if (mode == "standard") {
          auto s = aw::standard_module(pf.n, eps, q);
          auto t = aw::equitable(s);
          Json doc = aw::to_json(s);
          doc["equitable"] = {{"x", aw::to_json(t.x)}, {"y", aw::to_json(t.y)}, {"z", aw::to_json(t.z)}};
          doc["casimir"] = aw::casimir_scalar(pf.n, eps, q).str();
          const bool ok = aw::uq_relations_hold(s);
          doc["relations_hold"] = ok;
          return Outcome{doc, ok};
        }
        if (mode == "realize") {
          auto r = aw::realize_uq(pf.params(), eps);
          if (!r) return Outcome{Json{{"type", eps}, {"found", false}}};
          Json doc = aw::to_json(*r);
          doc["found"] = true;
          return Outcome{doc, r->ok()};
        }
        aw::So3Family f{family == "classical", {signs.at(0), signs.at(1), signs.at(2)}};
        auto r = aw::so3_check(pf.n, q, f);
        return Outcome{aw::to_json(r), r.ok()};
      };
    });

    auto* cg = app.add_subcommand("cg", "Clebsch-Gordan decomposition of V_{m,eps} (x) V_{n,eps2}");
    cg->add_option("--m", m, "first index");
    cg->add_option("--n", nn, "second index");
    cg->add_option("--q", pf.q, "scalar q");
    cg->add_option("--eps", eps, "first type")->check(CLI::IsMember({1, -1}));
    cg->add_option("--eps2", eps2, "second type")->check(CLI::IsMember({1, -1}));
    cg->callback([this] {
      action = [this] {
        const Scalar q = Scalar::parse(pf.q);
        auto d = aw::cg_decompose(aw::coproduct(aw::standard_module(m, eps, q), aw::standard_module(nn, eps2, q)));
        return Outcome{aw::to_json(d)};
      };
    });

    auto* rac = app.add_subcommand("racah", "Racah transition data on V_m (x) V_n (x) V_p");
    rac->add_option("--m", m, "first index");
    rac->add_option("--n", nn, "second index");
    rac->add_option("--p", p, "third index");
    rac->add_option("--q", pf.q, "scalar q");
    rac->callback([this] {
      action = [this] {
        auto r = aw::racah(m, nn, p, Scalar::parse(pf.q));
        return Outcome{aw::to_json(r), r.ok()};
      };
    });

    auto* suite = app.add_subcommand("suite", "run the acceptance criteria");
    suite->add_option("--only", only, "criterion ids");
    suite->callback([this] {
      action = [this] {
        aw::SuiteOptions opts;
        opts.seed = seed;
        opts.only = std::set<int>(only.begin(), only.end());
        Json list = Json::array();
        bool all = true;
        for (const auto& r : aw::run_suite(opts)) {
          all = all && r.passed;
          list.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"cases", r.cases},
                          {"detail", r.detail}, {"limit_seconds", r.limit_seconds}});
        }
        return Outcome{Json{{"criteria", list}, {"passed", all}}, all};
      };
    });
  }
};

int emit(const Outcome& o, const std::string& out_file) {
  const std::string text = o.doc.dump(2) + "\n";
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_file);
    if (!out) {
      std::cerr << "error: cannot write " << out_file << "\n";
      return kExitUsage;
    }
    out << text;
  }
  return o.verified ? 0 : kExitVerification;
}

int run(std::vector<std::string> args) {
  Cli cli;
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    cli.app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return cli.app.exit(e);
  } catch (const CLI::ParseError& e) {
    cli.app.exit(e);
    return kExitUsage;
  }
  if (!cli.json_file.empty()) {
    if (cli.action) {
      std::cerr << "error: --json cannot be combined with a subcommand\n";
      return kExitUsage;
    }
    auto req_args = request_to_args(read_json_file(cli.json_file));
    if (!cli.out_file.empty()) req_args.insert(req_args.begin() + 1, {"--out", cli.out_file});
    if (cli.seed_given) req_args.insert(req_args.begin() + 1, {"--seed", std::to_string(cli.seed)});
    return run(req_args);
  }
  if (!cli.action) {
    std::cerr << cli.app.help();
    return kExitUsage;
  }
  return emit(cli.action(), cli.out_file);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(std::vector<std::string>(argv, argv + argc));
  } catch (const aw::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const aw::FieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return kExitVerification;
  }
}
