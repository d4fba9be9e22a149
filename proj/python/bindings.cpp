#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aw/io.hpp"
#include "aw/suite.hpp"

namespace py = pybind11;

namespace {

aw::ModuleParams params(int n, const std::string& q, const std::string& a, const std::string& b, const std::string& c) {
  return {n, aw::Scalar::parse(q), aw::Scalar::parse(a), aw::Scalar::parse(b), aw::Scalar::parse(c), std::nullopt};
}

std::string dump(const aw::Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Askey-Wilson module computations; every function returns a JSON string.";
  py::register_exception<aw::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<aw::FieldError>(m, "FieldError", PyExc_ArithmeticError);

  m.def("build", [](int n, const std::string& q, const std::string& a, const std::string& b, const std::string& c) {
    return dump(aw::to_json(aw::vn_module(params(n, q, a, b, c))));
  });
  m.def("verma", [](const std::string& lambda, const std::string& q, const std::string& a, const std::string& b,
                    const std::string& c, std::size_t depth) {
    auto p = params(0, q, a, b, c);
    p.lambda = aw::Scalar::parse(lambda);
    return dump(aw::to_json(aw::verma_truncation(p, depth)));
  });
  m.def("verify", [](const std::string& rep_json) {
    return dump(aw::to_json(aw::check_relations(aw::deltarep_from_json(aw::Json::parse(rep_json)))));
  });
  m.def("irreducible", [](int n, const std::string& q, const std::string& a, const std::string& b, const std::string& c) {
    auto p = params(n, q, a, b, c);
    const bool oracle = aw::irreducible_oracle(aw::vn_module(p));
    return dump(aw::Json{{"irreducible", oracle}, {"criterion", aw::irreducible_criterion(p)}, {"oracle", oracle}});
  });
  m.def("classify", [](const std::string& rep_json) {
    return dump(aw::to_json(aw::recognize(aw::deltarep_from_json(aw::Json::parse(rep_json)))));
  });
  m.def("leonard", [](int n, const std::string& q, const std::string& a, const std::string& b, const std::string& c,
                      bool direct) { return dump(aw::to_json(aw::leonard_check(params(n, q, a, b, c), direct))); });
  m.def("unitary", [](int n, aw::Complex q, aw::Complex a, aw::Complex b, aw::Complex c, double tol) {
    return dump(aw::to_json(aw::unitary_check_float(n, q, a, b, c, tol)));
  });
  m.def("racah", [](int m_, int n, int p, const std::string& q) {
    return dump(aw::to_json(aw::racah(m_, n, p, aw::Scalar::parse(q))));
  });
  m.def("criterion", [](int id, std::uint64_t seed) {
    aw::SuiteOptions opts;
    opts.seed = seed;
    auto r = aw::run_criterion(id, opts);
    return dump(aw::Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
  });
}
