#include "aw/io.hpp"
#include "doctest.h"

using aw::Scalar;

TEST_CASE("json round trips") {
  aw::ModuleParams p{2, Scalar(3), Scalar(2), Scalar::ratio(5, 3), Scalar::i(), std::nullopt};
  aw::DeltaRep rep = aw::vn_module(p);
  aw::Json j = aw::to_json(rep);
  aw::DeltaRep back = aw::deltarep_from_json(j);
  CHECK(back.A == rep.A);
  CHECK(back.B == rep.B);
  CHECK(back.C == rep.C);
  CHECK(back.q == rep.q);
  CHECK(back.central == rep.central);
  CHECK(aw::params_from_json(aw::to_json(p)) == p);
  CHECK(j["q"] == "3/1");
  CHECK(aw::to_json(Scalar::ratio(-9, 8)) == "-9/8");
  CHECK(aw::scalar_from_json(aw::Json(4)) == Scalar(4));
  CHECK_THROWS_AS(aw::scalar_from_json(aw::Json(1.5)), aw::PreconditionError);
}

TEST_CASE("group element text") {
  for (const auto& g : aw::GroupElem24::all()) CHECK(aw::parse_group_element(g.str()) == g);
  CHECK(aw::parse_group_element("(1,1,s)") == aw::GroupElem24::sigma());
  CHECK_THROWS_AS(aw::parse_group_element("(1,2,s)"), aw::PreconditionError);
  CHECK_THROWS_AS(aw::parse_group_element("(1,1,x)"), aw::PreconditionError);
  CHECK_THROWS_AS(aw::parse_group_element("1,1"), aw::PreconditionError);
}
