#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "popdec/json_io.hpp"
#include "popdec/linear_ideal.hpp"

using namespace popdec;

namespace {

ZVector zvec(std::initializer_list<long> v) {
  ZVector z(static_cast<int>(v.size()));
  int i = 0;
  for (long x : v) z[i++] = Integer(x);
  return z;
}

}  // namespace

TEST_CASE("scalars encode as [num, den] with strings past 64 bits") {
  CHECK(Json(Rational(1, 2)).dump() == "[1,2]");
  CHECK(Json(Rational(-3)).dump() == "[-3,1]");
  // canonicalization happens before encoding
  CHECK(Json(Rational(2, -4)).dump() == "[-1,2]");

  Integer big("123456789012345678901234567890");
  CHECK(Json(big).dump() == "\"123456789012345678901234567890\"");
  CHECK(Json(big).get<Integer>() == big);
  Rational huge(big, Integer(7));
  CHECK(Json(huge).get<Rational>() == huge);
}

TEST_CASE("integers parse from numbers and strings alike") {
  CHECK(Json::parse("17").get<Integer>() == Integer(17));
  CHECK(Json::parse("-17").get<Integer>() == Integer(-17));
  CHECK(Json::parse("\"17\"").get<Integer>() == Integer(17));
  CHECK(Json::parse("18446744073709551615").get<Integer>() ==
        Integer("18446744073709551615"));
  CHECK_THROWS(Json::parse("[1]").get<Integer>());
  CHECK_THROWS(Json::parse("[1,2,3]").get<Rational>());
}

TEST_CASE("vectors of both scalar kinds round trip") {
  QVector q(3);
  q << Rational(1, 3), Rational(0), Rational(-7, 2);
  CHECK(Json(q).get<QVector>() == q);
  ZVector z = zvec({4, -5, 0});
  CHECK(Json(z).get<ZVector>() == z);
}

TEST_CASE("a regular subdivision round trips through json bit-exactly") {
  // square [0,2]^2 with a lifted corner, so the complex has two maximal
  // cells, interior points, and a full face relation
  std::vector<ZVector> pts = {zvec({0, 0}), zvec({2, 0}), zvec({0, 2}),
                              zvec({2, 2}), zvec({1, 1})};
  QVector h(5);
  h << Rational(0), Rational(0), Rational(0), Rational(1), Rational(0);
  PolyComplex pc = regular_subdivision(pts, h);

  Json j = pc;
  std::string bytes = j.dump();
  PolyComplex back = Json::parse(bytes).get<PolyComplex>();
  CHECK(Json(back).dump() == bytes);

  CHECK(back.ambient_dim == pc.ambient_dim);
  REQUIRE(back.cells.size() == pc.cells.size());
  for (size_t i = 0; i < pc.cells.size(); ++i) {
    CHECK(back.cells[i].id == pc.cells[i].id);
    CHECK(back.cells[i].dim == pc.cells[i].dim);
    CHECK(back.cells[i].vertices == pc.cells[i].vertices);
    CHECK(back.cells[i].points == pc.cells[i].points);
  }
  CHECK(back.face_relation == pc.face_relation);

  // every cell entry carries the schema keys
  for (const Json& jc : j["cells"]) {
    CHECK(jc.contains("id"));
    CHECK(jc.contains("dim"));
    CHECK(jc.contains("vertices"));
    CHECK(jc.contains("rays"));
    CHECK(jc.contains("faces"));
  }
}

TEST_CASE("homology reports rank and torsion per degree") {
  Homology h;
  h.betti = {1, 2, 0};
  h.torsion = {{}, {Integer(2)}};
  Json j = h;
  REQUIRE(j.size() == 3);
  CHECK(j[0]["dim"] == 0);
  CHECK(j[0]["rank"] == 1);
  CHECK(j[1]["torsion"].dump() == "[2]");
  CHECK(j[2]["rank"] == 0);
  CHECK(j[2]["torsion"].dump() == "[]");
}

TEST_CASE("matroid flats and sign nerves export") {
  LinearIdeal ideal = parse_linear_ideal("1+x1+x2");
  Arrangement arr = arrangement_from_ideal(ideal);
  Json flats = flats_json(Matroid::from_columns(arr.embedding));
  // U_{2,3}: bottom, three points, top
  REQUIRE(flats.size() == 5);
  CHECK(flats[0]["rank"] == 0);
  CHECK(flats[0]["mobius"] == 1);
  CHECK(flats[4]["elements"].dump() == "[0,1,2]");
  CHECK(flats[4]["mobius"] == 2);

  Json nerve = sign_nerve(ideal);
  CHECK(nerve["n"] == 2);
  CHECK(nerve["level"] == 2);
  CHECK(nerve["cone_labels"].dump() == "[\"++\",\"+-\",\"-+\",\"--\"]");
  CHECK(nerve["vertex_cones"].size() == 12);
  CHECK(nerve["complex"]["simplices"][0].size() == 12);
}
