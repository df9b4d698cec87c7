#include "kml/errors.hpp"
#include "kml/json_io.hpp"
#include "test_helpers.hpp"

using namespace kml;
using namespace kml::test;

namespace {

std::string schemaPath(const std::function<void()>& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST(MatrixLiteral, ParsesAllRings) {
  const Json z = Json::parse(R"({"ring":"Z","rows":1,"cols":2,"entries":[["3","-7"]]})");
  EXPECT_EQ(matrixFromJson(z, Z, ""), mat({{3, -7}}));
  const Json q = Json::parse(R"({"ring":"Q","rows":1,"cols":1,"entries":[["2/4"]]})");
  EXPECT_EQ(matrixFromJson(q, Q, "")(0, 0), mpq_class(1, 2));
  const Json f = Json::parse(R"({"ring":"Fp","p":5,"rows":1,"cols":1,"entries":[["7"]]})");
  EXPECT_EQ(matrixFromJson(f, Ring::primeField(5), "")(0, 0), 2);
  EXPECT_EQ(matrixFromJson(Json::parse(R"([[1, 2], [3, 4]])"), Z, ""), mat({{1, 2}, {3, 4}}));
}

TEST(MatrixLiteral, ErrorsCarryPaths) {
  EXPECT_EQ(schemaPath([] { matrixFromJson(Json::parse(R"({"ring":"Z","rows":1,"cols":2,"entries":[["1"]]})"), Z, "/m"); }),
            "/m/entries/0");
  EXPECT_EQ(schemaPath([] { matrixFromJson(Json::parse(R"({"ring":"Z","rows":1,"cols":1,"entries":[["x"]]})"), Z, ""); }),
            "/entries/0/0");
  EXPECT_EQ(schemaPath([] { matrixFromJson(Json::parse(R"({"ring":"Z","rows":1,"cols":1,"entries":[["1/2"]]})"), Z, ""); }),
            "/entries/0/0");
  EXPECT_EQ(schemaPath([] { matrixFromJson(Json::parse(R"({"ring":"Fp","p":4,"rows":0,"cols":0,"entries":[]})"), Z, ""); }),
            "/ring");
  EXPECT_EQ(schemaPath([] { matrixFromJson(Json::parse(R"({"rows":1,"cols":1})"), Z, ""); }), "/entries");
}

TEST(MatrixLiteral, RoundTrip) {
  const Matrix m = mat({{1, -2}, {0, 5}});
  EXPECT_EQ(matrixFromJson(toJson(m), Z, ""), m);
  const Matrix f = mat({{3}}, Ring::primeField(7));
  EXPECT_EQ(toJson(f)["p"], 7);
  EXPECT_EQ(matrixFromJson(toJson(f), Ring::primeField(7), ""), f);
}

TEST(ModuleLiteral, Forms) {
  EXPECT_EQ(moduleFromJson(Json(3), Z, "").presentation(), pres(3));
  EXPECT_EQ(moduleFromJson(Json::parse(R"({"free":1,"torsion":["2","4"]})"), Z, "").presentation(), pres(1, {2, 4}));
  EXPECT_EQ(moduleFromJson(Json::parse(R"({"generators":2,"relations":[["2"],["2"]]})"), Z, "").presentation(),
            pres(1, {2}));
  EXPECT_EQ(schemaPath([] { moduleFromJson(Json::parse(R"({"torsion":["2"]})"), Q, "/v"); }), "/v/torsion");
}

TEST(CubeLiteral, ParsesSquare) {
  const SCube c = cubeFromJson(loadJsonFile(KML_TEST_DATA "/square_2_3.json"), Z);
  EXPECT_EQ(c.dimension(), 2u);
  EXPECT_TRUE(isAdmissible(c));
}

TEST(CubeLiteral, NonCommutingSquareIsASchemaError) {
  try {
    cubeFromJson(loadJsonFile(KML_TEST_DATA "/bad_cube.json"), Z);
    FAIL() << "expected SchemaError";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "/boundaries/{1,2}");
    EXPECT_NE(std::string(e.what()).find("does not commute"), std::string::npos);
  }
}

TEST(CubeLiteral, MissingPieces) {
  const Json noVertex = Json::parse(R"({"directions":["a"],"vertices":{"{}":1}})");
  EXPECT_EQ(schemaPath([&] { cubeFromJson(noVertex, Z); }), "/vertices/{a}");
  const Json noMap = Json::parse(R"({"directions":["a"],"vertices":{"{}":1,"{a}":1}})");
  EXPECT_EQ(schemaPath([&] { cubeFromJson(noMap, Z); }), "/boundaries/{a}/a");
  const Json badKey = Json::parse(R"({"directions":["a"],"vertices":{"{}":1,"{b}":1}})");
  EXPECT_EQ(schemaPath([&] { cubeFromJson(badKey, Z); }), "/vertices/{b}");
  const Json wrongSize = Json::parse(R"({"directions":["a"],"vertices":{"{}":1,"{a}":1},"boundaries":{"{a}":{"a":[["1","2"]]}}})");
  EXPECT_EQ(schemaPath([&] { cubeFromJson(wrongSize, Z); }), "/boundaries/{a}/a/0");
}

TEST(GradedLiteral, ParsesStrip) {
  const GradedModule x = gradedFromJson(loadJsonFile(KML_TEST_DATA "/strip.json"), Z);
  EXPECT_EQ(x.truncation(), 6u);
  EXPECT_EQ(x.rankAt(1), 1u);
  EXPECT_EQ(x.rankAt(2), 0u);
}

TEST(GradedLiteral, Errors) {
  const Json missing = Json::parse(R"({"vars":1,"truncation":2,"components":[1,1]})");
  EXPECT_EQ(schemaPath([&] { gradedFromJson(missing, Z); }), "/maps/t1/0");
  const Json unknown = Json::parse(R"({"vars":1,"truncation":1,"components":[1],"maps":{"t2":[]}})");
  EXPECT_EQ(schemaPath([&] { gradedFromJson(unknown, Z); }), "/maps/t2");
  const Json noncommuting = Json::parse(R"({"vars":2,"truncation":2,"components":[1,1,1],
     "maps":{"t1":[[["1"]],[["1"]]],"t2":[[["2"]],[["3"]]]}})");
  EXPECT_EQ(schemaPath([&] { gradedFromJson(noncommuting, Z); }), "/maps");
}

TEST(AffineLiteral, ParsesAndValidates) {
  const AffineObject x = affineFromJson(loadJsonFile(KML_TEST_DATA "/times_four.json"), Z);
  EXPECT_EQ(x.endos()[0], mat({{4}}));
  const Json bad = Json::parse(R"({"dim":2,"endos":[[[0,1],[0,0]],[[0,0],[1,0]]]})");
  EXPECT_EQ(schemaPath([&] { affineFromJson(bad, Z); }), "/endos");
  const Json wrong = Json::parse(R"({"dim":2,"endos":[[[1]]]})");
  EXPECT_EQ(schemaPath([&] { affineFromJson(wrong, Z); }), "/endos/0");
}

TEST(FiltrationLiteral, ParsesAndValidates) {
  const AffineObject x = affineFromJson(loadJsonFile(KML_TEST_DATA "/times_two.json"), Z);
  const FFiltration fil = filtrationFromJson(loadJsonFile(KML_TEST_DATA "/constant_filtration.json"), x);
  EXPECT_EQ(fil.steps.size(), 6u);
  EXPECT_EQ(schemaPath([&] { filtrationFromJson(Json::parse(R"([[["1"]], [["4"]]])"), x); }), "");
}

TEST(Load, MalformedFile) {
  EXPECT_THROW(loadJsonFile(KML_TEST_DATA "/does_not_exist.json"), SchemaError);
}
