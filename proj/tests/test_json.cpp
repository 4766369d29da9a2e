#include "hochlab/json_io.hpp"

#include <doctest.h>

#include "hochlab/averaging.hpp"
#include "hochlab/homology.hpp"

using namespace hochlab;

TEST_CASE("rationals and sparse containers round trip") {
  CHECK(rat_json(rat_of(-3, 6)) == "-1/2");
  CHECK(rat_from_json(Json("7/3")) == rat_of(7, 3));
  CHECK(rat_from_json(Json(-4)) == rat_of(-4));
  CHECK_THROWS_AS(rat_from_json(Json(1.5)), std::invalid_argument);

  SparseVec v;
  v.set(0, rat_of(1, 2));
  v.set(11, rat_of(-3));
  const Json jv = sparse_vec_json(v);
  CHECK(jv.dump() == R"({"0":"1/2","11":"-3"})");
  CHECK(sparse_vec_from_json(jv) == v);
  CHECK_THROWS_AS(sparse_vec_from_json(parse_json_text(R"({"x":"1"})")),
                  std::invalid_argument);

  SparseMatrix m(3, 2);
  m.set(2, 0, rat_of(5));
  m.set(0, 1, rat_of(-1, 3));
  const Json jm = sparse_matrix_json(m);
  CHECK(jm["entries"].dump() == R"([[2,0,"5"],[0,1,"-1/3"]])");
  CHECK(sparse_matrix_from_json(jm) == m);
  CHECK_THROWS_AS(
      sparse_matrix_from_json(parse_json_text(
          R"({"rows":2,"cols":2,"entries":[[5,0,"1"]]})")),
      std::invalid_argument);
}

TEST_CASE("algebra presentations survive the json round trip") {
  const AlgebraPresentation m2 = make_matrix_algebra(2);
  const Json j = algebra_json(m2);
  const AlgebraPresentation back = algebra_from_json(j);
  CHECK(back.content_hash == m2.content_hash);
  CHECK(back.dim == m2.dim);
  CHECK(back.labels == m2.labels);
  REQUIRE(back.matrix_view.has_value());
  CHECK(back.matrix_view->m == 2);

  Json tampered = j;
  tampered["labels"][0] = "X";
  // any edit invalidates the stored hash
  CHECK_THROWS_AS(algebra_from_json(tampered), std::invalid_argument);
  tampered.erase("content_hash");
  const AlgebraPresentation changed = algebra_from_json(tampered);
  CHECK(changed.content_hash != m2.content_hash);

  Json bad = j;
  bad["unit"] = 1;  // E12 is not a unit
  bad.erase("content_hash");
  CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);
}

TEST_CASE("chains serialize with tuple keys") {
  const AlgebraPresentation m2 = make_matrix_algebra(2);
  Chain c;
  c.alg = &m2;
  c.degree = 1;
  c.add_term(encode_tuple({0, 1}, m2.dim), rat_of(2));
  c.add_term(encode_tuple({3, 0}, m2.dim), rat_of(-1, 2));
  const Json j = chain_json(c);
  CHECK(j["degree"] == 1);
  CHECK(j["algebra"] == m2.content_hash);
  // term order follows the ambient codes (last factor most significant)
  CHECK(j["terms"].dump() == R"({"3,0":"-1/2","0,1":"2"})");

  Cochain f;
  f.alg = &m2;
  f.degree = 0;
  f.set(3, rat_of(1));
  CHECK(cochain_json(f)["values"].dump() == R"({"3":"1"})");
}

TEST_CASE("norm values keep exactness apart from the double view") {
  const Json je = norm_value_json(exact_norm(rat_of(3, 2)));
  CHECK(je.dump() == R"({"exact":true,"value":"3/2","approx":1.5})");
  const Json jn = norm_value_json(numeric_norm(1.25, 0.5));
  CHECK(jn["exact"] == false);
  CHECK(jn["error_bound"] == 0.5);
  CHECK_FALSE(jn.contains("value"));
}

TEST_CASE("reports serialize with stable field order") {
  const AlgebraPresentation m2 = make_matrix_algebra(2);
  const HomologyReport rep = homology(m2, ComplexKind::hochschild, 1);
  const Json j = homology_report_json(rep);
  CHECK(j["dims"].dump() == "[1,0]");
  std::vector<std::string> keys;
  for (const auto& [key, val] : j.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"algebra", "complex", "max_degree",
                                         "dims", "degrees"});
  // two dumps of independently computed reports agree byte for byte
  CHECK(stable_dump(homology_report_json(homology(m2, ComplexKind::hochschild, 1))) ==
        stable_dump(j));

  const HUnitality hu = h_unitality(make_square_zero_algebra(2), 1);
  const Json ju = h_unitality_json(hu);
  CHECK(ju["h_unital"] == false);
  CHECK(ju["first_failure"] == 0);

  const CocycleInstance inst = coboundary_instance(m2, 1, 7);
  const Json ja = averaging_report_json(averaging_harness(inst, {1}, NormKind::linf, 3));
  CHECK(ja["primitive_found"] == true);
  CHECK(ja["obstruction"].is_null());
  CHECK(ja["cells"].size() == 1);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_json_text("{\n  \"a\": 1,\n  \"b\": ]\n}");
    FAIL("expected a parse error");
  } catch (const JsonParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column >= 8);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), std::runtime_error);
}

TEST_CASE("schema checker enforces the subset it claims") {
  const Json schema = parse_json_text(R"({
    "type": "object",
    "required": ["name", "tasks"],
    "additionalProperties": false,
    "properties": {
      "name": {"type": "string"},
      "seed": {"type": "integer", "minimum": 0},
      "tasks": {
        "type": "array",
        "items": {
          "type": "object",
          "required": ["kind"],
          "properties": {
            "kind": {"enum": ["homology", "norms"]},
            "expect": {"type": "string"}
          }
        }
      }
    }
  })");
  const Json good = parse_json_text(
      R"({"name":"x","seed":3,"tasks":[{"kind":"homology"}]})");
  CHECK(schema_check(schema, good).empty());

  CHECK(schema_check(schema, parse_json_text(R"({"name":"x"})")) ==
        "/: missing required field 'tasks'");
  CHECK(schema_check(schema, parse_json_text(
            R"({"name":"x","tasks":[{"kind":"bogus"}]})"))
            .find("/tasks/0/kind") == 0);
  CHECK(schema_check(schema, parse_json_text(
            R"({"name":"x","tasks":[],"extra":1})")) ==
        "/: unexpected field 'extra'");
  CHECK(schema_check(schema, parse_json_text(
            R"({"name":"x","seed":-1,"tasks":[]})"))
            .find("below minimum") != std::string::npos);
  CHECK_THROWS_AS(require_schema(schema, parse_json_text(R"({})"), "scenario"),
                  std::invalid_argument);
}
