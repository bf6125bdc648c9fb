#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "noether/error.hpp"
#include "noether/expression.hpp"
#include "noether/json_io.hpp"

using namespace noether;

TEST_SUITE("json") {
  TEST_CASE("field descriptors round-trip, unknown flags included") {
    FieldDescriptor f = FieldDescriptor::with_root(6);
    f.squares.two.reset();
    const FieldDescriptor g = field_from_json(field_to_json(f));
    CHECK(g.roots == f.roots);
    CHECK(g.characteristic == f.characteristic);
    CHECK_FALSE(g.squares.two.has_value());
    CHECK(g.squares.minus_one == f.squares.minus_one);
    CHECK(field_to_json(g) == field_to_json(f));
  }

  TEST_CASE("automorphisms and monomial matrices round-trip") {
    IntMatrix A(2, 2);
    A << 0, -1, 1, 0;
    IntVector c(2);
    c << 1, 3;
    const MonomialAutomorphism a(A, c, 4);
    CHECK(automorphism_from_json(automorphism_to_json(a)) == a);
    const auto m = monomial_from_dense({{std::nullopt, 1}, {3, std::nullopt}}, 4);
    CHECK(monomial_matrix_from_json(monomial_matrix_to_json(m)) == m);
  }

  TEST_CASE("groups round-trip by family and by table") {
    const Group g = family_group(13, 6);
    const Group h = group_from_json(group_to_json(g));
    CHECK(h.order() == g.order());
    CHECK(h.family().has_value());
    const Group t = group_from_json(Json{{"order", 3}, {"table", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}}});
    CHECK(t.order() == 3);
    CHECK(group_from_json(group_to_json(t)).order() == 3);
  }

  TEST_CASE("action assignments and reports round-trip") {
    const auto r = run_case(8, 5);
    for (const auto& a : r.assignments) {
      const auto b = action_from_json(action_to_json(a));
      REQUIRE(b.images.size() == a.images.size());
      for (std::size_t k = 0; k < a.images.size(); ++k) CHECK(b.images[k] == a.images[k]);
      CHECK(b.variable_names == a.variable_names);
    }
    const Json j = report_to_json(r);
    CHECK(report_to_json(report_from_json(j)) == j);
    CHECK(j.at("passed") == true);
  }

  TEST_CASE("Laurent polynomials round-trip") {
    const auto p = parse_expression("zeta*x^2*y^-1 - 3*y + i", {"x", "y"}, 6).numerator();
    CHECK(laurent_from_json(laurent_to_json(p)) == p);
  }

  TEST_CASE("malformed documents raise ParseError") {
    auto code = [](const std::function<void()>& f) {
      try {
        f();
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::InvalidParameter;
    };
    CHECK(code([] { field_from_json(Json{{"char", "zero"}}); }) == ErrorCode::ParseError);
    CHECK(code([] { automorphism_from_json(Json{{"d", 2}, {"m", 4}, {"A", {1, 2}}}); }) == ErrorCode::ParseError);
    CHECK(code([] { group_from_json(Json::array()); }) == ErrorCode::ParseError);
    CHECK(code([] { read_json_file("/nonexistent/file.json"); }) == ErrorCode::InvalidInput);
    const auto path = std::filesystem::temp_directory_path() / "noether_bad.json";
    std::ofstream(path) << "{\"char\": 0,";
    CHECK(code([&] { read_json_file(path.string()); }) == ErrorCode::ParseError);
    std::filesystem::remove(path);
  }
}
