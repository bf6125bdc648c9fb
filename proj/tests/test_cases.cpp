#include <doctest.h>

#include <random>
#include <set>

#include "noether/case_verifier.hpp"
#include "noether/error.hpp"
#include "noether/lattice.hpp"

using namespace noether;

namespace {

const StepReport* find_step(const CaseReport& r, const std::string& name) {
  for (const auto& s : r.steps)
    if (s.name == name) return &s;
  return nullptr;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no Error thrown");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_SUITE("cases") {
  TEST_CASE("G8 replays the printed actions on z and u entry by entry") {
    const auto r = run_case(8, 5);
    CHECK(r.passed());
    for (const char* name : {"action on z", "action on u", "action on v2"}) {
      const auto* s = find_step(r, name);
      REQUIRE_MESSAGE(s != nullptr, name);
      CHECK_MESSAGE(s->status == StepStatus::Pass, name);
    }
  }

  TEST_CASE("sign epsilon of G8 is derived per n") {
    CHECK(run_case(8, 5).facts.at("epsilon") == "-1");
    CHECK(run_case(8, 6).facts.at("epsilon") == "1");
    CHECK(run_case(8, 7).facts.at("epsilon") == "1");
  }

  TEST_CASE("direct product script for G2") {
    const auto r = run_case(2, 5);
    CHECK(r.passed());
    CHECK(r.verdict.status == VerdictStatus::Rational);
    CHECK(r.verdict.trace.front().rule == std::string(rules::kDirectProduct));
  }

  TEST_CASE("every family script passes at n = 5 and class III at n = 6") {
    const auto reports = run_all({5, 6});
    std::set<int> seen6;
    for (const auto& r : reports) {
      CHECK_MESSAGE(r.passed(), r.case_id);
      CHECK(r.verdict.status == VerdictStatus::Rational);
      if (r.n == 6) seen6.insert(r.family);
    }
    for (int f = 19; f <= 25; ++f) CHECK(seen6.count(f));
    CHECK(run_all({}).empty());
  }

  TEST_CASE("scripted assignments are homomorphisms and reduce in at most three steps") {
    for (const auto& r : run_all({5, 6})) {
      for (const auto& a : r.assignments) {
        CHECK_MESSAGE(verify_homomorphism(a).ok(), r.case_id);
        if (a.dim() == 0) continue;
        const auto chain = reduce_to_injective(a);
        CHECK_MESSAGE(chain.steps.size() <= 3, r.case_id);
        CHECK(matrix_part_injective(chain.result));
      }
    }
  }

  TEST_CASE("a single mutated coefficient makes the case fail") {
    std::vector<int> with_tables;
    for (int f = 1; f <= 26; ++f) {
      CaseScript s = case_script(f);
      std::mt19937 probe(1);
      if (mutate_expected_coefficient(s, f, probe)) with_tables.push_back(f);
    }
    REQUIRE_FALSE(with_tables.empty());
    std::mt19937 rng(20240607);
    for (int k = 0; k < 10; ++k) {
      const int f = with_tables[std::uniform_int_distribution<std::size_t>(0, with_tables.size() - 1)(rng)];
      const int n = family_class(f) == 3 ? 6 : 5;
      CaseScript s = case_script(f);
      const auto what = mutate_expected_coefficient(s, f, rng);
      REQUIRE(what.has_value());
      const auto r = run_script(s, f, n, minimal_case_field(n));
      CHECK_MESSAGE(!r.passed(), "G" << f << ": " << *what);
    }
  }

  TEST_CASE("script ranges and field requirements") {
    CHECK(code_of([] { case_script(27); }) == ErrorCode::ScriptRangeError);
    CHECK(code_of([] { case_script(0); }) == ErrorCode::ScriptRangeError);
    CHECK_FALSE(script_accepts(19, 5));
    CHECK(script_accepts(8, 7));
    CHECK_FALSE(script_accepts(8, 8));
    FieldDescriptor q;
    CHECK(code_of([&] { run_case(8, 5, q.normalized()); }) == ErrorCode::InvalidInput);
  }

  TEST_CASE("tables parse and format back") {
    const std::string text = "s: x0 -> x1 -> zeta*x0, y0 <-> y1; t: x0 -> -x0";
    const auto entries = parse_table(text);
    CHECK(entries.size() == 5);
    CHECK(parse_table(format_table(entries)).size() == entries.size());
  }
}

TEST_SUITE("order8m") {
  TEST_CASE("all subcases pass for odd m up to 9") {
    for (int sub = 1; sub <= 3; ++sub)
      for (int m : {3, 5, 7, 9}) {
        const auto r = run_order8m_subcase(sub, m, FieldDescriptor::with_root(2LL * m));
        CHECK_MESSAGE(r.passed(), r.case_id);
        if (sub == 3) {
          CHECK(r.facts.at("epsilon") == "-1");
          CHECK(r.verdict.status == VerdictStatus::NotRational);
        } else {
          CHECK(r.verdict.status == VerdictStatus::Rational);
        }
      }
  }

  TEST_CASE("C_m x| C8 becomes rational with sqrt(-1)") {
    FieldDescriptor f = FieldDescriptor::with_root(6);
    f.roots.insert(4);
    const auto r = run_order8m_subcase(3, 3, f.normalized());
    CHECK(r.passed());
    CHECK(r.verdict.status == VerdictStatus::Rational);
  }

  TEST_CASE("ranges") {
    CHECK(code_of([] { order8m_group(3, 4); }) == ErrorCode::ScriptRangeError);
    CHECK(code_of([] { order8m_group(4, 3); }) == ErrorCode::ScriptRangeError);
    CHECK(code_of([] { run_order8m_subcase(1, 3, FieldDescriptor{}.normalized()); }) == ErrorCode::InvalidInput);
    CHECK(order8m_group(2, 5).order() == 40);
  }
}
