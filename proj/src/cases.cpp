#include <algorithm>
#include <future>

#include "noether/case_verifier.hpp"
#include "noether/error.hpp"

namespace noether {

namespace {

using Strings = std::vector<std::string>;

ScriptStep step(StepType type, std::string name, std::string ref, Strings args = {}, Strings args2 = {}) {
  ScriptStep s;
  s.type = type;
  s.name = std::move(name);
  s.ref = std::move(ref);
  s.args = std::move(args);
  s.args2 = std::move(args2);
  return s;
}

ScriptStep only(ScriptStep s, std::vector<int> families) {
  s.only = std::move(families);
  return s;
}

ScriptStep expect(std::string name, std::string table, std::string printed_variant = "") {
  Strings alt;
  if (!printed_variant.empty()) alt.push_back(std::move(printed_variant));
  return step(StepType::Expect, std::move(name), "printed", {std::move(table)}, std::move(alt));
}

ScriptStep faithful(std::string what) {
  return step(StepType::Faithful, "faithful on " + what, "printed: G acts faithfully");
}

ScriptStep eliminate(const std::string& var) {
  return step(StepType::Eliminate, "drop " + var + " (affine fibration)", "printed", {var});
}

ScriptStep rule(Strings keys, std::string ref = "printed") {
  return step(StepType::Rule, "rationality rule", std::move(ref), std::move(keys));
}

ScriptStep reduce() {
  return step(StepType::ScalarReduce, "fixed field of the scalar subgroup", "derived");
}

const std::string kZetaSum = "zeta^(-{a})";
const std::string kHalf = "a=0..2^(n-3)-1";

// X = sum zeta^-a [x(s^2a) + x(s^2a t)], fixed by t.
ScriptStep x_over_s2_t() {
  return step(StepType::EigenvectorSum, "X", "printed", {"X", kZetaSum, "s^(2*{a}) t^{b}", kHalf, "b=0..1"},
              {"s^2: zeta", "t: 1"});
}

CaseScript case_one() {
  CaseScript c{"metacyclic group, eigenvectors of <sigma^2, tau>", {1, 9}, {}};
  c.steps = {
      step(StepType::EigenvectorSum, "X", "printed", {"X", kZetaSum, "s^(2*{a}) t^{b}", kHalf, "b=0..3"},
           {"s^2: zeta", "t: 1"}),
      step(StepType::EigenvectorSum, "Y", "printed", {"Y", "i^(-{b})", "s^(2*{a}) t^{b}", kHalf, "b=0..3"},
           {"s^2: 1", "t: i"}),
      step(StepType::Induce, "x0, x1, y0, y1", "printed", {"x0 = X", "x1 = s X", "y0 = Y", "y1 = s Y"}),
      only(expect("action on x, y",
                  "s: x0 -> x1 -> zeta*x0, y0 -> y1 -> y0; t: x0 -> x0, x1 -> -x1, y0 -> i*y0, y1 -> i*y1"),
           {1}),
      only(expect("action on x, y",
                  "s: x0 -> x1 -> zeta*x0, y0 -> y1 -> y0; t: x0 -> x0, x1 -> x1, y0 -> i*y0, y1 -> -i*y1"),
           {9}),
      faithful("x0, x1, y0, y1"),
      step(StepType::Change, "z1 = x1/x0, z2 = y1/y0", "printed", {"z1 = x1/x0", "z2 = y1/y0", "x0", "y0"}),
      only(expect("action on z1, z2", "s: x0 -> z1*x0, y0 -> z2*y0, z1 -> zeta/z1, z2 -> 1/z2; "
                                      "t: x0 -> x0, y0 -> i*y0, z1 -> -z1, z2 -> z2"),
           {1}),
      eliminate("x0"),
      eliminate("y0"),
      rule({"dim2"}),
  };
  return c;
}

CaseScript case_direct_product() {
  CaseScript c{"direct product <sigma, tau> x <lambda>", {2, 3, 10, 11}, {}};
  c.steps = {step(StepType::DirectProduct, "G = <sigma, tau> x <lambda>", "printed", {"s, t", "l"})};
  return c;
}

CaseScript case_g4() {
  CaseScript c{"eigenvector of <sigma^2>, fixed field of <sigma^2> then <tau>", {4}, {}};
  c.steps = {
      x_over_s2_t(),
      step(StepType::Induce, "x0..x3", "printed", {"x0 = X", "x1 = s X", "x2 = l X", "x3 = l s X"}),
      expect("action on x",
             "s: x0 -> x1 -> zeta*x0, x2 -> x3 -> zeta*x2; t: x0 -> x0, x1 -> x1, x2 -> -x2, x3 -> -x3; "
             "l: x0 -> x2 -> x0, x1 -> x3 -> x1"),
      faithful("x0..x3"),
      step(StepType::Invariants, "fixed field of <sigma^2>", "printed", {"s^2"},
           {"y0 = x0^(2^(n-3))", "y1 = x1/x0", "y2 = x2/x1", "y3 = x3/x2"}),
      expect("action on y",
             "s: y0 -> y1^(2^(n-3))*y0, y1 -> zeta/y1, y2 -> zeta^-1*y1*y2*y3, y3 -> zeta/y3; "
             "t: y0 -> y0, y1 -> y1, y2 -> -y2, y3 -> y3; "
             "l: y0 -> y1^(2^(n-3))*y2^(2^(n-3))*y0, y1 -> y3 -> y1, y2 -> 1/(y1*y2*y3)"),
      eliminate("y0"),
      step(StepType::Invariants, "fixed field of <tau>", "printed", {"t"},
           {"z1 = y1", "z2 = y3", "z3 = y1*y3*y2^2"}),
      expect("action on z", "s: z1 -> zeta/z1, z2 -> zeta/z2, z3 -> z3; l: z1 -> z2 -> z1, z3 -> 1/z3"),
      rule({"pattern"}),
  };
  return c;
}

CaseScript case_g5() {
  CaseScript c{"eigenvector of <sigma^2, lambda>, four-dimensional monomial representation", {5}, {}};
  ScriptStep split = step(StepType::LinearSplit, "keep y0, y1 (linear fibration)", "printed", {"y0", "y1"});
  split.corrected = {rule({"mgroup"}, "derived: x0..x3 span a faithful monomial representation")};
  c.steps = {
      step(StepType::Eigenvector, "X", "derived: sigma^2 X = zeta X, lambda X = X", {"X"},
           {"s^2: zeta", "l: 1"}),
      step(StepType::Induce, "x0..x3", "printed", {"x0 = X", "x1 = s X", "x2 = t X", "x3 = t s X"}),
      expect("action on x", "s: x0 -> x1 -> zeta*x0, x2 -> x3 -> zeta*x2; t: x0 -> x2 -> x0, x1 -> x3 -> x1; "
                            "l: x0 -> x0, x1 -> x3 -> x1, x2 -> x2"),
      faithful("x0..x3"),
      step(StepType::Change, "y = x0 -+ x2, x1 -+ x3", "printed",
           {"y0 = x0-x2", "y1 = x1-x3", "y2 = x0+x2", "y3 = x1+x3"},
           {"x0 = (y0+y2)/2", "x1 = (y1+y3)/2", "x2 = (y2-y0)/2", "x3 = (y3-y1)/2"}),
      expect("action on y", "s: y0 -> y1 -> zeta*y0, y2 -> y3 -> zeta*y2; "
                            "t: y0 -> -y0, y1 -> -y1, y2 -> y2, y3 -> y3; "
                            "l: y0 -> y0, y1 -> -y1, y2 -> y2, y3 -> y3"),
      split,
      rule({"dim2"}),
  };
  return c;
}

CaseScript case_g6() {
  CaseScript c{"eigenvectors of <sigma^2, tau^2> and <sigma^2, tau>", {6, 7}, {}};
  c.steps = {
      step(StepType::EigenvectorSum, "X", "printed", {"X", kZetaSum, "s^(2*{a}) t^(2*{b})", kHalf, "b=0..1"},
           {"s^2: zeta", "t^2: 1"}),
      step(StepType::EigenvectorSum, "Y", "printed", {"Y", "i^(-{b})", "s^(2*{a}) t^{b}", kHalf, "b=0..3"},
           {"s^2: 1", "t: i"}),
      step(StepType::Induce, "x0..x3, y0, y1", "printed",
           {"x0 = X", "x1 = s X", "x2 = t X", "x3 = t s X", "y0 = Y", "y1 = s Y"}),
      only(expect("action on x, y", "s: x0 -> x1 -> zeta*x0, x2 -> zeta^-1*x3, x3 -> x2, y0 -> y1 -> y0; "
                                    "t: x0 -> x2 -> x0, x1 -> x3 -> x1, y0 -> i*y0, y1 -> i*y1"),
           {6}),
      faithful("x0..x3, y0, y1"),
      step(StepType::Change, "y2 = y1/y0", "printed", {"x0", "x1", "x2", "x3", "y0", "y2 = y1/y0"}),
      only(expect("action on y2", "s: y2 -> 1/y2, y0 -> y2*y0; t: y2 -> y2, y0 -> i*y0"), {6}),
      eliminate("y0"),
      step(StepType::Change, "y4 = (1-y2)/(1+y2)", "printed", {"x0", "x1", "x2", "x3", "y4 = (1-y2)/(1+y2)"},
           {"x0", "x1", "x2", "x3", "y2 = (1-y4)/(1+y4)"}),
      only(expect("action on y4", "s: y4 -> -y4; t: y4 -> y4"), {6}),
      eliminate("y4"),
      step(StepType::Change, "z0 = x0, z1 = x1/x0, z2 = x3/x2, z3 = x2/x1", "printed",
           {"z0 = x0", "z1 = x1/x0", "z2 = x3/x2", "z3 = x2/x1"}),
      only(expect("action on z", "s: z0 -> z1*z0, z1 -> zeta/z1, z2 -> zeta/z2, z3 -> zeta^-2*z1*z2*z3; "
                                 "t: z0 -> z1*z3*z0, z1 -> z2 -> z1, z3 -> 1/(z1*z2*z3)"),
           {6}),
      eliminate("z0"),
      step(StepType::Invariants, "fixed field of <sigma^2>", "printed", {"s^2"},
           {"z1", "z2", "u1 = z3^(2^(n-4))"}),
      only(expect("action on u1", "s: z1 -> zeta/z1, z2 -> zeta/z2, u1 -> (z1*z2)^(2^(n-4))*u1; "
                                  "t: z1 -> z2 -> z1, u1 -> 1/((z1*z2)^(2^(n-4))*u1)"),
           {6}),
      step(StepType::Change, "u2 = (z1 z2)^(2^(n-5)) u1", "printed", {"z1", "z2", "u2 = (z1*z2)^(2^(n-5))*u1"}),
      only(expect("action on u2", "s: z1 -> zeta/z1, z2 -> zeta/z2, u2 -> -u2; t: z1 -> z2 -> z1, u2 -> 1/u2"),
           {6}),
      rule({"pattern", "sqrt"}),
  };
  return c;
}

/// Eigenvector of <sigma^2, tau^2> with tau^2 acting by sqrt(-1); replaces
/// the printed X, Y whose j and j+2 terms cancel because tau^4 = sigma^(2^(n-3)).
std::vector<ScriptStep> z_route() {
  return {step(StepType::Eigenvector, "Z", "derived: sigma^2 Z = zeta Z, tau^2 Z = sqrt(-1) Z", {"Z"},
               {"s^2: zeta", "t^2: i"}),
          step(StepType::Induce, "z0..z3", "derived", {"z0 = Z", "z1 = s Z", "z2 = t Z", "z3 = t s Z"})};
}

std::vector<ScriptStep> printed_xy_route(const std::string& y_range) {
  ScriptStep x = step(StepType::EigenvectorSum, "X", "printed",
                      {"X", kZetaSum, "s^(2*{a}) t^(2*{b})", kHalf, "b=0..3"}, {"s^2: zeta", "t^2: 1"});
  x.corrected = z_route();
  x.resume = "action on z";
  return {
      x,
      step(StepType::EigenvectorSum, "Y", "printed", {"Y", "i^(-{b})", "s^(2*{a}) t^(2*{b})", kHalf, y_range},
           {"s^2: 1", "t^2: i"}),
      step(StepType::Induce, "x0..x3, y0..y3", "printed",
           {"x0 = X", "x1 = s X", "x2 = t X", "x3 = t s X", "y0 = Y", "y1 = s Y", "y2 = t Y", "y3 = t s Y"}),
      step(StepType::Change, "z_i = x_i y_i", "printed",
           {"x0", "x1", "x2", "x3", "z0 = x0*y0", "z1 = x1*y1", "z2 = x2*y2", "z3 = x3*y3"}),
      step(StepType::LinearSplit, "keep z0..z3 (linear fibration)", "printed", {"z0", "z1", "z2", "z3"}),
  };
}

CaseScript case_g8() {
  CaseScript c{"eigenvector of <sigma^2, tau^2>, exceptional sign epsilon", {8}, {}};
  c.steps = printed_xy_route("b=0..3");
  const std::vector<ScriptStep> rest = {
      expect("action on z", "s: z0 -> z1 -> zeta*z0, z2 -> zeta^-1*z3, z3 -> z2; "
                            "t: z0 -> z2 -> i*z0, z1 -> z3 -> i*z1"),
      faithful("z0..z3"),
      step(StepType::Change, "u0 = z0, u1 = z1/z0, u2 = z3/z2, u3 = z2/z1", "printed",
           {"u0 = z0", "u1 = z1/z0", "u2 = z3/z2", "u3 = z2/z1"}),
      expect("action on u", "s: u0 -> u1*u0, u1 -> zeta/u1, u2 -> zeta/u2, u3 -> zeta^-2*u1*u2*u3; "
                            "t: u0 -> u1*u3*u0, u1 <-> u2, u3 -> i/(u1*u2*u3)"),
      eliminate("u0"),
      step(StepType::Invariants, "fixed field of <sigma^2>", "printed", {"s^2"}, {"u1", "u2", "v1 = u3^(2^(n-4))"}),
      step(StepType::Coefficient, "sign epsilon of tau(v1)", "printed: epsilon = 1 if n >= 6, -1 if n = 5",
           {"epsilon", "t", "v1", "1/((u1*u2)^(2^(n-4))*v1)"}, {"n=5: -1", "n>=6: 1"}),
      expect("action on v1", "s: v1 -> (u1*u2)^(2^(n-4))*v1; t: v1 -> {epsilon}/((u1*u2)^(2^(n-4))*v1)",
             "s: v1 -> (u1*u2)^(2^(n-4))*v1; t: v1 -> {epsilon}/((u1*u2)^(2^(n-4))*u4)"),
      step(StepType::Change, "v2 = (u1 u2)^(2^(n-5)) v1", "printed", {"u1", "u2", "v2 = (u1*u2)^(2^(n-5))*v1"}),
      expect("action on v2", "s: v2 -> -v2; t: v2 -> {epsilon}/v2"),
      rule({"pattern"}),
  };
  c.steps.insert(c.steps.end(), rest.begin(), rest.end());
  return c;
}

CaseScript case_g12() {
  CaseScript c{"eigenvector of <sigma^2>, fixed fields of <tau> and <sigma^2>", {12}, {}};
  c.steps = {
      x_over_s2_t(),
      step(StepType::Induce, "x0..x3", "printed", {"x0 = X", "x1 = s X", "x2 = l X", "x3 = l s X"}),
      expect("action on x", "s: x0 -> x1 -> zeta*x0, x2 -> zeta^-1*x3, x3 -> x2; "
                            "t: x0 -> x0, x1 -> x1, x2 -> -x2, x3 -> -x3; l: x0 <-> x2, x1 <-> x3"),
      faithful("x0..x3"),
      step(StepType::Change, "y0 = x0, y1 = x1/x0, y2 = x3/x2, y3 = x2/x1", "printed",
           {"y0 = x0", "y1 = x1/x0", "y2 = x3/x2", "y3 = x2/x1"}),
      expect("action on y", "s: y0 -> y1*y0, y1 -> zeta/y1, y2 -> zeta/y2, y3 -> zeta^-2*y1*y2*y3; "
                            "t: y0 -> y0, y1 -> y1, y2 -> y2, y3 -> -y3; "
                            "l: y0 -> y1*y3*y0, y1 <-> y2, y3 -> 1/(y1*y2*y3)"),
      eliminate("y0"),
      step(StepType::Invariants, "fixed field of <tau>", "printed", {"t"}, {"y1", "y2", "z1 = y3^2"}),
      expect("action on z1", "s: z1 -> zeta^-4*y1^2*y2^2*z1; l: z1 -> 1/(y1^2*y2^2*z1)"),
      step(StepType::Invariants, "fixed field of <sigma^2>", "printed", {"s^2"}, {"y1", "y2", "z2 = z1^(2^(n-5))"}),
      expect("action on z2", "s: z2 -> (y1*y2)^(2^(n-4))*z2; l: z2 -> 1/((y1*y2)^(2^(n-4))*z2)"),
      step(StepType::Change, "z3 = (y1 y2)^(2^(n-5)) z2", "printed", {"y1", "y2", "z3 = (y1*y2)^(2^(n-5))*z2"}),
      expect("action on z3", "s: z3 -> -z3; l: z3 -> 1/z3"),
      rule({"pattern"}),
  };
  return c;
}

CaseScript case_g13() {
  CaseScript c{"eigenvectors of <sigma^2, tau>, linear and affine fibrations", {13, 14}, {}};
  c.steps = {
      x_over_s2_t(),
      step(StepType::EigenvectorSum, "Y", "printed", {"Y", "(-1)^{b}", "s^(2*{a}) t^{b}", kHalf, "b=0..1"},
           {"s^2: 1", "t: -1"}),
      step(StepType::Induce, "x0..x3, y0..y3", "printed",
           {"x0 = X", "x1 = s X", "x2 = l X", "x3 = l s X", "y0 = Y", "y1 = s Y", "y2 = l Y", "y3 = l s Y"}),
      only(expect("action on x, y",
                  "s: x0 -> x1 -> zeta*x0, x2 -> zeta^-1*x3, x3 -> x2, y0 <-> y1, y2 -> -y3, y3 -> -y2; "
                  "t: x0 -> x0, x1 -> x1, x2 -> x2, x3 -> x3, y0 -> -y0, y1 -> -y1, y2 -> -y2, y3 -> -y3; "
                  "l: x0 <-> x2, x1 <-> x3, y0 <-> y2, y1 <-> y3"),
           {13}),
      faithful("x0..x3, y0..y3"),
      step(StepType::Change, "x4..x7 = y0 + y1, y2 + y3, y0 - y1, y2 - y3", "printed",
           {"x0", "x1", "x2", "x3", "x4 = y0+y1", "x5 = y2+y3", "x6 = y0-y1", "x7 = y2-y3"},
           {"x0", "x1", "x2", "x3", "y0 = (x4+x6)/2", "y1 = (x4-x6)/2", "y2 = (x5+x7)/2", "y3 = (x5-x7)/2"}),
      only(expect("action on x4..x7", "s: x4 -> x4, x5 -> -x5, x6 -> -x6, x7 -> x7; "
                                      "t: x4 -> -x4, x5 -> -x5, x6 -> -x6, x7 -> -x7; l: x4 <-> x5, x6 <-> x7"),
           {13}),
      step(StepType::LinearSplit, "keep x0..x5 (linear fibration)", "printed",
           {"x0", "x1", "x2", "x3", "x4", "x5"}),
      step(StepType::Change, "Z = x5/x4", "printed", {"x0", "x1", "x2", "x3", "x4", "Z = x5/x4"}),
      only(expect("action on Z", "s: Z -> -Z; t: Z -> Z; l: Z -> 1/Z"), {13}),
      eliminate("x4"),
      step(StepType::Change, "u0 = x0, u1 = x1/x0, u2 = x3/x2, u3 = x2/x1, u4 = Z", "printed",
           {"u0 = x0", "u1 = x1/x0", "u2 = x3/x2", "u3 = x2/x1", "u4 = Z"}),
      eliminate("u0"),
      only(expect("action on u1..u4", "s: u1 -> zeta/u1, u2 -> zeta/u2, u3 -> zeta^-2*u1*u2*u3, u4 -> -u4; "
                                      "l: u1 <-> u2, u3 -> 1/(u1*u2*u3), u4 -> 1/u4"),
           {13}),
      step(StepType::Invariants, "fixed field of <sigma^2>", "printed", {"s^2"},
           {"u1", "u2", "u4", "u5 = u3^(2^(n-4))"}),
      only(expect("action on u5", "s: u5 -> (u1*u2)^(2^(n-4))*u5; l: u5 -> 1/((u1*u2)^(2^(n-4))*u5)"), {13}),
      step(StepType::Change, "u6 = (u1 u2)^(2^(n-5)) u5", "printed",
           {"u1", "u2", "u4", "u6 = (u1*u2)^(2^(n-5))*u5"}),
      only(expect("action on u6", "s: u1 -> zeta/u1, u2 -> zeta/u2, u6 -> -u6, u4 -> -u4; "
                                  "l: u1 <-> u2, u6 -> 1/u6, u4 -> 1/u4"),
           {13}),
      step(StepType::Change, "u7 = u4 u6", "printed", {"u1", "u2", "u6", "u7 = u4*u6"}),
      only(expect("action on u7", "s: u7 -> u7; l: u7 -> 1/u7"), {13}),
      step(StepType::Change, "u8 = (1-u7)/(1+u7)", "printed", {"u1", "u2", "u6", "u8 = (1-u7)/(1+u7)"},
           {"u1", "u2", "u6", "u7 = (1-u8)/(1+u8)"}),
      only(expect("action on u8", "s: u8 -> u8; l: u8 -> -u8"), {13}),
      eliminate("u8"),
      rule({"pattern"}),
  };
  return c;
}

CaseScript case_cited() {
  CaseScript c{"cited construction; replayed through a faithful monomial representation", {15, 16, 17, 18, 24, 25}, {}};
  c.steps = {
      step(StepType::InducedSearch, "faithful 4-dim monomial subrepresentation",
           "derived: characters with values in <zeta_{2^(n-3)}>"),
      faithful("the induced variables"),
      rule({"mgroup"}, "derived"),
  };
  return c;
}

CaseScript case_g19() {
  CaseScript c{"eigenvector of <sigma^2, tau^2>, scalar reduction", {19, 20}, {}};
  c.steps = {
      step(StepType::EigenvectorSum, "X", "printed", {"X", kZetaSum, "s^(2*{a}) t^(2*{b})", kHalf, "b=0..1"},
           {"s^2: zeta", "t^2: 1"}),
      step(StepType::Induce, "x0..x3", "printed", {"x0 = X", "x1 = s X", "x2 = t X", "x3 = t s X"}),
      only(expect("action on x", "s: x0 -> x1 -> zeta*x0, x2 -> i*x3, x3 -> i*zeta*x2; "
                                 "t: x0 <-> x2, x1 -> x3 -> -x1"),
           {19}),
      faithful("x0..x3"),
      step(StepType::Change, "u0 = x0, u1 = x1/x0, u2 = x3/x2, u3 = x2/x1", "printed",
           {"u0 = x0", "u1 = x1/x0", "u2 = x3/x2", "u3 = x2/x1"}),
      only(expect("action on u", "s: u0 -> u1*u0, u1 -> zeta/u1, u2 -> zeta/u2, u3 -> i*zeta^-1*u1*u2*u3; "
                                 "t: u0 -> u1*u3*u0, u1 -> u2 -> -u1, u3 -> 1/(u1*u2*u3)"),
           {19}),
      eliminate("u0"),
      reduce(),
      rule({"pattern", "sqrt"}, "printed: as for the tau^4 = sigma^(2^(n-3)) family"),
  };
  return c;
}

CaseScript case_g21() {
  CaseScript c{"eigenvector of <sigma^2, tau^2>, scalar reduction", {21}, {}};
  c.steps = printed_xy_route("b=0..2");
  const std::vector<ScriptStep> rest = {
      expect("action on z", "s: z0 -> z1 -> zeta*z0, z2 -> i*z3, z3 -> -i*zeta*z2; "
                            "t: z0 -> z2 -> i*z0, z1 -> z3 -> -i*z1"),
      faithful("z0..z3"),
      step(StepType::Change, "u0 = z0, u1 = z1/z0, u2 = z3/z2, u3 = z2/z1", "derived",
           {"u0 = z0", "u1 = z1/z0", "u2 = z3/z2", "u3 = z2/z1"}),
      step(StepType::Eliminate, "drop u0 (affine fibration)", "derived", {"u0"}),
      reduce(),
      rule({"pattern", "sqrt"}, "printed: as for the tau^4 = sigma^(2^(n-3)) family"),
  };
  c.steps.insert(c.steps.end(), rest.begin(), rest.end());
  return c;
}

CaseScript case_g23() {
  CaseScript c{"eigenvector of <sigma^2>, scalar reduction", {22, 23}, {}};
  c.steps = {
      x_over_s2_t(),
      step(StepType::Induce, "x0..x3", "printed", {"x0 = X", "x1 = s X", "x2 = l X", "x3 = l s X"}),
      only(expect("action on x", "s: x0 -> x1 -> zeta*x0, x2 -> i*zeta^-1*x3, x3 -> i*x2; "
                                 "t: x0 -> x0, x1 -> x1, x2 -> -x2, x3 -> -x3; l: x0 <-> x2, x1 <-> x3"),
           {23}),
      faithful("x0..x3"),
      step(StepType::Change, "y0 = x0, y1 = x1/x0, y2 = x3/x2, y3 = x2/x1", "printed",
           {"y0 = x0", "y1 = x1/x0", "y2 = x3/x2", "y3 = x2/x1"}),
      only(expect("action on y", "s: y0 -> y1*y0, y1 -> zeta/y1, y2 -> zeta/y2, y3 -> i*zeta^-2*y1*y2*y3; "
                                 "t: y0 -> y0, y1 -> y1, y2 -> y2, y3 -> -y3; "
                                 "l: y0 -> y1*y3*y0, y1 <-> y2, y3 -> 1/(y1*y2*y3)"),
           {23}),
      step(StepType::Eliminate, "drop y0 (affine fibration)", "derived", {"y0"}),
      reduce(),
      rule({"pattern", "sqrt"}, "printed: as for G12"),
  };
  return c;
}

CaseScript case_g26() {
  CaseScript c{"eigenvector of <sigma^2> with sqrt(-1), fibrations", {26}, {}};
  c.steps = {
      step(StepType::EigenvectorSum, "X", "printed", {"X", "i^(-{a})", "s^(2*{a}) t^{b}", "a=0..3", "b=0..1"},
           {"s^2: i", "t: 1"}),
      step(StepType::Induce, "x0..x3", "printed", {"x0 = X", "x1 = s X", "x2 = l X", "x3 = l s X"}),
      expect("action on x", "s: x0 -> x1 -> i*x0, x2 -> x3 -> -i*x2; t: x0 -> x0, x1 -> -x1, x2 -> x2, x3 -> -x3; "
                            "l: x0 -> x2 -> -x0, x1 -> x3 -> -x1"),
      faithful("x0..x3"),
      step(StepType::Change, "y0 = x0, y1 = x1/x0, y2 = x3/x2, y3 = x2/x1", "printed",
           {"y0 = x0", "y1 = x1/x0", "y2 = x3/x2", "y3 = x2/x1"}),
      expect("action on y", "s: y0 -> y1*y0, y1 -> i/y1, y2 -> -i/y2, y3 -> -i*y1*y2*y3; "
                            "t: y0 -> y0, y1 -> -y1, y2 -> -y2, y3 -> -y3; "
                            "l: y0 -> y1*y3*y0, y1 <-> y2, y3 -> -1/(y1*y2*y3)"),
      eliminate("y0"),
      step(StepType::Invariants, "fixed field of <sigma^2>", "printed", {"s^2"}, {"v0 = y3^2", "y1", "y2"}),
      expect("action on v0", "s: v0 -> -(y1*y2)^2*v0; t: v0 -> v0; l: v0 -> 1/(y1^2*y2^2*v0)"),
      step(StepType::Invariants, "fixed field of <tau>", "printed", {"t"}, {"v0", "v1 = y1*y2", "v2 = y1/y2"}),
      expect("action on v", "s: v1 -> 1/v1, v2 -> -1/v2, v0 -> -v1^2*v0; "
                            "l: v1 -> v1, v2 -> 1/v2, v0 -> 1/(v1^2*v0)"),
      step(StepType::Change, "u1 = v1 v0, u2 = v2, u3 = (1-v1)/(1+v1)", "printed",
           {"u1 = v1*v0", "u2 = v2", "u3 = (1-v1)/(1+v1)"},
           {"v0 = u1*(1+u3)/(1-u3)", "v1 = (1-u3)/(1+u3)", "v2 = u2"}),
      expect("action on u", "s: u1 -> -u1, u2 -> -1/u2, u3 -> -u3; l: u1 -> 1/u1, u2 -> 1/u2, u3 -> u3"),
      step(StepType::LinearSplit, "keep u1, u2 (linear fibration)", "printed", {"u1", "u2"}),
      rule({"dim2"}),
  };
  return c;
}

}  // namespace

CaseScript case_script(int family) {
  switch (family) {
    case 1: case 9: return case_one();
    case 2: case 3: case 10: case 11: return case_direct_product();
    case 4: return case_g4();
    case 5: return case_g5();
    case 6: case 7: return case_g6();
    case 8: return case_g8();
    case 12: return case_g12();
    case 13: case 14: return case_g13();
    case 15: case 16: case 17: case 18: case 24: case 25: return case_cited();
    case 19: case 20: return case_g19();
    case 21: return case_g21();
    case 22: case 23: return case_g23();
    case 26: return case_g26();
    default: break;
  }
  throw Error(ErrorCode::ScriptRangeError, "no script for family " + std::to_string(family));
}

bool script_accepts(int family, int n) {
  if (family < 1 || family > 26) return false;
  return family_accepts(family, n) && n >= 5 && n <= 7;
}

CaseReport run_case(int family, int n, const FieldDescriptor& field_in) {
  if (!script_accepts(family, n))
    throw Error(ErrorCode::ScriptRangeError,
                "G" + std::to_string(family) + " is not scripted at n=" + std::to_string(n));
  const FieldDescriptor field = field_in.normalized();
  if (field.characteristic == 2 || !field.has_root(1LL << (n - 3)))
    throw Error(ErrorCode::InvalidInput, "the case scripts need char k != 2 and zeta_" +
                                             std::to_string(1LL << (n - 3)) + " in k");
  return run_script(case_script(family), family, n, field);
}

CaseReport run_case(int family, int n) { return run_case(family, n, minimal_case_field(n)); }

std::vector<CaseReport> run_all(const std::vector<int>& n_values) {
  std::vector<std::pair<int, int>> jobs;
  for (int n : n_values)
    for (int f = 1; f <= 26; ++f)
      if (script_accepts(f, n)) jobs.emplace_back(n, f);
  std::sort(jobs.begin(), jobs.end());
  jobs.erase(std::unique(jobs.begin(), jobs.end()), jobs.end());
  std::vector<std::future<CaseReport>> futures;
  for (const auto& [n, f] : jobs)
    futures.push_back(std::async(std::launch::async, [n = n, f = f] { return run_case(f, n); }));
  std::vector<CaseReport> out;
  for (auto& fu : futures) out.push_back(fu.get());
  return out;
}

}  // namespace noether
