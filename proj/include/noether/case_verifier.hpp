#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "noether/classify.hpp"
#include "noether/field.hpp"
#include "noether/group.hpp"
#include "noether/monomial.hpp"

namespace noether {

enum class StepStatus { Pass, Fail, UnknownStep, Corrected };

std::string to_string(StepStatus s);

struct StepReport {
  std::string name;
  StepStatus status = StepStatus::Pass;
  /// "printed: ..." for formulas taken from the published derivation, "derived: ..." otherwise.
  std::string expected_ref;
  std::string diff;
};

struct CaseReport {
  std::string case_id;
  std::string title;
  int family = 0;
  int n = 0;
  std::string field;
  std::vector<StepReport> steps;
  Verdict verdict;
  /// Quantities read off during the run, e.g. "epsilon" or "reduction_steps".
  std::map<std::string, std::string> facts;
  /// Every monomial action the run produced, in order.
  std::vector<ActionAssignment> assignments;
  double wall_ms = 0;

  bool passed() const;
};

enum class StepType {
  EigenvectorSum,  // args: name, coefficient, word, loop ranges...; args2: claimed eigenvalues
  Eigenvector,     // args: name; args2: "word: value" character on a subgroup
  Induce,          // args: "x1 = s X" definitions
  Faithful,
  Expect,          // args[0]: table text
  Change,          // args: new-variable definitions; args2: inverse definitions (optional)
  Invariants,      // args: subgroup words; args2: monomial definitions
  Eliminate,       // args[0]: variable
  LinearSplit,     // args: variables kept
  ScalarReduce,
  Coefficient,     // args: fact, generator word, variable, form "1/(u1*v1)"; args2: "n=5:-1"
  DirectProduct,   // args: generator words of the two factors, "|" separated
  Rule,            // args: rule keys in order of preference
  InducedSearch,   // abelian index-4 subgroup with a faithful induced character
};

std::string to_string(StepType t);

struct ScriptStep {
  StepType type = StepType::Faithful;
  std::string name;
  std::string ref;
  std::vector<std::string> args;
  std::vector<std::string> args2;
  /// Run instead when this step fails; the step is then reported as Corrected.
  std::vector<ScriptStep> corrected;
  /// Name of the step where the script resumes after `corrected` (empty: stop).
  std::string resume;
  /// Families the step applies to (empty: all families of the script).
  std::vector<int> only;
};

struct CaseScript {
  std::string title;
  std::vector<int> families;
  std::vector<ScriptStep> steps;
};

/// The script covering a family (throws ScriptRangeError for unknown ids).
CaseScript case_script(int family);

/// Runs a script on a concrete family group.
CaseReport run_script(const CaseScript& script, int family, int n, const FieldDescriptor& field);

/// Script ranges: n = 5..7 (6..7 for class III, 5 for G26).
bool script_accepts(int family, int n);

CaseReport run_case(int family, int n, const FieldDescriptor& field);
CaseReport run_case(int family, int n);

/// One report per family valid at each n; the field is the minimal one per n.
std::vector<CaseReport> run_all(const std::vector<int>& n_values);

/// Order-8m constructions for odd m in [3, 15].
CaseReport run_order8m_subcase(int subcase, int m, const FieldDescriptor& field);
Group order8m_group(int subcase, int m);

struct TableEntry {
  std::string key;
  std::string variable;
  std::string image;
};

/// "s: x0 -> x1 -> zeta*x0, x2 <-> x3; t: ..." as a list of single images.
std::vector<TableEntry> parse_table(const std::string& text);
std::string format_table(const std::vector<TableEntry>& entries);

/// Builds an action assignment from a complete table over the group generators.
ActionAssignment table_assignment(const Group& g, const std::string& table,
                                  const std::vector<std::string>& variables, int n, long long m);

/// Multiplies one randomly chosen image of one Expect step by a nontrivial
/// root of unity. Returns a description of the change, or nullopt when the
/// script has no Expect step.
std::optional<std::string> mutate_expected_coefficient(CaseScript& script, int family,
                                                       std::mt19937& rng);

}  // namespace noether
