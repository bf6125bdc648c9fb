#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "noether/case_verifier.hpp"
#include "noether/classify.hpp"
#include "noether/error.hpp"
#include "noether/json_io.hpp"
#include "noether/lattice.hpp"
#include "noether/profile.hpp"

using namespace noether;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

int parse_family(const std::string& text) {
  std::string s = text;
  if (!s.empty() && (s[0] == 'G' || s[0] == 'g')) s = s.substr(1);
  std::size_t used = 0;
  int id = 0;
  try {
    id = std::stoi(s, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw Error(ErrorCode::InvalidInput, "bad family '" + text + "'");
  return id;
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(ErrorCode::InvalidInput, "bad n list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

FieldDescriptor load_field(const std::string& path) {
  return field_from_json(read_json_file(path));
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  out << j.dump(2) << "\n";
}

const char* roman(int c) {
  static const char* names[] = {"?", "I", "II", "III", "IV"};
  return names[c >= 1 && c <= 4 ? c : 0];
}

void print_verdict(const Verdict& v) {
  std::cout << "verdict: " << to_string(v.status);
  if (!v.condition.empty()) std::cout << " (" << v.condition << ")";
  std::cout << "\n";
  for (const auto& t : v.trace) std::cout << "  [" << t.rule << "] " << t.detail << "\n";
}

void print_report(const CaseReport& r) {
  std::cout << r.case_id << "  " << r.title << "\n  field: " << r.field << "\n";
  for (const auto& s : r.steps) {
    std::cout << "  " << std::left << std::setw(12) << ("[" + to_string(s.status) + "]") << s.name;
    if (!s.expected_ref.empty()) std::cout << "  <" << s.expected_ref << ">";
    if (!s.diff.empty()) std::cout << "\n      " << s.diff;
    std::cout << "\n";
  }
  for (const auto& [k, v] : r.facts) std::cout << "  fact " << k << " = " << v << "\n";
  print_verdict(r.verdict);
  std::cout << (r.passed() ? "PASSED" : "FAILED") << " (" << r.wall_ms << " ms)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noether's problem workbench: group catalog, scripted case verification, rationality rules"};
  app.require_subcommand(1);

  auto* groups = app.add_subcommand("groups", "catalog of the 2-groups with a cyclic subgroup of index 4");
  groups->require_subcommand(1);
  int list_n = 5;
  auto* groups_list = groups->add_subcommand("list", "families valid at n");
  groups_list->add_option("--n", list_n, "log2 of the group order")->required();
  std::string info_family;
  int info_n = 5;
  auto* groups_info = groups->add_subcommand("info", "structural profile of one family group");
  groups_info->add_option("--family", info_family, "family id, e.g. G8")->required();
  groups_info->add_option("--n", info_n, "log2 of the group order")->required();

  auto* verify = app.add_subcommand("verify", "replay the scripted constructions");
  verify->require_subcommand(1);
  std::string case_family, case_field, case_report;
  int case_n = 5;
  auto* verify_case = verify->add_subcommand("case", "run one case script");
  verify_case->add_option("--family", case_family, "family id, e.g. G8")->required();
  verify_case->add_option("--n", case_n, "log2 of the group order")->required();
  verify_case->add_option("--field", case_field, "field descriptor JSON (default: minimal field)");
  verify_case->add_option("--report", case_report, "write the report as JSON");
  std::string all_n = "5,6", all_report;
  auto* verify_all = verify->add_subcommand("all", "run every script at the given n values");
  verify_all->add_option("--n", all_n, "comma-separated n values");
  verify_all->add_option("--report", all_report, "directory receiving one JSON report per case");
  int sub_case = 3, sub_m = 3;
  std::string sub_field, sub_report;
  auto* verify_sub = verify->add_subcommand("order8m", "order-8m constructions C_m x| P with P of order 8");
  verify_sub->add_option("--subcase", sub_case, "1: P = C4 x C2, 2: <sigma> x| C4, 3: C_m x| C8")->required();
  verify_sub->add_option("--m", sub_m, "odd m in [3, 15]")->required();
  verify_sub->add_option("--field", sub_field, "field descriptor JSON (default: zeta_2m only)");
  verify_sub->add_option("--report", sub_report, "write the report as JSON");

  auto* classify = app.add_subcommand("classify", "rationality verdicts");
  classify->require_subcommand(1);
  std::string cg_spec, cg_field;
  auto* classify_group_cmd = classify->add_subcommand("group", "verdict for k(G)");
  classify_group_cmd->add_option("--spec", cg_spec, "group spec JSON")->required();
  classify_group_cmd->add_option("--field", cg_field, "field descriptor JSON")->required();
  std::string ca_action, ca_field;
  auto* classify_action_cmd = classify->add_subcommand("action", "verdict for a monomial action, d <= 3");
  classify_action_cmd->add_option("--action", ca_action, "action JSON")->required();
  classify_action_cmd->add_option("--field", ca_field, "field descriptor JSON")->required();

  auto* reduce = app.add_subcommand("reduce", "lattice reductions");
  reduce->require_subcommand(1);
  std::string ra_action, ra_json;
  auto* reduce_action = reduce->add_subcommand("action", "iterate the scalar-kernel reduction");
  reduce_action->add_option("--action", ra_action, "action JSON")->required();
  reduce_action->add_option("--json", ra_json, "write the reduction chain as JSON");

  auto* mgroup = app.add_subcommand("m-group", "four-dimensional monomial matrix groups");
  mgroup->require_subcommand(1);
  std::string mg_matrices, mg_field;
  auto* mgroup_classify = mgroup->add_subcommand("classify", "normalize and classify an M-group");
  mgroup_classify->add_option("--matrices", mg_matrices, "JSON list of monomial matrices")->required();
  mgroup_classify->add_option("--field", mg_field, "field descriptor JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (groups_list->parsed()) {
      std::cout << "family  class  order  exponent  center\n";
      for (int id = 1; id <= 26; ++id) {
        if (!family_accepts(id, list_n)) continue;
        const auto p = structural_profile(family_group(id, list_n));
        std::cout << std::left << std::setw(8) << ("G" + std::to_string(id)) << std::setw(7) << roman(family_class(id))
                  << std::setw(7) << p.order << std::setw(10) << p.exponent << p.center_order << "\n";
      }
      return 0;
    }
    if (groups_info->parsed()) {
      const Group g = family_group(parse_family(info_family), info_n);
      const auto p = structural_profile(g);
      std::cout << g.name() << "\n";
      for (const auto& r : g.relations()) std::cout << "  " << r.text << "\n";
      std::cout << "order " << p.order << ", exponent " << p.exponent << ", center order " << p.center_order
                << ", max cyclic index " << p.max_cyclic_index << ", 2-Sylow " << p.sylow2_description << "\n";
      return 0;
    }
    if (verify_case->parsed()) {
      const int id = parse_family(case_family);
      const CaseReport r =
          case_field.empty() ? run_case(id, case_n) : run_case(id, case_n, load_field(case_field));
      print_report(r);
      if (!case_report.empty()) write_json(case_report, report_to_json(r));
      return r.passed() ? 0 : kExitFail;
    }
    if (verify_all->parsed()) {
      const auto reports = run_all(parse_n_list(all_n));
      if (!all_report.empty()) std::filesystem::create_directories(all_report);
      int failed = 0;
      for (const auto& r : reports) {
        std::cout << std::left << std::setw(10) << r.case_id << (r.passed() ? "pass" : "FAIL");
        int corrected = 0;
        for (const auto& s : r.steps) corrected += s.status == StepStatus::Corrected;
        std::cout << "  " << r.steps.size() << " steps";
        if (corrected) std::cout << ", " << corrected << " corrected";
        std::cout << ", " << to_string(r.verdict.status) << "\n";
        if (!r.passed()) ++failed;
        if (!all_report.empty()) {
          std::string file = r.case_id;
          for (char& c : file)
            if (c == '@' || c == '=') c = '_';
          write_json((std::filesystem::path(all_report) / (file + ".json")).string(), report_to_json(r));
        }
      }
      std::cout << reports.size() - failed << "/" << reports.size() << " cases passed\n";
      return failed ? kExitFail : 0;
    }
    if (verify_sub->parsed()) {
      const FieldDescriptor f = sub_field.empty() ? FieldDescriptor::with_root(2LL * sub_m) : load_field(sub_field);
      const CaseReport r = run_order8m_subcase(sub_case, sub_m, f);
      print_report(r);
      if (!sub_report.empty()) write_json(sub_report, report_to_json(r));
      return r.passed() ? 0 : kExitFail;
    }
    if (classify_group_cmd->parsed()) {
      const Verdict v = noether::classify_group(group_from_json(read_json_file(cg_spec)), load_field(cg_field));
      print_verdict(v);
      return v.status == VerdictStatus::Unknown ? kExitFail : 0;
    }
    if (classify_action_cmd->parsed()) {
      const Verdict v = classify_monomial_action(action_from_json(read_json_file(ca_action)), load_field(ca_field));
      print_verdict(v);
      return v.status == VerdictStatus::Unknown ? kExitFail : 0;
    }
    if (reduce_action->parsed()) {
      const ActionAssignment a = action_from_json(read_json_file(ra_action));
      const ReductionChain chain = reduce_to_injective(a);
      for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const auto& s = chain.steps[i];
        std::cout << "step " << i + 1 << " (" << to_string(s.kind) << "): " << s.justification << "\n";
        std::cout << "  new variables: ";
        for (std::size_t k = 0; k < s.output.variable_names.size(); ++k)
          std::cout << (k ? ", " : "") << s.output.variable_names[k];
        std::cout << "\n";
      }
      std::cout << "terminal action:\n";
      for (std::size_t g = 0; g < chain.result.images.size(); ++g)
        std::cout << "  " << chain.result.group.generator_names()[g] << ": "
                  << chain.result.images[g].to_string(chain.result.variable_names) << "\n";
      if (!ra_json.empty()) write_json(ra_json, chain_to_json(chain));
      return 0;
    }
    if (mgroup_classify->parsed()) {
      const Json j = read_json_file(mg_matrices);
      const Json& list = j.is_object() && j.contains("matrices") ? j.at("matrices") : j;
      if (!list.is_array()) throw Error(ErrorCode::ParseError, "expected a list of monomial matrices");
      std::vector<MonomialMatrix> mats;
      for (const auto& m : list) mats.push_back(monomial_matrix_from_json(m));
      const Verdict v = classify_m_group(mats, load_field(mg_field));
      print_verdict(v);
      return v.status == VerdictStatus::Unknown ? kExitFail : 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
