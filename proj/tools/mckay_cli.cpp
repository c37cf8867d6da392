// Command-line front end. Verbs print JSON on stdout (render prints the
// abacus picture); errors go to stderr with a nonzero exit status.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mckay/mckay.hpp"

using namespace mckay;
using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

json partition_json(const Partition& lambda) { return lambda.to_string(); }

json tower_json(const CoreTower& tower) {
  json out = json::array();
  for (const auto& [key, part] : tower.entries) {
    out.push_back({{"level", key.first}, {"index", key.second}, {"partition", part.to_string()}});
  }
  return out;
}

json quad_json(const QuadValue& v) { return {{"i_power", v.ipow}, {"radicand", v.radicand}}; }

json report_json(const VerificationReport& r) {
  json defects = json::array();
  for (const Defect& d : r.defects) {
    defects.push_back({{"lambda", d.lambda}, {"path", d.path}, {"expected", d.expected}, {"got", d.got}, {"fatal", d.fatal}});
  }
  return {{"n", r.n},
          {"p", r.p},
          {"sign_class", to_string(r.sign_class)},
          {"global", {{"total", r.global.total}, {"fixed", r.global.fixed}}},
          {"local", {{"total", r.local.total}, {"fixed", r.local.fixed}}},
          {"equal", r.equal},
          {"defects", defects},
          {"ms", r.ms}};
}

// "all" expands to the four canonical classes; anything else is one automorphism.
std::vector<NavarroAut> automorphisms(const std::string& choice, int p, int precision) {
  std::vector<NavarroAut> out;
  if (choice == "all") {
    for (SignClass c : kAllSignClasses) out.push_back(NavarroAut::of_class(p, c, precision));
    return out;
  }
  NavarroAut f = NavarroAut::parse(choice, p);
  f.precision = std::max(f.precision, precision);
  out.push_back(f);
  return out;
}

void print(const json& j) { std::cout << j.dump() << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition combinatorics and Galois-McKay sign verification for alternating groups"};
  app.require_subcommand(1);

  std::string lambda_text;
  int p = 3;
  std::string aut = "all";

  auto add_lambda = [&](CLI::App* sub) { sub->add_option("lambda", lambda_text, "partition, e.g. 7,7,5,4,3,2,2 or 2^3,1")->required(); };
  auto add_p = [&](CLI::App* sub) { sub->add_option("-p,--p", p, "odd prime")->check(CLI::PositiveNumber); };

  auto* core = app.add_subcommand("core", "p-core of a partition");
  add_lambda(core);
  add_p(core);
  auto* quotient = app.add_subcommand("quotient", "p-quotient of a partition");
  add_lambda(quotient);
  add_p(quotient);
  auto* tower = app.add_subcommand("tower", "p-core tower of a partition");
  add_lambda(tower);
  add_p(tower);
  auto* hooks_cmd = app.add_subcommand("hooks", "hook lengths, diagonal hooks and degree");
  add_lambda(hooks_cmd);
  auto* sequence = app.add_subcommand("sequence", "0/1 rim sequence of a partition");
  add_lambda(sequence);
  auto* render = app.add_subcommand("render", "text picture of the p-abacus");
  add_lambda(render);
  add_p(render);

  std::string core_text;
  std::string quotient_text;
  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "rebuild a partition from core and quotient");
  reconstruct_cmd->add_option("--core", core_text, "p-core")->required();
  reconstruct_cmd->add_option("--quotient", quotient_text, "p components separated by ';'")->required();
  add_p(reconstruct_cmd);

  auto* eps_global = app.add_subcommand("eps-global", "sign of f on the split characters of A_n");
  add_lambda(eps_global);
  add_p(eps_global);
  eps_global->add_option("--aut", aut, "id|sigma|kappa|kappa-sigma|all or e=<int>,s=<int>");
  auto* eps_local_cmd = app.add_subcommand("eps-local", "sign of f on the matching normaliser characters");
  add_lambda(eps_local_cmd);
  add_p(eps_local_cmd);
  eps_local_cmd->add_option("--aut", aut, "id|sigma|kappa|kappa-sigma|all or e=<int>,s=<int>");

  int n = 3;
  auto* verify_cmd = app.add_subcommand("verify", "fixed-point counts on both sides for one n and p");
  verify_cmd->add_option("--n", n, "degree of A_n")->required();
  add_p(verify_cmd);
  verify_cmd->add_option("--aut", aut, "id|sigma|kappa|kappa-sigma|all or e=<int>,s=<int>");

  ScanOptions scan_opts;
  std::string primes_text = "3,5,7";
  auto* scan_cmd = app.add_subcommand("scan", "JSON-lines reports for a range of n and primes");
  scan_cmd->add_option("--n-min", scan_opts.n_min, "smallest n")->capture_default_str();
  scan_cmd->add_option("--n-max", scan_opts.n_max, "largest n")->required();
  scan_cmd->add_option("--primes", primes_text, "comma-separated odd primes")->capture_default_str();
  scan_cmd->add_option("--budget-ms", scan_opts.budget_ms, "wall-clock budget")->capture_default_str();

  bool even = false;
  auto* table_cmd = app.add_subcommand("group-table", "exact character table of N_{S_n}(P) or N_{A_n}(P)");
  table_cmd->add_option("--n", n, "degree, at most 9")->required();
  add_p(table_cmd);
  table_cmd->add_flag("--even", even, "restrict to even permutations");

  CLI11_PARSE(app, argc, argv);

  try {
    if (core->parsed()) {
      print({{"lambda", lambda_text}, {"p", p}, {"core", partition_json(p_core(Partition::parse(lambda_text), p))}});
    } else if (quotient->parsed()) {
      json parts = json::array();
      for (const Partition& part : p_quotient(Partition::parse(lambda_text), p)) parts.push_back(part.to_string());
      print({{"lambda", lambda_text}, {"p", p}, {"quotient", parts}});
    } else if (tower->parsed()) {
      const Partition lambda = Partition::parse(lambda_text);
      const CoreTower t = core_tower(lambda, p);
      print({{"lambda", lambda_text}, {"p", p}, {"tower", tower_json(t)}, {"weights", t.weights()}});
    } else if (hooks_cmd->parsed()) {
      const Partition lambda = Partition::parse(lambda_text);
      print({{"lambda", lambda_text},
             {"hook_lengths", hook_lengths(lambda)},
             {"diagonal_hooks", diagonal_hooks(lambda).lengths},
             {"durfee", durfee(lambda)},
             {"degree", degree(lambda).str()},
             {"symmetric", is_symmetric(lambda)}});
    } else if (sequence->parsed()) {
      const PartitionSequence seq = to_sequence(Partition::parse(lambda_text));
      print({{"lambda", lambda_text}, {"window", seq.window_string()}, {"offset", seq.offset}});
    } else if (render->parsed()) {
      std::cout << render_abacus(Partition::parse(lambda_text), p);
    } else if (reconstruct_cmd->parsed()) {
      std::vector<Partition> parts;
      for (const std::string& item : split(quotient_text, ';')) parts.push_back(Partition::parse(item));
      print({{"p", p}, {"partition", reconstruct(Partition::parse(core_text), parts, p).to_string()}});
    } else if (eps_global->parsed()) {
      const Partition lambda = Partition::parse(lambda_text);
      const GlobalSplitChar g = split_values(lambda);
      json signs = json::array();
      for (const NavarroAut& f : automorphisms(aut, p, std::max(1, factorial_valuation(lambda.size(), p)))) {
        signs.push_back({{"e", f.e},
                         {"s", f.s},
                         {"sign_class", to_string(f.sign_class())},
                         {"direct", eps_global_direct(lambda, f)},
                         {"oracle", eps_global_oracle(lambda, f)},
                         {"structural", eps_global_structural(lambda, p, f)}});
      }
      print({{"lambda", lambda_text}, {"p", p}, {"value_core", quad_json(g.value_core)}, {"constant_sign", g.constant_sign}, {"signs", signs}});
    } else if (eps_local_cmd->parsed()) {
      const Partition lambda = Partition::parse(lambda_text);
      const LocalLabel label = local_label(lambda, p);
      json signs = json::array();
      for (const NavarroAut& f : automorphisms(aut, p, std::max(1, factorial_valuation(lambda.size(), p)))) {
        const std::optional<int> oracle = eps_local_oracle(label, f);
        signs.push_back({{"e", f.e},
                         {"s", f.s},
                         {"sign_class", to_string(f.sign_class())},
                         {"closed_form", eps_local(label, f)},
                         {"oracle", oracle ? json(*oracle) : json(nullptr)}});
      }
      print({{"lambda", lambda_text}, {"p", p}, {"label", describe(label)}, {"degree", local_degree(label).str()}, {"signs", signs}});
    } else if (verify_cmd->parsed()) {
      bool ok = true;
      for (const NavarroAut& f : automorphisms(aut, p, std::max(1, factorial_valuation(n, p)))) {
        const VerificationReport r = fixed_counts(n, p, f);
        print(report_json(r));
        ok = ok && r.ok();
      }
      return ok ? 0 : 1;
    } else if (scan_cmd->parsed()) {
      scan_opts.primes.clear();
      for (const std::string& item : split(primes_text, ',')) scan_opts.primes.push_back(std::stoi(item));
      bool ok = true;
      try {
        scan(scan_opts, [&](const VerificationReport& r) {
          print(report_json(r));
          std::cout.flush();
          ok = ok && r.ok();
        });
      } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
      }
      return ok ? 0 : 1;
    } else if (table_cmd->parsed()) {
      const PermGroup g = build_normalizer(n, p, even);
      const ExactTable t = character_table(g);
      json values = json::array();
      for (const auto& row : t.values) {
        json r = json::array();
        for (const CycloElt& v : row) r.push_back(v.to_string());
        values.push_back(r);
      }
      json fixed = json::object();
      for (SignClass c : kAllSignClasses) {
        const FixedCount fc = galois_fixed_count(t, NavarroAut::of_class(p, c, 4), p);
        fixed[to_string(c)] = {{"total", fc.total}, {"fixed", fc.fixed}};
      }
      print({{"n", n}, {"p", p}, {"even", even}, {"order", t.order}, {"conductor", t.conductor},
             {"class_sizes", t.class_sizes}, {"degrees", t.degrees}, {"values", values}, {"p_prime_fixed", fixed}});
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
