#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "momentlab/budget.hpp"
#include "momentlab/conditions/conditions.hpp"
#include "momentlab/errors.hpp"
#include "momentlab/laurent/laurent_poly.hpp"
#include "momentlab/numeric/monodromy.hpp"
#include "momentlab/perm/blocks.hpp"
#include "momentlab/perm/sigma.hpp"
#include "momentlab/solver/solver.hpp"
#include "momentlab/survey/catalog.hpp"
#include "momentlab/survey/scan.hpp"
#include "momentlab/topology/topology.hpp"

using namespace momentlab;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 2, kParse = 3, kBudget = 4, kNumeric = 5 };

bool nested(const json& v) {
  if (!v.is_structured() || v.empty()) return false;
  if (v.is_object()) return true;
  return std::any_of(v.begin(), v.end(), [](const json& x) { return x.is_structured(); });
}

// Renders JSON as indented "key: value" lines; flat arrays stay on one line.
void pretty(std::ostream& out, const json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (nested(v)) {
        out << pad << k << ":\n";
        pretty(out, v, indent + 2);
      } else {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (nested(v)) {
        out << pad << "-\n";
        pretty(out, v, indent + 2);
      } else {
        out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

std::vector<int> parse_int_list(const std::string& text, char sep = ',') {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("expected comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

Window parse_window(const std::string& text) {
  const auto v = parse_int_list(text);
  if (v.size() != 2 || v[0] > v[1]) throw CLI::ValidationError("--window expects lo,hi with lo <= hi");
  return {v[0], v[1]};
}

json basis_json(const SolutionSpace& s) {
  json out = json::array();
  for (const auto& q : s.basis()) out.push_back(to_string(q));
  return out;
}

json reduction_json(const PowerReduction& r) {
  return {{"l", r.l}, {"p", to_string(r.p)}, {"q", to_string(r.q)}, {"r", to_string(r.r)}};
}

PermGroup read_group(const std::string& path, const std::string& id, std::string& chosen) {
  const auto entries = load_catalog(path);
  if (entries.empty()) throw ParseError(path + ": catalog is empty");
  for (const auto& e : entries) {
    if (id.empty() || e.id == id) {
      chosen = e.id;
      return e.group();
    }
  }
  throw ParseError(path + ": no entry with id '" + id + "'");
}

std::size_t nontrivial_block_systems(const PermGroup& g, const Budget& budget) {
  std::size_t count = 0;
  for (const auto& b : blocks_containing_one(g, budget)) {
    if (b.size() > 1 && b.size() < g.degree()) ++count;
  }
  return count;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laurent moment problem: monodromy conditions, exact solution spaces, catalog scans"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty_out = false;
  std::string out_path;
  app.add_flag("--pretty", pretty_out, "human-readable output");
  app.add_option("--out", out_path, "write the result to this file");

  // check
  auto* check = app.add_subcommand("check", "conditions B* and C* for a group and sigma_infinity");
  std::string group_path, group_id, sigma_text;
  check->add_option("--group", group_path, "catalog file (.grp)")->required();
  check->add_option("--id", group_id, "catalog entry (default: the first)");
  check->add_option("--sigma", sigma_text, "sigma_infinity in cycle notation (default: every class)");

  // solve
  auto* solve = app.add_subcommand("solve", "exact solution space of the moment equations");
  std::string poly_path, window_text, zero_text;
  int v = 0;
  unsigned k_override = 0;
  solve->add_option("--poly", poly_path, "Laurent polynomial P (.lp)")->required();
  solve->add_option("--window", window_text, "exponent window lo,hi (default -m,n-1)");
  solve->add_option("--v", v, "orbit count v for the truncation bound");
  solve->add_option("--K", k_override, "explicit truncation bound");
  solve->add_option("--zero", zero_text, "exponents forced to zero, comma-separated");
  std::vector<std::string> outer_paths, inner_paths;
  solve->add_option("--outer", outer_paths, "outer polynomial of a known decomposition")->expected(0, -1);
  solve->add_option("--inner", inner_paths, "inner polynomial of a known decomposition")->expected(0, -1);

  // verify
  auto* verify = app.add_subcommand("verify", "check that Q has vanishing moments");
  std::string q_path;
  verify->add_option("--poly", poly_path, "Laurent polynomial P (.lp)")->required();
  verify->add_option("--q", q_path, "candidate Q (.lp)")->required();
  verify->add_option("--v", v, "orbit count v (default 6)");
  verify->add_option("--K", k_override, "explicit truncation bound");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "B-reduction chain P(z) = P~(z^l)");
  reduce->add_option("--poly", poly_path, "Laurent polynomial P (.lp)")->required();
  reduce->add_option("--q", q_path, "Q to reduce alongside P");

  // compose
  auto* compose = app.add_subcommand("compose", "composition solutions S(W)");
  std::string outer_path, inner_path, caps_text;
  compose->add_option("--outer", outer_path, "outer polynomial S (.lp)")->required();
  compose->add_option("--inner", inner_path, "inner Laurent polynomial W (.lp)")->required();
  compose->add_option("--window", window_text, "exponent window lo,hi (default -m,n-1 of S(W))");
  compose->add_option("--caps", caps_text, "largest power of W to use");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "scan a catalog for exceptional groups");
  std::string catalog_path, realizability = "on", format = "json";
  bool real_only = false, wide = false;
  unsigned jobs = 1;
  scan_cmd->add_option("--catalog", catalog_path, "catalog file (.grp)")->required();
  scan_cmd->add_flag("--real", real_only, "real case: n = m and the dihedral filter");
  scan_cmd->add_option("--realizability", realizability, "on, off or necessary")
      ->check(CLI::IsMember({"on", "off", "necessary"}));
  scan_cmd->add_flag("--wide-dihedral", wide, "cross-check the dihedral filter by element search");
  scan_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  scan_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  // genus
  auto* genus = app.add_subcommand("genus", "Riemann-Hurwitz genus of branch data");
  std::size_t degree = 0;
  std::string sigma_shape_text, shapes_text;
  genus->add_option("--degree", degree, "covering degree")->required();
  genus->add_option("--sigma", sigma_shape_text, "cycle lengths n,m of sigma_infinity")->required();
  genus->add_option("--shapes", shapes_text, "finite shapes, e.g. \"2,2,2,2;3,3,3\"")->required();

  // monodromy
  auto* mono = app.add_subcommand("monodromy", "numeric monodromy of P");
  bool json_flag = false;
  mono->add_option("--poly", poly_path, "Laurent polynomial P (.lp)")->required();
  mono->add_flag("--json", json_flag, "JSON output (the default unless --pretty)");
  mono->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const Budget budget = Budget::from_environment();
  json result;
  std::string text;  // non-JSON payload (csv)
  try {
    if (*check) {
      std::string id;
      const PermGroup g = read_group(group_path, group_id, id);
      std::vector<SigmaInfinity> sigmas;
      if (!sigma_text.empty()) {
        try {
          sigmas.push_back(SigmaInfinity::from_permutation(parse_permutation(sigma_text, g.degree())));
        } catch (const std::invalid_argument& e) {
          throw ParseError("--sigma: " + std::string(e.what()));
        }
      } else {
        sigmas = sigma_candidates(g, budget);
      }
      result = json::array();
      for (const auto& s : sigmas) result.push_back(to_json(check_conditions(g, s, id, budget)));
    } else if (*solve) {
      const LaurentPoly p = read_laurent_file(poly_path);
      if (!p.is_proper()) throw std::invalid_argument(poly_path + ": P must have n, m >= 1");
      const Window w = window_text.empty() ? Window{-p.m(), p.n() - 1} : parse_window(window_text);
      if (v <= 0) {
        v = static_cast<int>(w.size()) + 1;
        std::cerr << "warning: no --v given, using v = " << v << "\n";
      }
      SolveOptions opts;
      if (!zero_text.empty()) opts.zero_exponents = parse_int_list(zero_text);
      if (k_override) opts.K = k_override;
      if (outer_paths.size() != inner_paths.size()) throw CLI::ValidationError("--outer and --inner must pair up");
      std::vector<Decomposition> decomps;
      for (std::size_t i = 0; i < outer_paths.size(); ++i) {
        decomps.push_back({read_laurent_file(outer_paths[i]), read_laurent_file(inner_paths[i])});
        verify_decomposition(p, decomps.back());
      }
      const SolutionSpace s = solve_moment_space(p, w, v, opts);
      SolutionSpace explained = explained_space(p, w, decomps);
      if (!opts.zero_exponents.empty()) explained = explained.intersect(s);
      const auto exc = classify_exceptional(s, explained);
      result = {{"window", {w.lo, w.hi}},
                {"K", opts.K ? *opts.K : moment_bound(v, w)},
                {"dim", s.dim()},
                {"dim_without_constants", s.contains(LaurentPoly::monomial(QuadScalar(1), 0)) ? s.dim() - 1 : s.dim()},
                {"basis", basis_json(s)},
                {"exceptional_dim", exc}};
    } else if (*verify) {
      const LaurentPoly p = read_laurent_file(poly_path);
      const LaurentPoly q = read_laurent_file(q_path);
      const Verification r = k_override ? verify_solution(p, q, k_override) : verify_solution_v(p, q, v > 0 ? v : 6);
      result = {{"ok", r.ok}, {"K", r.K}, {"first_failure", r.first_failure ? json(*r.first_failure) : json(nullptr)}};
    } else if (*reduce) {
      const LaurentPoly p = read_laurent_file(poly_path);
      const LaurentPoly q = q_path.empty() ? LaurentPoly() : read_laurent_file(q_path);
      const ReductionChain chain = b_reduce(p, q);
      json steps = json::array();
      for (const auto& s : chain.steps) steps.push_back(reduction_json(s));
      result = {{"steps", steps}, {"p", to_string(chain.p)}, {"q", to_string(chain.q)}};
    } else if (*compose) {
      const LaurentPoly s = read_laurent_file(outer_path);
      const LaurentPoly w = read_laurent_file(inner_path);
      const LaurentPoly p = compose_outer(s, w);
      const Window win = window_text.empty() ? Window{-p.m(), p.n() - 1} : parse_window(window_text);
      std::vector<int> caps;
      if (!caps_text.empty()) caps = parse_int_list(caps_text);
      if (caps.size() > 1) throw CLI::ValidationError("--caps takes one value per decomposition");
      const SolutionSpace space = composition_space(p, {{s, w}}, win, caps);
      result = {{"poly", to_string(p)},
                {"window", {win.lo, win.hi}},
                {"cap", caps.empty() ? composition_cap(w, win) : caps.front()},
                {"dim", space.dim()},
                {"basis", basis_json(space)}};
    } else if (*scan_cmd) {
      ScanOptions opts;
      opts.real_only = real_only;
      opts.realizability = parse_realizability_mode(realizability);
      opts.wide_dihedral = wide;
      opts.jobs = jobs;
      opts.budget = budget;
      const ScanReport report = scan(load_catalog(catalog_path), opts);
      for (const auto& e : report.entries) {
        for (const auto& w : e.warnings) std::cerr << "warning: " << e.id << ": " << w << "\n";
        if (!e.error.empty()) std::cerr << "warning: " << e.id << ": " << e.error << "\n";
      }
      if (format == "csv") text = to_csv(report);
      else result = to_json(report);
    } else if (*genus) {
      const auto nm = parse_int_list(sigma_shape_text);
      if (nm.size() != 2) throw CLI::ValidationError("--sigma expects n,m");
      BranchData data;
      data.degree = degree;
      data.sigma_shape = pad_shape({nm[0], nm[1]}, degree);
      std::stringstream in(shapes_text);
      std::string item;
      while (std::getline(in, item, ';')) data.shapes.push_back(pad_shape(parse_int_list(item), degree));
      result = {{"genus", rh_genus(data)}, {"branch_data", to_json(data)}};
    } else if (*mono) {
      const LaurentPoly p = read_laurent_file(poly_path);
      MonodromyOptions opts;
      opts.jobs = jobs;
      const MonodromyResult r = monodromy(p, opts);
      json loops = json::array();
      for (std::size_t i = 0; i < r.loops.size(); ++i) {
        const auto& cv = r.critical.values[i];
        loops.push_back({{"critical_value", complex_json(cv.value)},
                         {"shape", cv.shape},
                         {"permutation", to_string(r.loops[i])}});
      }
      result = {{"base", complex_json(r.base)},
                {"loops", loops},
                {"sigma_infinity", to_string(r.sigma.perm)},
                {"sigma_shape", {r.sigma.n, r.sigma.m}},
                {"order", r.group.order().str()},
                {"block_systems", nontrivial_block_systems(r.group, budget)},
                {"steps", r.steps}};
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const NumericFailure& e) {
    std::cerr << "error: numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::ostringstream body;
  if (!text.empty()) body << text;
  else if (pretty_out) pretty(body, result);
  else body << result.dump() << '\n';

  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kParse;
    }
    out << body.str();
  }
  return kOk;
}
