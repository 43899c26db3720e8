#include <sstream>
#include <stdexcept>

#include "momentlab/survey/scan.hpp"

namespace momentlab {

namespace {

Realizability parse_realizability(const std::string& s) {
  if (s == "yes") return Realizability::yes;
  if (s == "no") return Realizability::no;
  if (s == "unknown") return Realizability::unknown;
  throw std::invalid_argument("bad realizability '" + s + "'");
}

nlohmann::json pair_json(const PairRecord& p) {
  nlohmann::json j = to_json(p.conditions);
  j["realizable"] = p.realizable ? nlohmann::json(to_string(*p.realizable)) : nlohmann::json(nullptr);
  j["dihedral"] = p.dihedral ? nlohmann::json(*p.dihedral) : nlohmann::json(nullptr);
  j["exception"] = p.exception;
  return j;
}

PairRecord pair_from_json(const nlohmann::json& j) {
  PairRecord p;
  p.conditions = condition_report_from_json(j);
  if (!j.at("realizable").is_null()) p.realizable = parse_realizability(j.at("realizable").get<std::string>());
  if (!j.at("dihedral").is_null()) p.dihedral = j.at("dihedral").get<bool>();
  p.exception = j.at("exception").get<bool>();
  return p;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

nlohmann::json to_json(const ScanReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : e.pairs) pairs.push_back(pair_json(p));
    entries.push_back({{"degree", e.degree},
                       {"id", e.id},
                       {"order", e.order},
                       {"exceptional", e.exceptional},
                       {"filtered", e.filtered},
                       {"error", e.error},
                       {"warnings", e.warnings},
                       {"pairs", pairs}});
  }
  nlohmann::json summary = nlohmann::json::array();
  for (const auto& s : report.summary) {
    summary.push_back({{"degree", s.degree},
                       {"groups", s.groups},
                       {"exceptional", s.exceptional},
                       {"undecided", s.undecided}});
  }
  return {{"real_only", report.real_only},
          {"realizability", to_string(report.realizability)},
          {"summary", summary},
          {"entries", entries}};
}

ScanReport scan_report_from_json(const nlohmann::json& j) {
  ScanReport r;
  r.real_only = j.at("real_only").get<bool>();
  r.realizability = parse_realizability_mode(j.at("realizability").get<std::string>());
  for (const auto& s : j.at("summary")) {
    r.summary.push_back({s.at("degree").get<std::size_t>(), s.at("groups").get<std::size_t>(),
                         s.at("exceptional").get<std::size_t>(), s.at("undecided").get<std::size_t>()});
  }
  for (const auto& je : j.at("entries")) {
    EntryRecord e;
    e.degree = je.at("degree").get<std::size_t>();
    e.id = je.at("id").get<std::string>();
    e.order = je.at("order").get<std::string>();
    e.exceptional = je.at("exceptional").get<bool>();
    e.filtered = je.at("filtered").get<std::size_t>();
    e.error = je.at("error").get<std::string>();
    e.warnings = je.at("warnings").get<std::vector<std::string>>();
    for (const auto& jp : je.at("pairs")) e.pairs.push_back(pair_from_json(jp));
    r.entries.push_back(std::move(e));
  }
  return r;
}

std::string to_csv(const ScanReport& report) {
  std::ostringstream out;
  out << "degree,id,order,sigma,n,m,b_star,c_star,realizable,dihedral,exception\n";
  for (const auto& e : report.entries) {
    if (e.pairs.empty()) {
      out << e.degree << ',' << csv_field(e.id) << ',' << e.order << ",,,,,,,,false\n";
      continue;
    }
    for (const auto& p : e.pairs) {
      const auto& c = p.conditions;
      out << e.degree << ',' << csv_field(e.id) << ',' << e.order << ',' << csv_field(to_string(c.sigma)) << ','
          << c.n << ',' << c.m << ',' << (c.b_star ? "true" : "false") << ','
          << (c.c_star ? "true" : "false") << ',' << (p.realizable ? to_string(*p.realizable) : "") << ','
          << (p.dihedral ? (*p.dihedral ? "true" : "false") : "") << ','
          << (p.exception ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

}  // namespace momentlab
