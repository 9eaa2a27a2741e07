#include "lscat/report.hpp"

#include <chrono>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lscat/canonical.hpp"
#include "lscat/clique.hpp"

namespace lscat {

namespace {

nlohmann::json bracket_json(const CategoryBracket& b) {
  nlohmann::json j;
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["lower_method"] = b.lower_method;
  j["upper_method"] = b.upper_method;
  j["exact"] = b.tight();
  return j;
}

std::string bracket_text(const CategoryBracket& b) {
  std::ostringstream os;
  if (b.tight())
    os << b.lower << " (exact; " << b.lower_method << " / " << b.upper_method << ")";
  else
    os << '[' << b.lower << ", " << b.upper << "] (" << b.lower_method << " / "
       << b.upper_method << ")";
  return os.str();
}

}  // namespace

std::string poincare_polynomial(const std::vector<int>& betti) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < betti.size(); ++k) {
    if (betti[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0)
      os << betti[k];
    else {
      if (betti[k] != 1) os << betti[k] << '*';
      os << 't';
      if (k > 1) os << '^' << k;
    }
  }
  if (first) os << '0';
  return os.str();
}

InvariantReport invariant_report(const SimpleGraph& g, const std::string& source,
                                 const ReportOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  InvariantReport rep;
  rep.source = source;
  rep.options = opt;
  rep.certificate = canonical_certificate(g);
  rep.order = g.order();
  rep.size = g.size();

  CliqueComplex cx(g);
  std::vector<int> fv = cx.f_vector();
  rep.f_vector.assign(fv.begin(), fv.end());
  rep.chi = cx.euler_characteristic();
  rep.betti = betti_numbers(cx);
  while (!rep.betti.empty() && rep.betti.back() == 0) rep.betti.pop_back();
  rep.poincare = poincare_polynomial(rep.betti);
  rep.contractible = is_contractible(g);

  CupOptions cup_opt;
  cup_opt.seed = opt.seed;
  rep.cup = cup_length(g, cup_opt);

  if (g.order() <= opt.dp_limit)
    rep.crit = crit_exact(g, opt.dp_limit);
  else
    rep.crit = crit_heuristic(g, opt.seed);

  TcatOptions tcat_opt;
  tcat_opt.dp_limit = opt.dp_limit;
  tcat_opt.covers = opt.covers;
  tcat_opt.ambient = opt.ambient;
  rep.tcat = tcat_bracket(g, tcat_opt);

  ClassSearchOptions cls;
  cls.tcat = tcat_opt;
  cls.max_extra_vertices = opt.class_budget.max_extra_vertices;
  cls.max_states = opt.class_budget.max_states;
  rep.cat = cat_bracket(g, cls);
  rep.cri = cri_bracket(g, cls);

  auto t1 = std::chrono::steady_clock::now();
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

std::string report_to_json(const InvariantReport& rep) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["version"] = kVersion;
  j["source"] = rep.source;
  j["certificate"] = rep.certificate;
  j["order"] = rep.order;
  j["size"] = rep.size;
  j["f_vector"] = rep.f_vector;
  j["chi"] = rep.chi;
  j["betti"] = rep.betti;
  j["poincare"] = rep.poincare;
  j["contractible"] = rep.contractible;
  {
    nlohmann::json jc;
    jc["lower"] = rep.cup.lower;
    jc["upper"] = rep.cup.upper;
    jc["lower_method"] = rep.cup.lower_method;
    jc["upper_method"] = rep.cup.upper_method;
    jc["exact"] = rep.cup.tight();
    j["cup"] = std::move(jc);
  }
  {
    nlohmann::json jc;
    jc["value"] = rep.crit.value;
    jc["exact"] = rep.crit.exact;
    jc["method"] = rep.crit.method;
    if (!rep.crit.witness.empty()) jc["ordering"] = rep.crit.witness;
    j["crit"] = std::move(jc);
  }
  j["tcat"] = bracket_json(rep.tcat);
  j["cat"] = bracket_json(rep.cat);
  j["cri"] = bracket_json(rep.cri);
  {
    nlohmann::json jb;
    jb["seed"] = rep.options.seed;
    jb["dp_limit"] = rep.options.dp_limit;
    jb["ambient_states"] = rep.options.ambient.max_states;
    jb["class_extra_vertices"] = rep.options.class_budget.max_extra_vertices;
    jb["class_states"] = rep.options.class_budget.max_states;
    j["budgets"] = std::move(jb);
  }
  if (rep.options.timings) j["elapsed_ms"] = rep.elapsed_ms;
  return j.dump(2) + "\n";
}

std::string report_to_text(const InvariantReport& rep) {
  std::ostringstream os;
  os << "graph        " << rep.source << "  (" << rep.order << " vertices, " << rep.size
     << " edges)\n";
  os << "f-vector     (";
  for (std::size_t i = 0; i < rep.f_vector.size(); ++i)
    os << (i ? ", " : "") << rep.f_vector[i];
  os << ")\n";
  os << "chi          " << rep.chi << "\n";
  os << "betti        (";
  for (std::size_t i = 0; i < rep.betti.size(); ++i) os << (i ? ", " : "") << rep.betti[i];
  os << ")\n";
  os << "poincare     " << rep.poincare << "\n";
  os << "contractible " << (rep.contractible ? "yes" : "no") << "\n";
  if (rep.cup.tight())
    os << "cup          " << rep.cup.lower << " (exact; " << rep.cup.lower_method << " / "
       << rep.cup.upper_method << ")\n";
  else
    os << "cup          [" << rep.cup.lower << ", " << rep.cup.upper << "] ("
       << rep.cup.lower_method << " / " << rep.cup.upper_method << ")\n";
  os << "crit         " << rep.crit.value << (rep.crit.exact ? " (exact; " : " (upper bound; ")
     << rep.crit.method << ")\n";
  os << "tcat         " << bracket_text(rep.tcat) << "\n";
  os << "cat          " << bracket_text(rep.cat) << "\n";
  os << "cri          " << bracket_text(rep.cri) << "\n";
  if (rep.options.timings) os << "elapsed      " << rep.elapsed_ms << " ms\n";
  return os.str();
}

}  // namespace lscat
