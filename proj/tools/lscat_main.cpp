#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lscat/canonical.hpp"
#include "lscat/category.hpp"
#include "lscat/census.hpp"
#include "lscat/clique.hpp"
#include "lscat/cohomology.hpp"
#include "lscat/curvature.hpp"
#include "lscat/fixtures.hpp"
#include "lscat/graph.hpp"
#include "lscat/homotopy.hpp"
#include "lscat/io.hpp"
#include "lscat/morse.hpp"
#include "lscat/report.hpp"

namespace {

using nlohmann::json;
using namespace lscat;

// Exit codes: 0 success / verified, 1 verified negative, 2 unknown within
// budget, 3 input error.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUnknown = 2;
constexpr int kInputError = 3;

struct Globals {
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::size_t budget_states = 0;  // 0 = per-command default
  int budget_extra = -1;          // -1 = per-command default
  int dp_limit = 22;
  bool json_out = false;
  bool timings = false;
};

HomotopyBudget homotopy_budget(const Globals& g, int def_extra, std::size_t def_states) {
  HomotopyBudget b;
  b.max_extra_vertices = g.budget_extra >= 0 ? g.budget_extra : def_extra;
  b.max_states = g.budget_states != 0 ? g.budget_states : def_states;
  return b;
}

AmbientBudget ambient_budget(const Globals& g, std::size_t def_states = 200000) {
  return AmbientBudget{g.budget_states != 0 ? g.budget_states : def_states};
}

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return slurp(in);
}

struct Input {
  SimpleGraph g = SimpleGraph(0, {});
  std::string source;
  std::optional<Fixture> fix;
};

SimpleGraph parse_by_extension(const std::string& path, const std::string& text) {
  if (path.ends_with(".g6") || path.ends_with(".graph6")) return parse_graph6(text);
  if (path.ends_with(".json")) return parse_graph_json(text);
  if (path.ends_with(".edges") || path.ends_with(".txt")) return parse_edge_list(text);
  return parse_any(text);
}

Input load_graph(const std::string& spec) {
  Input in;
  in.source = spec;
  if (spec == "-") {
    in.g = parse_edge_list(slurp(std::cin));
    in.source = "stdin";
    return in;
  }
  if (spec.starts_with("fixture:")) {
    in.fix = fixture(spec.substr(8));
    in.g = in.fix->graph;
    return in;
  }
  in.g = parse_by_extension(spec, read_file(spec));
  return in;
}

// Orderings: "random:SEED", "fixture:NAME" (named ordering of a fixture
// input), or a JSON file — either an array of vertex ids (increasing value)
// or an object mapping vertex id to function value.
std::vector<int> resolve_ordering(const std::string& spec, const Input& in) {
  if (spec.starts_with("random:")) return random_ordering(in.g, std::stoull(spec.substr(7)));
  if (spec.starts_with("fixture:")) {
    if (!in.fix) throw ParseError("fixture ordering needs a fixture graph input");
    auto it = in.fix->orderings.find(spec.substr(8));
    if (it == in.fix->orderings.end())
      throw ParseError("fixture '" + in.fix->name + "' has no ordering '" + spec.substr(8) + "'");
    return it->second;
  }
  json j = json::parse(read_file(spec), nullptr, true, true);
  if (j.is_array()) return j.get<std::vector<int>>();
  if (j.is_object()) {
    std::vector<std::pair<double, int>> ranked;
    for (auto& [key, value] : j.items()) ranked.emplace_back(value.get<double>(), std::stoi(key));
    std::sort(ranked.begin(), ranked.end());
    std::vector<int> out;
    out.reserve(ranked.size());
    for (auto& [rank, v] : ranked) out.push_back(v);
    return out;
  }
  throw ParseError("ordering file must be a JSON array or object");
}

Cover resolve_cover(const std::string& spec, const Input& in) {
  if (spec.starts_with("fixture:")) {
    if (!in.fix) throw ParseError("fixture cover needs a fixture graph input");
    auto it = in.fix->covers.find(spec.substr(8));
    if (it == in.fix->covers.end())
      throw ParseError("fixture '" + in.fix->name + "' has no cover '" + spec.substr(8) + "'");
    return Cover{it->second};
  }
  return cover_from_json(read_file(spec));
}

std::vector<Cover> fixture_covers(const Input& in) {
  std::vector<Cover> out;
  if (in.fix)
    for (const auto& [name, members] : in.fix->covers) out.push_back(Cover{members});
  return out;
}

void emit_error(bool json_out, const std::string& msg) {
  if (json_out) {
    json j;
    j["error"] = msg;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "error: " << msg << "\n";
  }
}

int run_guarded(bool json_out, const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    emit_error(json_out, e.what());
    return kInputError;
  }
}

json bracket_json(const CategoryBracket& b) {
  json j;
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
    os << b.lower << " (exact)";
  else
    os << '[' << b.lower << ", " << b.upper << ']';
  return os.str();
}

ReportOptions report_options(const Globals& g, const Input& in) {
  ReportOptions opt;
  opt.seed = g.seed;
  opt.dp_limit = g.dp_limit;
  opt.ambient = ambient_budget(g);
  opt.class_budget = homotopy_budget(g, 1, 300);
  opt.covers = fixture_covers(in);
  opt.timings = g.timings;
  return opt;
}

int cmd_invariants(const Globals& g, const std::string& graph_spec) {
  Input in = load_graph(graph_spec);
  InvariantReport rep = invariant_report(in.g, in.source, report_options(g, in));
  std::cout << (g.json_out ? report_to_json(rep) : report_to_text(rep));
  return kOk;
}

int cmd_contractible(const Globals& g, const std::string& graph_spec) {
  Input in = load_graph(graph_spec);
  Reduction red = reduce(in.g);
  bool yes = red.core.order() == 1;
  if (!yes) yes = is_contractible(in.g);  // the greedy core can miss collapses
  if (g.json_out) {
    json j;
    j["contractible"] = yes;
    j["moves"] = red.cert.moves.size();
    j["core_order"] = red.core.order();
    j["core_size"] = red.core.size();
    if (!yes) {
      std::vector<int> b = betti_numbers(in.g);
      while (!b.empty() && b.back() == 0) b.pop_back();
      j["betti"] = b;
      j["chi"] = euler_characteristic(in.g);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "contractible: " << (yes ? "yes" : "no") << "\n";
    std::cout << "reduction: " << red.cert.moves.size() << " removals to a core with "
              << red.core.order() << " vertices, " << red.core.size() << " edges\n";
    if (!yes) {
      std::vector<int> b = betti_numbers(in.g);
      while (!b.empty() && b.back() == 0) b.pop_back();
      std::cout << "refutation: betti (";
      for (std::size_t i = 0; i < b.size(); ++i) std::cout << (i ? ", " : "") << b[i];
      std::cout << "), chi " << euler_characteristic(in.g) << "\n";
    }
  }
  return yes ? kOk : kNegative;
}

int cmd_reduce(const Globals& g, const std::string& graph_spec) {
  Input in = load_graph(graph_spec);
  Reduction red = reduce(in.g);
  if (g.json_out) {
    std::cout << certificate_to_json(in.g, red.cert, red.core);
  } else {
    std::cout << "core: " << red.core.order() << " vertices, " << red.core.size() << " edges ("
              << red.cert.moves.size() << " removals)\n";
    std::cout << serialize_edge_list(red.core);
  }
  return kOk;
}

int cmd_crit(const Globals& g, const std::string& graph_spec, bool heuristic) {
  Input in = load_graph(graph_spec);
  CritResult res;
  if (heuristic) {
    res = crit_heuristic(in.g, g.seed);
  } else if (in.g.order() > g.dp_limit) {
    throw GraphError("order " + std::to_string(in.g.order()) + " exceeds the DP limit " +
                     std::to_string(g.dp_limit) +
                     "; rerun with --heuristic for a labeled upper bound or raise --dp-limit");
  } else {
    res = crit_exact(in.g, g.dp_limit);
  }
  if (g.json_out) {
    json j;
    j["value"] = res.value;
    j["exact"] = res.exact;
    j["method"] = res.method;
    j["ordering"] = res.witness;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "crit " << (res.exact ? "= " : "<= ") << res.value << " (" << res.method
              << ")\n";
    std::cout << "ordering:";
    for (int v : res.witness) std::cout << ' ' << v;
    std::cout << "\n";
  }
  return kOk;
}

int cmd_cup(const Globals& g, const std::string& graph_spec) {
  Input in = load_graph(graph_spec);
  CupOptions opt;
  opt.seed = g.seed;
  CupResult res = cup_length(in.g, opt);
  if (g.json_out) {
    json j;
    j["lower"] = res.lower;
    j["upper"] = res.upper;
    j["lower_method"] = res.lower_method;
    j["upper_method"] = res.upper_method;
    j["exact"] = res.tight();
    if (res.certificate) {
      CliqueComplex cx(in.g);
      json f = json::array();
      for (const Form& fm : res.certificate->factors)
        f.push_back(json::parse(form_to_json(cx, fm)));
      j["certificate"]["factors"] = std::move(f);
      j["certificate"]["product"] = json::parse(form_to_json(cx, res.certificate->product));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    if (res.tight())
      std::cout << "cup = " << res.lower << " (" << res.lower_method << " / "
                << res.upper_method << ")\n";
    else
      std::cout << "cup in [" << res.lower << ", " << res.upper << "] (" << res.lower_method
                << " / " << res.upper_method << ")\n";
    if (res.certificate) {
      std::cout << "witness degrees:";
      for (const Form& fm : res.certificate->factors) std::cout << ' ' << fm.degree;
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_category(const Globals& g, const std::string& graph_spec) {
  Input in = load_graph(graph_spec);
  TcatOptions topt;
  topt.dp_limit = g.dp_limit;
  topt.covers = fixture_covers(in);
  topt.ambient = ambient_budget(g);
  CategoryBracket tcat = tcat_bracket(in.g, topt);
  ClassSearchOptions copt;
  copt.tcat = topt;
  HomotopyBudget cb = homotopy_budget(g, 1, 300);
  copt.max_extra_vertices = cb.max_extra_vertices;
  copt.max_states = cb.max_states;
  CategoryBracket cat = cat_bracket(in.g, copt);
  CategoryBracket cri = cri_bracket(in.g, copt);
  if (g.json_out) {
    json j;
    j["tcat"] = bracket_json(tcat);
    j["cat"] = bracket_json(cat);
    j["cri"] = bracket_json(cri);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "tcat " << bracket_text(tcat) << "  [" << tcat.lower_method << " / "
              << tcat.upper_method << "]\n";
    std::cout << "cat  " << bracket_text(cat) << "  [" << cat.lower_method << " / "
              << cat.upper_method << "]\n";
    std::cout << "cri  " << bracket_text(cri) << "  [" << cri.lower_method << " / "
              << cri.upper_method << "]\n";
  }
  return kOk;
}

const char* tag_name(CurvatureTag t) {
  switch (t) {
    case CurvatureTag::Exact: return "exact";
    case CurvatureTag::Bracket: return "bracket";
    case CurvatureTag::MonteCarlo: return "monte-carlo";
  }
  return "?";
}

int cmd_curvature(const Globals& g, const std::string& graph_spec, const std::string& which,
                  const std::string& method) {
  Input in = load_graph(graph_spec);
  const int n = in.g.order();

  bool force_exact = method == "exact";
  std::size_t mc_n = 0;
  if (method.starts_with("mc:")) mc_n = std::stoull(method.substr(3));
  else if (method != "auto" && !force_exact)
    throw ParseError("--method must be exact, mc:N or auto");

  CurvatureReport rep;
  if (which == "euler") {
    int cap = force_exact ? 62 : (mc_n ? -1 : 16);
    rep = euler_curvature(in.g, cap, mc_n ? mc_n : 20000, g.seed);
  } else if (which.starts_with("betti:")) {
    int k = std::stoi(which.substr(6));
    int cap = force_exact ? n : (mc_n ? 0 : 8);
    rep = betti_curvature(in.g, k, cap, mc_n ? mc_n : 2000, g.seed);
    rep.kind = "betti:" + std::to_string(k);
  } else if (which == "category") {
    int cap = force_exact ? n : (mc_n ? 0 : 12);
    rep = category_curvature(in.g, default_category_evaluator(), cap, mc_n ? mc_n : 500, g.seed);
  } else {
    throw ParseError("--which must be euler, betti:K or category");
  }

  if (g.json_out) {
    json j;
    j["kind"] = rep.kind;
    j["tag"] = tag_name(rep.tag);
    if (rep.samples) j["samples"] = rep.samples;
    j["entries"] = json::array();
    for (const VertexCurvature& e : rep.entries) {
      json je;
      je["vertex"] = e.vertex;
      je["lower"] = rational_str(e.lower);
      je["upper"] = rational_str(e.upper);
      j["entries"].push_back(std::move(je));
    }
    j["total_lower"] = rational_str(rep.total_lower);
    j["total_upper"] = rational_str(rep.total_upper);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rep.kind << " curvature (" << tag_name(rep.tag);
    if (rep.samples) std::cout << ", " << rep.samples << " samples";
    std::cout << ")\n";
    for (const VertexCurvature& e : rep.entries) {
      std::cout << "  " << e.vertex << ": " << rational_str(e.lower);
      if (e.lower != e.upper) std::cout << " .. " << rational_str(e.upper);
      std::cout << "\n";
    }
    std::cout << "total: " << rational_str(rep.total_lower);
    if (rep.total_lower != rep.total_upper) std::cout << " .. " << rational_str(rep.total_upper);
    std::cout << "\n";
  }
  return kOk;
}

int cmd_ph_check(const Globals& g, const std::string& graph_spec, const std::string& ordering) {
  Input in = load_graph(graph_spec);
  std::vector<int> ord = resolve_ordering(ordering, in);
  IndexProfile prof = index_profile(in.g, ord);
  int sum = 0;
  for (const VertexIndexEntry& e : prof.entries) sum += e.index;
  bool ok = prof.prefix_sums_match && sum == prof.chi;
  if (g.json_out) {
    json j;
    j["ok"] = ok;
    j["chi"] = prof.chi;
    j["index_sum"] = sum;
    j["entries"] = json::array();
    for (const VertexIndexEntry& e : prof.entries) {
      json je;
      je["vertex"] = e.vertex;
      je["index"] = e.index;
      je["critical"] = e.critical;
      je["sublevel_chi"] = e.sublevel_chi;
      j["entries"].push_back(std::move(je));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "vertex  index  critical  sublevel-chi\n";
    for (const VertexIndexEntry& e : prof.entries)
      std::cout << "  " << e.vertex << "\t" << e.index << "\t" << (e.critical ? "yes" : "no")
                << "\t" << e.sublevel_chi << "\n";
    std::cout << "sum of indices " << sum << ", chi " << prof.chi
              << (ok ? " (match)" : " (MISMATCH)") << "\n";
  }
  return ok ? kOk : kNegative;
}

int cmd_morse_check(const Globals& g, const std::string& graph_spec, const std::string& ordering) {
  Input in = load_graph(graph_spec);
  std::vector<int> ord = resolve_ordering(ordering, in);
  MorseReport rep = morse_check(in.g, ord);
  json j;
  j["morse"] = rep.morse;
  j["message"] = rep.message;
  j["c"] = rep.c;
  if (rep.morse) {
    MorseInequalityReport ineq = morse_inequalities(in.g, ord);
    j["inequalities"]["ok"] = ineq.ok;
    j["inequalities"]["b"] = ineq.b;
    j["inequalities"]["slack"] = ineq.slack;
    j["inequalities"]["euler_equal"] = ineq.euler_equal;
  }
  if (g.json_out) {
    j["steps"] = json::array();
    for (const MorseStep& s : rep.steps) {
      json js;
      js["vertex"] = s.entry.vertex;
      js["index"] = s.entry.index;
      js["critical"] = s.entry.critical;
      js["betti_before"] = s.betti_before;
      js["betti_after"] = s.betti_after;
      if (s.entry.critical) js["morse_index"] = s.morse_index;
      j["steps"].push_back(std::move(js));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "morse: " << (rep.morse ? "yes" : "no");
    if (!rep.message.empty()) std::cout << "  (" << rep.message << ")";
    std::cout << "\n";
    if (rep.morse) {
      std::cout << "c = (";
      for (std::size_t i = 0; i < rep.c.size(); ++i) std::cout << (i ? ", " : "") << rep.c[i];
      std::cout << ")\n";
      std::cout << "inequalities: " << (j["inequalities"]["ok"].get<bool>() ? "hold" : "FAIL")
                << "\n";
    }
  }
  return rep.morse ? kOk : kNegative;
}

int cmd_cover_verify(const Globals& g, const std::string& graph_spec, const std::string& cover,
                     const std::string& mode_str) {
  Input in = load_graph(graph_spec);
  Cover c = resolve_cover(cover, in);
  CoverMode mode;
  if (mode_str == "in-itself") mode = CoverMode::InItself;
  else if (mode_str == "in-G") mode = CoverMode::InG;
  else throw ParseError("--mode must be in-itself or in-G");
  CoverVerification v = verify_cover(in.g, c, mode, ambient_budget(g));
  if (g.json_out) {
    json j;
    j["ok"] = v.ok;
    j["unknown"] = v.unknown;
    j["coverage_ok"] = v.coverage_ok;
    j["uncovered_vertices"] = v.uncovered_vertices;
    json ue = json::array();
    for (auto& [a, b] : v.uncovered_edges) ue.push_back(json::array({a, b}));
    j["uncovered_edges"] = std::move(ue);
    j["members"] = json::array();
    for (const MemberVerdict& m : v.members) {
      json jm;
      switch (m.status) {
        case MemberStatus::ContractibleItself: jm["status"] = "contractible"; break;
        case MemberStatus::ContractibleInG: jm["status"] = "contractible-in-G"; break;
        case MemberStatus::Failed: jm["status"] = "failed"; break;
        case MemberStatus::Unknown: jm["status"] = "unknown"; break;
      }
      jm["message"] = m.message;
      j["members"].push_back(std::move(jm));
    }
    if (v.bound) j["bound"] = *v.bound;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "coverage: " << (v.coverage_ok ? "complete" : "INCOMPLETE") << "\n";
    for (std::size_t i = 0; i < v.members.size(); ++i) {
      const MemberVerdict& m = v.members[i];
      const char* s = m.status == MemberStatus::ContractibleItself ? "contractible"
                      : m.status == MemberStatus::ContractibleInG  ? "contractible in G"
                      : m.status == MemberStatus::Failed           ? "FAILED"
                                                                   : "unknown";
      std::cout << "member " << i + 1 << ": " << s;
      if (!m.message.empty()) std::cout << " (" << m.message << ")";
      std::cout << "\n";
    }
    if (v.ok)
      std::cout << "verified: category upper bound " << *v.bound << "\n";
    else
      std::cout << (v.unknown ? "inconclusive (budget)" : "not verified") << "\n";
  }
  return v.ok ? kOk : (v.unknown ? kUnknown : kNegative);
}

int cmd_homotopic(const Globals& g, const std::string& a_spec, const std::string& b_spec) {
  Input a = load_graph(a_spec);
  Input b = load_graph(b_spec);
  HomotopyResult res = homotopic_bounded(a.g, b.g, homotopy_budget(g, 2, 1000000));
  if (g.json_out) {
    json j;
    switch (res.answer) {
      case HomotopyAnswer::Equivalent: j["answer"] = "equivalent"; break;
      case HomotopyAnswer::Distinct: j["answer"] = "distinct"; break;
      case HomotopyAnswer::Unknown: j["answer"] = "unknown"; break;
    }
    j["detail"] = res.detail;
    if (res.certificate) j["certificate"] = json::parse(certificate_to_json(a.g, *res.certificate, b.g));
    std::cout << j.dump(2) << "\n";
  } else {
    const char* s = res.answer == HomotopyAnswer::Equivalent ? "equivalent"
                    : res.answer == HomotopyAnswer::Distinct ? "distinct"
                                                             : "unknown";
    std::cout << "homotopic: " << s << "\n";
    if (!res.detail.empty()) std::cout << res.detail << "\n";
    if (res.certificate) std::cout << "certificate: " << res.certificate->moves.size() << " moves\n";
  }
  switch (res.answer) {
    case HomotopyAnswer::Equivalent: return kOk;
    case HomotopyAnswer::Distinct: return kNegative;
    case HomotopyAnswer::Unknown: return kUnknown;
  }
  return kUnknown;
}

int cmd_certificate_verify(const Globals& g, const std::string& path) {
  CertificateFile file = certificate_from_json(read_file(path));
  VerifyOutcome out = verify_certificate(file.start, file.cert, file.track);
  bool ok = out.ok;
  std::string message = out.message;
  if (ok && file.end) {
    if (canonical_certificate(out.final_graph) != canonical_certificate(*file.end)) {
      ok = false;
      message = "final graph is not isomorphic to the declared end graph";
    }
  }
  if (g.json_out) {
    json j;
    j["ok"] = ok;
    j["message"] = message;
    j["final_order"] = out.final_graph.order();
    j["final_size"] = out.final_graph.size();
    if (out.track) j["track_image"] = *out.track;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (ok ? "certificate valid" : "certificate INVALID") << "\n";
    if (!message.empty()) std::cout << message << "\n";
  }
  return ok ? kOk : kNegative;
}

int cmd_census(const Globals& g, int order, const std::string& out_path) {
  CensusOptions opt;
  opt.order = order;
  opt.link_budget = homotopy_budget(g, 3, 400000);
  opt.threads = g.threads;
  CensusReport rep = census(opt);
  std::string js = census_to_json(rep);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + out_path + "'");
    out << js;
  }
  if (g.json_out) {
    std::cout << js;
  } else {
    std::cout << "order " << rep.order << ": " << rep.iso_count << " isomorphism classes\n";
    if (rep.fully_resolved)
      std::cout << "homotopy classes: " << rep.homotopy_count << " (exact)\n";
    else
      std::cout << "homotopy classes: [" << rep.homotopy_count << ", " << rep.homotopy_count_max
                << "] (some cells unresolved)\n";
    for (const CensusCell& c : rep.cells) {
      std::cout << "  chi=" << c.chi << " betti=(";
      for (std::size_t i = 0; i < c.betti.size(); ++i) std::cout << (i ? "," : "") << c.betti[i];
      std::cout << ") cup=" << c.cup << ": " << c.class_ids.size()
                << (c.class_ids.size() == 1 ? " class" : " classes")
                << (c.resolved ? "" : " (UNRESOLVED)") << "\n";
    }
  }
  return rep.fully_resolved ? kOk : kUnknown;
}

int cmd_fixtures(const Globals& g, const std::vector<std::string>& args) {
  if (args.empty() || args[0] == "list") {
    if (g.json_out) {
      json j = json::array();
      for (const std::string& name : fixture_names()) {
        Fixture f = fixture(name);
        json jf;
        jf["name"] = f.name;
        jf["description"] = f.description;
        jf["order"] = f.graph.order();
        jf["size"] = f.graph.size();
        j.push_back(std::move(jf));
      }
      std::cout << j.dump(2) << "\n";
    } else {
      for (const std::string& name : fixture_names()) {
        Fixture f = fixture(name);
        std::cout << name << " — " << f.description << " (" << f.graph.order() << " vertices, "
                  << f.graph.size() << " edges)\n";
      }
    }
    return kOk;
  }
  if (args[0] == "emit") {
    if (args.size() < 2) throw ParseError("fixtures emit NAME");
    Fixture f = fixture(args[1]);
    if (g.json_out) {
      json j;
      j["name"] = f.name;
      j["description"] = f.description;
      j["graph"] = json::parse(serialize_graph_json(f.graph));
      json covers = json::object();
      for (const auto& [name, members] : f.covers)
        covers[name] = json::parse(cover_to_json(Cover{members}));
      j["covers"] = std::move(covers);
      json ords = json::object();
      for (const auto& [name, ord] : f.orderings) ords[name] = ord;
      j["orderings"] = std::move(ords);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << serialize_edge_list(f.graph);
    }
    return kOk;
  }
  throw ParseError("fixtures accepts 'list' or 'emit NAME'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lscat — homotopy, Morse and category invariants of finite simple graphs"};
  app.set_version_flag("--version", std::string("lscat ") + kVersion);
  app.require_subcommand(1);

  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized searches and samplers");
  app.add_option("--threads", g.threads, "Worker threads (0 = hardware concurrency)");
  app.add_option("--budget-states", g.budget_states, "State cap for move searches (0 = default)");
  app.add_option("--budget-extra-vertices", g.budget_extra,
                 "Extra vertices allowed in move searches (-1 = default)");
  app.add_option("--dp-limit", g.dp_limit, "Largest order accepted by exact subset DP");
  app.add_flag("--json", g.json_out, "Machine-readable JSON output");
  app.add_flag("--timings", g.timings, "Include wall-clock timings (breaks byte-stability)");

  int rc = kOk;

  std::string inv_graph;
  auto* inv = app.add_subcommand("invariants", "Full invariant report");
  inv->add_option("graph", inv_graph, "fixture:NAME, file, or - for stdin")->required();
  inv->callback([&] { rc = run_guarded(g.json_out, [&] { return cmd_invariants(g, inv_graph); }); });

  std::string con_graph;
  auto* con = app.add_subcommand("contractible", "Decide contractibility");
  con->add_option("graph", con_graph, "graph input")->required();
  con->callback([&] { rc = run_guarded(g.json_out, [&] { return cmd_contractible(g, con_graph); }); });

  std::string red_graph;
  auto* red = app.add_subcommand("reduce", "Greedy reduction to a core");
  red->add_option("graph", red_graph, "graph input")->required();
  red->callback([&] { rc = run_guarded(g.json_out, [&] { return cmd_reduce(g, red_graph); }); });

  std::string crit_graph;
  bool crit_heur = false;
  auto* crt = app.add_subcommand("crit", "Minimal number of critical points");
  crt->add_option("graph", crit_graph, "graph input")->required();
  crt->add_flag("--heuristic", crit_heur, "Random-restart greedy upper bound");
  crt->callback([&] { rc = run_guarded(g.json_out, [&] { return cmd_crit(g, crit_graph, crit_heur); }); });

  std::string cup_graph;
  auto* cup = app.add_subcommand("cup", "Cup length with certificate");
  cup->add_option("graph", cup_graph, "graph input")->required();
  cup->callback([&] { rc = run_guarded(g.json_out, [&] { return cmd_cup(g, cup_graph); }); });

  std::string cat_graph;
  auto* cat = app.add_subcommand("category", "tcat / cat / cri brackets");
  cat->add_option("graph", cat_graph, "graph input")->required();
  cat->callback([&] { rc = run_guarded(g.json_out, [&] { return cmd_category(g, cat_graph); }); });

  std::string cur_graph, cur_which = "euler", cur_method = "auto";
  auto* cur = app.add_subcommand("curvature", "Index-expectation curvature");
  cur->add_option("graph", cur_graph, "graph input")->required();
  cur->add_option("--which", cur_which, "euler | betti:K | category");
  cur->add_option("--method", cur_method, "auto | exact | mc:N");
  cur->callback([&] {
    rc = run_guarded(g.json_out, [&] { return cmd_curvature(g, cur_graph, cur_which, cur_method); });
  });

  std::string ph_graph, ph_ord = "random:0";
  auto* ph = app.add_subcommand("ph-check", "Poincare-Hopf index profile");
  ph->add_option("graph", ph_graph, "graph input")->required();
  ph->add_option("--ordering", ph_ord, "file.json | random:SEED | fixture:NAME");
  ph->callback([&] { rc = run_guarded(g.json_out, [&] { return cmd_ph_check(g, ph_graph, ph_ord); }); });

  std::string mc_graph, mc_ord = "random:0";
  auto* mc = app.add_subcommand("morse-check", "Morse discipline of an ordering");
  mc->add_option("graph", mc_graph, "graph input")->required();
  mc->add_option("--ordering", mc_ord, "file.json | random:SEED | fixture:NAME");
  mc->callback([&] { rc = run_guarded(g.json_out, [&] { return cmd_morse_check(g, mc_graph, mc_ord); }); });

  std::string cv_graph, cv_cover, cv_mode = "in-itself";
  auto* cv = app.add_subcommand("cover-verify", "Verify a candidate category cover");
  cv->add_option("graph", cv_graph, "graph input")->required();
  cv->add_option("--cover", cv_cover, "cover JSON file or fixture:NAME")->required();
  cv->add_option("--mode", cv_mode, "in-itself | in-G");
  cv->callback([&] {
    rc = run_guarded(g.json_out, [&] { return cmd_cover_verify(g, cv_graph, cv_cover, cv_mode); });
  });

  std::string ho_a, ho_b;
  auto* ho = app.add_subcommand("homotopic", "Bounded search for a move equivalence");
  ho->add_option("graph1", ho_a, "graph input")->required();
  ho->add_option("graph2", ho_b, "graph input")->required();
  ho->callback([&] { rc = run_guarded(g.json_out, [&] { return cmd_homotopic(g, ho_a, ho_b); }); });

  std::string ver_file;
  auto* ver = app.add_subcommand("certificate-verify", "Replay a move certificate");
  ver->add_option("file", ver_file, "certificate JSON")->required();
  ver->callback([&] { rc = run_guarded(g.json_out, [&] { return cmd_certificate_verify(g, ver_file); }); });

  int cen_order = 4;
  std::string cen_out;
  auto* cen = app.add_subcommand("census", "Homotopy census of connected graphs");
  cen->add_option("--order", cen_order, "number of vertices (1..8)")->required();
  cen->add_option("--out", cen_out, "write the JSON report to a file");
  cen->callback([&] { rc = run_guarded(g.json_out, [&] { return cmd_census(g, cen_order, cen_out); }); });

  std::vector<std::string> fx_args;
  auto* fx = app.add_subcommand("fixtures", "List or emit built-in graphs");
  fx->add_option("args", fx_args, "list | emit NAME");
  fx->callback([&] { rc = run_guarded(g.json_out, [&] { return cmd_fixtures(g, fx_args); }); });

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  return rc;
}
