#pragma once

// Command dispatch for the `singcontent` tool. Kept in a header so the test
// suite can drive it in-process and inspect exit codes and output.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "singcontent/singcontent.hpp"

namespace singcontent::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

struct Options {
  bool json = false;
  std::size_t terms = 12;
  std::size_t depth = 3;
  std::size_t max_nodes = 1000;
  std::string out;
  std::string slot = "0";
  std::string type;
  std::string file;
  std::string h;
};

namespace detail {

inline FanoPolygon load_polygon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return polygon_from_json(j);
}

inline std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
  return s;
}

template <class Range, class F>
std::vector<std::string> map_strings(const Range& r, F f) {
  std::vector<std::string> out;
  for (const auto& x : r) out.push_back(f(x));
  return out;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string points(const std::vector<LatticePoint>& vs) {
  return join(map_strings(vs, [](const LatticePoint& p) {
    std::ostringstream os;
    os << p;
    return os.str();
  }));
}

inline std::string weights_text(const WpsWeights& w) {
  return "P(" + w.weights[0].str() + "," + w.weights[1].str() + "," + w.weights[2].str() +
         "), index " + w.index.str();
}

inline std::string leading_term_text(const HilbertSeries& hs) {
  const Rational& mid = hs.leading_numerator[1];
  std::string coeff = is_integral(mid) && mid >= 0 ? to_string(mid) : "(" + to_string(mid) + ")";
  return "(1 + " + coeff + "t + t^2)/(1-t)^3";
}

inline std::string rationals(const std::vector<Rational>& v) {
  return join(map_strings(v, [](const Rational& q) { return to_string(q); }));
}

inline json rationals_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& q : v) arr.push_back(to_string(q));
  return arr;
}

inline json integers_json(const std::vector<Integer>& v) {
  json arr = json::array();
  for (const auto& q : v) arr.push_back(integer_to_json(q));
  return arr;
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace detail

// ---------------------------------------------------------------------------

inline int cmd_cone(const Options& opt, std::ostream& out) {
  QuotientType sigma = parse_quotient_type(opt.type);
  Integer slot(opt.slot);
  ConeProfile pr = profile(sigma);
  Residue res = residue(sigma);
  Cone2 cone = type_to_cone(sigma);
  std::vector<Subcone> parts = decompose(cone, slot);
  auto part_types = detail::map_strings(parts, [](const Subcone& s) { return to_string(s.type); });

  std::optional<HJExpansion> hj;
  std::optional<Rational> a_corr;
  if (!sigma.is_smooth()) {
    hj = hj_data(sigma);
    a_corr = a_correction(sigma);
  }

  if (opt.json) {
    json j{{"schema", kSchemaVersion},
           {"input", opt.type},
           {"type", to_string(sigma)},
           {"r", integer_to_json(sigma.r())},
           {"cone", json{{"u", point_to_json(cone.u())}, {"v", point_to_json(cone.v())}}},
           {"width", integer_to_json(pr.width)},
           {"local_index", integer_to_json(pr.local_index)},
           {"n", integer_to_json(pr.n)},
           {"rho", integer_to_json(pr.rho)},
           {"residue", residue_to_json(res)},
           {"content", json{{"n", integer_to_json(pr.n)}, {"residue", residue_to_json(res)}}},
           {"t_singularity", is_t_singularity(sigma)},
           {"slot", integer_to_json(slot)},
           {"decomposition", part_types}};
    if (hj) {
      j["hj"] = json{{"b", detail::integers_json(hj->b)},
                     {"alpha", detail::integers_json(hj->alpha)},
                     {"beta", detail::integers_json(hj->beta)},
                     {"discrepancies", detail::rationals_json(hj->discrepancy)}};
      j["a_correction"] = to_string(*a_corr);
    }
    detail::emit(out, j);
    return kOk;
  }

  out << "type: " << to_string(sigma) << '\n'
      << "r: " << sigma.r() << '\n'
      << "cone: u=" << cone.u() << " v=" << cone.v() << '\n'
      << "width w: " << pr.width << '\n'
      << "local index l: " << pr.local_index << '\n'
      << "n: " << pr.n << '\n'
      << "rho: " << pr.rho << '\n'
      << "residue: " << to_string(res) << '\n'
      << "content: " << to_string(ConeSingularityContent{pr.n, res}) << '\n'
      << "T-singularity: " << detail::yes_no(is_t_singularity(sigma)) << '\n'
      << "decomposition (m=" << slot << "): " << detail::join(part_types) << '\n';
  if (hj) {
    out << "HJ continued fraction: ["
        << detail::join(detail::map_strings(hj->b, [](const Integer& b) { return b.str(); }))
        << "]\n"
        << "alpha: "
        << detail::join(detail::map_strings(hj->alpha, [](const Integer& b) { return b.str(); }))
        << '\n'
        << "beta: "
        << detail::join(detail::map_strings(hj->beta, [](const Integer& b) { return b.str(); }))
        << '\n'
        << "discrepancies: " << detail::rationals(hj->discrepancy) << '\n'
        << "A: " << to_string(*a_corr) << '\n';
  }
  return kOk;
}

inline int cmd_polygon(const Options& opt, std::ostream& out) {
  FanoPolygon p = detail::load_polygon(opt.file);
  PolygonSingularityContent sc = singularity_content(p);
  Rational deg = degree(p), deg_oracle = degree_oracle(p);
  std::size_t rank = picard_rank(p);
  Integer bound = picard_rank_bound(sc);
  auto weights = wps_weights(p);
  HilbertSeries hs = hilbert_series(p, opt.terms);
  std::vector<Integer> counted = ehrhart_hilbert_oracle(p, opt.terms);
  bool degree_ok = deg == deg_oracle;
  bool hilbert_ok = hs.expanded == counted;
  bool bound_ok = Integer(rank) <= bound;

  if (opt.json) {
    json corrections = json::array();
    for (const auto& c : hs.corrections)
      corrections.push_back({{"type", to_string(c.sigma)},
                             {"period", integer_to_json(c.period)},
                             {"numerator", detail::rationals_json(c.numerator)}});
    detail::emit(out, json{{"schema", kSchemaVersion},
                           {"valid", true},
                           {"vertices", vertices_to_json(p.vertices())},
                           {"content", content_to_json(sc)},
                           {"degree", to_string(deg)},
                           {"degree_oracle", to_string(deg_oracle)},
                           {"degree_match", degree_ok},
                           {"picard_rank", rank},
                           {"picard_bound", integer_to_json(bound)},
                           {"picard_bound_holds", bound_ok},
                           {"weights", weights_to_json(weights)},
                           {"hilbert", {{"leading_numerator", json::array({"1", to_string(hs.leading_numerator[1]), "1"})},
                                        {"corrections", corrections},
                                        {"coefficients", detail::integers_json(hs.expanded)},
                                        {"oracle", detail::integers_json(counted)},
                                        {"match", hilbert_ok}}}});
  } else {
    out << "valid: yes\n"
        << "vertices: " << detail::points(p.vertices()) << '\n'
        << "singularity content: " << to_string(sc) << '\n'
        << "degree: " << to_string(deg) << '\n'
        << "degree (dual area): " << to_string(deg_oracle) << '\n'
        << "degree match: " << detail::yes_no(degree_ok) << '\n'
        << "picard rank: " << rank << '\n'
        << "picard bound: " << rank << " <= " << bound << ' ' << detail::yes_no(bound_ok) << '\n';
    if (weights) out << "weights: " << detail::weights_text(*weights) << '\n';
    out << "hilbert leading term: " << detail::leading_term_text(hs) << '\n';
    for (const auto& c : hs.corrections)
      out << "correction " << to_string(c.sigma) << ": [" << detail::rationals(c.numerator)
          << "]/(1-t^" << c.period << ")\n";
    out << "coefficients: "
        << detail::join(detail::map_strings(hs.expanded, [](const Integer& c) { return c.str(); }), ",")
        << '\n'
        << "coefficients match lattice count: " << detail::yes_no(hilbert_ok) << '\n';
  }
  return degree_ok && hilbert_ok && bound_ok ? kOk : kCheckFailed;
}

inline DualVector parse_weight_vector(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("h must be written \"x,y\"");
  auto num = [&](std::string s) {
    s.erase(0, s.find_first_not_of(' '));
    s.erase(s.find_last_not_of(' ') + 1);
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos)
      throw std::invalid_argument("h must be written \"x,y\", got \"" + text + "\"");
    return Integer(s);
  };
  DualVector h{num(text.substr(0, comma)), num(text.substr(comma + 1))};
  if (!is_primitive(h)) throw std::invalid_argument("h = (" + text + ") is not primitive");
  return h;
}

inline int cmd_mutate(const Options& opt, std::ostream& out) {
  FanoPolygon p = detail::load_polygon(opt.file);
  Factor fac = Factor::for_weight(parse_weight_vector(opt.h));
  PolygonSingularityContent before = singularity_content(p);
  std::optional<FanoPolygon> q = mutate(p, fac);
  std::optional<PolygonSingularityContent> after;
  if (q) after = singularity_content(*q);

  if (opt.json) {
    json j{{"schema", kSchemaVersion},
           {"factor", factor_to_json(fac)},
           {"source_content", content_to_json(before)},
           {"mutation_exists", q.has_value()}};
    if (q) {
      j["vertices"] = vertices_to_json(q->vertices());
      j["target_content"] = content_to_json(*after);
      j["degree"] = to_string(degree(*q));
      j["weights"] = weights_to_json(wps_weights(*q));
    }
    detail::emit(out, j);
    return kOk;
  }
  out << "source content: " << to_string(before) << '\n'
      << "factor: h=(" << fac.h.x << "," << fac.h.y << ") f=" << fac.f << '\n';
  if (!q) {
    out << "no mutation exists for this h\n";
    return kOk;
  }
  out << "target: " << polygon_to_json(*q).dump() << '\n'
      << "target content: " << to_string(*after) << '\n'
      << "degree: " << to_string(degree(*q)) << '\n';
  if (auto w = wps_weights(*q)) out << "weights: " << detail::weights_text(*w) << '\n';
  return kOk;
}

inline int cmd_orbit(const Options& opt, std::ostream& out) {
  FanoPolygon p = detail::load_polygon(opt.file);
  MutationGraph g = explore_orbit(p, opt.depth, opt.max_nodes);
  json j = graph_to_json(g);
  if (!opt.out.empty()) {
    std::ofstream js(opt.out + ".json"), dot(opt.out + ".dot");
    if (!js || !dot) throw std::invalid_argument("cannot write " + opt.out + ".json/.dot");
    js << j.dump(2) << '\n';
    dot << graph_to_dot(g);
  }
  if (opt.json) {
    detail::emit(out, j);
    return kOk;
  }
  out << "nodes: " << g.nodes.size() << '\n'
      << "edges: " << g.edges.size() << '\n'
      << "content: " << to_string(g.content) << '\n'
      << "degree: " << to_string(g.degree) << '\n'
      << "truncated: " << detail::yes_no(g.truncated) << '\n';
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out << "node " << i << " depth " << g.nodes[i].depth << ": ";
    if (auto w = wps_weights(g.nodes[i].polygon))
      out << detail::weights_text(*w);
    else
      out << detail::points(g.nodes[i].polygon.vertices());
    out << '\n';
  }
  if (!opt.out.empty()) out << "wrote " << opt.out << ".json and " << opt.out << ".dot\n";
  return kOk;
}

inline int cmd_check(const Options& opt, std::ostream& out) {
  FanoPolygon p = detail::load_polygon(opt.file);
  PolygonSingularityContent sc = singularity_content(p);
  struct Check {
    std::string name;
    bool passed;
    std::string detail;
  };
  std::vector<Check> checks;

  Rational deg = degree(p), deg_oracle = degree_oracle(p);
  checks.push_back({"degree", deg == deg_oracle, to_string(deg) + " vs " + to_string(deg_oracle)});

  std::size_t terms = std::max(opt.terms, default_hilbert_terms(sc));
  std::vector<Integer> counted = ehrhart_hilbert_oracle(p, terms);
  bool hilbert_ok = false;
  std::string hilbert_detail = std::to_string(terms) + " coefficients";
  try {
    hilbert_ok = hilbert_series(p, terms).expanded == counted;
  } catch (const std::logic_error& e) {
    hilbert_detail = e.what();
  }
  checks.push_back({"hilbert", hilbert_ok, hilbert_detail});

  Integer bound = picard_rank_bound(sc);
  checks.push_back({"picard_bound", Integer(picard_rank(p)) <= bound,
                    std::to_string(picard_rank(p)) + " <= " + bound.str()});

  if (sc.basket.empty()) {
    NoetherTerms t = noether_terms(p);
    checks.push_back({"noether", t.total() == 10,
                      to_string(t.degree) + " + " + t.picard_rank.str() + " + " +
                          t.milnor_sum.str() + " = " + to_string(t.total())});
  }

  bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  if (opt.json) {
    json list = json::array(), failures = json::array();
    for (const auto& c : checks) {
      list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      if (!c.passed) failures.push_back(c.name);
    }
    detail::emit(out, json{{"schema", kSchemaVersion},
                           {"passed", all},
                           {"checks", list},
                           {"failures", failures}});
  } else {
    for (const auto& c : checks)
      out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
  return all ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Singularity content, degrees and Hilbert series of Fano polygons"};
  app.set_help_flag("--help", "Print this help message and exit");  // -h is taken by --h
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit a single JSON object");

  auto* cone = app.add_subcommand("cone", "Report on a cyclic quotient singularity 1/r(a,b)");
  cone->add_option("type", opt.type, "Singularity type, e.g. 1/60(1,23)")->required();
  cone->add_option("--slot", opt.slot, "Position of the residual subcone in the decomposition");

  auto* polygon = app.add_subcommand("polygon", "Invariants of a Fano polygon");
  polygon->add_option("file", opt.file, "Polygon JSON file")->required();
  polygon->add_option("--terms", opt.terms, "Number of Hilbert coefficients")->check(CLI::PositiveNumber);

  auto* mut = app.add_subcommand("mutate", "Mutate a polygon with respect to a weight vector h");
  mut->add_option("file", opt.file, "Polygon JSON file")->required();
  mut->add_option("--h", opt.h, "Primitive weight vector \"x,y\"")->required();

  auto* orbit = app.add_subcommand("orbit", "Explore the mutation graph");
  orbit->add_option("file", opt.file, "Polygon JSON file")->required();
  orbit->add_option("--depth", opt.depth, "Maximum mutation distance");
  orbit->add_option("--max-nodes", opt.max_nodes, "Node limit")->check(CLI::PositiveNumber);
  orbit->add_option("--out", opt.out, "Write <out>.json and <out>.dot");

  auto* check = app.add_subcommand("check", "Run every consistency check; exit 0 iff all pass");
  check->add_option("file", opt.file, "Polygon JSON file")->required();
  check->add_option("--terms", opt.terms, "Minimum number of Hilbert coefficients")->check(CLI::PositiveNumber);

  for (auto* sub : {cone, polygon, mut, orbit, check})
    sub->add_flag("--json", opt.json, "Emit a single JSON object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*cone) return cmd_cone(opt, out);
    if (*polygon) return cmd_polygon(opt, out);
    if (*mut) return cmd_mutate(opt, out);
    if (*orbit) return cmd_orbit(opt, out);
    if (*check) return cmd_check(opt, out);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace singcontent::cli
