#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "flagtutte/error.hpp"
#include "flagtutte/invariants.hpp"
#include "io.hpp"

namespace flagtutte::cli {

namespace {

struct Options {
  std::string verb;
  std::string input;
  std::string method = "corank-nullity";
  int threads = 1;
  std::string output = "json";
  std::string fixed_point;
  int kmax = 0;
  std::vector<long long> weights;
  int element = -1;
};

// Each verb fills the JSON report and a plain-text rendering of it.
struct Report {
  json body;
  std::vector<std::string> text;
};

std::string poly_line(const std::string& label, const std::string& value) { return label + " = " + value; }

int offset_of(const json& doc) {
  if (!doc.is_object() || !doc.contains("indexing")) return 0;
  const json& v = doc["indexing"];
  return (v == "1" || v == 1) ? 1 : 0;
}

Report verb_check(const json& doc) {
  Report r;
  const std::string type = input_type(doc);
  r.body["type"] = type;
  if (type == "polymatroid") {
    const Polymatroid p = polymatroid_from_json(doc);
    const auto bases = poly_bases(p);
    r.body["n"] = p.size();
    r.body["rank"] = p.rank();
    r.body["bases"] = bases.size();
    r.text = {"polymatroid on " + std::to_string(p.size()) + " elements, rank " + std::to_string(p.rank()),
              std::to_string(bases.size()) + " bases"};
  } else if (type == "flag_matroid") {
    const FlagMatroid f = flag_matroid_from_json(doc);
    const auto flags = f.flags();
    const Verdict gale = flag_check_gale(f.size(), f.ranks(), flags);
    r.body["n"] = f.size();
    r.body["ranks"] = f.ranks();
    r.body["flags"] = flags.size();
    r.body["gale_unique_maximum"] = gale.ok;
    std::string ranks;
    for (int k : f.ranks()) ranks += (ranks.empty() ? "" : ",") + std::to_string(k);
    r.text = {"flag matroid on " + std::to_string(f.size()) + " elements, ranks (" + ranks + ")",
              std::to_string(flags.size()) + " flags"};
    if (!gale.ok) throw Error(ErrorKind::AxiomViolation, gale.message);
  } else if (type == "matroid_list") {
    const auto ms = matroid_list_from_json(doc);
    r.body["matroids"] = ms.size();
    r.text = {std::to_string(ms.size()) + " matroids"};
  } else {
    const Matroid m = matroid_from_json(doc);
    const auto lc = loops_coloops(m);
    r.body["n"] = m.size();
    r.body["rank"] = m.rank();
    r.body["bases"] = m.bases().size();
    r.body["loops"] = subset_json(lc.loops);
    r.body["coloops"] = subset_json(lc.coloops);
    r.text = {"matroid on " + std::to_string(m.size()) + " elements, rank " + std::to_string(m.rank()),
              std::to_string(m.bases().size()) + " bases", "loops " + subset_string(lc.loops),
              "coloops " + subset_string(lc.coloops)};
  }
  r.body["valid"] = true;
  r.text.push_back("valid");
  return r;
}

Report verb_tutte(const json& doc, const Options& o) {
  const Matroid m = matroid_from_json(doc);
  Report r;
  const std::vector<std::pair<std::string, BivarPoly (*)(const Matroid&)>> routes = {
      {"activity", &tutte_activity}, {"corank-nullity", &tutte_rank_nullity}, {"deletion-contraction", &tutte_delcon}};
  if (o.method == "all") {
    std::optional<BivarPoly> first;
    bool agree = true;
    for (const auto& [name, f] : routes) {
      const BivarPoly t = f(m);
      r.body["methods"][name] = to_json(t);
      r.text.push_back(poly_line("T[" + name + "]", t.to_string()));
      if (first && !(*first == t)) agree = false;
      if (!first) first = t;
    }
    r.body["agree"] = agree;
    r.text.push_back(agree ? "routes agree" : "routes DISAGREE");
    if (!agree) throw Error(ErrorKind::AxiomViolation, "Tutte routes disagree");
    return r;
  }
  for (const auto& [name, f] : routes) {
    if (name != o.method) continue;
    const BivarPoly t = f(m);
    r.body["method"] = name;
    r.body["tutte"] = to_json(t);
    r.text.push_back(poly_line("T", t.to_string()));
  }
  return r;
}

KTutteOptions ktutte_options(const Options& o) {
  KTutteOptions k;
  k.threads = o.threads;
  if (!o.weights.empty()) k.weights = IntVec(o.weights.begin(), o.weights.end());
  return k;
}

Report verb_ktutte(const json& doc, const Options& o) {
  const FlagMatroid f = flag_matroid_from_json(doc);
  const BivarPoly t = k_tutte(f, ktutte_options(o));
  Report r;
  r.body["n"] = f.size();
  r.body["ranks"] = f.ranks();
  r.body["ktutte"] = to_json(t);
  r.text.push_back(poly_line("K-Tutte", t.to_string()));
  return r;
}

Report verb_charpoly(const json& doc, const Options& o) {
  Report r;
  BivarPoly t;
  int rank = 0;
  if (input_type(doc) == "flag_matroid") {
    const FlagMatroid f = flag_matroid_from_json(doc);
    t = k_tutte(f, ktutte_options(o));
    rank = f.total_rank();
  } else {
    const Matroid m = matroid_from_json(doc);
    t = tutte_rank_nullity(m);
    rank = m.rank();
  }
  const UnivarPoly chi = characteristic_poly(t, rank);
  const Verdict lc = log_concavity(chi.coeffs);
  r.body["rank"] = rank;
  r.body["tutte"] = to_json(t);
  r.body["characteristic_polynomial"] = to_json(chi);
  r.body["log_concave"] = lc.ok;
  if (!lc.ok) r.body["log_concavity_failure"] = lc.message;
  r.text = {poly_line("T", t.to_string()), poly_line("chi(lambda)", chi.to_string()),
            lc.ok ? "log-concave" : "not log-concave: " + lc.message};
  return r;
}

Report verb_qprime(const json& doc, const Options& o) {
  Report r;
  const std::string type = input_type(doc);
  const Polymatroid p = polymatroid_from_json(doc);
  const QPolynomial q = q_polynomial(poly_base_polytope(p));
  json c = json::array();
  for (const auto& row : q.c) {
    json jr = json::array();
    for (const auto& v : row) jr.push_back(v.str());
    c.push_back(jr);
  }
  const BivarPoly qp = q.qprime();
  r.body["q_binomial_coefficients"] = c;
  r.body["qprime"] = to_json(qp);
  r.text.push_back(poly_line("Q'", qp.to_string()));
  if (type == "matroid" || type == "uniform" || type == "matrix" || type == "graph") {
    const auto rep = ttoq_check(matroid_from_json(doc));
    r.body["ttoq"] = rep.verdict.ok;
    r.text.push_back(std::string("Tutte-to-Q identity ") + (rep.verdict.ok ? "holds" : "FAILS"));
  }
  if (o.element >= 0) {
    const int a = o.element - offset_of(doc);
    const auto rep = qprime_delcon_check(p, a);
    r.body["deletion_contraction"] = {
        {"element", a}, {"holds", rep.verdict.ok}, {"lhs", to_json(rep.lhs)}, {"rhs", to_json(rep.rhs)}};
    r.text.push_back("deletion-contraction at " + std::to_string(a) + (rep.verdict.ok ? " holds" : " FAILS"));
    r.text.push_back(poly_line("  lhs", rep.lhs.to_string()));
    r.text.push_back(poly_line("  rhs", rep.rhs.to_string()));
  }
  return r;
}

Report verb_polytope(const json& doc, const Options& o) {
  const std::string type = input_type(doc);
  const LatticePolytope p = type == "flag_matroid" ? flag_polytope(flag_matroid_from_json(doc))
                            : type == "polymatroid" ? poly_base_polytope(polymatroid_from_json(doc))
                                                    : base_polytope(matroid_from_json(doc));
  Report r;
  const auto& vs = p.vertices();
  const auto es = edges(p);
  const auto pts = lattice_points(p);
  json je = json::array();
  for (auto [a, b] : es) je.push_back({a, b});
  r.body["vertices"] = intvecs_json(vs);
  r.body["edges"] = je;
  r.body["lattice_points"] = intvecs_json(pts);
  r.text = {std::to_string(vs.size()) + " vertices", std::to_string(es.size()) + " edges",
            std::to_string(pts.size()) + " lattice points"};
  for (const auto& v : vs) r.text.push_back("  vertex " + to_string(v));
  if (o.kmax >= 2) {
    const NormalityVerdict nv = is_normal(p, o.kmax);
    r.body["normality"] = {{"kmax", o.kmax}, {"normal", nv.ok}};
    if (!nv.ok) {
      r.body["normality"]["dilation"] = nv.k;
      r.body["normality"]["witness"] = nv.witness;
    }
    r.text.push_back(nv.ok ? "normal up to k=" + std::to_string(o.kmax)
                           : "not normal: " + to_string(nv.witness) + " at k=" + std::to_string(nv.k));
  }
  return r;
}

Report verb_yclass(const json& doc, const Options& o) {
  const FlagMatroid f = flag_matroid_from_json(doc);
  const EquivariantClass y = y_class(f, o.threads);
  Report r;
  std::vector<Flag> points;
  if (!o.fixed_point.empty()) {
    const Flag p = parse_flag_string(o.fixed_point, f.size(), offset_of(doc));
    if (!is_fixed_point(y.space(), p))
      throw Error(ErrorKind::MalformedInput, "'" + o.fixed_point + "' is not a torus-fixed flag of this space");
    points.push_back(p);
  } else {
    points = fixed_points(y.space());
  }
  json values = json::array();
  for (const auto& p : points) {
    const LaurentPoly v = y.at(p);
    values.push_back({{"fixed_point", flag_string(p, f.size())}, {"value", to_json(v)}});
    r.text.push_back("y(" + flag_string(p, f.size()) + ") = " + v.to_string());
  }
  r.body["n"] = f.size();
  r.body["ranks"] = f.ranks();
  r.body["class"] = values;
  r.body["gkm"] = gkm_check(y).ok;
  return r;
}

Report verb_quotient(const json& doc) {
  const auto ms = matroid_list_from_json(doc);
  if (ms.size() != 2) throw Error(ErrorKind::MalformedInput, "quotient needs exactly two matroids [N, M]");
  const auto bad = quotient_violation(ms[0], ms[1]);
  Report r;
  r.body["quotient"] = !bad.has_value();
  r.text.push_back(bad ? "N is not a quotient of M" : "N is a quotient of M");
  if (bad) {
    r.body["witness"] = {subset_json(bad->first), subset_json(bad->second)};
    r.text.push_back("witness X=" + subset_string(bad->first) + " Y=" + subset_string(bad->second));
  }
  return r;
}

Report verb_union(const json& doc) {
  const auto ms = matroid_list_from_json(doc);
  if (ms.empty()) throw Error(ErrorKind::MalformedInput, "union needs at least one matroid");
  const int n = ms.front().size();
  for (const auto& m : ms)
    if (m.size() != n) throw Error(ErrorKind::MismatchedGroundSets, "matroids live on different ground sets");
  Report r;
  const int rk = union_rank(ms, full_set(n));
  const auto cover = cover_by_independent(ms);
  r.body["union_rank"] = rk;
  r.body["partition"] = cover ? subsets_json(*cover) : json(nullptr);
  r.text.push_back("union rank " + std::to_string(rk));
  if (cover) {
    std::string parts;
    for (Subset s : *cover) parts += " " + subset_string(s);
    r.text.push_back("partition into independent sets:" + parts);
  } else {
    r.text.push_back("no partition into independent sets");
  }
  return r;
}

Report dispatch(const Options& o, const json& doc) {
  if (o.verb == "check") return verb_check(doc);
  if (o.verb == "tutte") return verb_tutte(doc, o);
  if (o.verb == "ktutte") return verb_ktutte(doc, o);
  if (o.verb == "charpoly") return verb_charpoly(doc, o);
  if (o.verb == "qprime") return verb_qprime(doc, o);
  if (o.verb == "polytope") return verb_polytope(doc, o);
  if (o.verb == "yclass") return verb_yclass(doc, o);
  if (o.verb == "quotient") return verb_quotient(doc);
  return verb_union(doc);
}

void emit(std::ostream& out, const Options& o, const Report& r) {
  if (o.output == "text") {
    for (const auto& line : r.text) out << line << "\n";
  } else {
    json j = r.body;
    j["verb"] = o.verb;
    out << j.dump(2) << "\n";
  }
}

int emit_error(std::ostream& out, const Options& o, const std::string& kind, const std::string& message,
               const std::string& where = "") {
  if (o.output == "text") {
    out << "error: " << kind << (where.empty() ? "" : " at " + where) << ": " << message << "\n";
  } else {
    json e = {{"kind", kind}, {"message", message}};
    if (!where.empty()) e["location"] = where;
    out << json{{"verb", o.verb}, {"error", e}}.dump(2) << "\n";
  }
  return kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Tutte-type invariants of matroids, polymatroids and flag matroids", "flagtutte"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "flagtutte 0.1.0");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "input JSON file")->required();
    sub->add_option("--output", o.output, "report format")->check(CLI::IsMember({"json", "text"}));
    return sub;
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "worker threads for fixed-point evaluation")->check(CLI::Range(1, 256));
  };
  auto add_weights = [&](CLI::App* sub) {
    sub->add_option("--weights", o.weights, "distinct integer weights; reduce through Euler characteristics")
        ->delimiter(',');
  };

  add_common(app.add_subcommand("check", "validate an input file"));
  auto* tutte = add_common(app.add_subcommand("tutte", "classical Tutte polynomial"));
  tutte->add_option("--method", o.method, "computation route")
      ->check(CLI::IsMember({"corank-nullity", "deletion-contraction", "activity", "all"}));
  auto* kt = add_common(app.add_subcommand("ktutte", "K-theoretic Tutte polynomial of a flag matroid"));
  add_threads(kt);
  add_weights(kt);
  auto* cp = add_common(app.add_subcommand("charpoly", "characteristic polynomial and log-concavity"));
  add_threads(cp);
  add_weights(cp);
  auto* qp = add_common(app.add_subcommand("qprime", "Q and Q' polynomials of a polymatroid"));
  qp->add_option("--element", o.element, "also check deletion-contraction at this element")
      ->check(CLI::NonNegativeNumber);
  auto* pt = add_common(app.add_subcommand("polytope", "base polytope: vertices, edges, lattice points"));
  pt->add_option("--kmax", o.kmax, "check normality up to this dilation")->check(CLI::Range(2, 16));
  auto* yc = add_common(app.add_subcommand("yclass", "the equivariant class y(F) at torus-fixed points"));
  add_threads(yc);
  yc->add_option("--fixed-point", o.fixed_point, "single fixed point, e.g. 0|01");
  add_common(app.add_subcommand("quotient", "is N a quotient of M"));
  add_common(app.add_subcommand("union", "matroid union rank and partition"));

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-' && app.get_subcommand_no_throw(args.front()) == nullptr) {
    err << "unknown verb '" << args.front() << "'\nRun with --help for more information.\n";
    return kUsageError;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsageError;
  }
  o.verb = app.get_subcommands().front()->get_name();

  json doc;
  try {
    doc = load_json_file(o.input);
  } catch (const InputError& e) {
    if (e.kind() == "IOError") {
      err << "cannot read '" << o.input << "'\n";
      return kUsageError;
    }
    std::ostringstream buffer;
    const int code = emit_error(buffer, o, e.kind(), e.what(), e.where());
    out << buffer.str();
    return code;
  }

  std::ostringstream buffer;
  int code = kSuccess;
  try {
    emit(buffer, o, dispatch(o, doc));
  } catch (const InputError& e) {
    code = emit_error(buffer, o, e.kind(), e.what(), e.where());
  } catch (const Error& e) {
    code = emit_error(buffer, o, std::string(to_string(e.kind())), e.what());
  } catch (const json::exception& e) {
    code = emit_error(buffer, o, "SchemaError", e.what());
  }
  out << buffer.str();
  return code;
}

}  // namespace flagtutte::cli
