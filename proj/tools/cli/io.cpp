#include "io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "flagtutte/error.hpp"

namespace flagtutte::cli {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw InputError("SchemaError", where.empty() ? "/" : where, what);
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, "missing key '" + key + "'");
  return *it;
}

long long as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) schema_error(where, "expected an integer");
  return v.get<long long>();
}

const json& as_array(const json& v, const std::string& where) {
  if (!v.is_array()) schema_error(where, "expected an array");
  return v;
}

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

// Offset subtracted from every element index: 1 when the file says "indexing":"1".
int index_offset(const json& doc) {
  if (!doc.is_object() || !doc.contains("indexing")) return 0;
  const json& v = doc["indexing"];
  if ((v.is_string() && v == "1") || (v.is_number_integer() && v == 1)) return 1;
  if ((v.is_string() && v == "0") || (v.is_number_integer() && v == 0)) return 0;
  schema_error("/indexing", "indexing must be \"0\" or \"1\"");
}

int ground_size(const json& doc, const std::string& where) {
  const long long n = as_int(member(doc, "n", where), at(where, "n"));
  if (n < 0 || n > kMaxGroundSet)
    schema_error(at(where, "n"), "n must lie in 0.." + std::to_string(kMaxGroundSet));
  return static_cast<int>(n);
}

std::vector<int> index_list(const json& v, const std::string& where, int offset) {
  std::vector<int> out;
  const json& arr = as_array(v, where);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(static_cast<int>(as_int(arr[i], at(where, i)) - offset));
  return out;
}

Rational rational_entry(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      schema_error(where, e.what());
    }
  }
  schema_error(where, "expected an integer or a rational string");
}

RatMatrix matrix_from_rows(const json& rows, const std::string& where) {
  const json& arr = as_array(rows, where);
  const int r = static_cast<int>(arr.size());
  const int c = r == 0 ? 0 : static_cast<int>(as_array(arr[0], at(where, 0)).size());
  RatMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    const json& row = as_array(arr[i], at(where, i));
    if (static_cast<int>(row.size()) != c) schema_error(at(where, i), "ragged matrix row");
    for (int j = 0; j < c; ++j) m(i, j) = rational_entry(row[j], at(at(where, i), j));
  }
  return m;
}

Matroid matroid_at(const json& doc, const std::string& where, int offset) {
  const std::string type = member(doc, "type", where).is_string() ? doc["type"].get<std::string>() : "";
  if (type == "matroid") {
    const int n = ground_size(doc, where);
    if (doc.contains("rank") && !doc.contains("bases")) {
      const auto table = index_list(doc["rank"], at(where, "rank"), 0);
      if (table.size() != (std::size_t{1} << n)) schema_error(at(where, "rank"), "rank table needs 2^n entries");
      return Matroid::from_rank_table(n, table);
    }
    const json& bases = as_array(member(doc, "bases", where), at(where, "bases"));
    std::vector<std::vector<int>> list;
    for (std::size_t i = 0; i < bases.size(); ++i) list.push_back(index_list(bases[i], at(at(where, "bases"), i), offset));
    return Matroid::from_bases(n, list);
  }
  if (type == "uniform") {
    const int n = ground_size(doc, where);
    const long long k = as_int(member(doc, "k", where), at(where, "k"));
    if (k < 0 || k > n) schema_error(at(where, "k"), "rank must lie in 0..n");
    return Matroid::uniform(static_cast<int>(k), n);
  }
  if (type == "matrix") return matroid_from_matrix(matrix_from_rows(member(doc, "rows", where), at(where, "rows")));
  if (type == "graph") {
    const long long v = as_int(member(doc, "vertices", where), at(where, "vertices"));
    const json& edges = as_array(member(doc, "edges", where), at(where, "edges"));
    std::vector<std::pair<int, int>> list;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto e = index_list(edges[i], at(at(where, "edges"), i), offset);
      if (e.size() != 2) schema_error(at(at(where, "edges"), i), "an edge has two endpoints");
      list.emplace_back(e[0], e[1]);
    }
    return matroid_from_graph(static_cast<int>(v), list);
  }
  schema_error(at(where, "type"), "expected type matroid, uniform, matrix or graph");
}

Subset subset_from(const std::vector<int>& elems, int n, const std::string& where) {
  for (int e : elems)
    if (e < 0 || e >= n) schema_error(where, "element " + std::to_string(e) + " outside the ground set");
  return subset_of(elems);
}

// Flags given explicitly: ranks from the member sizes, constituents by projection.
FlagMatroid flag_from_flag_list(const json& doc, int n, int offset) {
  const json& flags = as_array(member(doc, "flags", ""), "/flags");
  if (flags.empty()) throw Error(ErrorKind::EmptyBases, "no flags given");
  std::vector<Flag> list;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    const std::string w = at("/flags", i);
    Flag f;
    const json& sets = as_array(flags[i], w);
    for (std::size_t j = 0; j < sets.size(); ++j)
      f.sets.push_back(subset_from(index_list(sets[j], at(w, j), offset), n, at(w, j)));
    list.push_back(std::move(f));
  }
  const std::size_t s = list.front().sets.size();
  std::vector<int> ranks;
  for (Subset x : list.front().sets) ranks.push_back(size_of(x));
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].sets.size() != s) schema_error(at("/flags", i), "flags of different lengths");
    for (std::size_t j = 0; j < s; ++j) {
      if (size_of(list[i].sets[j]) != ranks[j])
        throw Error(ErrorKind::UnequalCardinality, "flag " + std::to_string(i) + " has a member of the wrong size");
      if (j > 0 && (list[i].sets[j - 1] & ~list[i].sets[j]) != 0)
        throw Error(ErrorKind::NotNested, "flag " + std::to_string(i) + " is not a chain");
    }
  }
  const Verdict gale = flag_check_gale(n, ranks, list);
  if (!gale.ok) throw Error(ErrorKind::AxiomViolation, gale.message);
  std::vector<Matroid> constituents;
  for (std::size_t j = 0; j < s; ++j) {
    std::vector<Subset> bases;
    for (const auto& f : list) bases.push_back(f.sets[j]);
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    constituents.push_back(Matroid::from_masks(n, bases));
  }
  FlagMatroid fm = FlagMatroid::from_constituents(std::move(constituents));
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  if (fm.flags() != list)
    throw Error(ErrorKind::AxiomViolation, "the flags are not all chains of bases of their projections");
  return fm;
}

}  // namespace

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("ParseError", origin + ":byte " + std::to_string(e.byte), e.what());
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("IOError", path, "cannot open input file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

std::string input_type(const json& doc) {
  const json& t = member(doc, "type", "");
  if (!t.is_string()) schema_error("/type", "expected a string");
  return t.get<std::string>();
}

Matroid matroid_from_json(const json& doc) { return matroid_at(doc, "", index_offset(doc)); }

Polymatroid polymatroid_from_json(const json& doc) {
  const std::string type = input_type(doc);
  if (type == "polymatroid") {
    const int n = ground_size(doc, "");
    const auto table = index_list(member(doc, "rank", ""), "/rank", 0);
    if (table.size() != (std::size_t{1} << n)) schema_error("/rank", "rank table needs 2^n entries");
    return Polymatroid::from_rank(n, table);
  }
  if (type == "flag_matroid") return polymatroid_of_flag(flag_matroid_from_json(doc));
  return Polymatroid::from_matroid(matroid_from_json(doc));
}

FlagMatroid flag_matroid_from_json(const json& doc) {
  const int offset = index_offset(doc);
  const std::string type = input_type(doc);
  if (type != "flag_matroid") return FlagMatroid::from_constituents({matroid_at(doc, "", offset)});
  const int n = ground_size(doc, "");
  FlagMatroid fm = [&] {
    if (doc.contains("constituents")) {
      const json& cs = as_array(doc["constituents"], "/constituents");
      std::vector<Matroid> ms;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        ms.push_back(matroid_at(cs[i], at("/constituents", i), offset));
        if (ms.back().size() != n)
          throw Error(ErrorKind::MismatchedGroundSets, "constituent " + std::to_string(i) + " is not on n elements");
      }
      if (ms.empty()) schema_error("/constituents", "need at least one constituent");
      return FlagMatroid::from_constituents(std::move(ms));
    }
    if (doc.contains("matrix")) {
      const RatMatrix a = matrix_from_rows(doc["matrix"], "/matrix");
      if (a.cols != n) throw Error(ErrorKind::DimensionMismatch, "matrix has the wrong number of columns");
      return flag_from_matrix_prefixes(a, index_list(member(doc, "ranks", ""), "/ranks", 0));
    }
    return flag_from_flag_list(doc, n, offset);
  }();
  if (doc.contains("ranks")) {
    const auto ranks = index_list(doc["ranks"], "/ranks", 0);
    if (ranks != fm.ranks()) throw Error(ErrorKind::MalformedInput, "declared ranks disagree with the constituents");
  }
  return fm;
}

std::vector<Matroid> matroid_list_from_json(const json& doc) {
  if (input_type(doc) != "matroid_list") schema_error("/type", "expected type matroid_list");
  const int offset = index_offset(doc);
  const json& ms = as_array(member(doc, "matroids", ""), "/matroids");
  std::vector<Matroid> out;
  for (std::size_t i = 0; i < ms.size(); ++i) out.push_back(matroid_at(ms[i], at("/matroids", i), offset));
  return out;
}

std::string flag_string(const Flag& f, int n) {
  std::string out;
  for (std::size_t i = 0; i < f.sets.size(); ++i) {
    if (i) out += "|";
    bool first = true;
    for (int e : elements(f.sets[i])) {
      if (n > 10 && !first) out += ",";
      out += std::to_string(e);
      first = false;
    }
  }
  return out;
}

Flag parse_flag_string(const std::string& text, int n, int offset) {
  Flag f;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '|')) {
    std::vector<int> elems;
    if (part.find(',') != std::string::npos) {
      std::stringstream ps(part);
      std::string tok;
      while (std::getline(ps, tok, ','))
        try {
          elems.push_back(std::stoi(tok) - offset);
        } catch (const std::exception&) {
          throw Error(ErrorKind::MalformedInput, "bad element '" + tok + "' in fixed point '" + text + "'");
        }
    } else {
      for (char c : part) {
        if (c < '0' || c > '9') throw Error(ErrorKind::MalformedInput, "bad character in fixed point '" + text + "'");
        elems.push_back(c - '0' - offset);
      }
    }
    for (int e : elems)
      if (e < 0 || e >= n) throw Error(ErrorKind::OutOfRange, "fixed point '" + text + "' leaves the ground set");
    f.sets.push_back(subset_of(elems));
  }
  if (!text.empty() && text.back() == '|') f.sets.push_back(0);
  return f;
}

json to_json(const BivarPoly& p, const std::string& vx, const std::string& vy) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", {e.first, e.second}}, {"coeff", c.str()}});
  return {{"vars", {vx, vy}}, {"terms", terms}, {"text", p.to_string(vx, vy)}};
}

json to_json(const UnivarPoly& p, const std::string& var) {
  json terms = json::array();
  for (std::size_t i = 0; i < p.coeffs.size(); ++i)
    if (p.coeffs[i] != 0) terms.push_back({{"exp", {i}}, {"coeff", p.coeffs[i].str()}});
  return {{"vars", {var}}, {"terms", terms}, {"text", p.to_string(var)}};
}

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coeff", c.str()}});
  return {{"vars", p.nvars()}, {"terms", terms}, {"text", p.to_string()}};
}

json subset_json(Subset s) { return elements(s); }

json subsets_json(const std::vector<Subset>& ss) {
  json out = json::array();
  for (Subset s : ss) out.push_back(subset_json(s));
  return out;
}

json intvecs_json(const std::vector<IntVec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v);
  return out;
}

}  // namespace flagtutte::cli
