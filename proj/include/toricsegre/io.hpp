#pragma once

// JSON input and output documents.
//
// Input:
//   { "rays": [[1,0],[0,1],...], "max_cones": [[0,1],...],
//     "variables": ["x0",...],            (optional, default z0..)
//     "degrees": [[...],...],             (optional, default canonical)
//     "ideal": ["x0*y1 - x1*y0", ...],
//     "options": {"seed": 0, "coeff_bound": 100, "retries": 5, "format": "human"} }
//
// Output classes are lists of [codim, [ray indices, sorted, with
// repetition], coefficient] triples over the Chow basis.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "toricsegre/error.hpp"
#include "toricsegre/segre.hpp"

namespace toricsegre {

struct InputOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> coeff_bound;
  std::optional<int> retries;
  std::optional<std::string> format;
  friend bool operator==(const InputOptions&, const InputOptions&) = default;
};

struct InputDocument {
  IntMatrix rays;
  std::vector<Cone> max_cones;
  std::optional<std::vector<std::string>> variables;
  std::optional<IntMatrix> degrees;
  std::vector<std::string> ideal;
  InputOptions options;
  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// (codim, basis monomial as a sorted multiset of ray indices, coefficient)
using ClassTerm = std::tuple<int, std::vector<std::size_t>, std::int64_t>;

struct ResidualRowDoc {
  std::vector<int> tuple;
  std::int64_t gamma = 0;
  IntVector beta;
  friend bool operator==(const ResidualRowDoc&, const ResidualRowDoc&) = default;
};

struct ResidualDoc {
  int d = 0;
  bool empty = false;
  int dimension = -1;
  std::vector<ClassTerm> cls;
  std::vector<ResidualRowDoc> rows;
  std::vector<std::vector<int>> skipped;
  std::size_t consistency_rows = 0;
  int attempts = 1;
  friend bool operator==(const ResidualDoc&, const ResidualDoc&) = default;
};

struct OutputDocument {
  MultiDegree alpha;
  int n = 0, k = 0;
  std::vector<std::string> variables;
  std::vector<std::vector<std::vector<std::size_t>>> bases;  // per codimension
  std::vector<ResidualDoc> residuals;
  std::vector<std::vector<ClassTerm>> segre;  // s_0..s_n
  std::uint64_t seed = 0;
  std::int64_t coeff_bound = 0;
  int retries = 0;
  int retries_used = 0;
  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

namespace detail {

using json = nlohmann::ordered_json;

[[noreturn]] inline void bad_input(const std::string& what) { fail(ErrorCode::InvalidInput, what); }

inline std::int64_t get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad_input(where + " must be an integer");
  return j.get<std::int64_t>();
}

inline IntMatrix get_matrix(const json& j, const std::string& where) {
  if (!j.is_array()) bad_input(where + " must be a list of integer lists");
  IntMatrix m;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) bad_input(where + "[" + std::to_string(i) + "] must be a list of integers");
    IntVector row;
    for (std::size_t c = 0; c < j[i].size(); ++c)
      row.push_back(get_int(j[i][c], where + "[" + std::to_string(i) + "][" + std::to_string(c) + "]"));
    m.push_back(row);
  }
  return m;
}

inline std::vector<std::size_t> monomial_indices(const Monomial& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int e = 0; e < m[i]; ++e) out.push_back(i);
  return out;
}

inline std::vector<ClassTerm> class_terms(const ChowRing& chow, const ChowClass& c) {
  std::vector<ClassTerm> out;
  const auto& basis = chow.basis(c.codim);
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) out.emplace_back(c.codim, monomial_indices(basis[i]), c.coeffs[i]);
  return out;
}

inline json terms_json(const std::vector<ClassTerm>& terms) {
  json a = json::array();
  for (const auto& [codim, mono, coeff] : terms) a.push_back(json::array({codim, mono, coeff}));
  return a;
}

inline std::vector<ClassTerm> terms_from_json(const json& j) {
  std::vector<ClassTerm> out;
  for (const json& t : j) out.emplace_back(t.at(0).get<int>(), t.at(1).get<std::vector<std::size_t>>(), t.at(2).get<std::int64_t>());
  return out;
}

}  // namespace detail

/// Strict parse of an input document; unknown keys are rejected.
inline InputDocument parse_input(const std::string& text) {
  using detail::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Syntax, std::string("malformed JSON input: ") + e.what());
  }
  if (!j.is_object()) detail::bad_input("input must be a JSON object");
  static const std::set<std::string> known{"rays", "max_cones", "variables", "degrees", "ideal", "options"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) detail::bad_input("unknown field '" + it.key() + "'");
  for (const char* required : {"rays", "max_cones", "ideal"})
    if (!j.contains(required)) detail::bad_input(std::string("missing field '") + required + "'");

  InputDocument doc;
  doc.rays = detail::get_matrix(j["rays"], "rays");
  const IntMatrix cones = detail::get_matrix(j["max_cones"], "max_cones");
  for (const IntVector& c : cones) {
    Cone cone;
    for (std::int64_t i : c) {
      if (i < 0) detail::bad_input("max_cones contains a negative ray index");
      cone.push_back(static_cast<std::size_t>(i));
    }
    std::sort(cone.begin(), cone.end());
    doc.max_cones.push_back(cone);
  }
  if (j.contains("variables")) {
    if (!j["variables"].is_array()) detail::bad_input("variables must be a list of names");
    std::vector<std::string> names;
    for (const json& v : j["variables"]) {
      if (!v.is_string()) detail::bad_input("variables must be a list of names");
      names.push_back(v.get<std::string>());
    }
    doc.variables = names;
  }
  if (j.contains("degrees")) doc.degrees = detail::get_matrix(j["degrees"], "degrees");
  if (!j["ideal"].is_array()) detail::bad_input("ideal must be a list of polynomial strings");
  for (const json& g : j["ideal"]) {
    if (!g.is_string()) detail::bad_input("ideal must be a list of polynomial strings");
    doc.ideal.push_back(g.get<std::string>());
  }
  if (j.contains("options")) {
    const json& o = j["options"];
    if (!o.is_object()) detail::bad_input("options must be an object");
    for (auto it = o.begin(); it != o.end(); ++it) {
      const std::string& key = it.key();
      if (key == "seed") {
        const std::int64_t s = detail::get_int(*it, "options.seed");
        if (s < 0) detail::bad_input("options.seed must be non-negative");
        doc.options.seed = static_cast<std::uint64_t>(s);
      } else if (key == "coeff_bound") {
        doc.options.coeff_bound = detail::get_int(*it, "options.coeff_bound");
      } else if (key == "retries") {
        doc.options.retries = static_cast<int>(detail::get_int(*it, "options.retries"));
      } else if (key == "format") {
        if (!it->is_string()) detail::bad_input("options.format must be a string");
        doc.options.format = it->get<std::string>();
      } else {
        detail::bad_input("unknown option '" + key + "'");
      }
    }
  }
  return doc;
}

inline std::string input_to_json(const InputDocument& doc) {
  using detail::json;
  json j;
  j["rays"] = doc.rays;
  j["max_cones"] = doc.max_cones;
  if (doc.variables) j["variables"] = *doc.variables;
  if (doc.degrees) j["degrees"] = *doc.degrees;
  j["ideal"] = doc.ideal;
  json o = json::object();
  if (doc.options.seed) o["seed"] = *doc.options.seed;
  if (doc.options.coeff_bound) o["coeff_bound"] = *doc.options.coeff_bound;
  if (doc.options.retries) o["retries"] = *doc.options.retries;
  if (doc.options.format) o["format"] = *doc.options.format;
  if (!o.empty()) j["options"] = o;
  return j.dump(2);
}

inline Fan fan_of(const InputDocument& doc) { return Fan{doc.rays, doc.max_cones}; }

inline OutputDocument make_output(const ToricVariety& x, const SegreResult& res, int retries) {
  const ChowRing& chow = x.chow();
  OutputDocument out;
  out.alpha = res.alpha;
  out.n = res.n;
  out.k = res.k;
  out.variables = x.ring().names();
  for (int d = 0; d <= res.k; ++d) {
    std::vector<std::vector<std::size_t>> b;
    for (const Monomial& m : chow.basis(d)) b.push_back(detail::monomial_indices(m));
    out.bases.push_back(b);
  }
  for (const ResidualData& r : res.residuals) {
    ResidualDoc rd;
    rd.d = r.d;
    rd.empty = r.empty;
    rd.dimension = r.dimension;
    rd.cls = detail::class_terms(chow, r.cls);
    for (const ResidualRow& row : r.rows) rd.rows.push_back({row.tuple, row.gamma, row.beta});
    rd.skipped = r.skipped;
    rd.consistency_rows = r.consistency_rows;
    rd.attempts = r.attempts;
    out.residuals.push_back(rd);
  }
  for (const ChowClass& s : res.s) out.segre.push_back(detail::class_terms(chow, s));
  out.seed = res.seed;
  out.coeff_bound = res.coeff_bound;
  out.retries = retries;
  out.retries_used = res.retries_used;
  return out;
}

/// Document options over library defaults.
inline SegreOptions options_from(const InputDocument& doc) {
  SegreOptions opt;
  if (doc.options.seed) opt.seed = *doc.options.seed;
  if (doc.options.coeff_bound) opt.coeff_bound = *doc.options.coeff_bound;
  if (doc.options.retries) opt.retries = *doc.options.retries;
  return opt;
}

inline ToricVariety variety_of(const InputDocument& doc) { return ToricVariety(fan_of(doc), doc.variables, doc.degrees); }

inline Ideal ideal_of(const InputDocument& doc, const ToricVariety& x) {
  std::vector<Polynomial> gens;
  for (const std::string& g : doc.ideal) gens.push_back(x.parse(g));
  return Ideal(x.ring(), gens);
}

inline OutputDocument run(const InputDocument& doc, const SegreOptions& opt) {
  if (opt.coeff_bound < 1) fail(ErrorCode::InvalidInput, "coeff_bound must be positive");
  if (opt.retries < 0) fail(ErrorCode::InvalidInput, "retries must be non-negative");
  const ToricVariety x = variety_of(doc);
  return make_output(x, segre_class(x, ideal_of(doc, x), opt), opt.retries);
}

inline std::string output_to_json(const OutputDocument& o) {
  using detail::json;
  json j;
  j["alpha"] = o.alpha;
  j["n"] = o.n;
  j["k"] = o.k;
  j["variables"] = o.variables;
  j["bases"] = o.bases;
  json res = json::array();
  for (const ResidualDoc& r : o.residuals) {
    json rj;
    rj["d"] = r.d;
    rj["empty"] = r.empty;
    rj["dimension"] = r.dimension;
    rj["class"] = detail::terms_json(r.cls);
    json rows = json::array();
    for (const ResidualRowDoc& row : r.rows) {
      json x;
      x["tuple"] = row.tuple;
      x["gamma"] = row.gamma;
      x["beta"] = row.beta;
      rows.push_back(x);
    }
    rj["rows"] = rows;
    rj["skipped"] = r.skipped;
    rj["consistency_rows"] = r.consistency_rows;
    rj["attempts"] = r.attempts;
    res.push_back(rj);
  }
  j["residuals"] = res;
  json segre = json::array();
  for (const auto& s : o.segre) segre.push_back(detail::terms_json(s));
  j["segre"] = segre;
  j["provenance"] = {{"seed", o.seed}, {"coeff_bound", o.coeff_bound}, {"retries", o.retries},
                     {"retries_used", o.retries_used}};
  return j.dump(2) + "\n";
}

inline OutputDocument output_from_json(const std::string& text) {
  using detail::json;
  try {
    const json j = json::parse(text);
    OutputDocument o;
    o.alpha = j.at("alpha").get<MultiDegree>();
    o.n = j.at("n").get<int>();
    o.k = j.at("k").get<int>();
    o.variables = j.at("variables").get<std::vector<std::string>>();
    o.bases = j.at("bases").get<std::vector<std::vector<std::vector<std::size_t>>>>();
    for (const json& rj : j.at("residuals")) {
      ResidualDoc r;
      r.d = rj.at("d").get<int>();
      r.empty = rj.at("empty").get<bool>();
      r.dimension = rj.at("dimension").get<int>();
      r.cls = detail::terms_from_json(rj.at("class"));
      for (const json& x : rj.at("rows"))
        r.rows.push_back({x.at("tuple").get<std::vector<int>>(), x.at("gamma").get<std::int64_t>(),
                          x.at("beta").get<IntVector>()});
      r.skipped = rj.at("skipped").get<std::vector<std::vector<int>>>();
      r.consistency_rows = rj.at("consistency_rows").get<std::size_t>();
      r.attempts = rj.at("attempts").get<int>();
      o.residuals.push_back(r);
    }
    for (const json& s : j.at("segre")) o.segre.push_back(detail::terms_from_json(s));
    const json& p = j.at("provenance");
    o.seed = p.at("seed").get<std::uint64_t>();
    o.coeff_bound = p.at("coeff_bound").get<std::int64_t>();
    o.retries = p.at("retries").get<int>();
    o.retries_used = p.at("retries_used").get<int>();
    return o;
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed output document: ") + e.what());
  }
}

}  // namespace toricsegre
