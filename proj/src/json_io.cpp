#include "tbs/json_io.hpp"

#include <fstream>
#include <set>

namespace tbs {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw ValidationError("parse", path.empty() ? "/" : path, what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::string idx(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

Json int_json(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(to_string(v));
}

// Re-anchors errors raised while constructing an object parsed at `path`.
template <class F>
auto anchored(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ValidationError& e) {
    throw ValidationError(e.kind(), path + (e.path() == "/" ? "" : e.path()), e.what());
  } catch (const InvalidArgument& e) {
    throw ValidationError("invalid", path.empty() ? "/" : path, e.what());
  }
}

}  // namespace

Json to_json(const Phase& p) { return p.str(); }

Json to_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const auto& v : c.coeffs()) coeffs.push_back(to_string(v));
  return {{"order", c.order()}, {"coeffs", coeffs}};
}

Json to_json(const AbGroup& G) { return {{"free_rank", G.free_rank()}, {"torsion", G.torsion()}}; }

Json to_json(const AbElem& g) { return g.coords; }

Json to_json(const AbHom& f) { return {{"matrix", f.matrix()}}; }

Json to_json(const Character& c) {
  Json p = Json::array();
  for (const auto& v : c.phases()) p.push_back(to_json(v));
  return {{"phases", p}};
}

namespace {
Json phase_matrix(const PhaseMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& p : row) r.push_back(to_json(p));
    out.push_back(r);
  }
  return out;
}
}  // namespace

Json to_json(const Cocycle& mu) {
  if (mu.kind() == Cocycle::Kind::Bichar) return {{"kind", "bichar"}, {"matrix", phase_matrix(mu.matrix())}};
  const AbGroup& G = mu.group();
  std::vector<AbElem> elems = G.elements();
  Json entries = Json::array();
  std::size_t n = elems.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Phase& p = mu.values()[i * n + j];
      if (!p.is_zero()) entries.push_back(Json::array({to_json(elems[i]), to_json(elems[j]), to_json(p)}));
    }
  return {{"kind", "table"}, {"entries", entries}};
}

Json to_json(const Bicharacter& b) {
  return {{"matrix", phase_matrix(b.matrix())}, {"antisymmetric", b.antisymmetric()}};
}

Json to_json(const LatticePoint& k) { return Json::array({int_json(k.q), int_json(k.r)}); }

Json to_json(const Matrix2& m) {
  return Json::array({Json::array({int_json(m.x), int_json(m.y)}), Json::array({int_json(m.z), int_json(m.w)})});
}

Json to_json(const AffineSL2& a) { return {{"t", to_json(a.t())}, {"m", to_json(a.m())}}; }

Json to_json(const OplusElem& lambda) {
  Json s = Json::array();
  for (const auto& [k, v] : lambda.support) s.push_back(Json::array({to_json(k), to_json(v)}));
  return {{"support", s}};
}

Json to_json(const AlgElem& x) {
  Json t = Json::array();
  for (const auto& [k, c] : x.terms()) t.push_back(Json::array({to_json(k), to_json(c)}));
  return {{"terms", t}};
}

Json to_json(const TensorElem& x) {
  Json t = Json::array();
  for (const auto& [k, c] : x.terms()) t.push_back(Json::array({Json::array({to_json(k.first), to_json(k.second)}), to_json(c)}));
  return {{"terms", t}};
}

Json to_json(const GroupStructure& s) {
  Json j = {{"order", s.order}, {"abelian", s.abelian}, {"structure", s.str()}};
  if (s.abelian) j["invariant_factors"] = s.invariant_factors;
  return j;
}

Json to_json(const ConjugacyReport& r) {
  return {{"verdict", verdict_name(r.verdict)},
          {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
          {"checks", {{"cocycle", r.checks.cocycle}, {"character", r.checks.character}}},
          {"complete", r.complete},
          {"closed_form", r.closed_form}};
}

Json to_json(const CentralizerReport& r) {
  Json elems = Json::array();
  for (const auto& f : r.elements) elems.push_back(to_json(f));
  Json j = {{"verdict", r.complete ? "COMPLETE" : "UNKNOWN"}, {"complete", r.complete}, {"elements", elems}};
  if (r.structure) {
    j["order"] = r.structure->order;
    j["structure"] = r.structure->str();
    j["abelian"] = r.structure->abelian;
    if (r.structure->abelian) j["invariant_factors"] = r.structure->invariant_factors;
  } else {
    j["order"] = nullptr;
    j["structure"] = nullptr;
  }
  return j;
}

Json to_json(const Nondegeneracy& n) {
  Json j = {{"nondegenerate", n.nondegenerate}};
  if (n.witness) j["witness_g"] = to_json(*n.witness);
  return j;
}

// ---------------------------------------------------------------------------

Phase phase_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Phase(j.get<std::int64_t>(), 1);
  if (!j.is_string()) bad(path, "expected a phase string \"p/q\"");
  try {
    return Phase::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    bad(path, std::string("bad phase: ") + e.what());
  }
}

AbGroup group_from_json(const Json& j, const std::string& path) {
  std::int64_t d = integer(field(j, "free_rank", path), path + "/free_rank");
  if (d < 0) bad(path + "/free_rank", "free rank must be nonnegative");
  std::vector<std::int64_t> torsion;
  if (j.contains("torsion")) {
    const Json& t = j["torsion"];
    if (!t.is_array()) bad(path + "/torsion", "expected an array");
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::int64_t n = integer(t[i], idx(path + "/torsion", i));
      if (n < 2) bad(idx(path + "/torsion", i), "torsion orders must be at least 2");
      torsion.push_back(n);
    }
  }
  return AbGroup(static_cast<int>(d), std::move(torsion));
}

AbElem element_from_json(const AbGroup& G, const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != G.rank()) bad(path, "expected " + std::to_string(G.rank()) + " coordinates");
  std::vector<std::int64_t> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(integer(j[i], idx(path, i)));
  return G.make(std::move(c));
}

AbHom hom_from_json(const AbGroup& source, const AbGroup& target, const Json& j, const std::string& path) {
  const Json& m = field(j, "matrix", path);
  if (!m.is_array()) bad(path + "/matrix", "expected an array of rows");
  IntRows rows;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i].is_array()) bad(idx(path + "/matrix", i), "expected a row");
    std::vector<std::int64_t> row;
    for (std::size_t k = 0; k < m[i].size(); ++k) row.push_back(integer(m[i][k], idx(idx(path + "/matrix", i), k)));
    rows.push_back(std::move(row));
  }
  return anchored(path, [&] { return AbHom(source, target, rows); });
}

Character character_from_json(const AbGroup& G, const Json& j, const std::string& path) {
  const Json& p = field(j, "phases", path);
  if (!p.is_array()) bad(path + "/phases", "expected an array");
  std::vector<Phase> phases;
  for (std::size_t i = 0; i < p.size(); ++i) phases.push_back(phase_from_json(p[i], idx(path + "/phases", i)));
  return anchored(path, [&] { return Character(G, phases); });
}

Cocycle cocycle_from_json(const AbGroup& G, const Json& j, const std::string& path) {
  const Json& kind = field(j, "kind", path);
  if (kind == "bichar") {
    const Json& m = field(j, "matrix", path);
    if (!m.is_array()) bad(path + "/matrix", "expected an array of rows");
    PhaseMatrix B;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i].is_array()) bad(idx(path + "/matrix", i), "expected a row");
      std::vector<Phase> row;
      for (std::size_t k = 0; k < m[i].size(); ++k) row.push_back(phase_from_json(m[i][k], idx(idx(path + "/matrix", i), k)));
      B.push_back(std::move(row));
    }
    return anchored(path, [&] { return Cocycle::bichar(G, B); });
  }
  if (kind == "table") {
    if (!G.is_finite()) bad(path + "/kind", "table cocycles need a finite group");
    const Json& e = field(j, "entries", path);
    if (!e.is_array()) bad(path + "/entries", "expected an array");
    std::size_t n = static_cast<std::size_t>(G.order());
    std::vector<Phase> values(n * n);
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < e.size(); ++i) {
      std::string p = idx(path + "/entries", i);
      if (!e[i].is_array() || e[i].size() != 3) bad(p, "expected [g, h, \"p/q\"]");
      AbElem g = element_from_json(G, e[i][0], p + "/0");
      AbElem h = element_from_json(G, e[i][1], p + "/1");
      std::size_t at = G.index_of(g) * n + G.index_of(h);
      if (!seen.insert(at).second) bad(p, "duplicate entry");
      values[at] = phase_from_json(e[i][2], p + "/2");
    }
    return anchored(path, [&] { return Cocycle::table(G, values); });
  }
  bad(path + "/kind", "kind must be \"bichar\" or \"table\"");
}

Triplet triplet_from_json(const Json& j) {
  if (!j.is_object()) bad("", "expected an object");
  AbGroup G = anchored("/group", [&] { return group_from_json(field(j, "group", ""), "/group"); });
  Cocycle mu = cocycle_from_json(G, field(j, "cocycle", ""), "/cocycle");
  Character chi = character_from_json(G, field(j, "character", ""), "/character");
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) bad("/label", "expected a string");
    label = j["label"].get<std::string>();
  }
  return anchored("", [&] { return Triplet(G, mu, chi, label); });
}

Triplet read_triplet_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ValidationError("io", "/", "cannot open " + file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("parse", "/", std::string("malformed JSON: ") + e.what());
  }
  return triplet_from_json(j);
}

}  // namespace tbs
