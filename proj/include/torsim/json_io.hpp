#pragma once

/**
 * @file json_io.hpp
 * @brief Strict JSON parsing and serialisation of rings, modules,
 * representations, ideals and matrices.
 *
 * Integers of absolute value at least 2^53 are written as decimal strings;
 * either form is accepted on input. Unknown object fields are rejected.
 */

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

#include "torsim/finmod.hpp"
#include "torsim/mccoy.hpp"
#include "torsim/quiver.hpp"

namespace torsim {

using Json = nlohmann::ordered_json;

namespace json {

inline void require_object(const Json& j, const std::string& what) {
  if (!j.is_object()) throw InputError(what + " must be a JSON object");
}

/// Rejects fields outside required + optional and missing required fields.
inline void check_fields(const Json& j, const std::string& what, std::initializer_list<const char*> required,
                         std::initializer_list<const char*> optional = {}) {
  require_object(j, what);
  std::set<std::string> allowed;
  for (auto r : required) {
    allowed.insert(r);
    if (!j.contains(r)) throw InputError(what + " is missing the field \"" + r + "\"");
  }
  for (auto o : optional) allowed.insert(o);
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw InputError(what + " has an unknown field \"" + it.key() + "\"");
}

inline Integer to_integer(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InputError(what + " must be an integer or a decimal string");
}

inline Json from_integer(const Integer& v) {
  static const Integer limit = Integer(1) << 53;
  if (abs_value(v) < limit) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

inline std::size_t to_size(const Json& j, const std::string& what) {
  Integer v = to_integer(j, what);
  if (v < 0 || v > Integer(1u << 30)) throw InputError(what + " out of range");
  return static_cast<std::size_t>(v);
}

inline std::string to_string(const Json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + " must be a string");
  return j.get<std::string>();
}

inline const Json& to_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  return j;
}

// ---------------------------------------------------------------------------
// Rings
// ---------------------------------------------------------------------------

inline RingPtr parse_ring(const Json& j) {
  require_object(j, "ring");
  if (!j.contains("kind")) throw InputError("ring is missing the field \"kind\"");
  std::string kind = to_string(j["kind"], "ring kind");
  if (kind == "Z" || kind == "Integers") {
    check_fields(j, "ring", {"kind"});
    return Ring::integers();
  }
  if (kind == "Zmod" || kind == "IntegersMod") {
    check_fields(j, "ring", {"kind", "n"});
    return Ring::integers_mod(to_integer(j["n"], "n"));
  }
  if (kind == "Fp" || kind == "PrimeField") {
    check_fields(j, "ring", {"kind", "p"});
    return Ring::prime_field(to_integer(j["p"], "p"));
  }
  auto var_of = [&](char fallback) {
    if (!j.contains("var")) return fallback;
    std::string v = to_string(j["var"], "var");
    if (v.size() != 1 || (v[0] != 'x' && v[0] != 'y' && v[0] != 't')) throw InputError("var must be one of x, y, t");
    return v[0];
  };
  if (kind == "UniPoly") {
    check_fields(j, "ring", {"kind", "p"}, {"var"});
    return Ring::uni_poly(to_integer(j["p"], "p"), var_of('x'));
  }
  if (kind == "UniPolyQuot") {
    check_fields(j, "ring", {"kind", "p", "f"}, {"var"});
    Integer p = to_integer(j["p"], "p");
    if (!is_prime(p)) throw InputError("UniPolyQuot needs a prime p");
    std::string text = to_string(j["f"], "f");
    char seen = 0;
    detail::parse_poly_terms(text, false, seen);
    char want = var_of(seen == 0 ? 'x' : seen);
    if (seen != 0 && seen != want) throw InputError("f uses a different variable than var");
    char unused = 0;
    auto f = parse_upoly(text, p, unused);
    return Ring::uni_poly_quot(p, f, want);
  }
  if (kind == "BiPolyMonomialQuot") {
    check_fields(j, "ring", {"kind", "p"}, {"rels"});
    std::vector<Monomial> rels;
    if (j.contains("rels"))
      for (const auto& r : to_array(j["rels"], "rels")) rels.push_back(parse_monomial(to_string(r, "relation")));
    return Ring::bi_poly(to_integer(j["p"], "p"), rels);
  }
  throw InputError("unknown ring kind \"" + kind + "\"");
}

inline Json ring_json(const Ring& r) {
  Json j;
  switch (r.kind()) {
    case RingKind::Integers:
      j["kind"] = "Z";
      break;
    case RingKind::IntegersMod:
      j["kind"] = "Zmod";
      j["n"] = from_integer(r.modulus());
      break;
    case RingKind::PrimeField:
      j["kind"] = "Fp";
      j["p"] = from_integer(r.modulus());
      break;
    case RingKind::UniPoly:
      j["kind"] = "UniPoly";
      j["p"] = r.p();
      j["var"] = std::string(1, r.variable());
      break;
    case RingKind::UniPolyQuot:
      j["kind"] = "UniPolyQuot";
      j["p"] = r.p();
      j["f"] = r.poly_string(r.modulus_poly());
      j["var"] = std::string(1, r.variable());
      break;
    case RingKind::BiPolyMonomialQuot: {
      j["kind"] = "BiPolyMonomialQuot";
      j["p"] = r.p();
      Json rels = Json::array();
      for (const auto& m : r.relations()) rels.push_back(to_string(m));
      j["rels"] = rels;
      break;
    }
  }
  return j;
}

// ---------------------------------------------------------------------------
// Modules
// ---------------------------------------------------------------------------

inline IntMatrix parse_int_matrix(const Json& j, std::size_t rows, const std::string& what) {
  to_array(j, what);
  if (j.empty()) return IntMatrix(rows, 0);
  if (j.size() != rows)
    throw InputError(what + " has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  std::vector<std::vector<Integer>> out;
  for (const auto& row : j) {
    std::vector<Integer> r;
    for (const auto& v : to_array(row, what + " row")) r.push_back(to_integer(v, what + " entry"));
    out.push_back(std::move(r));
  }
  return IntMatrix::from_rows(out);
}

inline Json int_matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(from_integer(m(i, k)));
    rows.push_back(r);
  }
  return rows;
}

inline PresentedModule parse_module(const Json& j) {
  check_fields(j, "module", {"ring", "generators"}, {"relations"});
  RingPtr ring = parse_ring(j["ring"]);
  std::size_t g = to_size(j["generators"], "generators");
  IntMatrix rel = j.contains("relations") ? parse_int_matrix(j["relations"], g, "relations") : IntMatrix(g, 0);
  return PresentedModule(ring, g, rel);
}

inline Json module_json(const PresentedModule& M) {
  Json j;
  j["ring"] = ring_json(*M.ring());
  j["generators"] = M.generators();
  j["relations"] = M.relations().cols() ? int_matrix_json(M.relations()) : Json::array();
  return j;
}

inline Json vector_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(from_integer(x));
  return a;
}

inline Json decomposition_json(const Decomposition& d) {
  Json j;
  j["free_rank"] = d.free_rank;
  j["invariant_factors"] = vector_json(d.invariant_factors);
  j["text"] = d.to_string();
  return j;
}

inline Json subobject_json(const Subobject& w) {
  Json j;
  Json basis = Json::array();
  for (const auto& row : w.canonical_basis()) basis.push_back(vector_json(row));
  j["lattice_basis"] = basis;
  auto d = canonical_decomposition(submodule_as_module(w));
  j["order"] = d.is_finite() ? from_integer(d.order()) : Json("infinite");
  j["isomorphism_type"] = d.to_string();
  return j;
}

inline Json prime_set_json(const PrimeSet& s) {
  Json j;
  j["primes"] = vector_json(s.primes);
  j["includes_zero"] = s.includes_zero;
  j["text"] = s.to_string();
  return j;
}

// ---------------------------------------------------------------------------
// Quiver representations
// ---------------------------------------------------------------------------

inline fp::Mat parse_fp_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  to_array(j, what);
  if (j.empty() && (rows == 0 || cols == 0)) return fp::Mat(rows, cols);
  if (j.size() != rows) throw InputError(what + " needs " + std::to_string(rows) + " rows");
  fp::Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = to_array(j[i], what + " row");
    if (row.size() != cols) throw InputError(what + " needs " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) {
      Integer v = to_integer(row[c], what + " entry");
      if (!fits_int64(v)) throw InputError(what + " entry out of range");
      m(i, c) = static_cast<Residue>(v);
    }
  }
  return m;
}

inline Json fp_matrix_json(const fp::Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) r.push_back(m(i, c));
    rows.push_back(r);
  }
  return rows;
}

inline QuiverRep parse_rep(const Json& j) {
  check_fields(j, "representation", {"quiver", "p", "dims", "maps"});
  const Json& q = j["quiver"];
  check_fields(q, "quiver", {"vertices", "arrows"});
  std::size_t nv = to_size(q["vertices"], "vertices");
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  for (const auto& a : to_array(q["arrows"], "arrows")) {
    if (!a.is_array() || a.size() != 2) throw InputError("each arrow is a [source, target] pair");
    arrows.push_back({to_size(a[0], "arrow source"), to_size(a[1], "arrow target")});
  }
  Quiver quiver(nv, arrows);
  Integer p = to_integer(j["p"], "p");
  if (!is_prime(p) || p >= (Integer(1) << 31)) throw InputError("p must be a prime below 2^31");
  std::vector<std::size_t> dims;
  for (const auto& d : to_array(j["dims"], "dims")) dims.push_back(to_size(d, "dimension"));
  if (dims.size() != nv) throw InputError("dims needs one entry per vertex");
  const auto& maps = to_array(j["maps"], "maps");
  if (maps.size() != arrows.size()) throw InputError("maps needs one matrix per arrow");
  std::vector<fp::Mat> mats;
  for (std::size_t a = 0; a < arrows.size(); ++a)
    mats.push_back(parse_fp_matrix(maps[a], dims[arrows[a].second], dims[arrows[a].first], "map of arrow " + std::to_string(a)));
  return QuiverRep(quiver, static_cast<Residue>(p), dims, mats);
}

inline Json rep_json(const QuiverRep& X) {
  Json j;
  Json arrows = Json::array();
  for (auto [s, t] : X.quiver().arrows()) arrows.push_back(Json::array({s, t}));
  j["quiver"] = Json{{"vertices", X.quiver().vertex_count()}, {"arrows", arrows}};
  j["p"] = X.p();
  j["dims"] = X.dims();
  Json maps = Json::array();
  for (const auto& m : X.maps()) maps.push_back(fp_matrix_json(m));
  j["maps"] = maps;
  return j;
}

inline Json subrep_json(const SubRep& s) {
  Json j;
  j["dims"] = s.dims();
  Json spaces = Json::array();
  for (const auto& m : s.spaces) spaces.push_back(fp_matrix_json(m));
  j["bases"] = spaces;
  return j;
}

// ---------------------------------------------------------------------------
// Ideals and ring matrices
// ---------------------------------------------------------------------------

inline IdealSpec parse_ideal(const RingPtr& ring, const Json& j) {
  std::vector<RingElem> gens;
  for (const auto& g : to_array(j, "ideal")) {
    std::string s = g.is_string() ? g.get<std::string>() : to_integer(g, "ideal generator").str();
    gens.push_back(parse_element(ring, s));
  }
  return IdealSpec(ring, gens);
}

inline Json ideal_json(const IdealSpec& I) {
  Json a = Json::array();
  for (const auto& g : I.generators()) a.push_back(g.to_string());
  return a;
}

inline RingMatrix parse_ring_matrix(const RingPtr& ring, const Json& j) {
  to_array(j, "matrix");
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : j) {
    std::vector<std::string> r;
    for (const auto& v : to_array(row, "matrix row"))
      r.push_back(v.is_string() ? v.get<std::string>() : to_integer(v, "matrix entry").str());
    rows.push_back(std::move(r));
  }
  return RingMatrix::parse(ring, rows);
}

inline Json ring_matrix_json(const RingMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.to_strings()) rows.push_back(r);
  return rows;
}

inline Json elements_json(const std::vector<RingElem>& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back(e.to_string());
  return a;
}

}  // namespace json
}  // namespace torsim
