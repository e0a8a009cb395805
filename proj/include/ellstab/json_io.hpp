#pragma once

// JSON encodings for every library type crossing the CLI boundary. Malformed
// documents raise SchemaError (CLI exit 2); domain violations inside the
// library raise the usual logic/domain exceptions (CLI exit 1).

#include <json.hpp>

#include "ellstab/localsym.hpp"
#include "ellstab/motive.hpp"
#include "ellstab/verify.hpp"

namespace ellstab {

using nlohmann::json;

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline const json& require_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

// ---- scalars ----

inline Int int_from_json(const json& j, const char* what) {
  try {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
  } catch (const std::exception&) {
    // fall through to the schema error below
  }
  throw SchemaError(std::string(what) + ": expected an integer or integer string");
}

inline long long_from_json(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw SchemaError(std::string(what) + ": expected an integer");
  return j.get<long>();
}

inline Rational rational_from_json(const json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
      Rational r(j.get<std::string>());
      return r;
    }
  } catch (const std::exception&) {
    // fall through
  }
  throw SchemaError("expected a rational as \"num/den\" string or integer");
}

inline json rational_to_json(const Rational& q) { return q.str(); }

// ---- polynomials ----

inline PolyQ poly_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("polynomial: expected an array of coefficient strings");
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return PolyQ(c);
}

inline json poly_to_json(const PolyQ& p) {
  json a = json::array();
  for (const auto& co : p.c) a.push_back(rational_to_json(co));
  return a;
}

inline json factored_to_json(const FactoredPoly& fp) {
  json a = json::array();
  for (const auto& [p, m] : fp) a.push_back(json{{"poly", poly_to_json(p)}, {"mult", m}});
  return a;
}

// ---- class parameters ----

inline UnitaryFactor factor_from_json(const json& j) {
  PolyQ p = poly_from_json(require_field(j, "poly"));
  long rank = long_from_json(require_field(j, "rank"), "factor rank");
  UnitaryFactor f = make_factor(p, static_cast<int>(rank));
  if (j.contains("kind")) {
    std::string k = j.at("kind").is_string() ? j.at("kind").get<std::string>() : "";
    if (k != "field" && k != "split") throw SchemaError("factor kind: expected \"field\" or \"split\"");
    if ((k == "field") != (f.kind == FactorKind::field))
      throw SchemaError("factor kind does not match the polynomial's reciprocal symmetry");
  }
  return f;
}

inline json factor_to_json(const UnitaryFactor& f) {
  return json{{"kind", f.kind == FactorKind::field ? "field" : "split"},
              {"poly", poly_to_json(f.poly)},
              {"rank", f.rank}};
}

inline std::vector<UnitaryFactor> factors_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("factors: expected an array");
  std::vector<UnitaryFactor> fs;
  for (const auto& e : j) fs.push_back(factor_from_json(e));
  return fs;
}

inline SpClassParam sp_from_json(const json& j) {
  if (require_field(j, "group").get<std::string>() != "Sp")
    throw SchemaError("group: expected \"Sp\"");
  SpClassParam p;
  p.n = static_cast<int>(long_from_json(require_field(j, "n"), "n"));
  if (j.contains("factors")) p.factors = factors_from_json(j.at("factors"));
  sort_factors(p.factors);
  p.dim_plus = j.contains("dim_plus") ? long_from_json(j.at("dim_plus"), "dim_plus") : 0;
  p.dim_minus = j.contains("dim_minus") ? long_from_json(j.at("dim_minus"), "dim_minus") : 0;
  return p;
}

inline SoClassParam so_from_json(const json& j) {
  if (require_field(j, "group").get<std::string>() != "SO")
    throw SchemaError("group: expected \"SO\"");
  SoClassParam p;
  p.size = static_cast<int>(long_from_json(require_field(j, "size"), "size"));
  if (j.contains("factors")) p.factors = factors_from_json(j.at("factors"));
  sort_factors(p.factors);
  p.dim_plus = j.contains("dim_plus") ? long_from_json(j.at("dim_plus"), "dim_plus") : 1;
  p.dim_minus = j.contains("dim_minus") ? long_from_json(j.at("dim_minus"), "dim_minus") : 0;
  return p;
}

inline json sp_to_json(const SpClassParam& p) {
  json fs = json::array();
  for (const auto& f : p.factors) fs.push_back(factor_to_json(f));
  return json{{"group", "Sp"}, {"n", p.n}, {"factors", fs},
              {"dim_plus", p.dim_plus}, {"dim_minus", p.dim_minus}};
}

inline json so_to_json(const SoClassParam& p) {
  json fs = json::array();
  for (const auto& f : p.factors) fs.push_back(factor_to_json(f));
  return json{{"group", "SO"}, {"size", p.size}, {"factors", fs},
              {"dim_plus", p.dim_plus}, {"dim_minus", p.dim_minus}};
}

inline json report_to_json(const ValidationReport& r) {
  return json{{"valid", r.valid}, {"violations", r.violations}, {"warnings", r.warnings}};
}

// ---- endoscopic data ----

inline EndoDatum datum_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw SchemaError("datum: expected [n1, n2]");
  return {static_cast<int>(long_from_json(j.at(0), "datum[0]")),
          static_cast<int>(long_from_json(j.at(1), "datum[1]"))};
}

inline json datum_to_json(const EndoDatum& d) { return json::array({d.nprime, d.nsecond}); }

inline std::vector<size_t> index_list_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + ": expected an array of indices");
  std::vector<size_t> out;
  for (const auto& e : j) {
    long v = long_from_json(e, what);
    if (v < 0) throw SchemaError(std::string(what) + ": indices must be nonnegative");
    out.push_back(static_cast<size_t>(v));
  }
  return out;
}

inline EquiSingPair pair_from_json(const json& j) {
  const json& gamma = require_field(j, "gamma");
  if (!gamma.is_array() || gamma.size() != 2)
    throw SchemaError("gamma: expected [SoParam, SoParam]");
  EndoDatum d = datum_from_json(require_field(j, "datum"));
  EquiSingPair pair = build_pair(d, so_from_json(gamma.at(0)), so_from_json(gamma.at(1)));
  if (j.contains("delta")) {
    SpClassParam delta = sp_from_json(j.at("delta"));
    sort_factors(delta.factors);
    if (!(delta == pair.delta))
      throw SchemaError("delta does not match the correspondence of gamma");
  }
  return pair;
}

inline json pair_to_json(const EquiSingPair& p) {
  return json{{"datum", datum_to_json(p.datum)},
              {"gamma", json::array({so_to_json(p.gamma_prime), so_to_json(p.gamma_second)})},
              {"delta", sp_to_json(p.delta)},
              {"split", json{{"iprime", p.iprime}, {"isecond", p.isecond}}}};
}

// ---- shapes, motives ----

inline const char* atom_kind_name(AtomKind k) {
  switch (k) {
    case AtomKind::Sp: return "Sp";
    case AtomKind::SO_odd: return "SO";
    case AtomKind::GL: return "GL";
    default: return "U";
  }
}

inline AtomKind atom_kind_from_json(const json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : "";
  if (s == "Sp") return AtomKind::Sp;
  if (s == "SO") return AtomKind::SO_odd;
  if (s == "GL") return AtomKind::GL;
  if (s == "U") return AtomKind::U;
  throw SchemaError("atom kind: expected one of Sp, SO, GL, U");
}

inline Atom atom_from_json(const json& j) {
  Atom a;
  a.kind = atom_kind_from_json(require_field(j, "kind"));
  a.size = static_cast<int>(long_from_json(require_field(j, "size"), "atom size"));
  if (j.contains("base")) a.base = poly_from_json(j.at("base"));
  return a;
}

inline json atom_to_json(const Atom& a) {
  json o{{"kind", atom_kind_name(a.kind)}, {"size", a.size}};
  if (!a.base.is_zero()) o["base"] = poly_to_json(a.base);
  return o;
}

inline GroupShape shape_from_json(const json& j) {
  GroupShape s;
  const json& atoms = require_field(j, "atoms");
  if (!atoms.is_array()) throw SchemaError("atoms: expected an array");
  for (const auto& e : atoms) s.atoms.push_back(atom_from_json(e));
  if (j.contains("orthogonal_block")) {
    s.so_minus_caveat = true;
    s.so_minus_dim = long_from_json(j.at("orthogonal_block"), "orthogonal_block");
  }
  return s;
}

inline json shape_to_json(const GroupShape& s) {
  json atoms = json::array();
  for (const auto& a : s.atoms) atoms.push_back(atom_to_json(a));
  json o{{"atoms", atoms}};
  if (s.so_minus_caveat) o["orthogonal_block"] = s.so_minus_dim;
  return o;
}

inline TateMotive motive_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("motive: expected an array of summands");
  TateMotive m;
  for (const auto& e : j) {
    if (e.contains("twist")) {
      m.summands.push_back({static_cast<int>(long_from_json(e.at("twist"), "twist")), false, 0, PolyQ()});
    } else if (e.contains("label")) {
      const json& l = e.at("label");
      MotiveSummand s;
      s.opaque = true;
      s.label_size = static_cast<int>(long_from_json(require_field(l, "size"), "label size"));
      s.label_base = poly_from_json(require_field(l, "base"));
      m.summands.push_back(std::move(s));
    } else {
      throw SchemaError("motive summand: expected \"twist\" or \"label\"");
    }
  }
  canonicalize(m);
  return m;
}

inline json motive_to_json(const TateMotive& m) {
  json a = json::array();
  for (const auto& s : m.summands) {
    if (s.opaque)
      a.push_back(json{{"label", json{{"size", s.label_size}, {"base", poly_to_json(s.label_base)}}}});
    else
      a.push_back(json{{"twist", s.exponent}});
  }
  return a;
}

// ---- root systems ----

inline RootDatum root_datum_from_json(const json& j) {
  std::string fam = require_field(j, "family").get<std::string>();
  int n = static_cast<int>(long_from_json(require_field(j, "n"), "n"));
  if (fam == "A") return {Family::A, n};
  if (fam == "B") return {Family::B, n};
  if (fam == "C") return {Family::C, n};
  throw SchemaError("family: expected one of A, B, C");
}

inline Weight weight_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("weight: expected an array of rationals");
  Weight w;
  for (const auto& e : j) w.coords.push_back(rational_from_json(e));
  return w;
}

inline json weight_to_json(const Weight& w) {
  json a = json::array();
  for (const auto& c : w.coords) a.push_back(rational_to_json(c));
  return a;
}

// ---- places, quadratic elements, sign factors ----

inline PlaceQ place_from_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf" || s == "infinity" || s == "real") return place_infinite();
    return place_finite(int_from_json(j, "place"));
  }
  if (j.is_number_integer()) return place_finite(int_from_json(j, "place"));
  throw SchemaError("place: expected \"inf\" or a prime");
}

inline json place_to_json(const PlaceQ& v) {
  return v.infinite ? json("inf") : json(v.p.str());
}

inline QuadElem quad_from_json(const json& j) {
  QuadElem q;
  q.a = rational_from_json(require_field(j, "a"));
  if (j.contains("b")) q.b = rational_from_json(j.at("b"));
  if (j.contains("d")) q.d = int_from_json(j.at("d"), "d");
  return q;
}

inline json quad_to_json(const QuadElem& q) {
  return json{{"a", rational_to_json(q.a)}, {"b", rational_to_json(q.b)}, {"d", q.d.str()}};
}

inline SignFactorInput sign_factor_from_json(const json& j) {
  SignFactorInput f;
  if (j.contains("split") && j.at("split").is_boolean() && j.at("split").get<bool>()) {
    f.split = true;
    return f;
  }
  f.split = false;
  f.d = int_from_json(require_field(j, "d"), "d");
  f.a = quad_from_json(require_field(j, "a"));
  if (f.a.d == 1 && f.a.b != 0) f.a.d = f.d;
  return f;
}

// ---- verification reports ----

inline json check_to_json(const CheckResult& c) {
  return json{{"name", c.name}, {"paper_ref", c.anchor}, {"pass", c.pass}, {"detail", c.detail}};
}

inline json verify_report_to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  return json{{"suite", r.suite}, {"nmax", r.nmax}, {"seed", r.seed},
              {"all_pass", r.all_pass()}, {"checks", checks}};
}

}  // namespace ellstab
