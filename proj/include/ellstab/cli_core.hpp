#pragma once

// Command registry and dispatcher behind the CLI binary. Every public
// library operation is reachable from exactly one command; commands with
// several related operations select between them with an optional "op" key.

#include <functional>

#include "ellstab/generators.hpp"
#include "ellstab/json_io.hpp"
#include "ellstab/oracles.hpp"

namespace ellstab {

struct CommandInfo {
  std::string name;
  std::string anchor;                         // traceability tag echoed as paper_ref
  std::vector<std::string> ops;               // operations reachable through this command
  std::function<json(const json&)> handler;   // args -> result document
};

struct RunOutcome {
  json doc;
  int status = 0;  // 0 success, 1 domain error / failed verify, 2 malformed input
};

namespace detail {

inline std::string op_of(const json& a) {
  if (!a.is_object() || !a.contains("op")) return "";
  const json& o = a.at("op");
  if (!o.is_string()) throw SchemaError("op: expected a string");
  return o.get<std::string>();
}

[[noreturn]] inline void bad_op(const std::string& cmd, const std::string& op) {
  throw SchemaError("command \"" + cmd + "\" has no operation \"" + op + "\"");
}

inline RootDatum datum_arg(const json& a) { return root_datum_from_json(a); }

inline QContext qcontext_from_json(const json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : "";
  if (s == "real-split") return QContext::real_split;
  if (s == "nonarch-split") return QContext::nonarch_split;
  if (s == "compact") return QContext::compact;
  throw SchemaError("context: expected real-split, nonarch-split or compact");
}

inline json so_pair_to_json(const std::pair<SoClassParam, SoClassParam>& g) {
  return json::array({so_to_json(g.first), so_to_json(g.second)});
}

inline json commutant_pair_to_json(const CommutantPair& cp) {
  json pairs = json::array();
  for (const auto& ap : cp.pairs)
    pairs.push_back(json{{"g_atom", atom_to_json(ap.g_atom)},
                         {"h_atom", atom_to_json(ap.h_atom)},
                         {"inner_form", ap.inner_form}});
  return json{{"g_shape", shape_to_json(cp.g_shape)},
              {"h_shape", shape_to_json(cp.h_shape)},
              {"pairs", pairs},
              {"dims", json{{"w_plus", cp.w_plus}, {"v_prime_plus", cp.v_prime_plus},
                            {"w_minus", cp.w_minus}, {"v_second_plus", cp.v_second_plus}}}};
}

inline json cmd_endo_data(const json& a) {
  long n = long_from_json(require_field(a, "n"), "n");
  json out = json::array();
  for (const auto& d : enumerate_endo_data(static_cast<int>(n))) out.push_back(datum_to_json(d));
  return out;
}

inline json cmd_correspond(const json& a) {
  std::string op = op_of(a);
  if (op.empty()) {
    const json& gamma = require_field(a, "gamma");
    if (!gamma.is_array() || gamma.size() != 2)
      throw SchemaError("gamma: expected [SoParam, SoParam]");
    return sp_to_json(correspond(so_from_json(gamma.at(0)), so_from_json(gamma.at(1))));
  }
  if (op == "poly-reciprocal") return poly_to_json(poly_reciprocal(poly_from_json(require_field(a, "poly"))));
  if (op == "poly-self-reciprocal") return is_self_reciprocal(poly_from_json(require_field(a, "poly")));
  if (op == "poly-neg-arg") return poly_to_json(poly_neg_arg(poly_from_json(require_field(a, "poly"))));
  if (op == "validate-so") return report_to_json(validate_so(so_from_json(require_field(a, "param"))));
  bad_op("correspond", op);
}

inline json cmd_equising(const json& a) {
  std::string op = op_of(a);
  if (op.empty()) {
    const json& gamma = require_field(a, "gamma");
    if (!gamma.is_array() || gamma.size() != 2)
      throw SchemaError("gamma: expected [SoParam, SoParam]");
    EquiSingCheck chk = is_equi_singular(so_from_json(gamma.at(0)), so_from_json(gamma.at(1)));
    return json{{"value", chk.value}, {"witnesses", chk.witnesses}};
  }
  if (op == "irreducible") {
    Verdict v = is_irreducible_q(poly_from_json(require_field(a, "poly")));
    return v == Verdict::yes ? "yes" : v == Verdict::no ? "no" : "unknown";
  }
  if (op == "nonramified")
    return nonramified_pair_check(pair_from_json(require_field(a, "pair")),
                                  int_from_json(require_field(a, "p"), "p"));
  bad_op("equising", op);
}

inline json cmd_fiber(const json& a) {
  auto members = fiber(sp_from_json(require_field(a, "delta")),
                       datum_from_json(require_field(a, "datum")));
  json out = json::array();
  for (const auto& g : members) out.push_back(so_pair_to_json(g));
  return out;
}

inline json cmd_bijection(const json& a) {
  std::string op = op_of(a);
  if (op.empty() || op == "forward") {
    BijectionInput in;
    in.delta = sp_from_json(require_field(a, "delta"));
    if (a.contains("isecond")) in.isecond = index_list_from_json(a.at("isecond"), "isecond");
    if (a.contains("gl_second")) in.gl_second = index_list_from_json(a.at("gl_second"), "gl_second");
    BijectionImage img = bijection_forward(in);
    return json{{"pair", pair_to_json(img.pair)}, {"elliptic", img.elliptic}};
  }
  if (op == "inverse") {
    BijectionInput in = bijection_inverse(pair_from_json(require_field(a, "pair")));
    return json{{"delta", sp_to_json(in.delta)}, {"isecond", in.isecond},
                {"gl_second", in.gl_second}};
  }
  if (op == "validate-sp") return report_to_json(validate_sp(sp_from_json(require_field(a, "param"))));
  bad_op("bijection", op);
}

inline json cmd_kappa(const json& a) {
  KappaCharacter k = kappa_of(pair_from_json(require_field(a, "pair")));
  return json{{"sprime", k.sprime}, {"ssecond", k.ssecond}};
}

inline json cmd_iota(const json& a) {
  return rational_to_json(iota(datum_from_json(require_field(a, "datum"))));
}

inline json cmd_tamagawa(const json& a) {
  return rational_to_json(tamagawa(shape_from_json(require_field(a, "shape"))));
}

inline json cmd_commutants(const json& a) {
  std::string op = op_of(a);
  if (op.empty()) return commutant_pair_to_json(commutant_pair(pair_from_json(require_field(a, "pair"))));
  if (op == "sp") return shape_to_json(commutant_shape_sp(sp_from_json(require_field(a, "param"))));
  if (op == "so") return shape_to_json(commutant_shape_so(so_from_json(require_field(a, "param"))));
  if (op == "dim-q") {
    auto [dim, q] = dim_and_q(atom_kind_from_json(require_field(a, "kind")),
                              static_cast<int>(long_from_json(require_field(a, "n"), "n")),
                              qcontext_from_json(require_field(a, "context")));
    return json{{"dim", dim.str()}, {"q", rational_to_json(q)}};
  }
  bad_op("commutants", op);
}

inline json cmd_tvalue(const json& a) {
  return t_value(pair_from_json(require_field(a, "pair")));
}

inline json cmd_motive(const json& a) {
  std::string op = op_of(a);
  if (op.empty()) return motive_to_json(motive_of_shape(shape_from_json(require_field(a, "shape"))));
  if (op == "equal")
    return motive_equal(motive_from_json(require_field(a, "a")),
                        motive_from_json(require_field(a, "b")));
  bad_op("motive", op);
}

inline json cmd_point_count(const json& a) {
  Int q = int_from_json(require_field(a, "q"), "q");
  return point_count(atom_kind_from_json(require_field(a, "kind")),
                     static_cast<int>(long_from_json(require_field(a, "n"), "n")), q)
      .str();
}

inline json cmd_lfactor(const json& a) {
  return rational_to_json(local_L_dual1(motive_from_json(require_field(a, "motive")),
                                        int_from_json(require_field(a, "q"), "q")));
}

inline json cmd_hilbert(const json& a) {
  std::string op = op_of(a);
  if (op.empty())
    return hilbert(rational_from_json(require_field(a, "a")),
                   rational_from_json(require_field(a, "b")),
                   place_from_json(require_field(a, "v")));
  if (op == "legendre")
    return legendre(int_from_json(require_field(a, "a"), "a"),
                    int_from_json(require_field(a, "p"), "p"));
  bad_op("hilbert", op);
}

inline json cmd_delta0(const json& a) {
  std::string op = op_of(a);
  if (op.empty()) {
    std::vector<SignFactorInput> fs;
    const json& factors = require_field(a, "factors");
    if (!factors.is_array()) throw SchemaError("factors: expected an array");
    for (const auto& e : factors) fs.push_back(sign_factor_from_json(e));
    return delta_zero(poly_from_json(require_field(a, "eigenpoly")), fs,
                      static_cast<int>(long_from_json(require_field(a, "nprime"), "nprime")),
                      rational_from_json(require_field(a, "det")),
                      place_from_json(require_field(a, "v")));
  }
  if (op == "sgn")
    return sgn_quadext(int_from_json(require_field(a, "d"), "d"),
                       rational_from_json(require_field(a, "x")),
                       place_from_json(require_field(a, "v")));
  if (op == "eval") {
    PolyQ p = poly_from_json(require_field(a, "poly"));
    const json& x = require_field(a, "x");
    if (x.is_object()) return quad_to_json(poly_eval(p, quad_from_json(x)));
    return rational_to_json(poly_eval(p, rational_from_json(x)));
  }
  if (op == "char-poly") {
    const json& param = require_field(a, "param");
    std::string group = require_field(param, "group").get<std::string>();
    if (group == "Sp") return factored_to_json(char_poly(sp_from_json(param)));
    if (group == "SO") return factored_to_json(char_poly(so_from_json(param)));
    throw SchemaError("param.group: expected Sp or SO");
  }
  bad_op("delta0", op);
}

inline json cmd_theta(const json& a) {
  std::string op = op_of(a);
  if (op.empty())
    return rational_to_json(theta_minus_one(long_from_json(require_field(a, "n"), "n"),
                                            place_from_json(require_field(a, "v"))));
  if (op == "abs-norm")
    return rational_to_json(abs_norm(rational_from_json(require_field(a, "x")),
                                     place_from_json(require_field(a, "v"))));
  if (op == "two-power")
    return rational_to_json(two_power_product(long_from_json(require_field(a, "t"), "t")));
  bad_op("theta", op);
}

inline json cmd_roots(const json& a) {
  std::string op = op_of(a);
  RootDatum rd = datum_arg(a);
  if (op.empty()) {
    json out = json::array();
    for (const auto& r : positive_roots(rd)) out.push_back(weight_to_json(r));
    return out;
  }
  if (op == "exponents") return exponents(rd);
  if (op == "weyl-order") return weyl_order(rd).str();
  bad_op("roots", op);
}

inline json cmd_rho(const json& a) { return weight_to_json(rho(datum_arg(a))); }

inline json cmd_varpi(const json& a) {
  std::string op = op_of(a);
  RootDatum rd = datum_arg(a);
  if (op.empty())
    return rational_to_json(varpi_eval(rd, weight_from_json(require_field(a, "lambda"))));
  if (op == "coroot")
    return weight_to_json(coroot_btr(weight_from_json(require_field(a, "alpha")), rd));
  bad_op("varpi", op);
}

inline json cmd_lemma2n(const json& a) {
  auto [r1, r2] = lemma_2n_ratios(static_cast<int>(long_from_json(require_field(a, "n"), "n")));
  return json::array({rational_to_json(r1), rational_to_json(r2)});
}

inline json cmd_steinberg(const json& a) {
  return rational_to_json(steinberg_rho_value(datum_arg(a)));
}

inline json cmd_discriminant(const json& a) {
  std::string op = op_of(a);
  if (op.empty()) {
    const json& tj = require_field(a, "t");
    if (!tj.is_array()) throw SchemaError("t: expected an array of rationals");
    std::vector<Rational> t;
    for (const auto& e : tj) t.push_back(rational_from_json(e));
    DiscriminantRatio r =
        discriminant_ratio(static_cast<int>(long_from_json(require_field(a, "n"), "n")), t);
    return json{{"value", rational_to_json(r.value)}, {"is_limit", r.is_limit}};
  }
  if (op == "weyl") {
    RootDatum rd = datum_arg(a);
    const json& tj = require_field(a, "t");
    if (!tj.is_array()) throw SchemaError("t: expected an array of rationals");
    std::vector<Rational> t;
    for (const auto& e : tj) t.push_back(rational_from_json(e));
    return rational_to_json(weyl_discriminant(rd, t));
  }
  if (op == "germ") {
    if (require_field(a, "unipotent").get<std::string>() != "identity")
      throw SchemaError("unipotent: only the identity class is supported");
    return germ_exponent(shape_from_json(require_field(a, "shape")), UnipotentClass::identity);
  }
  bad_op("discriminant", op);
}

inline json cmd_verify(const json& a) {
  std::string op = op_of(a);
  if (op == "sign-ledger")
    return sign_ledger(rational_from_json(require_field(a, "q1")),
                       rational_from_json(require_field(a, "q2")),
                       static_cast<int>(long_from_json(require_field(a, "e1"), "e1")),
                       static_cast<int>(long_from_json(require_field(a, "e2"), "e2")));
  if (!op.empty()) bad_op("verify", op);
  std::string suite = a.contains("suite") ? require_field(a, "suite").get<std::string>() : "all";
  int nmax = a.contains("nmax")
                 ? static_cast<int>(long_from_json(a.at("nmax"), "nmax"))
                 : 4;
  uint64_t seed = a.contains("seed")
                      ? static_cast<uint64_t>(long_from_json(a.at("seed"), "seed"))
                      : 7;
  return verify_report_to_json(verify(suite, nmax, seed));
}

}  // namespace detail

inline const std::vector<CommandInfo>& command_registry() {
  static const std::vector<CommandInfo> registry = {
      {"endo-data", "endoscopic-data",
       {"enumerate_endo_data"}, detail::cmd_endo_data},
      {"correspond", "endoscopic-correspondence",
       {"correspond", "poly_reciprocal", "is_self_reciprocal", "poly_neg_arg", "validate_so"},
       detail::cmd_correspond},
      {"equising", "equi-singular-classes",
       {"is_equi_singular", "is_irreducible_q", "nonramified_pair_check"}, detail::cmd_equising},
      {"fiber", "correspondence-fibers", {"fiber"}, detail::cmd_fiber},
      {"bijection", "delta-kappa-parametrization",
       {"bijection_forward", "bijection_inverse", "validate_sp"}, detail::cmd_bijection},
      {"kappa", "kappa-character", {"kappa_of"}, detail::cmd_kappa},
      {"iota", "stabilization-coefficients", {"iota"}, detail::cmd_iota},
      {"tamagawa", "tamagawa-numbers", {"tamagawa"}, detail::cmd_tamagawa},
      {"commutants", "centralizer-decomposition",
       {"commutant_pair", "commutant_shape_sp", "commutant_shape_so", "dim_and_q"},
       detail::cmd_commutants},
      {"tvalue", "central-multiplicity-invariant", {"t_value"}, detail::cmd_tvalue},
      {"motive", "group-motive", {"motive_of_shape", "motive_equal"}, detail::cmd_motive},
      {"point-count", "finite-point-enumeration", {"point_count"}, detail::cmd_point_count},
      {"lfactor", "motive-measure-identity", {"local_L_dual1"}, detail::cmd_lfactor},
      {"hilbert", "hilbert-symbol-table", {"hilbert", "legendre"}, detail::cmd_hilbert},
      {"delta0", "transfer-sign-factor",
       {"delta_zero", "sgn_quadext", "poly_eval", "char_poly"}, detail::cmd_delta0},
      {"theta", "theta-constant",
       {"theta_minus_one", "abs_norm", "two_power_product"}, detail::cmd_theta},
      {"roots", "positive-root-systems",
       {"positive_roots", "exponents", "weyl_order"}, detail::cmd_roots},
      {"rho", "half-sum-positive-roots", {"rho"}, detail::cmd_rho},
      {"varpi", "weyl-element-ratio", {"varpi_eval", "coroot_btr"}, detail::cmd_varpi},
      {"lemma2n", "weyl-element-ratio", {"lemma_2n_ratios"}, detail::cmd_lemma2n},
      {"steinberg", "steinberg-constant", {"steinberg_rho_value"}, detail::cmd_steinberg},
      {"discriminant", "torus-discriminant-ratio",
       {"discriminant_ratio", "weyl_discriminant", "germ_exponent"}, detail::cmd_discriminant},
      {"verify", "invariant-suites", {"verify", "sign_ledger"}, detail::cmd_verify},
  };
  return registry;
}

inline const CommandInfo* find_command(const std::string& name) {
  for (const auto& c : command_registry())
    if (c.name == name) return &c;
  return nullptr;
}

inline RunOutcome run(const std::string& command, const json& args) {
  const CommandInfo* cmd = find_command(command);
  if (!cmd)
    return {json{{"ok", false}, {"error", "unknown command \"" + command + "\""},
                 {"paper_ref", "command-registry"}},
            2};
  try {
    json result = cmd->handler(args);
    RunOutcome out{json{{"ok", true}, {"result", result}, {"paper_ref", cmd->anchor}}, 0};
    if (command == "verify" && result.is_object() && result.contains("all_pass") &&
        !result.at("all_pass").get<bool>()) {
      out.doc["ok"] = false;
      out.status = 1;
    }
    return out;
  } catch (const SchemaError& e) {
    return {json{{"ok", false}, {"error", e.what()}, {"paper_ref", cmd->anchor}}, 2};
  } catch (const json::exception& e) {
    return {json{{"ok", false}, {"error", e.what()}, {"paper_ref", cmd->anchor}}, 2};
  } catch (const std::exception& e) {
    return {json{{"ok", false}, {"error", e.what()}, {"paper_ref", cmd->anchor}}, 1};
  }
}

}  // namespace ellstab
