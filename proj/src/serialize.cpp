#include "qlsmodcat/serialize.hpp"

#include <regex>
#include <sstream>

#include "qlsmodcat/errors.hpp"

namespace qlsmodcat {

namespace detail {
extern const char* const kInputSchema;
}

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::ParseError, (path.empty() ? "/" : path) + ": " + msg);
}

Rational rational_from_string(const std::string& s, const std::string& path) {
  static const std::regex re("^-?[0-9]+(/[0-9]+)?$");
  if (!std::regex_match(s, re)) parse_fail(path, "'" + s + "' is not a rational number");
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) parse_fail(path, "'" + s + "' is not a rational number");
  q.canonicalize();
  return q;
}

const Json& at(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) parse_fail(path, std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) parse_fail(path, "expected an integer");
  return j.get<int>();
}

std::vector<int> int_list(const Json& j, const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], path + "/" + std::to_string(i)));
  return out;
}

int group_index(const AbelianGroup& G, const Json& j, const std::string& path) {
  const auto e = int_list(j, path);
  if (static_cast<int>(e.size()) != G.rank())
    parse_fail(path, "expected " + std::to_string(G.rank()) + " exponents");
  return G.index(e);
}

Json exps_json(const AbelianGroup& G, int idx) { return Json(G.exps(idx)); }

std::vector<Vec> basis_from_json(const Json& j, int theta, const std::string& path) {
  std::vector<Vec> out;
  if (!j.is_array()) parse_fail(path, "expected an array of vectors");
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = path + "/" + std::to_string(k);
    if (j[k].is_number_integer()) {
      const int i = j[k].get<int>();
      if (i < 1 || i > theta) parse_fail(p, "coordinate index out of range 1.." + std::to_string(theta));
      out.push_back(Vec::unit(static_cast<std::size_t>(i - 1)));
      continue;
    }
    if (!j[k].is_array() || static_cast<int>(j[k].size()) != theta)
      parse_fail(p, "expected a coordinate index or " + std::to_string(theta) + " scalars");
    Vec v;
    for (int i = 0; i < theta; ++i) {
      const CycloNumber c = scalar_from_json(j[k][i], p + "/" + std::to_string(i));
      if (!c.is_zero()) v.push_back(static_cast<std::size_t>(i), c);
    }
    if (v.empty()) parse_fail(p, "zero vector");
    out.push_back(std::move(v));
  }
  return out;
}

Json basis_to_json(const std::vector<Vec>& W, int theta) {
  Json out = Json::array();
  for (const auto& w : W) {
    if (w.nnz() == 1 && w.leading_value().is_one()) {
      out.push_back(static_cast<int>(w.leading()) + 1);
      continue;
    }
    Json row = Json::array();
    for (int i = 0; i < theta; ++i) row.push_back(scalar_to_json(w.get(static_cast<std::size_t>(i))));
    out.push_back(std::move(row));
  }
  return out;
}

int basis_theta(const std::vector<Vec>& W) {
  int t = 0;
  for (const auto& w : W)
    for (const auto& [i, c] : w) t = std::max(t, static_cast<int>(i) + 1);
  return t;
}

std::vector<Vec> vec_list(const Json& j, const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected an array");
  std::vector<Vec> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vec_from_json(j[i], path + "/" + std::to_string(i)));
  return out;
}

Json vec_list_json(const std::vector<Vec>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(vec_to_json(x));
  return out;
}

std::string type_of(const Json& j) {
  if (j.is_null()) return "null";
  if (j.is_boolean()) return "boolean";
  if (j.is_number_integer()) return "integer";
  if (j.is_number()) return "number";
  if (j.is_string()) return "string";
  if (j.is_array()) return "array";
  return "object";
}

bool type_matches(const Json& j, const std::string& t) {
  const std::string a = type_of(j);
  return a == t || (t == "number" && a == "integer");
}

std::optional<std::string> check(const Json& inst, const Json& schema, const Json& root, const std::string& ptr) {
  if (schema.contains("$ref")) {
    const std::string ref = schema["$ref"];
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) return ptr + ": unsupported $ref " + ref;
    return check(inst, root.at("definitions").at(ref.substr(prefix.size())), root, ptr);
  }
  const std::string here = ptr.empty() ? "/" : ptr;
  if (schema.contains("oneOf")) {
    int matched = 0;
    std::string last;
    for (const auto& s : schema["oneOf"]) {
      auto e = check(inst, s, root, ptr);
      if (!e) ++matched;
      else last = *e;
    }
    if (matched != 1)
      return here + ": " + (matched ? "matches several alternatives" : "matches no alternative (" + last + ")");
  }
  if (schema.contains("type")) {
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"]) ok = ok || type_matches(inst, t.get<std::string>());
    } else {
      ok = type_matches(inst, schema["type"].get<std::string>());
    }
    if (!ok) return here + ": expected " + schema["type"].dump() + ", found " + type_of(inst);
  }
  if (schema.contains("minimum") && inst.is_number() && inst.get<double>() < schema["minimum"].get<double>())
    return here + ": below minimum " + schema["minimum"].dump();
  if (schema.contains("pattern") && inst.is_string() &&
      !std::regex_search(inst.get<std::string>(), std::regex(schema["pattern"].get<std::string>())))
    return here + ": '" + inst.get<std::string>() + "' does not match " + schema["pattern"].get<std::string>();
  if (inst.is_object()) {
    if (schema.contains("required"))
      for (const auto& r : schema["required"])
        if (!inst.contains(r.get<std::string>())) return here + ": missing required field '" + r.get<std::string>() + "'";
    const Json props = schema.value("properties", Json::object());
    for (const auto& [k, v] : inst.items()) {
      if (props.contains(k)) {
        if (auto e = check(v, props[k], root, ptr + "/" + k)) return e;
      } else if (schema.contains("additionalProperties") && schema["additionalProperties"] == false) {
        return here + ": unknown field '" + k + "'";
      }
    }
  }
  if (inst.is_array() && schema.contains("items"))
    for (std::size_t i = 0; i < inst.size(); ++i)
      if (auto e = check(inst[i], schema["items"], root, ptr + "/" + std::to_string(i))) return e;
  return std::nullopt;
}

}  // namespace

Json scalar_to_json(const CycloNumber& x) {
  const CycloNumber n = x.normalized();
  Json c = Json::array();
  for (const auto& q : n.coeffs()) c.push_back(q.get_str());
  return Json{{"L", n.conductor()}, {"c", c}};
}

CycloNumber scalar_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return CycloNumber(j.get<long>());
  if (j.is_string()) return CycloNumber(rational_from_string(j.get<std::string>(), path));
  if (!j.is_object()) parse_fail(path, "expected a scalar");
  const int L = as_int(at(j, "L", path), path + "/L");
  if (L < 1) parse_fail(path + "/L", "conductor must be positive");
  const Json& c = at(j, "c", path);
  if (!c.is_array()) parse_fail(path + "/c", "expected an array of rationals");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::string p = path + "/c/" + std::to_string(i);
    if (c[i].is_number_integer()) coeffs.emplace_back(c[i].get<long>());
    else if (c[i].is_string()) coeffs.push_back(rational_from_string(c[i].get<std::string>(), p));
    else parse_fail(p, "expected a rational");
  }
  if (static_cast<int>(coeffs.size()) > euler_phi(L))
    parse_fail(path + "/c", "more coefficients than the degree " + std::to_string(euler_phi(L)));
  return CycloNumber(L, std::move(coeffs));
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& [i, c] : v) out.push_back(Json::array({i, scalar_to_json(c)}));
  return out;
}

Vec vec_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected a sparse vector");
  Accumulator<CycloNumber> acc;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = path + "/" + std::to_string(k);
    if (!j[k].is_array() || j[k].size() != 2 || !j[k][0].is_number_unsigned()) parse_fail(p, "expected [index, scalar]");
    acc.add(j[k][0].get<std::size_t>(), scalar_from_json(j[k][1], p + "/1"));
  }
  return acc.finish();
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                                           e.what());
  }
}

std::optional<std::string> validate_schema(const Json& instance, const Json& schema) {
  return check(instance, schema, schema, "");
}

const Json& input_schema() {
  static const Json schema = Json::parse(detail::kInputSchema);
  return schema;
}

Json datum_to_json(const QlsDatum& d) {
  Json g = Json::array(), chi = Json::array();
  for (int i = 0; i < d.theta(); ++i) {
    g.push_back(exps_json(d.group(), d.g(i)));
    chi.push_back(d.chi(i).exps);
  }
  return Json{{"group", {{"orders", d.group().orders()}}}, {"g", g}, {"chi", chi}};
}

Json lifting_to_json(const LiftingDatum& l) {
  Json mu = Json::array(), lam = Json::array();
  for (const auto& m : l.mu) mu.push_back(scalar_to_json(m));
  for (const auto& [ij, v] : l.lambda)
    if (!v.is_zero()) lam.push_back(Json{{"i", ij.first + 1}, {"j", ij.second + 1}, {"value", scalar_to_json(v)}});
  return Json{{"mu", mu}, {"lambda", lam}};
}

Json subgroup_to_json(const Subgroup& F) {
  Json el = Json::array();
  for (int e : F.elements()) el.push_back(exps_json(F.parent(), e));
  return Json{{"elements", el}};
}

Json modcat_to_json(const ModCatDatum& m) {
  const Subgroup& F = m.F();
  Json table = Json::array();
  for (int a = 0; a < F.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < F.size(); ++b) row.push_back(scalar_to_json(m.psi.at(a, b)));
    table.push_back(std::move(row));
  }
  Json xi = Json::array(), alpha = Json::array();
  for (const auto& x : m.xi) xi.push_back(scalar_to_json(x));
  for (const auto& [kl, v] : m.alpha)
    if (!v.is_zero()) alpha.push_back(Json{{"i", kl.first + 1}, {"j", kl.second + 1}, {"value", scalar_to_json(v)}});
  return Json{{"F", subgroup_to_json(F)},
              {"psi", {{"table", table}}},
              {"W", basis_to_json(m.W, basis_theta(m.W))},
              {"xi", xi},
              {"alpha", alpha}};
}

ModCatDatum modcat_from_json(const QlsDatum& d, const Json& j, const std::string& path) {
  const AbelianGroup& G = d.group();
  const Json& fj = at(j, "F", path);
  std::optional<Subgroup> F;
  if (fj.contains("elements")) {
    std::vector<int> el;
    const Json& e = fj["elements"];
    for (std::size_t i = 0; i < e.size(); ++i) el.push_back(group_index(G, e[i], path + "/F/elements/" + std::to_string(i)));
    try {
      F.emplace(G, el);
    } catch (const Error& err) {
      parse_fail(path + "/F/elements", err.what());
    }
  } else {
    std::vector<int> gens;
    const Json e = fj.value("generators", Json::array());
    for (std::size_t i = 0; i < e.size(); ++i)
      gens.push_back(group_index(G, e[i], path + "/F/generators/" + std::to_string(i)));
    F.emplace(generated_subgroup(G, gens));
  }
  std::optional<TwoCocycle> psi;
  const Json pj = j.value("psi", Json::object());
  if (pj.contains("table")) {
    const Json& t = pj["table"];
    const int n = F->size();
    if (!t.is_array() || static_cast<int>(t.size()) != n) parse_fail(path + "/psi/table", "expected |F| rows");
    std::vector<CycloNumber> table;
    for (int a = 0; a < n; ++a) {
      if (!t[a].is_array() || static_cast<int>(t[a].size()) != n)
        parse_fail(path + "/psi/table/" + std::to_string(a), "expected |F| entries");
      for (int b = 0; b < n; ++b)
        table.push_back(scalar_from_json(t[a][b], path + "/psi/table/" + std::to_string(a) + "/" + std::to_string(b)));
    }
    try {
      psi.emplace(*F, std::move(table));
    } catch (const Error& err) {
      parse_fail(path + "/psi/table", err.what());
    }
    if (auto bad = psi->check_identity()) parse_fail(path + "/psi/table", "not a normalized 2-cocycle: " + *bad);
  } else if (pj.contains("class")) {
    const auto k = int_list(pj["class"], path + "/psi/class");
    const std::size_t r = F->invariant_factors().size();
    if (k.size() != r * (r - (r ? 1 : 0)) / 2)
      parse_fail(path + "/psi/class", "expected one exponent per pair of invariant factors");
    psi.emplace(bicharacter_cocycle(*F, k));
  } else {
    psi.emplace(TwoCocycle::trivial(*F));
  }
  ModCatDatum m(*psi);
  if (j.contains("W")) m.W = basis_from_json(j["W"], d.theta(), path + "/W");
  if (j.contains("xi")) {
    const Json& x = j["xi"];
    for (std::size_t k = 0; k < x.size(); ++k) m.xi.push_back(scalar_from_json(x[k], path + "/xi/" + std::to_string(k)));
  } else {
    m.xi.assign(m.W.size(), CycloNumber());
  }
  if (m.xi.size() != m.W.size()) parse_fail(path + "/xi", "expected one entry per basis vector of W");
  if (j.contains("alpha"))
    for (std::size_t k = 0; k < j["alpha"].size(); ++k) {
      const std::string p = path + "/alpha/" + std::to_string(k);
      const Json& e = j["alpha"][k];
      const int a = as_int(at(e, "i", p), p + "/i") - 1, b = as_int(at(e, "j", p), p + "/j") - 1;
      if (a < 0 || b <= a || b >= static_cast<int>(m.W.size())) parse_fail(p, "need 1 <= i < j <= dim W");
      m.alpha[{a, b}] = scalar_from_json(at(e, "value", p), p + "/value");
    }
  return m;
}

InputDocument parse_input(const std::string& text) {
  const Json j = parse_json_text(text);
  if (auto e = validate_schema(j, input_schema())) throw Error(ErrorKind::ParseError, "schema: " + *e);
  std::vector<int> orders = int_list(j["group"]["orders"], "/group/orders");
  const AbelianGroup G(orders);
  const Json& gj = j["g"];
  const Json& cj = j["chi"];
  if (gj.size() != cj.size()) parse_fail("/chi", "g and chi must have the same length");
  std::vector<int> g;
  std::vector<Character> chi;
  for (std::size_t i = 0; i < gj.size(); ++i) {
    g.push_back(group_index(G, gj[i], "/g/" + std::to_string(i)));
    const auto e = int_list(cj[i], "/chi/" + std::to_string(i));
    if (static_cast<int>(e.size()) != G.rank())
      parse_fail("/chi/" + std::to_string(i), "expected " + std::to_string(G.rank()) + " exponents");
    chi.emplace_back(G, e);
  }
  InputDocument doc{j.value("name", std::string()), QlsDatum(G, g, chi), std::nullopt, std::nullopt, {}};
  const int theta = doc.datum.theta();
  if (j.contains("lifting")) {
    LiftingDatum l = LiftingDatum::trivial(theta);
    const Json& lj = j["lifting"];
    if (lj.contains("mu")) {
      if (static_cast<int>(lj["mu"].size()) != theta) parse_fail("/lifting/mu", "expected theta entries");
      for (int i = 0; i < theta; ++i) l.mu[i] = scalar_from_json(lj["mu"][i], "/lifting/mu/" + std::to_string(i));
    }
    if (lj.contains("lambda"))
      for (std::size_t k = 0; k < lj["lambda"].size(); ++k) {
        const std::string p = "/lifting/lambda/" + std::to_string(k);
        const Json& e = lj["lambda"][k];
        const int a = e["i"].get<int>() - 1, b = e["j"].get<int>() - 1;
        if (b <= a || b >= theta) parse_fail(p, "need 1 <= i < j <= theta");
        l.lambda[{a, b}] = scalar_from_json(e["value"], p + "/value");
      }
    doc.lifting = std::move(l);
  }
  if (j.contains("modcat")) doc.modcat = modcat_from_json(doc.datum, j["modcat"]);
  if (j.contains("extra_W"))
    for (std::size_t k = 0; k < j["extra_W"].size(); ++k)
      doc.extra_W.push_back(basis_from_json(j["extra_W"][k], theta, "/extra_W/" + std::to_string(k)));
  return doc;
}

Json input_to_json(const InputDocument& doc) {
  Json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  const Json base = datum_to_json(doc.datum);
  for (const auto& [k, v] : base.items()) j[k] = v;
  if (doc.lifting) j["lifting"] = lifting_to_json(*doc.lifting);
  if (doc.modcat) j["modcat"] = modcat_to_json(*doc.modcat);
  if (!doc.extra_W.empty()) {
    Json e = Json::array();
    for (const auto& W : doc.extra_W) e.push_back(basis_to_json(W, doc.datum.theta()));
    j["extra_W"] = e;
  }
  return j;
}

Json algebra_to_json(const Algebra& a) {
  Json mult = Json::array();
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k)
      if (!a.product(i, k).empty()) mult.push_back(Json::array({i, k, vec_to_json(a.product(i, k))}));
  return Json{{"dim", a.dim}, {"labels", a.labels}, {"unit", vec_to_json(a.unit)}, {"mult", mult}};
}

Algebra algebra_from_json(const Json& j) {
  Algebra a;
  a.dim = at(j, "dim", "/algebra").get<std::size_t>();
  a.labels = at(j, "labels", "/algebra").get<std::vector<std::string>>();
  if (a.labels.size() != a.dim) parse_fail("/algebra/labels", "expected dim labels");
  a.unit = vec_from_json(at(j, "unit", "/algebra"), "/algebra/unit");
  a.mult.assign(a.dim * a.dim, Vec());
  const Json& m = at(j, "mult", "/algebra");
  for (std::size_t k = 0; k < m.size(); ++k) {
    const std::string p = "/algebra/mult/" + std::to_string(k);
    if (!m[k].is_array() || m[k].size() != 3) parse_fail(p, "expected [i, j, vector]");
    const std::size_t x = m[k][0].get<std::size_t>(), y = m[k][1].get<std::size_t>();
    if (x >= a.dim || y >= a.dim) parse_fail(p, "index out of range");
    a.mult[x * a.dim + y] = vec_from_json(m[k][2], p + "/2");
  }
  return a;
}

Json hopf_to_json(const HopfAlgebraRep& h) {
  Json counit = Json::array();
  for (const auto& c : h.counit) counit.push_back(scalar_to_json(c));
  return Json{{"kind", "hopf"},          {"name", h.name},
              {"algebra", algebra_to_json(h.alg)}, {"comult", vec_list_json(h.comult)},
              {"counit", counit},        {"antipode", vec_list_json(h.antipode)},
              {"degree", h.degree}};
}

HopfAlgebraRep hopf_from_json(const Json& j) {
  HopfAlgebraRep h;
  h.name = j.value("name", std::string());
  h.alg = algebra_from_json(at(j, "algebra", ""));
  h.comult = vec_list(at(j, "comult", ""), "/comult");
  for (std::size_t i = 0; i < at(j, "counit", "").size(); ++i)
    h.counit.push_back(scalar_from_json(j["counit"][i], "/counit/" + std::to_string(i)));
  h.antipode = vec_list(at(j, "antipode", ""), "/antipode");
  h.degree = j.value("degree", std::vector<int>(h.alg.dim, 0));
  const std::size_t n = h.dim();
  if (h.comult.size() != n || h.counit.size() != n || h.antipode.size() != n || h.degree.size() != n)
    parse_fail("", "comult, counit, antipode and degree need one entry per basis element");
  return h;
}

Json comodule_to_json(const ComoduleAlgebraRep& a) {
  Json pbw = Json::array();
  for (const auto& l : a.pbw) pbw.push_back(Json{{"r", l.r}, {"f", l.f}});
  Json j{{"kind", "comodule_algebra"}, {"name", a.name},
         {"algebra", algebra_to_json(a.alg)}, {"coaction", vec_list_json(a.coaction)},
         {"degree", a.degree}, {"pbw", pbw}};
  if (a.hopf) j["hopf"] = hopf_to_json(*a.hopf);
  return j;
}

ComoduleAlgebraRep comodule_from_json(const Json& j) {
  ComoduleAlgebraRep a;
  a.name = j.value("name", std::string());
  a.alg = algebra_from_json(at(j, "algebra", ""));
  a.coaction = vec_list(at(j, "coaction", ""), "/coaction");
  if (a.coaction.size() != a.dim()) parse_fail("/coaction", "expected one entry per basis element");
  a.degree = j.value("degree", std::vector<int>());
  if (j.contains("pbw"))
    for (const auto& l : j["pbw"]) a.pbw.push_back(PbwLabel{l.at("r").get<std::vector<int>>(), l.at("f").get<int>()});
  a.hopf = std::make_shared<HopfAlgebraRep>(hopf_from_json(at(j, "hopf", "")));
  return a;
}

Json bigalois_to_json(const BiGaloisRep& b) {
  return Json{{"kind", "bigalois"},
              {"left", comodule_to_json(b.alg)},
              {"right_coaction", vec_list_json(b.right_coaction)},
              {"right_hopf", hopf_to_json(*b.right_hopf)}};
}

BiGaloisRep bigalois_from_json(const Json& j) {
  BiGaloisRep b;
  b.alg = comodule_from_json(at(j, "left", ""));
  b.right_coaction = vec_list(at(j, "right_coaction", ""), "/right_coaction");
  b.right_hopf = std::make_shared<HopfAlgebraRep>(hopf_from_json(at(j, "right_hopf", "")));
  if (b.right_coaction.size() != b.dim()) parse_fail("/right_coaction", "expected one entry per basis element");
  return b;
}

std::string dump_stable(const Json& j) { return j.dump(); }

}  // namespace qlsmodcat
