#pragma once

#include <chrono>
#include <ctime>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "kodaira/spectra.hpp"

namespace kodaira {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace io {

inline void allow_keys(const Json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw ParseError(where + " must be an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ParseError("unknown key '" + k + "' in " + where);
}

inline const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ParseError(where + " is missing '" + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(where + " has the wrong type");
  }
}

template <class T>
T get_or(const Json& j, const char* key, T fallback, const std::string& where) {
  return j.contains(key) ? get<T>(j.at(key), where + "." + key) : fallback;
}

/// Integers are emitted as JSON numbers, other rationals as "p/q".
inline Json rational(const Rational& q) {
  if (is_integer(q)) {
    const Integer n = numerator(q);
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
      return static_cast<std::int64_t>(n);
  }
  return to_string(q);
}

inline Rational rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError(where + " must be an integer or a \"p/q\" string");
}

inline std::vector<std::string> variables(const Json& j, const std::string& where) {
  if (!j.contains("variables")) return {"x", "y", "z", "w"};
  return get<std::vector<std::string>>(j.at("variables"), where + ".variables");
}

inline BaseSurface base(const Json& doc) {
  const Json& b = require(doc, "base", "model");
  const bool cy = get_or(doc, "cy_check", true, "model");
  if (b.is_string()) {
    auto s = named_base(b.get<std::string>());
    s.cy_checked = cy && s.cy_checked;
    return s;
  }
  allow_keys(b, "base", {"name", "intersection", "canonical", "h11"});
  return make_base(get<IntMatrix>(require(b, "intersection", "base"), "base.intersection"),
                   get<DivisorClass>(require(b, "canonical", "base"), "base.canonical"),
                   get<int>(require(b, "h11", "base"), "base.h11"), cy, get_or<std::string>(b, "name", "custom", "base"));
}

inline Embedding embedding(const Algebra& from, const Algebra& to, const Json& matrix, bool charged,
                           const std::string& where) {
  Embedding e{from, to, get<std::vector<std::vector<int>>>(matrix, where), charged};
  validate(e);
  return e;
}

inline Rep rep(const Json& j, const Algebra& g, const std::string& where) {
  allow_keys(j, where, {"name", "highest_weight", "prefactor"});
  Rational prefactor = j.contains("prefactor") ? rational(j.at("prefactor"), where + ".prefactor") : Rational(1);
  if (j.contains("highest_weight")) {
    auto w = get<Weight>(j.at("highest_weight"), where + ".highest_weight");
    if (static_cast<int>(w.size()) != g.rank()) throw DomainError(where + ": weight length differs from the rank");
    auto r = identify_rep(g, w);
    if (!r) throw DomainError(where + ": unrecognized highest weight");
    r->prefactor = prefactor;
    return *r;
  }
  return make_rep(g, rep_name_from_string(get<std::string>(require(j, "name", where), where + ".name")), prefactor);
}

inline KatzVafaContext katz_vafa(const Json& j, const FiberAssignment& fiber, const std::string& where) {
  allow_keys(j, where, {"g_Q", "g_Qs", "b", "d", "enhancement", "restriction", "half_rho0"});
  if (!fiber.algebra) throw DomainError(where + ": the component has the trivial algebra");
  const Algebra& g = *fiber.algebra;
  const Algebra gq = algebra_from_name(get<std::string>(require(j, "g_Q", where), where + ".g_Q"));
  const Algebra gqs = algebra_from_name(get<std::string>(require(j, "g_Qs", where), where + ".g_Qs"));
  KatzVafaContext ctx;
  ctx.b = get_or(j, "b", 1, where);
  if (ctx.b < 1) throw DomainError(where + ": b must be positive");
  if (j.contains("d")) {
    const int d = get<int>(j.at("d"), where + ".d");
    if (d % ctx.b) throw DomainError(where + ": b does not divide d");
  }
  if (!(gq == gqs)) {
    if (j.contains("enhancement")) {
      ctx.enhancement = embedding(gq, gqs, j.at("enhancement"), true, where + ".enhancement");
    } else if (gq.family() == Family::SU && gqs.family() == Family::SU &&
               gq.family_parameter() == gqs.family_parameter() + 1) {
      ctx.enhancement = su_to_su_u1(gqs.family_parameter());
    } else {
      throw DomainError(where + ": no built-in embedding " + gq.name() + " > " + gqs.name() + " + u(1)");
    }
  }
  if (!(gqs == g)) {
    if (j.contains("restriction")) {
      ctx.restriction = embedding(gqs, g, j.at("restriction"), false, where + ".restriction");
    } else if (auto e = builtin_embedding(gqs, g)) {
      ctx.restriction = *e;
    } else {
      throw DomainError(where + ": no built-in embedding " + gqs.name() + " > " + g.name());
    }
  }
  if (get_or(j, "half_rho0", false, where)) {
    if (!fiber.row.has_rho0()) throw DomainError(where + ": the component has no rho_0");
    ctx.half_rho0 = fiber.row.rho0.reps;
  }
  return ctx;
}

}  // namespace io

/// Reads a model document (schema version 1). Throws ParseError on schema
/// violations and DomainError on mathematically invalid content.
inline FibrationModel model_from_json(const Json& doc) {
  using namespace io;
  allow_keys(doc, "model", {"version", "name", "base", "cy_check", "components", "collisions", "mw_rank",
                            "singular_points", "chi", "options", "budget"});
  if (get<int>(require(doc, "version", "model"), "version") != kSchemaVersion)
    throw ParseError("unsupported schema version");
  FibrationModel m;
  m.name = get_or<std::string>(doc, "name", "", "model");
  m.base = base(doc);
  m.mw_rank = get_or(doc, "mw_rank", 0, "model");

  std::vector<FiberAssignment> fibers;
  if (doc.contains("components")) {
    const Json& cs = doc.at("components");
    if (!cs.is_array()) throw ParseError("components must be an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string where = "components[" + std::to_string(i) + "]";
      const Json& c = cs[i];
      allow_keys(c, where, {"label", "class", "orders", "monodromy", "genus", "cover_genus"});
      Component comp;
      comp.label = get_or<std::string>(c, "label", "", where);
      comp.divisor = get<DivisorClass>(require(c, "class", where), where + ".class");
      auto orders = get<std::vector<int>>(require(c, "orders", where), where + ".orders");
      if (orders.size() != 3) throw ParseError(where + ".orders must be [ord a, ord b, ord Delta]");
      comp.data = {orders[0], orders[1], orders[2],
                   parse_monodromy(get_or<std::string>(c, "monodromy", "n/a", where))};
      if (c.contains("genus")) comp.genus = get<std::int64_t>(c.at("genus"), where + ".genus");
      if (c.contains("cover_genus")) comp.cover_genus = get<std::int64_t>(c.at("cover_genus"), where + ".cover_genus");
      fibers.push_back(classify_fiber(comp.data));
      m.components.push_back(std::move(comp));
    }
  }

  if (doc.contains("collisions")) {
    const Json& cs = doc.at("collisions");
    if (!cs.is_array()) throw ParseError("collisions must be an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string where = "collisions[" + std::to_string(i) + "]";
      const Json& c = cs[i];
      allow_keys(c, where,
                 {"kind", "component", "count", "fiber_euler", "germ", "variables", "rep", "katz_vafa", "intersections"});
      Collision col;
      col.kind = parse_collision_kind(get<std::string>(require(c, "kind", where), where + ".kind"));
      col.component = get_or<std::size_t>(c, "component", 0, where);
      col.count = get<std::int64_t>(require(c, "count", where), where + ".count");
      col.fiber_euler = get_or(c, "fiber_euler", 0, where);
      if (c.contains("germ"))
        col.germ = parse_polynomial(get<std::string>(c.at("germ"), where + ".germ"), variables(c, where));
      const bool needs_algebra = c.contains("rep") || c.contains("katz_vafa") || c.contains("intersections");
      if (needs_algebra) {
        if (col.component >= fibers.size()) throw DomainError(where + " refers to a missing component");
        const auto& fiber = fibers[col.component];
        if (!fiber.algebra) throw DomainError(where + ": the component has the trivial algebra");
        if (c.contains("rep")) {
          const Json& rs = c.at("rep");
          if (!rs.is_array()) throw ParseError(where + ".rep must be an array");
          std::vector<Rep> reps;
          for (std::size_t r = 0; r < rs.size(); ++r)
            reps.push_back(io::rep(rs[r], *fiber.algebra, where + ".rep[" + std::to_string(r) + "]"));
          col.rep = std::move(reps);
        }
        if (c.contains("katz_vafa")) col.katz_vafa = io::katz_vafa(c.at("katz_vafa"), fiber, where + ".katz_vafa");
        if (c.contains("intersections")) {
          const Json& x = c.at("intersections");
          allow_keys(x, where + ".intersections", {"rulings", "fiber_components"});
          col.intersections = IntersectionFixture{
              get<std::vector<std::vector<int>>>(require(x, "rulings", where), where + ".rulings"),
              get<std::vector<std::vector<int>>>(require(x, "fiber_components", where), where + ".fiber_components")};
        }
      }
      m.collisions.push_back(std::move(col));
    }
  }

  if (doc.contains("singular_points")) {
    const Json& ps = doc.at("singular_points");
    if (!ps.is_array()) throw ParseError("singular_points must be an array");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const std::string where = "singular_points[" + std::to_string(i) + "]";
      allow_keys(ps[i], where, {"count", "equation", "variables", "label"});
      m.singular_points.push_back(
          {get<std::int64_t>(require(ps[i], "count", where), where + ".count"),
           parse_polynomial(get<std::string>(require(ps[i], "equation", where), where + ".equation"),
                            variables(ps[i], where)),
           get_or<std::string>(ps[i], "label", "", where)});
    }
  }

  const Json& chi = require(doc, "chi", "model");
  allow_keys(chi, "chi", {"direct", "betti", "deformations", "strata"});
  if (chi.contains("direct")) m.chi.direct = get<std::int64_t>(chi.at("direct"), "chi.direct");
  if (chi.contains("betti")) {
    allow_keys(chi.at("betti"), "chi.betti", {"b2", "b3"});
    m.chi.betti = {{get<std::int64_t>(require(chi.at("betti"), "b2", "chi.betti"), "chi.betti.b2"),
                    get<std::int64_t>(require(chi.at("betti"), "b3", "chi.betti"), "chi.betti.b3")}};
  }
  if (chi.contains("deformations")) {
    const Json& d = chi.at("deformations");
    allow_keys(d, "chi.deformations", {"kadef", "cxdef"});
    m.chi.deformations = {{get<std::int64_t>(require(d, "kadef", "chi.deformations"), "chi.deformations.kadef"),
                           get<std::int64_t>(require(d, "cxdef", "chi.deformations"), "chi.deformations.cxdef")}};
  }
  if (chi.contains("strata")) {
    const Json& ss = chi.at("strata");
    if (!ss.is_array()) throw ParseError("chi.strata must be an array");
    std::vector<Stratum> strata;
    for (std::size_t i = 0; i < ss.size(); ++i) {
      const std::string where = "chi.strata[" + std::to_string(i) + "]";
      allow_keys(ss[i], where, {"label", "euler", "fiber_euler"});
      strata.push_back({get_or<std::string>(ss[i], "label", "", where),
                        get<std::int64_t>(require(ss[i], "euler", where), where + ".euler"),
                        get<std::int64_t>(require(ss[i], "fiber_euler", where), where + ".fiber_euler")});
    }
    m.chi.strata = std::move(strata);
  }

  if (doc.contains("options")) {
    const Json& o = doc.at("options");
    allow_keys(o, "options", {"generic", "abelian_in_v", "variant_rprime"});
    m.options.generic = get_or(o, "generic", true, "options");
    m.options.abelian_in_v = get_or(o, "abelian_in_v", true, "options");
    m.options.variant_rprime = get_or(o, "variant_rprime", false, "options");
  }
  if (doc.contains("budget")) {
    const Json& b = doc.at("budget");
    allow_keys(b, "budget", {"component", "r1", "r2"});
    m.budget = BudgetDeclaration{get_or<std::size_t>(b, "component", 0, "budget"), get_or(b, "r1", 1, "budget"),
                                 get_or(b, "r2", 1, "budget")};
  }
  validate_model(m);
  return m;
}

inline FibrationModel model_from_string(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return model_from_json(doc);
}

// ------------------------------------------------------------------ reports

inline Json report_to_json(const SpectrumReport& r, const std::optional<std::string>& timestamp = std::nullopt) {
  using io::rational;
  Json j;
  j["version"] = kSchemaVersion;
  if (timestamp) j["generated"] = *timestamp;
  j["model"] = r.model;
  j["base"] = {{"name", r.base}, {"K2", r.k2}, {"h11", r.h11_base}};
  Json summands = Json::array();
  for (const auto& c : r.components)
    summands.push_back({{"label", c.label},
                        {"type", c.type},
                        {"algebra", c.algebra},
                        {"row", c.row},
                        {"lambda", c.lambda},
                        {"fiber_euler", c.fiber_euler},
                        {"dim", c.dim},
                        {"rank", c.rank},
                        {"genus", c.genus},
                        {"cover_genus", c.cover_genus}});
  j["algebra"] = {{"summands", summands}, {"mw_rank", r.mw_rank}, {"total_rank", r.total_rank}};
  Json spectrum = Json::array();
  for (const auto& e : r.spectrum)
    spectrum.push_back({{"source", e.source},
                        {"component", e.component},
                        {"algebra", e.algebra},
                        {"rep", e.rep},
                        {"multiplicity", rational(e.multiplicity)},
                        {"charged_dim", rational(e.charged_dim)},
                        {"half", e.half}});
  j["spectrum"] = spectrum;
  Json points = Json::array();
  for (const auto& p : r.singular_points)
    points.push_back({{"label", p.label},
                      {"equation", p.equation},
                      {"count", p.count},
                      {"mu", p.mu},
                      {"tau", p.tau},
                      {"weighted_homogeneous", p.weighted_homogeneous}});
  j["singularities"] = {{"mu_sum", r.mu_sum}, {"tau_sum", r.tau_sum}, {"points", points}};
  j["chi"] = {{"source", r.chi_source}, {"value", r.chi}};
  const auto& t = r.theorem;
  j["theorem"] = {{"R", rational(t.r)},     {"R_prime", rational(t.r_prime)}, {"rhs", rational(t.rhs)},
                  {"variant", t.variant},   {"pass", t.pass},                 {"difference", rational(t.difference)}};
  const auto& d = r.deformations;
  j["deformations"] = {{"b2", rational(d.b2)},
                       {"b3", rational(d.b3)},
                       {"KaDef", rational(d.kadef)},
                       {"CxDef", rational(d.cxdef)},
                       {"CxDef_localized", rational(d.cxdef_localized)},
                       {"CxDef_nonlocalized", rational(d.cxdef_nonlocalized)},
                       {"h11_X", d.h11_x}};
  const auto& a = r.anomaly;
  j["anomaly"] = {{"H_ch", rational(a.h_ch)}, {"H_unch", rational(a.h_unch)}, {"H", rational(a.h)},
                  {"V", rational(a.v)},       {"T", rational(a.t)},           {"residue", rational(a.residue)},
                  {"pass", a.pass()}};
  if (r.budget)
    j["budget"] = {{"budget", r.budget->budget}, {"declared", r.budget->declared}, {"pass", r.budget->passes()}};
  else
    j["budget"] = nullptr;
  j["notes"] = r.notes;
  j["pass"] = r.passes();
  return j;
}

inline SpectrumReport report_from_json(const Json& j) {
  using io::get;
  auto q = [](const Json& v) { return io::rational(v, "report"); };
  try {
    if (j.at("version").get<int>() != kSchemaVersion) throw ParseError("unsupported report version");
    SpectrumReport r;
    r.model = j.at("model").get<std::string>();
    r.base = j.at("base").at("name").get<std::string>();
    r.k2 = j.at("base").at("K2").get<std::int64_t>();
    r.h11_base = j.at("base").at("h11").get<std::int64_t>();
    for (const auto& c : j.at("algebra").at("summands"))
      r.components.push_back({c.at("label").get<std::string>(), c.at("type").get<std::string>(),
                              c.at("algebra").get<std::string>(), c.at("row").get<int>(), c.at("lambda").get<int>(),
                              c.at("fiber_euler").get<int>(), c.at("dim").get<std::int64_t>(),
                              c.at("rank").get<std::int64_t>(), c.at("genus").get<std::int64_t>(),
                              c.at("cover_genus").get<std::int64_t>()});
    r.mw_rank = j.at("algebra").at("mw_rank").get<int>();
    r.total_rank = j.at("algebra").at("total_rank").get<std::int64_t>();
    for (const auto& e : j.at("spectrum"))
      r.spectrum.push_back({e.at("source").get<std::string>(), e.at("component").get<std::string>(),
                            e.at("algebra").get<std::string>(), e.at("rep").get<std::string>(), q(e.at("multiplicity")),
                            q(e.at("charged_dim")), e.at("half").get<bool>()});
    const Json& s = j.at("singularities");
    r.mu_sum = s.at("mu_sum").get<std::int64_t>();
    r.tau_sum = s.at("tau_sum").get<std::int64_t>();
    for (const auto& p : s.at("points"))
      r.singular_points.push_back({p.at("label").get<std::string>(), p.at("equation").get<std::string>(),
                                   p.at("count").get<std::int64_t>(), p.at("mu").get<std::int64_t>(),
                                   p.at("tau").get<std::int64_t>(), p.at("weighted_homogeneous").get<bool>()});
    r.chi_source = j.at("chi").at("source").get<std::string>();
    r.chi = j.at("chi").at("value").get<std::int64_t>();
    const Json& t = j.at("theorem");
    r.theorem = {q(t.at("R")),          q(t.at("R_prime")),    q(t.at("rhs")),
                 t.at("variant").get<bool>(), t.at("pass").get<bool>(), q(t.at("difference"))};
    const Json& d = j.at("deformations");
    r.deformations = {q(d.at("b2")),
                      q(d.at("b3")),
                      q(d.at("KaDef")),
                      q(d.at("CxDef")),
                      q(d.at("CxDef_localized")),
                      q(d.at("CxDef_nonlocalized")),
                      d.at("h11_X").get<std::int64_t>()};
    const Json& a = j.at("anomaly");
    r.anomaly = {q(a.at("H_ch")), q(a.at("H_unch")), q(a.at("H")), q(a.at("V")), q(a.at("T")), q(a.at("residue"))};
    if (!j.at("budget").is_null())
      r.budget = BudgetCheck{j.at("budget").at("budget").get<std::int64_t>(),
                             j.at("budget").at("declared").get<std::int64_t>()};
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

/// Plain-text report; the component block follows the columns of the
/// classification table.
inline std::string report_to_text(const SpectrumReport& r) {
  std::ostringstream out;
  auto q = [](const Rational& x) { return to_string(x); };
  out << "model " << (r.model.empty() ? "(unnamed)" : r.model) << " over " << r.base << "  K^2 = " << r.k2
      << "  h11(B) = " << r.h11_base << "\n\n";

  out << "gauge algebra";
  if (r.components.empty() && r.mw_rank == 0) out << ": trivial";
  out << "\n";
  out << std::left << std::setw(10) << "  type" << std::setw(10) << "algebra" << std::setw(6) << "row" << std::setw(6)
      << "g" << std::setw(6) << "g'" << std::setw(6) << "dim" << "rank\n";
  for (const auto& c : r.components)
    out << "  " << std::setw(8) << c.type << std::setw(10) << c.algebra << std::setw(6) << c.row << std::setw(6)
        << c.genus << std::setw(6) << c.cover_genus << std::setw(6) << c.dim << c.rank << "\n";
  if (r.mw_rank) out << "  u(1)^" << r.mw_rank << "\n";
  out << "  total rank " << r.total_rank << "\n\n";

  out << "representations\n";
  out << std::setw(14) << "  source" << std::setw(12) << "component" << std::setw(10) << "algebra" << std::setw(18)
      << "rep" << std::setw(8) << "mult" << std::setw(8) << "ch.dim" << "total\n";
  for (const auto& e : r.spectrum)
    out << "  " << std::setw(12) << e.source << std::setw(12) << e.component << std::setw(10) << e.algebra
        << std::setw(18) << e.rep << std::setw(8) << q(e.multiplicity) << std::setw(8) << q(e.charged_dim)
        << q(e.charged_total()) << "\n";
  out << "\n";

  out << "singular points: sum m = " << r.mu_sum << ", sum tau = " << r.tau_sum << "\n";
  for (const auto& p : r.singular_points)
    out << "  " << p.count << " x " << p.equation << "  m = " << p.mu << "  tau = " << p.tau
        << (p.weighted_homogeneous ? "  weighted homogeneous" : "") << "\n";
  out << "chi_top = " << r.chi << " (" << r.chi_source << ")\n\n";

  const auto& t = r.theorem;
  out << "R  = " << q(t.r) << "\nR' = " << q(t.r_prime) << "\nrhs = " << q(t.rhs) << "\n";
  out << "identity (" << (t.variant ? "R'" : "R") << "): " << (t.pass ? "pass" : "FAIL")
      << "  difference " << q(t.difference) << "\n\n";

  const auto& d = r.deformations;
  out << "b2 = " << q(d.b2) << "  b3 = " << q(d.b3) << "  KaDef = " << q(d.kadef) << "  CxDef = " << q(d.cxdef)
      << " (localized " << q(d.cxdef_localized) << ", non-localized " << q(d.cxdef_nonlocalized) << ")\n";
  const auto& a = r.anomaly;
  out << "H = " << q(a.h) << " (H_ch " << q(a.h_ch) << ", H_unch " << q(a.h_unch) << ")  V = " << q(a.v)
      << "  T = " << q(a.t) << "\n";
  out << "H - V + 29T - 273 = " << q(a.residue) << (a.pass() ? "  pass" : "  FAIL") << "\n";
  if (r.budget)
    out << "collision budget " << r.budget->budget << ", declared " << r.budget->declared
        << (r.budget->passes() ? "  pass" : "  FAIL") << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "\n" << (r.passes() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace kodaira
