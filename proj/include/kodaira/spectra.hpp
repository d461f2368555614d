#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kodaira/branching.hpp"
#include "kodaira/geometry.hpp"
#include "kodaira/local_ring.hpp"

namespace kodaira {

enum class CollisionKind { Q1, Q2, Cr };

inline std::string to_string(CollisionKind k) {
  switch (k) {
    case CollisionKind::Q1: return "Q1";
    case CollisionKind::Q2: return "Q2";
    case CollisionKind::Cr: return "C_r";
  }
  return "?";
}

inline CollisionKind parse_collision_kind(const std::string& s) {
  if (s == "Q1") return CollisionKind::Q1;
  if (s == "Q2") return CollisionKind::Q2;
  if (s == "Cr" || s == "C_r") return CollisionKind::Cr;
  throw ParseError("unknown collision kind '" + s + "'");
}

/// Pairings of curves in the fiber over a collision point with the Cartan
/// divisors D^1..D^rank, optionally followed by pairings with further divisors.
struct IntersectionFixture {
  std::vector<std::vector<int>> rulings;
  std::vector<std::vector<int>> fiber_components;
};

struct Component {
  DivisorClass divisor;
  KodairaData data;
  std::optional<std::int64_t> genus;
  std::optional<std::int64_t> cover_genus;
  std::string label;
};

struct Collision {
  CollisionKind kind = CollisionKind::Q1;
  std::size_t component = 0;
  std::int64_t count = 0;
  int fiber_euler = 0;
  std::optional<std::vector<Rep>> rep;
  std::optional<KatzVafaContext> katz_vafa;
  std::optional<IntersectionFixture> intersections;
  /// Local equation of X at each of these points, when they are singular.
  std::optional<Polynomial> germ;
};

struct SingularPoint {
  std::int64_t count = 0;
  Polynomial equation;
  std::string label;
};

/// A stratum of the base with its Euler number and the Euler number of the
/// fiber over it; a set of points is a stratum whose Euler number is the count.
struct Stratum {
  std::string label;
  std::int64_t euler = 0;
  std::int64_t fiber_euler = 0;
};

struct ChiSource {
  std::optional<std::int64_t> direct;
  std::optional<std::pair<std::int64_t, std::int64_t>> betti;         // (b2, b3)
  std::optional<std::pair<std::int64_t, std::int64_t>> deformations;  // (KaDef, CxDef)
  /// Collision points are added to the strata with their fiber_euler.
  std::optional<std::vector<Stratum>> strata;
};

struct ModelOptions {
  bool generic = true;
  bool abelian_in_v = true;
  bool variant_rprime = false;
};

struct BudgetDeclaration {
  std::size_t component = 0;
  int r1 = 1;
  int r2 = 1;
};

struct FibrationModel {
  std::string name;
  BaseSurface base;
  std::vector<Component> components;
  std::vector<Collision> collisions;
  int mw_rank = 0;
  std::vector<SingularPoint> singular_points;
  ChiSource chi;
  ModelOptions options;
  std::optional<BudgetDeclaration> budget;
};

// ---------------------------------------------------------------- report types

struct ComponentSummary {
  std::string label;
  std::string type;
  std::string algebra;
  int row = 0;
  int lambda = 0;
  int fiber_euler = 0;
  std::int64_t dim = 0;
  std::int64_t rank = 0;
  std::int64_t genus = 0;
  std::int64_t cover_genus = 0;
  friend bool operator==(const ComponentSummary&, const ComponentSummary&) = default;
};

/// One line of the representation table: `multiplicity` copies of a rep
/// whose charged dimension is `charged_dim`.
struct SpectrumEntry {
  std::string source;  // "unlocalized", "Q1", "Q2", "C_r"
  std::string component;
  std::string algebra;
  std::string rep;
  Rational multiplicity = 0;
  Rational charged_dim = 0;
  bool half = false;  // multiplicity carries a 1/2 from the table or the half rule

  Rational charged_total() const { return multiplicity * charged_dim; }
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct SingularPointSummary {
  std::string label;
  std::string equation;
  std::int64_t count = 0;
  std::int64_t mu = 0;
  std::int64_t tau = 0;
  bool weighted_homogeneous = false;
  friend bool operator==(const SingularPointSummary&, const SingularPointSummary&) = default;
};

struct SingularitySummary {
  std::int64_t mu_sum = 0;
  std::int64_t tau_sum = 0;
  std::vector<SingularPointSummary> points;
};

struct AlgebraAssembly {
  std::vector<ComponentSummary> summands;  // nontrivial summands only
  int mw_rank = 0;
  std::int64_t dim = 0;   // semisimple part
  std::int64_t rank = 0;  // semisimple part plus mw_rank
  std::int64_t V = 0;
};

struct TheoremCheck {
  Rational r;        // 30 K^2 + (chi + sum m)/2
  Rational r_prime;  // 30 K^2 + (chi - sum m + 2 sum tau)/2
  Rational rhs;
  bool variant = false;
  bool pass = false;
  Rational difference;  // rhs - (variant ? r_prime : r)
  friend bool operator==(const TheoremCheck&, const TheoremCheck&) = default;
};

struct DeformationCounts {
  Rational b2, b3, kadef, cxdef;
  Rational cxdef_localized, cxdef_nonlocalized;
  std::int64_t h11_x = 0;  // 1 + h11(B) + rk
  friend bool operator==(const DeformationCounts&, const DeformationCounts&) = default;
};

struct AnomalyCheck {
  Rational h_ch, h_unch, h, v, t, residue;
  bool pass() const { return residue == 0; }
  friend bool operator==(const AnomalyCheck&, const AnomalyCheck&) = default;
};

struct SpectrumReport {
  std::string model;
  std::string base;
  std::int64_t k2 = 0;
  std::int64_t h11_base = 0;
  std::vector<ComponentSummary> components;
  int mw_rank = 0;
  std::int64_t total_rank = 0;
  std::vector<SpectrumEntry> spectrum;
  std::int64_t mu_sum = 0;
  std::int64_t tau_sum = 0;
  std::vector<SingularPointSummary> singular_points;
  std::string chi_source;
  std::int64_t chi = 0;
  TheoremCheck theorem;
  DeformationCounts deformations;
  AnomalyCheck anomaly;
  std::optional<BudgetCheck> budget;
  std::vector<std::string> notes;

  bool passes() const { return theorem.pass && anomaly.pass() && (!budget || budget->passes()); }
  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

// ------------------------------------------------------------- Method 1

struct IntersectionPiece {
  Rep rep;  // prefactor is delta
  Weight weight;
  std::size_t fiber_index = 0;
  Rational delta = 1;
};

struct IntersectionResult {
  std::vector<IntersectionPiece> pieces;
  std::size_t adjoint_excluded = 0;

  std::vector<Rep> rho() const {
    std::vector<Rep> out;
    for (const auto& p : pieces) out.push_back(p.rep);
    return out;
  }
};

/// Localized representations from intersection numbers. Each fiber curve ell
/// gives the weight -ell.D; its orbit M(ell) adds ruling combinations reaching
/// every weight of the identified representation, and delta = 1/2 when M(ell)
/// is stable under negation.
inline IntersectionResult localized_rep_from_intersections(const Algebra& g, const IntersectionFixture& fx) {
  const int r = g.rank();
  if (fx.rulings.size() != static_cast<std::size_t>(r)) throw DomainError("need one ruling per simple root");
  const std::size_t width = fx.rulings.front().size();
  if (width < static_cast<std::size_t>(r)) throw DomainError("intersection vectors are shorter than the rank");
  for (const auto& v : fx.rulings)
    if (v.size() != width) throw DomainError("intersection vectors have different lengths");
  for (const auto& v : fx.fiber_components)
    if (v.size() != width) throw DomainError("intersection vectors have different lengths");
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l)
      if (fx.rulings[k][l] != -g.cartan()[k][l])
        throw DomainError("ruling pairings are not the negative Cartan matrix of " + g.name());

  using Orbit = std::set<std::vector<int>>;
  auto negate = [](const Orbit& m) {
    Orbit out;
    for (auto v : m) {
      for (auto& x : v) x = -x;
      out.insert(v);
    }
    return out;
  };

  IntersectionResult result;
  std::vector<Orbit> seen;
  for (std::size_t a = 0; a < fx.fiber_components.size(); ++a) {
    const auto& ell = fx.fiber_components[a];
    Weight beta(r);
    for (int l = 0; l < r; ++l) beta[l] = -ell[l];
    auto rep = identify_rep(g, beta);
    if (!rep) throw DomainError("fiber curve " + std::to_string(a) + " has an unrecognized weight");
    bool is_ruling = std::find(fx.rulings.begin(), fx.rulings.end(), ell) != fx.rulings.end();
    if (is_ruling || rep->name == RepName::Adj) {
      ++result.adjoint_excluded;
      continue;
    }
    Orbit orbit;
    for (const auto& [mu, mult] : weight_system(g, rep->highest_weight()).multiplicities) {
      Weight diff(r);
      for (int l = 0; l < r; ++l) diff[l] = mu[l] - beta[l];
      std::vector<int> v = ell;
      auto n = g.to_root_coordinates(diff);
      if (!n) throw DomainError("weight difference is not in the root lattice");
      for (int k = 0; k < r; ++k)
        for (std::size_t j = 0; j < width; ++j) v[j] += (*n)[k] * fx.rulings[k][j];
      orbit.insert(std::move(v));
    }
    const Orbit negated = negate(orbit);
    if (std::find(seen.begin(), seen.end(), orbit) != seen.end() ||
        std::find(seen.begin(), seen.end(), negated) != seen.end())
      continue;
    seen.push_back(orbit);
    Rational delta = orbit == negated ? Rational(1, 2) : Rational(1);
    rep->prefactor = delta;
    result.pieces.push_back({*rep, beta, a, delta});
  }
  return result;
}

// ------------------------------------------------------------- evaluation

namespace detail {

struct ComponentData {
  FiberAssignment fiber;
  std::int64_t genus = 0;
  std::int64_t cover_genus = 0;
  std::string label;
};

inline std::string component_label(const FibrationModel& m, std::size_t i) {
  const auto& c = m.components[i];
  return c.label.empty() ? "Sigma_" + std::to_string(i + 1) : c.label;
}

inline ComponentData component_data(const FibrationModel& m, std::size_t i) {
  const Component& c = m.components.at(i);
  ComponentData d{classify_fiber(c.data), 0, 0, component_label(m, i)};
  d.genus = c.genus ? *c.genus : curve_genus(m.base, c.divisor);
  if (d.genus < 0) throw DomainError(d.label + ": genus must be nonnegative");
  if (d.fiber.row.has_rho0()) {
    if (c.cover_genus) {
      d.cover_genus = *c.cover_genus;
    } else if (d.fiber.row.cover_degree() != 2) {
      throw DomainError(d.label + ": " + d.fiber.row.algebra_name() + " needs an explicit cover_genus");
    } else {
      d.cover_genus = cover_genus(m.base, c.divisor);
    }
  } else {
    d.cover_genus = c.cover_genus ? *c.cover_genus : d.genus;
  }
  if (d.cover_genus < d.genus) throw DomainError(d.label + ": cover genus is smaller than the genus");
  return d;
}

inline std::string bare_label(Rep r) {
  r.prefactor = 1;
  return r.label();
}

inline void append_reps(std::vector<SpectrumEntry>& out, const std::string& source, const std::string& component,
                        const std::vector<Rep>& reps, const Rational& copies) {
  for (const auto& r : reps) {
    Rep unit = r;
    unit.prefactor = 1;
    SpectrumEntry e{source, component, r.algebra.name(), bare_label(r), copies * r.prefactor, charged_dim(unit),
                    denominator(r.prefactor) != 1};
    out.push_back(std::move(e));
  }
}

}  // namespace detail

/// Checks the structural invariants of a model; throws DomainError.
inline void validate_model(const FibrationModel& m) {
  if (m.mw_rank < 0) throw DomainError("mw_rank must be nonnegative");
  if (m.options.generic && m.components.size() > 1)
    throw DomainError("the generic setting allows a single declared component Sigma_1");
  for (std::size_t i = 0; i < m.components.size(); ++i) detail::component_data(m, i);
  for (const auto& c : m.collisions) {
    if (c.count < 0) throw DomainError("collision counts must be nonnegative");
    if (c.component >= m.components.size()) throw DomainError("collision refers to a missing component");
    if (c.kind == CollisionKind::Cr && m.mw_rank < 1) throw DomainError("C_r points need mw_rank >= 1");
  }
  for (const auto& p : m.singular_points)
    if (p.count < 0) throw DomainError("singular point counts must be nonnegative");
  if (m.budget && m.budget->component >= m.components.size()) throw DomainError("budget refers to a missing component");
}

inline AlgebraAssembly assemble_algebra(const FibrationModel& m) {
  AlgebraAssembly a;
  a.mw_rank = m.mw_rank;
  for (std::size_t i = 0; i < m.components.size(); ++i) {
    auto d = detail::component_data(m, i);
    if (!d.fiber.algebra) continue;
    const Algebra& g = *d.fiber.algebra;
    a.summands.push_back({d.label, d.fiber.type.to_string(), g.name(), d.fiber.row.row, d.fiber.lambda,
                          d.fiber.fiber_euler, static_cast<std::int64_t>(g.dim()), g.rank(), d.genus, d.cover_genus});
    a.dim += static_cast<std::int64_t>(g.dim());
    a.rank += g.rank();
  }
  a.rank += m.mw_rank;
  a.V = a.dim + (m.options.abelian_in_v ? m.mw_rank : 0);
  return a;
}

/// (adj, g) and, for non-simply-laced algebras, (rho_0, g' - g).
inline std::vector<SpectrumEntry> unlocalized_spectrum(const FibrationModel& m, std::size_t component) {
  auto d = detail::component_data(m, component);
  std::vector<SpectrumEntry> out;
  if (!d.fiber.algebra) return out;
  const Algebra& g = *d.fiber.algebra;
  out.push_back({"unlocalized", d.label, g.name(), "adj", Rational(d.genus), adjoint_charged_dim(g), false});
  if (d.fiber.row.has_rho0())
    detail::append_reps(out, "unlocalized", d.label, d.fiber.row.rho0.reps, Rational(d.cover_genus - d.genus));
  return out;
}

/// rho_Q of one collision point: explicit override, then the base-change
/// method, then intersection numbers, then the table.
inline std::vector<Rep> collision_reps(const FibrationModel& m, const Collision& c) {
  if (c.kind == CollisionKind::Cr) throw DomainError("C_r points carry u(1)-charged singlets only");
  auto d = detail::component_data(m, c.component);
  if (c.rep) return *c.rep;
  if (c.katz_vafa) {
    auto result = katz_vafa(*c.katz_vafa);
    for (const auto& r : result.rho)
      if (!d.fiber.algebra || !(r.algebra == *d.fiber.algebra))
        throw DomainError(d.label + ": Katz-Vafa result is not a representation of the component algebra");
    return result.rho;
  }
  if (c.intersections) {
    if (!d.fiber.algebra) throw DomainError(d.label + ": intersection data needs a nontrivial algebra");
    return localized_rep_from_intersections(*d.fiber.algebra, *c.intersections).rho();
  }
  const TableEntry& cell = c.kind == CollisionKind::Q1 ? d.fiber.row.rho_q1 : d.fiber.row.rho_q2;
  switch (cell.kind) {
    case TableEntry::Kind::NonMinimal:
      throw DomainError(d.label + ": " + to_string(c.kind) + " collision on row " + std::to_string(d.fiber.row.row) +
                        " is non-minimal");
    case TableEntry::Kind::Blank:
      throw DomainError(d.label + ": row " + std::to_string(d.fiber.row.row) + " has no " + to_string(c.kind) +
                        " collisions");
    case TableEntry::Kind::None: return {};
    case TableEntry::Kind::Reps: return cell.reps;
  }
  return {};
}

inline std::vector<SpectrumEntry> localized_spectrum(const FibrationModel& m) {
  std::vector<SpectrumEntry> out;
  for (const auto& c : m.collisions) {
    const std::string label = detail::component_label(m, c.component);
    if (c.kind == CollisionKind::Cr) {
      out.push_back({"C_r", label, "u(1)", "charged singlet", Rational(c.count), Rational(1), false});
      continue;
    }
    detail::append_reps(out, to_string(c.kind), label, collision_reps(m, c), Rational(c.count));
  }
  return out;
}

inline std::vector<SpectrumEntry> localized_spectrum_generic(const FibrationModel& m) {
  if (!m.options.generic) throw DomainError("model is not flagged generic");
  return localized_spectrum(m);
}

inline std::vector<SpectrumEntry> full_spectrum(const FibrationModel& m) {
  std::vector<SpectrumEntry> out;
  for (std::size_t i = 0; i < m.components.size(); ++i) {
    auto u = unlocalized_spectrum(m, i);
    out.insert(out.end(), u.begin(), u.end());
  }
  auto l = localized_spectrum(m);
  out.insert(out.end(), l.begin(), l.end());
  return out;
}

inline SingularPointSummary summarize_germ(const Polynomial& f, std::int64_t count, std::string label) {
  require_germ(f);
  auto mu = milnor_number(f);
  if (mu.infinite) throw NonIsolatedError("non-isolated singularity " + f.to_string());
  auto tau = tyurina_number(f);
  return {std::move(label), f.to_string(), count, static_cast<std::int64_t>(mu.value),
          static_cast<std::int64_t>(tau.value), weighted_homogeneous_weights(f).has_value()};
}

/// Count-weighted Milnor and Tyurina sums over the singular points, including
/// collision points that carry a germ.
inline SingularitySummary singularity_summary(const FibrationModel& m) {
  SingularitySummary s;
  for (const auto& c : m.collisions) {
    if (!c.germ) continue;
    s.points.push_back(summarize_germ(*c.germ, c.count, to_string(c.kind) + " on " +
                                                             detail::component_label(m, c.component)));
  }
  for (const auto& p : m.singular_points)
    s.points.push_back(summarize_germ(p.equation, p.count, p.label.empty() ? p.equation.to_string() : p.label));
  for (const auto& p : s.points) {
    s.mu_sum += p.count * p.mu;
    s.tau_sum += p.count * p.tau;
  }
  return s;
}

inline std::int64_t strata_euler(const FibrationModel& m) {
  if (!m.chi.strata) throw DomainError("no strata declared");
  std::int64_t chi = 0;
  for (const auto& s : *m.chi.strata) chi += s.euler * s.fiber_euler;
  for (const auto& c : m.collisions) chi += c.count * c.fiber_euler;
  return chi;
}

inline std::string chi_source_name(const ChiSource& c) {
  if (c.betti) return "betti";
  if (c.deformations) return "deformations";
  if (c.strata) return c.direct ? "direct+strata" : "strata";
  return "direct";
}

inline std::int64_t euler_characteristic(const FibrationModel& m, std::int64_t mu_sum) {
  const auto& c = m.chi;
  const int n = !!c.direct + !!c.betti + !!c.deformations + !!c.strata;
  if (n == 0) throw DomainError("no source for chi_top");
  if (n > 1 && !(n == 2 && c.direct && c.strata)) throw DomainError("chi_top is over-determined");
  if (c.betti) return 2 * (1 + c.betti->first) - c.betti->second;
  if (c.deformations) return 2 * (c.deformations->first - c.deformations->second) + mu_sum;
  if (c.strata) {
    const std::int64_t s = strata_euler(m);
    if (c.direct && *c.direct != s)
      throw DomainError("stratified chi_top " + std::to_string(s) + " disagrees with the direct value " +
                        std::to_string(*c.direct));
    return s;
  }
  return *c.direct;
}

inline std::int64_t euler_characteristic(const FibrationModel& m) {
  return euler_characteristic(m, m.chi.deformations ? singularity_summary(m).mu_sum : 0);
}

namespace detail {

inline Rational r_value(std::int64_t k2, std::int64_t chi, std::int64_t mu_sum) {
  return Rational(30 * k2) + Rational(chi + mu_sum, 2);
}

inline Rational r_prime_value(std::int64_t k2, std::int64_t chi, std::int64_t mu_sum, std::int64_t tau_sum) {
  return Rational(30 * k2) + Rational(chi - mu_sum + 2 * tau_sum, 2);
}

inline Rational rhs_value(const std::vector<SpectrumEntry>& spectrum, const AlgebraAssembly& a, std::int64_t tau_sum) {
  Rational s = tau_sum;
  for (const auto& e : spectrum) s += e.charged_total();
  // the unlocalized adjoint enters with g - 1 copies
  s -= Rational(a.dim - (a.rank - a.mw_rank));
  return s;
}

}  // namespace detail

/// 30 K^2 + (chi + sum m)/2; throws when the result is not an integer.
inline Rational r_invariant(const FibrationModel& m) {
  auto sing = singularity_summary(m);
  Rational r = detail::r_value(canonical_square(m.base), euler_characteristic(m, sing.mu_sum), sing.mu_sum);
  if (!is_integer(r)) throw DomainError("R = " + to_string(r) + " is not an integer: the model data are inconsistent");
  return r;
}

struct RightHandSide {
  Rational rhs;
  Rational r_prime;
};

inline RightHandSide r_rhs(const FibrationModel& m) {
  auto sing = singularity_summary(m);
  RightHandSide out;
  out.rhs = detail::rhs_value(full_spectrum(m), assemble_algebra(m), sing.tau_sum);
  out.r_prime =
      detail::r_prime_value(canonical_square(m.base), euler_characteristic(m, sing.mu_sum), sing.mu_sum, sing.tau_sum);
  return out;
}

namespace detail {

inline TheoremCheck theorem_check(const FibrationModel& m, std::int64_t chi, const SingularitySummary& sing,
                                  const Rational& rhs) {
  TheoremCheck t;
  const std::int64_t k2 = canonical_square(m.base);
  t.r = r_value(k2, chi, sing.mu_sum);
  t.r_prime = r_prime_value(k2, chi, sing.mu_sum, sing.tau_sum);
  t.rhs = rhs;
  t.variant = m.options.variant_rprime || sing.mu_sum != sing.tau_sum;
  const Rational& lhs = t.variant ? t.r_prime : t.r;
  t.difference = rhs - lhs;
  t.pass = t.difference == 0 && is_integer(lhs);
  return t;
}

inline DeformationCounts deformation_counts(const FibrationModel& m, const AlgebraAssembly& a, std::int64_t chi,
                                            const SingularitySummary& sing) {
  DeformationCounts d;
  d.h11_x = 1 + m.base.h11 + a.rank;
  if (m.chi.deformations) {
    d.kadef = m.chi.deformations->first;
    d.cxdef = m.chi.deformations->second;
    d.b2 = d.kadef;
    d.b3 = 2 * (d.cxdef + 1) - sing.mu_sum;
  } else {
    if (m.chi.betti) {
      d.b2 = m.chi.betti->first;
      d.b3 = m.chi.betti->second;
    } else {
      d.b2 = d.h11_x;
      d.b3 = 2 * (1 + d.b2) - chi;
    }
    d.kadef = d.b2;
    d.cxdef = (d.b3 + sing.mu_sum) / 2 - 1;
  }
  d.cxdef_localized = sing.tau_sum;
  d.cxdef_nonlocalized = d.cxdef - sing.tau_sum;
  return d;
}

inline AnomalyCheck anomaly_check(const FibrationModel& m, const AlgebraAssembly& a,
                                  const std::vector<SpectrumEntry>& spectrum, const DeformationCounts& d) {
  AnomalyCheck x;
  for (const auto& e : spectrum) x.h_ch += e.charged_total();
  x.h_unch = 1 + d.cxdef;
  x.h = x.h_ch + x.h_unch;
  x.v = a.V;
  x.t = m.base.h11 - 1;
  x.residue = x.h - x.v + 29 * x.t - 273;
  return x;
}

}  // namespace detail

inline TheoremCheck check_theorem(const FibrationModel& m) {
  auto sing = singularity_summary(m);
  const std::int64_t chi = euler_characteristic(m, sing.mu_sum);
  return detail::theorem_check(m, chi, sing, detail::rhs_value(full_spectrum(m), assemble_algebra(m), sing.tau_sum));
}

inline DeformationCounts deformation_counts(const FibrationModel& m) {
  auto sing = singularity_summary(m);
  return detail::deformation_counts(m, assemble_algebra(m), euler_characteristic(m, sing.mu_sum), sing);
}

inline AnomalyCheck anomaly_check(const FibrationModel& m) {
  auto sing = singularity_summary(m);
  auto a = assemble_algebra(m);
  auto d = detail::deformation_counts(m, a, euler_characteristic(m, sing.mu_sum), sing);
  return detail::anomaly_check(m, a, full_spectrum(m), d);
}

inline std::optional<BudgetCheck> budget_check(const FibrationModel& m) {
  if (!m.budget) return std::nullopt;
  const auto& b = *m.budget;
  auto d = detail::component_data(m, b.component);
  std::int64_t n1 = 0, n2 = 0;
  for (const auto& c : m.collisions) {
    if (c.component != b.component) continue;
    if (c.kind == CollisionKind::Q1) n1 += c.count;
    if (c.kind == CollisionKind::Q2) n2 += c.count;
  }
  return collision_budget(m.base, m.components[b.component].divisor, d.fiber.lambda, b.r1, b.r2, n1, n2);
}

/// Full evaluation; every quantity is computed once.
inline SpectrumReport analyze(const FibrationModel& m) {
  validate_model(m);
  SpectrumReport r;
  r.model = m.name;
  r.base = m.base.name;
  r.k2 = canonical_square(m.base);
  r.h11_base = m.base.h11;

  auto a = assemble_algebra(m);
  r.components = a.summands;
  r.mw_rank = m.mw_rank;
  r.total_rank = a.rank;
  r.spectrum = full_spectrum(m);

  auto sing = singularity_summary(m);
  r.mu_sum = sing.mu_sum;
  r.tau_sum = sing.tau_sum;
  r.singular_points = sing.points;
  r.chi_source = chi_source_name(m.chi);
  r.chi = euler_characteristic(m, sing.mu_sum);

  r.theorem = detail::theorem_check(m, r.chi, sing, detail::rhs_value(r.spectrum, a, sing.tau_sum));
  r.deformations = detail::deformation_counts(m, a, r.chi, sing);
  r.anomaly = detail::anomaly_check(m, a, r.spectrum, r.deformations);
  r.budget = budget_check(m);

  if (m.options.generic && sing.mu_sum != sing.tau_sum)
    r.notes.push_back("sum m(P) != sum tau(P): evaluated with the R' variant");
  if (!is_integer(r.theorem.variant ? r.theorem.r_prime : r.theorem.r))
    r.notes.push_back("R is not an integer: chi_top and the Milnor numbers have inconsistent parity");
  if (!m.base.cy_checked || r.k2 != 10 - m.base.h11)
    r.notes.push_back("K^2 != 10 - h11(B): the anomaly residue is not expected to vanish");
  if (!m.options.abelian_in_v && m.mw_rank > 0)
    r.notes.push_back("u(1) factors excluded from V: the anomaly residue is shifted by -mw_rank");
  if (r.deformations.b2 != r.deformations.h11_x)
    r.notes.push_back("b2 != 1 + h11(B) + rk(g)");
  if (r.budget && !r.budget->passes())
    r.notes.push_back("collision budget " + std::to_string(r.budget->budget) + " != declared " +
                      std::to_string(r.budget->declared));
  return r;
}

}  // namespace kodaira
