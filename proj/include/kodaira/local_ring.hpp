#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "kodaira/polynomial.hpp"

namespace kodaira {

enum class OrderKind { GlobalDegLex, LocalNegDegLex };

/// Degree-compatible monomial order with a lexicographic tie-break over a
/// variable priority list (priority[0] is compared first).
struct MonomialOrder {
  OrderKind kind = OrderKind::LocalNegDegLex;
  std::vector<std::size_t> priority;

  static MonomialOrder local(std::size_t n) {
    MonomialOrder o{OrderKind::LocalNegDegLex, std::vector<std::size_t>(n)};
    std::iota(o.priority.begin(), o.priority.end(), std::size_t{0});
    return o;
  }
  static MonomialOrder local(std::vector<std::size_t> permutation) {
    return MonomialOrder{OrderKind::LocalNegDegLex, std::move(permutation)};
  }
  static MonomialOrder global(std::size_t n) {
    MonomialOrder o = local(n);
    o.kind = OrderKind::GlobalDegLex;
    return o;
  }

  bool is_local() const { return kind == OrderKind::LocalNegDegLex; }

  /// Negative, zero or positive as a is smaller than, equal to or bigger than b.
  int compare(const Exponent& a, const Exponent& b) const {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) {
      bool a_bigger = kind == OrderKind::GlobalDegLex ? da > db : da < db;
      return a_bigger ? 1 : -1;
    }
    for (std::size_t v : priority) {
      if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    }
    return 0;
  }

  bool valid_for(std::size_t n) const {
    if (priority.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (auto v : priority) {
      if (v >= n || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }
};

struct LocalIdeal {
  std::vector<Polynomial> generators;
  MonomialOrder order;
};

/// A quotient dimension that may be infinite (non-isolated singularity).
struct LocalDimension {
  bool infinite = false;
  std::uint64_t value = 0;

  static LocalDimension finite(std::uint64_t v) { return {false, v}; }
  static LocalDimension unbounded() { return {true, 0}; }

  friend bool operator==(const LocalDimension&, const LocalDimension&) = default;
  std::string to_string() const { return infinite ? "infinite" : std::to_string(value); }
};

struct StandardBasisOptions {
  /// Total degree a leading monomial may reach before the computation aborts.
  std::uint32_t degree_cap = 64;
};

inline const Exponent& leading_exponent(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw DomainError("leading term of the zero polynomial");
  const Exponent* best = nullptr;
  for (const auto& [e, c] : p.terms())
    if (!best || order.compare(e, *best) > 0) best = &e;
  return *best;
}

namespace detail {

struct TrackedPolynomial {
  Polynomial poly;
  Exponent lead;
  Rational lead_coeff;
  int ecart = 0;

  TrackedPolynomial(Polynomial p, const MonomialOrder& order) : poly(std::move(p)) { refresh(order); }

  void refresh(const MonomialOrder& order) {
    if (poly.is_zero()) return;
    lead = leading_exponent(poly, order);
    lead_coeff = poly.coefficient(lead);
    ecart = poly.degree() - static_cast<int>(total_degree(lead));
  }
};

// h - (LT(h) / LT(g)) * g, which cancels the leading term of h.
inline Polynomial reduce_step(const TrackedPolynomial& h, const TrackedPolynomial& g) {
  Exponent shift = exponent_sub(h.lead, g.lead);
  return h.poly - g.poly.scaled_shift(h.lead_coeff / g.lead_coeff, shift);
}

inline Polynomial s_polynomial(const TrackedPolynomial& f, const TrackedPolynomial& g) {
  Exponent l = exponent_lcm(f.lead, g.lead);
  return f.poly.scaled_shift(Rational(1) / f.lead_coeff, exponent_sub(l, f.lead)) -
         g.poly.scaled_shift(Rational(1) / g.lead_coeff, exponent_sub(l, g.lead));
}

inline void check_cap(const TrackedPolynomial& h, const StandardBasisOptions& options) {
  if (total_degree(h.lead) > options.degree_cap)
    throw DomainError("standard basis exploration exceeded total-degree cap " + std::to_string(options.degree_cap));
}

// Mora's weak normal form with ecart-driven enlargement of the reducer set.
inline Polynomial mora_normal_form(Polynomial f, const std::vector<TrackedPolynomial>& basis,
                                   const MonomialOrder& order, const StandardBasisOptions& options) {
  TrackedPolynomial h(std::move(f), order);
  std::vector<TrackedPolynomial> reducers = basis;
  while (!h.poly.is_zero()) {
    check_cap(h, options);
    const TrackedPolynomial* best = nullptr;
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < reducers.size(); ++i) {
      const auto& g = reducers[i];
      if (!divides(g.lead, h.lead)) continue;
      if (!best || g.ecart < best->ecart) {
        best = &g;
        best_index = i;
      }
    }
    if (!best) break;
    Polynomial next = reduce_step(h, reducers[best_index]);
    if (reducers[best_index].ecart > h.ecart) reducers.push_back(h);
    h = TrackedPolynomial(std::move(next), order);
  }
  return std::move(h.poly);
}

}  // namespace detail

/// Standard basis of the ideal generated in the localization at the origin.
///
/// Uses Buchberger's pair loop with Mora's normal form. The result is a
/// minimal basis (no leading monomial divides another) with monic leading
/// coefficients, sorted by descending leading monomial.
inline LocalIdeal local_standard_basis(const LocalIdeal& ideal, const StandardBasisOptions& options = {}) {
  const MonomialOrder& order = ideal.order;
  std::vector<detail::TrackedPolynomial> basis;
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) throw DomainError("zero generator in ideal");
    if (!order.valid_for(g.num_variables())) throw DomainError("monomial order does not match variable count");
    if (!basis.empty() && basis.front().poly.variables() != g.variables())
      throw DomainError("generators over different variable lists");
    basis.emplace_back(g, order);
    detail::check_cap(basis.back(), options);
  }
  if (!order.is_local()) throw DomainError("local standard basis requires a local monomial order");

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    Polynomial s = detail::s_polynomial(basis[i], basis[j]);
    if (s.is_zero()) continue;
    Polynomial h = detail::mora_normal_form(std::move(s), basis, order, options);
    if (h.is_zero()) continue;
    basis.emplace_back(std::move(h), order);
    detail::check_cap(basis.back(), options);
    std::size_t n = basis.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(k, n);
  }

  std::vector<bool> keep(basis.size(), true);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      if (divides(basis[b].lead, basis[a].lead) && (basis[b].lead != basis[a].lead || b < a)) keep[a] = false;
    }
  }
  LocalIdeal result{{}, order};
  std::vector<const detail::TrackedPolynomial*> kept;
  for (std::size_t a = 0; a < basis.size(); ++a)
    if (keep[a]) kept.push_back(&basis[a]);
  std::sort(kept.begin(), kept.end(),
            [&](auto* x, auto* y) { return order.compare(x->lead, y->lead) > 0; });
  for (auto* t : kept) result.generators.push_back((Rational(1) / t->lead_coeff) * t->poly);
  return result;
}

/// Number of monomials outside the staircase spanned by `leading`.
inline LocalDimension staircase_size(const std::vector<Exponent>& leading, std::size_t num_variables,
                                     std::uint32_t degree_cap = 64) {
  for (const auto& e : leading)
    if (total_degree(e) == 0) return LocalDimension::finite(0);
  std::vector<std::uint32_t> bound(num_variables, 0);
  for (std::size_t v = 0; v < num_variables; ++v) {
    std::uint32_t best = 0;
    for (const auto& e : leading) {
      bool pure = e[v] > 0;
      for (std::size_t w = 0; w < num_variables && pure; ++w)
        if (w != v && e[w] != 0) pure = false;
      if (pure && (best == 0 || e[v] < best)) best = e[v];
    }
    if (best == 0) return LocalDimension::unbounded();
    if (best > degree_cap)
      throw DomainError("staircase exceeds total-degree cap " + std::to_string(degree_cap));
    bound[v] = best;
  }

  std::uint64_t count = 0;
  Exponent current(num_variables, 0);
  // Depth-first walk over the bounding box; a monomial divisible by a
  // leading term has every multiple in the box divisible too, so the
  // innermost coordinate loop can stop at the first hit.
  auto walk = [&](auto&& self, std::size_t v) -> void {
    if (v + 1 == num_variables) {
      for (std::uint32_t a = 0; a < bound[v]; ++a) {
        current[v] = a;
        bool in_ideal = std::any_of(leading.begin(), leading.end(),
                                    [&](const Exponent& e) { return divides(e, current); });
        if (in_ideal) break;
        ++count;
      }
      current[v] = 0;
      return;
    }
    for (std::uint32_t a = 0; a < bound[v]; ++a) {
      current[v] = a;
      self(self, v + 1);
    }
    current[v] = 0;
  };
  if (num_variables == 0) return LocalDimension::finite(1);
  walk(walk, 0);
  return LocalDimension::finite(count);
}

/// dim of the local quotient ring, read off the leading-term staircase of a
/// standard basis.
inline LocalDimension quotient_dimension(const LocalIdeal& basis, const StandardBasisOptions& options = {}) {
  if (basis.generators.empty()) return LocalDimension::unbounded();
  std::vector<Exponent> leads;
  for (const auto& g : basis.generators) leads.push_back(leading_exponent(g, basis.order));
  return staircase_size(leads, basis.generators.front().num_variables(), options.degree_cap);
}

inline void require_germ(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("germ is the zero polynomial");
  if (f.degree() <= 0) throw DomainError("germ is constant");
  if (f.constant_term() != 0) throw DomainError("germ does not vanish at the origin");
}

/// The partial derivatives of f, zero partials omitted.
inline LocalIdeal jacobian_ideal(const Polynomial& f, MonomialOrder order) {
  if (f.is_zero() || f.degree() <= 0) throw DomainError("jacobian ideal of a constant");
  LocalIdeal ideal{{}, std::move(order)};
  for (std::size_t v = 0; v < f.num_variables(); ++v) {
    Polynomial d = f.derivative(v);
    if (!d.is_zero()) ideal.generators.push_back(std::move(d));
  }
  return ideal;
}

inline LocalIdeal jacobian_ideal(const Polynomial& f) { return jacobian_ideal(f, MonomialOrder::local(f.num_variables())); }

inline LocalIdeal tyurina_ideal(const Polynomial& f, MonomialOrder order) {
  LocalIdeal ideal = jacobian_ideal(f, std::move(order));
  ideal.generators.insert(ideal.generators.begin(), f);
  return ideal;
}

inline LocalIdeal tyurina_ideal(const Polynomial& f) { return tyurina_ideal(f, MonomialOrder::local(f.num_variables())); }

inline LocalDimension milnor_number(const Polynomial& f, const MonomialOrder& order,
                                    const StandardBasisOptions& options = {}) {
  require_germ(f);
  return quotient_dimension(local_standard_basis(jacobian_ideal(f, order), options), options);
}

inline LocalDimension milnor_number(const Polynomial& f, const StandardBasisOptions& options = {}) {
  return milnor_number(f, MonomialOrder::local(f.num_variables()), options);
}

inline LocalDimension tyurina_number(const Polynomial& f, const MonomialOrder& order,
                                     const StandardBasisOptions& options = {}) {
  require_germ(f);
  return quotient_dimension(local_standard_basis(tyurina_ideal(f, order), options), options);
}

inline LocalDimension tyurina_number(const Polynomial& f, const StandardBasisOptions& options = {}) {
  return tyurina_number(f, MonomialOrder::local(f.num_variables()), options);
}

namespace detail {

// Strict inequality sum_j coeffs[j] * x_j < bound.
struct StrictInequality {
  std::vector<Rational> coeffs;
  Rational bound;
};

// Fourier-Motzkin elimination; returns a strictly feasible point or nothing.
inline std::optional<std::vector<Rational>> solve_strict_system(std::vector<StrictInequality> system,
                                                                std::size_t num_vars) {
  std::vector<std::vector<StrictInequality>> stages;
  for (std::size_t v = 0; v < num_vars; ++v) {
    stages.push_back(system);
    std::vector<StrictInequality> lower, upper, next;
    for (auto& ineq : system) {
      if (ineq.coeffs[v] > 0)
        upper.push_back(ineq);
      else if (ineq.coeffs[v] < 0)
        lower.push_back(ineq);
      else
        next.push_back(ineq);
    }
    for (const auto& u : upper) {
      for (const auto& l : lower) {
        Rational su = -l.coeffs[v], sl = u.coeffs[v];
        StrictInequality combined{std::vector<Rational>(num_vars), su * u.bound + sl * l.bound};
        for (std::size_t j = 0; j < num_vars; ++j) combined.coeffs[j] = su * u.coeffs[j] + sl * l.coeffs[j];
        combined.coeffs[v] = 0;
        next.push_back(std::move(combined));
      }
    }
    system = std::move(next);
  }
  for (const auto& ineq : system)
    if (!(0 < ineq.bound)) return std::nullopt;

  std::vector<Rational> x(num_vars, 0);
  for (std::size_t v = num_vars; v-- > 0;) {
    std::optional<Rational> lo, hi;
    for (const auto& ineq : stages[v]) {
      if (ineq.coeffs[v] == 0) continue;
      Rational rest = ineq.bound;
      for (std::size_t j = v + 1; j < num_vars; ++j) rest -= ineq.coeffs[j] * x[j];
      Rational limit = rest / ineq.coeffs[v];
      if (ineq.coeffs[v] > 0)
        hi = hi ? std::min(*hi, limit) : limit;
      else
        lo = lo ? std::max(*lo, limit) : limit;
    }
    if (lo && hi)
      x[v] = (*lo + *hi) / 2;
    else if (lo)
      x[v] = *lo + 1;
    else if (hi)
      x[v] = *hi - 1;
  }
  return x;
}

}  // namespace detail

/// Positive rational weights w with <w, e> = 1 for every exponent e of f, or
/// nothing if f is not weighted homogeneous in the given coordinates.
inline std::optional<std::vector<Rational>> weighted_homogeneous_weights(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("weighted homogeneity of the zero polynomial");
  const std::size_t n = f.num_variables();
  std::vector<std::vector<Rational>> rows;
  for (const auto& [e, c] : f.terms()) {
    std::vector<Rational> row(n + 1);
    for (std::size_t v = 0; v < n; ++v) row[v] = e[v];
    row[n] = 1;
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = Rational(1) / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rational factor = rows[i][col];
      for (std::size_t j = 0; j <= n; ++j) rows[i][j] -= factor * rows[r][j];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rows[i][n] != 0) return std::nullopt;

  std::vector<std::size_t> free_cols;
  for (std::size_t col = 0; col < n; ++col)
    if (std::find(pivot_cols.begin(), pivot_cols.end(), col) == pivot_cols.end()) free_cols.push_back(col);

  std::vector<Rational> free_values;
  if (!free_cols.empty()) {
    // pivot = rhs - sum a_j free_j > 0  and  free_j > 0
    std::vector<detail::StrictInequality> system;
    for (std::size_t i = 0; i < r; ++i) {
      detail::StrictInequality ineq{std::vector<Rational>(free_cols.size()), rows[i][n]};
      for (std::size_t j = 0; j < free_cols.size(); ++j) ineq.coeffs[j] = rows[i][free_cols[j]];
      system.push_back(std::move(ineq));
    }
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
      detail::StrictInequality ineq{std::vector<Rational>(free_cols.size()), 0};
      ineq.coeffs[j] = -1;
      system.push_back(std::move(ineq));
    }
    auto solution = detail::solve_strict_system(std::move(system), free_cols.size());
    if (!solution) return std::nullopt;
    free_values = std::move(*solution);
  }

  std::vector<Rational> w(n, 0);
  for (std::size_t j = 0; j < free_cols.size(); ++j) w[free_cols[j]] = free_values[j];
  for (std::size_t i = 0; i < r; ++i) {
    Rational value = rows[i][n];
    for (std::size_t j = 0; j < free_cols.size(); ++j) value -= rows[i][free_cols[j]] * free_values[j];
    w[pivot_cols[i]] = value;
  }
  for (const auto& x : w)
    if (!(x > 0)) return std::nullopt;
  return w;
}

}  // namespace kodaira
