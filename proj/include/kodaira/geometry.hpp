#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kodaira/table_a.hpp"

namespace kodaira {

using DivisorClass = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Neron-Severi lattice of a smooth base surface with its canonical class.
struct BaseSurface {
  std::string name = "custom";
  IntMatrix intersection;
  DivisorClass canonical;
  int h11 = 1;
  bool cy_checked = false;

  std::size_t rank() const { return intersection.size(); }
};

inline std::int64_t intersect(const BaseSurface& base, const DivisorClass& d, const DivisorClass& e) {
  const std::size_t n = base.rank();
  if (d.size() != n || e.size() != n) throw DomainError("divisor class length does not match the base lattice");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s += d[i] * base.intersection[i][j] * e[j];
  return s;
}

inline std::int64_t canonical_square(const BaseSurface& base) {
  return intersect(base, base.canonical, base.canonical);
}

/// Validates a lattice; with `cy_flag` also K^2 = 10 - h11.
inline BaseSurface make_base(IntMatrix intersection, DivisorClass canonical, int h11, bool cy_flag,
                             std::string name = "custom") {
  const std::size_t n = intersection.size();
  if (n == 0) throw DomainError("intersection form is empty");
  for (const auto& row : intersection)
    if (row.size() != n) throw DomainError("intersection form is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (intersection[i][j] != intersection[j][i]) throw DomainError("intersection form is not symmetric");
  if (canonical.size() != n) throw DomainError("canonical class length does not match the lattice rank");
  if (h11 != static_cast<int>(n)) throw DomainError("h11 must equal the lattice rank");
  BaseSurface base{std::move(name), std::move(intersection), std::move(canonical), h11, cy_flag};
  if (cy_flag && canonical_square(base) != 10 - h11)
    throw DomainError("K^2 = " + std::to_string(canonical_square(base)) + " but 10 - h11 = " + std::to_string(10 - h11));
  return base;
}

inline BaseSurface projective_plane() { return make_base({{1}}, {-3}, 1, true, "P2"); }

/// Hirzebruch surface F_n in the basis (S, F) with S^2 = -n, S.F = 1, F^2 = 0.
inline BaseSurface hirzebruch(int n) {
  if (n < 0) throw DomainError("Hirzebruch index must be nonnegative");
  return make_base({{-n, 1}, {1, 0}}, {-2, -(n + 2)}, 2, true, "F" + std::to_string(n));
}

/// "P2" or "F0".."F12".
inline BaseSurface named_base(const std::string& name) {
  if (name == "P2") return projective_plane();
  if (name.size() >= 2 && name[0] == 'F' && name.size() <= 3 &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    int n = std::stoi(name.substr(1));
    if (n <= 12) return hirzebruch(n);
  }
  throw DomainError("unknown base '" + name + "'");
}

inline DivisorClass scaled(const DivisorClass& d, std::int64_t c) {
  DivisorClass out = d;
  for (auto& x : out) x *= c;
  return out;
}

inline DivisorClass sum(const DivisorClass& a, const DivisorClass& b) {
  if (a.size() != b.size()) throw DomainError("divisor class length mismatch");
  DivisorClass out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

/// Adjunction: g = 1 + C.(C+K)/2.
inline std::int64_t curve_genus(const BaseSurface& base, const DivisorClass& c) {
  std::int64_t v = intersect(base, c, sum(c, base.canonical));
  if (v % 2) throw DomainError("C.(C+K) is odd");
  std::int64_t g = 1 + v / 2;
  if (g < 0) throw DomainError("negative genus: the class is not an irreducible curve");
  return g;
}

/// Genus of the degree-2 branched cover: g' = g + Sigma.(Sigma-K)/2.
inline std::int64_t cover_genus(const BaseSurface& base, const DivisorClass& sigma) {
  std::int64_t v = intersect(base, sigma, sum(sigma, scaled(base.canonical, -1)));
  if (v % 2) throw DomainError("Sigma.(Sigma-K) is odd");
  if (v < 0) throw DomainError("Sigma.(Sigma-K) is negative");
  return curve_genus(base, sigma) + v / 2;
}

enum class Monodromy { Split, SemiSplit, NonSplit, NotApplicable };

inline std::string to_string(Monodromy m) {
  switch (m) {
    case Monodromy::Split: return "split";
    case Monodromy::SemiSplit: return "semi-split";
    case Monodromy::NonSplit: return "non-split";
    case Monodromy::NotApplicable: return "n/a";
  }
  return "?";
}

inline Monodromy parse_monodromy(const std::string& s) {
  if (s == "split") return Monodromy::Split;
  if (s == "semi-split") return Monodromy::SemiSplit;
  if (s == "non-split") return Monodromy::NonSplit;
  if (s == "n/a" || s == "not-applicable") return Monodromy::NotApplicable;
  throw ParseError("unknown monodromy tag '" + s + "'");
}

/// Vanishing orders of alpha, beta and the discriminant along a component.
struct KodairaData {
  int ord_a = 0;
  int ord_b = 0;
  int ord_d = 1;
  Monodromy monodromy = Monodromy::NotApplicable;
};

struct FiberAssignment {
  KodairaType type;
  std::optional<Algebra> algebra;
  int fiber_euler = 0;
  int lambda = 0;
  TableRow row;
};

/// Fiber type from vanishing orders (Tate), without the algebra.
inline KodairaType kodaira_type_from_orders(int a, int b, int d) {
  using F = KodairaType::Family;
  if (a < 0 || b < 0 || d < 0) throw DomainError("vanishing orders must be nonnegative");
  if (a >= 4 && b >= 6) throw DomainError("non-minimal vanishing orders (" + std::to_string(a) + ", " +
                                          std::to_string(b) + ", " + std::to_string(d) + ")");
  const int m = std::min(3 * a, 2 * b);
  const bool consistent = 3 * a == 2 * b ? d >= m : d == m;
  if (!consistent)
    throw DomainError("ord(Delta) = " + std::to_string(d) + " is inconsistent with ord(alpha) = " +
                      std::to_string(a) + ", ord(beta) = " + std::to_string(b));
  if (d == 0) throw DomainError("the discriminant does not vanish along this component");
  switch (m) {
    case 0: return {F::In, d};
    case 2: return {F::II, 0};
    case 3: return {F::III, 0};
    case 4: return {F::IV, 0};
    case 6: return {F::InStar, d - 6};
    case 8: return {F::IVStar, 0};
    case 9: return {F::IIIStar, 0};
    case 10: return {F::IIStar, 0};
  }
  throw DomainError("no Kodaira type for these orders");
}

inline FiberAssignment classify_fiber(const KodairaData& data) {
  using F = KodairaType::Family;
  KodairaType type = kodaira_type_from_orders(data.ord_a, data.ord_b, data.ord_d);
  const Monodromy mono = data.monodromy;
  auto incompatible = [&] {
    return DomainError("monodromy '" + to_string(mono) + "' is incompatible with type " + type.to_string());
  };
  auto require = [&](std::initializer_list<Monodromy> allowed) {
    if (std::find(allowed.begin(), allowed.end(), mono) == allowed.end()) throw incompatible();
  };
  using M = Monodromy;
  std::optional<Algebra> g;
  switch (type.family) {
    case F::In:
      if (type.n == 1) {
        require({M::NotApplicable});
      } else if (type.n == 2) {
        require({M::NotApplicable, M::Split});
        g = su(2);
      } else {
        require({M::Split, M::NonSplit});
        g = mono == M::Split ? su(type.n) : sp(type.n / 2);
      }
      break;
    case F::II: require({M::NotApplicable}); break;
    case F::III:
      require({M::NotApplicable, M::Split});
      g = su(2);
      break;
    case F::IV:
      require({M::Split, M::NonSplit});
      g = mono == M::Split ? su(3) : sp(1);
      break;
    case F::InStar:
      if (type.n == 0) {
        require({M::Split, M::SemiSplit, M::NonSplit});
        g = mono == M::Split ? so(8) : mono == M::SemiSplit ? so(7) : algebra_from_name("g2");
      } else {
        require({M::Split, M::NonSplit});
        g = so(2 * type.n + (mono == M::Split ? 8 : 7));
      }
      break;
    case F::IVStar:
      require({M::Split, M::NonSplit});
      g = algebra_from_name(mono == M::Split ? "e6" : "f4");
      break;
    case F::IIIStar:
      require({M::NotApplicable});
      g = algebra_from_name("e7");
      break;
    case F::IIStar:
      require({M::NotApplicable});
      g = algebra_from_name("e8");
      break;
  }
  auto row = table_lookup(type, g);
  if (!row) throw DomainError(type.to_string() + " with " + (g ? g->name() : "trivial") + " is not in the table");
  return {type, g, type.fiber_euler(), data.ord_d, *row};
}

/// Sigma_0 = -12 K - lambda Sigma_1.
inline DivisorClass residual_discriminant(const BaseSurface& base, const DivisorClass& sigma1, int lambda) {
  return sum(scaled(base.canonical, -12), scaled(sigma1, -lambda));
}

struct BudgetCheck {
  std::int64_t budget = 0;    // Sigma_0 . Sigma_1
  std::int64_t declared = 0;  // r1 B1 + r2 B2
  bool passes() const { return budget == declared; }
  friend bool operator==(const BudgetCheck&, const BudgetCheck&) = default;
};

inline BudgetCheck collision_budget(const BaseSurface& base, const DivisorClass& sigma1, int lambda, int r1, int r2,
                                    std::int64_t b1_count, std::int64_t b2_count) {
  if (r1 < 1 || r2 < 1) throw DomainError("r1 and r2 must be positive");
  if (b1_count < 0 || b2_count < 0) throw DomainError("collision counts must be nonnegative");
  std::int64_t budget = intersect(base, residual_discriminant(base, sigma1, lambda), sigma1);
  if (budget < 0) throw DomainError("negative collision budget " + std::to_string(budget));
  return {budget, r1 * b1_count + r2 * b2_count};
}

}  // namespace kodaira
