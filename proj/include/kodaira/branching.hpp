#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kodaira/representations.hpp"

namespace kodaira {

/// Linear map from the weight lattice of `source` to that of `target`. When
/// `charged` is set the projection carries one extra row giving a u(1) charge.
struct Embedding {
  Algebra source;
  Algebra target;
  std::vector<std::vector<int>> projection;
  bool charged = false;

  std::pair<Weight, int> apply(const Weight& w) const {
    Weight out(target.rank(), 0);
    for (int i = 0; i < target.rank(); ++i)
      for (int j = 0; j < source.rank(); ++j) out[i] += projection[i][j] * w[j];
    int charge = 0;
    if (charged)
      for (int j = 0; j < source.rank(); ++j) charge += projection[target.rank()][j] * w[j];
    return {out, charge};
  }
};

inline void validate(const Embedding& e) {
  const std::size_t rows = static_cast<std::size_t>(e.target.rank()) + (e.charged ? 1 : 0);
  if (e.projection.size() != rows) throw DomainError("projection has the wrong number of rows");
  for (const auto& row : e.projection)
    if (row.size() != static_cast<std::size_t>(e.source.rank()))
      throw DomainError("projection has the wrong number of columns");
}

/// One irreducible of the subalgebra in a branching, with its u(1) charge.
struct BranchTerm {
  Weight highest;
  int charge = 0;
  std::int64_t multiplicity = 0;
};

/// Peels highest-weight orbits off a charged weight multiset.
inline std::vector<BranchTerm> decompose(const Algebra& g, std::map<std::pair<int, Weight>, std::int64_t> weights) {
  std::vector<BranchTerm> out;
  auto raised_present = [&](int charge, const Weight& w) {
    for (int i = 0; i < g.rank(); ++i) {
      Weight up = w;
      for (int j = 0; j < g.rank(); ++j) up[j] += g.cartan()[i][j];
      if (weights.count({charge, up})) return true;
    }
    return false;
  };
  while (!weights.empty()) {
    std::optional<std::pair<int, Weight>> top;
    for (const auto& [key, m] : weights) {
      if (g.is_dominant(key.second) && !raised_present(key.first, key.second)) {
        top = key;
        break;
      }
    }
    if (!top) throw DomainError("branching left weights that form no dominant orbit");
    const std::int64_t count = weights.at(*top);
    auto ws = weight_system(g, top->second);
    for (const auto& [w, m] : ws.multiplicities) {
      auto it = weights.find({top->first, w});
      if (it == weights.end() || it->second < count * m)
        throw DomainError("branching left weights that form no dominant orbit");
      it->second -= count * m;
      if (it->second == 0) weights.erase(it);
    }
    out.push_back({top->second, top->first, count});
  }
  return out;
}

/// Restriction of the irreducible with highest weight `highest` along `e`.
inline std::vector<BranchTerm> branch(const Embedding& e, const Weight& highest) {
  validate(e);
  std::map<std::pair<int, Weight>, std::int64_t> projected;
  for (const auto& [w, m] : weight_system(e.source, highest).multiplicities) {
    auto [p, q] = e.apply(w);
    projected[{q, p}] += m;
  }
  return decompose(e.target, std::move(projected));
}

inline std::vector<BranchTerm> branch(const Embedding& e, const Rep& rep) {
  if (!(rep.algebra == e.source)) throw DomainError("representation does not belong to the embedding source");
  std::vector<BranchTerm> out;
  for (const auto& w : rep.components) {
    auto part = branch(e, w);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

inline Integer total_dim(const Algebra& g, const std::vector<BranchTerm>& terms) {
  Integer d = 0;
  for (const auto& t : terms) d += weyl_dim(g, t.highest) * t.multiplicity;
  return d;
}

// Built-in embeddings, all in the fundamental-weight bases fixed in lie_algebra.hpp.

/// su(n+1) > su(n) + u(1), the u(1) normalized so the fund of su(n+1) has
/// charges 1 (n times) and -n.
inline Embedding su_to_su_u1(int n) {
  Embedding e{su(n + 1), su(n), {}, true};
  for (int i = 0; i < n - 1; ++i) {
    std::vector<int> row(n, 0);
    row[i] = 1;
    e.projection.push_back(row);
  }
  std::vector<int> charge(n);
  for (int j = 0; j < n; ++j) charge[j] = j + 1;
  e.projection.push_back(charge);
  return e;
}

/// su(2k+1) > sp(k) and su(2k) > sp(k).
inline Embedding su_to_sp(int n) {
  const int k = n / 2;
  Embedding e{su(n), sp(k), std::vector<std::vector<int>>(k, std::vector<int>(n - 1, 0)), false};
  if (n % 2) {
    for (int i = 1; i <= n - 1; ++i) e.projection[std::min(i, n - i) - 1][i - 1] = 1;
  } else {
    for (int i = 1; i < k; ++i) {
      e.projection[i - 1][i - 1] = 1;
      e.projection[i - 1][n - i - 1] = 1;
    }
    e.projection[k - 1][k - 1] = 1;
  }
  return e;
}

/// so(2n+2) > so(2n+1).
inline Embedding so_even_to_odd(int n) {
  Embedding e{so(2 * n + 2), so(2 * n + 1), std::vector<std::vector<int>>(n, std::vector<int>(n + 1, 0)), false};
  for (int i = 0; i < n; ++i) e.projection[i][i] = 1;
  e.projection[n - 1][n] = 1;
  return e;
}

inline Embedding e6_to_f4() {
  return {algebra_from_name("e6"), algebra_from_name("f4"),
          {{0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 1, 0}, {1, 0, 0, 0, 0, 1}}, false};
}

inline Embedding so8_to_g2() { return {so(8), algebra_from_name("g2"), {{0, 1, 0, 0}, {1, 0, 1, 1}}, false}; }

/// Registry lookup for the monodromy covers of the classification table.
inline std::optional<Embedding> builtin_embedding(const Algebra& big, const Algebra& small) {
  if (big.family() == Family::SU && small.family() == Family::SP && big.family_parameter() / 2 == small.family_parameter())
    return su_to_sp(big.family_parameter());
  if (big.family() == Family::SO && small.family() == Family::SO && big.family_parameter() % 2 == 0 &&
      small.family_parameter() == big.family_parameter() - 1)
    return so_even_to_odd(small.rank());
  if (big.family() == Family::E6 && small.family() == Family::F4) return e6_to_f4();
  if (big.family() == Family::SO && big.family_parameter() == 8 && small.family() == Family::G2) return so8_to_g2();
  if (big == small) {
    Embedding id{big, small, std::vector<std::vector<int>>(big.rank(), std::vector<int>(big.rank(), 0)), false};
    for (int i = 0; i < big.rank(); ++i) id.projection[i][i] = 1;
    return id;
  }
  return std::nullopt;
}

/// Data for the base-change method at a collision point.
struct KatzVafaContext {
  /// g_Q > g_Qs + u(1); absent when the algebra does not enhance at Q.
  std::optional<Embedding> enhancement;
  /// g_Qs > g, the monodromy cover; absent when g_Qs = g.
  std::optional<Embedding> restriction;
  int b = 1;
  /// Strip one half of each listed rep (rho_0 of a component branched at Q).
  std::vector<Rep> half_rho0;
};

struct KatzVafaResult {
  std::vector<Rep> rho;
  Integer singlet_dim = 0;
};

inline KatzVafaResult katz_vafa(const KatzVafaContext& ctx) {
  KatzVafaResult result;
  if (!ctx.enhancement) return result;
  if (ctx.b < 1) throw DomainError("b must be positive");
  const Embedding& up = *ctx.enhancement;
  if (!up.charged) throw DomainError("the enhancement embedding needs a u(1) charge row");
  const Algebra& gqs = up.target;

  auto terms = branch(up, make_rep(up.source, RepName::Adj));
  const Weight zero_qs(gqs.rank(), 0);
  const Weight adj_qs = gqs.highest_root();
  std::int64_t singlets = up.source.rank() - gqs.rank();
  bool adj_seen = false;
  std::vector<BranchTerm> positive;
  for (auto t : terms) {
    if (t.charge == 0) {
      if (t.highest == adj_qs && !adj_seen) {
        adj_seen = true;
        if (--t.multiplicity == 0) continue;
      }
      if (t.highest == zero_qs && t.multiplicity <= singlets) {
        singlets -= t.multiplicity;
        continue;
      }
      throw DomainError("neutral part of adj(g_Q) is not adj(g_Qs) plus Cartan singlets");
    }
    if (t.charge > 0) positive.push_back(t);
  }
  if (!adj_seen || singlets != 0) throw DomainError("neutral part of adj(g_Q) is not adj(g_Qs) plus Cartan singlets");

  Algebra g = ctx.restriction ? ctx.restriction->target : gqs;
  if (ctx.restriction && !(ctx.restriction->source == gqs)) throw DomainError("restriction does not start at g_Qs");
  std::map<Weight, Rational> content;
  for (const auto& t : positive) {
    if (!ctx.restriction) {
      content[t.highest] += t.multiplicity;
      continue;
    }
    for (const auto& s : branch(*ctx.restriction, t.highest)) content[s.highest] += t.multiplicity * s.multiplicity;
  }

  const Weight zero(g.rank(), 0);
  if (auto it = content.find(zero); it != content.end()) {
    result.singlet_dim = numerator(it->second);
    content.erase(it);
  }
  for (const auto& r : ctx.half_rho0) {
    if (!(r.algebra == g)) throw DomainError("rho_0 belongs to a different algebra");
    for (const auto& w : r.components) {
      if (w == zero) continue;
      content[w] -= r.prefactor / 2;
    }
  }
  for (auto& [w, m] : content) {
    if (m < 0) throw DomainError("leftover weights do not contain the stripped half rho_0");
    m /= ctx.b;
  }
  for (const auto& [w, m] : content) {
    if (m == 0) continue;
    auto rep = identify_rep(g, w);
    if (!rep) throw DomainError("Katz-Vafa remainder contains an unrecognized representation");
    rep->components = {w};
    rep->prefactor = m;
    result.rho.push_back(*rep);
  }
  return result;
}

}  // namespace kodaira
