#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kodaira/rational.hpp"

namespace kodaira {

enum class Series { A, B, C, D, E, F, G };

/// Physics naming of the simple algebras. su(n) = A_{n-1}, so(2n+1) = B_n,
/// sp(k) = C_k (sp(1) uses the A_1 root datum), so(2n) = D_n.
enum class Family { SU, SP, SO, G2, F4, E6, E7, E8 };

/// Integer vector in the fundamental-weight basis (Dynkin labels).
using Weight = std::vector<int>;
/// Integer vector in the simple-root basis.
using RootVector = std::vector<int>;

inline char series_letter(Series s) { return "ABCDEFG"[static_cast<int>(s)]; }

/// Root datum of a simple Lie algebra.
///
/// Conventions: cartan[i][j] = <alpha_i, alpha_j^vee> = 2(alpha_i, alpha_j)/(alpha_j, alpha_j),
/// so row i lists the Dynkin labels of the simple root alpha_i. Exceptional
/// and non-simply-laced diagrams follow Bourbaki numbering, except G2 where
/// alpha_1 is the long root (the 7 then has highest weight (0,1)).
class Algebra {
 public:
  Series series() const { return series_; }
  int rank() const { return rank_; }
  Family family() const { return family_; }
  /// n of su(n), k of sp(k), N of so(N); 0 for exceptional algebras.
  int family_parameter() const { return family_n_; }

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<RootVector>& positive_roots() const { return positive_roots_; }
  std::size_t dim() const { return static_cast<std::size_t>(rank_) + 2 * positive_roots_.size(); }

  /// Squared lengths of the simple roots up to a common scale.
  const std::vector<std::int64_t>& root_norms() const { return norms_; }

  bool simply_laced() const {
    return std::all_of(norms_.begin(), norms_.end(), [&](auto v) { return v == norms_.front(); });
  }

  /// "su(3)", "sp(2)", "so(7)", "g2", ...
  std::string name() const {
    switch (family_) {
      case Family::SU: return "su(" + std::to_string(family_n_) + ")";
      case Family::SP: return "sp(" + std::to_string(family_n_) + ")";
      case Family::SO: return "so(" + std::to_string(family_n_) + ")";
      case Family::G2: return "g2";
      case Family::F4: return "f4";
      case Family::E6: return "e6";
      case Family::E7: return "e7";
      case Family::E8: return "e8";
    }
    return "?";
  }

  std::string cartan_type() const { return std::string(1, series_letter(series_)) + std::to_string(rank_); }

  /// Dynkin labels of a root given in simple-root coordinates.
  Weight root_weight(const RootVector& c) const {
    Weight w(rank_, 0);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) w[j] += c[i] * cartan_[i][j];
    return w;
  }

  Weight simple_root_weight(int i) const { return Weight(cartan_[i].begin(), cartan_[i].end()); }

  Weight highest_root() const {
    const RootVector* best = &positive_roots_.front();
    for (const auto& r : positive_roots_)
      if (std::accumulate(r.begin(), r.end(), 0) > std::accumulate(best->begin(), best->end(), 0)) best = &r;
    return root_weight(*best);
  }

  /// Simple-root coordinates of an element of the root lattice given by
  /// Dynkin labels, or nothing if it is not in the root lattice.
  std::optional<RootVector> to_root_coordinates(const Weight& w) const {
    // solve c^T cartan = w
    std::vector<Rational> c(rank_, 0);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) c[i] += Rational(w[j]) * inverse_cartan_[j][i];
    RootVector out(rank_);
    for (int i = 0; i < rank_; ++i) {
      if (!is_integer(c[i])) return std::nullopt;
      out[i] = static_cast<int>(to_int64(c[i]));
    }
    return out;
  }

  /// Scaled inner product of weights: scale() * (a, b).
  std::int64_t scaled_inner(const Weight& a, const Weight& b) const {
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < rank_; ++j) s += std::int64_t{a[i]} * b[j] * weight_gram_[i][j];
    }
    return s;
  }
  std::int64_t scale() const { return gram_scale_; }

  /// Reflection of a weight through the i-th simple root.
  Weight reflect(const Weight& w, int i) const {
    Weight r = w;
    for (int j = 0; j < rank_; ++j) r[j] -= w[i] * cartan_[i][j];
    return r;
  }

  Weight dominant_conjugate(Weight w) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < rank_; ++i) {
        if (w[i] < 0) {
          w = reflect(w, i);
          changed = true;
        }
      }
    }
    return w;
  }

  bool is_dominant(const Weight& w) const {
    return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.family_ == b.family_ && a.family_n_ == b.family_n_ && a.series_ == b.series_ && a.rank_ == b.rank_;
  }

  static Algebra build(Series series, int rank, Family family, int family_n);

 private:
  Series series_ = Series::A;
  int rank_ = 0;
  Family family_ = Family::SU;
  int family_n_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::int64_t> norms_;
  std::vector<RootVector> positive_roots_;
  std::vector<std::vector<Rational>> inverse_cartan_;
  std::vector<std::vector<std::int64_t>> weight_gram_;
  std::int64_t gram_scale_ = 1;
};

namespace detail {

// Integer Gram matrix of the simple roots, any overall scale.
inline std::vector<std::vector<std::int64_t>> simple_root_gram(Series s, int n) {
  std::vector<std::vector<std::int64_t>> g(n, std::vector<std::int64_t>(n, 0));
  auto link = [&](int i, int j, std::int64_t v) { g[i][j] = g[j][i] = v; };
  switch (s) {
    case Series::A:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Series::B:
      for (int i = 0; i < n; ++i) g[i][i] = i + 1 < n ? 2 : 1;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Series::C:
      for (int i = 0; i < n; ++i) g[i][i] = i + 1 < n ? 2 : 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case Series::D:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Series::E:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Series::F:
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Series::G:
      g[0][0] = 6;
      g[1][1] = 2;
      link(0, 1, -3);
      break;
  }
  return g;
}

inline std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (a[p][col] == 0) ++p;
    std::swap(a[p], a[col]);
    Rational inv = Rational(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace detail

inline Algebra Algebra::build(Series series, int rank, Family family, int family_n) {
  Algebra a;
  a.series_ = series;
  a.rank_ = rank;
  a.family_ = family;
  a.family_n_ = family_n;
  auto gram = detail::simple_root_gram(series, rank);
  a.cartan_.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    a.norms_.push_back(gram[i][i]);
    for (int j = 0; j < rank; ++j) a.cartan_[i][j] = static_cast<int>(2 * gram[i][j] / gram[j][j]);
  }

  // Positive roots by height, extending along simple-root strings.
  std::set<RootVector> known;
  std::vector<RootVector> layer;
  for (int i = 0; i < rank; ++i) {
    RootVector r(rank, 0);
    r[i] = 1;
    layer.push_back(r);
    known.insert(r);
  }
  while (!layer.empty()) {
    a.positive_roots_.insert(a.positive_roots_.end(), layer.begin(), layer.end());
    std::vector<RootVector> next;
    for (const auto& beta : layer) {
      Weight labels = a.root_weight(beta);
      for (int i = 0; i < rank; ++i) {
        int p = 0;
        RootVector down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int q = p - labels[i];
        if (q <= 0) continue;
        RootVector up = beta;
        up[i] += 1;
        if (known.insert(up).second) next.push_back(up);
      }
    }
    layer = std::move(next);
  }

  a.inverse_cartan_ = detail::invert(a.cartan_);
  // (omega_i, omega_j) = (A^{-1})_{ij} (alpha_j, alpha_j) / 2
  std::vector<std::vector<Rational>> wg(rank, std::vector<Rational>(rank));
  Integer common = 1;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      wg[i][j] = a.inverse_cartan_[i][j] * Rational(gram[j][j], 2);
      common = boost::multiprecision::lcm(common, denominator(wg[i][j]));
    }
  a.gram_scale_ = common.convert_to<std::int64_t>();
  a.weight_gram_.assign(rank, std::vector<std::int64_t>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) a.weight_gram_[i][j] = to_int64(wg[i][j] * common);
  return a;
}

/// Root datum for a (series, rank) pair of the classification.
inline Algebra simple_algebra(Series series, int rank) {
  auto bad = [&] {
    return DomainError("no simple Lie algebra of type " + std::string(1, series_letter(series)) +
                       std::to_string(rank));
  };
  switch (series) {
    case Series::A:
      if (rank < 1) throw bad();
      return Algebra::build(series, rank, Family::SU, rank + 1);
    case Series::B:
      if (rank < 2) throw bad();
      return Algebra::build(series, rank, Family::SO, 2 * rank + 1);
    case Series::C:
      if (rank < 2) throw bad();
      return Algebra::build(series, rank, Family::SP, rank);
    case Series::D:
      if (rank < 3) throw bad();
      return Algebra::build(series, rank, Family::SO, 2 * rank);
    case Series::E:
      if (rank < 6 || rank > 8) throw bad();
      return Algebra::build(series, rank, rank == 6 ? Family::E6 : rank == 7 ? Family::E7 : Family::E8, 0);
    case Series::F:
      if (rank != 4) throw bad();
      return Algebra::build(series, rank, Family::F4, 0);
    case Series::G:
      if (rank != 2) throw bad();
      return Algebra::build(series, rank, Family::G2, 0);
  }
  throw bad();
}

inline Algebra su(int n) {
  if (n < 2) throw DomainError("su(n) needs n >= 2");
  return simple_algebra(Series::A, n - 1);
}

inline Algebra sp(int k) {
  if (k < 1) throw DomainError("sp(k) needs k >= 1");
  if (k == 1) return Algebra::build(Series::A, 1, Family::SP, 1);
  return simple_algebra(Series::C, k);
}

inline Algebra so(int n) {
  if (n < 5) throw DomainError("so(n) needs n >= 5");
  return n % 2 ? simple_algebra(Series::B, (n - 1) / 2) : simple_algebra(Series::D, n / 2);
}

/// Parses "su3", "su(3)", "sp2", "so(10)", "g2", "f4", "e6", "e7", "e8".
inline Algebra algebra_from_name(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != '(' && c != ')' && c != ' ') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto number = [&](std::size_t from) {
    if (from >= s.size()) throw ParseError("missing rank in algebra name '" + raw + "'");
    int v = 0;
    for (std::size_t i = from; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("bad algebra name '" + raw + "'");
      v = v * 10 + (s[i] - '0');
      if (v > 1000) throw ParseError("algebra rank too large in '" + raw + "'");
    }
    return v;
  };
  if (s == "g2") return simple_algebra(Series::G, 2);
  if (s == "f4") return simple_algebra(Series::F, 4);
  if (s == "e6") return simple_algebra(Series::E, 6);
  if (s == "e7") return simple_algebra(Series::E, 7);
  if (s == "e8") return simple_algebra(Series::E, 8);
  if (s.rfind("su", 0) == 0) return su(number(2));
  if (s.rfind("sp", 0) == 0) return sp(number(2));
  if (s.rfind("so", 0) == 0) return so(number(2));
  if (s.size() >= 2 && std::string("ABCDEFG").find(static_cast<char>(std::toupper(s[0]))) != std::string::npos) {
    auto series = static_cast<Series>(std::string("ABCDEFG").find(static_cast<char>(std::toupper(s[0]))));
    return simple_algebra(series, number(1));
  }
  throw ParseError("unknown algebra name '" + raw + "'");
}

/// Product formula over positive roots.
inline Integer weyl_dim(const Algebra& g, const Weight& highest) {
  if (static_cast<int>(highest.size()) != g.rank()) throw DomainError("weight length does not match rank");
  if (!g.is_dominant(highest)) throw DomainError("highest weight is not dominant");
  Rational product = 1;
  const auto& norms = g.root_norms();
  for (const auto& alpha : g.positive_roots()) {
    std::int64_t num = 0, den = 0;
    for (int j = 0; j < g.rank(); ++j) {
      num += std::int64_t{highest[j] + 1} * alpha[j] * norms[j];
      den += std::int64_t{alpha[j]} * norms[j];
    }
    product *= Rational(num, den);
  }
  return numerator(product);
}

/// Weights with multiplicities of an irreducible representation.
struct WeightSystem {
  std::map<Weight, std::int64_t> multiplicities;

  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& [w, m] : multiplicities) t += m;
    return t;
  }
  std::int64_t multiplicity(const Weight& w) const {
    auto it = multiplicities.find(w);
    return it == multiplicities.end() ? 0 : it->second;
  }
};

struct WeightSystemOptions {
  std::int64_t dimension_cap = 10000;
};

/// Freudenthal recursion over the dominant weights below `highest`, with the
/// remaining weights filled in by Weyl symmetry.
inline WeightSystem weight_system(const Algebra& g, const Weight& highest, const WeightSystemOptions& options = {}) {
  Integer dim = weyl_dim(g, highest);
  if (dim > options.dimension_cap)
    throw DomainError("representation of dimension " + dim.str() + " exceeds the weight-system cap");
  const int r = g.rank();

  // All weights, layer by layer below the highest weight.
  std::set<Weight> all{highest};
  std::vector<std::vector<Weight>> layers{{highest}};
  while (!layers.back().empty()) {
    std::vector<Weight> next;
    for (const auto& mu : layers.back()) {
      for (int i = 0; i < r; ++i) {
        int q = 0;
        Weight up = mu;
        while (true) {
          for (int j = 0; j < r; ++j) up[j] += g.cartan()[i][j];
          if (!all.count(up)) break;
          ++q;
        }
        if (mu[i] + q < 1) continue;
        Weight down = mu;
        for (int j = 0; j < r; ++j) down[j] -= g.cartan()[i][j];
        if (all.insert(down).second) next.push_back(down);
      }
    }
    layers.push_back(std::move(next));
  }

  Weight rho(r, 1);
  auto plus = [](Weight a, const Weight& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  std::vector<Weight> root_weights;
  for (const auto& alpha : g.positive_roots()) root_weights.push_back(g.root_weight(alpha));

  Weight top = plus(highest, rho);
  const std::int64_t top_norm = g.scaled_inner(top, top);
  std::map<Weight, std::int64_t> dominant_mult;
  dominant_mult[highest] = 1;
  auto lookup = [&](const Weight& w) -> std::int64_t {
    if (!all.count(w)) return 0;
    auto it = dominant_mult.find(g.dominant_conjugate(w));
    return it == dominant_mult.end() ? 0 : it->second;
  };

  for (std::size_t level = 1; level < layers.size(); ++level) {
    for (const auto& mu : layers[level]) {
      if (!g.is_dominant(mu)) continue;
      std::int64_t sum = 0;
      for (const auto& alpha : root_weights) {
        Weight shifted = plus(mu, alpha);
        while (all.count(shifted)) {
          sum += lookup(shifted) * g.scaled_inner(shifted, alpha);
          shifted = plus(shifted, alpha);
        }
      }
      Weight mr = plus(mu, rho);
      std::int64_t denom = top_norm - g.scaled_inner(mr, mr);
      dominant_mult[mu] = 2 * sum / denom;
    }
  }

  WeightSystem ws;
  for (const auto& w : all) {
    auto m = lookup(w);
    if (m > 0) ws.multiplicities[w] = m;
  }
  return ws;
}

}  // namespace kodaira
