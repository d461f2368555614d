#pragma once

// Weights of the classical representations written out in an orthonormal
// basis, plus textbook counts for the exceptional ones. Independent of the
// Cartan-matrix machinery in the library.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kodaira::oracle {

using Vec = std::vector<int>;  // doubled coordinates so spinor weights stay integral

struct DimZero {
  std::int64_t dim;
  std::int64_t zero;
};

inline DimZero count(const std::vector<Vec>& weights, std::int64_t extra_zero = 0) {
  std::int64_t z = extra_zero;
  for (const auto& w : weights) {
    bool all = true;
    for (int x : w) all = all && x == 0;
    z += all;
  }
  return {static_cast<std::int64_t>(weights.size()) + extra_zero, z};
}

inline Vec unit(int n, int i, int scale = 2) {
  Vec v(n, 0);
  v[i] = scale;
  return v;
}

inline Vec add(Vec a, const Vec& b, int sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
  return a;
}

// su(n): weights e_i live in R^n modulo (1,...,1), so a weight is zero iff
// all its coordinates are equal.
inline DimZero su_count(const std::vector<Vec>& weights, std::int64_t extra_zero = 0) {
  std::int64_t z = extra_zero;
  for (const auto& w : weights) {
    bool equal = true;
    for (int x : w) equal = equal && x == w.front();
    z += equal;
  }
  return {static_cast<std::int64_t>(weights.size()) + extra_zero, z};
}

inline DimZero su_fund(int n) {
  std::vector<Vec> w;
  for (int i = 0; i < n; ++i) w.push_back(unit(n, i));
  return su_count(w);
}

inline DimZero su_adj(int n) {
  std::vector<Vec> w;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) w.push_back(add(unit(n, i), unit(n, j), -1));
  return su_count(w, n - 1);
}

inline DimZero su_lambda2(int n) {
  std::vector<Vec> w;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) w.push_back(add(unit(n, i), unit(n, j)));
  return su_count(w);
}

inline std::vector<Vec> plus_minus_pairs(int n) {
  std::vector<Vec> w;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int s : {1, -1})
        for (int t : {1, -1}) w.push_back(add(add(Vec(n, 0), unit(n, i), s), unit(n, j), t));
  return w;
}

inline std::vector<Vec> plus_minus_units(int n, int scale = 2) {
  std::vector<Vec> w;
  for (int i = 0; i < n; ++i)
    for (int s : {1, -1}) w.push_back(add(Vec(n, 0), unit(n, i, scale), s));
  return w;
}

inline DimZero sp_fund(int k) { return count(plus_minus_units(k)); }

inline DimZero sp_adj(int k) {
  auto w = plus_minus_pairs(k);
  for (auto& v : plus_minus_units(k, 4)) w.push_back(v);
  return count(w, k);
}

inline DimZero sp_lambda2_traceless(int k) { return count(plus_minus_pairs(k), k - 1); }

inline DimZero so_vect(int N) {
  auto w = plus_minus_units(N / 2);
  return count(w, N % 2);
}

inline DimZero so_adj(int N) {
  int n = N / 2;
  auto w = plus_minus_pairs(n);
  if (N % 2)
    for (auto& v : plus_minus_units(n)) w.push_back(v);
  return count(w, n);
}

// Spinor weights (+-1/2, ..., +-1/2); half-spin keeps an even number of minus signs.
inline DimZero so_spin(int N, bool half) {
  int n = N / 2;
  std::vector<Vec> w;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (half && __builtin_popcount(mask) % 2) continue;
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
    w.push_back(v);
  }
  return count(w);
}

// Exceptional algebras: dimension and zero-weight multiplicity.
// 7 of g2: short roots plus one zero. 26 of f4: short roots plus two zeros.
// 27 of e6 and 56 of e7 are minuscule.
inline DimZero exceptional(const std::string& rep) {
  if (rep == "g2.adj") return {14, 2};
  if (rep == "g2.7") return {7, 1};
  if (rep == "f4.adj") return {52, 4};
  if (rep == "f4.26") return {26, 2};
  if (rep == "e6.adj") return {78, 6};
  if (rep == "e6.27") return {27, 0};
  if (rep == "e7.adj") return {133, 7};
  if (rep == "e7.56") return {56, 0};
  if (rep == "e8.adj") return {248, 8};
  return {0, 0};
}

}  // namespace kodaira::oracle
