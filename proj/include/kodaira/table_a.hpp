#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kodaira/representations.hpp"

namespace kodaira {

/// Kodaira fiber type. `n` is the index of I_n and I*_n, zero otherwise.
struct KodairaType {
  enum class Family { In, II, III, IV, InStar, IVStar, IIIStar, IIStar };
  Family family = Family::In;
  int n = 1;

  std::string to_string() const {
    switch (family) {
      case Family::In: return "I" + std::to_string(n);
      case Family::II: return "II";
      case Family::III: return "III";
      case Family::IV: return "IV";
      case Family::InStar: return "I" + std::to_string(n) + "*";
      case Family::IVStar: return "IV*";
      case Family::IIIStar: return "III*";
      case Family::IIStar: return "II*";
    }
    return "?";
  }

  /// Euler number of the smooth Kodaira fiber.
  int fiber_euler() const {
    switch (family) {
      case Family::In: return n;
      case Family::II: return 2;
      case Family::III: return 3;
      case Family::IV: return 4;
      case Family::InStar: return n + 6;
      case Family::IVStar: return 8;
      case Family::IIIStar: return 9;
      case Family::IIStar: return 10;
    }
    return 0;
  }

  friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

/// "I5", "I0*", "II", "IV*", ...
inline KodairaType parse_kodaira_type(const std::string& s) {
  using F = KodairaType::Family;
  if (s == "II") return {F::II, 0};
  if (s == "III") return {F::III, 0};
  if (s == "IV") return {F::IV, 0};
  if (s == "IV*") return {F::IVStar, 0};
  if (s == "III*") return {F::IIIStar, 0};
  if (s == "II*") return {F::IIStar, 0};
  if (s.size() >= 2 && s[0] == 'I') {
    bool star = s.back() == '*';
    std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
    if (!digits.empty() && digits.size() <= 4 &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int n = std::stoi(digits);
      if (star) return {F::InStar, n};
      if (n >= 1) return {F::In, n};
    }
  }
  throw ParseError("unknown Kodaira type '" + s + "'");
}

/// A cell of the table: a sum of representations, "--" (nothing), a blank
/// cell, or a non-minimal marker.
struct TableEntry {
  enum class Kind { Reps, None, Blank, NonMinimal };
  Kind kind = Kind::None;
  std::vector<Rep> reps;

  bool usable() const { return kind == Kind::Reps || kind == Kind::None; }

  std::string to_string() const {
    switch (kind) {
      case Kind::None: return "--";
      case Kind::Blank: return "";
      case Kind::NonMinimal: return "NM";
      case Kind::Reps: {
        std::string s;
        for (const auto& r : reps) s += (s.empty() ? "" : " + ") + r.label();
        return s;
      }
    }
    return "";
  }
};

/// A transcribed charged dimension: a number, blank, or NM.
struct TableValue {
  enum class Kind { Number, Blank, NonMinimal };
  Kind kind = Kind::Number;
  Rational value = 0;

  std::string to_string() const {
    if (kind == Kind::Blank) return "";
    if (kind == Kind::NonMinimal) return "NM";
    return kodaira::to_string(value);
  }
};

struct TableRow {
  int row = 0;
  std::string type_pattern;  // e.g. "I_{2k+1}"
  KodairaType type;
  std::optional<Algebra> algebra;  // empty for the trivial algebra
  int parameter = 0;               // k or n for the parametric rows
  TableEntry rho0, rho_q1, rho_q2;
  /// Transcribed (dim adj)_ch, (dim rho0)_ch, (dim rho_Q1)_ch, (dim rho_Q2)_ch.
  std::array<TableValue, 4> transcribed;

  std::string algebra_name() const { return algebra ? algebra->name() : "trivial"; }
  /// g2 has a degree-3 monodromy cover; every other non-simply-laced row has degree 2.
  int cover_degree() const { return algebra && algebra->family() == Family::G2 ? 3 : 2; }
  bool has_rho0() const { return rho0.kind == TableEntry::Kind::Reps; }
};

namespace detail {

inline TableValue num(Rational v) { return {TableValue::Kind::Number, std::move(v), }; }
inline TableValue blank_value() { return {TableValue::Kind::Blank, 0}; }
inline TableValue nm_value() { return {TableValue::Kind::NonMinimal, 0}; }

inline TableEntry none() { return {TableEntry::Kind::None, {}}; }
inline TableEntry blank() { return {TableEntry::Kind::Blank, {}}; }
inline TableEntry nm() { return {TableEntry::Kind::NonMinimal, {}}; }
inline TableEntry reps(std::vector<Rep> r) { return {TableEntry::Kind::Reps, std::move(r)}; }

struct RowTemplate {
  int row;
  std::string pattern;
  int min_param, max_param;  // 0, 0 for fixed rows
  std::function<KodairaType(int)> type;
  std::function<std::optional<Algebra>(int)> algebra;
  std::function<TableEntry(const Algebra&, int)> rho0, q1, q2;
  std::function<std::array<TableValue, 4>(int)> dims;
};

inline const std::vector<RowTemplate>& row_templates() {
  using F = KodairaType::Family;
  using RN = RepName;
  auto fixed = [](F f, int n = 0) { return [f, n](int) { return KodairaType{f, n}; }; };
  auto alg = [](std::string name) { return [name](int) -> std::optional<Algebra> { return algebra_from_name(name); }; };
  auto trivial = [](int) -> std::optional<Algebra> { return std::nullopt; };
  auto e_none = [](const Algebra&, int) { return none(); };
  auto e_blank = [](const Algebra&, int) { return blank(); };
  auto e_nm = [](const Algebra&, int) { return nm(); };
  auto one = [](RN name, Rational pre = 1) {
    return [name, pre](const Algebra& g, int) { return reps({make_rep(g, name, pre)}); };
  };
  auto lambda2_plus_2fund = [](const Algebra& g, int) {
    return reps({make_rep(g, RN::Lambda2), make_rep(g, RN::Fund, 2)});
  };
  auto nums = [](Rational a, Rational b, Rational c, Rational d) {
    return [=](int) { return std::array<TableValue, 4>{num(a), num(b), num(c), num(d)}; };
  };
  auto nums_blank = [](Rational a, Rational b, Rational c) {
    return [=](int) { return std::array<TableValue, 4>{num(a), num(b), num(c), blank_value()}; };
  };

  static const std::vector<RowTemplate> rows{
      {1, "I_1", 0, 0, fixed(F::In, 1), trivial, e_none, e_none, e_none, nums(0, 0, 0, 0)},
      {2, "I_2", 0, 0, fixed(F::In, 2), alg("su2"), e_none, e_none, one(RN::Fund), nums(2, 0, 0, 2)},
      {3, "I_3", 0, 0, fixed(F::In, 3), alg("su3"), e_none, e_none, one(RN::Fund), nums(6, 0, 0, 3)},
      {4, "I_{2k}", 2, 1000, [](int k) { return KodairaType{F::In, 2 * k}; },
       [](int k) -> std::optional<Algebra> { return sp(k); }, one(RN::Lambda2Traceless), e_none, one(RN::Fund),
       [](int k) {
         return std::array<TableValue, 4>{num(2 * k * k), num(2 * k * k - 2 * k), num(0), num(2 * k)};
       }},
      {5, "I_{2k+1}", 1, 1000, [](int k) { return KodairaType{F::In, 2 * k + 1}; },
       [](int k) -> std::optional<Algebra> { return sp(k); }, lambda2_plus_2fund, one(RN::Fund, Rational(1, 2)),
       one(RN::Fund),
       [](int k) {
         return std::array<TableValue, 4>{num(2 * k * k), num(2 * k * k + 2 * k), num(k), num(2 * k)};
       }},
      {6, "I_n", 4, 1000, [](int n) { return KodairaType{F::In, n}; },
       [](int n) -> std::optional<Algebra> { return su(n); }, e_none, one(RN::Lambda2), one(RN::Fund),
       [](int n) {
         return std::array<TableValue, 4>{num(n * n - n), num(0), num(Rational(n * n - n, 2)), num(n)};
       }},
      {7, "II", 0, 0, fixed(F::II), trivial, e_none, e_none, e_blank, nums_blank(0, 0, 0)},
      {8, "III", 0, 0, fixed(F::III), alg("su2"), e_none, one(RN::Fund, 2), e_blank, nums_blank(2, 0, 4)},
      {9, "IV", 0, 0, fixed(F::IV), alg("sp1"), lambda2_plus_2fund, one(RN::Fund, Rational(1, 2)), e_blank,
       nums_blank(2, 4, 1)},
      {10, "IV", 0, 0, fixed(F::IV), alg("su3"), e_none, one(RN::Fund, 3), e_blank, nums_blank(6, 0, 9)},
      {11, "I_0^*", 0, 0, fixed(F::InStar, 0), alg("g2"), one(RN::Seven), e_none, e_blank, nums_blank(12, 6, 0)},
      {12, "I_0^*", 0, 0, fixed(F::InStar, 0), alg("so7"), one(RN::Vect), e_none, one(RN::Spin), nums(18, 6, 0, 8)},
      {13, "I_0^*", 0, 0, fixed(F::InStar, 0), alg("so8"), e_none, one(RN::Vect), one(RN::SpinPM),
       nums(24, 0, 8, 8)},
      {14, "I_1^*", 0, 0, fixed(F::InStar, 1), alg("so9"), one(RN::Vect), e_none, one(RN::Spin), nums(32, 8, 0, 16)},
      {15, "I_1^*", 0, 0, fixed(F::InStar, 1), alg("so10"), e_none, one(RN::Vect), one(RN::SpinPM),
       nums(40, 0, 10, 16)},
      {16, "I_2^*", 0, 0, fixed(F::InStar, 2), alg("so11"), one(RN::Vect), e_none, one(RN::Spin, Rational(1, 2)),
       nums(50, 10, 0, 16)},
      {17, "I_2^*", 0, 0, fixed(F::InStar, 2), alg("so12"), e_none, one(RN::Vect), one(RN::SpinPM, Rational(1, 2)),
       nums(60, 0, 12, 16)},
      {18, "I_n^*", 3, 1000, [](int n) { return KodairaType{F::InStar, n}; },
       [](int n) -> std::optional<Algebra> { return so(2 * n + 7); }, one(RN::Vect), e_none, e_nm,
       [](int n) {
         return std::array<TableValue, 4>{num(2 * (n + 3) * (n + 3)), num(2 * n + 6), num(0), nm_value()};
       }},
      {19, "I_n^*", 3, 1000, [](int n) { return KodairaType{F::InStar, n}; },
       [](int n) -> std::optional<Algebra> { return so(2 * n + 8); }, e_none, one(RN::Vect), e_nm,
       [](int n) {
         return std::array<TableValue, 4>{num(2 * (n + 3) * (n + 4)), num(0), num(2 * n + 8), nm_value()};
       }},
      {20, "IV^*", 0, 0, fixed(F::IVStar), alg("f4"), one(RN::TwentySix), e_none, e_blank, nums_blank(48, 24, 0)},
      {21, "IV^*", 0, 0, fixed(F::IVStar), alg("e6"), e_none, one(RN::TwentySeven), e_blank, nums_blank(72, 0, 27)},
      {22, "III^*", 0, 0, fixed(F::IIIStar), alg("e7"), e_none, one(RN::FiftySix, Rational(1, 2)), e_blank,
       nums_blank(126, 0, 28)},
      {23, "II^*", 0, 0, fixed(F::IIStar), alg("e8"), e_none, e_nm, e_blank,
       [](int) { return std::array<TableValue, 4>{num(240), num(0), nm_value(), blank_value()}; }},
  };
  return rows;
}

}  // namespace detail

inline constexpr int kTableRows = 23;

/// Row `row` (1-based) at parameter k or n; fixed rows ignore the parameter.
inline TableRow table_a(int row, int parameter = 0) {
  if (row < 1 || row > kTableRows) throw DomainError("no table row " + std::to_string(row));
  const auto& t = detail::row_templates()[row - 1];
  const bool parametric = t.max_param > 0;
  if (parametric && (parameter < t.min_param || parameter > t.max_param))
    throw DomainError("row " + std::to_string(row) + " needs parameter >= " + std::to_string(t.min_param));
  const int p = parametric ? parameter : 0;
  TableRow r;
  r.row = row;
  r.type_pattern = t.pattern;
  r.type = t.type(p);
  r.algebra = t.algebra(p);
  r.parameter = p;
  // the trivial-algebra rows only hold algebra-independent cells
  const Algebra g = r.algebra ? *r.algebra : su(2);
  r.rho0 = t.rho0(g, p);
  r.rho_q1 = t.q1(g, p);
  r.rho_q2 = t.q2(g, p);
  r.transcribed = t.dims(p);
  return r;
}

inline bool table_row_parametric(int row) { return detail::row_templates().at(row - 1).max_param > 0; }
inline int table_row_min_parameter(int row) { return detail::row_templates().at(row - 1).min_param; }

namespace detail {

// Parameter at which row `row` has fiber type `type`, if any.
inline std::optional<int> row_parameter(int row, const KodairaType& type) {
  const auto& t = row_templates()[row - 1];
  int p = 0;
  if (t.max_param > 0) {
    if (row == 4) p = type.n / 2;
    if (row == 5) p = (type.n - 1) / 2;
    if (row == 6 || row == 18 || row == 19) p = type.n;
    if (p < t.min_param || p > t.max_param) return std::nullopt;
  }
  if (!(t.type(p) == type)) return std::nullopt;
  return p;
}

}  // namespace detail

/// Row for a (type, algebra) pair, or nothing if the pair is not in the table.
inline std::optional<TableRow> table_lookup(const KodairaType& type, const std::optional<Algebra>& algebra) {
  for (int row = 1; row <= kTableRows; ++row) {
    auto p = detail::row_parameter(row, type);
    if (!p) continue;
    auto g = detail::row_templates()[row - 1].algebra(*p);
    if (g.has_value() != algebra.has_value()) continue;
    if (g && !(*g == *algebra)) continue;
    return table_a(row, *p);
  }
  return std::nullopt;
}

/// All rows with a given fiber type.
inline std::vector<TableRow> table_rows_for(const KodairaType& type) {
  std::vector<TableRow> out;
  for (int row = 1; row <= kTableRows; ++row)
    if (auto p = detail::row_parameter(row, type)) out.push_back(table_a(row, *p));
  return out;
}

/// Recomputed charged dimension of a cell; nothing for blank and NM cells.
inline std::optional<Rational> entry_charged_dim(const TableEntry& e) {
  if (e.kind == TableEntry::Kind::None) return Rational(0);
  if (e.kind != TableEntry::Kind::Reps) return std::nullopt;
  return charged_dim(e.reps);
}

inline Rational adjoint_charged_dim(const std::optional<Algebra>& g) {
  return g ? charged_dim(make_rep(*g, RepName::Adj)) : Rational(0);
}

/// Selector "I5:sp2", "I0*:g2", "II", "I1". Types with a single row may omit the algebra.
inline TableRow table_select(const std::string& selector) {
  auto colon = selector.find(':');
  KodairaType type = parse_kodaira_type(selector.substr(0, colon));
  if (colon == std::string::npos) {
    auto rows = table_rows_for(type);
    if (rows.size() == 1) return rows.front();
    if (rows.empty()) throw DomainError("no table row for " + type.to_string());
    throw ParseError("selector '" + selector + "' needs an algebra, e.g. '" + type.to_string() + ":su3'");
  }
  std::string name = selector.substr(colon + 1);
  std::optional<Algebra> g;
  if (name != "trivial" && name != "e" && !name.empty()) g = algebra_from_name(name);
  auto row = table_lookup(type, g);
  if (!row) throw DomainError("no table row for " + type.to_string() + " with " + (g ? g->name() : "trivial"));
  return *row;
}

}  // namespace kodaira
