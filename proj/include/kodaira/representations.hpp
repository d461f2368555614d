#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kodaira/lie_algebra.hpp"

namespace kodaira {

enum class RepName { Singlet, Adj, Fund, Lambda2, Lambda2Traceless, Vect, Spin, SpinPM, Seven, TwentySix, TwentySeven, FiftySix };

inline std::string to_string(RepName n) {
  switch (n) {
    case RepName::Singlet: return "singlet";
    case RepName::Adj: return "adj";
    case RepName::Fund: return "fund";
    case RepName::Lambda2: return "Lambda2";
    case RepName::Lambda2Traceless: return "Lambda2_0";
    case RepName::Vect: return "vect";
    case RepName::Spin: return "spin";
    case RepName::SpinPM: return "spin+-";
    case RepName::Seven: return "7";
    case RepName::TwentySix: return "26";
    case RepName::TwentySeven: return "27";
    case RepName::FiftySix: return "56";
  }
  return "?";
}

inline RepName rep_name_from_string(const std::string& s) {
  static const std::vector<std::pair<std::string, RepName>> names{
      {"singlet", RepName::Singlet}, {"1", RepName::Singlet},        {"adj", RepName::Adj},
      {"fund", RepName::Fund},       {"Lambda2", RepName::Lambda2}, {"Lambda2_0", RepName::Lambda2Traceless},
      {"vect", RepName::Vect},       {"spin", RepName::Spin},       {"spin+-", RepName::SpinPM},
      {"spin+", RepName::SpinPM},    {"spin-", RepName::SpinPM},    {"7", RepName::Seven},
      {"26", RepName::TwentySix},    {"27", RepName::TwentySeven},  {"56", RepName::FiftySix}};
  for (const auto& [k, v] : names)
    if (k == s) return v;
  throw ParseError("unknown representation name '" + s + "'");
}

/// A named representation, possibly reducible (Lambda2 of sp(k) is
/// Lambda2_0 + singlet), times a rational prefactor.
struct Rep {
  Algebra algebra;
  RepName name = RepName::Singlet;
  std::vector<Weight> components;
  Rational prefactor = 1;
  bool conjugate = false;

  const Weight& highest_weight() const { return components.front(); }

  std::string label() const {
    std::string s;
    if (prefactor != 1) s = (prefactor == Rational(1, 2) ? std::string("1/2") : to_string(prefactor)) + "*";
    s += to_string(name);
    if (name == RepName::SpinPM) s += highest_weight().back() ? "(spin+)" : "(spin-)";
    if (conjugate) s += "-bar";
    return s;
  }
};

namespace detail {

inline Weight fundamental(const Algebra& g, int one_based) {
  Weight w(g.rank(), 0);
  w[one_based - 1] = 1;
  return w;
}

}  // namespace detail

/// Highest-weight registry for the representation names that occur in the
/// classification table. Throws if the name is not defined for the algebra.
inline Rep make_rep(const Algebra& g, RepName name, Rational prefactor = 1) {
  Rep rep{g, name, {}, prefactor, false};
  const int r = g.rank();
  const Family f = g.family();
  auto undefined = [&] { return DomainError(to_string(name) + " is not defined for " + g.name()); };
  auto omega = [&](int i) { return detail::fundamental(g, i); };
  switch (name) {
    case RepName::Singlet: rep.components = {Weight(r, 0)}; break;
    case RepName::Adj: rep.components = {g.highest_root()}; break;
    case RepName::Fund:
      if (f != Family::SU && f != Family::SP) throw undefined();
      rep.components = {omega(1)};
      break;
    case RepName::Lambda2:
      if (f == Family::SU && g.family_parameter() >= 4) {
        rep.components = {omega(2)};
      } else if (f == Family::SP) {
        rep.components = r >= 2 ? std::vector<Weight>{omega(2), Weight(r, 0)} : std::vector<Weight>{Weight(r, 0)};
      } else {
        throw undefined();
      }
      break;
    case RepName::Lambda2Traceless:
      if (f != Family::SP || r < 2) throw undefined();
      rep.components = {omega(2)};
      break;
    case RepName::Vect:
      if (f != Family::SO) throw undefined();
      rep.components = {omega(1)};
      break;
    case RepName::Spin:
      if (f != Family::SO || g.series() != Series::B) throw undefined();
      rep.components = {omega(r)};
      break;
    case RepName::SpinPM:
      if (f != Family::SO || g.series() != Series::D) throw undefined();
      rep.components = {omega(r)};
      break;
    case RepName::Seven:
      if (f != Family::G2) throw undefined();
      rep.components = {omega(2)};
      break;
    case RepName::TwentySix:
      if (f != Family::F4) throw undefined();
      rep.components = {omega(4)};
      break;
    case RepName::TwentySeven:
      if (f != Family::E6) throw undefined();
      rep.components = {omega(1)};
      break;
    case RepName::FiftySix:
      if (f != Family::E7) throw undefined();
      rep.components = {omega(7)};
      break;
  }
  return rep;
}

/// The other half-spin representation of so(2n).
inline Rep other_half_spin(const Rep& rep) {
  if (rep.name != RepName::SpinPM) throw DomainError("not a half-spin representation");
  Rep out = rep;
  const int r = rep.algebra.rank();
  Weight w(r, 0);
  w[rep.highest_weight()[r - 1] ? r - 2 : r - 1] = 1;
  out.components = {w};
  return out;
}

inline Integer rep_dim(const Rep& rep) {
  Integer d = 0;
  for (const auto& w : rep.components) d += weyl_dim(rep.algebra, w);
  return d;
}

/// dim minus the multiplicity of the zero weight, for one irreducible.
inline Integer charged_dim(const Algebra& g, const Weight& highest) {
  auto ws = weight_system(g, highest);
  return Integer(ws.total() - ws.multiplicity(Weight(g.rank(), 0)));
}

/// prefactor * (dim - mult of the zero weight), summed over components.
inline Rational charged_dim(const Rep& rep) {
  Integer sum = 0;
  for (const auto& w : rep.components) sum += charged_dim(rep.algebra, w);
  return rep.prefactor * Rational(sum);
}

inline Rational charged_dim(const std::vector<Rep>& reps) {
  Rational s = 0;
  for (const auto& r : reps) s += charged_dim(r);
  return s;
}

/// Names tried by identify_rep, in priority order.
inline std::vector<RepName> registry_names(const Algebra& g) {
  switch (g.family()) {
    case Family::SU:
      if (g.family_parameter() < 4) return {RepName::Singlet, RepName::Adj, RepName::Fund};
      return {RepName::Singlet, RepName::Adj, RepName::Fund, RepName::Lambda2};
    case Family::SP:
      if (g.family_parameter() < 2) return {RepName::Singlet, RepName::Adj, RepName::Fund};
      return {RepName::Singlet, RepName::Adj, RepName::Fund, RepName::Lambda2Traceless};
    case Family::SO:
      return g.series() == Series::B ? std::vector<RepName>{RepName::Singlet, RepName::Adj, RepName::Vect, RepName::Spin}
                                     : std::vector<RepName>{RepName::Singlet, RepName::Adj, RepName::Vect, RepName::SpinPM};
    case Family::G2: return {RepName::Singlet, RepName::Adj, RepName::Seven};
    case Family::F4: return {RepName::Singlet, RepName::Adj, RepName::TwentySix};
    case Family::E6: return {RepName::Singlet, RepName::Adj, RepName::TwentySeven};
    case Family::E7: return {RepName::Singlet, RepName::Adj, RepName::FiftySix};
    case Family::E8: return {RepName::Singlet, RepName::Adj};
  }
  return {};
}

/// Matches the dominant conjugate of `weight` against the registry, also
/// trying conjugate representations.
inline std::optional<Rep> identify_rep(const Algebra& g, const Weight& weight) {
  if (static_cast<int>(weight.size()) != g.rank()) return std::nullopt;
  Weight dominant = g.dominant_conjugate(weight);
  for (bool conj : {false, true}) {
    for (RepName name : registry_names(g)) {
      Rep rep = make_rep(g, name);
      std::vector<Weight> candidates{rep.highest_weight()};
      if (name == RepName::SpinPM) candidates.push_back(other_half_spin(rep).highest_weight());
      for (const auto& hw : candidates) {
        Weight target = hw;
        if (conj) {
          for (auto& x : target) x = -x;
          target = g.dominant_conjugate(target);
        }
        if (target == dominant) {
          rep.components = {dominant};
          rep.conjugate = conj && target != hw;
          return rep;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace kodaira
