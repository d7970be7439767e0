#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hfset/errors.hpp"

namespace hfset {

/// A countable graph presented by an enumeration, an adjacency test, a loop
/// test and an extension-witness procedure.
///
/// witness(U, V, looped) must return a vertex outside U ∪ V, joined to every
/// vertex of U and to none of V, whose loop status equals `looped`. Oracles
/// in simple mode are only ever asked for loopless witnesses.
template <class O>
concept ExtensionOracle = requires(O& oracle, const O& view, const typename O::vertex_type& x,
                                   std::span<const typename O::vertex_type> set) {
  { view.name() } -> std::convertible_to<std::string>;
  { view.loopy() } -> std::convertible_to<bool>;
  { oracle.vertex(std::size_t{}) } -> std::convertible_to<typename O::vertex_type>;
  { view.adjacent(x, x) } -> std::convertible_to<bool>;
  { view.has_loop(x) } -> std::convertible_to<bool>;
  { oracle.witness(set, set, bool{}) } -> std::convertible_to<typename O::vertex_type>;
};

/// Finite injective map between the vertices of two oracles.
template <class L, class R>
struct PartialIso {
  std::vector<std::pair<L, R>> pairs;

  std::size_t size() const { return pairs.size(); }
};

namespace detail {

template <class T>
bool contains(const std::vector<T>& values, const T& x) {
  return std::find(values.begin(), values.end(), x) != values.end();
}

// One extension step: `from` supplies the next unmatched vertex, `to`
// answers with a witness. `matched_from` / `matched_to` are the current
// domain and range in pair order.
template <ExtensionOracle From, ExtensionOracle To>
std::pair<typename From::vertex_type, typename To::vertex_type> extend(
    From& from, To& to, std::size_t& cursor, const std::vector<typename From::vertex_type>& matched_from,
    const std::vector<typename To::vertex_type>& matched_to, std::size_t step) {
  typename From::vertex_type a = from.vertex(cursor++);
  while (contains(matched_from, a)) a = from.vertex(cursor++);

  std::vector<typename To::vertex_type> joined, apart;
  for (std::size_t i = 0; i < matched_from.size(); ++i) {
    (from.adjacent(a, matched_from[i]) ? joined : apart).push_back(matched_to[i]);
  }
  const bool looped = from.loopy() && from.has_loop(a);
  typename To::vertex_type b = to.witness(joined, apart, looped);

  auto fail = [&](const std::string& why) {
    throw ContractViolation("oracle '" + std::string(to.name()) + "' gave a bad witness at step " +
                            std::to_string(step) + " (|U|=" + std::to_string(joined.size()) +
                            ", |V|=" + std::to_string(apart.size()) + "): " + why);
  };
  if (contains(matched_to, b)) fail("witness is already matched");
  for (const auto& u : joined) {
    if (!to.adjacent(b, u)) fail("witness is not joined to a vertex of U");
  }
  for (const auto& v : apart) {
    if (to.adjacent(b, v)) fail("witness is joined to a vertex of V");
  }
  if (to.has_loop(b) != looped) fail(looped ? "witness lacks a loop" : "witness has a loop");
  return {std::move(a), std::move(b)};
}

}  // namespace detail

/// Builds a partial isomorphism of size `rounds` by alternately taking the
/// next unmatched vertex of the left enumeration (forth) and of the right
/// enumeration (back), matching each through the other side's witness
/// procedure. Throws PreconditionError when the oracles disagree on loop
/// mode and ContractViolation when a witness fails its contract.
template <ExtensionOracle Left, ExtensionOracle Right>
PartialIso<typename Left::vertex_type, typename Right::vertex_type> back_and_forth(
    Left& left, Right& right, std::size_t rounds) {
  if (left.loopy() != right.loopy()) {
    throw PreconditionError("oracles '" + std::string(left.name()) + "' and '" +
                            std::string(right.name()) + "' disagree on loop mode");
  }
  PartialIso<typename Left::vertex_type, typename Right::vertex_type> iso;
  std::vector<typename Left::vertex_type> domain;
  std::vector<typename Right::vertex_type> range;
  std::size_t left_cursor = 0, right_cursor = 0;
  for (std::size_t step = 0; step < rounds; ++step) {
    if (step % 2 == 0) {
      auto [a, b] = detail::extend(left, right, left_cursor, domain, range, step);
      domain.push_back(a);
      range.push_back(b);
    } else {
      auto [b, a] = detail::extend(right, left, right_cursor, range, domain, step);
      domain.push_back(a);
      range.push_back(b);
    }
    iso.pairs.emplace_back(domain.back(), range.back());
  }
  return iso;
}

/// Brute-force re-check of a partial isomorphism: injectivity, and
/// preservation of adjacency, non-adjacency and loops over all pairs.
/// Returns a description of every violation found.
template <ExtensionOracle Left, ExtensionOracle Right>
std::vector<std::string> partial_iso_violations(
    const Left& left, const Right& right,
    const PartialIso<typename Left::vertex_type, typename Right::vertex_type>& iso) {
  std::vector<std::string> out;
  const auto& p = iso.pairs;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (left.has_loop(p[i].first) != right.has_loop(p[i].second)) {
      out.push_back("loop status differs at pair " + std::to_string(i));
    }
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i].first == p[j].first || p[i].second == p[j].second) {
        out.push_back("pairs " + std::to_string(i) + " and " + std::to_string(j) + " are not injective");
      } else if (left.adjacent(p[i].first, p[j].first) != right.adjacent(p[i].second, p[j].second)) {
        out.push_back("adjacency differs between pairs " + std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
  return out;
}

}  // namespace hfset
