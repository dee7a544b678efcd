#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ordfix/dyadic.hpp"

namespace ordfix {

using Element = std::size_t;
/// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Element>;

ElementSet make_set(std::vector<Element> elements);

/// A finite partially ordered set with a validated order relation, stored as
/// one bit row per element (row a has bit b set iff a <= b).
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Builds the poset whose order is given by `leq` on every ordered pair.
  /// The relation is checked for reflexivity, antisymmetry and transitivity.
  static FinitePoset from_order(std::vector<std::string> names,
                                const std::function<bool(Element, Element)>& leq);

  /// Componentwise order on a set of planar points. Names are the points'
  /// canonical "(s,t)" text.
  static FinitePoset from_points(std::vector<GridPoint> points);

  std::size_t size() const { return names_.size(); }
  ElementSet all() const;

  const std::string& name(Element e) const { return names_.at(e); }
  std::optional<Element> find(std::string_view name) const;
  /// Throws UnknownElement.
  Element at(std::string_view name) const;

  bool leq(Element a, Element b) const { return (rows_[a][b / 64] >> (b % 64)) & 1U; }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }

  /// [u) = {x : x >= u}
  ElementSet up_set(Element u) const;
  /// (w] = {x : x <= w}
  ElementSet down_set(Element w) const;
  /// [u, w] = [u) ∩ (w]
  ElementSet interval(Element u, Element w) const;

  bool has_coordinates() const { return !points_.empty(); }
  const GridPoint& point(Element e) const { return points_.at(e); }
  std::optional<Element> find_point(const GridPoint& p) const;

  /// Exhaustive re-check of reflexivity, antisymmetry and transitivity.
  bool check_order_axioms() const;

  std::vector<std::string> element_names(const ElementSet& set) const;

 private:
  friend FinitePoset validate_poset(std::vector<std::string> elements,
                                    const std::vector<std::pair<std::string, std::string>>& leq_pairs);

  void index_names();
  void set_bit(Element a, Element b) { rows_[a][b / 64] |= std::uint64_t{1} << (b % 64); }
  std::size_t words() const { return (names_.size() + 63) / 64; }

  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<GridPoint> points_;
};

/// Builds the poset whose order is the reflexive-transitive closure of
/// `leq_pairs`. Throws AntisymmetryViolation naming a 2-cycle of the closure,
/// or UnknownElement for a pair mentioning an undeclared element.
FinitePoset validate_poset(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& leq_pairs);

enum class Extremum { Sup, Inf };

/// Least upper bound (Sup) or greatest lower bound (Inf) of `subset`, taken
/// in the whole poset; nullopt if it does not exist.
std::optional<Element> extremum(const FinitePoset& poset, const ElementSet& subset, Extremum mode);

/// All upper (Sup) or lower (Inf) bounds of `subset` in the whole poset.
ElementSet bounds(const FinitePoset& poset, const ElementSet& subset, Extremum mode);

bool is_chain(const FinitePoset& poset, const ElementSet& subset);

/// Maximal (or minimal) elements of `subset` relative to `subset` itself.
ElementSet maximal_elements(const FinitePoset& poset, const ElementSet& subset);
ElementSet minimal_elements(const FinitePoset& poset, const ElementSet& subset);

// ---------------------------------------------------------------------------
// Chain-quantified predicates.
//
// Every predicate below quantifies over the nonempty chains of a subset. With
// ChainMethod::Enumerate all chains are generated explicitly and the call
// fails with BudgetExceeded when their number exceeds `budget`. With
// ChainMethod::Auto the chains are enumerated when they fit the budget;
// otherwise each predicate is evaluated over chain maxima, which is exact for
// finite posets because a finite chain has the same upper bounds as its
// largest element.

enum class ChainMethod { Enumerate, Auto };

struct ChainOptions {
  std::uint64_t budget = 1'000'000;
  ChainMethod method = ChainMethod::Auto;
};

struct ChainVerdict {
  bool holds = true;
  /// A chain on which the property fails, when !holds.
  ElementSet failing_chain;
  std::uint64_t chains_examined = 0;
  /// True when the verdict came from the chain-maximum evaluation.
  bool by_chain_maximum = false;
};

/// Number of nonempty chains contained in `subset`, saturating at UINT64_MAX.
std::uint64_t count_chains(const FinitePoset& poset, const ElementSet& subset);

/// Calls `visit` on every nonempty chain of `subset` (elements listed in
/// increasing order). Returning false from `visit` stops the walk. Throws
/// BudgetExceeded if more than `budget` chains would be produced.
void for_each_chain(const FinitePoset& poset, const ElementSet& subset, std::uint64_t budget,
                    const std::function<bool(const ElementSet&)>& visit);

ChainVerdict is_chain_complete(const FinitePoset& poset, const ElementSet& subset,
                               const ChainOptions& options = {});
ChainVerdict is_inductive(const FinitePoset& poset, const ElementSet& subset,
                          const ChainOptions& options = {});
/// Inductive for the order and for its dual.
ChainVerdict is_bi_inductive(const FinitePoset& poset, const ElementSet& subset,
                             const ChainOptions& options = {});
/// Chains are taken in `ambient`; `a` must be a nonempty subset of it.
ChainVerdict is_universally_inductive(const FinitePoset& poset, const ElementSet& ambient,
                                      const ElementSet& a, const ChainOptions& options = {});
/// Chains are taken in the whole poset.
ChainVerdict is_universally_inductive(const FinitePoset& poset, const ElementSet& a,
                                      const ChainOptions& options = {});

}  // namespace ordfix
