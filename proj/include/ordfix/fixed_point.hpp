#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ordfix/error.hpp"
#include "ordfix/poset.hpp"

namespace ordfix {

/// Set-valued self-map of a subset D of a finite poset. Every element of the
/// domain has a nonempty image contained in the host poset. Single-valued
/// maps are the singleton-image case.
class SetValuedMap {
 public:
  SetValuedMap() = default;
  /// `images[i]` is the image of `domain[i]`. Throws InvalidMap on empty
  /// images, elements outside the poset, or duplicate domain entries.
  SetValuedMap(const FinitePoset& poset, const ElementSet& domain, std::vector<ElementSet> images);

  static SetValuedMap single_valued(const FinitePoset& poset, const ElementSet& domain,
                                    const std::vector<Element>& values);

  const ElementSet& domain() const { return domain_; }
  bool defined_at(Element x) const { return x < slot_.size() && slot_[x] >= 0; }
  /// Throws InvalidMap when x is outside the domain.
  const ElementSet& image(Element x) const;
  bool contains(Element x, Element y) const;

 private:
  ElementSet domain_;
  std::vector<ElementSet> images_;
  std::vector<long> slot_;
};

enum class Isotone { Upward, Downward, Both };

struct IsotoneVerdict {
  bool holds = true;
  /// Violating triple: x <= y, z in T(x) (upward) or z in T(y) (downward)
  /// with no partner on the other side.
  std::optional<std::tuple<Element, Element, Element>> witness;
  Isotone failed_direction = Isotone::Upward;
};

IsotoneVerdict check_isotone(const FinitePoset& poset, const SetValuedMap& map, Isotone mode);

/// {x in D : x in T(x)}
ElementSet fixed_point_set(const SetValuedMap& map);

struct HypothesisEntry {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct FixedPointReport {
  ElementSet fixed_points;
  bool is_inductive = false;
  /// Fixed points lying above the seed x0.
  ElementSet above_seed;
  bool above_seed_inductive = false;
  /// Maximal elements of above_seed; each is a maximal fixed point.
  ElementSet maximal_elements;
  std::vector<HypothesisEntry> hypothesis_log;
  std::vector<HypothesisEntry> conclusion_log;

  bool hypotheses_pass() const;
  bool conclusions_pass() const;
};

/// Raised when a hypothesis of the fixed-point theorem fails; carries the
/// log gathered so far (conclusions are not asserted).
class HypothesisFailure : public Error {
 public:
  HypothesisFailure(std::string hypothesis, std::string witness, FixedPointReport partial)
      : Error(ErrorKind::HypothesisFailed, hypothesis + " (" + witness + ")"),
        hypothesis_(std::move(hypothesis)),
        witness_(std::move(witness)),
        report_(std::move(partial)) {}

  const std::string& hypothesis() const { return hypothesis_; }
  const std::string& witness() const { return witness_; }
  const FixedPointReport& report() const { return report_; }

 private:
  std::string hypothesis_;
  std::string witness_;
  FixedPointReport report_;
};

/// Checks the hypotheses of the set-valued fixed-point theorem on (D, T, x0):
///   D chain-complete; A1 T isotone upward; A2 each T(x) universally
///   inductive in D; A3 some x1 in T(x0) with x0 <= x1.
/// When all hold, computes and certifies the conclusions: the fixed-point
/// set is nonempty and inductive, its part above x0 is nonempty and
/// inductive, and a maximal fixed point above x0 exists.
FixedPointReport verify_fixed_point_theorem(const FinitePoset& poset, const ElementSet& domain,
                                            const SetValuedMap& map, Element seed,
                                            const ChainOptions& options = {});

struct SublatticeWitness {
  Element a = 0;
  Element b = 0;
  Element join = 0;
  Element meet = 0;
  bool join_in_set = false;
  bool meet_in_set = false;
};

struct SublatticeVerdict {
  bool holds = true;
  std::optional<SublatticeWitness> witness;
  /// Number of unordered pairs of S whose join or meet escapes S.
  std::size_t violating_pairs = 0;
};

/// Throws NotALattice (naming a pair) if the host lacks some join or meet.
void require_lattice(const FinitePoset& poset);

/// Closure of S under the host's pairwise join and meet. Pairs listed in
/// `probe_first` are examined before the rest, so a known witness is
/// reported when it is one.
SublatticeVerdict is_sublattice(const FinitePoset& poset, const ElementSet& subset,
                                const std::vector<std::pair<Element, Element>>& probe_first = {});

/// Orbit x0, F(x0), F(F(x0)), ... of a single-valued map, stopping at the
/// first repeated point or after max_steps applications.
std::vector<Element> iterate_map(const SetValuedMap& map, Element seed, std::size_t max_steps);

}  // namespace ordfix
