#include "ordfix/poset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ordfix/error.hpp"

namespace ordfix {

ElementSet make_set(std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

void FinitePoset::index_names() {
  index_.clear();
  for (Element e = 0; e < names_.size(); ++e) {
    if (!index_.emplace(names_[e], e).second)
      throw Error(ErrorKind::UnknownElement, "duplicate element identifier '" + names_[e] + "'");
  }
}

FinitePoset FinitePoset::from_order(std::vector<std::string> names,
                                    const std::function<bool(Element, Element)>& leq) {
  if (names.empty()) throw Error(ErrorKind::UnknownElement, "a poset needs at least one element");
  FinitePoset p;
  p.names_ = std::move(names);
  p.index_names();
  const std::size_t n = p.size();
  p.rows_.assign(n, std::vector<std::uint64_t>(p.words(), 0));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (leq(a, b)) p.set_bit(a, b);

  for (Element a = 0; a < n; ++a) {
    if (!p.leq(a, a)) throw Error(ErrorKind::AntisymmetryViolation, "relation is not reflexive at '" + p.names_[a] + "'");
    for (Element b = a + 1; b < n; ++b)
      if (p.leq(a, b) && p.leq(b, a))
        throw Error(ErrorKind::AntisymmetryViolation, "2-cycle between '" + p.names_[a] + "' and '" + p.names_[b] + "'");
  }
  if (!p.check_order_axioms()) throw Error(ErrorKind::AntisymmetryViolation, "relation is not transitive");
  return p;
}

FinitePoset FinitePoset::from_points(std::vector<GridPoint> points) {
  std::vector<std::string> names;
  names.reserve(points.size());
  for (const auto& pt : points) names.push_back(pt.name());
  FinitePoset p = from_order(std::move(names), [&](Element a, Element b) { return points[a].leq(points[b]); });
  p.points_ = std::move(points);
  return p;
}

ElementSet FinitePoset::all() const {
  ElementSet out(size());
  std::iota(out.begin(), out.end(), Element{0});
  return out;
}

std::optional<Element> FinitePoset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element FinitePoset::at(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw Error(ErrorKind::UnknownElement, "'" + std::string(name) + "' is not an element of the poset");
}

ElementSet FinitePoset::up_set(Element u) const {
  ElementSet out;
  for (Element x = 0; x < size(); ++x)
    if (leq(u, x)) out.push_back(x);
  return out;
}

ElementSet FinitePoset::down_set(Element w) const {
  ElementSet out;
  for (Element x = 0; x < size(); ++x)
    if (leq(x, w)) out.push_back(x);
  return out;
}

ElementSet FinitePoset::interval(Element u, Element w) const {
  ElementSet out;
  for (Element x = 0; x < size(); ++x)
    if (leq(u, x) && leq(x, w)) out.push_back(x);
  return out;
}

std::optional<Element> FinitePoset::find_point(const GridPoint& p) const {
  if (!has_coordinates()) return std::nullopt;
  return find(p.name());
}

bool FinitePoset::check_order_axioms() const {
  const std::size_t n = size();
  for (Element a = 0; a < n; ++a) {
    if (!leq(a, a)) return false;
    for (Element b = 0; b < n; ++b) {
      if (a != b && leq(a, b) && leq(b, a)) return false;
      if (!leq(a, b)) continue;
      // row(b) must be contained in row(a)
      for (std::size_t w = 0; w < words(); ++w)
        if ((rows_[b][w] & ~rows_[a][w]) != 0) return false;
    }
  }
  return true;
}

std::vector<std::string> FinitePoset::element_names(const ElementSet& set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (Element e : set) out.push_back(name(e));
  return out;
}

FinitePoset validate_poset(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
  if (elements.empty()) throw Error(ErrorKind::UnknownElement, "a poset needs at least one element");
  FinitePoset p;
  p.names_ = std::move(elements);
  p.index_names();
  const std::size_t n = p.size();

  std::vector<std::vector<Element>> succ(n);
  for (const auto& [lo, hi] : leq_pairs) {
    Element a = p.at(lo);
    Element b = p.at(hi);
    if (a != b) succ[a].push_back(b);
  }

  // Iterative DFS; a back edge a -> b means b <= ... <= a <= b, a 2-cycle of
  // the closure between a and b.
  enum class Mark : unsigned char { White, Grey, Black };
  std::vector<Mark> mark(n, Mark::White);
  std::vector<Element> post_order;
  post_order.reserve(n);
  for (Element root = 0; root < n; ++root) {
    if (mark[root] != Mark::White) continue;
    std::vector<std::pair<Element, std::size_t>> stack{{root, 0}};
    mark[root] = Mark::Grey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < succ[v].size()) {
        Element w = succ[v][next++];
        if (mark[w] == Mark::Grey)
          throw Error(ErrorKind::AntisymmetryViolation,
                      "2-cycle between '" + p.names_[v] + "' and '" + p.names_[w] + "'");
        if (mark[w] == Mark::White) {
          mark[w] = Mark::Grey;
          stack.emplace_back(w, 0);
        }
      } else {
        mark[v] = Mark::Black;
        post_order.push_back(v);
        stack.pop_back();
      }
    }
  }

  // Successors finish before their predecessors, so rows can be accumulated
  // in post-order.
  p.rows_.assign(n, std::vector<std::uint64_t>(p.words(), 0));
  for (Element v : post_order) {
    p.set_bit(v, v);
    for (Element w : succ[v])
      for (std::size_t i = 0; i < p.words(); ++i) p.rows_[v][i] |= p.rows_[w][i];
  }
  return p;
}

ElementSet bounds(const FinitePoset& poset, const ElementSet& subset, Extremum mode) {
  ElementSet out;
  for (Element u = 0; u < poset.size(); ++u) {
    bool ok = std::all_of(subset.begin(), subset.end(), [&](Element s) {
      return mode == Extremum::Sup ? poset.leq(s, u) : poset.leq(u, s);
    });
    if (ok) out.push_back(u);
  }
  return out;
}

std::optional<Element> extremum(const FinitePoset& poset, const ElementSet& subset, Extremum mode) {
  const ElementSet candidates = bounds(poset, subset, mode);
  if (candidates.empty()) return std::nullopt;
  // The least upper bound, if any, is the unique minimal element of the
  // bound set; pick any minimal one and confirm it lies below all the others.
  Element best = candidates.front();
  for (Element c : candidates) {
    if (mode == Extremum::Sup ? poset.less(c, best) : poset.less(best, c)) best = c;
  }
  for (Element c : candidates) {
    if (mode == Extremum::Sup ? !poset.leq(best, c) : !poset.leq(c, best)) return std::nullopt;
  }
  return best;
}

bool is_chain(const FinitePoset& poset, const ElementSet& subset) {
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (!poset.comparable(subset[i], subset[j])) return false;
  return true;
}

ElementSet maximal_elements(const FinitePoset& poset, const ElementSet& subset) {
  ElementSet out;
  for (Element x : subset) {
    bool dominated = std::any_of(subset.begin(), subset.end(), [&](Element y) { return poset.less(x, y); });
    if (!dominated) out.push_back(x);
  }
  return out;
}

ElementSet minimal_elements(const FinitePoset& poset, const ElementSet& subset) {
  ElementSet out;
  for (Element x : subset) {
    bool dominated = std::any_of(subset.begin(), subset.end(), [&](Element y) { return poset.less(y, x); });
    if (!dominated) out.push_back(x);
  }
  return out;
}

namespace {

/// `subset` arranged as a linear extension: sorted by down-set size, which
/// is strictly monotone along the order.
std::vector<Element> linear_extension(const FinitePoset& poset, const ElementSet& subset) {
  std::vector<std::size_t> below(poset.size(), 0);
  for (Element x : subset)
    for (Element y = 0; y < poset.size(); ++y)
      if (poset.leq(y, x)) ++below[x];
  std::vector<Element> order(subset.begin(), subset.end());
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) { return below[a] < below[b]; });
  return order;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

bool in_set(const ElementSet& set, Element e) { return std::binary_search(set.begin(), set.end(), e); }

/// Shared driver: evaluates `property` on every chain (or on every singleton
/// chain when falling back to chain maxima / minima).
ChainVerdict check_chains(const FinitePoset& poset, const ElementSet& chains_of, const ChainOptions& options,
                          const std::function<bool(const ElementSet&)>& property) {
  ChainVerdict verdict;
  const std::uint64_t total = count_chains(poset, chains_of);
  if (total <= options.budget || options.method == ChainMethod::Enumerate) {
    for_each_chain(poset, chains_of, options.budget, [&](const ElementSet& chain) {
      ++verdict.chains_examined;
      if (!property(chain)) {
        verdict.holds = false;
        verdict.failing_chain = chain;
        return false;
      }
      return true;
    });
    return verdict;
  }
  verdict.by_chain_maximum = true;
  for (Element m : chains_of) {
    ++verdict.chains_examined;
    ElementSet singleton{m};
    if (!property(singleton)) {
      verdict.holds = false;
      verdict.failing_chain = singleton;
      break;
    }
  }
  return verdict;
}

}  // namespace

std::uint64_t count_chains(const FinitePoset& poset, const ElementSet& subset) {
  const auto order = linear_extension(poset, subset);
  std::vector<std::uint64_t> ending_at(order.size(), 0);
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < order.size(); ++j) {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < j; ++i)
      if (poset.less(order[i], order[j])) c = saturating_add(c, ending_at[i]);
    ending_at[j] = c;
    total = saturating_add(total, c);
  }
  return total;
}

void for_each_chain(const FinitePoset& poset, const ElementSet& subset, std::uint64_t budget,
                    const std::function<bool(const ElementSet&)>& visit) {
  const std::uint64_t total = count_chains(poset, subset);
  if (total > budget)
    throw Error(ErrorKind::BudgetExceeded, std::to_string(total) + " chains exceed the budget of " +
                                               std::to_string(budget));
  const auto order = linear_extension(poset, subset);
  ElementSet chain;
  bool stop = false;
  // Depth-first: each chain is the path of indices into `order`.
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    for (std::size_t j = from; j < order.size() && !stop; ++j) {
      if (!chain.empty() && !poset.less(chain.back(), order[j])) continue;
      chain.push_back(order[j]);
      if (!visit(chain)) stop = true;
      if (!stop) extend(j + 1);
      chain.pop_back();
    }
  };
  extend(0);
}

ChainVerdict is_chain_complete(const FinitePoset& poset, const ElementSet& subset, const ChainOptions& options) {
  return check_chains(poset, subset, options, [&](const ElementSet& chain) {
    auto lub = extremum(poset, chain, Extremum::Sup);
    return lub.has_value() && in_set(subset, *lub);
  });
}

ChainVerdict is_inductive(const FinitePoset& poset, const ElementSet& subset, const ChainOptions& options) {
  return check_chains(poset, subset, options, [&](const ElementSet& chain) {
    return std::any_of(subset.begin(), subset.end(), [&](Element u) {
      return std::all_of(chain.begin(), chain.end(), [&](Element c) { return poset.leq(c, u); });
    });
  });
}

ChainVerdict is_bi_inductive(const FinitePoset& poset, const ElementSet& subset, const ChainOptions& options) {
  ChainVerdict up = is_inductive(poset, subset, options);
  if (!up.holds) return up;
  ChainVerdict down = check_chains(poset, subset, options, [&](const ElementSet& chain) {
    return std::any_of(subset.begin(), subset.end(), [&](Element l) {
      return std::all_of(chain.begin(), chain.end(), [&](Element c) { return poset.leq(l, c); });
    });
  });
  down.chains_examined += up.chains_examined;
  down.by_chain_maximum = down.by_chain_maximum || up.by_chain_maximum;
  return down;
}

ChainVerdict is_universally_inductive(const FinitePoset& poset, const ElementSet& ambient, const ElementSet& a,
                                      const ChainOptions& options) {
  if (a.empty()) throw Error(ErrorKind::InvalidMap, "universal inductivity needs a nonempty set");
  // Only chains whose every element has an upper bound in `a` are
  // constrained; those are exactly the chains of the part of `ambient`
  // lying below some element of `a`.
  ElementSet bounded;
  for (Element x : ambient)
    if (std::any_of(a.begin(), a.end(), [&](Element u) { return poset.leq(x, u); })) bounded.push_back(x);
  if (bounded.empty()) return {};
  return check_chains(poset, bounded, options, [&](const ElementSet& chain) {
    return std::any_of(a.begin(), a.end(), [&](Element u) {
      return std::all_of(chain.begin(), chain.end(), [&](Element c) { return poset.leq(c, u); });
    });
  });
}

ChainVerdict is_universally_inductive(const FinitePoset& poset, const ElementSet& a, const ChainOptions& options) {
  return is_universally_inductive(poset, poset.all(), a, options);
}

}  // namespace ordfix
