#include "ordfix/fixed_point.hpp"

#include <algorithm>

namespace ordfix {
namespace {

bool in_set(const ElementSet& set, Element e) { return std::binary_search(set.begin(), set.end(), e); }

std::string chain_text(const FinitePoset& poset, const ElementSet& chain) {
  std::string out = "{";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += ", ";
    out += poset.name(chain[i]);
  }
  return out + "}";
}

}  // namespace

SetValuedMap::SetValuedMap(const FinitePoset& poset, const ElementSet& domain, std::vector<ElementSet> images) {
  if (domain.size() != images.size()) throw Error(ErrorKind::InvalidMap, "domain and image lists differ in length");
  slot_.assign(poset.size(), -1);
  std::vector<std::pair<Element, ElementSet>> entries;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    Element x = domain[i];
    if (x >= poset.size()) throw Error(ErrorKind::InvalidMap, "domain element outside the poset");
    ElementSet img = make_set(std::move(images[i]));
    if (img.empty()) throw Error(ErrorKind::InvalidMap, "empty image at '" + poset.name(x) + "'");
    if (img.back() >= poset.size()) throw Error(ErrorKind::InvalidMap, "image outside the poset at '" + poset.name(x) + "'");
    entries.emplace_back(x, std::move(img));
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i && entries[i].first == entries[i - 1].first)
      throw Error(ErrorKind::InvalidMap, "element '" + poset.name(entries[i].first) + "' listed twice");
    domain_.push_back(entries[i].first);
    slot_[entries[i].first] = static_cast<long>(i);
    images_.push_back(std::move(entries[i].second));
  }
}

SetValuedMap SetValuedMap::single_valued(const FinitePoset& poset, const ElementSet& domain,
                                         const std::vector<Element>& values) {
  std::vector<ElementSet> images;
  images.reserve(values.size());
  for (Element v : values) images.push_back({v});
  return SetValuedMap(poset, domain, std::move(images));
}

const ElementSet& SetValuedMap::image(Element x) const {
  if (!defined_at(x)) throw Error(ErrorKind::InvalidMap, "map is not defined at element " + std::to_string(x));
  return images_[static_cast<std::size_t>(slot_[x])];
}

bool SetValuedMap::contains(Element x, Element y) const { return in_set(image(x), y); }

IsotoneVerdict check_isotone(const FinitePoset& poset, const SetValuedMap& map, Isotone mode) {
  IsotoneVerdict verdict;
  const auto& dom = map.domain();
  for (Element x : dom) {
    for (Element y : dom) {
      if (!poset.leq(x, y)) continue;
      if (mode != Isotone::Downward) {
        for (Element z : map.image(x)) {
          const auto& ty = map.image(y);
          if (std::none_of(ty.begin(), ty.end(), [&](Element w) { return poset.leq(z, w); })) {
            verdict.holds = false;
            verdict.witness = std::make_tuple(x, y, z);
            verdict.failed_direction = Isotone::Upward;
            return verdict;
          }
        }
      }
      if (mode != Isotone::Upward) {
        for (Element w : map.image(y)) {
          const auto& tx = map.image(x);
          if (std::none_of(tx.begin(), tx.end(), [&](Element z) { return poset.leq(z, w); })) {
            verdict.holds = false;
            verdict.witness = std::make_tuple(x, y, w);
            verdict.failed_direction = Isotone::Downward;
            return verdict;
          }
        }
      }
    }
  }
  return verdict;
}

ElementSet fixed_point_set(const SetValuedMap& map) {
  ElementSet out;
  for (Element x : map.domain())
    if (map.contains(x, x)) out.push_back(x);
  return out;
}

bool FixedPointReport::hypotheses_pass() const {
  return std::all_of(hypothesis_log.begin(), hypothesis_log.end(), [](const auto& h) { return h.pass; });
}

bool FixedPointReport::conclusions_pass() const {
  return !conclusion_log.empty() &&
         std::all_of(conclusion_log.begin(), conclusion_log.end(), [](const auto& h) { return h.pass; });
}

FixedPointReport verify_fixed_point_theorem(const FinitePoset& poset, const ElementSet& domain,
                                            const SetValuedMap& map, Element seed, const ChainOptions& options) {
  if (map.domain() != domain) throw Error(ErrorKind::InvalidMap, "map domain differs from D");
  if (!in_set(domain, seed)) throw Error(ErrorKind::UnknownElement, "seed is not in D");
  for (Element x : domain)
    for (Element y : map.image(x))
      if (!in_set(domain, y))
        throw Error(ErrorKind::InvalidMap, "T('" + poset.name(x) + "') leaves D at '" + poset.name(y) + "'");

  FixedPointReport report;
  auto fail = [&](const std::string& name, const std::string& witness) {
    report.hypothesis_log.push_back({name, false, witness});
    throw HypothesisFailure(name, witness, report);
  };

  if (auto cc = is_chain_complete(poset, domain, options); cc.holds) {
    report.hypothesis_log.push_back({"chain_complete", true, ""});
  } else {
    fail("chain_complete", "chain without least upper bound in D: " + chain_text(poset, cc.failing_chain));
  }

  if (auto iso = check_isotone(poset, map, Isotone::Upward); iso.holds) {
    report.hypothesis_log.push_back({"A1_isotone_upward", true, ""});
  } else {
    auto [x, y, z] = *iso.witness;
    fail("A1_isotone_upward", "x=" + poset.name(x) + " <= y=" + poset.name(y) + ", z=" + poset.name(z) +
                                  " in T(x) has no upper partner in T(y)");
  }

  for (Element x : domain) {
    auto ui = is_universally_inductive(poset, domain, map.image(x), options);
    if (!ui.holds)
      fail("A2_universally_inductive_values",
           "T(" + poset.name(x) + ") fails on chain " + chain_text(poset, ui.failing_chain));
  }
  report.hypothesis_log.push_back({"A2_universally_inductive_values", true, ""});

  const auto& t_seed = map.image(seed);
  auto x1 = std::find_if(t_seed.begin(), t_seed.end(), [&](Element z) { return poset.leq(seed, z); });
  if (x1 == t_seed.end()) fail("A3_seed_below_image", "no x1 in T(" + poset.name(seed) + ") above the seed");
  report.hypothesis_log.push_back({"A3_seed_below_image", true, "x1=" + poset.name(*x1)});

  report.fixed_points = fixed_point_set(map);
  for (Element x : report.fixed_points)
    if (poset.leq(seed, x)) report.above_seed.push_back(x);
  report.maximal_elements = maximal_elements(poset, report.above_seed);

  auto conclude = [&](const std::string& name, bool pass, const std::string& witness) {
    report.conclusion_log.push_back({name, pass, witness});
  };
  conclude("fixed_set_nonempty", !report.fixed_points.empty(), std::to_string(report.fixed_points.size()) + " points");
  if (!report.fixed_points.empty()) {
    auto ind = is_inductive(poset, report.fixed_points, options);
    report.is_inductive = ind.holds;
    conclude("fixed_set_inductive", ind.holds, ind.holds ? "" : chain_text(poset, ind.failing_chain));
  }
  conclude("fixed_set_above_seed_nonempty", !report.above_seed.empty(),
           std::to_string(report.above_seed.size()) + " points");
  if (!report.above_seed.empty()) {
    auto ind = is_inductive(poset, report.above_seed, options);
    report.above_seed_inductive = ind.holds;
    conclude("fixed_set_above_seed_inductive", ind.holds, ind.holds ? "" : chain_text(poset, ind.failing_chain));
  }
  conclude("maximal_fixed_point_above_seed", !report.maximal_elements.empty(),
           chain_text(poset, report.maximal_elements));
  return report;
}

void require_lattice(const FinitePoset& poset) {
  for (Element a = 0; a < poset.size(); ++a) {
    for (Element b = a + 1; b < poset.size(); ++b) {
      ElementSet pair{a, b};
      if (!extremum(poset, pair, Extremum::Sup) || !extremum(poset, pair, Extremum::Inf))
        throw Error(ErrorKind::NotALattice,
                    "'" + poset.name(a) + "' and '" + poset.name(b) + "' lack a join or a meet");
    }
  }
}

SublatticeVerdict is_sublattice(const FinitePoset& poset, const ElementSet& subset,
                                const std::vector<std::pair<Element, Element>>& probe_first) {
  require_lattice(poset);
  const ElementSet s = make_set(subset);
  SublatticeVerdict verdict;

  auto examine = [&](Element a, Element b) -> std::optional<SublatticeWitness> {
    ElementSet pair = make_set({a, b});
    SublatticeWitness w;
    w.a = a;
    w.b = b;
    w.join = *extremum(poset, pair, Extremum::Sup);
    w.meet = *extremum(poset, pair, Extremum::Inf);
    w.join_in_set = in_set(s, w.join);
    w.meet_in_set = in_set(s, w.meet);
    if (w.join_in_set && w.meet_in_set) return std::nullopt;
    return w;
  };

  for (const auto& [a, b] : probe_first) {
    if (!in_set(s, a) || !in_set(s, b)) continue;
    if (auto w = examine(a, b)) {
      verdict.witness = w;
      break;
    }
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (auto w = examine(s[i], s[j])) {
        ++verdict.violating_pairs;
        if (!verdict.witness) verdict.witness = w;
      }
    }
  }
  verdict.holds = verdict.violating_pairs == 0;
  return verdict;
}

std::vector<Element> iterate_map(const SetValuedMap& map, Element seed, std::size_t max_steps) {
  std::vector<Element> orbit{seed};
  for (std::size_t k = 0; k < max_steps; ++k) {
    const auto& img = map.image(orbit.back());
    if (img.size() != 1) throw Error(ErrorKind::InvalidMap, "iteration needs a single-valued map");
    Element next = img.front();
    if (std::find(orbit.begin(), orbit.end(), next) != orbit.end()) {
      orbit.push_back(next);
      break;
    }
    orbit.push_back(next);
  }
  return orbit;
}

}  // namespace ordfix
