#include "skewhopf/comodule.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "skewhopf/error.hpp"

namespace skewhopf::comodule {

namespace {

void check_level(const ValidatedChain& chain, int r) {
  if (!chain.in_window(r)) {
    throw Error(ErrorCode::LevelOutOfWindow, "level " + std::to_string(r) + " outside window");
  }
}

void check_component(const ValidatedChain& chain, std::size_t component) {
  if (component >= chain.component_count()) {
    throw Error(ErrorCode::BadParams, "component " + std::to_string(component) + " does not exist");
  }
}

bool set_less(const BlockSet& a, const BlockSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void sort_elements(std::vector<BlockSet>& elements) {
  std::sort(elements.begin(), elements.end(), set_less);
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
}

}  // namespace

bool SubspaceLattice::contains(const BlockSet& s) const {
  return std::find(elements.begin(), elements.end(), s) != elements.end();
}

ComoduleStructure natural_comodule(const ValidatedChain& chain, int r, std::size_t component) {
  check_level(chain, r);
  check_component(chain, component);
  ComoduleStructure s;
  s.level = r;
  s.component = component;
  const auto members = chain.component(component);
  s.basis.assign(members.begin(), members.end());
  s.coaction.assign(s.basis.size(), std::vector<std::optional<Letter>>(s.basis.size()));
  for (std::size_t a = 0; a < s.basis.size(); ++a) {
    for (std::size_t b = 0; b < s.basis.size(); ++b) {
      if (chain.present(r, s.basis[a], s.basis[b])) s.coaction[a][b] = Letter{r, s.basis[a], s.basis[b]};
    }
  }
  return s;
}

ComoduleStructure dual_comodule(const ValidatedChain& chain, const ComoduleStructure& s) {
  if (s.level + 1 > chain.hi()) {
    throw Error(ErrorCode::WindowExceeded, "dual of a level-" + std::to_string(s.level) +
                                               " comodule lives beyond the window");
  }
  ComoduleStructure d;
  d.level = s.level + 1;
  d.component = s.component;
  d.basis = s.basis;
  const std::size_t n = s.basis.size();
  d.coaction.assign(n, std::vector<std::optional<Letter>>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (s.coaction[b][a] && chain.present(d.level, s.basis[a], s.basis[b])) {
        d.coaction[a][b] = Letter{d.level, s.basis[a], s.basis[b]};
      }
    }
  }
  return d;
}

SubspaceLattice submodule_lattice(const ValidatedChain& chain, const ComoduleStructure& s) {
  const std::size_t n = s.basis.size();
  using Coordinates = std::vector<bool>;

  // Submodule generated by e_j under the dual-algebra action.
  std::vector<Coordinates> principal;
  for (std::size_t j = 0; j < n; ++j) {
    Coordinates closed(n, false);
    std::deque<std::size_t> todo{j};
    closed[j] = true;
    while (!todo.empty()) {
      const auto b = todo.front();
      todo.pop_front();
      for (std::size_t a = 0; a < n; ++a) {
        if (!closed[a] && s.coaction[a][b]) {
          closed[a] = true;
          todo.push_back(a);
        }
      }
    }
    principal.push_back(std::move(closed));
  }

  // Every subcomodule is a sum of principal ones.
  std::set<Coordinates> found{Coordinates(n, false)};
  std::deque<Coordinates> todo{Coordinates(n, false)};
  while (!todo.empty()) {
    const auto current = todo.front();
    todo.pop_front();
    for (const auto& p : principal) {
      Coordinates joined = current;
      for (std::size_t k = 0; k < n; ++k) joined[k] = joined[k] || p[k];
      if (found.insert(joined).second) todo.push_back(std::move(joined));
    }
  }

  SubspaceLattice lattice{s.level, s.component, {}};
  const std::size_t block_total = chain.block_count(s.level, s.component);
  for (const auto& coords : found) {
    std::vector<std::size_t> hits(block_total, 0);
    std::vector<std::size_t> sizes(block_total, 0);
    for (std::size_t k = 0; k < n; ++k) {
      const auto b = chain.block_of(s.level, s.basis[k]);
      ++sizes[b];
      if (coords[k]) ++hits[b];
    }
    BlockSet blocks;
    for (std::size_t b = 0; b < block_total; ++b) {
      if (hits[b] == 0) continue;
      if (hits[b] != sizes[b]) throw std::logic_error("subcomodule is not a union of blocks");
      blocks.push_back(b);
    }
    lattice.elements.push_back(std::move(blocks));
  }
  sort_elements(lattice.elements);
  return lattice;
}

SubspaceLattice expected_lattice(const ValidatedChain& chain, int r, std::size_t component) {
  check_level(chain, r);
  check_component(chain, component);
  const std::size_t m = chain.block_count(r, component);
  SubspaceLattice lattice{r, component, {}};
  for (std::size_t k = 0; k <= m; ++k) {
    BlockSet blocks;
    if (r % 2 == 0) {
      for (std::size_t b = 0; b < k; ++b) blocks.push_back(b);
    } else {
      for (std::size_t b = m - k; b < m; ++b) blocks.push_back(b);
    }
    lattice.elements.push_back(std::move(blocks));
  }
  sort_elements(lattice.elements);
  return lattice;
}

SubspaceLattice annihilator_image(const ValidatedChain& chain, const SubspaceLattice& lattice) {
  const int next = lattice.level + 1;
  if (next > chain.hi()) throw Error(ErrorCode::WindowExceeded, "annihilators live beyond the window");
  SubspaceLattice image{next, lattice.component, {}};
  const auto members = chain.component(lattice.component);
  for (const auto& element : lattice.elements) {
    std::set<std::size_t> blocks;
    for (auto id : members) {
      const auto b = chain.block_of(lattice.level, id);
      if (!std::binary_search(element.begin(), element.end(), b)) blocks.insert(chain.block_of(next, id));
    }
    image.elements.emplace_back(blocks.begin(), blocks.end());
  }
  sort_elements(image.elements);
  return image;
}

std::vector<Letter> coefficient_coalgebra(const ValidatedChain& chain, const ComoduleStructure& s,
                                          const BlockSet& sub, const std::optional<BlockSet>& quotient_of) {
  const auto lattice = submodule_lattice(chain, s);
  if (!lattice.contains(sub)) throw Error(ErrorCode::NotASubcomodule, "subspace is not a subcomodule");
  BlockSet removed;
  if (quotient_of) {
    if (!lattice.contains(*quotient_of)) {
      throw Error(ErrorCode::NotASubcomodule, "quotient subspace is not a subcomodule");
    }
    if (!std::includes(sub.begin(), sub.end(), quotient_of->begin(), quotient_of->end())) {
      throw Error(ErrorCode::NotASubcomodule, "quotient subspace is not contained in the subcomodule");
    }
    removed = *quotient_of;
  }
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < s.basis.size(); ++k) {
    const auto b = chain.block_of(s.level, s.basis[k]);
    if (std::binary_search(sub.begin(), sub.end(), b) && !std::binary_search(removed.begin(), removed.end(), b)) {
      kept.push_back(k);
    }
  }
  std::vector<Letter> letters;
  for (auto a : kept) {
    for (auto b : kept) {
      if (s.coaction[a][b]) letters.push_back(*s.coaction[a][b]);
    }
  }
  std::sort(letters.begin(), letters.end(), letter_less);
  return letters;
}

std::size_t min_simple_dim(const ValidatedChain& chain, int r) {
  check_level(chain, r);
  std::size_t best = chain.index_count();
  for (std::size_t c = 0; c < chain.component_count(); ++c) {
    for (const auto& block : chain.blocks(r, c)) best = std::min(best, block.size());
  }
  return best;
}

std::string_view verdict_name(GrowthVerdict v) {
  switch (v) {
    case GrowthVerdict::Bounded: return "bounded";
    case GrowthVerdict::BoundedWindow: return "bounded window";
    case GrowthVerdict::IncreasingLeftward: return "increasing leftward";
    case GrowthVerdict::DoublingLeftward: return "doubling leftward";
  }
  return "unknown";
}

GrowthReport growth_report(const ValidatedChain& chain) {
  GrowthReport report;
  for (int r = chain.lo(); r <= chain.hi(); ++r) {
    const auto dim = min_simple_dim(chain, r);
    report.rows.push_back({r, dim, dim >= 2});
  }
  std::size_t steps = 0;
  bool doubling = true;
  while (steps + 1 < report.rows.size() &&
         report.rows[steps].min_simple_dim > report.rows[steps + 1].min_simple_dim) {
    doubling = doubling && report.rows[steps].min_simple_dim == 2 * report.rows[steps + 1].min_simple_dim;
    ++steps;
  }
  report.trend_start = chain.lo() + static_cast<int>(steps);
  if (steps == 0) {
    report.verdict = GrowthVerdict::Bounded;
    report.note = "no leftward growth inside the window";
  } else if (steps == 1) {
    report.verdict = GrowthVerdict::BoundedWindow;
    report.note = "a single jump at the left edge of the window; no leftward trend";
  } else {
    report.verdict = doubling ? GrowthVerdict::DoublingLeftward : GrowthVerdict::IncreasingLeftward;
    report.note = "minimal simple dimension increases strictly from level " + std::to_string(report.trend_start) +
                  " down to " + std::to_string(chain.lo()) +
                  "; divergence as r -> -infinity is an extrapolation beyond this truncation";
  }
  return report;
}

}  // namespace skewhopf::comodule
