#include "sasaki/filters.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "sasaki/error.hpp"

namespace sasaki {

namespace {

bool has(Mask m, std::uint32_t i) { return (m >> i) & 1u; }

bool upward_closed(const FiniteOml& l, Mask m) {
  for (std::uint32_t i = 0; i < l.size(); ++i) {
    if (has(m, i) && (l.up_mask_index(i) & ~m) != 0) return false;
  }
  return true;
}

void check_bound(const FiniteOml& l, std::size_t bound) {
  if (l.size() > bound) {
    throw Error(ErrorKind::TooLarge, "lattice has " + std::to_string(l.size()) +
                                         " elements; enumeration bound is " + std::to_string(bound));
  }
}

}  // namespace

UpSet UpSet::from_mask(const FiniteOml& lattice, Mask members) {
  if ((members & ~lattice.all_mask()) != 0 || !upward_closed(lattice, members)) {
    throw Error(ErrorKind::NotUpwardClosed, "subset is not upward-closed");
  }
  return UpSet(lattice, members);
}

UpSet UpSet::generated_by(const FiniteOml& lattice, std::span<const Element> generators) {
  Mask m = 0;
  for (Element g : generators) m |= lattice.up_mask(g);
  return UpSet(lattice, m);
}

bool UpSet::contains(Element x) const {
  // up_mask validates x against the lattice
  (void)lattice_.up_mask(x);
  return has(mask_, x.index());
}

std::size_t UpSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<Element> UpSet::members() const {
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < lattice_.size(); ++i) {
    if (has(mask_, i)) out.push_back(lattice_.at(i));
  }
  return out;
}

std::vector<std::string> UpSet::member_names() const {
  std::vector<std::string> out;
  for (std::uint32_t i = 0; i < lattice_.size(); ++i) {
    if (has(mask_, i)) out.push_back(lattice_.names()[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void UpSet::check_same_lattice(const UpSet& other) const {
  if (other.lattice_.id() != lattice_.id()) {
    throw Error(ErrorKind::ForeignElement, "upsets belong to different lattices");
  }
}

bool UpSet::subset_of(const UpSet& other) const {
  check_same_lattice(other);
  return (mask_ & ~other.mask_) == 0;
}

UpSet UpSet::intersect(const UpSet& other) const {
  check_same_lattice(other);
  return UpSet(lattice_, mask_ & other.mask_);
}

UpSet UpSet::unite(const UpSet& other) const {
  check_same_lattice(other);
  return UpSet(lattice_, mask_ | other.mask_);
}

bool SasakiFilter::is_proper() const noexcept { return sasaki::is_proper(set_); }

UpSet up(const FiniteOml& lattice, Element x) {
  return UpSet::from_mask(lattice, lattice.up_mask(x));
}

bool is_sasaki_filter(const UpSet& s) {
  const auto& l = s.lattice();
  const Mask m = s.mask();
  for (std::uint32_t x = 0; x < l.size(); ++x) {
    if (!has(m, x)) continue;
    for (std::uint32_t y = 0; y < l.size(); ++y) {
      if (has(m, y) && !has(m, l.sasaki_index(x, y))) return false;
    }
  }
  return true;
}

bool is_proper(const UpSet& s) { return !s.empty() && s.mask() != s.lattice().all_mask(); }

std::optional<SasakiFilter> as_sasaki_filter(const UpSet& s) {
  if (!is_sasaki_filter(s)) return std::nullopt;
  return SasakiFilter(s);
}

bool is_stable_by_compatible_meet(const UpSet& s) {
  const auto& l = s.lattice();
  for (Element x : s.members()) {
    for (Element y : s.members()) {
      if (l.compatible(x, y) && !s.contains(l.meet(x, y))) return false;
    }
  }
  return true;
}

UpSet sasaki_step(const UpSet& s) {
  const auto& l = s.lattice();
  const Mask m = s.mask();
  Mask out = 0;
  for (std::uint32_t x = 0; x < l.size(); ++x) {
    if (!has(m, x)) continue;
    for (std::uint32_t y = 0; y < l.size(); ++y) {
      if (has(m, y)) out |= l.up_mask_index(l.sasaki_index(x, y));
    }
  }
  return UpSet::from_mask(l, out);
}

SasakiFilter sasaki_closure(const UpSet& s) {
  UpSet current = s;
  for (;;) {
    UpSet next = sasaki_step(current);
    if (next == current) return SasakiFilter(std::move(current));
    current = std::move(next);
  }
}

std::size_t sasaki_closure_depth(const UpSet& s) {
  std::size_t depth = 0;
  UpSet current = s;
  for (;;) {
    UpSet next = sasaki_step(current);
    if (next == current) return depth;
    current = std::move(next);
    ++depth;
  }
}

void for_each_upset(const FiniteOml& lattice, const std::function<void(const UpSet&)>& visit,
                    std::size_t bound) {
  check_bound(lattice, bound);
  const auto n = static_cast<std::uint32_t>(lattice.size());

  // Decide elements from the top down: an element may join the set only when
  // everything strictly above it already has. Larger up-sets come first.
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::popcount(lattice.up_mask_index(a)) < std::popcount(lattice.up_mask_index(b));
  });

  auto recurse = [&](auto&& self, std::size_t k, Mask chosen) -> void {
    if (k == n) {
      visit(UpSet::from_mask(lattice, chosen));
      return;
    }
    const std::uint32_t x = order[k];
    const Mask above = lattice.up_mask_index(x) & ~(Mask{1} << x);
    self(self, k + 1, chosen);
    if ((above & ~chosen) == 0) self(self, k + 1, chosen | (Mask{1} << x));
  };
  recurse(recurse, 0, 0);
}

std::vector<UpSet> enumerate_upsets(const FiniteOml& lattice, std::size_t bound) {
  std::vector<UpSet> out;
  for_each_upset(lattice, [&](const UpSet& s) { out.push_back(s); }, bound);
  return out;
}

std::vector<SasakiFilter> enumerate_sasaki_filters(const FiniteOml& lattice, std::size_t bound) {
  std::vector<SasakiFilter> out;
  for_each_upset(
      lattice,
      [&](const UpSet& s) {
        if (auto f = as_sasaki_filter(s)) out.push_back(std::move(*f));
      },
      bound);
  return out;
}

}  // namespace sasaki
