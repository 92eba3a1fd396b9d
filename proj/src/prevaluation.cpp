#include "sasaki/prevaluation.hpp"

#include "sasaki/error.hpp"

namespace sasaki {

namespace {

int bit(Mask m, std::uint32_t i) { return static_cast<int>((m >> i) & 1u); }

}  // namespace

PreValuation::PreValuation(FiniteOml lattice, Mask ones)
    : lattice_(std::move(lattice)), ones_(ones) {
  if ((ones_ & ~lattice_.all_mask()) != 0) {
    throw Error(ErrorKind::ForeignElement, "labeling mentions elements outside the lattice");
  }
}

int PreValuation::value(Element x) const {
  (void)lattice_.up_mask(x);
  return bit(ones_, x.index());
}

bool is_prevaluation(const PreValuation& v) {
  const auto& l = v.lattice();
  const auto n = static_cast<std::uint32_t>(l.size());
  const Mask m = v.ones();
  if (bit(m, l.top().index()) != 1) return false;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      const bool orthogonal = (l.up_mask_index(x) >> l.ortho_index(y)) & 1u;
      if (orthogonal && bit(m, l.join_index(x, y)) < bit(m, x) + bit(m, y)) return false;
      if (l.compatible(l.at(x), l.at(y)) && bit(m, l.meet_index(x, y)) != bit(m, x) * bit(m, y)) {
        return false;
      }
    }
  }
  return true;
}

bool is_valuation(const PreValuation& v) {
  if (!is_prevaluation(v)) return false;
  const auto& l = v.lattice();
  const auto n = static_cast<std::uint32_t>(l.size());
  const Mask m = v.ones();
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      const bool orthogonal = (l.up_mask_index(x) >> l.ortho_index(y)) & 1u;
      if (orthogonal && bit(m, l.join_index(x, y)) != bit(m, x) + bit(m, y)) return false;
    }
  }
  return true;
}

bool monotone_presentation(const PreValuation& v) {
  const auto& l = v.lattice();
  const auto n = static_cast<std::uint32_t>(l.size());
  const Mask m = v.ones();
  if (bit(m, l.top().index()) != 1 || bit(m, l.bottom().index()) != 0) return false;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      const bool below = (l.up_mask_index(x) >> y) & 1u;
      if (below && bit(m, x) == 1 && bit(m, y) == 0) return false;
      if (l.compatible(l.at(x), l.at(y)) && bit(m, l.meet_index(x, y)) != bit(m, x) * bit(m, y)) {
        return false;
      }
    }
  }
  return true;
}

PreValuation filter_to_prevaluation(const SasakiFilter& f) {
  if (!f.is_proper()) throw Error(ErrorKind::NotProper, "filter is not proper");
  return PreValuation(f.lattice(), f.upset().mask());
}

SasakiFilter prevaluation_to_filter(const PreValuation& v) {
  if (!is_prevaluation(v)) throw Error(ErrorKind::NotAPreValuation, "labeling is not a pre-valuation");
  auto f = as_sasaki_filter(UpSet::from_mask(v.lattice(), v.ones()));
  // every pre-valuation's 1-set is a Sasaki filter
  if (!f) throw Error(ErrorKind::NotAPreValuation, "1-set is not a Sasaki filter");
  return *f;
}

std::vector<PreValuation> enumerate_prevaluations(const FiniteOml& lattice, std::size_t bound) {
  std::vector<PreValuation> out;
  for (const auto& f : enumerate_sasaki_filters(lattice, bound)) {
    if (f.is_proper()) out.push_back(filter_to_prevaluation(f));
  }
  return out;
}

std::vector<PreValuation> find_valuations(const FiniteOml& lattice, std::size_t bound) {
  std::vector<PreValuation> out;
  for (auto& v : enumerate_prevaluations(lattice, bound)) {
    if (is_valuation(v)) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace sasaki
