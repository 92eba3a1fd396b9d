#include "sasaki/oml.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "sasaki/error.hpp"

namespace sasaki {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ForeignElement: return "ForeignElement";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotUpwardClosed: return "NotUpwardClosed";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::NotAPreValuation: return "NotAPreValuation";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NotAnAtom: return "NotAnAtom";
    case ErrorKind::ThetaOutOfRange: return "ThetaOutOfRange";
    case ErrorKind::TargetOutOfRange: return "TargetOutOfRange";
    case ErrorKind::NegativeIndex: return "NegativeIndex";
    case ErrorKind::AngleTooSmall: return "AngleTooSmall";
    case ErrorKind::DegeneratePair: return "DegeneratePair";
    case ErrorKind::AlreadyAbove: return "AlreadyAbove";
    case ErrorKind::TooManyRounds: return "TooManyRounds";
    case ErrorKind::Format: return "Format";
  }
  return "?";
}

const char* to_string(Law law) {
  switch (law) {
    case Law::Antisymmetry: return "antisymmetry";
    case Law::LowerBound: return "bottom is least";
    case Law::UpperBound: return "top is greatest";
    case Law::MeetExists: return "meet exists";
    case Law::JoinExists: return "join exists";
    case Law::Involution: return "involution";
    case Law::OrderReversing: return "order reversing";
    case Law::ComplementMeet: return "x meet x' is bottom";
    case Law::ComplementJoin: return "x join x' is top";
    case Law::Orthomodular: return "orthomodular law";
  }
  return "?";
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotAPoset: return "NotAPoset";
    case ViolationKind::NotALattice: return "NotALattice";
    case ViolationKind::OrthoLawViolation: return "OrthoLawViolation";
    case ViolationKind::OrthomodularityViolation: return "OrthomodularityViolation";
  }
  return "?";
}

std::string OmlViolation::describe() const {
  std::ostringstream os;
  os << to_string(kind) << " (" << to_string(law) << ") witnesses: " << x;
  if (y != x) os << ", " << y;
  return os.str();
}

namespace {

std::atomic<std::uint64_t> next_lattice_id{1};

bool has(Mask m, std::uint32_t i) { return (m >> i) & 1u; }

}  // namespace

Element FiniteOml::at(std::size_t index) const {
  if (index >= size()) {
    throw Error(ErrorKind::ForeignElement, "element index out of range");
  }
  return make(static_cast<std::uint32_t>(index));
}

std::optional<Element> FiniteOml::find(const std::string& name) const {
  auto it = tables_->index_of.find(name);
  if (it == tables_->index_of.end()) return std::nullopt;
  return make(it->second);
}

Element FiniteOml::element(const std::string& name) const {
  if (auto e = find(name)) return *e;
  throw Error(ErrorKind::UnknownElement, "unknown element '" + name + "'");
}

const std::string& FiniteOml::name(Element x) const { return tables_->names[check(x)]; }

std::vector<Element> FiniteOml::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::uint32_t i = 0; i < size(); ++i) out.push_back(make(i));
  return out;
}

std::uint32_t FiniteOml::check(Element x) const {
  if (x.lattice_id() != tables_->id || x.index() >= size()) {
    throw Error(ErrorKind::ForeignElement, "element does not belong to this lattice");
  }
  return x.index();
}

bool FiniteOml::leq(Element x, Element y) const { return has(tables_->up[check(x)], check(y)); }

Element FiniteOml::meet(Element x, Element y) const { return make(meet_index(check(x), check(y))); }

Element FiniteOml::join(Element x, Element y) const { return make(join_index(check(x), check(y))); }

Element FiniteOml::ortho(Element x) const { return make(ortho_index(check(x))); }

Element FiniteOml::sasaki(Element x, Element y) const {
  return meet(y, join(x, ortho(y)));
}

bool FiniteOml::compatible(Element x, Element y) const {
  return x == join(meet(x, y), meet(x, ortho(y)));
}

bool FiniteOml::orthogonal(Element x, Element y) const { return leq(x, ortho(y)); }

Mask FiniteOml::up_mask(Element x) const { return tables_->up[check(x)]; }

Mask FiniteOml::down_mask(Element x) const { return tables_->down[check(x)]; }

Mask FiniteOml::all_mask() const noexcept {
  return size() == 64 ? ~Mask{0} : ((Mask{1} << size()) - 1);
}

std::vector<std::pair<std::string, std::string>> FiniteOml::cover_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  const auto n = static_cast<std::uint32_t>(size());
  for (std::uint32_t x = 0; x < n; ++x) {
    Mask strictly_above = tables_->up[x] & ~(Mask{1} << x);
    for (std::uint32_t y = 0; y < n; ++y) {
      if (!has(strictly_above, y)) continue;
      // y covers x iff nothing strictly between them
      Mask between = strictly_above & tables_->down[y] & ~(Mask{1} << y);
      if (between == 0) out.emplace_back(tables_->names[x], tables_->names[y]);
    }
  }
  return out;
}

RawOml FiniteOml::to_raw() const {
  RawOml raw;
  raw.elements = tables_->names;
  raw.leq = cover_pairs();
  for (std::uint32_t i = 0; i < size(); ++i) {
    raw.ortho[tables_->names[i]] = tables_->names[tables_->ortho[i]];
  }
  raw.bottom = tables_->names[tables_->bottom];
  raw.top = tables_->names[tables_->top];
  return raw;
}

std::variant<FiniteOml, OmlViolation> validate_oml(const RawOml& raw) {
  const std::size_t n = raw.elements.size();
  if (n == 0) throw Error(ErrorKind::Format, "lattice has no elements");
  if (n > kMaxLatticeElements) {
    throw Error(ErrorKind::TooLarge, "lattice has " + std::to_string(n) + " elements; at most " +
                                         std::to_string(kMaxLatticeElements) + " are supported");
  }

  auto t = std::make_shared<FiniteOml::Tables>();
  t->names = raw.elements;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!t->index_of.emplace(raw.elements[i], i).second) {
      throw Error(ErrorKind::Format, "duplicate element name '" + raw.elements[i] + "'");
    }
  }
  auto lookup = [&](const std::string& name, const char* where) {
    auto it = t->index_of.find(name);
    if (it == t->index_of.end()) {
      throw Error(ErrorKind::Format, std::string("unknown element '") + name + "' in " + where);
    }
    return it->second;
  };

  t->bottom = lookup(raw.bottom, "bottom");
  t->top = lookup(raw.top, "top");

  t->ortho.assign(n, 0);
  for (const auto& [from, to] : raw.ortho) {
    t->ortho[lookup(from, "ortho")] = lookup(to, "ortho");
  }
  for (const auto& name : raw.elements) {
    if (!raw.ortho.count(name)) {
      throw Error(ErrorKind::Format, "ortho is not defined on '" + name + "'");
    }
  }

  // Reflexive-transitive closure (Warshall) over up-sets.
  t->up.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) t->up[i] |= Mask{1} << i;
  for (const auto& [x, y] : raw.leq) t->up[lookup(x, "leq")] |= Mask{1} << lookup(y, "leq");
  for (std::uint32_t k = 0; k < n; ++k) {
    for (std::uint32_t i = 0; i < n; ++i) {
      if (has(t->up[i], k)) t->up[i] |= t->up[k];
    }
  }
  t->down.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (has(t->up[i], j)) t->down[j] |= Mask{1} << i;
    }
  }

  const auto& names = t->names;
  auto violation = [&](ViolationKind kind, Law law, std::uint32_t x, std::uint32_t y) {
    return OmlViolation{kind, law, names[x], names[y]};
  };
  auto leq = [&](std::uint32_t x, std::uint32_t y) { return has(t->up[x], y); };

  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = x + 1; y < n; ++y) {
      if (leq(x, y) && leq(y, x)) return violation(ViolationKind::NotAPoset, Law::Antisymmetry, x, y);
    }
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    if (!leq(t->bottom, x)) return violation(ViolationKind::NotAPoset, Law::LowerBound, t->bottom, x);
    if (!leq(x, t->top)) return violation(ViolationKind::NotAPoset, Law::UpperBound, x, t->top);
  }

  // Meet = the unique greatest element among common lower bounds.
  t->meet.assign(n * n, 0);
  t->join.assign(n * n, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      Mask lower = t->down[x] & t->down[y];
      Mask upper = t->up[x] & t->up[y];
      std::optional<std::uint32_t> glb, lub;
      for (std::uint32_t z = 0; z < n; ++z) {
        if (has(lower, z) && (t->down[z] & lower) == lower) glb = z;
        if (has(upper, z) && (t->up[z] & upper) == upper) lub = z;
      }
      if (!glb) return violation(ViolationKind::NotALattice, Law::MeetExists, x, y);
      if (!lub) return violation(ViolationKind::NotALattice, Law::JoinExists, x, y);
      t->meet[x * n + y] = *glb;
      t->join[x * n + y] = *lub;
    }
  }

  const auto& o = t->ortho;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (o[o[x]] != x) return violation(ViolationKind::OrthoLawViolation, Law::Involution, x, x);
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (leq(x, y) && !leq(o[y], o[x])) {
        return violation(ViolationKind::OrthoLawViolation, Law::OrderReversing, x, y);
      }
    }
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    if (t->meet[x * n + o[x]] != t->bottom) {
      return violation(ViolationKind::OrthoLawViolation, Law::ComplementMeet, x, o[x]);
    }
    if (t->join[x * n + o[x]] != t->top) {
      return violation(ViolationKind::OrthoLawViolation, Law::ComplementJoin, x, o[x]);
    }
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (!leq(x, y)) continue;
      if (t->join[x * n + t->meet[y * n + o[x]]] != y) {
        return violation(ViolationKind::OrthomodularityViolation, Law::Orthomodular, x, y);
      }
    }
  }

  t->id = next_lattice_id.fetch_add(1);
  return FiniteOml(std::move(t));
}

FiniteOml make_oml(const RawOml& raw) {
  auto result = validate_oml(raw);
  if (auto* v = std::get_if<OmlViolation>(&result)) {
    throw Error(ErrorKind::Format, "not an orthomodular lattice: " + v->describe());
  }
  return std::get<FiniteOml>(std::move(result));
}

bool isomorphic(const FiniteOml& a, const FiniteOml& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;

  // Backtracking search for an order- and ortho-preserving bijection. The
  // bundled lattices are small, and candidates are pruned by up/down degree.
  auto signature = [](const FiniteOml& l, std::uint32_t i) {
    return std::pair{std::popcount(l.up_mask_index(i)),
                     std::popcount(l.down_mask(l.at(i)))};
  };
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);

  auto consistent = [&](std::uint32_t i) {
    const auto mi = static_cast<std::uint32_t>(map[i]);
    for (std::uint32_t j = 0; j <= i; ++j) {
      const auto mj = static_cast<std::uint32_t>(map[j]);
      if (has(a.up_mask_index(i), j) != has(b.up_mask_index(mi), mj)) return false;
      if (has(a.up_mask_index(j), i) != has(b.up_mask_index(mj), mi)) return false;
    }
    const auto oi = a.ortho_index(i);
    if (oi <= i && map[oi] >= 0 && b.ortho_index(mi) != static_cast<std::uint32_t>(map[oi])) {
      return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::uint32_t i) -> bool {
    if (i == n) return true;
    for (std::uint32_t c = 0; c < n; ++c) {
      if (used[c] || signature(a, i) != signature(b, c)) continue;
      map[i] = static_cast<int>(c);
      used[c] = true;
      if (consistent(i) && self(self, i + 1)) return true;
      used[c] = false;
      map[i] = -1;
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace sasaki
