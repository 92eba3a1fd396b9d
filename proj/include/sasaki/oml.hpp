#pragma once

// Finite orthomodular lattices.
//
// A FiniteOml is built only through validate_oml(), which checks every law
// (partial order, bounds, lattice, orthocomplementation, orthomodularity)
// and then freezes meet/join into dense tables. After validation the
// structure is immutable; copies share the same tables.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sasaki {

// Upsets are stored as one 64-bit word, so lattices are capped at 64 elements.
inline constexpr std::size_t kMaxLatticeElements = 64;

using Mask = std::uint64_t;

class FiniteOml;

// Handle to one element of one lattice. Only meaningful together with the
// lattice that produced it; operations reject handles from other lattices.
class Element {
 public:
  Element() = default;

  std::uint32_t index() const noexcept { return index_; }
  std::uint64_t lattice_id() const noexcept { return lattice_id_; }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

 private:
  friend class FiniteOml;
  Element(std::uint64_t lattice_id, std::uint32_t index)
      : lattice_id_(lattice_id), index_(index) {}

  std::uint64_t lattice_id_ = 0;
  std::uint32_t index_ = 0;
};

// Unvalidated lattice description, as read from a lattice file.
struct RawOml {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq;  // generating pairs
  std::map<std::string, std::string> ortho;
  std::string bottom;
  std::string top;
};

enum class Law {
  Antisymmetry,
  LowerBound,      // bottom <= x
  UpperBound,      // x <= top
  MeetExists,
  JoinExists,
  Involution,      // x'' = x
  OrderReversing,  // x <= y => y' <= x'
  ComplementMeet,  // x /\ x' = bottom
  ComplementJoin,  // x \/ x' = top
  Orthomodular,    // x <= y => y = x \/ (y /\ x')
};

enum class ViolationKind {
  NotAPoset,
  NotALattice,
  OrthoLawViolation,
  OrthomodularityViolation,
};

const char* to_string(Law law);
const char* to_string(ViolationKind kind);

// First violated law, with the witnessing element names (x, y). Unary laws
// repeat the witness in both slots.
struct OmlViolation {
  ViolationKind kind;
  Law law;
  std::string x;
  std::string y;

  std::string describe() const;
};

class FiniteOml {
 public:
  std::size_t size() const noexcept { return tables_->names.size(); }
  std::uint64_t id() const noexcept { return tables_->id; }

  Element bottom() const { return make(tables_->bottom); }
  Element top() const { return make(tables_->top); }

  Element at(std::size_t index) const;
  std::optional<Element> find(const std::string& name) const;
  // Throws Error(UnknownElement) when the name is absent.
  Element element(const std::string& name) const;
  const std::string& name(Element x) const;
  const std::vector<std::string>& names() const noexcept { return tables_->names; }
  std::vector<Element> elements() const;

  bool leq(Element x, Element y) const;
  Element meet(Element x, Element y) const;
  Element join(Element x, Element y) const;
  Element ortho(Element x) const;

  // x & y = y /\ (x \/ y')
  Element sasaki(Element x, Element y) const;
  // x = (x /\ y) \/ (x /\ y')
  bool compatible(Element x, Element y) const;
  // x <= y'
  bool orthogonal(Element x, Element y) const;

  // Bitmask views, indexed by dense element index.
  Mask up_mask(Element x) const;
  Mask down_mask(Element x) const;
  Mask all_mask() const noexcept;

  // Raw index-level access for hot loops (no foreign-element checks).
  std::uint32_t meet_index(std::uint32_t x, std::uint32_t y) const {
    return tables_->meet[x * size() + y];
  }
  std::uint32_t join_index(std::uint32_t x, std::uint32_t y) const {
    return tables_->join[x * size() + y];
  }
  std::uint32_t ortho_index(std::uint32_t x) const { return tables_->ortho[x]; }
  std::uint32_t sasaki_index(std::uint32_t x, std::uint32_t y) const {
    return meet_index(y, join_index(x, ortho_index(y)));
  }
  Mask up_mask_index(std::uint32_t x) const { return tables_->up[x]; }

  // Covering pairs of the order, as names; the loader's closure of these
  // reproduces the full order.
  std::vector<std::pair<std::string, std::string>> cover_pairs() const;
  RawOml to_raw() const;

 private:
  friend std::variant<FiniteOml, OmlViolation> validate_oml(const RawOml& raw);

  struct Tables {
    std::uint64_t id = 0;
    std::vector<std::string> names;
    std::map<std::string, std::uint32_t> index_of;
    std::vector<Mask> up;    // up[x]   = { y : x <= y }
    std::vector<Mask> down;  // down[x] = { y : y <= x }
    std::vector<std::uint32_t> meet;
    std::vector<std::uint32_t> join;
    std::vector<std::uint32_t> ortho;
    std::uint32_t bottom = 0;
    std::uint32_t top = 0;
  };

  explicit FiniteOml(std::shared_ptr<const Tables> tables) : tables_(std::move(tables)) {}

  Element make(std::uint32_t index) const { return Element(tables_->id, index); }
  std::uint32_t check(Element x) const;

  std::shared_ptr<const Tables> tables_;
};

// Loads and validates a raw structure. The order is the reflexive-transitive
// closure of raw.leq. Structural defects of the description itself (duplicate
// or unknown names, partial ortho map, too many elements) throw
// Error(Format) / Error(TooLarge); law violations are returned.
std::variant<FiniteOml, OmlViolation> validate_oml(const RawOml& raw);

// validate_oml for inputs known to be good; throws Error(Format) on violation.
FiniteOml make_oml(const RawOml& raw);

bool isomorphic(const FiniteOml& a, const FiniteOml& b);

}  // namespace sasaki
