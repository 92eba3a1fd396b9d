#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "sasaki/error.hpp"
#include "sasaki/filters.hpp"

using namespace sasaki;

namespace {

UpSet gen(const FiniteOml& l, std::initializer_list<const char*> names) {
  std::vector<Element> g;
  for (const char* n : names) g.push_back(l.element(n));
  return UpSet::generated_by(l, g);
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Upset, filter counts from the brute-force oracle, computed once and frozen.
struct Frozen {
  const char* name;
  std::size_t upsets;
  std::size_t filters;
  std::size_t proper;
};
constexpr Frozen kFrozen[] = {
    {"chain2", 3, 3, 1},   {"boolean4", 6, 5, 3}, {"boolean8", 20, 9, 7}, {"boolean16", 168, 17, 15},
    {"mo2", 18, 11, 9},    {"mo3", 66, 29, 27},   {"mo4", 258, 83, 81},
};

}  // namespace

TEST_CASE("principal upsets") {
  const auto mo2 = oracle::lattice(bundled::mo(2));
  CHECK(up(mo2, mo2.top()).member_names() == std::vector<std::string>{"1"});
  CHECK(up(mo2, mo2.bottom()).size() == mo2.size());
  CHECK(up(mo2, mo2.element("a")).member_names() == sorted({"a", "1"}));
  for (auto x : mo2.elements()) CHECK(is_sasaki_filter(up(mo2, x)));
}

TEST_CASE("UpSet construction checks upward closure") {
  const auto mo2 = oracle::lattice(bundled::mo(2));
  const Mask just_a = Mask{1} << mo2.element("a").index();
  CHECK_THROWS_AS(UpSet::from_mask(mo2, just_a), Error);
  CHECK_NOTHROW(UpSet::from_mask(mo2, just_a | (Mask{1} << mo2.top().index())));
}

TEST_CASE("is_sasaki_filter examples") {
  const auto mo2 = oracle::lattice(bundled::mo(2));
  const auto top_only = up(mo2, mo2.top());
  CHECK(is_sasaki_filter(top_only));
  CHECK(is_proper(top_only));

  const auto ab = gen(mo2, {"a", "b"});
  CHECK(ab.member_names() == sorted({"a", "b", "1"}));
  CHECK(is_sasaki_filter(ab));
  CHECK(is_proper(ab));

  const auto b8 = oracle::lattice(bundled::boolean(3));
  CHECK_FALSE(is_sasaki_filter(gen(b8, {"a", "b"})));
  CHECK_FALSE(is_proper(UpSet(b8)));
  CHECK_FALSE(is_proper(up(b8, b8.bottom())));
}

TEST_CASE("sasaki_step") {
  const auto b8 = oracle::lattice(bundled::boolean(3));
  CHECK(sasaki_step(UpSet(b8)).empty());
  const auto s = gen(b8, {"a", "b"});
  CHECK(sasaki_step(s) == up(b8, b8.bottom()));
  const auto f = up(b8, b8.element("ab"));
  CHECK(sasaki_step(f) == f);
}

TEST_CASE("sasaki_closure examples") {
  const auto mo2 = oracle::lattice(bundled::mo(2));
  const auto a = up(mo2, mo2.element("a"));
  CHECK(sasaki_closure(a).upset() == a);
  const auto c = sasaki_closure(gen(mo2, {"a", "b"}));
  CHECK(c.upset().member_names() == sorted({"a", "b", "1"}));
  CHECK(c.is_proper());

  const auto b8 = oracle::lattice(bundled::boolean(3));
  const auto whole = sasaki_closure(gen(b8, {"a", "b"}));
  CHECK(whole.upset().size() == 8);
  CHECK_FALSE(whole.is_proper());
  CHECK(sasaki_closure_depth(gen(b8, {"a", "b"})) == 1);
}

TEST_CASE("enumeration counts match the frozen brute-force values") {
  for (const auto& [name, raw] : bundled::oml_suite()) {
    CAPTURE(name);
    const auto l = oracle::lattice(raw);
    const auto it = std::find_if(std::begin(kFrozen), std::end(kFrozen),
                                 [&](const Frozen& f) { return name == f.name; });
    REQUIRE(it != std::end(kFrozen));

    const auto upsets = enumerate_upsets(l);
    const auto filters = enumerate_sasaki_filters(l);
    CHECK(upsets.size() == it->upsets);
    CHECK(filters.size() == it->filters);
    CHECK(std::count_if(filters.begin(), filters.end(), [](const auto& f) { return f.is_proper(); }) ==
          static_cast<long>(it->proper));

    // each exactly once, and the same sets as the oracle
    std::set<Mask> seen;
    for (const auto& s : upsets) CHECK(seen.insert(s.mask()).second);
    const auto brute = oracle::all_upsets(l);
    CHECK(seen == std::set<Mask>(brute.begin(), brute.end()));

    std::set<Mask> fseen;
    for (const auto& f : filters) fseen.insert(f.upset().mask());
    const auto bf = oracle::all_sasaki_filters(l);
    CHECK(fseen == std::set<Mask>(bf.begin(), bf.end()));
  }
}

TEST_CASE("enumeration order is deterministic") {
  const auto l = oracle::lattice(bundled::mo(3));
  const auto a = enumerate_upsets(l);
  const auto b = enumerate_upsets(l);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].mask() == b[i].mask());
}

TEST_CASE("enumeration refuses large lattices") {
  const auto l = oracle::lattice(bundled::boolean(4));
  CHECK_THROWS_AS(enumerate_upsets(l, 8), Error);
  try {
    enumerate_sasaki_filters(l, 15);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
  CHECK(enumerate_upsets(l, 16).size() == 168);
}

TEST_CASE("closure properties on every upset") {
  for (const auto& [name, raw] : bundled::oml_suite()) {
    CAPTURE(name);
    const auto l = oracle::lattice(raw);
    std::vector<Mask> filters;
    for (const auto& f : enumerate_sasaki_filters(l)) filters.push_back(f.upset().mask());

    for (const auto& s : enumerate_upsets(l)) {
      // increasing chain up to the fixpoint
      UpSet cur = s;
      for (int k = 0; k < 8; ++k) {
        UpSet next = sasaki_step(cur);
        CHECK(cur.subset_of(next));
        cur = next;
      }
      const auto closure = sasaki_closure(s);
      CHECK(is_sasaki_filter(closure.upset()));
      CHECK(closure.upset().mask() == oracle::filter_intersection_above(filters, s.mask(), l.all_mask()));
      // stable-by-compatible-meet characterization
      CHECK(is_sasaki_filter(s) == is_stable_by_compatible_meet(s));
    }
  }
}

TEST_CASE("Sasaki filters are closed under intersection") {
  for (const auto& [name, raw] : bundled::oml_suite()) {
    CAPTURE(name);
    const auto l = oracle::lattice(raw);
    const auto filters = enumerate_sasaki_filters(l);
    for (const auto& f : filters) {
      for (const auto& g : filters) CHECK(is_sasaki_filter(f.upset().intersect(g.upset())));
    }
  }
}

TEST_CASE("Sasaki filters are not closed under union") {
  const auto b8 = oracle::lattice(bundled::boolean(3));
  const auto fa = up(b8, b8.element("a"));
  const auto fb = up(b8, b8.element("b"));
  CHECK(is_sasaki_filter(fa));
  CHECK(is_sasaki_filter(fb));
  CHECK_FALSE(is_sasaki_filter(fa.unite(fb)));
}

TEST_CASE("two atoms in one proper filter of MO2") {
  const auto mo2 = oracle::lattice(bundled::mo(2));
  const auto f = as_sasaki_filter(gen(mo2, {"a", "b"}));
  REQUIRE(f.has_value());
  CHECK(f->is_proper());
  CHECK(f->contains(mo2.element("a")));
  CHECK(f->contains(mo2.element("b")));
}
