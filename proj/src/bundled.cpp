#include "sasaki/bundled.hpp"

namespace sasaki::bundled {

RawOml chain2() {
  RawOml raw;
  raw.elements = {"0", "1"};
  raw.leq = {{"0", "1"}};
  raw.ortho = {{"0", "1"}, {"1", "0"}};
  raw.bottom = "0";
  raw.top = "1";
  return raw;
}

RawOml boolean(int atoms) {
  const int n = 1 << atoms;
  auto name = [&](int s) {
    if (s == 0) return std::string("0");
    std::string out;
    for (int i = 0; i < atoms; ++i) {
      if (s & (1 << i)) out += static_cast<char>('a' + i);
    }
    return out;
  };
  RawOml raw;
  for (int s = 0; s < n; ++s) raw.elements.push_back(name(s));
  for (int s = 0; s < n; ++s) {
    for (int i = 0; i < atoms; ++i) {
      if (!(s & (1 << i))) raw.leq.emplace_back(name(s), name(s | (1 << i)));
    }
    raw.ortho[name(s)] = name((n - 1) ^ s);
  }
  raw.bottom = name(0);
  raw.top = name(n - 1);
  return raw;
}

RawOml mo(int pairs) {
  RawOml raw;
  raw.elements = {"0"};
  raw.bottom = "0";
  raw.top = "1";
  raw.ortho = {{"0", "1"}, {"1", "0"}};
  for (int i = 0; i < pairs; ++i) {
    const std::string x(1, static_cast<char>('a' + i));
    const std::string xc = x + "'";
    for (const auto& atom : {x, xc}) {
      raw.elements.push_back(atom);
      raw.leq.emplace_back("0", atom);
      raw.leq.emplace_back(atom, "1");
    }
    raw.ortho[x] = xc;
    raw.ortho[xc] = x;
  }
  raw.elements.push_back("1");
  return raw;
}

RawOml benzene() {
  RawOml raw;
  raw.elements = {"0", "a", "b", "b'", "a'", "1"};
  raw.leq = {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "b'"}, {"b'", "a'"}, {"a'", "1"}};
  raw.ortho = {{"0", "1"}, {"1", "0"}, {"a", "a'"}, {"a'", "a"}, {"b", "b'"}, {"b'", "b"}};
  raw.bottom = "0";
  raw.top = "1";
  return raw;
}

std::vector<Named> oml_suite() {
  return {
      {"chain2", chain2()},     {"boolean4", boolean(2)}, {"boolean8", boolean(3)},
      {"boolean16", boolean(4)}, {"mo2", mo(2)},          {"mo3", mo(3)},
      {"mo4", mo(4)},
  };
}

}  // namespace sasaki::bundled
