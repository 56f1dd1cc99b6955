#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "semitree/monoid.hpp"
#include "semitree/tree.hpp"

// The desk-scale fixture monoids used across the test suites.

namespace semitree::fixtures {

// {1}
inline FiniteMonoid trivial() {
  return from_generators(1, {{"a", {0}}});
}

// {1, r1, r2} with constant maps r1, r2
inline FiniteMonoid flip_flop() {
  return from_generators(2, {{"r1", {0, 0}}, {"r2", {1, 1}}});
}

inline FiniteMonoid c2() {
  return from_generators(2, {{"s", {1, 0}}});
}

inline FiniteMonoid c3() {
  return from_generators(3, {{"g", {1, 2, 0}}});
}

// the 2x2 rectangular band with an identity adjoined as element 0
inline FiniteMonoid rect_band() {
  // 0 = 1, 1 = (1,1), 2 = (1,2), 3 = (2,1), 4 = (2,2); (i,j)(k,l) = (i,l)
  std::vector<std::vector<ElementId>> rows = {
      {0, 1, 2, 3, 4},
      {1, 1, 2, 1, 2},
      {2, 1, 2, 1, 2},
      {3, 3, 4, 3, 4},
      {4, 3, 4, 3, 4},
  };
  return from_table(rows, 0, {{"a", 1}, {"d", 4}},
                    {"1", "a11", "a12", "a21", "a22"});
}

// the five-element monoid acting elliptically on T(2, 2) but not
// realizable as a two-level wreath product of full transformation monoids
inline FiniteMonoid ella() {
  return from_generators(4, {{"b", {1, 1, 3, 3}},
                             {"c", {2, 3, 2, 3}},
                             {"d", {2, 3, 3, 3}},
                             {"e", {3, 3, 3, 3}}});
}

// the full transformation monoid on two points
inline FiniteMonoid t2() {
  return from_generators(2, {{"s", {1, 0}}, {"c0", {0, 0}}});
}

// A 2x2 Rees matrix monoid over C2 whose sandwich matrix has one zero
// entry, with a zero element and an identity: 0 = 1, 1..8 = (a, g, b)
// with a, b in {1, 2} and g in {e, c}, 9 = z.  Exercises the U_1/U_3/U_4
// labeling cases that the standard fixtures never reach.
inline FiniteMonoid bz() {
  auto enc = [](int a, int g, int b) { return 1 + (a * 2 + g) * 2 + b; };
  std::vector<std::vector<ElementId>> rows(10, std::vector<ElementId>(10, 9));
  for (int x = 0; x < 10; ++x) {
    rows[0][x] = x;
    rows[x][0] = x;
  }
  rows[9][9] = 9;
  for (int x = 1; x <= 8; ++x) {
    rows[x][9] = 9;
    rows[9][x] = 9;
  }
  for (int a = 0; a < 2; ++a) {
    for (int g = 0; g < 2; ++g) {
      for (int b = 0; b < 2; ++b) {
        for (int a2 = 0; a2 < 2; ++a2) {
          for (int g2 = 0; g2 < 2; ++g2) {
            for (int b2 = 0; b2 < 2; ++b2) {
              // C(b, a2) = 0 iff b = 2 and a2 = 2 (indices 1)
              bool zero = (b == 1 && a2 == 1);
              rows[enc(a, g, b)][enc(a2, g2, b2)] =
                  zero ? 9 : enc(a, g ^ g2, b2);
            }
          }
        }
      }
    }
  }
  return from_table(rows, 0,
                    {{"p", enc(0, 1, 0)}, {"s", enc(0, 0, 1)}, {"t", enc(1, 0, 0)}},
                    {"1", "e11", "e12", "c11", "c12", "e21", "e22", "c21", "c22",
                     "z"});
}

// A transformation monoid together with the transformation realizing each
// element, replaying the same discovery order as from_generators.
struct TransformationAction {
  FiniteMonoid m;
  std::vector<std::vector<int>> trafos;
};

inline TransformationAction transformation_action(
    int domain, const std::vector<std::pair<std::string, std::vector<int>>>& gens) {
  TransformationAction out;
  out.m = from_generators(domain, gens);
  std::vector<int> id(domain);
  for (int i = 0; i < domain; ++i) id[i] = i;
  std::map<std::vector<int>, int> index{{id, 0}};
  out.trafos.push_back(id);
  for (size_t cur = 0; cur < out.trafos.size(); ++cur) {
    for (auto& [label, images] : gens) {
      std::vector<int> prod(domain);
      for (int x = 0; x < domain; ++x) prod[x] = images[out.trafos[cur][x]];
      if (index.emplace(prod, out.trafos.size()).second) {
        out.trafos.push_back(prod);
      }
    }
  }
  // the replay must agree with the monoid table
  for (int a = 0; a < out.m.n; ++a) {
    for (int b = 0; b < out.m.n; ++b) {
      std::vector<int> prod(domain);
      for (int x = 0; x < domain; ++x) prod[x] = out.trafos[b][out.trafos[a][x]];
      if (prod != out.trafos[out.m.mul(a, b)]) {
        throw std::logic_error("transformation replay out of sync");
      }
    }
  }
  return out;
}

// The ella action on T(2, 2): leaves 1..4 of the figure are vertices 3..6.
inline EllipticMTree ella_tree() {
  TransformationAction act = transformation_action(4, {{"b", {1, 1, 3, 3}},
                                                       {"c", {2, 3, 2, 3}},
                                                       {"d", {2, 3, 3, 3}},
                                                       {"e", {3, 3, 3, 3}}});
  EllipticMTree chi;
  chi.tree = build_uniform_tree({2, 2});
  for (int m = 0; m < act.m.n; ++m) {
    std::vector<int> vmap(chi.tree.size(), -1);
    vmap[0] = 0;
    for (int p = 0; p < 4; ++p) vmap[3 + p] = 3 + act.trafos[m][p];
    vmap[1] = chi.tree.father(vmap[3]);
    vmap[2] = chi.tree.father(vmap[5]);
    chi.action.push_back(std::move(vmap));
  }
  chi.base_ray = {0, 1, 3};  // the ray of leaf 1
  return chi;
}

inline std::vector<std::pair<std::string, FiniteMonoid>> acceptance_fixtures() {
  return {{"trivial", trivial()}, {"flip_flop", flip_flop()}, {"c2", c2()},
          {"c3", c3()},           {"rect_band", rect_band()}, {"ella", ella()},
          {"t2", t2()}};
}

inline std::vector<std::pair<std::string, FiniteMonoid>> all_fixtures() {
  auto out = acceptance_fixtures();
  out.emplace_back("bz", bz());
  return out;
}

}  // namespace semitree::fixtures
