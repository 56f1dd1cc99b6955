#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "semitree/monoid.hpp"

using namespace semitree;

namespace {

// independent oracle: a <=_L b iff a = xb for some x (or a = b)
bool oracle_leq_l(const FiniteMonoid& m, ElementId a, ElementId b) {
  if (a == b) return true;
  for (ElementId x = 0; x < m.n; ++x) {
    if (m.mul(x, b) == a) return true;
  }
  return false;
}

bool oracle_leq_r(const FiniteMonoid& m, ElementId a, ElementId b) {
  if (a == b) return true;
  for (ElementId x = 0; x < m.n; ++x) {
    if (m.mul(b, x) == a) return true;
  }
  return false;
}

bool oracle_leq_j(const FiniteMonoid& m, ElementId a, ElementId b) {
  if (a == b) return true;
  for (ElementId x = 0; x < m.n; ++x) {
    for (ElementId y = 0; y < m.n; ++y) {
      if (m.mul(m.mul(x, b), y) == a) return true;
    }
  }
  return false;
}

// longest strict J-chain from x upward, by brute-force enumeration
int oracle_height(const FiniteMonoid& m, const GreenData& g, ElementId x) {
  int best = 0;
  for (ElementId y = 0; y < m.n; ++y) {
    if (g.lt_j(x, y)) best = std::max(best, 1 + oracle_height(m, g, y));
  }
  return best;
}

}  // namespace

TEST_CASE("from_generators discovers the fixtures") {
  CHECK(fixtures::trivial().n == 1);
  CHECK(fixtures::flip_flop().n == 3);
  CHECK(fixtures::c2().n == 2);
  CHECK(fixtures::c3().n == 3);
  CHECK(fixtures::t2().n == 4);

  FiniteMonoid ella = fixtures::ella();
  CHECK(ella.n == 5);
  CHECK(ella.identity == 0);  // contains the identity transformation
}

TEST_CASE("from_generators validates images") {
  CHECK_THROWS_WITH_AS(from_generators(2, {{"oops", {0, 7}}}),
                       doctest::Contains("oops"), std::invalid_argument);
  CHECK_THROWS_AS(from_generators(0, {}), std::invalid_argument);
  CHECK_THROWS_WITH_AS(from_generators(3, {{"g", {0, 1}}}),
                       doctest::Contains("expected 3 images"), std::invalid_argument);
}

TEST_CASE("from_table validates the axioms") {
  CHECK(from_table({{0}}, 0, {}).n == 1);

  // C3 as an explicit table: one J-class, group H-class of size 3
  FiniteMonoid c3 = from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0, {{"g", 1}});
  GreenData g = compute_green(c3);
  CHECK(g.j_classes.size() == 1);
  CHECK(g.h_classes.size() == 1);
  CHECK(g.h_classes[0].size() == 3);

}

TEST_CASE("a non-associative table is rejected with a witness") {
  std::vector<std::vector<ElementId>> rows = {{0, 1, 2}, {1, 2, 2}, {2, 2, 1}};
  CHECK_THROWS_WITH_AS(from_table(rows, 0, {{"a", 1}, {"b", 2}}),
                       doctest::Contains("not associative"), std::invalid_argument);
}

TEST_CASE("from_table rejects non-generating generator lists") {
  CHECK_THROWS_WITH_AS(
      from_table({{0, 1}, {1, 0}}, 0, {}),
      doctest::Contains("generators fail to generate"), std::invalid_argument);
}

TEST_CASE("adjoin_identity grows the J-chain at the top") {
  FiniteMonoid triv = fixtures::trivial();
  FiniteMonoid mi = adjoin_identity(triv);
  CHECK(mi.n == 2);
  CHECK(mi.identity == 0);
  GreenData g = compute_green(mi);
  CHECK(g.lt_l(1, 0));  // 1 <_L I

  FiniteMonoid ff = adjoin_identity(fixtures::flip_flop());
  GreenData gff = compute_green(ff);
  // J-chain I >_J 1 >_J {r1, r2}
  CHECK(gff.j_classes.size() == 3);
  CHECK(gff.lt_j(1, 0));
  CHECK(gff.lt_j(2, 1));
  CHECK(gff.equiv_j(2, 3));

  FiniteMonoid twice = adjoin_identity(mi);
  CHECK(twice.n == 3);
  GreenData g2 = compute_green(twice);
  CHECK(g2.j_classes.size() == 3);
}

TEST_CASE("Green relations agree with the product-scan oracle") {
  for (auto& [name, m] : fixtures::all_fixtures()) {
    CAPTURE(name);
    FiniteMonoid mi = adjoin_identity(m);
    GreenData g = compute_green(mi);
    for (ElementId a = 0; a < mi.n; ++a) {
      for (ElementId b = 0; b < mi.n; ++b) {
        CHECK(g.leq_l[a][b] == oracle_leq_l(mi, a, b));
        CHECK(g.leq_r[a][b] == oracle_leq_r(mi, a, b));
        CHECK(g.leq_j[a][b] == oracle_leq_j(mi, a, b));
      }
    }
  }
}

TEST_CASE("flip-flop^I Green structure") {
  FiniteMonoid mi = adjoin_identity(fixtures::flip_flop());
  GreenData g = compute_green(mi);
  // L-classes all singletons; r1 R r2
  for (auto& cls : g.l_classes) CHECK(cls.size() == 1);
  CHECK(g.equiv_r(2, 3));
  CHECK(g.j_classes.size() == 3);
}

TEST_CASE("ella^I has a minimum J-class at (4444)") {
  FiniteMonoid m = fixtures::ella();
  FiniteMonoid mi = adjoin_identity(m);
  GreenData g = compute_green(mi);
  // element "e" = (4444); with the shift it is the last generator's image
  ElementId e = -1;
  for (auto& [label, elt] : mi.generators) {
    if (label == "e") e = elt;
  }
  REQUIRE(e >= 0);
  for (ElementId x = 0; x < mi.n; ++x) {
    CHECK(g.leq_j[e][x]);
  }
}

TEST_CASE("j_height matches the brute-force chain oracle") {
  for (auto& [name, m] : fixtures::all_fixtures()) {
    CAPTURE(name);
    FiniteMonoid mi = adjoin_identity(m);
    GreenData g = compute_green(mi);
    auto h = j_height(mi, g);
    CHECK(h[mi.identity] == 0);
    for (ElementId x = 0; x < mi.n; ++x) {
      CHECK(h[x] == oracle_height(mi, g, x));
      for (ElementId y = 0; y < mi.n; ++y) {
        if (g.equiv_j(x, y)) CHECK(h[x] == h[y]);
        if (g.lt_j(x, y)) CHECK(h[x] > h[y]);
      }
    }
  }
}

TEST_CASE("j_height of the small chains") {
  FiniteMonoid mi = adjoin_identity(fixtures::trivial());
  auto h = j_height(mi, compute_green(mi));
  CHECK(h == std::vector<int>{0, 1});

  FiniteMonoid ff = adjoin_identity(fixtures::flip_flop());
  auto hff = j_height(ff, compute_green(ff));
  CHECK(hff == std::vector<int>{0, 1, 2, 2});
}

TEST_CASE("j_height is defined whenever the J-poset has a maximum") {
  // in a monoid the identity's J-class is always the unique maximum
  FiniteMonoid mi = adjoin_identity(fixtures::rect_band());
  CHECK_NOTHROW(j_height(mi, compute_green(mi)));
}

TEST_CASE("stability holds on all fixtures and consequences follow") {
  for (auto& [name, m] : fixtures::all_fixtures()) {
    CAPTURE(name);
    FiniteMonoid mi = adjoin_identity(m);
    GreenData g = compute_green(mi);
    CHECK(is_stable(mi, g).stable);
    // <_R and <_L are contained in <_J
    for (ElementId a = 0; a < mi.n; ++a) {
      for (ElementId b = 0; b < mi.n; ++b) {
        if (g.lt_r(a, b)) CHECK(g.lt_j(a, b));
        if (g.lt_l(a, b)) CHECK(g.lt_j(a, b));
      }
    }
  }
}

TEST_CASE("<=_L is right compatible") {
  for (auto& [name, m] : fixtures::all_fixtures()) {
    CAPTURE(name);
    FiniteMonoid mi = adjoin_identity(m);
    GreenData g = compute_green(mi);
    for (ElementId a = 0; a < mi.n; ++a) {
      for (ElementId b = 0; b < mi.n; ++b) {
        if (!g.leq_l[a][b]) continue;
        for (ElementId x = 0; x < mi.n; ++x) {
          CHECK(g.leq_l[mi.mul(a, x)][mi.mul(b, x)]);
        }
      }
    }
  }
}

TEST_CASE("a <_L b and b R bc imply a R ac <_L bc") {
  for (auto& [name, m] : fixtures::all_fixtures()) {
    CAPTURE(name);
    FiniteMonoid mi = adjoin_identity(m);
    GreenData g = compute_green(mi);
    for (ElementId a = 0; a < mi.n; ++a) {
      for (ElementId b = 0; b < mi.n; ++b) {
        if (!g.lt_l(a, b)) continue;
        for (ElementId c = 0; c < mi.n; ++c) {
          if (!g.equiv_r(b, mi.mul(b, c))) continue;
          CHECK(g.equiv_r(a, mi.mul(a, c)));
          CHECK(g.lt_l(mi.mul(a, c), mi.mul(b, c)));
        }
      }
    }
  }
}

TEST_CASE("W sets") {
  FiniteMonoid ff = adjoin_identity(fixtures::flip_flop());
  auto w = w_set(compute_green(ff));
  CHECK(std::count(w.begin(), w.end(), true) == 4);  // everything

  FiniteMonoid c3 = adjoin_identity(fixtures::c3());
  auto wc3 = w_set(compute_green(c3));
  CHECK(std::count(wc3.begin(), wc3.end(), true) == c3.n);

  // rectangular band: columns are L-classes with singleton H-classes
  FiniteMonoid rb = adjoin_identity(fixtures::rect_band());
  GreenData g = compute_green(rb);
  auto wrb = w_set(g);
  CHECK(wrb[0]);  // I
  CHECK(wrb[1]);  // old identity
  for (ElementId x = 2; x < rb.n; ++x) CHECK_FALSE(wrb[x]);

  // W is a union of J-classes on every fixture
  for (auto& [name, m] : fixtures::all_fixtures()) {
    CAPTURE(name);
    FiniteMonoid mi = adjoin_identity(m);
    GreenData gg = compute_green(mi);
    auto wm = w_set(gg);
    for (ElementId a = 0; a < mi.n; ++a) {
      for (ElementId b = 0; b < mi.n; ++b) {
        if (gg.equiv_j(a, b)) CHECK(wm[a] == wm[b]);
      }
    }
  }
}

TEST_CASE("aperiodic morphisms") {
  FiniteMonoid c3 = fixtures::c3();
  FiniteMonoid triv = fixtures::trivial();
  // identity morphism is aperiodic
  std::vector<ElementId> idmap(c3.n);
  for (int i = 0; i < c3.n; ++i) idmap[i] = i;
  CHECK(is_aperiodic_morphism(c3, c3, idmap));
  // collapsing C3 onto the trivial monoid is not
  CHECK_FALSE(is_aperiodic_morphism(c3, triv, std::vector<ElementId>(3, 0)));
  // non-homomorphisms are rejected
  FiniteMonoid c2 = fixtures::c2();
  CHECK_THROWS_AS(is_aperiodic_morphism(c2, triv, {0, 5}), std::invalid_argument);
}
