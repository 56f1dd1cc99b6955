#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "semitree/length.hpp"
#include "semitree/rhodes.hpp"

using namespace semitree;

namespace {

RhodesMonoid rh_of(const FiniteMonoid& m) { return build_rh(adjoin_identity(m)); }

RhodesMonoid rhy_of(const FiniteMonoid& m) {
  FiniteMonoid mi = adjoin_identity(m);
  std::vector<ElementId> y;
  for (ElementId e : m.generator_elements()) y.push_back(e + 1);
  return build_rh_y(mi, y);
}

}  // namespace

TEST_CASE("lm reduction keeps leftmost representatives") {
  FiniteMonoid mi = adjoin_identity(fixtures::flip_flop());
  GreenData g = compute_green(mi);
  // ids in ff^I: I=0, 1=1, r1=2, r2=3
  CHECK(lm_reduce(mi, g, {3, 3, 0}).terms == std::vector<ElementId>{3, 0});
  CHECK(lm_reduce(mi, g, {0}).terms == std::vector<ElementId>{0});
  CHECK(lm_reduce(mi, g, {2, 1, 0}).terms == std::vector<ElementId>{2, 1, 0});
  CHECK_THROWS_AS(lm_reduce(mi, g, {1, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(lm_reduce(mi, g, {2, 1}), std::invalid_argument);
}

TEST_CASE("chain products in the flip-flop") {
  FiniteMonoid mi = adjoin_identity(fixtures::flip_flop());
  GreenData g = compute_green(mi);
  LChain r1{{2, 0}}, r2{{3, 0}}, one{{1, 0}}, id{{0}};
  CHECK(chain_product(mi, g, r1, r2) == r2);
  CHECK(chain_product(mi, g, r1, one).terms == std::vector<ElementId>{2, 1, 0});
  RhodesMonoid rh = rh_of(fixtures::flip_flop());
  for (int i = 0; i < rh.size(); ++i) {
    CHECK(chain_product(mi, g, rh.chain(i), id) == rh.chain(i));
    CHECK(chain_product(mi, g, id, rh.chain(i)) == rh.chain(i));
  }
}

TEST_CASE("Rh enumeration sizes") {
  CHECK(rh_of(fixtures::trivial()).size() == 2);
  RhodesMonoid ff = rh_of(fixtures::flip_flop());
  CHECK(ff.size() == 6);
  std::set<std::vector<ElementId>> expect = {{0},       {1, 0},    {2, 0},
                                             {3, 0},    {2, 1, 0}, {3, 1, 0}};
  std::set<std::vector<ElementId>> got;
  for (int i = 0; i < ff.size(); ++i) got.insert(ff.chain(i).terms);
  CHECK(got == expect);
  CHECK(rh_of(fixtures::t2()).size() == 9);
}

TEST_CASE("the cut-down expansion is a submonoid of the full one") {
  for (auto& [name, m] : fixtures::all_fixtures()) {
    CAPTURE(name);
    RhodesMonoid rh = rh_of(m);
    RhodesMonoid rhy = rhy_of(m);
    CHECK(rhy.size() <= rh.size());
    for (int i = 0; i < rhy.size(); ++i) {
      CHECK_NOTHROW(rh.index_of(rhy.chain(i)));
    }
  }
  CHECK(rhy_of(fixtures::flip_flop()).size() == 3);
}

TEST_CASE("prefixes and leftmost replacements stay in the cut-down expansion") {
  for (auto& [name, m] : fixtures::all_fixtures()) {
    CAPTURE(name);
    RhodesMonoid rhy = rhy_of(m);
    const GreenData& g = rhy.green;
    for (int i = 0; i < rhy.size(); ++i) {
      const LChain& c = rhy.chain(i);
      for (int k = 0; k < c.length(); ++k) {
        LChain suffix{std::vector<ElementId>(c.terms.end() - (k + 1), c.terms.end())};
        CHECK_NOTHROW(rhy.index_of(suffix));
      }
      for (ElementId x = 0; x < rhy.base.n; ++x) {
        if (x != c.leftmost() && g.equiv_l(x, c.leftmost())) {
          LChain replaced = c;
          replaced.terms[0] = x;
          CHECK_NOTHROW(rhy.index_of(replaced));
        }
      }
    }
  }
}

TEST_CASE("eta is a surjective homomorphism reflecting idempotents") {
  for (auto& [name, m] : fixtures::all_fixtures()) {
    CAPTURE(name);
    RhodesMonoid rh = rh_of(m);
    std::vector<ElementId> eta(rh.size());
    for (int i = 0; i < rh.size(); ++i) eta[i] = eta_project(rh.chain(i));
    // surjective
    std::set<ElementId> image(eta.begin(), eta.end());
    CHECK(static_cast<int>(image.size()) == rh.base.n);
    // homomorphism, aperiodic, and idempotent reflecting
    CHECK(is_aperiodic_morphism(rh.monoid, rh.base, eta));
    for (int i = 0; i < rh.size(); ++i) {
      bool idem_chain = rh.monoid.mul(i, i) == i;
      bool idem_image = rh.base.mul(eta[i], eta[i]) == eta[i];
      CHECK(idem_chain == idem_image);
    }
  }
}

TEST_CASE("wedge of chains") {
  FiniteMonoid mi = adjoin_identity(fixtures::flip_flop());
  GreenData g = compute_green(mi);
  LChain a{{2, 1, 0}}, b{{3, 1, 0}}, r1{{2, 0}}, one{{1, 0}};
  CHECK(wedge_l(g, a, a) == 2);       // full agreement: leftmost term
  CHECK(wedge_l(g, a, b) == 1);       // r1 not L r2, agree at the 1
  CHECK(wedge_l(g, r1, one) == 0);    // only at I
  // symmetric up to L
  for (auto& [name, m] : fixtures::all_fixtures()) {
    CAPTURE(name);
    RhodesMonoid rh = rh_of(m);
    for (int i = 0; i < rh.size(); ++i) {
      for (int j = 0; j < rh.size(); ++j) {
        CHECK(rh.green.equiv_l(wedge_l(rh.green, rh.chain(i), rh.chain(j)),
                               wedge_l(rh.green, rh.chain(j), rh.chain(i))));
      }
    }
  }
}

TEST_CASE("wedge contracts under left translation") {
  // (rho sigma /\ rho tau) <=_L (sigma /\ tau)
  for (auto& [name, m] : fixtures::acceptance_fixtures()) {
    CAPTURE(name);
    RhodesMonoid rh = rh_of(m);
    for (int r = 0; r < rh.size(); ++r) {
      for (int i = 0; i < rh.size(); ++i) {
        for (int j = 0; j < rh.size(); ++j) {
          ElementId lhs = wedge_l(rh.green, rh.chain(rh.monoid.mul(r, i)),
                                  rh.chain(rh.monoid.mul(r, j)));
          ElementId rhs = wedge_l(rh.green, rh.chain(i), rh.chain(j));
          CHECK(rh.green.leq_l[lhs][rhs]);
        }
      }
    }
  }
}

TEST_CASE("Zeiger encoding") {
  FiniteMonoid mi = adjoin_identity(fixtures::flip_flop());
  GreenData g = compute_green(mi);
  ReesCoords rc = coordinatize(mi, g);
  StarSharp ss = star_sharp(mi, g, rc);

  CHECK(zeiger_encode(mi, g, ss, LChain{{0}}).terms == std::vector<ElementId>{0});
  CHECK(zeiger_encode(mi, g, ss, LChain{{1, 0}}).terms ==
        std::vector<ElementId>{1, 0});

  for (auto& [name, m] : fixtures::all_fixtures()) {
    CAPTURE(name);
    RhodesMonoid rh = rh_of(m);
    ReesCoords rcm = coordinatize(rh.base, rh.green);
    StarSharp ssm = star_sharp(rh.base, rh.green, rcm);
    std::set<std::vector<ElementId>> images;
    for (int i = 0; i < rh.size(); ++i) {
      const LChain& c = rh.chain(i);
      JChain e = zeiger_encode(rh.base, rh.green, ssm, c);
      // x_i R m_i and m_i = x_i m#_{i-1}
      for (int k = 1; k <= c.length(); ++k) {
        ElementId xi = e.terms[c.length() - k];
        CHECK(rh.green.equiv_r(xi, c.term(k)));
        CHECK(rh.base.mul(xi, ssm.sharp[c.term(k - 1)]) == c.term(k));
      }
      // injectivity of the encoding
      CHECK(images.insert(e.terms).second);
    }
  }
}

TEST_CASE("the splice identity for the Zeiger encoding") {
  for (auto& [name, m] : fixtures::all_fixtures()) {
    CAPTURE(name);
    RhodesMonoid rh = rh_of(m);
    ReesCoords rc = coordinatize(rh.base, rh.green);
    StarSharp ss = star_sharp(rh.base, rh.green, rc);
    auto eps = [&](const LChain& c) { return zeiger_encode(rh.base, rh.green, ss, c); };
    for (int is = 0; is < rh.size(); ++is) {
      const LChain& sp = rh.chain(is);  // sigma'
      for (int cut = 0; cut <= sp.length(); ++cut) {
        LChain sigma{std::vector<ElementId>(sp.terms.end() - (cut + 1),
                                            sp.terms.end())};
        int isig = rh.index_of(sigma);
        for (int it = 0; it < rh.size(); ++it) {
          const LChain& st = rh.chain(rh.monoid.mul(isig, it));  // sigma tau
          if (!rh.green.equiv_r(sigma.leftmost(), st.leftmost())) continue;
          const LChain& spt = rh.chain(rh.monoid.mul(is, it));  // sigma' tau
          JChain top = eps(sp), bottom = eps(st), whole = eps(spt);
          // whole = top's extra steps spliced over bottom
          std::vector<ElementId> expect(top.terms.begin(),
                                        top.terms.begin() + (sp.length() - cut));
          expect.insert(expect.end(), bottom.terms.begin(), bottom.terms.end());
          CHECK(whole.terms == expect);
        }
      }
    }
  }
}

TEST_CASE("F_3 of single letters and the trivial closure") {
  FiniteMonoid triv = fixtures::trivial();
  Phi3Monoid p3 = phi3_build(triv);
  // identity F_3() plus F_3(1), F_3(11), F_3(111)
  CHECK(p3.size() == 4);
  REQUIRE(p3.monoid.has_value());
  // single letter: the three one-letter splits
  Phi3Element f1 = phi3_of_word(p3.mi, {1});
  CHECK(f1.triples.size() == 3);
  std::set<std::array<ElementId, 3>> got(f1.triples.begin(), f1.triples.end());
  std::set<std::array<ElementId, 3>> expect = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(got == expect);
  // eta is an aperiodic homomorphism
  CHECK(is_aperiodic_morphism(*p3.monoid, p3.mi, p3.eta));
}

TEST_CASE("products in Phi_3 match splitting words directly") {
  FiniteMonoid m = fixtures::flip_flop();
  Phi3Monoid p3 = phi3_build(m);
  REQUIRE(p3.monoid.has_value());
  // F_3(u) F_3(v) = F_3(uv) for sampled words
  std::vector<std::vector<ElementId>> words = {{1}, {2}, {3}, {1, 2}, {2, 3, 1},
                                               {3, 3}, {1, 1, 2, 3}};
  auto find = [&](const Phi3Element& e) {
    for (size_t i = 0; i < p3.elements.size(); ++i) {
      if (p3.elements[i] == e) return static_cast<int>(i);
    }
    return -1;
  };
  for (auto& u : words) {
    for (auto& v : words) {
      std::vector<ElementId> uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      int iu = find(phi3_of_word(p3.mi, u));
      int iv = find(phi3_of_word(p3.mi, v));
      REQUIRE(iu >= 0);
      REQUIRE(iv >= 0);
      CHECK(p3.elements[phi3_mul(p3, iu, iv)] == phi3_of_word(p3.mi, uv));
      CHECK(p3.monoid->mul(iu, iv) == phi3_mul(p3, iu, iv));
    }
  }
}

TEST_CASE("the cut-down Phi_3 sits inside the full one") {
  FiniteMonoid m = fixtures::flip_flop();
  std::vector<ElementId> y = m.generator_elements();
  Phi3Monoid full = phi3_build(m, nullptr, /*table_limit=*/0);
  Phi3Monoid cut = phi3_build(m, &y);
  CHECK(cut.size() <= full.size());
  std::set<Phi3Element> full_set(full.elements.begin(), full.elements.end());
  for (const Phi3Element& e : cut.elements) {
    CHECK(full_set.count(e) == 1);
  }
}

TEST_CASE("Phi_3 is finite J-above with aperiodic eta on the fixtures") {
  for (auto& [name, m] : fixtures::acceptance_fixtures()) {
    CAPTURE(name);
    std::vector<ElementId> y = m.generator_elements();
    Phi3Monoid p3 = phi3_build(m, &y);
    CHECK(p3.size() >= 1);  // the closure terminated, so up-sets are finite
    CHECK(phi3_eta_aperiodic(p3));
    if (p3.monoid) {
      GreenData g = compute_green(*p3.monoid);
      for (int x = 0; x < p3.size(); ++x) {
        int above = 0;
        for (int z = 0; z < p3.size(); ++z) {
          if (g.leq_j[x][z]) ++above;
        }
        CHECK(above >= 1);
      }
      CHECK(is_aperiodic_morphism(*p3.monoid, p3.mi, p3.eta));
    }
  }
}

TEST_CASE("Burnside identities on the cut-down expansion") {
  // bands satisfy x^2 = x
  for (auto* m : {&fixtures::flip_flop, &fixtures::rect_band, &fixtures::trivial}) {
    BurnsideCheck c = burnside_identity_check(rhy_of((*m)()), 1, 1);
    CHECK(c.precondition_ok);
    CHECK(c.holds);
  }
  // C3 satisfies x^4 = x
  BurnsideCheck ok = burnside_identity_check(rhy_of(fixtures::c3()), 1, 3);
  CHECK(ok.precondition_ok);
  CHECK(ok.holds);
  // but not x^2 = x
  BurnsideCheck bad = burnside_identity_check(rhy_of(fixtures::c3()), 1, 1);
  CHECK_FALSE(bad.precondition_ok);
  CHECK(bad.base_witness >= 0);
  CHECK_THROWS_AS(burnside_identity_check(rhy_of(fixtures::c3()), 0, 1),
                  std::invalid_argument);
}

TEST_CASE("eta restricted to the cut-down expansion is injective under the identity") {
  // flip-flop (a band) and C3 with x^4 = x
  for (auto* m : {&fixtures::flip_flop, &fixtures::rect_band}) {
    RhodesMonoid rhy = rhy_of((*m)());
    std::set<ElementId> image;
    for (int i = 0; i < rhy.size(); ++i) {
      CHECK(image.insert(eta_project(rhy.chain(i))).second);
    }
  }
  RhodesMonoid c3 = rhy_of(fixtures::c3());
  std::set<ElementId> image;
  for (int i = 0; i < c3.size(); ++i) {
    CHECK(image.insert(eta_project(c3.chain(i))).second);
  }
}
