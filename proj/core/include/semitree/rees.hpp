#pragma once

#include <array>
#include <optional>
#include <vector>

#include "semitree/monoid.hpp"

// Rees matrix coordinatization of the J-classes of a stable monoid.
//
// Each J-class J gets coordinates J <-> A x G x B where A, B list the R-
// and L-classes of J (distinguished class first) and G is the
// Schutzenberger group of the H-class of the least element of J.  The same
// recipe is applied to null J-classes; there the sandwich matrix is
// identically zero.  All anchor elements are the least ids satisfying
// their defining equations, so everything downstream is deterministic.

namespace semitree {

struct ReesView {
  int jclass = -1;
  std::vector<int> A;  // R-class ids, distinguished one first
  std::vector<int> B;  // L-class ids, distinguished one first
  ElementId h0 = -1;
  std::vector<ElementId> gvalue;   // group element -> value in H; gvalue[0] = h0
  std::vector<std::vector<int>> gtable;
  std::vector<ElementId> h_tilde;  // least x with h0 x = gvalue[g]
  std::vector<std::vector<int>> c;  // B x A sandwich matrix, -1 encodes 0
  std::vector<ElementId> a_hat, e_a, e_bar_a;  // per A index
  std::vector<ElementId> b_hat, f_b, f_bar_b;  // per B index
  std::vector<ElementId> elem;  // (a, g, b) -> element, index (a*|G| + g)*|B| + b

  int a_index(int r_class_id) const;
  int b_index(int l_class_id) const;
  ElementId at(int a, int g, int b) const {
    return elem[(static_cast<size_t>(a) * gvalue.size() + g) * B.size() + b];
  }
  int group_size() const { return static_cast<int>(gvalue.size()); }
};

struct ReesCoords {
  std::vector<ReesView> views;             // per J-class id
  std::vector<std::array<int, 3>> coords;  // per element: (a, g, b)
  std::vector<ElementId> canonical_11b;    // per L-class id: the (1,1,b) element

  const ReesView& view_of(const GreenData& g, ElementId m) const {
    return views[g.j_class[m]];
  }
};

// Coordinatizes every J-class and verifies that coordinates are bijective
// and that the Rees product law reproduces the Cayley table on in-class
// products.  Requires a stable monoid.
ReesCoords coordinatize(const FiniteMonoid& m, const GreenData& g);

struct StarSharp {
  std::vector<ElementId> star, sharp;
};

// m m* = (a,1,1) and (a,1,1) m# = m, with (a,g,b) the coordinates of m.
StarSharp star_sharp(const FiniteMonoid& m, const GreenData& g, const ReesCoords& rc);

struct LocalSets {
  std::vector<ElementId> y;   // generators y with ym <_L m
  std::vector<int> q;         // L-class ids of the ym, i.e. Q_m
  std::vector<int> a_prime;   // A indices a' with Y_(a',g,b) nonempty
  std::optional<ElementId> gamma;  // least element of Y_m m
};

LocalSets local_sets(const FiniteMonoid& m, const GreenData& g, const ReesCoords& rc,
                     const std::vector<ElementId>& y_gens, ElementId elt);

// The right-translation group element g0 with ((a,h,b) v) pi_2 = h g0 for
// every h in G, given uv R u.  Verified over all h.
int schutz_translation(const FiniteMonoid& m, const GreenData& g, const ReesCoords& rc,
                       ElementId u, ElementId v);

}  // namespace semitree
