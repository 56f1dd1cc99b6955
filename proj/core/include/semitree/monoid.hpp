#pragma once

#include <string>
#include <utility>
#include <vector>

// Finite monoids as dense Cayley tables with distinguished generators,
// plus Green's relations, J-heights, stability and the W set.
//
// Every constructor validates the monoid axioms exhaustively, so code
// downstream may assume associativity, the identity laws, and that each
// element is either the identity or a product of generators.  All values
// are immutable after construction.

namespace semitree {

using ElementId = int;

struct FiniteMonoid {
  int n = 0;
  std::vector<ElementId> table;  // row-major, table[a * n + b] = a.b
  ElementId identity = 0;
  std::vector<std::pair<std::string, ElementId>> generators;
  std::vector<std::string> names;  // optional display names, size n or empty

  ElementId mul(ElementId a, ElementId b) const { return table[a * n + b]; }
  ElementId pow(ElementId a, int k) const;
  std::string name(ElementId x) const;
  // distinct generator elements in ascending id order
  std::vector<ElementId> generator_elements() const;
};

// Closure of {identity} and the given transformations under right-action
// composition x(fg) = (xf)g.  Element 0 is the identity map; ids follow
// BFS discovery order with generators applied in the order given.
FiniteMonoid from_generators(
    int domain_size,
    const std::vector<std::pair<std::string, std::vector<int>>>& gens);

FiniteMonoid from_table(std::vector<std::vector<ElementId>> rows,
                        ElementId identity,
                        std::vector<std::pair<std::string, ElementId>> generators,
                        std::vector<std::string> names = {});

// M^I: a brand new identity I at id 0, old ids shifted up by one.
// Generators carry over (I is not a generator).
FiniteMonoid adjoin_identity(const FiniteMonoid& m);

struct GreenData {
  int n = 0;
  // leq_x[a][b] holds iff a <=_x b
  std::vector<std::vector<bool>> leq_l, leq_r, leq_j;
  std::vector<int> l_class, r_class, j_class, h_class;
  std::vector<std::vector<ElementId>> l_classes, r_classes, j_classes, h_classes;
  std::vector<std::vector<bool>> j_leq;  // partial order on J-class ids

  bool equiv_l(ElementId a, ElementId b) const { return l_class[a] == l_class[b]; }
  bool equiv_r(ElementId a, ElementId b) const { return r_class[a] == r_class[b]; }
  bool equiv_j(ElementId a, ElementId b) const { return j_class[a] == j_class[b]; }
  bool lt_l(ElementId a, ElementId b) const { return leq_l[a][b] && !leq_l[b][a]; }
  bool lt_r(ElementId a, ElementId b) const { return leq_r[a][b] && !leq_r[b][a]; }
  bool lt_j(ElementId a, ElementId b) const { return leq_j[a][b] && !leq_j[b][a]; }
};

// Green's preorders via reachability in the one-sided Cayley graphs.
GreenData compute_green(const FiniteMonoid& m);

// h(x) = length of the longest strict <_J chain from x up to the maximum
// J-class.  Throws if the J-poset has no unique maximum.
std::vector<int> j_height(const FiniteMonoid& m, const GreenData& g);

struct StabilityResult {
  bool stable = true;
  ElementId a = -1, x = -1;  // witness pair on failure
};
StabilityResult is_stable(const FiniteMonoid& m, const GreenData& g);

// W(M) = { m | L_m = H_m }, as a membership mask.
std::vector<bool> w_set(const GreenData& g);

bool is_aperiodic_element(const FiniteMonoid& m, ElementId a);

// f maps dom elements to cod elements; throws if f is not a monoid
// homomorphism.  True iff every preimage of an aperiodic element is
// aperiodic.
bool is_aperiodic_morphism(const FiniteMonoid& dom, const FiniteMonoid& cod,
                           const std::vector<ElementId>& f);

}  // namespace semitree
