#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semitree/monoid.hpp"
#include "semitree/rees.hpp"

// The Rhodes expansion Rh(M^I), its cut-down Rh_Y(M^I), the eta projection,
// the Zeiger encoding and the Phi_3 expansion.

namespace semitree {

// A strictly <_L descending chain, leftmost term first, ending at the
// identity of the base monoid.
struct LChain {
  std::vector<ElementId> terms;

  bool operator==(const LChain&) const = default;
  auto operator<=>(const LChain&) const = default;
  ElementId leftmost() const { return terms.front(); }
  // number of strict descents, i.e. the k of (m_k < ... < m_0)
  int length() const { return static_cast<int>(terms.size()) - 1; }
  // m_i, counting from the right (term(0) = I)
  ElementId term(int i) const { return terms[terms.size() - 1 - i]; }
};

std::string chain_to_string(const FiniteMonoid& m, const LChain& c);

// Keeps the leftmost term of each L-class of a weakly descending chain.
LChain lm_reduce(const FiniteMonoid& m, const GreenData& g,
                 const std::vector<ElementId>& weak);

// sigma tau = lm(sigma terms right-multiplied by tau's leftmost, stacked
// over the rest of tau).
LChain chain_product(const FiniteMonoid& m, const GreenData& g, const LChain& a,
                     const LChain& b);

inline ElementId eta_project(const LChain& c) { return c.leftmost(); }

// The maximum L-point of agreement sigma /\_L tau, returned as sigma's term.
ElementId wedge_l(const GreenData& g, const LChain& a, const LChain& b);
// Same, but returns the index r with the wedge equal to m_r.
int wedge_index(const GreenData& g, const LChain& a, const LChain& b);

struct RhodesMonoid {
  FiniteMonoid base;   // M^I
  GreenData green;     // Green data of the base
  std::vector<LChain> elements;  // sorted by (length, lexicographic terms)
  FiniteMonoid monoid;           // product table over chain indices
  std::optional<std::vector<ElementId>> cut_to;
  std::map<std::vector<ElementId>, int> index;

  int index_of(const LChain& c) const;
  const LChain& chain(int i) const { return elements[i]; }
  int size() const { return static_cast<int>(elements.size()); }
  int one() const { return monoid.identity; }
};

// All strict <_L chains ending at I.  Also checks that this set equals the
// closure of the chains (m <_L I) under the product.
RhodesMonoid build_rh(const FiniteMonoid& mi);

// Submonoid of Rh(M^I) generated by the chains (y <_L I), y in Y.
RhodesMonoid build_rh_y(const FiniteMonoid& mi, const std::vector<ElementId>& y);

struct JChain {
  std::vector<ElementId> terms;  // leftmost first, strictly <_J descending
  bool operator==(const JChain&) const = default;
};

// x_0 = I, x_i = m_i m*_{i-1}; the result is strictly <_J descending.
JChain zeiger_encode(const FiniteMonoid& m, const GreenData& g, const StarSharp& ss,
                     const LChain& chain);

// ----- Phi_3 expansion ------------------------------------------------

// F_3(m_1, ..., m_k) as a sorted set of three-factor splittings, with the
// empty product written as the adjoined identity I.
struct Phi3Element {
  std::vector<std::array<ElementId, 3>> triples;
  bool operator==(const Phi3Element&) const = default;
  auto operator<=>(const Phi3Element&) const = default;
};

// The closure can be much larger than M, so the monoid structure is kept
// as right-Cayley rows over the generators plus a generator word per
// element; the dense Cayley table is materialized only at desk scale.
struct Phi3Monoid {
  FiniteMonoid mi;  // M^I housing the triple entries
  std::vector<Phi3Element> elements;   // sorted; index of F_3 of the empty word
  int one = -1;
  std::vector<ElementId> eta;          // full products, into mi
  std::vector<std::pair<std::string, int>> generators;  // label, element index
  std::vector<std::vector<int>> rmul;  // [i][g] = i . generator_g
  std::vector<std::vector<int>> word;  // a generator word per element
  std::optional<FiniteMonoid> monoid;  // present when the closure is small

  int size() const { return static_cast<int>(elements.size()); }
};

// Phi_3(M), or the cut-down Phi_3,Y(M) when y is given (y in M's ids).
Phi3Monoid phi3_build(const FiniteMonoid& m, const std::vector<ElementId>* y = nullptr,
                      int table_limit = 1200, int closure_limit = 200000);

Phi3Element phi3_of_word(const FiniteMonoid& mi, const std::vector<ElementId>& word);
Phi3Element phi3_product(const FiniteMonoid& mi, const Phi3Element& a,
                         const Phi3Element& b);

// Product of two closure elements along the right Cayley rows.
int phi3_mul(const Phi3Monoid& p3, int i, int j);
bool phi3_is_aperiodic(const Phi3Monoid& p3, int i);
// Every preimage of an aperiodic element of M^I is aperiodic.
bool phi3_eta_aperiodic(const Phi3Monoid& p3);

struct BurnsideCheck {
  bool precondition_ok = true;
  ElementId base_witness = -1;  // x with x^{p+q} != x^p when the base fails
  bool holds = true;
  int chain_witness = -1;
};

// sigma^{p+q} = sigma^p for every chain, provided the base satisfies the
// same identity.
BurnsideCheck burnside_identity_check(const RhodesMonoid& rh, int p, int q);

}  // namespace semitree
