#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "semitree/rhodes.hpp"

// Length functions (axioms L1-L5), quasi-ultrametrics, weight functions and
// Dedekind inversion, the holonomy length function and the refined H length
// function with its V/W machinery.

namespace semitree {

// N u {omega}; omega compares above every natural number.
struct ExtNat {
  int raw = 0;

  static constexpr int kOmega = std::numeric_limits<int>::max();
  static ExtNat omega() { return {kOmega}; }
  bool is_omega() const { return raw == kOmega; }
  auto operator<=>(const ExtNat&) const = default;
};

struct LengthTable {
  int size = 0;
  std::vector<ExtNat> d;
  std::vector<std::string> labels;  // optional

  ExtNat at(int i, int j) const { return d[static_cast<size_t>(i) * size + j]; }
  void set(int i, int j, ExtNat v) { d[static_cast<size_t>(i) * size + j] = v; }
  ExtNat max_value() const;

  static LengthTable zero(int n) {
    return {n, std::vector<ExtNat>(static_cast<size_t>(n) * n), {}};
  }
};

struct AxiomWitness {
  int i = -1, j = -1, k = -1;
};

struct AxiomReport {
  bool l1 = true, l2 = true, l3 = true, l4 = true, l5 = true;
  AxiomWitness w1, w2, w3, w4, w5;

  bool pass(bool require_strict) const {
    return l1 && l2 && l3 && l4 && (!require_strict || l5);
  }
  std::string to_string() const;
};

// L3 quantifies the translating element over the table's own universe via
// the supplied product.
AxiomReport check_length_axioms(const LengthTable& t,
                                const std::function<int(int, int)>& mul,
                                bool require_strict);

// d(m, m') = 2l - 2D(m, m').  Rejects tables with omega entries.
std::vector<int> quasi_ultrametric(const LengthTable& t);

struct JPoset {
  int k = 0;
  std::vector<std::vector<bool>> leq;
  int top = -1;
};

// The J-class poset of a monoid with a unique maximum J-class.
JPoset make_jposet(const GreenData& g);

// w is one weight per poset class with w[top] = 0.
std::vector<int> dedekind_forward(const JPoset& p, const std::vector<int>& w);
// Inverse along the cover sets; validates that h is order-reversing with
// h(top) = 0.
std::vector<int> dedekind_inverse(const JPoset& p, const std::vector<int>& h);

// D(sigma, tau) = f(sigma /\_L tau) off the diagonal, 1 + max f on it.
// f must be <=_J-preserving on the base monoid.
LengthTable holonomy_table(const RhodesMonoid& rh, const std::vector<int>& f);

// (sigma, tau) in V(M^I), decided by the finite characterization
// (R-related wedge terms plus one of the four positional cases).
bool v_related(const GreenData& g, const std::vector<bool>& w, const LChain& a,
               const LChain& b);

// The H length function: 2 h_J(wedge) plus one when V holds, with diagonal
// 2 max h_J + 2.
LengthTable h_table(const RhodesMonoid& rh, const std::vector<bool>& w,
                    const std::vector<int>& hj);

}  // namespace semitree
