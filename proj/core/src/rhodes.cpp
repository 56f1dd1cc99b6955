#include "semitree/rhodes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace semitree {

std::string chain_to_string(const FiniteMonoid& m, const LChain& c) {
  std::string out;
  for (size_t i = 0; i < c.terms.size(); ++i) {
    if (i) out += "<";
    out += m.name(c.terms[i]);
  }
  return out;
}

LChain lm_reduce(const FiniteMonoid& m, const GreenData& g,
                 const std::vector<ElementId>& weak) {
  if (weak.empty() || weak.back() != m.identity) {
    throw std::invalid_argument("chain must end at the identity");
  }
  for (size_t i = 0; i + 1 < weak.size(); ++i) {
    if (!g.leq_l[weak[i]][weak[i + 1]]) {
      throw std::invalid_argument("input not <=_L descending at position " +
                                  std::to_string(i));
    }
  }
  LChain out;
  for (size_t i = 0; i < weak.size(); ++i) {
    if (i == 0 || !g.equiv_l(weak[i - 1], weak[i])) {
      out.terms.push_back(weak[i]);
    }
  }
  for (size_t i = 0; i + 1 < out.terms.size(); ++i) {
    if (!g.lt_l(out.terms[i], out.terms[i + 1])) {
      throw std::logic_error("lm reduction did not produce a strict chain");
    }
  }
  return out;
}

LChain chain_product(const FiniteMonoid& m, const GreenData& g, const LChain& a,
                     const LChain& b) {
  std::vector<ElementId> stacked;
  ElementId t = b.leftmost();
  for (ElementId x : a.terms) {
    stacked.push_back(m.mul(x, t));
  }
  for (size_t i = 1; i < b.terms.size(); ++i) {
    stacked.push_back(b.terms[i]);
  }
  return lm_reduce(m, g, stacked);
}

int wedge_index(const GreenData& g, const LChain& a, const LChain& b) {
  int k = a.length(), l = b.length();
  int r = 0;
  for (int i = 1; i <= std::min(k, l); ++i) {
    if (a.term(i - 1) != b.term(i - 1)) break;
    if (g.equiv_l(a.term(i), b.term(i))) r = i;
    // terms strictly deeper can only agree if all prefixes matched
  }
  return r;
}

ElementId wedge_l(const GreenData& g, const LChain& a, const LChain& b) {
  return a.term(wedge_index(g, a, b));
}

int RhodesMonoid::index_of(const LChain& c) const {
  auto it = index.find(c.terms);
  if (it == index.end()) {
    throw std::invalid_argument("chain is not an element of this expansion");
  }
  return it->second;
}

namespace {

RhodesMonoid finalize(const FiniteMonoid& mi, GreenData green,
                      std::vector<LChain> chains,
                      std::vector<std::pair<std::string, ElementId>> gen_bases,
                      std::optional<std::vector<ElementId>> cut) {
  RhodesMonoid rh;
  rh.base = mi;
  rh.green = std::move(green);
  std::sort(chains.begin(), chains.end(), [](const LChain& x, const LChain& y) {
    if (x.terms.size() != y.terms.size()) return x.terms.size() < y.terms.size();
    return x.terms < y.terms;
  });
  rh.elements = std::move(chains);
  for (size_t i = 0; i < rh.elements.size(); ++i) {
    rh.index[rh.elements[i].terms] = static_cast<int>(i);
  }
  int n = rh.size();
  std::vector<std::vector<ElementId>> rows(n, std::vector<ElementId>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      rows[i][j] = rh.index_of(chain_product(rh.base, rh.green, rh.elements[i],
                                             rh.elements[j]));
    }
  }
  std::vector<std::pair<std::string, ElementId>> gens;
  for (auto& [label, elt] : gen_bases) {
    gens.emplace_back(label, rh.index.at({elt, mi.identity}));
  }
  std::vector<std::string> names;
  for (const LChain& c : rh.elements) {
    names.push_back(chain_to_string(mi, c));
  }
  // from_table re-validates associativity, the identity laws and that the
  // one-step chains generate -- for the full expansion this is exactly the
  // generation theorem for Rh.
  rh.monoid = from_table(std::move(rows), rh.index.at({mi.identity}), std::move(gens),
                         std::move(names));
  rh.cut_to = std::move(cut);
  return rh;
}

}  // namespace

RhodesMonoid build_rh(const FiniteMonoid& mi) {
  GreenData green = compute_green(mi);
  std::vector<LChain> chains;
  std::vector<ElementId> stack{mi.identity};
  // depth-first enumeration of all strict <_L descents from I
  auto extend = [&](auto&& self) -> void {
    std::vector<ElementId> rev(stack.rbegin(), stack.rend());
    chains.push_back(LChain{rev});
    ElementId t = stack.back();
    for (ElementId x = 0; x < mi.n; ++x) {
      if (green.lt_l(x, t)) {
        stack.push_back(x);
        self(self);
        stack.pop_back();
      }
    }
  };
  extend(extend);

  std::vector<std::pair<std::string, ElementId>> gen_bases;
  for (ElementId x = 0; x < mi.n; ++x) {
    if (x != mi.identity) {
      gen_bases.emplace_back(mi.name(x), x);
    }
  }
  return finalize(mi, std::move(green), std::move(chains), std::move(gen_bases),
                  std::nullopt);
}

RhodesMonoid build_rh_y(const FiniteMonoid& mi, const std::vector<ElementId>& y) {
  GreenData green = compute_green(mi);
  std::vector<ElementId> ys;
  for (ElementId g : y) {
    if (g == mi.identity || !green.lt_l(g, mi.identity)) {
      throw std::invalid_argument("generator " + mi.name(g) +
                                  " is not strictly <_L below the identity");
    }
    if (std::find(ys.begin(), ys.end(), g) == ys.end()) ys.push_back(g);
  }
  std::set<std::vector<ElementId>> seen;
  std::vector<LChain> worklist;
  auto push = [&](LChain c) {
    if (seen.insert(c.terms).second) worklist.push_back(std::move(c));
  };
  push(LChain{{mi.identity}});
  for (ElementId g : ys) {
    push(LChain{{g, mi.identity}});
  }
  for (size_t i = 0; i < worklist.size(); ++i) {
    for (ElementId g : ys) {
      LChain gen{{g, mi.identity}};
      push(chain_product(mi, green, worklist[i], gen));
      push(chain_product(mi, green, gen, worklist[i]));
    }
  }
  std::vector<std::pair<std::string, ElementId>> gen_bases;
  for (ElementId g : ys) {
    gen_bases.emplace_back(mi.name(g), g);
  }
  std::vector<LChain> chains(worklist.begin(), worklist.end());
  return finalize(mi, std::move(green), std::move(chains), std::move(gen_bases),
                  std::vector<ElementId>(ys));
}

JChain zeiger_encode(const FiniteMonoid& m, const GreenData& g, const StarSharp& ss,
                     const LChain& chain) {
  int k = chain.length();
  JChain out;
  out.terms.resize(k + 1);
  out.terms[k] = m.identity;
  for (int i = 1; i <= k; ++i) {
    out.terms[k - i] = m.mul(chain.term(i), ss.star[chain.term(i - 1)]);
  }
  for (int i = 0; i + 1 < static_cast<int>(out.terms.size()); ++i) {
    if (!g.lt_j(out.terms[i], out.terms[i + 1])) {
      throw std::logic_error("Zeiger encoding is not strictly <_J descending");
    }
  }
  return out;
}

// ----- Phi_3 ----------------------------------------------------------

namespace {

ElementId full_product(const FiniteMonoid& mi, const Phi3Element& e) {
  const auto& t = e.triples.front();
  return mi.mul(mi.mul(t[0], t[1]), t[2]);
}

void sort_unique(Phi3Element& e) {
  std::sort(e.triples.begin(), e.triples.end());
  e.triples.erase(std::unique(e.triples.begin(), e.triples.end()), e.triples.end());
}

}  // namespace

Phi3Element phi3_product(const FiniteMonoid& mi, const Phi3Element& s,
                         const Phi3Element& t) {
  ElementId ubar = full_product(mi, s);
  ElementId wbar = full_product(mi, t);
  Phi3Element out;
  for (const auto& [a, b, c] : s.triples) {
    out.triples.push_back({a, b, mi.mul(c, wbar)});
  }
  for (const auto& [d, e, f] : t.triples) {
    out.triples.push_back({mi.mul(ubar, d), e, f});
  }
  for (const auto& [a, b, c] : s.triples) {
    ElementId rest = mi.mul(b, c);
    for (const auto& [d, e, f] : t.triples) {
      out.triples.push_back({a, mi.mul(rest, mi.mul(d, e)), f});
    }
  }
  sort_unique(out);
  return out;
}

Phi3Element phi3_of_word(const FiniteMonoid& mi, const std::vector<ElementId>& word) {
  int k = static_cast<int>(word.size());
  auto seg = [&](int from, int to) {  // product of word[from, to)
    ElementId p = mi.identity;
    for (int i = from; i < to; ++i) p = mi.mul(p, word[i]);
    return p;
  };
  Phi3Element out;
  for (int i = 0; i <= k; ++i) {
    for (int j = i; j <= k; ++j) {
      out.triples.push_back({seg(0, i), seg(i, j), seg(j, k)});
    }
  }
  sort_unique(out);
  return out;
}

Phi3Monoid phi3_build(const FiniteMonoid& m, const std::vector<ElementId>* y,
                      int table_limit, int closure_limit) {
  Phi3Monoid p3;
  p3.mi = adjoin_identity(m);
  std::vector<std::pair<std::string, ElementId>> letters;  // labels + mi ids
  if (y) {
    for (ElementId g : *y) {
      if (g < 0 || g >= m.n) {
        throw std::invalid_argument("cut-down generator out of range");
      }
      letters.emplace_back(m.name(g), g + 1);
    }
  } else {
    for (ElementId x = 0; x < m.n; ++x) {
      letters.emplace_back(m.name(x), x + 1);
    }
  }

  std::map<Phi3Element, int> index;
  std::vector<Phi3Element> work;
  auto add = [&](Phi3Element e) {
    auto it = index.find(e);
    if (it == index.end()) {
      it = index.emplace(std::move(e), static_cast<int>(work.size())).first;
      work.push_back(it->first);
      if (static_cast<int>(work.size()) > closure_limit) {
        throw std::invalid_argument("Phi_3 closure exceeds the element limit");
      }
    }
    return it->second;
  };
  add(phi3_of_word(p3.mi, {}));
  std::vector<int> gen_work;
  for (auto& [label, elt] : letters) {
    gen_work.push_back(add(phi3_of_word(p3.mi, {elt})));
  }
  for (size_t i = 0; i < work.size(); ++i) {
    for (int g : gen_work) {
      add(phi3_product(p3.mi, work[i], work[g]));
    }
  }

  // canonical order, then rebuild the closure structure over it
  p3.elements = work;
  std::sort(p3.elements.begin(), p3.elements.end());
  std::map<Phi3Element, int> final_index;
  for (int i = 0; i < p3.size(); ++i) final_index.emplace(p3.elements[i], i);
  p3.one = final_index.at(phi3_of_word(p3.mi, {}));
  for (size_t gi = 0; gi < letters.size(); ++gi) {
    p3.generators.emplace_back(letters[gi].first,
                               final_index.at(work[gen_work[gi]]));
  }
  int n = p3.size();
  p3.rmul.assign(n, std::vector<int>(letters.size(), -1));
  for (int i = 0; i < n; ++i) {
    for (size_t gi = 0; gi < letters.size(); ++gi) {
      Phi3Element prod =
          phi3_product(p3.mi, p3.elements[i], p3.elements[p3.generators[gi].second]);
      auto it = final_index.find(prod);
      if (it == final_index.end()) throw std::logic_error("Phi_3 closure is not closed");
      p3.rmul[i][gi] = it->second;
    }
  }
  p3.word.assign(n, {});
  {
    std::vector<bool> seen(n, false);
    std::vector<int> queue{p3.one};
    seen[p3.one] = true;
    for (size_t i = 0; i < queue.size(); ++i) {
      for (size_t gi = 0; gi < letters.size(); ++gi) {
        int next = p3.rmul[queue[i]][gi];
        if (!seen[next]) {
          seen[next] = true;
          p3.word[next] = p3.word[queue[i]];
          p3.word[next].push_back(static_cast<int>(gi));
          queue.push_back(next);
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw std::logic_error("Phi_3 closure is not generator generated");
    }
  }
  for (const Phi3Element& e : p3.elements) {
    p3.eta.push_back(full_product(p3.mi, e));
  }

  if (n <= table_limit) {
    std::vector<std::vector<ElementId>> rows(n, std::vector<ElementId>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        rows[i][j] = phi3_mul(p3, i, j);
      }
    }
    std::vector<std::pair<std::string, ElementId>> gens;
    for (auto& [label, e] : p3.generators) gens.emplace_back(label, e);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("F3#" + std::to_string(i));
    p3.monoid = from_table(std::move(rows), p3.one, std::move(gens),
                           std::move(names));
  }
  return p3;
}

int phi3_mul(const Phi3Monoid& p3, int i, int j) {
  int acc = i;
  for (int g : p3.word[j]) acc = p3.rmul[acc][g];
  return acc;
}

bool phi3_is_aperiodic(const Phi3Monoid& p3, int i) {
  std::set<int> seen;
  int p = i;
  while (true) {
    int q = phi3_mul(p3, p, i);
    if (q == p) return true;
    if (!seen.insert(p).second) return false;
    p = q;
  }
}

bool phi3_eta_aperiodic(const Phi3Monoid& p3) {
  for (int i = 0; i < p3.size(); ++i) {
    if (is_aperiodic_element(p3.mi, p3.eta[i]) && !phi3_is_aperiodic(p3, i)) {
      return false;
    }
  }
  return true;
}

BurnsideCheck burnside_identity_check(const RhodesMonoid& rh, int p, int q) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("Burnside exponents must satisfy p, q >= 1");
  }
  BurnsideCheck out;
  for (ElementId x = 0; x < rh.base.n; ++x) {
    if (rh.base.pow(x, p + q) != rh.base.pow(x, p)) {
      out.precondition_ok = false;
      out.base_witness = x;
      return out;
    }
  }
  for (int i = 0; i < rh.size(); ++i) {
    if (rh.monoid.pow(i, p + q) != rh.monoid.pow(i, p)) {
      out.holds = false;
      out.chain_witness = i;
      return out;
    }
  }
  return out;
}

}  // namespace semitree
