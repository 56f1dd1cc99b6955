#include "semitree/length.hpp"

#include <algorithm>
#include <stdexcept>

namespace semitree {

ExtNat LengthTable::max_value() const {
  ExtNat m{0};
  for (ExtNat v : d) m = std::max(m, v);
  return m;
}

std::string AxiomReport::to_string() const {
  auto line = [](const char* name, bool ok, const AxiomWitness& w) {
    std::string s = std::string(name) + ": " + (ok ? "pass" : "FAIL");
    if (!ok) {
      s += " at (" + std::to_string(w.i) + ", " + std::to_string(w.j) + ", " +
           std::to_string(w.k) + ")";
    }
    return s + "\n";
  };
  return line("L1", l1, w1) + line("L2", l2, w2) + line("L3", l3, w3) +
         line("L4", l4, w4) + line("L5", l5, w5);
}

AxiomReport check_length_axioms(const LengthTable& t,
                                const std::function<int(int, int)>& mul,
                                bool require_strict) {
  AxiomReport r;
  int n = t.size;
  ExtNat diag = t.at(0, 0);
  for (int i = 0; i < n && r.l1; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (t.at(i, j) != t.at(j, i)) {
        r.l1 = false;
        r.w1 = {i, j, -1};
        break;
      }
    }
  }
  // L2 together with the constant-diagonal consequence of L1+L2
  for (int i = 0; i < n && r.l2; ++i) {
    if (t.at(i, i) != diag) {
      r.l2 = false;
      r.w2 = {i, i, -1};
      break;
    }
    for (int j = 0; j < n; ++j) {
      if (t.at(i, j) > diag) {
        r.l2 = false;
        r.w2 = {i, j, -1};
        break;
      }
    }
  }
  for (int i = 0; i < n && r.l3; ++i) {
    for (int j = 0; j < n && r.l3; ++j) {
      for (int m = 0; m < n; ++m) {
        if (t.at(i, j) > t.at(mul(i, m), mul(j, m))) {
          r.l3 = false;
          r.w3 = {i, j, m};
          break;
        }
      }
    }
  }
  for (int i = 0; i < n && r.l4; ++i) {
    for (int j = 0; j < n && r.l4; ++j) {
      for (int k = 0; k < n; ++k) {
        if (t.at(i, k) < std::min(t.at(i, j), t.at(j, k))) {
          r.l4 = false;
          r.w4 = {i, j, k};
          break;
        }
      }
    }
  }
  if (require_strict) {
    for (int i = 0; i < n && r.l5; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && t.at(i, j) == diag) {
          r.l5 = false;
          r.w5 = {i, j, -1};
          break;
        }
      }
    }
  }
  return r;
}

std::vector<int> quasi_ultrametric(const LengthTable& t) {
  ExtNat l = t.max_value();
  if (l.is_omega()) {
    throw std::invalid_argument("table maximum is omega");
  }
  std::vector<int> out(static_cast<size_t>(t.size) * t.size);
  for (int i = 0; i < t.size; ++i) {
    for (int j = 0; j < t.size; ++j) {
      if (t.at(i, j).is_omega()) {
        throw std::invalid_argument("omega entry in a bounded table");
      }
      out[static_cast<size_t>(i) * t.size + j] = 2 * l.raw - 2 * t.at(i, j).raw;
    }
  }
  return out;
}

JPoset make_jposet(const GreenData& g) {
  JPoset p;
  p.k = static_cast<int>(g.j_classes.size());
  p.leq = g.j_leq;
  for (int c = 0; c < p.k; ++c) {
    bool maximal = true;
    for (int d = 0; d < p.k; ++d) {
      if (d != c && p.leq[c][d]) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      if (p.top >= 0) throw std::invalid_argument("no unique maximum J-class");
      p.top = c;
    }
  }
  for (int c = 0; c < p.k; ++c) {
    if (!p.leq[c][p.top]) throw std::invalid_argument("no unique maximum J-class");
  }
  return p;
}

std::vector<int> dedekind_forward(const JPoset& p, const std::vector<int>& w) {
  if (static_cast<int>(w.size()) != p.k) {
    throw std::invalid_argument("weight function has wrong size");
  }
  if (w[p.top] != 0) {
    throw std::invalid_argument("weight function must vanish at the maximum");
  }
  for (int v : w) {
    if (v < 0) throw std::invalid_argument("weights must be nonnegative");
  }
  std::vector<int> h(p.k, -1);
  h[p.top] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int c = 0; c < p.k; ++c) {
      if (h[c] >= 0) continue;
      int best = -1;
      bool ready = true;
      for (int d = 0; d < p.k; ++d) {
        if (d != c && p.leq[c][d]) {
          if (h[d] < 0) {
            ready = false;
            break;
          }
          best = std::max(best, h[d]);
        }
      }
      if (ready) {
        h[c] = w[c] + best;
        changed = true;
      }
    }
  }
  return h;
}

std::vector<int> dedekind_inverse(const JPoset& p, const std::vector<int>& h) {
  if (static_cast<int>(h.size()) != p.k) {
    throw std::invalid_argument("height function has wrong size");
  }
  if (h[p.top] != 0) {
    throw std::invalid_argument("height function must vanish at the maximum");
  }
  for (int c = 0; c < p.k; ++c) {
    for (int d = 0; d < p.k; ++d) {
      if (c != d && p.leq[c][d] && h[c] < h[d]) {
        throw std::invalid_argument("not order-reversing at classes (" +
                                    std::to_string(c) + ", " + std::to_string(d) + ")");
      }
    }
  }
  std::vector<int> w(p.k, 0);
  for (int c = 0; c < p.k; ++c) {
    if (c == p.top) continue;
    int best = -1;
    for (int d = 0; d < p.k; ++d) {  // covers of c
      if (d == c || !p.leq[c][d]) continue;
      bool cover = true;
      for (int e = 0; e < p.k; ++e) {
        if (e != c && e != d && p.leq[c][e] && p.leq[e][d]) {
          cover = false;
          break;
        }
      }
      if (cover) best = std::max(best, h[d]);
    }
    w[c] = h[c] - best;
  }
  return w;
}

LengthTable holonomy_table(const RhodesMonoid& rh, const std::vector<int>& f) {
  const FiniteMonoid& mi = rh.base;
  const GreenData& g = rh.green;
  if (static_cast<int>(f.size()) != mi.n) {
    throw std::invalid_argument("f has wrong size");
  }
  if (f[mi.identity] != 0) {
    throw std::invalid_argument("f not <=_J-preserving: f(I) != 0");
  }
  for (ElementId a = 0; a < mi.n; ++a) {
    if (f[a] < 0) throw std::invalid_argument("f must be nonnegative");
    for (ElementId b = 0; b < mi.n; ++b) {
      if (g.leq_j[a][b] && f[a] < f[b]) {
        throw std::invalid_argument("f not <=_J-preserving at (" + mi.name(a) + ", " +
                                    mi.name(b) + ")");
      }
    }
  }
  int maxf = *std::max_element(f.begin(), f.end());
  LengthTable t = LengthTable::zero(rh.size());
  for (int i = 0; i < rh.size(); ++i) {
    t.labels.push_back(chain_to_string(mi, rh.chain(i)));
    for (int j = 0; j < rh.size(); ++j) {
      if (i == j) {
        t.set(i, j, ExtNat{1 + maxf});
      } else {
        t.set(i, j, ExtNat{f[wedge_l(g, rh.chain(i), rh.chain(j))]});
      }
    }
  }
  return t;
}

bool v_related(const GreenData& g, const std::vector<bool>& w, const LChain& a,
               const LChain& b) {
  int r = wedge_index(g, a, b);
  ElementId ma = a.term(r), mb = b.term(r);
  if (!g.equiv_r(ma, mb)) return false;
  int k = a.length(), l = b.length();
  if (r == k && r == l) return true;                  // (V1)
  if (r < k && r < l) return true;                    // (V2)
  if (r == k && k < l && w[ma]) return true;          // (V3)
  if (r == l && l < k && w[mb]) return true;          // (V4)
  return false;
}

LengthTable h_table(const RhodesMonoid& rh, const std::vector<bool>& w,
                    const std::vector<int>& hj) {
  int maxh = *std::max_element(hj.begin(), hj.end());
  LengthTable t = LengthTable::zero(rh.size());
  for (int i = 0; i < rh.size(); ++i) {
    t.labels.push_back(chain_to_string(rh.base, rh.chain(i)));
    for (int j = 0; j < rh.size(); ++j) {
      if (i == j) {
        t.set(i, j, ExtNat{2 * maxh + 2});
      } else {
        const LChain& a = rh.chain(i);
        const LChain& b = rh.chain(j);
        int h = hj[wedge_l(rh.green, a, b)];
        t.set(i, j, ExtNat{2 * h + (v_related(rh.green, w, a, b) ? 1 : 0)});
      }
    }
  }
  return t;
}

}  // namespace semitree
