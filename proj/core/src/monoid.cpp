#include "semitree/monoid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace semitree {

namespace {

std::string triple_str(const FiniteMonoid& m, ElementId a, ElementId b, ElementId c) {
  return "(" + m.name(a) + ", " + m.name(b) + ", " + m.name(c) + ")";
}

void validate_monoid(const FiniteMonoid& m) {
  int n = m.n;
  if (n < 1) {
    throw std::invalid_argument("monoid must have at least one element");
  }
  if (m.identity < 0 || m.identity >= n) {
    throw std::invalid_argument("identity index out of range");
  }
  for (ElementId x = 0; x < n; ++x) {
    if (m.mul(m.identity, x) != x || m.mul(x, m.identity) != x) {
      throw std::invalid_argument("identity laws violated at element " + m.name(x));
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      ElementId ab = m.mul(a, b);
      for (ElementId c = 0; c < n; ++c) {
        if (m.mul(ab, c) != m.mul(a, m.mul(b, c))) {
          throw std::invalid_argument("table is not associative at " + triple_str(m, a, b, c));
        }
      }
    }
  }
  for (auto& [label, e] : m.generators) {
    if (e < 0 || e >= n) {
      throw std::invalid_argument("generator '" + label + "' index out of range");
    }
  }
  // every element must be the identity or a product of generators
  if (!m.generators.empty() || n > 1) {
    std::vector<bool> seen(n, false);
    seen[m.identity] = true;
    std::vector<ElementId> queue{m.identity};
    auto gens = m.generator_elements();
    for (size_t i = 0; i < queue.size(); ++i) {
      for (ElementId g : gens) {
        ElementId p = m.mul(queue[i], g);
        if (!seen[p]) {
          seen[p] = true;
          queue.push_back(p);
        }
      }
    }
    for (ElementId x = 0; x < n; ++x) {
      if (!seen[x]) {
        throw std::invalid_argument("generators fail to generate: element " + m.name(x) +
                                    " unreachable");
      }
    }
  }
}

}  // namespace

ElementId FiniteMonoid::pow(ElementId a, int k) const {
  ElementId r = identity;
  for (int i = 0; i < k; ++i) {
    r = mul(r, a);
  }
  return r;
}

std::string FiniteMonoid::name(ElementId x) const {
  if (!names.empty() && x >= 0 && x < static_cast<int>(names.size())) {
    return names[x];
  }
  return "#" + std::to_string(x);
}

std::vector<ElementId> FiniteMonoid::generator_elements() const {
  std::vector<ElementId> out;
  for (auto& [label, e] : generators) {
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FiniteMonoid from_generators(
    int domain_size,
    const std::vector<std::pair<std::string, std::vector<int>>>& gens) {
  if (domain_size < 1) {
    throw std::invalid_argument("domain_size must be at least 1");
  }
  for (auto& [label, images] : gens) {
    if (static_cast<int>(images.size()) != domain_size) {
      throw std::invalid_argument("generator '" + label + "': expected " +
                                  std::to_string(domain_size) + " images, got " +
                                  std::to_string(images.size()));
    }
    for (int v : images) {
      if (v < 0 || v >= domain_size) {
        throw std::invalid_argument("generator '" + label + "': image entry " +
                                    std::to_string(v) + " out of range [0, " +
                                    std::to_string(domain_size) + ")");
      }
    }
  }

  std::vector<std::vector<int>> elems;
  std::vector<std::string> names;
  std::map<std::vector<int>, int> index;

  std::vector<int> id(domain_size);
  for (int i = 0; i < domain_size; ++i) {
    id[i] = i;
  }
  elems.push_back(id);
  names.push_back("1");
  index[id] = 0;

  for (size_t cur = 0; cur < elems.size(); ++cur) {
    for (auto& [label, images] : gens) {
      std::vector<int> prod(domain_size);
      for (int x = 0; x < domain_size; ++x) {
        prod[x] = images[elems[cur][x]];  // apply cur, then the generator
      }
      if (index.find(prod) == index.end()) {
        index[prod] = static_cast<int>(elems.size());
        elems.push_back(prod);
        names.push_back(cur == 0 ? label : names[cur] + label);
      }
    }
  }

  int n = static_cast<int>(elems.size());
  FiniteMonoid m;
  m.n = n;
  m.identity = 0;
  m.names = names;
  m.table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(domain_size);
      for (int x = 0; x < domain_size; ++x) {
        prod[x] = elems[b][elems[a][x]];
      }
      m.table[static_cast<size_t>(a) * n + b] = index.at(prod);
    }
  }
  for (auto& [label, images] : gens) {
    m.generators.emplace_back(label, index.at(images));
  }
  validate_monoid(m);
  return m;
}

FiniteMonoid from_table(std::vector<std::vector<ElementId>> rows,
                        ElementId identity,
                        std::vector<std::pair<std::string, ElementId>> generators,
                        std::vector<std::string> names) {
  int n = static_cast<int>(rows.size());
  if (n < 1) {
    throw std::invalid_argument("table must be non-empty");
  }
  FiniteMonoid m;
  m.n = n;
  m.identity = identity;
  m.generators = std::move(generators);
  m.names = std::move(names);
  if (!m.names.empty() && static_cast<int>(m.names.size()) != n) {
    throw std::invalid_argument("names must match table size");
  }
  m.table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n) {
      throw std::invalid_argument("table is not square at row " + std::to_string(a));
    }
    for (int b = 0; b < n; ++b) {
      ElementId v = rows[a][b];
      if (v < 0 || v >= n) {
        throw std::invalid_argument("table entry out of range at (" + std::to_string(a) +
                                    ", " + std::to_string(b) + ")");
      }
      m.table[static_cast<size_t>(a) * n + b] = v;
    }
  }
  if (m.generators.empty() && n > 1) {
    throw std::invalid_argument("generators fail to generate: empty generator list");
  }
  validate_monoid(m);
  return m;
}

FiniteMonoid adjoin_identity(const FiniteMonoid& m) {
  FiniteMonoid out;
  out.n = m.n + 1;
  out.identity = 0;
  out.table.resize(static_cast<size_t>(out.n) * out.n);
  for (int x = 0; x < out.n; ++x) {
    out.table[static_cast<size_t>(0) * out.n + x] = x;
    out.table[static_cast<size_t>(x) * out.n + 0] = x;
  }
  for (int a = 0; a < m.n; ++a) {
    for (int b = 0; b < m.n; ++b) {
      out.table[static_cast<size_t>(a + 1) * out.n + (b + 1)] = m.mul(a, b) + 1;
    }
  }
  out.names.push_back("I");
  for (int x = 0; x < m.n; ++x) {
    out.names.push_back(m.name(x));
  }
  for (auto& [label, e] : m.generators) {
    out.generators.emplace_back(label, e + 1);
  }
  // the old identity is no longer an empty product; keep the invariant
  // that every element is the identity or a product of generators
  auto gens = out.generator_elements();
  if (!std::binary_search(gens.begin(), gens.end(), m.identity + 1)) {
    out.generators.emplace_back(m.name(m.identity), m.identity + 1);
  }
  validate_monoid(out);
  return out;
}

namespace {

// bM (right = true) or Mb (right = false), as a membership mask.  Correct
// because every element of a validated monoid is the identity or a product
// of generators.
std::vector<bool> reach(const FiniteMonoid& m, ElementId b,
                        const std::vector<ElementId>& gens, bool right, bool both) {
  std::vector<bool> seen(m.n, false);
  seen[b] = true;
  std::vector<ElementId> queue{b};
  for (size_t i = 0; i < queue.size(); ++i) {
    ElementId cur = queue[i];
    for (ElementId g : gens) {
      ElementId nexts[2] = {m.mul(cur, g), m.mul(g, cur)};
      int lo = (right || both) ? 0 : 1;
      int hi = (!right || both) ? 2 : 1;
      for (int k = lo; k < hi; ++k) {
        if (!seen[nexts[k]]) {
          seen[nexts[k]] = true;
          queue.push_back(nexts[k]);
        }
      }
    }
  }
  return seen;
}

std::vector<int> classes_of(int n, const std::vector<std::vector<bool>>& leq) {
  std::vector<int> cls(n, -1);
  int next = 0;
  for (int a = 0; a < n; ++a) {
    if (cls[a] >= 0) {
      continue;
    }
    cls[a] = next;
    for (int b = a + 1; b < n; ++b) {
      if (cls[b] < 0 && leq[a][b] && leq[b][a]) {
        cls[b] = next;
      }
    }
    ++next;
  }
  return cls;
}

std::vector<std::vector<ElementId>> members_of(int n, const std::vector<int>& cls) {
  int k = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<std::vector<ElementId>> out(k);
  for (int x = 0; x < n; ++x) {
    out[cls[x]].push_back(x);
  }
  return out;
}

}  // namespace

GreenData compute_green(const FiniteMonoid& m) {
  GreenData g;
  g.n = m.n;
  auto gens = m.generator_elements();
  g.leq_l.assign(m.n, std::vector<bool>(m.n, false));
  g.leq_r.assign(m.n, std::vector<bool>(m.n, false));
  g.leq_j.assign(m.n, std::vector<bool>(m.n, false));
  for (ElementId b = 0; b < m.n; ++b) {
    auto in_bm = reach(m, b, gens, true, false);
    auto in_mb = reach(m, b, gens, false, false);
    auto in_mbm = reach(m, b, gens, false, true);
    for (ElementId a = 0; a < m.n; ++a) {
      if (in_mb[a]) g.leq_l[a][b] = true;
      if (in_bm[a]) g.leq_r[a][b] = true;
      if (in_mbm[a]) g.leq_j[a][b] = true;
    }
  }
  g.l_class = classes_of(m.n, g.leq_l);
  g.r_class = classes_of(m.n, g.leq_r);
  g.j_class = classes_of(m.n, g.leq_j);
  g.l_classes = members_of(m.n, g.l_class);
  g.r_classes = members_of(m.n, g.r_class);
  g.j_classes = members_of(m.n, g.j_class);

  // H = L meet R; ids assigned in least-element order
  g.h_class.assign(m.n, -1);
  std::map<std::pair<int, int>, int> hid;
  for (ElementId x = 0; x < m.n; ++x) {
    auto key = std::make_pair(g.l_class[x], g.r_class[x]);
    auto it = hid.find(key);
    if (it == hid.end()) {
      it = hid.emplace(key, static_cast<int>(hid.size())).first;
    }
    g.h_class[x] = it->second;
  }
  g.h_classes = members_of(m.n, g.h_class);

  int k = static_cast<int>(g.j_classes.size());
  g.j_leq.assign(k, std::vector<bool>(k, false));
  for (int c = 0; c < k; ++c) {
    for (int d = 0; d < k; ++d) {
      g.j_leq[c][d] = g.leq_j[g.j_classes[c][0]][g.j_classes[d][0]];
    }
  }
  return g;
}

std::vector<int> j_height(const FiniteMonoid& m, const GreenData& g) {
  int k = static_cast<int>(g.j_classes.size());
  int top = -1;
  for (int c = 0; c < k; ++c) {
    bool maximal = true;
    for (int d = 0; d < k; ++d) {
      if (d != c && g.j_leq[c][d]) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      if (top >= 0) {
        throw std::invalid_argument("no unique maximum J-class");
      }
      top = c;
    }
  }
  for (int c = 0; c < k; ++c) {
    if (!g.j_leq[c][top]) {
      throw std::invalid_argument("no unique maximum J-class");
    }
  }
  // longest-path over the J-order DAG, from the top down
  std::vector<int> h(k, -1);
  h[top] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int c = 0; c < k; ++c) {
      if (c == top || h[c] >= 0) continue;
      int best = -1;
      bool ready = true;
      for (int d = 0; d < k; ++d) {
        if (d != c && g.j_leq[c][d]) {
          if (h[d] < 0) {
            ready = false;
            break;
          }
          best = std::max(best, h[d]);
        }
      }
      if (ready) {
        h[c] = best + 1;
        changed = true;
      }
    }
  }
  std::vector<int> out(m.n);
  for (ElementId x = 0; x < m.n; ++x) {
    out[x] = h[g.j_class[x]];
  }
  return out;
}

StabilityResult is_stable(const FiniteMonoid& m, const GreenData& g) {
  for (ElementId a = 0; a < m.n; ++a) {
    for (ElementId x = 0; x < m.n; ++x) {
      ElementId ax = m.mul(a, x);
      if (g.equiv_j(ax, a) && !g.equiv_r(ax, a)) {
        return {false, a, x};  // (S1) fails
      }
      ElementId xa = m.mul(x, a);
      if (g.equiv_j(xa, a) && !g.equiv_l(xa, a)) {
        return {false, a, x};  // (S2) fails
      }
    }
  }
  return {};
}

std::vector<bool> w_set(const GreenData& g) {
  std::vector<bool> w(g.n, false);
  for (ElementId x = 0; x < g.n; ++x) {
    w[x] = g.l_classes[g.l_class[x]].size() == g.h_classes[g.h_class[x]].size();
  }
  return w;
}

bool is_aperiodic_element(const FiniteMonoid& m, ElementId a) {
  ElementId p = a;
  for (int k = 0; k <= 2 * m.n + 2; ++k) {
    ElementId q = m.mul(p, a);
    if (q == p) {
      return true;
    }
    p = q;
  }
  return false;
}

bool is_aperiodic_morphism(const FiniteMonoid& dom, const FiniteMonoid& cod,
                           const std::vector<ElementId>& f) {
  if (static_cast<int>(f.size()) != dom.n) {
    throw std::invalid_argument("morphism has wrong domain size");
  }
  for (ElementId v : f) {
    if (v < 0 || v >= cod.n) {
      throw std::invalid_argument("morphism image out of range");
    }
  }
  if (f[dom.identity] != cod.identity) {
    throw std::invalid_argument("not a homomorphism: identity not preserved");
  }
  for (ElementId a = 0; a < dom.n; ++a) {
    for (ElementId b = 0; b < dom.n; ++b) {
      if (f[dom.mul(a, b)] != cod.mul(f[a], f[b])) {
        throw std::invalid_argument("not a homomorphism at (" + dom.name(a) + ", " +
                                    dom.name(b) + ")");
      }
    }
  }
  for (ElementId a = 0; a < dom.n; ++a) {
    if (is_aperiodic_element(cod, f[a]) && !is_aperiodic_element(dom, a)) {
      return false;
    }
  }
  return true;
}

}  // namespace semitree
