#include "semitree/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace semitree {

int RootedTree::depth() const {
  int d = 0;
  for (const Vertex& v : verts) d = std::max(d, v.depth);
  return d;
}

bool RootedTree::uniform() const {
  int d = depth();
  for (int v = 0; v < size(); ++v) {
    if (verts[v].children.empty() && verts[v].depth != d) return false;
  }
  return true;
}

std::vector<int> RootedTree::ray(int v) const {
  std::vector<int> out;
  for (int x = v; x >= 0; x = verts[x].parent) out.push_back(x);
  std::reverse(out.begin(), out.end());
  return out;
}

int RootedTree::wedge(int v, int w) const {
  while (verts[v].depth > verts[w].depth) v = verts[v].parent;
  while (verts[w].depth > verts[v].depth) w = verts[w].parent;
  while (v != w) {
    v = verts[v].parent;
    w = verts[w].parent;
  }
  return v;
}

RootedTree build_uniform_tree(const std::vector<int>& branching) {
  for (int n : branching) {
    if (n < 1) throw std::invalid_argument("branching factors must be at least 1");
  }
  int l = static_cast<int>(branching.size());
  RootedTree t;
  t.verts.push_back({});
  std::vector<int> level{0};
  for (int i = 1; i <= l; ++i) {
    int deg = branching[l - i];
    std::vector<int> next;
    for (int p : level) {
      for (int c = 0; c < deg; ++c) {
        int id = t.size();
        t.verts.push_back({p, i, {}});
        t.verts[p].children.push_back(id);
        next.push_back(id);
      }
    }
    level = std::move(next);
  }
  return t;
}

std::vector<int> tuple_of_vertex(const RootedTree& t, int v) {
  std::vector<int> out;
  while (v != t.root) {
    int p = t.father(v);
    const auto& ch = t.verts[p].children;
    out.push_back(static_cast<int>(std::find(ch.begin(), ch.end(), v) - ch.begin()));
    v = p;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

int vertex_of_tuple(const RootedTree& t, const std::vector<int>& tuple) {
  int v = t.root;
  for (int c : tuple) {
    const auto& ch = t.verts[v].children;
    if (c < 0 || c >= static_cast<int>(ch.size())) {
      throw std::invalid_argument("tuple leaves the tree");
    }
    v = ch[c];
  }
  return v;
}

ContractionCheck is_elliptic_contraction(const RootedTree& t,
                                         const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != t.size()) {
    throw std::invalid_argument("vertex map has wrong size");
  }
  if (map[t.root] != t.root) return {false, t.root};
  for (int w = 0; w < t.size(); ++w) {
    if (w == t.root) continue;
    if (t.father(map[w]) != map[t.father(w)]) return {false, w};
  }
  for (int w = 0; w < t.size(); ++w) {
    if (t.depth_of(map[w]) != t.depth_of(w)) return {false, w};  // cannot happen
  }
  return {};
}

void validate_elliptic_tree(const EllipticMTree& chi,
                            const std::function<int(int, int)>& mul, int identity) {
  const RootedTree& t = chi.tree;
  if (!t.uniform()) throw std::invalid_argument("tree is not uniform");
  if (static_cast<int>(chi.base_ray.size()) != t.depth() + 1 ||
      chi.base_ray[0] != t.root) {
    throw std::invalid_argument("base ray must be a maximal ray from the root");
  }
  for (size_t i = 1; i < chi.base_ray.size(); ++i) {
    if (t.father(chi.base_ray[i]) != chi.base_ray[i - 1]) {
      throw std::invalid_argument("base ray is not a ray");
    }
  }
  int n = chi.monoid_size();
  for (int m = 0; m < n; ++m) {
    auto check = is_elliptic_contraction(t, chi.action[m]);
    if (!check.ok) {
      throw std::invalid_argument("action of element " + std::to_string(m) +
                                  " is not an elliptic contraction");
    }
  }
  for (int v = 0; v < t.size(); ++v) {
    if (chi.action[identity][v] != v) {
      throw std::invalid_argument("identity does not act trivially");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int ab = mul(a, b);
      for (int v = 0; v < t.size(); ++v) {
        if (chi.action[ab][v] != chi.action[b][chi.action[a][v]]) {
          throw std::invalid_argument("action is not a homomorphism");
        }
      }
    }
  }
  // alpha-transitivity
  for (int v = 0; v < t.size(); ++v) {
    int i = t.depth_of(v);
    bool hit = false;
    for (int m = 0; m < n && !hit; ++m) {
      hit = chi.action[m][chi.base_ray[i]] == v;
    }
    if (!hit) throw std::invalid_argument("action is not alpha-transitive");
  }
}

ChiswellTree chiswell_build(const LengthTable& d, int identity,
                            const std::function<int(int, int)>& mul) {
  AxiomReport report = check_length_axioms(d, mul, false);
  if (!report.pass(false)) {
    throw std::invalid_argument("not a length function:\n" + report.to_string());
  }
  ExtNat lmax = d.max_value();
  if (lmax.is_omega()) throw std::invalid_argument("table maximum is omega");
  int l = lmax.raw;
  int n = d.size;

  ChiswellTree out;
  out.universe = n;
  out.identity = identity;
  out.vertex_of.assign(l + 1, std::vector<int>(n, -1));
  RootedTree& t = out.chi.tree;

  for (int k = 0; k <= l; ++k) {
    for (int u = 0; u < n; ++u) {
      if (out.vertex_of[k][u] >= 0) continue;
      int id = static_cast<int>(t.verts.size());
      std::vector<int> members;
      for (int v = u; v < n; ++v) {
        if (d.at(u, v).raw >= k) {
          if (out.vertex_of[k][v] >= 0) {
            throw std::logic_error("Chiswell classes are not an equivalence");
          }
          out.vertex_of[k][v] = id;
          members.push_back(v);
        }
      }
      for (int a : members) {
        for (int b : members) {
          if (d.at(a, b).raw < k) {
            throw std::logic_error("Chiswell classes are not an equivalence");
          }
        }
      }
      int parent = k == 0 ? -1 : out.vertex_of[k - 1][u];
      t.verts.push_back({parent, k, {}});
      if (parent >= 0) t.verts[parent].children.push_back(id);
      out.members.push_back(std::move(members));
      out.rep.push_back(u);
    }
  }

  int nv = t.size();
  out.chi.action.assign(n, std::vector<int>(nv, -1));
  for (int m = 0; m < n; ++m) {
    for (int v = 0; v < nv; ++v) {
      int k = t.depth_of(v);
      int image = out.vertex_of[k][mul(out.rep[v], m)];
      for (int u : out.members[v]) {
        if (out.vertex_of[k][mul(u, m)] != image) {
          throw std::logic_error("action is not well defined on classes");
        }
      }
      out.chi.action[m][v] = image;
    }
  }
  for (int k = 0; k <= l; ++k) {
    out.chi.base_ray.push_back(out.vertex_of[k][identity]);
  }
  return out;
}

LengthTable d_chi(const EllipticMTree& chi) {
  int n = chi.monoid_size();
  int l = chi.tree.depth();
  LengthTable t = LengthTable::zero(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int agree = 0;
      for (int i = 1; i <= l; ++i) {
        if (chi.action[a][chi.base_ray[i]] != chi.action[b][chi.base_ray[i]]) break;
        agree = i;
      }
      t.set(a, b, ExtNat{agree});
    }
  }
  return t;
}

bool strongly_faithful(const EllipticMTree& chi) {
  int n = chi.monoid_size();
  int tip = chi.base_ray.back();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (chi.action[a][tip] == chi.action[b][tip]) return false;
    }
  }
  return true;
}

IsoResult iso_check(const EllipticMTree& a, const EllipticMTree& b) {
  if (a.monoid_size() != b.monoid_size()) return {};
  LengthTable da = d_chi(a), db = d_chi(b);
  if (da.d != db.d) return {};

  IsoResult out;
  out.isomorphic = true;
  out.iso.assign(a.tree.size(), -1);
  for (int v = 0; v < a.tree.size(); ++v) {
    int i = a.tree.depth_of(v);
    int m = -1;
    for (int c = 0; c < a.monoid_size(); ++c) {
      if (a.action[c][a.base_ray[i]] == v) {
        m = c;
        break;
      }
    }
    if (m < 0) throw std::invalid_argument("tree is not alpha-transitive");
    out.iso[v] = b.action[m][b.base_ray[i]];
  }
  // sanity: bijective elliptic morphism commuting with the action
  std::vector<bool> hit(b.tree.size(), false);
  for (int v = 0; v < a.tree.size(); ++v) {
    if (out.iso[v] < 0 || hit[out.iso[v]]) {
      throw std::logic_error("constructed map is not a bijection");
    }
    hit[out.iso[v]] = true;
  }
  if (out.iso[a.tree.root] != b.tree.root) {
    throw std::logic_error("constructed map does not fix the root");
  }
  for (int v = 0; v < a.tree.size(); ++v) {
    if (v == a.tree.root) continue;
    if (b.tree.father(out.iso[v]) != out.iso[a.tree.father(v)]) {
      throw std::logic_error("constructed map does not preserve fatherhood");
    }
  }
  for (size_t i = 0; i < a.base_ray.size(); ++i) {
    if (out.iso[a.base_ray[i]] != b.base_ray[i]) {
      throw std::logic_error("constructed map does not send alpha to alpha'");
    }
  }
  for (int m = 0; m < a.monoid_size(); ++m) {
    for (int v = 0; v < a.tree.size(); ++v) {
      if (out.iso[a.action[m][v]] != b.action[m][out.iso[v]]) {
        throw std::logic_error("constructed map does not commute with the action");
      }
    }
  }
  return out;
}

LChain minimal_representation(const RhodesMonoid& rh, const LengthTable& h, int level,
                              int sigma) {
  if (ExtNat{level} > h.max_value()) {
    throw std::invalid_argument("level exceeds the tree depth");
  }
  const LChain& c = rh.chain(sigma);
  for (int i = 0; i <= c.length(); ++i) {
    LChain suffix{std::vector<ElementId>(c.terms.end() - (i + 1), c.terms.end())};
    int idx = rh.index_of(suffix);  // prefixes of chains stay in the expansion
    if (h.at(idx, sigma).raw >= level) return suffix;
  }
  throw std::logic_error("chain does not represent its own class");
}

std::string to_dot(const RootedTree& t, const std::vector<std::string>* labels,
                   int depth_cap) {
  std::vector<int> idx_in_depth(t.size(), 0);
  std::vector<int> counter(t.depth() + 1, 0);
  for (int v = 0; v < t.size(); ++v) {
    idx_in_depth[v] = counter[t.depth_of(v)]++;
  }
  auto node = [&](int v) {
    return "v_" + std::to_string(t.depth_of(v)) + "_" + std::to_string(idx_in_depth[v]);
  };
  std::string out = "graph tree {\n";
  for (int v = 0; v < t.size(); ++v) {
    if (depth_cap >= 0 && t.depth_of(v) > depth_cap) continue;
    out += "  " + node(v);
    if (labels) out += " [label=\"" + (*labels)[v] + "\"]";
    out += ";\n";
  }
  for (int v = 0; v < t.size(); ++v) {
    if (v == t.root) continue;
    if (depth_cap >= 0 && t.depth_of(v) > depth_cap) continue;
    out += "  " + node(v) + " -- " + node(t.father(v)) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace semitree
