#pragma once

#include <functional>
#include <string>
#include <vector>

#include "semitree/length.hpp"

// Rooted trees, elliptic contractions, elliptic M-trees, the Chiswell
// construction and its inverse D_chi, and isomorphism checking.

namespace semitree {

struct RootedTree {
  struct Vertex {
    int parent = -1;
    int depth = 0;
    std::vector<int> children;  // ascending vertex ids
  };
  std::vector<Vertex> verts;
  int root = 0;

  int size() const { return static_cast<int>(verts.size()); }
  int father(int v) const { return verts[v].parent; }
  int depth_of(int v) const { return verts[v].depth; }
  int depth() const;
  bool uniform() const;
  std::vector<int> ray(int v) const;  // vertices from the root down to v
  int wedge(int v, int w) const;      // deepest common ancestor
};

// T(n_l, ..., n_1): every vertex of depth i-1 has degree n_i.  The
// branching list is given deepest level first, as in T(3, 2).
RootedTree build_uniform_tree(const std::vector<int>& branching);

// Canonical vertex <-> child-index-path correspondence (paths bottom-up,
// path[0] = the depth-1 step).
std::vector<int> tuple_of_vertex(const RootedTree& t, int v);
int vertex_of_tuple(const RootedTree& t, const std::vector<int>& tuple);

struct ContractionCheck {
  bool ok = true;
  int witness = -1;
};

// Root fixed and fatherhood preserved; depth preservation then follows.
ContractionCheck is_elliptic_contraction(const RootedTree& t,
                                         const std::vector<int>& map);

struct EllipticMTree {
  RootedTree tree;
  std::vector<int> base_ray;               // vertex per depth, base_ray[0] = root
  std::vector<std::vector<int>> action;    // action[m][v] = v . m

  int monoid_size() const { return static_cast<int>(action.size()); }
};

// Throws unless chi is a genuine alpha-transitive elliptic action of the
// monoid given by mul/identity.
void validate_elliptic_tree(const EllipticMTree& chi,
                            const std::function<int(int, int)>& mul, int identity);

// The Chiswell construction: vertices are the classes [k, m] of (k, m)
// under "same k and D(m, m') >= k".  The table must satisfy L1-L4; the
// call refuses otherwise, quoting the axiom report.
struct ChiswellTree {
  EllipticMTree chi;
  std::vector<std::vector<int>> members;   // per vertex, ascending universe ids
  std::vector<int> rep;                    // least member per vertex
  std::vector<std::vector<int>> vertex_of; // [k][u] -> vertex id
  int universe = 0;
  int identity = 0;
};

ChiswellTree chiswell_build(const LengthTable& d, int identity,
                            const std::function<int(int, int)>& mul);

// D_chi(m, m') = |alpha m /\ alpha m'|.
LengthTable d_chi(const EllipticMTree& chi);

// alpha m = alpha m'  implies  m = m'.
bool strongly_faithful(const EllipticMTree& chi);

struct IsoResult {
  bool isomorphic = false;
  std::vector<int> iso;  // vertex map a -> b when isomorphic
};

// D_chi = D_chi' iff the trees are isomorphic; on success the explicit
// isomorphism alpha_i m -> alpha'_i m is produced and validated.
IsoResult iso_check(const EllipticMTree& a, const EllipticMTree& b);

// Shortest suffix of rh.chain(sigma) representing the vertex [level, sigma]
// of the tree built from the length table h.
LChain minimal_representation(const RhodesMonoid& rh, const LengthTable& h, int level,
                              int sigma);

// Deterministic DOT rendering; one node per vertex, one edge to the father.
std::string to_dot(const RootedTree& t, const std::vector<std::string>* labels,
                   int depth_cap);

}  // namespace semitree
