#include "semitree/rees.hpp"

#include <algorithm>
#include <stdexcept>

namespace semitree {

namespace {

ElementId least_solution_left(const FiniteMonoid& m, ElementId target, ElementId right) {
  // least x with x . right = target
  for (ElementId x = 0; x < m.n; ++x) {
    if (m.mul(x, right) == target) return x;
  }
  return -1;
}

ElementId least_solution_right(const FiniteMonoid& m, ElementId left, ElementId target) {
  // least x with left . x = target
  for (ElementId x = 0; x < m.n; ++x) {
    if (m.mul(left, x) == target) return x;
  }
  return -1;
}

[[noreturn]] void corrupt(const std::string& what) {
  throw std::runtime_error("coordinatization failed (" + what +
                           "); monoid not stable or corrupted");
}

}  // namespace

int ReesView::a_index(int r_class_id) const {
  for (size_t i = 0; i < A.size(); ++i) {
    if (A[i] == r_class_id) return static_cast<int>(i);
  }
  return -1;
}

int ReesView::b_index(int l_class_id) const {
  for (size_t i = 0; i < B.size(); ++i) {
    if (B[i] == l_class_id) return static_cast<int>(i);
  }
  return -1;
}

ReesCoords coordinatize(const FiniteMonoid& m, const GreenData& g) {
  auto st = is_stable(m, g);
  if (!st.stable) {
    throw std::invalid_argument("monoid is not stable; witness (" + m.name(st.a) + ", " +
                                m.name(st.x) + ")");
  }

  ReesCoords rc;
  rc.views.resize(g.j_classes.size());
  rc.coords.assign(m.n, {-1, -1, -1});

  for (size_t j = 0; j < g.j_classes.size(); ++j) {
    ReesView& v = rc.views[j];
    v.jclass = static_cast<int>(j);
    const auto& members = g.j_classes[j];
    v.h0 = members[0];

    // R- and L-classes of J, distinguished classes first, rest ascending
    v.A.push_back(g.r_class[v.h0]);
    v.B.push_back(g.l_class[v.h0]);
    for (ElementId u : members) {
      if (g.r_class[u] != v.A[0] &&
          std::find(v.A.begin(), v.A.end(), g.r_class[u]) == v.A.end()) {
        v.A.push_back(g.r_class[u]);
      }
      if (g.l_class[u] != v.B[0] &&
          std::find(v.B.begin(), v.B.end(), g.l_class[u]) == v.B.end()) {
        v.B.push_back(g.l_class[u]);
      }
    }

    // Schutzenberger group of the H-class of h0, elements named by their
    // values h0 x, identity first
    const auto& H = g.h_classes[g.h_class[v.h0]];
    v.gvalue.push_back(v.h0);
    for (ElementId h : H) {
      if (h != v.h0) v.gvalue.push_back(h);
    }
    auto gindex = [&](ElementId value) {
      for (size_t i = 0; i < v.gvalue.size(); ++i) {
        if (v.gvalue[i] == value) return static_cast<int>(i);
      }
      return -1;
    };
    for (ElementId val : v.gvalue) {
      ElementId x = least_solution_right(m, v.h0, val);
      if (x < 0) corrupt("no representative for a group element");
      v.h_tilde.push_back(x);
    }
    int gs = v.group_size();
    v.gtable.assign(gs, std::vector<int>(gs, -1));
    for (int g1 = 0; g1 < gs; ++g1) {
      for (int g2 = 0; g2 < gs; ++g2) {
        int p = gindex(m.mul(v.gvalue[g1], v.h_tilde[g2]));
        if (p < 0) corrupt("group not closed");
        v.gtable[g1][g2] = p;
      }
    }
    for (int g1 = 0; g1 < gs; ++g1) {
      std::vector<bool> row(gs, false), col(gs, false);
      for (int g2 = 0; g2 < gs; ++g2) {
        row[v.gtable[g1][g2]] = true;
        col[v.gtable[g2][g1]] = true;
      }
      if (std::find(row.begin(), row.end(), false) != row.end() ||
          std::find(col.begin(), col.end(), false) != col.end()) {
        corrupt("Schutzenberger table is not a group");
      }
    }

    // anchors per R-class and L-class
    for (int rcls : v.A) {
      ElementId ahat = -1;
      for (ElementId u : g.r_classes[rcls]) {
        if (g.l_class[u] == g.l_class[v.h0]) {
          ahat = u;
          break;
        }
      }
      if (ahat < 0) corrupt("R-class misses the distinguished L-class");
      v.a_hat.push_back(ahat);
      ElementId e = least_solution_left(m, v.h0, ahat);
      ElementId ebar = least_solution_left(m, ahat, v.h0);
      if (e < 0 || ebar < 0) corrupt("anchor element nonexistent");
      v.e_a.push_back(e);
      v.e_bar_a.push_back(ebar);
    }
    for (int lcls : v.B) {
      ElementId bhat = -1;
      for (ElementId u : g.l_classes[lcls]) {
        if (g.r_class[u] == g.r_class[v.h0]) {
          bhat = u;
          break;
        }
      }
      if (bhat < 0) corrupt("L-class misses the distinguished R-class");
      v.b_hat.push_back(bhat);
      ElementId f = least_solution_right(m, bhat, v.h0);
      ElementId fbar = least_solution_right(m, v.h0, bhat);
      if (f < 0 || fbar < 0) corrupt("anchor element nonexistent");
      v.f_b.push_back(f);
      v.f_bar_b.push_back(fbar);
    }

    // sandwich matrix
    v.c.assign(v.B.size(), std::vector<int>(v.A.size(), -1));
    for (size_t b = 0; b < v.B.size(); ++b) {
      for (size_t a = 0; a < v.A.size(); ++a) {
        ElementId p = m.mul(v.b_hat[b], v.a_hat[a]);
        if (g.j_class[p] == static_cast<int>(j)) {
          if (g.h_class[p] != g.h_class[v.h0]) corrupt("sandwich product outside H");
          v.c[b][a] = gindex(p);
        }
      }
    }

    // coordinates of every element of J, and the inverse table
    v.elem.assign(v.A.size() * v.gvalue.size() * v.B.size(), -1);
    for (ElementId u : members) {
      int a = v.a_index(g.r_class[u]);
      int b = v.b_index(g.l_class[u]);
      ElementId p = m.mul(m.mul(v.e_a[a], u), v.f_b[b]);
      int gi = gindex(p);
      if (gi < 0) corrupt("element coordinate outside the group");
      rc.coords[u] = {a, gi, b};
      size_t slot = (static_cast<size_t>(a) * gs + gi) * v.B.size() + b;
      if (v.elem[slot] != -1) corrupt("coordinates not injective");
      v.elem[slot] = u;
    }
    if (members.size() != v.A.size() * v.gvalue.size() * v.B.size()) {
      corrupt("coordinates not bijective");
    }
  }

  // Rees product law on in-class products; products leaving J go strictly down
  for (ElementId u = 0; u < m.n; ++u) {
    for (ElementId w = 0; w < m.n; ++w) {
      if (g.j_class[u] != g.j_class[w]) continue;
      const ReesView& v = rc.views[g.j_class[u]];
      auto [a, gu, b] = rc.coords[u];
      auto [a2, gw, b2] = rc.coords[w];
      ElementId p = m.mul(u, w);
      int cval = v.c[b][a2];
      if (g.j_class[p] == g.j_class[u]) {
        if (cval < 0) corrupt("in-class product with zero sandwich entry");
        int gp = v.gtable[v.gtable[gu][cval]][gw];
        if (p != v.at(a, gp, b2)) corrupt("Rees product law violated");
      } else {
        if (cval >= 0) corrupt("product left J despite nonzero sandwich entry");
        if (!g.lt_j(p, u)) corrupt("product left J but is not strictly below");
      }
    }
  }

  rc.canonical_11b.assign(g.l_classes.size(), -1);
  for (size_t lc = 0; lc < g.l_classes.size(); ++lc) {
    ElementId rep = g.l_classes[lc][0];
    const ReesView& v = rc.views[g.j_class[rep]];
    rc.canonical_11b[lc] = v.at(0, 0, v.b_index(static_cast<int>(lc)));
  }
  return rc;
}

StarSharp star_sharp(const FiniteMonoid& m, const GreenData& g, const ReesCoords& rc) {
  StarSharp ss;
  ss.star.assign(m.n, -1);
  ss.sharp.assign(m.n, -1);
  for (ElementId x = 0; x < m.n; ++x) {
    const ReesView& v = rc.views[g.j_class[x]];
    ElementId ra = v.at(rc.coords[x][0], 0, 0);
    ss.star[x] = least_solution_right(m, x, ra);
    ss.sharp[x] = least_solution_right(m, ra, x);
    if (ss.star[x] < 0 || ss.sharp[x] < 0) {
      throw std::runtime_error("star/sharp solution missing for " + m.name(x));
    }
  }
  // m m* m# = m for all m
  for (ElementId x = 0; x < m.n; ++x) {
    if (m.mul(m.mul(x, ss.star[x]), ss.sharp[x]) != x) {
      throw std::runtime_error("m m* m# = m fails at " + m.name(x));
    }
  }
  return ss;
}

LocalSets local_sets(const FiniteMonoid& m, const GreenData& g, const ReesCoords& rc,
                     const std::vector<ElementId>& y_gens, ElementId elt) {
  LocalSets out;
  for (ElementId y : y_gens) {
    ElementId ym = m.mul(y, elt);
    if (g.lt_l(ym, elt)) {
      out.y.push_back(y);
      int lc = g.l_class[ym];
      if (std::find(out.q.begin(), out.q.end(), lc) == out.q.end()) {
        out.q.push_back(lc);
      }
    }
  }
  std::sort(out.q.begin(), out.q.end());

  const ReesView& v = rc.views[g.j_class[elt]];
  auto [a, gi, b] = rc.coords[elt];
  for (size_t a2 = 0; a2 < v.A.size(); ++a2) {
    ElementId mate = v.at(static_cast<int>(a2), gi, b);
    for (ElementId y : y_gens) {
      if (g.lt_l(m.mul(y, mate), mate)) {
        out.a_prime.push_back(static_cast<int>(a2));
        break;
      }
    }
  }

  ElementId gamma = -1;
  for (ElementId y : out.y) {
    ElementId ym = m.mul(y, elt);
    if (gamma < 0 || ym < gamma) gamma = ym;
  }
  if (gamma >= 0) out.gamma = gamma;
  return out;
}

int schutz_translation(const FiniteMonoid& m, const GreenData& g, const ReesCoords& rc,
                       ElementId u, ElementId v) {
  if (!g.equiv_r(m.mul(u, v), u)) {
    throw std::invalid_argument("uv is not R-equivalent to u: no translation exists");
  }
  const ReesView& view = rc.views[g.j_class[u]];
  auto [a, gu, b] = rc.coords[u];
  auto phi = [&](int h) {
    ElementId uh = view.at(a, h, b);
    return rc.coords[m.mul(uh, v)][1];
  };
  int g0 = phi(0);
  for (int h = 0; h < view.group_size(); ++h) {
    if (phi(h) != view.gtable[h][g0]) {
      throw std::runtime_error("translation is not right multiplication");
    }
  }
  return g0;
}

}  // namespace semitree
