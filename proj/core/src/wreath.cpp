#include "semitree/wreath.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace semitree {

std::string symbol_to_string(const Symbol& s) {
  switch (s.kind) {
    case Symbol::Kind::down:
      return "v";
    case Symbol::Kind::a_plain:
      return "a" + std::to_string(s.a) + "|R" + std::to_string(s.rtag);
    case Symbol::Kind::a_star:
      return "(a" + std::to_string(s.a) + ",*)|R" + std::to_string(s.rtag);
    case Symbol::Kind::g_star:
      return "(g" + std::to_string(s.g) + ",*)|R" + std::to_string(s.rtag);
    case Symbol::Kind::g_q:
      return "(g" + std::to_string(s.g) + ",q" + std::to_string(s.q) + ")|R" +
             std::to_string(s.rtag);
  }
  return "?";
}

int Alphabet::add(const Symbol& s) {
  auto it = index.find(s);
  if (it != index.end()) return it->second;
  int id = static_cast<int>(symbols.size());
  symbols.push_back(s);
  index.emplace(s, id);
  return id;
}

int Alphabet::at(const Symbol& s) const {
  auto it = index.find(s);
  if (it == index.end()) {
    throw std::logic_error("symbol " + symbol_to_string(s) + " missing from X_" +
                           std::to_string(level));
  }
  return it->second;
}

// ----- sequential maps --------------------------------------------------

SequentialMap seq_identity_full(const std::vector<int>& alphabet_sizes) {
  SequentialMap f;
  f.levels = static_cast<int>(alphabet_sizes.size());
  std::vector<std::vector<int>> tuples{{}};
  for (int lev = 1; lev <= f.levels; ++lev) {
    std::vector<std::vector<int>> next;
    for (const auto& t : tuples) {
      for (int x = 0; x < alphabet_sizes[lev - 1]; ++x) {
        auto tx = t;
        tx.push_back(x);
        f.entries.emplace(tx, tx);
        next.push_back(std::move(tx));
      }
    }
    tuples = std::move(next);
    if (f.entries.size() > 2000000) {
      throw std::invalid_argument("tuple space too large to materialize");
    }
  }
  return f;
}

SequentialMap seq_compose(const SequentialMap& f, const SequentialMap& g) {
  if (f.levels != g.levels) {
    throw std::invalid_argument("alphabet mismatch in composition");
  }
  SequentialMap h;
  h.levels = f.levels;
  for (const auto& [t, u] : f.entries) {
    auto it = g.entries.find(u);
    if (it != g.entries.end()) {
      h.entries.emplace(t, it->second);
    }
  }
  return h;
}

SeqCheck check_sequential(const SequentialMap& f, const std::vector<int>& sizes) {
  for (const auto& [t, u] : f.entries) {
    if (t.empty() || t.size() > sizes.size()) return {false, "tuple of bad length"};
    if (u.size() != t.size()) return {false, "image not level-preserving (SQ2)"};
    for (size_t i = 0; i < t.size(); ++i) {
      if (t[i] < 0 || t[i] >= sizes[i] || u[i] < 0 || u[i] >= sizes[i]) {
        return {false, "symbol out of range"};
      }
    }
    if (t.size() >= 2) {
      std::vector<int> parent(t.begin(), t.end() - 1);
      if (!f.defined(parent)) return {false, "domain not truncation-closed (SQ1)"};
    }
  }
  for (auto it1 = f.entries.begin(); it1 != f.entries.end(); ++it1) {
    for (auto it2 = std::next(it1); it2 != f.entries.end(); ++it2) {
      const auto& [t1, u1] = *it1;
      const auto& [t2, u2] = *it2;
      size_t agree = 0;
      while (agree < t1.size() && agree < t2.size() && t1[agree] == t2[agree]) ++agree;
      for (size_t i = 0; i < agree; ++i) {
        if (u1[i] != u2[i]) return {false, "suffix agreement broken (SQ3)"};
      }
    }
  }
  return {};
}

std::vector<int> local_component(const SequentialMap& f, const std::vector<int>& prefix,
                                 int alphabet_size) {
  std::vector<int> out(alphabet_size, -1);
  std::vector<int> t = prefix;
  t.push_back(0);
  for (int x = 0; x < alphabet_size; ++x) {
    t.back() = x;
    auto it = f.entries.find(t);
    if (it != f.entries.end()) out[x] = it->second.back();
  }
  return out;
}

// ----- Ell <-> wreath ---------------------------------------------------

SequentialMap ell_to_wreath(const RootedTree& t, const std::vector<int>& vertex_map) {
  auto check = is_elliptic_contraction(t, vertex_map);
  if (!check.ok) {
    throw std::invalid_argument("vertex map is not an elliptic contraction (witness " +
                                std::to_string(check.witness) + ")");
  }
  SequentialMap f;
  f.levels = t.depth();
  for (int v = 0; v < t.size(); ++v) {
    if (v == t.root) continue;
    f.entries.emplace(tuple_of_vertex(t, v), tuple_of_vertex(t, vertex_map[v]));
  }
  return f;
}

std::vector<int> wreath_to_ell(const RootedTree& t, const SequentialMap& f) {
  std::vector<int> map(t.size(), -1);
  map[t.root] = t.root;
  for (int v = 0; v < t.size(); ++v) {
    if (v == t.root) continue;
    auto it = f.entries.find(tuple_of_vertex(t, v));
    if (it == f.entries.end()) {
      throw std::invalid_argument("sequential map is not total on the tree");
    }
    map[v] = vertex_of_tuple(t, it->second);
  }
  return map;
}

// ----- pointed wreath products -------------------------------------------

PointedWreathTree pointed_wreath_tree(const std::vector<PointedComponent>& comps) {
  if (comps.empty()) throw std::invalid_argument("at least one component is required");
  int l = static_cast<int>(comps.size());
  for (int i = 0; i < l; ++i) {
    const PointedComponent& c = comps[i];
    if (c.size < 1 || c.point < 0 || c.point >= c.size || c.maps.empty()) {
      throw std::invalid_argument("malformed component " + std::to_string(i));
    }
    for (const auto& f : c.maps) {
      if (static_cast<int>(f.size()) != c.size) {
        throw std::invalid_argument("component map of wrong size");
      }
      for (int v : f) {
        if (v < 0 || v >= c.size) throw std::invalid_argument("component map out of range");
      }
    }
    std::vector<int> id(c.size);
    for (int x = 0; x < c.size; ++x) id[x] = x;
    if (std::find(c.maps.begin(), c.maps.end(), id) == c.maps.end()) {
      throw std::invalid_argument("component " + std::to_string(i) +
                                  " does not contain the identity");
    }
    for (const auto& f : c.maps) {
      for (const auto& g : c.maps) {
        std::vector<int> fg(c.size);
        for (int x = 0; x < c.size; ++x) fg[x] = g[f[x]];
        if (std::find(c.maps.begin(), c.maps.end(), fg) == c.maps.end()) {
          throw std::invalid_argument("component " + std::to_string(i) +
                                      " is not closed under composition");
        }
      }
    }
    std::vector<bool> orbit(c.size, false);
    orbit[c.point] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int x = 0; x < c.size; ++x) {
        if (!orbit[x]) continue;
        for (const auto& f : c.maps) {
          if (!orbit[f[x]]) orbit[f[x]] = grew = true;
        }
      }
    }
    for (int x = 0; x < c.size; ++x) {
      if (!orbit[x]) {
        throw std::invalid_argument("component " + std::to_string(i) +
                                    " not transitive: symbol " + std::to_string(x) +
                                    " unreachable from the point");
      }
    }
  }

  // bottom-up alphabet sizes; component for level i is comps[l - i]
  std::vector<int> sizes(l);
  for (int i = 1; i <= l; ++i) sizes[i - 1] = comps[l - i].size;

  // prefix spaces per level: all (i-1)-tuples, lexicographic
  std::vector<std::vector<std::vector<int>>> prefixes(l + 1);
  prefixes[1] = {{}};
  for (int i = 2; i <= l; ++i) {
    for (const auto& p : prefixes[i - 1]) {
      for (int x = 0; x < sizes[i - 2]; ++x) {
        auto px = p;
        px.push_back(x);
        prefixes[i].push_back(std::move(px));
      }
    }
  }

  struct Slot {
    int level;
    int prefix;
  };
  std::vector<Slot> slots;
  double total = 1;
  for (int i = 1; i <= l; ++i) {
    for (size_t p = 0; p < prefixes[i].size(); ++p) {
      slots.push_back({i, static_cast<int>(p)});
      total *= static_cast<double>(comps[l - i].maps.size());
    }
  }
  if (total > 100000) {
    throw std::invalid_argument("wreath product too large to enumerate");
  }

  auto prefix_index = [&](const std::vector<int>& t, int upto) {
    // index of t[0..upto) within prefixes[upto + 1]
    int idx = 0;
    for (int j = 0; j < upto; ++j) idx = idx * sizes[j] + t[j];
    return idx;
  };

  PointedWreathTree out;
  RootedTree tree = build_uniform_tree([&] {
    std::vector<int> branching(l);
    for (int i = 0; i < l; ++i) branching[i] = comps[i].size;
    return branching;
  }());

  std::vector<size_t> choice(slots.size(), 0);
  bool done = false;
  while (!done) {
    SequentialMap f;
    f.levels = l;
    // local map for slot s = comps[l - level].maps[choice[s]]
    std::map<std::pair<int, int>, const std::vector<int>*> lookup;
    for (size_t s = 0; s < slots.size(); ++s) {
      lookup[{slots[s].level, slots[s].prefix}] =
          &comps[l - slots[s].level].maps[choice[s]];
    }
    for (int i = 1; i <= l; ++i) {
      for (const auto& p : prefixes[i]) {
        for (int x = 0; x < sizes[i - 1]; ++x) {
          auto t = p;
          t.push_back(x);
          std::vector<int> img(t.size());
          for (int j = 1; j <= static_cast<int>(t.size()); ++j) {
            img[j - 1] = (*lookup.at({j, prefix_index(t, j - 1)}))[t[j - 1]];
          }
          f.entries.emplace(std::move(t), std::move(img));
        }
      }
    }
    out.elements.push_back(std::move(f));
    // odometer
    done = true;
    for (size_t s = 0; s < slots.size(); ++s) {
      if (++choice[s] < comps[l - slots[s].level].maps.size()) {
        done = false;
        break;
      }
      choice[s] = 0;
    }
  }

  int n = static_cast<int>(out.elements.size());
  std::map<std::map<std::vector<int>, std::vector<int>>, int> index;
  for (int i = 0; i < n; ++i) index[out.elements[i].entries] = i;
  out.table.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto prod = seq_compose(out.elements[i], out.elements[j]);
      auto it = index.find(prod.entries);
      if (it == index.end()) throw std::logic_error("wreath product not closed");
      out.table[i][j] = it->second;
    }
  }
  out.identity = index.at(seq_identity_full(sizes).entries);

  out.chi.tree = tree;
  for (int i = 0; i < n; ++i) {
    out.chi.action.push_back(wreath_to_ell(tree, out.elements[i]));
  }
  std::vector<int> pt;
  out.chi.base_ray.push_back(tree.root);
  for (int i = 1; i <= l; ++i) {
    pt.push_back(comps[l - i].point);
    out.chi.base_ray.push_back(vertex_of_tuple(tree, pt));
  }
  validate_elliptic_tree(out.chi, [&](int a, int b) { return out.table[a][b]; },
                         out.identity);
  return out;
}

// ----- generic embedding --------------------------------------------------

GenericEmbedding generic_embed(const EllipticMTree& chi,
                               const std::vector<int>& alphabet_sizes,
                               const Labeling& f) {
  const RootedTree& t = chi.tree;
  int l = t.depth();
  if (static_cast<int>(alphabet_sizes.size()) < l) {
    throw std::invalid_argument("alphabet list shorter than the tree depth");
  }
  if (static_cast<int>(f.f.size()) != t.size()) {
    throw std::invalid_argument("labeling has wrong size");
  }
  for (int v = 0; v < t.size(); ++v) {
    if (v == t.root) continue;
    int lev = t.depth_of(v);
    if (f.f[v] < 0 || f.f[v] >= alphabet_sizes[lev - 1]) {
      throw std::invalid_argument("label out of range at vertex " + std::to_string(v));
    }
  }
  for (int v = 0; v < t.size(); ++v) {
    std::set<int> seen;
    for (int w : t.verts[v].children) {
      if (!seen.insert(f.f[w]).second) {
        throw std::invalid_argument("labeling not locally injective at vertex " +
                                    std::to_string(v));
      }
    }
  }

  std::vector<std::vector<int>> psi(t.size());
  for (int v = 0; v < t.size(); ++v) {
    if (v == t.root) continue;
    psi[v] = psi[t.father(v)];
    psi[v].push_back(f.f[v]);
  }

  GenericEmbedding out;
  out.alphabet_sizes.assign(alphabet_sizes.begin(), alphabet_sizes.begin() + l);
  out.psi.push_back(seq_identity_full(out.alphabet_sizes));
  for (int m = 0; m < chi.monoid_size(); ++m) {
    SequentialMap pm;
    pm.levels = l;
    for (int v = 0; v < t.size(); ++v) {
      if (v == t.root) continue;
      pm.entries.emplace(psi[v], psi[chi.action[m][v]]);
    }
    out.psi.push_back(std::move(pm));
  }
  return out;
}

// ----- Zeiger context ------------------------------------------------------

ZeigerContext make_zeiger_context(const FiniteMonoid& m) {
  ZeigerContext ctx;
  ctx.mi = adjoin_identity(m);
  ctx.green = compute_green(ctx.mi);
  auto st = is_stable(ctx.mi, ctx.green);
  if (!st.stable) {
    throw std::logic_error("finite monoid is not stable; witness (" +
                           ctx.mi.name(st.a) + ", " + ctx.mi.name(st.x) + ")");
  }
  ctx.hj = j_height(ctx.mi, ctx.green);
  ctx.w = w_set(ctx.green);
  ctx.rees = coordinatize(ctx.mi, ctx.green);
  ctx.ss = star_sharp(ctx.mi, ctx.green, ctx.rees);
  // Y is the original monoid's generator set, shifted into M^I
  for (ElementId e : m.generator_elements()) {
    ctx.y.push_back(e + 1);
  }
  for (ElementId e = 0; e < ctx.mi.n; ++e) {
    ctx.locals.push_back(local_sets(ctx.mi, ctx.green, ctx.rees, ctx.y, e));
    ctx.rtag.push_back(ctx.mi.mul(e, ctx.ss.star[e]));
  }
  ctx.u.resize(ctx.mi.n);
  for (ElementId e = 0; e < ctx.mi.n; ++e) {
    const ReesView& view = ctx.rees.views[ctx.green.j_class[e]];
    int na = static_cast<int>(view.A.size());
    int nap = static_cast<int>(ctx.locals[e].a_prime.size());
    int ng = view.group_size();
    int nq = static_cast<int>(ctx.locals[e].q.size());
    bool inw = ctx.w[e];
    ctx.u[e] = {inw && na > 1,                  // U_0
                !inw && na + nap > 1,           // U_1
                inw && ng * (1 + nq) > 1,       // U_2
                !inw && ng > 1,                 // U_3
                !inw && ng * nq > 1};           // U_4
  }
  int sup = 0;
  for (ElementId e = 0; e < ctx.mi.n; ++e) {
    if (e != ctx.mi.identity) sup = std::max(sup, ctx.hj[e]);
  }
  ctx.delta = 2 + 2 * sup;
  return ctx;
}

std::vector<Alphabet> build_alphabets(const ZeigerContext& ctx) {
  std::vector<Alphabet> out;
  for (int lev = 1; lev <= ctx.delta; ++lev) {
    Alphabet x;
    x.level = lev;
    x.add(Symbol{});  // the down symbol
    bool odd = lev % 2 == 1;
    int k = odd ? (lev - 1) / 2 : (lev - 2) / 2;
    // least member per R-class tag with the relevant U flag
    std::map<ElementId, ElementId> reps;
    for (ElementId e = 0; e < ctx.mi.n; ++e) {
      if (ctx.hj[e] != k) continue;
      bool flagged = odd ? (ctx.u[e][0] || ctx.u[e][1])
                         : (ctx.u[e][2] || ctx.u[e][3] || ctx.u[e][4]);
      if (flagged && reps.find(ctx.rtag[e]) == reps.end()) {
        reps.emplace(ctx.rtag[e], e);
      }
    }
    for (auto& [tag, rep] : reps) {
      const ReesView& view = ctx.rees.views[ctx.green.j_class[rep]];
      if (odd) {
        for (int a = 0; a < static_cast<int>(view.A.size()); ++a) {
          x.add({Symbol::Kind::a_plain, tag, a, -1, -1});
        }
        if (ctx.u[rep][1]) {
          for (int a : ctx.locals[rep].a_prime) {
            x.add({Symbol::Kind::a_star, tag, a, -1, -1});
          }
        }
      } else {
        const LocalSets& star_locals = ctx.locals[tag];  // Q_{m m*}
        if (ctx.u[rep][2] || ctx.u[rep][3]) {
          for (int g = 0; g < view.group_size(); ++g) {
            x.add({Symbol::Kind::g_star, tag, -1, g, -1});
          }
        }
        if (ctx.u[rep][2] || ctx.u[rep][4]) {
          for (int g = 0; g < view.group_size(); ++g) {
            for (int q : star_locals.q) {
              x.add({Symbol::Kind::g_q, tag, -1, g, q});
            }
          }
        }
      }
    }
    out.push_back(std::move(x));
  }
  return out;
}

// ----- sons analysis and the labeling --------------------------------------

namespace {

LChain replace_leftmost(const LChain& c, ElementId r) {
  LChain out = c;
  out.terms[0] = r;
  return out;
}

LChain prepend(const LChain& c, ElementId x) {
  LChain out;
  out.terms.push_back(x);
  out.terms.insert(out.terms.end(), c.terms.begin(), c.terms.end());
  return out;
}

LChain drop_leftmost(const LChain& c) {
  LChain out;
  out.terms.assign(c.terms.begin() + 1, c.terms.end());
  return out;
}

}  // namespace

SonsAnalysis analyze_sons(const ZeigerContext& ctx, const RhodesMonoid& rhy,
                          const ChiswellTree& tree, int v) {
  const RootedTree& t = tree.chi.tree;
  int lev = t.depth_of(v);
  const LChain& sigma = rhy.chain(tree.rep[v]);  // least member = minimal rep
  ElementId ml = sigma.leftmost();
  int len = sigma.length();

  SonsAnalysis out;
  std::map<int, Symbol> labels;
  auto place = [&](const LChain& zeta, const Symbol& sym) {
    int idx = rhy.index_of(zeta);
    int w = tree.vertex_of[lev + 1][idx];
    if (t.father(w) != v) {
      throw std::logic_error("candidate son is not a son");
    }
    if (!labels.emplace(w, sym).second) {
      throw std::logic_error("son classes are not distinct");
    }
  };
  auto eps_term = [&](const LChain& zeta, int pos) {
    JChain eps = zeiger_encode(ctx.mi, ctx.green, ctx.ss, zeta);
    return eps.terms[zeta.length() - pos];
  };

  if (lev % 2 == 0) {  // norfA cases
    int k = lev / 2;
    if (ctx.hj[ml] != k || !(ctx.u[ml][0] || ctx.u[ml][1])) {
      throw std::logic_error("even vertex with several sons matches no U case");
    }
    const ReesView& view = ctx.rees.views[ctx.green.j_class[ml]];
    auto [a, g, b] = ctx.rees.coords[ml];
    for (int a2 = 0; a2 < static_cast<int>(view.A.size()); ++a2) {
      ElementId mate = view.at(a2, g, b);
      place(replace_leftmost(sigma, mate),
            {Symbol::Kind::a_plain, ctx.rtag[ml], a2, -1, -1});
    }
    if (ctx.u[ml][1]) {
      out.kind = SonsAnalysis::Case::even_u1;
      for (int a2 : ctx.locals[ml].a_prime) {
        ElementId mate = view.at(a2, g, b);
        if (!ctx.locals[mate].gamma) {
          throw std::logic_error("gamma missing for an A' coordinate");
        }
        place(prepend(replace_leftmost(sigma, mate), *ctx.locals[mate].gamma),
              {Symbol::Kind::a_star, ctx.rtag[ml], a2, -1, -1});
      }
    } else {
      out.kind = SonsAnalysis::Case::even_u0;
    }
  } else {  // norfB cases
    int k = (lev - 1) / 2;
    if (ctx.hj[ml] == k) {
      const auto& hclass = ctx.green.h_classes[ctx.green.h_class[ml]];
      for (ElementId r : hclass) {
        LChain zeta = replace_leftmost(sigma, r);
        ElementId xl = eps_term(zeta, zeta.length());
        place(zeta,
              {Symbol::Kind::g_star, ctx.rtag[ml], -1, ctx.rees.coords[xl][1], -1});
      }
      if (ctx.w[ml]) {
        out.kind = SonsAnalysis::Case::odd_u2;
        for (ElementId r : hclass) {
          for (int q : ctx.locals[r].q) {
            LChain zeta = prepend(replace_leftmost(sigma, r),
                                  ctx.rees.canonical_11b[q]);
            ElementId xl = eps_term(zeta, len);
            ElementId xl1 = eps_term(zeta, len + 1);
            place(zeta, {Symbol::Kind::g_q, ctx.rtag[ml], -1,
                         ctx.rees.coords[xl][1], ctx.green.l_class[xl1]});
          }
        }
      } else {
        out.kind = SonsAnalysis::Case::odd_u3;
        if (!ctx.u[ml][3]) {
          throw std::logic_error("odd vertex with several sons matches no U case");
        }
      }
    } else {
      // minimal representation forces h_J(m_{l-1}) = k with m_{l-1} not in W
      if (len < 1) {
        throw std::logic_error("odd vertex with several sons matches no U case");
      }
      ElementId ml1 = sigma.terms[1];
      if (ctx.hj[ml1] != k || ctx.w[ml1] || !ctx.u[ml1][4]) {
        throw std::logic_error("odd vertex with several sons matches no U case");
      }
      out.kind = SonsAnalysis::Case::odd_u4;
      LChain tail = drop_leftmost(sigma);  // (m_{l-1} < ... < m_0)
      const auto& hclass = ctx.green.h_classes[ctx.green.h_class[ml1]];
      for (ElementId r : hclass) {
        for (int q : ctx.locals[r].q) {
          LChain zeta = prepend(replace_leftmost(tail, r),
                                ctx.rees.canonical_11b[q]);
          ElementId xl1 = eps_term(zeta, len - 1);
          ElementId xl = eps_term(zeta, len);
          place(zeta, {Symbol::Kind::g_q, ctx.rtag[ml1], -1,
                       ctx.rees.coords[xl1][1], ctx.green.l_class[xl]});
        }
      }
    }
  }

  const auto& sons = t.verts[v].children;
  if (labels.size() != sons.size()) {
    throw std::logic_error("son analysis does not cover the sons exactly");
  }
  for (int w : sons) {
    auto it = labels.find(w);
    if (it == labels.end()) {
      throw std::logic_error("son analysis does not cover the sons exactly");
    }
    out.labeled.emplace_back(w, it->second);
  }
  return out;
}

Labeling label_tree(const ZeigerContext& ctx, const RhodesMonoid& rhy,
                    const ChiswellTree& tree, const std::vector<Alphabet>& alphabets) {
  const RootedTree& t = tree.chi.tree;
  Labeling lab;
  lab.f.assign(t.size(), -1);
  for (int v = 0; v < t.size(); ++v) {
    const auto& sons = t.verts[v].children;
    if (sons.empty()) continue;
    int lev = t.depth_of(v) + 1;
    if (sons.size() == 1) {
      lab.f[sons[0]] = alphabets[lev - 1].at(Symbol{});
      continue;
    }
    SonsAnalysis analysis = analyze_sons(ctx, rhy, tree, v);
    for (auto& [w, sym] : analysis.labeled) {
      lab.f[w] = alphabets[lev - 1].at(sym);
    }
  }
  for (int v = 0; v < t.size(); ++v) {
    std::set<int> seen;
    for (int w : t.verts[v].children) {
      if (lab.f[w] < 0 || !seen.insert(lab.f[w]).second) {
        throw std::logic_error("labeling is not total and locally injective");
      }
    }
  }
  return lab;
}

// ----- the embedding --------------------------------------------------------

namespace {

std::vector<int> alphabet_sizes(const std::vector<Alphabet>& alphabets) {
  std::vector<int> out;
  for (const Alphabet& x : alphabets) out.push_back(x.size());
  return out;
}

std::vector<std::vector<int>> close_locals(std::vector<std::vector<int>> gen) {
  std::sort(gen.begin(), gen.end());
  gen.erase(std::unique(gen.begin(), gen.end()), gen.end());
  std::set<std::vector<int>> seen(gen.begin(), gen.end());
  std::vector<std::vector<int>> all(gen.begin(), gen.end());
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = 0; j < gen.size(); ++j) {
      for (int order = 0; order < 2; ++order) {
        const auto& f = order ? gen[j] : all[i];
        const auto& g = order ? all[i] : gen[j];
        std::vector<int> h(f.size(), -1);
        for (size_t x = 0; x < f.size(); ++x) {
          if (f[x] >= 0) h[x] = g[f[x]];
        }
        if (seen.insert(h).second) all.push_back(std::move(h));
      }
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

ZeigerData zeiger_embed(const FiniteMonoid& m) {
  ZeigerData zd;
  zd.ctx = make_zeiger_context(m);
  zd.rhy = build_rh_y(zd.ctx.mi, zd.ctx.y);
  zd.h = h_table(zd.rhy, zd.ctx.w, zd.ctx.hj);
  const FiniteMonoid& rmon = zd.rhy.monoid;
  zd.tree = chiswell_build(zd.h, zd.rhy.one(),
                           [&rmon](int a, int b) { return rmon.mul(a, b); });
  if (zd.tree.chi.tree.depth() != zd.ctx.delta) {
    throw std::logic_error("H tree depth differs from delta");
  }
  zd.alphabets = build_alphabets(zd.ctx);
  zd.label = label_tree(zd.ctx, zd.rhy, zd.tree, zd.alphabets);

  const RootedTree& t = zd.tree.chi.tree;
  zd.psi_tuple.resize(t.size());
  std::map<std::vector<int>, int> psi_index;
  for (int v = 0; v < t.size(); ++v) {
    if (v == t.root) continue;
    zd.psi_tuple[v] = zd.psi_tuple[t.father(v)];
    zd.psi_tuple[v].push_back(zd.label.f[v]);
    if (!psi_index.emplace(zd.psi_tuple[v], v).second) {
      throw std::logic_error("psi is not one-to-one");
    }
  }

  auto sizes = alphabet_sizes(zd.alphabets);
  for (int s = 0; s < zd.rhy.size(); ++s) {
    if (s == zd.rhy.one()) {
      zd.phi.push_back(seq_identity_full(sizes));
      continue;
    }
    SequentialMap f;
    f.levels = zd.ctx.delta;
    const auto& act = zd.tree.chi.action[s];
    for (int v = 0; v < t.size(); ++v) {
      if (v == t.root) continue;
      f.entries.emplace(zd.psi_tuple[v], zd.psi_tuple[act[v]]);
    }
    for (int u = 0; u < t.size(); ++u) {
      int lev = t.depth_of(u) + 1;
      if (lev > zd.ctx.delta) continue;
      std::set<int> images;
      for (int w : t.verts[u].children) images.insert(act[w]);
      if (images.size() <= 1) continue;
      std::vector<int> base = zd.psi_tuple[u];
      std::vector<int> image_base = zd.psi_tuple[act[u]];
      base.push_back(-1);
      image_base.push_back(-1);
      for (int x = 0; x < sizes[lev - 1]; ++x) {
        base.back() = x;
        if (f.entries.count(base)) continue;
        image_base.back() = x;
        f.entries.emplace(base, image_base);
      }
    }
    zd.phi.push_back(std::move(f));
  }

  // generated local maps per level, then their closures
  zd.generated_locals.resize(zd.ctx.delta);
  for (int lev = 1; lev <= zd.ctx.delta; ++lev) {
    std::set<std::vector<int>> locals;
    for (const SequentialMap& f : zd.phi) {
      if (lev == 1) {
        locals.insert(local_component(f, {}, sizes[0]));
      } else {
        for (const auto& [tpl, img] : f.entries) {
          if (static_cast<int>(tpl.size()) == lev - 1) {
            locals.insert(local_component(f, tpl, sizes[lev - 1]));
          }
        }
      }
    }
    zd.generated_locals[lev - 1].assign(locals.begin(), locals.end());
    zd.local_monoids.push_back(close_locals(zd.generated_locals[lev - 1]));
  }
  return zd;
}

// ----- the length table of a wreath product ---------------------------------

LengthTable wreath_length_table(const std::vector<SequentialMap>& elems, int levels) {
  int n = static_cast<int>(elems.size());
  // canonical id per level slice, so restriction comparisons are O(levels)
  std::vector<std::vector<int>> slice_id(n, std::vector<int>(levels + 1, 0));
  for (int lev = 1; lev <= levels; ++lev) {
    std::map<std::vector<std::pair<std::vector<int>, std::vector<int>>>, int> reg;
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<std::vector<int>, std::vector<int>>> slice;
      for (const auto& [t, u] : elems[i].entries) {
        if (static_cast<int>(t.size()) == lev) slice.emplace_back(t, u);
      }
      auto it = reg.find(slice);
      if (it == reg.end()) it = reg.emplace(std::move(slice), static_cast<int>(reg.size())).first;
      slice_id[i][lev] = it->second;
    }
  }
  LengthTable t = LengthTable::zero(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int d = 0;
      while (d < levels && slice_id[i][d + 1] == slice_id[j][d + 1]) ++d;
      t.set(i, j, ExtNat{d});
    }
  }
  return t;
}

// ----- verification ----------------------------------------------------------

namespace {

bool is_total(const std::vector<int>& f) {
  return std::find(f.begin(), f.end(), -1) == f.end();
}

bool is_permutation(const std::vector<int>& f) {
  if (!is_total(f)) return false;
  std::vector<bool> hit(f.size(), false);
  for (int v : f) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

int image_size(const std::vector<int>& f) {
  std::set<int> img;
  for (int v : f) {
    if (v >= 0) img.insert(v);
  }
  return static_cast<int>(img.size());
}

bool is_full_identity(const std::vector<int>& f) {
  for (size_t x = 0; x < f.size(); ++x) {
    if (f[x] != static_cast<int>(x)) return false;
  }
  return true;
}

}  // namespace

std::string EmbedReport::pretty() const {
  auto line = [](const char* name, const EmbedCheck& c) {
    std::string s = std::string(name) + ": " + (c.ok ? "PASS" : "FAIL");
    if (!c.detail.empty()) s += "  (" + c.detail + ")";
    return s + "\n";
  };
  std::string out;
  out += line("homomorphism", homomorphism);
  out += line("injectivity", injective);
  out += line("local monoid shapes", locals);
  out += line("Zeiger", zeiger);
  if (recover_skipped) {
    out += "recover: SKIPPED\n";
  } else {
    out += line("recover", recover);
  }
  for (const std::string& s : permutation_components) {
    out += "  " + s + "\n";
  }
  return out;
}

EmbedReport verify_embedding(const ZeigerData& zd, const VerifyOptions& opts) {
  EmbedReport rep;
  rep.recover_skipped = opts.skip_recover;
  const auto sizes = alphabet_sizes(zd.alphabets);
  int n = zd.rhy.size();

  // (a) homomorphism
  if (opts.all_pairs) {
    for (int i = 0; i < n && rep.homomorphism.ok; ++i) {
      for (int j = 0; j < n; ++j) {
        if (seq_compose(zd.phi[i], zd.phi[j]) != zd.phi[zd.rhy.monoid.mul(i, j)]) {
          rep.homomorphism = {false, "phi(sigma tau) != phi(sigma) phi(tau) at (" +
                                         std::to_string(i) + ", " + std::to_string(j) +
                                         ")"};
          break;
        }
      }
    }
  } else {
    for (int i = 0; i < n && rep.homomorphism.ok; ++i) {
      for (auto& [label, gidx] : zd.rhy.monoid.generators) {
        if (seq_compose(zd.phi[i], zd.phi[gidx]) !=
            zd.phi[zd.rhy.monoid.mul(i, gidx)]) {
          rep.homomorphism = {false, "phi(sigma y) != phi(sigma) phi(y) at (" +
                                         std::to_string(i) + ", " + label + ")"};
          break;
        }
      }
    }
  }

  // (b) injectivity, via the wreath length table (strictness = injectivity)
  LengthTable wt = wreath_length_table(zd.phi, zd.ctx.delta);
  for (int i = 0; i < n && rep.injective.ok; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && wt.at(i, j).raw == zd.ctx.delta) {
        rep.injective = {false, "phi collapses the pair (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")"};
        break;
      }
    }
  }

  // (c) local monoid shapes, the single-block structure of generated
  // permutations, and the per-R-class direct sum
  for (int lev = 1; lev <= zd.ctx.delta && rep.locals.ok; ++lev) {
    const Alphabet& x = zd.alphabets[lev - 1];
    bool odd = lev % 2 == 1;
    // per R-tag translation groups at even levels
    std::map<ElementId, std::set<int>> translations;
    auto block_structure = [&](const std::vector<int>& f,
                               std::map<ElementId, int>& per_tag) {
      // f must fix down symbols and act per R-tag as right multiplication
      for (int s = 0; s < x.size(); ++s) {
        if (f[s] == s) continue;
        const Symbol& sym = x.symbols[s];
        if (sym.kind == Symbol::Kind::down) return false;
        if (per_tag.find(sym.rtag) == per_tag.end()) per_tag[sym.rtag] = -1;
      }
      for (auto& [tag, g0] : per_tag) {
        const ReesView& view = zd.ctx.rees.views[zd.ctx.green.j_class[tag]];
        // read g0 off any symbol of the block, then verify the whole block
        for (int s = 0; s < x.size(); ++s) {
          const Symbol& sym = x.symbols[s];
          if (sym.kind == Symbol::Kind::down || sym.rtag != tag) continue;
          Symbol img = x.symbols[f[s]];
          if (img.kind != sym.kind || img.rtag != tag || img.a != sym.a ||
              img.q != sym.q) {
            return false;
          }
          int found = -1;
          for (int c = 0; c < view.group_size(); ++c) {
            if (view.gtable[sym.g][c] == img.g) {
              found = c;
              break;
            }
          }
          if (found < 0) return false;
          if (g0 < 0) {
            g0 = found;
          } else if (g0 != found) {
            return false;
          }
        }
      }
      return true;
    };

    for (const auto& f : zd.local_monoids[lev - 1]) {
      if (odd) {
        if (!(is_full_identity(f) || image_size(f) <= 1)) {
          rep.locals = {false, "odd level " + std::to_string(lev) +
                                   " local map outside {Id} u K"};
          break;
        }
      } else {
        if (image_size(f) <= 1) continue;
        if (!is_permutation(f)) {
          rep.locals = {false, "even level " + std::to_string(lev) +
                                   " local map outside S u K"};
          break;
        }
        std::map<ElementId, int> per_tag;
        if (!block_structure(f, per_tag)) {
          rep.locals = {false, "even level " + std::to_string(lev) +
                                   " permutation is not blockwise right translation"};
          break;
        }
        for (auto& [tag, g0] : per_tag) translations[tag].insert(g0);
      }
    }
    if (!rep.locals.ok) break;
    if (!odd) {
      // generated permutations move at most one block
      for (const auto& f : zd.generated_locals[lev - 1]) {
        if (image_size(f) <= 1 || !is_permutation(f)) continue;
        std::map<ElementId, int> per_tag;
        if (!block_structure(f, per_tag) || per_tag.size() > 1) {
          rep.locals = {false, "generated local permutation at level " +
                                   std::to_string(lev) + " moves several blocks"};
          break;
        }
      }
      if (!rep.locals.ok) break;
      // each block translation set is a subgroup of the Schutzenberger
      // group, and the permutation part is their direct sum
      size_t expect = 1;
      for (auto& [tag, set] : translations) {
        const ReesView& view = zd.ctx.rees.views[zd.ctx.green.j_class[tag]];
        std::set<int> grp = set;
        grp.insert(0);
        for (int g1 : grp) {
          for (int g2 : grp) {
            if (!grp.count(view.gtable[g1][g2])) {
              rep.locals = {false, "translations at level " + std::to_string(lev) +
                                       " do not form a group"};
            }
          }
        }
        expect *= grp.size();
        if (grp.size() > 1) {
          rep.permutation_components.push_back(
              "level " + std::to_string(lev) + ", R-class of " +
              zd.ctx.mi.name(tag) + ": group of order " + std::to_string(grp.size()));
        }
      }
      if (rep.locals.ok && sizes[lev - 1] >= 2) {
        size_t total_perms = 0;
        for (const auto& f : zd.local_monoids[lev - 1]) {
          if (is_permutation(f)) ++total_perms;
        }
        if (total_perms != expect) {
          rep.locals = {false, "permutation part at level " + std::to_string(lev) +
                                   " is not the direct sum of its block groups (" +
                                   std::to_string(total_perms) + " vs " +
                                   std::to_string(expect) + ")"};
        }
      }
    }
  }

  // (d) the Zeiger property
  for (int s = 0; s < n && rep.zeiger.ok; ++s) {
    const SequentialMap& f = zd.phi[s];
    for (const auto& [p, img] : f.entries) {
      int plen = static_cast<int>(p.size());
      if (plen % 2 == 0 || plen + 1 > zd.ctx.delta) continue;
      int lev = plen + 1;  // even level 2k+2
      if (sizes[lev - 1] < 2) continue;
      auto xi = local_component(f, p, sizes[lev - 1]);
      if (!is_permutation(xi)) continue;
      // deeper local components along this prefix must fix their arguments
      for (const auto& [t, u] : f.entries) {
        if (static_cast<int>(t.size()) < plen + 2) continue;
        if (!std::equal(p.begin(), p.end(), t.begin())) continue;
        if (u.back() != t.back()) {
          rep.zeiger = {false, "non-identity component below a permutation (sigma " +
                                   std::to_string(s) + ")"};
          break;
        }
      }
      if (!rep.zeiger.ok) break;
    }
  }

  // (e) recovery of H_Y from the image
  if (!opts.skip_recover) {
    for (int i = 0; i < n && rep.recover.ok; ++i) {
      for (int j = 0; j < n; ++j) {
        if (wt.at(i, j) != zd.h.at(i, j)) {
          rep.recover = {false, "D(phi_sigma, phi_tau) != H_Y at (" +
                                    std::to_string(i) + ", " + std::to_string(j) + ")"};
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace semitree
