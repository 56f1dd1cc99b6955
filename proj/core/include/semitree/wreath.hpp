#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semitree/tree.hpp"

// Sequential partial maps and wreath products, the Ell <-> wreath
// correspondence on uniform trees, the generic embedding of a faithful
// elliptic action into a product of full partial transformation monoids,
// and the Zeiger-property embedding of Rh_Y(M^I) built from the H-tree.
//
// Tuples live in the stacked space U_i X_i x ... x X_1 and are stored
// bottom-up: t[0] is the level-1 symbol, so truncation drops the back.

namespace semitree {

struct Symbol {
  enum class Kind { down, a_plain, a_star, g_star, g_q };
  Kind kind = Kind::down;
  int rtag = -1;  // canonical m m* element of the R-class, -1 for down
  int a = -1;     // A index
  int g = -1;     // G index
  int q = -1;     // L-class id in Q_{m m*}

  auto operator<=>(const Symbol&) const = default;
};

std::string symbol_to_string(const Symbol& s);

struct Alphabet {
  int level = 0;
  std::vector<Symbol> symbols;
  std::map<Symbol, int> index;

  int add(const Symbol& s);
  int at(const Symbol& s) const;
  int size() const { return static_cast<int>(symbols.size()); }
};

struct SequentialMap {
  int levels = 0;
  std::map<std::vector<int>, std::vector<int>> entries;

  bool operator==(const SequentialMap&) const = default;
  bool defined(const std::vector<int>& t) const { return entries.count(t) > 0; }
};

SequentialMap seq_identity_full(const std::vector<int>& alphabet_sizes);
SequentialMap seq_compose(const SequentialMap& f, const SequentialMap& g);

struct SeqCheck {
  bool ok = true;
  std::string what;
};
SeqCheck check_sequential(const SequentialMap& f, const std::vector<int>& sizes);

// The induced partial self-map of X_i over the given (i-1)-prefix;
// -1 marks undefined points.
std::vector<int> local_component(const SequentialMap& f, const std::vector<int>& prefix,
                                 int alphabet_size);

// ----- Ell(r0, T) <-> wreath product on uniform trees -------------------

// Restriction of an elliptic contraction to the canonical tuple space
// (including the extension to inner levels, which it determines).
SequentialMap ell_to_wreath(const RootedTree& t, const std::vector<int>& vertex_map);
// Domain extension of a full sequential map back to a vertex map.
std::vector<int> wreath_to_ell(const RootedTree& t, const SequentialMap& f);

// ----- pointed wreath products ------------------------------------------

struct PointedComponent {
  int size = 0;   // |X_i|
  int point = 0;  // x_i
  std::vector<std::vector<int>> maps;  // a full transformation monoid on X_i
};

struct PointedWreathTree {
  EllipticMTree chi;
  std::vector<SequentialMap> elements;
  std::vector<std::vector<int>> table;
  int identity = -1;

  int mul(int a, int b) const { return table[a][b]; }
};

// The faithful elliptic tree of M_l o ... o M_1 over T(|X_l|, ..., |X_1|)
// with base ray (x_l, ..., x_1).  Components are given deepest level first
// and must act transitively on their points.
PointedWreathTree pointed_wreath_tree(const std::vector<PointedComponent>& comps);

// ----- generic embedding (faithful action + locally injective labels) ---

struct Labeling {
  std::vector<int> f;  // per vertex: symbol index at its level; root is -1
};

struct GenericEmbedding {
  std::vector<int> alphabet_sizes;
  // psi[0] is the adjoined identity acting as the full identity map;
  // psi[1 + m] realizes element m of the acting monoid.
  std::vector<SequentialMap> psi;
};

GenericEmbedding generic_embed(const EllipticMTree& chi,
                               const std::vector<int>& alphabet_sizes,
                               const Labeling& f);

// ----- the Zeiger-property embedding of Rh_Y(M^I) -----------------------

struct ZeigerContext {
  FiniteMonoid mi;  // M^I
  GreenData green;
  std::vector<int> hj;
  std::vector<bool> w;
  ReesCoords rees;
  StarSharp ss;
  std::vector<ElementId> y;          // generator elements inside mi
  std::vector<LocalSets> locals;     // per element
  std::vector<ElementId> rtag;       // m m* per element
  // U_0(k)..U_4(k) membership at k = hj[m]
  std::vector<std::array<bool, 5>> u;
  int delta = 0;                     // 2 + 2 sup h_J over M
};

// All of the paper's section 7/8 element data for M^I, Y = generators of m.
ZeigerContext make_zeiger_context(const FiniteMonoid& m);

// X_1 .. X_delta; unions over U-sets are tagged per R-class.
std::vector<Alphabet> build_alphabets(const ZeigerContext& ctx);

// Case analysis of the sons of a tree vertex with several sons: which
// U-case applies and the label each son receives.
struct SonsAnalysis {
  enum class Case { even_u0, even_u1, odd_u2, odd_u3, odd_u4 };
  Case kind;
  std::vector<std::pair<int, Symbol>> labeled;  // (son vertex, symbol)
};
SonsAnalysis analyze_sons(const ZeigerContext& ctx, const RhodesMonoid& rhy,
                          const ChiswellTree& tree, int v);

// Labels per the single-son / U-set cases; total and locally injective.
Labeling label_tree(const ZeigerContext& ctx, const RhodesMonoid& rhy,
                    const ChiswellTree& tree, const std::vector<Alphabet>& alphabets);

struct ZeigerData {
  ZeigerContext ctx;
  RhodesMonoid rhy;
  LengthTable h;
  ChiswellTree tree;
  std::vector<Alphabet> alphabets;
  Labeling label;
  std::vector<std::vector<int>> psi_tuple;  // per vertex (root: empty)
  std::vector<SequentialMap> phi;           // per Rh_Y element
  // per level (1-based -> index 0): the local maps of the phi, and their
  // closure under composition M_i; maps are vectors over X_i, -1 undefined
  std::vector<std::vector<std::vector<int>>> generated_locals;
  std::vector<std::vector<std::vector<int>>> local_monoids;
};

// The full pipeline: M^I, Green data, coordinates, Rh_Y, H_Y, Chiswell
// tree, alphabets, labeling and the embedding phi.
ZeigerData zeiger_embed(const FiniteMonoid& m);

LengthTable wreath_length_table(const std::vector<SequentialMap>& elems, int levels);

struct EmbedCheck {
  bool ok = true;
  std::string detail;
};

struct EmbedReport {
  EmbedCheck homomorphism, injective, locals, zeiger, recover;
  bool recover_skipped = false;
  std::vector<std::string> permutation_components;

  bool all_pass() const {
    return homomorphism.ok && injective.ok && locals.ok && zeiger.ok &&
           (recover_skipped || recover.ok);
  }
  std::string pretty() const;
};

struct VerifyOptions {
  bool skip_recover = false;
  // verify the homomorphism over all ordered pairs, or only against the
  // generators (which extends to all pairs by induction)
  bool all_pairs = true;
};

EmbedReport verify_embedding(const ZeigerData& zd, const VerifyOptions& opts = {});

}  // namespace semitree
