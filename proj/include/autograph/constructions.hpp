#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "autograph/graph.hpp"
#include "autograph/perm_group.hpp"

namespace autograph {

// Auxiliary graphs found by find_with_aut and frozen as graph6:
// Aut = C2 x C2 x C2 on 6 vertices, Aut = C3 on 9 vertices.
inline constexpr std::string_view kC2Cubed6Graph6 = "E}??";
inline constexpr std::string_view kC3Nine9Graph6 = "H|pcaOc";

Graph c2_cubed_graph();
Graph c3_graph();

// Babai's two-layer graph of a non-cyclic group. Vertex x of the first layer
// is element x of g; vertex |g| + x is its copy x'. Left multiplication by
// every group element is an automorphism.
struct BabaiParts {
  std::vector<int> generators;  // h_1..h_d
  Graph x1;                     // edges [g h_i, g h_{i+1}]
  Graph x3;                     // edges [g' h_1', g']
  Graph x2;                     // x3, or its complement when the valencies agree
  Graph x;
};

// Throws ParameterError if g is cyclic or has order < 6, or if h is not a
// minimum-size generating set. An empty h selects minimal_generating_set(g).
BabaiParts babai_parts(const PermGroup& g, const std::vector<int>& h = {});
Graph babai_graph(const PermGroup& g, const std::vector<int>& h = {});

// 10 vertices, 20 edges, Aut = <(1 2)(3 4 5 6)(7 8 9 10)> (labels 1-based).
Graph figure1_c4();

// The three exceptional graphs for the groups G1 (order 16), G2 (order 18)
// and G3 (order 27) of the GRR exception list.
Graph gamma1();
Graph gamma2();
Graph gamma3();
// figure1_c4 plus the Babai graph of Q8; Aut = Q8 x C4.
Graph gamma4();
// Babai graph of Q_{2^r} plus the 6-vertex C2^3 graph; r >= 3.
Graph gamma_r_plus_2(int r);

// The decomposition used for a generalized dicyclic group G = Dic(A, b^2):
// A = X + <y> with b^2 in <y>, |<y>| = 2^r, |X| = k. Gamma1 realizes G/X,
// Gamma2 realizes G/<y>, and the final graph joins T_i to S_i completely.
struct DicyclicParts {
  ElementSet a;
  ElementSet a2;
  ElementSet a2prime;
  int y = 0;
  ElementSet x;
  int b = 0;
  int b2 = 0;
  int r = 0;
  int k = 0;
  Graph gamma1;
  std::vector<int> t1, t2;  // vertices of gamma1
  Graph gamma2;
  std::vector<int> s1, s2;  // vertices of gamma2
  std::vector<std::pair<int, int>> cross;  // in final numbering
  Graph graph;              // gamma1 vertices first, then gamma2
};

// HypothesisError with clause "dicyclic" when g is not generalized
// dicyclic, "i" for generalized quaternion groups, "ii" for Q x C2 and
// Q x C2^3, and "iii" for Dic3, Dic5, Dic6 and G16. LimitError when the
// GRR needed for G/<y> is beyond the search limit.
DicyclicParts dicyclic_parts(const PermGroup& g);
Graph dicyclic_graph(const PermGroup& g);
// max(2|G|/|X|, 10) + (1 + floor(5/k)) |G| / 2^r
int dicyclic_vertex_formula(int order, int r, int k);

// Babai graph of Q_{2^r} plus K2; r >= 3.
Graph q2r_c2_graph(int r);

Graph g16_graph();
// q in {3, 5}.
Graph dicq_graph(int q);
Graph dic6_graph();
// Babai graph of Q8 plus the 9-vertex C3 graph.
Graph q8c3_graph();
Graph gprime16_graph();
Graph a4_graph();

}  // namespace autograph
