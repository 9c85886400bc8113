/*
  Worm diagrams: t worms of lengths 1..t tiling the staircase triangle
  {(x,y) : x,y >= 0, x+y <= t-1}.  Worm k ends (vertex t) in the cell
  (k-1, t-k); walking from the vertex-(v+1) cell to the vertex-v cell moves
  left for 'A' and down for 'B'.  A diagram is the same data as a full
  exceptional sequence and as its start permutation.
*/

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "auslander/perm.hpp"
#include "auslander/thin.hpp"

namespace auslander {

struct WormDiagram {
    int t = 1;
    std::vector<ThinModule> worms;  // worms[k-1] is worm k, with end = t

    const ThinModule& worm(int k) const { return worms[k - 1]; }
    bool operator==(const WormDiagram& o) const { return t == o.t && worms == o.worms; }
};

struct Worm {
    ThinModule thin;
    std::pair<int, int> head;  // grid cell of vertex t
    int mu_alpha = 0;          // consecutive forward maps ending in vertex t
    int mu_beta = 0;           // consecutive backward maps out of vertex t
};

Worm worm_data(const WormDiagram& d, int k);

// cells of worm k, from the vertex-t cell down to the start vertex cell
std::vector<std::pair<int, int>> worm_cells(const WormDiagram& d, int k);

// Geometric validity: distinct lengths 1..t, cells inside the triangle,
// disjoint and exhaustive.
bool diagram_valid(const WormDiagram& d);

Permutation sigma(const WormDiagram& d);
Permutation lambda_perm(const WormDiagram& d);
int f_count(const WormDiagram& d);

WormDiagram diagram_from_permutation(const Permutation& s);
std::vector<WormDiagram> enumerate_diagrams(int t);

std::vector<Representation> diagram_to_sequence(const WormDiagram& d);
bool verify_exceptional_sequence(const std::vector<Representation>& seq);

// Surjection onto an indecomposable thin module, as a deterministic
// combination of hom basis elements; nullopt when none exists.
std::optional<Morphism> find_surjection_onto_thin(const Representation& m, const ThinModule& w);
std::optional<Morphism> find_injection_of_thin(const ThinModule& w, const Representation& m);

// F^1 c F^2 c ... c F^t = P(t) with rank F^l = l and F^l / F^{l-1}
// isomorphic to worm t+1-l.  layers[l-1] = F^l; includes[l-1] embeds F^l
// into F^{l+1} (the last entry is the identity of P(t)).
struct Filtration {
    std::vector<Representation> layers;
    std::vector<Morphism> includes;
};

std::optional<Filtration> build_filtration(const WormDiagram& d);

}  // namespace auslander
