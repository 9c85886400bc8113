/*
  The two braid-group actions on worm diagrams: right mutations R_i (right
  multiplication of the start permutation by tau_i) and spherical twists T_i
  (left multiplication), each with its module-level realization, the
  reduction-to-Delta algorithms, spherical-to-S(1) stripping, and the Cayley
  graphs of both actions.
*/

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "auslander/worms.hpp"

namespace auslander {

enum class ActionKind { Mutation, Twist };
enum class TwistCase { O, H, E, HE, Blocked };

bool can_right_mutate(const WormDiagram& d, int i);
WormDiagram right_mutate(const WormDiagram& d, int i);

// The module R E' of the exceptional pair (E', E) with E' ->> E: the worm of
// E' with the backward edge at the start of E flipped forward, certified by
// exhibiting the extension 0 -> E -> R E' -> ker(E' -> E) -> 0.
Representation right_mutate_module(const Representation& e_prime, const Representation& e);

bool can_twist(const WormDiagram& d, int i);
TwistCase twist_case(int i, const ThinModule& w);
WormDiagram twist_diagram(const WormDiagram& d, int i);

// Twist of a thin module along S(i), realized by the case table and certified
// by the short exact sequences it comes from; throws when the twist leaves
// the module category.
Representation twist_module_simple(int i, const Representation& m);

struct ShiftedThin {
    ThinModule thin;
    int shift = 0;
    bool operator==(const ShiftedThin& o) const { return thin == o.thin && shift == o.shift; }
};

// One (inverse) twist on a shifted thin module, for the configurations with a
// thin outcome; anything else throws.
ShiftedThin apply_twist_shifted(int i, const ShiftedThin& obj, bool inverse);

using TwistWord = std::vector<int>;  // +i = T_i, -i = T_i^{-1}, applied left to right

ShiftedThin apply_twist_word(const TwistWord& word, ShiftedThin obj);

// Braid word moving a 2-spherical module to S(1) up to shift.
std::pair<TwistWord, ShiftedThin> strip_spherical(const ThinModule& m);

std::vector<int> reduce_to_delta_by_mutations(const WormDiagram& d);
std::vector<int> reduce_to_delta_by_twists(const WormDiagram& d);

struct CayleyEdge {
    int from = 0, to = 0;  // node indices
    int gen = 0;
    bool operator==(const CayleyEdge& o) const { return from == o.from && to == o.to && gen == o.gen; }
};

struct CayleyGraph {
    int t = 1;
    ActionKind kind = ActionKind::Mutation;
    std::vector<Permutation> nodes;  // start permutations, lexicographic
    std::vector<CayleyEdge> edges;   // ordered by (from, gen)
};

CayleyGraph build_cayley_graph(int t, ActionKind kind, bool parallel = true);

// Module-level action agrees with the combinatorial rewrite, worm by worm.
bool check_action_consistency(const WormDiagram& d, int i, ActionKind kind);

}  // namespace auslander
