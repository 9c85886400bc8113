/*
  Resolution-based Ext computations, independent of the hom-complex route:
  Hom spaces come from solving the intertwiner equations directly, Ext^1 and
  Ext^2 from projective covers and syzygies.
*/

#pragma once

#include <vector>

#include "auslander/algebra.hpp"
#include "auslander/hom.hpp"

namespace auslander {

struct ProjCover {
    std::vector<int> multiplicities;  // multiplicities[j-1] = number of P(j) summands
    Representation cover;
    Morphism onto;
};

ProjCover projective_cover(const Representation& m);
SubRep syzygy(const ProjCover& pc);

// Basis of Hom(m, n) by solving the commuting-square equations; shares no
// code with hom_complex.
std::vector<Morphism> hom_basis_direct(const Representation& m, const Representation& n);
int hom_dim_direct(const Representation& m, const Representation& n);

ExtTriple ext_dims_oracle(const Representation& m, const Representation& n);

// gl.dim <= 2 witness: the second syzygy is projective.
bool third_syzygy_vanishes(const Representation& m);

// Exactness and shape of the projective resolutions of all simples and of
// the injective resolutions of the rank-zero simples.
bool check_cy_resolutions(int t);

}  // namespace auslander
