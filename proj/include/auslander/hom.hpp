/*
  Hom and Ext via the three-term complex
      C0 = (+) Hom(M_i, N_i)
      C1 = (+)_{i>=2} Hom(M_i, N_{i-1}) (+) Hom(M_{i-1}, N_i)
      C2 = (+)_{i<t} Hom(M_i, N_i)
  whose cohomology computes Hom, Ext^1, Ext^2.  Blocks are ordered by vertex,
  and inside C1 the (M_i -> N_{i-1}) block precedes (M_{i-1} -> N_i).
*/

#pragma once

#include <vector>

#include "auslander/algebra.hpp"

namespace auslander {

struct ExtTriple {
    int hom = 0;
    int ext1 = 0;
    int ext2 = 0;
    bool operator==(const ExtTriple& o) const { return hom == o.hom && ext1 == o.ext1 && ext2 == o.ext2; }
};

struct HomComplex {
    int t = 1;
    int dim0 = 0, dim1 = 0, dim2 = 0;
    QMat d0;  // dim1 x dim0
    QMat d1;  // dim2 x dim1
    std::vector<int> block0_offset;  // offset of the vertex-v block of C0, v = 1..t
    std::vector<int> m_dims, n_dims;
};

HomComplex hom_complex(const Representation& m, const Representation& n);

ExtTriple ext_dims(const Representation& m, const Representation& n);

long euler_pairing(const std::vector<int>& u, const std::vector<int>& v);
long quadratic_form(const std::vector<int>& u);

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n);

// Deterministic combination of basis morphisms whose component is nonzero at
// every listed vertex; nullopt when no combination works.
std::optional<Morphism> find_combination_nonzero_at(const std::vector<Morphism>& basis,
                                                    const std::vector<int>& verts, const Representation& src,
                                                    const Representation& tgt);

struct InequalityReport {
    int hom_mn = 0;    // hom(M, N)
    int ext2_nm = 0;   // ext^2(N, M)
    int rank_m = 0, rank_n = 0;
    bool dominance = false;        // hom(M,N) >= ext^2(N,M)
    bool equality = false;         // hom(M,N) == ext^2(N,M)
    bool rank_zero_implies = false;  // rk M = 0 or rk N = 0  =>  equality
    bool equality_implies = false;   // converse; fails for some rank-1 pairs, reported only
    bool hom_two_needs_ext = false;  // rk M = rk N = 1 and hom >= 2  =>  ext^2(N,M) >= 1
};

InequalityReport check_inequalities(const Representation& m, const Representation& n);

}  // namespace auslander
