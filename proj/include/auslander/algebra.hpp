/*
  The bound quiver algebra with t vertices, forward arrows a(v): v -> v+1 and
  backward arrows b(v): v+1 -> v, subject to b(1)a(1) = 0 and
  a(v-1)b(v-1) = b(v)a(v) at the middle vertices.  Representations carry one
  exact-rational matrix per arrow; all operations are pure.
*/

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "auslander/qmat.hpp"

namespace auslander {

struct QuiverAlgebra {
    int t = 1;
    bool operator==(const QuiverAlgebra& o) const { return t == o.t; }
};

QuiverAlgebra make_algebra(int t);
inline int arrow_count(const QuiverAlgebra& alg) { return 2 * alg.t - 2; }
int relation_count(const QuiverAlgebra& alg);

struct Representation {
    QuiverAlgebra algebra;
    std::vector<int> dims;    // dims[v-1] = dim at vertex v
    std::vector<QMat> alpha;  // alpha[v-1]: vertex v -> v+1, for v = 1..t-1
    std::vector<QMat> beta;   // beta[v-1]:  vertex v+1 -> v, for v = 1..t-1

    int t() const { return algebra.t; }
    int dim(int v) const { return dims[v - 1]; }
    const QMat& a(int v) const { return alpha[v - 1]; }
    const QMat& b(int v) const { return beta[v - 1]; }
    int total_dim() const;
    bool operator==(const Representation& o) const;
};

// All-zero representation with the given dimension vector.
Representation zero_padded(const QuiverAlgebra& alg, const std::vector<int>& dims);

bool shapes_valid(const Representation& m);
bool check_relations(const Representation& m);

Representation simple(const QuiverAlgebra& alg, int i);
Representation projective(const QuiverAlgebra& alg, int i);
Representation injective(const QuiverAlgebra& alg, int i);
Representation delta(const QuiverAlgebra& alg, int i);
Representation nabla(const QuiverAlgebra& alg, int i);

int rank(const Representation& m);

Representation direct_sum(const Representation& x, const Representation& y);

// Contravariant duality: transposes all matrices and swaps the two arrow
// families.  Sends projective(i) to injective(i) and fixes the simples.
Representation dual(const Representation& m);

struct Morphism {
    Representation source;
    Representation target;
    std::vector<QMat> comps;  // comps[v-1]: source_v -> target_v

    const QMat& c(int v) const { return comps[v - 1]; }
};

bool is_morphism(const Morphism& f);
Morphism identity_morphism(const Representation& m);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
bool is_injective_morphism(const Morphism& f);
bool is_surjective_morphism(const Morphism& f);

// Kernel as an explicit subrepresentation; the returned morphism is the
// inclusion into f's source.
struct SubRep {
    Representation rep;
    Morphism include;
};
SubRep kernel_subrep(const Morphism& f);

// Quotient of m by the image of the (injective) inclusion.
struct QuotRep {
    Representation rep;
    Morphism project;
};
QuotRep quotient_rep(const Representation& m, const Morphism& include);

}  // namespace auslander
