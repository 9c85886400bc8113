#include "auslander/worms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "auslander/hom.hpp"

namespace auslander {

Worm worm_data(const WormDiagram& d, int k) {
    Worm w;
    w.thin = d.worm(k);
    w.head = {k - 1, d.t - k};
    const std::string& word = w.thin.word;
    for (auto it = word.rbegin(); it != word.rend() && *it == 'A'; ++it) ++w.mu_alpha;
    for (auto it = word.rbegin(); it != word.rend() && *it == 'B'; ++it) ++w.mu_beta;
    return w;
}

std::vector<std::pair<int, int>> worm_cells(const WormDiagram& d, int k) {
    const ThinModule& w = d.worm(k);
    int x = k - 1, y = d.t - k;
    std::vector<std::pair<int, int>> cells{{x, y}};
    for (int v = d.t - 1; v >= w.start; --v) {
        if (w.letter(v) == 'A')
            --x;
        else
            --y;
        cells.push_back({x, y});
    }
    return cells;
}

bool diagram_valid(const WormDiagram& d) {
    if (int(d.worms.size()) != d.t) return false;
    std::set<int> lengths;
    std::set<std::pair<int, int>> cells;
    for (int k = 1; k <= d.t; ++k) {
        const ThinModule& w = d.worm(k);
        if (!w.valid() || w.t != d.t || w.end != d.t) return false;
        lengths.insert(w.length());
        for (auto [x, y] : worm_cells(d, k)) {
            if (x < 0 || y < 0 || x + y > d.t - 1) return false;
            if (!cells.insert({x, y}).second) return false;
        }
    }
    return int(lengths.size()) == d.t && int(cells.size()) == d.t * (d.t + 1) / 2;
}

Permutation sigma(const WormDiagram& d) {
    std::vector<int> v(d.t);
    for (int k = 1; k <= d.t; ++k) v[k - 1] = d.worm(k).start;
    return Permutation(v);
}

Permutation lambda_perm(const WormDiagram& d) {
    std::vector<int> v(d.t);
    for (int k = 1; k <= d.t; ++k) v[k - 1] = d.worm(k).length();
    return Permutation(v);
}

int f_count(const WormDiagram& d) {
    int f = 0;
    for (const ThinModule& w : d.worms)
        f += int(std::count(w.word.begin(), w.word.end(), 'B'));
    return f;
}

// Worm k's edge between vertices v and v+1 is vertical exactly when worm k
// still runs below the worm that stops on the diagonal of vertex v+1, i.e.
// when k precedes the worm starting at v+1.
WormDiagram diagram_from_permutation(const Permutation& s) {
    int t = s.n();
    Permutation inv = s.inverse();
    WormDiagram d{t, {}};
    for (int k = 1; k <= t; ++k) {
        int start = s(k);
        std::string word;
        for (int v = start; v <= t - 1; ++v) word += (k < inv(v + 1)) ? 'B' : 'A';
        d.worms.push_back(ThinModule{t, start, t, word});
    }
    return d;
}

std::vector<WormDiagram> enumerate_diagrams(int t) {
    std::vector<WormDiagram> out;
    for (const Permutation& p : all_permutations(t)) out.push_back(diagram_from_permutation(p));
    return out;
}

std::vector<Representation> diagram_to_sequence(const WormDiagram& d) {
    std::vector<Representation> seq;
    for (const ThinModule& w : d.worms) seq.push_back(thin_rep(w));
    return seq;
}

bool verify_exceptional_sequence(const std::vector<Representation>& seq) {
    if (seq.empty()) return false;
    int t = seq[0].algebra.t;
    if (int(seq.size()) != t) return false;
    for (const Representation& e : seq)
        if (!(ext_dims(e, e) == ExtTriple{1, 0, 0})) return false;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            if (!(ext_dims(seq[i], seq[j]) == ExtTriple{1, 1, 0})) return false;
            if (!(ext_dims(seq[j], seq[i]) == ExtTriple{0, 0, 0})) return false;
        }
    QMat classes(t, t);
    for (int i = 0; i < t; ++i)
        for (int v = 0; v < t; ++v) classes.at(i, v) = seq[i].dims[v];
    Rat det = determinant(classes);
    return det == 1 || det == -1;  // the classes span the full lattice
}

std::optional<Morphism> find_surjection_onto_thin(const Representation& m, const ThinModule& w) {
    Representation wr = thin_rep(w);
    std::vector<int> verts;
    for (int v = w.start; v <= w.end; ++v) verts.push_back(v);
    auto f = find_combination_nonzero_at(hom_basis(m, wr), verts, m, wr);
    if (f && !is_surjective_morphism(*f)) return std::nullopt;
    return f;
}

std::optional<Morphism> find_injection_of_thin(const ThinModule& w, const Representation& m) {
    Representation wr = thin_rep(w);
    std::vector<int> verts;
    for (int v = w.start; v <= w.end; ++v) verts.push_back(v);
    auto f = find_combination_nonzero_at(hom_basis(wr, m), verts, wr, m);
    if (f && !is_injective_morphism(*f)) return std::nullopt;
    return f;
}

std::optional<Filtration> build_filtration(const WormDiagram& d) {
    if (!diagram_valid(d)) return std::nullopt;
    int t = d.t;
    Representation g = projective(make_algebra(t), t);
    std::vector<Representation> layers{g};          // F^t, F^{t-1}, ... while stripping
    std::vector<Morphism> includes{identity_morphism(g)};
    for (int k = 1; k <= t - 1; ++k) {
        auto phi = find_surjection_onto_thin(g, d.worm(k));
        if (!phi) return std::nullopt;
        SubRep ker = kernel_subrep(*phi);
        g = ker.rep;
        layers.push_back(g);
        includes.push_back(ker.include);
    }
    auto bottom = thin_canonical_form(g);
    if (!bottom || !(*bottom == d.worm(t))) return std::nullopt;
    Filtration f;
    for (int l = t - 1; l >= 0; --l) {
        f.layers.push_back(layers[l]);
        f.includes.push_back(includes[l]);
    }
    return f;
}

}  // namespace auslander
