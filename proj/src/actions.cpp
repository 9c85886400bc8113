#include "auslander/actions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "auslander/hom.hpp"
#include "auslander/sweep.hpp"

namespace auslander {

bool can_right_mutate(const WormDiagram& d, int i) {
    if (i < 1 || i > d.t - 1) throw std::out_of_range("can_right_mutate: index out of range");
    return d.worm(i).length() > d.worm(i + 1).length();
}

WormDiagram right_mutate(const WormDiagram& d, int i) {
    if (!can_right_mutate(d, i))
        throw std::domain_error("right_mutate: worm " + std::to_string(i) + " is not longer than its successor");
    return diagram_from_permutation(sigma(d).compose(Permutation::transposition(d.t, i)));
}

Representation right_mutate_module(const Representation& e_prime, const Representation& e) {
    auto wp = thin_canonical_form(e_prime), we = thin_canonical_form(e);
    if (!wp || !we || wp->end != wp->t || we->end != we->t)
        throw std::invalid_argument("right_mutate_module: arguments must be exceptional thin modules");
    std::vector<Morphism> maps = hom_basis(e_prime, e);
    if (maps.size() != 1) throw std::domain_error("right_mutate_module: hom dimension is not one");
    if (!is_surjective_morphism(maps[0]))
        throw std::domain_error("right_mutate_module: the nonzero map is not surjective");
    int j = we->start;
    if (j <= wp->start || wp->letter(j - 1) != 'B')
        throw std::logic_error("right_mutate_module: surjection without a backward edge at the target start");

    ThinModule result = *wp;
    result.word[j - 1 - result.start] = 'A';

    // certify 0 -> E -> R E' -> ker -> 0
    SubRep ker = kernel_subrep(maps[0]);
    auto wk = thin_canonical_form(ker.rep);
    if (!wk) throw std::logic_error("right_mutate_module: kernel is not thin");
    Representation x = thin_rep(result);
    auto inj = find_injection_of_thin(*we, x);
    if (!inj) throw std::logic_error("right_mutate_module: target does not embed in the mutation");
    auto coker = thin_canonical_form(quotient_rep(x, *inj).rep);
    if (!coker || !(*coker == *wk)) throw std::logic_error("right_mutate_module: cokernel mismatch");
    return x;
}

bool can_twist(const WormDiagram& d, int i) {
    if (i < 1 || i > d.t - 1) throw std::out_of_range("can_twist: index out of range");
    const ThinModule& w = d.worm(sigma(d).inverse()(i));
    return w.letter(w.start) == 'B';
}

TwistCase twist_case(int i, const ThinModule& w) {
    if (i < 1 || i > w.t - 1) throw std::out_of_range("twist_case: index out of range");
    if (w.end != w.t) throw std::invalid_argument("twist_case: not an exceptional worm");
    if (w.start > i + 1) return TwistCase::O;
    if (w.start == i + 1) return TwistCase::E;
    if (w.start == i) return w.letter(i) == 'B' ? TwistCase::H : TwistCase::Blocked;
    char l = w.letter(i - 1), r = w.letter(i);
    if (l == 'A' && r == 'B') return TwistCase::HE;
    if (l == 'B' && r == 'A') return TwistCase::Blocked;
    return TwistCase::O;
}

WormDiagram twist_diagram(const WormDiagram& d, int i) {
    if (!can_twist(d, i))
        throw std::domain_error("twist_diagram: the worm starting at " + std::to_string(i) +
                                " does not start vertically");
    WormDiagram out{d.t, {}};
    for (const ThinModule& w : d.worms) {
        ThinModule nw = w;
        switch (twist_case(i, w)) {
            case TwistCase::O:
                break;
            case TwistCase::H:
                nw.start += 1;
                nw.word.erase(0, 1);
                break;
            case TwistCase::E:
                nw.start -= 1;
                nw.word.insert(0, 1, 'A');
                break;
            case TwistCase::HE:
                nw.word[i - 1 - nw.start] = 'B';
                nw.word[i - nw.start] = 'A';
                break;
            case TwistCase::Blocked:
                throw std::logic_error("twist_diagram: blocked worm despite vertical start");
        }
        out.worms.push_back(nw);
    }
    if (!(sigma(out) == Permutation::transposition(d.t, i).compose(sigma(d))) || !diagram_valid(out))
        throw std::logic_error("twist_diagram: rewrite disagrees with the permutation action");
    return out;
}

namespace {

// inclusion of the coordinate copy of S(i) sitting inside a thin module
Morphism simple_inclusion(const Representation& m, int i) {
    Representation s = simple(m.algebra, i);
    Morphism f{s, m, {}};
    for (int v = 1; v <= m.algebra.t; ++v) {
        QMat comp(m.dim(v), v == i ? 1 : 0);
        if (v == i) comp.at(0, 0) = 1;
        f.comps.push_back(comp);
    }
    if (!is_morphism(f)) throw std::logic_error("simple_inclusion: coordinate copy is not a submodule");
    return f;
}

std::vector<int> support_of(const Representation& m) {
    std::vector<int> verts;
    for (int v = 1; v <= m.algebra.t; ++v)
        if (m.dim(v) > 0) verts.push_back(v);
    return verts;
}

// certify 0 -> q -> x -> S(i) -> 0 with an explicit embedding
bool extension_by_simple(const Representation& q, const Representation& x, int i) {
    auto inj = find_combination_nonzero_at(hom_basis(q, x), support_of(q), q, x);
    if (!inj || !is_injective_morphism(*inj)) return false;
    auto coker = thin_canonical_form(quotient_rep(x, *inj).rep);
    return coker && coker->start == i && coker->end == i;
}

}  // namespace

Representation twist_module_simple(int i, const Representation& m) {
    auto wm = thin_canonical_form(m);
    if (!wm) throw std::invalid_argument("twist_module_simple: input is not an indecomposable thin module");
    if (i < 1 || i > m.algebra.t - 1) throw std::out_of_range("twist_module_simple: index out of range");
    Representation s = simple(m.algebra, i);
    ExtTriple e = ext_dims(s, m);
    if (e.ext2 != 0) throw std::domain_error("twist_module_simple: nonzero Ext^2, the twist leaves the modules");

    ShiftedThin result = apply_twist_shifted(i, ShiftedThin{*wm, 0}, false);
    if (result.shift != 0) throw std::domain_error("twist_module_simple: the twist of S(i) itself is shifted");
    Representation x = thin_rep(result.thin);

    if (e.hom == 0 && e.ext1 == 0) {
        if (!(result.thin == *wm)) throw std::logic_error("twist_module_simple: orthogonal case changed the module");
    } else if (e.hom == 1 && e.ext1 == 0) {
        // 0 -> S(i) -> M -> T(M) -> 0
        auto q = thin_canonical_form(quotient_rep(m, simple_inclusion(m, i)).rep);
        if (!q || !(*q == result.thin)) throw std::logic_error("twist_module_simple: quotient mismatch in case H");
    } else if (e.hom == 0 && e.ext1 == 1) {
        // 0 -> M -> T(M) -> S(i) -> 0
        if (!extension_by_simple(m, x, i)) throw std::logic_error("twist_module_simple: extension check failed in case E");
    } else {
        // 0 -> S(i) -> M -> Q -> 0 and 0 -> Q -> T(M) -> S(i) -> 0
        Representation q = quotient_rep(m, simple_inclusion(m, i)).rep;
        if (!extension_by_simple(q, x, i))
            throw std::logic_error("twist_module_simple: extension check failed in case HE");
    }
    return x;
}

ShiftedThin apply_twist_shifted(int i, const ShiftedThin& obj, bool inverse) {
    const ThinModule& m = obj.thin;
    if (i < 1 || i > m.t - 1) throw std::out_of_range("apply_twist_shifted: index out of range");
    int a = m.start, b = m.end;
    ThinModule r = m;
    if (i < a - 1 || i > b + 1) return obj;
    if (i == a - 1) {  // extend downward
        r.start = a - 1;
        r.word.insert(0, 1, inverse ? 'B' : 'A');
        return ShiftedThin{r, obj.shift};
    }
    if (i == b + 1) {  // extend upward
        r.end = b + 1;
        r.word.push_back(inverse ? 'A' : 'B');
        return ShiftedThin{r, obj.shift};
    }
    if (a == b) return ShiftedThin{m, obj.shift + (inverse ? 1 : -1)};  // twist of S(i) itself
    if (i == a) {
        if (m.letter(a) == (inverse ? 'A' : 'B')) {
            r.start = a + 1;
            r.word.erase(0, 1);
            return ShiftedThin{r, obj.shift};
        }
        throw std::domain_error("apply_twist_shifted: configuration leaves the module category");
    }
    if (i == b) {
        if (m.letter(b - 1) == (inverse ? 'B' : 'A')) {
            r.end = b - 1;
            r.word.pop_back();
            return ShiftedThin{r, obj.shift};
        }
        throw std::domain_error("apply_twist_shifted: configuration leaves the module category");
    }
    char l = m.letter(i - 1), rr = m.letter(i);
    char hook_in = inverse ? 'B' : 'A', hook_out = inverse ? 'A' : 'B';
    if (l == hook_in && rr == hook_out) {
        r.word[i - 1 - a] = hook_out;
        r.word[i - a] = hook_in;
        return ShiftedThin{r, obj.shift};
    }
    if (l == hook_out && rr == hook_in)
        throw std::domain_error("apply_twist_shifted: configuration leaves the module category");
    return obj;
}

ShiftedThin apply_twist_word(const TwistWord& word, ShiftedThin obj) {
    for (int g : word) obj = apply_twist_shifted(std::abs(g), obj, g < 0);
    return obj;
}

std::pair<TwistWord, ShiftedThin> strip_spherical(const ThinModule& m) {
    if (!m.valid() || m.end == m.t) throw std::invalid_argument("strip_spherical: module must be thin of rank zero");
    TwistWord word;
    ShiftedThin cur{m, 0};
    while (cur.thin.start < cur.thin.end) {
        int a = cur.thin.start;
        int g = cur.thin.letter(a) == 'A' ? -a : a;
        word.push_back(g);
        cur = apply_twist_shifted(a, cur, g < 0);
    }
    // walk the remaining simple down to S(1)
    for (int k = cur.thin.start; k >= 2; --k) {
        word.push_back(k - 1);
        cur = apply_twist_shifted(k - 1, cur, false);
        word.push_back(k);
        cur = apply_twist_shifted(k, cur, false);
    }
    return {word, cur};
}

std::vector<int> reduce_to_delta_by_mutations(const WormDiagram& d) {
    std::vector<int> word = reduced_word(lambda_perm(d));
    WormDiagram cur = d;
    for (int i : word) cur = right_mutate(cur, i);
    if (!(sigma(cur) == Permutation::longest(d.t)))
        throw std::logic_error("reduce_to_delta_by_mutations: did not reach the standard diagram");
    return word;
}

std::vector<int> reduce_to_delta_by_twists(const WormDiagram& d) {
    std::vector<int> word = reduced_word(Permutation::longest(d.t).compose(sigma(d).inverse()));
    WormDiagram cur = d;
    for (int i : word) cur = twist_diagram(cur, i);
    if (!(sigma(cur) == Permutation::longest(d.t)))
        throw std::logic_error("reduce_to_delta_by_twists: did not reach the standard diagram");
    return word;
}

CayleyGraph build_cayley_graph(int t, ActionKind kind, bool parallel) {
    CayleyGraph g;
    g.t = t;
    g.kind = kind;
    g.nodes = all_permutations(t);
    std::map<std::vector<int>, int> index;
    for (int k = 0; k < int(g.nodes.size()); ++k) index[g.nodes[k].one_line()] = k;

    std::vector<std::vector<CayleyEdge>> local(g.nodes.size());
    parallel_for(int(g.nodes.size()), parallel, [&](int k) {
        WormDiagram d = diagram_from_permutation(g.nodes[k]);
        for (int i = 1; i <= t - 1; ++i) {
            if (kind == ActionKind::Mutation) {
                if (!can_right_mutate(d, i)) continue;
                Permutation target = g.nodes[k].compose(Permutation::transposition(t, i));
                local[k].push_back(CayleyEdge{k, index.at(target.one_line()), i});
            } else {
                if (!can_twist(d, i)) continue;
                Permutation target = Permutation::transposition(t, i).compose(g.nodes[k]);
                local[k].push_back(CayleyEdge{k, index.at(target.one_line()), i});
            }
        }
    });
    for (const auto& chunk : local) g.edges.insert(g.edges.end(), chunk.begin(), chunk.end());
    return g;
}

bool check_action_consistency(const WormDiagram& d, int i, ActionKind kind) {
    if (kind == ActionKind::Mutation) {
        if (!can_right_mutate(d, i)) throw std::domain_error("check_action_consistency: mutation not applicable");
        WormDiagram after = right_mutate(d, i);
        Representation mutated = right_mutate_module(thin_rep(d.worm(i)), thin_rep(d.worm(i + 1)));
        auto w = thin_canonical_form(mutated);
        if (!w || !(*w == after.worm(i + 1))) return false;
        if (!(after.worm(i) == d.worm(i + 1))) return false;
        for (int k = 1; k <= d.t; ++k)
            if (k != i && k != i + 1 && !(after.worm(k) == d.worm(k))) return false;
        return true;
    }
    if (!can_twist(d, i)) throw std::domain_error("check_action_consistency: twist not applicable");
    WormDiagram after = twist_diagram(d, i);
    for (int k = 1; k <= d.t; ++k) {
        auto w = thin_canonical_form(twist_module_simple(i, thin_rep(d.worm(k))));
        if (!w || !(*w == after.worm(k))) return false;
    }
    return true;
}

}  // namespace auslander
