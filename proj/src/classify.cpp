#include "auslander/classify.hpp"

#include <stdexcept>

#include "auslander/worms.hpp"

namespace auslander {

ModuleClass classify_module(const ThinModule& m) {
    if (!m.valid()) throw std::invalid_argument("classify_module: invalid thin module");
    return m.end == m.t ? ModuleClass::Exceptional : ModuleClass::Spherical2;
}

std::optional<ModuleClass> classify_homological(const Representation& m) {
    ExtTriple self = ext_dims(m, m);
    if (self == ExtTriple{1, 0, 0}) return ModuleClass::Exceptional;
    if (self == ExtTriple{1, 0, 1} && rank(m) == 0) return ModuleClass::Spherical2;
    return std::nullopt;
}

Counts count_formulas(int t) {
    if (t < 1 || t > 20) throw std::out_of_range("count_formulas: t out of range");
    Counts c;
    c.exceptional = (1LL << t) - 1;
    c.spherical = (1LL << t) - t - 1;
    c.bricks = (1LL << (t + 1)) - t - 2;
    c.sequences = 1;
    for (int k = 2; k <= t; ++k) c.sequences *= k;
    return c;
}

Counts counts(int t) {
    Counts c = count_formulas(t);
    if (t <= 16) {
        long long exc = 0, sph = 0;
        for (const ThinModule& m : enumerate_thin(t))
            (classify_module(m) == ModuleClass::Exceptional ? exc : sph) += 1;
        if (exc != c.exceptional || sph != c.spherical || exc + sph != c.bricks)
            throw std::logic_error("counts: enumeration disagrees with the formulas");
    }
    if (t <= 7) {
        if (static_cast<long long>(enumerate_diagrams(t).size()) != c.sequences)
            throw std::logic_error("counts: diagram enumeration disagrees with t!");
    }
    return c;
}

}  // namespace auslander
