#include "auslander/thin.hpp"

#include <algorithm>
#include <stdexcept>

namespace auslander {

bool ThinModule::valid() const {
    if (t < 1 || start < 1 || start > end || end > t) return false;
    if (int(word.size()) != end - start) return false;
    for (char c : word)
        if (c != 'A' && c != 'B') return false;
    return true;
}

std::string ThinModule::str() const {
    std::string s = std::to_string(start);
    if (end != t) s += "-" + std::to_string(end);
    return s + ":" + word;
}

ThinModule make_thin(int t, int start, int end, const std::string& word) {
    ThinModule m{t, start, end, word};
    if (!m.valid()) throw std::invalid_argument("make_thin: invalid thin module data");
    return m;
}

ThinModule parse_thin(int t, const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("parse_thin: missing ':' in '" + s + "'");
    std::string range = s.substr(0, colon), word = s.substr(colon + 1);
    int start, end;
    auto dash = range.find('-');
    try {
        if (dash == std::string::npos) {
            start = std::stoi(range);
            end = t;
        } else {
            start = std::stoi(range.substr(0, dash));
            end = std::stoi(range.substr(dash + 1));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_thin: bad vertex range in '" + s + "'");
    }
    ThinModule m{t, start, end, word};
    if (!m.valid()) throw std::invalid_argument("parse_thin: invalid thin module '" + s + "'");
    return m;
}

std::vector<int> thin_udim(const ThinModule& m) {
    std::vector<int> d(m.t, 0);
    for (int v = m.start; v <= m.end; ++v) d[v - 1] = 1;
    return d;
}

Representation thin_rep(const ThinModule& m) {
    if (!m.valid()) throw std::invalid_argument("thin_rep: invalid thin module");
    Representation r = zero_padded(make_algebra(m.t), thin_udim(m));
    for (int v = m.start; v < m.end; ++v) {
        if (m.letter(v) == 'A')
            r.alpha[v - 1].at(0, 0) = 1;
        else
            r.beta[v - 1].at(0, 0) = 1;
    }
    return r;
}

std::optional<ThinModule> thin_canonical_form(const Representation& m) {
    int t = m.algebra.t;
    int start = 0, end = 0;
    for (int v = 1; v <= t; ++v) {
        if (m.dim(v) > 1) return std::nullopt;
        if (m.dim(v) == 1) {
            if (start == 0) start = v;
            else if (end != v - 1) return std::nullopt;  // gap: decomposable
            end = v;
        }
    }
    if (start == 0) return std::nullopt;  // zero module
    std::string word;
    for (int v = start; v < end; ++v) {
        bool av = m.a(v).at(0, 0) != 0, bv = m.b(v).at(0, 0) != 0;
        if (av == bv) return std::nullopt;  // disconnected or relation-violating
        word += av ? 'A' : 'B';
    }
    return ThinModule{t, start, end, word};
}

std::vector<ThinModule> enumerate_thin(int t) {
    std::vector<ThinModule> out;
    for (int end = t; end >= 1; --end)
        for (int start = 1; start <= end; ++start) {
            int len = end - start;
            std::string word(len, 'A');
            for (long mask = 0; mask < (1L << len); ++mask) {
                for (int k = 0; k < len; ++k) word[k] = (mask >> (len - 1 - k)) & 1 ? 'B' : 'A';
                out.push_back(ThinModule{t, start, end, word});
            }
        }
    return out;
}

}  // namespace auslander
