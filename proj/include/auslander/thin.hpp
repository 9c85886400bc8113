/*
  Indecomposable thin modules as words: support [start, end], one letter per
  edge, 'A' when the forward map is nonzero, 'B' when the backward one is.
  String form "start:word" (end = t implied) or "start-end:word".
*/

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "auslander/algebra.hpp"

namespace auslander {

struct ThinModule {
    int t = 1;
    int start = 1;
    int end = 1;
    std::string word;  // length end - start, letters 'A'/'B'

    bool operator==(const ThinModule& o) const {
        return t == o.t && start == o.start && end == o.end && word == o.word;
    }
    bool valid() const;
    int length() const { return end - start + 1; }
    // letter on the edge between vertices v and v+1, for start <= v < end
    char letter(int v) const { return word[v - start]; }
    std::string str() const;
};

ThinModule make_thin(int t, int start, int end, const std::string& word);
ThinModule parse_thin(int t, const std::string& s);

Representation thin_rep(const ThinModule& m);
std::vector<int> thin_udim(const ThinModule& m);

// Canonical word form of a representation isomorphic to an indecomposable
// thin module; nullopt for anything else (zero, fat or decomposable).
std::optional<ThinModule> thin_canonical_form(const Representation& m);

// All indecomposable thin modules, ordered by end descending, start
// ascending, word lexicographic.
std::vector<ThinModule> enumerate_thin(int t);

}  // namespace auslander
