#include "auslander/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace auslander {

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > int(img_.size()) || seen[v - 1])
            throw std::invalid_argument("Permutation: not a bijection on 1..n");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return Permutation(v);
}

Permutation Permutation::longest(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(v);
}

Permutation Permutation::transposition(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("transposition: index out of range");
    Permutation p = identity(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

Permutation Permutation::compose(const Permutation& q) const {
    if (n() != q.n()) throw std::invalid_argument("Permutation: size mismatch");
    std::vector<int> v(n());
    for (int i = 1; i <= n(); ++i) v[i - 1] = (*this)(q(i));
    return Permutation(v);
}

Permutation Permutation::inverse() const {
    std::vector<int> v(n());
    for (int i = 1; i <= n(); ++i) v[img_[i - 1] - 1] = i;
    return Permutation(v);
}

int Permutation::inversions() const {
    int c = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (img_[i] > img_[j]) ++c;
    return c;
}

int Permutation::leftmost_descent() const {
    for (int i = 1; i < n(); ++i)
        if (img_[i - 1] > img_[i]) return i;
    return 0;
}

std::string Permutation::str() const {
    std::string s;
    for (int i = 0; i < n(); ++i) {
        if (n() > 9 && i) s += ',';
        s += std::to_string(img_[i]);
    }
    return s;
}

Permutation Permutation::parse(int n, const std::string& s) {
    std::vector<int> v;
    if (s.find(',') == std::string::npos && n <= 9) {
        for (char c : s) {
            if (c < '1' || c > '9') throw std::invalid_argument("Permutation: bad digit string '" + s + "'");
            v.push_back(c - '0');
        }
    } else {
        size_t pos = 0;
        while (pos < s.size()) {
            size_t next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            try {
                v.push_back(std::stoi(s.substr(pos, next - pos)));
            } catch (const std::exception&) {
                throw std::invalid_argument("Permutation: bad entry in '" + s + "'");
            }
            pos = next + 1;
        }
    }
    if (int(v.size()) != n)
        throw std::invalid_argument("Permutation: expected " + std::to_string(n) + " entries in '" + s + "'");
    return Permutation(v);
}

std::vector<int> reduced_word(const Permutation& p) {
    std::vector<int> w;
    Permutation cur = p;
    for (int k = cur.leftmost_descent(); k != 0; k = cur.leftmost_descent()) {
        w.push_back(k);
        cur = cur.compose(Permutation::transposition(cur.n(), k));
    }
    return w;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    std::vector<Permutation> out;
    do out.push_back(Permutation(v));
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace auslander
