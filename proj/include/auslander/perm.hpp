/* Symmetric group elements in one-line notation, 1-based values. */

#pragma once

#include <string>
#include <vector>

namespace auslander {

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    static Permutation longest(int n);             // omega = (n, ..., 2, 1)
    static Permutation transposition(int n, int i);  // tau_i = (i, i+1)

    int n() const { return int(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& one_line() const { return img_; }

    Permutation compose(const Permutation& q) const;  // (p.compose(q))(i) = p(q(i))
    Permutation inverse() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    int inversions() const;
    int leftmost_descent() const;  // smallest i with p(i) > p(i+1); 0 if none

    std::string str() const;  // digit string for n <= 9, comma list beyond
    static Permutation parse(int n, const std::string& s);

private:
    std::vector<int> img_;
};

// Factorization p = tau_{w[m]} * ... * tau_{w[1]} of minimal length, built by
// repeatedly removing the leftmost descent; w is returned in removal order
// w[1], w[2], ...
std::vector<int> reduced_word(const Permutation& p);

std::vector<Permutation> all_permutations(int n);  // lexicographic

}  // namespace auslander
