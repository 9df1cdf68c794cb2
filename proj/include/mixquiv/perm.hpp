#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mixquiv/common.hpp"

namespace mixquiv {

// Permutation of [1, r], stored as the image array (1-based values).
class Permutation {
  public:
    explicit Permutation(int r = 0);               // identity
    explicit Permutation(std::vector<int> images);  // images[i] = image of i+1

    int degree() const { return static_cast<int>(img_.size()); }
    int apply(int j) const { return img_[static_cast<size_t>(j) - 1]; }
    int preimage(int j) const { return inv_[static_cast<size_t>(j) - 1]; }

    Permutation inverse() const;
    // composition: (a*b)(x) = a(b(x))
    Permutation operator*(const Permutation& o) const;

    int sign() const;  // (-1)^{r - #cycles}
    bool is_identity() const;

    std::vector<std::vector<int>> cycles(bool include_fixed = false) const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    const std::vector<int>& images() const { return img_; }

    // cycle notation, fixed points omitted: "(1 4 5)(2 6 7)"
    std::string str() const;
    static Permutation parse_cycles(const std::string& text, int r);

  private:
    std::vector<int> img_, inv_;
};

// Calls fn for every permutation of [1, r] in lexicographic order.
void for_each_permutation(int r, const std::function<void(const Permutation&)>& fn);

// Young subgroup given by a decomposition of [1, r] into layers: all
// permutations preserving each layer setwise. Enumeration is lexicographic.
class YoungSubgroup {
  public:
    YoungSubgroup(int r, std::vector<std::vector<int>> layers);

    int degree() const { return r_; }
    const std::vector<std::vector<int>>& layers() const { return layers_; }
    BigInt order() const;

    bool contains(const Permutation& p) const;
    void for_each(const std::function<void(const Permutation&)>& fn) const;

    // Left coset representatives of `sub` (a subgroup of this group, given
    // by a membership predicate): the lexicographically minimal element of
    // each coset, in lexicographic order.
    std::vector<Permutation> left_coset_reps(
        const std::function<bool(const Permutation&)>& sub_contains) const;

  private:
    int r_;
    std::vector<std::vector<int>> layers_;  // sorted cells, disjoint, cover [1,r]
};

}  // namespace mixquiv
