#include "mixquiv/perm.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mixquiv {

Permutation::Permutation(int r) {
    require(r >= 0, "permutation: negative degree");
    img_.resize(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) img_[static_cast<size_t>(i)] = i + 1;
    inv_ = img_;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    int r = static_cast<int>(img_.size());
    inv_.assign(img_.size(), 0);
    std::vector<bool> seen(img_.size(), false);
    for (int i = 0; i < r; ++i) {
        int v = img_[static_cast<size_t>(i)];
        require(v >= 1 && v <= r && !seen[static_cast<size_t>(v) - 1],
                "permutation: image array is not a bijection of [1,r]");
        seen[static_cast<size_t>(v) - 1] = true;
        inv_[static_cast<size_t>(v) - 1] = i + 1;
    }
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.img_ = inv_;
    p.inv_ = img_;
    return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
    require(degree() == o.degree(), "permutation: degree mismatch in composition");
    std::vector<int> img(img_.size());
    for (int x = 1; x <= degree(); ++x)
        img[static_cast<size_t>(x) - 1] = apply(o.apply(x));
    return Permutation(std::move(img));
}

int Permutation::sign() const {
    std::vector<bool> seen(img_.size(), false);
    int cyc = 0;
    for (int i = 1; i <= degree(); ++i) {
        if (seen[static_cast<size_t>(i) - 1]) continue;
        ++cyc;
        for (int j = i; !seen[static_cast<size_t>(j) - 1]; j = apply(j))
            seen[static_cast<size_t>(j) - 1] = true;
    }
    return ((degree() - cyc) % 2 == 0) ? 1 : -1;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (apply(i) != i) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles(bool include_fixed) const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (int i = 1; i <= degree(); ++i) {
        if (seen[static_cast<size_t>(i) - 1]) continue;
        std::vector<int> cyc;
        for (int j = i; !seen[static_cast<size_t>(j) - 1]; j = apply(j)) {
            seen[static_cast<size_t>(j) - 1] = true;
            cyc.push_back(j);
        }
        if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
    }
    return out;
}

std::string Permutation::str() const {
    auto cyc = cycles(false);
    if (cyc.empty()) return "()";
    std::string s;
    for (const auto& c : cyc) {
        s += "(";
        for (size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
        s += ")";
    }
    return s;
}

Permutation Permutation::parse_cycles(const std::string& text, int r) {
    std::vector<int> img(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) img[static_cast<size_t>(i)] = i + 1;
    std::vector<int> cur;
    std::set<int> used;
    size_t pos = 0;
    auto flush = [&]() {
        for (size_t i = 0; i < cur.size(); ++i) {
            int from = cur[i], to = cur[(i + 1) % cur.size()];
            img[static_cast<size_t>(from) - 1] = to;
        }
        cur.clear();
    };
    while (pos < text.size()) {
        char c = text[pos];
        if (c == '(' || isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++pos;
        } else if (c == ')') {
            flush();
            ++pos;
        } else if (isdigit(static_cast<unsigned char>(c))) {
            size_t end = pos;
            while (end < text.size() && isdigit(static_cast<unsigned char>(text[end]))) ++end;
            int v = std::stoi(text.substr(pos, end - pos));
            require(v >= 1 && v <= r,
                    "permutation: entry " + std::to_string(v) + " outside [1," + std::to_string(r) + "]");
            require(used.insert(v).second,
                    "permutation: entry " + std::to_string(v) + " repeated");
            cur.push_back(v);
            pos = end;
        } else {
            throw Error(std::string("permutation: unexpected character '") + c + "'");
        }
    }
    require(cur.empty(), "permutation: unclosed cycle in '" + text + "'");
    return Permutation(std::move(img));
}

void for_each_permutation(int r, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> img(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) img[static_cast<size_t>(i)] = i + 1;
    do {
        fn(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
}

YoungSubgroup::YoungSubgroup(int r, std::vector<std::vector<int>> layers)
    : r_(r), layers_(std::move(layers)) {
    std::vector<bool> seen(static_cast<size_t>(r), false);
    for (auto& layer : layers_) {
        std::sort(layer.begin(), layer.end());
        require(!layer.empty(), "young subgroup: empty layer");
        for (int v : layer) {
            require(v >= 1 && v <= r, "young subgroup: layer entry out of range");
            require(!seen[static_cast<size_t>(v) - 1], "young subgroup: layers overlap");
            seen[static_cast<size_t>(v) - 1] = true;
        }
    }
    for (int v = 1; v <= r; ++v)
        require(seen[static_cast<size_t>(v) - 1],
                "young subgroup: layers do not cover [1,r]");
}

BigInt YoungSubgroup::order() const {
    BigInt n = 1;
    for (const auto& layer : layers_) n *= factorial(static_cast<long>(layer.size()));
    return n;
}

bool YoungSubgroup::contains(const Permutation& p) const {
    if (p.degree() != r_) return false;
    for (const auto& layer : layers_) {
        for (int v : layer) {
            int w = p.apply(v);
            if (!std::binary_search(layer.begin(), layer.end(), w)) return false;
        }
    }
    return true;
}

void YoungSubgroup::for_each(const std::function<void(const Permutation&)>& fn) const {
    // odometer over per-layer permutations, lexicographic overall because
    // layers are visited in sorted order and next_permutation is lex
    std::vector<std::vector<int>> perms(layers_.size());
    for (size_t k = 0; k < layers_.size(); ++k) perms[k] = layers_[k];

    std::vector<int> img(static_cast<size_t>(r_));
    auto emit = [&]() {
        for (int i = 0; i < r_; ++i) img[static_cast<size_t>(i)] = i + 1;
        for (size_t k = 0; k < layers_.size(); ++k)
            for (size_t i = 0; i < layers_[k].size(); ++i)
                img[static_cast<size_t>(layers_[k][i]) - 1] = perms[k][i];
        fn(Permutation(img));
    };
    // layers sorted by minimum keeps overall enumeration deterministic
    std::vector<size_t> order(layers_.size());
    for (size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return layers_[a][0] < layers_[b][0]; });

    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == order.size()) {
            emit();
            return;
        }
        size_t k = order[idx];
        std::sort(perms[k].begin(), perms[k].end());
        do {
            rec(idx + 1);
        } while (std::next_permutation(perms[k].begin(), perms[k].end()));
    };
    rec(0);
}

std::vector<Permutation> YoungSubgroup::left_coset_reps(
    const std::function<bool(const Permutation&)>& sub_contains) const {
    // collect subgroup elements once, then sweep the group in lex order
    std::vector<Permutation> sub;
    for_each([&](const Permutation& p) {
        if (sub_contains(p)) sub.push_back(p);
    });
    require(!sub.empty(), "coset reps: empty subgroup (identity missing?)");
    std::set<Permutation> covered;
    std::vector<Permutation> reps;
    for_each([&](const Permutation& p) {
        if (covered.count(p)) return;
        reps.push_back(p);
        for (const Permutation& s : sub) covered.insert(p * s);
    });
    return reps;
}

}  // namespace mixquiv
