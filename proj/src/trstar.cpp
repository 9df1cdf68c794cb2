#include "mixquiv/trstar.hpp"

#include <algorithm>
#include <list>
#include <map>
#include <sstream>

namespace mixquiv {

SymbolCycleWord::SymbolCycleWord(int r, std::vector<std::vector<BarSym>> cycles) : r_(r) {
    std::vector<bool> seen(static_cast<size_t>(r), false);
    int total = 0;
    for (auto& c : cycles) {
        require(!c.empty(), "symbol word: empty cycle");
        for (const BarSym& s : c) {
            require(s.idx >= 1 && s.idx <= r, "symbol word: index out of [1,r]");
            require(!seen[static_cast<size_t>(s.idx) - 1],
                    "symbol word: index " + std::to_string(s.idx) + " appears twice");
            seen[static_cast<size_t>(s.idx) - 1] = true;
            ++total;
        }
        c = canonical_cycle_word(c);
    }
    require(total == r, "symbol word: must use each of 1..r exactly once");
    std::sort(cycles.begin(), cycles.end());
    cycles_ = std::move(cycles);
}

std::string SymbolCycleWord::str() const {
    if (cycles_.empty()) return "()";
    std::string s;
    for (const auto& c : cycles_) {
        s += "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += " ";
            s += (c[i].bar ? "~" : "") + std::to_string(c[i].idx);
        }
        s += ")";
    }
    return s;
}

SymbolCycleWord SymbolCycleWord::parse(const std::string& text, int r) {
    std::vector<std::vector<BarSym>> cycles;
    std::vector<BarSym> cur;
    size_t pos = 0;
    bool open = false;
    while (pos < text.size()) {
        char c = text[pos];
        if (c == '(') {
            require(!open, "symbol word: nested '('");
            open = true;
            ++pos;
        } else if (c == ')') {
            require(open, "symbol word: stray ')'");
            if (!cur.empty()) cycles.push_back(cur);
            cur.clear();
            open = false;
            ++pos;
        } else if (isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++pos;
        } else {
            bool bar = false;
            if (c == '~') {
                bar = true;
                ++pos;
            }
            size_t end = pos;
            while (end < text.size() && isdigit(static_cast<unsigned char>(text[end]))) ++end;
            require(end > pos, "symbol word: expected an index at '" + text.substr(pos) + "'");
            cur.push_back({std::stoi(text.substr(pos, end - pos)), bar});
            pos = end;
        }
    }
    require(!open, "symbol word: unclosed '('");
    return SymbolCycleWord(r, std::move(cycles));
}

bool in_LQ(const Permutation& sigma, const AdmissibilitySets& sets) {
    require(sigma.degree() == sets.r, "in_LQ: permutation degree does not match hat quiver");
    for (const auto& cell : sets.cells) {
        std::vector<int> img;
        img.reserve(cell.tcal.size());
        for (int j : cell.tcal) img.push_back(sigma.apply(j));
        std::sort(img.begin(), img.end());
        if (img != cell.ical) return false;
    }
    return true;
}

Permutation rho_shift(const Permutation& pi, int which, int t, int s) {
    int r = pi.degree();
    require(r == t + 2 * s, "rho_shift: degree must equal t + 2s");
    require(which == 1 || which == 2, "rho_shift: which must be 1 or 2");
    auto cls = [&](int j) { return j <= t ? 1 : (j <= t + s ? 2 : 3); };
    for (int j = 1; j <= r; ++j)
        require(cls(pi.apply(j)) == cls(j), "rho_shift: pi must lie in S_A1 x S_A2 x S_A3");
    std::vector<int> img(static_cast<size_t>(r));
    for (int j = 1; j <= r; ++j) {
        int v;
        if (which == 1)
            v = (cls(j) == 3) ? pi.apply(j - s) + s : pi.apply(j);  // pi1 pi2 (pi2+s)
        else
            v = (cls(j) == 2) ? pi.apply(j + s) - s : pi.apply(j);  // pi1 (pi3-s) pi3
        img[static_cast<size_t>(j) - 1] = v;
    }
    return Permutation(std::move(img));
}

namespace {

// right-hand neighbor of a symbol per the six contracting rules
BarSym contract_successor(const BarSym& x, const Permutation& sigma, const HatQuiver& hq) {
    int s = hq.s();
    auto by_preimage = [&](int arg) -> BarSym {
        int m = sigma.preimage(arg);
        switch (hq.cls(m)) {
            case 1: return {m, false};
            case 2: return {m + s, false};
            default: return {m, true};
        }
    };
    auto by_image = [&](int arg) -> BarSym {
        int m = sigma.apply(arg);
        switch (hq.cls(m)) {
            case 1: return {m, true};
            case 2: return {m, false};
            default: return {m - s, true};
        }
    };
    if (!x.bar) {
        switch (hq.cls(x.idx)) {
            case 1: return by_preimage(x.idx);
            case 2: return by_preimage(x.idx + s);
            default: return by_image(x.idx);
        }
    }
    switch (hq.cls(x.idx)) {
        case 1: return by_image(x.idx);
        case 2: return by_preimage(x.idx);
        default: return by_image(x.idx - s);
    }
}

}  // namespace

SymbolCycleWord trstar_contract(const Permutation& sigma, const HatQuiver& hq) {
    require(sigma.degree() == hq.r(), "trstar: permutation degree must be r");
    require(in_LQ(sigma, admissibility_sets(hq)), "trstar: permutation is not admissible");
    int r = hq.r();
    std::vector<bool> placed(static_cast<size_t>(r), false);
    std::vector<std::vector<BarSym>> cycles;
    for (int start = 1; start <= r; ++start) {
        if (placed[static_cast<size_t>(start) - 1]) continue;
        std::vector<BarSym> cyc;
        BarSym at{start, false};
        for (;;) {
            require(!placed[static_cast<size_t>(at.idx) - 1],
                    "trstar: symbol " + std::to_string(at.idx) +
                        " required twice (permutation not admissible)");
            placed[static_cast<size_t>(at.idx) - 1] = true;
            cyc.push_back(at);
            at = contract_successor(at, sigma, hq);
            if (at.idx == start) {
                require(at == BarSym{start, false},
                        "trstar: cycle closes on the involuted start symbol");
                break;
            }
        }
        cycles.push_back(std::move(cyc));
    }
    return SymbolCycleWord(r, std::move(cycles));
}

namespace {

std::vector<BarSym> transpose_block(const std::vector<BarSym>& b) {
    std::vector<BarSym> out(b.size());
    for (size_t i = 0; i < b.size(); ++i) out[i] = b[b.size() - 1 - i].barred();
    return out;
}

}  // namespace

SymbolCycleWord trstar_blocks(const Permutation& tau, const std::set<int>& passive,
                              const HatQuiver& hq) {
    int r = hq.r(), s = hq.s();
    require(tau.degree() == r, "trstar_blocks: permutation degree must be r");
    require(in_LQ(tau, admissibility_sets(hq)), "trstar: permutation is not admissible");
    for (int b : passive)
        require(b >= 1 && b <= hq.t(),
                "trstar_blocks: passive set must lie inside A1 = [1,t]");

    auto subst_left = [&](int l) -> BarSym {
        switch (hq.cls(l)) {
            case 1: return {l, false};
            case 2: return {l, true};
            default: return {l - s, false};
        }
    };
    auto subst_right = [&](int j) -> BarSym {
        switch (hq.cls(j)) {
            case 1: return {j, false};
            case 2: return {j + s, false};
            default: return {j, true};
        }
    };

    std::vector<std::vector<BarSym>> done;     // closed cycles
    std::list<std::vector<BarSym>> blocks;     // open blocks, joined below

    for (const auto& cyc : tau.inverse().cycles(true)) {
        std::vector<int> nonb_pos;
        for (size_t i = 0; i < cyc.size(); ++i)
            if (!passive.count(cyc[i])) nonb_pos.push_back(static_cast<int>(i));
        if (nonb_pos.empty()) {
            // cycle entirely inside B stays as it is
            std::vector<BarSym> w;
            for (int v : cyc) w.push_back({v, false});
            done.push_back(std::move(w));
            continue;
        }
        size_t m = nonb_pos.size(), n = cyc.size();
        for (size_t v = 0; v < m; ++v) {
            // block l' B_v j' with l at nonb_pos[v], j the next bounding integer
            size_t lpos = static_cast<size_t>(nonb_pos[v]);
            size_t jpos = static_cast<size_t>(nonb_pos[(v + 1) % m]);
            std::vector<BarSym> blk;
            blk.push_back(subst_left(cyc[lpos]));
            for (size_t p = (lpos + 1) % n; p != jpos; p = (p + 1) % n)
                blk.push_back({cyc[p], false});
            blk.push_back(subst_right(cyc[jpos]));
            blocks.push_back(std::move(blk));
        }
    }

    // grow cycles by joining blocks on matching ends
    while (!blocks.empty()) {
        bool progressed = false;
        for (auto it = blocks.begin(); it != blocks.end(); ++it) {
            if (it->front() == it->back()) {
                std::vector<BarSym> cyc(it->begin(), std::prev(it->end()));
                done.push_back(std::move(cyc));
                blocks.erase(it);
                progressed = true;
                break;
            }
        }
        if (progressed) continue;
        for (auto a = blocks.begin(); a != blocks.end() && !progressed; ++a) {
            for (auto b = std::next(a); b != blocks.end(); ++b) {
                std::vector<BarSym> w;
                if (a->back() == b->front()) {
                    w = *a;
                    w.insert(w.end(), std::next(b->begin()), b->end());
                } else if (b->back() == a->front()) {
                    w = *b;
                    w.insert(w.end(), std::next(a->begin()), a->end());
                } else if (a->back() == b->back().barred()) {
                    w = *a;
                    auto tb = transpose_block(*b);
                    w.insert(w.end(), std::next(tb.begin()), tb.end());
                } else if (a->front() == b->front().barred()) {
                    w = transpose_block(*b);
                    w.insert(w.end(), std::next(a->begin()), a->end());
                } else {
                    continue;
                }
                blocks.erase(b);
                *a = std::move(w);
                progressed = true;
                break;
            }
        }
        require(progressed, "trstar_blocks: join deadlock (inconsistent passive set)");
    }
    return SymbolCycleWord(r, std::move(done));
}

TraceExpression word_to_expression(const SymbolCycleWord& w, const HatQuiver& hq,
                                   const DoubledQuiver& dq) {
    TraceExpression::FactorList factors;
    for (const auto& cyc : w.cycles()) {
        // the written word (x_1 ... x_k) is the product Z(x_1)...Z(x_k),
        // whose traversal order is x_k, ..., x_1
        std::vector<PathStep> steps;
        for (size_t i = cyc.size(); i-- > 0;) steps.push_back({hq.f(cyc[i].idx), cyc[i].bar});
        factors.push_back(CyclePath(dq, std::move(steps)));
    }
    TraceExpression e;
    e.add_term(std::move(factors), 1);
    return e;
}

ModelSetup::ModelSetup(int r, int s, int m) {
    require(s >= 0 && r >= 2 * s, "model: need 2s <= r");
    q_ = std::make_unique<Quiver>(Quiver::ortho_model(m));
    dq_ = std::make_unique<DoubledQuiver>(*q_);
    std::map<int, int> deg;
    deg[1] = r - 2 * s;  // X gets the whole A1 share on arrow 1
    deg[m + 1] = s;
    deg[m + 2] = s;
    deg_ = std::make_unique<Multidegree>(*q_, deg);
    hq_ = std::make_unique<HatQuiver>(*q_, *deg_);
    sets_ = admissibility_sets(*hq_);
}

TraceExpression sigma_rs(int r, int s, int r_cap) {
    require(s >= 0 && 2 * s <= r, "sigma_rs: need 0 <= 2s <= r");
    require(r <= r_cap, "sigma_rs: r exceeds the configured cap of " + std::to_string(r_cap));
    if (r == 0) return TraceExpression::constant(1);
    ModelSetup model(r, s);
    TraceExpression sum;
    for_each_permutation(r, [&](const Permutation& sigma) {
        SymbolCycleWord w = trstar_contract(sigma, model.hat());
        TraceExpression e = word_to_expression(w, model.hat(), model.doubled());
        sum = sum + e.scaled(sigma.sign());
    });
    Rat norm = Rat(factorial(r - 2 * s) * factorial(s) * factorial(s));
    return sum.scaled(Rat(1) / norm);
}

YoungLayout::YoungLayout(const AdmissibilitySets& sets, std::vector<std::vector<int>> splits) {
    require(splits.size() == sets.cells.size(),
            "layout: one split list per admissibility cell expected");
    for (size_t k = 0; k < sets.cells.size(); ++k) {
        const auto& tcal = sets.cells[k].tcal;
        std::vector<int> sizes = splits[k];
        if (sizes.empty() && !tcal.empty()) sizes = {static_cast<int>(tcal.size())};
        int total = 0;
        for (int sz : sizes) {
            require(sz >= 1, "layout: sublayer sizes must be positive");
            total += sz;
        }
        require(total == static_cast<int>(tcal.size()),
                "layout: sublayer sizes must sum to |T(cell)|");
        size_t at = 0;
        for (int sz : sizes) {
            // consecutive chunks of the sorted 𝒯(z): monotonic by construction
            layers_.emplace_back(tcal.begin() + static_cast<long>(at),
                                 tcal.begin() + static_cast<long>(at) + sz);
            layer_cell_.push_back(static_cast<int>(k));
            at += static_cast<size_t>(sz);
        }
    }
}

bool YoungLayout::sufficiently_large(const Quiver& q, const DimensionVector& dv,
                                     const AdmissibilitySets& sets) const {
    for (size_t k = 0; k < layers_.size(); ++k) {
        const auto& cell = sets.cells[static_cast<size_t>(layer_cell_[k])];
        int d = cell.is_pair ? dv.dim(q.pairs()[static_cast<size_t>(cell.id)].first)
                             : dv.dim(cell.id);
        if (static_cast<int>(layers_[k].size()) > d) return true;
    }
    return false;
}

TraceExpression suitable_generator(const Permutation& sigma1, const YoungLayout& layout,
                                   const HatQuiver& hq, const DoubledQuiver& dq, int r_cap) {
    int r = hq.r(), t = hq.t(), s = hq.s();
    require(r <= r_cap,
            "suitable_generator: r exceeds the configured cap of " + std::to_string(r_cap));
    require(in_LQ(sigma1, admissibility_sets(hq)), "suitable_generator: sigma1 not in L(Q)");

    YoungSubgroup base(r, layout.layers());

    std::vector<std::vector<int>> segments;
    for (const Arrow& a : hq.base().arrows()) {
        auto [lo, hi] = hq.segment(a.id);
        if (lo > hi) continue;
        std::vector<int> seg;
        for (int j = lo; j <= hi; ++j) seg.push_back(j);
        segments.push_back(std::move(seg));
    }
    YoungSubgroup sf(r, segments);

    Permutation sigma1_inv = sigma1.inverse();
    auto in_sub = [&](const Permutation& pi) {
        Permutation r1 = rho_shift(pi, 1, t, s);
        Permutation r2 = rho_shift(pi, 2, t, s);
        return base.contains(sigma1_inv * r1 * sigma1) && base.contains(r2);
    };
    std::vector<Permutation> reps = sf.left_coset_reps(in_sub);

    TraceExpression sum;
    for (const Permutation& pi : reps) {
        Permutation r1 = rho_shift(pi, 1, t, s);
        Permutation r2inv = rho_shift(pi, 2, t, s).inverse();
        base.for_each([&](const Permutation& tau) {
            Permutation p = r1 * sigma1 * tau * r2inv;
            TraceExpression e = word_to_expression(trstar_contract(p, hq), hq, dq);
            sum = sum + e.scaled(tau.sign());
        });
    }
    Rat norm(sf.order());
    return sum.scaled(Rat(1) / norm);
}

}  // namespace mixquiv
