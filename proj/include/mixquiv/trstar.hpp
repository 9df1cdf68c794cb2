#pragma once

#include <memory>
#include <set>
#include <vector>

#include "mixquiv/cycles.hpp"
#include "mixquiv/perm.hpp"
#include "mixquiv/quiver.hpp"

namespace mixquiv {

// Symbol of a tr* word: an index in [1,r], possibly barred.
struct BarSym {
    int idx = 0;
    bool bar = false;
    bool operator==(const BarSym& o) const { return idx == o.idx && bar == o.bar; }
    bool operator!=(const BarSym& o) const { return !(*this == o); }
    bool operator<(const BarSym& o) const { return idx != o.idx ? idx < o.idx : bar < o.bar; }
    BarSym barred() const { return {idx, !bar}; }
};

// Product of formal trace cycles over [1,r] ∪ [1̄,r̄]; exactly one of j, j̄
// appears for each j. Cycles are canonical up to rotation and involution.
class SymbolCycleWord {
  public:
    SymbolCycleWord() = default;
    SymbolCycleWord(int r, std::vector<std::vector<BarSym>> cycles);

    int r() const { return r_; }
    const std::vector<std::vector<BarSym>>& cycles() const { return cycles_; }

    bool operator==(const SymbolCycleWord& o) const {
        return r_ == o.r_ && cycles_ == o.cycles_;
    }

    std::string str() const;  // "(1 7 ~2 ~4)(~5 6)(3)"
    static SymbolCycleWord parse(const std::string& text, int r);

  private:
    int r_ = 0;
    std::vector<std::vector<BarSym>> cycles_;
};

// Admissibility: sigma maps each 𝒯(x) onto ℐ(x).
bool in_LQ(const Permutation& sigma, const AdmissibilitySets& sets);

// Shift homomorphisms rho_1, rho_2 on S_0 = S_Â1 x S_Â2 x S_Â3.
Permutation rho_shift(const Permutation& pi, int which, int t, int s);

// tr*(sigma) by the six contracting rules. sigma must lie in L(Q).
SymbolCycleWord trstar_contract(const Permutation& sigma, const HatQuiver& hq);

// tr*(tau) by the block-joining algorithm: the cycles of tau^{-1}
// are cut at the integers outside the passive set B (a subset of Â1), the
// resulting blocks get their end substitutions, and blocks are joined by
// matching ends (transposing where ends match only after involution).
SymbolCycleWord trstar_blocks(const Permutation& tau, const std::set<int>& passive,
                              const HatQuiver& hq);

// f(tr*(sigma)): each symbol j becomes the step (f(j), unbarred), j̄ the
// barred step; each cycle becomes a trace factor.
TraceExpression word_to_expression(const SymbolCycleWord& w, const HatQuiver& hq,
                                   const DoubledQuiver& dq);

// The three-arrow model quiver of sigma_{r,s} with its hat quiver: loops
// X = 1 at the pair head (t copies), Y = 2: i_q -> j_q (s copies),
// Z = 3: j_q -> i_q (s copies).
class ModelSetup {
  public:
    ModelSetup(int r, int s, int m = 1);

    const Quiver& quiver() const { return *q_; }
    const DoubledQuiver& doubled() const { return *dq_; }
    const HatQuiver& hat() const { return *hq_; }
    const AdmissibilitySets& sets() const { return sets_; }
    int r() const { return hq_->r(); }
    int s() const { return hq_->s(); }

  private:
    std::unique_ptr<Quiver> q_;
    std::unique_ptr<DoubledQuiver> dq_;
    std::unique_ptr<Multidegree> deg_;
    std::unique_ptr<HatQuiver> hq_;
    AdmissibilitySets sets_;
};

inline constexpr int kDefaultRCap = 8;  // guards the r! sum

// sigma_{r,s}(X,Y,Z) = 1/(t!(s!)^2) sum_{sigma in S_r} (-1)^sigma tr*(sigma, f)
// over the model quiver. For s = 0 this is sigma_r of the loop.
TraceExpression sigma_rs(int r, int s, int r_cap = kDefaultRCap);

// Base-group layout: a monotonic decomposition of each 𝒯(z) into sublayers.
class YoungLayout {
  public:
    // splits[k] lists the sublayer sizes of cell k's 𝒯 (must sum to |𝒯|);
    // an empty list means one full layer.
    YoungLayout(const AdmissibilitySets& sets, std::vector<std::vector<int>> splits);

    const std::vector<std::vector<int>>& layers() const { return layers_; }
    const std::vector<int>& layer_cell() const { return layer_cell_; }

    // some layer inside 𝒯(i) (resp. 𝒯(q)) has size > d_i (resp. > d_q)
    bool sufficiently_large(const Quiver& q, const DimensionVector& dv,
                            const AdmissibilitySets& sets) const;

  private:
    std::vector<std::vector<int>> layers_;
    std::vector<int> layer_cell_;  // cell index per layer
};

// Normalized suitable generator
//   z = (1/|S_f|) sum_{pi in S_f/S'} sum_{tau in S_beta}
//         (-1)^tau tr*(rho1(pi) sigma1 tau rho2(pi)^{-1}, f),
// S' = rho1^{-1}(sigma1 S_beta sigma1^{-1}) ∩ rho2^{-1}(S_beta) ∩ S_f.
TraceExpression suitable_generator(const Permutation& sigma1, const YoungLayout& layout,
                                   const HatQuiver& hq, const DoubledQuiver& dq,
                                   int r_cap = kDefaultRCap);

}  // namespace mixquiv
