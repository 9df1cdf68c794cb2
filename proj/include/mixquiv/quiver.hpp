#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mixquiv/common.hpp"

namespace mixquiv {

// Vertex of the doubled quiver: a vertex of Q, or the starred copy of an
// ordinary vertex. Paired vertices never get starred copies.
struct DQVertex {
    int v = 0;
    bool star = false;
    bool operator==(const DQVertex& o) const { return v == o.v && star == o.star; }
    bool operator!=(const DQVertex& o) const { return !(*this == o); }
    bool operator<(const DQVertex& o) const { return v != o.v ? v < o.v : star < o.star; }
    std::string str() const { return std::to_string(v) + (star ? "*" : ""); }
};

// One step of a path in the doubled quiver: an arrow of Q, possibly barred.
// A barred step evaluates to the transpose of the arrow's matrix.
struct PathStep {
    int arrow = 0;
    bool bar = false;
    bool operator==(const PathStep& o) const { return arrow == o.arrow && bar == o.bar; }
    bool operator!=(const PathStep& o) const { return !(*this == o); }
    bool operator<(const PathStep& o) const {
        return arrow != o.arrow ? arrow < o.arrow : bar < o.bar;
    }
    PathStep barred() const { return {arrow, !bar}; }
};

struct Arrow {
    int id = 0;
    int from = 0;
    int to = 0;
};

enum class ArrowClass { A1, A2, A3 };

// Quiver with a vertex partition into ordinary vertices and pairs
// (i_q, j_q); the j_q spaces are the dualized ones.
class Quiver {
  public:
    Quiver(int num_vertices, std::vector<int> ordinary, std::vector<std::pair<int, int>> pairs,
           std::vector<Arrow> arrows);

    int num_vertices() const { return n_; }
    const std::vector<int>& ordinary() const { return ordinary_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    const Arrow& arrow(int id) const;
    bool has_vertex(int v) const { return v >= 1 && v <= n_; }

    bool is_ordinary(int v) const { return cell_of_.at(v).pair < 0; }
    bool is_pair_head(int v) const { return cell_of_.at(v).pair >= 0 && !cell_of_.at(v).is_j; }
    bool is_pair_tail(int v) const { return cell_of_.at(v).pair >= 0 && cell_of_.at(v).is_j; }
    // index into pairs() for a paired vertex
    int pair_index(int v) const { return cell_of_.at(v).pair; }
    // the other member of v's pair
    int partner(int v) const;

    ArrowClass classify(int arrow_id) const;

    // orthogonal/symplectic model quiver: loops a_1..a_m at the pair head,
    // b: i_q -> j_q,
    // c: j_q -> i_q. Arrow ids: loops 1..m, b = m+1, c = m+2.
    static Quiver ortho_model(int m);

  private:
    struct Cell {
        int pair = -1;  // -1 for ordinary
        bool is_j = false;
    };
    int n_;
    std::vector<int> ordinary_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<Arrow> arrows_;
    std::map<int, Cell> cell_of_;
    std::map<int, int> arrow_pos_;
};

// Per-vertex dimensions; starred exactly at the j_q vertices.
class DimensionVector {
  public:
    DimensionVector(const Quiver& q, std::vector<int> dims);

    int dim(int v) const { return dims_.at(static_cast<size_t>(v) - 1); }
    int dim(const DQVertex& v) const { return dim(v.v); }  // d_{i*} = d_i
    bool starred(int v) const { return starred_.at(static_cast<size_t>(v) - 1); }
    const std::vector<int>& dims() const { return dims_; }

  private:
    std::vector<int> dims_;
    std::vector<bool> starred_;
};

// classify_arrows: A1/A2/A3 decomposition. Arrows with both endpoints
// dualized are rejected. The dimension vector is only checked for
// compatibility; classes depend on the partition alone.
std::vector<ArrowClass> classify_arrows(const Quiver& q, const DimensionVector& dv);

// Doubled quiver Q^(d): arrows A together with their bars, endpoints by the
// case rules (ordinary endpoints move to stars with direction reversed,
// paired endpoints swap i_q <-> j_q).
class DoubledQuiver {
  public:
    explicit DoubledQuiver(const Quiver& q);

    const Quiver& base() const { return *q_; }

    DQVertex origin(const PathStep& s) const;
    DQVertex end(const PathStep& s) const;
    PathStep involution(const PathStep& s) const { return s.barred(); }

    std::vector<PathStep> all_steps() const;
    std::vector<DQVertex> all_vertices() const;

  private:
    const Quiver* q_;
};

// Multidegree r̄ = (r_a); the graded component is nonzero only when the A2
// and A3 totals agree.
class Multidegree {
  public:
    Multidegree(const Quiver& q, std::map<int, int> deg);

    int of(int arrow_id) const;
    int r() const { return r_; }
    int s() const { return s_; }
    int t() const { return r_ - 2 * s_; }
    bool nonvacuous() const { return nonvacuous_; }
    const std::map<int, int>& map() const { return deg_; }

  private:
    std::map<int, int> deg_;
    int r_ = 0, s_ = 0;
    bool nonvacuous_ = true;
};

// Q̂: each arrow a split into r_a copies, enumerated 1..r with A1 < A2 < A3;
// f : [1,r] -> A is the arrow specialization.
class HatQuiver {
  public:
    // `order` optionally overrides the within-class arrow order (default:
    // arrow-id order). It must list every arrow of positive degree once and
    // be sorted A1 < A2 < A3.
    HatQuiver(const Quiver& q, const Multidegree& deg,
              const std::vector<int>& order = {});

    const Quiver& base() const { return *q_; }
    int r() const { return r_; }
    int s() const { return s_; }
    int t() const { return t_; }

    int f(int j) const;                  // arrow id of hat-arrow j in [1, r]
    int cls(int j) const;                // 1, 2 or 3
    std::pair<int, int> segment(int arrow_id) const;  // [lo, hi], empty -> (1,0)

    int origin(int j) const { return q_->arrow(f(j)).from; }
    int end(int j) const { return q_->arrow(f(j)).to; }

  private:
    const Quiver* q_;
    int r_, s_, t_;
    std::vector<int> farrow_;  // size r_+1, 1-based
    std::map<int, std::pair<int, int>> segments_;
};

// The T/I sets of the admissibility conditions, assembled per partition
// cell with the ±s shifts of conditions 1-2.
struct AdmissibilityCell {
    bool is_pair = false;
    int id = 0;                 // vertex id (ordinary) or pair index
    std::vector<int> tcal;      // 𝒯(x), sorted
    std::vector<int> ical;      // ℐ(x), sorted
};

struct AdmissibilitySets {
    int r = 0, s = 0, t = 0;
    std::vector<AdmissibilityCell> cells;
};

AdmissibilitySets admissibility_sets(const HatQuiver& hq);

// --- JSON quiver format ----------------------------------------------------
// { "vertices": n, "ordinary": [..], "pairs": [[i,j],..],
//   "arrows": [{"id":..,"from":..,"to":..},..], "dims": {"1": d, ...} }
struct QuiverFile {
    Quiver quiver;
    std::optional<std::vector<int>> dims;
};

QuiverFile parse_quiver_json(const std::string& text);
std::string quiver_to_json(const Quiver& q, const std::vector<int>* dims);

}  // namespace mixquiv
