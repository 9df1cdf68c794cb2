#include "mixquiv/quiver.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

namespace mixquiv {

Quiver::Quiver(int num_vertices, std::vector<int> ordinary,
               std::vector<std::pair<int, int>> pairs, std::vector<Arrow> arrows)
    : n_(num_vertices),
      ordinary_(std::move(ordinary)),
      pairs_(std::move(pairs)),
      arrows_(std::move(arrows)) {
    require(n_ >= 1, "quiver: needs at least one vertex");
    std::set<int> seen;
    for (int v : ordinary_) {
        require(has_vertex(v), "quiver: ordinary vertex " + std::to_string(v) + " out of range");
        require(seen.insert(v).second,
                "quiver: vertex " + std::to_string(v) + " lies in two partition cells");
        cell_of_[v] = Cell{};
    }
    for (size_t qx = 0; qx < pairs_.size(); ++qx) {
        auto [i, j] = pairs_[qx];
        require(has_vertex(i) && has_vertex(j), "quiver: pair vertex out of range");
        require(i != j, "quiver: pair members must be distinct vertices");
        require(seen.insert(i).second,
                "quiver: vertex " + std::to_string(i) + " lies in two partition cells");
        require(seen.insert(j).second,
                "quiver: vertex " + std::to_string(j) + " lies in two partition cells");
        cell_of_[i] = Cell{static_cast<int>(qx), false};
        cell_of_[j] = Cell{static_cast<int>(qx), true};
    }
    for (int v = 1; v <= n_; ++v)
        require(seen.count(v),
                "quiver: vertex " + std::to_string(v) + " lies in no partition cell");
    std::sort(arrows_.begin(), arrows_.end(),
              [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
    for (size_t k = 0; k < arrows_.size(); ++k) {
        const Arrow& a = arrows_[k];
        require(a.id >= 1, "quiver: arrow ids must be positive");
        require(!arrow_pos_.count(a.id), "quiver: duplicate arrow id " + std::to_string(a.id));
        require(has_vertex(a.from) && has_vertex(a.to),
                "quiver: arrow " + std::to_string(a.id) + " has an endpoint that is not a vertex");
        arrow_pos_[a.id] = static_cast<int>(k);
    }
}

const Arrow& Quiver::arrow(int id) const {
    auto it = arrow_pos_.find(id);
    require(it != arrow_pos_.end(), "quiver: unknown arrow id " + std::to_string(id));
    return arrows_[static_cast<size_t>(it->second)];
}

int Quiver::partner(int v) const {
    const Cell& c = cell_of_.at(v);
    require(c.pair >= 0, "quiver: vertex " + std::to_string(v) + " is not paired");
    const auto& p = pairs_[static_cast<size_t>(c.pair)];
    return c.is_j ? p.first : p.second;
}

ArrowClass Quiver::classify(int arrow_id) const {
    const Arrow& a = arrow(arrow_id);
    bool from_dual = is_pair_tail(a.from);
    bool to_dual = is_pair_tail(a.to);
    require(!(from_dual && to_dual), "quiver: arrow " + std::to_string(arrow_id) +
                                         " joins two dualized vertices (not supported)");
    if (to_dual) return ArrowClass::A2;
    if (from_dual) return ArrowClass::A3;
    return ArrowClass::A1;
}

Quiver Quiver::ortho_model(int m) {
    require(m >= 1, "ortho_model: need at least one loop");
    std::vector<Arrow> arrows;
    for (int i = 1; i <= m; ++i) arrows.push_back({i, 1, 1});
    arrows.push_back({m + 1, 1, 2});  // b
    arrows.push_back({m + 2, 2, 1});  // c
    return Quiver(2, {}, {{1, 2}}, arrows);
}

DimensionVector::DimensionVector(const Quiver& q, std::vector<int> dims) : dims_(std::move(dims)) {
    require(static_cast<int>(dims_.size()) == q.num_vertices(),
            "dims: expected one dimension per vertex");
    for (int d : dims_) require(d >= 1, "dims: dimensions must be positive");
    starred_.assign(dims_.size(), false);
    for (const auto& [i, j] : q.pairs()) {
        require(dims_[static_cast<size_t>(i) - 1] == dims_[static_cast<size_t>(j) - 1],
                "dims: pair (" + std::to_string(i) + "," + std::to_string(j) +
                    ") must have equal dimensions");
        starred_[static_cast<size_t>(j) - 1] = true;
    }
}

std::vector<ArrowClass> classify_arrows(const Quiver& q, const DimensionVector& dv) {
    (void)dv;  // compatibility enforced by its constructor
    std::vector<ArrowClass> out;
    out.reserve(q.arrows().size());
    for (const Arrow& a : q.arrows()) out.push_back(q.classify(a.id));
    return out;
}

DoubledQuiver::DoubledQuiver(const Quiver& q) : q_(&q) {}

DQVertex DoubledQuiver::origin(const PathStep& s) const {
    const Arrow& a = q_->arrow(s.arrow);
    if (!s.bar) return {a.from, false};
    // i(ā) is driven by t(a)
    if (q_->is_ordinary(a.to)) return {a.to, true};
    return {q_->partner(a.to), false};
}

DQVertex DoubledQuiver::end(const PathStep& s) const {
    const Arrow& a = q_->arrow(s.arrow);
    if (!s.bar) return {a.to, false};
    // t(ā) is driven by i(a)
    if (q_->is_ordinary(a.from)) return {a.from, true};
    return {q_->partner(a.from), false};
}

std::vector<PathStep> DoubledQuiver::all_steps() const {
    std::vector<PathStep> out;
    for (const Arrow& a : q_->arrows()) {
        out.push_back({a.id, false});
        out.push_back({a.id, true});
    }
    return out;
}

std::vector<DQVertex> DoubledQuiver::all_vertices() const {
    std::vector<DQVertex> out;
    for (int v = 1; v <= q_->num_vertices(); ++v) {
        out.push_back({v, false});
        if (q_->is_ordinary(v)) out.push_back({v, true});
    }
    return out;
}

Multidegree::Multidegree(const Quiver& q, std::map<int, int> deg) : deg_(std::move(deg)) {
    int s2 = 0, s3 = 0;
    for (const auto& [id, d] : deg_) {
        require(d >= 0, "multidegree: degrees must be non-negative");
        switch (q.classify(id)) {
            case ArrowClass::A1: break;
            case ArrowClass::A2: s2 += d; break;
            case ArrowClass::A3: s3 += d; break;
        }
        r_ += d;
        (void)q.arrow(id);
    }
    nonvacuous_ = (s2 == s3);
    s_ = s2;
}

int Multidegree::of(int arrow_id) const {
    auto it = deg_.find(arrow_id);
    return it == deg_.end() ? 0 : it->second;
}

HatQuiver::HatQuiver(const Quiver& q, const Multidegree& deg, const std::vector<int>& order)
    : q_(&q) {
    require(deg.nonvacuous(),
            "hat quiver: multidegree has unequal A2/A3 totals (component is zero)");
    r_ = deg.r();
    s_ = deg.s();
    t_ = deg.t();
    std::vector<int> arr = order;
    if (arr.empty()) {
        for (const Arrow& a : q.arrows())
            if (deg.of(a.id) > 0) arr.push_back(a.id);
        std::stable_sort(arr.begin(), arr.end(), [&](int x, int y) {
            return static_cast<int>(q.classify(x)) < static_cast<int>(q.classify(y));
        });
    } else {
        std::set<int> want;
        for (const Arrow& a : q.arrows())
            if (deg.of(a.id) > 0) want.insert(a.id);
        std::set<int> got(arr.begin(), arr.end());
        require(want == got, "hat quiver: order must list each positive-degree arrow once");
        for (size_t k = 1; k < arr.size(); ++k)
            require(static_cast<int>(q.classify(arr[k - 1])) <=
                        static_cast<int>(q.classify(arr[k])),
                    "hat quiver: order must place A1 < A2 < A3");
    }
    farrow_.assign(static_cast<size_t>(r_) + 1, 0);
    int next = 1;
    for (int id : arr) {
        int lo = next;
        for (int c = 0; c < deg.of(id); ++c) farrow_[static_cast<size_t>(next++)] = id;
        segments_[id] = {lo, next - 1};
    }
}

int HatQuiver::f(int j) const {
    require(j >= 1 && j <= r_, "hat quiver: index out of [1,r]");
    return farrow_[static_cast<size_t>(j)];
}

int HatQuiver::cls(int j) const {
    if (j <= t_) return 1;
    if (j <= t_ + s_) return 2;
    return 3;
}

std::pair<int, int> HatQuiver::segment(int arrow_id) const {
    auto it = segments_.find(arrow_id);
    return it == segments_.end() ? std::make_pair(1, 0) : it->second;
}

AdmissibilitySets admissibility_sets(const HatQuiver& hq) {
    const Quiver& q = hq.base();
    AdmissibilitySets out;
    out.r = hq.r();
    out.s = hq.s();
    out.t = hq.t();
    auto cell_for = [&](int v) -> int {
        // cells are listed: ordinary vertices first (by id), then pairs
        if (q.is_ordinary(v)) {
            int k = 0;
            for (int w : q.ordinary()) {
                if (w == v) return k;
                ++k;
            }
        }
        return static_cast<int>(q.ordinary().size()) + q.pair_index(v);
    };
    for (int v : q.ordinary()) out.cells.push_back({false, v, {}, {}});
    for (size_t p = 0; p < q.pairs().size(); ++p)
        out.cells.push_back({true, static_cast<int>(p), {}, {}});

    int s = hq.s();
    for (int j = 1; j <= hq.r(); ++j) {
        int head = hq.end(j), tail = hq.origin(j);
        int c = hq.cls(j);
        // 𝒯 contributions
        if (c == 1) {
            out.cells[cell_for(head)].tcal.push_back(j);
        } else if (c == 3) {
            out.cells[cell_for(head)].tcal.push_back(j - s);  // T(·) ∩ Â3 − s
            out.cells[cell_for(q.partner(tail))].tcal.push_back(j);  // T(j_q): i(j)=j_q
        }
        // ℐ contributions
        if (c == 1) {
            out.cells[cell_for(tail)].ical.push_back(j);
        } else if (c == 2) {
            out.cells[cell_for(tail)].ical.push_back(j + s);  // I(·) ∩ Â2 + s
            out.cells[cell_for(q.partner(head))].ical.push_back(j);  // I(j_q): t(j)=j_q
        }
    }
    for (auto& c : out.cells) {
        std::sort(c.tcal.begin(), c.tcal.end());
        std::sort(c.ical.begin(), c.ical.end());
    }
    return out;
}

// --- JSON ------------------------------------------------------------------

QuiverFile parse_quiver_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("quiver json: parse failure: ") + e.what());
    }
    try {
        int n = j.at("vertices").get<int>();
        std::vector<int> ordinary;
        if (j.contains("ordinary")) ordinary = j["ordinary"].get<std::vector<int>>();
        std::vector<std::pair<int, int>> pairs;
        if (j.contains("pairs"))
            for (const auto& p : j["pairs"]) {
                require(p.is_array() && p.size() == 2, "quiver json: each pair must be [i, j]");
                pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
            }
        std::vector<Arrow> arrows;
        for (const auto& a : j.at("arrows"))
            arrows.push_back({a.at("id").get<int>(), a.at("from").get<int>(), a.at("to").get<int>()});
        QuiverFile out{Quiver(n, ordinary, pairs, arrows), std::nullopt};
        if (j.contains("dims")) {
            std::vector<int> dims(static_cast<size_t>(n), 0);
            for (auto it = j["dims"].begin(); it != j["dims"].end(); ++it) {
                int v = std::stoi(it.key());
                require(v >= 1 && v <= n, "quiver json: dims key out of range: " + it.key());
                dims[static_cast<size_t>(v) - 1] = it.value().get<int>();
            }
            for (int v = 1; v <= n; ++v)
                require(dims[static_cast<size_t>(v) - 1] >= 1,
                        "quiver json: missing dimension for vertex " + std::to_string(v));
            out.dims = dims;
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("quiver json: bad structure: ") + e.what());
    }
}

std::string quiver_to_json(const Quiver& q, const std::vector<int>* dims) {
    nlohmann::ordered_json j;
    j["vertices"] = q.num_vertices();
    j["ordinary"] = q.ordinary();
    auto pairs = nlohmann::ordered_json::array();
    for (const auto& [a, b] : q.pairs()) pairs.push_back({a, b});
    j["pairs"] = pairs;
    auto arrows = nlohmann::ordered_json::array();
    for (const Arrow& a : q.arrows())
        arrows.push_back({{"id", a.id}, {"from", a.from}, {"to", a.to}});
    j["arrows"] = arrows;
    if (dims) {
        nlohmann::ordered_json d;
        for (int v = 1; v <= q.num_vertices(); ++v)
            d[std::to_string(v)] = (*dims)[static_cast<size_t>(v) - 1];
        j["dims"] = d;
    }
    return j.dump(2);
}

}  // namespace mixquiv
