#include "mixquiv/relations.hpp"

#include <chrono>
#include <cmath>
#include <functional>

#include <nlohmann/json.hpp>

namespace mixquiv {

PathElement::PathElement(const DoubledQuiver& dq, std::vector<Monomial> monomials)
    : monos_(std::move(monomials)) {
    require(!monos_.empty(), "path element: needs at least one monomial");
    for (size_t k = 0; k < monos_.size(); ++k) {
        const auto& m = monos_[k];
        require(!m.steps.empty(), "path element: monomials must have non-zero degree");
        for (size_t i = 0; i + 1 < m.steps.size(); ++i)
            require(dq.end(m.steps[i]) == dq.origin(m.steps[i + 1]),
                    "path element: monomial steps are not composable");
        DQVertex f = dq.origin(m.steps.front()), t = dq.end(m.steps.back());
        if (k == 0) {
            from_ = f;
            to_ = t;
        } else {
            require(f == from_ && t == to_,
                    "path element: monomials must share origin and end");
        }
    }
}

PathElement PathElement::single(const DoubledQuiver& dq, std::vector<PathStep> steps,
                                const Rat& coeff) {
    return PathElement(dq, {Monomial{std::move(steps), coeff}});
}

PathElement PathElement::iota(const DoubledQuiver& dq) const {
    std::vector<Monomial> monos;
    for (const auto& m : monos_) {
        Monomial im;
        im.coeff = m.coeff;
        for (size_t i = m.steps.size(); i-- > 0;) im.steps.push_back(m.steps[i].barred());
        monos.push_back(std::move(im));
    }
    return PathElement(dq, std::move(monos));
}

namespace {

// Distribute path elements through the trace factors of a model expression.
// model_of maps a model step to the element to substitute (already
// involuted for barred occurrences).
TraceExpression substitute_model(const TraceExpression& model, const DoubledQuiver& dq,
                                 const std::function<const PathElement&(const PathStep&)>& model_of) {
    TraceExpression out;
    for (const auto& [factors, coeff] : model.terms()) {
        // per term: expand factor by factor
        std::vector<std::pair<TraceExpression::FactorList, Rat>> partial{{{}, coeff}};
        for (const CyclePath& cycle : factors) {
            // expand one trace factor into a sum of cycles
            std::vector<std::pair<CyclePath, Rat>> options;
            std::vector<std::pair<std::vector<PathStep>, Rat>> acc{{{}, Rat(1)}};
            for (const PathStep& st : cycle.steps()) {
                const PathElement& el = model_of(st);
                std::vector<std::pair<std::vector<PathStep>, Rat>> next;
                for (const auto& [steps, c] : acc)
                    for (const auto& mono : el.monomials()) {
                        std::vector<PathStep> ext = steps;
                        ext.insert(ext.end(), mono.steps.begin(), mono.steps.end());
                        next.emplace_back(std::move(ext), c * mono.coeff);
                    }
                acc = std::move(next);
            }
            for (auto& [steps, c] : acc) options.emplace_back(CyclePath(dq, std::move(steps)), c);
            std::vector<std::pair<TraceExpression::FactorList, Rat>> grown;
            for (const auto& [fl, c] : partial)
                for (const auto& [cyc, oc] : options) {
                    TraceExpression::FactorList nfl = fl;
                    nfl.push_back(cyc);
                    grown.emplace_back(std::move(nfl), c * oc);
                }
            partial = std::move(grown);
        }
        for (auto& [fl, c] : partial) out.add_term(std::move(fl), c);
    }
    return out;
}

}  // namespace

TraceExpression substitute_sigma_r(const PathElement& f, int r, const DoubledQuiver& dq,
                                   int r_cap) {
    require(f.closed(), "substitute_sigma_r: f must be closed (incident to one vertex)");
    require(r >= 1, "substitute_sigma_r: r must be >= 1");
    TraceExpression model = sigma_rs(r, 0, r_cap);
    PathElement fi = f.iota(dq);
    auto pick = [&](const PathStep& st) -> const PathElement& {
        require(st.arrow == 1, "substitute_sigma_r: unexpected model arrow");
        return st.bar ? fi : f;
    };
    return substitute_model(model, dq, pick);
}

TraceExpression substitute_sigma_rs(const PathElement& f1, const PathElement& f2,
                                    const PathElement& f3, int r, int s,
                                    const DoubledQuiver& dq, int r_cap) {
    require(f1.closed(), "substitute_sigma_rs: f1 must be closed");
    const DQVertex u = f1.from();
    const Quiver& q = dq.base();
    require(!u.star && !q.is_pair_tail(u.v),
            "substitute_sigma_rs: f1 must be incident to an ordinary vertex or a pair head");
    DQVertex udual = q.is_ordinary(u.v) ? DQVertex{u.v, true} : DQVertex{q.partner(u.v), false};
    require(f2.from() == u && f2.to() == udual,
            "substitute_sigma_rs: f2 must pass from f1's vertex to its dual partner");
    require(f3.from() == udual && f3.to() == u,
            "substitute_sigma_rs: f3 must pass from the dual partner back to f1's vertex");
    TraceExpression model = sigma_rs(r, s, r_cap);
    PathElement i1 = f1.iota(dq), i2 = f2.iota(dq), i3 = f3.iota(dq);
    auto pick = [&](const PathStep& st) -> const PathElement& {
        switch (st.arrow) {
            case 1: return st.bar ? i1 : f1;
            case 2: return st.bar ? i2 : f2;
            case 3: return st.bar ? i3 : f3;
            default: throw Error("substitute_sigma_rs: unexpected model arrow");
        }
    };
    return substitute_model(model, dq, pick);
}

std::string schwartz_zippel_bound(int degree, const std::string& field_name,
                                  std::uint64_t field_size, int trials) {
    if (degree <= 0) return "exact";
    double per_trial = static_cast<double>(degree) / static_cast<double>(field_size);
    double bits = -static_cast<double>(trials) * std::log2(per_trial);
    return "P(false all-zero) <= (" + std::to_string(degree) + "/" + std::to_string(field_size) +
           ")^" + std::to_string(trials) + " <= 2^-" +
           std::to_string(static_cast<long long>(bits)) + " over " + field_name;
}

template <class F>
std::string serialize_point(const RepPoint<F>& p) {
    nlohmann::ordered_json j;
    for (const auto& [id, m] : p.y) {
        auto rows = nlohmann::ordered_json::array();
        for (int i = 0; i < m.rows(); ++i) {
            auto row = nlohmann::ordered_json::array();
            for (int c = 0; c < m.cols(); ++c) row.push_back(FieldOps<F>::str(m(i, c)));
            rows.push_back(row);
        }
        j[std::to_string(id)] = rows;
    }
    return j.dump();
}

template std::string serialize_point<Rat>(const RepPoint<Rat>&);
template std::string serialize_point<Fp>(const RepPoint<Fp>&);

std::string VerificationReport::to_json(bool with_timestamp) const {
    nlohmann::ordered_json j;
    j["expr"] = expr_id;
    j["trials"] = trials;
    j["field"] = field;
    j["seed"] = seed;
    j["outcome"] = outcome;
    if (witness_json) j["witness"] = nlohmann::ordered_json::parse(*witness_json);
    j["prob_bound"] = prob_bound;
    j["ms"] = ms;
    if (with_timestamp)
        j["timestamp_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::system_clock::now().time_since_epoch())
                                .count();
    return j.dump(2);
}

namespace {

template <class F>
RepPoint<F> small_point(const Quiver& q, const DimensionVector& dv, Rng& rng) {
    RepPoint<F> p;
    for (const Arrow& a : q.arrows()) {
        Matrix<F> m(dv.dim(a.to), dv.dim(a.from));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                m(i, j) = FieldOps<F>::from_int(rng.range(-1, 1));
        p.y[a.id] = m;
    }
    return p;
}

int expression_degree(const TraceExpression& e) {
    int deg = 0;
    for (const auto& [factors, c] : e.terms()) {
        int d = 0;
        for (const CyclePath& f : factors) d += static_cast<int>(f.length());
        deg = std::max(deg, d);
    }
    return deg;
}

template <class F>
std::uint64_t field_sample_size() {
    if constexpr (std::is_same_v<F, Fp>) return Fp::modulus();
    return 19;  // rational entries drawn from [-9, 9]
}

}  // namespace

template <class F>
VerificationReport verify_vanishing(const TraceExpression& e, const Quiver& q,
                                    const DimensionVector& dv, int trials, std::uint64_t seed,
                                    const std::string& expr_id) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.expr_id = expr_id;
    rep.trials = trials;
    rep.field = FieldOps<F>::name();
    rep.seed = seed;
    Rng rng(seed);
    std::optional<RepPoint<F>> counter;
    for (int k = 0; k < trials && !counter; ++k) {
        Rng sub = rng.split(static_cast<std::uint64_t>(k));
        RepPoint<F> p = random_rep<F>(q, dv, sub);
        if (!FieldOps<F>::is_zero(eval_expr(e, p))) counter = p;
    }
    if (counter) {
        // prefer a witness with entries in {-1,0,1} when one exists
        Rng rng2(seed ^ 0x5bf03635ULL);
        for (int k = 0; k < 64; ++k) {
            RepPoint<F> p = small_point<F>(q, dv, rng2);
            if (!FieldOps<F>::is_zero(eval_expr(e, p))) {
                counter = p;
                break;
            }
        }
        require(!FieldOps<F>::is_zero(eval_expr(e, *counter)),
                "verify_vanishing: witness does not re-evaluate to nonzero");
        rep.outcome = "counterexample";
        rep.witness_json = serialize_point(*counter);
        rep.prob_bound = "exact witness";
    } else {
        rep.outcome = "all-zero";
        rep.prob_bound = schwartz_zippel_bound(expression_degree(e), FieldOps<F>::name(),
                                               field_sample_size<F>(), trials);
    }
    rep.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                   t0)
                 .count();
    return rep;
}

template VerificationReport verify_vanishing<Rat>(const TraceExpression&, const Quiver&,
                                                  const DimensionVector&, int, std::uint64_t,
                                                  const std::string&);
template VerificationReport verify_vanishing<Fp>(const TraceExpression&, const Quiver&,
                                                 const DimensionVector&, int, std::uint64_t,
                                                 const std::string&);

template <class F>
VerificationReport verify_invariance(const TraceExpression& e, const Quiver& q,
                                     const DimensionVector& dv, int trials, std::uint64_t seed,
                                     const std::string& expr_id) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.expr_id = expr_id;
    rep.trials = trials;
    rep.field = FieldOps<F>::name();
    rep.seed = seed;
    rep.outcome = "invariant";
    Rng rng(seed);
    for (int k = 0; k < trials; ++k) {
        Rng sub = rng.split(static_cast<std::uint64_t>(k));
        Rng rp = sub.split(1), rg = sub.split(2);
        RepPoint<F> p = random_rep<F>(q, dv, rp);
        GroupElement<F> g = random_group<F>(q, dv, rg);
        F a = eval_expr(e, p);
        F b = eval_expr(e, act(p, g, q));
        if (!(a == b)) {
            rep.outcome = "counterexample";
            rep.witness_json = serialize_point(p);
            break;
        }
    }
    if (rep.passed()) rep.prob_bound = "invariance holds on all sampled (p, g)";
    rep.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                   t0)
                 .count();
    return rep;
}

template VerificationReport verify_invariance<Rat>(const TraceExpression&, const Quiver&,
                                                   const DimensionVector&, int, std::uint64_t,
                                                   const std::string&);
template VerificationReport verify_invariance<Fp>(const TraceExpression&, const Quiver&,
                                                  const DimensionVector&, int, std::uint64_t,
                                                  const std::string&);

std::vector<std::vector<CyclePath>> span_monomials(const Quiver& q, const Multidegree& rbar) {
    if (!rbar.nonvacuous() || rbar.r() == 0) return {};
    DoubledQuiver dq(q);
    std::vector<CyclePath> cycles = enumerate_cycles(dq, rbar.r());
    std::vector<CyclePath> usable;
    for (const CyclePath& c : cycles) {
        bool ok = true;
        for (const auto& [arrow, count] : c.multidegree())
            if (count > rbar.of(arrow)) ok = false;
        if (ok) usable.push_back(c);
    }
    std::vector<std::vector<CyclePath>> monomials;
    std::vector<CyclePath> current;
    std::map<int, int> remaining = rbar.map();
    auto deg_left = [&]() {
        int t = 0;
        for (const auto& [a, d] : remaining) t += d;
        return t;
    };
    std::function<void(size_t)> rec = [&](size_t from) {
        if (deg_left() == 0) {
            monomials.push_back(current);
            return;
        }
        for (size_t k = from; k < usable.size(); ++k) {
            bool fits = true;
            auto md = usable[k].multidegree();
            for (const auto& [a, d] : md)
                if (remaining[a] < d) fits = false;
            if (!fits) continue;
            for (const auto& [a, d] : md) remaining[a] -= d;
            current.push_back(usable[k]);
            rec(k);  // multisets: allow repeats of the same cycle
            current.pop_back();
            for (const auto& [a, d] : md) remaining[a] += d;
        }
    };
    rec(0);
    return monomials;
}

int graded_span_dimension(const Quiver& q, const DimensionVector& dv, const Multidegree& rbar,
                          int sample_points, std::uint64_t seed) {
    auto monomials = span_monomials(q, rbar);
    if (monomials.empty()) return 0;
    require(sample_points >= static_cast<int>(monomials.size()),
            "graded_span_dimension: need at least as many sample points as monomials");
    Rng rng(seed);
    std::vector<std::vector<Fp>> rows(monomials.size(), std::vector<Fp>());
    for (int c = 0; c < sample_points; ++c) {
        Rng sub = rng.split(static_cast<std::uint64_t>(c));
        RepPoint<Fp> p = random_rep<Fp>(q, dv, sub);
        std::map<CyclePath, Fp> cache;
        for (size_t m = 0; m < monomials.size(); ++m) {
            Fp v = Fp::one();
            for (const CyclePath& cyc : monomials[m]) {
                auto it = cache.find(cyc);
                if (it == cache.end()) it = cache.emplace(cyc, eval_cycle(cyc, p)).first;
                v *= it->second;
            }
            rows[m].push_back(v);
        }
    }
    // Gaussian rank over F_p
    int rank = 0, cols = sample_points;
    int nrows = static_cast<int>(rows.size());
    for (int col = 0; col < cols && rank < nrows; ++col) {
        int piv = -1;
        for (int i = rank; i < nrows; ++i)
            if (!rows[static_cast<size_t>(i)][static_cast<size_t>(col)].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<size_t>(piv)], rows[static_cast<size_t>(rank)]);
        Fp d = rows[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (int i = rank + 1; i < nrows; ++i) {
            Fp f = rows[static_cast<size_t>(i)][static_cast<size_t>(col)] / d;
            if (f.is_zero()) continue;
            for (int j = col; j < cols; ++j)
                rows[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * rows[static_cast<size_t>(rank)][static_cast<size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

}  // namespace mixquiv
