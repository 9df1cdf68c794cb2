#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixquiv/trstar.hpp"

namespace mixquiv {

// Q-linear combination of open paths in Q^(d), all passing from `from`
// to `to`; the admissible-substitution arguments of the defining relations.
class PathElement {
  public:
    struct Monomial {
        std::vector<PathStep> steps;  // nonempty, composable, from -> to
        Rat coeff;
    };

    PathElement(const DoubledQuiver& dq, std::vector<Monomial> monomials);

    static PathElement single(const DoubledQuiver& dq, std::vector<PathStep> steps,
                              const Rat& coeff = 1);

    const DQVertex& from() const { return from_; }
    const DQVertex& to() const { return to_; }
    bool closed() const { return from_ == to_; }
    const std::vector<Monomial>& monomials() const { return monos_; }

    // involution: each monomial reversed with bars toggled (to -> from)
    PathElement iota(const DoubledQuiver& dq) const;

  private:
    DQVertex from_, to_;
    std::vector<Monomial> monos_;
};

// sigma_r(f) for f closed at a vertex of Q^(d): expand the universal
// sigma_r expression substituting the formal loop by f.
TraceExpression substitute_sigma_r(const PathElement& f, int r, const DoubledQuiver& dq,
                                   int r_cap = kDefaultRCap);

// sigma_{r,s}(f1,f2,f3): f1 closed at u (ordinary vertex or pair head),
// f2 passing u -> dual partner, f3 passing dual partner -> u.
TraceExpression substitute_sigma_rs(const PathElement& f1, const PathElement& f2,
                                    const PathElement& f3, int r, int s,
                                    const DoubledQuiver& dq, int r_cap = kDefaultRCap);

struct VerificationReport {
    std::string expr_id;
    int trials = 0;
    std::string field;
    std::uint64_t seed = 0;
    std::string outcome;  // "all-zero" | "counterexample" | "invariant"
    std::optional<std::string> witness_json;
    std::string prob_bound;
    long long ms = 0;

    bool passed() const { return outcome != "counterexample"; }
    std::string to_json(bool with_timestamp) const;
};

// Schwartz-Zippel style bound string for a randomized all-zero verdict.
std::string schwartz_zippel_bound(int degree, const std::string& field_name,
                                  std::uint64_t field_size, int trials);

template <class F>
std::string serialize_point(const RepPoint<F>& p);

// Evaluates e at `trials` random points; all-zero or a reproducible
// counterexample (minimized over {-1,0,1} entries when possible).
template <class F>
VerificationReport verify_vanishing(const TraceExpression& e, const Quiver& q,
                                    const DimensionVector& dv, int trials, std::uint64_t seed,
                                    const std::string& expr_id = "expr");

// Checks eval(e, act(p,g)) == eval(e, p) over random (p, g).
template <class F>
VerificationReport verify_invariance(const TraceExpression& e, const Quiver& q,
                                     const DimensionVector& dv, int trials, std::uint64_t seed,
                                     const std::string& expr_id = "expr");

// Rank over F_p of the evaluation matrix of all multidegree-rbar cycle
// products at random points; a lower bound for dim J(Q,t)(r̄).
int graded_span_dimension(const Quiver& q, const DimensionVector& dv, const Multidegree& rbar,
                          int sample_points, std::uint64_t seed);

// The multidegree-rbar monomials themselves (products of cycle classes).
std::vector<std::vector<CyclePath>> span_monomials(const Quiver& q, const Multidegree& rbar);

}  // namespace mixquiv
