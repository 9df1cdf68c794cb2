#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixquiv/special.hpp"

using namespace mixquiv;

namespace {

SpecializationMap model_map(const Quiver& q, int N, int n, SpecFlavor flavor,
                            std::set<int> nonstd = {}) {
    return SpecializationMap(q, DimensionVector(q, {N, N}), DimensionVector(q, {n, n}),
                             flavor, std::move(nonstd));
}

}  // namespace

TEST_CASE("structured matrices") {
    CHECK(structured_E<Rat>(3) == Matrix<Rat>::identity(3));
    Matrix<Rat> e = structured_E_Nn<Rat>(5, 2);
    CHECK(e * e == e);  // idempotent
    CHECK(e.trace() == Rat(3));
    Matrix<Rat> j = structured_J<Rat>(4);
    CHECK(j.transpose() == j.scaled(Rat(-1)));
    CHECK(j * j == Matrix<Rat>::identity(4).scaled(Rat(-1)));
    Matrix<Rat> jnn = structured_J_Nn<Rat>(6, 2);
    // J(N,n) has the tails of J(N) and a zero center
    CHECK(jnn(0, 5) == Rat(1));
    CHECK(jnn(1, 4) == Rat(1));
    CHECK(jnn(5, 0) == Rat(-1));
    CHECK(jnn(2, 3) == Rat(0));
    // J(N,n) = i_{N,n}(0): the b-component of the embedded zero point
    RepPoint<Rat> zero{{{1, Matrix<Rat>(2, 2)}, {2, Matrix<Rat>(2, 2)}, {3, Matrix<Rat>(2, 2)}}};
    Quiver model = Quiver::ortho_model(1);
    CHECK(jnn == embed_point(zero, model_map(model, 6, 2, SpecFlavor::Symplectic, {2, 3})).of(2));
    // and the center-embedded J(n) completes it to J(N)
    RepPoint<Rat> jcenter{{{1, Matrix<Rat>(2, 2)}, {2, structured_J<Rat>(2)}, {3, Matrix<Rat>(2, 2)}}};
    CHECK(embed_point(jcenter, model_map(model, 6, 2, SpecFlavor::Symplectic, {2, 3})).of(2) ==
          structured_J<Rat>(6));
}

TEST_CASE("embed_point: standard, non-standard, and n = N cases") {
    Quiver q = Quiver::ortho_model(1);
    Rng rng(3);
    DimensionVector d2(q, {2, 2});
    RepPoint<Rat> p = random_rep<Rat>(q, d2, rng);

    SUBCASE("n = N is the identity") {
        SpecializationMap id_map = model_map(q, 2, 2, SpecFlavor::Standard);
        RepPoint<Rat> e = embed_point(p, id_map);
        for (const auto& [id, m] : p.y) CHECK(e.of(id) == m);
    }
    SUBCASE("standard zero-pads") {
        SpecializationMap map = model_map(q, 4, 2, SpecFlavor::Standard);
        RepPoint<Rat> e = embed_point(p, map);
        CHECK(e.of(1)(0, 0) == p.of(1)(0, 0));
        CHECK(e.of(1)(3, 3) == Rat(0));
    }
    SUBCASE("non-standard fills the diagonal tail with ones") {
        SpecializationMap map = model_map(q, 4, 2, SpecFlavor::Standard, {2, 3});
        RepPoint<Rat> e = embed_point(p, map);
        CHECK(e.of(2)(2, 2) == Rat(1));
        CHECK(e.of(2)(3, 3) == Rat(1));
        CHECK(e.of(2)(2, 3) == Rat(0));
        CHECK(e.of(1)(3, 3) == Rat(0));  // a stays standard
    }
    SUBCASE("n = 0 non-standard on a square arrow gives the identity") {
        Quiver loopq(1, {1}, {}, {{1, 1, 1}});
        // smallest target dim is 1; embed from 1 to 4 with a 1x1 zero block
        SpecializationMap map(loopq, DimensionVector(loopq, {4}), DimensionVector(loopq, {1}),
                              SpecFlavor::Standard, {1});
        RepPoint<Rat> zero{{{1, Matrix<Rat>(1, 1)}}};
        Matrix<Rat> e = embed_point(zero, map).of(1);
        for (int i = 1; i < 4; ++i) CHECK(e(i, i) == Rat(1));
        CHECK(e(0, 0) == Rat(0));
    }
}

TEST_CASE("symplectic embedding matches the piecewise index rule (N=4, n=2)") {
    Quiver q = Quiver::ortho_model(1);
    Rng rng(5);
    DimensionVector d2(q, {2, 2});
    RepPoint<Rat> p = random_rep<Rat>(q, d2, rng);
    SpecializationMap map = model_map(q, 4, 2, SpecFlavor::Symplectic, {2, 3});
    RepPoint<Rat> e = embed_point(p, map);
    int N = 4, M = 2, m = 1;
    // independent index-by-index evaluator for arrow b
    auto rule_b = [&](int k, int s) -> Rat {  // 1-based
        if (M - m + 1 <= k && k <= M + m && M - m + 1 <= s && s <= M + m)
            return p.of(2)(k - (M - m) - 1, s - (M - m) - 1);
        if (k + s == N + 1 && 1 <= k && k <= M - m) return Rat(1);
        if (k + s == N + 1 && M + m + 1 <= k && k <= N) return Rat(-1);
        return Rat(0);
    };
    auto rule_c = [&](int k, int s) -> Rat {
        if (M - m + 1 <= k && k <= M + m && M - m + 1 <= s && s <= M + m)
            return p.of(3)(k - (M - m) - 1, s - (M - m) - 1);
        if (k + s == N + 1 && 1 <= k && k <= M - m) return Rat(-1);
        if (k + s == N + 1 && M + m + 1 <= k && k <= N) return Rat(1);
        return Rat(0);
    };
    auto rule_a = [&](int k, int s) -> Rat {
        if (M - m + 1 <= k && k <= M + m && M - m + 1 <= s && s <= M + m)
            return p.of(1)(k - (M - m) - 1, s - (M - m) - 1);
        return Rat(0);
    };
    for (int k = 1; k <= N; ++k)
        for (int s = 1; s <= N; ++s) {
            CHECK(e.of(2)(k - 1, s - 1) == rule_b(k, s));
            CHECK(e.of(3)(k - 1, s - 1) == rule_c(k, s));
            CHECK(e.of(1)(k - 1, s - 1) == rule_a(k, s));
        }
    // the embedded zero point on b is J(N, n)
    RepPoint<Rat> zero{{{1, Matrix<Rat>(2, 2)}, {2, Matrix<Rat>(2, 2)}, {3, Matrix<Rat>(2, 2)}}};
    CHECK(embed_point(zero, map).of(2) == structured_J_Nn<Rat>(4, 2));
}

TEST_CASE("embed_group: identity maps to identity; group homomorphism") {
    Quiver q = Quiver::ortho_model(1);
    Rng rng(7);
    DimensionVector d2(q, {2, 2});
    for (SpecFlavor flavor : {SpecFlavor::Standard, SpecFlavor::Symplectic}) {
        SpecializationMap map = model_map(q, 4, 2, flavor,
                                          flavor == SpecFlavor::Symplectic
                                              ? std::set<int>{2, 3}
                                              : std::set<int>{});
        GroupElement<Rat> id = identity_group<Rat>(q, d2);
        CHECK(embed_group(id, map).g.at(1) == Matrix<Rat>::identity(4));
        for (int trial = 0; trial < 20; ++trial) {
            GroupElement<Rat> g = random_group<Rat>(q, d2, rng);
            GroupElement<Rat> h = random_group<Rat>(q, d2, rng);
            GroupElement<Rat> gh = compose(g, h);
            CHECK(embed_group(gh, map).g.at(1) ==
                  embed_group(g, map).g.at(1) * embed_group(h, map).g.at(1));
        }
    }
}

TEST_CASE("equivariance: embed(act(p,g)) = act(embed p, embed g)") {
    Quiver q = Quiver::ortho_model(2);
    Rng rng(11);
    DimensionVector d2(q, {2, 2});
    struct Mode {
        SpecFlavor flavor;
        std::set<int> nonstd;
        int N;
    };
    for (const Mode& mode : {Mode{SpecFlavor::Standard, {}, 4},
                             Mode{SpecFlavor::Standard, {3, 4}, 4},
                             Mode{SpecFlavor::Symplectic, {3, 4}, 6}}) {
        SpecializationMap map = model_map(q, mode.N, 2, mode.flavor, mode.nonstd);
        for (int trial = 0; trial < 25; ++trial) {
            Rng sub = rng.split(static_cast<std::uint64_t>(trial));
            Rng rp = sub.split(1), rg = sub.split(2);
            RepPoint<Rat> p = random_rep<Rat>(q, d2, rp);
            GroupElement<Rat> g = random_group<Rat>(q, d2, rg);
            RepPoint<Rat> lhs = embed_point(act(p, g, q), map);
            RepPoint<Rat> rhs = act(embed_point(p, map), embed_group(g, map), q);
            for (const auto& [id, mtx] : lhs.y) CHECK(rhs.of(id) == mtx);
        }
    }
}

TEST_CASE("pullback composition p_{N,n} o p_{N',N} = p_{N',n} on evaluations") {
    Fp::set_modulus(Fp::kDefaultPrime);
    Quiver q = Quiver::ortho_model(2);
    DoubledQuiver dq(q);
    Rng rng(13);
    DimensionVector dn(q, {2, 2});
    auto cycles = enumerate_cycles(dq, 3);
    struct Mode {
        SpecFlavor flavor;
        std::set<int> nonstd;
        int Np, N, n;
    };
    for (const Mode& mode : {Mode{SpecFlavor::Standard, {}, 5, 4, 2},
                             Mode{SpecFlavor::Standard, {3, 4}, 5, 4, 2},
                             Mode{SpecFlavor::Symplectic, {3, 4}, 6, 4, 2}}) {
        SpecializationMap up1(q, DimensionVector(q, {mode.N, mode.N}),
                              DimensionVector(q, {mode.n, mode.n}), mode.flavor, mode.nonstd);
        SpecializationMap up2(q, DimensionVector(q, {mode.Np, mode.Np}),
                              DimensionVector(q, {mode.N, mode.N}), mode.flavor, mode.nonstd);
        SpecializationMap direct(q, DimensionVector(q, {mode.Np, mode.Np}),
                                 DimensionVector(q, {mode.n, mode.n}), mode.flavor, mode.nonstd);
        for (int trial = 0; trial < 30; ++trial) {
            Rng sub = rng.split(static_cast<std::uint64_t>(trial));
            RepPoint<Fp> p = random_rep<Fp>(q, dn, sub);
            RepPoint<Fp> once = embed_point(embed_point(p, up1), up2);
            RepPoint<Fp> straight = embed_point(p, direct);
            for (const auto& [id, m] : once.y) CHECK(straight.of(id) == m);
            for (const auto& c : cycles) {
                TraceExpression e = TraceExpression::trace(c);
                CHECK(eval_pullback(e, up2, embed_point(p, up1)) ==
                      eval_pullback(e, direct, p));
            }
        }
    }
}

TEST_CASE("standard pullback restricts traces of loops") {
    Fp::set_modulus(Fp::kDefaultPrime);
    Quiver q = Quiver::ortho_model(1);
    DoubledQuiver dq(q);
    SpecializationMap map(q, DimensionVector(q, {5, 5}), DimensionVector(q, {3, 3}),
                          SpecFlavor::Standard);
    DimensionVector dn(q, {3, 3});
    Rng rng(15);
    TraceExpression e = TraceExpression::trace(CyclePath(dq, {{1, false}}));
    for (int trial = 0; trial < 20; ++trial) {
        Rng sub = rng.split(static_cast<std::uint64_t>(trial));
        RepPoint<Fp> p = random_rep<Fp>(q, dn, sub);
        CHECK(eval_pullback(e, map, p) == eval_expr(e, p));
    }
}

TEST_CASE("non-standard pullback drift: tr((cb)^k) gains N - n") {
    Fp::set_modulus(Fp::kDefaultPrime);
    Quiver q = Quiver::ortho_model(1);
    DoubledQuiver dq(q);
    Rng rng(17);
    int N = 5, n = 3;
    SpecializationMap map = model_map(q, N, n, SpecFlavor::Standard, {2, 3});
    DimensionVector dn(q, {n, n});
    for (int k = 1; k <= 3; ++k) {
        std::vector<PathStep> w;
        for (int i = 0; i < k; ++i) {
            w.push_back({2, false});
            w.push_back({3, false});
        }
        TraceExpression e = TraceExpression::trace(CyclePath(dq, w));
        for (int trial = 0; trial < 20; ++trial) {
            Rng sub = rng.split(static_cast<std::uint64_t>(10 * k + trial));
            RepPoint<Fp> p = random_rep<Fp>(q, dn, sub);
            CHECK(eval_pullback(e, map, p) == eval_expr(e, p) + Fp::from_int(N - n));
        }
    }
}

TEST_CASE("degree drop under non-standard maps (exact interpolation in a scale)") {
    // for homogeneous e of degree r: eval(e, embed_nonstd(x*p)) is a polynomial
    // in x whose degree-r coefficient equals the standard specialization; the
    // difference therefore has degree < r. Vandermonde-solve over F_p.
    Fp::set_modulus(Fp::kDefaultPrime);
    Quiver q = Quiver::ortho_model(1);
    DoubledQuiver dq(q);
    Rng rng(19);
    int N = 4, n = 2;
    SpecializationMap nonstd = model_map(q, N, n, SpecFlavor::Standard, {2, 3});
    SpecializationMap std_map = model_map(q, N, n, SpecFlavor::Standard, {});
    DimensionVector dn(q, {n, n});
    for (const CyclePath& c : enumerate_cycles(dq, 4)) {
        int r = static_cast<int>(c.length());
        TraceExpression e = TraceExpression::trace(c);
        for (int trial = 0; trial < 5; ++trial) {
            Rng sub = rng.split(static_cast<std::uint64_t>(trial) * 131 +
                                static_cast<std::uint64_t>(r));
            RepPoint<Fp> p = random_rep<Fp>(q, dn, sub);
            // sample at x = 1..r+1, interpolate the coefficient of x^r
            std::vector<Fp> xs, ys;
            for (int x = 1; x <= r + 1; ++x) {
                RepPoint<Fp> scaled;
                for (const auto& [id, m] : p.y) scaled.y[id] = m.scaled(Fp::from_int(x));
                xs.push_back(Fp::from_int(x));
                ys.push_back(eval_pullback(e, nonstd, scaled));
            }
            // Lagrange: leading coefficient = sum_i y_i / prod_{j != i}(x_i - x_j)
            Fp lead = Fp::zero();
            for (size_t i = 0; i < xs.size(); ++i) {
                Fp denom = Fp::one();
                for (size_t j = 0; j < xs.size(); ++j)
                    if (j != i) denom *= xs[i] - xs[j];
                lead += ys[i] / denom;
            }
            CHECK(lead == eval_pullback(e, std_map, p));
        }
    }
}

TEST_CASE("ortho_symp_specialize basic images") {
    Quiver q = Quiver::ortho_model(1);
    DoubledQuiver dq(q);
    Rng rng(23);
    Matrix<Rat> a = random_matrix<Rat>(3, 3, rng);

    SUBCASE("tr(cb) -> tr(E) = d under O") {
        TraceExpression e = TraceExpression::trace(CyclePath(dq, {{2, false}, {3, false}}));
        SpecializedExpression s = ortho_symp_specialize(e, 1, OSFlavor::Orthogonal);
        CHECK(eval_specialized(s, std::vector<Matrix<Rat>>{a}, OSFlavor::Orthogonal) == Rat(3));
    }
    SUBCASE("tr(a cb) -> tr(a) under O") {
        TraceExpression e =
            TraceExpression::trace(CyclePath(dq, {{2, false}, {3, false}, {1, false}}));
        SpecializedExpression s = ortho_symp_specialize(e, 1, OSFlavor::Orthogonal);
        CHECK(eval_specialized(s, std::vector<Matrix<Rat>>{a}, OSFlavor::Orthogonal) == a.trace());
    }
    SUBCASE("Sp: tr(cb) -> tr(-J J) = d") {
        Matrix<Rat> a4 = random_matrix<Rat>(4, 4, rng);
        TraceExpression e = TraceExpression::trace(CyclePath(dq, {{2, false}, {3, false}}));
        SpecializedExpression s = ortho_symp_specialize(e, 1, OSFlavor::Symplectic);
        CHECK(eval_specialized(s, std::vector<Matrix<Rat>>{a4}, OSFlavor::Symplectic) == Rat(4));
    }
    SUBCASE("Sp with odd d errors at evaluation") {
        TraceExpression e = TraceExpression::trace(CyclePath(dq, {{2, false}, {3, false}}));
        SpecializedExpression s = ortho_symp_specialize(e, 1, OSFlavor::Symplectic);
        CHECK_THROWS(eval_specialized(s, std::vector<Matrix<Rat>>{a}, OSFlavor::Symplectic));
    }
}

TEST_CASE("locus consistency: specialization = evaluation at the canonical locus point") {
    Fp::set_modulus(Fp::kDefaultPrime);
    Quiver q = Quiver::ortho_model(2);
    DoubledQuiver dq(q);
    Rng rng(29);
    int d = 4, m = 2;
    auto cycles = enumerate_cycles(dq, 4);
    for (OSFlavor flavor : {OSFlavor::Orthogonal, OSFlavor::Symplectic}) {
        // canonical locus point: Y(b), Y(c) = E (orthogonal) or J, -J (symplectic)
        RepPoint<Fp> point;
        Rng sub = rng.split(flavor == OSFlavor::Orthogonal ? 1 : 2);
        std::vector<Matrix<Fp>> as;
        for (int i = 1; i <= m; ++i) {
            point.y[i] = random_matrix<Fp>(d, d, sub);
            as.push_back(point.y[i]);
        }
        if (flavor == OSFlavor::Orthogonal) {
            point.y[m + 1] = Matrix<Fp>::identity(d);
            point.y[m + 2] = Matrix<Fp>::identity(d);
        } else {
            point.y[m + 1] = structured_J<Fp>(d);
            point.y[m + 2] = structured_J<Fp>(d).scaled(Fp::zero() - Fp::one());
        }
        for (const CyclePath& c : cycles) {
            TraceExpression e = TraceExpression::trace(c);
            SpecializedExpression s = ortho_symp_specialize(e, m, flavor);
            CHECK(eval_specialized(s, as, flavor) == eval_expr(e, point));
        }
    }
}

TEST_CASE("locus points satisfy the T_d generator equations exactly") {
    Fp::set_modulus(Fp::kDefaultPrime);
    Rng rng(31);
    int m = 2;
    for (OSFlavor flavor : {OSFlavor::Orthogonal, OSFlavor::Symplectic}) {
        for (int d : {2, 4}) {
            RepPoint<Fp> p = locus_point<Fp>(flavor, d, m, rng);
            Matrix<Fp> z = p.of(m + 1) * p.of(m + 2) - Matrix<Fp>::identity(d);
            CHECK(z.is_zero());  // Y(b)Y(c) = E
            Matrix<Fp> c = p.of(m + 2);
            if (flavor == OSFlavor::Orthogonal)
                CHECK(c == c.transpose());
            else
                CHECK((c + c.transpose()).is_zero());
        }
    }
    // O at d = 1: Y(c) = (x), Y(b) = (1/x)
    RepPoint<Fp> p1 = locus_point<Fp>(OSFlavor::Orthogonal, 1, 1, rng);
    CHECK(p1.of(2) * p1.of(3) == Matrix<Fp>::identity(1));
    CHECK_THROWS(locus_point<Fp>(OSFlavor::Symplectic, 3, 1, rng));
}

TEST_CASE("sigma shift identity cases") {
    Rng rng(37);
    SUBCASE("k = 1 is trace linearity") {
        Matrix<Rat> x = random_matrix<Rat>(4, 4, rng);
        auto [lhs, rhs] = sigma_shift_identity(4, 1, x, Rat(3));
        CHECK(lhs == x.trace() + Rat(12));
        CHECK(lhs == rhs);
    }
    SUBCASE("k = N with X = 0 gives y^N") {
        Matrix<Rat> zero(3, 3);
        auto [lhs, rhs] = sigma_shift_identity(3, 3, zero, Rat(2));
        CHECK(lhs == Rat(8));
        CHECK(lhs == rhs);
    }
    SUBCASE("random N <= 6, all k") {
        for (int N = 1; N <= 6; ++N)
            for (int k = 0; k <= N; ++k) {
                Matrix<Rat> x = random_matrix<Rat>(N, N, rng);
                Rat y(rng.range(-9, 9));
                auto [lhs, rhs] = sigma_shift_identity(N, k, x, y);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("alpha coefficients and Eq_t residuals") {
    SUBCASE("alpha_0 = 1 always") {
        for (int delta = 1; delta <= 4; ++delta) {
            auto alpha = alpha_coeffs(3 + delta, 3, 5);
            CHECK(alpha[0] == Poly<Rat>::constant(Rat(1)));
        }
    }
    SUBCASE("N - n = 1: alpha_j = (-lambda)^j") {
        auto alpha = alpha_coeffs(4, 3, 4);
        for (int j = 0; j <= 4; ++j) {
            CHECK(alpha[static_cast<size_t>(j)].coeff(j) == ((j % 2 == 0) ? Rat(1) : Rat(-1)));
            CHECK(alpha[static_cast<size_t>(j)].degree() == (j == 0 ? 0 : j));
        }
    }
    SUBCASE("Eq_t residuals vanish as polynomials (N - n = 3, r = 5)") {
        for (int t = 0; t <= 4; ++t) CHECK(eq_t_residual(6, 3, 5, t).is_zero());
    }
}

TEST_CASE("generalized vanishing sums") {
    SUBCASE("N=5, n=2, r=4: all six valid pairs vanish") {
        int count = 0;
        for (int t1 = 0; t1 <= 2; ++t1)
            for (int t2 = t1; t2 <= 2; ++t2) {
                CHECK(generalized_vanishing(5, 2, 4, t1, t2).is_zero());
                ++count;
            }
        CHECK(count == 6);
    }
    SUBCASE("(t1, t2) = (t, n) reduces to Eq_t") {
        for (int t = 0; t <= 2; ++t)
            CHECK(generalized_vanishing(5, 2, 4, t, 2) == eq_t_residual(5, 2, 4, t));
    }
    SUBCASE("binomial recursion splits the sum into two previously-zero sums") {
        // S_{t1,t2} = S_{t1,t2+1} + lambda * S_{t1+1,t2+1}
        int N = 7, n = 3, r = 6;
        for (int t1 = 0; t1 <= 2; ++t1)
            for (int t2 = t1; t2 <= 2; ++t2) {
                Poly<Rat> lambda({Rat(0), Rat(1)});
                CHECK(generalized_vanishing(N, n, r, t1, t2) ==
                      generalized_vanishing(N, n, r, t1, t2 + 1) +
                          lambda * generalized_vanishing(N, n, r, t1 + 1, t2 + 1));
            }
    }
    SUBCASE("probe above n is nonzero") {
        CHECK(!generalized_vanishing(5, 2, 4, 0, 3).is_zero());
    }
}

TEST_CASE("z_of_f") {
    Quiver q = Quiver::ortho_model(1);
    DoubledQuiver dq(q);
    SUBCASE("lambda = 0 reduces to sigma_r(f)") {
        PathElement f = PathElement::single(dq, {{1, false}});
        CHECK(z_of_f(f, 3, 5, 2, dq) == substitute_sigma_r(f, 3, dq));
    }
    SUBCASE("f = cb alone: z = sum alpha_k sigma_{r-k}(cb), lambda = 1") {
        PathElement f(dq, {{{{2, false}, {3, false}}, Rat(1)}});
        int r = 2, N = 4, n = 2;
        TraceExpression z = z_of_f(f, r, N, n, dq);
        auto alpha = alpha_coeffs(N, n, r);
        TraceExpression expect = substitute_sigma_r(f, 2, dq);
        expect = expect + substitute_sigma_r(f, 1, dq).scaled(alpha[1].eval(Rat(1)));
        expect = expect + TraceExpression::constant(alpha[2].eval(Rat(1)));
        CHECK(z == expect);
    }
    SUBCASE("f = a + cb: O-specialized z has only components sigma_j, j > n") {
        // exact-coefficient route: specialize z(f) with Y(b),Y(c) -> E(N) and
        // compare against sum_{t>n} c_t sigma_t(a) with
        // c_t = sum_s C(N-t,s) lambda^s alpha_{r-t-s}
        int r = 3, N = 4, n = 2;
        PathElement f(dq, {{{{1, false}}, Rat(1)}, {{{2, false}, {3, false}}, Rat(1)}});
        TraceExpression z = z_of_f(f, r, N, n, dq);
        SpecializedExpression zo = ortho_symp_specialize(z, 1, OSFlavor::Orthogonal);
        // c_t = sum_s C(N-t,s) lambda^s alpha_{r-t-s} at lambda = 1; zero for t <= n
        auto alpha = alpha_coeffs(N, n, r);
        std::vector<Rat> ct(static_cast<size_t>(r) + 1, Rat(0));
        for (int t = 0; t <= r; ++t) {
            for (int s = 0; s <= r - t; ++s)
                ct[static_cast<size_t>(t)] +=
                    Rat(binomial(N - t, s)) * alpha[static_cast<size_t>(r - t - s)].eval(Rat(1));
            if (t <= n) CHECK(ct[static_cast<size_t>(t)] == Rat(0));
        }
        Rng rng(41);
        for (int trial = 0; trial < 20; ++trial) {
            Matrix<Rat> a = random_matrix<Rat>(N, N, rng);
            Rat got = eval_specialized(zo, std::vector<Matrix<Rat>>{a}, OSFlavor::Orthogonal);
            Rat expect = 0;
            auto sig = charpoly_sigma(a);
            for (int t = 0; t <= r; ++t) expect += ct[static_cast<size_t>(t)] * sig[static_cast<size_t>(t)];
            CHECK(got == expect);
        }
    }
}
