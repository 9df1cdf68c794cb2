// python bindings for the main operations

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mixquiv/special.hpp"

namespace py = pybind11;
using namespace mixquiv;

namespace {

Matrix<Fp> matrix_from_rows(const std::vector<std::vector<long long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix<Fp> m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            throw Error("matrix rows must have equal length");
        for (int j = 0; j < c; ++j)
            m(i, j) = Fp::from_int(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return m;
}

py::dict report_to_dict(const VerificationReport& rep) {
    py::dict d;
    d["expr"] = rep.expr_id;
    d["trials"] = rep.trials;
    d["field"] = rep.field;
    d["seed"] = rep.seed;
    d["outcome"] = rep.outcome;
    if (rep.witness_json) d["witness"] = *rep.witness_json;
    d["prob_bound"] = rep.prob_bound;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact trace invariants of mixed quiver representations";

    m.def("set_prime", &Fp::set_modulus, py::arg("p"),
          "set the prime for F_p computations");
    m.def("default_prime", [] { return Fp::kDefaultPrime; });

    m.def(
        "sigma_coeffs",
        [](const std::vector<std::vector<long long>>& rows, std::uint64_t p) {
            Fp::set_modulus(p);
            std::vector<std::uint64_t> out;
            for (const Fp& v : charpoly_sigma(matrix_from_rows(rows))) out.push_back(v.value());
            return out;
        },
        py::arg("matrix"), py::arg("p") = Fp::kDefaultPrime,
        "characteristic-polynomial coefficients sigma_0..sigma_d over F_p");

    m.def(
        "cycles",
        [](const std::string& quiver_json, int max_len, int base_vertex) {
            QuiverFile qf = parse_quiver_json(quiver_json);
            DoubledQuiver dq(qf.quiver);
            std::optional<DQVertex> base;
            if (base_vertex > 0) base = DQVertex{base_vertex, false};
            std::vector<std::string> out;
            for (const CyclePath& c : enumerate_cycles(dq, max_len, base)) out.push_back(c.str());
            return out;
        },
        py::arg("quiver_json"), py::arg("max_len"), py::arg("base_vertex") = 0,
        "canonical cycle classes of the doubled quiver");

    m.def(
        "trstar",
        [](int r, int s, const std::string& perm, const std::vector<int>& passive) {
            ModelSetup model(r, s);
            Permutation sigma = Permutation::parse_cycles(perm, r);
            if (passive.empty()) return trstar_contract(sigma, model.hat()).str();
            std::set<int> b(passive.begin(), passive.end());
            return trstar_blocks(sigma, b, model.hat()).str();
        },
        py::arg("r"), py::arg("s"), py::arg("perm"), py::arg("passive") = std::vector<int>{},
        "tr*(sigma) on the model quiver, by contracting rules or block joining");

    m.def(
        "sigma_rs_expr", [](int r, int s) { return sigma_rs(r, s).str(); }, py::arg("r"),
        py::arg("s"), "expanded sigma_{r,s}(X,Y,Z); arrows 1,2,3 are X,Y,Z");

    m.def(
        "verify_sigma_rs",
        [](int r, int s, int d, int trials, std::uint64_t seed, std::uint64_t p) {
            Fp::set_modulus(p);
            ModelSetup model(r, s);
            DimensionVector dv(model.quiver(), {d, d});
            return report_to_dict(verify_vanishing<Fp>(sigma_rs(r, s), model.quiver(), dv,
                                                       trials, seed, "sigma_rs"));
        },
        py::arg("r"), py::arg("s"), py::arg("d"), py::arg("trials") = 200, py::arg("seed") = 0,
        py::arg("p") = Fp::kDefaultPrime,
        "randomized-exact vanishing check of sigma_{r,s} at dimension (d, d*)");

    m.def(
        "verify_invariance",
        [](const std::string& quiver_json, const std::string& dims, int max_len, int trials,
           std::uint64_t seed, std::uint64_t p) {
            Fp::set_modulus(p);
            QuiverFile qf = parse_quiver_json(quiver_json);
            std::vector<int> dv_vec;
            if (dims.empty()) {
                require(qf.dims.has_value(), "no dims in file; pass dims=\"v:d,...\"");
                dv_vec = *qf.dims;
            } else {
                dv_vec.assign(static_cast<size_t>(qf.quiver.num_vertices()), 0);
                std::stringstream ss(dims);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    auto colon = item.find(':');
                    require(colon != std::string::npos, "dims: expected v:d items");
                    dv_vec[static_cast<size_t>(std::stoi(item.substr(0, colon))) - 1] =
                        std::stoi(item.substr(colon + 1));
                }
            }
            DimensionVector dv(qf.quiver, dv_vec);
            DoubledQuiver dq(qf.quiver);
            for (const CyclePath& c : enumerate_cycles(dq, max_len)) {
                auto rep = verify_invariance<Fp>(TraceExpression::trace(c), qf.quiver, dv,
                                                 trials, seed, c.str());
                if (rep.outcome != "invariant") return false;
            }
            return true;
        },
        py::arg("quiver_json"), py::arg("dims") = "", py::arg("max_len") = 3,
        py::arg("trials") = 100, py::arg("seed") = 0, py::arg("p") = Fp::kDefaultPrime,
        "H(t)-invariance of all cycle traces up to max_len");

    m.def(
        "graded_span",
        [](const std::string& quiver_json, const std::string& dims,
           const std::map<int, int>& rbar, int points, std::uint64_t seed) {
            QuiverFile qf = parse_quiver_json(quiver_json);
            std::vector<int> dv_vec(static_cast<size_t>(qf.quiver.num_vertices()), 0);
            std::stringstream ss(dims);
            std::string item;
            while (std::getline(ss, item, ',')) {
                auto colon = item.find(':');
                require(colon != std::string::npos, "dims: expected v:d items");
                dv_vec[static_cast<size_t>(std::stoi(item.substr(0, colon))) - 1] =
                    std::stoi(item.substr(colon + 1));
            }
            DimensionVector dv(qf.quiver, dv_vec);
            Multidegree deg(qf.quiver, rbar);
            auto monomials = span_monomials(qf.quiver, deg);
            if (monomials.empty()) return 0;
            int pts = points > 0 ? points : 2 * static_cast<int>(monomials.size());
            return graded_span_dimension(qf.quiver, dv, deg, pts, seed);
        },
        py::arg("quiver_json"), py::arg("dims"), py::arg("rbar"), py::arg("points") = 0,
        py::arg("seed") = 0, "rank of the multidegree-rbar evaluation matrix over F_p");

    m.def(
        "eq_t_is_zero",
        [](int N, int n, int r, int t) { return eq_t_residual(N, n, r, t).is_zero(); },
        py::arg("N"), py::arg("n"), py::arg("r"), py::arg("t"));

    m.def(
        "generalized_vanishing_is_zero",
        [](int N, int n, int r, int t1, int t2) {
            return generalized_vanishing(N, n, r, t1, t2).is_zero();
        },
        py::arg("N"), py::arg("n"), py::arg("r"), py::arg("t1"), py::arg("t2"));

    m.def(
        "lemma41_holds",
        [](int N, int trials, std::uint64_t seed) {
            Rng rng(seed);
            for (int k = 0; k <= N; ++k)
                for (int t = 0; t < trials; ++t) {
                    Matrix<Rat> x = random_matrix<Rat>(N, N, rng);
                    Rat y(rng.range(-9, 9));
                    auto [lhs, rhs] = sigma_shift_identity(N, k, x, y);
                    if (!(lhs == rhs)) return false;
                }
            return true;
        },
        py::arg("N"), py::arg("trials") = 10, py::arg("seed") = 1);
}
