// mixquiv command line: exact construction and randomized-exact verification
// of trace invariants of mixed quiver representations.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mixquiv/relations.hpp"
#include "mixquiv/special.hpp"

using namespace mixquiv;

namespace {

struct FieldSpec {
    bool rational = false;
    std::uint64_t prime = Fp::kDefaultPrime;
};

FieldSpec parse_field(const std::string& s) {
    if (s == "q" || s == "Q") return {true, 0};
    if (s.rfind("fp:", 0) == 0) {
        FieldSpec f;
        f.prime = std::stoull(s.substr(3));
        require(f.prime >= 2, "field: prime must be >= 2");
        return f;
    }
    throw Error("field: expected 'q' or 'fp:<prime>', got '" + s + "'");
}

std::vector<int> parse_dims(const std::string& s, const Quiver& q) {
    // "1:2,2:2"; a missing pair member inherits its partner's dimension
    int n = q.num_vertices();
    std::vector<int> dims(static_cast<size_t>(n), 0);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        require(colon != std::string::npos, "dims: expected 'vertex:dim' items");
        int v = std::stoi(item.substr(0, colon));
        int d = std::stoi(item.substr(colon + 1));
        require(v >= 1 && v <= n, "dims: vertex " + std::to_string(v) + " out of range");
        dims[static_cast<size_t>(v) - 1] = d;
    }
    for (const auto& [i, j] : q.pairs()) {
        int& di = dims[static_cast<size_t>(i) - 1];
        int& dj = dims[static_cast<size_t>(j) - 1];
        if (di == 0) di = dj;
        if (dj == 0) dj = di;
    }
    for (int v = 1; v <= n; ++v)
        require(dims[static_cast<size_t>(v) - 1] >= 1,
                "dims: missing dimension for vertex " + std::to_string(v));
    return dims;
}

QuiverFile load_quiver(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open quiver file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_quiver_json(buf.str());
}

DimensionVector resolve_dims(const QuiverFile& qf, const std::string& dims_flag) {
    if (!dims_flag.empty())
        return DimensionVector(qf.quiver, parse_dims(dims_flag, qf.quiver));
    require(qf.dims.has_value(), "no dimensions: pass --dims or put \"dims\" in the quiver file");
    return DimensionVector(qf.quiver, *qf.dims);
}

// defining relations readable off a quiver: sigma_r of every loop, and for
// s > 0 one sigma_{r,s} substitution per pair that has a loop at its head
// and arrows both ways
std::vector<std::pair<std::string, TraceExpression>> quiver_relations(const Quiver& q,
                                                                      const DoubledQuiver& dq,
                                                                      int r, int s, int r_cap) {
    std::vector<std::pair<std::string, TraceExpression>> out;
    if (s == 0) {
        for (const Arrow& a : q.arrows()) {
            if (a.from != a.to) continue;
            PathElement loop = PathElement::single(dq, {{a.id, false}});
            out.emplace_back("sigma_" + std::to_string(r) + "(arrow " + std::to_string(a.id) + ")",
                             substitute_sigma_r(loop, r, dq, r_cap));
        }
        return out;
    }
    for (size_t qi = 0; qi < q.pairs().size(); ++qi) {
        auto [head, tail] = q.pairs()[qi];
        int loop_id = 0, b_id = 0, c_id = 0;
        for (const Arrow& a : q.arrows()) {
            if (a.from == head && a.to == head && !loop_id) loop_id = a.id;
            if (a.from == head && a.to == tail && !b_id) b_id = a.id;
            if (a.from == tail && a.to == head && !c_id) c_id = a.id;
        }
        if (!loop_id || !b_id || !c_id) continue;
        PathElement f1 = PathElement::single(dq, {{loop_id, false}});
        PathElement f2 = PathElement::single(dq, {{b_id, false}});
        PathElement f3 = PathElement::single(dq, {{c_id, false}});
        out.emplace_back("sigma_{" + std::to_string(r) + "," + std::to_string(s) + "}(arrows " +
                             std::to_string(loop_id) + "," + std::to_string(b_id) + "," +
                             std::to_string(c_id) + ")",
                         substitute_sigma_rs(f1, f2, f3, r, s, dq, r_cap));
    }
    return out;
}

void emit_report(const std::vector<VerificationReport>& reports, const std::string& out_path,
                 bool with_timestamp) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(nlohmann::ordered_json::parse(r.to_json(with_timestamp)));
    std::string text = arr.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        require(out.good(), "cannot write report: " + out_path);
        out << text;
        std::cout << "report written to " << out_path << "\n";
    }
}

int all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed()) return 1;
    return 0;
}

// multidegree flag: "1:2,2:1" (arrow:count)
Multidegree parse_rbar(const Quiver& q, const std::string& s) {
    std::map<int, int> deg;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        require(colon != std::string::npos, "rbar: expected 'arrow:count' items");
        deg[std::stoi(item.substr(0, colon))] = std::stoi(item.substr(colon + 1));
    }
    return Multidegree(q, deg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of mixed quiver representations"};
    app.set_config("--config", "", "TOML/INI config file mirroring the flags");
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name

    std::string quiver_path, dims_flag, field_flag = "fp:" + std::to_string(Fp::kDefaultPrime);
    std::string out_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int trials = 200;
    int r_cap = kDefaultRCap;
    bool no_timestamp = false;

    app.add_option("--field", field_flag, "q | fp:<prime>")->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized subcommands")
        ->each([&](const std::string&) { seed_set = true; });
    app.add_option("--trials", trials, "random points per check")->capture_default_str();
    app.add_option("--r-cap", r_cap, "cap on r for S_r sums")->capture_default_str();
    app.add_option("--out", out_path, "report output path (default: stdout)");
    app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp field from reports");

    // ---- cycles ----
    auto* cyc = app.add_subcommand("cycles", "list cycle classes of the doubled quiver");
    int max_len = 3, base_vertex = 0;
    cyc->add_option("--quiver", quiver_path, "quiver json file")->required();
    cyc->add_option("--max-len", max_len, "maximal cycle length")->capture_default_str();
    cyc->add_option("--base-vertex", base_vertex, "only cycles through this vertex");

    // ---- trstar ----
    auto* trs = app.add_subcommand("trstar", "tr* of a permutation on the model quiver");
    int tr_r = 0, tr_s = 0;
    std::string perm_text, passive_text;
    trs->add_option("--r", tr_r, "total degree r")->required();
    trs->add_option("--s", tr_s, "s (t = r - 2s)")->required();
    trs->add_option("--perm", perm_text, "permutation in cycle notation")->required();
    trs->add_option("--passive", passive_text, "passive set for the block algorithm, e.g. 2,3");

    // ---- sigma-rs ----
    auto* srs = app.add_subcommand("sigma-rs", "expand sigma_{r,s}(X,Y,Z)");
    int sr_r = 0, sr_s = 0;
    std::string emit = "expr";
    srs->add_option("--r", sr_r)->required();
    srs->add_option("--s", sr_s)->required();
    srs->add_option("--emit", emit, "expr | latex")->capture_default_str();

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "randomized-exact verification suites");
    ver->require_subcommand(1);

    auto* vrel = ver->add_subcommand("relations", "vanishing of sigma_r / sigma_{r,s} relations");
    int vr_r = 2, vr_s = 0;
    vrel->add_option("--quiver", quiver_path, "quiver json (default: the sigma_rs model)");
    vrel->add_option("--dims", dims_flag, "per-vertex dims, e.g. \"1:2,2:2\"");
    vrel->add_option("--r", vr_r)->capture_default_str();
    vrel->add_option("--s", vr_s)->capture_default_str();

    auto* vsui = ver->add_subcommand("suitable", "vanishing of suitable generators");
    int su_r = 3, su_d = 2, su_s_flag = 0;
    std::string su_split;
    std::string su_sigma1;
    vsui->add_option("--r", su_r)->capture_default_str();
    vsui->add_option("--s", su_s_flag, "s of the model multidegree")->capture_default_str();
    vsui->add_option("--d", su_d, "dimension d for the model pair")->capture_default_str();
    vsui->add_option("--split", su_split, "sublayer sizes of 𝒯(q), e.g. \"2,1\"");
    vsui->add_option("--sigma1", su_sigma1, "sigma1 in cycle notation (default identity)");

    auto* vinv = ver->add_subcommand("invariance", "H(t)-invariance of cycle monomials");
    int vi_len = 3;
    vinv->add_option("--quiver", quiver_path, "quiver json file")->required();
    vinv->add_option("--dims", dims_flag, "per-vertex dims");
    vinv->add_option("--max-len", vi_len, "cycle length cap")->capture_default_str();

    // ---- identities ----
    auto* idn = app.add_subcommand("identities", "exact closed-form coefficient identities");
    std::string which = "lemma4.1";
    int id_N = 6, id_n = 3, id_r = 5;
    idn->add_option("--which", which, "lemma4.1 | eqt | genvanish")->capture_default_str();
    idn->add_option("--N", id_N)->capture_default_str();
    idn->add_option("--n", id_n)->capture_default_str();
    idn->add_option("--r", id_r)->capture_default_str();

    // ---- ortho ----
    auto* ort = app.add_subcommand("ortho", "orthogonal/symplectic invariance suites");
    int or_m = 3, or_d = 4, or_len = 4;
    std::string or_flavor = "O";
    ort->add_option("--m", or_m, "number of matrices")->capture_default_str();
    ort->add_option("--d", or_d, "matrix dimension")->capture_default_str();
    ort->add_option("--len", or_len, "word length cap")->capture_default_str();
    ort->add_option("--flavor", or_flavor, "O | Sp")->capture_default_str();

    // ---- span ----
    auto* spn = app.add_subcommand("span", "graded span dimension (rank over F_p)");
    std::string rbar_text;
    int points = 0;
    spn->add_option("--quiver", quiver_path, "quiver json file")->required();
    spn->add_option("--dims", dims_flag, "per-vertex dims");
    spn->add_option("--rbar", rbar_text, "multidegree, e.g. \"1:1,2:1,3:1\"")->required();
    spn->add_option("--points", points, "sample points (default: 2x monomial count)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        FieldSpec field = parse_field(field_flag);
        if (!field.rational) Fp::set_modulus(field.prime);
        if (r_cap > kDefaultRCap)
            std::cerr << "warning: r cap raised to " << r_cap
                      << "; S_r sums grow factorially\n";
        auto need_seed = [&]() {
            require(seed_set, "this subcommand is randomized: --seed is mandatory");
        };

        if (*cyc) {
            QuiverFile qf = load_quiver(quiver_path);
            DoubledQuiver dq(qf.quiver);
            std::optional<DQVertex> base;
            if (base_vertex > 0) base = DQVertex{base_vertex, false};
            for (const CyclePath& c : enumerate_cycles(dq, max_len, base))
                std::cout << c.str() << (c.primitive() ? "" : "  [power]") << "\n";
            return 0;
        }

        if (*trs) {
            ModelSetup model(tr_r, tr_s);
            Permutation sigma = Permutation::parse_cycles(perm_text, tr_r);
            SymbolCycleWord w = passive_text.empty()
                                    ? trstar_contract(sigma, model.hat())
                                    : [&] {
                                          std::set<int> b;
                                          std::stringstream ss(passive_text);
                                          std::string item;
                                          while (std::getline(ss, item, ',')) b.insert(std::stoi(item));
                                          return trstar_blocks(sigma, b, model.hat());
                                      }();
            std::cout << w.str() << "\n";
            return 0;
        }

        if (*srs) {
            TraceExpression e = sigma_rs(sr_r, sr_s, r_cap);
            if (emit == "latex") {
                const char* names[] = {"", "X", "Y", "Z"};
                std::string out;
                for (const auto& [factors, coeff] : e.terms()) {
                    if (!out.empty()) out += " + ";
                    out += coeff.str();
                    for (const CyclePath& f : factors) {
                        out += " \\mathrm{tr}(";
                        const auto& steps = f.steps();
                        for (size_t k = steps.size(); k-- > 0;) {
                            const PathStep& st = steps[k];
                            out += st.bar ? std::string("\\bar{") + names[st.arrow] + "}"
                                          : std::string(names[st.arrow]);
                            if (k) out += " ";
                        }
                        out += ")";
                    }
                }
                std::cout << (out.empty() ? "0" : out) << "\n";
            } else {
                std::cout << e.str() << "\n";
            }
            return 0;
        }

        if (*vrel) {
            need_seed();
            std::vector<VerificationReport> reports;
            if (quiver_path.empty()) {
                // built-in quivers: one loop for s = 0, the two-vertex model otherwise
                require(!dims_flag.empty(), "verify relations: pass --dims (e.g. \"1:2,2:2\")");
                if (vr_s == 0) {
                    Quiver q(1, {1}, {}, {{1, 1, 1}});
                    DoubledQuiver dq(q);
                    DimensionVector dv(q, parse_dims(dims_flag, q));
                    PathElement loop = PathElement::single(dq, {{1, false}});
                    TraceExpression e = substitute_sigma_r(loop, vr_r, dq, r_cap);
                    std::string id = "sigma_" + std::to_string(vr_r) + "(loop)";
                    reports.push_back(field.rational
                                          ? verify_vanishing<Rat>(e, q, dv, trials, seed, id)
                                          : verify_vanishing<Fp>(e, q, dv, trials, seed, id));
                } else {
                    ModelSetup model(vr_r, vr_s);
                    DimensionVector dv(model.quiver(), parse_dims(dims_flag, model.quiver()));
                    TraceExpression e = sigma_rs(vr_r, vr_s, r_cap);
                    std::string id =
                        "sigma_{" + std::to_string(vr_r) + "," + std::to_string(vr_s) + "}";
                    reports.push_back(
                        field.rational
                            ? verify_vanishing<Rat>(e, model.quiver(), dv, trials, seed, id)
                            : verify_vanishing<Fp>(e, model.quiver(), dv, trials, seed, id));
                }
            } else {
                QuiverFile qf = load_quiver(quiver_path);
                DimensionVector dv = resolve_dims(qf, dims_flag);
                DoubledQuiver dq(qf.quiver);
                auto rels = quiver_relations(qf.quiver, dq, vr_r, vr_s, r_cap);
                require(!rels.empty(),
                        "verify relations: no relation of this shape fits the quiver");
                for (const auto& [id, e] : rels)
                    reports.push_back(
                        field.rational ? verify_vanishing<Rat>(e, qf.quiver, dv, trials, seed, id)
                                       : verify_vanishing<Fp>(e, qf.quiver, dv, trials, seed, id));
            }
            emit_report(reports, out_path, !no_timestamp);
            return all_passed(reports);
        }

        if (*vsui) {
            need_seed();
            // built on the sigma_rs model quiver at s = su_s (su_s = 0 is the
            // pure-loop configuration); the layout splits the single cell 𝒯(q)
            ModelSetup setup(su_r, su_s_flag);
            std::vector<std::vector<int>> splits(setup.sets().cells.size());
            if (!su_split.empty()) {
                std::stringstream ss(su_split);
                std::string item;
                std::vector<int> sizes;
                while (std::getline(ss, item, ',')) sizes.push_back(std::stoi(item));
                splits[0] = sizes;
            }
            YoungLayout layout(setup.sets(), splits);
            Permutation s1 = su_sigma1.empty() ? Permutation(su_r)
                                               : Permutation::parse_cycles(su_sigma1, su_r);
            TraceExpression z = suitable_generator(s1, layout, setup.hat(), setup.doubled(), r_cap);
            DimensionVector dv(setup.quiver(), {su_d, su_d});
            bool large = layout.sufficiently_large(setup.quiver(), dv, setup.sets());
            auto rep = field.rational
                           ? verify_vanishing<Rat>(z, setup.quiver(), dv, trials, seed, "suitable")
                           : verify_vanishing<Fp>(z, setup.quiver(), dv, trials, seed, "suitable");
            std::cout << (large ? "layout sufficiently large: vanishing expected\n"
                                : "layout NOT sufficiently large: vanishing not implied\n");
            emit_report({rep}, out_path, !no_timestamp);
            return large ? (rep.passed() ? 0 : 1) : 0;
        }

        if (*vinv) {
            need_seed();
            QuiverFile qf = load_quiver(quiver_path);
            DimensionVector dv = resolve_dims(qf, dims_flag);
            DoubledQuiver dq(qf.quiver);
            std::vector<VerificationReport> reports;
            for (const CyclePath& c : enumerate_cycles(dq, vi_len)) {
                TraceExpression e = TraceExpression::trace(c);
                reports.push_back(field.rational
                                      ? verify_invariance<Rat>(e, qf.quiver, dv, trials, seed, c.str())
                                      : verify_invariance<Fp>(e, qf.quiver, dv, trials, seed, c.str()));
            }
            emit_report(reports, out_path, !no_timestamp);
            return all_passed(reports);
        }

        if (*idn) {
            int failures = 0;
            auto line = [&](const std::string& name, bool ok) {
                std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
                if (!ok) ++failures;
            };
            if (which == "lemma4.1") {
                Rng rng(seed_set ? seed : 1);
                for (int k = 0; k <= id_N; ++k) {
                    bool ok = true;
                    for (int t = 0; t < 20; ++t) {
                        Matrix<Rat> x = random_matrix<Rat>(id_N, id_N, rng);
                        Rat y(rng.range(-9, 9));
                        auto [lhs, rhs] = sigma_shift_identity(id_N, k, x, y);
                        ok = ok && lhs == rhs;
                    }
                    line("sigma_k(X+yE), N=" + std::to_string(id_N) + " k=" + std::to_string(k), ok);
                }
            } else if (which == "eqt") {
                for (int t = 0; t <= id_r - 1; ++t)
                    line("Eq_" + std::to_string(t) + " (N=" + std::to_string(id_N) +
                             ",n=" + std::to_string(id_n) + ",r=" + std::to_string(id_r) + ")",
                         eq_t_residual(id_N, id_n, id_r, t).is_zero());
            } else if (which == "genvanish") {
                for (int t1 = 0; t1 <= id_n; ++t1)
                    for (int t2 = t1; t2 <= id_n; ++t2)
                        line("genvanish t1=" + std::to_string(t1) + " t2=" + std::to_string(t2),
                             generalized_vanishing(id_N, id_n, id_r, t1, t2).is_zero());
                line("probe t2=n+1 nonzero",
                     !generalized_vanishing(id_N, id_n, id_r, 0, id_n + 1).is_zero());
            } else {
                throw Error("identities: unknown --which '" + which + "'");
            }
            return failures == 0 ? 0 : 1;
        }

        if (*ort) {
            need_seed();
            OSFlavor flavor = (or_flavor == "Sp") ? OSFlavor::Symplectic : OSFlavor::Orthogonal;
            require(flavor == OSFlavor::Orthogonal || or_d % 2 == 0,
                    "ortho: symplectic flavor needs even d");
            Rng rng(seed);
            std::vector<Matrix<Rat>> a;
            for (int i = 0; i < or_m; ++i) a.push_back(random_matrix<Rat>(or_d, or_d, rng));
            // canonical words up to the stated length
            std::vector<std::vector<MatLetter>> words;
            std::set<std::vector<MatLetter>> seen;
            std::function<void(std::vector<MatLetter>&)> grow = [&](std::vector<MatLetter>& w) {
                if (!w.empty()) {
                    auto canon = canonical_cycle_word(w);
                    if (seen.insert(canon).second) words.push_back(canon);
                }
                if (static_cast<int>(w.size()) >= or_len) return;
                for (int i = 1; i <= or_m; ++i)
                    for (bool dual : {false, true}) {
                        w.push_back({i, dual});
                        grow(w);
                        w.pop_back();
                    }
            };
            std::vector<MatLetter> w0;
            grow(w0);
            // sigma_j(p) of each word product, compared before/after conjugation
            auto word_product = [&](const std::vector<MatLetter>& w,
                                    const std::vector<Matrix<Rat>>& tuple) {
                Matrix<Rat> j;
                if (flavor == OSFlavor::Symplectic) j = structured_J<Rat>(or_d);
                Matrix<Rat> acc = Matrix<Rat>::identity(or_d);
                for (const MatLetter& l : w) {
                    Matrix<Rat> v = tuple[static_cast<size_t>(l.idx) - 1];
                    if (l.dual)
                        v = (flavor == OSFlavor::Orthogonal)
                                ? v.transpose()
                                : (j * v.transpose() * j).scaled(Rat(-1));
                    acc = v * acc;
                }
                return acc;
            };
            std::vector<std::vector<Rat>> base_sigmas;
            for (const auto& w : words) base_sigmas.push_back(charpoly_sigma(word_product(w, a)));
            int failures = 0;
            for (int trial = 0; trial < trials; ++trial) {
                Matrix<Rat> g = (flavor == OSFlavor::Orthogonal) ? cayley_orthogonal(or_d, rng)
                                                                 : cayley_symplectic(or_d, rng);
                Matrix<Rat> ginv = g.inverse();
                std::vector<Matrix<Rat>> ta;
                for (const auto& ai : a) ta.push_back(g * ai * ginv);
                for (size_t k = 0; k < words.size(); ++k)
                    if (charpoly_sigma(word_product(words[k], ta)) != base_sigmas[k]) ++failures;
            }
            std::cout << (failures == 0 ? "[PASS] " : "[FAIL] ") << words.size()
                      << " words, all sigma_j invariant under " << trials << " group elements\n";
            return failures == 0 ? 0 : 1;
        }

        if (*spn) {
            need_seed();
            QuiverFile qf = load_quiver(quiver_path);
            DimensionVector dv = resolve_dims(qf, dims_flag);
            Multidegree rbar = parse_rbar(qf.quiver, rbar_text);
            auto monomials = span_monomials(qf.quiver, rbar);
            int pts = points > 0 ? points : std::max(1, 2 * static_cast<int>(monomials.size()));
            int rank = monomials.empty()
                           ? 0
                           : graded_span_dimension(qf.quiver, dv, rbar, pts, seed);
            std::cout << "monomials: " << monomials.size() << "\nrank: " << rank << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
