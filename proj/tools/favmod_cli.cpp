// favmod: lattice polytopes, essential monomial bases and toric data for
// irreducible representations of types A, C and G2. One job per process;
// the data stream (stdout) is pure JSON unless --text or --format ieqs is
// chosen, progress and errors go to stderr.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "favmod/essential.hpp"
#include "favmod/json_io.hpp"
#include "favmod/polytope.hpp"
#include "favmod/repmod.hpp"
#include "favmod/rootsys.hpp"
#include "favmod/toric.hpp"

namespace {

using namespace favmod;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string type_str = "A";
    int rank = 1;
    std::string weight_str;
    std::string format = "json";
    std::string expect_file;
    bool text = false;
    bool timing = false;
};

Weight parse_weight(const std::string& s, int rank) {
    std::vector<long> m;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            m.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--weight", "bad component '" + tok + "'");
        }
    }
    if (static_cast<int>(m.size()) != rank)
        throw CLI::ValidationError("--weight", "expected " + std::to_string(rank) +
                                                   " comma-separated components");
    return Weight(std::move(m));
}

json weight_json(const Weight& w) {
    json a = json::array();
    for (long x : w.m) a.push_back(x);
    return a;
}

// 0 on match, 1 on mismatch (prints a witness diff to stderr)
int check_expectation(const json& report, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open expectation file " << path << "\n";
        return kExitUsage;
    }
    json expected = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (expected.is_discarded()) {
        std::cerr << "error: expectation file " << path << " is not valid JSON\n";
        return kExitUsage;
    }
    if (json(report) == expected) return kExitOk;
    std::cerr << "verification failed: output differs from " << path << "\n";
    json diff = json::diff(expected, report);
    std::cerr << diff.dump(2) << "\n";
    return kExitVerificationFailed;
}

int finish(json& report, const CommonOpts& opts, bool verified_ok,
           std::chrono::steady_clock::time_point t0, const std::string& text_render = "") {
    if (opts.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        report["timing_ms"] = ms;
    }
    if (opts.text && !text_render.empty())
        std::cout << text_render;
    else
        std::cout << report.dump(2) << "\n";
    if (!opts.expect_file.empty()) {
        int rc = check_expectation(report, opts.expect_file);
        if (rc != kExitOk) return rc;
    }
    return verified_ok ? kExitOk : kExitVerificationFailed;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_weight = true) {
    cmd->add_option("--type", o.type_str, "Lie type: A, C or G2")->capture_default_str();
    cmd->add_option("--rank", o.rank, "rank n")->capture_default_str();
    if (with_weight)
        cmd->add_option("--weight", o.weight_str,
                        "dominant weight, comma separated (G2: k,l)");
    cmd->add_option("--expect", o.expect_file,
                    "compare the JSON report against this file; mismatch exits 1");
    cmd->add_flag("--text", o.text, "human-readable tables instead of JSON");
    cmd->add_flag("--timing", o.timing, "include timing_ms in the report");
}

std::string render_lattice_text(const LatticeSet& s, const std::vector<std::string>& labels) {
    std::ostringstream os;
    os << "# coordinates:";
    for (const std::string& l : labels) os << " " << l;
    os << "\n";
    for (const MultiExponent& p : s) os << p.str() << "\n";
    os << "total " << s.size() << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"favmod: polytopes, essential monomial bases and toric data "
                 "for representations of types A, C and G2"};
    app.set_version_flag("--version", std::string("favmod ") + kVersion);
    app.require_subcommand(1);

    // ------------------------------------------------------- polytope
    CommonOpts po;
    CLI::App* polytope_cmd = app.add_subcommand("polytope", "inequality system of P(lambda)");
    add_common(polytope_cmd, po);
    polytope_cmd->add_option("--format", po.format, "json | ieqs | text");

    // ------------------------------------------------------- lattice
    CommonOpts lo;
    CLI::App* lattice_cmd = app.add_subcommand("lattice", "lattice points S(lambda)");
    add_common(lattice_cmd, lo);

    // ------------------------------------------------------- essential
    CommonOpts eo;
    std::string generators = "full";
    bool dump_module = false;
    CLI::App* essential_cmd =
        app.add_subcommand("essential", "essential exponents, basis data and annihilator");
    add_common(essential_cmd, eo);
    essential_cmd->add_option("--generators", generators,
                              "full: all positive-root operators; radical: parabolic-radical "
                              "presentation (type A fundamental weights only)");
    essential_cmd->add_flag("--dump-module", dump_module,
                            "embed the operator matrices in the report");

    // ------------------------------------------------------- minkowski
    CommonOpts mo;
    std::string weight2;
    CLI::App* minkowski_cmd = app.add_subcommand(
        "minkowski", "S(lambda) == sum m_i S(omega_i); with --weight2: S(l)+S(m) == S(l+m)");
    add_common(minkowski_cmd, mo);
    minkowski_cmd->add_option("--weight2", weight2, "second weight mu");

    // ------------------------------------------------------- normality
    CommonOpts no;
    int n_max = 3;
    CLI::App* normality_cmd =
        app.add_subcommand("normality", "dilation vs Minkowski-sum certificate");
    add_common(normality_cmd, no);
    normality_cmd->add_option("--n-max", n_max, "largest dilation level")->capture_default_str();

    // ------------------------------------------------------- hilbert
    CommonOpts ho;
    int level = 1;
    CLI::App* hilbert_cmd =
        app.add_subcommand("hilbert", "dim R_n(S(lambda)) = #(n-fold Minkowski sum)");
    add_common(hilbert_cmd, ho);
    hilbert_cmd->add_option("--level", level, "grading level n")->capture_default_str();

    // ------------------------------------------------------- valuation
    CommonOpts vo;
    int vlevel = 1;
    bool vdump = false;
    CLI::App* valuation_cmd = app.add_subcommand(
        "valuation", "lowest-term valuation layer vs essential layer of the oracle module");
    add_common(valuation_cmd, vo);
    valuation_cmd->add_option("--level", vlevel, "tensor power n")->capture_default_str();
    valuation_cmd->add_flag("--dump-module", vdump, "embed the operator matrices in the report");

    // ------------------------------------------------------- demazure
    CommonOpts dz;
    int box_bound = 2;
    CLI::App* demazure_cmd = app.add_subcommand(
        "demazure", "Demazure roots of the type-A toric degeneration (regular lambda)");
    demazure_cmd->add_option("--rank", dz.rank, "rank n")->capture_default_str();
    demazure_cmd->add_option("--box-bound", box_bound, "search box upper bound")
        ->capture_default_str();
    demazure_cmd->add_option("--expect", dz.expect_file, "compare report against this file");
    demazure_cmd->add_flag("--text", dz.text, "human-readable output");
    demazure_cmd->add_flag("--timing", dz.timing, "include timing_ms");

    // ------------------------------------------------------- gob
    CommonOpts go;
    CLI::App* gob_cmd = app.add_subcommand(
        "gob", "global Okounkov cone generators: (vertex of P(omega_i), i)");
    add_common(gob_cmd, go, /*with_weight=*/false);

    // ------------------------------------------------------- verify-favourable
    CommonOpts fo;
    int max_coeff = 2;
    int fav_nmax = 2;
    bool with_oracle = false;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify-favourable",
        "dimension law, Minkowski decompositions and normality over a weight grid");
    add_common(verify_cmd, fo, /*with_weight=*/false);
    verify_cmd->add_option("--max-coeff", max_coeff, "grid bound: sum of coefficients")
        ->capture_default_str();
    verify_cmd->add_option("--n-max", fav_nmax, "normality dilation bound")->capture_default_str();
    verify_cmd->add_flag("--oracle", with_oracle,
                         "also compare essential sets against S(lambda) where the "
                         "representation oracle is available");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    auto t0 = std::chrono::steady_clock::now();
    try {
        if (polytope_cmd->parsed()) {
            LieType t(parse_family(po.type_str), po.rank);
            Weight w = parse_weight(po.weight_str, t.rank);
            PolytopeSpec p = build_polytope(t, w);
            if (po.format == "ieqs") {
                std::cout << to_ieqs(p);
                return kExitOk;
            }
            json inputs{{"type", po.type_str}, {"rank", po.rank}, {"weight", weight_json(w)}};
            json rep = make_report("polytope", inputs);
            rep["result"] = polytope_to_json(p);
            std::ostringstream text;
            text << "P" << w.str() << " in R^" << p.dim << ", " << p.ineqs.size()
                 << " inequalities\n";
            for (const Inequality& iq : p.ineqs) text << "  " << iq.name << " <= " << iq.rhs << "\n";
            return finish(rep, po, true, t0, text.str());
        }

        if (lattice_cmd->parsed()) {
            LieType t(parse_family(lo.type_str), lo.rank);
            Weight w = parse_weight(lo.weight_str, t.rank);
            PolytopeSpec p = build_polytope(t, w);
            LatticeSet s = lattice_points(p);
            json inputs{{"type", lo.type_str}, {"rank", lo.rank}, {"weight", weight_json(w)}};
            json rep = make_report("lattice", inputs);
            rep["result"]["labels"] = p.labels;
            rep["result"]["points"] = lattice_to_json(s);
            rep["result"]["count"] = s.size();
            rep["result"]["weyl_dim"] = weyl_dim(t, w).get_str();
            bool ok = Integer(static_cast<long>(s.size())) == weyl_dim(t, w);
            rep["result"]["count_equals_weyl_dim"] = ok;
            return finish(rep, lo, ok, t0, render_lattice_text(s, p.labels));
        }

        if (essential_cmd->parsed()) {
            LieType t(parse_family(eo.type_str), eo.rank);
            Weight w = parse_weight(eo.weight_str, t.rank);
            RepModule m;
            std::vector<std::string> labels;
            if (generators == "radical") {
                if (t.family != Family::A || w.total() != 1)
                    throw CLI::ValidationError(
                        "--generators",
                        "radical presentation needs type A and a fundamental weight");
                int k = 0;
                for (int i = 0; i < t.rank; ++i)
                    if (w[i] == 1) k = i + 1;
                m = radical_module_sl(t.rank, k);
            } else if (generators == "full") {
                m = module_for_weight(t, w);
            } else {
                throw CLI::ValidationError("--generators", "expected full or radical");
            }
            labels = m.op_labels;
            EssentialResult r = essential_set(m, {/*expect_cyclic=*/false});
            json inputs{{"type", eo.type_str},
                        {"rank", eo.rank},
                        {"weight", weight_json(w)},
                        {"generators", generators}};
            json rep = make_report("essential", inputs);
            rep["result"] = essential_to_json(r, labels);
            if (dump_module) rep["module"] = module_to_json(m);
            std::ostringstream text;
            text << m.name << ": dim " << r.rank() << ", d_max " << r.d_max << "\n";
            text << "essential exponents:\n"
                 << render_lattice_text(r.es, labels) << "annihilator generators:\n"
                 << render_lattice_text(r.annihilator_gens, labels);
            return finish(rep, eo, true, t0, text.str());
        }

        if (minkowski_cmd->parsed()) {
            LieType t(parse_family(mo.type_str), mo.rank);
            Weight w = parse_weight(mo.weight_str, t.rank);
            json inputs{{"type", mo.type_str}, {"rank", mo.rank}, {"weight", weight_json(w)}};
            json rep = make_report("minkowski", inputs);
            bool ok;
            if (!weight2.empty()) {
                Weight w2 = parse_weight(weight2, t.rank);
                inputs["weight2"] = weight_json(w2);
                rep["inputs"] = inputs;
                LatticeSet a = lattice_points(build_polytope(t, w));
                LatticeSet b = lattice_points(build_polytope(t, w2));
                LatticeSet sum = minkowski_sum(a, b);
                LatticeSet direct = lattice_points(build_polytope(t, w + w2));
                ok = sum == direct;
                rep["result"]["equal"] = ok;
                rep["result"]["count"] = direct.size();
                if (!ok) {
                    LatticeSet missing;
                    for (const MultiExponent& p : direct)
                        if (!contains(sum, p)) missing.push_back(p);
                    rep["result"]["witness_only_in_S"] = lattice_to_json(missing);
                }
            } else {
                MinkowskiReport r = check_minkowski_decomposition(t, w);
                ok = r.equal;
                rep["result"]["equal"] = r.equal;
                rep["result"]["only_in_S"] = lattice_to_json(r.only_in_S);
                rep["result"]["only_in_sum"] = lattice_to_json(r.only_in_sum);
            }
            return finish(rep, mo, ok, t0);
        }

        if (normality_cmd->parsed()) {
            LieType t(parse_family(no.type_str), no.rank);
            Weight w = parse_weight(no.weight_str, t.rank);
            NormalityCertificate c = check_normality(build_polytope(t, w), n_max);
            json inputs{{"type", no.type_str},
                        {"rank", no.rank},
                        {"weight", weight_json(w)},
                        {"n_max", n_max}};
            json rep = make_report("normality", inputs);
            rep["result"]["ok"] = c.ok;
            if (!c.ok) {
                rep["result"]["level"] = c.level;
                rep["result"]["witness"] = exponent_to_json(c.witness);
            }
            return finish(rep, no, c.ok, t0);
        }

        if (hilbert_cmd->parsed()) {
            LieType t(parse_family(ho.type_str), ho.rank);
            Weight w = parse_weight(ho.weight_str, t.rank);
            PolytopeSpec p = build_polytope(t, w);
            LatticeSet s = lattice_points(p);
            long h = hilbert_function(s, level, p.dim);
            json inputs{{"type", ho.type_str},
                        {"rank", ho.rank},
                        {"weight", weight_json(w)},
                        {"level", level}};
            json rep = make_report("hilbert", inputs);
            rep["result"]["value"] = h;
            rep["result"]["dilate_count"] =
                level == 0 ? 1L : static_cast<long>(lattice_points(dilate(p, level)).size());
            bool ok = rep["result"]["value"] == rep["result"]["dilate_count"];
            rep["result"]["matches_dilation"] = ok;
            return finish(rep, ho, ok, t0);
        }

        if (valuation_cmd->parsed()) {
            LieType t(parse_family(vo.type_str), vo.rank);
            Weight w = parse_weight(vo.weight_str, t.rank);
            RepModule m = module_for_weight(t, w);
            LatticeSet val = valuation_semigroup_layer(m, vlevel);
            LatticeSet ess = essential_semigroup_layer(m, vlevel);
            bool ok = val == ess;
            json inputs{{"type", vo.type_str},
                        {"rank", vo.rank},
                        {"weight", weight_json(w)},
                        {"level", vlevel}};
            json rep = make_report("valuation", inputs);
            rep["result"]["valuation_layer"] = lattice_to_json(val);
            rep["result"]["essential_layer"] = lattice_to_json(ess);
            rep["result"]["equal"] = ok;
            if (vdump) rep["module"] = module_to_json(m);
            return finish(rep, vo, ok, t0);
        }

        if (demazure_cmd->parsed()) {
            std::vector<Ray> rays = fan_rays_A_regular(dz.rank);
            std::vector<DemazureRoot> roots = demazure_roots(rays, box_bound);
            AutomorphismSummary s = automorphism_summary(rays, roots);
            long formula = demazure_count_formula(dz.rank);
            bool ok = s.total_roots == formula;
            json inputs{{"rank", dz.rank}, {"box_bound", box_bound}};
            json rep = make_report("demazure", inputs);
            rep["result"]["labels"] =
                default_good_ordering(LieType(Family::A, dz.rank)).labels();
            rep["result"]["rays"] = rays_to_json(rays);
            rep["result"]["roots"] = demazure_to_json(roots, rays);
            rep["result"]["count"] = s.total_roots;
            rep["result"]["count_formula"] = formula;
            rep["result"]["count_matches_formula"] = ok;
            rep["result"]["torus_dim"] = s.torus_dim;
            rep["result"]["semisimple_roots"] = s.semisimple_roots;
            rep["result"]["unipotent_dim"] = s.unipotent_dim;
            std::ostringstream text;
            text << "rank " << dz.rank << ": " << s.total_roots << " Demazure roots (formula "
                 << formula << ")\n";
            for (const DemazureRoot& r : roots) {
                text << "  (";
                for (std::size_t k = 0; k < r.m.size(); ++k) text << (k ? "," : "") << r.m[k];
                text << ")  ray " << rays[r.ray_index].name << "\n";
            }
            return finish(rep, dz, ok, t0, text.str());
        }

        if (gob_cmd->parsed()) {
            LieType t(parse_family(go.type_str), go.rank);
            auto gens = gob_generators(t);
            json inputs{{"type", go.type_str}, {"rank", go.rank}};
            json rep = make_report("gob", inputs);
            json a = json::array();
            for (const auto& [v, i] : gens) {
                json g;
                g["vertex"] = qvector_to_json(v);
                g["fundamental_weight"] = i;
                a.push_back(std::move(g));
            }
            rep["result"]["generators"] = std::move(a);
            rep["result"]["count"] = gens.size();
            return finish(rep, go, true, t0);
        }

        if (verify_cmd->parsed()) {
            LieType t(parse_family(fo.type_str), fo.rank);
            json inputs{{"type", fo.type_str},
                        {"rank", fo.rank},
                        {"max_coeff", max_coeff},
                        {"n_max", fav_nmax},
                        {"oracle", with_oracle}};
            json rep = make_report("verify-favourable", inputs);
            json checks = json::array();
            bool all_ok = true;

            std::vector<Weight> grid;
            std::vector<long> cur(t.rank, 0);
            std::function<void(int, long)> fill = [&](int pos, long left) {
                if (pos == t.rank) {
                    grid.emplace_back(cur);
                    return;
                }
                for (long x = 0; x <= left; ++x) {
                    cur[pos] = x;
                    fill(pos + 1, left - x);
                }
                cur[pos] = 0;
            };
            fill(0, max_coeff);

            for (const Weight& w : grid) {
                if (w.total() == 0) continue;
                PolytopeSpec p = build_polytope(t, w);
                LatticeSet s = lattice_points(p);
                bool dim_ok = Integer(static_cast<long>(s.size())) == weyl_dim(t, w);
                bool mink_ok = check_minkowski_decomposition(t, w).equal;
                bool norm_ok = check_normality(p, fav_nmax).ok;
                json c{{"weight", weight_json(w)},
                       {"count", s.size()},
                       {"dimension_law", dim_ok},
                       {"minkowski", mink_ok},
                       {"normality", norm_ok}};
                bool here = dim_ok && mink_ok && norm_ok;
                if (with_oracle) {
                    bool oracle_ok = compare_es_vs_S(t, w).equal;
                    c["essential_equals_S"] = oracle_ok;
                    here = here && oracle_ok;
                }
                std::cerr << "verify " << t.name() << " " << w.str() << ": "
                          << (here ? "ok" : "FAIL") << "\n";
                all_ok = all_ok && here;
                checks.push_back(std::move(c));
            }
            rep["result"]["checks"] = std::move(checks);
            rep["result"]["all_ok"] = all_ok;
            return finish(rep, fo, all_ok, t0);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}
