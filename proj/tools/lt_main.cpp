// command-line front end for the largeness toolkit
#include "lt/io.hpp"
#include "lt/lowerbound.hpp"
#include "lt/ramsey.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <random>

using namespace lt;

namespace {

enum Exit { OK = 0, NO = 1, UNSURE = 2, USAGE = 3 };

struct Global {
    unsigned threads = 1;
    std::uint64_t seed = 20240601;
    std::uint64_t budget = 5'000'000;
    bool json_out = false;
    bool paranoid = false;
    std::string floor = "3";
};

struct ThetaOpts {
    std::string theta = "top";
    std::string a = "0";
    std::string A;
    std::string tx;  // base,rank
    bool inclusive = false;

    void add(CLI::App* c) {
        c->add_option("--theta", theta, "theta(x,y,z) as a formula, or 'top'");
        c->add_option("--a", a, "first-order parameter a");
        c->add_option("--A", A, "second-order parameter as a bit string");
        c->add_option("--tx", tx, "use T_X of tree(base,rank) instead of --theta");
        c->add_flag("--inclusive", inclusive, "apartness quantifiers run up to and including the bounds");
    }
    Pi03Sentence get() const {
        if (!tx.empty()) {
            auto comma = tx.find(',');
            if (comma == std::string::npos) throw DomainError("--tx wants base,rank");
            CanonicalTree t(parse_nat(tx.substr(0, comma)), *to_u64(parse_nat(tx.substr(comma + 1))));
            return export_tx(t);
        }
        if (theta == "top") return Pi03Sentence::top();
        auto s = Pi03Sentence::from_text(theta, parse_nat(a), SecondOrderParam::from_string(A));
        s.inclusive = inclusive;
        return s;
    }
};

struct SetOpts {
    std::string path, interval;
    void add(CLI::App* c, const std::string& name = "--set") {
        c->add_option(name, path, "set file: JSON array or one numeral per line");
        c->add_option(name + "-interval", interval, "interval lo,hi instead of a file");
    }
    FinSet get(const Global& g) const {
        Nat fl = parse_nat(g.floor);
        if (!interval.empty()) {
            auto comma = interval.find(',');
            if (comma == std::string::npos) throw DomainError("interval wants lo,hi");
            return FinSet::interval(parse_nat(interval.substr(0, comma)), parse_nat(interval.substr(comma + 1)), fl);
        }
        if (path.empty()) throw DomainError("no set given");
        return parse_finset_text(read_file(path), fl);
    }
};

ColoringTable load_coloring(const std::string& path) {
    if (path.empty()) throw DomainError("no coloring given");
    try {
        return coloring_from_json(json::parse(read_file(path)));
    } catch (const json::exception& e) {
        throw DomainError(path + ": " + e.what());
    }
}

json load_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw DomainError(path + ": " + e.what());
    }
}

// one result object; human mode prints the summary line plus selected fields
int emit(const Global& g, json r, int code) {
    r["exit"] = code;
    if (g.json_out) {
        std::cout << r.dump(2) << "\n";
        return code;
    }
    if (r.contains("summary")) std::cout << r["summary"].get<std::string>() << "\n";
    for (auto& [k, v] : r.items()) {
        if (k == "summary" || k == "exit") continue;
        std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return code;
}

int tri_exit(Tri t) { return t == Tri::True ? OK : t == Tri::False ? NO : UNSURE; }

std::string brief(const FinSet& s) { return finset_brief(s); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"largeness toolkit: alpha-largeness(T), groupings, density and the minimal-set lower bound"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--threads", g.threads, "worker threads for exact enumerations");
    app.add_option("--seed", g.seed, "seed for all sampling");
    app.add_option("--budget", g.budget, "search node budget");
    app.add_flag("--json", g.json_out, "machine-readable output");
    app.add_flag("--paranoid", g.paranoid, "check all block pairs when verifying certificates");
    app.add_option("--floor", g.floor, "least admissible element");

    std::function<int()> action;

    // large
    auto* large = app.add_subcommand("large", "largeness checks and the lemmas built on them");
    large->require_subcommand(1);

    SetOpts lc_set;
    ThetaOpts lc_t;
    std::uint64_t lc_n = 1, lc_k = 1;
    bool lc_greedy = false;
    std::string lc_cert, lc_out;
    auto* lcheck = large->add_subcommand("check", "is X omega^n*k-large(T)?");
    lc_set.add(lcheck);
    lc_t.add(lcheck);
    lcheck->add_option("--n", lc_n);
    lcheck->add_option("--k", lc_k);
    lcheck->add_flag("--greedy", lc_greedy, "greedy block choice (sound, may miss)");
    lcheck->add_option("--cert", lc_cert, "verify this certificate instead of searching");
    lcheck->add_option("--out", lc_out, "write the certificate here");
    lcheck->callback([&] {
        action = [&] {
            FinSet X = lc_set.get(g);
            Pi03Sentence T = lc_t.get();
            LargenessSpec sp{lc_n, lc_k, T};
            json r{{"set", brief(X)}, {"n", lc_n}, {"k", lc_k}, {"theta", T.is_top() ? "top" : print(T.theta)}};
            if (!lc_cert.empty()) {
                bool ok = verify_certificate(X, certificate_from_json(load_json(lc_cert)), sp, g.paranoid);
                r["summary"] = ok ? "certificate accepted" : "certificate rejected";
                r["valid"] = ok;
                return emit(g, r, ok ? OK : NO);
            }
            auto c = check_large(X, sp, lc_greedy ? SearchMode::Greedy : SearchMode::Exhaustive);
            if (!c) {
                r["summary"] = lc_greedy ? "greedy search found no blocks" : "not large";
                r["large"] = false;
                return emit(g, r, lc_greedy ? UNSURE : NO);
            }
            r["summary"] = "large";
            r["large"] = true;
            r["certificate"] = to_json(*c);
            if (!lc_out.empty()) write_file(lc_out, to_json(*c).dump(2) + "\n");
            return emit(g, r, OK);
        };
    });

    std::string lm_base = "3", lm_budget = "100000";
    std::uint64_t lm_n = 1;
    std::string lm_out;
    auto* lmin = large->add_subcommand("minimal", "the minimal omega^n-large interval above a base");
    lmin->add_option("--base", lm_base);
    lmin->add_option("--n", lm_n);
    lmin->add_option("--max-size", lm_budget, "largest interval to materialize");
    lmin->add_option("--out", lm_out, "write the set here");
    lmin->callback([&] {
        action = [&] {
            auto res = minimal_large_interval(parse_nat(lm_base), lm_n, parse_nat(lm_budget));
            json r{{"base", lm_base}, {"n", lm_n}};
            r["cardinality"] = res.cardinality ? res.cardinality->str() : "more than 2^" + std::to_string(1u << 20);
            if (res.set) {
                r["max"] = res.set->max().str();
                r["set"] = brief(*res.set);
                r["validated"] = res.validated;
                if (!lm_out.empty()) write_file(lm_out, finset_to_text(*res.set));
                r["summary"] = "minimal interval";
                return emit(g, r, OK);
            }
            r["summary"] = "too large to materialize";
            return emit(g, r, UNSURE);
        };
    });

    SetOpts lp_set;
    ThetaOpts lp_t;
    std::string lp_col, lp_sparsity = "none", lp_out;
    std::uint64_t lp_b = 1;
    bool lp_nofallback = false;
    auto* lpig = large->add_subcommand("pigeonhole", "homogeneous omega^b-large(T) subset for f : X -> min X");
    lp_set.add(lpig);
    lp_t.add(lpig);
    lpig->add_option("--coloring", lp_col)->required();
    lpig->add_option("--b", lp_b);
    lpig->add_option("--sparsity", lp_sparsity, "exp4|poly2|linear|none");
    lpig->add_flag("--no-fallback", lp_nofallback, "fail instead of searching colour classes");
    lpig->add_option("--out", lp_out, "write the certificate here");
    lpig->callback([&] {
        action = [&] {
            FinSet X = lp_set.get(g);
            PigeonholeOptions o{parse_sparsity(lp_sparsity), !lp_nofallback};
            auto res = pigeonhole_extract(X, load_coloring(lp_col), lp_b, lp_t.get(), o);
            json r{{"summary", "homogeneous subset"}, {"subset", to_json(res.set)}, {"route", res.route},
                   {"counting_steps", res.counting_steps}, {"counting_failures", res.counting_failures},
                   {"sparsity_shortfalls", res.sparsity_shortfalls}, {"certificate", to_json(res.cert)}};
            if (!lp_out.empty()) write_file(lp_out, to_json(res.cert).dump(2) + "\n");
            return emit(g, r, OK);
        };
    });

    SetOpts ld_set;
    ThetaOpts ld_t;
    std::uint64_t ld_n = 0, ld_m = 0;
    auto* ldec = large->add_subcommand("decompose", "apart omega^n blocks whose minima are omega^m-large");
    ld_set.add(ldec);
    ld_t.add(ldec);
    ldec->add_option("--n", ld_n);
    ldec->add_option("--m", ld_m);
    ldec->callback([&] {
        action = [&] {
            auto res = decompose_mixed(ld_set.get(g), ld_n, ld_m, ld_t.get());
            json bs = json::array();
            for (auto& b : res.blocks) bs.push_back(to_json(b));
            return emit(g, json{{"summary", std::to_string(res.blocks.size()) + " blocks"}, {"blocks", bs}}, OK);
        };
    });

    std::string lf_blocks, lf_out;
    ThetaOpts lf_t;
    std::uint64_t lf_a = 0, lf_b = 0;
    auto* lfuse = large->add_subcommand("fuse", "fuse apart omega^a blocks with omega^{b+1}-large maxima");
    lfuse->add_option("--blocks", lf_blocks, "JSON array of sets")->required();
    lf_t.add(lfuse);
    lfuse->add_option("--block-exp", lf_a);
    lfuse->add_option("--max-exp", lf_b);
    lfuse->add_option("--out", lf_out, "write the certificate here");
    lfuse->callback([&] {
        action = [&] {
            std::vector<FinSet> bs;
            for (auto& b : load_json(lf_blocks)) bs.push_back(finset_from_json(b, parse_nat(g.floor)));
            auto res = fuse(bs, lf_a, lf_b, lf_t.get());
            if (!lf_out.empty()) write_file(lf_out, to_json(res.cert).dump(2) + "\n");
            return emit(g, json{{"summary", "fused"}, {"set", to_json(res.set)}, {"certificate", to_json(res.cert)}},
                        OK);
        };
    });

    // apart
    SetOpts ap_a, ap_b;
    ThetaOpts ap_t;
    bool ap_structural = false;
    auto* apart = app.add_subcommand("apart", "are X < Y T-apart?");
    ap_a.add(apart, "--left");
    ap_b.add(apart, "--right");
    ap_t.add(apart);
    apart->add_flag("--shortcut", ap_structural, "with --tx, decide by theta_X(max X, min Y, max Y)");
    apart->callback([&] {
        action = [&] {
            FinSet A = ap_a.get(g), B = ap_b.get(g);
            bool ok;
            if (ap_structural) {
                if (ap_t.tx.empty()) throw DomainError("--shortcut needs --tx");
                auto comma = ap_t.tx.find(',');
                CanonicalTree t(parse_nat(ap_t.tx.substr(0, comma)), *to_u64(parse_nat(ap_t.tx.substr(comma + 1))));
                ok = apart_shortcut(t, A, B);
            } else {
                ok = t_apart(A, B, ap_t.get());
            }
            return emit(g, json{{"summary", ok ? "apart" : "not apart"}, {"apart", ok}}, ok ? OK : NO);
        };
    });

    // grouping
    auto* grp = app.add_subcommand("grouping", "finite (L0, L1)-groupings");
    grp->require_subcommand(1);
    SetOpts gf_set;
    ThetaOpts gf_t;
    std::string gf_col, gf_l0 = "large:1", gf_l1 = "card:2", gf_out;
    auto* gfind = grp->add_subcommand("find", "search for a grouping");
    gf_set.add(gfind);
    gf_t.add(gfind);
    gfind->add_option("--coloring", gf_col)->required();
    gfind->add_option("--l0", gf_l0, "card:M or large:N[:K]");
    gfind->add_option("--l1", gf_l1, "card:M or large:N[:K]");
    gfind->add_option("--out", gf_out, "write the witness here");
    gfind->callback([&] {
        action = [&] {
            Budget b(g.budget);
            auto res = find_grouping(gf_set.get(g), load_coloring(gf_col), parse_lspec(gf_l0), parse_lspec(gf_l1),
                                     gf_t.get(), b);
            json r{{"summary", to_string(res.status)}, {"nodes", res.nodes}};
            if (!res.reason.empty()) r["reason"] = res.reason;
            if (res.witness) {
                json bs = json::array();
                for (auto& blk : res.witness->blocks) bs.push_back(brief(blk));
                r["blocks"] = bs;
                if (!gf_out.empty()) write_file(gf_out, to_json(*res.witness).dump() + "\n");
            }
            return emit(g, r, res.status == SearchStatus::Found ? OK : res.status == SearchStatus::None ? NO : UNSURE);
        };
    });
    std::string gc_w, gc_l0 = "large:1", gc_l1 = "card:2";
    ThetaOpts gc_t;
    auto* gcheck = grp->add_subcommand("check", "check a grouping witness");
    gcheck->add_option("--witness", gc_w)->required();
    gcheck->add_option("--l0", gc_l0);
    gcheck->add_option("--l1", gc_l1);
    gc_t.add(gcheck);
    gcheck->callback([&] {
        action = [&] {
            auto w = grouping_from_json(load_json(gc_w));
            auto v = grouping_violation(w, parse_lspec(gc_l0), parse_lspec(gc_l1), gc_t.get());
            json r{{"summary", v ? "not a grouping" : "grouping"}};
            if (v) r["violation"] = *v;
            return emit(g, r, v ? NO : OK);
        };
    });

    // gamma
    auto* gam = app.add_subcommand("gamma", "largeness(T, Gamma) and density");
    gam->require_subcommand(1);
    struct GammaOpts {
        unsigned arity = 2, colors = 2;
        std::string psi0 = "homogeneous", formula;
        bool sampled = false;
        std::uint64_t trials = 200, ceiling = 1u << 20;
        void add(CLI::App* c) {
            c->add_option("--arity", arity);
            c->add_option("--colors", colors);
            c->add_option("--psi0", psi0, "homogeneous|transitive|monotone-asc|monotone-desc|true");
            c->add_option("--psi0-formula", formula, "closed formula over a = |G| and A = table bits");
            c->add_flag("--sampled", sampled);
            c->add_option("--trials", trials);
            c->add_option("--ceiling", ceiling, "largest exact enumeration");
        }
        RtLikeStatement stmt() const {
            if (!formula.empty()) return RtLikeStatement::formula(arity, colors, formula);
            return RtLikeStatement::builtin(arity, colors, parse_psi0(psi0));
        }
    };
    SetOpts gl_set;
    ThetaOpts gl_t;
    GammaOpts gl_g;
    std::uint64_t gl_r = 1, gl_s = 1;
    auto* glarge = gam->add_subcommand("large", "is Z omega^r*s-large(T, Gamma)?");
    gl_set.add(glarge);
    gl_t.add(glarge);
    gl_g.add(glarge);
    glarge->add_option("--r", gl_r);
    glarge->add_option("--s", gl_s);
    glarge->callback([&] {
        action = [&] {
            EvalMode m{gl_g.sampled, g.seed, gl_g.trials, gl_g.ceiling, g.threads};
            auto res = is_large_gamma(gl_set.get(g), gl_r, gl_s, gl_t.get(), gl_g.stmt(), m);
            return emit(g, json{{"summary", to_string(res.value)}, {"reason", res.reason}}, tri_exit(res.value));
        };
    });
    SetOpts gd_set;
    ThetaOpts gd_t;
    GammaOpts gd_g;
    std::uint64_t gd_m = 0;
    auto* gdense = gam->add_subcommand("dense", "is Z m-dense(T, Gamma)?");
    gd_set.add(gdense);
    gd_t.add(gdense);
    gd_g.add(gdense);
    gdense->add_option("--m", gd_m);
    gdense->callback([&] {
        action = [&] {
            DensityParams p{gd_g.stmt(), gd_t.get(), gd_m, {gd_g.sampled, g.seed, gd_g.trials, gd_g.ceiling, g.threads}};
            auto res = is_n_dense(gd_set.get(g), p);
            return emit(g, json{{"summary", to_string(res.value)}, {"reason", res.reason}}, tri_exit(res.value));
        };
    });

    // em
    auto* em = app.add_subcommand("em", "transitive subsets");
    em->require_subcommand(1);
    SetOpts ee_set;
    ThetaOpts ee_t;
    std::string ee_col;
    std::uint64_t ee_n = 1, ee_tr = 2;
    auto* eext = em->add_subcommand("extract", "f-transitive omega^n-large(T) subset");
    ee_set.add(eext);
    ee_t.add(eext);
    eext->add_option("--coloring", ee_col)->required();
    eext->add_option("--n", ee_n);
    eext->add_option("--transversal-exp", ee_tr, "scaled transversal exponent");
    eext->callback([&] {
        action = [&] {
            Budget b(g.budget);
            EmOptions o;
            o.transversal_exp = ee_tr;
            FinSet X = ee_set.get(g);
            auto res = em_extract(X, load_coloring(ee_col), ee_n, ee_t.get(), b, o);
            json r{{"summary", to_string(res.status)}, {"stage", res.stage}};
            if (!res.reason.empty()) r["reason"] = res.reason;
            if (res.set) r["subset"] = to_json(*res.set);
            if (res.cert) r["certificate"] = to_json(*res.cert);
            return emit(g, r, res.status == SearchStatus::Found ? OK : res.status == SearchStatus::None ? NO : UNSURE);
        };
    });

    // ads
    auto* ads = app.add_subcommand("ads", "ascending/descending sequences");
    ads->require_subcommand(1);
    SetOpts aq_set;
    ThetaOpts aq_t;
    std::string aq_col, aq_reading = "drop-max", aq_out;
    std::uint64_t aq_n = 1;
    auto* aq = ads->add_subcommand("q", "the colouring Q built from long(T) intervals");
    auto* aext = ads->add_subcommand("extract", "homogeneous omega^n-large(T) subset of a transitive colouring");
    for (auto* c : {aq, aext}) {
        c->add_option("--coloring", aq_col)->required();
        c->add_option("--n", aq_n);
        c->add_option("--reading", aq_reading, "omega^k+1 reading: drop-max|apart-point");
    }
    aq_set.add(aq);
    aq_t.add(aq);
    aq->add_option("--out", aq_out, "write Q here");
    SetOpts ae_set;
    ThetaOpts ae_t;
    ae_set.add(aext);
    ae_t.add(aext);
    aq->callback([&] {
        action = [&] {
            auto q = ads_q_coloring(aq_set.get(g), load_coloring(aq_col), aq_n, aq_t.get(),
                                    parse_successor_reading(aq_reading));
            json r{{"summary", "Q computed"}, {"colors", q.q.colors()}};
            std::map<unsigned, std::uint64_t> hist;
            for (auto c : q.q.table()) ++hist[c];
            json h = json::object();
            for (auto& [c, k] : hist) h[std::to_string(c)] = k;
            r["histogram"] = h;
            if (q.homogeneous) r["homogeneous"] = to_json(*q.homogeneous);
            if (!aq_out.empty()) write_file(aq_out, to_json(q.q).dump() + "\n");
            return emit(g, r, OK);
        };
    });
    aext->callback([&] {
        action = [&] {
            Budget b(g.budget);
            auto res = ads_extract(ae_set.get(g), load_coloring(aq_col), aq_n, ae_t.get(), b,
                                   parse_successor_reading(aq_reading));
            json r{{"summary", to_string(res.result.status)}, {"stage", res.result.stage}};
            if (!res.result.reason.empty()) r["reason"] = res.result.reason;
            if (res.result.set) r["subset"] = to_json(*res.result.set);
            if (res.q_homogeneous) r["q_homogeneous"] = to_json(*res.q_homogeneous);
            auto st = res.result.status;
            return emit(g, r, st == SearchStatus::Found ? OK : st == SearchStatus::None ? NO : UNSURE);
        };
    });

    // lowerbound
    auto* lb = app.add_subcommand("lowerbound", "minimal sets, canonical blocks and f_X");
    lb->require_subcommand(1);
    std::string lt_base = "3", lt_budget = "100000";
    std::uint64_t lt_rank = 1;
    bool lt_mat = false;
    auto* ltree = lb->add_subcommand("tree", "summary of tree(base, rank)");
    ltree->add_option("--base", lt_base);
    ltree->add_option("--rank", lt_rank);
    ltree->add_flag("--materialize", lt_mat);
    ltree->add_option("--max-size", lt_budget);
    ltree->callback([&] {
        action = [&] {
            CanonicalTree t(parse_nat(lt_base), lt_rank);
            auto c = t.cardinality();
            std::string big = "more than 2^" + std::to_string(CanonicalTree::max_bits);
            json r{{"summary", "tree(" + lt_base + "," + std::to_string(lt_rank) + ")"},
                   {"base", lt_base},
                   {"rank", lt_rank},
                   {"cardinality", c ? c->str() : big},
                   {"max", t.max() ? t.max()->str() : big}};
            if (lt_rank > 0) {
                json kids = json::array();
                for (std::size_t j = 0; j < std::min<std::size_t>(t.child_count(), 8); ++j) {
                    auto ch = t.child(j);
                    std::string d = ch.base().str();
                    if (d.size() > 40) d = d.substr(0, 20) + "...(" + std::to_string(d.size()) + " digits)";
                    kids.push_back(d);
                }
                r["child_bases"] = kids;
            }
            if (lt_mat) {
                FinSet X = t.materialize(parse_nat(lt_budget));
                r["set"] = brief(X);
            }
            return emit(g, r, OK);
        };
    });
    std::string lx_base = "3", lx_value;
    std::uint64_t lx_rank = 1;
    auto* lfx = lb->add_subcommand("fx", "the colouring f_X");
    lfx->add_option("--base", lx_base);
    lfx->add_option("--rank", lx_rank);
    lfx->add_option("--value", lx_value, "one element; default lists the whole set");
    lfx->callback([&] {
        action = [&] {
            CanonicalTree t(parse_nat(lx_base), lx_rank);
            json r{{"summary", "f_X"}};
            if (!lx_value.empty()) {
                r["value"] = lx_value;
                r["color"] = t.f_x(parse_nat(lx_value));
                return emit(g, r, OK);
            }
            FinSet X = t.materialize(100000);
            std::string bits;
            for (auto& v : X.elems()) bits += char('0' + t.f_x(v));
            r["colors"] = bits;
            return emit(g, r, OK);
        };
    });
    std::uint64_t lv_n = 1, lv_prefix = 400;
    std::string lv_mode = "exhaustive", lv_base = "3";
    auto* lver = lb->add_subcommand("verify", "no f_X-homogeneous omega^n-large(T_X) subset");
    lver->add_option("--n", lv_n);
    lver->add_option("--base", lv_base);
    lver->add_option("--mode", lv_mode, "exhaustive|pruned");
    lver->add_option("--prefix", lv_prefix, "elements examined in pruned mode");
    lver->callback([&] {
        action = [&] {
            if (lv_mode != "exhaustive" && lv_mode != "pruned") throw DomainError("mode is exhaustive or pruned");
            CanonicalTree t(parse_nat(lv_base), 2 * lv_n - 1);
            auto res = verify_lower_bound(t, lv_n, lv_mode == "exhaustive", lv_prefix);
            json r{{"summary", to_string(res.status)}, {"checked", res.checked}, {"detail", res.detail}};
            if (res.counterexample) r["counterexample"] = to_json(*res.counterexample);
            int code = res.status == LowerBoundStatus::Verified ? OK
                       : res.status == LowerBoundStatus::Refuted ? NO
                                                                  : UNSURE;
            return emit(g, r, code);
        };
    });

    // bounds
    std::uint64_t bt_n = 5, bt_k = 2;
    auto* bt = app.add_subcommand("bounds-table", "explicit exponent bounds as TSV");
    bt->add_option("--n-max", bt_n);
    bt->add_option("--k", bt_k, "k in the grouping bound 16^k (n+1)");
    bt->callback([&] {
        action = [&] {
            auto rows = bounds_table(bt_n, bt_k);
            if (g.json_out) {
                json arr = json::array();
                for (auto& r : rows) {
                    json cg = json::array();
                    for (auto& v : r.grouping_chain) cg.push_back(v.str());
                    arr.push_back(json{{"n", r.n}, {"pigeonhole", r.pigeonhole.str()}, {"grouping_chain", cg},
                                       {"em", r.em.str()}, {"ads", r.ads.str()}, {"rt22", r.rt22.str()},
                                       {"lower", r.lower ? json(r.lower->str()) : json(nullptr)}});
                }
                std::cout << json{{"rows", arr}, {"exit", 0}}.dump(2) << "\n";
            } else {
                std::cout << bounds_tsv(rows);
            }
            return int(OK);
        };
    });

    // formula
    auto* fm = app.add_subcommand("formula", "bounded formulas");
    fm->require_subcommand(1);
    std::string fp_text;
    auto* fparse = fm->add_subcommand("parse", "parse and pretty-print");
    fparse->add_option("text", fp_text)->required();
    fparse->callback([&] {
        action = [&] {
            auto f = parse_formula(fp_text);
            auto fv = free_vars(f);
            return emit(g, json{{"summary", print(f)}, {"size", ast_size(f)}, {"free", fv}}, OK);
        };
    });
    std::string fe_text, fe_env, fe_a = "0", fe_A;
    auto* feval = fm->add_subcommand("eval", "evaluate under an environment");
    feval->add_option("text", fe_text)->required();
    feval->add_option("--env", fe_env, "x=1,y=2,...");
    feval->add_option("--a", fe_a);
    feval->add_option("--A", fe_A, "bit string");
    feval->callback([&] {
        action = [&] {
            Env env;
            std::set<std::string> names;
            std::string rest = fe_env;
            while (!rest.empty()) {
                auto comma = rest.find(',');
                std::string item = rest.substr(0, comma);
                rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
                auto eq = item.find('=');
                if (eq == std::string::npos) throw DomainError("bad binding '" + item + "'");
                env[item.substr(0, eq)] = parse_nat(item.substr(eq + 1));
                names.insert(item.substr(0, eq));
            }
            auto f = parse_formula(fe_text, names);
            EvalStats st;
            bool v = eval(f, env, parse_nat(fe_a), SecondOrderParam::from_string(fe_A), &st);
            return emit(g, json{{"summary", v ? "true" : "false"}, {"beyond_length", st.beyond_length}}, v ? OK : NO);
        };
    });
    std::string fw_text;
    auto* fweak = fm->add_subcommand("weaken", "weakly forall-Pi04 transform of a prefixed sentence");
    fweak->add_option("text", fw_text)->required();
    fweak->callback([&] {
        action = [&] {
            auto s = weakly_pi04_transform(parse_prefixed(fw_text));
            return emit(g, json{{"summary", print(s)}}, OK);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : USAGE;
    }
    try {
        return action();
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        if (g.json_out) std::cout << json{{"summary", "inconclusive"}, {"reason", e.what()}, {"exit", 2}}.dump() << "\n";
        return UNSURE;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return USAGE;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
