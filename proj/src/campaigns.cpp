#include "nicecurves/campaigns.hpp"

#include "nicecurves/sampling.hpp"

#include <chrono>
#include <set>
#include <sstream>

namespace nicecurves {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};

std::vector<WPPoint> expected_seven() { return search_points(HyperCurve::curve_Hq(), 10); }
std::vector<WPPoint> expected_twelve() { return search_points(HyperCurve::curve_H(), 10); }

} // namespace

std::vector<Rational> sample_nice_L(int count, long t_height, uint64_t seed) {
    SplitMix rng(seed);
    std::set<std::pair<std::string, std::string>> seen;
    std::vector<Rational> out;
    long guard = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++guard > 200000) throw std::runtime_error("sample_nice_L: parameter space exhausted");
        Rational t = rng.rational(t_height);
        ParamPoint pp;
        try {
            pp = param_L(t);
        } catch (const DegenerateParameter&) {
            continue;
        }
        auto key = std::make_pair(pp.L.num().get_str(), pp.L.den().get_str());
        if (!seen.insert(key).second) continue;
        out.push_back(pp.L);
    }
    return out;
}

std::vector<Rational> sample_special_u(int count, long u_height, uint64_t seed) {
    SplitMix rng(seed);
    std::set<std::pair<std::string, std::string>> seen;
    std::vector<Rational> out;
    long guard = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++guard > 200000) throw std::runtime_error("sample_special_u: parameter space exhausted");
        Rational u = rng.rational(u_height);
        if (u.is_zero() || u == Rational(1) || u == Rational(-1)) continue;
        auto key = std::make_pair(u.num().get_str(), u.den().get_str());
        if (!seen.insert(key).second) continue;
        out.push_back(u);
    }
    return out;
}

std::vector<Integer> squarefree_d_list(int count, long max_abs) {
    std::vector<Integer> out;
    for (long a = 1; a <= max_abs && static_cast<int>(out.size()) < count; ++a) {
        for (long s : {-1L, 1L}) {
            long d = s * a;
            if (d == 1) continue;
            if (squarefree_part(Rational(d)) != d) continue;
            out.emplace_back(d);
            if (static_cast<int>(out.size()) == count) break;
        }
    }
    return out;
}

VerificationReport campaign_param(uint64_t seed, int round_trips) {
    Timer tm;
    VerificationReport r;
    r.claim = "prop.L.param";
    r.parameters = {{"seed", seed}, {"round_trips", round_trips}};
    bool ok = true;

    auto p3 = param_L(Rational(3));
    ok = ok && p3.L == Rational(8, 5) && p3.W == Rational(7, 5);
    auto p5 = param_L(Rational(5));
    ok = ok && p5.L == Rational(8, 3) && p5.W == Rational(7, 3);
    try {
        param_L(Rational(2));
        ok = false;
    } catch (const DegenerateParameter& e) {
        ok = ok && e.which == Degeneracy::LIsOne;
    }

    SplitMix rng(seed);
    int done = 0;
    while (done < round_trips) {
        Rational t = rng.rational(80);
        ParamPoint pp;
        try {
            pp = param_L(t);
        } catch (const DegenerateParameter&) {
            continue;
        }
        bool rt = (param_inverse(pp.L, pp.W) == t) || (param_inverse(pp.L, -pp.W) == t);
        bool nice = (pp.L * pp.L - pp.L + Rational(1) == pp.W * pp.W) && !pp.L.is_zero() && pp.L != Rational(1);
        if (!(rt && nice)) {
            ok = false;
            r.witnesses["first_violation"] = {{"t", js(t)}, {"L", js(pp.L)}, {"W", js(pp.W)}};
            break;
        }
        ++done;
    }
    r.witnesses["spot"] = {{"t=3", {{"L", js(p3.L)}, {"W", js(p3.W)}}}};
    r.status = ok ? Status::Pass : Status::Fail;
    r.seconds = tm.seconds();
    return r;
}

VerificationReport campaign_search_Hq(long bound) {
    Timer tm;
    VerificationReport r;
    r.claim = "lemma.quotient.search";
    r.parameters = {{"curve", "Hq"}, {"bound", bound}};
    auto pts = search_points(HyperCurve::curve_Hq(), bound);
    auto expect = expected_seven();
    bool ok = pts == expect;
    nlohmann::json arr = nlohmann::json::array();
    for (auto& P : pts) arr.push_back(js(P));
    r.witnesses["points"] = arr;
    r.witnesses["count"] = pts.size();
    if (!ok) r.notes.push_back("point list differs from the expected 7");
    r.status = ok ? Status::Pass : Status::Fail;
    r.seconds = tm.seconds();
    return r;
}

VerificationReport campaign_search_H(long bound) {
    Timer tm;
    VerificationReport r;
    r.claim = "prop.hyper.search-pullback";
    r.parameters = {{"curve", "H"}, {"bound", bound}};
    auto pts = search_points(HyperCurve::curve_H(), bound);
    auto expect = expected_twelve();
    bool ok = pts == expect;

    // pullback of the 7-list reproduces the 12-list exactly
    std::vector<WPPoint> pulled;
    for (auto& Q : expected_seven())
        for (auto& P : pullback_points(Q)) pulled.push_back(P);
    std::sort(pulled.begin(), pulled.end());
    bool pull_ok = pulled == expect;

    nlohmann::json arr = nlohmann::json::array();
    for (auto& P : pts) arr.push_back(js(P));
    r.witnesses["points"] = arr;
    r.witnesses["count"] = pts.size();
    r.witnesses["pullback_matches"] = pull_ok;
    if (!ok) r.notes.push_back("point list differs from the expected 12");
    if (!pull_ok) r.notes.push_back("pullback of the 7-list does not reproduce the 12-list");
    r.status = (ok && pull_ok) ? Status::Pass : Status::Fail;
    r.seconds = tm.seconds();
    return r;
}

VerificationReport campaign_torsion_classification(int L_samples, long t_height, int d_count, long d_abs,
                                                   uint64_t seed) {
    Timer tm;
    VerificationReport r;
    r.claim = "thm1.ii.torsion";
    r.parameters = {{"L_samples", L_samples}, {"t_height", t_height}, {"d_count", d_count},
                    {"d_abs", d_abs},         {"seed", seed}};
    auto Ls = sample_nice_L(L_samples, t_height, seed);
    auto ds = squarefree_d_list(d_count, d_abs);
    long checked = 0;
    bool ok = true;
    for (const Rational& L : Ls) {
        Integer d_star = squarefree_part(Rational(1) - L);
        std::vector<Integer> all_d = ds;
        if (std::find(all_d.begin(), all_d.end(), d_star) == all_d.end()) all_d.push_back(d_star);
        for (const Integer& d : all_d) {
            TorsionClassification tc;
            try {
                tc = torsion_classification(L, d);
            } catch (const std::exception& e) {
                ok = false;
                r.witnesses["first_violation"] = {{"L", js(L)}, {"d", d.get_str()}, {"error", e.what()}};
                break;
            }
            bool expect_z2z4 = (d == d_star);
            bool got_z2z4 = tc.code == TorsionCode::Z2xZ4;
            bool witness_ok = !got_z2z4 || (tc.witness && point_order(tc.witness->curve, tc.witness->point) == 4);
            if (expect_z2z4 != got_z2z4 || !witness_ok) {
                ok = false;
                r.witnesses["first_violation"] = {{"L", js(L)}, {"d", d.get_str()}};
                break;
            }
            ++checked;
        }
        if (!ok) break;
    }
    r.witnesses["pairs_checked"] = checked;
    auto w = torsion_classification(Rational(8, 5), Integer(-15));
    r.witnesses["spot_8_5"] = {{"d_star", w.distinguished_d.get_str()},
                               {"witness_x", w.witness ? js(w.witness->point.x) : nlohmann::json()}};
    r.status = ok ? Status::Pass : Status::Fail;
    r.seconds = tm.seconds();
    return r;
}

VerificationReport campaign_psi3_roots(int samples, long t_height, uint64_t seed) {
    Timer tm;
    VerificationReport r;
    r.claim = "prop.3T.psi3-roots";
    r.parameters = {{"samples", samples}, {"t_height", t_height}, {"seed", seed}};
    auto Ls = sample_nice_L(samples, t_height, seed);
    bool ok = true;
    for (const Rational& L : Ls) {
        if (!rational_roots(psi3(L)).empty()) {
            ok = false;
            r.witnesses["counterexample_L"] = js(L);
            break;
        }
    }
    r.witnesses["samples_checked"] = Ls.size();
    r.status = ok ? Status::Pass : Status::Fail;
    r.seconds = tm.seconds();
    return r;
}

VerificationReport campaign_infinite_order(int samples, long u_height, uint64_t seed) {
    Timer tm;
    VerificationReport r;
    r.claim = "thm1.iii-iv.witnesses";
    r.parameters = {{"samples", samples}, {"u_height", u_height}, {"seed", seed}};
    bool ok = true;

    // fixed spot checks
    auto w2 = rank2_witnesses(Rational(2));
    ok = ok && w2.P == EllipticPoint<Rational>(Rational(3, 8), Rational(15, 32));
    ok = ok && w2.Q.x == QuadExt::rational_in(Rational(7, 6), Integer(-3)) && w2.q.abs() == Rational(7, 72);
    auto w3 = rank2_witnesses(Rational(3));
    ok = ok && w3.P == EllipticPoint<Rational>(Rational(4, 9), Rational(20, 27));
    ok = ok && w3.Q.x == QuadExt::rational_in(Rational(2), Integer(-3)) && w3.q.abs() == Rational(2, 3);
    r.witnesses["spot_u2_P"] = js(w2.P);
    r.witnesses["spot_u2_Q"] = js(w2.Q);
    r.witnesses["spot_u3_Q"] = js(w3.Q);

    auto us = sample_special_u(samples, u_height, seed);
    long done = 0;
    for (const Rational& u : us) {
        try {
            // rank2_witnesses certifies: exactly one critical value square, the
            // other in -3 Q^2, both points non-torsion, sigma(Q) = -Q
            rank2_witnesses(u);
            ++done;
        } catch (const std::exception& e) {
            ok = false;
            r.witnesses["first_violation"] = {{"u", js(u)}, {"error", e.what()}};
            break;
        }
    }
    r.witnesses["samples_certified"] = done;
    r.status = ok ? Status::Pass : Status::Fail;
    r.seconds = tm.seconds();
    return r;
}

VerificationReport campaign_j_square(int samples, long t_height, uint64_t seed) {
    Timer tm;
    VerificationReport r;
    r.claim = "sec6.j-square";
    r.parameters = {{"samples", samples}, {"t_height", t_height}, {"seed", seed}};
    bool ok = j_invariant(Rational(8, 5)) == Rational(686, 15) * Rational(686, 15);
    r.witnesses["spot_j_8_5"] = js(j_invariant(Rational(8, 5)));
    auto Ls = sample_nice_L(samples, t_height, seed);
    for (const Rational& L : Ls) {
        Rational j = j_invariant(L);
        auto root = is_square(j);
        if (j.is_zero() || !root) {
            ok = false;
            r.witnesses["counterexample_L"] = js(L);
            break;
        }
    }
    r.witnesses["samples_checked"] = Ls.size();
    r.status = ok ? Status::Pass : Status::Fail;
    r.seconds = tm.seconds();
    return r;
}

VerificationReport campaign_jacobian_oracle() {
    Timer tm;
    VerificationReport r;
    r.claim = "jacobian.zeta-oracle";
    HyperCurve Hq = HyperCurve::curve_Hq();
    std::vector<int64_t> good;
    for (int64_t p : {5, 7, 11})
        if (good_reduction(Hq, p)) good.push_back(p);
    bool ok = good.size() >= 2;
    nlohmann::json primes = nlohmann::json::array();
    for (size_t i = 0; ok && i < 2; ++i) {
        int64_t p = good[i];
        auto all = enumerate_jacobian_Fp(Hq, p);
        long zeta = jacobian_order_Fp(Hq, p);
        bool match = static_cast<long>(all.size()) == zeta;
        // element-order statistics: every order divides the enumerated count
        UniPoly<Fp> f = reduce_mod_p(Hq.g, p);
        std::map<long, long> order_hist;
        for (auto& D : all) {
            long o = order_in_group(f, D, static_cast<long>(all.size()));
            order_hist[o]++;
        }
        bool lagrange = true;
        for (auto& [o, cnt] : order_hist) lagrange = lagrange && (static_cast<long>(all.size()) % o == 0);
        ok = ok && match && lagrange && zeta > 0;
        nlohmann::json hist = nlohmann::json::object();
        for (auto& [o, cnt] : order_hist) hist[std::to_string(o)] = cnt;
        primes.push_back({{"p", p}, {"enumerated", all.size()}, {"zeta", zeta}, {"order_histogram", hist}});
    }
    r.witnesses["primes"] = primes;
    r.parameters = {{"primes", {good.size() > 0 ? good[0] : 0, good.size() > 1 ? good[1] : 0}}};
    r.status = ok ? Status::Pass : Status::Fail;
    r.seconds = tm.seconds();
    return r;
}

VerificationReport campaign_descent(uint64_t seed, int specializations) {
    Timer tm;
    VerificationReport r;
    r.claim = "prop.3T.descent";
    r.parameters = {{"seed", seed}, {"specializations", specializations}};
    bool ok = true;
    SplitMix rng(seed);

    // A^2 - 4B = -3/x^2 and the shifted-psi3 coefficient identity
    int done = 0;
    while (done < specializations) {
        Rational L = rng.rational(60), x = rng.rational(60, true);
        if (L.is_zero() || L == Rational(1)) continue;
        auto w = descent_chain(L, x);
        Rational ww = L * L - L + Rational(1);
        QPoly expect(std::vector<Rational>{-(ww * ww) / Rational(9),
                                           Rational(-4, 9) * (Rational(2) * L - Rational(1)) * (L + Rational(1)) *
                                               (L - Rational(2)),
                                           Rational(-2) * ww, Rational(0), Rational(3)});
        if (!w.identity_holds || shifted_psi3(L) != expect || w.on_S != w.shifted_psi3_root) {
            ok = false;
            r.witnesses["first_violation"] = {{"L", js(L)}, {"x", js(x)}};
            break;
        }
        ++done;
    }

    // cusp at (3, 9) by vanishing partials; the point (-3, 9/2) quoted
    // elsewhere for this cusp is recorded as a discrepancy
    CuspCubicPoint cusp{Rational(3), Rational(9)};
    bool cusp_ok = on_cusp_cubic(cusp) && cusp_cubic_dA(cusp).is_zero() && cusp_cubic_dB(cusp).is_zero();
    bool alt_cusp_on_S = on_cusp_cubic(CuspCubicPoint{Rational(-3), Rational(9, 2)});
    ok = ok && cusp_ok && !alt_cusp_on_S;
    r.witnesses["cusp"] = {{"A", "3/1"}, {"B", "9/1"}};
    r.notes.push_back("discrepancy: the cusp of S sits at (3, 9) by the vanishing partials; the point "
                      "(-3, 9/2) quoted elsewhere does not even satisfy the S equation");

    // sextic condition v values at u = 0, 1, 1/3
    ok = ok && *sextic_condition(Rational(0)) == Rational(1);
    ok = ok && *sextic_condition(Rational(1)) == Rational(4);
    ok = ok && *sextic_condition(Rational(1, 3)) == Rational(4, 9);

    // C -> H on the listed points
    WPPoint h1 = C_to_H(Rational(0), Rational(1), Rational(1));
    WPPoint h2 = C_to_H(Rational(3), Rational(4), Rational(9));
    auto twelve = expected_twelve();
    ok = ok && std::find(twelve.begin(), twelve.end(), h1) != twelve.end();
    ok = ok && std::find(twelve.begin(), twelve.end(), h2) != twelve.end();
    r.witnesses["C_to_H"] = {js(h1), js(h2)};

    // the pulled-back U-list closes the descent
    auto rep = conclude_no_3torsion({Rational(1), Rational(1, 3), Rational(0), Rational(-1), Rational(-1, 3)});
    ok = ok && rep.pass;
    r.witnesses["no_3torsion_entries"] = rep.entries.size();

    r.status = ok ? Status::Pass : Status::Fail;
    r.seconds = tm.seconds();
    return r;
}

VerificationReport campaign_aux_lemmas() {
    Timer tm;
    VerificationReport r;
    r.claim = "lemma.4t1-4t2.aux";
    auto rep = aux_lemma_curves_check();
    r.witnesses = {{"E1_ok", rep.e1_ok},
                   {"E2_ok", rep.e2_ok},
                   {"C_points_ok", rep.c_points_ok},
                   {"J_ok", rep.j_ok},
                   {"no_admissible_L", rep.no_admissible_L}};
    nlohmann::json jt = nlohmann::json::array();
    for (auto& P : rep.j_torsion) jt.push_back(js(P));
    r.witnesses["J_torsion"] = jt;
    r.notes.push_back("rank(E1) = rank(E2) = rank(J) = 0 are trusted inputs (Lemma 4t1 / 4t2)");
    r.status = rep.pass() ? Status::Pass : Status::Fail;
    r.seconds = tm.seconds();
    return r;
}

std::vector<VerificationReport> campaign_chabauty(int64_t max_prime, int precision, int64_t forced_prime) {
    Timer tm;
    std::vector<VerificationReport> out;

    VerificationReport trusted;
    trusted.claim = "trusted.rank.JacHq";
    trusted.status = Status::TrustedInput;
    trusted.notes.push_back("rank(Jac(H_q)) = 1 with generator [(0,-1) - inf] is a trusted input "
                            "(descent is out of scope); the generator's infinite order is certified in-repo");
    out.push_back(trusted);

    VerificationReport r;
    r.claim = "chabauty.hq";
    r.parameters = {{"max_prime", max_prime}, {"precision", precision}};
    if (forced_prime) r.parameters["forced_prime"] = forced_prime;

    HyperCurve Hq = HyperCurve::curve_Hq();
    auto gen = mumford_from_point(Rational(0), Rational(-1));
    auto known = expected_seven();

    int64_t hi = forced_prime ? forced_prime : max_prime;
    ChabautyResult res = certify_count(Hq, gen, known, hi, precision);
    if (forced_prime) {
        // keep only the forced prime's attempt in view
        std::vector<ChabautyAttempt> kept;
        for (auto& a : res.attempts)
            if (a.p == forced_prime) kept.push_back(a);
        res.attempts = kept;
        res.best_bound = kept.empty() || !kept.front().success ? -1 : kept.front().certified;
        res.best_prime = forced_prime;
        res.complete = res.best_bound == res.known_count;
    }

    bool a_ok = res.generator_certified;
    bool b_ok = false, c_ok = false;
    long worst_torsion = 0, worst_pair = 0;
    if (a_ok && res.best_prime > 0) {
        ColemanSetup setup = coleman_setup(Hq, res.best_prime, precision, gen, known);
        auto tv = torsion_class_integrals(setup, 25);
        b_ok = tv.all_vanish;
        worst_torsion = tv.worst_digits;
        auto ints = generator_integrals(setup);
        auto ann = annihilating_differential(setup, ints.I0, ints.I1);
        auto pairs = pairwise_difference_annihilation(setup, ann, 25);
        c_ok = !pairs.empty();
        worst_pair = kValInf;
        for (auto& pc : pairs) {
            c_ok = c_ok && pc.vanished;
            worst_pair = std::min(worst_pair, pc.certified_digits);
        }
    }
    bool d_ok = res.complete;

    nlohmann::json attempts = nlohmann::json::array();
    for (auto& a : res.attempts) {
        nlohmann::json ja{{"p", a.p}, {"precision", a.precision}, {"success", a.success}};
        if (a.success) {
            ja["certified_bound"] = a.certified;
            ja["kernel_multiplier"] = a.multiplier;
            nlohmann::json disks = nlohmann::json::array();
            for (auto& d : a.bounds.disks) {
                nlohmann::json jd{{"disk", d.disk.str()}, {"bound", d.bound}, {"anchored", d.anchored}};
                if (d.anchored) {
                    jd["strassmann"] = d.strassmann;
                    jd["known_points"] = d.known_in_disk.size();
                } else {
                    jd["reduced_vanishing_order"] = d.reduced_order;
                }
                disks.push_back(jd);
            }
            ja["disks"] = disks;
            ja["global_coleman_bound"] = a.bounds.global_coleman;
            ja["per_disk_total"] = a.bounds.per_disk_total;
        } else {
            ja["failure"] = a.failure;
        }
        attempts.push_back(ja);
    }
    r.witnesses = {{"generator_non_torsion", a_ok},
                   {"torsion_integrals_vanish", b_ok},
                   {"torsion_vanishing_digits", worst_torsion >= kValInf ? nlohmann::json("exact") : nlohmann::json(worst_torsion)},
                   {"pairwise_annihilation", c_ok},
                   {"pairwise_worst_digits", worst_pair},
                   {"bound_reaches_known_count", d_ok},
                   {"best_bound", res.best_bound},
                   {"best_prime", res.best_prime},
                   {"known_points", res.known_count},
                   {"attempts", attempts}};

    if (a_ok && b_ok && c_ok && d_ok) {
        r.status = Status::Pass;
        r.notes.push_back("verdict COMPLETE: certified bound equals the 7 known points");
    } else if (a_ok && b_ok && c_ok) {
        r.status = Status::Partial;
        long Np = res.best_prime > 0 ? count_points_Fp(Hq, res.best_prime) : -1;
        r.notes.push_back("verdict PARTIAL: best certified bound " + std::to_string(res.best_bound) + " = |C(F_" +
                          std::to_string(res.best_prime) + ")| + 2 = " + std::to_string(Np) +
                          " + 2 exceeds the 7 known points");
        r.notes.push_back("every residue disk carries at least one potential point without a Mordell-Weil "
                          "sieve (out of scope), and |H_q(F_p)| >= 8 for all good p <= 50, so the Coleman+"
                          "Strassmann bound cannot reach 7; unresolved disks are the unanchored ones listed");
    } else {
        r.status = Status::Fail;
    }
    r.seconds = tm.seconds();
    out.push_back(r);
    return out;
}

VerificationReport torsion_report(const Rational& L, const Integer& d) {
    Timer tm;
    VerificationReport r;
    r.claim = "thm1.ii.torsion-single";
    r.parameters = {{"L", L.str()}, {"d", d.get_str()}};
    try {
        auto tc = torsion_classification(L, d);
        r.witnesses["classification"] = tc.code == TorsionCode::Z2xZ4 ? "Z/2 x Z/4" : "Z/2 x Z/2";
        r.witnesses["distinguished_d"] = tc.distinguished_d.get_str();
        if (tc.witness) {
            r.witnesses["order4_witness"] = js(tc.witness->point);
        }
        r.status = Status::Pass;
    } catch (const std::exception& e) {
        r.status = Status::Fail;
        r.witnesses["error"] = e.what();
    }
    r.seconds = tm.seconds();
    return r;
}

VerificationReport twist_report(const Rational& L, const Integer& D) {
    Timer tm;
    VerificationReport r;
    r.claim = "twist";
    r.parameters = {{"L", L.str()}, {"D", D.get_str()}};
    try {
        auto E = quadratic_twist(L, D);
        QPoly cubic(std::vector<Rational>{E.a6, E.a4, E.a2, Rational(1)});
        auto roots = rational_roots(cubic);
        nlohmann::json jr = nlohmann::json::array();
        for (auto& rt : roots) jr.push_back(js(rt));
        r.witnesses["roots"] = jr;
        bool roots_ok = roots.size() == 3;
        // the twist inherits the nice property: its derivative splits over Q
        auto droots = rational_roots(cubic.derivative());
        r.witnesses["derivative_splits"] = droots.size() == 2;
        auto base = nice_curve_equation(L);
        bool disc_ok = E.disc == Rational(D).pow(6) * base.disc;
        r.witnesses["disc_is_D6_times_base"] = disc_ok;
        r.status = (roots_ok && droots.size() == 2 && disc_ok) ? Status::Pass : Status::Fail;
    } catch (const std::exception& e) {
        r.status = Status::Fail;
        r.witnesses["error"] = e.what();
    }
    r.seconds = tm.seconds();
    return r;
}

std::vector<VerificationReport> run_all(uint64_t seed, int64_t chabauty_max_prime, int precision,
                                        long search_bound) {
    std::vector<VerificationReport> out;
    out.push_back(campaign_search_Hq(search_bound));
    out.push_back(campaign_search_H(search_bound));
    out.push_back(campaign_torsion_classification(200, 50, 20, 50, seed));
    out.push_back(campaign_psi3_roots(500, 100, seed));
    out.push_back(campaign_infinite_order(100, 100, seed));
    out.push_back(campaign_j_square(500, 100, seed));
    out.push_back(campaign_jacobian_oracle());
    for (auto& r : campaign_chabauty(chabauty_max_prime, precision)) out.push_back(r);
    out.push_back(campaign_descent(seed, 50));
    out.push_back(campaign_aux_lemmas());
    out.push_back(campaign_param(seed, 1000));

    VerificationReport trusted;
    trusted.claim = "trusted.rank.E1-E2-C-J";
    trusted.status = Status::TrustedInput;
    trusted.notes.push_back("rank 0 for E1, E2 (Lemma 4t1) and for J = Jac(C) (Lemma 4t2) are trusted inputs; "
                            "the artifact verifies the point lists, group structure, and torsion");
    out.push_back(trusted);
    return out;
}

std::string param_sweep_csv(int count, long t_height, uint64_t seed) {
    std::ostringstream os;
    os << "t,L,W,r,s,torsion_class_d,j_num,j_den\n";
    SplitMix rng(seed);
    std::set<std::pair<std::string, std::string>> seen;
    int done = 0;
    long guard = 0;
    while (done < count && ++guard < 200000) {
        Rational t = rng.rational(t_height);
        ParamPoint pp;
        try {
            pp = param_L(t);
        } catch (const DegenerateParameter&) {
            continue;
        }
        auto key = std::make_pair(pp.L.num().get_str(), pp.L.den().get_str());
        if (!seen.insert(key).second) continue;
        NiceCurve nc = make_nice(pp.L);
        Integer dstar = squarefree_part(Rational(1) - pp.L);
        Rational j = j_invariant(pp.L);
        os << t.str() << "," << pp.L.str() << "," << pp.W.str() << "," << nc.r.str() << "," << nc.s.str() << ","
           << dstar.get_str() << "," << j.num().get_str() << "," << j.den().get_str() << "\n";
        ++done;
    }
    return os.str();
}

} // namespace nicecurves
