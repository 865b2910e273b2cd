#include "e8cat/suites.hpp"

#include "e8cat/catalog.hpp"
#include "e8cat/diagram.hpp"
#include "e8cat/parallel.hpp"
#include "e8cat/rng.hpp"
#include "e8cat/spin_module.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace e8cat {

namespace {

using Clock = std::chrono::steady_clock;

struct CheckBuilder {
    VerificationReport& report;
    Clock::time_point mark = Clock::now();

    void add(const std::string& id, const std::string& expected, const std::string& actual) {
        CheckRecord rec;
        rec.id = id;
        rec.expected = expected;
        rec.actual = actual;
        rec.pass = expected == actual;
        auto now = Clock::now();
        rec.elapsed_ms = std::chrono::duration<double, std::milli>(now - mark).count();
        mark = now;
        report.checks.push_back(std::move(rec));
    }
    void add_count(const std::string& id, size_t expected, size_t actual) {
        add(id, std::to_string(expected), std::to_string(actual));
    }
    void add_flag(const std::string& id, bool ok) { add(id, "pass", ok ? "pass" : "fail"); }
};

Octonion random_octonion(Rng& rng) {
    Octonion x;
    for (int i = 0; i < 8; ++i) x.c[i] = ExactScalar(rng.rational(5, 4));
    return x;
}

// ---------------------------------------------------------------- octonion

VerificationReport suite_octonion(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "octonion";
    CheckBuilder out{rep};

    size_t basis_ok = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Octonion p = oct_mul(Octonion::basis(i), Octonion::basis(j));
            if (oct_norm2(p) == ExactScalar(1)) ++basis_ok;
        }
    out.add_count("octonion.norm-mult.basis-pairs", 64, basis_ok);

    Rng rng(cfg.seed);
    size_t random_ok = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        Octonion x = random_octonion(rng), y = random_octonion(rng);
        if (oct_norm2(oct_mul(x, y)) == oct_norm2(x) * oct_norm2(y)) ++random_ok;
    }
    out.add_count("octonion.norm-mult.random-pairs", 1000, random_ok);

    size_t alt_ok = 0;
    for (int iter = 0; iter < 200; ++iter) {
        Octonion x = random_octonion(rng), y = random_octonion(rng);
        if (oct_mul(x, oct_mul(x, y)) == oct_mul(oct_mul(x, x), y)) ++alt_ok;
    }
    out.add_count("octonion.left-alternative.random", 200, alt_ok);

    size_t g2_ok = 0;
    for (int i = 0; i < 8; ++i)
        if (is_g2(gamma_element(i))) ++g2_ok;
    out.add_count("octonion.gamma.is-g2", 8, g2_ok);

    auto set = a_g2();
    bool group_ok = set.size() == 8;
    for (const auto& g : set) {
        group_ok = group_ok && (g * g).is_identity();
        for (const auto& h : set) {
            group_ok = group_ok && g * h == h * g;
            LinearMap8 p = g * h;
            bool closed = false;
            for (const auto& k : set) closed = closed || k == p;
            group_ok = group_ok && closed;
        }
    }
    out.add_flag("octonion.a-g2.abelian-involutive-subgroup-of-order-8", group_ok);
    out.add_count("octonion.two-number.g2", 8, set.size());
    return rep;
}

// ---------------------------------------------------------------- triality

VerificationReport suite_triality(const RunConfig& cfg) {
    (void)cfg;
    VerificationReport rep;
    rep.suite = "triality";
    CheckBuilder out{rep};

    size_t solver_ok = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            LinearMap8 e = so8_E(i, j);
            auto [x2, x3] = solve_triality(e);  // throws if routes disagree
            if (x2 == so8_triality_map(TrialityKind::gamma, e) &&
                x3 == so8_triality_map(TrialityKind::beta, e))
                ++solver_ok;
        }
    out.add_count("triality.solver-agrees-on-so8-basis", 28, solver_ok);

    bool s3_ok = true;
    for (int i = 0; i < 8 && s3_ok; ++i)
        for (int j = i + 1; j < 8; ++j) {
            LinearMap8 e = so8_E(i, j);
            auto A = [&](const LinearMap8& m) { return so8_triality_map(TrialityKind::alpha, m); };
            auto B = [&](const LinearMap8& m) { return so8_triality_map(TrialityKind::beta, m); };
            auto G = [&](const LinearMap8& m) { return so8_triality_map(TrialityKind::gamma, m); };
            s3_ok = s3_ok && A(A(e)) == e && B(B(e)) == e && G(G(G(e))) == e;
        }
    out.add_flag("triality.alpha2-beta2-gamma3-identities", s3_ok);

    auto triples = a_spin8();
    size_t valid = 0;
    for (const auto& t : triples)
        if (triple_valid(t)) ++valid;
    out.add_count("triality.triples.group-identity-on-64-pairs", 32, valid);

    bool commute = true, closed = true, involutive = true;
    TrialityTriple id = TrialityTriple::identity();
    for (const auto& s : triples) {
        involutive = involutive && triple_mul(s, s) == id;
        for (const auto& t : triples) {
            commute = commute && triple_mul(s, t) == triple_mul(t, s);
            TrialityTriple p = triple_mul(s, t);
            bool found = false;
            for (const auto& u : triples) found = found || u == p;
            closed = closed && found;
        }
    }
    out.add_count("triality.a-spin8.cardinality", 32, triples.size());
    out.add_flag("triality.a-spin8.pairwise-commuting-involutive-closed",
                 commute && closed && involutive);
    return rep;
}

// ---------------------------------------------------------------- clifford

VerificationReport suite_clifford(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "clifford";
    CheckBuilder out{rep};
    const SpinModule& mod = SpinModule::instance();

    bool gen8 = true;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            CliffordElem ei = CliffordElem::blade(8, 1u << i), ej = CliffordElem::blade(8, 1u << j);
            CliffordElem s = clifford_mul(ei, ej) + clifford_mul(ej, ei);
            gen8 = gen8 && (i == j ? s == CliffordElem::scalar(8, ExactScalar(-2)) : s.is_zero());
        }
    out.add_flag("clifford.generator-relations.n8", gen8);
    out.add_flag("clifford.generator-relations.n16", mod.generators_ok());

    size_t table_ok = 0;
    for (int i = 0; i < 8; ++i)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                CliffordElem c = gamma_clifford(i, a, b);
                TrialityTriple expect = triple_from_gamma(i, a, b);
                if (mod.vector_rep_matrix(c, 8) == expect.x1 &&
                    mod.half_spin8_minus(c) == expect.x2 && mod.half_spin8_plus(c) == expect.x3)
                    ++table_ok;
            }
    out.add_count("clifford.blade-table.consistent-entries", 32, table_ok);

    struct ExpEntry {
        int i, j, sj, gi, ga, gb;
    };
    static const ExpEntry exp_table[12] = {
        {1, 2, -1, 1, 0, 1}, {1, 2, +1, 1, 1, 1}, {3, 4, -1, 1, 0, 0}, {3, 4, +1, 1, 1, 0},
        {1, 3, -1, 2, 0, 1}, {1, 3, +1, 2, 1, 1}, {2, 4, -1, 2, 0, 0}, {2, 4, +1, 2, 1, 0},
        {1, 4, -1, 3, 0, 1}, {1, 4, +1, 3, 1, 1}, {2, 3, -1, 3, 0, 0}, {2, 3, +1, 3, 1, 0},
    };
    size_t exp_ok = 0;
    for (const auto& e : exp_table) {
        CliffordElem g = torus_element(
            8, {2, 2 * e.sj}, {{2 * e.i - 2, 2 * e.i - 1}, {2 * e.j - 2, 2 * e.j - 1}});
        if (g == gamma_clifford(e.gi, e.ga, e.gb)) ++exp_ok;
    }
    out.add_count("clifford.exp-to-gamma-table", 12, exp_ok);

    Rng rng(cfg.seed + 1);
    std::vector<std::pair<int, int>> pairs8 = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
    size_t unit_ok = 0;
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<long> turns(4);
        for (auto& t : turns) t = rng.int_in(-4, 4);
        if (is_unit_spin(torus_element(8, turns, pairs8))) ++unit_ok;
    }
    out.add_count("clifford.torus-quarter-turn-units", 100, unit_ok);

    CliffordElem omega = CliffordElem::blade(16, 0xFFFF);
    out.add_flag("clifford.spin-module.dim-delta-plus-128", mod.plus_indices().size() == 128);
    out.add_flag("clifford.spin-module.volume-trivial-on-delta-plus",
                 mod.half_spin_matrix(omega).is_identity());
    out.add_flag("clifford.spin-module.minus-one-acts-minus-identity",
                 mod.half_spin_matrix(CliffordElem::scalar(16, ExactScalar(-1))) ==
                     -ExactMatrix::identity(128));

    size_t hom_ok = 0;
    std::vector<std::pair<int, int>> pairs16;
    for (int k = 0; k < 8; ++k) pairs16.push_back({2 * k, 2 * k + 1});
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<long> t1(8), t2(8);
        for (auto& t : t1) t = rng.int_in(-2, 2);
        for (auto& t : t2) t = rng.int_in(-2, 2);
        CliffordElem g = torus_element(16, t1, pairs16), h = torus_element(16, t2, pairs16);
        if (mod.half_spin_matrix(clifford_mul(g, h)) ==
            mod.half_spin_matrix(g) * mod.half_spin_matrix(h))
            ++hom_ok;
    }
    out.add_count("clifford.half-spin-homomorphism.random-pairs", 50, hom_ok);
    return rep;
}

// ---------------------------------------------------------------- rootsys

VerificationReport suite_rootsys(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "rootsys";
    CheckBuilder out{rep};
    const RootE8 a = root_alpha(), b = root_beta();

    out.add_count("rootsys.count.roots", 240, roots_e8().size());
    out.add_count("rootsys.count.positive", 120, positive_roots_e8().size());
    out.add_count("rootsys.count.slice-a0", 126, pairing_slice(a, 0).size());
    out.add_count("rootsys.count.slice-a1", 56, pairing_slice(a, 1).size());
    out.add_count("rootsys.count.slice-a-minus1", 56, pairing_slice(a, -1).size());
    size_t i00 = 0, i01 = 0;
    for (const auto& g : roots_e8()) {
        if (pairing(a, g) == 0 && pairing(b, g) == 0) ++i00;
        if (pairing(a, g) == 0 && pairing(b, g) == 1) ++i01;
    }
    out.add_count("rootsys.count.slice-a0-b0", 72, i00);
    out.add_count("rootsys.count.slice-a0-b1", 27, i01);

    auto lrep = check_lattice_lemma(a, b);
    out.add_count("rootsys.lattice-lemma.classes", 135, lrep.set_size);
    std::ostringstream lact;
    lact << lrep.pairs_checked << " pairs, " << lrep.collisions << " collisions";
    out.add("rootsys.lattice-lemma.pairs", "9045 pairs, 0 collisions", lact.str());

    auto classes = enumerate_torus_involutions(a, b);
    std::set<RootVec> canon;
    bool all_doubled = true;
    for (const auto& t : classes) {
        canon.insert(t.canonical());
        all_doubled = all_doubled && in_gamma_lattice(t.v + t.v);
    }
    out.add_count("rootsys.torus-involutions.classes", 256, classes.size());
    out.add_count("rootsys.torus-involutions.distinct-canonical", 256, canon.size());
    out.add_flag("rootsys.torus-involutions.doubles-in-gamma", all_doubled);

    Rng rng(cfg.seed + 2);
    bool partition_ok = true;
    for (int iter = 0; iter < 20; ++iter) {
        const RootE8& r = roots_e8()[rng.below(240)];
        size_t total = 0;
        for (long n = -2; n <= 2; ++n) total += pairing_slice(r, n).size();
        partition_ok = partition_ok && total == 240;
    }
    out.add_flag("rootsys.slices-partition-sigma", partition_ok);

    bool reflect_ok = true;
    for (int iter = 0; iter < 200; ++iter)
        reflect_ok = reflect_ok &&
                     is_root(weyl_reflect(roots_e8()[rng.below(240)], roots_e8()[rng.below(240)]));
    out.add_flag("rootsys.weyl-reflections-preserve-sigma", reflect_ok);

    auto wrep = weyl_transitivity_check(a, b);
    out.add_flag("rootsys.weyl-transitivity", wrep.ok());

    auto e8amb = ambient_e8();
    out.add_count("rootsys.formula.tau-alpha", 136,
                  combinatorial_fixed_dim_spec(FixedDimShape::TauAlpha, e8amb));
    out.add_count("rootsys.formula.x", 120, combinatorial_fixed_dim_spec(FixedDimShape::X, e8amb));
    out.add_count("rootsys.formula.phi-minus-one", 120,
                  combinatorial_fixed_dim_spec(FixedDimShape::PhiMinusOne, e8amb));
    out.add_count("rootsys.formula.tau-alpha-x", 120,
                  combinatorial_fixed_dim_spec(FixedDimShape::TauAlphaX, e8amb));
    out.add_count("rootsys.formula.tau-alpha-tau-beta", 120,
                  combinatorial_fixed_dim_spec(FixedDimShape::TauAlphaTauBeta, e8amb));
    out.add_count("rootsys.formula.tau-alpha-tau-beta-x", 120,
                  combinatorial_fixed_dim_spec(FixedDimShape::TauAlphaTauBetaX, e8amb));
    return rep;
}

// ---------------------------------------------------------------- e8

VerificationReport suite_e8(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "e8";
    CheckBuilder out{rep};
    const E8Algebra& alg = E8Algebra::instance();

    out.add_count("e8.dim", 248, static_cast<size_t>(kDimE8));

    Rng rng(cfg.seed + 3);
    size_t skew_ok = 0;
    for (int iter = 0; iter < 2000; ++iter) {
        int i = static_cast<int>(rng.below(kDimE8)), j = static_cast<int>(rng.below(kDimE8));
        auto ij = alg.bracket_basis(i, j);
        auto ji = alg.bracket_basis(j, i);
        bool ok = ij.size() == ji.size();
        for (size_t k = 0; ok && k < ij.size(); ++k)
            ok = ij[k].first == ji[k].first && ij[k].second == -ji[k].second;
        if (ok) ++skew_ok;
    }
    out.add_count("e8.bracket-skew.sampled", 2000, skew_ok);

    size_t inv_ok = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        int i = static_cast<int>(rng.below(kDimE8)), j = static_cast<int>(rng.below(kDimE8)),
            k = static_cast<int>(rng.below(kDimE8));
        // invariance on basis triples: ([x_i,x_j], x_k) + (x_j, [x_i,x_k]) = 0
        ExactScalar s;
        for (const auto& [t, c] : alg.bracket_basis(i, j))
            if (t == k) s += c * (t >= kDimL ? alg.v_scale() : ExactScalar(1));
        for (const auto& [t, c] : alg.bracket_basis(i, k))
            if (t == j) s += c * (t >= kDimL ? alg.v_scale() : ExactScalar(1));
        if (s.is_zero()) ++inv_ok;
    }
    out.add_count("e8.invariance.sampled-triples", 10000, inv_ok);

    size_t n_jac = cfg.jacobi_full ? 0 : cfg.jacobi_samples;
    size_t jac_ok = 0, jac_total = 0;
    if (cfg.jacobi_full) {
        std::vector<size_t> oks(cfg.parallel, 0), totals(cfg.parallel, 0);
        parallel_for(kDimE8, cfg.parallel, [&](size_t i) {
            size_t slot = i % cfg.parallel;
            for (int j = static_cast<int>(i) + 1; j < kDimE8; ++j)
                for (int k = j + 1; k < kDimE8; ++k) {
                    ++totals[slot];
                    if (alg.jacobi_zero(static_cast<int>(i), j, k)) ++oks[slot];
                }
        });
        for (unsigned s = 0; s < cfg.parallel; ++s) {
            jac_ok += oks[s];
            jac_total += totals[s];
        }
    } else {
        std::vector<std::array<int, 3>> triples(n_jac);
        for (auto& t : triples)
            t = {static_cast<int>(rng.below(kDimE8)), static_cast<int>(rng.below(kDimE8)),
                 static_cast<int>(rng.below(kDimE8))};
        std::vector<char> oks(n_jac, 0);
        parallel_for(n_jac, cfg.parallel,
                     [&](size_t i) { oks[i] = alg.jacobi_zero(triples[i][0], triples[i][1], triples[i][2]); });
        for (char c : oks)
            if (c) ++jac_ok;
        jac_total = n_jac;
    }
    out.add_count(cfg.jacobi_full ? "e8.jacobi.full" : "e8.jacobi.sampled", jac_total, jac_ok);

    out.add_count("e8.centralizer.e7", 133, alg.subalgebra("e7_alpha").dim());
    out.add_count("e8.centralizer.e6", 78, alg.subalgebra("e6_alphabeta").dim());
    out.add_count("e8.centralizer.f4", 52, alg.subalgebra("f4").dim());
    out.add_count("e8.centralizer.c-f4", 14, alg.subalgebra("c_f4").dim());
    out.add_count("e8.subalgebra.su2", 3, alg.subalgebra("su2_alpha").dim());
    out.add_count("e8.subalgebra.su3", 8, alg.subalgebra("su3_alphabeta").dim());
    out.add_count("e8.subalgebra.g2", 14, alg.subalgebra("g2").dim());

    bool closed_small = alg.is_bracket_closed(alg.subalgebra("su2_alpha")) &&
                        alg.is_bracket_closed(alg.subalgebra("su3_alphabeta")) &&
                        alg.is_bracket_closed(alg.subalgebra("g2"));
    out.add_flag("e8.bracket-closure.small-subalgebras", closed_small);
    // sampled closure for the big centralizers (closure is forced by Jacobi)
    bool closed_big = true;
    for (const std::string& name : {"f4", "e6_alphabeta", "e7_alpha"}) {
        const auto& sub = alg.subalgebra(name);
        for (int iter = 0; iter < 100; ++iter) {
            size_t i = rng.below(sub.dim()), j = rng.below(sub.dim());
            closed_big =
                closed_big && sub.solver->contains(alg.bracket(sub.basis[i], sub.basis[j]));
        }
    }
    out.add_flag("e8.bracket-closure.centralizers-sampled", closed_big);

    auto d = fixed_space_dims(E8GroupElem::phi_minus_one().adjoint_matrix());
    out.add("e8.fixed-dims.phi-minus-one", "(120,128)",
            "(" + std::to_string(d.d_plus) + "," + std::to_string(d.d_minus) + ")");
    d = fixed_space_dims(E8GroupElem::x().adjoint_matrix());
    out.add("e8.fixed-dims.x", "(120,128)",
            "(" + std::to_string(d.d_plus) + "," + std::to_string(d.d_minus) + ")");
    d = fixed_space_dims(E8GroupElem::tau(root_alpha()).adjoint_matrix());
    out.add("e8.fixed-dims.tau-alpha", "(136,112)",
            "(" + std::to_string(d.d_plus) + "," + std::to_string(d.d_minus) + ")");

    size_t mult_ok = 0;
    for (int iter = 0; iter < 50; ++iter) {
        E8GroupElem g = E8GroupElem::psi(rng.below(8), rng.below(2), rng.below(2), rng.below(8),
                                         rng.below(2), rng.below(2));
        E8GroupElem h = E8GroupElem::psi(rng.below(8), rng.below(2), rng.below(2), rng.below(8),
                                         rng.below(2), rng.below(2));
        ExactMatrix mg = g.adjoint_matrix();
        bool ok = elem_mul(g, h).adjoint_matrix() == mg * h.adjoint_matrix();
        ok = ok && (mg.transposed() * mg).is_identity();
        if (ok) ++mult_ok;
    }
    out.add_count("e8.adjoint.multiplicative-orthogonal-pairs", 50, mult_ok);
    return rep;
}

// ---------------------------------------------------------------- catalog

VerificationReport suite_catalog(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "catalog";
    CheckBuilder out{rep};
    Classifier cl(cfg.parallel);

    for (const auto& name : catalog_names()) {
        AntipodalSet s = build_named_set(name);
        auto srep = check_antipodal_set(s);
        std::ostringstream exp, act;
        exp << s.expected_cardinality << " antipodal";
        act << srep.cardinality
            << (srep.all_involutive && srep.pairwise_distinct && srep.pairwise_antipodal
                    ? " antipodal"
                    : " NOT antipodal");
        out.add("catalog.set." + name, exp.str(), act.str());
    }

    out.add_count("catalog.generation.a1-eix-generates-a1",
                  256, subgroup_closure(build_named_set("A1(EIX+)").elements).size());
    out.add_count("catalog.generation.a1-eviii-generates-a1",
                  256, subgroup_closure(build_named_set("A1(EVIII+)").elements).size());

    // dual-encoding overlap
    AntipodalSet a1 = build_named_set("A1(E8)");
    size_t both = 0, agree = 0;
    for (const auto& g : a1.elements) {
        if (!g.torus_encoding()) continue;
        ++both;
        E8GroupElem t = E8GroupElem::tau(g.torus_encoding()->v, g.torus_encoding()->x_flag);
        if (t == g && t.adjoint_matrix() == g.adjoint_matrix()) ++agree;
    }
    std::ostringstream ov_exp, ov_act;
    ov_exp << both << " dual-encoded, " << both << " agree";
    ov_act << both << " dual-encoded, " << agree << " agree";
    out.add("catalog.encodings.overlap", ov_exp.str(), ov_act.str());
    out.add_flag("catalog.encodings.at-least-16", both >= 16);

    // backend oracle over all 511 non-identity elements of A2(E8)
    AntipodalSet a2 = build_named_set("A2(E8)");
    std::vector<const E8GroupElem*> targets;
    for (const auto& g : a2.elements)
        if (!g.is_identity()) targets.push_back(&g);
    std::vector<char> oks(targets.size(), 0);
    std::vector<std::string> first_bad(targets.size());
    parallel_for(targets.size(), cfg.parallel, [&](size_t i) {
        auto res = backend_consistency_check(cl, *targets[i]);
        oks[i] = res.ok;
        if (!res.ok) first_bad[i] = res.mismatches.front();
    });
    size_t backend_ok = 0;
    for (char c : oks)
        if (c) ++backend_ok;
    out.add_count("catalog.backend-oracle.a2-elements", 511, targets.size());
    out.add_count("catalog.backend-oracle.agreements", targets.size(), backend_ok);

    // every non-identity element of A1 u A2 has d_plus in {120, 136}
    bool dims_ok = true;
    for (const auto& g : a1.elements) {
        if (g.is_identity()) continue;
        size_t dp = cl.ambient_dplus(g);
        dims_ok = dims_ok && (dp == 120 || dp == 136);
    }
    for (const auto* g : targets) {
        size_t dp = cl.ambient_dplus(*g);
        dims_ok = dims_ok && (dp == 120 || dp == 136);
    }
    out.add_flag("catalog.fixed-dims-in-120-136", dims_ok);

    // partitions
    auto h1 = cl.orbit_histogram(a1.elements, "E8");
    auto h2 = cl.orbit_histogram(a2.elements, "E8");
    std::ostringstream p1, p2;
    p1 << h1["identity"] << "+" << h1["EIX_+"] << "+" << h1["EVIII_+"];
    p2 << h2["identity"] << "+" << h2["EIX_+"] << "+" << h2["EVIII_+"];
    out.add("catalog.partition.a1", "1+56+199", p1.str());
    out.add("catalog.partition.a2", "1+120+391", p2.str());

    // the cross-check against the classical oriented Grassmannian
    auto split = evi_polar_split(cl, build_named_set("A1(EVI+)"));
    std::ostringstream sp;
    sp << "pole " << split.pole << ", grassmannian " << split.grassmannian << ", s2xdiii "
       << split.s2_diii << ", other " << split.unexpected;
    out.add("catalog.evi-polar-split.a1", "pole 1, grassmannian 30, s2xdiii 0, other 0", sp.str());
    auto split2 = evi_polar_split(cl, build_named_set("A2(EVI+)"));
    std::ostringstream sp2;
    sp2 << "pole " << split2.pole << ", grassmannian " << split2.grassmannian << ", s2xdiii "
        << split2.s2_diii << ", other " << split2.unexpected;
    out.add("catalog.evi-polar-split.a2", "pole 1, grassmannian 30, s2xdiii 32, other 0",
            sp2.str());
    return rep;
}

// ---------------------------------------------------------------- tables

VerificationReport suite_tables(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "tables";
    CheckBuilder out{rep};
    (void)cfg;

    out.add_count("tables.G2.cardinality", 8, a_g2().size());
    struct Row {
        const char* set;
        size_t expected;
    };
    static const Row rows[] = {
        {"A(F4)", 32},      {"A1(E6)", 32},     {"A2(E6)", 64},      {"A1(E7)", 64},
        {"A2(E7)", 128},    {"A1(E8)", 256},    {"A2(E8)", 512},     {"A(FI+)", 28},
        {"A(FII+)", 3},     {"A1(EIx)", 28},    {"A2(EIx)", 64},     {"A1(EII+)", 28},
        {"A2(EII+)", 36},   {"A(EIII+)", 27},   {"A(EIVz)", 4},      {"A1(EVx)", 56},
        {"A2(EVphi)", 72},  {"A3(EVx)", 128},   {"A1(EVI+)", 31},    {"A2(EVI+)", 63},
        {"A(EVIIbeta)", 56}, {"A1(EVIII+)", 199}, {"A2(EVIII+)", 391}, {"A1(EIX+)", 56},
        {"A2(EIX+)", 120},
    };
    for (const auto& row : rows) {
        AntipodalSet s = build_named_set(row.set);
        auto srep = check_antipodal_set(s);
        out.add_count("tables." + std::string(row.set), row.expected,
                      srep.ok() ? srep.cardinality : 0);
    }
    out.add("tables.partition.a1", "256", std::to_string(1 + 56 + 199));
    out.add("tables.partition.a2", "512", std::to_string(1 + 120 + 391));
    return rep;
}

// ---------------------------------------------------------------- diagrams

VerificationReport suite_diagrams(const RunConfig& cfg) {
    VerificationReport rep;
    rep.suite = "diagrams";
    CheckBuilder out{rep};
    Classifier cl(cfg.parallel);

    // orbit histograms of the intersections (the section-four counts)
    struct HistCheck {
        const char* set;
        const char* group;
        std::map<std::string, size_t> expected;
    };
    const std::vector<HistCheck> hist_checks = {
        {"A1(EIX+)", "E7",
         {{"pole(psi(g0:0:0, g1:0:0))", 1},
          {"EVI_+", 31},
          {"EVII_1", 8},
          {"EVII_2", 8},
          {"EVII_3", 8}}},
        {"A1(EIX+)", "E6",
         {{"fix(psi(g0:0:0, g1:0:0))", 1},
          {"fix(psi(g0:0:0, g2:0:0))", 1},
          {"fix(psi(g0:0:0, g3:0:0))", 1},
          {"EII_+", 28},
          {"EIII_1", 3},
          {"EIII_2", 3},
          {"EIII_3", 3},
          {"EIV_4", 4},
          {"EIV_5", 4},
          {"EIV_6", 4},
          {"EIV_7", 4}}},
        {"A1(EIX+)", "F4",
         {{"fix(psi(g0:0:0, g1:0:0))", 1},
          {"fix(psi(g0:0:0, g2:0:0))", 1},
          {"fix(psi(g0:0:0, g3:0:0))", 1},
          {"fix(psi(g0:0:0, g4:0:0))", 1},
          {"fix(psi(g0:0:0, g5:0:0))", 1},
          {"fix(psi(g0:0:0, g6:0:0))", 1},
          {"fix(psi(g0:0:0, g7:0:0))", 1},
          {"FI_+", 28},
          {"FII_1", 3},
          {"FII_2", 3},
          {"FII_3", 3},
          {"FII_4", 3},
          {"FII_5", 3},
          {"FII_6", 3},
          {"FII_7", 3}}},
        {"A1(EVIII+)", "E7", {{"EVI'_+", 31}, {"EV_1", 56}, {"EV_2", 56}, {"EV_3", 56}}},
        {"A1(EVIII+)", "E6",
         {{"EIII_+", 3},
          {"EII_1", 28},
          {"EII_2", 28},
          {"EII_3", 28},
          {"EI_4", 28},
          {"EI_5", 28},
          {"EI_6", 28},
          {"EI_7", 28}}},
        {"A1(EVIII+)", "F4",
         {{"FII_+", 3},
          {"FI_1", 28},
          {"FI_2", 28},
          {"FI_3", 28},
          {"FI_4", 28},
          {"FI_5", 28},
          {"FI_6", 28},
          {"FI_7", 28}}},
        {"A2(EIX+)", "E7",
         {{"pole(psi(g0:0:0, g1:0:0))", 1}, {"EVI_+", 63}, {"EVII_1", 56}}},
        {"A2(EIX+)", "E6",
         {{"fix(psi(g0:0:0, g1:0:0))", 1},
          {"fix(psi(g0:0:0, g2:0:0))", 1},
          {"fix(psi(g0:0:0, g3:0:0))", 1},
          {"EII_+", 36},
          {"EIII_1", 27},
          {"EIII_2", 27},
          {"EIII_3", 27}}},
        {"A2(EVIII+)", "E7",
         {{"EVI'_+", 63}, {"EV_1", 72}, {"EV_2", 128}, {"EV_3", 128}}},
        {"A2(EVIII+)", "E6",
         {{"EIII_+", 27},
          {"EII_1", 36},
          {"EII_2", 36},
          {"EII_3", 36},
          {"EI_4", 64},
          {"EI_5", 64},
          {"EI_6", 64},
          {"EI_7", 64}}},
    };
    for (const auto& hc : hist_checks) {
        AntipodalSet s = build_named_set(hc.set);
        auto hist = cl.orbit_histogram(s.elements, hc.group);
        bool match = hist == hc.expected;
        std::ostringstream exp, act;
        size_t esum = 0, asum = 0;
        for (const auto& [k, v] : hc.expected) esum += v;
        for (const auto& [k, v] : hist) asum += v;
        exp << esum << " in " << hc.expected.size() << " orbits";
        act << asum << " in " << hist.size() << " orbits" << (match ? "" : " (mismatch)");
        out.add(std::string("diagrams.hist.") + hc.set + "." + hc.group, exp.str(), act.str());
    }

    // the emitted diagrams expose the computed inclusion data
    OrbitDiagram eix = build_orbit_diagram(cl, "eix_orbits");
    OrbitDiagram eviii = build_orbit_diagram(cl, "eviii_orbits");
    out.add_flag("diagrams.eix.edge.FI-to-EII", eix.edges.count({"FI_+", "EII_+"}) > 0);
    out.add_flag("diagrams.eix.edge.EII-to-EVI", eix.edges.count({"EII_+", "EVI_+"}) > 0);
    out.add_flag("diagrams.eix.edge.EVI-to-EIX", eix.edges.count({"EVI_+", "EIX_+"}) > 0);
    out.add_flag("diagrams.eix.chain.FII1-EIII1-EVI",
                 eix.edges.count({"FII_1", "EIII_1"}) > 0 &&
                     eix.edges.count({"EIII_1", "EVI_+"}) > 0);
    out.add_flag("diagrams.eviii.chain.FII-EIII-EVI'",
                 eviii.edges.count({"FII_+", "EIII_+"}) > 0 &&
                     eviii.edges.count({"EIII_+", "EVI'_+"}) > 0);
    out.add_flag("diagrams.eviii.chain.FI7-EI7-EV3",
                 eviii.edges.count({"FI_7", "EI_7"}) > 0 &&
                     eviii.edges.count({"EI_7", "EV_3"}) > 0);
    size_t ev2 = 0;
    for (const auto& n : eviii.nodes)
        if (n.id == "EV_2") ev2 = n.a2_count;
    out.add_count("diagrams.eviii.node-EV2-a2-count", 128, ev2);

    OrbitDiagram incl = build_inclusion_diagram(cl);
    out.add_count("diagrams.inclusion.nodes", 12, incl.nodes.size());
    // the sixteen label-level inclusions of the summary figure
    static const std::pair<const char*, const char*> expected_edges[] = {
        {"FI", "EI"},    {"FI", "EII"},    {"FII", "EIII"}, {"FII", "EIV"},
        {"EI", "EV"},    {"EII", "EV"},    {"EII", "EVI"},  {"EIII", "EVI"},
        {"EIII", "EVII"}, {"EIV", "EVII"}, {"EV", "EVIII"}, {"EVI", "EVIII"},
        {"EVI", "EIX"},  {"EVII", "EIX"},  {"EVIII", "E8"}, {"EIX", "E8"},
    };
    bool edges_ok = incl.edges.size() == 16;
    for (const auto& [f, t] : expected_edges)
        edges_ok = edges_ok && incl.edges.count({f, t}) > 0;
    out.add_flag("diagrams.inclusion.sixteen-edges", edges_ok);
    return rep;
}

}  // namespace

const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> s{"octonion", "triality", "clifford", "rootsys",
                                            "e8",       "catalog",  "tables",   "diagrams",
                                            "all"};
    return s;
}

VerificationReport run_verify(const RunConfig& config) {
    std::vector<std::string> wanted = config.suites;
    for (const auto& s : wanted) {
        if (std::find(known_suites().begin(), known_suites().end(), s) == known_suites().end())
            throw UnknownSuite("unknown suite: " + s);
    }
    if (std::find(wanted.begin(), wanted.end(), "all") != wanted.end())
        wanted = {"octonion", "triality", "clifford", "rootsys", "e8", "catalog", "tables",
                  "diagrams"};

    VerificationReport combined;
    combined.suite = wanted.size() == 1 ? wanted.front() : "all";
    for (const auto& name : wanted) {
        VerificationReport r;
        if (name == "octonion") r = suite_octonion(config);
        else if (name == "triality") r = suite_triality(config);
        else if (name == "clifford") r = suite_clifford(config);
        else if (name == "rootsys") r = suite_rootsys(config);
        else if (name == "e8") r = suite_e8(config);
        else if (name == "catalog") r = suite_catalog(config);
        else if (name == "tables") r = suite_tables(config);
        else if (name == "diagrams") r = suite_diagrams(config);
        for (auto& c : r.checks) combined.checks.push_back(std::move(c));
    }
    combined.sort_by_id();
    return combined;
}

int run_acceptance(std::FILE* out) {
    struct Criterion {
        const char* name;
        std::vector<std::string> suites;
        double budget_s;
    };
    const std::vector<Criterion> criteria = {
        {"criterion-01 octonion identities and A(G2)", {"octonion"}, 1.0},
        {"criterion-02 triality solver and A(Spin(8))", {"triality"}, 5.0},
        {"criterion-03 clifford tables and spin module", {"clifford"}, 10.0},
        {"criterion-04 root system and lattice lemma", {"rootsys"}, 30.0},
        {"criterion-05 e8 algebra and centralizers", {"e8"}, 300.0},
        {"criterion-06+09 backend oracle and cross-check", {"catalog"}, 1800.0},
        {"criterion-07 table cardinalities", {"tables"}, 600.0},
        {"criterion-08 orbit histograms and diagrams", {"diagrams"}, 600.0},
    };
    RunConfig cfg;
    cfg.parallel = std::max(2u, std::thread::hardware_concurrency());
    int failures = 0;
    for (const auto& cr : criteria) {
        cfg.suites = cr.suites;
        auto start = Clock::now();
        VerificationReport rep = run_verify(cfg);
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        bool pass = rep.passed();
        bool in_time = secs <= cr.budget_s;
        if (!pass || !in_time) ++failures;
        std::fprintf(out, "%s  %s (%zu checks, %.1fs%s)\n",
                     pass && in_time ? "PASS" : "FAIL", cr.name, rep.checks.size(), secs,
                     in_time ? "" : ", over budget");
        if (!pass)
            for (const auto& c : rep.checks)
                if (!c.pass)
                    std::fprintf(out, "      %s: expected %s, got %s\n", c.id.c_str(),
                                 c.expected.c_str(), c.actual.c_str());
        std::fflush(out);
    }
    // criterion 10: byte-identical reports under a fixed seed
    {
        auto start = Clock::now();
        RunConfig c10;
        c10.suites = {"octonion", "rootsys"};
        c10.seed = 424242;
        std::string r1 = export_report(run_verify(c10), ReportFormat::json);
        std::string r2 = export_report(run_verify(c10), ReportFormat::json);
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        bool pass = r1 == r2 && !r1.empty();
        if (!pass) ++failures;
        std::fprintf(out, "%s  criterion-10 determinism of seeded reports (%.1fs)\n",
                     pass ? "PASS" : "FAIL", secs);
    }
    std::fprintf(out, "%s\n", failures == 0 ? "ACCEPTANCE: all criteria pass"
                                            : "ACCEPTANCE: failures present");
    return failures == 0 ? 0 : 1;
}

}  // namespace e8cat
