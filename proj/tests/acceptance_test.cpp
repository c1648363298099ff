// Acceptance suite: one test case and one printed pass/fail line per
// criterion. Expected values come from the hard-coded reproduction items
// (paper_check), the independent closed-form oracle (oracle.cpp), and the
// classical unordered-configuration-space identifications.

#include "confsphere/assemble.hpp"
#include "confsphere/browder.hpp"
#include "confsphere/output.hpp"
#include "confsphere/paper_check.hpp"

#include "oracle.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <functional>
#include <iostream>
#include <map>

using namespace confsphere;
using confsphere::testutil::Rng;
using confsphere::testutil::axpy;

namespace {

struct Criterion {
    std::string name;
    bool ok = true;
    explicit Criterion(std::string n) : name(std::move(n)) {}
    ~Criterion() {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << std::endl;
    }
    void expect(bool c) {
        ok = ok && c;
        CHECK(c);
    }
};

const std::vector<PaperCheckItem>& paper_items() {
    static const std::vector<PaperCheckItem> items = run_paper_checks();
    return items;
}

void expect_paper_items(Criterion& cr, int criterion) {
    for (const auto& it : paper_items()) {
        if (it.criterion != criterion)
            continue;
        if (!it.pass)
            MESSAGE(it.name << ": expected " << it.expected << ", got " << it.got);
        cr.expect(it.pass);
    }
}

Tree random_tree(Rng& rng, const CoalgebraSpec& spec, int weight) {
    if (weight == 1)
        return tree_leaf((int)rng.pick(0, (long)spec.classes().size() - 1));
    int wl = (int)rng.pick(1, weight - 1);
    return tree_pair(random_tree(rng, spec, wl), random_tree(rng, spec, weight - wl));
}

}  // namespace

TEST_CASE("criterion 1: Example mod3 dimensions and action ranks") {
    Criterion cr("criterion 1: H9 mod 3 of both mapping spaces; lambda/k ranks");
    expect_paper_items(cr, 1);
}

TEST_CASE("criterion 2: Example not0 component scan") {
    Criterion cr("criterion 2: rational H1 of sections and maps over S0 v S0");
    expect_paper_items(cr, 2);
}

TEST_CASE("criterion 3: Theorem basisconf oracle") {
    Criterion cr("criterion 3: C(S^n,S^k) tables match the closed forms");
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        for (unsigned long p : {0ul, 2ul, 3ul}) {
            CAPTURE(n);
            CAPTURE(k);
            CAPTURE(p);
            const int D = 12;
            if (k == 0) {
                const int W = 8;
                oracle::Dims expect = oracle::conf_sphere_dims(n, k, p, D, W);
                HomologyOptions opt;
                opt.max_degree = D;
                opt.max_weight = W;
                HomologyTable t =
                    homology(builtin_sphere(0), n, FieldSpec(p), SpaceKind::conf_sphere, opt);
                for (int d = 0; d <= D; ++d)
                    for (int w = 0; w <= W; ++w) {
                        long want = 0;
                        auto it = expect.find({d, w});
                        if (it != expect.end())
                            want = it->second;
                        long got = (long)t.dim_at(d, {w});
                        if (want != got) {
                            MESSAGE("(n,k,p,d,w)=(" << n << "," << k << "," << p << "," << d
                                                    << "," << w << "): oracle " << want
                                                    << ", computed " << got);
                        }
                        cr.expect(want == got);
                    }
            } else {
                oracle::Dims expect = oracle::conf_sphere_dims(n, k, p, D, 200);
                std::map<int, long> by_deg;
                for (const auto& [dw, c] : expect)
                    by_deg[dw.first] += c;
                HomologyOptions opt;
                opt.max_degree = D;
                HomologyTable t =
                    homology(builtin_sphere(k), n, FieldSpec(p), SpaceKind::conf_sphere, opt);
                for (int d = 0; d <= D; ++d) {
                    long want = by_deg.count(d) ? by_deg[d] : 0;
                    long got = (long)t.dim_at(d);
                    if (want != got)
                        MESSAGE("(n,k,p,d)=(" << n << "," << k << "," << p << "," << d
                                              << "): oracle " << want << ", computed " << got);
                    cr.expect(want == got);
                }
            }
        }
    }
}

TEST_CASE("criterion 4: Theorem basismaps oracle") {
    Criterion cr("criterion 4: Lambda^n_k S^n tables match the closed forms");
    for (int n : {2, 3}) {
        for (unsigned long p : {0ul, 2ul, 3ul}) {
            const int D = 10;
            HomologyOptions opt;
            opt.max_degree = D;
            opt.comp_range = 4;
            HomologyTable t = homology(builtin_sphere(0), n, FieldSpec(p), SpaceKind::maps, opt);
            for (int kk = -4; kk <= 4; ++kk) {
                std::map<int, long> expect = oracle::maps_sphere_dims(n, kk, p, D);
                for (int d = 0; d <= D; ++d) {
                    long want = expect.count(d) ? expect[d] : 0;
                    long got = (long)t.dim_at(d, {kk});
                    if (want != got)
                        MESSAGE("(n,p,k,d)=(" << n << "," << p << "," << kk << "," << d
                                              << "): oracle " << want << ", computed " << got);
                    cr.expect(want == got);
                }
            }
        }
    }
    expect_paper_items(cr, 4);
}

TEST_CASE("criterion 5: classical unordered configuration spaces of S^2") {
    Criterion cr("criterion 5: C_1, C_2, C_k(S^2) against S^2, RP^2, stable answer");
    CoalgebraSpec s0 = builtin_sphere(0);
    HomologyOptions opt;
    opt.max_degree = 3;
    opt.max_weight = 8;

    for (unsigned long p : {0ul, 2ul, 3ul}) {
        opt.snaith_weight = 1;
        HomologyTable t = homology(s0, 2, FieldSpec(p), SpaceKind::snaith, opt);
        cr.expect(t.dim_at(0) == 1);
        cr.expect(t.dim_at(1) == 0);
        cr.expect(t.dim_at(2) == 1);
        cr.expect(t.dim_at(3) == 0);
    }
    opt.snaith_weight = 2;
    HomologyTable f2 = homology(s0, 2, FieldSpec(2), SpaceKind::snaith, opt);
    cr.expect(f2.dim_at(0) == 1);
    cr.expect(f2.dim_at(1) == 1);
    cr.expect(f2.dim_at(2) == 1);
    cr.expect(f2.dim_at(3) == 0);
    HomologyTable q2 = homology(s0, 2, FieldSpec(0), SpaceKind::snaith, opt);
    cr.expect(q2.dim_at(0) == 1);
    cr.expect(q2.dim_at(1) == 0);
    cr.expect(q2.dim_at(2) == 0);
    cr.expect(q2.dim_at(3) == 0);
    for (int k : {3, 4, 5, 8}) {
        opt.snaith_weight = k;
        HomologyTable t = homology(s0, 2, FieldSpec(0), SpaceKind::snaith, opt);
        cr.expect(t.dim_at(0) == 1);
        cr.expect(t.dim_at(1) == 0);
        cr.expect(t.dim_at(2) == 0);
        cr.expect(t.dim_at(3) == 1);
    }
}

TEST_CASE("criterion 6: mod 2 the section and mapping space tables coincide") {
    Criterion cr("criterion 6: char-2 sections vs maps on the whole corpus");
    expect_paper_items(cr, 6);
}

TEST_CASE("criterion 7: suspension labels have identical twisted and plain actions") {
    Criterion cr("criterion 7: twisted = untwisted matrices for suspensions");
    for (const char* label : {"susp:cp2", "susp:s2", "susp:wedge:s1,s2"}) {
        CoalgebraSpec spec = parse_label(label);
        for (unsigned long p : {0ul, 2ul, 3ul, 5ul}) {
            FreeAlgebra alg(spec, 2, FieldSpec(p), 8, 1 << 20, true);
            BrowderAction action(alg);
            for (int d = 0; d <= 8; ++d) {
                ActionBlock a = action.action_matrix({d, {}, std::nullopt}, false);
                ActionBlock b = action.action_matrix({d, {}, std::nullopt}, true);
                bool same = a.matrix.rows() == b.matrix.rows() &&
                            a.matrix.cols() == b.matrix.cols();
                for (std::size_t r = 0; same && r < a.matrix.rows(); ++r)
                    for (std::size_t c = 0; same && c < a.matrix.cols(); ++c)
                        same = a.matrix.at(r, c) == b.matrix.at(r, c);
                cr.expect(same);
            }
            HomologyOptions opt;
            opt.max_degree = 8;
            cr.expect(compare(spec, 2, FieldSpec(p), SpaceKind::sections, SpaceKind::maps, opt)
                          .identical());
            cr.expect(
                compare(spec, 2, FieldSpec(p), SpaceKind::conf_sphere, SpaceKind::maps, opt)
                    .identical());
        }
    }
}

TEST_CASE("criterion 8: C(S^2,CP^2) and the mapping space agree over any field") {
    Criterion cr("criterion 8: Example last, homology half");
    expect_paper_items(cr, 8);
}

TEST_CASE("criterion 9: algebraic invariant suites") {
    Criterion cr("criterion 9: antisymmetry/Jacobi, derivation, antipode, rank-nullity, "
                 "deterministic JSON");

    // antisymmetry and Jacobi: 200 random trees per field
    {
        Rng rng(2026);
        for (unsigned long p : {0ul, 2ul, 3ul, 5ul}) {
            FieldSpec f(p);
            CoalgebraSpec spec = parse_label("wedge:s1,s2");
            const int n = 2;
            LieBasis b(spec, n, f, 40, 6);
            for (int trial = 0; trial < 200; ++trial) {
                Tree u = random_tree(rng, spec, (int)rng.pick(1, 2));
                Tree v = random_tree(rng, spec, (int)rng.pick(1, 2));
                Tree w = random_tree(rng, spec, (int)rng.pick(1, 2));
                int su = (tree_degree(spec, n, u) + n - 1) & 1;
                int sv = (tree_degree(spec, n, v) + n - 1) & 1;
                int sw = (tree_degree(spec, n, w) + n - 1) & 1;
                auto sgn = [&](int a, int bb) {
                    return (a & bb) ? -Scalar::one(f) : Scalar::one(f);
                };
                std::map<int, Scalar> anti;
                axpy(anti, b.normal_form(tree_pair(u, v)), Scalar::one(f));
                axpy(anti, b.normal_form(tree_pair(v, u)), sgn(su, sv));
                cr.expect(anti.empty());
                std::map<int, Scalar> jac;
                axpy(jac, b.normal_form(tree_pair(u, tree_pair(v, w))), sgn(su, sw));
                axpy(jac, b.normal_form(tree_pair(v, tree_pair(w, u))), sgn(sv, su));
                axpy(jac, b.normal_form(tree_pair(w, tree_pair(u, v))), sgn(sw, sv));
                cr.expect(jac.empty());
            }
        }
    }

    // derivation identity for act: 100 random triples
    {
        Rng rng(7);
        CoalgebraSpec spec = parse_label("wedge:s1,s2");
        for (unsigned long p : {0ul, 3ul}) {
            FieldSpec f(p);
            FreeAlgebra alg(spec, 2, f, 12, 1 << 20, false);
            BrowderAction action(alg);
            int done = 0;
            while (done < 50) {
                int x = (int)rng.pick(0, (long)spec.classes().size() - 1);
                int g1 = (int)rng.pick(0, (long)alg.generators().size() - 1);
                int g2 = (int)rng.pick(0, (long)alg.generators().size() - 1);
                if (alg.generators()[g1].degree + alg.generators()[g2].degree +
                        spec.cls(x).degree + 1 >
                    12)
                    continue;
                ++done;
                AlgebraVector u = alg.vec(alg.from_generator(g1));
                AlgebraVector v = alg.vec(alg.from_generator(g2));
                AlgebraVector lhs = action.act(x, alg.multiply(u, v));
                AlgebraVector rhs = alg.multiply(action.act(x, u), v);
                Scalar sgn = ((alg.generators()[g1].degree & 1) && ((spec.cls(x).degree + 1) & 1))
                                 ? -Scalar::one(f)
                                 : Scalar::one(f);
                add_scaled(rhs, alg.multiply(u, action.act(x, v)), sgn);
                cr.expect(lhs == rhs);
            }
        }
    }

    // antipode identity on every corpus class, every field
    {
        for (unsigned long p : {0ul, 2ul, 3ul, 5ul}) {
            for (const char* label :
                 {"s0", "s1", "s2", "cp2", "cp3", "wedge:s2,s4,s6", "wedge:s0,s0", "susp:cp2"}) {
                CoalgebraSpec spec = parse_label(label);
                FreeAlgebra alg = group_complete(spec, 2, FieldSpec(p), 10, 12);
                Antipode chi(alg);
                for (int x = 0; x < (int)spec.classes().size(); ++x) {
                    AlgebraVector acc;
                    for (const auto& t : spec.coproduct(x)) {
                        AlgebraVector l = chi.of_factor(t.left);
                        AlgebraVector r = t.right == kUnit ? alg.vec(alg.unit())
                                                           : alg.vec(alg.from_class(t.right));
                        add_scaled(acc, alg.multiply(l, r),
                                   Scalar::from_long(t.coeff, alg.field()));
                    }
                    if (spec.cls(x).degree == 0) {
                        cr.expect(acc.size() == 1 && acc.begin()->first.is_unit() &&
                                  acc.begin()->second.is_one());
                    } else {
                        cr.expect(acc.empty());
                    }
                }
            }
        }
    }

    // rank-nullity and kernel correctness on every block of two sweeps
    {
        struct Conf {
            const char* label;
            unsigned long p;
            bool twisted;
            int maxdeg;
        };
        for (const Conf& c : {Conf{"wedge:s2,s4,s6", 3, false, 9}, Conf{"s0", 2, true, 6}}) {
            CoalgebraSpec spec = parse_label(c.label);
            FreeAlgebra alg(spec, 2, FieldSpec(c.p), c.maxdeg, 1 << 20, true);
            BrowderAction action(alg);
            for (int d = 0; d <= c.maxdeg; ++d) {
                std::vector<BlockKey> keys;
                if (spec.connected()) {
                    keys.push_back({d, {}, std::nullopt});
                } else {
                    for (int m = -2; m <= 2; ++m)
                        keys.push_back({d, {m}, std::nullopt});
                }
                for (const BlockKey& key : keys) {
                    ActionBlock blk = action.action_matrix(key, c.twisted);
                    ReduceResult rr = reduce(blk.matrix);
                    cr.expect(rr.rank + rr.kernel_basis.size() == blk.matrix.cols());
                    for (const auto& kv : rr.kernel_basis) {
                        for (std::size_t r = 0; r < blk.matrix.rows(); ++r) {
                            Scalar acc = Scalar::zero(alg.field());
                            for (std::size_t j = 0; j < blk.matrix.cols(); ++j)
                                acc += blk.matrix.at(r, j) * kv[j];
                            cr.expect(acc.is_zero());
                        }
                    }
                }
            }
        }
    }

    // deterministic JSON across parallelism widths
    {
        struct Conf {
            const char* label;
            unsigned long p;
            SpaceKind kind;
            int maxdeg;
            int range;
        };
        for (const Conf& c : {Conf{"wedge:s0,s0", 2, SpaceKind::sections, 5, 2},
                              Conf{"cp3", 3, SpaceKind::maps, 9, 4},
                              Conf{"s0", 0, SpaceKind::conf_sphere, 6, 4}}) {
            CoalgebraSpec spec = parse_label(c.label);
            HomologyOptions opt;
            opt.max_degree = c.maxdeg;
            opt.comp_range = c.range;
            opt.max_weight = 6;
            opt.jobs = 1;
            std::string one =
                render_table(homology(spec, 2, FieldSpec(c.p), c.kind, opt), OutputFormat::json);
            opt.jobs = 4;
            std::string four =
                render_table(homology(spec, 2, FieldSpec(c.p), c.kind, opt), OutputFormat::json);
            cr.expect(one == four);
            cr.expect(!one.empty());
        }
    }
}
