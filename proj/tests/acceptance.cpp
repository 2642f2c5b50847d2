// Acceptance suite: re-runs every headline computation at zero tolerance and
// prints one pass/fail line per criterion. Exit status is the number of
// failed criteria.
//
// Criterion 2 compares the computed standard-monomial sets against the
// source's printed lists verbatim. For the conjoined snowmen those printed
// lists are internally inconsistent (they contain monomials that generate the
// ideal, and the printed degree-3 list sums to 74 against the stated 70), so
// that part cannot pass and is deliberately left red; the repro report's
// erratum entries machine-check the inconsistency. See README.

#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "gitstab/catalog.hpp"
#include "gitstab/repro.hpp"
#include "support.hpp"

using namespace gitstab;
using namespace gitstab::catalog;
using P = Polynomial<Rational>;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<bool(std::ostream&)> run;
};

std::set<std::string> mono_set(const RingPtr& R, const std::vector<Monomial>& ms) {
    std::set<std::string> out;
    for (const auto& m : ms) out.insert(P::from_monomial(R, m, Rational(1)).str());
    return out;
}

std::set<std::string> text_set(const RingPtr& R, const std::vector<std::string>& ts) {
    std::set<std::string> out;
    for (const auto& t : ts) out.insert(parse_polynomial<Rational>(t, R).str());
    return out;
}

const GoldenList& golden_for(const std::string& curve, int m) {
    for (const auto& g : golden_lists())
        if (g.curve == curve && g.m == m) return g;
    throw DomainError("missing golden list");
}

bool criterion1(std::ostream& log) {
    auto ctx = specialized_context();
    struct Row {
        std::string curve;
        std::vector<long> rho;
        long sum2, mu2, sum3, mu3;
    };
    const std::vector<Row> rows = {
        {"conjoined-snowmen", rho_snowmen(), 30, -12, 70, -24},
        {"cat-eye", rho_cat_eye(), 56, 0, 132, 0},
        {"ox", rho_ox(), 56, 0, 132, 0},
        {"c-flat", rho_two(), 43, -6, 101, -12}};
    bool ok = true;
    for (const auto& r : rows) {
        auto I = realize(r.curve, ctx);
        auto m2 = mu_index(I, OneParameterSubgroup{r.rho}, 2);
        auto m3 = mu_index(I, OneParameterSubgroup{r.rho}, 3);
        bool good = m2.weight_sum == r.sum2 && m2.mu == r.mu2 && m3.weight_sum == r.sum3 &&
                    m3.mu == r.mu3;
        log << "    " << r.curve << ": sums " << m2.weight_sum << "/" << m3.weight_sum << ", mu "
            << m2.mu << "/" << m3.mu << (good ? "" : "  <- MISMATCH") << "\n";
        ok = ok && good;
    }
    return ok;
}

bool criterion2(std::ostream& log) {
    auto ctx = specialized_context();
    struct Row {
        std::string curve;
        std::vector<long> rho;
    };
    bool ok = true;
    for (const Row& r : {Row{"conjoined-snowmen", rho_snowmen()}, Row{"cat-eye", rho_cat_eye()},
                         Row{"ox", rho_ox()}}) {
        auto I = realize(r.curve, ctx);
        for (int m : {2, 3}) {
            auto sm = standard_monomials(I, MonomialOrder::weighted_glex_pinned(r.rho), m);
            auto got = mono_set(ctx.p5, sm.monomials);
            auto want = text_set(ctx.p5, golden_for(r.curve, m).monomials);
            bool good = got == want;
            log << "    " << r.curve << " m=" << m << ": "
                << (good ? "matches the printed list" : "differs from the printed list") << "\n";
            if (!good) {
                log << "      computed-only:";
                for (const auto& s : got)
                    if (!want.count(s)) log << " " << s;
                log << "\n      printed-only:";
                for (const auto& s : want)
                    if (!got.count(s)) log << " " << s;
                log << "\n";
            }
            ok = ok && good;
        }
    }
    if (!ok)
        log << "    (the snowmen printed lists are inconsistent with the printed ideal; see the\n"
               "     erratum entries of the repro report -- this red is expected and kept)\n";
    return ok;
}

bool criterion3(std::ostream& log) {
    bool ok = true;
    // bridge -> snowmen over a 4-value sweep of the component moduli
    const std::vector<std::array<long, 4>> sweep = {
        {0, 0, 0, 0}, {1, 0, 0, 1}, {1, 2, -1, 1}, {-2, 3, 1, -1}};
    for (const auto& t : sweep) {
        auto ctx = specialized_context({{"a", Rational(t[0])},
                                        {"b", Rational(t[1])},
                                        {"a2", Rational(t[2])},
                                        {"b2", Rational(t[3])}});
        bool eq = flat_limit(elliptic_bridge(ctx), DegenerationSpec{rho_snowmen()})
                      .equals(conjoined_snowmen(ctx));
        ok = ok && eq;
    }
    log << "    bridge -> conjoined snowmen (4-value sweep): " << (ok ? "equal" : "MISMATCH") << "\n";

    auto ctx = specialized_context();
    bool t1 = flat_limit(e_beta_tacnodal(ctx), DegenerationSpec{rho_one()}).equals(c_flat(ctx));
    log << "    tacnodal -> intermediate limit: " << (t1 ? "equal" : "MISMATCH") << "\n";
    bool t2 = flat_limit(c_flat(ctx), DegenerationSpec{rho_two()}).equals(i_star(ctx));
    log << "    intermediate -> I*: " << (t2 ? "equal" : "MISMATCH") << "\n";
    bool t3 = flat_limit(tacnodal_quartic(ctx), DegenerationSpec{plane_rho_up()})
                  .equals(cat_eye_plane(ctx));
    log << "    plane pipeline -> cat-eye quartic: " << (t3 ? "equal" : "MISMATCH") << "\n";
    bool t4 = flat_limit(f_prime_plane(ctx), DegenerationSpec{plane_rho_up()})
                  .equals(ox_limit_target_plane(ctx));
    log << "    plane pipeline -> ox quartic: " << (t4 ? "equal" : "MISMATCH") << "\n";
    return ok && t1 && t2 && t3 && t4;
}

bool criterion4(std::ostream& log) {
    auto ctx = specialized_context();
    std::vector<std::vector<std::pair<int, long>>> conic_hf(4, {{1, 3}, {2, 5}, {3, 7}});

    DecompositionClaim<Rational> snow{conjoined_snowmen(ctx), snowmen_primes(ctx), conic_hf};
    bool d1 = verify_decomposition(snow).verified;
    log << "    four conic primes intersect to the snowmen ideal: " << (d1 ? "yes" : "NO") << "\n";

    DecompositionClaim<Rational> istar{i_star(ctx), i_star_primes(ctx), conic_hf};
    bool d2 = verify_decomposition(istar).verified;
    log << "    H1, B1, H2, B2 intersect to I*: " << (d2 ? "yes" : "NO") << "\n";

    DecompositionClaim<Rational> cflat{
        c_flat(ctx), c_flat_primes(ctx),
        {{{1, 3}, {2, 5}, {3, 7}}, {{1, 3}, {2, 5}, {3, 7}}, {{1, 4}, {2, 8}, {3, 12}}}};
    bool d3 = verify_decomposition(cflat).verified;
    log << "    C1, C2, E intersect to the intermediate limit: " << (d3 ? "yes" : "NO") << "\n";

    bool certs = true;
    for (const auto& [name, param] : conic_parametrizations()) {
        Ideal<Rational> comp = [&]() {
            if (name.rfind("snowmen-P", 0) == 0)
                return snowmen_primes(ctx)[static_cast<std::size_t>(name.back() - '1')];
            if (name.rfind("i-star-", 0) == 0) {
                std::size_t idx = name == "i-star-H1" ? 0 : name == "i-star-B1" ? 1
                                  : name == "i-star-H2" ? 2 : 3;
                return i_star_primes(ctx)[idx];
            }
            return c_flat_primes(ctx)[name == "c-flat-C1" ? 0 : 1];
        }();
        std::vector<P> forms;
        for (const auto& t : param) forms.push_back(ctx.poly(ctx.st, t));
        certs = certs && certify_conic(comp, ctx.st, forms).verified;
    }
    log << "    all ten conic components certified by parametrization, HF(m) = 2m+1: "
        << (certs ? "yes" : "NO") << "\n";
    return d1 && d2 && d3 && certs;
}

bool criterion5(std::ostream& log) {
    auto ctx = specialized_context();
    bool ok = true;
    auto run = [&](const std::string& label, const Ideal<Rational>& A, const Ideal<Rational>& B,
                   const std::vector<std::string>& coords, ContactType want) {
        bool good;
        if (coords.empty()) {
            good = projectively_disjoint(A, B);
        } else {
            auto prof = intersection_profile(A, B, ctx.point(coords));
            good = prof.classification == want;
        }
        log << "    " << label << ": " << (good ? "as stated" : "MISMATCH") << "\n";
        ok = ok && good;
    };
    auto hp = i_star_primes(ctx);
    run("H1,B1 tacnode at [1,0,0,0,0,0]", hp[0], hp[1], {"1", "0", "0", "0", "0", "0"},
        ContactType::Tacnode);
    run("H2,B2 tacnode at [0,0,1,0,0,0]", hp[2], hp[3], {"0", "0", "1", "0", "0", "0"},
        ContactType::Tacnode);
    run("H1,H2 node at [0,1,0,0,-1,0]", hp[0], hp[2], {"0", "1", "0", "0", "-1", "0"},
        ContactType::Node);
    run("B1,B2 node at [0,1,0,0,-beta,0]", hp[1], hp[3], {"0", "1", "0", "0", "-beta", "0"},
        ContactType::Node);
    run("H1,B2 disjoint", hp[0], hp[3], {}, ContactType::Disjoint);
    run("H2,B1 disjoint", hp[2], hp[1], {}, ContactType::Disjoint);

    auto cp = c_flat_primes(ctx);
    run("C1,C2 tacnode at [0,0,1,0,0,0]", cp[0], cp[1], {"0", "0", "1", "0", "0", "0"},
        ContactType::Tacnode);
    run("E,C1 node at [0,1,0,0,-1,0]", cp[2], cp[0], {"0", "1", "0", "0", "-1", "0"},
        ContactType::Node);
    run("E,C2 node at [0,1,0,0,-beta,0]", cp[2], cp[1], {"0", "1", "0", "0", "-beta", "0"},
        ContactType::Node);
    return ok;
}

bool criterion6(std::ostream& log) {
    auto ctx = specialized_context();
    bool ok = true;
    auto run = [&](const std::string& label, const Ideal<Rational>& I, std::vector<long> rho) {
        auto L = flat_limit(I, DegenerationSpec{rho});
        bool good = true;
        for (int m = 2; m <= 4; ++m) {
            long a = hilbert_function(I, m), b = hilbert_function(L, m);
            good = good && a == b && a == 8 * m - 2;
        }
        log << "    " << label << ": " << (good ? "HF preserved, 8m-2" : "MISMATCH") << "\n";
        ok = ok && good;
    };
    run("bridge under (0,1,2,2,1,0)", elliptic_bridge(ctx), rho_snowmen());
    run("tacnodal under (0,0,2,0,0,1)", e_beta_tacnodal(ctx), rho_one());
    run("tacnodal under (0,2,4,1,2,3)", e_beta_tacnodal(ctx), {0, 2, 4, 1, 2, 3});
    run("intermediate limit under (0,2,2,1,2,2)", c_flat(ctx), rho_two());
    return ok;
}

bool criterion7(std::ostream& log) {
    auto ctx = specialized_context();
    bool ok = true;

    bool hf_ok = true;
    for (const auto& rec : records()) {
        auto I = realize(rec.name, ctx);
        for (int m = 2; m <= 4; ++m)
            hf_ok = hf_ok && macaulay_hilbert_function(I, m) == hilbert_function(I, m);
    }
    log << "    Macaulay-matrix rank oracle vs standard-monomial count, all records: "
        << (hf_ok ? "agree" : "DISAGREE") << "\n";
    ok = ok && hf_ok;

    testing::Rng rng(20240809);
    int done = 0;
    bool j_ok = true;
    while (done < 20) {
        Rational a = rng.rational(), b = rng.rational();
        auto inv = branch_quartic_invariants(a, b);
        if ((Rational(4) * inv.I * inv.I * inv.I - inv.J * inv.J).is_zero()) continue;
        j_ok = j_ok && j_invariant(a, b) == j_invariant_oracle(a, b);
        ++done;
    }
    log << "    j-invariant closed form vs branch-point oracle on 20 smooth samples: "
        << (j_ok ? "agree" : "DISAGREE") << "\n";
    ok = ok && j_ok;

    testing::Rng rng2(424242);
    auto R3 = make_xring(3);
    bool ring_ok = true;
    for (int i = 0; i < 200; ++i) {
        P p = rng2.poly(R3, 3, 3), q = rng2.poly(R3, 3, 3), r = rng2.poly(R3, 3, 3);
        ring_ok = ring_ok && (p * (q + r) == p * q + p * r) && (p * q == q * p) &&
                  ((p + q) + r == p + (q + r));
    }
    log << "    ring axioms, 200 randomized trials, fixed seed: " << (ring_ok ? "pass" : "FAIL")
        << "\n";
    ok = ok && ring_ok;

    auto R2 = make_xring(2);
    bool op_ok = true;
    int op_trials = 0;
    testing::Rng rng3(31337);
    while (op_trials < 200) {
        P p = rng3.poly(R2, 2, 2), q = rng3.poly(R2, 2, 2);
        if (p.is_zero() || q.is_zero()) continue;
        ++op_trials;
        if (poly_gcd(p, q).is_constant()) {
            Ideal<Rational> A(R2, {p}), B(R2, {q}), prod(R2, {p * q});
            op_ok = op_ok && intersect(A, B).equals(prod);
        } else {
            Ideal<Rational> A(R2, {p});
            auto Q = quotient(A, q);
            for (const auto& g : Q.gens()) op_ok = op_ok && A.contains(g * q);
        }
    }
    log << "    ideal-operation oracles, 200 randomized trials, fixed seed: "
        << (op_ok ? "pass" : "FAIL") << "\n";
    ok = ok && op_ok;
    return ok;
}

bool criterion8(std::ostream& log) {
    auto ctx = specialized_context();
    bool ok = true;
    auto run = [&](const std::string& curve, std::vector<long> rho, Stability want) {
        auto v = verdict(realize(curve, ctx), OneParameterSubgroup{rho});
        bool good = v.verdict == want;
        log << "    " << curve << ": " << to_string(v.verdict) << " (mu2 = " << v.mu2
            << ", mu3 = " << v.mu3 << ")" << (good ? "" : "  <- MISMATCH") << "\n";
        ok = ok && good;
    };
    run("conjoined-snowmen", rho_snowmen(), Stability::Unstable);
    run("cat-eye", rho_cat_eye(), Stability::StrictlySemistable);
    run("ox", rho_ox(), Stability::StrictlySemistable);
    run("c-flat", rho_two(), Stability::Unstable);
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "mu table reproduction (weight sums and indices, exact)", criterion1},
        {2, "standard-monomial golden lists, element for element", criterion2},
        {3, "flat-limit ideal equalities against transcribed targets", criterion3},
        {4, "decomposition verification with certified conics", criterion4},
        {5, "intersection-profile table (tacnodes, nodes, disjoint pairs)", criterion5},
        {6, "flatness: HF(limit) = HF = 8m-2 for m = 2..4", criterion6},
        {7, "oracle suites (Macaulay rank, branch-point j, randomized axioms)", criterion7},
        {8, "trichotomy verdicts", criterion8}};

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failed = 0;
    for (const auto& c : criteria) {
        if (only && c.number != only) continue;
        std::ostringstream log;
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& ex) {
            log << "    exception: " << ex.what() << "\n";
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title
                  << "\n"
                  << log.str();
        if (!ok) ++failed;
    }
    if (!only)
        std::cout << (failed == 0 ? "all criteria passed"
                                  : std::to_string(failed) + " criterion(s) failed")
                  << "\n";
    return failed;
}
