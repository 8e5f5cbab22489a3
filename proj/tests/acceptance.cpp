// Acceptance suite: one test case per criterion, each printing a single
// PASS/FAIL line. Criteria that fail do so because the underlying
// mathematical claim is false for part of the parameter range; the
// failure output carries the explicit counterexamples.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>

#include "pqcurves/descent.hpp"
#include "pqcurves/diophantine.hpp"
#include "pqcurves/intmath.hpp"
#include "pqcurves/residues.hpp"
#include "pqcurves/torsion.hpp"
#include "testutil.hpp"

using namespace pqcurves;
using testutil::Rng;

namespace {

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& why) {
        if (!cond) {
            pass = false;
            notes.push_back(why);
        }
    }
    ~Criterion() {
        std::printf("[criterion %d] %s - %s\n", id, pass ? "PASS" : "FAIL", title.c_str());
        for (const auto& n : notes) std::printf("    %s\n", n.c_str());
        std::fflush(stdout);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<PrimePair> pairs_with_product_bound(long pq_limit) {
    std::vector<PrimePair> out;
    for (const auto& pr : find_prime_pairs(pq_limit / 3))
        if (pr.p * pr.q <= pq_limit) out.push_back(pr);
    return out;
}

// independent residue replay; dumb triple loop for small moduli, a
// re-derived two-variable sweep for larger ones
bool replay_insoluble(const mpz_class& a1, const mpz_class& A, const mpz_class& B, long m) {
    long P = (m % 2 == 0) ? 2 : m;
    mpz_class Ba1 = B / a1;
    bool u_unit = mpz_divisible_ui_p(Ba1.get_mpz_t(), P) != 0;
    bool w_unit = mpz_divisible_ui_p(a1.get_mpz_t(), P) != 0;
    auto md = [m](const mpz_class& x) {
        return static_cast<long>(mpz_fdiv_ui(x.get_mpz_t(), m));
    };
    long al = md(a1), be = md(A), ga = md(Ba1);
    if (m <= 100) {
        for (long u = 0; u < m; ++u)
            for (long v = 0; v < m; ++v)
                for (long w = 0; w < m; ++w) {
                    bool pu = u % P == 0, pv = v % P == 0, pw = w % P == 0;
                    if ((pu && pv) || (pu && pw) || (pv && pw)) continue;
                    if (u_unit && pu) continue;
                    if (w_unit && pw) continue;
                    long lhs = (al * (u * u % m) % m * (u * u % m) +
                                be * (u * u % m) % m * (w * w % m) +
                                ga * (w * w % m) % m * (w * w % m) - v * v) %
                               m;
                    if ((lhs + m * m) % m == 0) return false;
                }
        return true;
    }
    std::vector<char> any_sq(m, 0), unit_sq(m, 0);
    for (long v = 0; v < m; ++v) {
        any_sq[v * v % m] = 1;
        if (v % P) unit_sq[v * v % m] = 1;
    }
    for (long u = 0; u < m; ++u) {
        bool pu = u % P == 0;
        if (u_unit && pu) continue;
        for (long w = 0; w < m; ++w) {
            bool pw = w % P == 0;
            if (pw && (pu || w_unit)) continue;
            long rhs = (al * (u * u % m) % m * (u * u % m) +
                        be * (u * u % m) % m * (w * w % m) +
                        ga * (w * w % m) % m * (w * w % m)) %
                       m;
            if ((pu || pw) ? unit_sq[rhs] : any_sq[rhs]) return false;
        }
    }
    return true;
}

std::string pair_str(const PrimePair& pr) {
    return "(" + std::to_string(pr.p) + "," + std::to_string(pr.q) + ")";
}

}  // namespace

TEST_CASE("criterion 1: rank reproduction over the pq <= 2000 pairs") {
    Criterion crit{1, "rank 0 on both curve families for every pair with pq <= 2000"};
    auto t0 = std::chrono::steady_clock::now();
    auto pairs = pairs_with_product_bound(2000);
    crit.expect(pairs.size() >= 15,
                "expected at least 15 pairs, found " + std::to_string(pairs.size()));
    for (const auto& pr : pairs) {
        mpz_class pq = mpz_class(pr.p) * pr.q;
        DescentReport em = rank_bounds(CurveAB(0, -pq));
        DescentReport ep = rank_bounds(CurveAB(0, pq));
        bool images_ok = em.image_a == std::vector<mpz_class>{1, -pq} &&
                         em.image_abar == std::vector<mpz_class>{1, pq};
        crit.expect(images_ok, pair_str(pr) + ": E- images differ from {1,-pq}/{1,pq}");
        crit.expect(em.undecided_count() == 0 && ep.undecided_count() == 0,
                    pair_str(pr) + ": undecided descent classes remain");
        crit.expect(em.decided() && em.rank_lower == 0, pair_str(pr) + ": E- rank nonzero");
        RankRange qim = rank_over_qi(CurveAB(0, -pq));
        crit.expect(qim == RankRange{0, 0}, pair_str(pr) + ": E- rank over Q(i) nonzero");
        if (!(ep.decided() && ep.rank_lower == 0)) {
            std::string why = pair_str(pr) + ": E+ rank is [" +
                              std::to_string(ep.rank_lower) + "," +
                              std::to_string(ep.rank_upper) + "]";
            for (const auto& cls : ep.trace_abar)
                if (cls.status == ClassStatus::Confirmed && !cls.definitional && cls.witness)
                    why += "; class " + cls.a1.get_str() + " confirmed by (U,V,W)=(" +
                           cls.witness->U.get_str() + "," + cls.witness->V.get_str() + "," +
                           cls.witness->W.get_str() + ")";
            crit.expect(false, why);
        }
    }
    double dt = seconds_since(t0);
    crit.expect(dt < 10.0, "runtime " + std::to_string(dt) + "s exceeds 10s");
    CHECK_MESSAGE(crit.pass, "criterion 1");
}

TEST_CASE("criterion 2: obstruction witnesses replay by exhaustive enumeration") {
    Criterion crit{2, "every modulus witness replays; (3,17) trace shows the four cases"};
    auto pairs = pairs_with_product_bound(2000);
    size_t replayed = 0;
    for (const auto& pr : pairs) {
        mpz_class pq = mpz_class(pr.p) * pr.q;
        for (const mpz_class& B :
             {mpz_class(-pq), mpz_class(4 * pq), pq, mpz_class(-4 * pq)}) {
            CurveAB c(0, B);
            for (const auto& cls : descent_image(c)) {
                if (cls.status != ClassStatus::Excluded || !cls.obstruction) continue;
                if (cls.obstruction->real_place()) continue;
                bool ok = replay_insoluble(cls.a1, c.A, c.B,
                                           cls.obstruction->modulus.get_si());
                if (!ok)
                    crit.expect(false, pair_str(pr) + " B=" + B.get_str() + " class " +
                                           cls.a1.get_str() + ": modulus " +
                                           cls.obstruction->modulus.get_str() +
                                           " does not replay");
                ++replayed;
            }
        }
    }
    crit.expect(replayed > 500, "suspiciously few replayed witnesses");

    // the (3,17) trace must carry the four specific obstructions
    std::map<mpz_class, mpz_class> want_minus{{-1, 3}, {3, 17}, {17, 3}};
    for (const auto& cls : descent_image(CurveAB(0, -51))) {
        auto it = want_minus.find(cls.a1);
        if (it == want_minus.end()) continue;
        bool ok = cls.status == ClassStatus::Excluded && cls.obstruction &&
                  cls.obstruction->modulus == it->second;
        crit.expect(ok, "(3,17) class " + cls.a1.get_str() + " missing its mod " +
                            it->second.get_str() + " witness");
    }
    bool saw_2pq = false;
    for (const auto& cls : descent_image(CurveAB(0, 204))) {
        if (cls.a1 != 102) continue;
        saw_2pq = cls.status == ClassStatus::Excluded && cls.obstruction &&
                  cls.obstruction->modulus == 3;
    }
    crit.expect(saw_2pq, "(3,17) class 2pq on the isogenous curve lacks its mod 3 witness");
    CHECK_MESSAGE(crit.pass, "criterion 2");
}

TEST_CASE("criterion 3: torsion reproduction with lattice scan") {
    Criterion crit{3, "torsion exactly {O,(0,0)} for every pair, confirmed by lattice scan"};
    auto t0 = std::chrono::steady_clock::now();
    auto pairs = pairs_with_product_bound(2000);
    crit.expect(pairs.size() >= 15, "fewer than 15 pairs");
    const CurvePoint origin{QiRational(0), QiRational(0)};
    for (const auto& pr : pairs) {
        crit.expect(verify_torsion_z2(pr), pair_str(pr) + ": torsion is not Z/2Z");
        mpz_class pq = mpz_class(pr.p) * pr.q;
        for (const mpz_class& coeff : {pq, mpz_class(-pq)}) {
            auto scan = testutil::torsion_scan(GaussianInt(coeff, 0), GaussianInt(0), 10000);
            std::set<CurvePoint> expect{CurvePoint::infinity(), origin};
            crit.expect(scan == expect,
                        pair_str(pr) + ": lattice scan found an extra torsion point");
        }
    }
    double dt = seconds_since(t0);
    crit.expect(dt < 30.0, "runtime " + std::to_string(dt) + "s exceeds 30s");
    CHECK_MESSAGE(crit.pass, "criterion 3");
}

TEST_CASE("criterion 4: diophantine verification at norm bound 400") {
    Criterion crit{4, "all variants trivial for (3,17), (11,17), (3,41); control found"};
    auto t0 = std::chrono::steady_clock::now();
    for (const PrimePair& pr : {PrimePair{3, 17}, PrimePair{11, 17}, PrimePair{3, 41}}) {
        VerificationReport rep = verify_theorem_instance(pr, 400);
        crit.expect(rep.proof_route_consistent(),
                    pair_str(pr) + ": rank/torsion/search computations disagree");
        for (const auto& v : rep.variants) {
            if (v.pass()) continue;
            const auto& r = v.nontrivial.front();
            crit.expect(false, pair_str(pr) + " " + v.instance.equation_str() + ": " +
                                   std::to_string(v.nontrivial.size()) +
                                   " nontrivial solutions, e.g. (x,y,z)=(" + r.x.str() +
                                   "," + r.y.str() + "," + r.z.str() + ")");
        }
    }
    // positive control: x^4 + 3y^4 = z^2 at norm bound 10
    EquationInstance control{3, 1, +1, GaussianInt(1), 0};
    std::set<std::string> found;
    for (const auto& r : brute_force_search(control, 10))
        if (!r.trivial) found.insert(r.x.str() + "|" + r.y.str() + "|" + r.z.str());
    bool orbit_ok = true;
    for (const auto& u : GaussianInt::units())
        for (const auto& v : GaussianInt::units())
            orbit_ok = orbit_ok &&
                       found.count((GaussianInt(1) * u).str() + "|" +
                                   (GaussianInt(1) * v).str() + "|2") == 1;
    crit.expect(orbit_ok, "control search missed part of the (1,1,2) unit orbit");
    double dt = seconds_since(t0);
    crit.expect(dt < 300.0, "runtime " + std::to_string(dt) + "s exceeds 5 minutes");
    CHECK_MESSAGE(crit.pass, "criterion 4");
}

TEST_CASE("criterion 5: Nagell-Lutz soundness on random curves") {
    Criterion crit{5, "torsion_subgroup matches the lattice scan on 50 random curves"};
    Rng rng(6001);
    int done = 0;
    while (done < 50) {
        GaussianInt a = testutil::rand_gaussian(rng, 20);
        GaussianInt b = testutil::rand_gaussian(rng, 20);
        if ((GaussianInt(4) * a * a * a + GaussianInt(27) * b * b).is_zero()) continue;
        ++done;
        TorsionGroup g = torsion_subgroup(a, b);
        std::set<CurvePoint> mine(g.points.begin(), g.points.end());
        auto scan = testutil::torsion_scan(a, b, 10000);
        // every scanned torsion point appears among the candidates
        std::set<GaussianInt> cand_y;
        for (const auto& c : nagell_lutz_candidates(a, b)) cand_y.insert(c.y_value);
        for (const auto& P : scan) {
            if (P.is_infinity()) continue;
            bool ok = cand_y.count(P.y().to_gaussian()) == 1;
            crit.expect(ok, "curve a=" + a.str() + " b=" + b.str() + ": scan point " +
                                P.str() + " missing from candidates");
        }
        crit.expect(mine == scan, "curve a=" + a.str() + " b=" + b.str() +
                                      ": torsion_subgroup and scan differ");
    }
    CHECK_MESSAGE(crit.pass, "criterion 5");
}

TEST_CASE("criterion 6: group-law property suite") {
    Criterion crit{6, "identity/inverse/commutativity on 1000 points, associativity on 500 triples"};
    Rng rng(7007);
    int points_done = 0;
    while (points_done < 1000) {
        auto seeded = testutil::rand_curve_with_point(rng, 9);
        const CurveAB& c = seeded.curve;
        CurvePoint P = seeded.point;
        if (points_done % 3 == 0) {
            if (auto tw = testutil::twist_point(c, 12)) P = *tw;
        }
        ++points_done;
        bool ok = add(c, P, CurvePoint::infinity()) == P &&
                  add(c, CurvePoint::infinity(), P) == P &&
                  add(c, P, negate(c, P)) == CurvePoint::infinity();
        CurvePoint Q = mul_scalar(c, testutil::rand_long(rng, -5, 5), P);
        ok = ok && add(c, P, Q) == add(c, Q, P) && is_on_curve(c, add(c, P, Q));
        crit.expect(ok, "identity/inverse/commutativity failed");
        if (!ok) break;
    }
    int triples_done = 0;
    while (triples_done < 500) {
        auto seeded = testutil::rand_curve_with_point(rng, 8);
        const CurveAB& c = seeded.curve;
        CurvePoint P = seeded.point;
        CurvePoint Q = mul_scalar(c, testutil::rand_long(rng, -4, 4), P);
        CurvePoint R = mul_scalar(c, testutil::rand_long(rng, -4, 4), P);
        if (triples_done % 4 == 0) {
            if (auto tw = testutil::twist_point(c, 12)) R = add(c, *tw, Q);
        }
        ++triples_done;
        bool ok = add(c, add(c, P, Q), R) == add(c, P, add(c, Q, R));
        crit.expect(ok, "associativity failed");
        if (!ok) break;
    }
    CHECK_MESSAGE(crit.pass, "criterion 6");
}

TEST_CASE("criterion 7: arithmetic oracles") {
    Criterion crit{7, "legendre vs Euler, sqrt_exact vs search, factor round-trip"};
    Rng rng(1234);
    std::vector<long> primes;
    for (long n = 3; primes.size() < 400; n += 2)
        if (is_prime(mpz_class(n))) primes.push_back(n);
    int mismatches = 0;
    for (int k = 0; k < 10000; ++k) {
        long p = primes[testutil::rand_long(rng, 0, primes.size() - 1)];
        mpz_class a = testutil::rand_long(rng, -1000000, 1000000);
        if (legendre(a, p) != euler_criterion(a, p)) ++mismatches;
    }
    crit.expect(mismatches == 0,
                std::to_string(mismatches) + " legendre/Euler mismatches");

    int sqrt_mismatch = 0;
    for (long a = -100; a <= 100; ++a)
        for (long b = -100; b <= 100; ++b) {
            GaussianInt g{mpz_class(a), mpz_class(b)};
            if (g.norm() > 10000) continue;
            auto mine = sqrt_exact(g);
            auto oracle = testutil::sqrt_oracle(g);
            bool ok = mine.has_value() ? oracle.count(*mine) == 1 : oracle.empty();
            if (!ok) ++sqrt_mismatch;
        }
    crit.expect(sqrt_mismatch == 0, std::to_string(sqrt_mismatch) + " sqrt mismatches");

    int factor_bad = 0;
    for (int k = 0; k < 1000; ++k) {
        GaussianInt g = testutil::rand_gaussian_nonzero(rng, 700);
        if (factor(g).value() != g) ++factor_bad;
    }
    crit.expect(factor_bad == 0, std::to_string(factor_bad) + " factor round-trip failures");
    CHECK_MESSAGE(crit.pass, "criterion 7");
}

TEST_CASE("criterion 8: reduction checks") {
    Criterion crit{8, "canonicalize preserves solutions; control reduces to (1,2)"};
    Rng rng(31415);
    int bad = 0;
    for (int k = 0; k < 1000; ++k) {
        EquationInstance inst{3, 17, (k % 2) ? 1 : -1, GaussianInt::units()[k % 4],
                              static_cast<unsigned>(k % 7)};
        auto c = canonicalize(inst);
        GaussianInt z = testutil::rand_gaussian(rng, 60);
        mpz_class two_n;
        mpz_ui_pow_ui(two_n.get_mpz_t(), 2, inst.two_exp);
        GaussianInt lhs = inst.delta * (z * z) * two_n;
        GaussianInt zt = transform_z(c, z);
        GaussianInt rhs = c.canonical.delta * (zt * zt);
        if (lhs != rhs) ++bad;
    }
    crit.expect(bad == 0, std::to_string(bad) + " substitution mismatches");

    EquationInstance control{3, 1, +1, GaussianInt(1), 0};
    CurvePoint P =
        solution_to_point(GaussianInt(1), GaussianInt(1), GaussianInt(2), control);
    crit.expect(P == CurvePoint{QiRational(1), QiRational(2)},
                "control did not reduce to (1,2)");
    crit.expect(is_on_curve(CurveAB(0, 3), P), "control point is off the curve");
    CHECK_MESSAGE(crit.pass, "criterion 8");
}
