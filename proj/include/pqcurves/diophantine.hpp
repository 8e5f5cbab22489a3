#pragma once

#include <string>
#include <vector>

#include "pqcurves/curve.hpp"
#include "pqcurves/descent.hpp"
#include "pqcurves/gaussian.hpp"
#include "pqcurves/residues.hpp"

namespace pqcurves {

// One quartic variant x^4 + sign_pq*p*q*y^4 = delta*2^n*z^2 over Z[i].
// For theorem-scope runs (p, q) is a PrimePair; control instances may use
// q = 1 so the coefficient is a bare prime.
struct EquationInstance {
    long p = 3;
    long q = 17;
    int sign_pq = 1;                  // +1 or -1
    GaussianInt delta = GaussianInt(1);  // one of the four units
    unsigned two_exp = 0;             // the n of the 2^n factor

    mpz_class coefficient() const { return mpz_class(p) * q; }
    std::string equation_str() const;
};

// Power-of-two absorption into z: n = 2k rescales z by 2^k and keeps
// delta; n = 2k+1 rescales z by (1+i)*2^k and multiplies delta by -i,
// using 2 = -i*(1+i)^2. The solution map z -> z' is checked by identity:
// delta'*z'^2 = delta*2^n*z^2.
struct CanonicalizeResult {
    EquationInstance canonical;   // two_exp == 0
    unsigned z_pow2 = 0;          // k in z' = lambda^? * 2^k * z
    bool z_lambda = false;        // whether z' carries a factor 1+i
    std::string z_transform;      // e.g. "z' = (1+i)*2^1*z"
};

CanonicalizeResult canonicalize(const EquationInstance& inst);

// Applies the canonicalize transform to a concrete z.
GaussianInt transform_z(const CanonicalizeResult& c, const GaussianInt& z);

struct SolutionRecord {
    GaussianInt x, y, z;
    bool trivial = false;  // x*y == 0
};

// Checks (x, y, z) satisfies the instance exactly; throws if it does not;
// returns whether x*y == 0.
bool is_trivial_solution(const GaussianInt& x, const GaussianInt& y, const GaussianInt& z,
                         const EquationInstance& inst);

// Exhaustive search over x, y in Z[i] of norm <= norm_bound. The left side
// is invariant under unit rescaling of x and y, so the scan runs over
// first-quadrant representatives and every record is expanded to its unit
// orbit; z is reported as the canonical square root (its negation always
// pairs with it). Deterministic order: x by (norm, re, im), then y, then
// units.
std::vector<SolutionRecord> brute_force_search(const EquationInstance& inst,
                                               long norm_bound);

// The reduction from a nontrivial solution of a canonical instance to a
// curve point: delta = +/-1 lands (a^2, ab) or (a^2, i*ab) on
// y^2 = x^3 + sign*pq*x, delta = +/-i lands (+/-i*a^2, ab) on the
// opposite-sign curve, where a = x/y and b = z/y^2. The point is verified
// on-curve and has nonzero X. Throws on trivial input or a non-canonical
// instance.
CurvePoint solution_to_point(const GaussianInt& x, const GaussianInt& y,
                             const GaussianInt& z, const EquationInstance& inst);

// The curve carrying solution_to_point's output for this instance.
CurveAB reduction_curve(const EquationInstance& inst);

struct VariantResult {
    EquationInstance instance;
    size_t trivial_count = 0;
    std::vector<SolutionRecord> nontrivial;
    bool pass() const { return nontrivial.empty(); }
};

struct VerificationReport {
    PrimePair pair;
    long norm_bound = 0;
    std::vector<VariantResult> variants;  // 8 canonical + 32 power-of-two
    RankRange rank_qi_plus, rank_qi_minus;
    bool torsion_z2 = false;
    bool rank_zero() const { return rank_qi_plus.upper == 0 && rank_qi_minus.upper == 0; }
    bool all_variants_trivial() const;
    bool pass() const { return all_variants_trivial() && rank_zero() && torsion_z2; }
    // The implication "rank 0 and torsion Z/2Z leave no room for a
    // nontrivial solution" must never be contradicted by the search.
    bool proof_route_consistent() const {
        return !(rank_zero() && torsion_z2 && !all_variants_trivial());
    }
};

// Runs brute_force_search over the eight sign/unit variants plus the
// power-of-two variants with n in {1,2,3,4}, and cross-checks the rank and
// torsion computations for the pair. Throws if (p, q) violates the
// PrimePair hypotheses.
VerificationReport verify_theorem_instance(const PrimePair& pair, long norm_bound);

}  // namespace pqcurves
