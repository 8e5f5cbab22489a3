#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "pqcurves/curve.hpp"

namespace pqcurves {

enum class ClassStatus { Confirmed, Excluded, Undecided };

// Solution of V^2 = A1*U^4 + A*U^2*W^2 + (B/A1)*W^4 with U, V, W pairwise
// coprime, UW != 0, gcd(A1, W) = gcd(B/A1, U) = 1.
struct QuarticWitness {
    mpz_class U, V, W;
};

// Why a divisor class cannot be in the descent image. modulus == 0 marks
// the real place (right-hand side negative for every admissible U, W).
struct Obstruction {
    mpz_class modulus;
    std::string reason;

    bool real_place() const { return modulus == 0; }
};

// One squarefree divisor class A1 of B with its resolution.
struct DescentClass {
    mpz_class a1;
    ClassStatus status = ClassStatus::Undecided;
    bool definitional = false;                 // class of O or of (0,0)
    std::optional<QuarticWitness> witness;     // set when Confirmed by a triple
    std::optional<Obstruction> obstruction;    // set when Excluded
    std::optional<CurvePoint> point;           // curve point realizing the class
    std::string note;                          // human-readable provenance
};

struct RankRange {
    int lower = 0;
    int upper = 0;

    bool operator==(const RankRange&) const = default;
};

struct DescentReport {
    CurveAB curve;
    CurveAB isogenous;
    std::vector<mpz_class> image_a;     // confirmed classes of the descent map on E
    std::vector<mpz_class> image_abar;  // confirmed classes on the isogenous curve
    std::vector<DescentClass> trace_a;
    std::vector<DescentClass> trace_abar;
    int rank_lower = 0;
    int rank_upper = 0;

    bool decided() const { return rank_lower == rank_upper; }
    size_t undecided_count() const;
};

// (A, B) -> (-2A, A^2 - 4B). The input curve's nonsingularity already
// forces the result nonsingular.
CurveAB isogenous_curve(const CurveAB& c);

// All squarefree divisors of |B| with both signs, ordered by absolute
// value with the positive sign first.
std::vector<mpz_class> candidate_classes(const mpz_class& B);

// Deterministic modulus list for obstruction searches: odd primes dividing
// B ascending, then 8, 16, 32, 64, then the remaining primes up to bound.
std::vector<mpz_class> obstruction_moduli(const mpz_class& B, long moduli_bound);

// Searches the moduli in order for one at which the quartic has no
// admissible residues (U, V, W); the side conditions of the global
// statement are imposed prime-locally: at most one of U, V, W divisible by
// the underlying prime, W a unit when it divides A1, U a unit when it
// divides B/A1. Returns the first obstructing modulus found.
std::optional<Obstruction> quartic_obstruction(const mpz_class& a1, const mpz_class& A,
                                               const mpz_class& B,
                                               const std::vector<mpz_class>& moduli);

// Negative-definiteness of the quartic form over R; a sound exclusion at
// the real place.
std::optional<Obstruction> real_place_obstruction(const mpz_class& a1, const mpz_class& A,
                                                  const mpz_class& B);

// Brute force over 1 <= U, W <= height under the gcd side conditions,
// testing whether A1*U^4 + A*U^2*W^2 + (B/A1)*W^4 is a perfect square.
// First witness in (U, W) lexicographic order.
std::optional<QuarticWitness> quartic_global_search(const mpz_class& a1, const mpz_class& A,
                                                    const mpz_class& B, long height);

// The curve point (A1*U^2/W^2, A1*U*V/W^3) attached to a witness.
CurvePoint witness_point(const CurveAB& c, const mpz_class& a1, const QuarticWitness& w);

// Full per-class resolution for one curve: definitional classes confirmed,
// then real-place and modulus obstructions, then global search, then
// subgroup closure, else Undecided.
std::vector<DescentClass> descent_image(const CurveAB& c, long height = 50,
                                        long moduli_bound = 100);

// Runs descent_image on c and its isogenous curve and converts image sizes
// to rank bounds: |a(E)| * |abar(Ebar)| = 2^(rank+2).
DescentReport rank_bounds(const CurveAB& c, long height = 50, long moduli_bound = 100);

// Rank interval over Q(i) via the (-1)-twist (A, B) -> (-A, B). For A = 0
// the twist is the curve itself and the Q(i) rank is twice the Q rank.
RankRange rank_over_qi(const CurveAB& c, long height = 50, long moduli_bound = 100);

// rank_bounds with default parameters; the report always carries the full
// per-class witness trace.
DescentReport descent_trace(const CurveAB& c);

}  // namespace pqcurves
