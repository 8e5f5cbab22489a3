#pragma once

#include <string>
#include <vector>

#include "pqcurves/curve.hpp"
#include "pqcurves/gaussian.hpp"
#include "pqcurves/residues.hpp"

namespace pqcurves {

// One admissible torsion Y-coordinate for y^2 = x^3 + a*x + b over Q(i):
// either Y = 0 or Y^2 | 4a^3 + 27b^2, together with every Gaussian-integer
// X solving X^3 + a*X + b = Y^2.
struct TorsionCandidate {
    GaussianInt y_value;
    std::vector<GaussianInt> x_solutions;
    std::string source;  // "Y=0" or the canonical square divisor Y came from
};

struct TorsionGroup {
    std::vector<CurvePoint> points;  // sorted, Infinity first
    std::string structure;           // "Z/1Z", "Z/2Z", "Z/2Z x Z/4Z", ...
};

// All Y candidates the extended Nagell-Lutz theorem allows: Y = 0 plus the
// four unit multiples of every canonical d with d^2 | 4a^3 + 27b^2.
// Throws on a singular curve.
std::vector<TorsionCandidate> nagell_lutz_candidates(const GaussianInt& a,
                                                     const GaussianInt& b);

// Gaussian-integer roots of X^3 + a*X + (b - y^2). The cubic is monic, so
// nonzero roots divide the constant term; for a vanishing constant term
// the roots are 0 and the exact square roots of -a.
std::vector<GaussianInt> solve_cubic_for_x(const GaussianInt& a, const GaussianInt& b,
                                           const GaussianInt& y);

// Assembles the full torsion subgroup of y^2 = x^3 + a*x + b over Q(i):
// candidate points from nagell_lutz_candidates, order filter at bound 16,
// then group-law closure and isomorphism-type classification.
TorsionGroup torsion_subgroup(const GaussianInt& a, const GaussianInt& b);

// True iff both y^2 = x^3 + pq*x and y^2 = x^3 - pq*x have torsion exactly
// {O, (0,0)} over Q(i).
bool verify_torsion_z2(const PrimePair& pair);

}  // namespace pqcurves
