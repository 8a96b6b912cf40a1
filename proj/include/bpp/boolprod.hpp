#ifndef BPP_BOOLPROD_HPP
#define BPP_BOOLPROD_HPP

#include <vector>

#include "bpp/polyring.hpp"
#include "bpp/schurbasis.hpp"
#include "bpp/symexpand.hpp"

namespace bpp::boolprod {

using polyring::MultiPoly;
using schurbasis::GradedSchurSeries;
using symexpand::SchurExpansion;

// B_{n,k}: product over k-subsets S of [n] of the linear form sum_{i in S} x_i.
// Subsets are enumerated colexicographically so the factor order is fixed.
MultiPoly boolean_product(int n, int k);

// B_n = prod_{k=1..n} B_{n,k}; degree 2^n - 1.
MultiPoly boolean_total(int n);

// q-analogue prod_{i=1..n} (x_1 + ... + x_n + q x_i), with q stored as a
// grading on terms.
MultiPoly boolean_q(int n);

// Symmetric-function q-analogue: sum_j q^j e_j * h_1^{n-j} on the Schur
// basis, as a q-graded series.
GradedSchurSeries boolean_q_abstract(int n);

// Two-alphabet extension: product over pairs (k-subset of [n], l-subset of
// [m]) of the joint sum of variables.
MultiPoly bivariate_boolean(int n, int k, int m, int l);

struct PositivityResult {
    bool positive = false;
    SchurExpansion expansion;
    // set when not positive
    combinat::Partition violation_shape;
    Int violation_coeff;
};

// Schur-expand a symmetric single-alphabet polynomial and report whether all
// coefficients are nonnegative; on failure identifies the first offender.
PositivityResult check_schur_positive(const MultiPoly& f);

// All k-subsets of [n] in colexicographic order (1-based members).
std::vector<std::vector<int>> colex_subsets(int n, int k);

}  // namespace bpp::boolprod

#endif
