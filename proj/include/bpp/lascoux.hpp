#ifndef BPP_LASCOUX_HPP
#define BPP_LASCOUX_HPP

#include <vector>

#include "bpp/combinat.hpp"
#include "bpp/polyring.hpp"
#include "bpp/schurbasis.hpp"

namespace bpp::lascoux {

using combinat::Partition;
using polyring::MultiPoly;
using schurbasis::SchurVector;

// Filling of a shape inside the staircase: entries decrease strictly across
// rows and weakly down columns; row i (1-based) entries lie in [1, flag - i].
struct RFFilling {
    Partition shape;
    std::vector<std::vector<int>> rows;  // strictly decreasing lists
    int flag = 0;                        // the n of the flag bounds

    bool valid() const;
    int ones_count() const;  // m_1(T), the number of 1 entries
    bool operator==(const RFFilling& o) const {
        return shape == o.shape && rows == o.rows && flag == o.flag;
    }
};

// Tuple of nonintersecting north/east lattice paths; path i runs from
// p_i = (2i-2, n-i) to q_i = (n+i-mu_i-2, n-i+mu_i) with n-i unit steps.
struct PathFamily {
    int n = 0;
    Partition mu;
    // steps[i][k]: true = north, false = east; |steps[i]| = n-i-1 steps for
    // 0-based i (i.e. n-i steps for the 1-based path index).
    std::vector<std::vector<bool>> steps;

    std::pair<int, int> start(int i) const;  // p_{i+1}, 0-based accessor
    std::pair<int, int> end(int i) const;    // q_{i+1}
    std::vector<std::pair<int, int>> points(int i) const;  // visited points
    bool nonintersecting() const;
    bool operator==(const PathFamily& o) const {
        return n == o.n && mu == o.mu && steps == o.steps;
    }
};

// det( C(lambda_i + n - i, mu_j + n - j) ), both shapes zero-padded to n.
Int lascoux_det(const Partition& lam, const Partition& mu, int n);

// det( C(n - i, mu_j - j + i) ), mu zero-padded to n.
Int binomial_det(const Partition& mu, int n);

// All reverse flagged fillings of the shape with flag parameter n; empty
// when mu is not inside the staircase (n-1, ..., 1).
std::vector<RFFilling> rff_enumerate(const Partition& mu, int n);

// All nonintersecting path families with the fixed endpoints.
std::vector<PathFamily> gv_enumerate(const Partition& mu, int n);

// Mutually inverse bijections; row i of the filling is the set of labels of
// the vertical steps of path i, labeled 1..n-i starting at q_i and walking
// back toward p_i.
RFFilling gv_to_filling(const PathFamily& fam);
PathFamily gv_from_filling(const RFFilling& t);

// sum over mu inside the staircase (n-1,...,1) of r^(n)_mu s_mu.
SchurVector lascoux_wedge_expansion(int n);

// sum over lambda inside (n,...,1) of sum over vertical-strip ancestors mu
// of 2^{|lambda/mu|} r^(n)_mu s_lambda.
SchurVector lascoux_sym_expansion(int n);

// prod_{k=0}^{n-1} (3k+1)!/(n+k)! — the number of n x n alternating sign
// matrices — by exact factorial arithmetic.
Int asm_count(int n);

// Sum of the coefficients of lascoux_sym_expansion(n).
Int f_sequence(int n);

// The expanded products both expansions must reproduce.
MultiPoly wedge_product_poly(int n);  // prod_{i<j} (1 + x_i + x_j)
MultiPoly sym_product_poly(int n);    // prod_{i<=j} (1 + x_i + x_j)

}  // namespace bpp::lascoux

#endif
