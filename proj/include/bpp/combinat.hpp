#ifndef BPP_COMBINAT_HPP
#define BPP_COMBINAT_HPP

#include <string>
#include <vector>

#include "bpp/bigint.hpp"

namespace bpp::combinat {

/* Partitions, tableaux, statistics, strips, permutations, and
 * symmetric-group characters.  Everything here is a pure function on
 * immutable values; enumeration orders are deterministic. */

// Weakly decreasing sequence of positive integers.  The empty partition is
// the default value.  No trailing zeros are stored; consumers zero-pad.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Staircase (n, n-1, ..., 1); staircase(0) is empty.
    static Partition staircase(int n);

    const std::vector<int>& parts() const { return parts_; }
    // i is 0-based; parts beyond the length read as 0.
    int part(int i) const {
        return (i >= 0 && i < static_cast<int>(parts_.size())) ? parts_[i] : 0;
    }
    int size() const;  // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    bool contains(const Partition& mu) const;  // mu_i <= lambda_i for all i
    Partition conjugate() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

    // Graded lexicographic order: by |lambda|, then lexicographically
    // descending parts ((2) sorts before (1,1)).  Used as the canonical
    // listing order everywhere, including JSON output.
    bool operator<(const Partition& o) const;

    std::string to_string() const;  // "(2,1)", "()" for the empty shape

private:
    std::vector<int> parts_;
};

// Row-indexed filling of a partition shape.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    bool is_semistandard() const;  // rows weakly increase, columns strictly
    bool is_standard() const;      // semistandard with entries 1..|shape|
    int box_count() const { return shape.size(); }
    int row_of(int entry) const;  // 0-based row containing entry (standard)
    // Multiplicity vector (m_1(T), ..., m_max(T)) of entries up to max_entry.
    std::vector<int> content(int max_entry) const;
    std::string to_string() const;
};

// A standard tableau together with its descent statistics.
struct SytInfo {
    Tableau tableau;
    std::vector<int> descents;  // sorted; i is a descent if i+1 sits strictly lower
    int maj = 0;                // sum of descents
    int des() const { return static_cast<int>(descents.size()); }
    // Non-descents among 1..n-1, with n appended when include_n is set.
    std::vector<int> ascents(bool include_n) const;
};

// Permutation of [n] in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    static std::vector<Permutation> all(int n);

    int n() const { return static_cast<int>(w_.size()); }
    // 1-based application: image of i under the permutation.
    int operator()(int i) const { return w_[i - 1]; }
    const std::vector<int>& word() const { return w_; }

    int sign() const;             // (-1)^inversions
    Partition cycle_type() const;
    std::vector<int> descent_set() const;  // { i : w(i) > w(i+1) }
    bool is_derangement() const;
    Permutation inverse() const;

    // Factorization into adjacent transpositions s_{i} (1-based indices),
    // such that composing them right-to-left yields this permutation.
    std::vector<int> adjacent_transposition_word() const;

    bool operator==(const Permutation& o) const { return w_ == o.w_; }

private:
    std::vector<int> w_;
};

// All partitions mu with mu_i <= bound_i, in graded lexicographic order.
std::vector<Partition> partitions_inside(const Partition& bound);

// All partitions of n with at most max_len parts (max_len < 0: unbounded),
// in graded lexicographic order.
std::vector<Partition> partitions_of(int n, int max_len = -1);

// All semistandard tableaux of the given shape with entries <= max_entry,
// in row-reading lexicographic order.  Empty when length(shape) > max_entry.
std::vector<Tableau> ssyt_enumerate(const Partition& shape, int max_entry);

// All standard tableaux with n boxes, over all shapes of n, with statistics.
std::vector<SytInfo> syt_enumerate(int n);

// Number of standard tableaux of the given shape (hook length formula).
Int syt_count(const Partition& shape);

// Least ascent of a standard tableau with n boxes, where n itself always
// counts as an ascent; an index i < n is an ascent when it is not a descent.
int smallest_ascent(const Tableau& t);

// All lambda with mu inside lambda inside `inside`, |lambda/mu| = r, and
// lambda/mu a vertical strip (no row holds more than one box).
std::vector<Partition> vertical_strip_extensions(const Partition& mu, int r,
                                                 const Partition& inside);

// All fixed-point-free permutations of [n].
std::vector<Permutation> derangements(int n);

// Irreducible symmetric group character chi^lambda(rho) via the
// Murnaghan-Nakayama recursion.  Requires |lambda| = |rho|.
Int mn_character(const Partition& lambda, const Partition& rho);

// Centralizer order z_rho = prod i^{m_i} m_i!; the conjugacy class of cycle
// type rho in S_n has n!/z_rho elements.
Int centralizer_order(const Partition& rho);

// A canonical permutation with the given cycle type (consecutive cycles).
Permutation permutation_with_cycle_type(const Partition& rho);

}  // namespace bpp::combinat

#endif
