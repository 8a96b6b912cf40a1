#ifndef BPP_CHERN_HPP
#define BPP_CHERN_HPP

#include <memory>
#include <string>
#include <vector>

#include "bpp/combinat.hpp"
#include "bpp/polyring.hpp"
#include "bpp/schurbasis.hpp"
#include "bpp/symexpand.hpp"

namespace bpp::chern {

using combinat::Partition;
using polyring::MultiPoly;
using schurbasis::SchurVector;

// Symbolic vector-bundle expression: base bundles (at most two distinct
// alphabets), direct sums, tensor products, and Schur functor applications.
struct BundleExpr;
using BundlePtr = std::shared_ptr<const BundleExpr>;

struct BundleExpr {
    enum class Kind { kBase, kSum, kTensor, kSchur };

    Kind kind;
    std::string name;  // base bundles only
    int base_rank = 0;
    Partition lam;  // Schur functor shape
    BundlePtr a, b;

    static BundlePtr base(std::string name, int rank);
    static BundlePtr sum(BundlePtr a, BundlePtr b);
    static BundlePtr tensor(BundlePtr a, BundlePtr b);
    static BundlePtr schur(Partition lam, BundlePtr child);
    static BundlePtr wedge(int k, BundlePtr child);  // schur((1^k), .)
    static BundlePtr sym(int k, BundlePtr child);    // schur((k), .)

    std::string to_string() const;
};

// Integer-coefficient linear form over the base alphabets.
struct LinForm {
    std::vector<long> x, y;

    LinForm() = default;
    LinForm(int nx, int ny) : x(nx, 0), y(ny, 0) {}
    LinForm operator+(const LinForm& o) const;
    bool operator==(const LinForm& o) const { return x == o.x && y == o.y; }
    bool operator<(const LinForm& o) const {
        return std::tie(x, y) < std::tie(o.x, o.y);
    }
    MultiPoly to_poly(int nx, int ny) const;
    std::string to_string() const;
};

// Multiset of Chern roots plus the alphabet sizes they live over.
struct RootMultiset {
    int nx = 0, ny = 0;
    std::vector<LinForm> forms;  // SSYT-enumeration order for Schur functors

    int rank() const { return static_cast<int>(forms.size()); }
};

inline constexpr int kDefaultRootBound = 64;

// Chern roots of an expression: Base(n) yields unit forms; direct sum takes
// the multiset union, tensor the pairwise sums, and a Schur functor the
// tableau-content sums over SSYT(lambda, <= child rank).  Throws when the
// rank exceeds the bound.
RootMultiset chern_roots(const BundlePtr& e, int max_roots = kDefaultRootBound);

// Elementary / homogeneous / power-sum / Schur evaluations at a root
// multiset.  s_lambda goes through a Jacobi-Trudi determinant.
MultiPoly pleth_e(int d, const RootMultiset& roots);
MultiPoly pleth_h(int d, const RootMultiset& roots);
MultiPoly pleth_p(int d, const RootMultiset& roots);
MultiPoly pleth_s(const Partition& lam, const RootMultiset& roots);
MultiPoly pleth(const SchurVector& f, const RootMultiset& roots);

// F(e): evaluate a Schur-basis element at the Chern roots of the bundle.
MultiPoly chern_plethysm(const SchurVector& f, const BundlePtr& e,
                         int max_roots = kDefaultRootBound);

// prod over roots of (1 + root).
MultiPoly total_chern(const BundlePtr& e, int max_roots = kDefaultRootBound);

struct PragaczResult {
    bool positive = false;
    bool two_alphabets = false;
    symexpand::SchurExpansion single;       // when one alphabet
    symexpand::DoubleSchurExpansion dual;   // when two
    std::string violation;                  // empty when positive
};

// Expand s_lambda at the Chern roots of e on the Schur basis (or product
// basis for two alphabets) and verify nonnegativity.
PragaczResult pragacz_check(const Partition& lam, const BundlePtr& e,
                            int max_roots = kDefaultRootBound);

// Parser for the textual bundle DSL: `E:3`, `wedge(2, E:4)`, `sym(2, E:3)`,
// `schur([2,1], E:3)`, `tensor(a, b)`, `oplus(a, b)`.  Parse errors carry
// the offset and the expected token.
BundlePtr parse_bundle(const std::string& text);

}  // namespace bpp::chern

#endif
