#ifndef BPP_VERIFY_HPP
#define BPP_VERIFY_HPP

#include <string>
#include <vector>

namespace bpp::verify {

struct Check {
    int id = 0;            // criterion number
    std::string name;      // short description of the identity
    bool pass = false;
    bool vacuous = false;  // range emptied by the n cap
    std::string detail;    // failure diagnostics or summary counts
    double seconds = 0.0;
};

// Caps every per-criterion n-range at max_n (negative: use the full default
// ranges).  A range emptied by the cap counts as a vacuous pass.
std::vector<Check> run_all(int max_n = -1);

// Individual criteria; each takes an inclusive cap on its n-range.
Check c01_low_k_expansions(int max_n);
Check c02_all_ones_evaluation(int max_n);
Check c03_schur_positivity(int max_n, int max_n_total);
Check c04_n3_product_expansion(int max_n);
Check c05_lascoux_expansions(int max_n_wedge, int max_n_sym);
Check c06_three_way_counts(int max_n);
Check c07_asm_totals(int max_n);
Check c08_f_sequence(int max_n);
Check c09_gv_bijection(int max_n);
Check c10_antisymmetrizer_identity(int max_n);
Check c11_positroid_module(int max_n);
Check c12_superspace(int max_n);
Check c13_reiner_webb_derangements(int max_n_rw, int max_n_der);
Check c14_hrs(int max_n_degen, int max_n_pos);
Check c15_chern_layer(int max_n);

}  // namespace bpp::verify

#endif
