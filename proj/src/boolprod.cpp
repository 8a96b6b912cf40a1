#include "bpp/boolprod.hpp"

#include <stdexcept>

namespace bpp::boolprod {

std::vector<std::vector<int>> colex_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // colex: subsets ordered by largest element, then recursively
    auto rec = [&](auto&& self, int maxv, int need) -> void {
        if (need == 0) {
            std::vector<int> s(cur.rbegin(), cur.rend());
            out.push_back(std::move(s));
            return;
        }
        for (int v = need; v <= maxv; ++v) {
            cur.push_back(v);
            self(self, v - 1, need - 1);
            cur.pop_back();
        }
    };
    rec(rec, n, k);
    return out;
}

MultiPoly boolean_product(int n, int k) {
    if (k < 1 || k > n)
        throw std::invalid_argument("boolean_product: need 1 <= k <= n");
    std::vector<MultiPoly> forms;
    for (const auto& s : colex_subsets(n, k)) {
        MultiPoly f = MultiPoly::zero(n);
        for (int i : s) f = f + MultiPoly::var_x(i, n);
        forms.push_back(std::move(f));
    }
    return polyring::expand_linear_forms(forms, n, 0);
}

MultiPoly boolean_total(int n) {
    if (n < 1) throw std::invalid_argument("boolean_total: need n >= 1");
    MultiPoly acc = MultiPoly::one(n);
    for (int k = 1; k <= n; ++k) acc = acc * boolean_product(n, k);
    return acc;
}

MultiPoly boolean_q(int n) {
    if (n < 1) throw std::invalid_argument("boolean_q: need n >= 1");
    std::vector<MultiPoly> forms;
    for (int i = 1; i <= n; ++i) {
        MultiPoly f = MultiPoly::zero(n);
        for (int j = 1; j <= n; ++j) f = f + MultiPoly::var_x(j, n);
        std::vector<int> e(n, 0);
        e[i - 1] = 1;
        f.add_term(1, e, {}, 1);  // + q x_i
        forms.push_back(std::move(f));
    }
    return polyring::expand_linear_forms(forms, n, 0);
}

GradedSchurSeries boolean_q_abstract(int n) {
    if (n < 1) throw std::invalid_argument("boolean_q_abstract: need n >= 1");
    GradedSchurSeries g;
    for (int j = 0; j <= n; ++j)
        g.add_vector(j, 0, schurbasis::e_h_product(j, n - j));
    return g;
}

MultiPoly bivariate_boolean(int n, int k, int m, int l) {
    if (k < 1 || k > n || l < 1 || l > m)
        throw std::invalid_argument("bivariate_boolean: parameter out of range");
    std::vector<MultiPoly> forms;
    for (const auto& xs : colex_subsets(n, k))
        for (const auto& ys : colex_subsets(m, l)) {
            MultiPoly f = MultiPoly::zero(n, m);
            for (int i : xs) f = f + MultiPoly::var_x(i, n, m);
            for (int j : ys) f = f + MultiPoly::var_y(j, n, m);
            forms.push_back(std::move(f));
        }
    return polyring::expand_linear_forms(forms, n, m);
}

PositivityResult check_schur_positive(const MultiPoly& f) {
    PositivityResult r;
    r.expansion = symexpand::schur_expand(f);
    r.positive = r.expansion.is_positive(&r.violation_shape, &r.violation_coeff);
    return r;
}

}  // namespace bpp::boolprod
