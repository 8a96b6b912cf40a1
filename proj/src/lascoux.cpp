#include "bpp/lascoux.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bpp::lascoux {

bool RFFilling::valid() const {
    if (static_cast<int>(rows.size()) != shape.length()) return false;
    for (int i = 0; i < shape.length(); ++i) {
        if (static_cast<int>(rows[i].size()) != shape.part(i)) return false;
        for (size_t j = 0; j < rows[i].size(); ++j) {
            int v = rows[i][j];
            if (v < 1 || v > flag - (i + 1)) return false;
            if (j + 1 < rows[i].size() && rows[i][j + 1] >= v) return false;
            if (i + 1 < static_cast<int>(rows.size()) && j < rows[i + 1].size() &&
                rows[i + 1][j] > v)
                return false;  // columns weakly decrease downward
        }
    }
    return true;
}

int RFFilling::ones_count() const {
    int c = 0;
    for (const auto& r : rows)
        for (int v : r)
            if (v == 1) ++c;
    return c;
}

std::pair<int, int> PathFamily::start(int i) const {
    return {2 * (i + 1) - 2, n - (i + 1)};
}

std::pair<int, int> PathFamily::end(int i) const {
    int mi = mu.part(i);
    return {n + (i + 1) - mi - 2, n - (i + 1) + mi};
}

std::vector<std::pair<int, int>> PathFamily::points(int i) const {
    auto [x, y] = start(i);
    std::vector<std::pair<int, int>> pts{{x, y}};
    for (bool north : steps[i]) {
        if (north)
            ++y;
        else
            ++x;
        pts.push_back({x, y});
    }
    return pts;
}

bool PathFamily::nonintersecting() const {
    std::set<std::pair<int, int>> seen;
    for (size_t i = 0; i < steps.size(); ++i)
        for (auto p : points(static_cast<int>(i)))
            if (!seen.insert(p).second) return false;
    return true;
}

Int lascoux_det(const Partition& lam, const Partition& mu, int n) {
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m[i - 1][j - 1] =
                binomial(lam.part(i - 1) + n - i, mu.part(j - 1) + n - j);
    return polyring::bareiss_det(std::move(m));
}

Int binomial_det(const Partition& mu, int n) {
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m[i - 1][j - 1] = binomial(n - i, mu.part(j - 1) - j + i);
    return polyring::bareiss_det(std::move(m));
}

std::vector<RFFilling> rff_enumerate(const Partition& mu, int n) {
    std::vector<RFFilling> out;
    if (!Partition::staircase(n - 1).contains(mu)) return out;
    int len = mu.length();
    std::vector<std::vector<int>> rows(len);
    for (int i = 0; i < len; ++i) rows[i].assign(mu.part(i), 0);
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == len) {
            out.push_back(RFFilling{mu, rows, n});
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= mu.part(r)) {
            nr = r + 1;
            nc = 0;
        }
        int hi = n - (r + 1);                        // flag bound for row r
        if (c > 0) hi = std::min(hi, rows[r][c - 1] - 1);  // strict across row
        if (r > 0 && c < mu.part(r - 1))
            hi = std::min(hi, rows[r - 1][c]);       // weak down column
        for (int v = hi; v >= 1; --v) {
            rows[r][c] = v;
            self(self, nr, nc);
        }
        rows[r][c] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

namespace {

void enumerate_paths(int east, int north, std::vector<std::vector<bool>>& acc,
                     std::vector<bool>& cur) {
    if (east == 0 && north == 0) {
        acc.push_back(cur);
        return;
    }
    if (east > 0) {
        cur.push_back(false);
        enumerate_paths(east - 1, north, acc, cur);
        cur.pop_back();
    }
    if (north > 0) {
        cur.push_back(true);
        enumerate_paths(east, north - 1, acc, cur);
        cur.pop_back();
    }
}

}  // namespace

std::vector<PathFamily> gv_enumerate(const Partition& mu, int n) {
    if (!Partition::staircase(n - 1).contains(mu))
        throw std::invalid_argument("gv_enumerate: mu not inside staircase");
    // options per path: n-i steps, mu_i of them north
    std::vector<std::vector<std::vector<bool>>> options(n);
    for (int i = 1; i <= n; ++i) {
        int north = mu.part(i - 1);
        int east = (n - i) - north;
        std::vector<bool> cur;
        enumerate_paths(east, north, options[i - 1], cur);
    }
    std::vector<PathFamily> out;
    PathFamily fam;
    fam.n = n;
    fam.mu = mu;
    fam.steps.assign(n, {});
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (fam.nonintersecting()) out.push_back(fam);
            return;
        }
        for (const auto& p : options[i]) {
            fam.steps[i] = p;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

RFFilling gv_to_filling(const PathFamily& fam) {
    RFFilling t;
    t.shape = fam.mu;
    t.flag = fam.n;
    t.rows.resize(fam.mu.length());
    for (int i = 0; i < fam.mu.length(); ++i) {
        // labels 1..n-i-1... run from q_i backwards: the step adjacent to
        // q_i is labeled 1; vertical-step labels, sorted decreasing, are row i.
        const auto& steps = fam.steps[i];
        int nsteps = static_cast<int>(steps.size());
        std::vector<int> labels;
        for (int k = 0; k < nsteps; ++k) {
            if (steps[k]) labels.push_back(nsteps - k);  // label from the far end
        }
        std::sort(labels.rbegin(), labels.rend());
        t.rows[i] = std::move(labels);
    }
    return t;
}

PathFamily gv_from_filling(const RFFilling& t) {
    PathFamily fam;
    fam.n = t.flag;
    fam.mu = t.shape;
    fam.steps.assign(fam.n, {});
    for (int i = 0; i < fam.n; ++i) {
        int nsteps = fam.n - (i + 1);
        std::vector<bool> steps(nsteps, false);
        if (i < t.shape.length())
            for (int label : t.rows[i]) steps[nsteps - label] = true;
        fam.steps[i] = std::move(steps);
    }
    return fam;
}

SchurVector lascoux_wedge_expansion(int n) {
    if (n < 1) throw std::invalid_argument("lascoux_wedge_expansion: n < 1");
    SchurVector v;
    for (const Partition& mu :
         combinat::partitions_inside(Partition::staircase(n - 1)))
        v.add(mu, Int(rff_enumerate(mu, n).size()));
    return v;
}

SchurVector lascoux_sym_expansion(int n) {
    if (n < 1) throw std::invalid_argument("lascoux_sym_expansion: n < 1");
    SchurVector v;
    Partition inner = Partition::staircase(n - 1);
    for (const Partition& lam :
         combinat::partitions_inside(Partition::staircase(n))) {
        Int total = 0;
        // mu inside lam and the smaller staircase with lam/mu a vertical strip
        for (const Partition& mu : combinat::partitions_inside(lam)) {
            if (!inner.contains(mu)) continue;
            bool vstrip = true;
            int rows = lam.length();
            for (int i = 0; i < rows && vstrip; ++i)
                if (lam.part(i) - mu.part(i) > 1 || mu.part(i) > lam.part(i))
                    vstrip = false;
            if (!vstrip) continue;
            int strip = lam.size() - mu.size();
            total += int_pow(2, strip) * Int(rff_enumerate(mu, n).size());
        }
        v.add(lam, total);
    }
    return v;
}

Int asm_count(int n) {
    if (n < 1) throw std::invalid_argument("asm_count: n < 1");
    Int num = 1, den = 1;
    for (int k = 0; k <= n - 1; ++k) {
        num *= factorial(3 * k + 1);
        den *= factorial(n + k);
    }
    if (num % den != 0) throw std::logic_error("asm_count: non-integral result");
    return num / den;
}

Int f_sequence(int n) {
    return lascoux_sym_expansion(n).coefficient_sum();
}

MultiPoly wedge_product_poly(int n) {
    std::vector<MultiPoly> forms;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            forms.push_back(MultiPoly::one(n) + MultiPoly::var_x(i, n) +
                            MultiPoly::var_x(j, n));
    return polyring::expand_linear_forms(forms, n, 0);
}

MultiPoly sym_product_poly(int n) {
    std::vector<MultiPoly> forms;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            forms.push_back(MultiPoly::one(n) + MultiPoly::var_x(i, n) +
                            MultiPoly::var_x(j, n));
    return polyring::expand_linear_forms(forms, n, 0);
}

}  // namespace bpp::lascoux
