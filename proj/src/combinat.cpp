#include "bpp/combinat.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bpp::combinat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must weakly decrease");
    }
}

Partition Partition::staircase(int n) {
    std::vector<int> p;
    for (int i = n; i >= 1; --i) p.push_back(i);
    return Partition(std::move(p));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int j = 0; j < (parts_.empty() ? 0 : parts_[0]); ++j) {
        int cnt = 0;
        for (int p : parts_)
            if (p > j) ++cnt;
        c.push_back(cnt);
    }
    return Partition(std::move(c));
}

bool Partition::operator<(const Partition& o) const {
    int sa = size(), sb = o.size();
    if (sa != sb) return sa < sb;
    // same size: lexicographically larger part vector sorts first
    return parts_ > o.parts_;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

bool Tableau::is_semistandard() const {
    if (static_cast<int>(rows.size()) != shape.length()) return false;
    for (int i = 0; i < shape.length(); ++i) {
        if (static_cast<int>(rows[i].size()) != shape.part(i)) return false;
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (rows[i][j] <= 0) return false;
            if (j + 1 < rows[i].size() && rows[i][j] > rows[i][j + 1]) return false;
            if (i + 1 < static_cast<int>(rows.size()) && j < rows[i + 1].size() &&
                rows[i][j] >= rows[i + 1][j])
                return false;
        }
    }
    return true;
}

bool Tableau::is_standard() const {
    if (!is_semistandard()) return false;
    std::vector<char> seen(box_count() + 1, 0);
    for (const auto& r : rows)
        for (int e : r) {
            if (e < 1 || e > box_count() || seen[e]) return false;
            seen[e] = 1;
        }
    return true;
}

int Tableau::row_of(int entry) const {
    for (size_t i = 0; i < rows.size(); ++i)
        for (int e : rows[i])
            if (e == entry) return static_cast<int>(i);
    throw std::invalid_argument("Tableau::row_of: entry not present");
}

std::vector<int> Tableau::content(int max_entry) const {
    std::vector<int> m(max_entry, 0);
    for (const auto& r : rows)
        for (int e : r) {
            if (e >= 1 && e <= max_entry) ++m[e - 1];
        }
    return m;
}

std::string Tableau::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) os << '/';
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (j) os << ' ';
            os << rows[i][j];
        }
    }
    return os.str();
}

std::vector<int> SytInfo::ascents(bool include_n) const {
    int n = tableau.box_count();
    std::vector<int> out;
    size_t d = 0;
    for (int i = 1; i <= n - 1; ++i) {
        if (d < descents.size() && descents[d] == i) {
            ++d;
            continue;
        }
        out.push_back(i);
    }
    if (include_n && n >= 1) out.push_back(n);
    return out;
}

Permutation::Permutation(std::vector<int> word) : w_(std::move(word)) {
    std::vector<char> seen(w_.size() + 1, 0);
    for (int v : w_) {
        if (v < 1 || v > static_cast<int>(w_.size()) || seen[v])
            throw std::invalid_argument("Permutation: not a bijection on [n]");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

int Permutation::sign() const {
    int inv = 0;
    for (size_t i = 0; i < w_.size(); ++i)
        for (size_t j = i + 1; j < w_.size(); ++j)
            if (w_[i] > w_[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

Partition Permutation::cycle_type() const {
    std::vector<char> seen(w_.size() + 1, 0);
    std::vector<int> lens;
    for (int s = 1; s <= n(); ++s) {
        if (seen[s]) continue;
        int len = 0, c = s;
        while (!seen[c]) {
            seen[c] = 1;
            c = w_[c - 1];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

std::vector<int> Permutation::descent_set() const {
    std::vector<int> d;
    for (int i = 1; i < n(); ++i)
        if (w_[i - 1] > w_[i]) d.push_back(i);
    return d;
}

bool Permutation::is_derangement() const {
    for (int i = 1; i <= n(); ++i)
        if (w_[i - 1] == i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> v(w_.size());
    for (int i = 1; i <= n(); ++i) v[w_[i - 1] - 1] = i;
    return Permutation(std::move(v));
}

std::vector<int> Permutation::adjacent_transposition_word() const {
    // Bubble-sort the one-line word; swapping positions j, j+1 multiplies by
    // s_j on the right, so w * s_{j_1} * ... * s_{j_L} = id and
    // w = s_{j_L} ... s_{j_1}.  The list (j_1, ..., j_L) is returned in
    // application order: applying the swaps successively to a vector, first
    // entry first, realizes the left action of w.
    std::vector<int> u = w_;
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 0; j + 1 < static_cast<int>(u.size()); ++j) {
            if (u[j] > u[j + 1]) {
                std::swap(u[j], u[j + 1]);
                word.push_back(j + 1);
                moved = true;
            }
        }
    }
    return word;
}

std::vector<Partition> partitions_inside(const Partition& bound) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // DFS over rows; row i value in [0, min(bound_i, previous row)].
    auto rec = [&](auto&& self, int row, int prev) -> void {
        out.push_back(Partition(cur));
        if (row >= bound.length()) return;
        int hi = std::min(bound.part(row), prev);
        for (int v = 1; v <= hi; ++v) {
            cur.push_back(v);
            self(self, row + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, bound.length() ? bound.part(0) : 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_of(int n, int max_len) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(Partition(cur));
            return;
        }
        if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tableau> ssyt_enumerate(const Partition& shape, int max_entry) {
    std::vector<Tableau> out;
    if (shape.length() > max_entry) return out;
    if (shape.empty()) {
        out.push_back(Tableau{shape, {}});
        return out;
    }
    std::vector<std::vector<int>> rows(shape.length());
    for (int i = 0; i < shape.length(); ++i) rows[i].assign(shape.part(i), 0);
    // Fill boxes in row-reading order; candidate entries ascend, so the
    // output is in row-reading lexicographic order.
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == shape.length()) {
            out.push_back(Tableau{shape, rows});
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= shape.part(r)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);       // weak row increase
        if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);   // strict column increase
        for (int v = lo; v <= max_entry; ++v) {
            rows[r][c] = v;
            self(self, nr, nc);
        }
        rows[r][c] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

namespace {

void syt_grow(int k, int n, std::vector<int>& shape,
              std::vector<std::vector<int>>& rows, std::vector<SytInfo>& out) {
    if (k > n) {
        Tableau t;
        t.shape = Partition(std::vector<int>(shape.begin(), shape.end()));
        t.rows = rows;
        SytInfo info;
        info.tableau = t;
        for (int i = 1; i < n; ++i)
            if (t.row_of(i + 1) > t.row_of(i)) info.descents.push_back(i);
        for (int d : info.descents) info.maj += d;
        out.push_back(std::move(info));
        return;
    }
    // place k at any addable corner
    for (size_t r = 0; r <= shape.size(); ++r) {
        bool addable =
            (r == shape.size()) ? true : (r == 0 || shape[r] < shape[r - 1]);
        if (!addable) continue;
        if (r == shape.size()) {
            shape.push_back(1);
            rows.push_back({k});
            syt_grow(k + 1, n, shape, rows, out);
            rows.pop_back();
            shape.pop_back();
        } else {
            shape[r] += 1;
            rows[r].push_back(k);
            syt_grow(k + 1, n, shape, rows, out);
            rows[r].pop_back();
            shape[r] -= 1;
        }
    }
}

}  // namespace

std::vector<SytInfo> syt_enumerate(int n) {
    if (n < 0) throw std::invalid_argument("syt_enumerate: n < 0");
    std::vector<SytInfo> out;
    if (n == 0) {
        SytInfo info;
        info.tableau = Tableau{Partition(), {}};
        out.push_back(info);
        return out;
    }
    std::vector<int> shape;
    std::vector<std::vector<int>> rows;
    syt_grow(1, n, shape, rows, out);
    return out;
}

Int syt_count(const Partition& shape) {
    int n = shape.size();
    if (n == 0) return 1;
    Partition conj = shape.conjugate();
    Int denom = 1;
    for (int i = 0; i < shape.length(); ++i)
        for (int j = 0; j < shape.part(i); ++j) {
            long hook = (shape.part(i) - j) + (conj.part(j) - i) - 1;
            denom *= hook;
        }
    return factorial(n) / denom;
}

int smallest_ascent(const Tableau& t) {
    int n = t.box_count();
    if (n == 0) throw std::invalid_argument("smallest_ascent: empty tableau");
    for (int i = 1; i < n; ++i)
        if (t.row_of(i + 1) <= t.row_of(i)) return i;
    return n;  // n is artificially an ascent
}

std::vector<Partition> vertical_strip_extensions(const Partition& mu, int r,
                                                 const Partition& inside) {
    if (r < 0) throw std::invalid_argument("vertical_strip_extensions: r < 0");
    std::vector<Partition> out;
    if (!inside.contains(mu)) return out;
    int rows = inside.length();
    std::vector<int> cur;
    // Row i of lambda is mu_i or mu_i + 1, weakly decreasing, within bounds.
    // Once a row is 0 every later row must also be 0.
    auto rec = [&](auto&& self, int row, int added, int prev) -> void {
        if (added > r) return;
        if (row == rows) {
            if (added == r) out.push_back(Partition(cur));
            return;
        }
        for (int add = 0; add <= 1; ++add) {
            int v = mu.part(row) + add;
            if (v > inside.part(row) || v > prev) continue;
            if (v > 0) cur.push_back(v);
            self(self, row + 1, added + add, v);
            if (v > 0) cur.pop_back();
        }
    };
    rec(rec, 0, 0, rows ? inside.part(0) : 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> derangements(int n) {
    std::vector<Permutation> out;
    for (const auto& w : Permutation::all(n))
        if (w.is_derangement()) out.push_back(w);
    return out;
}

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

// Border-strip removal in the beta-set model: with beta_i = lam_i + len-1-i,
// removing a strip of size k means replacing some beta_i by beta_i - k when
// that value is nonnegative and not already a beta number; the strip height
// is the number of beta values jumped over.
Int mn_rec(std::vector<int> lam, const std::vector<int>& rho, size_t ri,
           std::map<Key, Int>& memo) {
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    if (ri == rho.size()) return lam.empty() ? Int(1) : Int(0);
    Key key{lam, std::vector<int>(rho.begin() + ri, rho.end())};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int k = rho[ri];
    int len = static_cast<int>(lam.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lam[i] + (len - 1 - i);

    Int total = 0;
    for (int i = 0; i < len; ++i) {
        int target = beta[i] - k;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < len; ++j) {
            if (j == i) continue;
            if (beta[j] == target) { occupied = true; break; }
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> nl(len);
        for (int j = 0; j < len; ++j) nl[j] = nb[j] - (len - 1 - j);
        Int sub = mn_rec(std::move(nl), rho, ri + 1, memo);
        if (height % 2 == 0)
            total += sub;
        else
            total -= sub;
    }
    memo[key] = total;
    return total;
}

std::mutex& mn_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

Int mn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size())
        throw std::invalid_argument("mn_character: |lambda| != |rho|");
    std::lock_guard<std::mutex> lock(mn_mutex());
    static std::map<Key, Int> memo;
    return mn_rec(lambda.parts(), rho.parts(), 0, memo);
}

Int centralizer_order(const Partition& rho) {
    std::map<int, int> mult;
    for (int p : rho.parts()) ++mult[p];
    Int z = 1;
    for (auto [part, m] : mult) z *= int_pow(part, m) * factorial(m);
    return z;
}

Permutation permutation_with_cycle_type(const Partition& rho) {
    std::vector<int> w;
    int start = 1;
    for (int len : rho.parts()) {
        for (int i = 0; i < len; ++i)
            w.push_back(start + ((i + 1) % len));
        start += len;
    }
    return Permutation(std::move(w));
}

}  // namespace bpp::combinat
