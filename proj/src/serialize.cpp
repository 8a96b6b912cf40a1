#include "bpp/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bpp::serialize {

Format parse_format(const std::string& name) {
    if (name == "plain") return Format::kPlain;
    if (name == "json") return Format::kJson;
    if (name == "latex") return Format::kLatex;
    throw std::invalid_argument("unknown format: " + name);
}

ordered_json partition_json(const combinat::Partition& p) {
    ordered_json a = ordered_json::array();
    for (int v : p.parts()) a.push_back(v);
    return a;
}

ordered_json multipoly_json(const polyring::MultiPoly& p) {
    ordered_json j;
    j["nx"] = p.nx();
    if (p.has_y()) j["ny"] = p.ny();
    ordered_json terms = ordered_json::array();
    for (const auto& t : p.sorted_terms()) {
        ordered_json term;
        term["q"] = t.q;
        term["x"] = t.x;
        if (p.has_y()) term["y"] = t.y;
        term["c"] = to_decimal(t.coeff);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

ordered_json schur_expansion_json(const symexpand::SchurExpansion& e) {
    ordered_json j;
    j["n"] = e.n;
    ordered_json terms = ordered_json::array();
    for (const auto& [lam, c] : e.terms) {
        ordered_json term;
        term["lambda"] = partition_json(lam);
        term["coeff"] = to_decimal(c);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

ordered_json double_schur_expansion_json(
    const symexpand::DoubleSchurExpansion& e) {
    ordered_json j;
    j["n"] = e.n;
    j["m"] = e.m;
    ordered_json terms = ordered_json::array();
    for (const auto& [key, c] : e.terms) {
        ordered_json term;
        term["lambda"] = partition_json(key.first);
        term["mu"] = partition_json(key.second);
        term["coeff"] = to_decimal(c);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

ordered_json schur_vector_json(const schurbasis::SchurVector& v) {
    ordered_json terms = ordered_json::array();
    for (const auto& [lam, c] : v.terms()) {
        ordered_json term;
        term["lambda"] = partition_json(lam);
        term["coeff"] = to_decimal(c);
        terms.push_back(std::move(term));
    }
    ordered_json j;
    j["terms"] = std::move(terms);
    return j;
}

ordered_json graded_series_json(const schurbasis::GradedSchurSeries& g) {
    ordered_json terms = ordered_json::array();
    for (const auto& [key, c] : g.terms()) {
        auto [q, t, lam] = key;
        ordered_json term;
        term["q"] = q;
        term["t"] = t;
        term["lambda"] = partition_json(lam);
        term["coeff"] = to_decimal(c);
        terms.push_back(std::move(term));
    }
    ordered_json j;
    j["terms"] = std::move(terms);
    return j;
}

ordered_json filling_json(const lascoux::RFFilling& t) {
    ordered_json j;
    j["shape"] = partition_json(t.shape);
    j["rows"] = t.rows;
    return j;
}

ordered_json path_family_json(const lascoux::PathFamily& f) {
    ordered_json j;
    j["n"] = f.n;
    j["mu"] = partition_json(f.mu);
    ordered_json paths = ordered_json::array();
    for (size_t i = 0; i < f.steps.size(); ++i) {
        ordered_json p;
        auto [sx, sy] = f.start(static_cast<int>(i));
        auto [ex, ey] = f.end(static_cast<int>(i));
        p["from"] = {sx, sy};
        p["to"] = {ex, ey};
        std::string word;
        for (bool north : f.steps[i]) word.push_back(north ? 'N' : 'E');
        p["steps"] = word;
        paths.push_back(std::move(p));
    }
    j["paths"] = std::move(paths);
    return j;
}

std::string latex_partition(const combinat::Partition& p) {
    if (p.empty()) return "\\varnothing";
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.parts().size(); ++i) {
        if (i) os << ",";
        os << p.parts()[i];
    }
    os << ")";
    return os.str();
}

namespace {

void latex_coeff(std::ostringstream& os, const Int& c, bool first,
                 bool lone_term) {
    Int a = c;
    if (first) {
        if (a < 0) {
            os << "-";
            a = -a;
        }
    } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
    }
    if (a != 1 || lone_term) os << a.str();
}

}  // namespace

std::string latex_schur_vector(const schurbasis::SchurVector& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : v.terms()) {
        bool lone = lam.empty();
        latex_coeff(os, c, first, lone);
        first = false;
        if (!lone) os << "s_{" << latex_partition(lam) << "}";
    }
    return os.str();
}

std::string latex_schur_expansion(const symexpand::SchurExpansion& e) {
    schurbasis::SchurVector v;
    for (const auto& [lam, c] : e.terms) v.add(lam, c);
    return latex_schur_vector(v);
}

std::string latex_double_expansion(const symexpand::DoubleSchurExpansion& e) {
    if (e.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : e.terms) {
        bool lone = key.first.empty() && key.second.empty();
        latex_coeff(os, c, first, lone);
        first = false;
        if (!key.first.empty())
            os << "s_{" << latex_partition(key.first) << "}(X)";
        if (!key.second.empty())
            os << "s_{" << latex_partition(key.second) << "}(Y)";
    }
    return os.str();
}

std::string latex_graded_series(const schurbasis::GradedSchurSeries& g) {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : g.terms()) {
        auto [q, t, lam] = key;
        bool lone = lam.empty() && q == 0 && t == 0;
        latex_coeff(os, c, first, lone);
        first = false;
        if (q > 0) {
            os << "q";
            if (q > 1) os << "^{" << q << "}";
        }
        if (t > 0) {
            os << "t";
            if (t > 1) os << "^{" << t << "}";
        }
        if (!lam.empty() || (q == 0 && t == 0 && !lone))
            os << "s_{" << latex_partition(lam) << "}";
    }
    return os.str();
}

std::string latex_multipoly(const polyring::MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.sorted_terms()) {
        bool lone = t.q == 0 &&
                    std::all_of(t.x.begin(), t.x.end(), [](int e) { return e == 0; }) &&
                    std::all_of(t.y.begin(), t.y.end(), [](int e) { return e == 0; });
        latex_coeff(os, t.coeff, first, lone);
        first = false;
        if (t.q > 0) {
            os << "q";
            if (t.q > 1) os << "^{" << t.q << "}";
        }
        for (size_t i = 0; i < t.x.size(); ++i)
            if (t.x[i] > 0) {
                os << "x_{" << i + 1 << "}";
                if (t.x[i] > 1) os << "^{" << t.x[i] << "}";
            }
        for (size_t j = 0; j < t.y.size(); ++j)
            if (t.y[j] > 0) {
                os << "y_{" << j + 1 << "}";
                if (t.y[j] > 1) os << "^{" << t.y[j] << "}";
            }
    }
    return os.str();
}

}  // namespace bpp::serialize
