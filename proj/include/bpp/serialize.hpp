#ifndef BPP_SERIALIZE_HPP
#define BPP_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "bpp/combinat.hpp"
#include "bpp/frobmod.hpp"
#include "bpp/lascoux.hpp"
#include "bpp/polyring.hpp"
#include "bpp/schurbasis.hpp"
#include "bpp/symexpand.hpp"

namespace bpp::serialize {

using nlohmann::ordered_json;

enum class Format { kPlain, kJson, kLatex };

Format parse_format(const std::string& name);  // "plain" | "json" | "latex"

// Partitions serialize as JSON arrays of integers; the empty shape as [].
ordered_json partition_json(const combinat::Partition& p);

// Term objects {"q":..,"x":[..],"y":[..]?,"c":"<decimal>"} in ascending
// lexicographic (q, x, y) order; coefficients are decimal strings.
ordered_json multipoly_json(const polyring::MultiPoly& p);

// {"n":..,"terms":[{"lambda":[..],"coeff":".."}]} in graded-lex order.
ordered_json schur_expansion_json(const symexpand::SchurExpansion& e);
ordered_json double_schur_expansion_json(const symexpand::DoubleSchurExpansion& e);
ordered_json schur_vector_json(const schurbasis::SchurVector& v);

// {"terms":[{"q":..,"t":..,"lambda":[..],"coeff":".."}]} sorted by
// (q, t, |lambda|, lex).
ordered_json graded_series_json(const schurbasis::GradedSchurSeries& g);

ordered_json filling_json(const lascoux::RFFilling& t);
ordered_json path_family_json(const lascoux::PathFamily& f);

// LaTeX renderings in the style of Schur-sum displays.
std::string latex_partition(const combinat::Partition& p);
std::string latex_schur_vector(const schurbasis::SchurVector& v);
std::string latex_schur_expansion(const symexpand::SchurExpansion& e);
std::string latex_double_expansion(const symexpand::DoubleSchurExpansion& e);
std::string latex_graded_series(const schurbasis::GradedSchurSeries& g);
std::string latex_multipoly(const polyring::MultiPoly& p);

}  // namespace bpp::serialize

#endif
