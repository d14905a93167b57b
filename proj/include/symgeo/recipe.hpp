#pragma once

#include "symgeo/word.hpp"

#include <json.hpp>

#include <memory>
#include <optional>

namespace symgeo {

// A construction plan is an immutable tree. Leaves name catalog blocks; the
// interior nodes are the four operations the evaluator knows how to apply.
enum class Op { Base, Sum, Luttinger, BlowUp, Resolve };

// One identified curve pair for a fiber sum: the image of `a` (left side) is
// glued to b^sign (right side). An empty gluing list means the default
// convention for the surface type applies.
struct GluingPair {
    Word a;
    Word b;
    int sign = 1;
};

struct Recipe;
using RecipePtr = std::shared_ptr<const Recipe>;

struct Recipe {
    Op op = Op::Base;

    // Base
    std::string block;
    std::vector<i64> params;

    // Sum
    RecipePtr left;
    RecipePtr right;
    std::string left_surface;
    std::string right_surface;
    std::vector<GluingPair> gluing;

    // Luttinger / BlowUp / Resolve
    RecipePtr child;
    std::string torus;
    std::string curve; // "m" or "l"
    int sign = 1;
    std::optional<std::string> at;
    std::vector<std::string> components;
    i64 intersections = 0;
};

RecipePtr base(std::string block, std::vector<i64> params = {});
RecipePtr sum(RecipePtr left, std::string left_surface, RecipePtr right,
              std::string right_surface, std::vector<GluingPair> gluing = {});
RecipePtr luttinger(RecipePtr child, std::string torus, std::string curve, int sign);
RecipePtr blow_up(RecipePtr child, std::optional<std::string> at = std::nullopt);
RecipePtr resolve(RecipePtr child, std::vector<std::string> components, i64 intersections);

// Words serialize as flat [gen, exp, gen, exp, ...] arrays.
nlohmann::ordered_json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);

nlohmann::ordered_json recipe_to_json(const Recipe& r);
RecipePtr recipe_from_json(const nlohmann::json& j);

// Stable content id: "r" + FNV-1a (64 bit, hex) of the canonical JSON dump.
std::string recipe_id(const Recipe& r);

} // namespace symgeo
