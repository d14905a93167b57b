#include "symgeo/recipe.hpp"

#include "symgeo/common.hpp"

#include <cstdio>

namespace symgeo {

namespace {

RecipePtr own(Recipe&& r) { return std::make_shared<const Recipe>(std::move(r)); }

} // namespace

RecipePtr base(std::string block, std::vector<i64> params) {
    Recipe r;
    r.op = Op::Base;
    r.block = std::move(block);
    r.params = std::move(params);
    return own(std::move(r));
}

RecipePtr sum(RecipePtr left, std::string left_surface, RecipePtr right,
              std::string right_surface, std::vector<GluingPair> gluing) {
    Recipe r;
    r.op = Op::Sum;
    r.left = std::move(left);
    r.left_surface = std::move(left_surface);
    r.right = std::move(right);
    r.right_surface = std::move(right_surface);
    r.gluing = std::move(gluing);
    return own(std::move(r));
}

RecipePtr luttinger(RecipePtr child, std::string torus, std::string curve, int sign) {
    if (curve != "m" && curve != "l") throw Error("luttinger curve must be \"m\" or \"l\"");
    if (sign != 1 && sign != -1) throw Error("luttinger sign must be +1 or -1");
    Recipe r;
    r.op = Op::Luttinger;
    r.child = std::move(child);
    r.torus = std::move(torus);
    r.curve = std::move(curve);
    r.sign = sign;
    return own(std::move(r));
}

RecipePtr blow_up(RecipePtr child, std::optional<std::string> at) {
    Recipe r;
    r.op = Op::BlowUp;
    r.child = std::move(child);
    r.at = std::move(at);
    return own(std::move(r));
}

RecipePtr resolve(RecipePtr child, std::vector<std::string> components, i64 intersections) {
    Recipe r;
    r.op = Op::Resolve;
    r.child = std::move(child);
    r.components = std::move(components);
    r.intersections = intersections;
    return own(std::move(r));
}

nlohmann::ordered_json word_to_json(const Word& w) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& l : w.letters()) {
        a.push_back(l.gen);
        a.push_back(l.exp);
    }
    return a;
}

Word word_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() % 2 != 0) throw Error("word json must be a flat [gen, exp, ...] array");
    Word w;
    for (size_t i = 0; i < j.size(); i += 2) {
        if (!j[i].is_string() || !j[i + 1].is_number_integer())
            throw Error("word json must alternate generator names and integer exponents");
        w.push(Letter{j[i].get<std::string>(), j[i + 1].get<i64>()});
    }
    return w;
}

nlohmann::ordered_json recipe_to_json(const Recipe& r) {
    nlohmann::ordered_json j;
    switch (r.op) {
    case Op::Base: {
        j["op"] = "base";
        j["block"] = r.block;
        j["params"] = r.params;
        break;
    }
    case Op::Sum: {
        j["op"] = "sum";
        j["left"] = recipe_to_json(*r.left);
        j["leftSurface"] = r.left_surface;
        j["right"] = recipe_to_json(*r.right);
        j["rightSurface"] = r.right_surface;
        auto g = nlohmann::ordered_json::array();
        for (const auto& p : r.gluing) {
            nlohmann::ordered_json e;
            e["a"] = word_to_json(p.a);
            e["b"] = word_to_json(p.b);
            e["sign"] = p.sign;
            g.push_back(std::move(e));
        }
        j["gluing"] = std::move(g);
        break;
    }
    case Op::Luttinger: {
        j["op"] = "luttinger";
        j["child"] = recipe_to_json(*r.child);
        j["torus"] = r.torus;
        j["curve"] = r.curve;
        j["sign"] = r.sign;
        break;
    }
    case Op::BlowUp: {
        j["op"] = "blowup";
        j["child"] = recipe_to_json(*r.child);
        if (r.at) j["at"] = *r.at;
        break;
    }
    case Op::Resolve: {
        j["op"] = "resolve";
        j["child"] = recipe_to_json(*r.child);
        j["components"] = r.components;
        j["intersections"] = r.intersections;
        break;
    }
    }
    return j;
}

RecipePtr recipe_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("op")) throw Error("recipe json must be an object with \"op\"");
    const std::string op = j.at("op").get<std::string>();
    if (op == "base") {
        std::vector<i64> params;
        if (j.contains("params")) params = j.at("params").get<std::vector<i64>>();
        return base(j.at("block").get<std::string>(), std::move(params));
    }
    if (op == "sum") {
        std::vector<GluingPair> gluing;
        if (j.contains("gluing"))
            for (const auto& e : j.at("gluing")) {
                GluingPair p;
                p.a = word_from_json(e.at("a"));
                p.b = word_from_json(e.at("b"));
                p.sign = e.value("sign", 1);
                gluing.push_back(std::move(p));
            }
        return sum(recipe_from_json(j.at("left")), j.at("leftSurface").get<std::string>(),
                   recipe_from_json(j.at("right")), j.at("rightSurface").get<std::string>(),
                   std::move(gluing));
    }
    if (op == "luttinger")
        return luttinger(recipe_from_json(j.at("child")), j.at("torus").get<std::string>(),
                         j.at("curve").get<std::string>(), j.at("sign").get<int>());
    if (op == "blowup") {
        std::optional<std::string> at;
        if (j.contains("at") && !j.at("at").is_null()) at = j.at("at").get<std::string>();
        return blow_up(recipe_from_json(j.at("child")), std::move(at));
    }
    if (op == "resolve")
        return resolve(recipe_from_json(j.at("child")),
                       j.at("components").get<std::vector<std::string>>(),
                       j.at("intersections").get<i64>());
    throw Error("unknown recipe op: " + op);
}

std::string recipe_id(const Recipe& r) {
    const std::string dump = recipe_to_json(r).dump();
    u64 h = 14695981039346656037ull;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "r%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace symgeo
