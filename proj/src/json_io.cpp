#include "ordlab/json_io.hpp"

namespace ordlab {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json pl_to_json(const PLHomeo& f) {
    ordered_json breaks = ordered_json::array();
    for (std::size_t i = 0; i < f.breakpoints().size(); ++i)
        breaks.push_back({rat_str(f.breakpoints()[i]), rat_str(f.values()[i])});
    return {{"breaks", breaks},
            {"ltail", rat_str(f.left_tail_slope())},
            {"rtail", rat_str(f.right_tail_slope())}};
}

PLHomeo pl_from_json(const json& j) {
    std::vector<std::pair<Rat, Rat>> pts;
    for (const auto& pair : j.at("breaks"))
        pts.emplace_back(rat_parse(pair.at(0).get<std::string>()),
                         rat_parse(pair.at(1).get<std::string>()));
    return PLHomeo(std::move(pts), rat_parse(j.at("ltail").get<std::string>()),
                   rat_parse(j.at("rtail").get<std::string>()));
}

ordered_json affine_to_json(const AffineMap& f) {
    return {{"a", rat_str(f.a)}, {"b", rat_str(f.b)}};
}

AffineMap affine_from_json(const json& j) {
    return {rat_parse(j.at("a").get<std::string>()), rat_parse(j.at("b").get<std::string>())};
}

ordered_json element_to_json(const GroupElement& g) {
    return {{"t", g.t}, {"s", g.s}, {"d", g.d.str()}};
}

GroupElement element_from_json(const json& j) {
    return {j.at("t").get<long>(), j.at("s").get<long>(),
            Dyadic::parse(j.at("d").get<std::string>())};
}

SearchParams params_from_json(const json& j) {
    SearchParams p;
    p.epsilon = rat_parse(j.at("epsilon").get<std::string>());
    p.grid_N = j.at("grid_N").get<long>();
    p.delta = rat_parse(j.at("delta").get<std::string>());
    p.M = rat_parse(j.at("M").get<std::string>());
    p.theta = rat_parse(j.at("theta").get<std::string>());
    p.lambda = rat_parse(j.at("lambda").get<std::string>());
    p.n = j.at("n").get<long>();
    p.m = j.value("m", 0l);
    return p;
}

ordered_json params_to_json(const SearchParams& p) {
    return {{"epsilon", rat_str(p.epsilon)}, {"grid_N", p.grid_N},
            {"delta", rat_str(p.delta)},     {"M", rat_str(p.M)},
            {"theta", rat_str(p.theta)},     {"lambda", rat_str(p.lambda)},
            {"n", p.n},                      {"m", p.m}};
}

} // namespace ordlab
