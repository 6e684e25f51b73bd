#include "isotor/json_io.hpp"

namespace isotor {

Json int_to_json(const Int& n) { return n.get_str(); }

Json rat_to_json(const Rat& r) { return rat_to_string(r); }

Json quad_to_json(const QuadElem& x) {
    Json j;
    j["p"] = std::to_string(x.p);
    j["u"] = x.u.get_str();
    j["v"] = x.v.get_str();
    return j;
}

QuadElem quad_from_json(const Json& j) {
    return QuadElem(std::stol(j.at("p").get<std::string>()),
                    Int(j.at("u").get<std::string>()),
                    Int(j.at("v").get<std::string>()));
}

Json biseries_to_json(const BiSeries& f) {
    Json j;
    j["level"] = f.level;
    j["precision"] = f.precision;
    j["weight"] = {f.weight1, f.weight2};
    Json coeffs = Json::array();
    for (const auto& [mm, c] : f.coeffs) coeffs.push_back({mm.first, mm.second, rat_to_string(c)});
    j["coeffs"] = std::move(coeffs);
    if (f.component_eps) j["component"] = *f.component_eps;
    return j;
}

BiSeries biseries_from_json(const Json& j) {
    auto weight = j.at("weight");
    BiSeries f(j.at("level").get<long>(), j.at("precision").get<long>(),
               weight.at(0).get<long>(), weight.at(1).get<long>());
    for (const auto& row : j.at("coeffs"))
        f.set(row.at(0).get<long>(), row.at(1).get<long>(),
              rat_from_string(row.at(2).get<std::string>()));
    if (j.contains("component")) f.component_eps = j.at("component").get<long>();
    return f;
}

Json uniseries_to_json(const UniSeriesQ& f) {
    Json j;
    j["level"] = f.level;
    j["precision"] = f.precision;
    j["weight"] = f.weight;
    Json coeffs = Json::array();
    for (const auto& [m, c] : f.coeffs) coeffs.push_back({m, rat_to_string(c)});
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json uniseries_to_json(const UniSeriesK& f) {
    Json j;
    j["level"] = f.level;
    j["precision"] = f.precision;
    j["weight"] = f.weight;
    Json coeffs = Json::array();
    for (const auto& [m, c] : f.coeffs) coeffs.push_back({m, quad_to_json(c)});
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json tupleform_to_json(const TupleForm& f) {
    Json j;
    j["level"] = f.level;
    j["precision"] = f.precision;
    j["weight"] = {f.weight1, f.weight2};
    Json comps = Json::object();
    for (const auto& [eps, s] : f.components) comps[std::to_string(eps)] = biseries_to_json(s);
    j["components"] = std::move(comps);
    return j;
}

} // namespace isotor
