#include "glvar/json_io.hpp"

#include <stdexcept>

namespace glvar {

namespace {

std::vector<int> int_row(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("expected an array of integers");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw std::invalid_argument("expected an integer partition part");
        out.push_back(v.get<int>());
    }
    return out;
}

// raw entries in array order (declaration order, no canonical sort)
std::vector<Partition> raw_entries(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("expected a tuple of partitions");
    std::vector<Partition> out;
    for (const auto& e : j)
        out.push_back(Partition(int_row(e)));
    return out;
}

} // namespace

Json partition_to_json(const Partition& p) {
    Json j = Json::array();
    for (int part : p.parts())
        j.push_back(part);
    return j;
}

Partition partition_from_json(const Json& j) {
    return Partition(int_row(j));
}

Json tuple_to_json(const PartitionTuple& t) {
    Json j = Json::array();
    for (const Partition& p : t.entries())
        j.push_back(partition_to_json(p));
    return j;
}

PartitionTuple tuple_from_json(const Json& j) {
    return PartitionTuple(raw_entries(j));
}

Json ideal_to_json(const Ideal& I) {
    Json j;
    j["vars"] = I.ring->vars();
    j["weights"] = I.ring->weights();
    Json gens = Json::array();
    for (const Polynomial& g : I.gens)
        gens.push_back(g.str());
    j["gens"] = std::move(gens);
    return j;
}

Ideal ideal_from_json(const Json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    std::vector<long> weights;
    if (j.contains("weights"))
        weights = j.at("weights").get<std::vector<long>>();
    RingPtr ring = make_ring(std::move(vars), std::move(weights));
    std::vector<Polynomial> gens;
    if (j.contains("gens"))
        for (const auto& g : j.at("gens"))
            gens.push_back(parse_poly(g.get<std::string>(), ring));
    return Ideal{ring, std::move(gens)};
}

std::vector<FormSymbol> symbols_from_json(const Json& tuple_json,
                                          const std::vector<std::string>& names) {
    std::vector<Partition> entries = raw_entries(tuple_json);
    std::vector<FormSymbol> out;
    if (!names.empty()) {
        if (names.size() != entries.size())
            throw std::invalid_argument("one symbol name per tuple entry required");
        for (size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].rows() > 1)
                throw std::invalid_argument("multi-row entry " + entries[i].str());
            out.push_back({names[i], entries[i].size()});
        }
        return out;
    }
    // default pools in declaration order
    static const std::vector<std::string> pool1 = {"x", "y", "z", "u", "v", "w"};
    static const std::vector<std::string> pool2 = {"f", "g", "h", "p", "q", "r"};
    size_t used1 = 0, used2 = 0;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].rows() > 1)
            throw std::invalid_argument("multi-row entry " + entries[i].str());
        int w = entries[i].size();
        if (w == 1 && used1 < pool1.size())
            out.push_back({pool1[used1++], 1});
        else if (w == 2 && used2 < pool2.size())
            out.push_back({pool2[used2++], 2});
        else
            out.push_back({"s" + std::to_string(i + 1), w});
    }
    return out;
}

Json map_to_json(const WeightedMap& f) {
    Json j;
    Json src = Json::array(), tgt = Json::array();
    Json snames = Json::array(), tnames = Json::array();
    for (const FormSymbol& s : f.source_symbols()) {
        src.push_back(s.weight == 0 ? Json::array()
                                    : partition_to_json(Partition(std::vector<int>{s.weight})));
        snames.push_back(s.name);
    }
    for (const FormSymbol& s : f.target_symbols()) {
        tgt.push_back(s.weight == 0 ? Json::array()
                                    : partition_to_json(Partition(std::vector<int>{s.weight})));
        tnames.push_back(s.name);
    }
    j["source"] = std::move(src);
    j["target"] = std::move(tgt);
    j["symbols"] = std::move(snames);
    j["target_symbols"] = std::move(tnames);
    if (!f.coeff_symbols().empty())
        j["coeff_symbols"] = f.coeff_symbols();
    Json bodies = Json::array();
    for (const Polynomial& b : f.bodies())
        bodies.push_back(b.str());
    j["bodies"] = std::move(bodies);
    return j;
}

WeightedMap map_from_json(const Json& j) {
    std::vector<std::string> snames, tnames;
    if (j.contains("symbols"))
        snames = j.at("symbols").get<std::vector<std::string>>();
    if (j.contains("target_symbols"))
        tnames = j.at("target_symbols").get<std::vector<std::string>>();
    std::vector<FormSymbol> src = symbols_from_json(j.at("source"), snames);
    std::vector<FormSymbol> tgt = symbols_from_json(j.at("target"), tnames);
    // keep target names clear of source names (they share no ring, but
    // default pools would repeat)
    if (tnames.empty()) {
        for (FormSymbol& t : tgt) {
            bool clash = true;
            while (clash) {
                clash = false;
                for (const FormSymbol& s : src)
                    if (s.name == t.name) {
                        t.name += "'";
                        clash = true;
                    }
            }
        }
    }
    std::vector<std::string> coeffs;
    if (j.contains("coeff_symbols"))
        coeffs = j.at("coeff_symbols").get<std::vector<std::string>>();
    std::vector<std::string> bodies = j.at("bodies").get<std::vector<std::string>>();
    return WeightedMap::from_text(std::move(src), std::move(tgt), bodies, std::move(coeffs));
}

LevelFamily family_from_json(const Json& j) {
    std::vector<std::string> names;
    if (j.contains("symbols"))
        names = j.at("symbols").get<std::vector<std::string>>();
    const Json& recipe = j.at("recipe");
    std::string kind = recipe.at("kind").get<std::string>();
    LevelFamily fam = [&] {
        if (kind == "minors")
            return LevelFamily::minors(recipe.at("r").get<int>(),
                                       names.empty() ? "u" : names.front());
        std::vector<FormSymbol> symbols = symbols_from_json(j.at("tuple"), names);
        if (kind == "ambient")
            return LevelFamily::ambient(std::move(symbols));
        if (kind == "point")
            return LevelFamily::point(std::move(symbols));
        if (kind == "orbit")
            return LevelFamily::orbit(
                std::move(symbols),
                recipe.at("generators").get<std::vector<std::string>>(),
                recipe.at("indices").get<std::vector<std::string>>());
        if (kind == "map_image")
            return LevelFamily::map_image(map_from_json(recipe.at("map")));
        throw std::invalid_argument("unknown recipe kind '" + kind + "'");
    }();
    if (j.contains("shift")) {
        std::vector<std::string> shift_names;
        if (j.contains("shift_names"))
            shift_names = j.at("shift_names").get<std::vector<std::string>>();
        fam = fam.shifted(j.at("shift").get<int>(), std::move(shift_names));
    }
    return fam;
}

} // namespace glvar
