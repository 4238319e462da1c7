#include "vko/io.hpp"

#include "vko/error.hpp"

#include <fstream>

namespace vko {

namespace {

Json simplexList(const std::vector<Simplex>& simplices)
{
    Json out = Json::array();
    for (const auto& s : simplices)
        out.push_back(s);
    return out;
}

std::vector<Simplex> parseSimplexList(const Json& j, const char* what)
{
    if (!j.is_array())
        throw InvalidInput(std::string(what) + " must be an array of vertex lists");
    std::vector<Simplex> out;
    for (const auto& s : j) {
        if (!s.is_array())
            throw InvalidInput(std::string(what) + " entries must be vertex lists");
        Simplex simplex;
        for (const auto& v : s) {
            if (!v.is_number_integer())
                throw InvalidInput(std::string(what) + " vertices must be integers");
            simplex.push_back(v.get<int>());
        }
        out.push_back(std::move(simplex));
    }
    return out;
}

Json coordsToJson(const std::vector<RationalVector>& coords)
{
    Json out = Json::array();
    for (const auto& v : coords) {
        Json row = Json::array();
        for (const auto& x : v)
            row.push_back(formatRational(x));
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<RationalVector> coordsFromJson(const Json& j)
{
    if (!j.is_array())
        throw InvalidInput("coords must be an array of coordinate lists");
    std::vector<RationalVector> out;
    for (const auto& row : j) {
        if (!row.is_array())
            throw InvalidInput("coords entries must be lists");
        RationalVector v;
        for (const auto& x : row) {
            if (x.is_string())
                v.push_back(parseRational(x.get<std::string>()));
            else if (x.is_number_integer())
                v.push_back(Rational(Integer(std::to_string(x.get<long long>()))));
            else
                throw InvalidInput("coordinates must be \"a/b\" strings or integers");
        }
        out.push_back(std::move(v));
    }
    return out;
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw InvalidInput(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int intField(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        throw InvalidInput(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

SimplicialComplex complexRef(const Json& j, const std::filesystem::path& baseDir)
{
    if (j.is_string())
        return complexFromJson(readJsonFile(baseDir / j.get<std::string>()));
    return complexFromJson(j);
}

} // namespace

Json complexToJson(const SimplicialComplex& k)
{
    Json j;
    j["name"] = k.name();
    j["vertex_count"] = k.vertexCount();
    j["maximal_simplices"] = simplexList(k.maximalSimplices());
    Json marked = Json::object();
    for (const auto& [label, simplices] : k.marked())
        marked[label] = simplexList(simplices);
    j["marked"] = std::move(marked);
    return j;
}

SimplicialComplex complexFromJson(const Json& j)
{
    const int n = intField(j, "vertex_count");
    auto maximal = parseSimplexList(field(j, "maximal_simplices"), "maximal_simplices");
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw InvalidInput("name must be a string");
        name = j["name"].get<std::string>();
    }
    auto k = SimplicialComplex::fromMaximal(n, std::move(maximal), name);
    if (j.contains("marked")) {
        if (!j["marked"].is_object())
            throw InvalidInput("marked must be an object");
        for (const auto& [label, list] : j["marked"].items())
            k.mark(label, parseSimplexList(list, "marked subcomplex"));
    }
    return k;
}

Json mapToJson(const PLMap& f)
{
    Json j;
    j["complex"] = complexToJson(f.complex());
    j["d"] = f.ambientDim();
    j["coords"] = coordsToJson(f.coords());
    return j;
}

PLMap mapFromJson(const Json& j, const std::filesystem::path& baseDir)
{
    return PLMap(complexRef(field(j, "complex"), baseDir), intField(j, "d"), coordsFromJson(field(j, "coords")));
}

Json ornamentToJson(const Ornament& orn)
{
    Json j;
    j["d"] = orn.d;
    j["name"] = orn.name;
    Json comps = Json::array();
    for (const auto& c : orn.components) {
        Json cj;
        cj["complex"] = complexToJson(c.complex);
        cj["coords"] = coordsToJson(c.coords);
        cj["orientation"] = c.orientation;
        comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);
    return j;
}

Ornament ornamentFromJson(const Json& j, const std::filesystem::path& baseDir)
{
    Ornament orn;
    orn.d = intField(j, "d");
    if (j.contains("name") && j["name"].is_string())
        orn.name = j["name"].get<std::string>();
    const Json& comps = field(j, "components");
    if (!comps.is_array())
        throw InvalidInput("components must be an array");
    for (const auto& cj : comps) {
        OrnamentComponent c;
        c.complex = complexRef(field(cj, "complex"), baseDir);
        c.coords = coordsFromJson(field(cj, "coords"));
        c.orientation = cj.contains("orientation") ? intField(cj, "orientation") : 1;
        orn.components.push_back(std::move(c));
    }
    return orn;
}

Json reportToJson(const ObstructionReport& rep, bool includeWitness)
{
    Json j;
    j["k"] = rep.k;
    j["r"] = rep.r;
    j["d"] = rep.d;
    j["ring"] = rep.ring == Ring::Z ? "Z" : "Z2";
    j["class_trivial"] = rep.classTrivial;
    j["cocycle_support"] = rep.cocycleSupport;
    j["verdict"] = rep.verdict;
    j["seed"] = rep.seed;
    j["map_attempts"] = rep.mapAttempts;
    j["degenerate"] = rep.degenerate;
    j["prime_power"] = rep.primePower;
    j["top_orbits"] = rep.topOrbits;
    j["unknowns"] = rep.unknowns;
    j["cocycle_condition"] = rep.cocycleCondition;
    j["cocycle_equivariant"] = rep.cocycleEquivariant;
    if (rep.certificate)
        j["unsolvability_certificate"] = rep.certificate->describe();
    const bool haveWitness = rep.witness.has_value() || rep.witness2.has_value();
    j["witness_included"] = includeWitness && haveWitness;
    if (includeWitness && rep.witness) {
        Json w = Json::array();
        for (const auto& x : *rep.witness)
            w.push_back(x.get_str());
        j["witness"] = std::move(w);
    } else if (includeWitness && rep.witness2) {
        Json w = Json::array();
        for (auto x : *rep.witness2)
            w.push_back(std::to_string(x));
        j["witness"] = std::move(w);
    }
    return j;
}

Json readJsonFile(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput("malformed JSON in " + path.string() + ": " + e.what());
    }
}

} // namespace vko
