#include "entrocone/json_io.hpp"

#include <fstream>
#include <sstream>

namespace entrocone {

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing key '") + key + "'");
    return j.at(key);
}

} // namespace

Json indexing_to_json(const IndexingCategory& cat) {
    Json j;
    j["objects"] = cat.objects();
    Json arrows = Json::array();
    for (const auto& [i, k] : cat.covering_arrows())
        arrows.push_back(Json::array({cat.object(i), cat.object(k)}));
    j["arrows"] = std::move(arrows);
    return j;
}

IndexingCategory indexing_from_json(const Json& j) {
    std::vector<std::string> objects;
    for (const auto& o : require(j, "objects")) objects.push_back(o.get<std::string>());
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const auto& a : require(j, "arrows")) {
        if (!a.is_array() || a.size() != 2) throw ParseError("arrow must be a [from, to] pair");
        arrows.emplace_back(a[0].get<std::string>(), a[1].get<std::string>());
    }
    return IndexingCategory::validate(objects, arrows);
}

Json space_to_json(const Space& s) {
    Json atoms = Json::array();
    for (const auto& a : s.atoms())
        atoms.push_back({{"label", a.label}, {"weight", rational_to_string(a.weight)}});
    return Json{{"atoms", std::move(atoms)}};
}

Space space_from_json(const Json& j) {
    std::vector<Atom> atoms;
    for (const auto& a : require(j, "atoms"))
        atoms.push_back({require(a, "label").get<std::string>(),
                         parse_rational(require(a, "weight").get<std::string>())});
    return Space(std::move(atoms));
}

Json joint_to_json(const JointTable& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"tuple", r.labels}, {"weight", rational_to_string(r.weight)}});
    return Json{{"n", t.n}, {"support", std::move(rows)}};
}

JointTable joint_from_json(const Json& j) {
    JointTable t;
    t.n = require(j, "n").get<int>();
    for (const auto& r : require(j, "support")) {
        JointRow row;
        for (const auto& l : require(r, "tuple")) row.labels.push_back(l.get<std::string>());
        row.weight = parse_rational(require(r, "weight").get<std::string>());
        t.rows.push_back(std::move(row));
    }
    return t;
}

Json diagram_to_json(const Diagram& d) {
    Json j;
    j["indexing"] = indexing_to_json(*d.shape());
    Json spaces = Json::object();
    for (int o = 0; o < d.shape()->size(); ++o)
        spaces[d.shape()->object(o)] = space_to_json(d.space_at(o));
    j["spaces"] = std::move(spaces);
    Json maps = Json::array();
    for (const auto& [i, k] : d.shape()->covering_arrows()) {
        Json m = Json::object();
        const auto& mp = d.map(i, k);
        for (int a = 0; a < d.space_at(i).size(); ++a)
            m[d.space_at(i).atom(a).label] = d.space_at(k).atom(mp[static_cast<size_t>(a)]).label;
        maps.push_back({{"from", d.shape()->object(i)}, {"to", d.shape()->object(k)}, {"map", std::move(m)}});
    }
    j["maps"] = std::move(maps);
    return j;
}

Diagram diagram_from_json(const Json& j) {
    Shape shape = make_shape(indexing_from_json(require(j, "indexing")));
    std::vector<Space> spaces;
    const Json& spaces_json = require(j, "spaces");
    for (int o = 0; o < shape->size(); ++o) {
        const std::string& name = shape->object(o);
        if (!spaces_json.contains(name)) throw ParseError("missing space for object '" + name + "'");
        spaces.push_back(space_from_json(spaces_json.at(name)));
    }
    std::map<std::pair<int, int>, std::vector<int>> maps;
    for (const auto& m : require(j, "maps")) {
        int from = shape->index_of(require(m, "from").get<std::string>());
        int to = shape->index_of(require(m, "to").get<std::string>());
        const Space& src = spaces[static_cast<size_t>(from)];
        const Space& tgt = spaces[static_cast<size_t>(to)];
        std::vector<int> idx(static_cast<size_t>(src.size()), -1);
        const Json& table = require(m, "map");
        for (int a = 0; a < src.size(); ++a) {
            const std::string& label = src.atom(a).label;
            if (!table.contains(label)) throw ParseError("map missing source atom '" + label + "'");
            idx[static_cast<size_t>(a)] = tgt.index_of(table.at(label).get<std::string>());
        }
        maps[{from, to}] = std::move(idx);
    }
    return Diagram(shape, std::move(spaces), maps);
}

Json group_rep_to_json(const GroupRep& rep) {
    Json j;
    j["cyclic_orders"] = rep.cyclic_orders;
    j["terminals"] = rep.terminal_generators;
    if (rep.base != 2) j["base"] = rep.base;
    return j;
}

GroupRep group_rep_from_json(const Json& j) {
    GroupRep rep;
    for (const auto& o : require(j, "cyclic_orders")) rep.cyclic_orders.push_back(o.get<int>());
    for (const auto& t : require(j, "terminals")) {
        std::vector<std::vector<int>> gens;
        for (const auto& g : t) gens.push_back(g.get<std::vector<int>>());
        rep.terminal_generators.push_back(std::move(gens));
    }
    if (j.contains("base")) rep.base = j.at("base").get<int>();
    return rep;
}

Json vector15_to_json(const std::vector<Rational>& coords) {
    Json j = Json::array();
    for (const auto& c : coords) j.push_back(rational_to_string(c));
    return j;
}

std::vector<Rational> vector15_from_json(const Json& j) {
    const Json& arr = j.is_array() ? j : require(j, "coords");
    if (!arr.is_array() || arr.size() != 15) throw ParseError("expected 15 coordinates");
    std::vector<Rational> out;
    for (const auto& c : arr) out.push_back(parse_rational(c.get<std::string>()));
    return out;
}

Diagram diagram_from_any_json(const Json& j) {
    if (j.contains("support")) return full_diagram(joint_from_json(j)).diagram;
    if (j.contains("atoms")) return space_as_diagram(space_from_json(j));
    if (j.contains("cyclic_orders")) return realize(group_diagram_of(group_rep_from_json(j)));
    if (j.contains("indexing")) return diagram_from_json(j);
    throw ParseError("unrecognized diagram file format");
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

std::string file_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    unsigned long long h = 1469598103934665603ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace entrocone
