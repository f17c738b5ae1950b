#include "kevac/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace kevac {

using nlohmann::json;

namespace {

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
    }
}

template <class T>
T field(const json& obj, const char* key, const char* what) {
    if (!obj.is_object() || !obj.contains(key))
        throw InvalidInput(std::string(what) + ": missing field '" + key + "'");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string(what) + ": bad field '" + key + "': " + e.what());
    }
}

}  // namespace

const char* to_string(ObjectiveKind kind) {
    return kind == ObjectiveKind::EvacTime ? "evac_time" : "max_regret";
}

std::string instance_to_json(const PathInstance& inst) {
    json verts = json::array();
    for (int i = 0; i < inst.num_vertices(); ++i) {
        verts.push_back(json{{"x", inst.coords[i]}, {"w_min", inst.wminus[i]},
                             {"w_max", inst.wplus[i]}});
    }
    json doc{{"vertices", std::move(verts)}, {"capacity", inst.capacity}, {"tau", inst.tau}};
    return doc.dump(2) + "\n";
}

PathInstance instance_from_json(const std::string& text) {
    const json doc = parse(text, "instance");
    const auto verts = field<json>(doc, "vertices", "instance");
    if (!verts.is_array()) throw InvalidInput("instance: 'vertices' must be an array");
    PathInstance inst;
    for (const auto& v : verts) {
        inst.coords.push_back(field<Coord>(v, "x", "instance vertex"));
        inst.wminus.push_back(field<Weight>(v, "w_min", "instance vertex"));
        inst.wplus.push_back(field<Weight>(v, "w_max", "instance vertex"));
    }
    inst.capacity = field<std::int64_t>(doc, "capacity", "instance");
    inst.tau = field<std::int64_t>(doc, "tau", "instance");
    return inst;
}

std::string plan_to_json(const PlanRecord& rec) {
    json parts = json::array();
    for (const auto& p : rec.plan.parts()) parts.push_back(json{{"l", p.l}, {"r", p.r}, {"sink", p.sink}});
    json doc{{"parts", std::move(parts)},
             {"objective", rec.objective},
             {"objective_kind", to_string(rec.kind)}};
    return doc.dump(2) + "\n";
}

PlanRecord plan_from_json(const std::string& text) {
    const json doc = parse(text, "plan");
    const auto parts_json = field<json>(doc, "parts", "plan");
    if (!parts_json.is_array() || parts_json.empty())
        throw InvalidInput("plan: 'parts' must be a non-empty array");
    std::vector<Part> parts;
    for (const auto& p : parts_json) {
        parts.push_back(Part{field<int>(p, "l", "plan part"), field<int>(p, "r", "plan part"),
                             field<int>(p, "sink", "plan part")});
    }
    PlanRecord rec;
    const int n = parts.back().r;
    rec.plan = Plan(std::move(parts), n);
    rec.objective = field<Time>(doc, "objective", "plan");
    const auto kind = field<std::string>(doc, "objective_kind", "plan");
    if (kind == "evac_time") {
        rec.kind = ObjectiveKind::EvacTime;
    } else if (kind == "max_regret") {
        rec.kind = ObjectiveKind::MaxRegret;
    } else {
        throw InvalidInput("plan: unknown objective_kind '" + kind + "'");
    }
    return rec;
}

std::string scenario_to_json(const Scenario& s) { return json{{"weights", s.weights}}.dump() + "\n"; }

Scenario scenario_from_json(const std::string& text) {
    const json doc = parse(text, "scenario");
    return Scenario{field<std::vector<Weight>>(doc, "weights", "scenario")};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw InvalidInput("failed writing '" + path + "'");
}

}  // namespace kevac
