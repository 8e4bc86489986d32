#include "netmoment/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace netmoment {

namespace {

using nlohmann::json;

double number_at(const json& j, const std::string& where) {
    if (!j.is_number()) throw std::invalid_argument(where + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw std::invalid_argument(where + ": not finite");
    return v;
}

Vec3 vec3_at(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3) {
        throw std::invalid_argument(where + ": expected an array of 3 numbers");
    }
    Vec3 v;
    for (int i = 0; i < 3; ++i) v[i] = number_at(j[i], where + "[" + std::to_string(i) + "]");
    return v;
}

double parse_number(const std::string& s, std::size_t line, const char* column) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    while (first < last && *first == ' ') ++first;
    while (last > first && (last[-1] == ' ' || last[-1] == '\r')) --last;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw std::invalid_argument("field csv line " + std::to_string(line) + ": bad " + column +
                                    " value '" + s + "'");
    }
    return v;
}

std::string axis_name(const EstimatorSpec& s) {
    if (s.component != Component::m3) return "";
    return s.axis == Axis::x1 ? "x1" : "x2";
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

DipoleScene parse_scene(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("scene: malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("scene: top level must be an object");
    UnitSystem units = UnitSystem::natural;
    if (!doc.contains("unit_system")) throw std::invalid_argument("unit_system: missing");
    const auto& u = doc["unit_system"];
    if (u == "si") units = UnitSystem::si;
    else if (u == "natural") units = UnitSystem::natural;
    else throw std::invalid_argument("unit_system: expected \"si\" or \"natural\"");
    if (!doc.contains("height")) throw std::invalid_argument("height: missing");
    const double height = number_at(doc["height"], "height");
    if (!doc.contains("dipoles")) throw std::invalid_argument("dipoles: missing");
    const auto& arr = doc["dipoles"];
    if (!arr.is_array()) throw std::invalid_argument("dipoles: expected an array");
    std::vector<Dipole> dipoles;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = "dipoles[" + std::to_string(i) + "]";
        const auto& d = arr[i];
        if (!d.is_object()) throw std::invalid_argument(where + ": expected an object");
        if (!d.contains("position")) throw std::invalid_argument(where + ".position: missing");
        if (!d.contains("moment")) throw std::invalid_argument(where + ".moment: missing");
        dipoles.push_back({vec3_at(d["position"], where + ".position"),
                           vec3_at(d["moment"], where + ".moment")});
    }
    try {
        return DipoleScene(std::move(dipoles), height, units);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("height: ") + e.what());
    }
}

DipoleScene load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("scene: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scene(ss.str());
}

std::string scene_to_json(const DipoleScene& scene) {
    json doc;
    doc["unit_system"] = scene.units() == UnitSystem::si ? "si" : "natural";
    doc["height"] = scene.height();
    doc["dipoles"] = json::array();
    for (const auto& d : scene.dipoles()) {
        doc["dipoles"].push_back({{"position", d.position}, {"moment", d.moment}});
    }
    return doc.dump(2);
}

void write_field_csv(std::ostream& out, const FieldMap& map) {
    out << "x1,x2,weight,b3\n";
    for (std::size_t i = 0; i < map.samples.size(); ++i) {
        const auto& n = map.grid.nodes[i];
        out << format_double(n.x[0]) << ',' << format_double(n.x[1]) << ','
            << format_double(n.weight) << ',' << format_double(map.samples[i]) << '\n';
    }
}

FieldMap read_field_csv(std::istream& in, std::optional<double> radius, UnitSystem units) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("field csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x1,x2,weight,b3") {
        throw std::invalid_argument("field csv: header must be 'x1,x2,weight,b3'");
    }
    DiskGrid grid;
    std::vector<double> samples;
    double wsum = 0.0;
    static const char* names[4] = {"x1", "x2", "weight", "b3"};
    for (std::size_t ln = 2; std::getline(in, line); ++ln) {
        if (line.empty() || line == "\r") continue;
        double v[4];
        std::size_t start = 0;
        for (int c = 0; c < 4; ++c) {
            const std::size_t comma = line.find(',', start);
            if ((c < 3) == (comma == std::string::npos)) {
                throw std::invalid_argument("field csv line " + std::to_string(ln) +
                                            ": expected 4 columns");
            }
            v[c] = parse_number(line.substr(start, comma - start), ln, names[c]);
            start = comma + 1;
        }
        grid.nodes.push_back({{v[0], v[1]}, v[2]});
        samples.push_back(v[3]);
        wsum += v[2];
    }
    if (samples.empty()) throw std::invalid_argument("field csv: no data rows");
    grid.radius = radius ? *radius : std::sqrt(wsum / kPi);
    if (!(grid.radius > 0.0)) throw std::invalid_argument("field csv: radius must be positive");
    return make_field_map(std::move(grid), std::move(samples), units);
}

void write_sweep_csv(std::ostream& out, const SweepResult& result,
                     std::optional<int> detrend_window) {
    // (spec string, A) -> detrended value
    std::map<std::pair<std::string, double>, DetrendPoint> corrected;
    if (detrend_window) {
        std::vector<EstimatorSpec> seen;
        for (const auto& r : result.rows) {
            if (r.spec.component != Component::m3) continue;
            bool dup = false;
            for (const auto& s : seen) dup = dup || s == r.spec;
            if (!dup) seen.push_back(r.spec);
        }
        for (const auto& s : seen) {
            std::vector<std::pair<double, double>> series;
            for (const auto& r : rows_for(result, s)) series.emplace_back(r.A, r.estimate);
            const auto d = detrend_backward(series, *detrend_window);
            for (const auto& p : d) corrected[{to_string(s), p.A}] = p;
        }
    }
    out << "A,component,order,axis,estimate,true_value,abs_error,predicted_error";
    if (detrend_window) out << ",detrended,detrend_applied";
    out << '\n';
    for (const auto& r : result.rows) {
        const std::string comp = r.spec.component == Component::m1   ? "m1"
                                 : r.spec.component == Component::m2 ? "m2"
                                                                      : "m3";
        out << format_double(r.A) << ',' << comp << ',' << r.spec.order << ',' << axis_name(r.spec)
            << ',' << format_double(r.estimate) << ',' << format_double(r.truth) << ','
            << format_double(std::fabs(r.estimate - r.truth)) << ','
            << (r.predicted ? format_double(*r.predicted) : "");
        if (detrend_window) {
            auto it = corrected.find({to_string(r.spec), r.A});
            if (it == corrected.end()) out << ",,";
            else out << ',' << format_double(it->second.value) << ',' << (it->second.corrected ? 1 : 0);
        }
        out << '\n';
    }
}

}  // namespace netmoment
