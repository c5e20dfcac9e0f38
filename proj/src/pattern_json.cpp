#include "mbqc/pattern_json.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "mbqc/json_writer.hpp"

namespace mbqc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw ValidationError(message); }

void require_known_fields(const json& object, const std::string& where,
                          std::initializer_list<const char*> allowed) {
    for (const auto& [field, unused] : object.items()) {
        (void)unused;
        bool known = false;
        for (const char* name : allowed) {
            if (field == name) {
                known = true;
                break;
            }
        }
        if (!known) fail("unknown field '" + field + "' in " + where);
    }
}

const json& require_field(const json& object, const char* name, const std::string& where) {
    const auto it = object.find(name);
    if (it == object.end()) fail("missing field '" + std::string(name) + "' in " + where);
    return *it;
}

int as_int(const json& value, const std::string& where) {
    if (!value.is_number_integer()) fail(where + " must be an integer");
    return value.get<int>();
}

double as_double(const json& value, const std::string& where) {
    if (!value.is_number()) fail(where + " must be a number");
    return value.get<double>();
}

std::vector<int> as_int_list(const json& value, const std::string& where) {
    if (!value.is_array()) fail(where + " must be an array of integers");
    std::vector<int> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(as_int(value[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

ClusterLayout parse_layout(const json& value) {
    if (!value.is_object()) fail("layout must be an object");
    require_known_fields(value, "layout", {"rows", "cols", "extra_edges"});
    const int rows = as_int(require_field(value, "rows", "layout"), "layout.rows");
    const int cols = as_int(require_field(value, "cols", "layout"), "layout.cols");
    std::vector<std::pair<int, int>> extra;
    if (const auto it = value.find("extra_edges"); it != value.end()) {
        if (!it->is_array()) fail("layout.extra_edges must be an array of [a, b] pairs");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string where = "layout.extra_edges[" + std::to_string(i) + "]";
            const json& pair = (*it)[i];
            if (!pair.is_array() || pair.size() != 2) fail(where + " must be an [a, b] pair");
            extra.emplace_back(as_int(pair[0], where), as_int(pair[1], where));
        }
    }
    return ClusterLayout::lattice_with_extra(rows, cols, extra);
}

StateVector parse_input(const json& value, int rows) {
    if (value.is_string()) {
        if (value.get<std::string>() != "plus") {
            fail("input must be \"plus\" or an amplitudes object");
        }
        return new_plus_state(rows);
    }
    if (!value.is_object()) fail("input must be \"plus\" or an amplitudes object");
    require_known_fields(value, "input", {"amplitudes"});
    const json& amps = require_field(value, "amplitudes", "input");
    if (!amps.is_array()) fail("input.amplitudes must be an array of [re, im] pairs");
    const Eigen::Index expected = Eigen::Index{1} << rows;
    if (static_cast<Eigen::Index>(amps.size()) != expected) {
        fail("input.amplitudes must have 2^rows = " + std::to_string(expected) + " entries");
    }
    Eigen::VectorXcd v(expected);
    for (Eigen::Index i = 0; i < expected; ++i) {
        const std::string where = "input.amplitudes[" + std::to_string(i) + "]";
        const json& pair = amps[static_cast<std::size_t>(i)];
        if (!pair.is_array() || pair.size() != 2) fail(where + " must be an [re, im] pair");
        v(i) = Complex(as_double(pair[0], where), as_double(pair[1], where));
    }
    const double norm = v.norm();
    if (norm <= 0.0) fail("input.amplitudes is the zero vector");
    return StateVector::from_amplitudes(v / norm);
}

std::map<int, std::vector<int>> parse_corrections(const json& value, const std::string& where) {
    if (!value.is_object()) fail(where + " must map output qubits to measured-qubit lists");
    std::map<int, std::vector<int>> out;
    for (const auto& [field, domain] : value.items()) {
        int qubit = 0;
        try {
            std::size_t consumed = 0;
            qubit = std::stoi(field, &consumed);
            if (consumed != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception&) {
            fail(where + " key '" + field + "' is not a qubit index");
        }
        out[qubit] = as_int_list(domain, where + "['" + field + "']");
    }
    return out;
}

}  // namespace

PatternFile parse_pattern_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into a line number for the diagnostic.
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') ++line;
        }
        fail("pattern JSON syntax error at line " + std::to_string(line) + ": " + e.what());
    }
    if (!root.is_object()) fail("pattern file must be a JSON object");
    require_known_fields(root, "pattern file",
                         {"layout", "input", "steps", "outputs", "x_corrections",
                          "z_corrections"});

    MeasurementPattern pattern;
    pattern.layout = parse_layout(require_field(root, "layout", "pattern file"));
    StateVector input = parse_input(require_field(root, "input", "pattern file"),
                                    pattern.layout.rows);

    const json& steps = require_field(root, "steps", "pattern file");
    if (!steps.is_array()) fail("steps must be an array");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const std::string where = "steps[" + std::to_string(i) + "]";
        const json& step_json = steps[i];
        if (!step_json.is_object()) fail(where + " must be an object");
        require_known_fields(step_json, where, {"qubit", "angle", "s_domain", "t_domain"});
        PatternStep step;
        step.qubit = as_int(require_field(step_json, "qubit", where), where + ".qubit");
        step.base_angle = as_double(require_field(step_json, "angle", where), where + ".angle");
        if (const auto it = step_json.find("s_domain"); it != step_json.end()) {
            step.s_domain = as_int_list(*it, where + ".s_domain");
        }
        if (const auto it = step_json.find("t_domain"); it != step_json.end()) {
            step.t_domain = as_int_list(*it, where + ".t_domain");
        }
        pattern.steps.push_back(std::move(step));
    }

    pattern.outputs = as_int_list(require_field(root, "outputs", "pattern file"), "outputs");
    if (const auto it = root.find("x_corrections"); it != root.end()) {
        pattern.x_corrections = parse_corrections(*it, "x_corrections");
    }
    if (const auto it = root.find("z_corrections"); it != root.end()) {
        pattern.z_corrections = parse_corrections(*it, "z_corrections");
    }
    pattern.validate();
    return {std::move(pattern), std::move(input)};
}

PatternFile load_pattern_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw ValidationError("cannot open pattern file '" + path + "'");
    }
    std::ostringstream text;
    text << file.rdbuf();
    try {
        return parse_pattern_json(text.str());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::string pattern_file_json(const MeasurementPattern& pattern, const StateVector& input) {
    pattern.validate();
    JsonWriter w;
    w.begin_object();
    w.key("layout").begin_object();
    w.key("rows").value(pattern.layout.rows);
    w.key("cols").value(pattern.layout.cols);
    // Edges beyond the default lattice; edges the layout removed cannot be
    // represented in the file format.
    const auto base = lattice_edges(pattern.layout.rows, pattern.layout.cols);
    w.key("extra_edges").begin_array();
    for (const auto& e : pattern.layout.edges) {
        if (!std::binary_search(base.begin(), base.end(), e)) {
            w.begin_array().value(e.first).value(e.second).end_array();
        }
    }
    w.end_array();
    w.end_object();

    w.key("input").begin_object();
    w.key("amplitudes").begin_array();
    for (Eigen::Index i = 0; i < input.dim(); ++i) {
        w.begin_array().value(input.amplitude(i).real()).value(input.amplitude(i).imag());
        w.end_array();
    }
    w.end_array();
    w.end_object();

    w.key("steps").begin_array();
    for (const auto& step : pattern.steps) {
        w.begin_object();
        w.key("qubit").value(step.qubit);
        w.key("angle").value(step.base_angle);
        w.key("s_domain").begin_array();
        for (int q : step.s_domain) w.value(q);
        w.end_array();
        w.key("t_domain").begin_array();
        for (int q : step.t_domain) w.value(q);
        w.end_array();
        w.end_object();
    }
    w.end_array();

    w.key("outputs").begin_array();
    for (int q : pattern.outputs) w.value(q);
    w.end_array();

    auto write_corrections = [&w](const char* name,
                                  const std::map<int, std::vector<int>>& corrections) {
        w.key(name).begin_object();
        for (const auto& [qubit, domain] : corrections) {
            w.key(std::to_string(qubit)).begin_array();
            for (int q : domain) w.value(q);
            w.end_array();
        }
        w.end_object();
    };
    write_corrections("x_corrections", pattern.x_corrections);
    write_corrections("z_corrections", pattern.z_corrections);

    w.end_object();
    return w.str();
}

}  // namespace mbqc
