#include "coventa/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace coventa {

namespace {

using nlohmann::json;

Complex parse_pair(const json& entry, const std::string& field, std::size_t index) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
        std::ostringstream msg;
        msg << "field \"" << field << "\"[" << index << "] must be a [re, im] number pair";
        throw ParseError(msg.str());
    }
    return {entry[0].get<double>(), entry[1].get<double>()};
}

int parse_dim(const json& doc, const std::string& field) {
    if (!doc.contains(field) || !doc[field].is_number_integer()) {
        throw ParseError("field \"" + field + "\" must be an integer");
    }
    return doc[field].get<int>();
}

json pair_of(const Complex& z) { return json::array({z.real(), z.imag()}); }

}  // namespace

LoadedState parse_state(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("state file must be a JSON object");

    const int dim_a = parse_dim(doc, "dim_a");
    const int dim_b = parse_dim(doc, "dim_b");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw ParseError("field \"kind\" must be \"density\" or \"pure\"");
    const std::string kind = doc["kind"].get<std::string>();
    if (kind != "density" && kind != "pure")
        throw ParseError("field \"kind\" is \"" + kind + "\", expected \"density\" or \"pure\"");
    if (!doc.contains("data") || !doc["data"].is_array())
        throw ParseError("field \"data\" must be an array of [re, im] pairs");
    const json& data = doc["data"];

    const std::size_t d = static_cast<std::size_t>(dim_a) * dim_b;
    if (kind == "pure") {
        if (data.size() != d) {
            std::ostringstream msg;
            msg << "field \"data\" holds " << data.size() << " amplitudes, expected " << d
                << " for a pure state on " << dim_a << "x" << dim_b;
            throw ParseError(msg.str());
        }
        Vector amplitudes(d);
        for (std::size_t i = 0; i < d; ++i) amplitudes(i) = parse_pair(data[i], "data", i);
        return PureState(dim_a, dim_b, std::move(amplitudes));
    }

    if (data.size() != d * d) {
        std::ostringstream msg;
        msg << "field \"data\" holds " << data.size() << " entries, expected " << d * d
            << " for a density matrix on " << dim_a << "x" << dim_b;
        throw ParseError(msg.str());
    }
    Matrix entries(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            entries(i, j) = parse_pair(data[i * d + j], "data", i * d + j);
    return DensityMatrix(dim_a, dim_b, std::move(entries));
}

LoadedState load_state(const std::string& path) { return parse_state(read_text_file(path)); }

std::string state_to_json(const DensityMatrix& rho) {
    json doc;
    doc["dim_a"] = rho.dim_a();
    doc["dim_b"] = rho.dim_b();
    doc["kind"] = "density";
    json data = json::array();
    for (int i = 0; i < rho.dim(); ++i)
        for (int j = 0; j < rho.dim(); ++j) data.push_back(pair_of(rho.matrix()(i, j)));
    doc["data"] = std::move(data);
    return doc.dump(2);
}

std::string state_to_json(const PureState& psi) {
    json doc;
    doc["dim_a"] = psi.dim_a();
    doc["dim_b"] = psi.dim_b();
    doc["kind"] = "pure";
    json data = json::array();
    for (int i = 0; i < psi.dim(); ++i) data.push_back(pair_of(psi.amplitudes()(i)));
    doc["data"] = std::move(data);
    return doc.dump(2);
}

void save_state(const LoadedState& state, const std::string& path) {
    const std::string text = std::visit([](const auto& s) { return state_to_json(s); }, state);
    write_text_file(path, text);
}

std::string generator_set_to_json(const GeneratorSet& set) {
    json doc;
    doc["dim"] = set.dim;
    doc["provenance"] = set.provenance == GeneratorProvenance::GellMann ? "gellmann" : "mub";
    json ops = json::array();
    for (const Matrix& op : set.ops) {
        json flat = json::array();
        for (int i = 0; i < set.dim; ++i)
            for (int j = 0; j < set.dim; ++j) flat.push_back(pair_of(op(i, j)));
        ops.push_back(std::move(flat));
    }
    doc["ops"] = std::move(ops);
    json groups = json::array();
    for (const auto& group : set.groups) groups.push_back(group.indices);
    doc["groups"] = std::move(groups);
    return doc.dump(2);
}

std::string mub_family_to_json(const MubFamily& family) {
    json doc;
    doc["dim"] = family.dim;
    json bases = json::array();
    for (const Matrix& basis : family.bases) {
        json vectors = json::array();
        for (int j = 0; j < family.dim; ++j) {
            json vec = json::array();
            for (int i = 0; i < family.dim; ++i) vec.push_back(pair_of(basis(i, j)));
            vectors.push_back(std::move(vec));
        }
        bases.push_back(std::move(vectors));
    }
    doc["bases"] = std::move(bases);
    return doc.dump(2);
}

std::string format_significant(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

}  // namespace coventa
