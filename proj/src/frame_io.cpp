#include "framecal/frame_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

#include "framecal/errors.hpp"
#include "framecal/measure.hpp"

namespace framecal {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON document");
    return j;
}

const json& require_field(const json& j, const char* key) {
    if (!j.is_object())
        throw ParseError(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

std::size_t read_dim(const json& j) {
    const json& dim = require_field(j, "dim");
    if (!dim.is_number_integer() || dim.get<long long>() < 1)
        throw ParseError("'dim' must be a positive integer");
    return static_cast<std::size_t>(dim.get<long long>());
}

Complex read_complex(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("complex entries must be [re, im] number pairs");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

std::string quote(const std::string& s) { return json(s).dump(); }

void append_complex(std::string& out, Complex z) {
    out += '[';
    out += format_double(z.real());
    out += ", ";
    out += format_double(z.imag());
    out += ']';
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << data;
    out.flush();
    if (!out) throw ParseError("cannot write file: " + path);
}

}  // namespace

std::string format_double(double x) {
    if (!std::isfinite(x)) throw ParseError("cannot serialize a non-finite number");
    // Bare "-0" would take the integer path on re-parse and lose its sign.
    if (x == 0.0) return std::signbit(x) ? "-0.0" : "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw ParseError("cannot read file: " + path);
    return buf.str();
}

SampledFrame parse_frame(const std::string& text) {
    const json j = parse_json(text);
    const std::size_t dim = read_dim(j);
    const json& atoms = require_field(j, "atoms");
    if (!atoms.is_array() || atoms.empty())
        throw ParseError("'atoms' must be a non-empty array");

    std::vector<Atom> measure_atoms;
    std::vector<HilbertVector> vectors;
    measure_atoms.reserve(atoms.size());
    vectors.reserve(atoms.size());
    for (const json& a : atoms) {
        const json& label = require_field(a, "label");
        if (!label.is_string()) throw ParseError("'label' must be a string");
        const json& weight = require_field(a, "weight");
        if (!weight.is_number()) throw ParseError("'weight' must be a number");
        const json& vec = require_field(a, "vector");
        if (!vec.is_array() || vec.size() != dim)
            throw ParseError("'vector' must hold exactly 'dim' complex entries");
        HilbertVector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = read_complex(vec[i]);
        measure_atoms.push_back({label.get<std::string>(), weight.get<double>()});
        vectors.push_back(std::move(v));
    }
    try {
        return SampledFrame(MeasureSpace(std::move(measure_atoms)), std::move(vectors));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid frame document: ") + e.what());
    }
}

std::string serialize_frame(const SampledFrame& f) {
    std::string out = "{\n  \"dim\": " + std::to_string(f.dim()) + ",\n  \"atoms\": [\n";
    for (std::size_t i = 0; i < f.atom_count(); ++i) {
        out += "    {\"label\": " + quote(f.space().label(i)) +
               ", \"weight\": " + format_double(f.weight(i)) + ", \"vector\": [";
        for (std::size_t k = 0; k < f.dim(); ++k) {
            if (k > 0) out += ", ";
            append_complex(out, f.vector(i)[k]);
        }
        out += "]}";
        if (i + 1 < f.atom_count()) out += ',';
        out += '\n';
    }
    out += "  ]\n}\n";
    return out;
}

SampledFrame load_frame(const std::string& path) { return parse_frame(read_text_file(path)); }

void save_frame(const SampledFrame& f, const std::string& path) {
    write_file(path, serialize_frame(f));
}

LinearOperator parse_operator(const std::string& text) {
    const json j = parse_json(text);
    const std::size_t dim = read_dim(j);
    const json& entries = require_field(j, "entries");
    if (!entries.is_array() || entries.size() != dim)
        throw ParseError("'entries' must hold exactly 'dim' rows");
    LinearOperator a(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const json& row = entries[r];
        if (!row.is_array() || row.size() != dim)
            throw ParseError("operator rows must hold exactly 'dim' complex entries");
        for (std::size_t c = 0; c < dim; ++c) a.at(r, c) = read_complex(row[c]);
    }
    return a;
}

std::string serialize_operator(const LinearOperator& a) {
    std::string out = "{\n  \"dim\": " + std::to_string(a.dim()) + ",\n  \"entries\": [\n";
    for (std::size_t r = 0; r < a.dim(); ++r) {
        out += "    [";
        for (std::size_t c = 0; c < a.dim(); ++c) {
            if (c > 0) out += ", ";
            append_complex(out, a.at(r, c));
        }
        out += ']';
        if (r + 1 < a.dim()) out += ',';
        out += '\n';
    }
    out += "  ]\n}\n";
    return out;
}

LinearOperator load_operator(const std::string& path) {
    return parse_operator(read_text_file(path));
}

void save_operator(const LinearOperator& a, const std::string& path) {
    write_file(path, serialize_operator(a));
}

std::string fnv1a_digest(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace framecal
