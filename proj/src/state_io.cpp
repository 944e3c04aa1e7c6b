#include "ghz/state_io.hpp"

#include "ghz/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace ghz {

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

ComplexMatrix parse_state_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("matrix")) {
        throw ParseError("state file must be an object with \"dim\" and \"matrix\"");
    }
    if (!doc["dim"].is_number_unsigned() && !doc["dim"].is_number_integer()) {
        throw ParseError("\"dim\" must be a positive integer");
    }
    const long long dim_field = doc["dim"].get<long long>();
    if (dim_field < 1 || dim_field > 64) {
        throw ParseError("\"dim\" must be in 1..64, got " + std::to_string(dim_field));
    }
    const std::size_t dim = static_cast<std::size_t>(dim_field);

    const nlohmann::json& rows = doc["matrix"];
    if (!rows.is_array() || rows.size() != dim) {
        throw ParseError("\"matrix\" must be an array of " + std::to_string(dim) + " rows");
    }
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const nlohmann::json& row = rows[i];
        if (!row.is_array() || row.size() != dim) {
            throw ParseError("matrix row " + std::to_string(i) + " must hold " +
                             std::to_string(dim) + " entries");
        }
        for (std::size_t j = 0; j < dim; ++j) {
            const nlohmann::json& entry = row[j];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number()) {
                throw ParseError("matrix entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") must be a [re, im] pair");
            }
            const double re = entry[0].get<double>();
            const double im = entry[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im)) {
                throw ParseError("matrix entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") is not finite");
            }
            m(i, j) = Complex{re, im};
        }
    }
    return m;
}

std::string state_to_json(const ComplexMatrix& m) {
    std::ostringstream out;
    out << "{\"dim\": " << m.dim() << ", \"matrix\": [\n";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m.dim(); ++j) {
            const Complex z = m(i, j);
            out << '[' << format_double(z.real()) << ", " << format_double(z.imag()) << ']';
            if (j + 1 < m.dim()) {
                out << ", ";
            }
        }
        out << ']' << (i + 1 < m.dim() ? "," : "") << '\n';
    }
    out << "]}\n";
    return out.str();
}

DensityMatrix read_state_file(const std::string& path, double tolerance) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open state file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const ComplexMatrix m = parse_state_json(buffer.str());
    if ((m.dim() & (m.dim() - 1)) != 0) {
        throw ParseError("state file dim " + std::to_string(m.dim()) +
                         " is not a power of two");
    }
    return DensityMatrix::build(m, tolerance);
}

void write_state_file(const std::string& path, const DensityMatrix& rho) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot open output file: " + path);
    }
    out << state_to_json(rho.matrix());
    if (!out) {
        throw ParseError("failed writing state file: " + path);
    }
}

} // namespace ghz
