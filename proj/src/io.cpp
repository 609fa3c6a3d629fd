#include "gepner/io.hpp"

#include <fstream>
#include <stdexcept>

namespace gepner::io {

json to_json(const TruncSeries& s, const std::vector<std::string>& names)
{
    return s.to_poly(names).to_string();
}

json to_json(const SeriesMatrix& m, const std::vector<std::string>& names)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(to_json(m(r, c), names));
        }
        rows.push_back(row);
    }
    return rows;
}

json to_json(const Certificate& c)
{
    json checks = json::array();
    for (const auto& ch : c.checks) {
        checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"witness", ch.witness}});
    }
    return {{"subject", c.subject}, {"passed", c.passed()}, {"notes", c.notes}, {"checks", checks}};
}

json to_json(const FrobeniusData& f)
{
    json product = json::array();
    for (const auto& m : f.product) {
        product.push_back(to_json(m, f.coords));
    }
    json unit = json::array();
    json euler = json::array();
    for (const auto& s : f.unit) {
        unit.push_back(to_json(s, f.coords));
    }
    for (const auto& s : f.euler) {
        euler.push_back(to_json(s, f.coords));
    }
    return {{"coords", f.coords}, {"order", f.order()}, {"flat_coords", f.flat_coords}, {"metric", to_json(f.metric, f.coords)},
        {"product", product}, {"unit", unit}, {"euler", euler}};
}

json to_json(const PreSaitoData& p)
{
    json connection = json::array();
    json higgs = json::array();
    for (const auto& m : p.connection) {
        connection.push_back(to_json(m, p.coords));
    }
    for (const auto& m : p.higgs) {
        higgs.push_back(to_json(m, p.coords));
    }
    return {{"coords", p.coords}, {"order", p.order()}, {"rank", p.rank}, {"connection", connection}, {"higgs", higgs},
        {"r0", to_json(p.r0, p.coords)}, {"r_inf", to_json(p.r_inf, p.coords)}, {"metric", to_json(p.metric, p.coords)}};
}

TruncSeries series_from_json(const json& j, const std::vector<std::string>& names, int order)
{
    if (!j.is_string()) {
        throw std::invalid_argument("series entry must be a polynomial string");
    }
    return TruncSeries::from_poly(MultiPoly::parse(j.get<std::string>(), names), order);
}

SeriesMatrix matrix_from_json(const json& j, const std::vector<std::string>& names, int order)
{
    if (!j.is_array() || j.empty() || !j[0].is_array()) {
        throw std::invalid_argument("matrix must be a nonempty array of rows");
    }
    std::size_t rows = j.size();
    std::size_t cols = j[0].size();
    SeriesMatrix m(rows, cols, static_cast<int>(names.size()), order);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) {
            throw std::invalid_argument("matrix rows differ in length");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = series_from_json(j[r][c], names, order);
        }
    }
    return m;
}

namespace {

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw std::invalid_argument(std::string("missing field: ") + key);
    }
    return j.at(key);
}

std::vector<TruncSeries> vector_from_json(const json& j, const std::vector<std::string>& names, int order)
{
    if (!j.is_array()) {
        throw std::invalid_argument("vector must be an array");
    }
    std::vector<TruncSeries> out;
    for (const auto& e : j) {
        out.push_back(series_from_json(e, names, order));
    }
    return out;
}

} // namespace

FrobeniusData frobenius_from_json(const json& j)
{
    FrobeniusData f;
    f.coords = field(j, "coords").get<std::vector<std::string>>();
    int order = field(j, "order").get<int>();
    f.flat_coords = j.value("flat_coords", false);
    f.metric = matrix_from_json(field(j, "metric"), f.coords, order);
    for (const auto& m : field(j, "product")) {
        f.product.push_back(matrix_from_json(m, f.coords, order));
    }
    f.unit = vector_from_json(field(j, "unit"), f.coords, order);
    f.euler = vector_from_json(field(j, "euler"), f.coords, order);
    std::size_t m = f.coords.size();
    if (f.product.size() != m || f.unit.size() != m || f.euler.size() != m || f.metric.rows() != m) {
        throw std::invalid_argument("frobenius data: sizes do not match the coordinates");
    }
    return f;
}

PreSaitoData presaito_from_json(const json& j)
{
    PreSaitoData p;
    p.coords = field(j, "coords").get<std::vector<std::string>>();
    int order = field(j, "order").get<int>();
    p.rank = field(j, "rank").get<std::size_t>();
    for (const auto& m : field(j, "connection")) {
        p.connection.push_back(matrix_from_json(m, p.coords, order));
    }
    for (const auto& m : field(j, "higgs")) {
        p.higgs.push_back(matrix_from_json(m, p.coords, order));
    }
    p.r0 = matrix_from_json(field(j, "r0"), p.coords, order);
    p.r_inf = matrix_from_json(field(j, "r_inf"), p.coords, order);
    p.metric = matrix_from_json(field(j, "metric"), p.coords, order);
    if (p.connection.size() != p.coords.size() || p.higgs.size() != p.coords.size() || p.metric.rows() != p.rank) {
        throw std::invalid_argument("pre-Saito data: sizes do not match");
    }
    return p;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return json::parse(in);
}

} // namespace gepner::io
