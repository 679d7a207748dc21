#include "cvpde/curve_table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cvpde {

namespace {

void check_name(const std::string& name) {
    if (name.empty())
        throw std::invalid_argument("CurveTable: column names must be nonempty");
    if (name.find_first_of(",\"\n\r") != std::string::npos)
        throw std::invalid_argument(
            "CurveTable: column name contains CSV delimiter characters");
}

}  // namespace

std::size_t CurveTable::row_count() const {
    return columns.empty() ? 0 : columns.front().values.size();
}

void CurveTable::add_column(std::string name, std::vector<double> values) {
    check_name(name);
    for (const Column& col : columns)
        if (col.name == name)
            throw std::invalid_argument("CurveTable: duplicate column name '" +
                                        name + "'");
    if (!columns.empty() && values.size() != row_count())
        throw std::invalid_argument("CurveTable: column '" + name +
                                    "' length mismatch");
    columns.push_back({std::move(name), std::move(values)});
}

void CurveTable::validate() const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        check_name(columns[i].name);
        for (std::size_t j = 0; j < i; ++j)
            if (columns[j].name == columns[i].name)
                throw std::invalid_argument(
                    "CurveTable: duplicate column name '" + columns[i].name +
                    "'");
        if (columns[i].values.size() != row_count())
            throw std::invalid_argument("CurveTable: ragged columns");
        for (double v : columns[i].values)
            if (!std::isfinite(v))
                throw std::invalid_argument("CurveTable: non-finite value in '" +
                                            columns[i].name + "'");
    }
}

std::string CurveTable::to_csv() const {
    validate();
    std::string out;
    if (columns.empty()) return out;
    out.reserve(columns.size() * (row_count() + 1) * 24);
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) out += ',';
        out += columns[c].name;
    }
    out += '\n';
    char buf[32];
    for (std::size_t r = 0; r < row_count(); ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) out += ',';
            // 17 significant digits: lossless double -> text -> double.
            std::snprintf(buf, sizeof buf, "%.16e", columns[c].values[r]);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

}  // namespace cvpde
