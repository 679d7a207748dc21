// Column-oriented numeric tables and their CSV serialization.

#ifndef CVPDE_CURVE_TABLE_HPP
#define CVPDE_CURVE_TABLE_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace cvpde {

// A small column store used by every CLI command: one named column per
// curve, all columns the same length, values finite.  Serialization is
// deterministic - the same table always produces byte-identical CSV.
struct CurveTable {
    struct Column {
        std::string name;
        std::vector<double> values;
    };

    std::vector<Column> columns;

    std::size_t row_count() const;

    // Appends a column; throws std::invalid_argument on duplicate name or
    // length mismatch with existing columns.
    void add_column(std::string name, std::vector<double> values);

    // Checks all invariants (consistent lengths, unique nonempty names, all
    // values finite); throws std::invalid_argument on violation.
    void validate() const;

    // Header line of column names, then one comma-separated row per index,
    // every value printed in scientific notation with 17 significant digits
    // (round-trips exactly to the same double).  Lines end with '\n'.
    std::string to_csv() const;
};

}  // namespace cvpde

#endif  // CVPDE_CURVE_TABLE_HPP
