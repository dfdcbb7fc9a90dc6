#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace nhspec::cli {

using ojson = nlohmann::ordered_json;

// CSV view of a result. Cells are JSON scalars so that both outputs share one
// number formatter and agree digit for digit.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<ojson>> rows;
};

struct Document {
    ojson meta = ojson::object();
    ojson data;
    Table table;
};

// Shortest decimal text that parses back to the same double; NaN -> null.
ojson number(double v);

std::string csv_cell(const ojson& cell);
void write_csv(std::ostream& os, const Table& table);
void write_json(std::ostream& os, const Document& doc);
void write_document(std::ostream& os, const Document& doc, const std::string& format);

} // namespace nhspec::cli
