#include "writer.hpp"

#include "run_config.hpp"

#include <cmath>

namespace nhspec::cli {

ojson number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

std::string csv_cell(const ojson& cell) {
    if (cell.is_null()) return "";
    if (cell.is_string()) {
        const auto& s = cell.get_ref<const std::string&>();
        if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char ch : s) {
            if (ch == '"') quoted += '"';
            quoted += ch;
        }
        return quoted + '"';
    }
    return cell.dump();
}

void write_csv(std::ostream& os, const Table& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) os << ',';
        os << csv_cell(table.header[i]);
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << csv_cell(row[i]);
        }
        os << '\n';
    }
}

void write_json(std::ostream& os, const Document& doc) {
    ojson out = ojson::object();
    out["meta"] = doc.meta;
    out["data"] = doc.data;
    os << out.dump(2) << '\n';
}

void write_document(std::ostream& os, const Document& doc, const std::string& format) {
    if (format == "csv") {
        write_csv(os, doc.table);
    } else if (format == "json") {
        write_json(os, doc);
    } else {
        throw UsageError("output format must be csv or json, got '" + format + "'");
    }
}

} // namespace nhspec::cli
