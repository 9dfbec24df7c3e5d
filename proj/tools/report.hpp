#pragma once

#include "tdc/dim.hpp"
#include "tdc/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tdc::cli {

/// One `key=value` item. A non-empty note prints as `key=value(note)` in
/// text and as {"value": ..., "note-key": note} in JSON.
struct Field {
    std::string key;
    nlohmann::ordered_json value;
    std::string note;
    std::string note_key = "provenance";
};

/// A text line. Lines without a section put their fields at the top level of
/// the JSON document; lines with a section append an object made of their
/// fields to the JSON array of that name.
struct Line {
    std::vector<Field> fields;
    std::string section;
};

/// Extra text-only lines (matrix grids) are indented and carry no keys; the
/// same data also appears in JSON through a field.
class Report {
public:
    void add(Field f) { lines_.push_back({{std::move(f)}, {}}); }
    void add(std::string key, nlohmann::ordered_json value) { add(Field{std::move(key), std::move(value), {}}); }
    void add_record(std::string section, std::vector<Field> fields) { lines_.push_back({std::move(fields), std::move(section)}); }
    /// A text line `key=value` stored in JSON as doc[section][key].
    void add_member(std::string section, Field f) { lines_.push_back({{std::move(f)}, std::move(section), {}, true}); }
    void add_grid(std::vector<std::string> rows);

    std::string text() const;
    nlohmann::ordered_json json() const;

private:
    struct Entry {
        std::vector<Field> fields;
        std::string section;
        std::vector<std::string> grid;
        bool member = false;
    };
    std::vector<Entry> lines_;
};

nlohmann::ordered_json dim_value(const Dim& d);
nlohmann::ordered_json rational_value(const Rational& r);

/// Text rendering of a JSON value: numbers and strings as is, arrays
/// comma-joined, arrays of arrays with rows separated by ';'.
std::string text_value(const nlohmann::ordered_json& v);

}  // namespace tdc::cli
