#include "report.hpp"

namespace tdc::cli {

void Report::add_grid(std::vector<std::string> rows) { lines_.push_back({{}, {}, std::move(rows), false}); }

std::string text_value(const nlohmann::ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_array()) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) out += v[i].is_array() ? ';' : ',';
            out += text_value(v[i]);
        }
        return out;
    }
    return v.dump();
}

std::string Report::text() const {
    std::string out;
    for (const auto& e : lines_) {
        for (const auto& row : e.grid) out += "  " + row + '\n';
        if (e.fields.empty()) continue;
        std::string line;
        for (const auto& f : e.fields) {
            if (!line.empty()) line += ' ';
            line += f.key + '=' + text_value(f.value);
            if (!f.note.empty()) line += '(' + f.note + ')';
        }
        out += line + '\n';
    }
    return out;
}

nlohmann::ordered_json Report::json() const {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    auto encode = [](const Field& f) {
        if (f.note.empty()) return f.value;
        nlohmann::ordered_json o;
        o["value"] = f.value;
        o[f.note_key] = f.note;
        return o;
    };
    for (const auto& e : lines_) {
        if (e.fields.empty()) continue;
        if (e.member) {
            for (const auto& f : e.fields) doc[e.section][f.key] = encode(f);
            continue;
        }
        if (e.section.empty()) {
            for (const auto& f : e.fields) doc[f.key] = encode(f);
            continue;
        }
        nlohmann::ordered_json record = nlohmann::ordered_json::object();
        for (const auto& f : e.fields) record[f.key] = encode(f);
        doc[e.section].push_back(std::move(record));
    }
    return doc;
}

nlohmann::ordered_json dim_value(const Dim& d) {
    if (d.is_infinite()) return "inf";
    return d.value();
}

nlohmann::ordered_json rational_value(const Rational& r) { return to_string(r); }

}  // namespace tdc::cli
