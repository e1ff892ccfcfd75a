#include "catmod/output.hpp"

#include <stdexcept>

namespace catmod::output {

namespace {

void write_json_string(std::ostream& out, std::string_view s) {
    out << '"';
    for (char c : s) {
        switch (c) {
            case '"': out << "\\\""; break;
            case '\\': out << "\\\\"; break;
            case '\n': out << "\\n"; break;
            default: out << c;
        }
    }
    out << '"';
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "csv") return Format::csv;
    if (name == "json-lines") return Format::json_lines;
    throw std::invalid_argument("unknown format: " + std::string(name));
}

void RecordWriter::write(const OutputRecord& record) {
    std::vector<std::string> keys;
    keys.reserve(record.size());
    for (const auto& f : record) keys.push_back(f.key);

    if (!columns_) {
        columns_ = keys;
        if (format_ == Format::csv) {
            for (std::size_t i = 0; i < keys.size(); ++i) out_ << (i ? "," : "") << keys[i];
            out_ << '\n';
        }
    } else if (*columns_ != keys) {
        throw std::logic_error("output record columns changed mid-stream");
    }

    if (format_ == Format::csv) {
        for (std::size_t i = 0; i < record.size(); ++i) out_ << (i ? "," : "") << record[i].value.token;
        out_ << '\n';
        return;
    }

    out_ << '{';
    for (std::size_t i = 0; i < record.size(); ++i) {
        if (i) out_ << ',';
        write_json_string(out_, record[i].key);
        out_ << ':';
        const Value& v = record[i].value;
        switch (v.kind) {
            case Value::Kind::null: out_ << "null"; break;
            case Value::Kind::text: write_json_string(out_, v.token); break;
            default: out_ << v.token;
        }
    }
    out_ << "}\n";
}

}  // namespace catmod::output
