#pragma once

// Flat key/value output rows, serialised as CSV or as one JSON object per line.
// Values are stored as their final text so both formats carry identical values.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "catmod/exact.hpp"
#include "catmod/natural.hpp"

namespace catmod::output {

enum class Format { csv, json_lines };

/// Throws std::invalid_argument for anything but "csv" / "json-lines".
Format parse_format(std::string_view name);

struct Value {
    enum class Kind { null, boolean, number, text };
    Kind kind = Kind::null;
    std::string token;  // decimal digits, "true"/"false", or raw text

    static Value null() { return {}; }
    static Value boolean(bool b) { return {Kind::boolean, b ? "true" : "false"}; }
    static Value number(Natural n) { return {Kind::number, std::to_string(n.value())}; }
    static Value number(const ExactCount& n) { return {Kind::number, n.get_str()}; }
    /// Pre-rendered decimal token such as "0.444444444444".
    static Value decimal(std::string token) { return {Kind::number, std::move(token)}; }
    static Value text(std::string s) { return {Kind::text, std::move(s)}; }
};

struct Field {
    std::string key;
    Value value;
};

using OutputRecord = std::vector<Field>;

/// Writes records in a fixed column order: the keys of the first record. A
/// later record with different keys throws std::logic_error.
class RecordWriter {
public:
    RecordWriter(std::ostream& out, Format format) : out_(out), format_(format) {}

    void write(const OutputRecord& record);

private:
    std::ostream& out_;
    Format format_;
    std::optional<std::vector<std::string>> columns_;
};

}  // namespace catmod::output
