#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mbqc {

/// Streaming JSON emitter with deterministic output: keys appear in call
/// order, doubles are printed with 17 significant digits, indentation is two
/// spaces. Reports are compared byte for byte, so nothing here may depend on
/// locale or platform formatting.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();

    JsonWriter& key(std::string_view name);

    JsonWriter& value(double v);
    JsonWriter& value(bool v);
    JsonWriter& value(int v);
    JsonWriter& value(long long v);
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(std::string_view v);
    JsonWriter& value(const char* v) { return value(std::string_view(v)); }

    /// Finishes the document (newline-terminated).
    std::string str() const;

private:
    void before_value();
    void newline_indent();
    void append_string(std::string_view v);

    std::string out_;
    std::vector<bool> container_empty_;
    bool pending_key_ = false;
};

/// 17-significant-digit representation used everywhere a report prints a float.
std::string format_double(double v);

}  // namespace mbqc
