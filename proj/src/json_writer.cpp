#include "mbqc/json_writer.hpp"

#include <cstdio>

namespace mbqc {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void JsonWriter::newline_indent() {
    out_.push_back('\n');
    out_.append(2 * container_empty_.size(), ' ');
}

void JsonWriter::before_value() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (container_empty_.empty()) return;
    if (!container_empty_.back()) out_.push_back(',');
    container_empty_.back() = false;
    newline_indent();
}

JsonWriter& JsonWriter::begin_object() {
    before_value();
    out_.push_back('{');
    container_empty_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    const bool empty = container_empty_.back();
    container_empty_.pop_back();
    if (!empty) newline_indent();
    out_.push_back('}');
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    before_value();
    out_.push_back('[');
    container_empty_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    const bool empty = container_empty_.back();
    container_empty_.pop_back();
    if (!empty) newline_indent();
    out_.push_back(']');
    return *this;
}

void JsonWriter::append_string(std::string_view v) {
    out_.push_back('"');
    for (char c : v) {
        switch (c) {
            case '"': out_.append("\\\""); break;
            case '\\': out_.append("\\\\"); break;
            case '\n': out_.append("\\n"); break;
            case '\t': out_.append("\\t"); break;
            case '\r': out_.append("\\r"); break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out_.append(buf);
                } else {
                    out_.push_back(c);
                }
        }
    }
    out_.push_back('"');
}

JsonWriter& JsonWriter::key(std::string_view name) {
    if (!container_empty_.back()) out_.push_back(',');
    container_empty_.back() = false;
    newline_indent();
    append_string(name);
    out_.append(": ");
    pending_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    before_value();
    out_.append(format_double(v));
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    before_value();
    out_.append(v ? "true" : "false");
    return *this;
}

JsonWriter& JsonWriter::value(int v) {
    before_value();
    out_.append(std::to_string(v));
    return *this;
}

JsonWriter& JsonWriter::value(long long v) {
    before_value();
    out_.append(std::to_string(v));
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
    before_value();
    out_.append(std::to_string(v));
    return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
    before_value();
    append_string(v);
    return *this;
}

std::string JsonWriter::str() const { return out_ + "\n"; }

}  // namespace mbqc
