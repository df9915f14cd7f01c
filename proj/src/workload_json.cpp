#include "cacheopt/workload_json.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace cacheopt {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string_view source, const std::string& message) {
    throw ParseError(std::string(source) + ": " + message);
}

// nlohmann reports syntax errors by byte offset; translate to line:column.
std::string position_of(std::string_view text, std::size_t byte_offset) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte_offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return std::to_string(line) + ":" + std::to_string(column);
}

std::int64_t positive_int_field(std::string_view source, const json& object,
                                const std::string& field_path, const char* key) {
    if (!object.contains(key)) fail(source, field_path + ": missing required field");
    const json& value = object.at(key);
    if (!value.is_number_integer())
        fail(source, field_path + ": must be an integer, got " + std::string(value.type_name()));
    auto n = value.get<std::int64_t>();
    if (n < 1) fail(source, field_path + ": must be at least 1, got " + std::to_string(n));
    return n;
}

void reject_unknown_keys(std::string_view source, const json& object,
                         const std::string& path,
                         std::initializer_list<std::string_view> allowed) {
    for (const auto& item : object.items()) {
        bool known = false;
        for (std::string_view key : allowed)
            if (item.key() == key) known = true;
        if (!known) fail(source, path + "." + item.key() + ": unknown field");
    }
}

}  // namespace

Workload parse_workload_text(std::string_view text, std::string_view source) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte points one past the offending character.
        std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        fail(source, position_of(text, offset) + ": " + e.what());
    }
    if (!doc.is_object()) fail(source, "top level must be an object");
    reject_unknown_keys(source, doc, "$", {"free_memory", "files"});

    Workload w;
    w.free_memory = positive_int_field(source, doc, "free_memory", "free_memory");

    if (!doc.contains("files")) fail(source, "files: missing required field");
    const json& files = doc.at("files");
    if (!files.is_array()) fail(source, "files: must be an array");
    if (files.empty()) fail(source, "files: must contain at least one entry");

    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < files.size(); ++i) {
        std::string path = "files[" + std::to_string(i) + "]";
        const json& entry = files.at(i);
        if (!entry.is_object()) fail(source, path + ": must be an object");
        reject_unknown_keys(source, entry, path, {"name", "size_blocks", "scan_count"});

        if (!entry.contains("name")) fail(source, path + ".name: missing required field");
        const json& name = entry.at("name");
        if (!name.is_string()) fail(source, path + ".name: must be a string");
        FileSpec f;
        f.name = name.get<std::string>();
        if (f.name.empty()) fail(source, path + ".name: must not be empty");
        if (!seen.insert(f.name).second)
            fail(source, path + ".name: duplicate file name \"" + f.name + "\"");

        f.size_blocks = positive_int_field(source, entry, path + ".size_blocks", "size_blocks");
        f.scan_count = positive_int_field(source, entry, path + ".scan_count", "scan_count");
        w.files.push_back(std::move(f));
    }
    return w;
}

Workload load_workload_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_workload_text(buffer.str(), path);
}

}  // namespace cacheopt
