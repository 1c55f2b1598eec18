#include "kposet/io.hpp"
#include "kposet/error.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

using nlohmann::json;

namespace kposet {

namespace {
    auto parse_json(std::string_view text) -> json
    {
        try {
            return json::parse(text);
        }
        catch (const json::parse_error & e) {
            // byte is 1-based and points just past the offending character
            std::size_t line = 1, column = 1;
            for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
                if (text[i] == '\n') {
                    ++line;
                    column = 1;
                }
                else
                    ++column;
            }
            throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": malformed JSON");
        }
    }

    auto field_error(const std::string & field, const std::string & what) -> Error
    {
        return Error(ErrorKind::ParseError, "field '" + field + "': " + what);
    }

    auto member(const json & object, const std::string & name, const std::string & path) -> const json &
    {
        auto it = object.find(name);
        if (it == object.end())
            throw field_error(path + name, "missing");
        return *it;
    }

    auto as_string(const json & value, const std::string & field) -> std::string
    {
        if (! value.is_string())
            throw field_error(field, "expected a string");
        return value.get<std::string>();
    }

    auto as_int(const json & value, const std::string & field) -> long long
    {
        if (! value.is_number_integer())
            throw field_error(field, "expected an integer");
        return value.get<long long>();
    }

    auto as_array(const json & value, const std::string & field) -> const json &
    {
        if (! value.is_array())
            throw field_error(field, "expected an array");
        return value;
    }

    auto as_pairs(const json & value, const std::string & field) -> std::vector<std::pair<std::string, std::string>>
    {
        std::vector<std::pair<std::string, std::string>> pairs;
        const auto & array = as_array(value, field);
        for (std::size_t i = 0; i < array.size(); ++i) {
            auto path = field + "[" + std::to_string(i) + "]";
            if (! array[i].is_array() || array[i].size() != 2)
                throw field_error(path, "expected a pair of ids");
            pairs.emplace_back(as_string(array[i][0], path + "[0]"), as_string(array[i][1], path + "[1]"));
        }
        return pairs;
    }

    auto quoted(const std::string & s) -> std::string { return json(s).dump(); }

    auto dot_quoted(const std::string & s) -> std::string
    {
        std::string out = "\"";
        for (auto c : s) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        out += '"';
        return out;
    }
}

auto parse_poset(std::string_view text) -> LabeledPoset
{
    auto doc = parse_json(text);
    if (! doc.is_object())
        throw Error(ErrorKind::ParseError, "top level: expected an object");

    auto k = as_int(member(doc, "k", ""), "k");
    if (k < 1 || k > 1'000'000)
        throw field_error("k", "must be a positive integer");

    std::vector<std::pair<std::string, Label>> elements;
    const auto & array = as_array(member(doc, "elements", ""), "elements");
    for (std::size_t i = 0; i < array.size(); ++i) {
        auto path = "elements[" + std::to_string(i) + "]";
        if (! array[i].is_object())
            throw field_error(path, "expected an object");
        auto id = as_string(member(array[i], "id", path + "."), path + ".id");
        auto label = as_int(member(array[i], "label", path + "."), path + ".label");
        if (label < -1'000'000 || label > 1'000'000)
            throw Error(ErrorKind::LabelOutOfRange, "element '" + id + "' has label " + std::to_string(label));
        elements.emplace_back(std::move(id), static_cast<Label>(label));
    }
    std::vector<std::pair<std::string, std::string>> covers;
    if (doc.contains("covers"))
        covers = as_pairs(doc["covers"], "covers");
    return build_poset(static_cast<int>(k), elements, covers);
}

auto serialize_poset(const LabeledPoset & p) -> std::string
{
    std::ostringstream out;
    out << "{\n  \"k\": " << p.k() << ",\n  \"elements\": [";
    for (std::size_t x = 0; x < p.size(); ++x)
        out << (x ? ",\n" : "\n") << "    {\"id\": " << quoted(p.id(x)) << ", \"label\": " << p.label(x) << "}";
    out << (p.empty() ? "],\n" : "\n  ],\n") << "  \"covers\": [";
    const auto & covers = p.covers();
    for (std::size_t i = 0; i < covers.size(); ++i)
        out << (i ? ",\n" : "\n") << "    [" << quoted(p.id(covers[i].first)) << ", " << quoted(p.id(covers[i].second)) << "]";
    out << (covers.empty() ? "]\n" : "\n  ]\n") << "}\n";
    return out.str();
}

auto parse_digraph(std::string_view text) -> Digraph
{
    auto doc = parse_json(text);
    if (! doc.is_object())
        throw Error(ErrorKind::ParseError, "top level: expected an object");
    std::vector<std::string> vertices;
    const auto & array = as_array(member(doc, "vertices", ""), "vertices");
    for (std::size_t i = 0; i < array.size(); ++i)
        vertices.push_back(as_string(array[i], "vertices[" + std::to_string(i) + "]"));
    std::vector<std::pair<std::string, std::string>> edges;
    if (doc.contains("edges"))
        edges = as_pairs(doc["edges"], "edges");
    return build_digraph(vertices, edges);
}

auto serialize_digraph(const Digraph & g) -> std::string
{
    std::ostringstream out;
    out << "{\n  \"vertices\": [";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        out << (v ? ", " : "") << quoted(g.id(v));
    out << "],\n  \"edges\": [";
    const auto & edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        out << (i ? ",\n" : "\n") << "    [" << quoted(g.id(edges[i].first)) << ", " << quoted(g.id(edges[i].second)) << "]";
    out << (edges.empty() ? "]\n" : "\n  ]\n") << "}\n";
    return out.str();
}

auto is_digraph_document(std::string_view text) -> bool
{
    auto doc = parse_json(text);
    return doc.is_object() && doc.contains("vertices");
}

auto export_dot(const LabeledPoset & p) -> std::string
{
    std::ostringstream out;
    out << "graph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (std::size_t x = 0; x < p.size(); ++x)
        out << "  " << dot_quoted(p.id(x)) << " [label=" << dot_quoted(p.id(x) + ":" + std::to_string(p.label(x))) << "];\n";
    for (auto [lower, upper] : p.covers())
        out << "  " << dot_quoted(p.id(lower)) << " -- " << dot_quoted(p.id(upper)) << ";\n";
    out << "}\n";
    return out.str();
}

auto export_dot(const Digraph & g) -> std::string
{
    std::ostringstream out;
    out << "digraph G {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        out << "  " << dot_quoted(g.id(v)) << ";\n";
    for (auto [u, v] : g.edges())
        out << "  " << dot_quoted(g.id(u)) << " -> " << dot_quoted(g.id(v)) << ";\n";
    out << "}\n";
    return out.str();
}

auto read_file(const std::string & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace kposet
