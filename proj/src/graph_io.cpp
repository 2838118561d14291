#include "gkc/graph_io.hpp"

#include <sstream>

namespace gkc {

using nlohmann::json;

json label_to_json(const Label& l) {
    if (l.is_prime()) return l.prime;
    return json{{"class", {{"name", l.name}, {"members", l.members}}}};
}

Label label_from_json(const json& j) {
    if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0))
        return Label::of_prime(j.get<std::uint64_t>());
    if (j.is_object() && j.contains("class")) {
        const auto& c = j.at("class");
        if (!c.is_object() || !c.contains("name") || !c.at("name").is_string())
            throw GraphError("class label needs a string \"name\"");
        std::vector<std::uint64_t> members;
        if (c.contains("members")) members = c.at("members").get<std::vector<std::uint64_t>>();
        return Label::of_class(c.at("name").get<std::string>(), members);
    }
    throw GraphError("bad vertex label: " + j.dump());
}

json graph_to_json(const Graph& g) {
    json vs = json::array(), es = json::array();
    for (const auto& v : g.vertices()) vs.push_back(label_to_json(v));
    for (const auto& [a, b] : g.edge_labels()) es.push_back(json::array({label_to_json(a), label_to_json(b)}));
    return json{{"schema", kGraphSchema}, {"vertices", vs}, {"edges", es}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array())
        throw GraphError("graph document needs a \"vertices\" array");
    if (j.contains("schema") && j.at("schema") != kGraphSchema)
        throw GraphError("unsupported graph schema " + j.at("schema").dump());
    VertexList vs;
    for (const auto& v : j.at("vertices")) vs.push_back(label_from_json(v));
    std::vector<std::pair<Label, Label>> es;
    if (j.contains("edges")) {
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw GraphError("edge must be a pair: " + e.dump());
            es.emplace_back(label_from_json(e[0]), label_from_json(e[1]));
        }
    }
    return Graph::from_edges(std::move(vs), es);
}

json compact_to_json(const CompactForm& cf) {
    json out = graph_to_json(cf.quotient);
    json classes = json::array();
    for (const auto& [label, members] : cf.class_contents) {
        json ms = json::array();
        for (const auto& m : members) ms.push_back(label_to_json(m));
        classes.push_back({{"label", label_to_json(label)}, {"members", ms}});
    }
    out["classes"] = classes;
    return out;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string to_dot(const Graph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph \"" << dot_escape(name) << "\" {\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& v = g.vertex(i);
        os << "  v" << i << " [label=\"" << dot_escape(v.str());
        if (!v.is_prime() && !v.members.empty()) {
            os << "\\n{";
            for (std::size_t k = 0; k < v.members.size(); ++k) os << (k ? "," : "") << v.members[k];
            os << "}";
        }
        os << "\"];\n";
    }
    for (auto [i, j] : g.edges()) os << "  v" << i << " -- v" << j << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_table(const Graph& g) {
    std::ostringstream os;
    for (std::size_t i = 0; i < g.size(); ++i) {
        os << g.vertex(i).str() << ":";
        for (auto j : g.neighbors(i)) os << " " << g.vertex(j).str();
        os << "\n";
    }
    return os.str();
}

}  // namespace gkc
