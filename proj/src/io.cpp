#include "lamsep/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "lamsep/builder.hpp"
#include "lamsep/certificate.hpp"

namespace lamsep {

namespace {

using nlohmann::json;

std::vector<std::string> nonblank_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(line);
    }
    return out;
}

int parse_int(const std::string& token, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "expected an integer for " + what + ", got '" + token + "'");
    }
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

json set_to_json(const VertexSet& s) { return json(s.members()); }

VertexSet set_from_json(int n, const json& j, const std::string& what) {
    if (!j.is_array()) throw Error(ErrorKind::ParseError, what + " must be an array of vertices");
    VertexSet out(n);
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, what + " holds a non-integer");
        int vi = v.get<int>();
        if (vi < 1 || vi > n)
            throw Error(ErrorKind::ParseError,
                        what + " vertex " + std::to_string(vi) + " not in 1.." + std::to_string(n));
        out.insert(vi);
    }
    return out;
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw Error(ErrorKind::ParseError, "graph JSON needs an integer 'n'");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.value("edges", json::array())) {
        if (!e.is_array() || e.size() != 2)
            throw Error(ErrorKind::ParseError, "graph edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::build(n, edges);
}

json family_to_json(const SeparationFamily& f) {
    json seps = json::array();
    for (const ManySidedSeparation& s : f) {
        json sides = json::array();
        for (const VertexSet& side : s.sides()) sides.push_back(set_to_json(side));
        seps.push_back(json{{"cutset", set_to_json(s.cutset())}, {"sides", sides}});
    }
    return json{{"n", f.n()}, {"separations", seps}};
}

SeparationFamily family_from_json(const json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw Error(ErrorKind::ParseError, "family JSON needs an integer 'n'");
    int n = j["n"].get<int>();
    SeparationFamily out(n);
    for (const auto& sep : j.value("separations", json::array())) {
        if (!sep.contains("sides") || !sep["sides"].is_array() || sep["sides"].size() < 2)
            throw Error(ErrorKind::ParseError, "separation needs at least two sides");
        std::vector<VertexSet> sides;
        for (const auto& side : sep["sides"]) sides.push_back(set_from_json(n, side, "side"));
        VertexSet cutset = set_from_json(n, sep.value("cutset", json::array()), "cutset");
        out.insert(ManySidedSeparation(n, sides, cutset));
    }
    return out;
}

} // namespace

Graph parse_graph(const std::string& text) {
    std::vector<std::string> lines = nonblank_lines(text);
    std::vector<std::string> body;
    bool pace = false;
    int n = -1, declared_m = -1;
    for (const std::string& line : lines) {
        if (line[0] == 'c') continue;
        if (line[0] == 'p') {
            auto t = tokens(line);
            if (t.size() != 4 || t[1] != "tw")
                throw Error(ErrorKind::ParseError, "bad problem line '" + line + "'");
            n = parse_int(t[2], "vertex count");
            declared_m = parse_int(t[3], "edge count");
            pace = true;
            continue;
        }
        body.push_back(line);
    }
    if (!pace) {
        if (body.empty()) throw Error(ErrorKind::ParseError, "empty graph input");
        auto first = tokens(body.front());
        if (first.size() != 1)
            throw Error(ErrorKind::ParseError, "plain edge list must start with the vertex count");
        n = parse_int(first[0], "vertex count");
        body.erase(body.begin());
    }
    std::vector<std::pair<int, int>> edges;
    for (const std::string& line : body) {
        auto t = tokens(line);
        if (t.size() != 2) throw Error(ErrorKind::ParseError, "bad edge line '" + line + "'");
        edges.emplace_back(parse_int(t[0], "edge endpoint"), parse_int(t[1], "edge endpoint"));
    }
    if (pace && declared_m >= 0 && static_cast<int>(edges.size()) != declared_m)
        throw Error(ErrorKind::ParseError,
                    "header declares " + std::to_string(declared_m) + " edges, found " +
                        std::to_string(edges.size()));
    try {
        return Graph::build(n, edges);
    } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

std::string emit_graph(const Graph& g) {
    std::ostringstream os;
    os << "p tw " << g.n() << ' ' << g.edges().size() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

TreeDecomposition parse_td(const std::string& text) {
    std::vector<std::string> lines = nonblank_lines(text);
    int declared_bags = -1, n = -1;
    std::map<int, VertexSet> bags;
    std::vector<std::pair<int, int>> edges;
    bool header = false;
    for (const std::string& line : lines) {
        if (line[0] == 'c') continue;
        auto t = tokens(line);
        if (t[0] == "s") {
            if (t.size() != 5 || t[1] != "td")
                throw Error(ErrorKind::ParseError, "bad solution line '" + line + "'");
            declared_bags = parse_int(t[2], "bag count");
            n = parse_int(t[4], "vertex count");
            header = true;
        } else if (t[0] == "b") {
            if (!header) throw Error(ErrorKind::ParseError, "bag line before header");
            if (t.size() < 2) throw Error(ErrorKind::ParseError, "bad bag line '" + line + "'");
            int id = parse_int(t[1], "bag id");
            if (bags.count(id))
                throw Error(ErrorKind::ParseError, "duplicate bag id " + std::to_string(id));
            VertexSet bag(n);
            for (std::size_t i = 2; i < t.size(); ++i) {
                int v = parse_int(t[i], "bag vertex");
                if (v < 1 || v > n)
                    throw Error(ErrorKind::ParseError, "bag vertex " + std::to_string(v) +
                                                           " not in 1.." + std::to_string(n));
                bag.insert(v);
            }
            bags[id] = bag;
        } else {
            if (!header) throw Error(ErrorKind::ParseError, "edge line before header");
            if (t.size() != 2) throw Error(ErrorKind::ParseError, "bad tree edge line '" + line + "'");
            edges.emplace_back(parse_int(t[0], "tree node"), parse_int(t[1], "tree node"));
        }
    }
    if (!header) throw Error(ErrorKind::ParseError, "missing 's td' header");
    if (declared_bags >= 0 && static_cast<int>(bags.size()) != declared_bags)
        throw Error(ErrorKind::ParseError, "header declares " + std::to_string(declared_bags) +
                                               " bags, found " + std::to_string(bags.size()));
    try {
        return TreeDecomposition(n, edges, bags);
    } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

std::string emit_td(const TreeDecomposition& td) {
    std::ostringstream os;
    int max_bag = 0;
    for (int t : td.nodes()) max_bag = std::max(max_bag, td.bag(t).size());
    os << "s td " << td.node_count() << ' ' << max_bag << ' ' << td.graph_n() << '\n';
    if (auto bp = leaf_bipartition(td); bp && !bp->x.empty()) {
        os << "c x-class:";
        for (int x : bp->x) os << ' ' << x;
        os << '\n';
    }
    for (int t : td.nodes()) {
        os << "b " << t;
        for (int v : td.bag(t).members()) os << ' ' << v;
        os << '\n';
    }
    std::vector<std::pair<int, int>> edges = td.tree_edges();
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) os << a << ' ' << b << '\n';
    return os.str();
}

SeparationFamily parse_family(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    try {
        return family_from_json(j);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

std::string emit_family(const SeparationFamily& f) { return family_to_json(f).dump(2) + "\n"; }

std::string emit_dot(const TreeDecomposition& td) {
    std::ostringstream os;
    os << "graph td {\n";
    std::vector<int> xs;
    if (auto bp = leaf_bipartition(td)) xs = bp->x;
    for (int t : td.nodes()) {
        bool internal = std::find(xs.begin(), xs.end(), t) != xs.end();
        os << "  n" << t << " [label=\"" << t << ": " << td.bag(t).to_string() << "\""
           << (internal ? ", shape=box" : "") << "];\n";
    }
    std::vector<std::pair<int, int>> edges = td.tree_edges();
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) os << "  n" << a << " -- n" << b << ";\n";
    os << "}\n";
    return os.str();
}

Certificate parse_certificate(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    Certificate cert;
    if (j.contains("graph")) {
        cert.graph = graph_from_json(j["graph"]);
        cert.has_graph = true;
    }
    if (!j.contains("family")) throw Error(ErrorKind::ParseError, "certificate lacks a family");
    cert.family = family_from_json(j["family"]);
    cert.check = j.value("check", std::string("unknown"));
    return cert;
}

std::string certificate_for_check(const Graph& g, const SeparationFamily& f,
                                  const std::string& check, const std::string& witness) {
    json j{{"check", check}, {"graph", graph_to_json(g)}, {"family", family_to_json(f)}};
    if (!witness.empty()) j["witness"] = witness;
    return j.dump(2) + "\n";
}

std::string certificate_for_pair(const ManySidedSeparation& a, const ManySidedSeparation& b) {
    SeparationFamily f(a.n());
    f.insert(a);
    if (b.n() == a.n()) f.insert(b);
    json j{{"check", "side_of"}, {"family", family_to_json(f)}};
    return j.dump(2) + "\n";
}

std::string certificate_for_family(const SeparationFamily& f) {
    json j{{"check", "find_outermost"}, {"family", family_to_json(f)}};
    return j.dump(2) + "\n";
}

std::string certificate_for_build(const Graph& g, const SeparationFamily& f,
                                  const std::vector<LocationClass>& classes,
                                  const std::string& reason) {
    json class_list = json::array();
    for (const LocationClass& cls : classes) {
        json flags = json::array();
        for (const Flag& fl : cls.flags) flags.push_back({fl.member, fl.side});
        class_list.push_back(json{{"flags", flags}, {"region", set_to_json(cls.region)}});
    }
    json j{{"check", "build_deciduous_td"},
           {"graph", graph_to_json(g)},
           {"family", family_to_json(f)},
           {"witness", reason},
           {"classes", class_list}};
    return j.dump(2) + "\n";
}

} // namespace lamsep
