#pragma once

#include "cutcover/graph.hpp"
#include "cutcover/invariant.hpp"
#include "cutcover/random_model.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace cutcover {

// Raised on any malformed textual/JSON input (maps to CLI exit code 2).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Graph text format: '#' comment lines, then "n m", then m lines "u v".

inline Graph read_graph(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        if (n == -1) {
            if (ls >> n >> m) {
                if (n <= 0 || m < 0) throw ParseError("graph header: bad n/m");
            } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
                throw ParseError("graph header: expected 'n m'");
            }
            continue;
        }
        int u, v;
        if (ls >> u >> v) {
            edges.emplace_back(std::min(u, v), std::max(u, v));
        } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
            throw ParseError("graph edge line: expected 'u v'");
        }
    }
    if (n == -1) throw ParseError("graph: empty input");
    if (int(edges.size()) != m) throw ParseError("graph: edge count mismatch");
    try {
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n'; // already sorted lexicographically
}

// ---------------------------------------------------------------------------
// Certificate JSON: {"x": "p/q", "chi_q": "p/q",
//                    "primal": [{"mask": "0x..", "weight": "p/q"}, ...],
//                    "dual": {"u-v": "p/q", ...}}

inline std::string mask_to_hex(const BigInt& m) {
    std::ostringstream os;
    os << "0x" << std::hex << m;
    return os.str();
}

inline BigInt mask_from_hex(const std::string& s) {
    if (s.size() < 3 || s[0] != '0' || (s[1] != 'x' && s[1] != 'X'))
        throw ParseError("mask: expected 0x-prefixed hex: " + s);
    try {
        return BigInt(s);
    } catch (const std::runtime_error&) {
        throw ParseError("mask: bad hex: " + s);
    }
}

inline nlohmann::json certificate_to_json(const Graph& g, const XResult& r) {
    nlohmann::json j;
    j["x"] = rat_to_string(r.x);
    j["chi_q"] = rat_to_string(chi_q_of_x(r.x));
    j["primal"] = nlohmann::json::array();
    for (const auto& [cut, w] : r.primal.family.entries)
        j["primal"].push_back({{"mask", mask_to_hex(cut.member_mask)}, {"weight", rat_to_string(w)}});
    nlohmann::json dual = nlohmann::json::object();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        dual[std::to_string(u) + "-" + std::to_string(v)] = rat_to_string(r.dual.y[e]);
    }
    j["dual"] = dual;
    return j;
}

struct ParsedCertificate {
    Rational x;
    CoverCertificate primal;
    DualCertificate dual;
    // Edges named by the dual map; used to detect graph mismatch.
    std::vector<Edge> dual_edges;
};

inline ParsedCertificate certificate_from_json(const nlohmann::json& j) {
    ParsedCertificate c;
    try {
        c.x = rat_parse(j.at("x").get<std::string>());
        for (const auto& entry : j.at("primal")) {
            Cut cut;
            cut.member_mask = mask_from_hex(entry.at("mask").get<std::string>());
            c.primal.family.entries.emplace_back(std::move(cut),
                                                 rat_parse(entry.at("weight").get<std::string>()));
        }
        c.primal.value = c.x;
        c.dual.value = c.x;
        for (auto it = j.at("dual").begin(); it != j.at("dual").end(); ++it) {
            const std::string& key = it.key();
            auto dash = key.find('-');
            if (dash == std::string::npos) throw ParseError("dual key: expected 'u-v': " + key);
            int u = std::stoi(key.substr(0, dash));
            int v = std::stoi(key.substr(dash + 1));
            c.dual_edges.emplace_back(std::min(u, v), std::max(u, v));
            c.dual.y.push_back(rat_parse(it.value().get<std::string>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate json: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("certificate json: ") + e.what());
    }
    return c;
}

// Reorders the parsed dual weights into g's edge order.
// Throws ParseError when the certificate names edges g does not have.
inline DualCertificate align_dual_to_graph(const Graph& g, const ParsedCertificate& c) {
    if (int(c.dual_edges.size()) != g.edge_count())
        throw ParseError("certificate/graph mismatch: edge count differs");
    DualCertificate d;
    d.value = c.dual.value;
    d.y.assign(g.edge_count(), Rational(0));
    for (size_t i = 0; i < c.dual_edges.size(); ++i) {
        int e = g.edge_index(c.dual_edges[i].first, c.dual_edges[i].second);
        if (e < 0)
            throw ParseError("certificate/graph mismatch: edge " + std::to_string(c.dual_edges[i].first) +
                             "-" + std::to_string(c.dual_edges[i].second) + " not in graph");
        d.y[e] = c.dual.y[i];
    }
    return d;
}

// ---------------------------------------------------------------------------
// Experiment serialization

inline nlohmann::json experiment_to_json(const Experiment& ex) {
    nlohmann::json j;
    j["n"] = ex.n;
    j["p"] = rat_to_string(ex.p);
    j["trials"] = ex.trials;
    j["seed"] = ex.seed;
    j["delta"] = rat_to_string(ex.delta);
    j["claim1_count"] = ex.claim1_count;
    j["claim2_count"] = ex.claim2_count;
    j["mean_b"] = rat_to_string(ex.mean_b);
    j["records"] = nlohmann::json::array();
    for (const auto& r : ex.records) {
        nlohmann::json rec{{"edges", r.edges},
                           {"maxcut", r.maxcut},
                           {"b", rat_to_string(r.b)},
                           {"claim1", r.claim1},
                           {"claim2", r.claim2}};
        if (r.x) rec["x"] = rat_to_string(*r.x);
        j["records"].push_back(std::move(rec));
    }
    return j;
}

inline void experiment_to_csv(std::ostream& out, const Experiment& ex) {
    out << "trial,edges,maxcut,b,claim1,claim2,x\n";
    for (size_t t = 0; t < ex.records.size(); ++t) {
        const auto& r = ex.records[t];
        out << t << ',' << r.edges << ',' << r.maxcut << ',' << rat_to_string(r.b) << ','
            << int(r.claim1) << ',' << int(r.claim2) << ',' << (r.x ? rat_to_string(*r.x) : "")
            << '\n';
    }
}

} // namespace cutcover
