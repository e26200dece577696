#include "adeg/io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace adeg {

namespace {

std::vector<std::vector<std::string>> tokenize_lines(const std::string& text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
}

Result<int> parse_int(const std::string& s, const char* what) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        return make_error(Errc::parse, std::string(what) + ": bad integer '" + s + "'");
    }
}

struct RawGraph {
    std::vector<int> ids;
    std::vector<std::tuple<int, int, int>> edges;  // u, v, sign
};

Result<RawGraph> parse_graph_records(const std::vector<std::vector<std::string>>& lines,
                                     bool sign_optional) {
    RawGraph raw;
    for (size_t li = 1; li < lines.size(); ++li) {
        const auto& t = lines[li];
        if (t[0] == "v") {
            if (t.size() != 2) return make_error(Errc::parse, "v record needs one id");
            auto id = parse_int(t[1], "v");
            if (!id) return id.error();
            if (id.value() < 0) return make_error(Errc::parse, "vertex ids are non-negative");
            raw.ids.push_back(id.value());
        } else if (t[0] == "e") {
            if (t.size() != 4 && !(sign_optional && t.size() == 3))
                return make_error(Errc::parse, "e record needs: e <u> <v> <+|->");
            auto u = parse_int(t[1], "e");
            if (!u) return u.error();
            auto v = parse_int(t[2], "e");
            if (!v) return v.error();
            int sign = 1;
            if (t.size() == 4) {
                if (t[3] == "+" || t[3] == "+1")
                    sign = 1;
                else if (t[3] == "-" || t[3] == "-1")
                    sign = -1;
                else
                    return make_error(Errc::parse, "edge sign must be + or -");
            }
            raw.edges.emplace_back(u.value(), v.value(), sign);
        } else if (t[0] == "dir" || t[0] == "rot" || t[0] == "outer") {
            continue;  // plane records handled separately
        } else {
            return make_error(Errc::parse, "unknown record '" + t[0] + "'");
        }
    }
    return raw;
}

Result<SignedGraph> build_graph(const RawGraph& raw) {
    try {
        SignedGraph g(raw.ids);
        for (auto [u, v, s] : raw.edges) g.add_edge(u, v, s);
        return g;
    } catch (const std::exception& e) {
        return make_error(Errc::invalid_input, e.what());
    }
}

}  // namespace

Result<SignedGraph> parse_graph_text(const std::string& text) {
    auto lines = tokenize_lines(text);
    if (lines.empty() || lines[0].size() != 2 || lines[0][0] != "graph" ||
        lines[0][1] != "signed")
        return make_error(Errc::parse, "expected 'graph signed' header");
    auto raw = parse_graph_records(lines, false);
    if (!raw) return raw.error();
    return build_graph(raw.value());
}

std::string write_graph_text(const SignedGraph& g) {
    std::ostringstream out;
    out << "graph signed\n";
    for (int id : g.vertex_ids()) out << "v " << id << "\n";
    for (const Edge& e : g.edges())
        out << "e " << e.u << " " << e.v << " " << (e.sign > 0 ? "+" : "-") << "\n";
    return out.str();
}

bool looks_like_plane_text(const std::string& text) {
    auto lines = tokenize_lines(text);
    return !lines.empty() && lines[0].size() == 2 && lines[0][0] == "graph" &&
           lines[0][1] == "plane";
}

Result<PlaneGraph> parse_plane_text(const std::string& text) {
    auto lines = tokenize_lines(text);
    if (lines.empty() || lines[0].size() != 2 || lines[0][0] != "graph" || lines[0][1] != "plane")
        return make_error(Errc::parse, "expected 'graph plane' header");
    auto raw = parse_graph_records(lines, true);
    if (!raw) return raw.error();
    auto g = build_graph(raw.value());
    if (!g) return g.error();

    PlaneGraph p;
    p.graph = std::move(g).value();
    for (size_t li = 1; li < lines.size(); ++li) {
        const auto& t = lines[li];
        if (t[0] == "dir") {
            if (t.size() != 3) return make_error(Errc::parse, "dir record needs: dir <u> <v>");
            auto u = parse_int(t[1], "dir");
            if (!u) return u.error();
            auto v = parse_int(t[2], "dir");
            if (!v) return v.error();
            if (!p.graph.has_vertex(u.value()) || !p.graph.has_vertex(v.value()) ||
                p.graph.sign(u.value(), v.value()) == 0)
                return make_error(Errc::invalid_input, "dir record on a missing edge");
            set_edge_dir(p, u.value(), v.value());
        } else if (t[0] == "rot") {
            // rot <v>: <neighbours...> (the colon may stick to the id)
            std::vector<std::string> toks(t.begin() + 1, t.end());
            if (toks.empty()) return make_error(Errc::parse, "rot record needs a vertex");
            std::string first = toks[0];
            bool colon = false;
            if (!first.empty() && first.back() == ':') {
                first.pop_back();
                colon = true;
            }
            auto v = parse_int(first, "rot");
            if (!v) return v.error();
            std::vector<int> order;
            for (size_t k = 1; k < toks.size(); ++k) {
                std::string s = toks[k];
                if (!colon && k == 1 && s == ":") continue;
                auto w = parse_int(s, "rot");
                if (!w) return w.error();
                order.push_back(w.value());
            }
            p.rotation[v.value()] = std::move(order);
        } else if (t[0] == "outer") {
            if (t.size() != 2) return make_error(Errc::parse, "outer record needs an index");
            auto f = parse_int(t[1], "outer");
            if (!f) return f.error();
            p.outer_face = f.value();
        }
    }
    for (int id : p.graph.vertex_ids())
        if (!p.rotation.count(id)) p.rotation[id] = p.graph.neighbors(id);
    for (const Edge& e : p.graph.edges())
        if (edge_dir(p, e.u, e.v) == 0) set_edge_dir(p, e.u, e.v);
    return p;
}

std::string write_plane_text(const PlaneGraph& p) {
    std::ostringstream out;
    out << "graph plane\n";
    for (int id : p.graph.vertex_ids()) out << "v " << id << "\n";
    for (const Edge& e : p.graph.edges())
        out << "e " << e.u << " " << e.v << " " << (e.sign > 0 ? "+" : "-") << "\n";
    for (const Edge& e : p.graph.edges()) {
        int d = edge_dir(p, e.u, e.v);
        out << "dir " << (d > 0 ? e.u : e.v) << " " << (d > 0 ? e.v : e.u) << "\n";
    }
    for (int id : p.graph.vertex_ids()) {
        auto it = p.rotation.find(id);
        if (it == p.rotation.end() || it->second.empty()) continue;
        out << "rot " << id << ":";
        for (int w : it->second) out << " " << w;
        out << "\n";
    }
    out << "outer " << p.outer_face << "\n";
    return out.str();
}

ordered_json json_of(const Int& v) {
    if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
        return static_cast<int64_t>(v);
    return v.str();
}

ordered_json json_of(const std::vector<Int>& v) {
    ordered_json a = ordered_json::array();
    for (const Int& x : v) a.push_back(json_of(x));
    return a;
}

ordered_json json_of(const IMat& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.n(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(json_of(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json json_of(const DefinitenessReport& rep) {
    ordered_json j;
    j["verdict"] = verdict_name(rep.verdict);
    j["det"] = json_of(rep.det);
    j["leading_minors"] = json_of(rep.leading_minors);
    if (!rep.witness.empty()) j["witness"] = json_of(rep.witness);
    return j;
}

ordered_json json_of(const CycleReport& rep) {
    ordered_json j;
    j["vertices"] = rep.cycle;
    j["length"] = rep.length;
    j["negative_edges"] = rep.negative_count;
    j["positive"] = rep.positive;
    return j;
}

ordered_json json_of(const MinorCertificate& cert) {
    ordered_json j;
    j["pattern"] = cert.pattern_name;
    ordered_json emb = ordered_json::array();
    for (auto [p, h] : cert.embedding) emb.push_back(ordered_json::array({p, h}));
    j["embedding"] = std::move(emb);
    return j;
}

ordered_json json_of(const ADEType& t) {
    ordered_json j;
    j["name"] = ade_name(t);
    j["family"] = t.family == ADEFamily::A ? "A" : (t.family == ADEFamily::D ? "D" : "E");
    j["rank"] = t.rank;
    j["vertex_map"] = t.vertex_map;
    j["det"] = json_of(expected_det(t));
    return j;
}

namespace {

ordered_json move_to_json(const MoveRecord& m) {
    ordered_json j;
    switch (m.kind) {
        case MoveKind::TMove:
            j["kind"] = "tmove";
            j["pivot"] = m.pivot;
            j["other"] = m.other;
            j["epsilon"] = m.epsilon;
            break;
        case MoveKind::Switch:
            j["kind"] = "switch";
            j["vertex"] = m.vertex;
            break;
        case MoveKind::Permute:
            j["kind"] = "permute";
            j["permutation"] = m.permutation;
            break;
    }
    return j;
}

Result<MoveRecord> move_from_json(const ordered_json& j) {
    MoveRecord m;
    if (!j.is_object() || !j.contains("kind"))
        return make_error(Errc::parse, "move without a kind");
    std::string kind = j["kind"];
    try {
        if (kind == "tmove") {
            m.kind = MoveKind::TMove;
            m.pivot = j.at("pivot").get<int>();
            m.other = j.at("other").get<int>();
            m.epsilon = j.at("epsilon").get<int>();
            if (m.epsilon != 1 && m.epsilon != -1)
                return make_error(Errc::parse, "epsilon must be +-1");
        } else if (kind == "switch") {
            m.kind = MoveKind::Switch;
            m.vertex = j.at("vertex").get<int>();
        } else if (kind == "permute") {
            m.kind = MoveKind::Permute;
            m.permutation = j.at("permutation").get<std::vector<int>>();
        } else {
            return make_error(Errc::parse, "unknown move kind '" + kind + "'");
        }
    } catch (const std::exception& e) {
        return make_error(Errc::parse, std::string("bad move record: ") + e.what());
    }
    return m;
}

}  // namespace

ordered_json transcript_to_json(const Transcript& t, const IMat* cert) {
    ordered_json j;
    j["start"] = write_graph_text(t.start);
    ordered_json moves = ordered_json::array();
    for (const MoveRecord& m : t.moves) moves.push_back(move_to_json(m));
    j["moves"] = std::move(moves);
    j["end"] = write_graph_text(t.end);
    if (cert) j["certificate"] = json_of(*cert);
    return j;
}

Result<ParsedTranscript> transcript_from_json(const std::string& json_text) {
    ordered_json j = ordered_json::parse(json_text, nullptr, false);
    if (j.is_discarded()) return make_error(Errc::parse, "transcript: invalid JSON");
    if (!j.is_object() || !j.contains("start") || !j.contains("moves") || !j.contains("end"))
        return make_error(Errc::parse, "transcript: needs start, moves, end");
    ParsedTranscript out;
    auto start = parse_graph_text(j["start"].get<std::string>());
    if (!start) return start.error();
    auto end = parse_graph_text(j["end"].get<std::string>());
    if (!end) return end.error();
    out.transcript.start = std::move(start).value();
    out.transcript.end = std::move(end).value();
    for (const auto& mj : j["moves"]) {
        auto m = move_from_json(mj);
        if (!m) return m.error();
        out.transcript.moves.push_back(std::move(m).value());
    }
    if (j.contains("certificate")) {
        const auto& rows = j["certificate"];
        if (!rows.is_array() || rows.size() != static_cast<size_t>(out.transcript.start.n()))
            return make_error(Errc::parse, "certificate: wrong shape");
        IMat u(out.transcript.start.n());
        for (int i = 0; i < u.n(); ++i) {
            if (!rows[i].is_array() || rows[i].size() != static_cast<size_t>(u.n()))
                return make_error(Errc::parse, "certificate: wrong shape");
            for (int k = 0; k < u.n(); ++k) {
                const auto& cell = rows[i][k];
                if (cell.is_number_integer())
                    u.at(i, k) = Int(cell.get<int64_t>());
                else if (cell.is_string())
                    u.at(i, k) = Int(cell.get<std::string>());
                else
                    return make_error(Errc::parse, "certificate: entries must be integers");
            }
        }
        out.cert = std::move(u);
    }
    return out;
}

std::string to_dot(const SignedGraph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int id : g.vertex_ids()) out << "  " << id << ";\n";
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v << " [label=\"" << (e.sign > 0 ? "+" : "-") << "\"";
        if (e.sign < 0) out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

ordered_json json_of(const Reduction& red, bool include_certificate) {
    ordered_json j;
    j["ade"] = json_of(red.ade);
    j["transcript"] = transcript_to_json(red.transcript,
                                         include_certificate ? &red.cert : nullptr);
    return j;
}

}  // namespace adeg
