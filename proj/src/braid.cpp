#include "adeg/braid.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace adeg {

Result<BraidWord> parse_braid(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    BraidWord w;
    int strands = -1;
    bool first = true;
    w.letters.clear();
    while (in >> tok) {
        if (first && tok.rfind("strands=", 0) == 0) {
            first = false;
            try {
                size_t used = 0;
                strands = std::stoi(tok.substr(8), &used);
                if (used != tok.size() - 8) throw std::invalid_argument("");
            } catch (...) {
                return make_error(Errc::parse, "braid: bad strands prefix '" + tok + "'");
            }
            if (strands < 2) return make_error(Errc::parse, "braid: strands must be >= 2");
            continue;
        }
        first = false;
        std::string num = tok;
        if (num.size() > 1 && (num[0] == 's' || num[0] == 'S')) num = num.substr(1);
        int k = 0;
        try {
            size_t used = 0;
            k = std::stoi(num, &used);
            if (used != num.size()) throw std::invalid_argument("");
        } catch (...) {
            return make_error(Errc::parse, "braid: bad token '" + tok + "'");
        }
        if (k <= 0)
            return make_error(Errc::invalid_input,
                              "braid: generator index must be positive, got " + tok);
        w.letters.push_back(k);
    }
    if (w.letters.empty()) return make_error(Errc::parse, "braid: empty word");
    int maxk = *std::max_element(w.letters.begin(), w.letters.end());
    if (strands < 0) {
        w.strands = maxk + 1;
    } else {
        if (maxk >= strands)
            return make_error(Errc::invalid_input,
                              "braid: generator s" + std::to_string(maxk) +
                                  " needs more than " + std::to_string(strands) + " strands");
        w.strands = strands;
    }
    return w;
}

LinkingGraph linking_graph(const BraidWord& b) {
    std::map<int, std::vector<int>> occ;  // column -> word positions
    for (size_t p = 0; p < b.letters.size(); ++p) occ[b.letters[p]].push_back(static_cast<int>(p));

    std::vector<Brick> bricks;
    for (auto& [col, positions] : occ)
        for (size_t i = 0; i + 1 < positions.size(); ++i)
            bricks.push_back({col, positions[i], positions[i + 1]});
    // already ordered by (column, top) since the map is ordered

    const int n = static_cast<int>(bricks.size());
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    SignedGraph g(ids);

    auto inside = [](int a, int lo, int hi) { return lo < a && a < hi; };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Brick& s = bricks[i];
            const Brick& t = bricks[j];
            if (s.column == t.column) {
                if (s.bottom == t.top) g.add_edge(i, j, -1);
            } else if (t.column == s.column + 1) {
                // t is the right-hand brick; exactly one endpoint inside s
                bool top_in = inside(t.top, s.top, s.bottom);
                bool bot_in = inside(t.bottom, s.top, s.bottom);
                if (top_in != bot_in) g.add_edge(i, j, top_in ? 1 : -1);
            }
        }
    }

    LinkingGraph out;
    out.form.m = gram_matrix(g);
    out.form.v = IMat(n);
    for (int i = 0; i < n; ++i) {
        out.form.v.at(i, i) = 1;
        for (int j = i + 1; j < n; ++j) out.form.v.at(i, j) = out.form.m.entry(i, j);
    }
    out.graph = std::move(g);
    out.bricks = std::move(bricks);
    return out;
}

int signature(const SeifertForm& form) { return inertia(form.m).signature(); }

Result<LinkClassification> classify_link(const BraidWord& b, bool run_reduction) {
    LinkClassification out;
    out.word = b;
    out.linking = linking_graph(b);
    out.rank = out.linking.graph.n();
    out.definiteness = definiteness(out.linking.form.m);
    out.sig = signature(out.linking.form);
    out.det = out.definiteness.det;
    out.maximal = out.definiteness.verdict == Verdict::PositiveDefinite;
    if (out.maximal && out.rank > 0 && run_reduction) {
        auto red = reduce_to_ade(out.linking.graph, MoveMode::TPrime);
        if (!red) return red.error();
        auto* ok = std::get_if<Reduction>(&red.value());
        if (!ok)
            return make_error(Errc::search_exhausted,
                              "classify_link: reducer disagreed with the definiteness gate");
        out.reduction = std::move(*ok);
    }
    return out;
}

}  // namespace adeg
