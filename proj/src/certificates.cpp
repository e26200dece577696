#include "adeg/certificates.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace adeg {

namespace {

// Cycles are enumerated with the smallest position as anchor; the second
// vertex is kept below the last to visit each cycle once.
template <class Fn>
bool for_each_cycle(const SignedGraph& g, Fn&& fn) {
    const int n = g.n();
    std::vector<int> path;
    std::vector<char> on_path(n, 0);
    bool keep_going = true;

    auto dfs = [&](auto&& self, int root, int cur) -> void {
        if (!keep_going) return;
        for (int next = root; next < n && keep_going; ++next) {
            if (g.sign_at(cur, next) == 0) continue;
            if (next == root) {
                if (path.size() >= 3 && path[1] < path.back()) {
                    if (!fn(path)) keep_going = false;
                }
                continue;
            }
            if (next == root || on_path[next] || next < root) continue;
            path.push_back(next);
            on_path[next] = 1;
            self(self, root, next);
            on_path[next] = 0;
            path.pop_back();
        }
    };

    for (int root = 0; root < n && keep_going; ++root) {
        path.assign(1, root);
        on_path.assign(n, 0);
        on_path[root] = 1;
        dfs(dfs, root, root);
    }
    return keep_going;
}

CycleReport report_for(const SignedGraph& g, const std::vector<int>& path) {
    CycleReport r;
    r.length = static_cast<int>(path.size());
    int neg = 0;
    for (size_t i = 0; i < path.size(); ++i) {
        int a = path[i], b = path[(i + 1) % path.size()];
        if (g.sign_at(a, b) < 0) ++neg;
        r.cycle.push_back(g.id_at(path[i]));
    }
    r.negative_count = neg;
    r.positive = (neg % 2) != (r.length % 2);
    return r;
}

}  // namespace

Result<std::vector<CycleReport>> enumerate_cycles(const SignedGraph& g, int bound) {
    if (g.n() > bound)
        return make_error(Errc::size_bound, "enumerate_cycles: graph exceeds the bound");
    std::vector<CycleReport> out;
    for_each_cycle(g, [&](const std::vector<int>& path) {
        out.push_back(report_for(g, path));
        return true;
    });
    return out;
}

Result<CyclesVerdict> all_cycles_positive(const SignedGraph& g, int bound) {
    if (g.n() > bound)
        return make_error(Errc::size_bound, "all_cycles_positive: graph exceeds the bound");
    CyclesVerdict v;
    for_each_cycle(g, [&](const std::vector<int>& path) {
        CycleReport r = report_for(g, path);
        if (!r.positive) {
            v.all_positive = false;
            v.failing = std::move(r);
            return false;
        }
        return true;
    });
    return v;
}

std::optional<std::vector<std::pair<int, int>>> induced_embedding(const SignedGraph& pattern,
                                                                  const SignedGraph& host) {
    const int np = pattern.n(), nh = host.n();
    if (np > nh) return std::nullopt;

    // visit pattern vertices in a connected order, highest degree first
    std::vector<int> order;
    {
        std::vector<char> used(np, 0);
        std::vector<int> deg(np, 0);
        for (int i = 0; i < np; ++i)
            for (int j = 0; j < np; ++j)
                if (pattern.sign_at(i, j) != 0) ++deg[i];
        for (int step = 0; step < np; ++step) {
            int best = -1;
            for (int i = 0; i < np; ++i) {
                if (used[i]) continue;
                bool attached = order.empty();
                for (int o : order)
                    if (pattern.sign_at(o, i) != 0) attached = true;
                if (!attached) continue;
                if (best < 0 || deg[i] > deg[best]) best = i;
            }
            if (best < 0)  // disconnected pattern: start a fresh component
                for (int i = 0; i < np && best < 0; ++i)
                    if (!used[i]) best = i;
            used[best] = 1;
            order.push_back(best);
        }
    }

    std::vector<int> hdeg(nh, 0);
    for (int i = 0; i < nh; ++i)
        for (int j = 0; j < nh; ++j)
            if (host.sign_at(i, j) != 0) ++hdeg[i];
    std::vector<int> pdeg(np, 0);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j)
            if (pattern.sign_at(i, j) != 0) ++pdeg[i];

    std::vector<int> map(np, -1);
    std::vector<char> taken(nh, 0);

    auto rec = [&](auto&& self, size_t k) -> bool {
        if (k == order.size()) return true;
        int p = order[k];
        for (int h = 0; h < nh; ++h) {
            if (taken[h] || hdeg[h] < pdeg[p]) continue;
            bool fits = true;
            for (size_t t = 0; t < k && fits; ++t) {
                int q = order[t];
                bool pe = pattern.sign_at(p, q) != 0;
                bool he = host.sign_at(h, map[q]) != 0;
                if (pe != he) fits = false;  // induced: adjacency must match exactly
            }
            if (!fits) continue;
            map[p] = h;
            taken[h] = 1;
            if (self(self, k + 1)) return true;
            taken[h] = 0;
            map[p] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;

    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < np; ++p) out.emplace_back(pattern.id_at(p), host.id_at(map[p]));
    return out;
}

std::optional<MinorCertificate> find_forbidden_minor(const SignedGraph& g,
                                                     const MinorCatalog& catalog) {
    for (const MinorPattern& pat : catalog.trees) {
        if (pat.shape.n() > g.n()) continue;
        if (auto emb = induced_embedding(pat.shape, g))
            return MinorCertificate{pat.name, std::move(*emb)};
    }
    return std::nullopt;
}

namespace {

// AHU-style canonical code of a free tree, rooted at its center(s).
std::string tree_code(const SignedGraph& t) {
    const int n = t.n();
    if (n == 1) return "()";
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (t.sign_at(i, j) != 0) adj[i].push_back(j);

    // strip leaves to find the 1- or 2-vertex center
    std::vector<int> deg(n);
    for (int i = 0; i < n; ++i) deg[i] = static_cast<int>(adj[i].size());
    std::vector<int> layer;
    std::vector<char> removed(n, 0);
    for (int i = 0; i < n; ++i)
        if (deg[i] <= 1) layer.push_back(i);
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --remaining;
            for (int w : adj[v])
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }

    auto code = [&](auto&& self, int v, int parent) -> std::string {
        std::vector<std::string> kids;
        for (int w : adj[v])
            if (w != parent) kids.push_back(self(self, w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) s += k;
        s += ")";
        return s;
    };

    std::string best;
    for (int c = 0; c < n; ++c) {
        if (removed[c]) continue;
        std::string s = code(code, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

SignedGraph with_extra_leaf(const SignedGraph& t, int attach_pos) {
    std::vector<int> ids = t.vertex_ids();
    ids.push_back(t.n());
    SignedGraph h(ids);
    for (const Edge& e : t.edges()) h.add_edge(e.u, e.v, 1);
    h.add_edge(t.id_at(attach_pos), t.n(), 1);
    return h;
}

struct ArmProfile {
    int branch_pos = -1;            // unique degree-3 vertex, if any
    std::vector<int> arm_lengths;   // sorted ascending
};

std::optional<ArmProfile> arm_profile(const SignedGraph& t) {
    ArmProfile p;
    for (int i = 0; i < t.n(); ++i) {
        int d = t.degree(t.id_at(i));
        if (d > 3) return std::nullopt;
        if (d == 3) {
            if (p.branch_pos >= 0) return std::nullopt;
            p.branch_pos = i;
        }
    }
    if (p.branch_pos < 0) return std::nullopt;
    for (int nb : t.neighbors(t.id_at(p.branch_pos))) {
        int len = 0, prev = t.id_at(p.branch_pos), cur = nb;
        while (true) {
            ++len;
            auto nxt = t.neighbors(cur);
            int follow = -1;
            for (int w : nxt)
                if (w != prev) follow = w;
            if (follow < 0) break;
            prev = cur;
            cur = follow;
        }
        p.arm_lengths.push_back(len);
    }
    std::sort(p.arm_lengths.begin(), p.arm_lengths.end());
    return p;
}

// Provisional letters for the usual forbidden list; correctness rests on the
// mined shapes, the letters are aliases only.
std::pair<std::string, std::string> pattern_names(const SignedGraph& t) {
    const int n = t.n();
    int maxdeg = 0, forks = 0;
    for (int i = 0; i < n; ++i) {
        int d = t.degree(t.id_at(i));
        maxdeg = std::max(maxdeg, d);
        if (d >= 3) ++forks;
    }
    if (maxdeg == 4) return {"affine-D4", "X"};
    if (forks == 2) return {"affine-D" + std::to_string(n - 1), "D~"};
    if (auto p = arm_profile(t)) {
        const auto& a = p->arm_lengths;
        if (a == std::vector<int>{2, 2, 2}) return {"affine-E6", "Y"};
        if (a == std::vector<int>{1, 3, 3}) return {"affine-E7", "T"};
        if (a == std::vector<int>{1, 2, 5}) return {"affine-E8", "E"};
    }
    return {"minimal-" + std::to_string(n), ""};
}

}  // namespace

std::vector<SignedGraph> enumerate_trees(int n) {
    std::vector<SignedGraph> cur;
    {
        SignedGraph k1(std::vector<int>{0});
        cur.push_back(k1);
    }
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, SignedGraph> next;
        for (const SignedGraph& t : cur)
            for (int pos = 0; pos < t.n(); ++pos) {
                SignedGraph grown = with_extra_leaf(t, pos);
                next.emplace(tree_code(grown), grown);
            }
        cur.clear();
        for (auto& [code, t] : next) cur.push_back(std::move(t));
    }
    return cur;
}

MinorCatalog mine_minimal_minors(int max_n) {
    if (max_n > 10) max_n = 10;
    MinorCatalog cat;
    cat.max_n = max_n;
    for (int n = 1; n <= max_n; ++n) {
        for (const SignedGraph& t : enumerate_trees(n)) {
            DefinitenessReport rep = definiteness(gram_matrix(t));
            if (rep.verdict == Verdict::PositiveDefinite) continue;
            bool minimal = true;
            for (const MinorPattern& seen : cat.trees)
                if (induced_embedding(seen.shape, t)) { minimal = false; break; }
            if (!minimal) continue;
            auto [name, alias] = pattern_names(t);
            cat.trees.push_back({name, alias, t, rep.det, rep.witness});
        }
    }
    for (int len = 3; len <= max_n; ++len) cat.cycle_classes.push_back({len, len % 2});
    return cat;
}

const MinorCatalog& default_catalog() {
    static const MinorCatalog cat = mine_minimal_minors(9);
    return cat;
}

}  // namespace adeg
