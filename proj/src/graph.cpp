#include "adeg/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace adeg {

SignedGraph::SignedGraph(std::vector<int> vertex_ids) : ids_(std::move(vertex_ids)) {
    for (int id : ids_)
        if (id < 0) throw std::invalid_argument("vertex ids must be non-negative");
    std::vector<int> sorted = ids_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate vertex id");
    adj_.assign(static_cast<size_t>(n()) * n(), 0);
}

bool SignedGraph::has_vertex(int id) const {
    return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

int SignedGraph::pos_of(int id) const {
    auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end()) throw std::out_of_range("unknown vertex id");
    return static_cast<int>(it - ids_.begin());
}

int SignedGraph::sign(int u, int v) const { return sign_at(pos_of(u), pos_of(v)); }

void SignedGraph::add_edge(int u, int v, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("edge sign must be +-1");
    int i = pos_of(u), j = pos_of(v);
    if (i == j) throw std::invalid_argument("loops are not allowed");
    if (sign_at(i, j) != 0) throw std::invalid_argument("duplicate edge");
    set_sign_at(i, j, sign);
}

void SignedGraph::set_sign_at(int i, int j, int s) {
    adj_[static_cast<size_t>(i) * n() + j] = static_cast<int8_t>(s);
    adj_[static_cast<size_t>(j) * n() + i] = static_cast<int8_t>(s);
}

int SignedGraph::edge_count() const {
    int c = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (sign_at(i, j) != 0) ++c;
    return c;
}

std::vector<Edge> SignedGraph::edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (int s = sign_at(i, j); s != 0) out.push_back({ids_[i], ids_[j], s});
    return out;
}

int SignedGraph::degree(int id) const {
    int i = pos_of(id), d = 0;
    for (int j = 0; j < n(); ++j)
        if (sign_at(i, j) != 0) ++d;
    return d;
}

std::vector<int> SignedGraph::neighbors(int id) const {
    int i = pos_of(id);
    std::vector<int> out;
    for (int j = 0; j < n(); ++j)
        if (sign_at(i, j) != 0) out.push_back(ids_[j]);
    return out;
}

std::vector<std::vector<int>> SignedGraph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n(), 0);
    for (int s = 0; s < n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> stack{s}, comp;
        seen[s] = 1;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            comp.push_back(i);
            for (int j = 0; j < n(); ++j)
                if (sign_at(i, j) != 0 && !seen[j]) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
        }
        std::sort(comp.begin(), comp.end());
        std::vector<int> ids;
        for (int p : comp) ids.push_back(ids_[p]);
        comps.push_back(std::move(ids));
    }
    return comps;
}

bool SignedGraph::is_connected() const { return n() <= 1 || components().size() == 1; }

SignedGraph SignedGraph::induced(const std::vector<int>& subset_ids) const {
    std::vector<char> keep(n(), 0);
    for (int id : subset_ids) keep[pos_of(id)] = 1;
    std::vector<int> ids;
    for (int p = 0; p < n(); ++p)
        if (keep[p]) ids.push_back(ids_[p]);
    SignedGraph h(ids);
    for (int a = 0; a < h.n(); ++a)
        for (int b = a + 1; b < h.n(); ++b) {
            int s = sign(h.ids_[a], h.ids_[b]);
            if (s != 0) h.set_sign_at(a, b, s);
        }
    return h;
}

SignedGraph SignedGraph::reordered(const std::vector<int>& new_id_order) const {
    if (new_id_order.size() != ids_.size())
        throw std::invalid_argument("reordered: wrong length");
    SignedGraph h(new_id_order);  // validates distinctness
    for (int id : new_id_order) (void)pos_of(id);
    for (int a = 0; a < h.n(); ++a)
        for (int b = a + 1; b < h.n(); ++b) {
            int s = sign(new_id_order[a], new_id_order[b]);
            if (s != 0) h.set_sign_at(a, b, s);
        }
    return h;
}

SignedGraph switched(const SignedGraph& g, int v) {
    SignedGraph h = g;
    int i = g.pos_of(v);
    for (int j = 0; j < g.n(); ++j)
        if (int s = g.sign_at(i, j); s != 0) h.set_sign_at(i, j, -s);
    return h;
}

std::pair<SignedGraph, std::vector<int>> tree_normalized(const SignedGraph& g) {
    const int n = g.n();
    std::vector<int> state(n, 0);  // 0 unseen, +-1 switch parity
    for (int root = 0; root < n; ++root) {
        if (state[root] != 0) continue;
        state[root] = 1;
        std::vector<int> queue{root};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int i = queue[qi];
            for (int j = 0; j < n; ++j) {
                int s = g.sign_at(i, j);
                if (s == 0 || state[j] != 0) continue;
                state[j] = state[i] * s;  // makes the tree edge positive
                queue.push_back(j);
            }
        }
    }
    SignedGraph h = g;
    std::vector<int> switches;
    for (int i = 0; i < n; ++i)
        if (state[i] < 0) switches.push_back(g.id_at(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (int s = g.sign_at(i, j); s != 0) h.set_sign_at(i, j, s * state[i] * state[j]);
    return {std::move(h), std::move(switches)};
}

// Iterated degree refinement on the underlying graph. Returns a stable color
// per position; color values are isomorphism-invariant class indices.
std::vector<int> refinement_colors(const SignedGraph& g) {
    const int n = g.n();
    std::vector<int> color(n);
    for (int i = 0; i < n; ++i) {
        int d = 0;
        for (int j = 0; j < n; ++j)
            if (g.sign_at(i, j) != 0) ++d;
        color[i] = d;
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> s{color[i]};
            std::vector<int> nb;
            for (int j = 0; j < n; ++j)
                if (g.sign_at(i, j) != 0) nb.push_back(color[j]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[i] = {std::move(s), i};
        }
        std::map<std::vector<int>, int> order;
        for (const auto& [s, i] : sig) order.emplace(s, 0);
        int next = 0;
        for (auto& [s, idx] : order) idx = next++;
        std::vector<int> fresh(n);
        for (const auto& [s, i] : sig) fresh[i] = order[s];
        if (fresh == color) break;
        color = std::move(fresh);
    }
    return color;
}

namespace {

// Encoding of the relabelled graph under permutation perm (perm[pos] =
// original position), with signs tree-normalized against the BFS forest of
// the relabelled underlying graph.
std::string encode_under(const SignedGraph& g, const std::vector<int>& perm, bool with_signs) {
    const int n = g.n();
    std::vector<int> inv(n);
    for (int p = 0; p < n; ++p) inv[perm[p]] = p;
    std::string out;
    out.reserve(static_cast<size_t>(n) * (n - 1) / 2 + 1);
    out.push_back(static_cast<char>(n));
    if (!with_signs) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                out.push_back(g.sign_at(perm[a], perm[b]) != 0 ? 1 : 0);
        return out;
    }
    // switching state by BFS in relabelled order
    std::vector<int> state(n, 0);
    for (int root = 0; root < n; ++root) {
        if (state[root] != 0) continue;
        state[root] = 1;
        std::vector<int> queue{root};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int a = queue[qi];
            for (int b = 0; b < n; ++b) {
                int s = g.sign_at(perm[a], perm[b]);
                if (s == 0 || state[b] != 0) continue;
                state[b] = state[a] * s;
                queue.push_back(b);
            }
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int s = g.sign_at(perm[a], perm[b]);
            out.push_back(s == 0 ? 0 : (s * state[a] * state[b] > 0 ? 1 : 2));
        }
    return out;
}

std::string canonical_impl(const SignedGraph& g, int bound, bool with_signs) {
    const int n = g.n();
    if (n > bound) throw std::length_error("canonical key: size bound exceeded");
    if (n == 0) return std::string(1, '\0');
    std::vector<int> color = refinement_colors(g);

    // positions grouped by color, colors ascending
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return color[a] < color[b]; });

    std::vector<std::vector<int>> classes;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && color[order[j]] == color[order[i]]) ++j;
        classes.emplace_back(order.begin() + i, order.begin() + j);
        i = j;
    }

    std::string best;
    std::vector<int> perm;
    perm.reserve(n);
    // depth-first product of within-class permutations
    auto rec = [&](auto&& self, size_t ci) -> void {
        if (ci == classes.size()) {
            std::string enc = encode_under(g, perm, with_signs);
            if (best.empty() || enc < best) best = std::move(enc);
            return;
        }
        std::vector<int> cls = classes[ci];
        std::sort(cls.begin(), cls.end());
        do {
            perm.insert(perm.end(), cls.begin(), cls.end());
            self(self, ci + 1);
            perm.resize(perm.size() - cls.size());
        } while (std::next_permutation(cls.begin(), cls.end()));
    };
    rec(rec, 0);
    return best;
}

}  // namespace

std::string canonical_key(const SignedGraph& g, int bound) {
    return canonical_impl(g, bound, true);
}

std::string canonical_key_unsigned(const SignedGraph& g, int bound) {
    return canonical_impl(g, bound, false);
}

std::string exact_key(const SignedGraph& g) {
    std::string out;
    const int n = g.n();
    out.push_back(static_cast<char>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out.push_back(static_cast<char>(g.sign_at(i, j) + 2));
    return out;
}

}  // namespace adeg
