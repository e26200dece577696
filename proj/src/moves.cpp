#include "adeg/moves.hpp"

#include <algorithm>

namespace adeg {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::none: return "none";
        case Errc::parse: return "parse";
        case Errc::invalid_input: return "invalid_input";
        case Errc::unknown_vertex: return "unknown_vertex";
        case Errc::no_such_edge: return "no_such_edge";
        case Errc::not_representable: return "not_representable";
        case Errc::degree_too_high: return "degree_too_high";
        case Errc::move_inapplicable: return "move_inapplicable";
        case Errc::dimension_mismatch: return "dimension_mismatch";
        case Errc::size_bound: return "size_bound";
        case Errc::not_positive: return "not_positive";
        case Errc::search_exhausted: return "search_exhausted";
        case Errc::not_checkerboard: return "not_checkerboard";
        case Errc::euler_violation: return "euler_violation";
    }
    return "?";
}

Result<std::pair<SignedGraph, MoveRecord>> t_move(const SignedGraph& g, int x, int y) {
    if (!g.has_vertex(x) || !g.has_vertex(y))
        return make_error(Errc::unknown_vertex, "t_move: unknown vertex");
    const int xi = g.pos_of(x), yi = g.pos_of(y);
    const int eps = g.sign_at(xi, yi);
    if (eps == 0) return make_error(Errc::no_such_edge, "t_move: no edge (x,y)");

    // A common neighbour m cancels only when the triangle (x,y,m) is
    // positive; otherwise the congruent matrix would hold a +-2 entry.
    for (int m = 0; m < g.n(); ++m) {
        if (m == xi || m == yi) continue;
        int sym = g.sign_at(yi, m), sxm = g.sign_at(xi, m);
        if (sym != 0 && sxm != 0 && sxm != eps * sym)
            return make_error(Errc::not_representable,
                              "t_move: triangle through the edge is not positive");
    }

    SignedGraph h = g;
    for (int m = 0; m < g.n(); ++m) {
        if (m == xi || m == yi) continue;
        int sym = g.sign_at(yi, m);
        if (sym == 0) continue;
        if (g.sign_at(xi, m) != 0)
            h.set_sign_at(xi, m, 0);
        else
            h.set_sign_at(xi, m, -eps * sym);
    }
    h.set_sign_at(xi, yi, -eps);
    MoveRecord rec;
    rec.kind = MoveKind::TMove;
    rec.pivot = x;
    rec.other = y;
    rec.epsilon = eps;
    return std::pair{std::move(h), std::move(rec)};
}

Result<std::pair<SignedGraph, MoveRecord>> t_prime_move(const SignedGraph& g, int x, int y) {
    if (!g.has_vertex(x) || !g.has_vertex(y))
        return make_error(Errc::unknown_vertex, "t_prime_move: unknown vertex");
    if (g.sign(x, y) == 0) return make_error(Errc::no_such_edge, "t_prime_move: no edge (x,y)");
    int d = g.degree(y);
    if (d > 3)
        return make_error(Errc::degree_too_high, "t_prime_move: deg(y) = " + std::to_string(d));
    return t_move(g, x, y);
}

Result<SignedGraph> apply_move(const SignedGraph& g, const MoveRecord& rec) {
    switch (rec.kind) {
        case MoveKind::TMove: {
            if (!g.has_vertex(rec.pivot) || !g.has_vertex(rec.other))
                return make_error(Errc::move_inapplicable, "tmove: unknown vertex");
            if (g.sign(rec.pivot, rec.other) != rec.epsilon)
                return make_error(Errc::move_inapplicable,
                                  "tmove: edge sign does not match the record");
            auto r = t_move(g, rec.pivot, rec.other);
            if (!r) return r.error();
            return std::move(r).value().first;
        }
        case MoveKind::Switch: {
            if (!g.has_vertex(rec.vertex))
                return make_error(Errc::move_inapplicable, "switch: unknown vertex");
            return switched(g, rec.vertex);
        }
        case MoveKind::Permute: {
            if (rec.permutation.size() != static_cast<size_t>(g.n()))
                return make_error(Errc::move_inapplicable, "permute: wrong length");
            for (int id : rec.permutation)
                if (!g.has_vertex(id))
                    return make_error(Errc::move_inapplicable, "permute: unknown vertex");
            return g.reordered(rec.permutation);
        }
    }
    return make_error(Errc::move_inapplicable, "unknown move kind");
}

Result<SignedGraph> apply_transcript(const SignedGraph& start,
                                     const std::vector<MoveRecord>& moves) {
    SignedGraph g = start;
    for (size_t i = 0; i < moves.size(); ++i) {
        auto r = apply_move(g, moves[i]);
        if (!r) {
            Error e = r.error();
            e.index = static_cast<int>(i);
            e.message += " (move " + std::to_string(i) + ")";
            return e;
        }
        g = std::move(r).value();
    }
    return g;
}

Result<IMat> certificate(const SignedGraph& start, const std::vector<MoveRecord>& moves) {
    const int n = start.n();
    IMat u = IMat::identity(n);
    SignedGraph g = start;
    for (size_t k = 0; k < moves.size(); ++k) {
        const MoveRecord& rec = moves[k];
        IMat e = IMat::identity(n);
        switch (rec.kind) {
            case MoveKind::TMove: {
                if (!g.has_vertex(rec.pivot) || !g.has_vertex(rec.other)) break;
                int j = g.pos_of(rec.pivot), i = g.pos_of(rec.other);
                e.at(i, j) = -rec.epsilon;  // column op C_j -> C_j - eps C_i
                break;
            }
            case MoveKind::Switch: {
                if (!g.has_vertex(rec.vertex)) break;
                e.at(g.pos_of(rec.vertex), g.pos_of(rec.vertex)) = -1;
                break;
            }
            case MoveKind::Permute: {
                if (rec.permutation.size() != static_cast<size_t>(n)) break;
                e = IMat(n);
                for (int p = 0; p < n; ++p) e.at(g.pos_of(rec.permutation[p]), p) = 1;
                break;
            }
        }
        auto r = apply_move(g, rec);
        if (!r) {
            Error err = r.error();
            err.index = static_cast<int>(k);
            return err;
        }
        g = std::move(r).value();
        u = mul(u, e);
    }
    return u;
}

Result<IMat> certificate(const Transcript& t) { return certificate(t.start, t.moves); }

Result<bool> verify_certificate(const GramMatrix& m0, const IMat& u, const GramMatrix& m1) {
    if (m0.n() != u.n() || m1.n() != u.n())
        return make_error(Errc::dimension_mismatch, "verify_certificate: dimension mismatch");
    if (!is_unimodular(u)) return false;
    IMat lhs = mul(mul(transpose(u), m0.to_imat()), u);
    return lhs == m1.to_imat();
}

}  // namespace adeg
