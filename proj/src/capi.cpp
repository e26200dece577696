#include "adeg.h"

#include "adeg/braid.hpp"
#include "adeg/certificates.hpp"
#include "adeg/io.hpp"
#include "adeg/moves.hpp"
#include "adeg/oracle.hpp"
#include "adeg/plane.hpp"
#include "adeg/reducer.hpp"

#include <optional>
#include <sstream>
#include <string>

using namespace adeg;

struct adeg_graph {
    SignedGraph g;
};
struct adeg_plane {
    PlaneGraph p;
};
struct adeg_result {
    int exit_code = 0;
    std::string text;
    std::string json;
    std::optional<std::string> dot_start;
    std::optional<std::string> dot_end;
};

namespace {

thread_local std::string t_last_error;

adeg_status status_of(Errc c) {
    switch (c) {
        case Errc::parse: return ADEG_ERR_PARSE;
        case Errc::not_positive: return ADEG_ERR_NOT_POSITIVE;
        case Errc::search_exhausted: return ADEG_ERR_EXHAUSTED;
        default: return ADEG_ERR_INVALID;
    }
}

adeg_status fail(const Error& e) {
    t_last_error = e.message;
    return status_of(e.code);
}

adeg_status fail_arg(const char* what) {
    t_last_error = what;
    return ADEG_ERR_ARG;
}

adeg_result* make_result(int exit_code, std::string text, const ordered_json& j) {
    auto* r = new adeg_result;
    r->exit_code = exit_code;
    r->text = std::move(text);
    r->json = j.dump(2) + "\n";
    return r;
}

std::string vec_str(const std::vector<Int>& v) {
    std::ostringstream s;
    s << "(";
    for (size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
    s << ")";
    return s.str();
}

std::string ids_str(const std::vector<int>& v) {
    std::ostringstream s;
    for (size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
    return s.str();
}

ordered_json component_json(const ComponentReport& c, bool include_certificate) {
    ordered_json j;
    j["vertices"] = c.vertices;
    j["definiteness"] = json_of(c.definiteness);
    if (c.failing_cycle) j["failing_cycle"] = json_of(*c.failing_cycle);
    if (c.minor) j["forbidden_minor"] = json_of(*c.minor);
    if (c.reduction) {
        j["ade"] = json_of(c.reduction->ade);
        j["transcript"] =
            transcript_to_json(c.reduction->transcript,
                               include_certificate ? &c.reduction->cert : nullptr);
    }
    return j;
}

void component_text(std::ostringstream& out, const ComponentReport& c, size_t idx) {
    out << "component " << idx << " [" << ids_str(c.vertices) << "]: ";
    if (c.reduction) {
        out << ade_name(c.reduction->ade) << ", det " << c.definiteness.det << ", "
            << c.reduction->transcript.moves.size() << " moves, certificate verified\n";
    } else {
        out << verdict_name(c.definiteness.verdict) << ", det " << c.definiteness.det << "\n";
        if (!c.definiteness.witness.empty())
            out << "  witness: " << vec_str(c.definiteness.witness) << "\n";
        if (c.failing_cycle)
            out << "  non-positive cycle: [" << ids_str(c.failing_cycle->cycle) << "] length "
                << c.failing_cycle->length << ", " << c.failing_cycle->negative_count
                << " negative\n";
        if (c.minor) {
            out << "  forbidden minor: " << c.minor->pattern_name << " at";
            for (auto [p, h] : c.minor->embedding) out << " " << p << "->" << h;
            out << "\n";
        }
    }
}

}  // namespace

extern "C" {

const char* adeg_version(void) { return "0.1.0"; }

const char* adeg_last_error(void) { return t_last_error.c_str(); }

adeg_status adeg_graph_parse(const char* text, adeg_graph** out) {
    if (!text || !out) return fail_arg("null argument");
    auto g = parse_graph_text(text);
    if (!g) return fail(g.error());
    *out = new adeg_graph{std::move(g).value()};
    return ADEG_OK;
}

adeg_status adeg_graph_to_text(const adeg_graph* g, adeg_result** out) {
    if (!g || !out) return fail_arg("null argument");
    std::string text = write_graph_text(g->g);
    ordered_json j;
    j["graph"] = text;
    *out = make_result(0, text, j);
    return ADEG_OK;
}

adeg_status adeg_graph_to_dot(const adeg_graph* g, const char* name, adeg_result** out) {
    if (!g || !out) return fail_arg("null argument");
    std::string dot = to_dot(g->g, name ? name : "g");
    ordered_json j;
    j["dot"] = dot;
    *out = make_result(0, dot, j);
    return ADEG_OK;
}

void adeg_graph_free(adeg_graph* g) { delete g; }

adeg_status adeg_plane_parse(const char* text, adeg_plane** out) {
    if (!text || !out) return fail_arg("null argument");
    auto p = parse_plane_text(text);
    if (!p) return fail(p.error());
    *out = new adeg_plane{std::move(p).value()};
    return ADEG_OK;
}

void adeg_plane_free(adeg_plane* p) { delete p; }

int adeg_result_exit_code(const adeg_result* r) { return r ? r->exit_code : ADEG_ERR_ARG; }
const char* adeg_result_text(const adeg_result* r) { return r ? r->text.c_str() : ""; }
const char* adeg_result_json(const adeg_result* r) { return r ? r->json.c_str() : ""; }
const char* adeg_result_dot_start(const adeg_result* r) {
    return r && r->dot_start ? r->dot_start->c_str() : nullptr;
}
const char* adeg_result_dot_end(const adeg_result* r) {
    return r && r->dot_end ? r->dot_end->c_str() : nullptr;
}
void adeg_result_free(adeg_result* r) { delete r; }

adeg_status adeg_reduce(const adeg_graph* g, const char* mode_str, int emit_certificate,
                        adeg_result** out) {
    if (!g || !out) return fail_arg("null argument");
    MoveMode mode = MoveMode::T;
    std::string m = mode_str ? mode_str : "t";
    if (m == "t")
        mode = MoveMode::T;
    else if (m == "tprime")
        mode = MoveMode::TPrime;
    else
        return fail_arg("mode must be t or tprime");

    auto rep = classify(g->g, mode);
    if (!rep) return fail(rep.error());
    const ClassifyReport& cr = rep.value();

    std::ostringstream text;
    ordered_json j;
    j["command"] = "reduce";
    j["mode"] = m;
    j["status"] = cr.all_positive ? "ade" : "non_positive";
    ordered_json comps = ordered_json::array();
    for (size_t i = 0; i < cr.components.size(); ++i) {
        comps.push_back(component_json(cr.components[i], emit_certificate != 0));
        component_text(text, cr.components[i], i);
    }
    j["components"] = std::move(comps);

    auto* r = make_result(cr.all_positive ? 0 : ADEG_ERR_NOT_POSITIVE, text.str(), j);
    r->dot_start = to_dot(g->g, "start");
    if (cr.all_positive && cr.components.size() == 1 && cr.components[0].reduction)
        r->dot_end = to_dot(cr.components[0].reduction->transcript.end, "end");
    *out = r;
    return ADEG_OK;
}

adeg_status adeg_classify(const adeg_graph* g, adeg_result** out) {
    if (!g || !out) return fail_arg("null argument");
    auto rep = classify(g->g);
    if (!rep) return fail(rep.error());
    const ClassifyReport& cr = rep.value();

    std::ostringstream text;
    text << "graph: " << g->g.n() << " vertices, " << g->g.edge_count() << " edges\n";
    text << "definiteness: " << verdict_name(cr.definiteness.verdict) << ", det "
         << cr.definiteness.det << "\n";
    if (!cr.definiteness.witness.empty())
        text << "witness: " << vec_str(cr.definiteness.witness) << "\n";
    for (size_t i = 0; i < cr.components.size(); ++i) component_text(text, cr.components[i], i);

    ordered_json j;
    j["command"] = "classify";
    j["definiteness"] = json_of(cr.definiteness);
    ordered_json comps = ordered_json::array();
    for (const auto& c : cr.components) comps.push_back(component_json(c, false));
    j["components"] = std::move(comps);

    auto* r = make_result(cr.all_positive ? 0 : ADEG_ERR_NOT_POSITIVE, text.str(), j);
    r->dot_start = to_dot(g->g, "start");
    *out = r;
    return ADEG_OK;
}

adeg_status adeg_verify_transcript(const char* json_text, adeg_result** out) {
    if (!json_text || !out) return fail_arg("null argument");
    auto parsed = transcript_from_json(json_text);
    if (!parsed) return fail(parsed.error());
    const Transcript& t = parsed.value().transcript;

    std::ostringstream text;
    ordered_json j;
    j["command"] = "verify";
    bool ok = true;

    auto replay = apply_transcript(t.start, t.moves);
    if (!replay) {
        ok = false;
        text << "replay failed at move " << replay.error().index << ": "
             << replay.error().message << "\n";
        j["replay"] = "failed";
        j["failed_move"] = replay.error().index;
    } else if (!(replay.value() == t.end)) {
        ok = false;
        text << "replay does not reach the recorded end graph\n";
        j["replay"] = "mismatch";
    } else {
        text << "replay: ok (" << t.moves.size() << " moves)\n";
        j["replay"] = "ok";
    }

    if (ok) {
        IMat u;
        if (parsed.value().cert) {
            u = *parsed.value().cert;
            j["certificate_source"] = "document";
        } else {
            auto c = certificate(t);
            if (!c) return fail(c.error());
            u = std::move(c).value();
            j["certificate_source"] = "recomputed";
        }
        auto ver = verify_certificate(gram_matrix(t.start), u, gram_matrix(t.end));
        if (!ver) return fail(ver.error());
        if (ver.value()) {
            text << "certificate: verified (|det U| = 1, U^t M0 U = M1)\n";
            j["certificate"] = "verified";
        } else {
            ok = false;
            text << "certificate: FAILED\n";
            j["certificate"] = "failed";
        }
    }
    j["ok"] = ok;
    *out = make_result(ok ? 0 : ADEG_ERR_INVALID, text.str(), j);
    return ADEG_OK;
}

adeg_status adeg_mine_minors(int max_n, adeg_result** out) {
    if (!out) return fail_arg("null argument");
    if (max_n <= 0) max_n = 9;
    if (max_n > 10) return fail_arg("minors: max_n is capped at 10");
    MinorCatalog cat = mine_minimal_minors(max_n);

    std::ostringstream text;
    ordered_json j;
    j["command"] = "minors";
    j["max_n"] = cat.max_n;
    ordered_json pats = ordered_json::array();
    text << "minimal non-positive trees up to " << cat.max_n << " vertices:\n";
    for (const MinorPattern& p : cat.trees) {
        text << "  " << p.name;
        if (!p.alias.empty()) text << " (alias " << p.alias << ")";
        text << ": " << p.shape.n() << " vertices, det " << p.gram_det << ", kernel "
             << vec_str(p.kernel) << "\n";
        ordered_json pj;
        pj["name"] = p.name;
        pj["alias"] = p.alias;
        pj["vertices"] = p.shape.n();
        pj["det"] = json_of(p.gram_det);
        pj["kernel"] = json_of(p.kernel);
        pj["graph"] = write_graph_text(p.shape);
        pats.push_back(std::move(pj));
    }
    j["patterns"] = std::move(pats);
    ordered_json cyc = ordered_json::array();
    text << "cycle classes: length n with n negative edges mod 2 (det 0) for n in [3, "
         << cat.max_n << "]\n";
    for (const CycleClass& c : cat.cycle_classes) {
        ordered_json cj;
        cj["length"] = c.length;
        cj["negative_parity"] = c.bad_parity;
        cyc.push_back(std::move(cj));
    }
    j["cycle_classes"] = std::move(cyc);
    text << "\n";
    for (const MinorPattern& p : cat.trees) text << "# " << p.name << "\n"
                                                 << write_graph_text(p.shape) << "\n";
    *out = make_result(0, text.str(), j);
    return ADEG_OK;
}

adeg_status adeg_braid_analyze(const char* word, int reduce, adeg_result** out) {
    if (!word || !out) return fail_arg("null argument");
    auto b = parse_braid(word);
    if (!b) return fail(b.error());
    auto cls = classify_link(b.value(), reduce != 0);
    if (!cls) return fail(cls.error());
    const LinkClassification& lc = cls.value();

    std::ostringstream text;
    text << "braid: strands " << lc.word.strands << ", letters";
    for (int k : lc.word.letters) text << " " << k;
    text << "\n";
    text << "linking graph: " << lc.rank << " bricks, " << lc.linking.graph.edge_count()
         << " edges\n";
    text << "signature " << lc.sig << " of rank " << lc.rank << " ("
         << (lc.maximal ? "maximal" : "not maximal") << "), det " << lc.det << "\n";
    if (lc.reduction)
        text << "link type: " << ade_name(lc.reduction->ade) << " (certificate verified, "
             << lc.reduction->transcript.moves.size() << " moves)\n";
    else if (!lc.maximal)
        text << "verdict: " << verdict_name(lc.definiteness.verdict) << ", witness "
             << vec_str(lc.definiteness.witness) << "\n";

    ordered_json j;
    j["command"] = "braid";
    j["word"] = ordered_json{{"strands", lc.word.strands}, {"letters", lc.word.letters}};
    j["rank"] = lc.rank;
    j["signature"] = lc.sig;
    j["det"] = json_of(lc.det);
    j["maximal"] = lc.maximal;
    j["definiteness"] = json_of(lc.definiteness);
    j["linking_graph"] = write_graph_text(lc.linking.graph);
    j["seifert_v"] = json_of(lc.linking.form.v);
    if (lc.reduction) {
        j["ade"] = json_of(lc.reduction->ade);
        if (reduce) j["transcript"] = transcript_to_json(lc.reduction->transcript, nullptr);
    }

    auto* r = make_result(0, text.str(), j);
    r->dot_start = to_dot(lc.linking.graph, "linking");
    if (lc.reduction) r->dot_end = to_dot(lc.reduction->transcript.end, "end");
    *out = r;
    return ADEG_OK;
}

adeg_status adeg_checkerboard_validate(const adeg_plane* p, adeg_result** out) {
    if (!p || !out) return fail_arg("null argument");
    auto rep = validate_checkerboard(p->p);
    if (!rep) return fail(rep.error());
    const CheckerboardReport& cb = rep.value();

    std::ostringstream text;
    ordered_json j;
    j["command"] = "checkerboard-validate";
    j["valid"] = cb.valid;
    if (cb.valid) {
        text << "checkerboard: valid\n";
        ordered_json colors = ordered_json::array();
        for (size_t f = 0; f < cb.coloring.size(); ++f) {
            colors.push_back(cb.coloring[f]);
            if (cb.coloring[f] >= 0) text << "  face " << f << ": color " << cb.coloring[f] << "\n";
        }
        j["coloring"] = std::move(colors);
    } else if (cb.bad_face) {
        text << "invalid: face " << *cb.bad_face << " is not a coherently directed cycle\n";
        j["bad_face"] = *cb.bad_face;
    } else {
        text << "invalid: odd cycle in the bounded-face dual: [" << ids_str(cb.odd_dual_cycle)
             << "]\n";
        j["odd_dual_cycle"] = cb.odd_dual_cycle;
    }
    *out = make_result(cb.valid ? 0 : ADEG_ERR_INVALID, text.str(), j);
    return ADEG_OK;
}

adeg_status adeg_checkerboard_reduce(const adeg_plane* p, int emit_certificate,
                                     adeg_result** out) {
    if (!p || !out) return fail_arg("null argument");
    auto red = reduce_checkerboard(p->p);
    if (!red) return fail(red.error());

    std::ostringstream text;
    ordered_json j;
    j["command"] = "checkerboard-reduce";
    int code = 0;
    if (auto* ok = std::get_if<PlaneReduction>(&red.value())) {
        j["status"] = "ade";
        j["ade"] = json_of(ok->ade);
        j["transcript"] =
            transcript_to_json(ok->transcript, emit_certificate ? &ok->cert : nullptr);
        j["end_plane"] = write_plane_text(ok->end);
        text << "reduced to " << ade_name(ok->ade) << " in " << ok->transcript.moves.size()
             << " checkerboard moves, certificate verified\n";
        auto* r = make_result(0, text.str(), j);
        r->dot_start = to_dot(p->p.graph, "start");
        r->dot_end = to_dot(ok->end.graph, "end");
        *out = r;
        return ADEG_OK;
    }
    const NonPositive& np = std::get<NonPositive>(red.value());
    code = ADEG_ERR_NOT_POSITIVE;
    j["status"] = "non_positive";
    j["definiteness"] = json_of(np.definiteness);
    if (np.failing_cycle) j["failing_cycle"] = json_of(*np.failing_cycle);
    if (np.minor) j["forbidden_minor"] = json_of(*np.minor);
    text << "non-positive: " << verdict_name(np.definiteness.verdict) << ", det "
         << np.definiteness.det << "\n";
    if (!np.definiteness.witness.empty())
        text << "witness: " << vec_str(np.definiteness.witness) << "\n";
    *out = make_result(code, text.str(), j);
    return ADEG_OK;
}

adeg_status adeg_oracle(const char* suite_str, int max_n, adeg_result** out) {
    if (!suite_str || !out) return fail_arg("null argument");
    std::string suite = suite_str;
    std::ostringstream text;
    ordered_json j;
    j["command"] = "oracle";
    j["suite"] = suite;
    int code = 0;

    if (suite == "definiteness") {
        if (max_n <= 0) max_n = 7;
        DefinitenessAgreementReport rep = definiteness_agreement(max_n);
        j["max_n"] = rep.max_n;
        j["graphs"] = rep.graphs;
        j["disagreements"] = rep.disagreements;
        j["ok"] = rep.ok;
        j["notes"] = rep.notes;
        text << "definiteness agreement up to " << rep.max_n << " vertices: " << rep.graphs
             << " graphs, " << rep.disagreements << " disagreements\n";
        code = rep.ok ? 0 : ADEG_ERR_INVALID;
    } else if (suite == "equivalence") {
        if (max_n <= 0) max_n = 6;
        EquivalenceReport rep = exhaustive_equivalence_check(max_n);
        j["max_n"] = rep.max_n;
        j["graphs"] = rep.graphs;
        j["positive"] = rep.positive;
        ordered_json counts;
        for (const auto& [name, c] : rep.type_counts) counts[name] = c;
        j["type_counts"] = std::move(counts);
        j["failures"] = rep.failures;
        j["ok"] = rep.ok;
        j["notes"] = rep.notes;
        text << "exhaustive classification up to " << rep.max_n << " vertices: " << rep.graphs
             << " graphs, " << rep.positive << " positive, " << rep.failures << " failures\n";
        for (const auto& [name, c] : rep.type_counts) text << "  " << name << ": " << c << "\n";
        code = rep.ok ? 0 : ADEG_ERR_INVALID;
    } else if (suite == "lemma33" || suite == "degree6") {
        if (max_n <= 0) max_n = 7;
        PlanarSuiteReport rep = checkerboard_degree_suite(max_n);
        j["max_n"] = rep.max_n;
        j["positive_classes"] = rep.positive_classes;
        j["embeddable_classes"] = rep.embeddable_classes;
        j["max_degree_seen"] = rep.max_degree_seen;
        j["violations"] = rep.violations;
        j["ok"] = rep.ok;
        j["notes"] = rep.notes;
        text << "positive checkerboard-embeddable classes up to " << rep.max_n
             << " vertices: " << rep.embeddable_classes << " of " << rep.positive_classes
             << " positive; max degree " << rep.max_degree_seen << "; violations "
             << rep.violations << "\n";
        code = rep.ok ? 0 : ADEG_ERR_INVALID;
    } else if (suite == "coherence") {
        if (max_n <= 0) max_n = 4;
        CoherenceReport rep = coherence_check(max_n);
        j["max_n"] = rep.max_n;
        j["embeddings"] = rep.embeddings;
        j["agreements"] = rep.agreements;
        j["disagreements"] = rep.disagreements;
        if (!rep.first_disagreement.empty()) j["first_disagreement"] = rep.first_disagreement;
        text << "coherence comparison up to " << rep.max_n << " vertices: " << rep.embeddings
             << " oriented embeddings, " << rep.agreements << " agreements, "
             << rep.disagreements << " disagreements\n";
        if (!rep.first_disagreement.empty())
            text << "first disagreement: " << rep.first_disagreement << "\n";
    } else {
        return fail_arg("unknown oracle suite");
    }
    *out = make_result(code, text.str(), j);
    return ADEG_OK;
}

}  // extern "C"
