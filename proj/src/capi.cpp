#include "ivfg/ivfg.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"

#include "errors.hpp"
#include "format.hpp"
#include "graph.hpp"
#include "irregularity.hpp"
#include "metric.hpp"
#include "morphisms.hpp"

struct ivfg_graph {
    ivfg::Graph impl;
};

namespace {

char* dup_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out)
        std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

void set_message(char** slot, const std::string& text) {
    if (slot)
        *slot = dup_string(text);
}

template <typename Body>
ivfg_status guarded(char** error_message, Body&& body) {
    if (error_message)
        *error_message = nullptr;
    try {
        body();
        return IVFG_OK;
    } catch (const ivfg::ParseError& e) {
        set_message(error_message, e.what());
        return IVFG_ERR_PARSE;
    } catch (const ivfg::ComplementError& e) {
        set_message(error_message, e.what());
        return IVFG_ERR_NO_COMPLEMENT;
    } catch (const ivfg::ValidationError& e) {
        set_message(error_message, e.what());
        return IVFG_ERR_INVALID;
    } catch (const ivfg::ArgumentError& e) {
        set_message(error_message, e.what());
        return IVFG_ERR_ARGUMENT;
    } catch (const ivfg::LimitError& e) {
        set_message(error_message, e.what());
        return IVFG_ERR_LIMIT;
    } catch (const std::exception& e) {
        set_message(error_message, e.what());
        return IVFG_ERR_INTERNAL;
    }
}

nlohmann::json mapping_to_json(const std::map<std::string, std::string>& mapping) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [from, to] : mapping)
        out[from] = to;
    return out;
}

} // namespace

extern "C" {

const char* ivfg_version(void) {
    return "0.1.0";
}

void ivfg_string_free(char* text) {
    std::free(text);
}

void ivfg_graph_free(ivfg_graph* graph) {
    delete graph;
}

ivfg_status ivfg_graph_parse(const char* text, ivfg_graph** out, char** error_message) {
    if (!text || !out) {
        set_message(error_message, "null argument");
        return IVFG_ERR_ARGUMENT;
    }
    return guarded(error_message, [&] { *out = new ivfg_graph{ivfg::parse_graph(text)}; });
}

ivfg_status ivfg_graph_serialize(const ivfg_graph* graph, char** out) {
    if (!graph || !out)
        return IVFG_ERR_ARGUMENT;
    return guarded(nullptr, [&] { *out = dup_string(ivfg::serialize_graph(graph->impl)); });
}

ivfg_status ivfg_graph_name(const ivfg_graph* graph, char** out) {
    if (!graph || !out)
        return IVFG_ERR_ARGUMENT;
    return guarded(nullptr, [&] { *out = dup_string(graph->impl.name()); });
}

size_t ivfg_vertex_count(const ivfg_graph* graph) {
    return graph ? graph->impl.vertex_count() : 0;
}

size_t ivfg_edge_count(const ivfg_graph* graph) {
    return graph ? graph->impl.edge_count() : 0;
}

ivfg_status ivfg_vertex_id(const ivfg_graph* graph, size_t index, char** out) {
    if (!graph || !out)
        return IVFG_ERR_ARGUMENT;
    if (index >= graph->impl.vertex_count())
        return IVFG_ERR_ARGUMENT;
    return guarded(nullptr, [&] { *out = dup_string(graph->impl.vertex_ids()[index]); });
}

ivfg_status ivfg_edge_endpoints(const ivfg_graph* graph, size_t index, char** id1, char** id2) {
    if (!graph || !id1 || !id2)
        return IVFG_ERR_ARGUMENT;
    if (index >= graph->impl.edge_count())
        return IVFG_ERR_ARGUMENT;
    return guarded(nullptr, [&] {
        auto it = graph->impl.edges().begin();
        std::advance(it, static_cast<std::ptrdiff_t>(index));
        *id1 = dup_string(it->first.first);
        *id2 = dup_string(it->first.second);
    });
}

ivfg_status ivfg_vertex_interval(const ivfg_graph* graph, const char* id, char** lo, char** hi) {
    if (!graph || !id || !lo || !hi)
        return IVFG_ERR_ARGUMENT;
    return guarded(nullptr, [&] {
        const ivfg::Interval& m = graph->impl.vertex_membership(id);
        *lo = dup_string(ivfg::format_rational(m.lo()));
        *hi = dup_string(ivfg::format_rational(m.hi()));
    });
}

ivfg_status ivfg_edge_interval(const ivfg_graph* graph, const char* id1, const char* id2,
                               int* present, char** lo, char** hi) {
    if (!graph || !id1 || !id2 || !present || !lo || !hi)
        return IVFG_ERR_ARGUMENT;
    return guarded(nullptr, [&] {
        graph->impl.vertex_index(id1);
        graph->impl.vertex_index(id2);
        const auto m = graph->impl.edge_membership(id1, id2);
        *present = m ? 1 : 0;
        if (m) {
            *lo = dup_string(ivfg::format_rational(m->lo()));
            *hi = dup_string(ivfg::format_rational(m->hi()));
        }
    });
}

ivfg_status ivfg_order(const ivfg_graph* graph, char** out) {
    if (!graph || !out)
        return IVFG_ERR_ARGUMENT;
    return guarded(nullptr, [&] { *out = dup_string(ivfg::format_rational(ivfg::order(graph->impl))); });
}

ivfg_status ivfg_size(const ivfg_graph* graph, char** out) {
    if (!graph || !out)
        return IVFG_ERR_ARGUMENT;
    return guarded(nullptr, [&] { *out = dup_string(ivfg::format_rational(ivfg::size(graph->impl))); });
}

ivfg_status ivfg_degree(const ivfg_graph* graph, const char* id, int closed, char** mu,
                        char** nu) {
    if (!graph || !id || !mu || !nu)
        return IVFG_ERR_ARGUMENT;
    return guarded(nullptr, [&] {
        const ivfg::DegreePair d =
            closed ? ivfg::closed_degree(graph->impl, id) : ivfg::open_degree(graph->impl, id);
        *mu = dup_string(ivfg::format_rational(d.mu));
        *nu = dup_string(ivfg::format_rational(d.nu));
    });
}

ivfg_status ivfg_distance(const ivfg_graph* graph, const char* from, const char* to, char** lower,
                          char** upper) {
    if (!graph || !from || !to || !lower || !upper)
        return IVFG_ERR_ARGUMENT;
    return guarded(nullptr, [&] {
        const ivfg::DistancePair d = ivfg::distance(graph->impl, from, to);
        *lower = dup_string(ivfg::to_string(d.lower));
        *upper = dup_string(ivfg::to_string(d.upper));
    });
}

ivfg_status ivfg_classify(const ivfg_graph* graph, ivfg_classification* out) {
    if (!graph || !out)
        return IVFG_ERR_ARGUMENT;
    return guarded(nullptr, [&] {
        const ivfg::Classification c = ivfg::classify(graph->impl);
        out->irregular = c.irregular;
        out->totally_irregular = c.totally_irregular;
        out->neighbourly_irregular = c.neighbourly_irregular;
        out->neighbourly_totally_irregular = c.neighbourly_totally_irregular;
        out->highly_irregular = c.highly_irregular;
        out->highly_totally_irregular = c.highly_totally_irregular;
    });
}

ivfg_status ivfg_complement(const ivfg_graph* graph, ivfg_graph** out, char** error_message) {
    if (!graph || !out) {
        set_message(error_message, "null argument");
        return IVFG_ERR_ARGUMENT;
    }
    return guarded(error_message,
                   [&] { *out = new ivfg_graph{ivfg::complement(graph->impl)}; });
}

ivfg_status ivfg_find_morphism(const ivfg_graph* g1, const ivfg_graph* g2,
                               ivfg_morphism_mode mode, int* found, char** mapping_json) {
    if (!g1 || !g2 || !found)
        return IVFG_ERR_ARGUMENT;
    if (mapping_json)
        *mapping_json = nullptr;
    ivfg::MorphismMode parsed;
    switch (mode) {
    case IVFG_MORPHISM_ISO:
        parsed = ivfg::MorphismMode::Isomorphism;
        break;
    case IVFG_MORPHISM_WEAK:
        parsed = ivfg::MorphismMode::Weak;
        break;
    case IVFG_MORPHISM_COWEAK:
        parsed = ivfg::MorphismMode::CoWeak;
        break;
    default:
        return IVFG_ERR_ARGUMENT;
    }
    return guarded(nullptr, [&] {
        const auto mapping = ivfg::find_morphism(g1->impl, g2->impl, parsed);
        *found = mapping ? 1 : 0;
        if (mapping && mapping_json)
            *mapping_json = dup_string(mapping_to_json(*mapping).dump());
    });
}

ivfg_status ivfg_isometric_from(const ivfg_graph* g1, const ivfg_graph* g2, int* holds,
                                char** witness_json) {
    if (!g1 || !g2 || !holds)
        return IVFG_ERR_ARGUMENT;
    if (witness_json)
        *witness_json = nullptr;
    return guarded(nullptr, [&] {
        const ivfg::IsometryResult result = ivfg::isometric_from(g1->impl, g2->impl);
        *holds = result.holds ? 1 : 0;
        if (result.holds && witness_json) {
            nlohmann::json witnesses = nlohmann::json::object();
            for (const auto& [anchor, witness] : result.witnesses) {
                witnesses[anchor] = {{"anchor", witness.anchor2},
                                     {"bijection", mapping_to_json(witness.bijection)}};
            }
            *witness_json = dup_string(witnesses.dump());
        }
    });
}

ivfg_status ivfg_isometric_mutual(const ivfg_graph* g1, const ivfg_graph* g2, int* holds) {
    if (!g1 || !g2 || !holds)
        return IVFG_ERR_ARGUMENT;
    return guarded(nullptr,
                   [&] { *holds = ivfg::isometric_mutual(g1->impl, g2->impl) ? 1 : 0; });
}

ivfg_status ivfg_verify_laws(uint64_t seed, size_t trials, char** report_json) {
    if (!report_json)
        return IVFG_ERR_ARGUMENT;
    return guarded(nullptr, [&] {
        const ivfg::LawsReport report = ivfg::verify_relation_laws(seed, trials);
        nlohmann::json laws = nlohmann::json::array();
        for (const ivfg::LawCheck& check : report.laws) {
            laws.push_back({{"law", check.law},
                            {"checked", check.checked},
                            {"violation_seeds", check.violation_seeds}});
        }
        const nlohmann::json out = {{"seed", report.seed},
                                    {"trials", report.trials},
                                    {"all_pass", report.all_pass()},
                                    {"laws", laws}};
        *report_json = dup_string(out.dump());
    });
}

ivfg_status ivfg_random_graph(size_t vertices, const char* density, unsigned grid, uint64_t seed,
                              ivfg_graph** out) {
    if (!density || !out)
        return IVFG_ERR_ARGUMENT;
    return guarded(nullptr, [&] {
        const auto parsed = ivfg::parse_rational(density);
        if (!parsed)
            throw ivfg::ArgumentError("invalid density '" + std::string(density) + "'");
        *out = new ivfg_graph{ivfg::random_graph(vertices, *parsed, grid, seed)};
    });
}

ivfg_status ivfg_search_complement_counterexample(size_t max_vertices, unsigned grid,
                                                  size_t budget, uint64_t seed, int* found,
                                                  ivfg_graph** g1, ivfg_graph** g2) {
    if (!found || !g1 || !g2)
        return IVFG_ERR_ARGUMENT;
    return guarded(nullptr, [&] {
        auto pair = ivfg::search_complement_counterexample(max_vertices, grid, budget, seed);
        *found = pair ? 1 : 0;
        if (pair) {
            *g1 = new ivfg_graph{std::move(pair->first)};
            *g2 = new ivfg_graph{std::move(pair->second)};
        }
    });
}

} // extern "C"
