#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <ivfg/ivfg.h>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvalid = 3;

struct CommandFailure {
    int code;
    std::string message;
};

int exit_code_for(ivfg_status status) {
    switch (status) {
    case IVFG_OK:
        return kExitOk;
    case IVFG_ERR_PARSE:
        return kExitUsage;
    case IVFG_ERR_INVALID:
    case IVFG_ERR_NO_COMPLEMENT:
        return kExitInvalid;
    default:
        return kExitUsage;
    }
}

// Copies a library-owned string and releases it.
std::string owned(char* text) {
    std::string out = text ? text : "";
    ivfg_string_free(text);
    return out;
}

struct GraphHolder {
    ivfg_graph* ptr = nullptr;
    ~GraphHolder() { ivfg_graph_free(ptr); }
    GraphHolder() = default;
    GraphHolder(const GraphHolder&) = delete;
    GraphHolder& operator=(const GraphHolder&) = delete;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CommandFailure{kExitUsage, "cannot read file '" + path + "'"};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void load_graph(const std::string& path, GraphHolder& holder) {
    const std::string text = read_file(path);
    char* error = nullptr;
    const ivfg_status status = ivfg_graph_parse(text.c_str(), &holder.ptr, &error);
    if (status != IVFG_OK)
        throw CommandFailure{exit_code_for(status), path + ": " + owned(error)};
}

void require_ok(ivfg_status status, const std::string& what) {
    if (status != IVFG_OK)
        throw CommandFailure{exit_code_for(status), what + " failed with status " +
                                                        std::to_string(status)};
}

std::vector<std::string> vertex_ids(const ivfg_graph* g) {
    std::vector<std::string> ids;
    for (size_t i = 0; i < ivfg_vertex_count(g); ++i) {
        char* id = nullptr;
        require_ok(ivfg_vertex_id(g, i, &id), "vertex lookup");
        ids.push_back(owned(id));
    }
    return ids;
}

void emit(const nlohmann::json& object) {
    std::cout << object.dump(2) << "\n";
}

const char* verdict(bool value) {
    return value ? "true" : "false";
}

int cmd_validate(const std::string& path, bool json) {
    GraphHolder g;
    load_graph(path, g);
    char* name = nullptr;
    require_ok(ivfg_graph_name(g.ptr, &name), "name lookup");
    if (json) {
        emit({{"valid", true},
              {"name", owned(name)},
              {"vertices", ivfg_vertex_count(g.ptr)},
              {"edges", ivfg_edge_count(g.ptr)}});
    } else {
        owned(name);
        std::cout << "valid\n";
    }
    return kExitOk;
}

int cmd_stats(const std::string& path, bool json) {
    GraphHolder g;
    load_graph(path, g);
    char* order = nullptr;
    char* size = nullptr;
    require_ok(ivfg_order(g.ptr, &order), "order");
    require_ok(ivfg_size(g.ptr, &size), "size");
    const std::string order_text = owned(order);
    const std::string size_text = owned(size);
    if (json) {
        char* name = nullptr;
        require_ok(ivfg_graph_name(g.ptr, &name), "name lookup");
        emit({{"name", owned(name)}, {"order", order_text}, {"size", size_text}});
    } else {
        std::cout << "order=" << order_text << " size=" << size_text << "\n";
    }
    return kExitOk;
}

int cmd_degrees(const std::string& path, bool json) {
    GraphHolder g;
    load_graph(path, g);
    nlohmann::json rows = nlohmann::json::array();
    for (const std::string& id : vertex_ids(g.ptr)) {
        char *open_mu = nullptr, *open_nu = nullptr, *closed_mu = nullptr, *closed_nu = nullptr;
        require_ok(ivfg_degree(g.ptr, id.c_str(), 0, &open_mu, &open_nu), "degree");
        require_ok(ivfg_degree(g.ptr, id.c_str(), 1, &closed_mu, &closed_nu), "degree");
        const std::string omu = owned(open_mu), onu = owned(open_nu);
        const std::string cmu = owned(closed_mu), cnu = owned(closed_nu);
        if (json) {
            rows.push_back({{"vertex", id},
                            {"open", {{"mu", omu}, {"nu", onu}}},
                            {"closed", {{"mu", cmu}, {"nu", cnu}}}});
        } else {
            std::cout << id << " open=(" << omu << ", " << onu << ") closed=(" << cmu << ", "
                      << cnu << ")\n";
        }
    }
    if (json)
        emit({{"degrees", rows}});
    return kExitOk;
}

int cmd_distances(const std::string& path, bool json) {
    GraphHolder g;
    load_graph(path, g);
    const auto ids = vertex_ids(g.ptr);
    nlohmann::json rows = nlohmann::json::array();
    for (const std::string& from : ids) {
        for (const std::string& to : ids) {
            char *lower = nullptr, *upper = nullptr;
            require_ok(ivfg_distance(g.ptr, from.c_str(), to.c_str(), &lower, &upper),
                       "distance");
            const std::string lo = owned(lower), hi = owned(upper);
            if (json) {
                rows.push_back({{"from", from}, {"to", to}, {"lower", lo}, {"upper", hi}});
            } else {
                std::cout << from << " " << to << " lower=" << lo << " upper=" << hi << "\n";
            }
        }
    }
    if (json)
        emit({{"vertices", ids}, {"distances", rows}});
    return kExitOk;
}

int cmd_classify(const std::string& path, bool json) {
    GraphHolder g;
    load_graph(path, g);
    ivfg_classification c;
    require_ok(ivfg_classify(g.ptr, &c), "classify");
    const std::pair<const char*, int> rows[] = {
        {"irregular", c.irregular},
        {"totally_irregular", c.totally_irregular},
        {"neighbourly_irregular", c.neighbourly_irregular},
        {"neighbourly_totally_irregular", c.neighbourly_totally_irregular},
        {"highly_irregular", c.highly_irregular},
        {"highly_totally_irregular", c.highly_totally_irregular},
    };
    if (json) {
        nlohmann::json out;
        for (const auto& [key, value] : rows)
            out[key] = value != 0;
        emit(out);
    } else {
        for (const auto& [key, value] : rows)
            std::cout << key << "=" << verdict(value != 0) << "\n";
    }
    return kExitOk;
}

int cmd_complement(const std::string& path, bool json) {
    GraphHolder g;
    load_graph(path, g);
    GraphHolder comp;
    char* error = nullptr;
    const ivfg_status status = ivfg_complement(g.ptr, &comp.ptr, &error);
    if (status != IVFG_OK)
        throw CommandFailure{exit_code_for(status), path + ": " + owned(error)};
    char* doc = nullptr;
    require_ok(ivfg_graph_serialize(comp.ptr, &doc), "serialize");
    const std::string text = owned(doc);
    if (json) {
        char* name = nullptr;
        require_ok(ivfg_graph_name(comp.ptr, &name), "name lookup");
        emit({{"name", owned(name)}, {"document", text}});
    } else {
        std::cout << text;
    }
    return kExitOk;
}

int cmd_isomorphic(const std::string& path1, const std::string& path2, const std::string& mode,
                   bool json) {
    ivfg_morphism_mode parsed;
    if (mode == "iso")
        parsed = IVFG_MORPHISM_ISO;
    else if (mode == "weak")
        parsed = IVFG_MORPHISM_WEAK;
    else if (mode == "coweak")
        parsed = IVFG_MORPHISM_COWEAK;
    else
        throw CommandFailure{kExitUsage, "unknown mode '" + mode + "'"};

    GraphHolder g1, g2;
    load_graph(path1, g1);
    load_graph(path2, g2);
    int found = 0;
    char* mapping = nullptr;
    require_ok(ivfg_find_morphism(g1.ptr, g2.ptr, parsed, &found, &mapping), "morphism search");
    const std::string mapping_text = owned(mapping);
    if (json) {
        nlohmann::json out = {{"mode", mode}, {"found", found != 0}};
        if (found)
            out["mapping"] = nlohmann::json::parse(mapping_text);
        emit(out);
    } else {
        std::cout << verdict(found != 0) << "\n";
        if (found) {
            const auto parsed_mapping = nlohmann::json::parse(mapping_text);
            for (const auto& [from, to] : parsed_mapping.items())
                std::cout << from << " -> " << to.get<std::string>() << "\n";
        }
    }
    return kExitOk;
}

int cmd_isometric(const std::string& path1, const std::string& path2,
                  const std::string& direction, bool json) {
    GraphHolder g1, g2;
    load_graph(path1, g1);
    load_graph(path2, g2);

    if (direction == "mutual") {
        int holds = 0;
        require_ok(ivfg_isometric_mutual(g1.ptr, g2.ptr, &holds), "isometry check");
        if (json)
            emit({{"direction", direction}, {"holds", holds != 0}});
        else
            std::cout << verdict(holds != 0) << "\n";
        return kExitOk;
    }
    if (direction != "from")
        throw CommandFailure{kExitUsage, "unknown direction '" + direction + "'"};

    int holds = 0;
    char* witnesses = nullptr;
    require_ok(ivfg_isometric_from(g1.ptr, g2.ptr, &holds, &witnesses), "isometry check");
    const std::string witness_text = owned(witnesses);
    if (json) {
        nlohmann::json out = {{"direction", direction}, {"holds", holds != 0}};
        if (holds)
            out["witnesses"] = nlohmann::json::parse(witness_text);
        emit(out);
    } else {
        std::cout << verdict(holds != 0) << "\n";
    }
    return kExitOk;
}

int cmd_laws(std::uint64_t seed, std::size_t trials, bool json) {
    char* report = nullptr;
    require_ok(ivfg_verify_laws(seed, trials, &report), "law verification");
    const auto parsed = nlohmann::json::parse(owned(report));
    if (json) {
        emit(parsed);
        return kExitOk;
    }
    for (const auto& law : parsed["laws"]) {
        std::cout << law["law"].get<std::string>() << " checked=" << law["checked"].get<size_t>()
                  << " violations=" << law["violation_seeds"].size() << "\n";
    }
    std::cout << (parsed["all_pass"].get<bool>() ? "all laws pass" : "law violations found")
              << "\n";
    return kExitOk;
}

int cmd_gen(std::size_t vertices, const std::string& density, unsigned grid, std::uint64_t seed,
            bool json) {
    GraphHolder g;
    const ivfg_status status = ivfg_random_graph(vertices, density.c_str(), grid, seed, &g.ptr);
    if (status != IVFG_OK)
        throw CommandFailure{kExitUsage, "generation failed (check --vertices/--density/--grid)"};
    char* doc = nullptr;
    require_ok(ivfg_graph_serialize(g.ptr, &doc), "serialize");
    const std::string text = owned(doc);
    if (json) {
        char* name = nullptr;
        require_ok(ivfg_graph_name(g.ptr, &name), "name lookup");
        emit({{"name", owned(name)}, {"document", text}});
    } else {
        std::cout << text;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"interval-valued fuzzy graph tool"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit a machine-readable object instead of text");

    std::string file1, file2;
    std::string mode = "iso";
    std::string direction = "mutual";
    std::uint64_t seed = 42;
    std::size_t trials = 100;
    std::size_t vertices = 0;
    std::string density = "0.5";
    unsigned grid = 10;
    std::uint64_t gen_seed = 0;

    auto* validate = app.add_subcommand("validate", "parse and validate a graph document");
    validate->add_option("file", file1)->required();

    auto* stats = app.add_subcommand("stats", "print order and size");
    stats->add_option("file", file1)->required();

    auto* degrees = app.add_subcommand("degrees", "print open and closed degrees per vertex");
    degrees->add_option("file", file1)->required();

    auto* distances = app.add_subcommand("distances", "print the distance matrix");
    distances->add_option("file", file1)->required();

    auto* classify = app.add_subcommand("classify", "print the six irregularity verdicts");
    classify->add_option("file", file1)->required();

    auto* complement = app.add_subcommand("complement", "print the complement graph document");
    complement->add_option("file", file1)->required();

    auto* isomorphic = app.add_subcommand("isomorphic", "search for a morphism between two graphs");
    isomorphic->add_option("file1", file1)->required();
    isomorphic->add_option("file2", file2)->required();
    isomorphic->add_option("--mode", mode, "iso, weak, or coweak");

    auto* isometric = app.add_subcommand("isometric", "decide distance-profile isometry");
    isometric->add_option("file1", file1)->required();
    isometric->add_option("file2", file2)->required();
    isometric->add_option("--direction", direction, "from or mutual");

    auto* laws = app.add_subcommand("laws", "verify the isometry relation laws on random graphs");
    laws->add_option("--seed", seed);
    laws->add_option("--trials", trials);

    auto* gen = app.add_subcommand("gen", "generate a seeded random graph document");
    gen->add_option("--vertices", vertices)->required();
    gen->add_option("--density", density, "edge probability, rational in [0,1]");
    gen->add_option("--grid", grid, "membership denominator");
    gen->add_option("--seed", gen_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(validate))
            return cmd_validate(file1, json);
        if (app.got_subcommand(stats))
            return cmd_stats(file1, json);
        if (app.got_subcommand(degrees))
            return cmd_degrees(file1, json);
        if (app.got_subcommand(distances))
            return cmd_distances(file1, json);
        if (app.got_subcommand(classify))
            return cmd_classify(file1, json);
        if (app.got_subcommand(complement))
            return cmd_complement(file1, json);
        if (app.got_subcommand(isomorphic))
            return cmd_isomorphic(file1, file2, mode, json);
        if (app.got_subcommand(isometric))
            return cmd_isometric(file1, file2, direction, json);
        if (app.got_subcommand(laws))
            return cmd_laws(seed, trials, json);
        if (app.got_subcommand(gen))
            return cmd_gen(vertices, density, grid, gen_seed, json);
    } catch (const CommandFailure& failure) {
        std::cerr << failure.message << "\n";
        return failure.code;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
