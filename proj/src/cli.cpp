#include "pentad/cli.hpp"

#include "pentad/acceptance.hpp"
#include "pentad/error.hpp"
#include "pentad/json_io.hpp"

#include <map>
#include <ostream>

namespace pentad {

namespace {

const char* kUsage =
    "usage: pentad <command> [options]\n"
    "\n"
    "commands:\n"
    "  classify --config FILE          orbit descriptor of a configuration\n"
    "  splitting --config FILE         indecomposable splitting\n"
    "  rank-matrix --config FILE       rank matrix (dense, bitmask indexed)\n"
    "  same-orbit FILE FILE            whether two configurations share an orbit\n"
    "  closure --config FILE           orbit closure decomposition\n"
    "  closure --family TAG [--param P]...\n"
    "  closure-contains --family TAG [--param P]... --target TAG\n"
    "                                  verdict: contains | intersects_only | disjoint\n"
    "  enumerate [--format json]       the full rank-matrix catalogue\n"
    "  hasse [--order leq|preceq|prec] [--format dot|json]\n"
    "  verify                          run the acceptance suite\n"
    "\n"
    "configs are JSON files {\"n\":4,\"m\":5,\"points\":[[..],..]} with exact\n"
    "rational entries; parameters are colon-separated, e.g. --param 1:2/3\n";

struct Options {
    std::map<std::string, std::string> flags;
    std::vector<std::string> params;
    std::vector<std::string> positional;
};

Options parse_options(const std::vector<std::string>& args, std::size_t from) {
    Options o;
    for (std::size_t i = from; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--param") {
            if (++i >= args.size()) fail("usage", "--param needs a value");
            o.params.push_back(args[i]);
        } else if (a.rfind("--", 0) == 0) {
            if (++i >= args.size()) fail("usage", a + " needs a value");
            o.flags[a.substr(2)] = args[i];
        } else {
            o.positional.push_back(a);
        }
    }
    return o;
}

std::vector<Rat> parse_param(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '[') s = s.substr(1);
    if (!s.empty() && s.back() == ']') s.pop_back();
    std::vector<Rat> coords;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto next = s.find(':', pos);
        std::string piece = s.substr(pos, next == std::string::npos ? next : next - pos);
        coords.push_back(rat_from_string(piece));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return coords;
}

OrbitClass orbit_from_options(const Options& o) {
    if (auto it = o.flags.find("config"); it != o.flags.end())
        return classify(parse_config_file(it->second));
    auto it = o.flags.find("family");
    if (it == o.flags.end()) fail("usage", "need --config or --family");
    FamilyKey key = parse_family_tag(it->second);
    std::vector<std::vector<Rat>> params;
    for (const auto& p : o.params) params.push_back(parse_param(p));
    return classify(key.representative_with(params));
}

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
    const std::string& cmd = args[0];
    Options o = parse_options(args, 1);

    if (cmd == "classify") {
        if (!o.flags.count("config")) fail("usage", "classify needs --config FILE");
        out << orbit_class_json(classify(parse_config_file(o.flags["config"]))).dump(2) << "\n";
        return 0;
    }
    if (cmd == "splitting") {
        if (!o.flags.count("config")) fail("usage", "splitting needs --config FILE");
        out << splitting_json(compute_splitting(parse_config_file(o.flags["config"]))).dump(2)
            << "\n";
        return 0;
    }
    if (cmd == "rank-matrix") {
        if (!o.flags.count("config")) fail("usage", "rank-matrix needs --config FILE");
        out << rank_matrix_json(compute_rank_matrix(parse_config_file(o.flags["config"]))).dump(2)
            << "\n";
        return 0;
    }
    if (cmd == "same-orbit") {
        if (o.positional.size() != 2) fail("usage", "same-orbit needs two config files");
        bool same =
            same_orbit(parse_config_file(o.positional[0]), parse_config_file(o.positional[1]));
        out << (same ? "true" : "false") << "\n";
        return 0;
    }
    if (cmd == "closure") {
        out << closure_description_json(orbit_closure_description(orbit_from_options(o))).dump(2)
            << "\n";
        return 0;
    }
    if (cmd == "closure-contains") {
        if (!o.flags.count("target")) fail("usage", "closure-contains needs --target TAG");
        OrbitClass orbit = orbit_from_options(o);
        RankMatrix psi = parse_family_tag(o.flags["target"]).rank_matrix();
        out << verdict_string(fibre_closure_verdict(orbit, psi)) << "\n";
        return 0;
    }
    if (cmd == "enumerate") {
        out << catalogue_json().dump(2) << "\n";
        return 0;
    }
    if (cmd == "hasse") {
        OrderKind kind = OrderKind::Leq;
        if (auto it = o.flags.find("order"); it != o.flags.end()) {
            if (it->second == "leq") kind = OrderKind::Leq;
            else if (it->second == "preceq") kind = OrderKind::Preceq;
            else if (it->second == "prec") kind = OrderKind::Prec;
            else fail("usage", "--order must be leq, preceq or prec");
        }
        PosetGraph g = Catalogue::get().build_poset(kind);
        std::string format = o.flags.count("format") ? o.flags["format"] : "dot";
        if (format == "dot") {
            out << export_dot(g);
        } else if (format == "json") {
            Json j;
            j["nodes"] = g.nodes;
            Json edges = Json::array();
            for (auto [a, b] : hasse_edges(g)) edges.push_back(Json::array({a, b}));
            j["hasse_edges"] = edges;
            out << j.dump(2) << "\n";
        } else {
            fail("usage", "--format must be dot or json");
        }
        return 0;
    }
    if (cmd == "verify") return run_acceptance_cli(out);
    fail("unknown_command", "unknown command: " + cmd);
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty() || args[0] == "--help" || args[0] == "help") {
        err << kUsage;
        return args.empty() ? 2 : 0;
    }
    try {
        return dispatch(args, out);
    } catch (const Error& e) {
        if (e.code() == "usage" || e.code() == "unknown_command") {
            err << e.what() << "\n" << kUsage;
            return 2;
        }
        Json j;
        j["error"] = {{"code", e.code()}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = {{"code", "internal_error"}, {"message", e.what()}};
        out << j.dump(2) << "\n";
        return 1;
    }
}

} // namespace pentad
