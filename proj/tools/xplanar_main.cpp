// Command-line surface over the library: decide X-planarity, emit embeddings
// and certificates, check certificates, convert Gauss codes, run the
// brute-force oracles, generate instances, and render diagrams.
//
// Exit codes: 0 the graph is X-planar (or the command succeeded),
//             1 the graph is not X-planar,
//             2 input or usage error,
//             3 internal invariant failure (a bug).

#include <CLI11.hpp>

#include <xplanar/decide.hpp>
#include <xplanar/oracle.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace xplanar;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

// Shared input selection: a positional .xg path or --gauss "<word>".
struct GraphInput {
    std::string path;
    std::string gauss;

    void attach(CLI::App* cmd) {
        cmd->add_option("graph", path, "input .xg file ('-' for standard input)");
        cmd->add_option("--gauss", gauss, "double-occurrence word instead of a file");
    }

    XGraph load() const {
        if (!gauss.empty() && !path.empty())
            throw std::invalid_argument("give either a file or --gauss, not both");
        if (!gauss.empty()) return from_gauss_code(gauss);
        if (!path.empty()) return parse_xgraph(read_file(path));
        throw std::invalid_argument("no input: give a file or --gauss");
    }
};

std::string rotation_lines(const RotationSystem& rot) {
    std::string out;
    for (std::size_t v = 0; v < rot.order.size(); ++v) {
        std::array<Dart, 4> o = rot.order[v];
        int best = 0;
        for (int i = 1; i < 4; ++i)
            if (o[i] < o[best]) best = i;
        out += "r " + std::to_string(v);
        for (int i = 0; i < 4; ++i) out += ' ' + to_string(o[(best + i) % 4]);
        out += '\n';
    }
    return out;
}

int cmd_decide(const GraphInput& input, bool simplify, const std::string& out_path) {
    const XGraph g = input.load();
    Verdict v = decide(g);
    if (!v.planar && simplify) {
        v.walk1 = simplify_cycle(v.walk1, v.crossing_vertex, g);
        v.walk2 = simplify_cycle(v.walk2, v.crossing_vertex, g);
        if (v.walk2.steps < v.walk1.steps) std::swap(v.walk1, v.walk2);
        const auto check = verify_forbidden_pair(v.walk1, v.walk2, g);
        if (!check.valid)
            throw InternalError("simplified certificate failed verification: " +
                                check.failure_reason);
    }
    write_output(out_path, render_verdict(v));
    return v.planar ? 0 : 1;
}

int cmd_embed(const GraphInput& input, const std::string& out_path) {
    const XGraph g = input.load();
    const Verdict v = decide(g);
    if (!v.planar) {
        std::cerr << "not X-planar (crossing at vertex " << v.crossing_vertex << ")\n";
        return 1;
    }
    std::string out = rotation_lines(v.rotation);
    for (const auto& face : v.faces) {
        out += 'f';
        for (Dart d : face) out += ' ' + to_string(d);
        out += '\n';
    }
    write_output(out_path, out);
    return 0;
}

int cmd_certify(const GraphInput& input, const std::string& cert_path) {
    const XGraph g = input.load();
    const std::string text = read_file(cert_path);

    std::vector<ClosedWalk> walks;
    int claimed_crossing = -1;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("w ", 0) == 0 || line == "w") {
            if (walks.size() < 2) walks.push_back(parse_walk_line(line));
        } else if (line.rfind("x ", 0) == 0) {
            claimed_crossing = std::stoi(line.substr(2));
        }
    }
    if (walks.size() != 2)
        throw std::invalid_argument("certificate needs two 'w' lines, found " +
                                    std::to_string(walks.size()));

    const CertificateReport report = verify_forbidden_pair(walks[0], walks[1], g);
    if (!report.valid) {
        std::cout << "invalid certificate: " << report.failure_reason << "\n";
        return 2;
    }
    if (claimed_crossing >= 0 && report.crossing != std::vector<int>{claimed_crossing}) {
        std::cout << "invalid certificate: crossing is at vertex " << report.crossing[0]
                  << ", not " << claimed_crossing << "\n";
        return 2;
    }
    std::cout << "valid certificate: crossing at vertex " << report.crossing[0] << "\n";
    return 1;  // a valid certificate proves the graph is not X-planar
}

int cmd_gauss(const std::vector<std::string>& tokens, const std::string& out_path) {
    std::string joined;
    for (const std::string& t : tokens) {
        joined += t;
        joined += ' ';
    }
    write_output(out_path, serialize(from_gauss_code(joined)));
    return 0;
}

int cmd_oracle(const GraphInput& input, const std::string& method, int max_v,
               const std::string& out_path) {
    const XGraph g = input.load();
    if (max_v > 0 && g.vertex_count > max_v)
        throw std::invalid_argument("graph exceeds --max-v " + std::to_string(max_v));

    std::string out;
    bool planar = false;
    if (method == "rotations") {
        const auto rot = oracle_rotations(g);
        planar = rot.has_value();
        out = planar ? "planar 1\n" + rotation_lines(*rot) : "planar 0\n";
    } else if (method == "cycles") {
        const auto pair = oracle_forbidden_pairs(g);
        planar = !pair.has_value();
        if (planar) {
            out = "planar 1\n";
        } else {
            const auto crossing = crossing_vertices(pair->first, pair->second, g);
            out = "planar 0\n" + walk_to_text(pair->first) + '\n' +
                  walk_to_text(pair->second) + '\n' + "x " + std::to_string(crossing[0]) +
                  '\n';
        }
    } else {
        throw std::invalid_argument("unknown --method: " + method);
    }
    write_output(out_path, out);
    return planar ? 0 : 1;
}

int cmd_gen(int letters, std::uint64_t seed, bool shuffle, const std::string& out_path) {
    const XGraph g = random_xgraph(letters, seed, shuffle);
    std::string out = "# letters=" + std::to_string(letters) + " seed=" + std::to_string(seed) +
                      " shuffle-pairings=" + (shuffle ? "1" : "0") + "\n";
    out += serialize(g);
    write_output(out_path, out);
    return 0;
}

int cmd_render(const GraphInput& input, const std::string& out_path) {
    const XGraph g = input.load();
    write_output(out_path, render_svg(turning_euler_tour(g), g));
    return 0;
}

int cmd_validate(const GraphInput& input) {
    const XGraph g = input.load();
    std::cout << "valid: " << g.vertex_count << " vertices, " << g.edge_count()
              << " edges, " << components(g).size() << " component(s)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"X-planarity: decide, certify, embed, and draw 4-regular graphs "
                 "with crossing structure"};
    app.require_subcommand(1);

    GraphInput in_decide, in_embed, in_certify, in_oracle, in_render, in_validate;
    std::string out_decide, out_embed, out_gauss, out_oracle, out_gen, out_render;
    std::string cert_path, method = "rotations";
    std::vector<std::string> gauss_tokens;
    bool simplify = false, shuffle = false;
    int letters = 1, max_v = 0;
    std::uint64_t seed = 0;

    auto* c_decide = app.add_subcommand("decide", "decide X-planarity, emit verdict artifact");
    in_decide.attach(c_decide);
    c_decide->add_flag("--simplify", simplify, "loop-erase certificate walks");
    c_decide->add_option("-o", out_decide, "output path");

    auto* c_embed = app.add_subcommand("embed", "emit rotation and face lines, plane inputs only");
    in_embed.attach(c_embed);
    c_embed->add_option("-o", out_embed, "output path");

    auto* c_certify = app.add_subcommand("certify", "check a certificate against a graph");
    in_certify.attach(c_certify);
    c_certify->add_option("certificate", cert_path, "file with two 'w' lines and optional 'x'")
        ->required();

    auto* c_gauss = app.add_subcommand("gauss", "convert a double-occurrence word to .xg");
    c_gauss->add_option("word", gauss_tokens, "word tokens, e.g. a b c a b c")->required();
    c_gauss->add_option("-o", out_gauss, "output path");

    auto* c_oracle = app.add_subcommand("oracle", "run a brute-force reference decider");
    in_oracle.attach(c_oracle);
    c_oracle->add_option("--method", method, "rotations (default) or cycles");
    c_oracle->add_option("--max-v", max_v, "refuse graphs larger than this");
    c_oracle->add_option("-o", out_oracle, "output path");

    auto* c_gen = app.add_subcommand("gen", "generate a seeded random instance");
    c_gen->add_option("--letters", letters, "number of distinct symbols")->required();
    c_gen->add_option("--seed", seed, "generator seed");
    c_gen->add_flag("--shuffle-pairings", shuffle, "re-randomize each vertex's pairing");
    c_gen->add_option("-o", out_gen, "output path");

    auto* c_render = app.add_subcommand("render", "draw the tour-circle diagram as SVG");
    in_render.attach(c_render);
    c_render->add_option("-o", out_render, "output path");

    auto* c_validate = app.add_subcommand("validate", "parse and validate an input graph");
    in_validate.attach(c_validate);

    try {
        app.parse(argc, argv);
        if (c_decide->parsed()) return cmd_decide(in_decide, simplify, out_decide);
        if (c_embed->parsed()) return cmd_embed(in_embed, out_embed);
        if (c_certify->parsed()) return cmd_certify(in_certify, cert_path);
        if (c_gauss->parsed()) return cmd_gauss(gauss_tokens, out_gauss);
        if (c_oracle->parsed()) return cmd_oracle(in_oracle, method, max_v, out_oracle);
        if (c_gen->parsed()) return cmd_gen(letters, seed, shuffle, out_gen);
        if (c_render->parsed()) return cmd_render(in_render, out_render);
        if (c_validate->parsed()) return cmd_validate(in_validate);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const xplanar::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const xplanar::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
