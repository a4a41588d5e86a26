#include "crossprof/constructions.hpp"
#include "crossprof/io.hpp"
#include "crossprof/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace crossprof;

namespace {

enum Exit { Ok = 0, Falsified = 1, InputError = 2, Exhausted = 3 };

struct InputFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputFailure("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputFailure("cannot write " + path);
    out << text;
}

// "# designated u-v u-v ..." lines written by `generate`
std::vector<EdgeId> designated_from_comments(const std::string& text) {
    std::vector<EdgeId> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string hash, word;
        ls >> hash >> word;
        if (hash != "#" || word != "designated") continue;
        std::string tok;
        while (ls >> tok) {
            auto dash = tok.find('-');
            if (dash == std::string::npos) continue;
            out.emplace_back(std::stoul(tok.substr(0, dash)), std::stoul(tok.substr(dash + 1)));
        }
    }
    return out;
}

struct KindArgs {
    std::string kind;
    long n = 0;
    long k = -1;
    std::vector<long> arcs;
    std::uint64_t seed = 1;
    int refinements = 24;

    void attach(CLI::App* cmd) {
        cmd->add_option("--kind", kind, "construction")
            ->required()
            ->check(CLI::IsMember({"convex", "max-e0", "two-arc", "three-arc", "ek-linear", "e1-linear", "max-sk",
                                   "nested-triangles", "grid"}));
        cmd->add_option("--n", n, "number of vertices")->required();
        cmd->add_option("--k", k, "crossing parameter");
        cmd->add_option("--arcs", arcs, "arc sizes a,b[,c]")->delimiter(',');
        cmd->add_option("--seed", seed, "grid perturbation seed");
        cmd->add_option("--max-refinements", refinements, "refinement budget");
    }

    ConstructionSpec spec() const {
        ConstructionSpec s;
        s.kind = *kind_from_name(kind);
        s.n = n;
        if (k >= 0) s.k = k;
        s.arcs = arcs;
        s.seed = seed;
        s.max_refinements = refinements;
        if (s.kind == ConstructionKind::TwoArc || s.kind == ConstructionKind::ThreeArc)
            s.flatness = make_rational(1, 10);
        return s;
    }
};

std::string drawing_file(const GeneratedDrawing& g, const ConstructionSpec& spec) {
    std::ostringstream os;
    os << "# " << kind_name(spec.kind) << " n=" << spec.n;
    if (spec.k) os << " k=" << *spec.k;
    os << "\n";
    if (g.claim.kind != Claim::Kind::None) {
        os << "# claim " << g.claim.describe() << "\n# designated";
        for (const auto& e : g.designated) os << " " << e.u << "-" << e.v;
        os << "\n";
    }
    os << serialize_drawing(g.drawing);
    return os.str();
}

int run_generate(const KindArgs& args, const std::string& out) {
    auto spec = args.spec();
    GeneratedDrawing g = generate(spec);
    write_output(out, drawing_file(g, spec));
    return Ok;
}

int run_verify(const KindArgs& args) {
    auto spec = args.spec();
    GeneratedDrawing g;
    try {
        g = generate(spec);
    } catch (const ConstructionError& e) {
        if (e.kind != ConstructionError::Kind::BudgetExhausted) throw;
        std::cerr << e.what() << "\n";
        return e.diagnosis && !e.diagnosis->expected.empty() ? Falsified : Exhausted;
    }
    if (auto d = check_claim(g)) {
        std::cerr << "claim falsified: " << d->describe() << "\n";
        return Falsified;
    }
    std::cout << kind_name(spec.kind) << " n=" << spec.n;
    if (spec.k) std::cout << " k=" << *spec.k;
    std::cout << ": " << g.designated.size() << " designated edges, " << g.claim.describe() << ", certified after "
              << g.meta.iterations << " refinement(s)\n";
    if (spec.kind == ConstructionKind::EkLinear) {
        long expected = ek_expected_designated(g.meta);
        std::cout << "appendix case " << g.meta.appendix_case << ", expected designated " << expected << "\n";
        if (expected != static_cast<long>(g.designated.size())) return Falsified;
    }
    return Ok;
}

int run_profile(const std::string& in, bool primed, bool kedges, bool text) {
    Drawing d = parse_drawing(read_file(in));
    ReportOptions opt;
    opt.primed = primed;
    opt.k_edges = kedges;
    std::cout << (text ? profile_report_text(d, opt) : profile_report_json(d, opt));
    return Ok;
}

int run_search(long n, long k, bool audit, const std::string& out) {
    ZeroSearchOptions opt;
    opt.audit = audit;
    ZeroSearchResult r;
    try {
        r = find_zero_ek(n, k, opt);
    } catch (const SearchExhausted& e) {
        std::cerr << e.what() << "\n";
        return Exhausted;
    }
    for (const auto& t : r.trace) std::cerr << t.describe() << "\n";
    if (crossing_profile(r.witness).e_k(static_cast<std::size_t>(k)) != 0) return Falsified;
    std::string file = "# witness " + r.family.label() + " e_" + std::to_string(k) + "=0\n" + serialize_drawing(r.witness);
    write_output(out, file);
    return Ok;
}

int run_sweep(const std::string& config_path, const std::string& out) {
    nlohmann::json cfg;
    try {
        cfg = nlohmann::json::parse(read_file(config_path));
    } catch (const nlohmann::json::exception& e) {
        throw InputFailure(std::string("sweep config: ") + e.what());
    }
    SweepConfig sc;
    try {
        for (const auto& f : cfg.at("families")) {
            auto kind = kind_from_name(f.get<std::string>());
            if (!kind) throw InputFailure("unknown family " + f.get<std::string>());
            sc.families.push_back(*kind);
        }
        for (const auto& m : cfg.at("metrics")) {
            auto metric = metric_from_name(m.get<std::string>());
            if (!metric) throw InputFailure("unknown metric " + m.get<std::string>());
            sc.metrics.push_back(*metric);
        }
        sc.ns = cfg.value("n", std::vector<long>{});
        sc.ks = cfg.value("k", std::vector<long>{});
        for (const auto& c : cfg.value("cells", nlohmann::json::array())) sc.cells.emplace_back(c.at(0), c.at(1));
        sc.budget_seconds = cfg.value("budget_seconds", 0.0);
    } catch (const nlohmann::json::exception& e) {
        throw InputFailure(std::string("sweep config: ") + e.what());
    }
    SweepReport rep = extremal_sweep(sc);
    nlohmann::ordered_json j;
    j["schema"] = "crossprof.sweep/1";
    j["complete"] = rep.complete;
    j["cells"] = nlohmann::ordered_json::array();
    for (const auto& c : rep.cells) {
        nlohmann::ordered_json cell = {{"family", kind_name(c.family)}, {"n", c.n}, {"k", c.k},
                                       {"metric", metric_name(c.metric)}, {"measured", c.measured}};
        if (c.measured) cell["value"] = c.value;
        else cell["note"] = c.note;
        cell["bound"] = c.bound;
        j["cells"].push_back(cell);
    }
    j["fits"] = nlohmann::ordered_json::array();
    for (const auto& f : rep.fits)
        j["fits"].push_back({{"family", kind_name(f.family)}, {"metric", metric_name(f.metric)}, {"constant", f.constant},
                             {"min_ratio", f.min_ratio}, {"max_ratio", f.max_ratio}, {"cells", f.cells}});
    write_output(out, j.dump(2) + "\n");
    return rep.complete ? Ok : Exhausted;
}

int run_render(const std::string& in, const std::string& out, const std::string& highlight) {
    std::string text = read_file(in);
    Drawing d = parse_drawing(text);
    SvgOptions opt;
    if (highlight == "designated") {
        opt.highlight = SvgOptions::Highlight::Designated;
        opt.designated = designated_from_comments(text);
    } else if (highlight == "counts") {
        opt.highlight = SvgOptions::Highlight::Counts;
    }
    write_output(out, render_svg(d, opt));
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crossing profiles of rectilinear drawings of complete graphs"};
    app.require_subcommand(1);

    KindArgs gen_args, verify_args;
    std::string gen_out;
    auto* gen = app.add_subcommand("generate", "write a construction as a drawing file");
    gen_args.attach(gen);
    gen->add_option("--out", gen_out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "certify a construction's claim with the oracle");
    verify_args.attach(verify);

    std::string prof_in;
    bool primed = false, kedges = false, json_out = false, text_out = false;
    auto* prof = app.add_subcommand("profile", "crossing profile of a drawing file");
    prof->add_option("--in", prof_in, "drawing file")->required();
    prof->add_flag("--primed", primed, "include primed (line) counts");
    prof->add_flag("--k-edges", kedges, "include k-edge counts");
    auto* fj = prof->add_flag("--json", json_out, "JSON report (default)");
    auto* ft = prof->add_flag("--text", text_out, "plain text report");
    fj->excludes(ft);

    long sn = 0, sk = 0;
    bool audit = false;
    std::string search_out;
    auto* search = app.add_subcommand("search-zero", "find a drawing with e_k = 0");
    search->add_option("--n", sn, "number of vertices")->required();
    search->add_option("--k", sk, "crossing count to avoid")->required();
    search->add_flag("--audit", audit, "oracle-check analytic rejections");
    search->add_option("--out", search_out, "witness file (default stdout)");

    std::string sweep_cfg, sweep_out;
    auto* sweep = app.add_subcommand("sweep", "run a declarative parameter sweep");
    sweep->add_option("--config", sweep_cfg, "JSON sweep config")->required();
    sweep->add_option("--out", sweep_out, "report file (default stdout)");

    std::string rin, rout, highlight = "none";
    auto* render = app.add_subcommand("render", "draw a drawing file as SVG");
    render->add_option("--in", rin, "drawing file")->required();
    render->add_option("--out", rout, "SVG file")->required();
    render->add_option("--highlight", highlight, "designated or counts")
        ->check(CLI::IsMember({"none", "designated", "counts"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : InputError;
    }

    try {
        if (*gen) return run_generate(gen_args, gen_out);
        if (*verify) return run_verify(verify_args);
        if (*prof) return run_profile(prof_in, primed, kedges, text_out);
        if (*search) return run_search(sn, sk, audit, search_out);
        if (*sweep) return run_sweep(sweep_cfg, sweep_out);
        if (*render) return run_render(rin, rout, highlight);
    } catch (const ConstructionError& e) {
        std::cerr << e.what() << "\n";
        return e.kind == ConstructionError::Kind::BudgetExhausted ? Exhausted : InputError;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return InputError;
    } catch (const DrawingFileError& e) {
        std::cerr << e.what() << "\n";
        return InputError;
    } catch (const InputFailure& e) {
        std::cerr << e.what() << "\n";
        return InputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return InputError;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return InputError;
    }
    return InputError;
}
