#include "crossprof/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace crossprof {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line(line), column(column) {}

namespace {

std::string lines_text(const std::vector<std::size_t>& lines) {
    std::string s;
    for (std::size_t i = 0; i < lines.size(); ++i) s += (i ? ", " : "") + std::to_string(lines[i]);
    return s;
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t end = std::min(line.find('#'), line.size());
    while (i < end) {
        while (i < end && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= end) break;
        std::size_t start = i;
        while (i < end && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

}  // namespace

DrawingFileError::DrawingFileError(GeneralPositionReport r, std::vector<std::size_t> l)
    : std::runtime_error(r.describe() + " (file lines " + lines_text(l) + ")"), report(std::move(r)), lines(std::move(l)) {}

Rational parse_rational(const std::string& token) {
    std::string body = token;
    bool negative = false;
    if (!body.empty() && body[0] == '-') {
        negative = true;
        body.erase(0, 1);
    }
    std::string num = body, den = "1";
    if (auto slash = body.find('/'); slash != std::string::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("malformed rational '" + token + "'");
    mpz_class p(num, 10), q(den, 10);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + token + "'");
    Rational r(negative ? mpz_class(-p) : p, q);
    r.canonicalize();
    return r;
}

Drawing parse_drawing(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> n;
    std::vector<Point> pts;
    std::vector<std::size_t> point_lines;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (!n) {
            if (tokens.size() != 1) throw ParseError(lineno, tokens[1].column, "expected a single point count");
            if (!all_digits(tokens[0].text) || tokens[0].text.size() > 9)
                throw ParseError(lineno, tokens[0].column, "malformed point count '" + tokens[0].text + "'");
            n = std::stoul(tokens[0].text);
            continue;
        }
        if (pts.size() == *n) throw ParseError(lineno, tokens[0].column, "more points than the declared count");
        if (tokens.size() != 2)
            throw ParseError(lineno, tokens.size() < 2 ? line.size() + 1 : tokens[2].column,
                             "expected two coordinates");
        Rational xy[2];
        for (int c = 0; c < 2; ++c) {
            try {
                xy[c] = parse_rational(tokens[static_cast<std::size_t>(c)].text);
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, tokens[static_cast<std::size_t>(c)].column, e.what());
            }
        }
        pts.emplace_back(xy[0], xy[1]);
        point_lines.push_back(lineno);
    }
    if (!n) throw ParseError(lineno + 1, 1, "missing point count");
    if (pts.size() != *n)
        throw ParseError(lineno + 1, 1,
                         "expected " + std::to_string(*n) + " points, found " + std::to_string(pts.size()));
    auto report = validate_general_position(pts);
    if (!report.ok()) {
        std::vector<std::size_t> lines;
        for (auto i : report.indices) lines.push_back(point_lines[i]);
        throw DrawingFileError(std::move(report), std::move(lines));
    }
    return Drawing::unchecked(std::move(pts));
}

std::string serialize_drawing(const Drawing& d) {
    std::ostringstream os;
    os << d.size() << "\n";
    for (const auto& p : d.points()) os << to_string(p.x) << " " << to_string(p.y) << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------

std::string render_svg(const Drawing& d, const SvgOptions& options) {
    const std::size_t n = d.size();
    std::vector<double> xs(n), ys(n);
    double minx = 0, maxx = 1, miny = 0, maxy = 1;
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = d[i].x.get_d();
        ys[i] = d[i].y.get_d();
        if (i == 0) {
            minx = maxx = xs[i];
            miny = maxy = ys[i];
        }
        minx = std::min(minx, xs[i]);
        maxx = std::max(maxx, xs[i]);
        miny = std::min(miny, ys[i]);
        maxy = std::max(maxy, ys[i]);
    }
    const double span = std::max({maxx - minx, maxy - miny, std::numeric_limits<double>::min()});
    const double margin = options.size * 0.05;
    const double scale = (options.size - 2 * margin) / span;
    auto X = [&](std::size_t i) { return margin + (xs[i] - minx) * scale; };
    auto Y = [&](std::size_t i) { return options.size - margin - (ys[i] - miny) * scale; };  // y up

    std::vector<bool> marked(edge_total(n), false);
    if (options.highlight == SvgOptions::Highlight::Designated)
        for (const auto& e : options.designated)
            if (e.v < n) marked[edge_index(e.u, e.v, n)] = true;
    std::optional<EdgeCrossCounts> counts;
    if (options.highlight == SvgOptions::Highlight::Counts && n >= 2) counts = crossing_counts(d);

    std::ostringstream os;
    os << std::setprecision(options.precision);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.size << "\" height=\""
       << options.size << "\" viewBox=\"0 0 " << options.size << " " << options.size << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<g class=\"edges\">\n";
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            bool hi = marked[edge_index(u, v, n)];
            os << "<line x1=\"" << X(u) << "\" y1=\"" << Y(u) << "\" x2=\"" << X(v) << "\" y2=\"" << Y(v) << "\""
               << (hi ? " class=\"designated\" stroke=\"crimson\" stroke-width=\"2\""
                      : " stroke=\"gray\" stroke-width=\"0.5\"")
               << "/>\n";
        }
    os << "</g>\n";
    if (counts) {
        os << "<g class=\"counts\" font-size=\"8\" fill=\"steelblue\">\n";
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                os << "<text x=\"" << (X(u) + X(v)) / 2 << "\" y=\"" << (Y(u) + Y(v)) / 2 << "\">" << counts->at(u, v)
                   << "</text>\n";
        os << "</g>\n";
    }
    os << "<g class=\"vertices\">\n";
    for (std::size_t i = 0; i < n; ++i)
        os << "<circle cx=\"" << X(i) << "\" cy=\"" << Y(i) << "\" r=\"3\" fill=\"black\"/>\n";
    os << "</g>\n</svg>\n";
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

struct ReportData {
    std::size_t n = 0;
    std::uint64_t total = 0;
    CrossingProfile profile, primed;
    std::vector<std::uint64_t> sk, primed_sk, kedges, leqk;
    nlohmann::ordered_json designated;
};

std::vector<std::uint64_t> prefix_sums(const CrossingProfile& p) {
    std::vector<std::uint64_t> out;
    std::uint64_t acc = 0;
    for (auto v : p.e) out.push_back(acc += v);
    return out;
}

ReportData collect(const Drawing& d, const ReportOptions& opt) {
    ReportData r;
    r.n = d.size();
    OrientationTable table(d);
    EdgeCrossCounts counts = crossing_counts(table);
    r.profile = profile_from_counts(counts);
    r.sk = prefix_sums(r.profile);
    for (std::size_t k = 0; k < r.profile.e.size(); ++k) r.total += k * r.profile.e[k];
    r.total /= 2;
    if (opt.primed) {
        r.primed = profile_from_counts(primed_counts(table));
        r.primed_sk = prefix_sums(r.primed);
    }
    if (opt.k_edges && r.n >= 2) {
        auto left = left_counts(table);
        for (std::size_t k = 0; 2 * k <= r.n - 2; ++k) {
            r.kedges.push_back(k_edge_count(left, r.n, k));
            r.leqk.push_back(leq_k_edge_count(left, r.n, k));
        }
    }
    if (opt.generated) {
        const auto& g = *opt.generated;
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        bool ok = true;
        for (const auto& e : g.designated) {
            auto c = counts.at(e.u, e.v);
            ok = ok && g.claim.admits(c);
            edges.push_back({e.u, e.v, c});
        }
        r.designated = {{"claim", g.claim.describe()}, {"count", g.designated.size()}, {"certified", ok},
                        {"edges", edges}};
    }
    return r;
}

}  // namespace

std::string profile_report_json(const Drawing& d, const ReportOptions& options) {
    ReportData r = collect(d, options);
    nlohmann::ordered_json j;
    j["schema"] = kProfileSchema;
    j["n"] = r.n;
    j["edges"] = edge_total(r.n);
    j["total_crossings"] = r.total;
    j["profile"] = r.profile.e;
    j["S_k"] = r.sk;
    if (options.primed) {
        j["primed_profile"] = r.primed.e;
        j["primed_S_k"] = r.primed_sk;
    }
    if (options.k_edges) {
        j["k_edges"] = r.kedges;
        j["leq_k_edges"] = r.leqk;
    }
    if (options.generated) j["designated"] = r.designated;
    return j.dump(2) + "\n";
}

std::string profile_report_text(const Drawing& d, const ReportOptions& options) {
    ReportData r = collect(d, options);
    std::ostringstream os;
    os << "n " << r.n << "\nedges " << edge_total(r.n) << "\ntotal_crossings " << r.total << "\n";
    os << "k e_k S_k";
    if (options.primed) os << " e'_k S'_k";
    os << "\n";
    const std::size_t rows = std::max(r.profile.e.size(), options.primed ? r.primed.e.size() : 0);
    for (std::size_t k = 0; k < rows; ++k) {
        os << k << " " << r.profile.e_k(k) << " " << r.profile.s_k(k);
        if (options.primed) os << " " << r.primed.e_k(k) << " " << r.primed.s_k(k);
        os << "\n";
    }
    if (options.k_edges) {
        os << "k k-edges <=k-edges\n";
        for (std::size_t k = 0; k < r.kedges.size(); ++k) os << k << " " << r.kedges[k] << " " << r.leqk[k] << "\n";
    }
    if (options.generated)
        os << "designated " << r.designated["count"].get<std::size_t>() << " (" << r.designated["claim"].get<std::string>()
           << ") " << (r.designated["certified"].get<bool>() ? "certified" : "FALSIFIED") << "\n";
    return os.str();
}

}  // namespace crossprof
