#include "gem/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace gem {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream words(raw);
        Line line{number, {}};
        for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

int to_int(const std::string& s, int line, const std::string& what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError(line, "expected an integer for " + what + ", got '" + s + "'");
    return value;
}

std::string value_of(const std::string& token, const std::string& key, int line) {
    const std::string prefix = key + "=";
    if (token.rfind(prefix, 0) != 0) throw ParseError(line, "expected " + prefix + "..., got '" + token + "'");
    return token.substr(prefix.size());
}

std::pair<int, int> parse_pair(const std::string& s, int line, const std::string& what) {
    const auto dash = s.find('-');
    if (dash == std::string::npos) throw ParseError(line, "expected <a>-<b> for " + what + ", got '" + s + "'");
    return {to_int(s.substr(0, dash), line, what), to_int(s.substr(dash + 1), line, what)};
}

Edge parse_edge(const std::string& s, int line) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError(line, "expected <color>:<u>-<v>, got '" + s + "'");
    const int c = to_int(s.substr(0, colon), line, "edge color");
    if (c < 0 || c >= kColorCount) throw ParseError(line, "invalid color " + std::to_string(c));
    const auto [u, v] = parse_pair(s.substr(colon + 1), line, "edge");
    return Edge{c, u, v};
}

std::string edge_text(const Edge& e) {
    const Edge n = e.normalized();
    return std::to_string(n.color) + ":" + std::to_string(n.u) + "-" + std::to_string(n.v);
}

std::string seam_text(const std::array<Edge, kColorCount>& seam) {
    return edge_text(seam[0]) + "," + edge_text(seam[1]) + "," + edge_text(seam[2]);
}

std::array<Edge, kColorCount> parse_seam(const std::string& s, int line) {
    std::array<Edge, kColorCount> out;
    std::istringstream in(s);
    std::string part;
    int i = 0;
    while (std::getline(in, part, ',')) {
        if (i == kColorCount) throw ParseError(line, "seam needs exactly three edges");
        out[i++] = parse_edge(part, line);
    }
    if (i != kColorCount) throw ParseError(line, "seam needs exactly three edges");
    return out;
}

Color parse_color(const std::string& token, int line) {
    const int c = to_int(value_of(token, "c", line), line, "chosen color");
    if (c < 0 || c >= kColorCount) throw ParseError(line, "invalid color " + std::to_string(c));
    return c;
}

std::string cut_params(const CutSpec& c) {
    return "c=" + std::to_string(c.color) + " ea=" + edge_text(c.edge_a) + " eb=" + edge_text(c.edge_b) +
           " arc=" + std::to_string(c.arc);
}

// tokens of "ea=.. eb=.. arc=.." starting at `i`.
CutSpec parse_cut(const Line& l, std::size_t i, Color c) {
    CutSpec cut;
    cut.color = c;
    cut.edge_a = parse_edge(value_of(l.tokens[i], "ea", l.number), l.number);
    cut.edge_b = parse_edge(value_of(l.tokens[i + 1], "eb", l.number), l.number);
    cut.arc = to_int(value_of(l.tokens[i + 2], "arc", l.number), l.number, "arc");
    return cut;
}

void expect_count(const Line& l, std::size_t n) {
    if (l.tokens.size() != n)
        throw ParseError(l.number, "'" + l.tokens[0] + "' record needs " + std::to_string(n) + " fields, got " +
                                       std::to_string(l.tokens.size()));
}

const std::string& result_of(const Line& l) {
    if (l.tokens[l.tokens.size() - 2] != "->") throw ParseError(l.number, "missing '-> <fingerprint>'");
    return l.tokens.back();
}

void write_section(std::ostringstream& out, const Certificate& cert, bool top) {
    out << (top ? "trace 1 " : "section ") << cert.initial_fingerprint << '\n';
    for (const auto& step : cert.steps) {
        if (const auto* t = std::get_if<TraceStep>(&step)) {
            out << format_move(t->move) << " -> " << t->fingerprint << '\n';
        } else {
            const auto& c = std::get<ComposeStep>(step);
            out << "compose left=" << c.left->initial_fingerprint << " right=" << c.right->initial_fingerprint
                << " seam=" << seam_text(c.seam) << " -> " << c.fingerprint << '\n';
        }
    }
    if (cert.conclusion) out << "conclude " << to_string(*cert.conclusion) << '\n';
    for (const auto& step : cert.steps) {
        if (const auto* c = std::get_if<ComposeStep>(&step)) {
            write_section(out, *c->left, false);
            write_section(out, *c->right, false);
        }
    }
}

class TraceParser {
public:
    explicit TraceParser(std::vector<Line> lines) : lines_(std::move(lines)) {}

    Certificate top() {
        if (lines_.empty()) throw ParseError(1, "empty trace file");
        const Line& h = lines_[0];
        if (h.tokens[0] != "trace" || h.tokens.size() != 3) throw ParseError(h.number, "expected 'trace 1 <fingerprint>'");
        if (h.tokens[1] != "1") throw ParseError(h.number, "unsupported trace version '" + h.tokens[1] + "'");
        pos_ = 1;
        Certificate cert = section(h.tokens[2], false);
        if (pos_ != lines_.size()) throw ParseError(lines_[pos_].number, "unexpected record after the last section");
        return cert;
    }

private:
    Certificate section(const std::string& initial, bool nested) {
        Certificate cert;
        cert.initial_fingerprint = initial;
        std::vector<std::pair<std::size_t, int>> composes;
        while (pos_ < lines_.size()) {
            const Line& l = lines_[pos_];
            const std::string& kind = l.tokens[0];
            if (kind == "section") break;
            ++pos_;
            if (kind == "conclude") {
                expect_count(l, 2);
                try {
                    cert.conclusion = parse_canonical_form(l.tokens[1]);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(l.number, e.what());
                }
                break;
            }
            if (kind == "compose") {
                expect_count(l, 6);
                ComposeStep c;
                c.seam = parse_seam(value_of(l.tokens[3], "seam", l.number), l.number);
                c.fingerprint = result_of(l);
                composes.emplace_back(cert.steps.size(), l.number);
                cert.steps.emplace_back(std::move(c));
                left_right_.push_back({value_of(l.tokens[1], "left", l.number), value_of(l.tokens[2], "right", l.number)});
                continue;
            }
            cert.steps.emplace_back(TraceStep{parse_move(l), result_of(l)});
        }
        if (nested && !cert.conclusion) throw ParseError(last_line(), "section without a conclude record");
        const std::size_t first_pair = left_right_.size() - composes.size();
        for (std::size_t k = 0; k < composes.size(); ++k) {
            const auto [index, line] = composes[k];
            const auto expected = left_right_[first_pair + k];
            auto& c = std::get<ComposeStep>(cert.steps[index]);
            c.left = std::make_shared<Certificate>(nested_section(expected[0], line));
            c.right = std::make_shared<Certificate>(nested_section(expected[1], line));
        }
        left_right_.resize(first_pair);
        return cert;
    }

    Certificate nested_section(const std::string& fp, int compose_line) {
        if (pos_ >= lines_.size()) throw ParseError(compose_line, "missing section for compose record");
        const Line& l = lines_[pos_];
        if (l.tokens[0] != "section" || l.tokens.size() != 2) throw ParseError(l.number, "expected 'section <fingerprint>'");
        if (l.tokens[1] != fp)
            throw ParseError(l.number, "section fingerprint does not match its compose record on line " +
                                           std::to_string(compose_line));
        ++pos_;
        return section(fp, true);
    }

    int last_line() const { return lines_.empty() ? 1 : lines_[std::min(pos_, lines_.size()) - 1].number; }

    static Move parse_move(const Line& l) {
        const std::string& kind = l.tokens[0];
        if (kind == "cut") {
            expect_count(l, 7);
            return parse_cut(l, 2, parse_color(l.tokens[1], l.number));
        }
        if (kind == "glue") {
            expect_count(l, 5);
            const auto [w1, w2] = parse_pair(value_of(l.tokens[2], "w", l.number), l.number, "glue pair");
            return GlueSpec{parse_color(l.tokens[1], l.number), w1, w2};
        }
        if (kind == "cutglue") {
            expect_count(l, 8);
            const Color c = parse_color(l.tokens[1], l.number);
            const auto [w1, w2] = parse_pair(value_of(l.tokens[5], "w", l.number), l.number, "glue pair");
            return CutGlueSpec{parse_cut(l, 2, c), GlueSpec{c, w1, w2}};
        }
        if (kind == "interchange") {
            expect_count(l, 6);
            InterchangeSpec s;
            s.seam = parse_seam(value_of(l.tokens[1], "seam", l.number), l.number);
            s.u_new = to_int(value_of(l.tokens[2], "u'", l.number), l.number, "u'");
            s.v_new = to_int(value_of(l.tokens[3], "v'", l.number), l.number, "v'");
            return s;
        }
        throw ParseError(l.number, "unknown record '" + kind + "'");
    }

    std::vector<Line> lines_;
    std::size_t pos_ = 0;
    std::vector<std::array<std::string, 2>> left_right_;
};

}  // namespace

std::string write_graph(const ColoredGraph& g) {
    auto edges = g.edges();
    std::sort(edges.begin(), edges.end());
    std::ostringstream out;
    out << "gem 1 " << g.vertex_count() << '\n';
    for (const auto& e : edges) {
        const Edge n = e.normalized();
        out << "edge " << n.color << ' ' << n.u << ' ' << n.v << '\n';
    }
    return out.str();
}

ColoredGraph parse_graph(const std::string& text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty graph file");
    const Line& h = lines[0];
    if (h.tokens[0] != "gem" || h.tokens.size() != 3) throw ParseError(h.number, "expected 'gem 1 <n>'");
    if (h.tokens[1] != "1") throw ParseError(h.number, "unsupported graph version '" + h.tokens[1] + "'");
    const int n = to_int(h.tokens[2], h.number, "vertex count");
    if (n < 2 || n % 2 != 0) throw ParseError(h.number, "vertex count must be even and at least 2");

    const std::size_t expected = static_cast<std::size_t>(3 * n / 2);
    std::array<std::vector<Vertex>, kColorCount> m;
    for (auto& row : m) row.assign(static_cast<std::size_t>(n), 0);
    std::vector<EdgeRecord> records;
    std::vector<int> record_lines;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens[0] != "edge") throw ParseError(l.number, "unknown record '" + l.tokens[0] + "'");
        if (l.tokens.size() != 4) throw ParseError(l.number, "expected 'edge <color> <u> <v>'");
        const int c = to_int(l.tokens[1], l.number, "color");
        const int u = to_int(l.tokens[2], l.number, "u");
        const int v = to_int(l.tokens[3], l.number, "v");
        if (c < 0 || c >= kColorCount) throw ParseError(l.number, "invalid color " + std::to_string(c));
        for (int x : {u, v}) {
            if (x < 1 || x > n) throw ParseError(l.number, "vertex " + std::to_string(x) + " out of range 1.." + std::to_string(n));
        }
        if (u == v) throw ParseError(l.number, "loop edge at vertex " + std::to_string(u));
        if (u > v) throw ParseError(l.number, "endpoints must satisfy u < v");
        records.push_back(EdgeRecord{c, u, v});
        record_lines.push_back(l.number);
    }
    if (records.size() != expected)
        throw ParseError(lines.back().number, "expected " + std::to_string(expected) + " edge lines for n=" +
                                                   std::to_string(n) + ", found " + std::to_string(records.size()));
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        for (int x : {r.u, r.v}) {
            if (m[r.color][x - 1] != 0)
                throw ParseError(record_lines[i], "vertex " + std::to_string(x) + " already has a color-" +
                                                      std::to_string(r.color) + " edge");
            m[r.color][x - 1] = 1;
        }
    }
    try {
        return validate(n, records);
    } catch (const GraphError& e) {
        throw ParseError(lines.back().number, e.what());
    }
}

std::string format_move(const Move& m) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CutSpec>) {
                return "cut " + cut_params(s);
            } else if constexpr (std::is_same_v<T, GlueSpec>) {
                return "glue c=" + std::to_string(s.color) + " w=" + std::to_string(s.w1) + "-" + std::to_string(s.w2);
            } else if constexpr (std::is_same_v<T, CutGlueSpec>) {
                return "cutglue " + cut_params(s.cut) + " w=" + std::to_string(s.glue.w1) + "-" + std::to_string(s.glue.w2);
            } else {
                return "interchange seam=" + seam_text(s.seam) + " u'=" + std::to_string(s.u_new) +
                       " v'=" + std::to_string(s.v_new);
            }
        },
        m);
}

std::string write_trace(const Certificate& cert) {
    std::ostringstream out;
    write_section(out, cert, true);
    return out.str();
}

std::string write_trace(const MoveTrace& trace) { return write_trace(as_certificate(trace)); }

Certificate parse_trace(const std::string& text) { return TraceParser(tokenize(text)).top(); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

}  // namespace gem
