#ifndef GEM_IO_HPP
#define GEM_IO_HPP

#include "gem/colored_graph.hpp"
#include "gem/moves.hpp"
#include "gem/reduce.hpp"

#include <stdexcept>
#include <string>

namespace gem {

/// A malformed graph or trace file; line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}
    [[nodiscard]] int line() const { return line_; }
    [[nodiscard]] const std::string& reason() const { return reason_; }

private:
    int line_;
    std::string reason_;
};

/// "gem 1 <n>" followed by one "edge <c> <u> <v>" line per edge, sorted by
/// color then u.
std::string write_graph(const ColoredGraph& g);
ColoredGraph parse_graph(const std::string& text);

/// One trace record without the trailing "-> <fingerprint>".
std::string format_move(const Move& m);

/// "trace 1 <fingerprint>" and one record per step. Sub-certificates of compose
/// records follow their section in pre-order, each ending with "conclude <form>".
std::string write_trace(const Certificate& cert);
std::string write_trace(const MoveTrace& trace);
Certificate parse_trace(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gem

#endif  // GEM_IO_HPP
