#include "addbasis/placement_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace addbasis {

namespace {

Elem parse_int(std::string_view s, int line) {
    Elem v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(line, "bad integer '" + std::string(s) + "'");
    return v;
}

// INT, "a..b", or "a..(s)..b".
void parse_token(std::string_view tok, int line, std::vector<Elem>& out) {
    std::size_t dots = tok.find("..");
    try {
        if (dots == std::string_view::npos) {
            Elem v = parse_int(tok, line);
            if (v < 0 || v > kMaxElement)
                throw InputError("location " + std::to_string(v) + " out of range");
            out.push_back(v);
            return;
        }
        std::string_view first = tok.substr(0, dots);
        std::string_view rest = tok.substr(dots + 2);
        Elem step = 1;
        if (!rest.empty() && rest.front() == '(') {
            std::size_t close = rest.find(")..");
            if (close == std::string_view::npos)
                throw ParseError(line, "bad range '" + std::string(tok) + "'");
            step = parse_int(rest.substr(1, close - 1), line);
            rest = rest.substr(close + 3);
        }
        IntSet range = IntSet::ap(parse_int(first, line), step, parse_int(rest, line));
        for (Elem x : range.elements()) out.push_back(x);
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(line, std::string(e.what()) + " in '" + std::string(tok) + "'");
    }
}

} // namespace

Placement parse_placement(std::string_view text) {
    Placement p;
    bool seen[3] = {false, false, false};

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));
        for (char& c : line)
            if (c == ',' || c == '\t' || c == '\r') c = ' ';

        std::istringstream toks(line);
        std::string tok;
        if (!(toks >> tok)) continue; // blank or comment-only line

        int slot;
        if (tok == "I:")
            slot = 0;
        else if (tok == "J:")
            slot = 1;
        else if (tok == "K:")
            slot = 2;
        else
            throw ParseError(line_no, "expected 'I:', 'J:' or 'K:', got '" + tok + "'");
        if (seen[slot]) throw ParseError(line_no, "duplicate label '" + tok + "'");
        seen[slot] = true;

        std::vector<Elem> xs;
        while (toks >> tok) parse_token(tok, line_no, xs);
        IntSet set(std::move(xs));
        if (slot == 0)
            p.v_locs = std::move(set);
        else if (slot == 1)
            p.h_locs = std::move(set);
        else
            p.s_locs = std::move(set);
    }
    return p;
}

std::string format_placement(const Placement& p) {
    auto write = [](const char* label, const IntSet& s) {
        std::string out = label;
        for (Elem x : s.elements()) {
            out += " ";
            out += std::to_string(x);
        }
        out += "\n";
        return out;
    };
    return write("I:", p.v_locs) + write("J:", p.h_locs) + write("K:", p.s_locs);
}

Placement load_placement_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open placement file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_placement(buf.str());
}

} // namespace addbasis
