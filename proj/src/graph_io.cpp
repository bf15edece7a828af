#include "cotan/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "cotan/error.hpp"

namespace cotan {

namespace {

const std::regex& token_pattern()
{
    static const std::regex re("[A-Za-z0-9_']+");
    return re;
}

std::string strip_comment(const std::string& line)
{
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> split_tokens(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& what)
{
    throw Error(ErrorKind::Parse, source + ":" + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& s, const std::string& spec)
{
    try {
        std::size_t pos = 0;
        int value = std::stoi(s, &pos);
        if (pos != s.size()) {
            throw std::invalid_argument(s);
        }
        return value;
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::Parse, "bad integer '" + s + "' in family spec '" + spec + "'");
    }
}

}  // namespace

Graph parse_edge_list(std::istream& in, const std::string& source)
{
    std::vector<std::pair<std::string, std::string>> edges;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto tokens = split_tokens(strip_comment(line));
        if (tokens.empty()) {
            continue;
        }
        if (tokens.size() != 2) {
            parse_fail(source, number, "expected two vertex names, got \"" + line + "\"");
        }
        for (const auto& t : tokens) {
            if (!std::regex_match(t, token_pattern())) {
                parse_fail(source, number, "invalid vertex token '" + t + "'");
            }
        }
        edges.emplace_back(tokens[0], tokens[1]);
    }
    if (edges.empty()) {
        throw Error(ErrorKind::EmptyGraph, source + ": no edges");
    }
    return build_graph(edges);
}

Graph parse_edge_list_string(const std::string& text)
{
    std::istringstream in(text);
    return parse_edge_list(in, "<string>");
}

std::vector<Graph> parse_graph_stream(std::istream& in, const std::string& source)
{
    std::vector<Graph> out;
    std::string line;
    std::string chunk;
    int number = 0;
    int chunk_start = 1;
    auto flush = [&] {
        std::istringstream block(chunk);
        bool has_content = false;
        std::string l;
        while (std::getline(block, l)) {
            if (!split_tokens(strip_comment(l)).empty()) {
                has_content = true;
            }
        }
        if (has_content) {
            std::istringstream again(chunk);
            out.push_back(parse_edge_list(again, source + "@" + std::to_string(chunk_start)));
        }
        chunk.clear();
    };
    while (std::getline(in, line)) {
        ++number;
        auto tokens = split_tokens(line);
        if (tokens.size() == 1 && tokens[0] == "---") {
            flush();
            chunk_start = number + 1;
            continue;
        }
        chunk += line;
        chunk += '\n';
    }
    flush();
    return out;
}

Poset parse_poset(std::istream& in, const std::string& source)
{
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> relations;
    auto declare = [&](const std::string& name, int number) {
        if (!std::regex_match(name, token_pattern())) {
            parse_fail(source, number, "invalid element token '" + name + "'");
        }
        if (std::find(elements.begin(), elements.end(), name) == elements.end()) {
            elements.push_back(name);
        }
    };
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto tokens = split_tokens(strip_comment(line));
        if (tokens.empty()) {
            continue;
        }
        if (tokens.size() == 1) {
            declare(tokens[0], number);
        } else if (tokens.size() == 3 && tokens[1] == "<") {
            declare(tokens[0], number);
            declare(tokens[2], number);
            relations.emplace_back(tokens[0], tokens[2]);
        } else {
            parse_fail(source, number, "expected \"p < q\" or \"p\", got \"" + line + "\"");
        }
    }
    if (elements.empty()) {
        throw Error(ErrorKind::Parse, source + ": empty poset");
    }
    return Poset(elements, relations);
}

Graph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    }
    return parse_edge_list(in, path);
}

Poset read_poset_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    }
    return parse_poset(in, path);
}

Graph parse_family(const std::string& spec)
{
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw Error(ErrorKind::Parse, "family spec needs the form name:n, got '" + spec + "'");
    }
    const std::string name = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (name == "letterplace2") {
        auto inner = arg.find(':');
        if (inner != std::string::npos) {
            const std::string kind = arg.substr(0, inner);
            const int n = parse_int(arg.substr(inner + 1), spec);
            if (n < 1) {
                throw Error(ErrorKind::InvalidArgument, "poset needs at least one element");
            }
            if (kind == "chain") {
                return letterplace2(Poset::chain(n));
            }
            if (kind == "antichain") {
                return letterplace2(Poset::antichain(n));
            }
        }
        return letterplace2(read_poset_file(arg));
    }
    const int n = parse_int(arg, spec);
    if (name == "cycle") {
        return family(FamilyKind::Cycle, n);
    }
    if (name == "path") {
        return family(FamilyKind::Path, n);
    }
    if (name == "complete") {
        return family(FamilyKind::Complete, n);
    }
    if (name == "star") {
        return family(FamilyKind::Star, n);
    }
    throw Error(ErrorKind::Parse, "unknown family '" + name + "'");
}

std::vector<std::string> expand_family_range(const std::string& spec)
{
    auto colon = spec.rfind(':');
    auto dots = spec.find("..");
    if (colon == std::string::npos || dots == std::string::npos || dots < colon) {
        return {spec};
    }
    const std::string prefix = spec.substr(0, colon + 1);
    const int lo = parse_int(spec.substr(colon + 1, dots - colon - 1), spec);
    const int hi = parse_int(spec.substr(dots + 2), spec);
    std::vector<std::string> out;
    for (int n = lo; n <= hi; ++n) {
        out.push_back(prefix + std::to_string(n));
    }
    return out;
}

std::vector<Graph> parse_family_range(const std::string& spec)
{
    std::vector<Graph> out;
    for (const auto& s : expand_family_range(spec)) {
        out.push_back(parse_family(s));
    }
    return out;
}

}  // namespace cotan
