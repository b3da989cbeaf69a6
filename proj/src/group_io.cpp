#include "permspec/group_io.hpp"

#include <fstream>
#include <sstream>

#include "permspec/errors.hpp"

namespace permspec {

namespace {

std::string strip(const std::string& line) {
    std::string out = line;
    std::size_t hash = out.find('#');
    if (hash != std::string::npos)
        out.erase(hash);
    std::size_t begin = out.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    std::size_t end = out.find_last_not_of(" \t\r\n");
    return out.substr(begin, end - begin + 1);
}

} // namespace

GroupFile parse_group_text(const std::string& text, const std::string& source_name) {
    GroupFile file;
    bool have_degree = false;
    std::istringstream in(text);
    std::string raw;
    int line_number = 0;
    while (std::getline(in, raw)) {
        ++line_number;
        std::string line = strip(raw);
        if (line.empty())
            continue;
        auto fail = [&](const std::string& msg) -> ParseError {
            return ParseError(source_name + ":" + std::to_string(line_number) + ": " + msg);
        };
        if (line.rfind("degree", 0) == 0) {
            if (have_degree)
                throw fail("duplicate degree line");
            try {
                file.degree = std::stoi(line.substr(6));
            } catch (const std::exception&) {
                throw fail("bad degree line: \"" + line + "\"");
            }
            if (file.degree < 1)
                throw fail("degree must be >= 1");
            have_degree = true;
        } else if (line.rfind("order", 0) == 0) {
            std::string value = strip(line.substr(5));
            try {
                file.expected_order = BigCount::from_decimal(value);
            } catch (const ParseError&) {
                throw fail("bad order line: \"" + line + "\"");
            }
        } else if (line.front() == '(') {
            if (!have_degree)
                throw fail("generator before degree line");
            try {
                file.generators.push_back(parse_cycles(line, file.degree));
            } catch (const ParseError& e) {
                throw fail(e.what());
            }
        } else {
            throw fail("unrecognized line: \"" + line + "\"");
        }
    }
    if (!have_degree)
        throw ParseError(source_name + ": missing degree line");
    if (file.generators.empty())
        file.generators.push_back(Permutation(file.degree));
    return file;
}

GroupFile load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open group file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_group_text(buffer.str(), path);
}

std::vector<Permutation> parse_inline_generators(const std::string& text, int degree) {
    std::vector<Permutation> generators;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t semi = text.find(';', start);
        std::string piece = strip(semi == std::string::npos ? text.substr(start)
                                                            : text.substr(start, semi - start));
        if (!piece.empty())
            generators.push_back(parse_cycles(piece, degree));
        if (semi == std::string::npos)
            break;
        start = semi + 1;
    }
    if (generators.empty())
        generators.push_back(Permutation(degree));
    return generators;
}

GroupEngine engine_from_file(const GroupFile& file) {
    GroupEngine engine = build_engine(file.generators);
    if (file.expected_order && engine.order() != *file.expected_order)
        throw OrderAssertionError("group order is " + engine.order().to_decimal() +
                                  ", file asserts " + file.expected_order->to_decimal());
    return engine;
}

} // namespace permspec
