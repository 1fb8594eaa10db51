#include "csum/io.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace csum::io {
namespace {

struct Token {
    std::string text;
    int line;
    int column;
};

// Split a document into its header line and per-row token lists.
// Blank lines after the body are tolerated; blank lines between rows are not.
struct RawDocument {
    Group group = Group::integers();
    std::vector<std::vector<Token>> rows;
};

RawDocument tokenize(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        lines.push_back(cur);

    auto is_blank = [](const std::string& s) {
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    while (!lines.empty() && is_blank(lines.back()))
        lines.pop_back();

    if (lines.empty())
        throw parse_error("empty document", 1, 1);

    RawDocument doc;
    auto group = Group::parse_spec(lines[0]);
    if (!group)
        throw parse_error("unknown group spec '" + lines[0] + "'", 1, 1);
    doc.group = *group;

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const std::string& line = lines[li];
        if (is_blank(line))
            throw parse_error("blank line inside matrix body", static_cast<int>(li + 1), 1);
        std::vector<Token> row;
        std::size_t p = 0;
        while (p < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[p]))) {
                ++p;
                continue;
            }
            std::size_t start = p;
            while (p < line.size() && !std::isspace(static_cast<unsigned char>(line[p])))
                ++p;
            row.push_back({line.substr(start, p - start), static_cast<int>(li + 1),
                           static_cast<int>(start + 1)});
        }
        doc.rows.push_back(std::move(row));
    }
    if (doc.rows.empty())
        throw parse_error("document has no matrix rows", 1, 1);

    const std::size_t width = doc.rows[0].size();
    for (const auto& row : doc.rows)
        if (row.size() != width)
            throw parse_error("ragged row: expected " + std::to_string(width) +
                                  " entries, got " + std::to_string(row.size()),
                              row.empty() ? 0 : row[0].line, 1);
    if (width == 0)
        throw parse_error("matrix row has no entries", 2, 1);
    return doc;
}

std::int64_t parse_value(const Token& t) {
    const char* s = t.text.c_str();
    char* end = nullptr;
    errno = 0;
    long long v = std::strtoll(s, &end, 10);
    if (errno != 0)
        throw parse_error("integer out of range '" + t.text + "'", t.line, t.column);
    if (end == s || *end != '\0')
        throw parse_error("invalid entry '" + t.text + "'", t.line, t.column);
    return v;
}

} // namespace

PartialMatrix parse_partial(const std::string& text) {
    RawDocument doc = tokenize(text);
    PartialMatrix out(doc.group, static_cast<int>(doc.rows.size()),
                      static_cast<int>(doc.rows[0].size()));
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) {
            const Token& t = doc.rows[i][j];
            if (t.text != "*")
                out.set(i, j, parse_value(t));
        }
    return out;
}

DenseMatrix parse_dense(const std::string& text) {
    RawDocument doc = tokenize(text);
    DenseMatrix out(doc.group, static_cast<int>(doc.rows.size()),
                    static_cast<int>(doc.rows[0].size()));
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) {
            const Token& t = doc.rows[i][j];
            if (t.text == "*")
                throw parse_error("blank entry not allowed here", t.line, t.column);
            out.set(i, j, parse_value(t));
        }
    return out;
}

std::string print(const DenseMatrix& a) {
    std::ostringstream out;
    out << a.group().spec_string() << '\n';
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            out << (j ? " " : "") << a(i, j);
        out << '\n';
    }
    return out.str();
}

std::string print(const PartialMatrix& a) {
    std::ostringstream out;
    out << a.group().spec_string() << '\n';
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            out << (j ? " " : "");
            if (a.specified(i, j))
                out << a(i, j);
            else
                out << '*';
        }
        out << '\n';
    }
    return out.str();
}

std::string print_flat(const DenseMatrix& a) {
    std::ostringstream out;
    for (std::size_t t = 0; t < a.data().size(); ++t)
        out << (t ? " " : "") << a.data()[t];
    out << '\n';
    return out.str();
}

} // namespace csum::io
