#include "qc/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace qc {

namespace {

struct Token {
    std::string text;
    unsigned column;  // 1-based start column
};

/// Strip the comment, then split on the given separator keeping columns.
std::vector<Token> split(const std::string& raw, char sep, unsigned& content_len) {
    std::string line = raw.substr(0, raw.find('#'));
    content_len = static_cast<unsigned>(line.size());
    std::vector<Token> out;
    size_t start = 0;
    for (size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == sep) {
            out.push_back({line.substr(start, i - start), static_cast<unsigned>(start + 1)});
            start = i + 1;
        }
    }
    return out;
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::uint64_t parse_uint(const Token& t, unsigned lineno) {
    std::string s = t.text;
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) throw ParseError("expected a number", lineno, t.column);
    s = s.substr(b, e - b + 1);
    std::uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw ParseError("expected a number, got \"" + s + "\"", lineno,
                             t.column + static_cast<unsigned>(b));
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

/// Lines of the stream with comments stripped and blanks dropped.
std::vector<std::pair<unsigned, std::string>> significant_lines(std::istream& in) {
    std::vector<std::pair<unsigned, std::string>> lines;
    std::string raw;
    unsigned n = 0;
    while (std::getline(in, raw)) {
        ++n;
        std::string content = raw.substr(0, raw.find('#'));
        if (!blank(content)) lines.emplace_back(n, raw);
    }
    return lines;
}

struct Header {
    FieldPtr field;
    unsigned a = 0, b = 0;  // the integers after q
};

Header parse_header(const std::pair<unsigned, std::string>& line, unsigned nfields) {
    unsigned len;
    std::vector<Token> words;
    for (const Token& t : split(line.second, ' ', len))
        if (!blank(t.text)) words.push_back(t);
    if (words.size() != nfields)
        throw ParseError("header must have exactly " + std::to_string(nfields) + " fields",
                         line.first, words.size() > nfields ? words[nfields].column : len + 1);
    Header h;
    std::uint64_t q = parse_uint(words[0], line.first);
    try {
        h.field = Field::of_order(q);
    } catch (const std::exception& e) {
        throw ParseError(e.what(), line.first, words[0].column);
    }
    h.a = static_cast<unsigned>(parse_uint(words[1], line.first));
    if (nfields > 2) h.b = static_cast<unsigned>(parse_uint(words[2], line.first));
    return h;
}

/// One generator line: ell coefficient lists separated by ';'.
std::vector<Poly> parse_row(const Header& h, unsigned ell,
                            const std::pair<unsigned, std::string>& line) {
    unsigned len;
    std::vector<Token> lists = split(line.second, ';', len);
    if (lists.size() != ell)
        throw ParseError("expected " + std::to_string(ell) + " coefficient lists, got " +
                             std::to_string(lists.size()),
                         line.first, lists.size() > ell ? lists[ell].column : len + 1);
    std::vector<Poly> row;
    for (const Token& list : lists) {
        std::vector<std::uint64_t> coeffs;
        unsigned dummy;
        for (Token& t : split(list.text, ',', dummy)) {
            t.column += list.column - 1;
            std::uint64_t v = parse_uint(t, line.first);
            if (v >= h.field->order())
                throw ParseError("coefficient index " + std::to_string(v) +
                                     " is out of range for GF(" +
                                     std::to_string(h.field->order()) + ")",
                                 line.first, t.column);
            coeffs.push_back(v);
        }
        row.emplace_back(h.field, std::move(coeffs));
    }
    return row;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return in;
}

void write_rows(std::ostream& out, const std::vector<std::vector<Poly>>& rows) {
    for (const auto& row : rows) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out << "; ";
            out << row[j].coeff_list();
        }
        out << "\n";
    }
}

}  // namespace

QCCode read_qc(std::istream& in) {
    auto lines = significant_lines(in);
    if (lines.empty()) throw ParseError("missing header line \"q m ell\"", 1, 1);
    Header h = parse_header(lines[0], 3);
    std::vector<std::vector<Poly>> gens;
    for (size_t i = 1; i < lines.size(); ++i) gens.push_back(parse_row(h, h.b, lines[i]));
    try {
        if (gens.empty()) return QCCode::zero(h.field, h.a, h.b);
        return QCCode(h.field, h.a, h.b, std::move(gens));
    } catch (const std::exception& e) {
        throw ParseError(e.what(), lines[0].first, 1);
    }
}

QCCode read_qc_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_qc(in);
}

void write_qc(std::ostream& out, const QCCode& c) {
    out << c.field()->order() << " " << c.m() << " " << c.ell() << "\n";
    write_rows(out, c.generators());
}

void write_qc_file(const std::string& path, const QCCode& c) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    write_qc(out, c);
}

LinearCode read_linear(std::istream& in) {
    auto lines = significant_lines(in);
    if (lines.empty()) throw ParseError("missing header line \"q n\"", 1, 1);
    Header h = parse_header(lines[0], 2);
    Mat rows;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::vector<Poly> entries = parse_row(h, h.a, lines[i]);
        Vec row;
        for (const Poly& p : entries) {
            if (p.degree() > 0)
                throw ParseError("matrix entries must be single element indices", lines[i].first,
                                 1);
            row.push_back(p.coeff(0));
        }
        rows.push_back(std::move(row));
    }
    return LinearCode(h.field, h.a, std::move(rows));
}

LinearCode read_linear_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_linear(in);
}

void write_linear(std::ostream& out, const LinearCode& c) {
    out << c.field()->order() << " " << c.length() << "\n";
    for (const auto& row : c.basis()) {
        for (size_t j = 0; j < row.size(); ++j) out << (j ? "; " : "") << row[j];
        out << "\n";
    }
}

void write_linear_file(const std::string& path, const LinearCode& c) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    write_linear(out, c);
}

ConvolutionalCode read_encoder(std::istream& in) {
    auto lines = significant_lines(in);
    if (lines.empty()) throw ParseError("missing header line \"q k ell\"", 1, 1);
    Header h = parse_header(lines[0], 3);
    if (lines.size() - 1 != h.a)
        throw ParseError("expected " + std::to_string(h.a) + " encoder rows, got " +
                             std::to_string(lines.size() - 1),
                         lines.back().first, 1);
    std::vector<std::vector<Poly>> rows;
    for (size_t i = 1; i < lines.size(); ++i) rows.push_back(parse_row(h, h.b, lines[i]));
    try {
        return ConvolutionalCode(h.field, std::move(rows));
    } catch (const std::exception& e) {
        throw ParseError(e.what(), lines[0].first, 1);
    }
}

ConvolutionalCode read_encoder_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_encoder(in);
}

void write_encoder(std::ostream& out, const ConvolutionalCode& c) {
    out << c.field()->order() << " " << c.k() << " " << c.ell() << "\n";
    write_rows(out, c.encoder());
}

void write_encoder_file(const std::string& path, const ConvolutionalCode& c) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    write_encoder(out, c);
}

}  // namespace qc
