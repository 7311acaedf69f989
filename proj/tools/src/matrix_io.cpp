#include "kmb/cli/matrix_io.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace kmb::cli {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

class InlineReader {
   public:
    explicit InlineReader(std::string_view text) : text_(text) {}

    std::vector<std::vector<std::string>> rows() {
        expect('[');
        std::vector<std::vector<std::string>> out;
        do {
            out.push_back(row());
        } while (accept(','));
        expect(']');
        skip();
        if (pos_ != text_.size()) fail("trailing characters");
        return out;
    }

   private:
    std::vector<std::string> row() {
        expect('[');
        std::vector<std::string> entries;
        while (true) {
            const std::size_t start = pos_;
            int depth = 0;
            while (pos_ < text_.size()) {
                const char c = text_[pos_];
                if (c == '(') ++depth;
                if (c == ')') --depth;
                if (depth == 0 && (c == ',' || c == ']')) break;
                if (c == '[') fail("unexpected '['");
                ++pos_;
            }
            std::string entry = trim(text_.substr(start, pos_ - start));
            if (entry.empty()) fail("empty matrix entry");
            entries.push_back(std::move(entry));
            if (pos_ >= text_.size()) fail("unterminated row");
            if (text_[pos_++] == ']') return entries;
        }
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            skip();
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw UsageError("malformed matrix '" + std::string(text_) + "': " + what + " at position " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

RawMatrix parse_inline_matrix(std::string_view text) {
    const auto rows = InlineReader(text).rows();
    RawMatrix m;
    m.n = rows.size();
    m.source = std::string(text);
    for (const auto& r : rows) {
        if (r.size() != m.n) throw UsageError("matrix '" + m.source + "' is not square");
        m.entries.insert(m.entries.end(), r.begin(), r.end());
    }
    return m;
}

RawMatrix parse_matrix_record(const Record& record) {
    if (!record.is_object() || !record.contains("n") || !record.contains("entries"))
        throw UsageError("matrix record needs fields n and entries: " + record.dump());
    RawMatrix m;
    m.source = record.dump();
    if (!record["n"].is_number_unsigned() || record["n"].get<std::size_t>() == 0)
        throw UsageError("matrix record field n must be a positive integer: " + m.source);
    m.n = record["n"].get<std::size_t>();
    if (record.contains("ring")) {
        if (!record["ring"].is_string()) throw UsageError("matrix record field ring must be a string: " + m.source);
        m.ring = ring_tag_from_string(record["ring"].get<std::string>());
        if (!m.ring) throw UsageError("unknown ring tag in matrix record: " + m.source);
    }
    const Record& entries = record["entries"];
    if (!entries.is_array() || entries.size() != m.n * m.n)
        throw UsageError("matrix record needs n*n entries: " + m.source);
    for (const auto& e : entries) {
        if (e.is_string())
            m.entries.push_back(e.get<std::string>());
        else if (e.is_number_integer())
            m.entries.push_back(e.dump());
        else
            throw UsageError("matrix entries must be expression strings: " + m.source);
    }
    return m;
}

RawMatrix parse_matrix_argument(std::string_view text) {
    const std::string t = trim(text);
    if (!t.empty() && t.front() == '{') {
        Record r = Record::parse(t, nullptr, false);
        if (r.is_discarded()) throw UsageError("malformed JSON matrix record: " + t);
        return parse_matrix_record(r);
    }
    return parse_inline_matrix(t);
}

std::vector<RawMatrix> parse_matrix_file(const std::string& contents) {
    const std::string t = trim(contents);
    std::vector<RawMatrix> out;
    if (!t.empty() && (t.front() == '{' || (t.front() == '[' && t.find('{') != std::string::npos))) {
        Record r = Record::parse(t, nullptr, false);
        if (r.is_discarded()) throw UsageError("input file is not valid JSON");
        if (r.is_array())
            for (const auto& item : r) out.push_back(parse_matrix_record(item));
        else
            out.push_back(parse_matrix_record(r));
        return out;
    }
    std::istringstream lines(contents);
    std::string line;
    while (std::getline(lines, line)) {
        const std::string l = trim(line);
        if (l.empty() || l.front() == '#') continue;
        out.push_back(parse_inline_matrix(l));
    }
    return out;
}

}  // namespace kmb::cli
