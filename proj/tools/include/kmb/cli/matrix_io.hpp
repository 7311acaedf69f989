#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kmb/expression.hpp"
#include "kmb/matrix.hpp"

namespace kmb::cli {

using Record = nlohmann::ordered_json;

/// Malformed invocation or input; maps to exit status 2.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Ring-agnostic matrix as read from the command line or a file: entries are
/// still unparsed scalar expressions.
struct RawMatrix {
    std::size_t n = 0;
    std::optional<RingTag> ring;
    std::vector<std::string> entries;  // row-major
    std::string source;
};

/// "[[a, b], [c, d]]".
RawMatrix parse_inline_matrix(std::string_view text);
/// {"n": 2, "ring": "Q", "entries": ["2", "3", "1", "2"]}.
RawMatrix parse_matrix_record(const Record& record);
/// Inline text or a JSON record, chosen by the first non-blank character.
RawMatrix parse_matrix_argument(std::string_view text);
/// A JSON record, a JSON array of records, or one inline matrix per line.
std::vector<RawMatrix> parse_matrix_file(const std::string& contents);

template <ExactRing R>
Record matrix_record(const Matrix<R>& m, RingTag tag) {
    Record r;
    r["n"] = m.size();
    r["ring"] = to_string(tag);
    Record entries = Record::array();
    for (const auto& x : m.entries()) entries.push_back(Scalar<R>::to_string(x));
    r["entries"] = std::move(entries);
    return r;
}

/// Converts entries with `parse`; a record tagged with a ring that does not
/// embed into `target` is rejected.
template <class R, class Parse>
Matrix<R> materialize(const RawMatrix& raw, RingTag target, Parse parse) {
    if (raw.ring && *raw.ring != target && *raw.ring != RingTag::rational &&
        !(*raw.ring == RingTag::function_field && target == RingTag::laurent))
        throw MathError(Errc::invalid_argument,
                        "matrix over ring " + to_string(*raw.ring) + " cannot be used as a matrix over " + to_string(target));
    std::vector<R> values;
    values.reserve(raw.entries.size());
    for (const auto& e : raw.entries) values.push_back(parse(e));
    return Matrix<R>::from_entries(raw.n, std::move(values));
}

}  // namespace kmb::cli
