#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace sbp {

// Precondition violations and malformed inputs. Verification *outcomes*
// (an axiom failing on concrete data) are reported as data, not thrown.

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_closed_error : std::runtime_error {
    // (x,b) + (x',b') left R
    std::array<int, 4> witness;
    not_closed_error(const std::string& what, std::array<int, 4> w)
        : std::runtime_error(what), witness(w) {}
};

struct not_associative_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_a_group_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_surjective_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_a_section_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_unital_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct order_too_large_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Schema or value error in an input file; `where` is a JSON-pointer-ish path.
struct schema_error : std::runtime_error {
    std::string where;
    schema_error(const std::string& what, std::string where_)
        : std::runtime_error(what + " (at " + where_ + ")"), where(std::move(where_)) {}
};

} // namespace sbp
