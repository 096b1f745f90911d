#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qschur/algebra.hpp"
#include "qschur/relations.hpp"
#include "qschur/tensor.hpp"

namespace qschur::cli {

using json = nlohmann::json;

// Malformed or out-of-range user input (exit code 2).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// "[[a,b,c],[d,e,f],[g,h,i]]": odd square, theta-symmetric, integer entries.
// A flat list, ragged rows or trailing text are rejected. If n is given the
// size must be 2n+1.
ThetaMatrix parse_matrix(const std::string& text, std::optional<int> n = std::nullopt);
std::string format_matrix(const ThetaMatrix& a);  // same syntax, no spaces

// "1,3,2" or "[1,3,2]"
Word parse_word(const std::string& text);
std::string format_word(const Word& w);

// "lo,hi" or "[lo,hi]" with lo <= hi
WeightWindow parse_window(const std::string& text);

// ---- JSON ---------------------------------------------------------------------------

// [[exponent, coefficient], ...] in increasing exponent order
json to_json(const Laurent& p);
Laurent laurent_from_json(const json& j);

json to_json(const ThetaMatrix& a);  // list of rows
ThetaMatrix matrix_from_json(const json& j);

// {"family","n","d","terms":[{"matrix","coeff"}]}
json to_json(const Element& x);
Element element_from_json(const json& j);

// {"flavor","n","d","iota","terms":[{"word","coeff"}]}
json to_json(const TensorSpace& sp, const TensorElement& x);
TensorElement tensor_from_json(const json& j, TensorSpace* sp = nullptr);

json to_json(const Report& r);

// ---- CSV ------------------------------------------------------------------------------

std::string to_csv(const Element& x);        // matrix,coeff
std::string to_csv(const TensorElement& x);  // word,coeff
std::string to_csv(const Report& r);         // suite,check,instances,failures,first_failure

std::string csv_field(const std::string& s);

}  // namespace qschur::cli
