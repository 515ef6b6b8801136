#pragma once

#include <json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pmm/braid_pm.hpp"
#include "pmm/linalg.hpp"
#include "pmm/presentation.hpp"

namespace pmm {

using nlohmann::json;

/// Longest word accepted by parse_word.
inline constexpr std::size_t kWordLengthGuard = 10000;

enum class WordMode { rn, braid };

/// Parse failure; `position` is the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position, std::string token)
      : std::runtime_error(message), position_(position), token_(std::move(token)) {}
  std::size_t position() const { return position_; }
  const std::string& token() const { return token_; }

private:
  std::size_t position_;
  std::string token_;
};

struct TokenSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
};

/// A parsed word together with the source span of each letter. In rn mode
/// only `rn` is filled; in braid mode `braid` is filled and `rn` holds its projection.
struct ParsedWord {
  WordMode mode = WordMode::rn;
  RnWord rn;
  BraidWord braid;
  std::vector<TokenSpan> spans;
};

/// Grammar: whitespace-separated tokens `s<i>`, `s<i>^-1` (braid mode only),
/// `e[k1,...]` with strictly increasing cuts in 1..n-1, and `e[]`.
/// Throws ParseError; std::length_error past kWordLengthGuard letters.
ParsedWord parse_word(std::string_view text, int n, WordMode mode);
std::string to_string(const ParsedWord& w);

json to_json(const Permutation& p);
json to_json(const OrderedSetPartition& p);
json to_json(const PMElement& a);
/// Throws std::invalid_argument on malformed input.
PMElement pm_element_from_json(const json& j);

json to_json(const LayeredAut& f);
/// Conjugators are brought to canonical form before validation.
LayeredAut layered_aut_from_json(const json& j);

json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j);
json to_json(const Polynomial& p);
json to_json(const PolyMatrix& p);
/// Entries may be rationals ("p/q" strings or integers) or {"coeffs": [...]}.
PolyMatrix poly_matrix_from_json(const json& j);
json to_json(const MatrixTuple& t);
MatrixTuple matrix_tuple_from_json(const json& j);
json to_json(const Subspace& s);
json to_json(const LimitTerm& t);

/// Aligned text rendering of a matrix.
std::string to_text(const RationalMatrix& m);
std::string to_text(const PMElement& a);
std::string to_text(const LayeredAut& f);

}  // namespace pmm
