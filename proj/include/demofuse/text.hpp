#pragma once

#include <string>
#include <string_view>

namespace demofuse::text {

// Uppercases ASCII and folds UTF-8 encoded Latin-1 accented letters to plain
// uppercase ASCII with a fixed table (Á→A, ñ→N, ü→U, ß→SS, æ→AE, ...).
// Bytes outside the table pass through unchanged, which keeps the fold
// idempotent on arbitrary input.
std::string fold_upper(std::string_view s);

// Trims leading/trailing whitespace and collapses interior runs of
// spaces/tabs to a single space.
std::string collapse_ws(std::string_view s);

std::string trim(std::string_view s);

// Keeps only ASCII decimal digits.
std::string digits_only(std::string_view s);

// Left-pads with '0' up to width; longer inputs are returned unchanged.
std::string zero_pad(std::string_view digits, std::size_t width);

}  // namespace demofuse::text
