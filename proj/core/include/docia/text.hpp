#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace docia::text {

// Decodes UTF-8 into Unicode scalar values. Invalid bytes are kept as
// single code points carrying the byte value, so any input decodes
// deterministically.
std::vector<char32_t> utf8_decode(std::string_view s);

std::string utf8_encode(const std::vector<char32_t>& cps);

// Lowercases ASCII, Latin-1 letters, Latin Extended-A, basic Greek and
// Cyrillic. Other code points pass through unchanged.
char32_t lower_cp(char32_t c);

// Word constituent test used by the tokenizer: ASCII alphanumerics plus
// non-ASCII code points, minus common Unicode punctuation/space blocks.
bool is_word_cp(char32_t c);

std::string trim(std::string_view s);

// Stable 64-bit FNV-1a, used for context fingerprints and scenario digests.
std::uint64_t fnv1a64(std::string_view s);
std::string fnv1a64_hex(std::string_view s);

} // namespace docia::text
