#ifndef DENOTATE_UNICODE_HPP
#define DENOTATE_UNICODE_HPP

#include <cstddef>
#include <string>
#include <string_view>

namespace denotate::unicode {

/// Decodes UTF-8 into code points. Throws Error on malformed input.
std::u32string decode_utf8(std::string_view text);

std::string encode_utf8(std::u32string_view text);
std::string encode_utf8(char32_t cp);

bool is_space(char32_t cp);
bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_word_char(char32_t cp);  // letter or digit
bool is_upper(char32_t cp);
bool is_apostrophe(char32_t cp);  // U+0027 and U+2019

/// Lowercase folding over ASCII, Latin-1 and Latin Extended-A; identity
/// elsewhere. Enough for French surface forms.
char32_t fold(char32_t cp);
std::string fold(std::string_view text);

/// Number of code points in a UTF-8 string.
std::size_t length(std::string_view text);

/// Substring of a UTF-8 string by code-point offsets [start, end).
std::string substring(std::string_view text, std::size_t start, std::size_t end);

}  // namespace denotate::unicode

#endif
