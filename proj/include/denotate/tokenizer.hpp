#ifndef DENOTATE_TOKENIZER_HPP
#define DENOTATE_TOKENIZER_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "denotate/document.hpp"

namespace denotate {

struct Token {
  std::string surface;  // UTF-8
  Span span;            // code-point offsets into the document
  std::size_t sentence_index = 0;
  bool is_word = false;  // starts with a letter or digit
};

/// Splits a document into word and punctuation tokens.
///
/// Elision clitics keep their apostrophe and the following word starts a new
/// token (l'ONU -> l' + ONU). Hyphens between word characters stay inside the
/// token (États-Unis). A sentence ends at . ! ? followed by whitespace and an
/// uppercase letter, or by end of text.
std::vector<Token> tokenize(std::string_view text);

}  // namespace denotate

#endif
