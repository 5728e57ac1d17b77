#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace celebnet {

using StopwordSet = std::unordered_set<std::string>;

/// Newline-delimited lowercase tokens; lines starting with '#' are ignored.
StopwordSet load_stopwords(const std::string& path);

// Individual cleanup stages, exposed for tests. The pipeline order is fixed:
// URLs, then the U+2026 ellipsis (while its bytes still exist), then
// non-ASCII bytes, then ASCII "..." runs, then the # @ { } characters,
// then lowercasing.
std::string strip_urls(std::string_view text);
std::string strip_unicode_ellipsis(std::string_view text);
std::string strip_non_ascii(std::string_view text);
std::string strip_ascii_ellipses(std::string_view text);
std::string strip_marker_chars(std::string_view text);
std::string lowercase_ascii(std::string_view text);

/// Stages 1-5 composed: cleaned, lowercased text with ordinary punctuation
/// still in place (sentence splitting needs it).
std::string clean_text(std::string_view raw);

/// Maximal runs of ASCII alphanumerics; everything else is a boundary.
std::vector<std::string> tokenize_alnum(std::string_view text);

/// Stages 1-6: cleaned and tokenized, stopwords retained, unstemmed.
std::vector<std::string> clean_tokens(std::string_view raw);

/// Stages 1-7: as clean_tokens minus stopwords.
std::vector<std::string> content_tokens(std::string_view raw, const StopwordSet& stopwords);

/// The full pipeline, stages 1-8: content tokens, Porter-stemmed.
std::vector<std::string> preprocess_text(std::string_view raw, const StopwordSet& stopwords);

/// Splits cleaned text into sentences on runs of . ! ? ; empty segments are
/// dropped. The caller treats each tweet as its own sentence context.
std::vector<std::string> split_sentences(std::string_view cleaned);

} // namespace celebnet
