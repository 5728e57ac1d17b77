#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace celebnet {

/// Category dictionary. A pattern is either a literal lowercase token or a
/// prefix ending in '*' ("happi*" matches "happiness").
struct Lexicon {
    std::string name;
    std::map<std::string, std::vector<std::string>> categories;
};

/// JSON {"name": ..., "categories": {name: [patterns]}}. Rejects empty
/// pattern lists and '*' anywhere but the final position.
Lexicon load_lexicon(const std::string& path);

bool pattern_matches(const std::string& pattern, const std::string& token);

/// Pre-indexed matcher: literal patterns by hash, prefixes grouped by first
/// character. A token matching several patterns of one category still
/// counts that category once.
class LexiconMatcher {
public:
    explicit LexiconMatcher(const Lexicon& lexicon);

    const std::vector<std::string>& category_names() const { return names_; }

    /// Indices into category_names() of every category the token matches,
    /// ascending, deduplicated.
    void match(const std::string& token, std::vector<int>& out) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::vector<int>> literals_;
    std::unordered_map<char, std::vector<std::pair<std::string, int>>> prefixes_;
};

struct SentimentLexicon {
    std::unordered_map<std::string, double> valences;
};

/// TSV `token<TAB>valence`, valence in [-4, 4].
SentimentLexicon load_sentiment_lexicon(const std::string& path);

/// Newline-delimited lowercase words.
std::unordered_set<std::string> load_dictionary(const std::string& path);

} // namespace celebnet
