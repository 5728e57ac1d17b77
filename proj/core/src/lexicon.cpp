#include "celebnet/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "celebnet/errors.hpp"

namespace celebnet {

namespace {

bool valid_pattern(const std::string& pattern) {
    if (pattern.empty()) {
        return false;
    }
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        const char c = pattern[i];
        if (c == '*') {
            // Only as the final character, and never alone.
            return i + 1 == pattern.size() && i > 0;
        }
        const auto uc = static_cast<unsigned char>(c);
        if (!(std::islower(uc) || std::isdigit(uc))) {
            return false;
        }
    }
    return true;
}

std::string trimmed(const std::string& line) {
    std::size_t begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return {};
    }
    std::size_t end = line.find_last_not_of(" \t\r\n");
    return line.substr(begin, end - begin + 1);
}

} // namespace

Lexicon load_lexicon(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open lexicon: " + path);
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("lexicon " + path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("name") || !doc.contains("categories") ||
        !doc["name"].is_string() || !doc["categories"].is_object()) {
        throw ValidationError("lexicon " + path + ": expected {\"name\", \"categories\"}");
    }

    Lexicon lexicon;
    lexicon.name = doc["name"].get<std::string>();
    for (const auto& [category, patterns] : doc["categories"].items()) {
        if (!patterns.is_array() || patterns.empty()) {
            throw ValidationError("lexicon category '" + category +
                                  "': pattern list must be a non-empty array");
        }
        std::vector<std::string> list;
        list.reserve(patterns.size());
        for (const auto& entry : patterns) {
            if (!entry.is_string()) {
                throw ValidationError("lexicon category '" + category +
                                      "': patterns must be strings");
            }
            std::string pattern = entry.get<std::string>();
            if (!valid_pattern(pattern)) {
                throw ValidationError("lexicon category '" + category + "': bad pattern '" +
                                      pattern + "'");
            }
            list.push_back(std::move(pattern));
        }
        lexicon.categories.emplace(category, std::move(list));
    }
    return lexicon;
}

bool pattern_matches(const std::string& pattern, const std::string& token) {
    if (!pattern.empty() && pattern.back() == '*') {
        const std::size_t stem = pattern.size() - 1;
        return token.size() >= stem && token.compare(0, stem, pattern, 0, stem) == 0;
    }
    return token == pattern;
}

LexiconMatcher::LexiconMatcher(const Lexicon& lexicon) {
    names_.reserve(lexicon.categories.size());
    for (const auto& [category, patterns] : lexicon.categories) {
        const int index = static_cast<int>(names_.size());
        names_.push_back(category);
        for (const std::string& pattern : patterns) {
            if (pattern.back() == '*') {
                std::string stem = pattern.substr(0, pattern.size() - 1);
                prefixes_[stem.front()].emplace_back(std::move(stem), index);
            } else {
                literals_[pattern].push_back(index);
            }
        }
    }
}

void LexiconMatcher::match(const std::string& token, std::vector<int>& out) const {
    out.clear();
    if (token.empty()) {
        return;
    }
    if (auto it = literals_.find(token); it != literals_.end()) {
        out.insert(out.end(), it->second.begin(), it->second.end());
    }
    if (auto it = prefixes_.find(token.front()); it != prefixes_.end()) {
        for (const auto& [stem, index] : it->second) {
            if (token.size() >= stem.size() && token.compare(0, stem.size(), stem) == 0) {
                out.push_back(index);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

SentimentLexicon load_sentiment_lexicon(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open sentiment lexicon: " + path);
    }
    SentimentLexicon lexicon;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string entry = trimmed(line);
        if (entry.empty()) {
            continue;
        }
        std::size_t tab = entry.find('\t');
        if (tab == std::string::npos || tab == 0) {
            throw ValidationError("sentiment lexicon line " + std::to_string(line_no) +
                                  ": expected token<TAB>valence");
        }
        std::string token = entry.substr(0, tab);
        double valence = 0.0;
        try {
            std::size_t used = 0;
            valence = std::stod(entry.substr(tab + 1), &used);
            if (used == 0) {
                throw std::invalid_argument("empty");
            }
        } catch (const std::exception&) {
            throw ValidationError("sentiment lexicon line " + std::to_string(line_no) +
                                  ": bad valence");
        }
        if (valence < -4.0 || valence > 4.0) {
            throw ValidationError("sentiment lexicon line " + std::to_string(line_no) +
                                  ": valence out of [-4, 4]");
        }
        lexicon.valences[token] = valence;
    }
    return lexicon;
}

std::unordered_set<std::string> load_dictionary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open dictionary: " + path);
    }
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        std::string word = trimmed(line);
        if (word.empty()) {
            continue;
        }
        std::transform(word.begin(), word.end(), word.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        words.insert(std::move(word));
    }
    return words;
}

} // namespace celebnet
