#include "celebnet/text.hpp"

#include <cctype>
#include <fstream>

#include "celebnet/errors.hpp"
#include "celebnet/porter.hpp"

namespace celebnet {

StopwordSet load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open stopword file: " + path);
    }
    StopwordSet words;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) {
            continue;
        }
        const auto last = line.find_last_not_of(" \t\r\n");
        line = line.substr(first, last - first + 1);
        if (line.front() == '#') {
            continue;
        }
        words.insert(line);
    }
    return words;
}

namespace {

bool starts_with_at(std::string_view text, std::size_t i, std::string_view prefix) {
    return text.size() - i >= prefix.size() &&
           text.compare(i, prefix.size(), prefix) == 0;
}

bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

} // namespace

std::string strip_urls(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (starts_with_at(text, i, "http://") || starts_with_at(text, i, "https://")) {
            while (i < text.size() && !is_ascii_space(text[i])) {
                ++i;
            }
            out.push_back(' ');
            continue;
        }
        out.push_back(text[i]);
        ++i;
    }
    return out;
}

std::string strip_unicode_ellipsis(std::string_view text) {
    // U+2026 is the UTF-8 sequence E2 80 A6.
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (starts_with_at(text, i, "\xe2\x80\xa6")) {
            out.push_back(' ');
            i += 3;
            continue;
        }
        out.push_back(text[i]);
        ++i;
    }
    return out;
}

std::string strip_non_ascii(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (static_cast<unsigned char>(c) < 0x80) {
            out.push_back(c);
        }
    }
    return out;
}

std::string strip_ascii_ellipses(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '.') {
            std::size_t run = i;
            while (run < text.size() && text[run] == '.') {
                ++run;
            }
            if (run - i >= 3) {
                out.push_back(' ');
                i = run;
                continue;
            }
        }
        out.push_back(text[i]);
        ++i;
    }
    return out;
}

std::string strip_marker_chars(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '#' || c == '@' || c == '{' || c == '}') {
            continue;
        }
        out.push_back(c);
    }
    return out;
}

std::string lowercase_ascii(std::string_view text) {
    std::string out(text);
    for (char& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

std::string clean_text(std::string_view raw) {
    return lowercase_ascii(strip_marker_chars(
        strip_ascii_ellipses(strip_non_ascii(strip_unicode_ellipsis(strip_urls(raw))))));
}

std::vector<std::string> tokenize_alnum(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        const auto uc = static_cast<unsigned char>(c);
        if (std::isalnum(uc)) {
            cur.push_back(c);
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) {
        tokens.push_back(std::move(cur));
    }
    return tokens;
}

std::vector<std::string> clean_tokens(std::string_view raw) {
    return tokenize_alnum(clean_text(raw));
}

std::vector<std::string> content_tokens(std::string_view raw, const StopwordSet& stopwords) {
    std::vector<std::string> tokens = clean_tokens(raw);
    std::erase_if(tokens, [&](const std::string& t) { return stopwords.count(t) > 0; });
    return tokens;
}

std::vector<std::string> preprocess_text(std::string_view raw, const StopwordSet& stopwords) {
    std::vector<std::string> tokens = content_tokens(raw, stopwords);
    for (std::string& t : tokens) {
        t = porter_stem(t);
    }
    return tokens;
}

std::vector<std::string> split_sentences(std::string_view cleaned) {
    std::vector<std::string> sentences;
    std::string cur;
    for (char c : cleaned) {
        if (c == '.' || c == '!' || c == '?') {
            if (!cur.empty()) {
                sentences.push_back(std::move(cur));
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) {
        sentences.push_back(std::move(cur));
    }
    // Segments without any token are not sentences.
    std::erase_if(sentences, [](const std::string& s) {
        return tokenize_alnum(s).empty();
    });
    return sentences;
}

} // namespace celebnet
