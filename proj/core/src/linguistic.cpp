#include "celebnet/linguistic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <unordered_map>

#include "celebnet/csv.hpp"
#include "celebnet/errors.hpp"

namespace celebnet {

namespace {

SentimentScores score_tokens(const std::vector<std::string>& tokens, const SentimentLexicon& lex) {
    SentimentScores scores;
    double sum = 0.0;
    long long pos = 0;
    long long neg = 0;
    for (const std::string& token : tokens) {
        auto it = lex.valences.find(token);
        const double v = it == lex.valences.end() ? 0.0 : it->second;
        sum += v;
        if (v > 0.0) {
            ++pos;
        } else if (v < 0.0) {
            ++neg;
        }
    }
    const auto n = static_cast<double>(tokens.size());
    scores.pos = pos / n;
    scores.neg = neg / n;
    scores.neu = (static_cast<long long>(tokens.size()) - pos - neg) / n;
    scores.comp = sum / std::sqrt(sum * sum + 15.0);
    return scores;
}

struct TokenizedTimeline {
    std::vector<std::string> tokens;
    std::size_t sentence_count = 0;
};

TokenizedTimeline style_tokens(const std::vector<TweetRecord>& tweets) {
    TokenizedTimeline out;
    for (const TweetRecord& tweet : tweets) {
        for (const std::string& sentence : split_sentences(clean_text(tweet.text))) {
            std::vector<std::string> tokens = tokenize_alnum(sentence);
            if (tokens.empty()) {
                continue;
            }
            ++out.sentence_count;
            out.tokens.insert(out.tokens.end(), std::make_move_iterator(tokens.begin()),
                              std::make_move_iterator(tokens.end()));
        }
    }
    return out;
}

} // namespace

PronounLists PronounLists::defaults() {
    PronounLists lists;
    lists.p1 = {"i", "me", "my", "mine", "we", "us", "our", "ours"};
    lists.p2 = {"you", "your", "yours"};
    lists.p3 = {"he", "she", "him", "her", "his", "hers", "they", "them", "their", "theirs"};
    return lists;
}

std::map<std::string, double> category_density(const std::vector<TweetRecord>& tweets,
                                               const LexiconMatcher& lexicon) {
    const auto& names = lexicon.category_names();
    std::vector<double> fraction_sums(names.size(), 0.0);
    std::vector<long long> match_counts(names.size());
    std::vector<int> matched;
    long long counted_tweets = 0;

    for (const TweetRecord& tweet : tweets) {
        const std::vector<std::string> tokens = clean_tokens(tweet.text);
        if (tokens.empty()) {
            continue;
        }
        ++counted_tweets;
        std::fill(match_counts.begin(), match_counts.end(), 0);
        for (const std::string& token : tokens) {
            lexicon.match(token, matched);
            for (int index : matched) {
                ++match_counts[index];
            }
        }
        for (std::size_t i = 0; i < names.size(); ++i) {
            fraction_sums[i] +=
                static_cast<double>(match_counts[i]) / static_cast<double>(tokens.size());
        }
    }
    if (counted_tweets == 0) {
        throw UndefinedError("category density: no tweet has any token");
    }

    std::map<std::string, double> densities;
    for (std::size_t i = 0; i < names.size(); ++i) {
        densities.emplace(names[i], fraction_sums[i] / static_cast<double>(counted_tweets));
    }
    return densities;
}

double in_vocab_proportion(const std::vector<TweetRecord>& tweets,
                           const std::unordered_set<std::string>& dictionary,
                           const StopwordSet& stopwords) {
    long long total = 0;
    long long known = 0;
    for (const TweetRecord& tweet : tweets) {
        for (const std::string& token : content_tokens(tweet.text, stopwords)) {
            ++total;
            if (dictionary.count(token) > 0) {
                ++known;
            }
        }
    }
    if (total == 0) {
        throw UndefinedError("in-vocabulary proportion: no tokens");
    }
    return static_cast<double>(known) / static_cast<double>(total);
}

SentimentScores sentiment(const std::vector<TweetRecord>& tweets, const SentimentLexicon& lex,
                          bool per_tweet_mean) {
    if (per_tweet_mean) {
        SentimentScores mean;
        long long counted = 0;
        for (const TweetRecord& tweet : tweets) {
            const std::vector<std::string> tokens = clean_tokens(tweet.text);
            if (tokens.empty()) {
                continue;
            }
            ++counted;
            const SentimentScores scores = score_tokens(tokens, lex);
            mean.pos += scores.pos;
            mean.neg += scores.neg;
            mean.neu += scores.neu;
            mean.comp += scores.comp;
        }
        if (counted == 0) {
            throw UndefinedError("sentiment: no tokens");
        }
        mean.pos /= counted;
        mean.neg /= counted;
        mean.neu /= counted;
        mean.comp /= counted;
        return mean;
    }

    std::vector<std::string> pooled;
    for (const TweetRecord& tweet : tweets) {
        std::vector<std::string> tokens = clean_tokens(tweet.text);
        pooled.insert(pooled.end(), std::make_move_iterator(tokens.begin()),
                      std::make_move_iterator(tokens.end()));
    }
    if (pooled.empty()) {
        throw UndefinedError("sentiment: no tokens");
    }
    return score_tokens(pooled, lex);
}

double pos_entropy(const std::vector<TweetRecord>& tweets, const Tagger& tagger,
                   double log_base) {
    std::unordered_map<std::string, long long> counts;
    long long total = 0;
    for (const TweetRecord& tweet : tweets) {
        for (const std::string& token : clean_tokens(tweet.text)) {
            ++counts[tagger(token)];
            ++total;
        }
    }
    if (total == 0) {
        throw UndefinedError("tag entropy: no tokens");
    }
    double entropy = 0.0;
    for (const auto& [tag, count] : counts) {
        const double p = static_cast<double>(count) / static_cast<double>(total);
        entropy -= p * std::log(p);
    }
    if (log_base > 0.0) {
        entropy /= std::log(log_base);
    }
    return entropy;
}

StyleMetrics style_features(const std::vector<TweetRecord>& tweets,
                            const PronounLists& pronouns) {
    const TokenizedTimeline text = style_tokens(tweets);
    if (text.tokens.empty()) {
        throw UndefinedError("style metrics: no tokens");
    }

    std::unordered_set<std::string> types;
    std::size_t chars = 0;
    long long p1 = 0;
    long long p2 = 0;
    long long p3 = 0;
    long long it = 0;
    for (const std::string& token : text.tokens) {
        types.insert(token);
        chars += token.size();
        if (pronouns.p1.count(token) > 0) {
            ++p1;
        }
        if (pronouns.p2.count(token) > 0) {
            ++p2;
        }
        if (pronouns.p3.count(token) > 0) {
            ++p3;
        }
        if (token == "it") {
            ++it;
        }
    }

    const auto words = static_cast<double>(text.tokens.size());
    StyleMetrics metrics;
    metrics.ttr = static_cast<double>(types.size()) / words;
    metrics.cpw = static_cast<double>(chars) / words;
    metrics.wps = words / static_cast<double>(text.sentence_count);
    metrics.p1 = p1 / words;
    metrics.p2 = p2 / words;
    metrics.p3 = p3 / words;
    metrics.it = it / words;
    return metrics;
}

double ari(const std::vector<TweetRecord>& tweets) {
    const TokenizedTimeline text = style_tokens(tweets);
    if (text.tokens.empty()) {
        throw UndefinedError("readability: no tokens");
    }
    std::size_t chars = 0;
    for (const std::string& token : text.tokens) {
        chars += token.size();
    }
    const auto words = static_cast<double>(text.tokens.size());
    const auto sentences = static_cast<double>(text.sentence_count);
    return 4.17 * (static_cast<double>(chars) / words) + 0.15 * (words / sentences) - 21.53;
}

LinguisticProfile linguistic_profile(const Corpus& corpus, const std::string& handle,
                                     const LexiconMatcher& lexicon,
                                     const SentimentLexicon& sentiment_lex,
                                     const std::unordered_set<std::string>& dictionary,
                                     const Tagger& tagger, const StopwordSet& stopwords,
                                     const ProfileOptions& options) {
    const std::vector<TweetRecord> tweets = celebrity_tweets(corpus, handle);
    LinguisticProfile profile;
    profile.handle = handle;
    profile.category_density = category_density(tweets, lexicon);
    profile.in_vocab_proportion = in_vocab_proportion(tweets, dictionary, stopwords);
    profile.sentiment = sentiment(tweets, sentiment_lex, options.sentiment_per_tweet_mean);
    profile.pos_entropy = pos_entropy(tweets, tagger, options.log_base);
    profile.style = style_features(tweets, options.pronouns);
    profile.ari = ari(tweets);
    return profile;
}

std::vector<LinguisticProfile> linguistic_profiles(
    const Corpus& corpus, const std::vector<std::string>& handles, const LexiconMatcher& lexicon,
    const SentimentLexicon& sentiment_lex, const std::unordered_set<std::string>& dictionary,
    const Tagger& tagger, const StopwordSet& stopwords, const ProfileOptions& options) {
    std::vector<LinguisticProfile> profiles;
    profiles.reserve(handles.size());
    for (const std::string& handle : handles) {
        try {
            profiles.push_back(linguistic_profile(corpus, handle, lexicon, sentiment_lex,
                                                  dictionary, tagger, stopwords, options));
        } catch (const UndefinedError&) {
            // No usable tokens; the celebrity has no profile.
        }
    }
    std::sort(profiles.begin(), profiles.end(),
              [](const LinguisticProfile& a, const LinguisticProfile& b) {
                  return a.handle < b.handle;
              });
    return profiles;
}

void write_profiles_csv(const std::string& path, const std::vector<LinguisticProfile>& profiles) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }

    std::vector<std::string> header{"handle"};
    if (!profiles.empty()) {
        for (const auto& [category, density] : profiles.front().category_density) {
            std::string column = "liwc_";
            for (char c : category) {
                column.push_back(
                    static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            }
            header.push_back(std::move(column));
        }
    }
    const char* tail[] = {"in_vocab", "sent_pos", "sent_neg", "sent_neu", "sent_comp",
                          "pos_entropy", "ttr", "cpw", "wps", "p1", "p2", "p3", "it", "ari"};
    header.insert(header.end(), std::begin(tail), std::end(tail));
    write_csv_row(out, header);

    auto sorted = profiles;
    std::sort(sorted.begin(), sorted.end(),
              [](const LinguisticProfile& a, const LinguisticProfile& b) {
                  return a.handle < b.handle;
              });
    for (const LinguisticProfile& profile : sorted) {
        std::vector<std::string> row{profile.handle};
        for (const auto& [category, density] : profile.category_density) {
            row.push_back(format_double(density, "%.6f"));
        }
        for (double value :
             {profile.in_vocab_proportion, profile.sentiment.pos, profile.sentiment.neg,
              profile.sentiment.neu, profile.sentiment.comp, profile.pos_entropy,
              profile.style.ttr, profile.style.cpw, profile.style.wps, profile.style.p1,
              profile.style.p2, profile.style.p3, profile.style.it, profile.ari}) {
            row.push_back(format_double(value, "%.6f"));
        }
        write_csv_row(out, row);
    }
}

} // namespace celebnet
