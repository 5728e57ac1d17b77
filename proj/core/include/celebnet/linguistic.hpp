#pragma once

#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "celebnet/corpus.hpp"
#include "celebnet/lexicon.hpp"
#include "celebnet/pos_tagger.hpp"
#include "celebnet/text.hpp"

namespace celebnet {

struct SentimentScores {
    double pos = 0.0;
    double neg = 0.0;
    double neu = 0.0;
    double comp = 0.0;
};

struct StyleMetrics {
    double ttr = 0.0;
    double cpw = 0.0;
    double wps = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;
    double it = 0.0;
};

struct PronounLists {
    std::unordered_set<std::string> p1;
    std::unordered_set<std::string> p2;
    std::unordered_set<std::string> p3;

    static PronounLists defaults();
};

struct LinguisticProfile {
    std::string handle;
    std::map<std::string, double> category_density;
    double in_vocab_proportion = 0.0;
    SentimentScores sentiment;
    double pos_entropy = 0.0;
    StyleMetrics style;
    double ari = 0.0;
};

struct ProfileOptions {
    // Entropy log base; <= 0 means natural log.
    double log_base = 0.0;
    // Average per-tweet sentiment instead of scoring the pooled tokens.
    bool sentiment_per_tweet_mean = false;
    PronounLists pronouns = PronounLists::defaults();
};

/// Mean over non-empty tweets of the per-tweet fraction of tokens matching
/// each category. Matching runs on cleaned, unstemmed tokens with stopwords
/// retained, since category patterns include function words. A token
/// matching several categories counts toward each.
std::map<std::string, double> category_density(const std::vector<TweetRecord>& tweets,
                                               const LexiconMatcher& lexicon);

/// Fraction of content tokens (cleaned, stopwords removed, unstemmed) found
/// in the dictionary.
double in_vocab_proportion(const std::vector<TweetRecord>& tweets,
                           const std::unordered_set<std::string>& dictionary,
                           const StopwordSet& stopwords);

/// pos/neg/neu are token fractions by valence sign (absent tokens are
/// neutral); comp = s / sqrt(s^2 + 15) for s the valence sum.
SentimentScores sentiment(const std::vector<TweetRecord>& tweets, const SentimentLexicon& lex,
                          bool per_tweet_mean = false);

/// Shannon entropy of the tag distribution over all cleaned tokens.
double pos_entropy(const std::vector<TweetRecord>& tweets, const Tagger& tagger,
                   double log_base = 0.0);

/// Type-token ratio, characters per word, words per sentence, and pronoun /
/// "it" fractions over the concatenated tweets, tokenized without stopword
/// removal or stemming. Sentences split on . ! ? and tweet boundaries.
StyleMetrics style_features(const std::vector<TweetRecord>& tweets,
                            const PronounLists& pronouns = PronounLists::defaults());

/// 4.17 * (chars/words) + 0.15 * (words/sentences) - 21.53, counting
/// alphanumeric characters; tokenization as in style_features.
double ari(const std::vector<TweetRecord>& tweets);

LinguisticProfile linguistic_profile(const Corpus& corpus, const std::string& handle,
                                     const LexiconMatcher& lexicon,
                                     const SentimentLexicon& sentiment_lex,
                                     const std::unordered_set<std::string>& dictionary,
                                     const Tagger& tagger, const StopwordSet& stopwords,
                                     const ProfileOptions& options = {});

/// Profiles for every handle that has one; handles whose timelines yield no
/// usable tokens are skipped. Output sorted by handle.
std::vector<LinguisticProfile> linguistic_profiles(
    const Corpus& corpus, const std::vector<std::string>& handles, const LexiconMatcher& lexicon,
    const SentimentLexicon& sentiment_lex, const std::unordered_set<std::string>& dictionary,
    const Tagger& tagger, const StopwordSet& stopwords, const ProfileOptions& options = {});

/// One row per celebrity, sorted by handle; columns: handle, liwc_<category>
/// (lowercased), in_vocab, sent_pos, sent_neg, sent_neu, sent_comp,
/// pos_entropy, ttr, cpw, wps, p1, p2, p3, it, ari. Six decimal places.
void write_profiles_csv(const std::string& path, const std::vector<LinguisticProfile>& profiles);

} // namespace celebnet
