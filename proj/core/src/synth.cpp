#include "celebnet/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "celebnet/errors.hpp"
#include "celebnet/rng.hpp"

namespace celebnet {

namespace {

const char* const kFiller[] = {
    "stadium", "camera",  "window",  "bridge",  "garden",  "river",   "mountain",
    "coffee",  "market",  "ticket",  "studio",  "screen",  "puzzle",  "engine",
    "valley",  "museum",  "pocket",  "branch",  "castle",  "island",  "jacket",
    "kitchen", "ladder",  "meadow",  "needle",  "orange",  "pencil",  "quartz",
    "ribbon",  "saddle",  "tunnel",  "village", "wagon",   "zipper",  "anchor",
    "basket",  "candle",  "dolphin", "elbow",   "falcon",  "guitar",  "hammer",
    "violin",  "trumpet", "piano",   "drum",    "paint",   "canvas",  "harbor",
    "lantern"};

const char* const kJunk[] = {"vrxq", "zqpf", "kwxzt", "qzzv"};

const char* const kPositiveCats[] = {"posemo", "affect", "funct", "cogmech",
                                     "social", "family", "friend"};
const char* const kNegativeCats[] = {"anger", "negate", "sad", "swear"};

// Howard Hinnant's civil-from-days.
void civil_from_days(std::int64_t z, int& year, unsigned& month, unsigned& day) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const auto doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    day = doy - (153 * mp + 2) / 5 + 1;
    month = mp < 10 ? mp + 3 : mp - 9;
    year = static_cast<int>(y + (month <= 2));
}

std::string iso_timestamp(std::int64_t epoch) {
    const std::int64_t days = epoch / 86400;
    const std::int64_t rest = epoch % 86400;
    int year = 0;
    unsigned month = 0;
    unsigned day = 0;
    civil_from_days(days, year, month, day);
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%04d-%02u-%02uT%02d:%02d:%02dZ", year, month, day,
                  static_cast<int>(rest / 3600), static_cast<int>(rest / 60 % 60),
                  static_cast<int>(rest % 60));
    return buffer;
}

std::vector<std::string> words_for(const Lexicon& lexicon, const char* const* names,
                                   std::size_t count) {
    std::vector<std::string> words;
    for (std::size_t i = 0; i < count; ++i) {
        auto it = lexicon.categories.find(names[i]);
        if (it == lexicon.categories.end()) {
            continue;
        }
        for (const std::string& pattern : it->second) {
            if (pattern.back() == '*') {
                words.push_back(pattern.substr(0, pattern.size() - 1));
            } else {
                words.push_back(pattern);
            }
        }
    }
    return words;
}

SynthSpec::Effect effect_for(const SynthSpec& spec, Bucket bucket) {
    auto it = spec.planted_effects.find(bucket);
    return it == spec.planted_effects.end() ? SynthSpec::Effect{} : it->second;
}

} // namespace

SynthSpec load_synth_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open spec: " + path);
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("spec: ") + e.what());
    }
    SynthSpec spec;
    try {
        if (doc.contains("n_celebrities")) {
            spec.n_celebrities = doc["n_celebrities"].get<int>();
        }
        if (doc.contains("n_users")) {
            spec.n_users = doc["n_users"].get<int>();
        }
        if (doc.contains("seed")) {
            spec.seed = doc["seed"].get<std::uint64_t>();
        }
        if (doc.contains("planted_effects")) {
            for (const auto& [name, entry] : doc["planted_effects"].items()) {
                SynthSpec::Effect effect;
                if (entry.contains("lexicon_boost")) {
                    effect.lexicon_boost = entry["lexicon_boost"].get<double>();
                }
                if (entry.contains("engagement_boost")) {
                    effect.engagement_boost = entry["engagement_boost"].get<double>();
                }
                spec.planted_effects[bucket_from_string(name)] = effect;
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("spec: ") + e.what());
    }
    return spec;
}

SynthSpec default_synth_spec() {
    SynthSpec spec;
    spec.planted_effects[Bucket::High] = {1.8, 1.5};
    spec.planted_effects[Bucket::Mid] = {0.8, 0.6};
    spec.planted_effects[Bucket::Low] = {0.0, 0.0};
    return spec;
}

SynthResult generate(const SynthSpec& spec, const Lexicon& lexicon) {
    if (spec.n_celebrities < 9) {
        throw ValidationError("generator needs at least nine celebrities");
    }
    if (spec.n_users < 1) {
        throw ValidationError("generator needs at least one user");
    }
    for (const auto& [bucket, effect] : spec.planted_effects) {
        if (effect.lexicon_boost < 0.0 || effect.engagement_boost < 0.0) {
            throw ValidationError("boosts must be non-negative");
        }
    }

    const std::vector<std::string> positive = words_for(lexicon, kPositiveCats,
                                                        std::size(kPositiveCats));
    const std::vector<std::string> negative = words_for(lexicon, kNegativeCats,
                                                        std::size(kNegativeCats));
    if (positive.empty() || negative.empty()) {
        throw ValidationError("lexicon lacks the generator's signal categories");
    }
    double max_lexicon_boost = 0.0;
    for (const auto& [bucket, effect] : spec.planted_effects) {
        max_lexicon_boost = std::max(max_lexicon_boost, effect.lexicon_boost);
    }

    const Category categories[] = {Category::Movies, Category::Music, Category::News,
                                   Category::Tech, Category::Sports};
    const int n = spec.n_celebrities;
    const int third = n / 3;

    Rng roster_rng(derive_seed(spec.seed, 11));
    Rng text_rng(derive_seed(spec.seed, 12));
    Rng engage_rng(derive_seed(spec.seed, 13));

    SynthResult result;
    result.corpus.roster.reserve(static_cast<std::size_t>(n));
    std::vector<Bucket> intended(static_cast<std::size_t>(n));
    std::vector<double> lexicon_jitter(static_cast<std::size_t>(n));
    std::vector<double> engagement_jitter(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        CelebrityProfile profile;
        char handle[24];
        std::snprintf(handle, sizeof(handle), "celeb_%03d", i);
        profile.handle = handle;
        profile.category = categories[i % 5];
        Bucket bucket = Bucket::Low;
        if (i < third) {
            bucket = Bucket::High;
        } else if (i < 2 * third) {
            bucket = Bucket::Mid;
        }
        intended[static_cast<std::size_t>(i)] = bucket;
        switch (bucket) {
        case Bucket::High:
            profile.followers_future = 1'000'000 + static_cast<long long>(
                                                       roster_rng.below(8'000'000));
            break;
        case Bucket::Mid:
            profile.followers_future = 10'000 + static_cast<long long>(
                                                    roster_rng.below(80'000));
            break;
        case Bucket::Low:
            profile.followers_future = 100 + static_cast<long long>(roster_rng.below(800));
            break;
        }
        lexicon_jitter[static_cast<std::size_t>(i)] = 0.85 + 0.3 * roster_rng.unit();
        engagement_jitter[static_cast<std::size_t>(i)] = 0.85 + 0.3 * roster_rng.unit();
        result.corpus.roster.push_back(std::move(profile));
    }

    std::int64_t counter = 0;
    const std::int64_t base_epoch = 1483228800; // 2017-01-01T00:00:00Z
    auto next_tweet = [&](const std::string& author) {
        TweetRecord tweet;
        char id[24];
        std::snprintf(id, sizeof(id), "t%07lld", static_cast<long long>(counter));
        tweet.id = id;
        tweet.author = author;
        const std::int64_t epoch = base_epoch + counter * 37;
        tweet.timestamp = iso_timestamp(epoch);
        tweet.epoch_seconds = epoch;
        ++counter;
        return tweet;
    };

    auto pick = [](Rng& rng, const auto& words) -> std::string {
        return words[rng.below(std::size(words))];
    };

    // Celebrity timelines carry the linguistic signal.
    for (int i = 0; i < n; ++i) {
        const CelebrityProfile& profile = result.corpus.roster[static_cast<std::size_t>(i)];
        const SynthSpec::Effect effect = effect_for(spec, intended[static_cast<std::size_t>(i)]);
        const double jitter = lexicon_jitter[static_cast<std::size_t>(i)];
        const double p_positive =
            std::min(0.45, 0.16 * (1.0 + effect.lexicon_boost) * jitter);
        const double p_negative =
            std::min(0.35, 0.09 * (1.0 + (max_lexicon_boost - effect.lexicon_boost)));

        const int tweet_count = 14 + static_cast<int>(text_rng.below(6));
        for (int t = 0; t < tweet_count; ++t) {
            TweetRecord tweet = next_tweet(profile.handle);
            std::string text;
            const int length = 14 + static_cast<int>(text_rng.below(9));
            for (int w = 0; w < length; ++w) {
                const double r = text_rng.unit();
                std::string word;
                if (r < p_positive) {
                    word = pick(text_rng, positive);
                } else if (r < p_positive + p_negative) {
                    word = pick(text_rng, negative);
                } else if (r < p_positive + p_negative + 0.04) {
                    word = pick(text_rng, kJunk);
                } else {
                    word = pick(text_rng, kFiller);
                }
                if (!text.empty()) {
                    text += ' ';
                }
                text += word;
                if (text_rng.unit() < 0.12) {
                    text += '.';
                }
            }
            tweet.text = std::move(text);
            result.corpus.tweets.push_back(std::move(tweet));
        }
    }

    // Engagement events drive both co-engagement networks.
    for (int u = 0; u < spec.n_users; ++u) {
        char user[24];
        std::snprintf(user, sizeof(user), "user_%04d", u);
        for (int i = 0; i < n; ++i) {
            const CelebrityProfile& profile =
                result.corpus.roster[static_cast<std::size_t>(i)];
            const SynthSpec::Effect effect =
                effect_for(spec, intended[static_cast<std::size_t>(i)]);
            const double p_engage =
                std::min(0.9, 0.08 * (1.0 + effect.engagement_boost) *
                                  engagement_jitter[static_cast<std::size_t>(i)]);

            if (engage_rng.unit() < p_engage) {
                TweetRecord tweet = next_tweet(user);
                tweet.retweet_of = profile.handle;
                std::string text;
                const int length = 3 + static_cast<int>(engage_rng.below(4));
                for (int w = 0; w < length; ++w) {
                    if (!text.empty()) {
                        text += ' ';
                    }
                    text += pick(engage_rng, kFiller);
                }
                tweet.text = std::move(text);
                result.corpus.tweets.push_back(std::move(tweet));
            }
            if (engage_rng.unit() < p_engage) {
                TweetRecord tweet = next_tweet(user);
                tweet.mentions.push_back(profile.handle);
                std::string text;
                const int length = 3 + static_cast<int>(engage_rng.below(4));
                for (int w = 0; w < length; ++w) {
                    if (!text.empty()) {
                        text += ' ';
                    }
                    text += pick(engage_rng, kFiller);
                }
                tweet.text = std::move(text);
                result.corpus.tweets.push_back(std::move(tweet));
            }
        }
    }

    std::set<std::string> eligible;
    for (const CelebrityProfile& profile : result.corpus.roster) {
        eligible.insert(profile.handle);
    }
    result.labels = assign_buckets(result.corpus.roster, eligible);
    return result;
}

} // namespace celebnet
