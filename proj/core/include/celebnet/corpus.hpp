#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace celebnet {

enum class Category { Movies, Music, News, Tech, Sports };

constexpr int kCategoryCount = 5;

const char* to_string(Category c);
std::optional<Category> category_from_string(const std::string& name);

struct TweetRecord {
    std::string id;
    std::string author;
    std::string text;
    std::string timestamp;       // ISO-8601, as ingested
    std::int64_t epoch_seconds;  // parsed timestamp, sort key
    std::optional<std::string> retweet_of;
    std::vector<std::string> mentions;

    bool operator==(const TweetRecord&) const = default;
};

struct CelebrityProfile {
    std::string handle;
    Category category;
    std::int64_t followers_future;

    bool operator==(const CelebrityProfile&) const = default;
};

struct Corpus {
    std::vector<TweetRecord> tweets;
    std::vector<CelebrityProfile> roster;

    bool operator==(const Corpus& other) const {
        return tweets == other.tweets && roster == other.roster;
    }

    const CelebrityProfile* find(const std::string& handle) const;
    bool in_roster(const std::string& handle) const;

private:
    mutable std::unordered_map<std::string, std::size_t> index_;
};

/// Ingest counters: invalid records are dropped silently (but counted), a
/// repeated id keeps its first occurrence.
struct LoadReport {
    std::size_t invalid = 0;
    std::size_t duplicates = 0;

    std::size_t dropped() const { return invalid + duplicates; }
};

/// Parses "YYYY-MM-DD[T ]HH:MM:SS[.frac](Z|+hh[:mm]|-hh[:mm])" to seconds
/// since the Unix epoch. The zone designator is required and the calendar
/// date must exist. Returns nullopt on malformed input.
std::optional<std::int64_t> parse_iso8601(const std::string& ts);

/// Loads the line-delimited JSON tweet file and the roster CSV.
/// Tweets failing schema validation are dropped and counted; duplicate ids
/// keep the first occurrence. Roster problems (duplicate handle, unknown
/// category, malformed row) are fatal.
Corpus load_corpus(const std::string& tweets_path, const std::string& roster_path,
                   LoadReport* report = nullptr);

/// Serializes a corpus back to the ingest formats (round-trips exactly).
void write_corpus(const Corpus& corpus, const std::string& tweets_path,
                  const std::string& roster_path);

/// Tweets authored by the handle, ordered by (timestamp, id).
std::vector<TweetRecord> celebrity_tweets(const Corpus& corpus, const std::string& handle);

/// Retweets received by the category's celebrities divided by the tweets
/// they authored. Throws UndefinedError when nothing was authored.
double average_retweet_density(const Corpus& corpus, Category category);

} // namespace celebnet
