#include "celebnet/corpus.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "celebnet/csv.hpp"
#include "celebnet/errors.hpp"

namespace celebnet {

namespace {

constexpr std::array<const char*, kCategoryCount> kCategoryNames = {
    "Movies", "Music", "News", "Tech", "Sports"};

} // namespace

const char* to_string(Category c) {
    return kCategoryNames[static_cast<std::size_t>(c)];
}

std::optional<Category> category_from_string(const std::string& name) {
    for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
        if (name == kCategoryNames[i]) {
            return static_cast<Category>(i);
        }
    }
    return std::nullopt;
}

const CelebrityProfile* Corpus::find(const std::string& handle) const {
    if (index_.size() != roster.size()) {
        index_.clear();
        for (std::size_t i = 0; i < roster.size(); ++i) {
            index_.emplace(roster[i].handle, i);
        }
    }
    auto it = index_.find(handle);
    return it == index_.end() ? nullptr : &roster[it->second];
}

bool Corpus::in_roster(const std::string& handle) const {
    return find(handle) != nullptr;
}

std::optional<std::int64_t> parse_iso8601(const std::string& ts) {
    // Manual parse; no std::chrono::parse in this toolchain.
    const char* p = ts.c_str();
    auto read_digits = [&p](int count, int& out) -> bool {
        out = 0;
        for (int i = 0; i < count; ++i) {
            if (*p < '0' || *p > '9') return false;
            out = out * 10 + (*p - '0');
            ++p;
        }
        return true;
    };
    int year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
    if (!read_digits(4, year) || *p++ != '-') return std::nullopt;
    if (!read_digits(2, month) || *p++ != '-') return std::nullopt;
    if (!read_digits(2, day)) return std::nullopt;
    if (*p != 'T' && *p != ' ') return std::nullopt;
    ++p;
    if (!read_digits(2, hour) || *p++ != ':') return std::nullopt;
    if (!read_digits(2, minute) || *p++ != ':') return std::nullopt;
    if (!read_digits(2, second)) return std::nullopt;
    if (month < 1 || month > 12 || day < 1 || hour > 23 || minute > 59 || second > 60) {
        return std::nullopt;
    }
    static const int kMonthDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    const bool leap = year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
    if (day > (month == 2 && leap ? 29 : kMonthDays[month - 1])) {
        return std::nullopt;
    }
    if (*p == '.') {
        ++p;
        if (*p < '0' || *p > '9') return std::nullopt;
        while (*p >= '0' && *p <= '9') ++p;
    }
    std::int64_t offset = 0;
    if (*p == 'Z') {
        ++p;
    } else if (*p == '+' || *p == '-') {
        const int sign = *p == '+' ? 1 : -1;
        ++p;
        int oh = 0, om = 0;
        if (!read_digits(2, oh)) return std::nullopt;
        if (*p == ':') ++p;
        if (*p >= '0' && *p <= '9') {
            if (!read_digits(2, om)) return std::nullopt;
        }
        offset = sign * (oh * 3600 + om * 60);
    } else {
        return std::nullopt;  // zone designator is required
    }
    if (*p != '\0') return std::nullopt;

    // Days since epoch from civil date (Hinnant's algorithm).
    const int y = year - (month <= 2 ? 1 : 0);
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy =
        static_cast<unsigned>((153 * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1);
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    const std::int64_t days =
        static_cast<std::int64_t>(era) * 146097 + static_cast<std::int64_t>(doe) - 719468;
    return days * 86400 + hour * 3600 + minute * 60 + second - offset;
}

namespace {

// One JSONL line -> TweetRecord. Returns nullopt when the record fails
// schema validation.
std::optional<TweetRecord> parse_tweet_line(const std::string& line) {
    const nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        return std::nullopt;
    }
    TweetRecord t;
    auto get_string = [&j](const char* key) -> std::optional<std::string> {
        auto it = j.find(key);
        if (it == j.end() || !it->is_string()) return std::nullopt;
        return it->get<std::string>();
    };
    auto id = get_string("id");
    auto author = get_string("author");
    if (!id || id->empty() || !author || author->empty()) {
        return std::nullopt;
    }
    auto text_it = j.find("text");
    if (text_it == j.end() || !text_it->is_string()) {
        return std::nullopt;
    }
    auto ts = get_string("timestamp");
    if (!ts) return std::nullopt;
    auto epoch = parse_iso8601(*ts);
    if (!epoch) return std::nullopt;

    t.id = std::move(*id);
    t.author = std::move(*author);
    t.text = text_it->get<std::string>();
    t.timestamp = std::move(*ts);
    t.epoch_seconds = *epoch;

    if (auto rt = j.find("retweet_of"); rt != j.end() && !rt->is_null()) {
        if (!rt->is_string()) return std::nullopt;
        std::string origin = rt->get<std::string>();
        if (origin.empty() || origin == t.author) return std::nullopt;
        t.retweet_of = std::move(origin);
    }
    if (auto men = j.find("mentions"); men != j.end() && !men->is_null()) {
        if (!men->is_array()) return std::nullopt;
        for (const auto& m : *men) {
            if (!m.is_string() || m.get<std::string>().empty()) return std::nullopt;
            t.mentions.push_back(m.get<std::string>());
        }
    }
    return t;
}

std::vector<CelebrityProfile> load_roster(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open roster file: " + path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw ValidationError("roster file is empty: " + path);
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "handle,category,followers_future") {
        throw ValidationError("roster header must be 'handle,category,followers_future'");
    }
    std::vector<CelebrityProfile> roster;
    std::unordered_set<std::string> seen;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const std::vector<std::string> fields = parse_csv_line(line);
        if (fields.size() != 3) {
            throw ValidationError("roster line " + std::to_string(line_no) +
                                  ": expected 3 fields");
        }
        CelebrityProfile profile;
        profile.handle = fields[0];
        if (profile.handle.empty()) {
            throw ValidationError("roster line " + std::to_string(line_no) +
                                  ": empty handle");
        }
        if (!seen.insert(profile.handle).second) {
            throw ValidationError("duplicate roster handle: " + profile.handle);
        }
        const auto category = category_from_string(fields[1]);
        if (!category) {
            throw ValidationError("roster handle " + profile.handle +
                                  ": unknown category '" + fields[1] + "'");
        }
        profile.category = *category;
        try {
            std::size_t pos = 0;
            const long long followers = std::stoll(fields[2], &pos);
            if (pos != fields[2].size() || followers < 0) {
                throw std::invalid_argument("range");
            }
            profile.followers_future = followers;
        } catch (const std::exception&) {
            throw ValidationError("roster handle " + profile.handle +
                                  ": bad followers_future '" + fields[2] + "'");
        }
        roster.push_back(std::move(profile));
    }
    return roster;
}

} // namespace

Corpus load_corpus(const std::string& tweets_path, const std::string& roster_path,
                   LoadReport* report) {
    Corpus corpus;
    corpus.roster = load_roster(roster_path);

    std::ifstream in(tweets_path);
    if (!in) {
        throw IoError("cannot open tweets file: " + tweets_path);
    }
    LoadReport counts;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto tweet = parse_tweet_line(line);
        if (!tweet) {
            ++counts.invalid;
            continue;
        }
        if (!seen_ids.insert(tweet->id).second) {
            ++counts.duplicates;
            continue;
        }
        corpus.tweets.push_back(std::move(*tweet));
    }
    if (report) {
        *report = counts;
    }
    return corpus;
}

void write_corpus(const Corpus& corpus, const std::string& tweets_path,
                  const std::string& roster_path) {
    std::ofstream tf(tweets_path);
    if (!tf) {
        throw IoError("cannot write tweets file: " + tweets_path);
    }
    for (const TweetRecord& t : corpus.tweets) {
        nlohmann::json j;
        j["id"] = t.id;
        j["author"] = t.author;
        j["text"] = t.text;
        j["timestamp"] = t.timestamp;
        if (t.retweet_of) {
            j["retweet_of"] = *t.retweet_of;
        } else {
            j["retweet_of"] = nullptr;
        }
        j["mentions"] = t.mentions;
        tf << j.dump() << '\n';
    }

    std::ofstream rf(roster_path);
    if (!rf) {
        throw IoError("cannot write roster file: " + roster_path);
    }
    rf << "handle,category,followers_future\n";
    for (const CelebrityProfile& p : corpus.roster) {
        write_csv_row(rf, {p.handle, to_string(p.category),
                           std::to_string(p.followers_future)});
    }
}

std::vector<TweetRecord> celebrity_tweets(const Corpus& corpus, const std::string& handle) {
    if (!corpus.in_roster(handle)) {
        throw ValidationError("handle not in roster: " + handle);
    }
    std::vector<TweetRecord> result;
    for (const TweetRecord& t : corpus.tweets) {
        if (t.author == handle) {
            result.push_back(t);
        }
    }
    std::sort(result.begin(), result.end(), [](const TweetRecord& a, const TweetRecord& b) {
        if (a.epoch_seconds != b.epoch_seconds) return a.epoch_seconds < b.epoch_seconds;
        return a.id < b.id;
    });
    return result;
}

double average_retweet_density(const Corpus& corpus, Category category) {
    std::size_t authored = 0;
    std::size_t retweets = 0;
    for (const TweetRecord& t : corpus.tweets) {
        if (const CelebrityProfile* author = corpus.find(t.author);
            author && author->category == category) {
            ++authored;
        }
        if (t.retweet_of) {
            if (const CelebrityProfile* origin = corpus.find(*t.retweet_of);
                origin && origin->category == category) {
                ++retweets;
            }
        }
    }
    if (authored == 0) {
        throw UndefinedError(std::string("average retweet density undefined: no tweets "
                                         "authored in category ") +
                             to_string(category));
    }
    return static_cast<double>(retweets) / static_cast<double>(authored);
}

} // namespace celebnet
